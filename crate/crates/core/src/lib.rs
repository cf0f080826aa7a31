//! Statistical part-of-speech tagging from `word/TAG` corpora.
//!
//! A [`CountsModel`] is trained by counting a tagged corpus. It answers
//! the usual ratio estimates (tag given word, word given tag, bigram and
//! trigram tag transitions) and drives four decoders:
//!
//! | method    | context used                          |
//! |-----------|---------------------------------------|
//! | `unigram` | the word alone                        |
//! | `bigram`  | previous tag                          |
//! | `trigram` | previous two tags                     |
//! | `hmm`     | previous and next tag at every word   |
//!
//! ```
//! use ngram_pos::{load_corpus, CountsModel, Method, Sentence, SmoothingConfig, Tagger, TaggerConfig, Tagset};
//!
//! let tagset = Tagset::default();
//! let corpus = load_corpus("रंगून/NNP ला/PSP\nश्याम/NNP रंगून/RB गेला/VM ./SYM".as_bytes(), &tagset, true)?;
//! let model = CountsModel::build(&corpus.sentences, &tagset)?;
//!
//! let tagger = Tagger::new(&model, TaggerConfig::new(Method::Hmm, SmoothingConfig::default()))?;
//! let tagged = tagger.tag(&Sentence::new(["श्याम", "रंगून", "गेला", "."]).unwrap())?;
//! assert_eq!(tagged.to_string(), "श्याम/NNP रंगून/RB गेला/VM ./SYM");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod corpus;
pub mod error;
pub mod evaluation;
pub mod model;
pub mod model_io;
pub mod tagger;
pub mod tagset;

pub use corpus::{
    load_corpus, parse_tagged_line, tokenize_raw_line, write_corpus, LoadedCorpus, Sentence,
    TaggedSentence, TaggedToken,
};
pub use error::{CorpusError, DecodeError, EvalError, ModelError};
pub use evaluation::{evaluate, format_report, EvaluationReport, ReportStyle, TagMetrics};
pub use model::{build_counts, CountsModel, SmoothingConfig, UnknownPolicy};
pub use model_io::{load_model, save_model};
pub use tagger::{
    brute_force_decode, score_sequence, tag_bigram, tag_hmm, tag_trigram, tag_unigram,
    DecodeTrace, Method, Tagger, TaggerConfig,
};
pub use tagset::{Tag, Tagset};
