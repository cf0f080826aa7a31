//! Sequence decoders for the four tagging methods.
//!
//! Every method defines a log-space objective over whole tag sequences
//! (see [`Tagger::score`]) and the decoders return its exact maximizer:
//!
//! * **unigram**: `Σ ln P(t_i | w_i)`, each position independent;
//! * **bigram**: `Σ ln P(w_i | t_i) + ln P(t_i | t_{i-1})`, with `t_0 = START`
//!   and a closing `ln P(END | t_n)`;
//! * **trigram**: `Σ ln P(w_i | t_i) + ln P(t_i | t_{i-2}, t_{i-1})`, padded with
//!   two STARTs and closed by `ln P(END | t_{n-1}, t_n)`;
//! * **hmm**: `Σ ln P(t_i | t_{i-1}) + ln P(t_{i+1} | t_i) + ln P(w_i | t_i)`,
//!   i.e. the bigram objective with every interior transition counted twice.
//!
//! Among sequences whose scores tie (within [`tie_tolerance`]) the one
//! whose tag labels are lexicographically smallest, read left to right,
//! is returned. The dynamic programs compute best-suffix scores backwards
//! and then pick tags left to right, which yields exactly that sequence.

mod brute;
mod viterbi;

use std::fmt;
use std::str::FromStr;

use crate::corpus::{Sentence, TaggedSentence, TaggedToken};
use crate::error::{DecodeError, ModelError};
use crate::model::{CountsModel, SmoothingConfig};
use crate::tagset::Tag;

pub use brute::{MAX_BRUTE_FORCE_TAGS, MAX_BRUTE_FORCE_WORDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Unigram,
    Bigram,
    Trigram,
    Hmm,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Unigram, Method::Bigram, Method::Trigram, Method::Hmm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Unigram => "unigram",
            Method::Bigram => "bigram",
            Method::Trigram => "trigram",
            Method::Hmm => "hmm",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "unigram" => Ok(Method::Unigram),
            "bigram" => Ok(Method::Bigram),
            "trigram" => Ok(Method::Trigram),
            "hmm" => Ok(Method::Hmm),
            other => Err(format!(
                "unknown method {other:?} (expected unigram, bigram, trigram or hmm)"
            )),
        }
    }
}

/// Method plus smoothing. Ties are always broken by tag label order.
#[derive(Clone, Debug, PartialEq)]
pub struct TaggerConfig {
    pub method: Method,
    pub smoothing: SmoothingConfig,
}

impl TaggerConfig {
    pub fn new(method: Method, smoothing: SmoothingConfig) -> Self {
        TaggerConfig { method, smoothing }
    }
}

/// Per-position candidate scores from a decode.
///
/// `candidates[i]` lists, for every tag, the best total score over all
/// sequences that put that tag at position `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecodeTrace {
    pub tags: Vec<Tag>,
    pub candidates: Vec<Vec<(Tag, f64)>>,
    pub path_score: f64,
}

/// Two scores closer than this are treated as a tie.
pub fn tie_tolerance(best: f64) -> f64 {
    if best.is_finite() {
        1e-10 * (1.0 + best.abs())
    } else {
        0.0
    }
}

pub(crate) fn is_tied_with(value: f64, best: f64) -> bool {
    value >= best - tie_tolerance(best)
}

/// A model bound to a configuration with its log-probability tables
/// precomputed.
pub struct Tagger<'m> {
    model: &'m CountsModel,
    config: TaggerConfig,
    /// Real tag ids in label order.
    lex: Vec<usize>,
    /// `ln P(b | a)` over all tag ids including sentinels, row-major.
    bigram: Vec<f64>,
    /// `ln P(c | a, b)` over all tag ids; only filled for the trigram method.
    trigram: Vec<f64>,
}

impl<'m> Tagger<'m> {
    pub fn new(model: &'m CountsModel, config: TaggerConfig) -> Result<Self, ModelError> {
        config.smoothing.validate(model.tagset())?;
        let n = model.tagset().len();
        let k = n + 2;
        let mut lex: Vec<usize> = (0..n).collect();
        lex.sort_by(|&a, &b| model.tagset().tag(a).cmp(model.tagset().tag(b)));

        let alpha = config.smoothing.alpha;
        let mut bigram = vec![0.0; k * k];
        for a in 0..k {
            for b in 0..k {
                bigram[a * k + b] = model.bigram_id(a, b, alpha).ln();
            }
        }
        let trigram = if config.method == Method::Trigram {
            let mut t = vec![0.0; k * k * k];
            for a in 0..k {
                for b in 0..k {
                    for c in 0..k {
                        t[(a * k + b) * k + c] = model.trigram_id(a, b, c, &config.smoothing).ln();
                    }
                }
            }
            t
        } else {
            Vec::new()
        };
        Ok(Tagger {
            model,
            config,
            lex,
            bigram,
            trigram,
        })
    }

    pub fn model(&self) -> &CountsModel {
        self.model
    }

    pub fn config(&self) -> &TaggerConfig {
        &self.config
    }

    pub(crate) fn n_tags(&self) -> usize {
        self.model.tagset().len()
    }

    pub(crate) fn start(&self) -> usize {
        self.n_tags()
    }

    pub(crate) fn end(&self) -> usize {
        self.n_tags() + 1
    }

    pub(crate) fn lex_order(&self) -> &[usize] {
        &self.lex
    }

    pub(crate) fn ln_bigram(&self, a: usize, b: usize) -> f64 {
        self.bigram[a * (self.n_tags() + 2) + b]
    }

    pub(crate) fn ln_trigram(&self, a: usize, b: usize, c: usize) -> f64 {
        let k = self.n_tags() + 2;
        self.trigram[(a * k + b) * k + c]
    }

    /// Per-position log-scores each tag contributes on its own: emissions
    /// for the sequence methods, `ln P(t | w)` for unigram.
    pub(crate) fn local_scores(&self, words: &[String]) -> Vec<Vec<f64>> {
        let s = &self.config.smoothing;
        words
            .iter()
            .map(|w| {
                (0..self.n_tags())
                    .map(|t| match self.config.method {
                        Method::Unigram => self.model.tag_given_word_id(w, t, s).ln(),
                        _ => self.model.emission_id(w, t, s).ln(),
                    })
                    .collect()
            })
            .collect()
    }

    /// The objective the configured method maximizes, over tag ids.
    pub(crate) fn score_ids(&self, local: &[Vec<f64>], tags: &[usize]) -> f64 {
        let n = tags.len();
        let emissions: f64 = tags.iter().enumerate().map(|(i, &t)| local[i][t]).sum();
        let (start, end) = (self.start(), self.end());
        match self.config.method {
            Method::Unigram => emissions,
            Method::Bigram => {
                let mut s = emissions + self.ln_bigram(start, tags[0]);
                for w in tags.windows(2) {
                    s += self.ln_bigram(w[0], w[1]);
                }
                s + self.ln_bigram(tags[n - 1], end)
            }
            Method::Trigram => {
                let mut padded = Vec::with_capacity(n + 3);
                padded.extend([start, start]);
                padded.extend_from_slice(tags);
                padded.push(end);
                emissions
                    + padded
                        .windows(3)
                        .map(|w| self.ln_trigram(w[0], w[1], w[2]))
                        .sum::<f64>()
            }
            Method::Hmm => {
                // Literal per-position sum: previous, next and emission.
                (0..n)
                    .map(|i| {
                        let prev = if i == 0 { start } else { tags[i - 1] };
                        let next = if i + 1 == n { end } else { tags[i + 1] };
                        self.ln_bigram(prev, tags[i]) + self.ln_bigram(tags[i], next) + local[i][tags[i]]
                    })
                    .sum()
            }
        }
    }

    fn resolve_tags(&self, tags: &[Tag]) -> Result<Vec<usize>, ModelError> {
        tags.iter()
            .map(|t| {
                self.model
                    .tagset()
                    .index_of(t.as_str())
                    .ok_or_else(|| ModelError::UnknownTag(t.to_string()))
            })
            .collect()
    }

    fn assemble(&self, sentence: &Sentence, ids: &[usize]) -> TaggedSentence {
        let tokens = sentence
            .words()
            .iter()
            .zip(ids)
            .map(|(w, &t)| TaggedToken::new(w.clone(), self.model.tagset().tag(t).clone()))
            .collect();
        TaggedSentence::new(tokens).expect("sentence words are valid and non-empty")
    }

    fn decode_ids(&self, words: &[String]) -> Result<Vec<usize>, DecodeError> {
        if words.is_empty() {
            return Err(DecodeError::EmptySentence);
        }
        let local = self.local_scores(words);
        Ok(match self.config.method {
            Method::Unigram => viterbi::unigram(self, &local),
            Method::Bigram => viterbi::first_order(self, &local, 1.0, false).path,
            Method::Hmm => viterbi::first_order(self, &local, 2.0, false).path,
            Method::Trigram => viterbi::second_order(self, &local, false).path,
        })
    }

    /// Tags `sentence` with the configured method.
    pub fn tag(&self, sentence: &Sentence) -> Result<TaggedSentence, DecodeError> {
        let ids = self.decode_ids(sentence.words())?;
        Ok(self.assemble(sentence, &ids))
    }

    /// Tags every sentence, preserving order.
    pub fn tag_all(&self, sentences: &[Sentence]) -> Result<Vec<TaggedSentence>, DecodeError> {
        sentences.iter().map(|s| self.tag(s)).collect()
    }

    /// Decodes and also reports per-position max-marginal scores.
    pub fn trace(&self, sentence: &Sentence) -> Result<(TaggedSentence, DecodeTrace), DecodeError> {
        let words = sentence.words();
        if words.is_empty() {
            return Err(DecodeError::EmptySentence);
        }
        let local = self.local_scores(words);
        let result = match self.config.method {
            Method::Unigram => viterbi::unigram_traced(self, &local),
            Method::Bigram => viterbi::first_order(self, &local, 1.0, true),
            Method::Hmm => viterbi::first_order(self, &local, 2.0, true),
            Method::Trigram => viterbi::second_order(self, &local, true),
        };
        let tagset = self.model.tagset();
        let candidates = result
            .max_marginals
            .iter()
            .map(|row| {
                self.lex
                    .iter()
                    .map(|&t| (tagset.tag(t).clone(), row[t]))
                    .collect()
            })
            .collect();
        let path_score = self.score_ids(&local, &result.path);
        let tagged = self.assemble(sentence, &result.path);
        let trace = DecodeTrace {
            tags: tagged.tags().cloned().collect(),
            candidates,
            path_score,
        };
        Ok((tagged, trace))
    }

    /// Natural-log score of `tags` under the configured method.
    pub fn score(&self, sentence: &Sentence, tags: &[Tag]) -> Result<f64, DecodeError> {
        if tags.len() != sentence.len() {
            return Err(DecodeError::LengthMismatch {
                words: sentence.len(),
                tags: tags.len(),
            });
        }
        if tags.is_empty() {
            return Err(DecodeError::EmptySentence);
        }
        let ids = self.resolve_tags(tags)?;
        let local = self.local_scores(sentence.words());
        Ok(self.score_ids(&local, &ids))
    }

    /// Exhaustive search over every tag sequence; a test oracle for the
    /// dynamic programs. Limited to short sentences and small tagsets.
    pub fn brute_force(&self, sentence: &Sentence) -> Result<TaggedSentence, DecodeError> {
        let ids = brute::decode(self, sentence.words())?;
        Ok(self.assemble(sentence, &ids))
    }
}

fn with_tagger<T>(
    model: &CountsModel,
    config: &TaggerConfig,
    method: Method,
    f: impl FnOnce(&Tagger) -> Result<T, DecodeError>,
) -> Result<T, DecodeError> {
    let cfg = TaggerConfig::new(method, config.smoothing.clone());
    let tagger = Tagger::new(model, cfg)?;
    f(&tagger)
}

/// Most frequent tag per word, context ignored.
pub fn tag_unigram(
    sentence: &Sentence,
    model: &CountsModel,
    config: &TaggerConfig,
) -> Result<TaggedSentence, DecodeError> {
    with_tagger(model, config, Method::Unigram, |t| t.tag(sentence))
}

/// First-order Viterbi over emission and bigram transition scores.
pub fn tag_bigram(
    sentence: &Sentence,
    model: &CountsModel,
    config: &TaggerConfig,
) -> Result<TaggedSentence, DecodeError> {
    with_tagger(model, config, Method::Bigram, |t| t.tag(sentence))
}

/// Second-order Viterbi with states over ordered tag pairs.
pub fn tag_trigram(
    sentence: &Sentence,
    model: &CountsModel,
    config: &TaggerConfig,
) -> Result<TaggedSentence, DecodeError> {
    with_tagger(model, config, Method::Trigram, |t| t.tag(sentence))
}

/// Previous-tag and next-tag context for every position.
pub fn tag_hmm(
    sentence: &Sentence,
    model: &CountsModel,
    config: &TaggerConfig,
) -> Result<TaggedSentence, DecodeError> {
    with_tagger(model, config, Method::Hmm, |t| t.tag(sentence))
}

pub fn score_sequence(
    sentence: &Sentence,
    tags: &[Tag],
    model: &CountsModel,
    config: &TaggerConfig,
) -> Result<f64, DecodeError> {
    with_tagger(model, config, config.method, |t| t.score(sentence, tags))
}

pub fn brute_force_decode(
    sentence: &Sentence,
    model: &CountsModel,
    config: &TaggerConfig,
) -> Result<TaggedSentence, DecodeError> {
    with_tagger(model, config, config.method, |t| t.brute_force(sentence))
}
