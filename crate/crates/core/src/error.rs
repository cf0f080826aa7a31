use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("empty line")]
    EmptyLine,
    #[error("malformed token {index} ({token:?}) in line {line:?}")]
    MalformedToken {
        line: String,
        index: usize,
        token: String,
    },
    #[error("unknown tag {tag:?} at token {index} in line {line:?}")]
    UnknownTag {
        line: String,
        index: usize,
        tag: String,
    },
    #[error("line {line_number}: {source}")]
    AtLine {
        line_number: usize,
        #[source]
        source: Box<CorpusError>,
    },
    #[error("invalid tag label {0:?}")]
    InvalidTagLabel(String),
    #[error("duplicate tag {0:?} in tagset")]
    DuplicateTag(String),
    #[error("tagset is empty")]
    EmptyTagset,
    #[error("I/O failure: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
    #[error("word {0:?} is not in the vocabulary")]
    UnknownWord(String),
    #[error("word {0:?} collides with a reserved sentinel marker")]
    ReservedWord(String),
    #[error("invalid smoothing configuration: {0}")]
    InvalidSmoothing(String),
    #[error("unsupported model format {found:?}, expected version 1")]
    FormatVersionMismatch { found: String },
    #[error("corrupt section [{section}]: {reason}")]
    CorruptSection { section: String, reason: String },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("I/O failure: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("cannot tag an empty sentence")]
    EmptySentence,
    #[error("sentence has {words} words but {tags} tags were given")]
    LengthMismatch { words: usize, tags: usize },
    #[error("instance too large for enumeration: {words} words over {tags} tags")]
    InstanceTooLarge { words: usize, tags: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("gold has {gold} sentences but predictions have {predicted}")]
    SentenceCountMismatch { gold: usize, predicted: usize },
    #[error("sentence {index} differs in length between gold and predictions")]
    LengthMismatch { index: usize },
    #[error("word mismatch in sentence {index} at position {position}")]
    WordMismatch { index: usize, position: usize },
    #[error("malformed report line {line}: {reason}")]
    MalformedReport { line: usize, reason: String },
}
