//! Reading and writing `word/TAG` corpora and raw pre-tokenized text.
//!
//! A tagged corpus holds one sentence per line. Tokens are separated by
//! whitespace and each token is split at its *last* `/`, so words may
//! themselves contain slashes (`x/y/NN` is the word `x/y` tagged `NN`).
//! Words are treated as opaque Unicode strings and are never normalized.

use std::fmt;
use std::io::BufRead;

use crate::error::CorpusError;
use crate::tagset::{Tag, Tagset};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaggedToken {
    pub word: String,
    pub tag: Tag,
}

impl TaggedToken {
    pub fn new(word: impl Into<String>, tag: Tag) -> Self {
        TaggedToken {
            word: word.into(),
            tag,
        }
    }
}

impl fmt::Display for TaggedToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.word, self.tag)
    }
}

/// A non-empty sequence of tagged tokens.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaggedSentence {
    tokens: Vec<TaggedToken>,
}

impl TaggedSentence {
    /// Returns `None` for an empty token list or a word that is empty or
    /// contains whitespace.
    pub fn new(tokens: Vec<TaggedToken>) -> Option<Self> {
        if tokens.is_empty() || tokens.iter().any(|t| !is_valid_word(&t.word)) {
            return None;
        }
        Some(TaggedSentence { tokens })
    }

    /// Convenience constructor from `(word, label)` pairs, checked against
    /// `tagset`.
    pub fn from_pairs<W, L>(pairs: &[(W, L)], tagset: &Tagset) -> Result<Self, CorpusError>
    where
        W: AsRef<str>,
        L: AsRef<str>,
    {
        let line = pairs
            .iter()
            .map(|(w, l)| format!("{}/{}", w.as_ref(), l.as_ref()))
            .collect::<Vec<_>>()
            .join(" ");
        parse_tagged_line(&line, tagset)
    }

    pub fn tokens(&self) -> &[TaggedToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|t| t.word.as_str())
    }

    pub fn tags(&self) -> impl Iterator<Item = &Tag> {
        self.tokens.iter().map(|t| &t.tag)
    }

    /// Drops the tags, keeping the words.
    pub fn to_sentence(&self) -> Sentence {
        Sentence {
            words: self.tokens.iter().map(|t| t.word.clone()).collect(),
        }
    }

    /// The line-format serialization, inverse of [`parse_tagged_line`].
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TaggedSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tok) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{tok}")?;
        }
        Ok(())
    }
}

/// A non-empty sequence of untagged words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sentence {
    words: Vec<String>,
}

impl Sentence {
    pub fn new<I, S>(words: I) -> Option<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let words: Vec<String> = words.into_iter().map(Into::into).collect();
        if words.is_empty() || words.iter().any(|w| !is_valid_word(w)) {
            return None;
        }
        Some(Sentence { words })
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn is_valid_word(word: &str) -> bool {
    !word.is_empty() && !word.chars().any(char::is_whitespace)
}

/// Parses one `word/TAG word/TAG ...` line.
pub fn parse_tagged_line(line: &str, tagset: &Tagset) -> Result<TaggedSentence, CorpusError> {
    let mut tokens = Vec::new();
    for (index, raw) in line.split_whitespace().enumerate() {
        let malformed = || CorpusError::MalformedToken {
            line: line.to_string(),
            index,
            token: raw.to_string(),
        };
        let (word, label) = raw.rsplit_once('/').ok_or_else(malformed)?;
        if word.is_empty() || label.is_empty() {
            return Err(malformed());
        }
        let tag = tagset
            .get(label)
            .cloned()
            .ok_or_else(|| CorpusError::UnknownTag {
                line: line.to_string(),
                index,
                tag: label.to_string(),
            })?;
        tokens.push(TaggedToken::new(word, tag));
    }
    if tokens.is_empty() {
        return Err(CorpusError::EmptyLine);
    }
    Ok(TaggedSentence { tokens })
}

/// Splits a raw pre-tokenized line on whitespace runs.
pub fn tokenize_raw_line(line: &str) -> Result<Sentence, CorpusError> {
    let words: Vec<String> = line.split_whitespace().map(str::to_string).collect();
    if words.is_empty() {
        return Err(CorpusError::EmptyLine);
    }
    Ok(Sentence { words })
}

/// Sentences read from a corpus stream, plus the lines skipped in lenient
/// mode.
#[derive(Clone, Debug, Default)]
pub struct LoadedCorpus {
    pub sentences: Vec<TaggedSentence>,
    /// `(line number, error message)` for every rejected line, 1-based.
    pub skipped: Vec<(usize, String)>,
}

impl LoadedCorpus {
    pub fn skip_count(&self) -> usize {
        self.skipped.len()
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(TaggedSentence::len).sum()
    }
}

/// Reads a tagged corpus, one sentence per line; blank lines are ignored.
///
/// In strict mode the first bad line aborts with its 1-based line number.
/// Otherwise bad lines are skipped and recorded.
pub fn load_corpus<R: BufRead>(
    source: R,
    tagset: &Tagset,
    strict: bool,
) -> Result<LoadedCorpus, CorpusError> {
    let mut out = LoadedCorpus::default();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() {
            continue;
        }
        match parse_tagged_line(line, tagset) {
            Ok(s) => out.sentences.push(s),
            Err(e) if strict => {
                return Err(CorpusError::AtLine {
                    line_number: i + 1,
                    source: Box::new(e),
                })
            }
            Err(e) => out.skipped.push((i + 1, e.to_string())),
        }
    }
    Ok(out)
}

/// Writes sentences in the line format, one per line.
pub fn write_corpus<W: std::io::Write>(
    mut sink: W,
    sentences: &[TaggedSentence],
) -> std::io::Result<()> {
    for s in sentences {
        writeln!(sink, "{s}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_tagset() -> Tagset {
        Tagset::default()
    }

    fn pairs(s: &TaggedSentence) -> Vec<(String, String)> {
        s.tokens()
            .iter()
            .map(|t| (t.word.clone(), t.tag.to_string()))
            .collect()
    }

    #[test]
    fn parses_devanagari_line() {
        let s = parse_tagged_line("एक/QC हंडी/NN", &toy_tagset()).unwrap();
        assert_eq!(
            pairs(&s),
            vec![
                ("एक".to_string(), "QC".to_string()),
                ("हंडी".to_string(), "NN".to_string())
            ]
        );
    }

    #[test]
    fn single_token_and_last_slash_split() {
        let ts = toy_tagset();
        let s = parse_tagged_line("a/NN", &ts).unwrap();
        assert_eq!(pairs(&s), vec![("a".into(), "NN".into())]);
        let s = parse_tagged_line("x/y/NN", &ts).unwrap();
        assert_eq!(pairs(&s), vec![("x/y".into(), "NN".into())]);
    }

    #[test]
    fn malformed_token_reports_index() {
        let err = parse_tagged_line("a/NN b", &toy_tagset()).unwrap_err();
        match err {
            CorpusError::MalformedToken { index, line, .. } => {
                assert_eq!(index, 1);
                assert_eq!(line, "a/NN b");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_tagged_line("/NN", &toy_tagset()),
            Err(CorpusError::MalformedToken { index: 0, .. })
        ));
        assert!(matches!(
            parse_tagged_line("a/", &toy_tagset()),
            Err(CorpusError::MalformedToken { index: 0, .. })
        ));
    }

    #[test]
    fn unknown_tag_and_empty_line() {
        assert!(matches!(
            parse_tagged_line("a/NN b/XYZ", &toy_tagset()),
            Err(CorpusError::UnknownTag { index: 1, .. })
        ));
        assert!(matches!(
            parse_tagged_line("   ", &toy_tagset()),
            Err(CorpusError::EmptyLine)
        ));
    }

    #[test]
    fn load_two_lines() {
        let c = load_corpus("a/NN b/VM\nc/JJ".as_bytes(), &toy_tagset(), true).unwrap();
        assert_eq!(c.sentences.len(), 2);
        assert_eq!(c.token_count(), 3);
        assert_eq!(c.skip_count(), 0);
    }

    #[test]
    fn load_lenient_skips_and_strict_aborts() {
        let text = "a/NN b/VM\r\n\nbroken\nc/JJ\n";
        let c = load_corpus(text.as_bytes(), &toy_tagset(), false).unwrap();
        assert_eq!(c.sentences.len(), 2);
        assert_eq!(c.skip_count(), 1);
        assert_eq!(c.skipped[0].0, 3);

        let one_bad = load_corpus("a/NN\nbad".as_bytes(), &toy_tagset(), false).unwrap();
        assert_eq!((one_bad.sentences.len(), one_bad.skip_count()), (1, 1));

        match load_corpus(text.as_bytes(), &toy_tagset(), true) {
            Err(CorpusError::AtLine { line_number, .. }) => assert_eq!(line_number, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_stream() {
        let c = load_corpus("".as_bytes(), &toy_tagset(), true).unwrap();
        assert!(c.sentences.is_empty());
        assert_eq!(c.skip_count(), 0);
    }

    #[test]
    fn crlf_words_are_not_polluted() {
        let c = load_corpus("a/NN\r\nb/VM\r\n".as_bytes(), &toy_tagset(), true).unwrap();
        assert_eq!(c.sentences[1].tokens()[0].tag.as_str(), "VM");
    }

    #[test]
    fn tokenize_raw() {
        let s = tokenize_raw_line("श्याम रंगून गेला .").unwrap();
        assert_eq!(s.words(), ["श्याम", "रंगून", "गेला", "."]);
        assert_eq!(tokenize_raw_line("a  b").unwrap().words(), ["a", "b"]);
        assert!(matches!(tokenize_raw_line(""), Err(CorpusError::EmptyLine)));
    }

    #[test]
    fn serialize_is_inverse_of_parse() {
        let ts = toy_tagset();
        let line = "रंगून/NNP ला/PSP a/b/SYM ./SYM";
        let s = parse_tagged_line(line, &ts).unwrap();
        assert_eq!(s.serialize(), line);
        assert_eq!(parse_tagged_line(&s.serialize(), &ts).unwrap(), s);
    }

    #[test]
    fn constructors_reject_bad_words() {
        assert!(Sentence::new(Vec::<String>::new()).is_none());
        assert!(Sentence::new(["a b"]).is_none());
        assert!(TaggedSentence::new(vec![]).is_none());
    }
}
