//! Tag labels and the tagset registry.

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;

use crate::error::CorpusError;

/// Label used for the sentence-start sentinel in diagnostics and queries.
pub const START_LABEL: &str = "START";
/// Label used for the sentence-end sentinel in diagnostics and queries.
pub const END_LABEL: &str = "END";
/// Serialized form of the start sentinel in model files.
pub const START_MARKER: &str = "<S>";
/// Serialized form of the end sentinel in model files.
pub const END_MARKER: &str = "</S>";

/// Labels that may never be registered as ordinary tags.
const RESERVED: [&str; 4] = [START_LABEL, END_LABEL, START_MARKER, END_MARKER];

/// The 23-tag Marathi tagset (IIIT-Hyderabad derived).
const DEFAULT_TAGS: [(&str, &str); 23] = [
    ("NN", "Common Nouns"),
    ("NST", "Noun Denoting Spatial and Temporal Expressions"),
    ("NNP", "Proper Nouns (name of person)"),
    ("PRP", "Pronoun"),
    ("DEM", "Demonstrative"),
    ("VM", "Verb Main (Finite or Non-Finite)"),
    ("VAUX", "Verb Auxiliary"),
    ("JJ", "Adjective (Modifier of Noun)"),
    ("RB", "Adverb (Modifier of Verb)"),
    ("PSP", "Postposition"),
    ("RP", "Particles"),
    ("QF", "Quantifiers"),
    ("QC", "Cardinals"),
    ("CC", "Conjuncts (Coordinating and Subordinating)"),
    ("WQ", "Question Words"),
    ("QO", "Ordinals"),
    ("INTF", "Intensifier"),
    ("INJ", "Interjection"),
    ("NEG", "Negative"),
    ("SYM", "Symbol"),
    ("XC", "Compounds"),
    ("RDP", "Reduplications"),
    ("UNK", "Foreign Words"),
];

/// A part-of-speech label such as `NN` or `VAUX`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tag(String);

impl Tag {
    /// Validates the label shape. Membership in a tagset is checked separately.
    pub fn new(label: impl Into<String>) -> Result<Self, CorpusError> {
        let label = label.into();
        if !is_valid_label(&label) {
            return Err(CorpusError::InvalidTagLabel(label));
        }
        Ok(Tag(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Tag {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label.contains('/')
        && !label.chars().any(char::is_whitespace)
        && !RESERVED.contains(&label)
}

/// An ordered, duplicate-free set of tags with optional descriptions.
///
/// Tags keep their registration order; `index_of` maps a label to that
/// position. The sentinels are never members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tagset {
    tags: Vec<Tag>,
    descriptions: Vec<String>,
    index: HashMap<String, usize>,
}

impl Tagset {
    /// Builds a tagset from labels, rejecting duplicates and reserved names.
    pub fn new<I, S>(labels: I) -> Result<Self, CorpusError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_descriptions(labels.into_iter().map(|l| (l, String::new())))
    }

    pub fn with_descriptions<I, S, D>(entries: I) -> Result<Self, CorpusError>
    where
        I: IntoIterator<Item = (S, D)>,
        S: Into<String>,
        D: Into<String>,
    {
        let mut set = Tagset {
            tags: Vec::new(),
            descriptions: Vec::new(),
            index: HashMap::new(),
        };
        for (label, desc) in entries {
            let tag = Tag::new(label)?;
            if set.index.contains_key(tag.as_str()) {
                return Err(CorpusError::DuplicateTag(tag.0));
            }
            set.index.insert(tag.0.clone(), set.tags.len());
            set.tags.push(tag);
            set.descriptions.push(desc.into());
        }
        if set.tags.is_empty() {
            return Err(CorpusError::EmptyTagset);
        }
        Ok(set)
    }

    /// Reads a tagset file: one label per line, `#` comments and blank
    /// lines ignored. Anything after the label on a line is kept as its
    /// description.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self, CorpusError> {
        let mut entries = Vec::new();
        for line in reader.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (label, desc) = match line.split_once(char::is_whitespace) {
                Some((l, d)) => (l, d.trim()),
                None => (line, ""),
            };
            entries.push((label.to_string(), desc.to_string()));
        }
        Self::with_descriptions(entries)
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn tag(&self, index: usize) -> &Tag {
        &self.tags[index]
    }

    pub fn description(&self, index: usize) -> &str {
        &self.descriptions[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Tag> {
        self.tags.iter()
    }

    /// Looks up a label and returns the registered tag.
    pub fn get(&self, label: &str) -> Option<&Tag> {
        self.index_of(label).map(|i| &self.tags[i])
    }
}

impl Default for Tagset {
    fn default() -> Self {
        Tagset::with_descriptions(DEFAULT_TAGS.iter().copied())
            .expect("built-in tagset is well formed")
    }
}
