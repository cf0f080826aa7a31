//! Frequency tables and the probability estimates derived from them.
//!
//! Counts are stored as exact integers and every probability is computed
//! on demand. Internally tags are addressed by index: `0..n` are the
//! tagset members in registration order, `n` is the start sentinel and
//! `n + 1` the end sentinel.
//!
//! Each training sentence `t1 .. tn` is padded as `START t1 .. tn END` for
//! bigrams and `START START t1 .. tn END` for trigrams. The tag table holds
//! one START and one END occurrence per sentence.

use std::collections::{BTreeMap, HashMap};

use crate::corpus::TaggedSentence;
use crate::error::ModelError;
use crate::tagset::{Tag, Tagset, END_LABEL, END_MARKER, START_LABEL, START_MARKER};

/// Open-class tags used when the smoothing config does not name any.
pub const DEFAULT_OPEN_CLASS: [&str; 8] = ["NN", "NNP", "VM", "JJ", "RB", "QC", "XC", "UNK"];

/// How emissions are estimated for words never seen in training.
#[derive(Clone, Debug, PartialEq)]
pub enum UnknownPolicy {
    /// Spread the mass uniformly over the open-class tags.
    UniformOpenClass,
    /// Give all mass to one tag.
    SingleTag(Tag),
}

/// Smoothing constants and unknown-word handling.
///
/// With `alpha = 0` and `lambdas = [1, 0, 0]` every estimate reduces to
/// the raw count ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct SmoothingConfig {
    /// Additive constant for emissions and bigram transitions.
    pub alpha: f64,
    /// Trigram interpolation weights `[trigram, bigram, unigram]`.
    pub lambdas: [f64; 3],
    pub unknown_policy: UnknownPolicy,
    pub open_class_tags: Vec<Tag>,
}

impl Default for SmoothingConfig {
    fn default() -> Self {
        SmoothingConfig {
            alpha: 0.001,
            lambdas: [0.6, 0.3, 0.1],
            unknown_policy: UnknownPolicy::UniformOpenClass,
            open_class_tags: DEFAULT_OPEN_CLASS
                .iter()
                .map(|l| Tag::new(*l).expect("valid label"))
                .collect(),
        }
    }
}

impl SmoothingConfig {
    /// The default configuration with its open class restricted to members
    /// of `tagset`. When none of the default open-class tags are present
    /// every tag is treated as open.
    pub fn default_for(tagset: &Tagset) -> Self {
        let mut cfg = SmoothingConfig::default();
        cfg.open_class_tags.retain(|t| tagset.contains(t.as_str()));
        if cfg.open_class_tags.is_empty() {
            cfg.open_class_tags = tagset.iter().cloned().collect();
        }
        cfg
    }

    /// Raw maximum-likelihood ratios: `alpha = 0`, `lambdas = [1, 0, 0]`.
    pub fn unsmoothed(tagset: &Tagset) -> Self {
        SmoothingConfig {
            alpha: 0.0,
            lambdas: [1.0, 0.0, 0.0],
            ..Self::default_for(tagset)
        }
    }

    pub fn validate(&self, tagset: &Tagset) -> Result<(), ModelError> {
        if !(self.alpha >= 0.0 && self.alpha.is_finite()) {
            return Err(ModelError::InvalidSmoothing(format!(
                "alpha must be a finite non-negative number, got {}",
                self.alpha
            )));
        }
        if self.lambdas.iter().any(|l| !(*l >= 0.0 && l.is_finite())) {
            return Err(ModelError::InvalidSmoothing(
                "interpolation weights must be non-negative".into(),
            ));
        }
        let sum: f64 = self.lambdas.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(ModelError::InvalidSmoothing(format!(
                "interpolation weights sum to {sum}, expected 1"
            )));
        }
        if self.open_class_tags.is_empty() {
            return Err(ModelError::InvalidSmoothing("open class is empty".into()));
        }
        for t in &self.open_class_tags {
            if !tagset.contains(t.as_str()) {
                return Err(ModelError::UnknownTag(t.to_string()));
            }
        }
        if let UnknownPolicy::SingleTag(t) = &self.unknown_policy {
            if !tagset.contains(t.as_str()) {
                return Err(ModelError::UnknownTag(t.to_string()));
            }
        }
        Ok(())
    }
}

/// `num / den`, with `0 / 0` defined as 0.
pub(crate) fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// All frequency tables gathered from a training corpus.
#[derive(Clone, Debug, PartialEq)]
pub struct CountsModel {
    tagset: Tagset,
    /// word -> (tag index -> count); real tags only.
    word_tag: BTreeMap<String, BTreeMap<usize, u64>>,
    word_count: HashMap<String, u64>,
    /// Indexed by tag id, sentinels included.
    tag_count: Vec<u64>,
    bigram: HashMap<(usize, usize), u64>,
    trigram: HashMap<(usize, usize, usize), u64>,
    total_tokens: u64,
}

impl CountsModel {
    /// Counts every table over `corpus`.
    pub fn build(corpus: &[TaggedSentence], tagset: &Tagset) -> Result<Self, ModelError> {
        if corpus.is_empty() {
            return Err(ModelError::EmptyCorpus);
        }
        let n = tagset.len();
        let (start, end) = (n, n + 1);
        let mut word_tag: BTreeMap<String, BTreeMap<usize, u64>> = BTreeMap::new();
        let mut tag_count = vec![0u64; n + 2];
        let mut bigram = HashMap::new();
        let mut trigram = HashMap::new();

        for sentence in corpus {
            let mut ids = Vec::with_capacity(sentence.len() + 3);
            ids.push(start);
            ids.push(start);
            for tok in sentence.tokens() {
                if tok.word == START_MARKER || tok.word == END_MARKER {
                    return Err(ModelError::ReservedWord(tok.word.clone()));
                }
                let id = tagset
                    .index_of(tok.tag.as_str())
                    .ok_or_else(|| ModelError::UnknownTag(tok.tag.to_string()))?;
                *word_tag
                    .entry(tok.word.clone())
                    .or_default()
                    .entry(id)
                    .or_insert(0) += 1;
                ids.push(id);
            }
            ids.push(end);
            // ids[1..] is the bigram padding, ids[..] the trigram padding.
            for &id in &ids[1..] {
                tag_count[id] += 1;
            }
            for w in ids[1..].windows(2) {
                *bigram.entry((w[0], w[1])).or_insert(0) += 1;
            }
            for w in ids.windows(3) {
                *trigram.entry((w[0], w[1], w[2])).or_insert(0) += 1;
            }
        }

        Ok(Self::from_parts(
            tagset.clone(),
            word_tag,
            tag_count,
            bigram,
            trigram,
        ))
    }

    pub(crate) fn from_parts(
        tagset: Tagset,
        word_tag: BTreeMap<String, BTreeMap<usize, u64>>,
        tag_count: Vec<u64>,
        bigram: HashMap<(usize, usize), u64>,
        trigram: HashMap<(usize, usize, usize), u64>,
    ) -> Self {
        let word_count: HashMap<String, u64> = word_tag
            .iter()
            .map(|(w, m)| (w.clone(), m.values().sum()))
            .collect();
        let total_tokens = word_count.values().sum();
        CountsModel {
            tagset,
            word_tag,
            word_count,
            tag_count,
            bigram,
            trigram,
            total_tokens,
        }
    }

    pub fn tagset(&self) -> &Tagset {
        &self.tagset
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    pub fn sentence_count(&self) -> u64 {
        self.tag_count[self.start_id()]
    }

    pub fn vocabulary_size(&self) -> usize {
        self.word_tag.len()
    }

    /// Training words in sorted order.
    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.word_tag.keys().map(String::as_str)
    }

    pub fn contains_word(&self, word: &str) -> bool {
        self.word_count.contains_key(word)
    }

    pub(crate) fn start_id(&self) -> usize {
        self.tagset.len()
    }

    pub(crate) fn end_id(&self) -> usize {
        self.tagset.len() + 1
    }

    /// Resolves a tag label or sentinel name (`START`/`<S>`, `END`/`</S>`).
    pub fn resolve(&self, label: &str) -> Result<usize, ModelError> {
        match label {
            START_LABEL | START_MARKER => Ok(self.start_id()),
            END_LABEL | END_MARKER => Ok(self.end_id()),
            _ => self
                .tagset
                .index_of(label)
                .ok_or_else(|| ModelError::UnknownTag(label.to_string())),
        }
    }

    /// Inverse of [`resolve`](Self::resolve) using the model-file markers.
    pub(crate) fn marker(&self, id: usize) -> &str {
        if id == self.start_id() {
            START_MARKER
        } else if id == self.end_id() {
            END_MARKER
        } else {
            self.tagset.tag(id).as_str()
        }
    }

    fn resolve_real(&self, label: &str) -> Result<usize, ModelError> {
        self.tagset
            .index_of(label)
            .ok_or_else(|| ModelError::UnknownTag(label.to_string()))
    }

    // ---- raw counts -------------------------------------------------------

    pub fn word_count(&self, word: &str) -> u64 {
        self.word_count.get(word).copied().unwrap_or(0)
    }

    pub fn word_tag_count(&self, word: &str, tag: &str) -> Result<u64, ModelError> {
        let id = self.resolve_real(tag)?;
        Ok(self.word_tag_count_id(word, id))
    }

    pub fn tag_count(&self, tag: &str) -> Result<u64, ModelError> {
        Ok(self.tag_count[self.resolve(tag)?])
    }

    pub fn bigram_count(&self, prev: &str, tag: &str) -> Result<u64, ModelError> {
        Ok(self.bigram_count_id(self.resolve(prev)?, self.resolve(tag)?))
    }

    pub fn trigram_count(&self, t2: &str, t1: &str, tag: &str) -> Result<u64, ModelError> {
        Ok(self.trigram_count_id(self.resolve(t2)?, self.resolve(t1)?, self.resolve(tag)?))
    }

    /// Tags seen with `word`, with their counts, in tagset order.
    pub fn tags_of_word(&self, word: &str) -> Vec<(&Tag, u64)> {
        self.word_tag
            .get(word)
            .map(|m| m.iter().map(|(&id, &c)| (self.tagset.tag(id), c)).collect())
            .unwrap_or_default()
    }

    pub(crate) fn word_tag_table(&self) -> &BTreeMap<String, BTreeMap<usize, u64>> {
        &self.word_tag
    }

    pub(crate) fn tag_counts(&self) -> &[u64] {
        &self.tag_count
    }

    pub(crate) fn bigram_table(&self) -> &HashMap<(usize, usize), u64> {
        &self.bigram
    }

    pub(crate) fn trigram_table(&self) -> &HashMap<(usize, usize, usize), u64> {
        &self.trigram
    }

    pub(crate) fn word_tag_count_id(&self, word: &str, id: usize) -> u64 {
        self.word_tag
            .get(word)
            .and_then(|m| m.get(&id))
            .copied()
            .unwrap_or(0)
    }

    pub(crate) fn bigram_count_id(&self, prev: usize, tag: usize) -> u64 {
        self.bigram.get(&(prev, tag)).copied().unwrap_or(0)
    }

    pub(crate) fn trigram_count_id(&self, t2: usize, t1: usize, tag: usize) -> u64 {
        self.trigram.get(&(t2, t1, tag)).copied().unwrap_or(0)
    }

    /// Occurrences of the two-tag trigram context `(t2, t1)`. This is the
    /// bigram count except for the doubled start, which occurs once per
    /// sentence.
    pub(crate) fn trigram_context_count_id(&self, t2: usize, t1: usize) -> u64 {
        if t2 == self.start_id() && t1 == self.start_id() {
            self.sentence_count()
        } else {
            self.bigram_count_id(t2, t1)
        }
    }

    // ---- probabilities ----------------------------------------------------

    /// P(tag | word) = freq(word, tag) / freq(word), unsmoothed.
    pub fn p_tag_given_word(&self, word: &str, tag: &str) -> Result<f64, ModelError> {
        let id = self.resolve_real(tag)?;
        let total = self.word_count(word);
        if total == 0 {
            return Err(ModelError::UnknownWord(word.to_string()));
        }
        Ok(self.word_tag_count_id(word, id) as f64 / total as f64)
    }

    /// P(word | tag) with additive smoothing; unknown words go through the
    /// unknown-word policy.
    pub fn p_word_given_tag(
        &self,
        word: &str,
        tag: &str,
        smoothing: &SmoothingConfig,
    ) -> Result<f64, ModelError> {
        let id = self.resolve_real(tag)?;
        Ok(self.emission_id(word, id, smoothing))
    }

    /// P(tag | prev) with additive smoothing over the tagset plus END.
    pub fn p_bigram_transition(
        &self,
        prev: &str,
        tag: &str,
        smoothing: &SmoothingConfig,
    ) -> Result<f64, ModelError> {
        Ok(self.bigram_id(self.resolve(prev)?, self.resolve(tag)?, smoothing.alpha))
    }

    /// P(tag | t2, t1) as `λ3·P3 + λ2·P2 + λ1·P1`.
    pub fn p_trigram_transition(
        &self,
        t2: &str,
        t1: &str,
        tag: &str,
        smoothing: &SmoothingConfig,
    ) -> Result<f64, ModelError> {
        Ok(self.trigram_id(
            self.resolve(t2)?,
            self.resolve(t1)?,
            self.resolve(tag)?,
            smoothing,
        ))
    }

    pub(crate) fn emission_id(&self, word: &str, id: usize, s: &SmoothingConfig) -> f64 {
        let vocab = self.vocabulary_size() as f64;
        let den = self.tag_count[id] as f64 + s.alpha * vocab;
        if self.contains_word(word) {
            return ratio(self.word_tag_count_id(word, id) as f64 + s.alpha, den);
        }
        let floor = ratio(s.alpha, den);
        let label = self.tagset.tag(id);
        match &s.unknown_policy {
            UnknownPolicy::UniformOpenClass => {
                if s.open_class_tags.contains(label) {
                    1.0 / s.open_class_tags.len() as f64
                } else {
                    floor
                }
            }
            UnknownPolicy::SingleTag(t) => {
                if t == label {
                    1.0
                } else {
                    floor
                }
            }
        }
    }

    pub(crate) fn bigram_id(&self, prev: usize, tag: usize, alpha: f64) -> f64 {
        let successors = (self.tagset.len() + 1) as f64;
        ratio(
            self.bigram_count_id(prev, tag) as f64 + alpha,
            self.tag_count[prev] as f64 + alpha * successors,
        )
    }

    pub(crate) fn trigram_id(&self, t2: usize, t1: usize, tag: usize, s: &SmoothingConfig) -> f64 {
        let [l3, l2, l1] = s.lambdas;
        let p3 = ratio(
            self.trigram_count_id(t2, t1, tag) as f64,
            self.trigram_context_count_id(t2, t1) as f64,
        );
        let p2 = self.bigram_id(t1, tag, s.alpha);
        let all_tags: u64 = self.tag_count.iter().sum();
        let p1 = ratio(
            self.tag_count[tag] as f64 + s.alpha,
            all_tags as f64 + s.alpha * (self.tagset.len() + 2) as f64,
        );
        l3 * p3 + l2 * p2 + l1 * p1
    }

    /// The tag a context-free tagger gives an unseen word: the policy's
    /// tag, or the most frequent open-class tag (ties to the smaller label).
    pub fn unknown_word_tag(&self, s: &SmoothingConfig) -> Result<&Tag, ModelError> {
        match &s.unknown_policy {
            UnknownPolicy::SingleTag(t) => Ok(self.tagset.tag(self.resolve_real(t.as_str())?)),
            UnknownPolicy::UniformOpenClass => {
                let mut best: Option<(u64, &Tag)> = None;
                for t in &s.open_class_tags {
                    let id = self.resolve_real(t.as_str())?;
                    let c = self.tag_count[id];
                    let better = match best {
                        None => true,
                        Some((bc, bt)) => c > bc || (c == bc && t.as_str() < bt.as_str()),
                    };
                    if better {
                        best = Some((c, self.tagset.tag(id)));
                    }
                }
                best.map(|(_, t)| t)
                    .ok_or_else(|| ModelError::InvalidSmoothing("open class is empty".into()))
            }
        }
    }

    /// P(tag | word) extended to unseen words: open-class tags in
    /// proportion to their training frequency (uniform if none were seen),
    /// or all mass on the single policy tag.
    pub(crate) fn tag_given_word_id(&self, word: &str, id: usize, s: &SmoothingConfig) -> f64 {
        if let Some(&total) = self.word_count.get(word) {
            return self.word_tag_count_id(word, id) as f64 / total as f64;
        }
        let label = self.tagset.tag(id);
        match &s.unknown_policy {
            UnknownPolicy::SingleTag(t) => f64::from(u8::from(t == label)),
            UnknownPolicy::UniformOpenClass => {
                if !s.open_class_tags.contains(label) {
                    return 0.0;
                }
                let open_total: u64 = s
                    .open_class_tags
                    .iter()
                    .filter_map(|t| self.tagset.index_of(t.as_str()))
                    .map(|i| self.tag_count[i])
                    .sum();
                if open_total == 0 {
                    1.0 / s.open_class_tags.len() as f64
                } else {
                    self.tag_count[id] as f64 / open_total as f64
                }
            }
        }
    }
}

/// Free-function form of [`CountsModel::build`].
pub fn build_counts(corpus: &[TaggedSentence], tagset: &Tagset) -> Result<CountsModel, ModelError> {
    CountsModel::build(corpus, tagset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_tagged_line;

    fn corpus(lines: &[&str]) -> (Vec<TaggedSentence>, Tagset) {
        let ts = Tagset::default();
        let c = lines
            .iter()
            .map(|l| parse_tagged_line(l, &ts).unwrap())
            .collect();
        (c, ts)
    }

    fn model(lines: &[&str]) -> CountsModel {
        let (c, ts) = corpus(lines);
        CountsModel::build(&c, &ts).unwrap()
    }

    fn raw(m: &CountsModel) -> SmoothingConfig {
        SmoothingConfig::unsmoothed(m.tagset())
    }

    #[test]
    fn counts_single_sentence() {
        let m = model(&["a/NN b/VM"]);
        assert_eq!(m.word_tag_count("a", "NN").unwrap(), 1);
        assert_eq!(m.bigram_count("START", "NN").unwrap(), 1);
        assert_eq!(m.bigram_count("NN", "VM").unwrap(), 1);
        assert_eq!(m.bigram_count("VM", "END").unwrap(), 1);
        assert_eq!(m.trigram_count("START", "START", "NN").unwrap(), 1);
        assert_eq!(m.trigram_count("NN", "VM", "END").unwrap(), 1);
        assert_eq!(m.tag_count("START").unwrap(), 1);
        assert_eq!(m.tag_count("</S>").unwrap(), 1);
        assert_eq!(m.total_tokens(), 2);
    }

    #[test]
    fn counts_ambiguous_word() {
        let m = model(&["x/NN y/VM", "x/JJ y/VM"]);
        assert_eq!(m.word_count("x"), 2);
        assert_eq!(m.word_tag_count("x", "NN").unwrap(), 1);
        assert_eq!(m.word_tag_count("x", "JJ").unwrap(), 1);
    }

    #[test]
    fn empty_corpus_and_reserved_words() {
        let ts = Tagset::default();
        assert!(matches!(
            CountsModel::build(&[], &ts),
            Err(ModelError::EmptyCorpus)
        ));
        let (c, ts) = corpus(&["<S>/NN"]);
        assert!(matches!(
            CountsModel::build(&c, &ts),
            Err(ModelError::ReservedWord(_))
        ));
    }

    #[test]
    fn tag_outside_model_tagset() {
        let (c, _) = corpus(&["a/NN b/PSP"]);
        let small = Tagset::new(["NN", "VM"]).unwrap();
        assert!(matches!(
            CountsModel::build(&c, &small),
            Err(ModelError::UnknownTag(t)) if t == "PSP"
        ));
    }

    #[test]
    fn tag_given_word() {
        let m = model(&["a/NN b/VM"]);
        assert_eq!(m.p_tag_given_word("a", "NN").unwrap(), 1.0);
        assert_eq!(m.p_tag_given_word("a", "VM").unwrap(), 0.0);
        assert!(matches!(
            m.p_tag_given_word("zzz", "NN"),
            Err(ModelError::UnknownWord(_))
        ));
        let m = model(&["x/NN y/VM", "x/JJ y/VM"]);
        assert_eq!(m.p_tag_given_word("x", "NN").unwrap(), 0.5);
    }

    #[test]
    fn word_given_tag() {
        let m = model(&["a/NN b/VM"]);
        let s = raw(&m);
        assert_eq!(m.p_word_given_tag("a", "NN", &s).unwrap(), 1.0);
        assert_eq!(m.p_word_given_tag("b", "NN", &s).unwrap(), 0.0);
        assert!(matches!(
            m.p_word_given_tag("a", "BOGUS", &s),
            Err(ModelError::UnknownTag(_))
        ));

        let m = model(&["x/NN y/VM", "x/NN z/VM"]);
        let s = raw(&m);
        assert_eq!(m.p_word_given_tag("x", "NN", &s).unwrap(), 1.0);
        assert_eq!(m.p_word_given_tag("y", "VM", &s).unwrap(), 0.5);
    }

    #[test]
    fn smoothed_emission_formula() {
        let m = model(&["x/NN y/VM", "x/NN z/VM"]);
        let s = SmoothingConfig::default();
        // (1 + a) / (2 + 3a)
        let a = 0.001;
        let p = m.p_word_given_tag("y", "VM", &s).unwrap();
        assert!((p - (1.0 + a) / (2.0 + 3.0 * a)).abs() < 1e-15);
    }

    #[test]
    fn unknown_word_policies() {
        let m = model(&["a/NN b/VM"]);
        let s = SmoothingConfig::default();
        let open = s.open_class_tags.len() as f64;
        assert_eq!(m.p_word_given_tag("zzz", "JJ", &s).unwrap(), 1.0 / open);
        // PSP is closed class and never seen: floor a / (0 + a * |V|) = 1/2.
        assert!((m.p_word_given_tag("zzz", "PSP", &s).unwrap() - 0.5).abs() < 1e-15);

        let single = SmoothingConfig {
            unknown_policy: UnknownPolicy::SingleTag(Tag::new("NN").unwrap()),
            ..SmoothingConfig::default()
        };
        assert_eq!(m.p_word_given_tag("zzz", "NN", &single).unwrap(), 1.0);
        let floor = 0.001 / (1.0 + 0.002);
        assert!((m.p_word_given_tag("zzz", "VM", &single).unwrap() - floor).abs() < 1e-15);
        assert_eq!(m.unknown_word_tag(&single).unwrap().as_str(), "NN");
    }

    #[test]
    fn unknown_word_tag_prefers_frequent_open_class() {
        let m = model(&["a/VM b/VM c/NN"]);
        let s = SmoothingConfig::default();
        assert_eq!(m.unknown_word_tag(&s).unwrap().as_str(), "VM");
        // Ties go to the smaller label.
        let m = model(&["a/VM c/NN"]);
        assert_eq!(m.unknown_word_tag(&s).unwrap().as_str(), "NN");
    }

    #[test]
    fn bigram_transition() {
        let m = model(&["a/NN b/VM"]);
        let s = raw(&m);
        assert_eq!(m.p_bigram_transition("NN", "VM", &s).unwrap(), 1.0);
        assert_eq!(m.p_bigram_transition("NN", "NN", &s).unwrap(), 0.0);
        assert!(m.p_bigram_transition("NN", "ZZ", &s).is_err());

        let m = model(&["a/NN b/VM", "a/NN c/NN"]);
        let p = m.p_bigram_transition("NN", "VM", &raw(&m)).unwrap();
        assert!((p - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn trigram_transition() {
        let m = model(&["a/NN b/VM c/JJ"]);
        let s = raw(&m);
        assert_eq!(m.p_trigram_transition("NN", "VM", "JJ", &s).unwrap(), 1.0);
        assert_eq!(m.p_trigram_transition("NN", "VM", "NN", &s).unwrap(), 0.0);
        assert_eq!(
            m.p_trigram_transition("START", "START", "NN", &s).unwrap(),
            1.0
        );
        // Unseen context backs off to 0 under the raw ratio.
        assert_eq!(m.p_trigram_transition("JJ", "JJ", "NN", &s).unwrap(), 0.0);

        // Default weights, computed by hand on the same corpus:
        // P3 = 1, P2(JJ|VM) = (1+a)/(1+24a), P1(JJ) = (1+a)/(5+25a).
        let d = SmoothingConfig::default();
        let a = 0.001;
        let expected = 0.6 + 0.3 * (1.0 + a) / (1.0 + 24.0 * a) + 0.1 * (1.0 + a) / (5.0 + 25.0 * a);
        let got = m.p_trigram_transition("NN", "VM", "JJ", &d).unwrap();
        assert!((got - expected).abs() < 1e-15, "{got} vs {expected}");
    }

    #[test]
    fn smoothing_validation() {
        let ts = Tagset::default();
        let mut s = SmoothingConfig::default();
        assert!(s.validate(&ts).is_ok());
        s.lambdas = [0.5, 0.5, 0.5];
        assert!(s.validate(&ts).is_err());
        s.lambdas = [1.0, 0.0, 0.0];
        s.alpha = -1.0;
        assert!(s.validate(&ts).is_err());
        let small = Tagset::new(["A", "B"]).unwrap();
        assert!(SmoothingConfig::default().validate(&small).is_err());
        let adapted = SmoothingConfig::default_for(&small);
        assert_eq!(adapted.open_class_tags.len(), 2);
        assert!(adapted.validate(&small).is_ok());
    }
}
