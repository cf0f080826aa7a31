#![allow(dead_code)]

use std::collections::HashMap;

use ngram_pos::{Sentence, TaggedSentence, Tagset};
use rand::seq::SliceRandom;
use rand::Rng;

const LABEL_POOL: [&str; 8] = ["NN", "VM", "JJ", "RB", "PSP", "QC", "SYM", "XC"];
const WORD_POOL: [&str; 10] = [
    "a", "b", "x/y", "साखर", "रंगून", "लागते", "c", "./x", "वंदना", "d",
];

pub struct RandomCorpus {
    pub tagset: Tagset,
    pub vocab: Vec<String>,
    pub sentences: Vec<TaggedSentence>,
}

/// A small random tagset (registered in shuffled order) and corpus.
pub fn random_corpus<R: Rng>(rng: &mut R, max_tags: usize) -> RandomCorpus {
    let n_tags = rng.gen_range(2..=max_tags);
    let mut labels: Vec<&str> = LABEL_POOL.to_vec();
    labels.shuffle(rng);
    labels.truncate(n_tags);
    let tagset = Tagset::new(labels.iter().copied()).unwrap();

    let n_words = rng.gen_range(2..=6);
    let mut vocab: Vec<String> = WORD_POOL.iter().map(|w| w.to_string()).collect();
    vocab.shuffle(rng);
    vocab.truncate(n_words);

    let n_sent = rng.gen_range(2..=12);
    let sentences = (0..n_sent)
        .map(|_| {
            let len = rng.gen_range(1..=6);
            let pairs: Vec<(String, String)> = (0..len)
                .map(|_| {
                    (
                        vocab[rng.gen_range(0..vocab.len())].clone(),
                        labels[rng.gen_range(0..labels.len())].to_string(),
                    )
                })
                .collect();
            TaggedSentence::from_pairs(&pairs, &tagset).unwrap()
        })
        .collect();
    RandomCorpus {
        tagset,
        vocab,
        sentences,
    }
}

/// A sentence over the corpus vocabulary, occasionally with an unseen word.
pub fn random_sentence<R: Rng>(rng: &mut R, vocab: &[String], max_len: usize) -> Sentence {
    let len = rng.gen_range(1..=max_len);
    let words: Vec<String> = (0..len)
        .map(|_| {
            if rng.gen_bool(0.1) {
                "unseen".to_string()
            } else {
                vocab[rng.gen_range(0..vocab.len())].clone()
            }
        })
        .collect();
    Sentence::new(words).unwrap()
}

/// Counts recomputed directly from the sentences, keyed by label strings.
/// Sentinels are spelled `<S>` and `</S>`.
#[derive(Default)]
pub struct Recount {
    pub word_tag: HashMap<(String, String), u64>,
    pub word: HashMap<String, u64>,
    pub tag: HashMap<String, u64>,
    pub pair: HashMap<(String, String), u64>,
    pub triple: HashMap<(String, String, String), u64>,
    /// Occurrences of two consecutive labels in the doubly padded sequence.
    pub context: HashMap<(String, String), u64>,
}

pub fn recount(sentences: &[TaggedSentence]) -> Recount {
    let mut r = Recount::default();
    for s in sentences {
        let mut padded = vec!["<S>".to_string(), "<S>".to_string()];
        for tok in s.tokens() {
            *r.word_tag
                .entry((tok.word.clone(), tok.tag.to_string()))
                .or_default() += 1;
            *r.word.entry(tok.word.clone()).or_default() += 1;
            padded.push(tok.tag.to_string());
        }
        padded.push("</S>".to_string());
        for t in &padded[1..] {
            *r.tag.entry(t.clone()).or_default() += 1;
        }
        for w in padded[1..].windows(2) {
            *r.pair.entry((w[0].clone(), w[1].clone())).or_default() += 1;
        }
        for w in padded.windows(2) {
            *r.context.entry((w[0].clone(), w[1].clone())).or_default() += 1;
        }
        for w in padded.windows(3) {
            *r.triple
                .entry((w[0].clone(), w[1].clone(), w[2].clone()))
                .or_default() += 1;
        }
    }
    r
}

impl Recount {
    pub fn get2(map: &HashMap<(String, String), u64>, a: &str, b: &str) -> u64 {
        map.get(&(a.to_string(), b.to_string())).copied().unwrap_or(0)
    }

    pub fn tag(&self, t: &str) -> u64 {
        self.tag.get(t).copied().unwrap_or(0)
    }

    pub fn triple(&self, a: &str, b: &str, c: &str) -> u64 {
        self.triple
            .get(&(a.to_string(), b.to_string(), c.to_string()))
            .copied()
            .unwrap_or(0)
    }
}
