//! Exact max-score decoding.
//!
//! Both programs run backwards first (`suffix[i][state]` is the best score
//! obtainable from position `i + 1` to the end) and then walk forwards,
//! taking at each position the first tag in label order that can still
//! reach the optimum.

use super::{is_tied_with, Tagger};

pub(crate) struct Decoded {
    pub path: Vec<usize>,
    /// `[position][tag id]`; empty unless requested.
    pub max_marginals: Vec<Vec<f64>>,
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(f64::NEG_INFINITY, f64::max)
}

fn first_tied(lex: &[usize], best: f64, mut value: impl FnMut(usize) -> f64) -> usize {
    lex.iter()
        .copied()
        .find(|&t| is_tied_with(value(t), best))
        .expect("optimum is reachable from some tag")
}

pub(crate) fn unigram(tagger: &Tagger, local: &[Vec<f64>]) -> Vec<usize> {
    let lex = tagger.lex_order();
    local
        .iter()
        .map(|row| {
            let best = max_of(row.iter().copied());
            first_tied(lex, best, |t| row[t])
        })
        .collect()
}

pub(crate) fn unigram_traced(tagger: &Tagger, local: &[Vec<f64>]) -> Decoded {
    let best: Vec<f64> = local.iter().map(|r| max_of(r.iter().copied())).collect();
    let total: f64 = best.iter().sum();
    let max_marginals = local
        .iter()
        .zip(&best)
        .map(|(row, b)| row.iter().map(|v| total - b + v).collect())
        .collect();
    Decoded {
        path: unigram(tagger, local),
        max_marginals,
    }
}

/// Chain with transition weight `weight` on interior edges and weight 1 on
/// the START and END edges. `weight = 1` is the bigram objective and
/// `weight = 2` the bidirectional HMM objective.
pub(crate) fn first_order(tagger: &Tagger, local: &[Vec<f64>], weight: f64, traced: bool) -> Decoded {
    let len = local.len();
    let n = tagger.n_tags();
    let (start, end) = (tagger.start(), tagger.end());
    let edge = |a: usize, b: usize| weight * tagger.ln_bigram(a, b);

    let mut suffix = vec![vec![0.0; n]; len];
    for b in 0..n {
        suffix[len - 1][b] = tagger.ln_bigram(b, end);
    }
    for i in (0..len - 1).rev() {
        for b in 0..n {
            suffix[i][b] = max_of((0..n).map(|c| edge(b, c) + local[i + 1][c] + suffix[i + 1][c]));
        }
    }

    let first = |t: usize| tagger.ln_bigram(start, t) + local[0][t];
    let best = max_of((0..n).map(|t| first(t) + suffix[0][t]));

    let lex = tagger.lex_order();
    let mut path = Vec::with_capacity(len);
    let t0 = first_tied(lex, best, |t| first(t) + suffix[0][t]);
    let mut prefix = first(t0);
    path.push(t0);
    for i in 1..len {
        let prev = path[i - 1];
        let t = first_tied(lex, best, |t| prefix + edge(prev, t) + local[i][t] + suffix[i][t]);
        prefix += edge(prev, t) + local[i][t];
        path.push(t);
    }

    let max_marginals = if traced {
        let mut prefix_best = vec![vec![0.0; n]; len];
        for t in 0..n {
            prefix_best[0][t] = first(t);
        }
        for i in 1..len {
            for t in 0..n {
                prefix_best[i][t] =
                    max_of((0..n).map(|a| prefix_best[i - 1][a] + edge(a, t))) + local[i][t];
            }
        }
        (0..len)
            .map(|i| (0..n).map(|t| prefix_best[i][t] + suffix[i][t]).collect())
            .collect()
    } else {
        Vec::new()
    };

    Decoded {
        path,
        max_marginals,
    }
}

/// Trigram chain. States are `(previous tag, current tag)` where the
/// previous tag ranges over the real tags plus START.
pub(crate) fn second_order(tagger: &Tagger, local: &[Vec<f64>], traced: bool) -> Decoded {
    let len = local.len();
    let n = tagger.n_tags();
    let (start, end) = (tagger.start(), tagger.end());
    // prev index `n` stands for START, matching the tag id of START.
    let p = n + 1;
    let at = |a: usize, b: usize| a * n + b;

    let mut suffix = vec![vec![f64::NEG_INFINITY; p * n]; len];
    for a in 0..p {
        for b in 0..n {
            suffix[len - 1][at(a, b)] = tagger.ln_trigram(a, b, end);
        }
    }
    for i in (0..len - 1).rev() {
        for a in 0..p {
            for b in 0..n {
                suffix[i][at(a, b)] = max_of(
                    (0..n).map(|c| tagger.ln_trigram(a, b, c) + local[i + 1][c] + suffix[i + 1][at(b, c)]),
                );
            }
        }
    }

    let first = |t: usize| tagger.ln_trigram(start, start, t) + local[0][t];
    let best = max_of((0..n).map(|t| first(t) + suffix[0][at(start, t)]));

    let lex = tagger.lex_order();
    let mut path = Vec::with_capacity(len);
    let t0 = first_tied(lex, best, |t| first(t) + suffix[0][at(start, t)]);
    let mut prefix = first(t0);
    path.push(t0);
    for i in 1..len {
        let b = path[i - 1];
        let a = if i >= 2 { path[i - 2] } else { start };
        let t = first_tied(lex, best, |t| {
            prefix + tagger.ln_trigram(a, b, t) + local[i][t] + suffix[i][at(b, t)]
        });
        prefix += tagger.ln_trigram(a, b, t) + local[i][t];
        path.push(t);
    }

    let max_marginals = if traced {
        let mut prefix_best = vec![vec![f64::NEG_INFINITY; p * n]; len];
        for t in 0..n {
            prefix_best[0][at(start, t)] = first(t);
        }
        for i in 1..len {
            for b in 0..n {
                for c in 0..n {
                    prefix_best[i][at(b, c)] = max_of(
                        (0..p).map(|a| prefix_best[i - 1][at(a, b)] + tagger.ln_trigram(a, b, c)),
                    ) + local[i][c];
                }
            }
        }
        (0..len)
            .map(|i| {
                (0..n)
                    .map(|c| max_of((0..p).map(|b| prefix_best[i][at(b, c)] + suffix[i][at(b, c)])))
                    .collect()
            })
            .collect()
    } else {
        Vec::new()
    };

    Decoded {
        path,
        max_marginals,
    }
}
