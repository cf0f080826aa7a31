use super::{is_tied_with, Tagger};
use crate::error::DecodeError;

pub const MAX_BRUTE_FORCE_WORDS: usize = 8;
pub const MAX_BRUTE_FORCE_TAGS: usize = 8;

/// Visits every sequence in lexicographic label order.
fn for_each_sequence(lex: &[usize], len: usize, mut f: impl FnMut(&[usize])) {
    let mut digits = vec![0usize; len];
    let mut seq: Vec<usize> = vec![lex[0]; len];
    loop {
        f(&seq);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < lex.len() {
                seq[pos] = lex[digits[pos]];
                break;
            }
            digits[pos] = 0;
            seq[pos] = lex[0];
        }
    }
}

pub(crate) fn decode(tagger: &Tagger, words: &[String]) -> Result<Vec<usize>, DecodeError> {
    if words.is_empty() {
        return Err(DecodeError::EmptySentence);
    }
    let n = tagger.n_tags();
    if words.len() > MAX_BRUTE_FORCE_WORDS || n > MAX_BRUTE_FORCE_TAGS {
        return Err(DecodeError::InstanceTooLarge {
            words: words.len(),
            tags: n,
        });
    }
    let local = tagger.local_scores(words);
    let lex = tagger.lex_order();

    let mut best = f64::NEG_INFINITY;
    for_each_sequence(lex, words.len(), |seq| {
        best = best.max(tagger.score_ids(&local, seq));
    });
    let mut chosen = None;
    for_each_sequence(lex, words.len(), |seq| {
        if chosen.is_none() && is_tied_with(tagger.score_ids(&local, seq), best) {
            chosen = Some(seq.to_vec());
        }
    });
    Ok(chosen.expect("at least one sequence exists"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_lex_order() {
        let mut seen = Vec::new();
        for_each_sequence(&[2, 0, 1], 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![2, 2]);
        assert_eq!(seen[1], vec![2, 0]);
        assert_eq!(seen[3], vec![0, 2]);
        assert_eq!(seen[8], vec![1, 1]);
    }
}
