//! Token-level accuracy, confusion matrix and per-tag precision/recall.
//!
//! Accuracy is `correct / total * 100` over every token, punctuation
//! included. Printed accuracies are rounded half-up to two decimals using
//! integer arithmetic, so `19921 / 25744` prints as `77.38`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::corpus::TaggedSentence;
use crate::error::EvalError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TagMetrics {
    /// `None` when the tag was never predicted.
    pub precision: Option<f64>,
    /// `None` when the tag never occurs in the gold data.
    pub recall: Option<f64>,
    /// `None` when either precision or recall is undefined.
    pub f1: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct EvaluationReport {
    pub total_tokens: u64,
    pub correct_tokens: u64,
    /// `(gold, predicted) -> count`.
    pub confusion: BTreeMap<(String, String), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportStyle {
    Plain,
    Tsv,
}

impl EvaluationReport {
    /// A report carrying only the two totals, for checking accuracy
    /// arithmetic on published counts.
    pub fn from_counts(correct: u64, total: u64) -> Self {
        assert!(correct <= total, "correct count exceeds total");
        EvaluationReport {
            total_tokens: total,
            correct_tokens: correct,
            confusion: BTreeMap::new(),
        }
    }

    /// Accuracy in percent; 0 for an empty report.
    pub fn accuracy_percent(&self) -> f64 {
        if self.total_tokens == 0 {
            0.0
        } else {
            100.0 * self.correct_tokens as f64 / self.total_tokens as f64
        }
    }

    /// Accuracy in hundredths of a percent, rounded half-up.
    pub fn accuracy_hundredths(&self) -> u64 {
        if self.total_tokens == 0 {
            return 0;
        }
        let (c, t) = (self.correct_tokens as u128, self.total_tokens as u128);
        ((c * 20_000 + t) / (2 * t)) as u64
    }

    /// Accuracy formatted with two decimals, e.g. `"77.38"`.
    pub fn accuracy_display(&self) -> String {
        let h = self.accuracy_hundredths();
        format!("{}.{:02}", h / 100, h % 100)
    }

    /// Every tag seen in gold or predictions.
    pub fn tags(&self) -> BTreeSet<&str> {
        self.confusion
            .keys()
            .flat_map(|(g, p)| [g.as_str(), p.as_str()])
            .collect()
    }

    pub fn metrics(&self, tag: &str) -> TagMetrics {
        let mut diag = 0;
        let mut row = 0;
        let mut col = 0;
        for ((g, p), &c) in &self.confusion {
            if g == tag {
                row += c;
            }
            if p == tag {
                col += c;
            }
            if g == tag && p == tag {
                diag += c;
            }
        }
        let precision = (col > 0).then(|| diag as f64 / col as f64);
        let recall = (row > 0).then(|| diag as f64 / row as f64);
        let f1 = match (precision, recall) {
            (Some(p), Some(r)) if p + r > 0.0 => Some(2.0 * p * r / (p + r)),
            (Some(_), Some(_)) => Some(0.0),
            _ => None,
        };
        TagMetrics {
            precision,
            recall,
            f1,
        }
    }

    pub fn per_tag(&self) -> BTreeMap<String, TagMetrics> {
        self.tags()
            .into_iter()
            .map(|t| (t.to_string(), self.metrics(t)))
            .collect()
    }

    /// Σ diagonal / Σ all rows; equals `accuracy_percent / 100`.
    pub fn micro_recall(&self) -> Option<f64> {
        let total: u64 = self.confusion.values().sum();
        let diag: u64 = self
            .confusion
            .iter()
            .filter(|((g, p), _)| g == p)
            .map(|(_, c)| c)
            .sum();
        (total > 0).then(|| diag as f64 / total as f64)
    }

    /// Adds another report's counts into this one.
    pub fn merge(&mut self, other: &EvaluationReport) {
        self.total_tokens += other.total_tokens;
        self.correct_tokens += other.correct_tokens;
        for (k, c) in &other.confusion {
            *self.confusion.entry(k.clone()).or_insert(0) += c;
        }
    }

    pub fn format(&self, style: ReportStyle) -> String {
        match style {
            ReportStyle::Plain => self.format_plain(),
            ReportStyle::Tsv => self.format_tsv(),
        }
    }

    fn format_plain(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "tokens: {}", self.total_tokens);
        let _ = writeln!(out, "correct: {}", self.correct_tokens);
        let _ = writeln!(out, "accuracy: {}", self.accuracy_display());
        let per_tag = self.per_tag();
        if !per_tag.is_empty() {
            let _ = writeln!(out, "{:<8} {:>9} {:>9} {:>9}", "tag", "precision", "recall", "f1");
            for (tag, m) in &per_tag {
                let _ = writeln!(
                    out,
                    "{:<8} {:>9} {:>9} {:>9}",
                    tag,
                    fmt_metric(m.precision),
                    fmt_metric(m.recall),
                    fmt_metric(m.f1)
                );
            }
        }
        out
    }

    fn format_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "total_tokens\t{}", self.total_tokens);
        let _ = writeln!(out, "correct_tokens\t{}", self.correct_tokens);
        let _ = writeln!(out, "accuracy\t{}", self.accuracy_display());
        for (tag, m) in self.per_tag() {
            let _ = writeln!(out, "precision/{tag}\t{}", fmt_metric(m.precision));
            let _ = writeln!(out, "recall/{tag}\t{}", fmt_metric(m.recall));
            let _ = writeln!(out, "f1/{tag}\t{}", fmt_metric(m.f1));
        }
        for ((g, p), c) in &self.confusion {
            let _ = writeln!(out, "confusion\t{g}\t{p}\t{c}");
        }
        out
    }

    /// Reads back the counts from TSV output. Derived rows are ignored and
    /// recomputed on demand.
    pub fn parse_tsv(text: &str) -> Result<Self, EvalError> {
        let mut report = EvaluationReport::default();
        let bad = |line: usize, reason: &str| EvalError::MalformedReport {
            line,
            reason: reason.to_string(),
        };
        let count = |line: usize, s: &str| s.parse::<u64>().map_err(|_| bad(line, "bad count"));
        for (i, line) in text.lines().enumerate() {
            let n = i + 1;
            let fields: Vec<&str> = line.split('\t').collect();
            match fields.as_slice() {
                [""] => {}
                ["total_tokens", v] => report.total_tokens = count(n, v)?,
                ["correct_tokens", v] => report.correct_tokens = count(n, v)?,
                ["confusion", g, p, c] => {
                    report
                        .confusion
                        .insert((g.to_string(), p.to_string()), count(n, c)?);
                }
                [key, _] if *key != "confusion" => {}
                _ => return Err(bad(n, "unexpected field count")),
            }
        }
        if report.correct_tokens > report.total_tokens {
            return Err(bad(0, "correct exceeds total"));
        }
        Ok(report)
    }
}

fn fmt_metric(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x:.4}"),
        None => "undefined".to_string(),
    }
}

/// Compares predictions against gold, token by token.
pub fn evaluate(
    gold: &[TaggedSentence],
    predicted: &[TaggedSentence],
) -> Result<EvaluationReport, EvalError> {
    if gold.len() != predicted.len() {
        return Err(EvalError::SentenceCountMismatch {
            gold: gold.len(),
            predicted: predicted.len(),
        });
    }
    let mut report = EvaluationReport::default();
    for (index, (g, p)) in gold.iter().zip(predicted).enumerate() {
        if g.len() != p.len() {
            return Err(EvalError::LengthMismatch { index });
        }
        for (position, (gt, pt)) in g.tokens().iter().zip(p.tokens()).enumerate() {
            if gt.word != pt.word {
                return Err(EvalError::WordMismatch { index, position });
            }
            report.total_tokens += 1;
            if gt.tag == pt.tag {
                report.correct_tokens += 1;
            }
            *report
                .confusion
                .entry((gt.tag.to_string(), pt.tag.to_string()))
                .or_insert(0) += 1;
        }
    }
    Ok(report)
}

/// Free-function form of [`EvaluationReport::format`].
pub fn format_report(report: &EvaluationReport, style: ReportStyle) -> String {
    report.format(style)
}
