//! Text serialization for [`CountsModel`].
//!
//! ```text
//! NGRAM-POS-MODEL v1
//! [tagset]
//! NN<TAB>Common Nouns
//! count=1
//! [word_tag]
//! a<TAB>NN<TAB>1
//! count=1
//! [tag]
//! <S><TAB>1
//! ...
//! ```
//!
//! Sections come in the fixed order `tagset`, `word_tag`, `tag`, `bigram`,
//! `trigram`. Each ends with `count=<records>`, which the reader checks.

use std::collections::{BTreeMap, HashMap};
use std::io::{BufRead, Write};

use crate::error::ModelError;
use crate::model::CountsModel;
use crate::tagset::Tagset;

pub const MAGIC: &str = "NGRAM-POS-MODEL";
pub const VERSION: &str = "v1";

const SECTIONS: [&str; 5] = ["tagset", "word_tag", "tag", "bigram", "trigram"];

pub fn save_model<W: Write>(model: &CountsModel, mut sink: W) -> Result<(), ModelError> {
    writeln!(sink, "{MAGIC} {VERSION}")?;

    let ts = model.tagset();
    writeln!(sink, "[tagset]")?;
    for i in 0..ts.len() {
        let desc = ts.description(i).replace(['\t', '\n', '\r'], " ");
        writeln!(sink, "{}\t{}", ts.tag(i), desc)?;
    }
    writeln!(sink, "count={}", ts.len())?;

    writeln!(sink, "[word_tag]")?;
    let mut records = 0usize;
    for (word, tags) in model.word_tag_table() {
        for (&id, &c) in tags {
            writeln!(sink, "{word}\t{}\t{c}", model.marker(id))?;
            records += 1;
        }
    }
    writeln!(sink, "count={records}")?;

    writeln!(sink, "[tag]")?;
    for (id, c) in model.tag_counts().iter().enumerate() {
        writeln!(sink, "{}\t{c}", model.marker(id))?;
    }
    writeln!(sink, "count={}", model.tag_counts().len())?;

    writeln!(sink, "[bigram]")?;
    let mut bigrams: Vec<_> = model.bigram_table().iter().collect();
    bigrams.sort();
    for (&(a, b), c) in &bigrams {
        writeln!(sink, "{}\t{}\t{c}", model.marker(a), model.marker(b))?;
    }
    writeln!(sink, "count={}", bigrams.len())?;

    writeln!(sink, "[trigram]")?;
    let mut trigrams: Vec<_> = model.trigram_table().iter().collect();
    trigrams.sort();
    for (&(a, b, t), c) in &trigrams {
        writeln!(
            sink,
            "{}\t{}\t{}\t{c}",
            model.marker(a),
            model.marker(b),
            model.marker(t)
        )?;
    }
    writeln!(sink, "count={}", trigrams.len())?;
    sink.flush()?;
    Ok(())
}

fn corrupt(section: &str, reason: impl Into<String>) -> ModelError {
    ModelError::CorruptSection {
        section: section.to_string(),
        reason: reason.into(),
    }
}

/// Reads the records of one section, checking its header and trailer.
fn read_section<I>(lines: &mut I, name: &str) -> Result<Vec<String>, ModelError>
where
    I: Iterator<Item = std::io::Result<String>>,
{
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| corrupt(name, "section missing"))?;
    if header.trim_end_matches('\r') != format!("[{name}]") {
        return Err(corrupt(name, format!("expected section header, found {header:?}")));
    }
    let mut records = Vec::new();
    for line in lines.by_ref() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if let Some(n) = line.strip_prefix("count=") {
            let n: usize = n
                .parse()
                .map_err(|_| corrupt(name, format!("bad count line {line:?}")))?;
            if n != records.len() {
                return Err(corrupt(
                    name,
                    format!("declared {n} records, found {}", records.len()),
                ));
            }
            return Ok(records);
        }
        records.push(line.to_string());
    }
    Err(corrupt(name, "truncated before count line"))
}

fn parse_count(section: &str, field: &str) -> Result<u64, ModelError> {
    field
        .parse()
        .map_err(|_| corrupt(section, format!("bad count {field:?}")))
}

pub fn load_model<R: BufRead>(source: R) -> Result<CountsModel, ModelError> {
    let mut lines = source.lines();
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| corrupt("header", "empty file"))?;
    let header = header.trim_end_matches('\r');
    match header.split_once(' ') {
        Some((MAGIC, VERSION)) => {}
        Some((MAGIC, other)) => {
            return Err(ModelError::FormatVersionMismatch {
                found: other.to_string(),
            })
        }
        _ => return Err(corrupt("header", format!("not a model file: {header:?}"))),
    }

    let mut sections = SECTIONS
        .iter()
        .map(|name| read_section(&mut lines, name).map(|r| (*name, r)))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter();
    let mut next = || sections.next().expect("all sections read").1;

    let tag_records = next();
    let tagset = Tagset::with_descriptions(tag_records.iter().map(|r| match r.split_once('\t') {
        Some((l, d)) => (l.to_string(), d.to_string()),
        None => (r.clone(), String::new()),
    }))
    .map_err(|e| corrupt("tagset", e.to_string()))?;

    // A model with only the tagset lets us resolve labels and markers.
    let n = tagset.len();
    let resolver = CountsModel::from_parts(
        tagset.clone(),
        BTreeMap::new(),
        vec![0; n + 2],
        HashMap::new(),
        HashMap::new(),
    );
    let resolve = |section: &str, label: &str| {
        resolver
            .resolve(label)
            .map_err(|_| corrupt(section, format!("unknown tag {label:?}")))
    };
    let fields = |section: &'static str, rec: &str, k: usize| -> Result<Vec<String>, ModelError> {
        let f: Vec<String> = rec.split('\t').map(str::to_string).collect();
        if f.len() != k {
            return Err(corrupt(section, format!("expected {k} fields in {rec:?}")));
        }
        Ok(f)
    };

    let mut word_tag: BTreeMap<String, BTreeMap<usize, u64>> = BTreeMap::new();
    for rec in next() {
        let f = fields("word_tag", &rec, 3)?;
        let id = resolve("word_tag", &f[1])?;
        if id >= n {
            return Err(corrupt("word_tag", "sentinel used as a word tag"));
        }
        word_tag
            .entry(f[0].clone())
            .or_default()
            .insert(id, parse_count("word_tag", &f[2])?);
    }

    let mut tag_count = vec![0u64; n + 2];
    for rec in next() {
        let f = fields("tag", &rec, 2)?;
        tag_count[resolve("tag", &f[0])?] = parse_count("tag", &f[1])?;
    }

    let mut bigram = HashMap::new();
    for rec in next() {
        let f = fields("bigram", &rec, 3)?;
        bigram.insert(
            (resolve("bigram", &f[0])?, resolve("bigram", &f[1])?),
            parse_count("bigram", &f[2])?,
        );
    }

    let mut trigram = HashMap::new();
    for rec in next() {
        let f = fields("trigram", &rec, 4)?;
        trigram.insert(
            (
                resolve("trigram", &f[0])?,
                resolve("trigram", &f[1])?,
                resolve("trigram", &f[2])?,
            ),
            parse_count("trigram", &f[3])?,
        );
    }

    let mut per_tag = vec![0u64; n];
    for tags in word_tag.values() {
        for (&id, &c) in tags {
            per_tag[id] += c;
        }
    }
    if per_tag[..] != tag_count[..n] {
        return Err(corrupt("tag", "tag counts disagree with word_tag totals"));
    }
    if tag_count[n] != tag_count[n + 1] {
        return Err(corrupt("tag", "start and end sentinel counts differ"));
    }

    Ok(CountsModel::from_parts(
        tagset, word_tag, tag_count, bigram, trigram,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_tagged_line;

    fn toy() -> CountsModel {
        let ts = Tagset::default();
        let c: Vec<_> = ["a/NN b/VM", "x/y/NN b/VM c/JJ", "एक/QC हंडी/NN"]
            .iter()
            .map(|l| parse_tagged_line(l, &ts).unwrap())
            .collect();
        CountsModel::build(&c, &ts).unwrap()
    }

    fn to_string(m: &CountsModel) -> String {
        let mut buf = Vec::new();
        save_model(m, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn round_trip() {
        let m = toy();
        let text = to_string(&m);
        assert!(text.starts_with("NGRAM-POS-MODEL v1\n[tagset]\n"));
        let back = load_model(text.as_bytes()).unwrap();
        assert_eq!(back, m);
        assert_eq!(to_string(&back), text);
    }

    #[test]
    fn truncated_file_is_corrupt() {
        let text = to_string(&toy());
        let cut = &text[..text.len() / 2];
        assert!(matches!(
            load_model(cut.as_bytes()),
            Err(ModelError::CorruptSection { .. })
        ));
        // Dropping just the final count line.
        let cut = text.trim_end().rsplit_once('\n').unwrap().0;
        assert!(matches!(
            load_model(cut.as_bytes()),
            Err(ModelError::CorruptSection { section, .. }) if section == "trigram"
        ));
    }

    #[test]
    fn version_mismatch() {
        let text = to_string(&toy()).replacen("v1", "v2", 1);
        assert!(matches!(
            load_model(text.as_bytes()),
            Err(ModelError::FormatVersionMismatch { found }) if found == "v2"
        ));
    }

    #[test]
    fn record_count_mismatch() {
        let text = to_string(&toy()).replacen("a\tNN\t1\n", "", 1);
        assert!(matches!(
            load_model(text.as_bytes()),
            Err(ModelError::CorruptSection { section, .. }) if section == "word_tag"
        ));
    }

    #[test]
    fn inconsistent_tables_rejected() {
        let text = to_string(&toy()).replacen("a\tNN\t1\n", "a\tNN\t7\n", 1);
        assert!(matches!(
            load_model(text.as_bytes()),
            Err(ModelError::CorruptSection { section, .. }) if section == "tag"
        ));
    }

    #[test]
    fn garbage_header() {
        assert!(matches!(
            load_model("hello\n".as_bytes()),
            Err(ModelError::CorruptSection { .. })
        ));
        assert!(load_model("".as_bytes()).is_err());
    }
}
