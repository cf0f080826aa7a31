use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use ngram_pos::{
    evaluate, load_corpus, load_model, save_model, tokenize_raw_line, CountsModel,
    EvaluationReport, Method, ReportStyle, Sentence, SmoothingConfig, Tag, Tagger, TaggerConfig,
    Tagset, UnknownPolicy,
};

use crate::SmoothingArgs;

fn open(path: &Path) -> Result<BufReader<File>> {
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(f))
}

fn read_model(path: &Path) -> Result<CountsModel> {
    load_model(open(path)?).with_context(|| format!("cannot load model {}", path.display()))
}

/// The model's default smoothing with command-line overrides applied.
fn smoothing_for(model: &CountsModel, args: &SmoothingArgs) -> Result<SmoothingConfig> {
    let tagset = model.tagset();
    let mut s = SmoothingConfig::default_for(tagset);
    if let Some(a) = args.alpha {
        s.alpha = a;
    }
    if let Some(l) = &args.lambdas {
        s.lambdas = match l.as_slice() {
            [l3, l2, l1] => [*l3, *l2, *l1],
            _ => bail!("--lambdas takes exactly three comma-separated weights"),
        };
    }
    if let Some(open) = &args.open_class {
        s.open_class_tags = open.iter().map(Tag::new).collect::<Result<_, _>>()?;
    }
    if let Some(policy) = &args.unknown_policy {
        s.unknown_policy = match policy.as_str() {
            "uniform" | "uniform-open-class" => UnknownPolicy::UniformOpenClass,
            other => {
                let label = other.strip_prefix("single:").unwrap_or(other);
                UnknownPolicy::SingleTag(Tag::new(label)?)
            }
        };
    }
    s.validate(tagset)?;
    Ok(s)
}

pub fn train(corpus: &Path, tagset: Option<&Path>, model_out: &Path, strict: bool) -> Result<ExitCode> {
    let tagset = match tagset {
        Some(p) => Tagset::from_reader(open(p)?)
            .with_context(|| format!("cannot read tagset {}", p.display()))?,
        None => Tagset::default(),
    };
    let loaded = load_corpus(open(corpus)?, &tagset, strict)
        .with_context(|| format!("cannot read corpus {}", corpus.display()))?;
    for (line, msg) in &loaded.skipped {
        eprintln!("skipped line {line}: {msg}");
    }
    if loaded.sentences.is_empty() {
        eprintln!("error: corpus {} contains no sentences", corpus.display());
        return Ok(ExitCode::from(2));
    }
    let model = CountsModel::build(&loaded.sentences, &tagset)?;
    let out = File::create(model_out)
        .with_context(|| format!("cannot create {}", model_out.display()))?;
    save_model(&model, BufWriter::new(out))?;

    let seen_tags = tagset
        .iter()
        .filter(|t| model.tag_count(t.as_str()).unwrap_or(0) > 0)
        .count();
    println!("sentences: {}", loaded.sentences.len());
    println!("tokens: {}", model.total_tokens());
    println!("vocabulary: {}", model.vocabulary_size());
    println!("tags: {seen_tags}/{}", tagset.len());
    println!("skipped: {}", loaded.skip_count());
    Ok(ExitCode::SUCCESS)
}

pub fn tag(
    model_path: &Path,
    method: Method,
    input: Option<&Path>,
    output: Option<&Path>,
    args: &SmoothingArgs,
) -> Result<ExitCode> {
    let model = read_model(model_path)?;
    let tagger = Tagger::new(&model, TaggerConfig::new(method, smoothing_for(&model, args)?))?;

    let reader: Box<dyn BufRead> = match input {
        Some(p) => Box::new(open(p)?),
        None => Box::new(io::stdin().lock()),
    };
    let writer: Box<dyn Write> = match output {
        Some(p) => Box::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut writer = BufWriter::new(writer);

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.is_empty() {
            writeln!(writer)?;
            continue;
        }
        match tokenize_raw_line(line) {
            Ok(sentence) => writeln!(writer, "{}", tagger.tag(&sentence)?)?,
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                writeln!(writer)?;
            }
        }
    }
    writer.flush()?;
    Ok(ExitCode::SUCCESS)
}

pub fn eval(
    model_path: &Path,
    method: Method,
    gold_path: &Path,
    style: ReportStyle,
    args: &SmoothingArgs,
) -> Result<ExitCode> {
    let model = read_model(model_path)?;
    let gold = load_corpus(open(gold_path)?, model.tagset(), true)
        .with_context(|| format!("cannot read gold corpus {}", gold_path.display()))?
        .sentences;
    let tagger = Tagger::new(&model, TaggerConfig::new(method, smoothing_for(&model, args)?))?;
    let inputs: Vec<Sentence> = gold.iter().map(|s| s.to_sentence()).collect();
    let predicted = tagger.tag_all(&inputs)?;
    let report = evaluate(&gold, &predicted)?;
    print!("{}", report.format(style));
    Ok(ExitCode::SUCCESS)
}

pub fn eval_counts(correct: u64, total: u64, style: ReportStyle) -> Result<ExitCode> {
    if correct > total {
        bail!("correct count {correct} exceeds total {total}");
    }
    print!("{}", EvaluationReport::from_counts(correct, total).format(style));
    Ok(ExitCode::SUCCESS)
}

fn fmt_p(p: f64) -> String {
    format!("{p:?}")
}

pub fn probe(model_path: &Path, args: &SmoothingArgs, query: &[String]) -> Result<ExitCode> {
    let model = read_model(model_path)?;
    let smoothed = smoothing_for(&model, args)?;
    let raw = SmoothingConfig {
        alpha: 0.0,
        lambdas: [1.0, 0.0, 0.0],
        ..smoothed.clone()
    };
    let q: Vec<&str> = query.iter().map(String::as_str).collect();
    let mut out = io::stdout().lock();
    match q.as_slice() {
        ["emit", word, tag] => {
            let s = model.p_word_given_tag(word, tag, &smoothed)?;
            let r = model.p_word_given_tag(word, tag, &raw)?;
            writeln!(out, "P({word} | {tag}) = {}", fmt_p(s))?;
            writeln!(out, "raw: {}", fmt_p(r))?;
        }
        ["trans", prev, tag] => {
            let s = model.p_bigram_transition(prev, tag, &smoothed)?;
            let r = model.p_bigram_transition(prev, tag, &raw)?;
            writeln!(out, "P({tag} | {prev}) = {}", fmt_p(s))?;
            writeln!(out, "raw: {}", fmt_p(r))?;
        }
        ["tri", t2, t1, tag] => {
            let s = model.p_trigram_transition(t2, t1, tag, &smoothed)?;
            let r = model.p_trigram_transition(t2, t1, tag, &raw)?;
            writeln!(out, "P({tag} | {t2}, {t1}) = {}", fmt_p(s))?;
            writeln!(out, "raw: {}", fmt_p(r))?;
        }
        ["lex", word] => {
            if !model.contains_word(word) {
                bail!("word {word:?} is not in the vocabulary");
            }
            let parts: Vec<String> = model
                .tags_of_word(word)
                .into_iter()
                .map(|(t, _)| Ok(format!("{t} {}", fmt_p(model.p_tag_given_word(word, t.as_str())?))))
                .collect::<Result<_>>()?;
            writeln!(out, "{}", parts.join(" / "))?;
        }
        ["decode", method, words @ ..] if !words.is_empty() => {
            let method: Method = method.parse().map_err(|e: String| anyhow!(e))?;
            let sentence =
                Sentence::new(words.iter().copied()).ok_or_else(|| anyhow!("invalid sentence"))?;
            let tagger = Tagger::new(&model, TaggerConfig::new(method, smoothed))?;
            let (tagged, trace) = tagger.trace(&sentence)?;
            writeln!(out, "{tagged}")?;
            writeln!(out, "path score: {:.6}", trace.path_score)?;
            write!(out, "pos\tword")?;
            for (t, _) in &trace.candidates[0] {
                write!(out, "\t{t}")?;
            }
            writeln!(out)?;
            for (i, (row, word)) in trace.candidates.iter().zip(sentence.words()).enumerate() {
                write!(out, "{}\t{word}", i + 1)?;
                for (_, score) in row {
                    write!(out, "\t{score:.4}")?;
                }
                writeln!(out)?;
            }
        }
        _ => bail!(
            "unknown query {:?}; expected emit WORD TAG | trans PREV TAG | tri T2 T1 TAG | lex WORD | decode METHOD WORD...",
            query.join(" ")
        ),
    }
    Ok(ExitCode::SUCCESS)
}
