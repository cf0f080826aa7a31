//! `ngram-pos`: train, apply and evaluate frequency-count POS taggers.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ngram_pos::Method;

#[derive(Parser)]
#[command(name = "ngram-pos", version, about = "Statistical part-of-speech tagger")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count a word/TAG corpus and write a model file.
    Train {
        /// Tagged corpus, one sentence per line.
        #[arg(long)]
        corpus: PathBuf,
        /// Tagset file (one label per line); defaults to the built-in 23 tags.
        #[arg(long)]
        tagset: Option<PathBuf>,
        /// Where to write the model.
        #[arg(long = "model-out", short = 'o')]
        model_out: PathBuf,
        /// Abort on the first malformed line instead of skipping it.
        #[arg(long)]
        strict: bool,
    },
    /// Tag pre-tokenized text, one sentence per line.
    Tag {
        #[arg(long, short = 'm')]
        model: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Hmm)]
        method: MethodArg,
        /// Input file; standard input when omitted.
        #[arg(long, short = 'i')]
        input: Option<PathBuf>,
        /// Output file; standard output when omitted.
        #[arg(long, short = 'o')]
        output: Option<PathBuf>,
        #[command(flatten)]
        smoothing: SmoothingArgs,
    },
    /// Re-tag a gold corpus and report accuracy.
    Eval {
        #[arg(long, short = 'm', required_unless_present = "counts")]
        model: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Hmm)]
        method: MethodArg,
        /// Gold-standard tagged corpus.
        #[arg(long, required_unless_present = "counts")]
        gold: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = StyleArg::Plain)]
        style: StyleArg,
        /// Report accuracy for given CORRECT and TOTAL counts without tagging.
        #[arg(long, num_args = 2, value_names = ["CORRECT", "TOTAL"])]
        counts: Option<Vec<u64>>,
        #[command(flatten)]
        smoothing: SmoothingArgs,
    },
    /// Inspect model probabilities or a decode.
    ///
    /// Queries: `emit WORD TAG`, `trans PREV TAG`, `tri T2 T1 TAG`,
    /// `lex WORD`, `decode METHOD WORD...`.
    Probe {
        #[arg(long, short = 'm')]
        model: PathBuf,
        #[command(flatten)]
        smoothing: SmoothingArgs,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        query: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Unigram,
    Bigram,
    Trigram,
    Hmm,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Unigram => Method::Unigram,
            MethodArg::Bigram => Method::Bigram,
            MethodArg::Trigram => Method::Trigram,
            MethodArg::Hmm => Method::Hmm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Plain,
    Tsv,
}

#[derive(Args, Clone, Debug, Default)]
struct SmoothingArgs {
    /// Additive smoothing constant.
    #[arg(long)]
    alpha: Option<f64>,
    /// Trigram interpolation weights as `L3,L2,L1`.
    #[arg(long, value_delimiter = ',')]
    lambdas: Option<Vec<f64>>,
    /// `uniform` (open-class tags) or `single:TAG`.
    #[arg(long = "unknown-policy")]
    unknown_policy: Option<String>,
    /// Comma-separated open-class tags.
    #[arg(long = "open-class", value_delimiter = ',')]
    open_class: Option<Vec<String>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Train {
            corpus,
            tagset,
            model_out,
            strict,
        } => commands::train(&corpus, tagset.as_deref(), &model_out, strict),
        Command::Tag {
            model,
            method,
            input,
            output,
            smoothing,
        } => commands::tag(
            &model,
            method.into(),
            input.as_deref(),
            output.as_deref(),
            &smoothing,
        ),
        Command::Eval {
            model,
            method,
            gold,
            style,
            counts,
            smoothing,
        } => {
            let style = match style {
                StyleArg::Plain => ngram_pos::ReportStyle::Plain,
                StyleArg::Tsv => ngram_pos::ReportStyle::Tsv,
            };
            match counts {
                Some(c) => commands::eval_counts(c[0], c[1], style),
                None => commands::eval(
                    model.as_deref().expect("clap enforces --model"),
                    method.into(),
                    gold.as_deref().expect("clap enforces --gold"),
                    style,
                    &smoothing,
                ),
            }
        }
        Command::Probe {
            model,
            smoothing,
            query,
        } => commands::probe(&model, &smoothing, &query),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
