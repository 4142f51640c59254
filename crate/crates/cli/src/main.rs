//! Command-line front end: stem text streams to TSV, validate suffix
//! lexicons, evaluate against gold files and emit corpus statistics.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 data/config validation failure.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gujstem::eval::{corpus_stats, evaluate, parse_gold, CorpusStats, EvalReport};
use gujstem::lexicon::{LexiconLoadError, SuffixLexicon, SuffixSource};
use gujstem::script::tokenize;
use gujstem::stemmer::{Guard, StemMode, StemPolicy};

const DEFAULT_LEXICON: &str = "data/gujarati_suffixes.txt";

#[derive(Parser)]
#[command(name = "gujstem", version, about = "Suffix-stripping stemmer for Gujarati text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stem Gujarati text to `word<TAB>stem<TAB>suffixes` lines
    Stem(StemArgs),
    /// Score the stemmer against a gold `word<TAB>stem` file
    Eval(EvalArgs),
    /// Summarize a corpus: word counts, stem groups, length range
    Stats(StatsArgs),
    /// Suffix lexicon maintenance
    Lexicon {
        #[command(subcommand)]
        command: LexiconCommand,
    },
}

#[derive(Subcommand)]
enum LexiconCommand {
    /// Validate a lexicon file and summarize its contents
    Check {
        /// Lexicon file to check
        #[arg(default_value = DEFAULT_LEXICON, value_name = "PATH")]
        path: PathBuf,
    },
}

#[derive(Args)]
struct PolicyArgs {
    /// Suffix lexicon file
    #[arg(long, default_value = DEFAULT_LEXICON, value_name = "PATH")]
    lexicon: PathBuf,
    /// Stripping mode
    #[arg(long, value_enum, default_value_t = ModeArg::Single)]
    mode: ModeArg,
    /// Guard a stem must pass before its suffix is removed
    #[arg(long, value_enum, default_value_t = GuardArg::Base)]
    guard: GuardArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Remove at most one (compound) suffix
    Single,
    /// Keep stripping until no suffix matches
    Iterative,
}

#[derive(Clone, Copy, ValueEnum)]
enum GuardArg {
    /// Stem must keep a consonant or independent vowel
    Base,
    /// Stem only has to be non-empty
    Nonempty,
}

#[derive(Args)]
struct StemArgs {
    #[command(flatten)]
    policy: PolicyArgs,
    /// Input file (standard input when omitted)
    input: Option<PathBuf>,
    /// Output file (standard output when omitted)
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    policy: PolicyArgs,
    /// Gold TSV file: one `word<TAB>stem` pair per line
    gold: PathBuf,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Output file (standard output when omitted)
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    policy: PolicyArgs,
    /// Input file (standard input when omitted)
    input: Option<PathBuf>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Output file (standard output when omitted)
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

/// Failures mapped onto the exit-code contract.
enum AppError {
    Io(String),
    Data(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Io(_) => 1,
            AppError::Data(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Io(m) | AppError::Data(m) => m,
        }
    }
}

fn io_err(context: &str, err: io::Error) -> AppError {
    AppError::Io(format!("{context}: {err}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stem(args) => cmd_stem(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Lexicon {
            command: LexiconCommand::Check { path },
        } => cmd_lexicon_check(path),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("gujstem: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn load_policy(args: &PolicyArgs) -> Result<StemPolicy, AppError> {
    let lexicon = SuffixLexicon::load(&args.lexicon).map_err(|err| {
        let context = args.lexicon.display();
        match err {
            LexiconLoadError::Io(e) => AppError::Io(format!("{context}: {e}")),
            LexiconLoadError::Parse(e) => AppError::Data(format!("{context}: {e}")),
        }
    })?;
    let mode = match args.mode {
        ModeArg::Single => StemMode::SinglePass,
        ModeArg::Iterative => StemMode::Iterative,
    };
    let guard = match args.guard {
        GuardArg::Base => Guard::OrthographicBase,
        GuardArg::Nonempty => Guard::NonEmptyOnly,
    };
    Ok(StemPolicy::new(lexicon, mode, guard))
}

fn open_input(path: &Option<PathBuf>) -> Result<Box<dyn BufRead>, AppError> {
    match path {
        Some(p) => {
            let file = File::open(p).map_err(|e| io_err(&p.display().to_string(), e))?;
            Ok(Box::new(BufReader::new(file)))
        }
        None => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, AppError> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| io_err(&p.display().to_string(), e))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

fn read_to_string(path: &Option<PathBuf>) -> Result<String, AppError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            File::open(p)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(|e| io_err(&p.display().to_string(), e))?;
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| io_err("standard input", e))?;
        }
    }
    Ok(text)
}

/// Stem a text stream line by line; memory use is bounded by the longest
/// line, not the stream size.
fn cmd_stem(args: StemArgs) -> Result<(), AppError> {
    let policy = load_policy(&args.policy)?;
    let reader = open_input(&args.input)?;
    let mut writer = open_output(&args.output)?;
    for line in reader.lines() {
        let line = line.map_err(|e| io_err("reading input", e))?;
        for word in tokenize(&line) {
            let result = policy.stem(&word);
            let suffixes: Vec<&str> = result.removed().iter().map(|e| e.text()).collect();
            writeln!(writer, "{}\t{}\t{}", word, result.stem(), suffixes.join("+"))
                .map_err(|e| io_err("writing output", e))?;
        }
    }
    writer.flush().map_err(|e| io_err("writing output", e))
}

fn cmd_eval(args: EvalArgs) -> Result<(), AppError> {
    let policy = load_policy(&args.policy)?;
    let source = std::fs::read_to_string(&args.gold)
        .map_err(|e| io_err(&args.gold.display().to_string(), e))?;
    let pairs = parse_gold(&source)
        .map_err(|e| AppError::Data(format!("{}: {e}", args.gold.display())))?;
    let report = evaluate(&policy, &pairs)
        .map_err(|e| AppError::Data(format!("{}: {e}", args.gold.display())))?;
    let mut writer = open_output(&args.output)?;
    if args.json {
        write_eval_json(&mut writer, &report)
    } else {
        write_eval_text(&mut writer, &report)
    }
    .map_err(|e| io_err("writing output", e))?;
    writer.flush().map_err(|e| io_err("writing output", e))
}

fn write_eval_text(w: &mut dyn Write, report: &EvalReport) -> io::Result<()> {
    writeln!(w, "total: {}", report.total())?;
    writeln!(w, "correct: {}", report.correct())?;
    writeln!(w, "over-stemmed: {}", report.over_stemmed())?;
    writeln!(w, "under-stemmed: {}", report.under_stemmed())?;
    writeln!(w, "other: {}", report.other())?;
    writeln!(w, "accuracy: {}%", report.accuracy_percent())
}

fn write_eval_json(w: &mut dyn Write, report: &EvalReport) -> io::Result<()> {
    let value = json!({
        "total": report.total(),
        "correct": report.correct(),
        "over_stemmed": report.over_stemmed(),
        "under_stemmed": report.under_stemmed(),
        "other": report.other(),
        "accuracy_percent": report.accuracy_percent(),
    });
    writeln!(w, "{value}")
}

fn cmd_stats(args: StatsArgs) -> Result<(), AppError> {
    let policy = load_policy(&args.policy)?;
    let text = read_to_string(&args.input)?;
    let words = tokenize(&text);
    let stats = corpus_stats(&policy, &words);
    let mut writer = open_output(&args.output)?;
    if args.json {
        write_stats_json(&mut writer, &stats)
    } else {
        write_stats_text(&mut writer, &stats)
    }
    .map_err(|e| io_err("writing output", e))?;
    writer.flush().map_err(|e| io_err("writing output", e))
}

fn write_stats_text(w: &mut dyn Write, stats: &CorpusStats) -> io::Result<()> {
    writeln!(w, "total words: {}", stats.total_words)?;
    writeln!(w, "unique words: {}", stats.unique_words)?;
    writeln!(w, "stem groups (multiple members): {}", stats.multi_member_groups)?;
    writeln!(w, "stem groups (single member): {}", stats.single_member_groups)?;
    writeln!(w, "min word length: {}", stats.min_len)?;
    writeln!(w, "max word length: {}", stats.max_len)
}

fn write_stats_json(w: &mut dyn Write, stats: &CorpusStats) -> io::Result<()> {
    let value = json!({
        "total_words": stats.total_words,
        "unique_words": stats.unique_words,
        "multi_member_groups": stats.multi_member_groups,
        "single_member_groups": stats.single_member_groups,
        "min_len": stats.min_len,
        "max_len": stats.max_len,
    });
    writeln!(w, "{value}")
}

fn cmd_lexicon_check(path: PathBuf) -> Result<(), AppError> {
    let lexicon = SuffixLexicon::load(&path).map_err(|err| {
        let context = path.display();
        match err {
            LexiconLoadError::Io(e) => AppError::Io(format!("{context}: {e}")),
            LexiconLoadError::Parse(e) => AppError::Data(format!("{context}: {e}")),
        }
    })?;
    println!("entries: {}", lexicon.len());
    println!("max suffix length: {}", lexicon.max_suffix_len());
    for source in SuffixSource::ALL {
        let count = lexicon
            .entries()
            .iter()
            .filter(|e| e.source() == source)
            .count();
        println!("source {source}: {count}");
    }
    Ok(())
}
