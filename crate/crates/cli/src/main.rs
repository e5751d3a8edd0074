use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qschubert_cli::config::word_arg;
use qschubert_cli::{run, CheckLevel, CliError, Command, DatumSource, Format, RunConfig};

/// Canonical bases of quantum Schubert cells.
#[derive(Parser, Debug)]
#[command(name = "qschubert", version)]
struct Args {
    command: Command,
    /// Preset Cartan type: A1, A2, A3, B2, C2, G2.
    #[arg(long = "type", conflicts_with = "gcm")]
    datum: Option<String>,
    /// JSON file with `rank`, `cartan_matrix` and `symmetrizers`.
    #[arg(long)]
    gcm: Option<PathBuf>,
    /// Reduced word, 1-based and comma-separated.
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    word2: Option<String>,
    /// Largest height of the degrees considered.
    #[arg(long, default_value_t = 4)]
    degree_bound: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_enum, default_value = "fast")]
    check_level: CheckLevel,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of words in one degree.
    #[arg(long, default_value_t = 2_000_000)]
    max_words: usize,
    /// Element for `expand` and `strings`, as text or JSON.
    #[arg(long)]
    element: Option<String>,
}

fn config(a: &Args) -> Result<RunConfig, CliError> {
    let datum = match (&a.datum, &a.gcm) {
        (Some(t), None) => DatumSource::Preset(t.clone()),
        (None, Some(f)) => DatumSource::File(f.clone()),
        _ => return Err(CliError::Invalid("exactly one of --type and --gcm is required".into())),
    };
    let mut cfg = RunConfig::new(datum);
    cfg.word = a.word.as_deref().map(word_arg).transpose()?;
    cfg.word2 = a.word2.as_deref().map(word_arg).transpose()?;
    cfg.degree_bound = a.degree_bound;
    cfg.format = a.format;
    cfg.check_level = a.check_level;
    cfg.seed = a.seed;
    cfg.max_words = a.max_words;
    cfg.element = a.element.clone();
    cfg.cache_dir = std::env::var_os("QSCHUBERT_CACHE_DIR").filter(|s| !s.is_empty()).map(PathBuf::from);
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = config(&args).and_then(|cfg| run(args.command, &cfg).map(|r| (r, cfg.format)));
    match result {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
