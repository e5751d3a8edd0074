use std::path::PathBuf;
use std::sync::Arc;

use qschubert_freealg::{Algebra, Limits};
use qschubert_rootdata::{parse_word, RootDatum};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckLevel {
    Fast,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatumSource {
    Preset(String),
    File(PathBuf),
}

/// Everything a command needs. Words are 0-based here.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub datum: DatumSource,
    pub word: Option<Vec<usize>>,
    pub word2: Option<Vec<usize>>,
    pub degree_bound: i64,
    pub format: Format,
    pub check_level: CheckLevel,
    pub seed: u64,
    pub max_words: usize,
    pub element: Option<String>,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(datum: DatumSource) -> Self {
        RunConfig {
            datum,
            word: None,
            word2: None,
            degree_bound: 4,
            format: Format::Text,
            check_level: CheckLevel::Fast,
            seed: 0,
            max_words: Limits::default().max_words,
            element: None,
            cache_dir: None,
        }
    }

    pub fn datum(&self) -> Result<RootDatum, CliError> {
        match &self.datum {
            DatumSource::Preset(p) => Ok(RootDatum::preset(p)?),
            DatumSource::File(f) => {
                let s = std::fs::read_to_string(f).map_err(|e| CliError::Invalid(format!("{}: {e}", f.display())))?;
                Ok(RootDatum::from_json(&s)?)
            }
        }
    }

    /// The algebra with the word-count guard; heights are bounded by it alone.
    pub fn algebra(&self) -> Result<Arc<Algebra>, CliError> {
        if self.degree_bound < 1 {
            return Err(CliError::Invalid("--degree-bound must be at least 1".into()));
        }
        let lim = Limits { max_height: 64, max_words: self.max_words };
        Ok(Arc::new(Algebra::new(self.datum()?).with_limits(lim)))
    }

    pub fn word(&self) -> Result<&[usize], CliError> {
        self.word.as_deref().ok_or_else(|| CliError::Invalid("--word is required".into()))
    }

    pub fn word2(&self) -> Result<&[usize], CliError> {
        self.word2.as_deref().ok_or_else(|| CliError::Invalid("--word2 is required".into()))
    }
}

/// `1,2,1` to 0-based letters.
pub fn word_arg(s: &str) -> Result<Vec<usize>, CliError> {
    Ok(parse_word(s)?)
}
