use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::CliError;

/// Environment variable capping the level `k` of every command.
pub const MAX_DEGREE_VAR: &str = "NILCOH_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Resolved settings for one invocation: flags override the config file,
/// which overrides the defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub q: usize,
    pub k: usize,
    pub seed: u64,
    pub samples: usize,
    pub max_word_len: usize,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            q: 2,
            k: 3,
            seed: 0,
            samples: 100,
            max_word_len: nilcoh::sample::DEFAULT_MAX_WORD_LEN,
            output: OutputFormat::Text,
        }
    }
}

/// Keys accepted in a TOML config file; the same names as the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub q: Option<usize>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    #[serde(alias = "max_word_len")]
    pub max_word_len: Option<usize>,
    pub output: Option<OutputFormat>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid config {}: {}", path.display(), e.message())))
    }
}

/// Flag values before merging; `None` means "not given".
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub q: Option<usize>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub max_word_len: Option<usize>,
    pub json: bool,
}

impl RunConfig {
    pub fn resolve(file: &FileConfig, flags: &Overrides) -> Result<Self, CliError> {
        let d = RunConfig::default();
        let cfg = RunConfig {
            q: flags.q.or(file.q).unwrap_or(d.q),
            k: flags.k.or(file.k).unwrap_or(d.k),
            seed: flags.seed.or(file.seed).unwrap_or(d.seed),
            samples: flags.samples.or(file.samples).unwrap_or(d.samples),
            max_word_len: flags.max_word_len.or(file.max_word_len).unwrap_or(d.max_word_len),
            output: if flags.json {
                OutputFormat::Json
            } else {
                file.output.unwrap_or(d.output)
            },
        };
        if !(1..=255).contains(&cfg.q) {
            return Err(CliError::Usage(format!("--q must lie in 1..=255, got {}", cfg.q)));
        }
        if cfg.k == 0 {
            return Err(CliError::Usage("--k must be at least 1".into()));
        }
        let cap = max_degree()?;
        if cfg.k > cap {
            return Err(CliError::Usage(format!(
                "--k {} exceeds {MAX_DEGREE_VAR} = {cap}",
                cfg.k
            )));
        }
        Ok(cfg)
    }

    pub fn json(&self) -> bool {
        self.output == OutputFormat::Json
    }

    /// Rejects levels below `min` for commands that need them.
    pub fn require_k(&self, min: usize) -> Result<(), CliError> {
        if self.k < min {
            return Err(CliError::Usage(format!(
                "--k must be at least {min} for this command, got {}",
                self.k
            )));
        }
        Ok(())
    }
}

pub fn max_degree() -> Result<usize, CliError> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("{MAX_DEGREE_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: FileConfig = toml::from_str("q = 3\nk = 4\nseed = 9\nmax-word-len = 5\noutput = \"json\"").unwrap();
        let flags = Overrides {
            k: Some(2),
            ..Default::default()
        };
        let cfg = RunConfig::resolve(&file, &flags).unwrap();
        assert_eq!((cfg.q, cfg.k, cfg.seed, cfg.max_word_len), (3, 2, 9, 5));
        assert!(cfg.json());
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(toml::from_str::<FileConfig>("depth = 3").is_err());
    }
}
