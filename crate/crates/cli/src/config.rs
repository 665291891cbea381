use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    /// Brute force = recurrence = closed form for every (n, k)
    Theorem1,
    /// Consecutive sines, k = 0, against the closed product
    Base,
    /// k = 1 against its closed form
    Lemma1,
    /// The shift recurrence on brute-force values
    Lemma2,
    /// Gegenbauer contiguous identity
    Cnk,
    /// Exact Gegenbauer orthogonality for integer order
    Orthogonality,
    /// Crum chain eigen-residuals, norms and the constant C
    Darboux,
    /// Energy identity for the ground-seed Darboux step
    Prop3,
    /// Closed-form norms and the norm recurrence
    Norms,
    /// Seeded random Wronskian factorization instances
    Factorization,
    /// Density series against the image oracle, symmetry, mass, Chapman-Kolmogorov
    Density,
    /// Every suite above in turn
    All,
}

impl Suite {
    pub const EVERY: [Suite; 11] = [
        Suite::Theorem1,
        Suite::Base,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Cnk,
        Suite::Orthogonality,
        Suite::Darboux,
        Suite::Prop3,
        Suite::Norms,
        Suite::Factorization,
        Suite::Density,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Base => "base",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Cnk => "cnk",
            Suite::Orthogonality => "orthogonality",
            Suite::Darboux => "darboux",
            Suite::Prop3 => "prop3",
            Suite::Norms => "norms",
            Suite::Factorization => "factorization",
            Suite::Density => "density",
            Suite::All => "all",
        }
    }

    /// Largest admissible `n_max`, if the suite has one.
    pub fn n_limit(self) -> Option<usize> {
        match self {
            Suite::Theorem1 | Suite::Base | Suite::Lemma1 | Suite::Lemma2 => {
                Some(wronskian_core::wronskian::MAX_BRUTE_FORCE)
            }
            // The norm recurrence reaches one order past the cell.
            Suite::Darboux | Suite::Prop3 | Suite::Norms => Some(wronskian_core::darboux::MAX_CHAIN_ORDER - 1),
            Suite::All => Some(wronskian_core::darboux::MAX_CHAIN_ORDER - 1),
            Suite::Cnk | Suite::Orthogonality | Suite::Factorization | Suite::Density => None,
        }
    }

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EVERY.to_vec(),
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub n_max: usize,
    /// Cells run over `0 ≤ k < k_max`.
    pub k_max: usize,
    pub tol: f64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub threads: usize,
    pub seed: u64,
    pub inject_fault: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            n_max: 6,
            k_max: 8,
            tol: 1e-10,
            output_path: None,
            format: Format::Csv,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: 0,
            inject_fault: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(limit) = self.suite.n_limit() {
            if self.n_max > limit {
                return Err(CliError::Config(format!(
                    "suite {} accepts n_max ≤ {limit}, got {}",
                    self.suite.name(),
                    self.n_max
                )));
            }
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(CliError::Config(format!("tol must be positive, got {}", self.tol)));
        }
        if self.threads == 0 {
            return Err(CliError::Config("threads must be at least 1".into()));
        }
        if self.inject_fault && !self.suite.members().contains(&Suite::Theorem1) {
            return Err(CliError::Config("fault injection is only wired into theorem1".into()));
        }
        Ok(())
    }
}

/// Settings read from a `key = value` file; `#` starts a comment.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub n_max: Option<usize>,
    pub k_max: Option<usize>,
    pub tol: Option<f64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| CliError::Config(format!("config line {}: {msg}", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            match key.as_str() {
                "n_max" => cfg.n_max = Some(parse(value).map_err(|_| bad("bad n_max"))?),
                "k_max" => cfg.k_max = Some(parse(value).map_err(|_| bad("bad k_max"))?),
                "tol" => cfg.tol = Some(parse(value).map_err(|_| bad("bad tol"))?),
                "threads" => cfg.threads = Some(parse(value).map_err(|_| bad("bad threads"))?),
                "seed" => cfg.seed = Some(parse(value).map_err(|_| bad("bad seed"))?),
                "out" => cfg.out = Some(PathBuf::from(value)),
                "format" => {
                    cfg.format = Some(Format::from_str(value, true).map_err(|_| bad("format is csv or json"))?)
                }
                other => return Err(bad(&format!("unknown key {other}"))),
            }
        }
        Ok(cfg)
    }
}

fn parse<T: FromStr>(s: &str) -> Result<T, T::Err> {
    s.parse()
}
