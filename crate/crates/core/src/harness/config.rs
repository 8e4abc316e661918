use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::HarnessError;

/// Environment variable that may supply the default seed.
pub const SEED_ENV_VAR: &str = "ZENO_LAB_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Experiment {
    A1Oracle,
    InverseZeno,
    Eq1Scaling,
    Dilation,
    Polarizer,
    TwoLevel,
}

impl Experiment {
    pub const ALL: [Experiment; 6] = [
        Experiment::A1Oracle,
        Experiment::InverseZeno,
        Experiment::Eq1Scaling,
        Experiment::Dilation,
        Experiment::Polarizer,
        Experiment::TwoLevel,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Experiment::A1Oracle => "a1-oracle",
            Experiment::InverseZeno => "inverse-zeno",
            Experiment::Eq1Scaling => "eq1-scaling",
            Experiment::Dilation => "dilation",
            Experiment::Polarizer => "polarizer",
            Experiment::TwoLevel => "two-level",
        }
    }

    fn default_n_list(self) -> Vec<usize> {
        match self {
            Experiment::A1Oracle => vec![1000],
            Experiment::InverseZeno => powers_of_two(3, 10),
            Experiment::Eq1Scaling => powers_of_two(2, 12),
            Experiment::Dilation => vec![200],
            Experiment::Polarizer => vec![1, 2, 3, 5, 10, 20, 50, 100, 200, 512],
            Experiment::TwoLevel => powers_of_two(0, 8),
        }
    }
}

fn powers_of_two(lo: u32, hi: u32) -> Vec<usize> {
    (lo..=hi).map(|k| 1usize << k).collect()
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Experiment {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Experiment::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| HarnessError::ConfigInvalid(format!("unknown experiment '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianKind {
    Zero,
    PauliX,
    /// GUE sample rescaled to operator norm 1.
    RandomNormalized,
}

impl FromStr for HamiltonianKind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero" => Ok(HamiltonianKind::Zero),
            "pauli-x" => Ok(HamiltonianKind::PauliX),
            "random-normalized" => Ok(HamiltonianKind::RandomNormalized),
            _ => Err(HarnessError::ConfigInvalid(format!("unknown hamiltonian '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(HarnessError::ConfigInvalid(format!("unknown format '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub dim: usize,
    pub n_list: Vec<usize>,
    pub seed: u64,
    pub lambda: f64,
    pub hamiltonian: HamiltonianKind,
    pub format: Format,
    /// `None` writes to standard output.
    pub out: Option<PathBuf>,
}

/// One source of settings. Unset fields fall through to the next layer.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigLayer {
    pub experiment: Option<Experiment>,
    pub dim: Option<usize>,
    pub n_list: Option<Vec<usize>>,
    pub seed: Option<u64>,
    pub lambda: Option<f64>,
    pub hamiltonian: Option<HamiltonianKind>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

fn invalid(msg: String) -> HarnessError {
    HarnessError::ConfigInvalid(msg)
}

pub fn parse_n_list(s: &str) -> Result<Vec<usize>, HarnessError> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| invalid(format!("bad N value '{x}' in n-list"))))
        .collect()
}

impl ConfigLayer {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<Self, HarnessError> {
        let mut layer = ConfigLayer::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| invalid(format!("line {}: expected 'key = value'", lineno + 1)))?;
            layer.set(key.trim(), value.trim())?;
        }
        Ok(layer)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), HarnessError> {
        let key = key.replace('_', "-");
        match key.as_str() {
            "experiment" => self.experiment = Some(value.parse()?),
            "dim" => self.dim = Some(value.parse().map_err(|_| invalid(format!("bad dim '{value}'")))?),
            "n-list" => self.n_list = Some(parse_n_list(value)?),
            "seed" => self.seed = Some(value.parse().map_err(|_| invalid(format!("bad seed '{value}'")))?),
            "lambda" => self.lambda = Some(value.parse().map_err(|_| invalid(format!("bad lambda '{value}'")))?),
            "hamiltonian" => self.hamiltonian = Some(value.parse()?),
            "format" => self.format = Some(value.parse()?),
            "out" => self.out = Some(PathBuf::from(value)),
            _ => return Err(invalid(format!("unknown config key '{key}'"))),
        }
        Ok(())
    }

    /// Fields of `self` win over `lower`.
    pub fn over(self, lower: ConfigLayer) -> ConfigLayer {
        ConfigLayer {
            experiment: self.experiment.or(lower.experiment),
            dim: self.dim.or(lower.dim),
            n_list: self.n_list.or(lower.n_list),
            seed: self.seed.or(lower.seed),
            lambda: self.lambda.or(lower.lambda),
            hamiltonian: self.hamiltonian.or(lower.hamiltonian),
            format: self.format.or(lower.format),
            out: self.out.or(lower.out),
        }
    }
}

/// Reads [`SEED_ENV_VAR`]; unset means no default.
pub fn env_seed() -> Result<Option<u64>, HarnessError> {
    match std::env::var(SEED_ENV_VAR) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| invalid(format!("{SEED_ENV_VAR}='{v}' is not a u64"))),
        Err(_) => Ok(None),
    }
}

impl ExperimentConfig {
    /// Flags over config file over built-in defaults; `env_seed` only replaces
    /// the built-in default seed.
    pub fn resolve(flags: ConfigLayer, file: Option<ConfigLayer>, env_seed: Option<u64>) -> Result<Self, HarnessError> {
        let merged = flags.over(file.unwrap_or_default());
        let experiment = merged.experiment.ok_or_else(|| invalid("no experiment given".into()))?;
        let config = ExperimentConfig {
            experiment,
            dim: merged.dim.unwrap_or(2),
            n_list: merged.n_list.unwrap_or_else(|| experiment.default_n_list()),
            seed: merged.seed.or(env_seed).unwrap_or(0),
            lambda: merged.lambda.unwrap_or(1.0),
            hamiltonian: merged.hamiltonian.unwrap_or(HamiltonianKind::PauliX),
            format: merged.format.unwrap_or(Format::Csv),
            out: merged.out,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n_list.is_empty() {
            return Err(invalid("n-list is empty".into()));
        }
        if self.n_list[0] == 0 || self.n_list.windows(2).any(|w| w[1] <= w[0]) {
            return Err(invalid("n-list must be strictly increasing positive integers".into()));
        }
        let min_dim = if self.experiment == Experiment::A1Oracle { 1 } else { 2 };
        if self.dim < min_dim {
            return Err(invalid(format!("{} needs dim >= {min_dim}", self.experiment)));
        }
        let needs_qubit = matches!(self.experiment, Experiment::Polarizer | Experiment::TwoLevel)
            || (self.hamiltonian == HamiltonianKind::PauliX && matches!(self.experiment, Experiment::InverseZeno | Experiment::Eq1Scaling));
        if needs_qubit && self.dim != 2 {
            return Err(invalid(format!("{} with this hamiltonian requires dim = 2, got {}", self.experiment, self.dim)));
        }
        if self.experiment == Experiment::TwoLevel && !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return Err(invalid(format!("lambda must be positive, got {}", self.lambda)));
        }
        Ok(())
    }
}
