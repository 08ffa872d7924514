//! Flag and config-file resolution into a single `RunConfig`.

use clap::{Args, ValueEnum};
use fradkin::algebra_core::{AlgebraMode, BasisKind};
use fradkin::iho_discretization::{DiscretizationParams, PhaseState};
use fradkin::rational::{parse_q, q, Q};
use fradkin::representations::Target;
use fradkin::sample::DEFAULT_SEED;
use serde::Deserialize;
use thiserror::Error;

use crate::error::CliError;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("bad config file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("invalid value for {key}: {msg}")]
    Value { key: &'static str, msg: String },
    #[error("missing {0}")]
    Missing(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Plus,
    Minus,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisArg {
    Lf,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetArg {
    Su,
    U,
    Sl,
    Gl,
    Zero,
    Zeta2,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Su => Target::Su,
            TargetArg::U => Target::U,
            TargetArg::Sl => Target::Sl,
            TargetArg::Gl => Target::Gl,
            TargetArg::Zero => Target::Zero,
            TargetArg::Zeta2 => Target::Zeta2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Flags shared by every command. Rationals are written `3/2`, `-1` or `0.25`;
/// vectors are comma separated.
#[derive(Args, Debug, Default, Clone)]
pub struct Flags {
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long, global = true)]
    pub omega: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub basis: Option<BasisArg>,
    #[arg(long, global = true, value_enum)]
    pub target: Option<TargetArg>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Render rationals as decimals with this many digits (text and csv).
    #[arg(long, global = true)]
    pub precision: Option<usize>,
    #[arg(long, global = true)]
    pub h: Option<String>,
    #[arg(long = "omega-t", global = true)]
    pub omega_t: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, global = true)]
    pub steps: Option<usize>,
    #[arg(long, global = true)]
    pub draws: Option<usize>,
    /// Initial or evaluation point, positions.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Initial or evaluation point, momenta.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// TOML file with the same keys as the flags; `seed` is required there.
    #[arg(long, global = true)]
    pub config: Option<std::path::PathBuf>,
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn text(&self) -> String {
        match self {
            Num::Int(k) => k.to_string(),
            Num::Text(s) => s.clone(),
        }
    }
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum NumList {
    One(Num),
    Many(Vec<Num>),
}

impl NumList {
    fn text(&self) -> String {
        match self {
            NumList::One(x) => x.text(),
            NumList::Many(xs) => xs.iter().map(Num::text).collect::<Vec<_>>().join(","),
        }
    }
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    seed: u64,
    n: Option<usize>,
    mode: Option<ModeArg>,
    omega: Option<Num>,
    basis: Option<BasisArg>,
    target: Option<TargetArg>,
    format: Option<Format>,
    precision: Option<usize>,
    h: Option<Num>,
    #[serde(alias = "omega_t")]
    omega_t: Option<Num>,
    a: Option<NumList>,
    b: Option<NumList>,
    steps: Option<usize>,
    draws: Option<usize>,
    q: Option<NumList>,
    p: Option<NumList>,
}

impl Flags {
    /// Fills unset flags from `--config`; flags given on the command line win.
    pub fn merged(mut self) -> Result<Flags, ConfigError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        let f = parse_file(&text)?;
        self.seed = self.seed.or(Some(f.seed));
        self.n = self.n.or(f.n);
        self.mode = self.mode.or(f.mode);
        self.omega = self.omega.or(f.omega.map(|x| x.text()));
        self.basis = self.basis.or(f.basis);
        self.target = self.target.or(f.target);
        self.format = self.format.or(f.format);
        self.precision = self.precision.or(f.precision);
        self.h = self.h.or(f.h.map(|x| x.text()));
        self.omega_t = self.omega_t.or(f.omega_t.map(|x| x.text()));
        self.a = self.a.or(f.a.map(|x| x.text()));
        self.b = self.b.or(f.b.map(|x| x.text()));
        self.steps = self.steps.or(f.steps);
        self.draws = self.draws.or(f.draws);
        self.q = self.q.or(f.q.map(|x| x.text()));
        self.p = self.p.or(f.p.map(|x| x.text()));
        Ok(self)
    }
}

fn parse_file(text: &str) -> Result<FileConfig, ConfigError> {
    Ok(toml::from_str(text)?)
}

/// Resolved settings with defaults applied.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub mode: AlgebraMode,
    /// `--omega` as given, also for targets that ignore the mode.
    pub omega: Q,
    pub basis: BasisKind,
    pub target: Option<Target>,
    pub format: Format,
    pub seed: u64,
    pub precision: Option<usize>,
    pub h: Q,
    pub omega_t: Q,
    pub a: Option<Vec<Q>>,
    pub b: Option<Vec<Q>>,
    pub steps: usize,
    pub draws: usize,
    pub q: Option<Vec<Q>>,
    pub p: Option<Vec<Q>>,
    /// Whether `--n` was given explicitly; some commands infer N otherwise.
    pub n_given: bool,
}

fn rational(key: &'static str, s: &str) -> Result<Q, ConfigError> {
    parse_q(s).map_err(|e| ConfigError::Value {
        key,
        msg: e.to_string(),
    })
}

fn rationals(key: &'static str, s: &str) -> Result<Vec<Q>, ConfigError> {
    s.split(',').map(|t| rational(key, t)).collect()
}

impl RunConfig {
    pub fn resolve(f: Flags) -> Result<Self, ConfigError> {
        let f = f.merged()?;
        let omega = f
            .omega
            .as_deref()
            .map(|s| rational("omega", s))
            .transpose()?
            .unwrap_or_else(|| q(1));
        let mode = match f.mode.unwrap_or(ModeArg::Plus) {
            ModeArg::Plus => AlgebraMode::Plus(omega.clone()),
            ModeArg::Minus => AlgebraMode::Minus(omega.clone()),
            ModeArg::Zero => AlgebraMode::Zero,
        };
        mode.validate().map_err(|e| ConfigError::Value {
            key: "omega",
            msg: e.to_string(),
        })?;
        let basis = match f.basis {
            Some(BasisArg::Lf) => BasisKind::LF,
            Some(BasisArg::F) => BasisKind::F,
            None if mode == AlgebraMode::Zero => BasisKind::LF,
            None => BasisKind::F,
        };
        let opt_vec = |key, s: &Option<String>| s.as_deref().map(|s| rationals(key, s)).transpose();
        Ok(RunConfig {
            n: f.n.unwrap_or(2),
            n_given: f.n.is_some(),
            mode,
            omega,
            basis,
            target: f.target.map(Target::from),
            format: f.format.unwrap_or(Format::Text),
            seed: f.seed.unwrap_or(DEFAULT_SEED),
            precision: f.precision,
            h: f.h
                .as_deref()
                .map(|s| rational("h", s))
                .transpose()?
                .unwrap_or_else(|| q(1)),
            omega_t: f
                .omega_t
                .as_deref()
                .map(|s| rational("omega-t", s))
                .transpose()?
                .unwrap_or_else(|| q(1)),
            a: opt_vec("a", &f.a)?,
            b: opt_vec("b", &f.b)?,
            steps: f.steps.unwrap_or(10),
            draws: f.draws.unwrap_or(20),
            q: opt_vec("q", &f.q)?,
            p: opt_vec("p", &f.p)?,
        })
    }

    /// Dimension for simulation commands: `--n`, else the length of `--q`/`--p` or of
    /// a multi-valued `--a`/`--b`. Single weights broadcast.
    fn sim_n(&self) -> usize {
        if self.n_given {
            return self.n;
        }
        let weights = [&self.a, &self.b]
            .into_iter()
            .flatten()
            .map(Vec::len)
            .filter(|&k| k > 1);
        let points = [&self.q, &self.p].into_iter().flatten().map(Vec::len);
        weights.chain(points).max().unwrap_or(self.n)
    }

    /// Weights `a` default to 1/2 and `b` defaults to `a`; a single value is broadcast.
    pub fn discretization(&self) -> Result<DiscretizationParams, CliError> {
        let n = self.sim_n();
        let widen = |key: &'static str, v: &[Q]| -> Result<Vec<Q>, ConfigError> {
            match v.len() {
                1 => Ok(vec![v[0].clone(); n]),
                k if k == n => Ok(v.to_vec()),
                k => Err(ConfigError::Value {
                    key,
                    msg: format!("expected 1 or {n} values, got {k}"),
                }),
            }
        };
        let a = widen("a", self.a.as_deref().unwrap_or(&[fradkin::rational::qq(1, 2)]))?;
        let b = match &self.b {
            Some(b) => widen("b", b)?,
            None => a.clone(),
        };
        Ok(DiscretizationParams::new(self.h.clone(), self.omega_t.clone(), a, b)?)
    }

    /// `--q` and `--p` when both are given.
    pub fn state(&self, n: usize) -> Result<Option<PhaseState>, ConfigError> {
        match (&self.q, &self.p) {
            (None, None) => Ok(None),
            (Some(q), Some(p)) if q.len() == n && p.len() == n => Ok(Some(PhaseState {
                q: q.clone(),
                p: p.clone(),
            })),
            (Some(_), Some(_)) => Err(ConfigError::Value {
                key: "q/p",
                msg: format!("both need {n} entries"),
            }),
            _ => Err(ConfigError::Missing("--q and --p must be given together")),
        }
    }
}
