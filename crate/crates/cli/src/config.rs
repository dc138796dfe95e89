//! Command-line configuration and its validation.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde::{Serialize, Serializer};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Oscillator eigenfunctions χ_n(x) on a grid
    Basis,
    /// Boosted wavefunction on a (z, t) grid, direct and from the series
    BoostTable,
    /// Expansion coefficients of a boosted state, by quadrature and in closed form
    Decompose,
    /// Overlap with the rest-frame state against the contraction law
    OverlapTable,
    /// Entropy and purity of the reduced density matrix along a rapidity or velocity grid
    EntropyCurve,
    /// Ground-state Wigner function on a (z, p) grid
    WignerGrid,
    /// Parton (position) and momentum distributions of the boosted ground state
    Parton,
    /// Breit-frame form factor along a momentum grid
    FormfactorCurve,
    /// Photon-number amplitudes of the two-mode squeezed state
    TwoMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// `min:max:steps`, with `steps ≥ 2` points including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, steps: usize) -> Self {
        GridSpec { min, max, steps }
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.max
                } else {
                    self.min + (self.max - self.min) * (i as f64 / last)
                }
            })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, steps] = parts.as_slice() else {
            return Err(format!("expected min:max:steps, got {s:?}"));
        };
        let min: f64 = min.parse().map_err(|e| format!("bad grid minimum {min:?}: {e}"))?;
        let max: f64 = max.parse().map_err(|e| format!("bad grid maximum {max:?}: {e}"))?;
        let steps: usize = steps.parse().map_err(|e| format!("bad grid step count {steps:?}: {e}"))?;
        if !(min.is_finite() && max.is_finite()) {
            return Err(format!("grid bounds must be finite, got {s:?}"));
        }
        if steps < 2 {
            return Err(format!("grid needs at least 2 steps, got {steps}"));
        }
        if max <= min {
            return Err(format!("grid maximum must exceed minimum, got {s:?}"));
        }
        Ok(GridSpec { min, max, steps })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.min, self.max, self.steps)
    }
}

impl Serialize for GridSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A single mode index `n` or an inclusive range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeRange {
    pub first: usize,
    pub last: usize,
}

impl ModeRange {
    pub fn single(n: usize) -> Self {
        ModeRange { first: n, last: n }
    }

    pub fn is_single(&self) -> bool {
        self.first == self.last
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.first..=self.last
    }
}

impl FromStr for ModeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("bad mode index {x:?}: {e}"));
        match s.split_once("..") {
            None => parse(s).map(ModeRange::single),
            Some((a, b)) => {
                let (first, last) = (parse(a)?, parse(b.trim_start_matches('='))?);
                if last < first {
                    return Err(format!("empty mode range {s:?}"));
                }
                Ok(ModeRange { first, last })
            }
        }
    }
}

impl fmt::Display for ModeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.first)
        } else {
            write!(f, "{}..{}", self.first, self.last)
        }
    }
}

impl Serialize for ModeRange {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Tables of boosted oscillator states, density matrices, squeezed photon
/// states and form factors.
#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "lorentz-harmonics", version, allow_negative_numbers = true)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Mode index, or an inclusive range `a..b`
    #[arg(long)]
    pub n: Option<ModeRange>,

    /// Rapidity of the boost
    #[arg(long, conflicts_with_all = ["beta", "eta_grid", "beta_grid"])]
    pub eta: Option<f64>,

    /// Velocity v/c of the boost
    #[arg(long, conflicts_with_all = ["eta_grid", "beta_grid"])]
    pub beta: Option<f64>,

    /// Rapidity grid `min:max:steps`
    #[arg(long, allow_hyphen_values = true, conflicts_with = "beta_grid")]
    pub eta_grid: Option<GridSpec>,

    /// Velocity grid `min:max:steps`
    #[arg(long, allow_hyphen_values = true)]
    pub beta_grid: Option<GridSpec>,

    /// Highest mode index kept by numerical decomposition
    #[arg(long)]
    pub kmax: Option<usize>,

    /// Tail-probability tolerance for truncated series, in (0, 1)
    #[arg(long)]
    pub tol: Option<f64>,

    /// Gauss–Hermite order of the quadrature oracle
    #[arg(long, env = "OSC_QUAD_ORDER")]
    pub quad_order: Option<usize>,

    /// Coordinate grid `min:max:steps`, used for both axes of 2D tables
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,

    /// Momentum grid `min:max:steps`
    #[arg(long, allow_hyphen_values = true)]
    pub p_grid: Option<GridSpec>,

    /// Hadron mass
    #[arg(long, short = 'm')]
    pub mass: Option<f64>,

    /// Add quadrature columns where the closed form is the default
    #[arg(long)]
    pub numeric: bool,

    /// Output file; a `<output>.meta.json` sidecar is written next to it
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_KMAX: usize = 40;
pub const DEFAULT_MASS: f64 = 1.0;

/// Rapidity or velocity axis of a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Eta,
    Beta,
}

impl RunConfig {
    /// Flags that `command` reads, besides `--output` and `--format`.
    fn accepted(&self) -> &'static [&'static str] {
        use Command::*;
        match self.command {
            Basis => &["n", "grid"],
            BoostTable => &["n", "eta", "beta", "grid", "tol"],
            Decompose => &["n", "eta", "beta", "kmax", "tol", "quad-order"],
            OverlapTable => &["n", "eta", "beta", "quad-order"],
            EntropyCurve => &["n", "eta-grid", "beta-grid", "tol"],
            WignerGrid => &["eta", "beta", "grid", "numeric", "quad-order"],
            Parton => &["eta", "beta", "grid", "quad-order"],
            FormfactorCurve => &["p-grid", "mass", "numeric", "quad-order"],
            TwoMode => &["n", "eta", "beta", "tol"],
        }
    }

    fn given(&self, env_quad_order: bool) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut push = |on: bool, name| {
            if on {
                out.push(name)
            }
        };
        push(self.n.is_some(), "n");
        push(self.eta.is_some(), "eta");
        push(self.beta.is_some(), "beta");
        push(self.eta_grid.is_some(), "eta-grid");
        push(self.beta_grid.is_some(), "beta-grid");
        push(self.kmax.is_some(), "kmax");
        push(self.tol.is_some(), "tol");
        push(self.quad_order.is_some() && !env_quad_order, "quad-order");
        push(self.grid.is_some(), "grid");
        push(self.p_grid.is_some(), "p-grid");
        push(self.mass.is_some(), "mass");
        push(self.numeric, "numeric");
        out
    }

    /// Reject flag combinations the command does not use and values outside
    /// their domains. `env_quad_order` marks a quadrature order that came from
    /// the environment rather than the command line; it is accepted silently.
    pub fn validate(&self, env_quad_order: bool) -> Result<(), CliError> {
        let accepted = self.accepted();
        for flag in self.given(env_quad_order) {
            if !accepted.contains(&flag) {
                return Err(CliError::Usage(format!(
                    "--{flag} is not used by {}",
                    self.command.to_possible_value().unwrap().get_name()
                )));
            }
        }
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(CliError::Usage(format!("--tol must lie in (0, 1), got {tol}")));
            }
        }
        if let Some(n) = self.n {
            let ranged = matches!(self.command, Command::Basis | Command::OverlapTable | Command::EntropyCurve);
            if !ranged && !n.is_single() {
                return Err(CliError::Usage(format!("--n takes a single index here, got {n}")));
            }
        }
        if let Some(order) = self.quad_order {
            if order == 0 {
                return Err(CliError::Usage("--quad-order must be positive".into()));
            }
        }
        if let Some(k) = self.kmax {
            if k == 0 {
                return Err(CliError::Usage("--kmax must be positive".into()));
            }
        }
        Ok(())
    }

    pub fn modes(&self) -> ModeRange {
        self.n.unwrap_or(ModeRange::single(0))
    }

    pub fn tol(&self) -> f64 {
        self.tol.unwrap_or(DEFAULT_TOL)
    }

    pub fn kmax(&self) -> usize {
        self.kmax.unwrap_or(DEFAULT_KMAX)
    }

    pub fn mass(&self) -> f64 {
        self.mass.unwrap_or(DEFAULT_MASS)
    }

    pub fn quad_order(&self) -> usize {
        self.quad_order.unwrap_or(lorentz_harmonics::quadrature::DEFAULT_ORDER)
    }

    /// The grid for `command`, or its default.
    pub fn grid(&self) -> GridSpec {
        self.grid.unwrap_or(match self.command {
            Command::Basis => GridSpec::new(-5.0, 5.0, 101),
            Command::Parton => GridSpec::new(-4.0, 4.0, 81),
            _ => GridSpec::new(-3.0, 3.0, 61),
        })
    }

    pub fn p_grid(&self) -> GridSpec {
        self.p_grid.unwrap_or(GridSpec::new(0.0, 4.0, 9))
    }

    /// Sweep axis for curves: the given grid, or `η ∈ [0, 2]` at 21 points.
    pub fn sweep(&self) -> (Axis, GridSpec) {
        match (self.eta_grid, self.beta_grid) {
            (_, Some(g)) => (Axis::Beta, g),
            (Some(g), None) => (Axis::Eta, g),
            (None, None) => (Axis::Eta, GridSpec::new(0.0, 2.0, 21)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: GridSpec = "-3:3:61".parse().unwrap();
        assert_eq!(g, GridSpec::new(-3.0, 3.0, 61));
        let pts = g.points();
        assert_eq!(pts.len(), 61);
        assert_eq!(pts[0], -3.0);
        assert_eq!(pts[30], 0.0);
        assert_eq!(pts[60], 3.0);
        assert!("0:1:1".parse::<GridSpec>().is_err());
        assert!("1:0:5".parse::<GridSpec>().is_err());
        assert!("0:1".parse::<GridSpec>().is_err());
        assert!("a:1:3".parse::<GridSpec>().is_err());
        assert_eq!(g.to_string(), "-3:3:61");
    }

    #[test]
    fn mode_ranges() {
        assert_eq!("4".parse::<ModeRange>().unwrap(), ModeRange::single(4));
        let r: ModeRange = "0..3".parse().unwrap();
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!("1..=2".parse::<ModeRange>().unwrap(), ModeRange { first: 1, last: 2 });
        assert!("3..1".parse::<ModeRange>().is_err());
        assert!("-1".parse::<ModeRange>().is_err());
        assert_eq!(r.to_string(), "0..3");
    }

    fn parse(args: &[&str]) -> Result<RunConfig, clap::Error> {
        RunConfig::try_parse_from(std::iter::once("lorentz-harmonics").chain(args.iter().copied()))
    }

    #[test]
    fn eta_and_beta_are_exclusive() {
        assert!(parse(&["two-mode", "--eta", "1", "--beta", "0.5"]).is_err());
        assert!(parse(&["entropy-curve", "--eta-grid", "0:1:3", "--beta-grid", "0:0.5:3"]).is_err());
        assert!(parse(&["two-mode", "--eta", "-0.5"]).is_ok());
    }

    #[test]
    fn unused_flags_are_usage_errors() {
        let cfg = parse(&["basis", "--eta", "1"]).unwrap();
        assert!(matches!(cfg.validate(false), Err(CliError::Usage(_))));
        let cfg = parse(&["two-mode", "--n", "0..2"]).unwrap();
        assert!(matches!(cfg.validate(false), Err(CliError::Usage(_))));
        let cfg = parse(&["two-mode", "--tol", "1.5"]).unwrap();
        assert!(matches!(cfg.validate(false), Err(CliError::Usage(_))));
        let cfg = parse(&["basis", "--quad-order", "12"]).unwrap();
        assert!(cfg.validate(true).is_ok());
        assert!(cfg.validate(false).is_err());
    }
}
