use clap::{Args, Parser, Subcommand, ValueEnum};
use halfdeg_core::{Mode, Principle, SearchConfig};

#[derive(Debug, Parser)]
#[command(name = "halfdeg", version, about = "Symmetric polynomial positivity and zero search")]
pub struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a symmetric polynomial in elementary symmetric polynomials.
    Decompose(PolyArgs),
    /// Count distinct (real) roots of a univariate polynomial.
    Hyperbolic {
        /// Coefficients, leading first, e.g. `1,0,-1` for t^2 - 1.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// List the reduced instances on a test set.
    Reduce {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value_t = PrincipleArg::Half)]
        principle: PrincipleArg,
        #[arg(long)]
        orthant: bool,
    },
    /// Search for a point where the polynomial is negative.
    Check {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        orthant: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Search for a real zero.
    FindZero {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Minimize a linear objective over a slice of hyperbolic coefficient vectors.
    Lemma42 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        /// Fixed values of e_1..e_s.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Objective coefficients c_1..c_n.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Polynomial in x1..xn, e.g. "x1^2 + x2^2 - 1/2*x1*x2".
    #[arg(allow_hyphen_values = true)]
    pub polynomial: String,
    /// Number of variables (default: largest index used).
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrincipleArg {
    Degree,
    Half,
}

impl From<PrincipleArg> for Principle {
    fn from(p: PrincipleArg) -> Self {
        match p {
            PrincipleArg::Degree => Principle::Degree,
            PrincipleArg::Half => Principle::HalfDegree,
        }
    }
}

pub fn mode(orthant: bool) -> Mode {
    if orthant {
        Mode::Orthant
    } else {
        Mode::RealLine
    }
}

fn parse_box(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, found {s:?}"))?;
    let lo: f64 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    Ok((lo, hi))
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Search box per coordinate.
    #[arg(long = "box", value_name = "LO:HI", value_parser = parse_box, allow_hyphen_values = true)]
    pub bounds: Option<(f64, f64)>,
    /// Grid points per axis.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Coordinate descent halvings.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

impl SearchArgs {
    pub fn config(&self) -> SearchConfig {
        let mut cfg = SearchConfig::default();
        if let Some((lo, hi)) = self.bounds {
            cfg.lo = lo;
            cfg.hi = hi;
        }
        if let Some(g) = self.grid {
            cfg.grid = g;
        }
        if let Some(t) = self.tol {
            cfg.tolerance = t;
        }
        if let Some(s) = self.steps {
            cfg.descent_steps = s;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        cfg
    }
}
