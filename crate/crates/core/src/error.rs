use thiserror::Error;

/// Errors raised by the numerical kernel and the command layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum XpError {
    #[error("gamma function has a pole at z = {0}")]
    GammaPole(f64),

    #[error("{what}: argument {value} outside the domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("non-finite integrand sample at t = {0}")]
    NonFinite(f64),

    #[error("integrand tail does not decay: limits {plus:.3e} at +inf and {minus:.3e} at -inf differ")]
    TailDivergence { plus: f64, minus: f64 },

    #[error("series did not converge after {0} terms")]
    SeriesCap(usize),

    #[error("E = xp does not meet the boundary at E = {0}")]
    NoIntersection(f64),

    #[error("boundary is multivalued: {roots} intersections with E = xp at E = {energy} (first root {first})")]
    Multivalued { energy: f64, roots: usize, first: f64 },

    #[error("monotonicity condition 1 + pi E n_fl''(E) > 0 fails on [{0}, {1}]")]
    Monotonicity(f64, f64),

    #[error("|f(t)| = {magnitude:.3e} at t = {t}: phase undefined")]
    FZero { t: f64, magnitude: f64 },

    #[error("F(E) vanishes at E = {0}: scattering phase undefined at a bound state")]
    BoundStateEnergy(f64),

    #[error("E = {energy} is not a zero of F (|F| = {residual:.3e}){}", nearest.map(|r| format!("; nearest zero at {r:.10}")).unwrap_or_default())]
    NotARoot {
        energy: f64,
        residual: f64,
        nearest: Option<f64>,
    },

    #[error("invalid energy range [{0}, {1}]")]
    InvalidRange(f64, f64),

    #[error("numerical failure in {module} at E = {energy}: {detail}")]
    Numerical {
        module: &'static str,
        energy: f64,
        detail: String,
    },

    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, XpError>;

impl From<std::io::Error> for XpError {
    fn from(e: std::io::Error) -> Self {
        XpError::Io(e.to_string())
    }
}
