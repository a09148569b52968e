use thiserror::Error;

/// Errors shared across the crate. Every invalid input is rejected with a
/// specific variant rather than silently extended by convention.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be an integer >= 3, got {0}")]
    GenusTooSmall(i64),

    #[error("rank must be >= {min}, got {got}")]
    RankTooSmall { min: i64, got: i64 },

    #[error("degree must be >= 0, got {0}")]
    NegativeDegree(i64),

    #[error("value {0} exceeds the supported range")]
    OutOfRange(i64),

    #[error("rank list must be nonempty")]
    EmptyRanks,

    #[error("expected a rank list of length {expected}, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("product (r1+1)...(rn+1) = {product} does not equal g = {genus}")]
    ProductMismatch { product: i64, genus: i64 },

    #[error(
        "Riemann-Roch shortcut requires rho(g,r1,d1) = 0 and rho(g,r1+1,d1) < 0; \
         violated at g={g}, r1={r1}, d1={d1}"
    )]
    RiemannRochPrecondition { g: i64, r1: i64, d1: i64 },

    #[error("witness invariant failed at g={g}, r1={r1}, r2={r2}: {check}")]
    WitnessInconsistent {
        g: i64,
        r1: i64,
        r2: i64,
        check: &'static str,
    },

    #[error("lower bound degenerates: denominator -n+(q+1)+sum 1/(ri+1) is not positive")]
    NonpositiveDenominator,

    #[error("rational denominator must be nonzero")]
    ZeroDenominator,

    #[error("arithmetic overflow")]
    Overflow,

    #[error("search space exceeds node budget of {budget}")]
    SearchSpaceTooLarge { budget: u64 },

    #[error(
        "search space exceeds node budget of {budget} at sweep cell \
         g={g}, D={total_degree}, ranks={ranks:?}"
    )]
    SweepBudgetExceeded {
        g: i64,
        total_degree: i64,
        ranks: Vec<i64>,
        budget: u64,
    },

    #[error("invalid sweep range: g_min={g_min} must satisfy 3 <= g_min <= g_max={g_max}")]
    InvalidSweepRange { g_min: i64, g_max: i64 },

    #[error("invalid sweep config: {0}")]
    InvalidSweepConfig(&'static str),
}
