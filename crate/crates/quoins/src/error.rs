use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A probability entry is more negative than the construction tolerance.
    #[error("negative entry {value:e} at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    /// Joint distribution entries do not sum to 1.
    #[error("entries sum to {sum:.17} but must sum to 1 within 1e-9")]
    NotNormalized { sum: f64 },

    /// A stochastic-matrix column does not sum to 1.
    #[error("column {col} sums to {sum:.17} but must sum to 1 within 1e-9")]
    ColumnNotNormalized { col: usize, sum: f64 },

    /// An operation required a square distribution.
    #[error("expected a square distribution, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// Operand shapes are incompatible.
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    /// A scalar or integer argument is outside its documented domain.
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// A matrix expected to be Hermitian is not.
    #[error("matrix is not Hermitian: max |m - m^dagger| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    /// A measurement probability came out with a non-negligible imaginary part.
    #[error("probability has imaginary part {imag:e}, exceeds 1e-8")]
    NonrealProbability { imag: f64 },

    /// The alpha-edge decomposition search exhausted its budget.
    /// This signals optimizer failure, not mathematical impossibility:
    /// every 2x2 coin state admits such a decomposition.
    #[error(
        "no decomposition with residual <= 1e-7 found after {starts} starts \
         (best residual {best_residual:e})"
    )]
    DecompositionNotFound { starts: usize, best_residual: f64 },

    /// Bisection target is never reached on [0, 1].
    #[error("payoff never reaches the classical benchmark {benchmark} on [0, 1]")]
    NoCrossing { benchmark: f64 },

    /// The maximin search ran out of iterations without any start converging.
    /// The best report found is still attached, but its value is not certified.
    #[error("optimizer budget exhausted; best value {} is not certified", report.value)]
    OptimizerBudgetExhausted { report: Box<crate::game::PayoffReport> },

    /// An internal invariant that should hold by construction was violated.
    #[error("internal invariant violated: {context}")]
    Internal { context: String },

    /// Malformed CSV input.
    #[error("csv parse error: {context}")]
    CsvParse { context: String },
}
