use thiserror::Error;

/// Errors raised by grid construction, synthesis and norm evaluation.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("grid size {0} is not a power of two >= 16")]
    BadGridSize(usize),
    #[error("dimension {0} is not supported (must be 1 or 2)")]
    BadDimension(usize),
    #[error("grid extent {0} must be positive and finite")]
    BadExtent(f64),
    #[error("signal is on the {found:?} side, expected {expected:?}")]
    SideMismatch {
        expected: crate::grid::Side,
        found: crate::grid::Side,
    },
    #[error("sample count {found} does not match grid volume {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("grids do not match: {0}")]
    GridMismatch(String),
    #[error("Nyquist violation in {what}: frequency {freq} exceeds limit {limit}")]
    NyquistViolation { what: String, freq: f64, limit: f64 },
    #[error("point {0:?} is not on the grid (must be an integer multiple of the spacing)")]
    OffGridPoint(Vec<f64>),
    #[error("lattice step {step} is not a positive integer multiple of the grid spacing {spacing}")]
    BadLatticeStep { step: f64, spacing: f64 },
    #[error("lattice step {step} exceeds the grid extent {extent}")]
    LatticeTooCoarse { step: f64, extent: f64 },
    #[error("STFT matrix is empty")]
    EmptyMatrix,
    #[error("phase family {family} requires alpha >= 2, got {alpha}")]
    BadPhaseExponent { family: String, alpha: f64 },
    #[error("phase family {family} is only defined in dimension {required}, grid has dimension {found}")]
    PhaseDimension {
        family: String,
        required: usize,
        found: usize,
    },
    #[error("custom phase table has {found} values, grid has {expected} nodes")]
    PhaseTableLength { expected: usize, found: usize },
    #[error("quadrature failed to converge: {0}")]
    QuadratureFailure(String),
    #[error("dyadic top scale {j} needs grid Nyquist >= {required}, grid has {available}")]
    DyadicScaleTooLarge { j: usize, required: f64, available: f64 },
    #[error("frequency coverage failure: operation needs grid extent >= {required}, grid has {available}")]
    CoverageFailure { required: f64, available: f64 },
    #[error("cutoff signal is not compactly supported: mass {mass:.3e} outside radius {radius}")]
    NotCompactlySupported { radius: f64, mass: f64 },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
