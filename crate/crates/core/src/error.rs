use thiserror::Error;

/// Errors produced by the solver library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("{what}: {got} qubits exceeds the limit of {limit}")]
    QubitLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("qubit count must be at least 1")]
    EmptyRegister,

    #[error("pauli string length mismatch: {0} vs {1}")]
    PauliLengthMismatch(usize, usize),

    #[error("invalid pauli axis character {0:?} (expected one of I, X, Y, Z)")]
    InvalidPauliAxis(char),

    #[error("pruning threshold {0} outside [0, 1)")]
    EpsilonOutOfRange(f64),

    #[error("qubit index {index} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("gate targets and controls overlap or repeat")]
    OverlappingQubits,

    #[error("dense gate matrix is {got}x{got}, expected {expected}x{expected} for {targets} target(s)")]
    GateSizeMismatch {
        got: usize,
        expected: usize,
        targets: usize,
    },

    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),

    #[error("state vector size mismatch: {0} vs {1}")]
    StateSizeMismatch(usize, usize),

    #[error("vector norm {0} deviates from 1 beyond tolerance")]
    NotNormalized(f64),

    #[error("parameter count {got} does not match ansatz requirement {expected}")]
    ParameterCountMismatch { got: usize, expected: usize },

    #[error("denominator degenerate: Re(psi) = {0:.3e} (operator near-singular on the current state)")]
    DegenerateDenominator(f64),

    #[error("imaginary residual {value:.3e} in {what} exceeds validation threshold")]
    ImaginaryResidual { what: &'static str, value: f64 },

    #[error("task (l={l}, k={k}, j={j:?}) failed: {source}")]
    TaskFailed {
        l: usize,
        k: usize,
        j: Option<usize>,
        #[source]
        source: Box<Error>,
    },

    #[error("worker count must be at least 1")]
    ZeroWorkers,

    #[error("cost function returned a non-finite value {value} at evaluation {eval_index}")]
    NonFiniteCost { value: f64, eval_index: usize },

    #[error("initial point lies outside the bound box at coordinate {0}")]
    InitialPointOutOfBounds(usize),

    #[error("bound box invalid at coordinate {index}: lo {lo} > hi {hi}")]
    InvalidBounds { index: usize, lo: f64, hi: f64 },

    #[error("matrix is singular (pivot {0:.3e} below threshold)")]
    SingularMatrix(f64),

    #[error("unsupported grid size {0} (interior grid must be 4x4 for the 4-qubit benchmark)")]
    UnsupportedGrid(usize),

    #[error("pressure field has {got} entries, expected {expected}")]
    FieldSizeMismatch { got: usize, expected: usize },

    #[error("ideal unit count must be positive, got {0}")]
    NonPositiveIdealUnits(f64),

    #[error("timing value must be positive, got {0}")]
    NonPositiveTiming(f64),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("baseline index {index} out of range for {len} rows")]
    BaselineOutOfRange { index: usize, len: usize },

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("invalid matrix file: {0}")]
    MatrixFormat(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
