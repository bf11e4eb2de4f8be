use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex label {v} out of range 1..={n}")]
    LabelRange { v: usize, n: usize },
    #[error("edge {u} {v} not in ascending order (expected u < v)")]
    EdgeOrder { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not in class B: {0}")]
    NotClassB(String),
    #[error("diameter {diameter} below required {required}")]
    DiameterTooSmall { diameter: u32, required: u32 },
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("matrix order {n} exceeds oracle bound {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error("eigensolver did not converge: relative off-diagonal residual {residual:e} after {sweeps} sweeps")]
    NoConvergence { residual: f64, sweeps: usize },
    #[error("generator parameters infeasible: no valid sample in {attempts} attempts")]
    Infeasible { attempts: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
