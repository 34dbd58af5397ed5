use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge index {index} out of range for a graph with {edges} edges")]
    EdgeIndex { index: usize, edges: usize },

    #[error("vertex {vertex} out of range for a graph with {vertices} vertices")]
    VertexIndex { vertex: usize, vertices: usize },

    #[error("cannot contract loop edge {0}")]
    LoopContraction(usize),

    #[error("{what}: {size} exceeds the budget of {limit}")]
    Budget {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("frontier state budget exceeded: {states} states at boundary width {width} (peak width of the order is {peak_width})")]
    FrontierStates {
        states: usize,
        width: usize,
        peak_width: usize,
    },

    #[error("time limit exceeded during {0}")]
    Timeout(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("numerical routine did not converge: {0}")]
    NoConvergence(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::Budget { .. } | Error::FrontierStates { .. } | Error::Timeout(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
