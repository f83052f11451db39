use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({0}, {1}) for graph on {2} vertices")]
    InvalidEdge(usize, usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("graph is not {omega}-clique regular")]
    NotCliqueRegular { omega: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("invalid srg parameters: {0}")]
    InvalidParams(String),

    #[error("infeasible srg parameters: {0}")]
    InfeasibleParams(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
