use alloc::string::String;

/// Errors raised by graph construction, parsing and the query operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} requires {expected}, got {got}")]
    InvalidSize {
        what: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),
    #[error("label table has {got} entries for {n} vertices")]
    LabelCount { got: usize, n: usize },
    #[error("vertex {vertex} has color {color:?}, expected one of {i} or {j}")]
    NotInColorPair {
        vertex: usize,
        color: Option<u32>,
        i: u32,
        j: u32,
    },
    #[error("vertex set is not closed under ({i},{j})-adjacency at vertex {vertex}")]
    NotKempeClosed { vertex: usize, i: u32, j: u32 },
    #[error("uncolored neighbor {0} encountered")]
    UncoloredNeighbor(usize),
    #[error("invalid (u, phi) state: {0}")]
    InvalidState(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error(transparent)]
    Undecided(#[from] crate::Undecided),
}

impl Error {
    pub fn is_undecided(&self) -> bool {
        matches!(self, Error::Undecided(_))
    }
}
