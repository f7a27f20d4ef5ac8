use thiserror::Error;

pub type Result<T, E = GemError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GemError {
    #[error("vertex {vertex} appears twice in color {color}")]
    DuplicateVertexInColor { color: usize, vertex: usize },
    #[error("loop edge at vertex {vertex} in color {color}")]
    LoopEdge { color: usize, vertex: usize },
    #[error("color {color} covers {found} vertices, expected {expected}")]
    VertexCountMismatch {
        color: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex count {0} is odd")]
    OddVertexCount(usize),
    #[error("a gem needs at least 2 colors and 2 vertices (got {colors} colors, {vertices} vertices)")]
    TooSmall { colors: usize, vertices: usize },
    #[error("color {color} out of range for {n_colors} colors")]
    ColorOutOfRange { color: usize, n_colors: usize },
    #[error("vertex {vertex} out of range for {num_vertices} vertices")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("permutation is over {found} colors, graph has {expected}")]
    PermutationColorMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("operation needs dimension 4, graph has dimension {0}")]
    DimensionUnsupported(usize),
    #[error("not a dipole: {0}")]
    NotADipole(String),
    #[error("bijection is not a colored isomorphism: {0}")]
    PhiNotIsomorphism(String),
    #[error("vertex {vertex} is not joined to its image by color {color}")]
    MissingIColoredMatching { vertex: usize, color: usize },
    #[error("the two vertex sets meet the same component of the graph without color {0}")]
    SameComponentInIHat(usize),
    #[error("move produced an invalid graph: {0}")]
    ResultInvalid(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("base graph is not a 4-colored crystallization: {0}")]
    BaseNotCrystallization(String),
    #[error("{needed} vertices exceed the budget of {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("invalid characteristic function: {0}")]
    InvalidCharacteristicFunction(String),
    #[error("graphs have {left} and {right} colors")]
    ColorCountMismatch { left: usize, right: usize },
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("invalid label table: {0}")]
    InvalidLabel(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GemError>,
    },
    #[error("step {index}: {source}")]
    Step {
        index: usize,
        #[source]
        source: Box<GemError>,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl GemError {
    /// True for syntax errors, including those wrapped with a line or step.
    pub fn is_parse(&self) -> bool {
        match self {
            GemError::Parse(_) => true,
            GemError::AtLine { source, .. } | GemError::Step { source, .. } => source.is_parse(),
            _ => false,
        }
    }
}
