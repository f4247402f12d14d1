use thiserror::Error;

/// Why an ideal fails to be bipartite. Degenerate generators and odd cycles
/// are reported separately so callers can distinguish "wrong shape" from
/// "non-2-colorable".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteObstruction {
    /// A minimal generator is not a squarefree quadric.
    NotQuadraticSquarefree { generator: String },
    /// The generator graph contains an odd cycle through this vertex.
    OddCycle { vertex: String },
}

impl std::fmt::Display for BipartiteObstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NotQuadraticSquarefree { generator } => {
                write!(f, "generator {generator} is not a squarefree quadric")
            }
            Self::OddCycle { vertex } => {
                write!(f, "generator graph has an odd cycle through {vertex}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable id {id}")]
    UnknownVariable { id: usize },

    #[error("duplicate variable name `{name}`")]
    DuplicateVariable { name: String },

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("{operation} is undefined for the zero ideal")]
    ZeroIdeal { operation: &'static str },

    #[error("{operation} is undefined for the unit ideal")]
    UnitIdeal { operation: &'static str },

    #[error("generator {generator} is not squarefree")]
    NotSquarefree { generator: String },

    #[error("{operation} is undefined for the void complex")]
    VoidComplex { operation: &'static str },

    #[error("complex has {count} vertices; bit-mask faces support at most {max}")]
    TooManyVertices { count: usize, max: usize },

    #[error("subset scan over {vertices} vertices exceeds the bound of {bound}; pass allow_large to override")]
    CapacityExceeded { vertices: usize, bound: usize },

    #[error("no power of {variable} lies in the ideal")]
    NoPowerOfVariable { variable: String },

    #[error("characteristic {0} is neither 0 nor prime")]
    InvalidCharacteristic(u64),

    #[error("fresh variable `{name}` collides with an existing one")]
    FreshVariableCollision { name: String },

    #[error("cover member {index} is not a subcomplex of the base complex")]
    CoverNotSubcomplex { index: usize },

    #[error("covers do not cover the base complex: facet {facet} is missed")]
    CoverIncomplete { facet: String },

    #[error("set {index}: its complement is not a face of the base complex")]
    ComplementNotFace { index: usize },

    #[error("facet {facet} is not realized as the complement of any given set")]
    FacetNotRealized { facet: String },

    #[error("ideal is not bipartite: {0}")]
    NotBipartite(BipartiteObstruction),

    #[error("Betti tables use different module conventions")]
    ConventionMismatch,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
