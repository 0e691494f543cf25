use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the module that raises them; [`Error::code`]
/// gives the stable machine-readable name used by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // graph construction and transformation
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("arcs in both directions between `{0}` and `{1}`")]
    AntiparallelArcs(String, String),
    #[error("arc `{0}` -> `{1}` listed twice")]
    DuplicateArc(String, String),
    #[error("edge {{`{0}`, `{1}`}} listed twice")]
    DuplicateEdge(String, String),
    #[error("vertex `{0}` has non-positive weight")]
    NonPositiveWeight(String),
    #[error("source vertex `{0}` must have weight 1")]
    SourceWeightNotOne(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("whisker rule references unknown vertex `{0}`")]
    RuleReferencesUnknownVertex(String),
    #[error("attach set is empty")]
    EmptyAttachSet,
    #[error("construction shape violation: {0}")]
    ConstructionShapeViolation(String),
    #[error("underlying graph is not a 5-cycle")]
    NotAFiveCycle,
    #[error("underlying graph is not a cycle")]
    NotACycle,
    #[error("underlying graph is not a path")]
    NotAPath,
    #[error("{0} vertices exceeds the limit of {1}")]
    TooManyVertices(usize, usize),

    // monomial arithmetic
    #[error("ideals live over different variable lists")]
    AmbientMismatch,
    #[error("operation needs a nonzero ideal")]
    ZeroIdeal,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("vector {0:?} is not below the dualizing vector")]
    OutOfBox(Vec<u32>),
    #[error("dualizing vector must dominate the lcm exponent {0:?}")]
    VectorTooSmall(Vec<u32>),
    #[error("polarized variables do not match: {0}")]
    VariableMismatch(String),
    #[error("ideal is not square-free")]
    NotSquareFree,

    // covers and decompositions
    #[error("vertex set is not a vertex cover")]
    NotACover,
    #[error("vertex set is not a strong vertex cover")]
    NotStrong,
    #[error("decomposition identity failed: {0}")]
    InternalInconsistency(String),
    #[error("graph has isolated vertex `{0}`")]
    IsolatedVertex(String),

    // chordality
    #[error("ordering is not a permutation of the vertices")]
    NotAPermutation,
    #[error("ordering is not a perfect elimination ordering of the complement")]
    InvalidPeo,

    // Cohen-Macaulay classification
    #[error("no perfect matching into leaf vertices")]
    NoLeafPerfectMatching,
    #[error("bad construction hint: {0}")]
    BadHint(String),
    #[error("input too large: {0}")]
    TooLarge(String),

    // input and output
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl Error {
    /// Stable code string (CamelCase variant name).
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::SelfLoop(_) => "SelfLoop",
            Error::AntiparallelArcs(..) => "AntiparallelArcs",
            Error::DuplicateArc(..) => "DuplicateArc",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::NonPositiveWeight(_) => "NonPositiveWeight",
            Error::SourceWeightNotOne(_) => "SourceWeightNotOne",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::RuleReferencesUnknownVertex(_) => "RuleReferencesUnknownVertex",
            Error::EmptyAttachSet => "EmptyAttachSet",
            Error::ConstructionShapeViolation(_) => "ConstructionShapeViolation",
            Error::NotAFiveCycle => "NotAFiveCycle",
            Error::NotACycle => "NotACycle",
            Error::NotAPath => "NotAPath",
            Error::TooManyVertices(..) => "TooManyVertices",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::ExponentOverflow => "ExponentOverflow",
            Error::OutOfBox(_) => "OutOfBox",
            Error::VectorTooSmall(_) => "VectorTooSmall",
            Error::VariableMismatch(_) => "VariableMismatch",
            Error::NotSquareFree => "NotSquareFree",
            Error::NotACover => "NotACover",
            Error::NotStrong => "NotStrong",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::NotAPermutation => "NotAPermutation",
            Error::InvalidPeo => "InvalidPEO",
            Error::NoLeafPerfectMatching => "NoLeafPerfectMatching",
            Error::BadHint(_) => "BadHint",
            Error::TooLarge(_) => "TooLarge",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
        }
    }

    /// Size-cap failures, as opposed to malformed input.
    pub fn is_size_cap(&self) -> bool {
        matches!(self, Error::TooLarge(_) | Error::TooManyVertices(..))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
