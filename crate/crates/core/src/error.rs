use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// What went wrong while parsing an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownIdentifier(String),
    NegativeExponent,
    ExponentTooLarge,
    NonAsciiInput,
    Unexpected { found: String, expected: &'static str },
    BadLiteral(String),
}

/// Expression parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::UnknownIdentifier(name) => write!(f, "unknown identifier `{name}`"),
            ParseErrorKind::NegativeExponent => write!(f, "negative exponent"),
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent too large"),
            ParseErrorKind::NonAsciiInput => write!(f, "non-ASCII input"),
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "expected {expected}, found {found}")
            }
            ParseErrorKind::BadLiteral(text) => write!(f, "bad rational literal `{text}`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live over different generator sets")]
    GeneratorMismatch,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive weight")]
    ZeroWeight(String),
    #[error("invalid generator name `{0}` (ASCII identifiers only)")]
    InvalidGeneratorName(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("relation {index} is not homogeneous: {expr}")]
    InhomogeneousRelation { index: usize, expr: String },
    #[error("chern identity requires genus in 1..=3, got {0}")]
    UnsupportedGenus(u32),
    #[error("expected a homogeneous element")]
    NotHomogeneous,
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("top graded piece has rank {0}, a degree functional needs rank 1")]
    TopRankNotOne(usize),
    #[error("degree {0} is not the top degree: a higher graded piece is nonzero")]
    NotTopDegree(u32),
    #[error("normalization element vanishes in the quotient")]
    ReferenceVanishes,
    #[error("ring `{0}` has no degree functional")]
    NoFunctional(String),
    #[error("pairing matrix is singular (rank {rank} < {expected})")]
    SingularPairing { rank: usize, expected: usize },
    #[error("pairing data is inconsistent: probe {probe} disagrees")]
    InconsistentPairings { probe: usize },
    #[error("{probes} probes but {values} values")]
    LengthMismatch { probes: usize, values: usize },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{0}` is not a linear combination of symbols")]
    NonLinearCombination(String),
    #[error("image of `{symbol}` has degree {found}, expected {expected}")]
    ImageDegree { symbol: String, expected: u32, found: u32 },
    #[error("symbols of mixed degrees in one combination")]
    MixedDegrees,
    #[error("relative ring is not spanned by 1, t, s over the base: standard monomial {0}")]
    NotFreeOverBase(String),
    #[error("unknown ring `{0}`")]
    UnknownRing(String),
    #[error("unknown pushforward map `{0}`")]
    UnknownMap(String),
    #[error("unknown verification scope `{0}`")]
    UnknownScope(String),
    #[error("unknown table `{0}`")]
    UnknownTable(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Rational(#[from] RationalParseError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// One located problem in a ring spec document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecProblem {
    /// JSON pointer into the document, e.g. `/relations/2`.
    pub pointer: String,
    pub message: String,
}

/// All problems found while loading a ring spec.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid ring spec{}: {}", source_label(.source_name), render_problems(.problems))]
pub struct SpecError {
    pub source_name: Option<String>,
    pub problems: Vec<SpecProblem>,
}

fn source_label(name: &Option<String>) -> String {
    name.as_ref().map(|n| format!(" `{n}`")).unwrap_or_default()
}

fn render_problems(problems: &[SpecProblem]) -> String {
    problems.iter().map(|p| format!("{}: {}", p.pointer, p.message)).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
