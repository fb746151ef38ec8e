use thiserror::Error;

/// Errors raised by the combinatorial, algebraic and series layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("color {color} is outside 1..={n}")]
    ColorOutOfRange { color: u32, n: u32 },

    #[error("number of colors must be at least 1")]
    NoColors,

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("block count {q} out of range for a word of length {len}")]
    BlockCount { q: usize, len: usize },

    #[error("invalid interval partition: {0}")]
    InvalidPartition(String),

    #[error("tree is not layered and proper")]
    NotLayered,

    #[error("tree is not simple")]
    NotSimple,

    #[error("tree is not reduced")]
    NotReduced,

    #[error("vertex {0} is not order contractible")]
    NotContractible(String),

    #[error("no vertex at path {0}")]
    NoSuchVertex(String),

    #[error("forests are not compatible for a right join: {0}")]
    Incompatible(String),

    #[error("unary vertex of color {parent} has a child of color {child}")]
    UnaryColor { parent: u32, child: u32 },

    #[error("generator Y^{upper}_{lower} needs a lower word of length at least 2")]
    DegenerateGenerator { upper: u32, lower: String },

    #[error("series is not tangent to the identity: {0}")]
    NonTangent(String),

    #[error("series has a constant term")]
    ConstantTerm,

    #[error("word of length {len} exceeds truncation order {order}")]
    OrderOverflow { len: usize, order: usize },

    #[error("mismatched series shapes: {0}")]
    Mismatch(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
