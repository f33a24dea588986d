use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("expression mixes generators of U and O(SL_q(2))")]
    MixedAlgebra,
    #[error("coideal closure exceeded {0} dimensions")]
    CapExceeded(usize),
    #[error("subspace is not a right coideal")]
    NotCoideal,
    #[error("subspace does not contain the unit")]
    NotUnital,
    #[error("expected dimension {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("exterior algebra has dimensions {0:?}, expected [1, 3, 3, 1, 0]")]
    ExteriorDims([usize; 5]),
    #[error("singular matrix: {0}")]
    Singular(&'static str),
    #[error("lower bound undefined for the zero element")]
    ZeroElement,
    #[error("coproduct does not decompose over the tangent space")]
    Decomposition,
    #[error("bracket leaves the tangent space")]
    BracketNotClosed,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
