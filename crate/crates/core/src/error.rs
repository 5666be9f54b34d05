use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("variable x{index} out of range for a ring in {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },

    #[error("coefficient denominator {denominator} is not invertible modulo {modulus}")]
    NonInvertibleCoefficient { denominator: String, modulus: u64 },

    #[error("{0} requires characteristic zero")]
    CharacteristicViolation(&'static str),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands live in different rings or actions")]
    RingMismatch,

    #[error("operands live in different coordinate frames")]
    FrameMismatch,

    #[error("polynomial of degree {degree} does not fit a frame of degree {bound}")]
    DegreeOverflow { degree: u32, bound: u32 },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    CapExceeded { degree: u32, cap: u32 },

    #[error("quotient is not Artin")]
    NotArtin,

    #[error("quotient is not Artin within degree cap {cap}")]
    NotArtinWithinCap { cap: u32 },

    #[error("generator {0} is a unit; the ideal would be the whole ring")]
    UnitGenerator(String),

    #[error("the zero module has the whole ring as annihilator")]
    ZeroModule,

    #[error("top form of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("invalid degree range [{from}, {to}]")]
    InvalidRange { from: u32, to: u32 },

    #[error("singular curve: 4a^3 + 27b^2 = 0")]
    SingularCurve,

    #[error("j = {0} has a dedicated classification row")]
    SpecialJ(String),
}

pub type Result<T> = std::result::Result<T, Error>;
