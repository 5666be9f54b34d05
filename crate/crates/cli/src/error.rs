use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Math(#[from] macaulay::Error),
    #[error("{0}")]
    Precondition(String),
    #[error("{file}: {message}")]
    Fixture { file: String, message: String },
}

pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const INCONCLUSIVE: u8 = 4;
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use macaulay::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } => exit::USAGE,
            CliError::Precondition(_) => exit::PRECONDITION,
            CliError::Fixture { .. } => exit::PARSE,
            CliError::Math(e) => match e {
                E::Parse { .. } | E::VariableOutOfRange { .. } | E::NonInvertibleCoefficient { .. } => exit::PARSE,
                E::InvalidRing(_) | E::CharacteristicViolation(_) => exit::USAGE,
                E::CapExceeded { .. } | E::NotArtinWithinCap { .. } | E::DegreeOverflow { .. } => exit::INCONCLUSIVE,
                _ => exit::PRECONDITION,
            },
        }
    }
}
