use trilin_core::{AlgebraError, DomainError, FormatError, OracleError};

/// Everything that ends a command with a nonzero status.
#[derive(Debug)]
pub enum Failure {
    /// A verification ran and found a mismatch; the report is already printed.
    Mismatch,
    Usage(String),
    Resource(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Failure::Mismatch => None,
            Failure::Usage(m) | Failure::Resource(m) => Some(m),
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::TermCap { .. } => Failure::Resource(e.to_string()),
            AlgebraError::GeneratorNotFirstOrder => Failure::Usage(e.to_string()),
        }
    }
}

impl From<DomainError> for Failure {
    fn from(e: DomainError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Params(_) => Failure::Usage(e.to_string()),
            _ => Failure::Resource(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Fixture problems: a corrupted or altered fixture is a mismatch, a
/// missing or unreadable one is a usage error.
pub fn fixture_failure(e: FormatError) -> Failure {
    match e {
        FormatError::Checksum { .. } => {
            eprintln!("trilin: {e}");
            Failure::Mismatch
        }
        other => Failure::Usage(other.to_string()),
    }
}
