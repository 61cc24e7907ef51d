use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("term cap of {cap} exceeded at χ-order {order_reached} ({terms} terms)")]
    TermCap { cap: usize, order_reached: u32, terms: usize },
    #[error("BCH generator must be homogeneous of χ-order one")]
    GeneratorNotFirstOrder,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed polynomial document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected an integer, found {0}")]
    NotAnInteger(String),
    #[error("zero denominator in coefficient")]
    ZeroDenominator,
    #[error("duplicate term {0}")]
    DuplicateTerm(String),
    #[error("fixture checksum mismatch for {file}: expected {expected}, found {found}")]
    Checksum { file: String, expected: String, found: String },
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Error)]
pub enum DomainError {
    #[error("{name}({n}) is outside the domain n >= {min}")]
    SequenceIndex { name: char, n: i64, min: i64 },
    #[error("invalid parameters: {0}")]
    Params(String),
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("pump amplitude {alpha} exceeds the oracle cap {cap}")]
    AlphaCap { alpha: f64, cap: f64 },
    #[error("Poisson tail mass {tail} above tolerance {tol}")]
    Truncation { tail: f64, tol: f64 },
    #[error("eigensolver did not converge in sector m = {sector}")]
    Eigensolver { sector: usize },
    #[error("invalid parameters: {0}")]
    Params(String),
}
