use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const EMPTY_KERNEL: i32 = 2;
    pub const NOT_POSITIVE: i32 = 3;
    pub const PARSE: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("empty solution space: no numerator of degree {degree} gives a closed curve; raise the pole multiplicities")]
    EmptyKernel { degree: usize },
    #[error("no positive numerator found ({0})")]
    NotPositive(String),
    #[error("tangent indicatrix does not surround the origin; no closed curve exists for this generator (use --force to try anyway)")]
    HullFails,
    #[error("unknown format {0:?}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] phforge_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. } | CliError::Field { .. } | CliError::Format(_) => exit::PARSE,
            CliError::EmptyKernel { .. } => exit::EMPTY_KERNEL,
            CliError::NotPositive(_) | CliError::HullFails => exit::NOT_POSITIVE,
            CliError::Core(_) | CliError::Io(_) => exit::OTHER,
        }
    }
}
