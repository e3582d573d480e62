use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A malformed line in one of the text formats.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A well-formed line that the library rejects (range, self-loop, ...).
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        source: cubicity_core::Error,
    },
    #[error(transparent)]
    Core(#[from] cubicity_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    /// Command-line combinations that cannot run (missing strategy input).
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    fn core(&self) -> Option<&cubicity_core::Error> {
        match self {
            Error::Line { source, .. } | Error::Core(source) => Some(source),
            _ => None,
        }
    }

    /// Short machine-readable category used in CLI error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Io { .. } => "io",
            Error::Usage(_) => "usage",
            _ => match self.core() {
                Some(cubicity_core::Error::VertexOutOfRange { .. }) => "range",
                Some(cubicity_core::Error::SizeCap(_)) => "size",
                Some(cubicity_core::Error::Degenerate(_)) => "degenerate",
                Some(cubicity_core::Error::InvalidCaterpillar(_)) => "caterpillar",
                _ => "validation",
            },
        }
    }

    /// 3 for size-cap errors, 2 for every other input problem.
    pub fn exit_code(&self) -> i32 {
        if self.kind() == "size" {
            3
        } else {
            2
        }
    }
}
