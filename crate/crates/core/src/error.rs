use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    /// The edge reservoir of streaming ES does not span enough nodes.
    #[error("edge reservoir covers only {achieved} nodes, {target} requested")]
    UndersizedReservoir { achieved: usize, target: usize },

    #[error("{0} is undefined on an empty graph")]
    EmptyGraph(&'static str),

    #[error("graph has no edges, so no finite path lengths exist")]
    NoPaths,

    #[error("cannot aggregate results: {0}")]
    Aggregation(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Toml(#[from] toml::de::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
