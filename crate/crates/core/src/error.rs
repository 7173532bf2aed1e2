use thiserror::Error;

use crate::root_data::RootSystemKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0:?} is a vertex of the base alcove")]
    VertexInBaseAlcove([i64; 2]),
    #[error("no isometry through the vertex maps the first alcove to the second")]
    NoSuchIsometry,
    #[error("model gallery for vertex {vertex:?} revisits an alcove")]
    OmegaSelfIntersects { vertex: [i64; 2] },
    #[error("map for {group} is not stable between radius {radius} and {}", radius - 1)]
    RadiusTooSmall { group: RootSystemKind, radius: i64 },
    #[error("alcove is not in the union of shrunken Weyl chambers")]
    NotInShrunkenRegion,
    #[error("odd numerator {0} in the dimension formula")]
    OddNumerator(i64),
    #[error("alcove of length {length} lies outside the certified window {window}")]
    WindowTooSmall { length: i64, window: i64 },
    #[error("point is not in the interior of an alcove")]
    NotAnAlcove,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
