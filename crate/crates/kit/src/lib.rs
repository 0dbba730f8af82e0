//! Exports, pictures and the `heawood` command line on top of `heawood-core`.

use std::fmt;

pub mod cli;
pub mod domain;
pub mod export;
pub mod render;

pub use domain::{domain_vectors, DomainKind, DomainSpec};
pub use export::{
    export_complex_off, export_dot, export_graph, export_json, parse_json, GraphFormat,
    LabeledGraph,
};
pub use render::{fundamental_tile_scene, to_svg, RenderScene2D};

#[derive(Debug)]
pub enum KitError {
    Core(heawood_core::Error),
    Json(serde_json::Error),
    Io(std::io::Error),
    /// Bad input that the core library never saw.
    Invalid(String),
    /// A search ran out of budget before deciding.
    Budget(String),
}

impl KitError {
    /// 3 for cap and budget refusals, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            KitError::Core(heawood_core::Error::CapExceeded { .. }) | KitError::Budget(_) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for KitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KitError::Core(e) => write!(f, "{e}"),
            KitError::Json(e) => write!(f, "json: {e}"),
            KitError::Io(e) => write!(f, "io: {e}"),
            KitError::Invalid(s) => write!(f, "{s}"),
            KitError::Budget(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for KitError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            KitError::Core(e) => Some(e),
            KitError::Json(e) => Some(e),
            KitError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<heawood_core::Error> for KitError {
    fn from(e: heawood_core::Error) -> Self {
        KitError::Core(e)
    }
}

impl From<serde_json::Error> for KitError {
    fn from(e: serde_json::Error) -> Self {
        KitError::Json(e)
    }
}

impl From<std::io::Error> for KitError {
    fn from(e: std::io::Error) -> Self {
        KitError::Io(e)
    }
}
