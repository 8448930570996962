use thiserror::Error;

use crate::phenylene::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid phenylene tree: {}", format_violations(.0))]
    InvalidTree(Vec<Violation>),

    #[error("phenylene has a full hexagon and is not a chain")]
    NotAChain,

    #[error("slot {slot} of hexagon {hex} is occupied or conflicts with an adjacent junction")]
    SlotConflict { hex: usize, slot: u8 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("h = {h} exceeds the enumeration bound {max}")]
    ResourceBound { h: usize, max: usize },

    #[error("cut method gives {cut} but distances give {direct} for {tree}")]
    MethodMismatch { tree: String, cut: u64, direct: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
