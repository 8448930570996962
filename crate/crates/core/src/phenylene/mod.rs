//! Tree-like phenylenes: encoding, expansion, cut classes, classification and
//! geometry.

mod classify;
mod cuts;
mod geometry;
mod tree;

pub use classify::{
    chain_order, classify_hexagons, segments, turn_word, Classification, HexClass, Segment, SegmentKind,
};
pub use cuts::{class_of_edge, cut_classes, mostar_cut, CutClass};
pub use geometry::{geometric_embedding, Embedding, Point, Surd};
pub use tree::{join, slot_distance, Junction, PhenyleneTree, Violation};

pub(crate) use classify::classify;
pub(crate) use cuts::classes_of;
pub(crate) use geometry::embed;
