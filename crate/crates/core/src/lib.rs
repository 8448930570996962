//! Tree-like phenylenes and their Mostar index.
//!
//! A phenylene is encoded as a [`PhenyleneTree`](phenylene::PhenyleneTree):
//! hexagons joined through quadrilaterals at numbered boundary slots. From it
//! the crate builds the molecular graph, computes the Mostar index both from
//! distances ([`graph::MolecularGraph::mostar_direct`]) and from orthogonal
//! cuts ([`phenylene::mostar_cut`]), evaluates closed forms, enumerates every
//! isomorphism class up to a bound and ranks them to check the extremal
//! orderings.
//!
//! ```
//! use phenylene_core::{families, phenylene};
//!
//! let t = families::pl(1, 1, 1).unwrap();
//! assert_eq!(phenylene::mostar_cut(&t).unwrap(), 288);
//! assert_eq!(t.expand().unwrap().mostar_direct().unwrap(), 288);
//! ```

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod iso;
pub mod lemmas;
pub mod naming;
pub mod phenylene;
pub mod verify;

pub use canon::certificate;
pub use error::{Error, Result};
pub use graph::{EdgeSplit, MolecularGraph};
pub use iso::are_isomorphic;
pub use phenylene::{join, mostar_cut, PhenyleneTree};
