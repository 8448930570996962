use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MolecularGraph;

/// A quadrilateral joining boundary edge `slot_a` of hexagon `a` to boundary
/// edge `slot_b` of hexagon `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Junction {
    pub a: usize,
    pub slot_a: u8,
    pub b: usize,
    pub slot_b: u8,
}

impl Junction {
    pub fn new(a: usize, slot_a: u8, b: usize, slot_b: u8) -> Self {
        Self { a, slot_a, b, slot_b }
    }
}

/// Decorated-tree encoding of a tree-like phenylene.
///
/// Hexagon `i` owns vertices `(i, 0..6)` in counter-clockwise order, expanded
/// to dense ids `6 * i + j`. Slot `j` is the boundary edge `(i, j)-(i, j+1)`.
/// The fields are public so that arbitrary (possibly invalid) input can be
/// represented; every operation that needs a valid tree checks it first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhenyleneTree {
    pub h: usize,
    pub junctions: Vec<Junction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    NoHexagons,
    JunctionCount { expected: usize, found: usize },
    HexagonOutOfRange { junction: usize, hex: usize },
    SlotOutOfRange { junction: usize, slot: u8 },
    SelfJunction { junction: usize },
    NotATree,
    SlotReused { hex: usize, slot: u8 },
    AdjacentSlots { hex: usize, first: u8, second: u8 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoHexagons => write!(f, "h must be at least 1"),
            Self::JunctionCount { expected, found } => {
                write!(f, "expected {expected} junctions, found {found}")
            }
            Self::HexagonOutOfRange { junction, hex } => {
                write!(f, "junction {junction} references hexagon {hex} out of range")
            }
            Self::SlotOutOfRange { junction, slot } => {
                write!(f, "junction {junction} uses slot {slot} outside 0..5")
            }
            Self::SelfJunction { junction } => write!(f, "junction {junction} joins a hexagon to itself"),
            Self::NotATree => write!(f, "junctions do not form a tree on the hexagons"),
            Self::SlotReused { hex, slot } => write!(f, "slot {slot} of hexagon {hex} used twice"),
            Self::AdjacentSlots { hex, first, second } => {
                write!(f, "slots {first} and {second} of hexagon {hex} are at circular distance 1")
            }
        }
    }
}

/// Circular distance between two slots of a hexagon.
pub fn slot_distance(a: u8, b: u8) -> u8 {
    let d = (a as i16 - b as i16).rem_euclid(6) as u8;
    d.min(6 - d)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl PhenyleneTree {
    /// Builds and validates.
    pub fn new(h: usize, junctions: Vec<Junction>) -> Result<Self> {
        let t = Self { h, junctions };
        t.check()?;
        Ok(t)
    }

    /// The single hexagon.
    pub fn single() -> Self {
        Self { h: 1, junctions: Vec::new() }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: Self = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        t.check()?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serializes")
    }

    /// All structural violations; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.h == 0 {
            out.push(Violation::NoHexagons);
            return out;
        }
        if self.junctions.len() != self.h - 1 {
            out.push(Violation::JunctionCount { expected: self.h - 1, found: self.junctions.len() });
        }
        let mut well_formed = true;
        for (i, j) in self.junctions.iter().enumerate() {
            for hex in [j.a, j.b] {
                if hex >= self.h {
                    out.push(Violation::HexagonOutOfRange { junction: i, hex });
                    well_formed = false;
                }
            }
            for slot in [j.slot_a, j.slot_b] {
                if slot >= 6 {
                    out.push(Violation::SlotOutOfRange { junction: i, slot });
                    well_formed = false;
                }
            }
            if j.a == j.b {
                out.push(Violation::SelfJunction { junction: i });
                well_formed = false;
            }
        }
        if !well_formed {
            return out;
        }

        let mut parent: Vec<usize> = (0..self.h).collect();
        let mut acyclic = true;
        for j in &self.junctions {
            let (x, y) = (find(&mut parent, j.a), find(&mut parent, j.b));
            if x == y {
                acyclic = false;
            } else {
                parent[x] = y;
            }
        }
        let root = find(&mut parent, 0);
        let connected = (0..self.h).all(|v| find(&mut parent, v) == root);
        if !acyclic || !connected {
            out.push(Violation::NotATree);
        }

        for hex in 0..self.h {
            let slots = self.used_slots(hex);
            for (x, &s) in slots.iter().enumerate() {
                for &t in &slots[x + 1..] {
                    match slot_distance(s, t) {
                        0 => out.push(Violation::SlotReused { hex, slot: s }),
                        1 => out.push(Violation::AdjacentSlots { hex, first: s.min(t), second: s.max(t) }),
                        _ => {}
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn check(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidTree(v))
        }
    }

    /// Slots of `hex` that carry a junction, in junction order.
    pub fn used_slots(&self, hex: usize) -> Vec<u8> {
        let mut slots = Vec::new();
        for j in &self.junctions {
            if j.a == hex {
                slots.push(j.slot_a);
            }
            if j.b == hex {
                slots.push(j.slot_b);
            }
        }
        slots
    }

    /// Whether a new junction could use `slot` of `hex`.
    pub fn slot_is_free(&self, hex: usize, slot: u8) -> bool {
        hex < self.h && slot < 6 && self.used_slots(hex).iter().all(|&s| slot_distance(s, slot) >= 2)
    }

    /// Free compatible slots of `hex`, ascending.
    pub fn free_slots(&self, hex: usize) -> Vec<u8> {
        (0..6).filter(|&s| self.slot_is_free(hex, s)).collect()
    }

    /// Number of junctions on each hexagon.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.h];
        for j in &self.junctions {
            d[j.a] += 1;
            d[j.b] += 1;
        }
        d
    }

    /// For each hexagon, `(neighbour, own slot, neighbour slot)` triples.
    pub fn hex_adjacency(&self) -> Vec<Vec<(usize, u8, u8)>> {
        let mut adj = vec![Vec::new(); self.h];
        for j in &self.junctions {
            adj[j.a].push((j.b, j.slot_a, j.slot_b));
            adj[j.b].push((j.a, j.slot_b, j.slot_a));
        }
        adj
    }

    pub fn vertex(hex: usize, j: u8) -> usize {
        6 * hex + (j % 6) as usize
    }

    /// The two quadrilateral edges realizing a junction.
    pub fn junction_edges(j: &Junction) -> [(usize, usize); 2] {
        [
            (Self::vertex(j.a, j.slot_a), Self::vertex(j.b, j.slot_b + 1)),
            (Self::vertex(j.a, j.slot_a + 1), Self::vertex(j.b, j.slot_b)),
        ]
    }

    /// The molecular graph: `6h` vertices, `8h - 2` edges.
    pub fn expand(&self) -> Result<MolecularGraph> {
        self.check()?;
        Ok(self.expand_unchecked())
    }

    pub(crate) fn expand_unchecked(&self) -> MolecularGraph {
        let mut edges = Vec::with_capacity(8 * self.h);
        for i in 0..self.h {
            for j in 0..6u8 {
                edges.push((Self::vertex(i, j), Self::vertex(i, j + 1)));
            }
        }
        for jn in &self.junctions {
            edges.extend(Self::junction_edges(jn));
        }
        MolecularGraph::from_edges(6 * self.h, &edges).expect("valid tree expands to a simple graph")
    }

    /// Attaches a new hexagon (id `h`, its slot 3) at `slot` of `hex`.
    pub fn with_leaf(&self, hex: usize, slot: u8) -> Result<Self> {
        if !self.slot_is_free(hex, slot) {
            return Err(Error::SlotConflict { hex, slot });
        }
        let mut t = self.clone();
        t.junctions.push(Junction::new(hex, slot, self.h, 3));
        t.h += 1;
        Ok(t)
    }
}

/// Joins two phenylenes by a new quadrilateral between `slot1` of `hex1` in
/// `p1` and `slot2` of `hex2` in `p2`. Hexagons of `p2` are renumbered after
/// those of `p1`.
pub fn join(
    p1: &PhenyleneTree,
    hex1: usize,
    slot1: u8,
    p2: &PhenyleneTree,
    hex2: usize,
    slot2: u8,
) -> Result<PhenyleneTree> {
    p1.check()?;
    p2.check()?;
    if !p1.slot_is_free(hex1, slot1) {
        return Err(Error::SlotConflict { hex: hex1, slot: slot1 });
    }
    if !p2.slot_is_free(hex2, slot2) {
        return Err(Error::SlotConflict { hex: hex2, slot: slot2 });
    }
    let offset = p1.h;
    let mut junctions = p1.junctions.clone();
    junctions.extend(p2.junctions.iter().map(|j| Junction::new(j.a + offset, j.slot_a, j.b + offset, j.slot_b)));
    junctions.push(Junction::new(hex1, slot1, hex2 + offset, slot2));
    Ok(PhenyleneTree { h: p1.h + p2.h, junctions })
}
