use serde::{Deserialize, Serialize};

use super::geometry::{embed, Point};
use super::tree::{slot_distance, PhenyleneTree};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HexClass {
    /// No junction (only in the single-hexagon phenylene).
    Isolated,
    Terminal,
    /// Two junctions on opposite edges.
    Straight,
    /// Two junctions two slots apart; the free degree-2 vertices are adjacent.
    Turn,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub labels: Vec<HexClass>,
    pub terminal: usize,
    pub straight: usize,
    pub turn: usize,
    pub full: usize,
}

impl Classification {
    pub fn is_chain(&self) -> bool {
        self.full == 0
    }
}

pub fn classify_hexagons(t: &PhenyleneTree) -> Result<Classification> {
    t.check()?;
    Ok(classify(t))
}

pub(crate) fn classify(t: &PhenyleneTree) -> Classification {
    let labels: Vec<HexClass> = (0..t.h)
        .map(|hex| {
            let slots = t.used_slots(hex);
            match slots.len() {
                0 => HexClass::Isolated,
                1 => HexClass::Terminal,
                2 if slot_distance(slots[0], slots[1]) == 3 => HexClass::Straight,
                2 => HexClass::Turn,
                _ => HexClass::Full,
            }
        })
        .collect();
    let count = |c: HexClass| labels.iter().filter(|&&l| l == c).count();
    Classification {
        terminal: count(HexClass::Terminal),
        straight: count(HexClass::Straight),
        turn: count(HexClass::Turn),
        full: count(HexClass::Full),
        labels,
    }
}

/// Hexagons of a chain in path order, starting from the terminal hexagon with
/// the smaller id.
pub fn chain_order(t: &PhenyleneTree) -> Result<Vec<usize>> {
    t.check()?;
    if !classify(t).is_chain() {
        return Err(Error::NotAChain);
    }
    Ok(path_order(t))
}

fn path_order(t: &PhenyleneTree) -> Vec<usize> {
    if t.h == 1 {
        return vec![0];
    }
    let adj = t.hex_adjacency();
    let start = (0..t.h).find(|&i| adj[i].len() == 1).expect("a chain has a terminal hexagon");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&(next, _, _)) = adj[cur].iter().find(|&&(n, _, _)| n != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Turn word of a chain in path order: one letter per internal hexagon,
/// `S` straight, `L` left turn, `R` right turn (relative to the direction of
/// travel, with hexagons labelled counter-clockwise).
pub fn turn_word(t: &PhenyleneTree) -> Result<String> {
    let order = chain_order(t)?;
    let adj = t.hex_adjacency();
    let slot_towards = |from: usize, to: usize| adj[from].iter().find(|x| x.0 == to).expect("path neighbours").1;
    Ok(order
        .windows(3)
        .map(|w| {
            let incoming = slot_towards(w[1], w[0]);
            let outgoing = slot_towards(w[1], w[2]);
            match (outgoing as i16 - incoming as i16).rem_euclid(6) {
                3 => 'S',
                4 => 'L',
                2 => 'R',
                _ => unreachable!("valid trees have no adjacent slots"),
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentKind {
    Terminal,
    Zigzag,
    NonZigzag,
}

/// A maximal linear sub-chain. Consecutive segments share their bounding
/// turn hexagon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub hexagons: Vec<usize>,
    pub kind: SegmentKind,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.hexagons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hexagons.is_empty()
    }
}

/// Segment decomposition of a chain, end to end along [`chain_order`]. An
/// internal segment is zigzag when the hexagons just outside it lie on
/// opposite sides of the line through its centres, decided on the exact
/// embedding.
pub fn segments(t: &PhenyleneTree) -> Result<Vec<Segment>> {
    let order = chain_order(t)?;
    let labels = classify(t).labels;
    let turns: Vec<usize> = (0..order.len()).filter(|&p| labels[order[p]] == HexClass::Turn).collect();
    if turns.is_empty() {
        return Ok(vec![Segment { hexagons: order, kind: SegmentKind::Terminal }]);
    }
    let emb = embed(t);
    let center = |p: usize| emb.centers[order[p]];
    let mut bounds = vec![0];
    bounds.extend(&turns);
    bounds.push(order.len() - 1);
    let last = bounds.len() - 2;
    Ok(bounds
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let (from, to) = (w[0], w[1]);
            let kind = if i == 0 || i == last {
                SegmentKind::Terminal
            } else {
                let before = Point::orient(center(from), center(to), center(from - 1)).signum();
                let after = Point::orient(center(from), center(to), center(to + 1)).signum();
                if before == after {
                    SegmentKind::NonZigzag
                } else {
                    SegmentKind::Zigzag
                }
            };
            Segment { hexagons: order[from..=to].to_vec(), kind }
        })
        .collect())
}
