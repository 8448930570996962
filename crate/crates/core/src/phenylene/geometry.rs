//! Exact planar embedding with unit edges.
//!
//! Coordinates live in `Q(sqrt 3)`; a [`Point`] stores twice the true
//! coordinates as [`Surd`]s `a + b*sqrt(3)` with integer `a`, `b`, so every
//! vertex, hexagon centre and square corner is represented exactly. All
//! hexagons share one orientation, so face edges only point in multiples of
//! 30 degrees and six projection axes settle every overlap question.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::tree::PhenyleneTree;
use crate::error::Result;

/// `a + b * sqrt(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Surd {
    pub a: i64,
    pub b: i64,
}

impl Surd {
    pub const ZERO: Surd = Surd { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn signum(self) -> i32 {
        let (a, b) = (self.a as i128, self.b as i128);
        let sa = a.signum();
        let sb = b.signum();
        if sa >= 0 && sb >= 0 {
            return (sa + sb).signum() as i32;
        }
        if sa <= 0 && sb <= 0 {
            return -1;
        }
        // opposite signs: compare a^2 with 3 b^2
        let diff = a * a - 3 * b * b;
        (if sa > 0 { diff.signum() } else { -diff.signum() }) as i32
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * 3f64.sqrt()
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        Surd::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        Surd::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::new(-self.a, -self.b)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        Surd::new(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

/// A point with doubled coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Point {
    pub x2: Surd,
    pub y2: Surd,
}

impl Point {
    const fn new(xa: i64, xb: i64, ya: i64, yb: i64) -> Self {
        Self { x2: Surd::new(xa, xb), y2: Surd::new(ya, yb) }
    }

    pub fn to_f64(self) -> (f64, f64) {
        (self.x2.to_f64() / 2.0, self.y2.to_f64() / 2.0)
    }

    /// Four times the cross product `(b - a) x (c - a)`; positive when `c` lies
    /// to the left of the directed line `a -> b`.
    pub fn orient(a: Point, b: Point, c: Point) -> Surd {
        let (ux, uy) = (b.x2 - a.x2, b.y2 - a.y2);
        let (vx, vy) = (c.x2 - a.x2, c.y2 - a.y2);
        ux * vy - uy * vx
    }

    fn dot(self, axis: Point) -> Surd {
        self.x2 * axis.x2 + self.y2 * axis.y2
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point { x2: self.x2 + o.x2, y2: self.y2 + o.y2 }
    }
}

/// Doubled unit vectors at 60 * d degrees: hexagon vertex offsets.
const VERTEX_DIR: [Point; 6] = [
    Point::new(2, 0, 0, 0),
    Point::new(1, 0, 0, 1),
    Point::new(-1, 0, 0, 1),
    Point::new(-2, 0, 0, 0),
    Point::new(-1, 0, 0, -1),
    Point::new(1, 0, 0, -1),
];

/// Doubled centre-to-centre steps across a quadrilateral: length `1 + sqrt 3`
/// at 60 * d + 30 degrees.
const CENTER_STEP: [Point; 6] = [
    Point::new(3, 1, 1, 1),
    Point::new(0, 0, 2, 2),
    Point::new(-3, -1, 1, 1),
    Point::new(-3, -1, -1, -1),
    Point::new(0, 0, -2, -2),
    Point::new(3, 1, -1, -1),
];

/// Projection axes at multiples of 30 degrees (doubled, unnormalized is fine
/// for separation tests).
const AXES: [Point; 6] = [
    Point::new(2, 0, 0, 0),
    Point::new(0, 1, 1, 0),
    Point::new(1, 0, 0, 1),
    Point::new(0, 0, 2, 0),
    Point::new(-1, 0, 0, 1),
    Point::new(0, -1, 1, 0),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// Hexagon `i` puts its local vertex `j` at direction `rotation[i] + j`.
    pub rotation: Vec<u8>,
    pub centers: Vec<Point>,
    /// Indexed by expanded vertex id `6 * hex + j`.
    pub vertices: Vec<Point>,
    /// Two faces that share no vertex touch or intersect.
    pub overlap: bool,
}

impl Embedding {
    /// Whether every hexagon centre lies on one line.
    pub fn centers_collinear(&self) -> bool {
        if self.centers.len() < 3 {
            return true;
        }
        let (a, b) = (self.centers[0], self.centers[1]);
        self.centers[2..].iter().all(|&c| Point::orient(a, b, c).signum() == 0)
    }
}

/// Exact coordinates of every vertex, plus the overlap flag.
pub fn geometric_embedding(t: &PhenyleneTree) -> Result<Embedding> {
    t.check()?;
    Ok(embed(t))
}

pub(crate) fn embed(t: &PhenyleneTree) -> Embedding {
    let adj = t.hex_adjacency();
    let mut rotation = vec![u8::MAX; t.h];
    let mut centers = vec![Point::default(); t.h];
    rotation[0] = 0;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for &(y, own, other) in &adj[x] {
            if rotation[y] != u8::MAX {
                continue;
            }
            let dir = (rotation[x] + own) % 6;
            // the neighbour's slot faces back across the square
            rotation[y] = ((dir as i16 + 3 - other as i16).rem_euclid(6)) as u8;
            centers[y] = centers[x] + CENTER_STEP[dir as usize];
            stack.push(y);
        }
    }
    let vertices: Vec<Point> = (0..t.h)
        .flat_map(|i| {
            let (r, c) = (rotation[i], centers[i]);
            (0..6u8).map(move |j| c + VERTEX_DIR[((r + j) % 6) as usize])
        })
        .collect();
    let overlap = faces_overlap(t, &vertices);
    Embedding { rotation, centers, vertices, overlap }
}

struct Face {
    vertices: Vec<usize>,
}

fn faces(t: &PhenyleneTree) -> Vec<Face> {
    let mut out: Vec<Face> =
        (0..t.h).map(|i| Face { vertices: (0..6).map(|j| PhenyleneTree::vertex(i, j)).collect() }).collect();
    for jn in &t.junctions {
        out.push(Face {
            vertices: vec![
                PhenyleneTree::vertex(jn.a, jn.slot_a),
                PhenyleneTree::vertex(jn.a, jn.slot_a + 1),
                PhenyleneTree::vertex(jn.b, jn.slot_b),
                PhenyleneTree::vertex(jn.b, jn.slot_b + 1),
            ],
        });
    }
    out
}

fn projection(face: &Face, coords: &[Point], axis: Point) -> (Surd, Surd) {
    let mut it = face.vertices.iter().map(|&v| coords[v].dot(axis));
    let first = it.next().expect("faces have vertices");
    it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x)))
}

/// Closed convex faces intersect unless some axis separates them strictly.
fn intersect(f: &Face, g: &Face, coords: &[Point]) -> bool {
    AXES.iter().all(|&axis| {
        let (flo, fhi) = projection(f, coords, axis);
        let (glo, ghi) = projection(g, coords, axis);
        !(fhi < glo || ghi < flo)
    })
}

fn faces_overlap(t: &PhenyleneTree, coords: &[Point]) -> bool {
    let fs = faces(t);
    for (i, f) in fs.iter().enumerate() {
        for g in &fs[i + 1..] {
            let incident = f.vertices.iter().any(|v| g.vertices.contains(v));
            if !incident && intersect(f, g, coords) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phenylene::tree::Junction;

    fn dist2(p: Point, q: Point) -> Surd {
        let (dx, dy) = (p.x2 - q.x2, p.y2 - q.y2);
        dx * dx + dy * dy
    }

    #[test]
    fn surd_sign() {
        assert_eq!(Surd::new(2, -1).signum(), 1); // 2 > sqrt 3
        assert_eq!(Surd::new(1, -1).signum(), -1);
        assert_eq!(Surd::new(-5, 3).signum(), 1); // 3 sqrt 3 > 5
        assert_eq!(Surd::new(-6, 3).signum(), -1);
        assert_eq!(Surd::ZERO.signum(), 0);
        assert_eq!(Surd::new(0, -2).signum(), -1);
        assert!(Surd::new(1, 1) > Surd::new(2, 0));
    }

    #[test]
    fn every_edge_has_unit_length() {
        let t = PhenyleneTree::new(
            4,
            vec![Junction::new(0, 0, 1, 3), Junction::new(1, 1, 2, 3), Junction::new(0, 2, 3, 5)],
        )
        .unwrap();
        let e = geometric_embedding(&t).unwrap();
        // doubled coordinates: unit length squared becomes 4
        for &(u, v) in t.expand().unwrap().edges() {
            assert_eq!(dist2(e.vertices[u], e.vertices[v]), Surd::new(4, 0), "edge {u}-{v}");
        }
        assert!(!e.overlap);
    }

    #[test]
    fn squares_are_squares() {
        let t = PhenyleneTree::new(2, vec![Junction::new(0, 2, 1, 4)]).unwrap();
        let e = geometric_embedding(&t).unwrap();
        let p = |hex, j| e.vertices[PhenyleneTree::vertex(hex, j)];
        // diagonals of a unit square have length sqrt 2
        assert_eq!(dist2(p(0, 2), p(1, 4)), Surd::new(8, 0));
        assert_eq!(dist2(p(0, 3), p(1, 5)), Surd::new(8, 0));
    }

    #[test]
    fn straight_chain_is_collinear() {
        let t = PhenyleneTree::new(3, vec![Junction::new(0, 0, 1, 3), Junction::new(1, 0, 2, 3)]).unwrap();
        let e = geometric_embedding(&t).unwrap();
        assert!(e.centers_collinear());
        let t = PhenyleneTree::new(3, vec![Junction::new(0, 0, 1, 3), Junction::new(1, 1, 2, 3)]).unwrap();
        assert!(!geometric_embedding(&t).unwrap().centers_collinear());
    }
}
