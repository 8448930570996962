//! Constructors for the named phenylene families.
//!
//! Every chain is grown from hexagon 0 through slot 0, and each new hexagon
//! enters through its slot 3, so along a chain the outgoing slot is 0 for a
//! straight hexagon, 1 for a left turn and 5 for a right turn.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::certificate;
use crate::error::{Error, Result};
use crate::phenylene::PhenyleneTree;

/// The linear chain `L_h`.
pub fn linear(h: usize) -> Result<PhenyleneTree> {
    if h < 1 {
        return Err(Error::InvalidParameters("linear chain needs h >= 1".into()));
    }
    let mut t = PhenyleneTree::single();
    for i in 0..h - 1 {
        t = t.with_leaf(i, 0)?;
    }
    Ok(t)
}

/// Chain with `word.len() + 2` hexagons whose internal hexagons go straight
/// (`S`), turn left (`L`) or right (`R`).
pub fn chain_from_turns(word: &str) -> Result<PhenyleneTree> {
    let mut t = PhenyleneTree::single().with_leaf(0, 0)?;
    for (i, c) in word.chars().enumerate() {
        let out = match c.to_ascii_uppercase() {
            'S' => 0,
            'L' => 1,
            'R' => 5,
            other => return Err(Error::Parse(format!("turn letter {other:?} is not one of S, L, R"))),
        };
        t = t.with_leaf(i + 1, out)?;
    }
    Ok(t)
}

/// Segment lengths of a chain: terminal segments have `t + 1` hexagons,
/// internal ones `t + 2`; `zigzag[i]` describes internal segment `i + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentSpec {
    pub t_values: Vec<usize>,
    pub zigzag: Vec<bool>,
}

impl SegmentSpec {
    /// All internal segments zigzag, as in the `C_L(t_1, ..., t_{k+1})`
    /// notation.
    pub fn zigzag(t_values: &[usize]) -> Self {
        Self { t_values: t_values.to_vec(), zigzag: vec![true; t_values.len().saturating_sub(2)] }
    }

    /// Number of turn hexagons.
    pub fn turns(&self) -> usize {
        self.t_values.len().saturating_sub(1)
    }

    pub fn hexagons(&self) -> usize {
        self.t_values.iter().sum::<usize>() + self.turns()
    }

    fn check(&self) -> Result<()> {
        let t = &self.t_values;
        if t.len() < 2 {
            return Err(Error::InvalidParameters(
                "a segment chain needs at least two t-values (use linear for L_h)".into(),
            ));
        }
        if t[0] < 1 || t[t.len() - 1] < 1 {
            return Err(Error::InvalidParameters("terminal t-values must be at least 1".into()));
        }
        if self.zigzag.len() != t.len() - 2 {
            return Err(Error::InvalidParameters(format!(
                "{} internal segments need {} side flags, got {}",
                t.len() - 2,
                t.len() - 2,
                self.zigzag.len()
            )));
        }
        Ok(())
    }

    /// The turn word realizing this spec; the first turn is a left turn.
    pub fn turn_word(&self) -> Result<String> {
        self.check()?;
        let h = self.hexagons();
        let mut word = vec!['S'; h - 2];
        let mut pos = 0;
        let mut dir = 'L';
        for (i, &t) in self.t_values[..self.t_values.len() - 1].iter().enumerate() {
            pos += if i == 0 { t } else { t + 1 };
            if i > 0 && self.zigzag[i - 1] {
                dir = if dir == 'L' { 'R' } else { 'L' };
            }
            word[pos - 1] = dir;
        }
        Ok(word.into_iter().collect())
    }
}

pub fn segment_chain(spec: &SegmentSpec) -> Result<PhenyleneTree> {
    chain_from_turns(&spec.turn_word()?)
}

/// `C_L(t_1, ..., t_{k+1})`: every internal segment zigzag.
pub fn cl(t_values: &[usize]) -> Result<PhenyleneTree> {
    segment_chain(&SegmentSpec::zigzag(t_values))
}

/// `P_L(j, k, n)`: one full hexagon with linear branches of `j`, `k`, `n`
/// hexagons at its slots 0, 2 and 4.
pub fn pl(j: usize, k: usize, n: usize) -> Result<PhenyleneTree> {
    if !(1 <= j && j <= k && k <= n) {
        return Err(Error::InvalidParameters(format!("P_L needs 1 <= j <= k <= n, got ({j}, {k}, {n})")));
    }
    let mut t = PhenyleneTree::single();
    for (slot, len) in [(0, j), (2, k), (4, n)] {
        t = t.with_leaf(0, slot)?;
        for _ in 1..len {
            t = t.with_leaf(t.h - 1, 0)?;
        }
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedTree {
    pub name: String,
    pub tree: PhenyleneTree,
}

fn named_cl(t_values: &[usize]) -> Result<NamedTree> {
    Ok(NamedTree { name: FamilySpec::Cl(t_values.to_vec()).to_string(), tree: cl(t_values)? })
}

/// `C_L(1, h-2)` and `C_L(1, h-4, 1)`.
pub fn second_minimal_set(h: usize) -> Result<[NamedTree; 2]> {
    if h < 4 {
        return Err(Error::InvalidParameters("the second-minimal chain pair needs h >= 4".into()));
    }
    Ok([named_cl(&[1, h - 2])?, named_cl(&[1, h - 4, 1])?])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThirdMinimalSet {
    pub h: usize,
    pub members: Vec<NamedTree>,
    /// Set when fewer than seven distinct members are admissible.
    pub warning: Option<String>,
}

/// The seven chains attaining the third-smallest value among chains, as far
/// as their t-values are admissible at this `h` (terminal t at least 1 with
/// `t_1 <= t_{k+1}`, internal t at least 0); members isomorphic to an earlier
/// one are dropped.
pub fn third_minimal_chain_set(h: usize) -> Result<ThirdMinimalSet> {
    if h < 5 {
        return Err(Error::InvalidParameters("the third-minimal chain set needs h >= 5".into()));
    }
    let h = h as i64;
    let candidates: [Vec<i64>; 7] = [
        vec![2, h - 3],
        vec![1, 0, h - 3],
        vec![1, h - 5, 2],
        vec![2, h - 6, 2],
        vec![1, 0, h - 5, 1],
        vec![1, 0, h - 6, 2],
        vec![1, 0, h - 6, 0, 1],
    ];
    let mut members: Vec<NamedTree> = Vec::new();
    let mut certs = Vec::new();
    for t in candidates {
        let last = t[t.len() - 1];
        if t.iter().any(|&x| x < 0) || t[0] < 1 || t[0] > last {
            continue;
        }
        let t: Vec<usize> = t.into_iter().map(|x| x as usize).collect();
        let named = named_cl(&t)?;
        let cert = certificate(&named.tree.expand()?);
        if !certs.contains(&cert) {
            certs.push(cert);
            members.push(named);
        }
    }
    let warning = (members.len() < 7)
        .then(|| format!("only {} of the seven chains are admissible and distinct at h = {h}", members.len()));
    Ok(ThirdMinimalSet { h: h as usize, members, warning })
}

/// Family grammar: `linear:h`, `chain:WORD`, `cl:t1,t2,...`, `pl:j,k,n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Linear(usize),
    Chain(String),
    Cl(Vec<usize>),
    Pl(usize, usize, usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<PhenyleneTree> {
        match self {
            Self::Linear(h) => linear(*h),
            Self::Chain(w) => chain_from_turns(w),
            Self::Cl(t) => cl(t),
            Self::Pl(j, k, n) => pl(*j, *k, *n),
        }
    }
}

fn join_numbers(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Linear(h) => write!(f, "linear:{h}"),
            Self::Chain(w) => write!(f, "chain:{w}"),
            Self::Cl(t) => write!(f, "cl:{}", join_numbers(t)),
            Self::Pl(j, k, n) => write!(f, "pl:{j},{k},{n}"),
        }
    }
}

fn parse_numbers(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}")))).collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("{s:?} is not of the form family:parameters")))?;
        match name.trim().to_ascii_lowercase().as_str() {
            "linear" => match parse_numbers(args)?.as_slice() {
                [h] => Ok(Self::Linear(*h)),
                _ => Err(Error::Parse("linear takes one parameter".into())),
            },
            "chain" => {
                let w = args.trim().to_ascii_uppercase();
                if let Some(c) = w.chars().find(|c| !matches!(c, 'S' | 'L' | 'R')) {
                    return Err(Error::Parse(format!("turn letter {c:?} is not one of S, L, R")));
                }
                Ok(Self::Chain(w))
            }
            "cl" => Ok(Self::Cl(parse_numbers(args)?)),
            "pl" => match parse_numbers(args)?.as_slice() {
                [j, k, n] => Ok(Self::Pl(*j, *k, *n)),
                _ => Err(Error::Parse("pl takes three parameters".into())),
            },
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phenylene::{classify_hexagons, segments, turn_word, SegmentKind};

    #[test]
    fn linear_has_no_turns() {
        for h in 1..8 {
            let t = linear(h).unwrap();
            assert_eq!(t.h, h);
            assert_eq!(classify_hexagons(&t).unwrap().turn, 0);
        }
        assert!(linear(0).is_err());
    }

    #[test]
    fn all_straight_word_is_linear() {
        assert_eq!(chain_from_turns("SSS").unwrap(), linear(5).unwrap());
        assert_eq!(chain_from_turns("").unwrap(), linear(2).unwrap());
        assert!(matches!(chain_from_turns("SX"), Err(Error::Parse(_))));
    }

    #[test]
    fn turn_words_of_cl() {
        assert_eq!(SegmentSpec::zigzag(&[1, 0, 1]).turn_word().unwrap(), "LR");
        assert_eq!(SegmentSpec::zigzag(&[1, 2, 1]).turn_word().unwrap(), "LSSR");
        assert_eq!(SegmentSpec::zigzag(&[2, 3]).turn_word().unwrap(), "SLSS");
        assert_eq!(SegmentSpec::zigzag(&[1, 0, 0, 0, 1]).turn_word().unwrap(), "LRLR");
        let nz = SegmentSpec { t_values: vec![1, 0, 1], zigzag: vec![false] };
        assert_eq!(nz.turn_word().unwrap(), "LL");
    }

    #[test]
    fn segment_spec_rejects_bad_values() {
        assert!(cl(&[0, 3]).is_err());
        assert!(cl(&[3]).is_err());
        assert!(cl(&[2, 0]).is_err());
        let bad = SegmentSpec { t_values: vec![1, 1, 1], zigzag: vec![] };
        assert!(segment_chain(&bad).is_err());
    }

    #[test]
    fn cl_segments() {
        let t = cl(&[1, 2, 1]).unwrap();
        let segs = segments(&t).unwrap();
        assert_eq!(segs.iter().map(|s| s.len()).collect::<Vec<_>>(), vec![2, 4, 2]);
        assert_eq!(segs[1].kind, SegmentKind::Zigzag);
        assert_eq!(turn_word(&t).unwrap(), "LSSR");
    }

    #[test]
    fn pl_shape() {
        let t = pl(1, 1, 1).unwrap();
        let c = classify_hexagons(&t).unwrap();
        assert_eq!((t.h, c.full, c.terminal), (4, 1, 3));
        assert_eq!(pl(1, 2, 3).unwrap().h, 7);
        assert!(pl(2, 1, 1).is_err());
        assert!(pl(0, 1, 1).is_err());
    }

    #[test]
    fn third_set_sizes() {
        assert!(third_minimal_chain_set(4).is_err());
        let s5 = third_minimal_chain_set(5).unwrap();
        assert_eq!(s5.members.len(), 3);
        assert!(s5.warning.is_some());
        let s6 = third_minimal_chain_set(6).unwrap();
        let names: Vec<_> = s6.members.iter().map(|m| m.name.as_str()).collect();
        assert_eq!(
            names,
            vec!["cl:2,3", "cl:1,0,3", "cl:1,1,2", "cl:2,0,2", "cl:1,0,1,1", "cl:1,0,0,2", "cl:1,0,0,0,1"]
        );
        assert!(s6.warning.is_none());
    }

    #[test]
    fn grammar_round_trip() {
        for s in ["linear:6", "chain:LRS", "cl:1,0,3", "pl:1,1,3", "chain:"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("pl:1,1".parse::<FamilySpec>().is_err());
        assert!("tree:3".parse::<FamilySpec>().is_err());
        assert!("linear".parse::<FamilySpec>().is_err());
        assert!("cl:1,x".parse::<FamilySpec>().is_err());
        assert_eq!("pl:1,1,3".parse::<FamilySpec>().unwrap().build().unwrap().h, 6);
        assert!("pl:2,1,1".parse::<FamilySpec>().unwrap().build().is_err());
    }
}
