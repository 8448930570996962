//! Computational checks of the transformation inequalities and of the value
//! orderings between families.
//!
//! The transformation checks take one concrete instance and report both sides
//! of the inequality; the `*_trials` drivers draw instances from exhaustive
//! catalogs with a seeded generator so that a run is reproducible from its
//! seed.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_up_to, ClassCatalog, EnumerateOptions};
use crate::error::{Error, Result};
use crate::families::{cl, linear, pl};
use crate::phenylene::{classify, cut_classes, join, mostar_cut, HexClass, PhenyleneTree};

/// Cut class through the edge `(u, v)`: its size and the hexagon counts on
/// `u`'s and on `v`'s side.
pub fn split_at_edge(t: &PhenyleneTree, u: usize, v: usize) -> Result<(usize, usize, usize)> {
    let classes = cut_classes(t)?;
    let class = classes.iter().find(|c| c.contains(u, v)).ok_or(Error::NotAnEdge(u, v))?;
    let g = t.expand()?.without_edges(&class.edges);
    let (_, comp) = g.components();
    let count = |c: usize| (0..t.h).filter(|&hex| (0..6).all(|j| comp[6 * hex + j] == c)).count();
    Ok((class.size(), count(comp[u]), count(comp[v])))
}

/// Attaching `L_k` to a free edge `st` of `P`, through each of the three free
/// edges of its terminal hexagon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationCheck {
    pub n: usize,
    pub k: usize,
    pub cut_size: usize,
    pub r_small: usize,
    pub r_large: usize,
    /// Meta attachment whose body joins the side with fewer hexagons.
    pub mo_toward_small: u64,
    /// Para attachment, continuing the cut through the whole branch.
    pub mo_straight: u64,
    /// Meta attachment whose body joins the larger side.
    pub mo_toward_large: u64,
    pub predicted_equal: bool,
    pub holds: bool,
}

pub fn check_branch_orientation(p: &PhenyleneTree, hex: usize, slot: u8, k: usize) -> Result<OrientationCheck> {
    let n = p.h;
    if k < 2 || n + 1 < k {
        return Err(Error::InvalidParameters(format!("need k >= 2 and n >= k - 1, got n = {n}, k = {k}")));
    }
    if !p.slot_is_free(hex, slot) {
        return Err(Error::SlotConflict { hex, slot });
    }
    let (s, t) = (PhenyleneTree::vertex(hex, slot), PhenyleneTree::vertex(hex, slot + 1));
    let (cut_size, r_s, r_t) = split_at_edge(p, s, t)?;
    let small_is_s = r_s <= r_t;
    let (r_small, r_large) = if small_is_s { (r_s, r_t) } else { (r_t, r_s) };

    let branch = linear(k)?;
    let tip = k - 1;
    let straight = join(p, hex, slot, &branch, tip, 0)?;
    let metas = [join(p, hex, slot, &branch, tip, 5)?, join(p, hex, slot, &branch, tip, 1)?];
    let mut toward_small = None;
    let mut toward_large = None;
    for m in &metas {
        let (_, rs, rt) = split_at_edge(m, s, t)?;
        let gained = if small_is_s { rs - r_s } else { rt - r_t };
        if gained == k - 1 && toward_small.is_none() {
            toward_small = Some(m);
        } else {
            toward_large = Some(m);
        }
    }
    let mo_straight = mostar_cut(&straight)?;
    let (Some(a), Some(b)) = (toward_small, toward_large) else {
        return Err(Error::InvalidParameters("meta attachments do not split the cut as expected".into()));
    };
    let mo_toward_small = mostar_cut(a)?;
    let mo_toward_large = mostar_cut(b)?;
    let predicted_equal = r_large - r_small >= k - 1 && r_small == 0;
    let holds = mo_straight <= mo_toward_small
        && (mo_straight == mo_toward_small) == predicted_equal
        && mo_straight < mo_toward_large;
    Ok(OrientationCheck {
        n,
        k,
        cut_size,
        r_small,
        r_large,
        mo_toward_small,
        mo_straight,
        mo_toward_large,
        predicted_equal,
        holds,
    })
}

/// The single free edge of a turn hexagon.
pub fn turn_free_slot(p: &PhenyleneTree, hex: usize) -> Result<u8> {
    if classify(p).labels.get(hex) != Some(&HexClass::Turn) {
        return Err(Error::InvalidParameters(format!("hexagon {hex} is not a turn hexagon")));
    }
    Ok(p.free_slots(hex)[0])
}

/// `P` with a turn hexagon gets either `L_k` (through its terminal para edge)
/// or an arbitrary chain `C_k` (through a free edge of a terminal hexagon).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearBranchCheck {
    pub n: usize,
    pub k: usize,
    pub mo_linear_branch: u64,
    pub mo_chain_branch: u64,
    pub holds: bool,
}

pub fn check_linear_branch_minimal(
    p: &PhenyleneTree,
    turn_hex: usize,
    chain: &PhenyleneTree,
    chain_hex: usize,
    chain_slot: u8,
) -> Result<LinearBranchCheck> {
    let slot = turn_free_slot(p, turn_hex)?;
    let c = classify(chain);
    if !c.is_chain() {
        return Err(Error::NotAChain);
    }
    if !matches!(c.labels.get(chain_hex), Some(HexClass::Terminal | HexClass::Isolated)) {
        return Err(Error::InvalidParameters(format!("hexagon {chain_hex} is not a terminal hexagon")));
    }
    let k = chain.h;
    let mo_linear_branch = mostar_cut(&join(p, turn_hex, slot, &linear(k)?, k - 1, 0)?)?;
    let mo_chain_branch = mostar_cut(&join(p, turn_hex, slot, chain, chain_hex, chain_slot)?)?;
    Ok(LinearBranchCheck { n: p.h, k, mo_linear_branch, mo_chain_branch, holds: mo_linear_branch <= mo_chain_branch })
}

/// Two linear branches `L_k`, `L_j` on the two meta edges of a terminal
/// hexagon `R` (making it full) against one branch `L_{j+k}` on its para
/// edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchMergeCheck {
    pub n: usize,
    pub j: usize,
    pub k: usize,
    pub r_s: usize,
    pub r_t: usize,
    pub mo_split: u64,
    pub mo_merged: u64,
    pub holds: bool,
}

pub fn check_branch_merge(p: &PhenyleneTree, terminal: usize, j: usize, k: usize) -> Result<BranchMergeCheck> {
    let n = p.h.saturating_sub(1);
    if j < 1 || k < 1 || n < j.max(k) {
        return Err(Error::InvalidParameters(format!(
            "need j, k >= 1 and n >= max(j, k), got n = {n}, j = {j}, k = {k}"
        )));
    }
    let used = p.used_slots(terminal);
    let [q] = used.as_slice() else {
        return Err(Error::InvalidParameters(format!("hexagon {terminal} is not a terminal hexagon")));
    };
    let para = (q + 3) % 6;
    let (a, b) = (PhenyleneTree::vertex(terminal, para), PhenyleneTree::vertex(terminal, para + 1));
    let (_, r_a, r_b) = split_at_edge(p, a, b)?;
    // t is the endpoint on the larger side; L_k goes on the meta edge at t
    let (r_s, r_t, t_slot, s_slot) =
        if r_b >= r_a { (r_a, r_b, (q + 4) % 6, (q + 2) % 6) } else { (r_b, r_a, (q + 2) % 6, (q + 4) % 6) };
    let with_k = join(p, terminal, t_slot, &linear(k)?, k - 1, 0)?;
    let split = join(&with_k, terminal, s_slot, &linear(j)?, j - 1, 0)?;
    let merged = join(p, terminal, para, &linear(j + k)?, j + k - 1, 0)?;
    let mo_split = mostar_cut(&split)?;
    let mo_merged = mostar_cut(&merged)?;
    Ok(BranchMergeCheck { n, j, k, r_s, r_t, mo_split, mo_merged, holds: mo_merged < mo_split })
}

/// `Mo(C_L(j, h-j-1))` for `j = 1..=floor((h-1)/2)`, which should increase
/// strictly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceCheck {
    pub h: usize,
    pub values: Vec<(usize, u64)>,
    pub holds: bool,
}

pub fn check_two_segment_ordering(h: usize) -> Result<SequenceCheck> {
    if h < 4 {
        return Err(Error::InvalidParameters("two-segment ordering needs h >= 4".into()));
    }
    let values = (1..=(h - 1) / 2).map(|j| Ok((j, mostar_cut(&cl(&[j, h - j - 1])?)?))).collect::<Result<Vec<_>>>()?;
    let holds = values.windows(2).all(|w| w[0].1 < w[1].1);
    Ok(SequenceCheck { h, values, holds })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlComparison {
    pub j: usize,
    pub k: usize,
    pub n: usize,
    pub mo: u64,
    pub expected: Ordering,
    pub observed: Ordering,
}

/// Every `P_L(j,k,n)` with `h` hexagons compared against one reference chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlComparisonCheck {
    pub h: usize,
    pub reference: String,
    pub reference_value: u64,
    pub rows: Vec<PlComparison>,
    pub holds: bool,
}

fn pl_triples(h: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for j in 1..h {
        for k in j..h {
            if j + k + 1 < h {
                let n = h - 1 - j - k;
                if n >= k {
                    out.push((j, k, n));
                }
            }
        }
    }
    out
}

fn compare_pl(
    h: usize,
    reference: &[usize],
    expected: impl Fn(usize, usize, usize) -> Ordering,
) -> Result<PlComparisonCheck> {
    let reference_value = mostar_cut(&cl(reference)?)?;
    let mut rows = Vec::new();
    for (j, k, n) in pl_triples(h) {
        let mo = mostar_cut(&pl(j, k, n)?)?;
        rows.push(PlComparison { j, k, n, mo, expected: expected(j, k, n), observed: mo.cmp(&reference_value) });
    }
    let holds = rows.iter().all(|r| r.expected == r.observed);
    let name = reference.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    Ok(PlComparisonCheck { h, reference: format!("cl:{name}"), reference_value, rows, holds })
}

/// `P_L(j,k,n)` against `C_L(2, h-3)`: below it only for `P_L(1,1,h-3)` and
/// `P_L(2,2,2)`, tied only for `P_L(1,2,2)`, above it otherwise.
pub fn check_pl_vs_third_chain(h: usize) -> Result<PlComparisonCheck> {
    if h < 5 {
        return Err(Error::InvalidParameters("comparison with C_L(2, h-3) needs h >= 5".into()));
    }
    compare_pl(h, &[2, h - 3], |j, k, n| match (j, k, n) {
        (1, 2, 2) => Ordering::Equal,
        (2, 2, 2) => Ordering::Less,
        (1, 1, _) => Ordering::Less,
        _ => Ordering::Greater,
    })
}

/// `P_L(j,k,n)` against `C_L(1, h-2)`: above it when `n >= 2`, below it for
/// `P_L(1,1,1)`.
pub fn check_pl_vs_second_chain(h: usize) -> Result<PlComparisonCheck> {
    if h < 4 {
        return Err(Error::InvalidParameters("comparison with C_L(1, h-2) needs h >= 4".into()));
    }
    compare_pl(h, &[1, h - 2], |_, _, n| if n >= 2 { Ordering::Greater } else { Ordering::Less })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub name: String,
    pub seed: u64,
    pub max_h: usize,
    pub trials: usize,
    pub passed: usize,
    /// Trials where both sides were equal.
    pub equalities: usize,
    pub failures: Vec<String>,
}

impl TrialSummary {
    fn new(name: &str, seed: u64, max_h: usize) -> Self {
        Self { name: name.into(), seed, max_h, trials: 0, passed: 0, equalities: 0, failures: Vec::new() }
    }

    fn record(&mut self, holds: bool, equal: bool, describe: impl FnOnce() -> String) {
        self.trials += 1;
        self.equalities += equal as usize;
        if holds {
            self.passed += 1;
        } else {
            self.failures.push(describe());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Uniform sampling over isomorphism classes of each size.
pub struct ClassSampler {
    catalogs: Vec<ClassCatalog>,
}

impl ClassSampler {
    /// Catalogs for sizes `1..=max_n`.
    pub fn new(max_n: usize) -> Result<Self> {
        let options = EnumerateOptions { max_h: max_n.max(1), ..Default::default() };
        Ok(Self { catalogs: enumerate_up_to(max_n.max(1), options)? })
    }

    pub fn catalog(&self, n: usize) -> &ClassCatalog {
        &self.catalogs[n - 1]
    }

    /// A uniformly chosen class of size `n` satisfying `keep`.
    pub fn pick<R: Rng>(&self, rng: &mut R, n: usize, keep: impl Fn(&PhenyleneTree) -> bool) -> Option<&PhenyleneTree> {
        let pool: Vec<&PhenyleneTree> = self.catalog(n).entries.iter().map(|e| &e.tree).filter(|t| keep(t)).collect();
        pool.choose(rng).copied()
    }
}

fn pick_pair<R: Rng>(rng: &mut R, pairs: &[(usize, usize)], what: &str) -> Result<(usize, usize)> {
    pairs
        .choose(rng)
        .copied()
        .ok_or_else(|| Error::InvalidParameters(format!("no admissible {what} within the size bound")))
}

/// Random instances of [`check_branch_orientation`] with `n + k <= max_h`.
pub fn orientation_trials(trials: usize, seed: u64, max_h: usize) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> =
        (2..max_h).flat_map(|k| (k.saturating_sub(1).max(1)..=max_h - k).map(move |n| (n, k))).collect();
    let sampler = ClassSampler::new(max_h.saturating_sub(2))?;
    let mut summary = TrialSummary::new("branch-orientation", seed, max_h);
    for _ in 0..trials {
        let (n, k) = pick_pair(&mut rng, &pairs, "(n, k)")?;
        let p = sampler.pick(&mut rng, n, |_| true).expect("every size has a class");
        let free: Vec<(usize, u8)> =
            (0..p.h).flat_map(|hex| p.free_slots(hex).into_iter().map(move |s| (hex, s))).collect();
        let &(hex, slot) = free.choose(&mut rng).expect("a phenylene has a free edge");
        let c = check_branch_orientation(p, hex, slot, k)?;
        summary.record(c.holds, c.mo_straight == c.mo_toward_small, || {
            format!("{} hex {hex} slot {slot} k {k}: {c:?}", p.to_json())
        });
    }
    Ok(summary)
}

/// Random instances of [`check_linear_branch_minimal`] with `n + k <= max_h`.
pub fn linear_branch_trials(trials: usize, seed: u64, max_h: usize) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (3..max_h).flat_map(|n| (1..=max_h - n).map(move |k| (n, k))).collect();
    let sampler = ClassSampler::new(max_h.saturating_sub(1))?;
    let has_turn = |t: &PhenyleneTree| classify(t).turn > 0;
    let mut summary = TrialSummary::new("linear-branch", seed, max_h);
    for _ in 0..trials {
        let (n, k) = pick_pair(&mut rng, &pairs, "(n, k)")?;
        let p = sampler.pick(&mut rng, n, has_turn).expect("n >= 3 has a class with a turn");
        let labels = classify(p).labels;
        let turns: Vec<usize> = (0..p.h).filter(|&i| labels[i] == HexClass::Turn).collect();
        let turn_hex = *turns.choose(&mut rng).expect("filtered for turns");
        let chain = sampler.pick(&mut rng, k, |t| classify(t).is_chain()).expect("chains exist");
        let ends: Vec<usize> = (0..chain.h).filter(|&i| chain.used_slots(i).len() <= 1).collect();
        let end = *ends.choose(&mut rng).expect("chain has an end");
        let slot = *chain.free_slots(end).choose(&mut rng).expect("terminal hexagon has free edges");
        let c = check_linear_branch_minimal(p, turn_hex, chain, end, slot)?;
        summary.record(c.holds, c.mo_linear_branch == c.mo_chain_branch, || {
            format!("{} turn {turn_hex} with {} at hex {end} slot {slot}: {c:?}", p.to_json(), chain.to_json())
        });
    }
    Ok(summary)
}

/// Random instances of [`check_branch_merge`] with `j + k + n + 1 <= max_h`.
pub fn merge_trials(trials: usize, seed: u64, max_h: usize) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triples = Vec::new();
    for n in 1..max_h {
        for j in 1..=n {
            for k in 1..=n {
                if j + k + n < max_h {
                    triples.push((n, j, k));
                }
            }
        }
    }
    if triples.is_empty() {
        return Err(Error::InvalidParameters("no admissible (n, j, k) within the size bound".into()));
    }
    let sampler = ClassSampler::new(max_h.saturating_sub(2))?;
    let mut summary = TrialSummary::new("branch-merge", seed, max_h);
    for _ in 0..trials {
        let &(n, j, k) = triples.choose(&mut rng).expect("non-empty");
        let p = sampler.pick(&mut rng, n + 1, |_| true).expect("every size has a class");
        let ends: Vec<usize> = (0..p.h).filter(|&i| p.used_slots(i).len() == 1).collect();
        let end = *ends.choose(&mut rng).expect("trees with two or more hexagons have leaves");
        let c = check_branch_merge(p, end, j, k)?;
        summary.record(c.holds, c.mo_split == c.mo_merged, || {
            format!("{} terminal {end} j {j} k {k}: {c:?}", p.to_json())
        });
    }
    Ok(summary)
}
