//! Back-matching phenylenes to family names.
//!
//! A name is only returned after the named family has been rebuilt and its
//! certificate compared with the input, so a class is never mislabeled.

use crate::canon::{certificate, certificate_hash};
use crate::families::FamilySpec;
use crate::phenylene::{classify, segments, turn_word, HexClass, PhenyleneTree, SegmentKind};

fn swap_turns(w: &str) -> String {
    w.chars()
        .map(|c| match c {
            'L' => 'R',
            'R' => 'L',
            c => c,
        })
        .collect()
}

/// Least of the four turn words describing the same chain (mirror image and
/// reversed traversal).
pub fn canonical_turn_word(w: &str) -> String {
    let rev: String = w.chars().rev().collect();
    [w.to_string(), swap_turns(w), swap_turns(&rev), rev].into_iter().min().expect("non-empty")
}

fn candidate(t: &PhenyleneTree) -> Option<FamilySpec> {
    let labels = classify(t).labels;
    let full: Vec<usize> = (0..t.h).filter(|&i| labels[i] == HexClass::Full).collect();
    match full.as_slice() {
        [] => chain_candidate(t),
        [f] => pl_candidate(t, *f, &labels),
        _ => None,
    }
}

fn chain_candidate(t: &PhenyleneTree) -> Option<FamilySpec> {
    let segs = segments(t).ok()?;
    if segs.len() == 1 {
        return Some(FamilySpec::Linear(t.h));
    }
    if segs[1..segs.len() - 1].iter().all(|s| s.kind == SegmentKind::Zigzag) {
        let last = segs.len() - 1;
        let mut tv: Vec<usize> =
            segs.iter().enumerate().map(|(i, s)| if i == 0 || i == last { s.len() - 1 } else { s.len() - 2 }).collect();
        let rev: Vec<usize> = tv.iter().rev().copied().collect();
        if rev < tv {
            tv = rev;
        }
        return Some(FamilySpec::Cl(tv));
    }
    Some(FamilySpec::Chain(canonical_turn_word(&turn_word(t).ok()?)))
}

fn pl_candidate(t: &PhenyleneTree, full: usize, labels: &[HexClass]) -> Option<FamilySpec> {
    let adj = t.hex_adjacency();
    let mut lengths = Vec::with_capacity(3);
    for &(first, _, _) in &adj[full] {
        let (mut prev, mut cur, mut len) = (full, first, 1);
        loop {
            match labels[cur] {
                HexClass::Terminal => break,
                HexClass::Straight => {
                    let next = adj[cur].iter().find(|x| x.0 != prev)?.0;
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                _ => return None,
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Some(FamilySpec::Pl(lengths[0], lengths[1], lengths[2]))
}

/// Family name of `t` with a precomputed certificate, verified by rebuilding.
pub fn family_name_with_certificate(t: &PhenyleneTree, cert: &[u8]) -> Option<FamilySpec> {
    let spec = candidate(t)?;
    let rebuilt = spec.build().ok()?;
    (certificate(&rebuilt.expand().ok()?) == cert).then_some(spec)
}

pub fn family_name(t: &PhenyleneTree) -> Option<FamilySpec> {
    let cert = certificate(&t.expand().ok()?);
    family_name_with_certificate(t, &cert)
}

/// Family name if recognized, else `cert:` plus the certificate hash.
pub fn display_name(t: &PhenyleneTree, cert: &[u8]) -> String {
    match family_name_with_certificate(t, cert) {
        Some(f) => f.to_string(),
        None => format!("cert:{}", certificate_hash(cert)),
    }
}
