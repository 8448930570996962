//! Exhaustive generation of tree-like phenylenes up to isomorphism.
//!
//! Level `h + 1` is grown from the representatives of level `h` by attaching
//! a new hexagon at every free compatible slot; children are deduplicated by
//! the certificate of their expanded graph. Removing a terminal hexagon from
//! any phenylene leaves a phenylene, so every class is reached. Both filters
//! (no full hexagon, no geometric overlap) survive leaf removal too, so they
//! are applied while growing.
//!
//! Certificates are computed in parallel, but children are deduplicated in
//! generation order and every level is sorted by certificate, so the output is
//! identical for any thread count.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{certificate, certificate_hash};
use crate::error::{Error, Result};
use crate::phenylene::{classes_of, classify, embed, CutClass, PhenyleneTree};

pub const DEFAULT_MAX_H: usize = 9;

/// Environment variable overriding [`DEFAULT_MAX_H`].
pub const MAX_H_ENV: &str = "PHENYLENE_MAX_H";

/// Enumeration bound from [`MAX_H_ENV`], falling back to the default.
pub fn max_h_from_env() -> usize {
    std::env::var(MAX_H_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_H)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filters {
    pub chains_only: bool,
    pub planar_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub filters: Filters,
    pub max_h: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { filters: Filters::default(), max_h: DEFAULT_MAX_H }
    }
}

impl EnumerateOptions {
    pub fn with_filters(filters: Filters) -> Self {
        Self { filters, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub tree: PhenyleneTree,
    #[serde(skip)]
    pub certificate: Vec<u8>,
    /// Mostar index by the cut method.
    pub mostar: u64,
    pub overlap: bool,
    pub full_hexagons: usize,
    pub turn_hexagons: usize,
}

impl CatalogEntry {
    fn new(tree: PhenyleneTree, certificate: Vec<u8>) -> Self {
        let g = tree.expand_unchecked();
        let mostar = classes_of(&tree, &g).iter().map(CutClass::contribution).sum();
        let c = classify(&tree);
        let overlap = embed(&tree).overlap;
        Self { certificate, mostar, overlap, full_hexagons: c.full, turn_hexagons: c.turn, tree }
    }

    pub fn is_chain(&self) -> bool {
        self.full_hexagons == 0
    }

    pub fn certificate_hash(&self) -> String {
        certificate_hash(&self.certificate)
    }

    /// One JSON-lines record: tree, certificate hash, Mostar index, overlap.
    pub fn json_line(&self) -> String {
        serde_json::json!({
            "tree": self.tree,
            "certificate": self.certificate_hash(),
            "mostar": self.mostar,
            "overlap": self.overlap,
        })
        .to_string()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogCounts {
    pub total: usize,
    pub chains: usize,
    /// Classes per number of full hexagons.
    pub by_full_hexagons: BTreeMap<usize, usize>,
    pub overlapping: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCatalog {
    pub h: usize,
    pub filters: Filters,
    pub entries: Vec<CatalogEntry>,
    pub counts: CatalogCounts,
}

impl ClassCatalog {
    fn from_entries(h: usize, filters: Filters, entries: Vec<CatalogEntry>) -> Self {
        let mut counts = CatalogCounts { total: entries.len(), ..Default::default() };
        for e in &entries {
            counts.chains += e.is_chain() as usize;
            counts.overlapping += e.overlap as usize;
            *counts.by_full_hexagons.entry(e.full_hexagons).or_default() += 1;
        }
        Self { h, filters, entries, counts }
    }

    pub fn summary_json(&self) -> String {
        serde_json::json!({ "summary": { "h": self.h, "filters": self.filters, "counts": self.counts } }).to_string()
    }
}

fn admissible(child: &PhenyleneTree, filters: Filters) -> bool {
    (!filters.chains_only || child.degrees().iter().all(|&d| d <= 2)) && (!filters.planar_only || !embed(child).overlap)
}

/// Representatives of the next level, in generation order.
fn grow(level: &[PhenyleneTree], filters: Filters) -> Vec<(Vec<u8>, PhenyleneTree)> {
    let children: Vec<PhenyleneTree> = level
        .iter()
        .flat_map(|p| {
            (0..p.h).flat_map(move |hex| {
                p.free_slots(hex).into_iter().map(move |s| p.with_leaf(hex, s).expect("free slot"))
            })
        })
        .collect();
    let certified: Vec<Option<Vec<u8>>> =
        children.par_iter().map(|c| admissible(c, filters).then(|| certificate(&c.expand_unchecked()))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (child, cert) in children.into_iter().zip(certified) {
        if let Some(cert) = cert {
            if seen.insert(cert.clone()) {
                out.push((cert, child));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Catalogs for every size `1..=h`.
pub fn enumerate_up_to(h: usize, options: EnumerateOptions) -> Result<Vec<ClassCatalog>> {
    if h < 1 {
        return Err(Error::InvalidParameters("enumeration needs h >= 1".into()));
    }
    if h > options.max_h {
        return Err(Error::ResourceBound { h, max: options.max_h });
    }
    let filters = options.filters;
    let single = PhenyleneTree::single();
    let mut level = vec![(certificate(&single.expand_unchecked()), single)];
    let mut catalogs = Vec::with_capacity(h);
    for size in 1..=h {
        if size > 1 {
            let trees: Vec<PhenyleneTree> = level.iter().map(|(_, t)| t.clone()).collect();
            level = grow(&trees, filters);
        }
        let entries: Vec<CatalogEntry> =
            level.par_iter().map(|(c, t)| CatalogEntry::new(t.clone(), c.clone())).collect();
        catalogs.push(ClassCatalog::from_entries(size, filters, entries));
    }
    Ok(catalogs)
}

/// All isomorphism classes with `h` hexagons passing the filters.
pub fn enumerate(h: usize, options: EnumerateOptions) -> Result<ClassCatalog> {
    Ok(enumerate_up_to(h, options)?.pop().expect("h >= 1 gives one catalog"))
}

/// Classes grouped by Mostar index, ascending.
pub fn count_by_invariant(catalog: &ClassCatalog) -> BTreeMap<u64, Vec<&CatalogEntry>> {
    let mut map: BTreeMap<u64, Vec<&CatalogEntry>> = BTreeMap::new();
    for e in &catalog.entries {
        map.entry(e.mostar).or_default().push(e);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let cats = enumerate_up_to(4, EnumerateOptions::default()).unwrap();
        let totals: Vec<usize> = cats.iter().map(|c| c.counts.total).collect();
        assert_eq!(totals, vec![1, 1, 2, 5]);
        assert_eq!(cats[3].counts.chains, 4);
        assert_eq!(cats[3].counts.by_full_hexagons.get(&1), Some(&1));
    }

    #[test]
    fn respects_resource_bound() {
        let opts = EnumerateOptions { max_h: 3, ..Default::default() };
        assert_eq!(enumerate(4, opts).unwrap_err(), Error::ResourceBound { h: 4, max: 3 });
        assert!(enumerate(0, opts).is_err());
    }

    #[test]
    fn chains_filter() {
        let opts = EnumerateOptions::with_filters(Filters { chains_only: true, planar_only: false });
        let c = enumerate(4, opts).unwrap();
        assert_eq!(c.counts.total, 4);
        assert!(c.entries.iter().all(CatalogEntry::is_chain));
    }

    #[test]
    fn histogram_keys_are_multiples_of_six() {
        let c = enumerate(5, EnumerateOptions::default()).unwrap();
        let hist = count_by_invariant(&c);
        assert!(hist.keys().all(|k| k % 6 == 0));
        assert_eq!(hist.values().map(Vec::len).sum::<usize>(), c.counts.total);
    }

    #[test]
    fn json_line_shape() {
        let c = enumerate(2, EnumerateOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.entries[0].json_line()).unwrap();
        assert_eq!(v["mostar"], 48);
        assert_eq!(v["tree"]["h"], 2);
        assert_eq!(v["certificate"].as_str().unwrap().len(), 16);
        let s: serde_json::Value = serde_json::from_str(&c.summary_json()).unwrap();
        assert_eq!(s["summary"]["counts"]["total"], 1);
    }
}
