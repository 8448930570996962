//! Ranking of whole catalogs by Mostar index and verdicts on the three
//! smallest values.
//!
//! Every verdict carries the expected value (from the closed forms) and the
//! observed one, plus the expected and observed attaining classes; a pass
//! needs exact equality of both, with class sets compared by certificate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::certificate;
use crate::enumerate::{enumerate, ClassCatalog, EnumerateOptions, Filters};
use crate::error::{Error, Result};
use crate::families::{pl, second_minimal_set, FamilySpec};
use crate::formulas::{mo_linear, mo_pl, mo_second};
use crate::naming::display_name;
use crate::phenylene::PhenyleneTree;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub name: String,
    pub tree: PhenyleneTree,
    pub certificate_hash: String,
    #[serde(skip)]
    pub certificate: Vec<u8>,
    pub overlap: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueGroup {
    pub value: u64,
    pub members: Vec<Member>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankingReport {
    pub h: usize,
    pub filters: Filters,
    pub class_count: usize,
    /// Strictly increasing in value.
    pub groups: Vec<ValueGroup>,
}

impl RankingReport {
    pub fn group(&self, rank: usize) -> Option<&ValueGroup> {
        self.groups.get(rank)
    }

    pub fn maximum(&self) -> Option<&ValueGroup> {
        self.groups.last()
    }
}

/// Groups a catalog by value. Every entry's cut-method value is checked
/// against the distance definition; a disagreement is an error.
pub fn rank_catalog(catalog: &ClassCatalog) -> Result<RankingReport> {
    let checked: Vec<Result<Member>> = catalog
        .entries
        .par_iter()
        .map(|e| {
            let direct = e.tree.expand()?.mostar_direct()?;
            if direct != e.mostar {
                return Err(Error::MethodMismatch { tree: e.tree.to_json(), cut: e.mostar, direct });
            }
            Ok(Member {
                name: display_name(&e.tree, &e.certificate),
                tree: e.tree.clone(),
                certificate_hash: e.certificate_hash(),
                certificate: e.certificate.clone(),
                overlap: e.overlap,
            })
        })
        .collect();
    let mut groups: Vec<ValueGroup> = Vec::new();
    let mut order: Vec<(u64, Member)> = Vec::with_capacity(checked.len());
    for (e, m) in catalog.entries.iter().zip(checked) {
        order.push((e.mostar, m?));
    }
    order.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.name.cmp(&b.1.name)));
    for (value, member) in order {
        match groups.last_mut() {
            Some(g) if g.value == value => g.members.push(member),
            _ => groups.push(ValueGroup { value, members: vec![member] }),
        }
    }
    Ok(RankingReport { h: catalog.h, filters: catalog.filters, class_count: catalog.entries.len(), groups })
}

pub fn rank(h: usize, options: EnumerateOptions) -> Result<RankingReport> {
    rank_catalog(&enumerate(h, options)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// `L_h` is the unique minimum.
    Minimum,
    /// Second group: `C_L(1,h-2)` and `C_L(1,h-4,1)` for `h >= 5`,
    /// `P_L(1,1,1)` at `h = 4`.
    SecondMinimum,
    /// Third group: `P_L(1,1,h-3)` for `h >= 5`.
    ThirdMinimum,
}

impl Claim {
    pub const ALL: [Claim; 3] = [Claim::Minimum, Claim::SecondMinimum, Claim::ThirdMinimum];

    fn rank(self) -> usize {
        match self {
            Self::Minimum => 0,
            Self::SecondMinimum => 1,
            Self::ThirdMinimum => 2,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Minimum => "min",
            Self::SecondMinimum => "second",
            Self::ThirdMinimum => "third",
        })
    }
}

impl FromStr for Claim {
    type Err = Error;

    /// Accepts `min`, `second`, `third` and the aliases `3.5`, `4.4`, `5.4`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "min" | "minimum" | "first" | "3.5" => Ok(Self::Minimum),
            "second" | "4.4" => Ok(Self::SecondMinimum),
            "third" | "5.4" => Ok(Self::ThirdMinimum),
            other => Err(Error::Parse(format!("unknown claim {other:?} (min, second, third)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    /// No claim at this size; the observed group is reported as is.
    Empirical,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: Claim,
    pub h: usize,
    pub filters: Filters,
    pub status: Status,
    pub expected_value: Option<u64>,
    pub observed_value: Option<u64>,
    pub expected_members: Vec<String>,
    pub observed_members: Vec<String>,
}

type Expected = (u64, Vec<(String, PhenyleneTree)>);

fn expectation(claim: Claim, h: usize) -> Result<Option<Expected>> {
    let named = |spec: FamilySpec| -> Result<(String, PhenyleneTree)> { Ok((spec.to_string(), spec.build()?)) };
    Ok(match claim {
        Claim::Minimum => Some((mo_linear(h)?.value, vec![named(FamilySpec::Linear(h))?])),
        Claim::SecondMinimum if h >= 5 => {
            Some((mo_second(h)?.value, second_minimal_set(h)?.into_iter().map(|m| (m.name, m.tree)).collect()))
        }
        Claim::SecondMinimum if h == 4 => Some((mo_pl(1, 1, 1)?.value, vec![("pl:1,1,1".to_string(), pl(1, 1, 1)?)])),
        Claim::ThirdMinimum if h >= 5 => Some((mo_pl(1, 1, h - 3)?.value, vec![named(FamilySpec::Pl(1, 1, h - 3))?])),
        _ => None,
    })
}

/// Verdict on one claim against a ranking.
pub fn check_claim(report: &RankingReport, claim: Claim) -> Result<Verdict> {
    let observed = report.group(claim.rank());
    let observed_value = observed.map(|g| g.value);
    let observed_members: Vec<String> =
        observed.map(|g| g.members.iter().map(|m| m.name.clone()).collect()).unwrap_or_default();
    let mut verdict = Verdict {
        claim,
        h: report.h,
        filters: report.filters,
        status: Status::Empirical,
        expected_value: None,
        observed_value,
        expected_members: Vec::new(),
        observed_members,
    };
    let Some((value, members)) = expectation(claim, report.h)? else {
        return Ok(verdict);
    };
    let mut expected_certs = BTreeSet::new();
    for (_, tree) in &members {
        expected_certs.insert(certificate(&tree.expand()?));
    }
    let observed_certs: BTreeSet<Vec<u8>> =
        observed.map(|g| g.members.iter().map(|m| m.certificate.clone()).collect()).unwrap_or_default();
    verdict.expected_value = Some(value);
    verdict.expected_members = members.into_iter().map(|(n, _)| n).collect();
    verdict.status =
        if observed_value == Some(value) && observed_certs == expected_certs { Status::Pass } else { Status::Fail };
    Ok(verdict)
}

pub fn verify_min(report: &RankingReport) -> Result<Verdict> {
    check_claim(report, Claim::Minimum)
}

pub fn verify_second(report: &RankingReport) -> Result<Verdict> {
    check_claim(report, Claim::SecondMinimum)
}

pub fn verify_third(report: &RankingReport) -> Result<Verdict> {
    check_claim(report, Claim::ThirdMinimum)
}

/// Short description of a member for tables: name plus certificate hash.
pub fn member_label(m: &Member) -> String {
    if m.name.starts_with("cert:") {
        m.name.clone()
    } else {
        format!("{} [{}]", m.name, &m.certificate_hash[..8])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h4_ranking() {
        let r = rank(4, EnumerateOptions::default()).unwrap();
        let values: Vec<u64> = r.groups.iter().map(|g| g.value).collect();
        assert_eq!(&values[..3], &[240, 288, 312]);
        assert_eq!(r.groups[2].members.len(), 2);
        assert!(values.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(verify_min(&r).unwrap().status, Status::Pass);
        assert_eq!(verify_second(&r).unwrap().status, Status::Pass);
        assert_eq!(verify_third(&r).unwrap().status, Status::Empirical);
    }

    #[test]
    fn small_h_is_empirical() {
        let r = rank(3, EnumerateOptions::default()).unwrap();
        let v = verify_second(&r).unwrap();
        assert_eq!(v.status, Status::Empirical);
        assert_eq!(v.observed_value, Some(168));
        assert_eq!(verify_min(&r).unwrap().status, Status::Pass);
    }

    #[test]
    fn claim_names() {
        assert_eq!("4.4".parse::<Claim>().unwrap(), Claim::SecondMinimum);
        assert_eq!("min".parse::<Claim>().unwrap(), Claim::Minimum);
        assert!("6.1".parse::<Claim>().is_err());
    }
}
