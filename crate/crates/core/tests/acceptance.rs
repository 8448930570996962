//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use phenylene_core::certificate;
use phenylene_core::enumerate::{enumerate, enumerate_up_to, EnumerateOptions, Filters};
use phenylene_core::families::{cl, linear, pl, second_minimal_set, third_minimal_chain_set};
use phenylene_core::formulas::{mo_linear, mo_pl, mo_second, mo_third_chain, Branch};
use phenylene_core::lemmas::{check_two_segment_ordering, linear_branch_trials, merge_trials, orientation_trials};
use phenylene_core::mostar_cut;
use phenylene_core::phenylene::cut_classes;
use phenylene_core::verify::{check_claim, rank_catalog, Claim, RankingReport, Status};

const SEED: u64 = 20_240_601;
const TRIALS: usize = 500;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: phenylene_core::Error) -> String {
    e.to_string()
}

fn mo(t: &phenylene_core::PhenyleneTree) -> Result<i64, String> {
    mostar_cut(t).map(|v| v as i64).map_err(err)
}

fn method_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for cat in enumerate_up_to(8, EnumerateOptions::default()).map_err(err)? {
        for e in &cat.entries {
            let direct = e.tree.expand().map_err(err)?.mostar_direct().map_err(err)?;
            ensure(direct == e.mostar, || format!("{}: cut {} direct {direct}", e.tree.to_json(), e.mostar))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} classes with h <= 8 agree ({:.1}s)", start.elapsed().as_secs_f64()))
}

fn per_edge_identity() -> Outcome {
    let mut edges = 0;
    for cat in enumerate_up_to(6, EnumerateOptions::default()).map_err(err)? {
        for e in &cat.entries {
            let g = e.tree.expand().map_err(err)?;
            for c in cut_classes(&e.tree).map_err(err)? {
                for &(u, v) in &c.edges {
                    let phi = g.edge_split(u, v).map_err(err)?.phi;
                    ensure(phi == 6 * c.r_u.abs_diff(c.r_v), || {
                        format!("{} edge {u}-{v}: phi {phi}, r = ({}, {})", e.tree.to_json(), c.r_u, c.r_v)
                    })?;
                    edges += 1;
                }
            }
        }
    }
    Ok(format!("{edges} edges over all classes with h <= 6"))
}

fn reference_values() -> Outcome {
    let p111 = mo(&pl(1, 1, 1).map_err(err)?)?;
    let d1 = mo(&pl(1, 1, 3).map_err(err)?)? - mo(&pl(1, 2, 2).map_err(err)?)?;
    let d2 = mo(&pl(1, 1, 4).map_err(err)?)? - mo(&pl(2, 2, 2).map_err(err)?)?;
    let d3 = p111 - mo(&cl(&[1, 2]).map_err(err)?)?;
    ensure((p111, d1, d2, d3) == (288, -48, -48, -24), || format!("got {p111}, {d1}, {d2}, {d3}"))?;
    Ok("Mo(P_L(1,1,1)) = 288; differences -48, -48, -24".into())
}

fn closed_forms() -> Outcome {
    for h in 1..=12 {
        let (f, c) = (mo_linear(h).map_err(err)?.value, mostar_cut(&linear(h).map_err(err)?).map_err(err)?);
        ensure(f == c, || format!("linear h = {h}: formula {f}, computed {c}"))?;
    }
    let mut triples = 0;
    let mut branches = BTreeSet::new();
    let mut strip = 0;
    for h in 4..=12 {
        for j in 1..h {
            for k in j..h {
                if j + k + 1 >= h || h - 1 - j - k < k {
                    continue;
                }
                let n = h - 1 - j - k;
                let r = mo_pl(j, k, n).map_err(err)?;
                let c = mostar_cut(&pl(j, k, n).map_err(err)?).map_err(err)?;
                ensure(r.value == c, || format!("pl({j},{k},{n}): formula {} computed {c}", r.value))?;
                triples += 1;
                branches.insert(format!("{}", r.branch));
                if n == h / 2 || n == h / 2 + 1 {
                    strip += 1;
                }
            }
        }
    }
    for b in [Branch::PlCase1, Branch::PlCase2Even, Branch::PlCase2Odd] {
        ensure(branches.contains(&b.to_string()), || format!("branch {b} never exercised"))?;
    }
    ensure(strip > 0, || "no triple on the boundary strip".into())?;
    for h in 5..=12 {
        let v = mo_second(h).map_err(err)?.value;
        for m in second_minimal_set(h).map_err(err)? {
            let c = mostar_cut(&m.tree).map_err(err)?;
            ensure(c == v, || format!("second h = {h}: {} computes {c}, formula {v}", m.name))?;
        }
        let v = mo_third_chain(h).map_err(err)?.value;
        for m in third_minimal_chain_set(h).map_err(err)?.members {
            let c = mostar_cut(&m.tree).map_err(err)?;
            ensure(c == v, || format!("third chain h = {h}: {} computes {c}, formula {v}", m.name))?;
        }
    }
    Ok(format!(
        "linear h <= 12; {triples} P_L triples ({strip} on the boundary strip, all branches); chain sets h = 5..12"
    ))
}

fn reports(h: std::ops::RangeInclusive<usize>) -> Result<Vec<RankingReport>, String> {
    let mut out = Vec::new();
    for planar_only in [false, true] {
        let opts = EnumerateOptions::with_filters(Filters { chains_only: false, planar_only });
        for cat in enumerate_up_to(*h.end(), opts).map_err(err)? {
            if h.contains(&cat.h) {
                out.push(rank_catalog(&cat).map_err(err)?);
            }
        }
    }
    Ok(out)
}

fn claim_holds(reports: &[RankingReport], claim: Claim, from: usize) -> Outcome {
    let mut n = 0;
    for r in reports.iter().filter(|r| r.h >= from) {
        let v = check_claim(r, claim).map_err(err)?;
        ensure(v.status == Status::Pass, || format!("{v:?}"))?;
        n += 1;
    }
    Ok(format!("{n} verdicts pass (h = {from}..8, overlap filter off and on)"))
}

fn minimum(reports: &[RankingReport]) -> Outcome {
    claim_holds(reports, Claim::Minimum, 2)
}

fn second(reports: &[RankingReport]) -> Outcome {
    claim_holds(reports, Claim::SecondMinimum, 4)
}

fn third(reports: &[RankingReport]) -> Outcome {
    let summary = claim_holds(reports, Claim::ThirdMinimum, 5)?;
    for r in reports.iter().filter(|r| r.h == 6) {
        let fourth = r.group(3).ok_or("h = 6 has fewer than four groups")?;
        ensure(fourth.value == 768, || format!("fourth group at {}", fourth.value))?;
        let certs: BTreeSet<&Vec<u8>> = fourth.members.iter().map(|m| &m.certificate).collect();
        let mut wanted = vec![pl(1, 2, 2).map_err(err)?, cl(&[2, 3]).map_err(err)?];
        wanted.extend(third_minimal_chain_set(6).map_err(err)?.members.into_iter().map(|m| m.tree));
        for t in wanted {
            let c = certificate(&t.expand().map_err(err)?);
            ensure(certs.contains(&c), || format!("{} missing from the h = 6 fourth group", t.to_json()))?;
        }
    }
    Ok(format!("{summary}; h = 6 fourth group at 768 holds P_L(1,2,2) and all seven chains"))
}

fn two_segment_ordering() -> Outcome {
    for h in 4..=30 {
        let c = check_two_segment_ordering(h).map_err(err)?;
        ensure(c.holds, || format!("h = {h}: {:?}", c.values))?;
    }
    Ok("strictly increasing for h = 4..30".into())
}

fn transformation_lemmas() -> Outcome {
    let mut parts = Vec::new();
    for s in [
        orientation_trials(TRIALS, SEED, 8).map_err(err)?,
        linear_branch_trials(TRIALS, SEED, 8).map_err(err)?,
        merge_trials(TRIALS, SEED, 8).map_err(err)?,
    ] {
        ensure(s.all_passed() && s.trials >= TRIALS, || format!("{}: {:?}", s.name, s.failures))?;
        parts.push(format!("{} {}/{} ({} equal)", s.name, s.passed, s.trials, s.equalities));
    }
    Ok(format!("seed {SEED}, h <= 8: {}", parts.join(", ")))
}

fn enumeration_soundness() -> Outcome {
    let cats = enumerate_up_to(5, EnumerateOptions::default()).map_err(err)?;
    let mut counts = Vec::new();
    for cat in &cats {
        let naive = common::naive_classes(cat.h).len();
        ensure(naive == cat.counts.total, || format!("h = {}: naive {naive}, production {}", cat.h, cat.counts.total))?;
        counts.push(naive);
    }
    let h4 = enumerate(4, EnumerateOptions::default()).map_err(err)?.counts.total;
    ensure(h4 == 5, || format!("h = 4 gives {h4} classes"))?;
    Ok(format!("class counts {counts:?} agree with the naive oracle"))
}

fn main() -> ExitCode {
    let ranking = reports(2..=8);
    let ranked = |f: fn(&[RankingReport]) -> Outcome| match &ranking {
        Ok(r) => f(r),
        Err(e) => Err(e.clone()),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("method equivalence", method_equivalence()),
        ("per-edge identity", per_edge_identity()),
        ("reference values", reference_values()),
        ("closed forms", closed_forms()),
        ("unique minimum", ranked(minimum)),
        ("second-smallest group", ranked(second)),
        ("third-smallest group", ranked(third)),
        ("two-segment ordering", two_segment_ordering()),
        ("transformation inequalities", transformation_lemmas()),
        ("enumeration soundness", enumeration_soundness()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
