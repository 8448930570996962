//! Closed forms for the Mostar index, in exact integer arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// Formula without cases.
    Single,
    /// `P_L(j,k,n)` with `n <= floor(h/2)`.
    PlCase1,
    /// `P_L(j,k,n)` with `n > floor(h/2)`, `h` even.
    PlCase2Even,
    /// `P_L(j,k,n)` with `n > floor(h/2)`, `h` odd.
    PlCase2Odd,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Single => "single",
            Self::PlCase1 => "case-1",
            Self::PlCase2Even => "case-2-even",
            Self::PlCase2Odd => "case-2-odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub value: u64,
    pub branch: Branch,
}

fn single(value: u64) -> FormulaResult {
    FormulaResult { value, branch: Branch::Single }
}

fn linear_value(h: u64) -> u64 {
    let (lo, hi) = (h / 2, h.div_ceil(2));
    72 * lo * hi - 24 * lo
}

/// `Mo(L_h) = 72 floor(h/2) ceil(h/2) - 24 floor(h/2)`.
pub fn mo_linear(h: usize) -> Result<FormulaResult> {
    if h < 1 {
        return Err(Error::InvalidParameters("mo_linear needs h >= 1".into()));
    }
    Ok(single(linear_value(h as u64)))
}

/// `Mo(P_L(j, k, n))` with `h = j + k + n + 1`.
pub fn mo_pl(j: usize, k: usize, n: usize) -> Result<FormulaResult> {
    if !(1 <= j && j <= k && k <= n) {
        return Err(Error::InvalidParameters(format!("mo_pl needs 1 <= j <= k <= n, got ({j}, {k}, {n})")));
    }
    let (j, k, n) = (j as u64, k as u64, n as u64);
    let h = j + k + n + 1;
    if n <= h / 2 {
        return Ok(FormulaResult {
            value: 24 * (2 * k * j + 3 * n * j + 4 * k * n + k + 2 * n),
            branch: Branch::PlCase1,
        });
    }
    let base = 4 * j + 3 * j * j + 8 * k + 3 * k * k + 4 * n + 3 * n * n + 14 * k * j + 6 * j * n + 10 * k * n;
    Ok(if h % 2 == 0 {
        FormulaResult { value: 6 * (base + 1), branch: Branch::PlCase2Even }
    } else {
        FormulaResult { value: 6 * base, branch: Branch::PlCase2Odd }
    })
}

/// Second-smallest value among chains: `Mo(L_h) + 24(h - 1)`.
pub fn mo_second(h: usize) -> Result<FormulaResult> {
    if h < 3 {
        return Err(Error::InvalidParameters("mo_second needs h >= 3".into()));
    }
    Ok(single(linear_value(h as u64) + 24 * (h as u64 - 1)))
}

/// Third-smallest value among chains: `Mo(L_h) + 48(h - 2)`.
pub fn mo_third_chain(h: usize) -> Result<FormulaResult> {
    if h < 5 {
        return Err(Error::InvalidParameters("mo_third_chain needs h >= 5".into()));
    }
    Ok(single(linear_value(h as u64) + 48 * (h as u64 - 2)))
}

/// Named formula evaluation for front ends: `linear h`, `pl j k n`,
/// `second h`, `third h`.
pub fn evaluate(name: &str, params: &[usize]) -> Result<FormulaResult> {
    match (name, params) {
        ("linear", [h]) => mo_linear(*h),
        ("pl", [j, k, n]) => mo_pl(*j, *k, *n),
        ("second", [h]) => mo_second(*h),
        ("third", [h]) => mo_third_chain(*h),
        _ => Err(Error::InvalidParameters(format!(
            "unknown formula {name:?} with {} parameters (expected linear h | pl j k n | second h | third h)",
            params.len()
        ))),
    }
}
