//! Closed-form distances: the reversal cost `j(j-1)-1`, the exact distance
//! from `s·r^(n-i)` to the identity, and the diameter bound `n(n-1)/2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Keeps every intermediate product inside `u64`.
pub const MAX_FORMULA_DEGREE: u64 = 1 << 30;

fn check(n: u64, min: u64) -> Result<()> {
    if n < min || n > MAX_FORMULA_DEGREE {
        return Err(Error::InvalidDegree {
            n: n as usize,
            min: min as usize,
            max: MAX_FORMULA_DEGREE as usize,
        });
    }
    Ok(())
}

fn check_index(n: u64, i: u64) -> Result<()> {
    check(n, 4)?;
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!(
            "shift index i={i} outside 1..={n}"
        )));
    }
    Ok(())
}

/// Cost of reversing the first `j` entries: `j(j-1) - 1`, valid for
/// `2 <= j <= ceil(n/2)`, `n >= 3`.
pub fn lemma_value(n: u64, j: u64) -> Result<u64> {
    check(n, 3)?;
    if j < 2 || j > n.div_ceil(2) {
        return Err(Error::OutOfRange(format!(
            "reversal length j={j} outside 2..={} for n={n}",
            n.div_ceil(2)
        )));
    }
    Ok(j * (j - 1) - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    /// `i = 1`
    IEq1,
    /// `2 <= i <= floor(n/2) + 2`
    Mid,
    /// `ceil(n/2) + 2 <= i <= n`
    High,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremCase {
    pub n: u64,
    pub i: u64,
    pub case_tag: CaseTag,
    pub value: u64,
}

/// Cost of reversing both halves: `ceil(n/2)(ceil(n/2)-1)-1 + floor(n/2)(floor(n/2)-1)-1`.
fn two_reversals(n: u64) -> u64 {
    let (lo, hi) = (n / 2, n.div_ceil(2));
    hi * (hi - 1) - 1 + lo * (lo - 1) - 1
}

/// Residual rotation exponent after both reversals when the first half is
/// reversed in the frame `m = ceil(floor(n/2)/2) - 1`.
pub fn ceil_branch_residual(n: u64) -> u64 {
    (n / 2).div_ceil(2) - 1 + n.div_ceil(2) / 2 - 1
}

/// Same, for `m = floor(floor(n/2)/2) - 1`.
pub fn floor_branch_residual(n: u64) -> u64 {
    (n / 2) / 2 - 1 + n.div_ceil(2).div_ceil(2) - 1
}

/// `dist(s·r^(n-i), id)` in its simplified piecewise form.
pub fn theorem_value(n: u64, i: u64) -> Result<TheoremCase> {
    check_index(n, i)?;
    let (lo, hi) = (n / 2, n.div_ceil(2));
    let (case_tag, term) = if i == 1 {
        (CaseTag::IEq1, lo + 1)
    } else if i <= lo + 2 {
        (CaseTag::Mid, lo + 4 - i)
    } else {
        debug_assert!(i >= hi + 2);
        (CaseTag::High, i - hi)
    };
    Ok(TheoremCase {
        n,
        i,
        case_tag,
        value: two_reversals(n) + term,
    })
}

/// The same distance before simplification: both reversal costs, the two
/// transition shifts, and the cheaper of the two residual rotations measured
/// on the circle `Z_n`.
pub fn theorem_value_unsimplified(n: u64, i: u64) -> Result<u64> {
    check_index(n, i)?;
    let nn = n as i64;
    let x_ceil = ceil_branch_residual(n) as i64 - nn + i as i64;
    let x_floor = floor_branch_residual(n) as i64 - nn + i as i64;
    let candidates = [x_ceil, nn - x_ceil, x_floor, nn - x_floor];
    let tail = candidates
        .iter()
        .map(|x| x.rem_euclid(nn) as u64)
        .min()
        .unwrap();
    Ok(two_reversals(n) + 2 + tail)
}

/// Diameter lower bound `n(n-1)/2`.
pub fn lower_bound(n: u64) -> Result<u64> {
    check(n, 4)?;
    Ok(n * (n - 1) / 2)
}
