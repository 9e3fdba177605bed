//! Cross-checks the word builders, the closed forms and the BFS oracle, and
//! collects the outcome as a [`VerificationReport`].
//!
//! Oracle distances come from one identity-sourced table per degree.
//! Vertex-transitivity makes `dist(a, b) = dist(id, a⁻¹·b)`, so every row is
//! a single lookup.

mod report;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bfs::{bfs_all_distances, DistanceTable, SearchLimits, MAX_BFS_DEGREE};
use crate::error::{Error, Result};
use crate::formulas;
use crate::perm::Permutation;
use crate::words::{lemma_word, theorem_word, LemmaVariant, PairScheme};

pub use report::{write_report, ReportFormat, ReportRow, Scope, Summary, VerificationReport};

/// Random bases per lemma row on which the oracle distance is re-measured.
const SPOT_CHECK_BASES: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub with_oracle: bool,
    /// Rows above this degree get no oracle distance.
    pub oracle_max_n: usize,
    pub limits: SearchLimits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            with_oracle: false,
            oracle_max_n: MAX_BFS_DEGREE,
            limits: SearchLimits::default(),
        }
    }
}

impl VerifyOptions {
    pub fn with_oracle(oracle_max_n: usize) -> Self {
        VerifyOptions {
            with_oracle: true,
            oracle_max_n: oracle_max_n.min(MAX_BFS_DEGREE),
            ..VerifyOptions::default()
        }
    }
}

/// Identity-sourced tables, built on first use. A degree whose table does
/// not fit the budget is remembered as unavailable.
struct Oracle {
    options: VerifyOptions,
    tables: BTreeMap<usize, Option<DistanceTable>>,
}

impl Oracle {
    fn new(options: VerifyOptions) -> Self {
        Oracle {
            options,
            tables: BTreeMap::new(),
        }
    }

    fn table(&mut self, n: usize) -> Option<&DistanceTable> {
        if !self.options.with_oracle || n > self.options.oracle_max_n {
            return None;
        }
        let limits = self.options.limits;
        self.tables
            .entry(n)
            .or_insert_with(|| {
                let id = Permutation::identity(n).ok()?;
                bfs_all_distances(&id, &limits).ok()
            })
            .as_ref()
    }
}

fn check_n_max(n_max: usize, min: usize, max: Option<usize>) -> Result<()> {
    if n_max < min || max.is_some_and(|m| n_max > m) {
        return Err(Error::InvalidDegree {
            n: n_max,
            min,
            max: max.unwrap_or(crate::words::MAX_BUILDER_DEGREE),
        });
    }
    Ok(())
}

/// Every pair `1 <= k < l <= n` for every `3 <= n <= n_max`, under both
/// decompositions: correct swap, unchanged frame, length `4(l-k-1)+1`.
pub fn verify_decompositions(n_max: usize) -> Result<VerificationReport> {
    check_n_max(n_max, 3, Some(MAX_BFS_DEGREE))?;
    let mut rows = Vec::new();
    for n in 3..=n_max {
        let id = Permutation::identity(n)?;
        for k in 1..n {
            for l in k + 1..=n {
                for scheme in [PairScheme::A, PairScheme::B] {
                    let word = scheme.decomposition(n, k, l)?;
                    let frame = scheme.frame(k, l) as i64;
                    let mut swapped = id.as_slice().to_vec();
                    swapped.swap(k - 1, l - 1);
                    let expected = Permutation::new(swapped)?.rotate(frame);
                    let valid = word.apply(&id.rotate(frame))? == expected;
                    rows.push(ReportRow {
                        n,
                        params: json!({
                            "k": k,
                            "l": l,
                            "scheme": format!("{scheme:?}"),
                            "frame_preserved_ok": word.net_shift() == 0,
                        }),
                        formula: 4 * (l - k - 1) as u64 + 1,
                        builder_len: word.len() as u64,
                        builder_valid: valid,
                        oracle: None,
                        equal: None,
                    });
                }
            }
        }
    }
    Ok(VerificationReport::new(
        Scope::Decompositions,
        [3, n_max],
        rows,
    ))
}

/// The four reversal words for every `3 <= n <= n_max` and `2 <= j <= ceil(n/2)`.
/// With the oracle, records the exact distance between each variant's two
/// endpoints (instantiated at the identity) and re-measures it from random
/// bases.
pub fn verify_lemma(n_max: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    check_n_max(n_max, 3, None)?;
    let mut oracle = Oracle::new(*options);
    let mut rng = ChaCha8Rng::seed_from_u64(0x4c52_5844);
    let mut rows = Vec::new();
    for n in 3..=n_max {
        let id = Permutation::identity(n)?;
        for j in 2..=n.div_ceil(2) {
            let formula = formulas::lemma_value(n as u64, j as u64)?;
            for variant in LemmaVariant::ALL {
                let (start, end) = variant.frames(j);
                let mut params = json!({
                    "j": j,
                    "variant": variant.name(),
                    "start_rotation": start,
                    "end_rotation": end,
                });
                let (builder_len, builder_valid) = match lemma_word(n, j, variant) {
                    Ok(lw) => (lw.word.len() as u64, true),
                    Err(_) => (0, false),
                };
                let mut oracle_distance = None;
                if let Some(table) = oracle.table(n) {
                    let from = id.rotate(start as i64);
                    let to = id.reversal(1, j)?.rotate(end as i64);
                    let d = table.distance_between(&from, &to)?;
                    let mut agrees = true;
                    for _ in 0..SPOT_CHECK_BASES {
                        let mut word = id.as_slice().to_vec();
                        word.shuffle(&mut rng);
                        let base = Permutation::new(word)?;
                        let from = base.rotate(start as i64);
                        let to = base.reversal(1, j)?.rotate(end as i64);
                        agrees &= table.distance_between(&from, &to)? == d;
                    }
                    params["base_spot_check_ok"] = Value::Bool(agrees);
                    oracle_distance = Some(d as u64);
                }
                rows.push(ReportRow {
                    n,
                    params,
                    formula,
                    builder_len,
                    builder_valid,
                    oracle: oracle_distance,
                    equal: oracle_distance.map(|d| d == formula),
                });
            }
        }
    }
    Ok(VerificationReport::new(Scope::Lemma, [3, n_max], rows))
}

fn theorem_row(n: usize, i: usize, oracle: &mut Oracle) -> Result<ReportRow> {
    let case = formulas::theorem_value(n as u64, i as u64)?;
    let mut params = json!({ "i": i, "case": case.case_tag });
    let (builder_len, builder_valid) = match theorem_word(n, i) {
        Ok((w, plan)) => {
            params["branch"] = json!(plan.branch);
            params["phase2_alignment"] = json!(plan.phase2_alignment);
            (w.len() as u64, true)
        }
        Err(_) => (0, false),
    };
    let oracle_distance = match oracle.table(n) {
        Some(table) => {
            let start = Permutation::full_reversal(n)?.rotate((n - i) as i64);
            Some(table.distance_between(&start, &Permutation::identity(n)?)? as u64)
        }
        None => None,
    };
    Ok(ReportRow {
        n,
        params,
        formula: case.value,
        builder_len,
        builder_valid,
        oracle: oracle_distance,
        equal: oracle_distance.map(|d| d == case.value),
    })
}

/// Adds the bound checks to an `i = 2` row: the closed form equals
/// `n(n-1)/2` and, with the oracle, the diameter is at least that.
fn attach_bound(row: &mut ReportRow, oracle: &mut Oracle) -> Result<()> {
    let bound = formulas::lower_bound(row.n as u64)?;
    row.params["lower_bound"] = json!(bound);
    row.params["lower_bound_ok"] = json!(row.formula == bound);
    if let Some(table) = oracle.table(row.n) {
        let diameter = table.max_distance() as u64;
        row.params["diameter"] = json!(diameter);
        row.params["diameter_ok"] = json!(diameter >= bound);
    }
    Ok(())
}

/// Every `4 <= n <= n_max`, `1 <= i <= n`: the two-phase word sorts
/// `s·r^(n-i)` with exactly the closed-form number of tokens; with the
/// oracle, the exact distance is recorded and compared.
pub fn verify_theorem(n_max: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    check_n_max(n_max, 4, None)?;
    let mut oracle = Oracle::new(*options);
    let mut rows = Vec::new();
    for n in 4..=n_max {
        for i in 1..=n {
            let mut row = theorem_row(n, i, &mut oracle)?;
            if i == 2 {
                attach_bound(&mut row, &mut oracle)?;
            }
            rows.push(row);
        }
    }
    Ok(VerificationReport::new(Scope::Theorem, [4, n_max], rows))
}

/// One row per degree for `s·r^(n-2)`, the element attaining `n(n-1)/2`.
pub fn verify_bound(n_max: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    check_n_max(n_max, 4, None)?;
    let mut oracle = Oracle::new(*options);
    let mut rows = Vec::new();
    for n in 4..=n_max {
        let mut row = theorem_row(n, 2, &mut oracle)?;
        attach_bound(&mut row, &mut oracle)?;
        rows.push(row);
    }
    Ok(VerificationReport::new(Scope::Bound, [4, n_max], rows))
}

pub fn verify(scope: Scope, n_max: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    match scope {
        Scope::Decompositions => verify_decompositions(n_max),
        Scope::Lemma => verify_lemma(n_max, options),
        Scope::Theorem => verify_theorem(n_max, options),
        Scope::Bound => verify_bound(n_max, options),
    }
}
