//! Constructive words: the two single-pair swap decompositions, the four
//! prefix-reversal words built from them, and the two-phase word sorting
//! `s·r^(n-i)` back to the identity.
//!
//! Every builder that assembles more than one decomposition checks its own
//! output by application before returning it.

use serde::{Deserialize, Serialize};

use super::GenWord;
use crate::error::{Error, Result};
use crate::formulas;
use crate::perm::{check_degree, lee_distance, Generator, Permutation};

/// Words are Θ(n²) tokens long; past this degree only their lengths are
/// computed, through [`crate::formulas`].
pub const MAX_BUILDER_DEGREE: usize = 10_000;

fn check_builder_degree(n: usize, min: usize) -> Result<()> {
    check_degree(n, min)?;
    if n > MAX_BUILDER_DEGREE {
        return Err(Error::InvalidDegree {
            n,
            min,
            max: MAX_BUILDER_DEGREE,
        });
    }
    Ok(())
}

fn check_pair(n: usize, k: usize, l: usize) -> Result<()> {
    if k == 0 || k >= l || l > n {
        return Err(Error::InvalidPosition {
            n,
            detail: format!("pair needs 1 <= k < l <= n, got k={k}, l={l}"),
        });
    }
    Ok(())
}

fn alternating(n: usize, pattern: [Generator; 2], reps: usize, out: &mut GenWord) {
    debug_assert_eq!(out.degree(), n);
    for _ in 0..reps {
        out.push(pattern[0]);
        out.push(pattern[1]);
    }
}

/// `(X L)^m X (R X)^m` with `m = l - k - 1`.
///
/// Applied to `π·r^(k-1)` it swaps the values `π_k` and `π_l` and leaves the
/// rotation frame unchanged. Length `4(l-k-1)+1`.
pub fn decomposition_a(n: usize, k: usize, l: usize) -> Result<GenWord> {
    check_builder_degree(n, 3)?;
    check_pair(n, k, l)?;
    let m = l - k - 1;
    let mut w = GenWord::empty(n)?;
    alternating(n, [Generator::Swap, Generator::Left], m, &mut w);
    w.push(Generator::Swap);
    alternating(n, [Generator::Right, Generator::Swap], m, &mut w);
    Ok(w)
}

/// `(X R)^m X (L X)^m` with `m = l - k - 1`; the mirror of
/// [`decomposition_a`], applied in the frame `π·r^(l-2)`.
pub fn decomposition_b(n: usize, k: usize, l: usize) -> Result<GenWord> {
    check_builder_degree(n, 2)?;
    check_pair(n, k, l)?;
    let m = l - k - 1;
    let mut w = GenWord::empty(n)?;
    alternating(n, [Generator::Swap, Generator::Right], m, &mut w);
    w.push(Generator::Swap);
    alternating(n, [Generator::Left, Generator::Swap], m, &mut w);
    Ok(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairScheme {
    A,
    B,
}

impl PairScheme {
    /// Rotation frame the scheme's decomposition must be applied in.
    pub fn frame(self, k: usize, l: usize) -> usize {
        match self {
            PairScheme::A => k - 1,
            PairScheme::B => l - 2,
        }
    }

    pub fn decomposition(self, n: usize, k: usize, l: usize) -> Result<GenWord> {
        match self {
            PairScheme::A => decomposition_a(n, k, l),
            PairScheme::B => decomposition_b(n, k, l),
        }
    }
}

/// Shortest run of shifts realizing `r^k`; ties go to `L`.
fn shift_run(n: usize, k: i64, out: &mut GenWord) {
    let d = k.rem_euclid(n as i64) as usize;
    if d <= n - d {
        out.push_n(Generator::Left, d);
    } else {
        out.push_n(Generator::Right, n - d);
    }
}

/// Rotates `π` into the scheme's frame (shorter direction) and then swaps
/// `π_k` and `π_l`. The result is the swapped permutation in that frame.
pub fn greedy_pair_word(
    pi: &Permutation,
    k: usize,
    l: usize,
    scheme: PairScheme,
) -> Result<GenWord> {
    let n = pi.degree();
    check_pair(n, k, l)?;
    let mut w = GenWord::empty(n)?;
    shift_run(n, scheme.frame(k, l) as i64, &mut w);
    w.append(&scheme.decomposition(n, k, l)?);
    Ok(w)
}

/// The four prefix-reversal words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaVariant {
    I,
    II,
    III,
    IV,
}

impl LemmaVariant {
    pub const ALL: [LemmaVariant; 4] = [
        LemmaVariant::I,
        LemmaVariant::II,
        LemmaVariant::III,
        LemmaVariant::IV,
    ];

    /// `(start, end)` rotation frames for reversal length `j`.
    pub fn frames(self, j: usize) -> (usize, usize) {
        let (lo, hi) = (j / 2, j.div_ceil(2));
        match self {
            LemmaVariant::I => (0, lo - 1),
            LemmaVariant::II => (j - 2, hi - 1),
            LemmaVariant::III => (lo - 1, 0),
            LemmaVariant::IV => (hi - 1, j - 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LemmaVariant::I => "I",
            LemmaVariant::II => "II",
            LemmaVariant::III => "III",
            LemmaVariant::IV => "IV",
        }
    }
}

impl std::str::FromStr for LemmaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown lemma variant {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaWord {
    pub word: GenWord,
    pub start_rotation: usize,
    pub end_rotation: usize,
}

/// A word of length `j(j-1)-1` taking `π·r^start` to
/// `reversal(π, 1, j)·r^end`, for every `π`.
///
/// Pairs `(k, j+1-k)` are swapped one at a time. Both decompositions keep
/// the frame fixed, so a single shift between pairs lands on the next pair's
/// frame: I and III use scheme A (outermost-first with `L`, innermost-first
/// with `R`), II and IV use scheme B (outermost-first with `R`,
/// innermost-first with `L`).
pub fn lemma_word(n: usize, j: usize, variant: LemmaVariant) -> Result<LemmaWord> {
    check_builder_degree(n, 3)?;
    if j < 2 || j > n.div_ceil(2) {
        return Err(Error::OutOfRange(format!(
            "reversal length j={j} outside 2..={} for n={n}",
            n.div_ceil(2)
        )));
    }
    let (scheme, outermost_first, between) = match variant {
        LemmaVariant::I => (PairScheme::A, true, Generator::Left),
        LemmaVariant::II => (PairScheme::B, true, Generator::Right),
        LemmaVariant::III => (PairScheme::A, false, Generator::Right),
        LemmaVariant::IV => (PairScheme::B, false, Generator::Left),
    };
    let mut ks: Vec<usize> = (1..=j / 2).collect();
    if !outermost_first {
        ks.reverse();
    }
    let mut word = GenWord::empty(n)?;
    for (idx, &k) in ks.iter().enumerate() {
        if idx > 0 {
            word.push(between);
        }
        word.append(&scheme.decomposition(n, k, j + 1 - k)?);
    }
    let (start_rotation, end_rotation) = variant.frames(j);

    let id = Permutation::identity(n)?;
    let expected = id.reversal(1, j)?.rotate(end_rotation as i64);
    if word.apply(&id.rotate(start_rotation as i64))? != expected {
        return Err(Error::Validation(format!(
            "lemma word n={n} j={j} variant {} does not reach its endpoint",
            variant.name()
        )));
    }
    if word.len() != j * (j - 1) - 1 {
        return Err(Error::Validation(format!(
            "lemma word n={n} j={j} variant {} has length {}, expected {}",
            variant.name(),
            word.len(),
            j * (j - 1) - 1
        )));
    }
    Ok(LemmaWord {
        word,
        start_rotation,
        end_rotation,
    })
}

/// Which frame the first half is reversed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Branch {
    /// `m = ceil(floor(n/2)/2) - 1`: variant IV, then `L L`, then variant I.
    CeilBranch,
    /// `m = floor(floor(n/2)/2) - 1`: variant III, then `R R`, then variant II.
    FloorBranch,
}

/// Bookkeeping for one two-phase word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReversalPlan {
    pub n: usize,
    pub i: usize,
    /// Length of the first reversed block, `floor(n/2)`.
    pub j1: usize,
    /// Length of the second reversed block, `ceil(n/2)`.
    pub j2: usize,
    /// Rotation of the starting permutation relative to the first block's
    /// zero frame: the start is `(s·r^(n-i-m))·r^m`.
    pub m: usize,
    pub branch: Branch,
    /// Exponent `c` with the permutation reached before the tail equal to
    /// `r^(c - n + i)`.
    pub residual_rotation: usize,
    /// Offset of the second block's start frame from its nominal frame.
    /// Always 0; recorded so reports state the alignment that validated.
    pub phase2_alignment: usize,
    pub tail_length: usize,
    pub predicted_length: usize,
}

/// The two-phase word for one branch, validated against
/// `s·r^(n-i) → id`.
pub fn theorem_branch_word(n: usize, i: usize, branch: Branch) -> Result<(GenWord, ReversalPlan)> {
    check_builder_degree(n, 4)?;
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!(
            "shift index i={i} outside 1..={n}"
        )));
    }
    let (j1, j2) = (n / 2, n.div_ceil(2));
    let (first, transition, second, m, residual) = match branch {
        Branch::CeilBranch => (
            LemmaVariant::IV,
            Generator::Left,
            LemmaVariant::I,
            j1.div_ceil(2) - 1,
            formulas::ceil_branch_residual(n as u64) as usize,
        ),
        Branch::FloorBranch => (
            LemmaVariant::III,
            Generator::Right,
            LemmaVariant::II,
            j1 / 2 - 1,
            formulas::floor_branch_residual(n as u64) as usize,
        ),
    };
    let phase1 = lemma_word(n, j1, first)?;
    let phase2 = lemma_word(n, j2, second)?;
    debug_assert_eq!(phase1.start_rotation, m);

    let mut word = GenWord::empty(n)?;
    word.append(&phase1.word);
    word.push_n(transition, 2);
    word.append(&phase2.word);
    // Undo r^(c - n + i) by the shorter way around.
    let leftover = residual as i64 - n as i64 + i as i64;
    let tail_length = lee_distance(n as u64, leftover, 0) as usize;
    shift_run(n, -leftover, &mut word);

    let predicted_length = j1 * (j1 - 1) - 1 + 2 + j2 * (j2 - 1) - 1 + tail_length;
    let start = Permutation::full_reversal(n)?.rotate((n - i) as i64);
    if !word.apply(&start)?.is_identity() {
        return Err(Error::Validation(format!(
            "two-phase word n={n} i={i} {branch:?} does not reach the identity"
        )));
    }
    if word.len() != predicted_length {
        return Err(Error::Validation(format!(
            "two-phase word n={n} i={i} {branch:?} has length {}, predicted {predicted_length}",
            word.len()
        )));
    }
    let plan = ReversalPlan {
        n,
        i,
        j1,
        j2,
        m,
        branch,
        residual_rotation: residual,
        phase2_alignment: 0,
        tail_length,
        predicted_length,
    };
    Ok((word, plan))
}

/// A word taking `s·r^(n-i)` to the identity with length
/// `theorem_value(n, i)`: the shorter of the two branches, ties to
/// [`Branch::CeilBranch`].
pub fn theorem_word(n: usize, i: usize) -> Result<(GenWord, ReversalPlan)> {
    let ceil = theorem_branch_word(n, i, Branch::CeilBranch);
    let floor = theorem_branch_word(n, i, Branch::FloorBranch);
    let (word, plan) = match (ceil, floor) {
        (Ok(c), Ok(f)) => {
            if f.0.len() < c.0.len() {
                f
            } else {
                c
            }
        }
        (Ok(c), Err(_)) => c,
        (Err(_), Ok(f)) => f,
        (Err(e), Err(_)) => return Err(e),
    };
    let expected = formulas::theorem_value(n as u64, i as u64)?.value;
    if word.len() as u64 != expected {
        return Err(Error::Validation(format!(
            "two-phase word n={n} i={i} has length {}, closed form says {expected}",
            word.len()
        )));
    }
    Ok((word, plan))
}
