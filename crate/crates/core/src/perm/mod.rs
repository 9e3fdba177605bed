//! Permutations of `1..=n` in one-line notation and the three generators
//! `X` (the transposition (12)), `L` (left shift `r`) and `R` (right shift `r⁻¹`).
//!
//! Generators act by multiplication on the right: `π·δ` swaps the first two
//! entries of the one-line word, `π·r` rotates it left by one and `π·r⁻¹`
//! rotates it right. Products compose as `(a·b)(i) = a(b(i))`, so a generator
//! word is executed token by token from left to right. Positions are 1-based
//! everywhere in the public API.

mod dihedral;
mod order;
mod rank;

use std::fmt;

pub use dihedral::DihedralElement;
pub use order::{in_cyclic_order, less_z, window_inversions};
pub use rank::{factorial, rank, unrank, MAX_RANK_DEGREE};
pub(crate) use rank::{rank_values, unrank_values};

use crate::error::{Error, Result};

/// Largest degree a [`Permutation`] may have. Word builders validate their
/// output on permutations of up to this degree.
pub const MAX_DEGREE: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// δ = (12): swap the entries at positions 1 and 2.
    Swap,
    /// r: rotate the one-line word left by one.
    Left,
    /// r⁻¹: rotate the one-line word right by one.
    Right,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::Swap, Generator::Left, Generator::Right];

    pub fn inverse(self) -> Generator {
        match self {
            Generator::Swap => Generator::Swap,
            Generator::Left => Generator::Right,
            Generator::Right => Generator::Left,
        }
    }

    pub fn token(self) -> char {
        match self {
            Generator::Swap => 'X',
            Generator::Left => 'L',
            Generator::Right => 'R',
        }
    }

    /// The generator as an element of `S_n`: δ, r or r⁻¹.
    pub fn permutation(self, n: usize) -> Result<Permutation> {
        Permutation::identity(n)?.apply(self)
    }

    pub fn from_token(token: &str) -> Option<Generator> {
        match token {
            "X" => Some(Generator::Swap),
            "L" => Some(Generator::Left),
            "R" => Some(Generator::Right),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// A permutation of `1..=n` stored as its one-line word `[π_1 … π_n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u16>,
}

pub(crate) fn check_degree(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DEGREE {
        return Err(Error::InvalidDegree {
            n,
            min,
            max: MAX_DEGREE,
        });
    }
    Ok(())
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking that it is a
    /// bijection on `1..=len`.
    pub fn new(word: Vec<u16>) -> Result<Self> {
        let n = word.len();
        check_degree(n, 1)?;
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a bijection on `1..=len`.
    pub(crate) fn from_word_unchecked(word: Vec<u16>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n, 1)?;
        Ok(Permutation {
            word: (1..=n as u16).collect(),
        })
    }

    /// The full reversal `s = [n n-1 … 1]`.
    pub fn full_reversal(n: usize) -> Result<Self> {
        check_degree(n, 1)?;
        Ok(Permutation {
            word: (1..=n as u16).rev().collect(),
        })
    }

    /// `r^k`, with `k` reduced mod `n`.
    pub fn shift(n: usize, k: i64) -> Result<Self> {
        Ok(Permutation::identity(n)?.rotate(k))
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u16> {
        self.word
    }

    /// `π_pos` for a 1-based position.
    pub fn at(&self, pos: usize) -> Option<u16> {
        pos.checked_sub(1).and_then(|p| self.word.get(p).copied())
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    pub fn apply(&self, g: Generator) -> Result<Self> {
        let mut out = self.clone();
        out.apply_in_place(g)?;
        Ok(out)
    }

    pub(crate) fn apply_in_place(&mut self, g: Generator) -> Result<()> {
        match g {
            Generator::Swap => {
                if self.word.len() < 2 {
                    return Err(Error::SwapOnDegreeOne);
                }
                self.word.swap(0, 1);
            }
            Generator::Left => self.word.rotate_left(1),
            Generator::Right => self.word.rotate_right(1),
        }
        Ok(())
    }

    /// `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        self.same_degree(other)?;
        Ok(Permutation {
            word: other
                .word
                .iter()
                .map(|&b| self.word[b as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.word.len()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = pos as u16 + 1;
        }
        Permutation { word: inv }
    }

    /// `π·r^k`: the one-line word rotated left by `k` (mod n).
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.word.len() as i64;
        let mut word = self.word.clone();
        word.rotate_left(k.rem_euclid(n) as usize);
        Permutation { word }
    }

    /// Reverses the segment `π_i … π_j` in place (1-based, `i < j`); the
    /// zero-rotation representative of the `(π_i, π_j)`-reversal.
    pub fn reversal(&self, i: usize, j: usize) -> Result<Self> {
        let n = self.word.len();
        if i == 0 || i >= j || j > n {
            return Err(Error::InvalidPosition {
                n,
                detail: format!("reversal needs 1 <= i < j <= n, got i={i}, j={j}"),
            });
        }
        let mut word = self.word.clone();
        word[i - 1..j].reverse();
        Ok(Permutation { word })
    }

    /// The unique `k` in `0..n` with `other = self·r^k`, if `other` lies in
    /// the rotation orbit of `self`.
    pub fn rotation_offset(&self, other: &Permutation) -> Result<Option<usize>> {
        self.same_degree(other)?;
        let n = self.word.len();
        let first = other.word[0];
        let k = self.word.iter().position(|&v| v == first).unwrap();
        let matches = (0..n).all(|p| self.word[(p + k) % n] == other.word[p]);
        Ok(matches.then_some(k))
    }

    /// True for odd permutations.
    pub fn is_odd(&self) -> bool {
        let n = self.word.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.word[p] as usize - 1;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 1
    }

    pub fn orbit(&self) -> OrbitView {
        OrbitView::new(self.clone())
    }

    fn same_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// Parses the text forms accepted on the command line: a space-separated
    /// one-line word (optionally in square brackets) of exactly `n` values, or
    /// one of the shorthands `id`, `s`, `r`, `r^k`, `s*r`, `s*r^k`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        check_degree(n, 1)?;
        let err = |reason: String| Error::ParsePermutation {
            text: text.to_string(),
            reason,
        };
        let trimmed = text.trim();
        let compact: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();

        if compact == "id" {
            return Permutation::identity(n);
        }
        if let Some(k) = parse_shift(&compact).map_err(&err)? {
            return Permutation::shift(n, k);
        }
        if compact == "s" {
            return Permutation::full_reversal(n);
        }
        if let Some(rest) = compact.strip_prefix("s*") {
            return match parse_shift(rest).map_err(&err)? {
                Some(k) => Ok(Permutation::full_reversal(n)?.rotate(k)),
                None => Err(err(format!("expected r or r^k after s*, got {rest:?}"))),
            };
        }

        let body = trimmed
            .strip_prefix('[')
            .map(|t| {
                t.strip_suffix(']')
                    .ok_or_else(|| err("unbalanced '['".into()))
            })
            .transpose()?
            .unwrap_or(trimmed);
        let mut word = Vec::with_capacity(n);
        for tok in body.split_whitespace() {
            let v: u16 = tok.parse().map_err(|_| err(format!("bad entry {tok:?}")))?;
            word.push(v);
            if word.len() > n {
                break;
            }
        }
        if word.len() != n {
            return Err(err(format!("expected {n} entries")));
        }
        Permutation::new(word)
    }
}

/// `r` or `r^k` → `Some(k)`; anything else → `None`.
fn parse_shift(text: &str) -> std::result::Result<Option<i64>, String> {
    let Some(rest) = text.strip_prefix('r') else {
        return Ok(None);
    };
    if rest.is_empty() {
        return Ok(Some(1));
    }
    let Some(exp) = rest.strip_prefix('^') else {
        return Err(format!("expected '^' after r, got {rest:?}"));
    };
    exp.parse::<i64>()
        .map(Some)
        .map_err(|_| format!("bad exponent {exp:?}"))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Circular distance between `i` and `j` on `Z_n`: `min(d, n - d)` with
/// `d = (i - j) mod n`. This is the graph distance between `π·r^i` and `π·r^j`.
pub fn lee_distance(n: u64, i: i64, j: i64) -> u64 {
    assert!(n >= 1, "lee_distance needs n >= 1");
    let d = (i as i128 - j as i128).rem_euclid(n as i128) as u64;
    d.min(n - d)
}

/// The rotation orbit `Orb(π) = {π·r^k : k = 0..n-1}`.
#[derive(Clone, Debug)]
pub struct OrbitView {
    base: Permutation,
}

impl OrbitView {
    pub fn new(base: Permutation) -> Self {
        OrbitView { base }
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.degree()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `base·r^k`.
    pub fn member(&self, k: i64) -> Permutation {
        self.base.rotate(k)
    }

    pub fn members(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len() as i64).map(|k| self.base.rotate(k))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        matches!(self.base.rotation_offset(p), Ok(Some(_)))
    }
}
