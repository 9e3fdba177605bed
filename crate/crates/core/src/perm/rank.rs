//! Lexicographic rank of a permutation via its Lehmer code.

use super::Permutation;
use crate::error::{Error, Result};

/// `20! < 2^64 < 21!`.
pub const MAX_RANK_DEGREE: usize = 20;

pub fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

fn check_rank_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK_DEGREE {
        return Err(Error::InvalidDegree {
            n,
            min: 1,
            max: MAX_RANK_DEGREE,
        });
    }
    Ok(())
}

/// Position of `π` in the lexicographic list of one-line words of degree n.
pub fn rank(pi: &Permutation) -> Result<u64> {
    check_rank_degree(pi.degree())?;
    Ok(rank_values(
        pi.as_slice().iter().map(|&v| v as u32 - 1),
        pi.degree(),
    ))
}

/// Ranks a word over `0..n` (0-based values).
pub(crate) fn rank_values(values: impl Iterator<Item = u32>, n: usize) -> u64 {
    let mut unused: u32 = (1u32 << n) - 1;
    let mut idx = 0u64;
    for (pos, v) in values.enumerate() {
        let smaller = (unused & ((1u32 << v) - 1)).count_ones() as u64;
        idx = idx * (n - pos) as u64 + smaller;
        unused &= !(1u32 << v);
    }
    idx
}

pub fn unrank(n: usize, index: u64) -> Result<Permutation> {
    check_rank_degree(n)?;
    let count = factorial(n).unwrap();
    if index >= count {
        return Err(Error::RankOutOfRange { n, index, count });
    }
    let mut word = vec![0u16; n];
    unrank_values(n, index, |pos, v| word[pos] = v as u16 + 1);
    Ok(Permutation::from_word_unchecked(word))
}

/// Writes the 0-based values of the `index`-th permutation through `put`.
pub(crate) fn unrank_values(n: usize, mut index: u64, mut put: impl FnMut(usize, u32)) {
    let mut digits = [0u32; MAX_RANK_DEGREE];
    for radix in 1..=n {
        digits[n - radix] = (index % radix as u64) as u32;
        index /= radix as u64;
    }
    let mut unused: u32 = (1u32 << n) - 1;
    for (pos, &d) in digits[..n].iter().enumerate() {
        let v = select_bit(unused, d);
        put(pos, v);
        unused &= !(1u32 << v);
    }
}

/// Index of the `k`-th set bit (0-based) of `mask`.
fn select_bit(mut mask: u32, k: u32) -> u32 {
    for _ in 0..k {
        mask &= mask - 1;
    }
    mask.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(word: &[u16]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn extremes_and_small_cases() {
        for n in 1..=10 {
            assert_eq!(rank(&Permutation::identity(n).unwrap()).unwrap(), 0);
            assert_eq!(
                rank(&Permutation::full_reversal(n).unwrap()).unwrap(),
                factorial(n).unwrap() - 1
            );
        }
        assert_eq!(rank(&p(&[2, 1, 3])).unwrap(), 2);
        assert!(matches!(unrank(3, 6), Err(Error::RankOutOfRange { .. })));
        assert!(rank(&Permutation::identity(21).unwrap()).is_err());
        assert_eq!(factorial(20), Some(2_432_902_008_176_640_000));
        assert_eq!(factorial(21), None);
    }

    #[test]
    fn lexicographic_order_matches_enumeration() {
        // every permutation of degree 4, sorted lexicographically by word
        let mut all = Vec::new();
        for a in 1..=4u16 {
            for b in 1..=4u16 {
                for c in 1..=4u16 {
                    for d in 1..=4u16 {
                        if let Ok(q) = Permutation::new(vec![a, b, c, d]) {
                            all.push(q);
                        }
                    }
                }
            }
        }
        all.sort();
        for (i, q) in all.iter().enumerate() {
            assert_eq!(rank(q).unwrap(), i as u64);
            assert_eq!(&unrank(4, i as u64).unwrap(), q);
        }
    }

    #[test]
    fn round_trip_exhaustive_up_to_8() {
        for n in 1..=8 {
            for idx in 0..factorial(n).unwrap() {
                assert_eq!(rank(&unrank(n, idx).unwrap()).unwrap(), idx);
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_sampled(n in 9usize..=20, seed in any::<u64>()) {
            let idx = seed % factorial(n).unwrap();
            let q = unrank(n, idx).unwrap();
            prop_assert_eq!(rank(&q).unwrap(), idx);
        }
    }
}
