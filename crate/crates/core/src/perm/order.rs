//! Cyclic order on positions and the inversion count used to measure how far
//! a window of a permutation is from sorted.

use super::Permutation;
use crate::error::{Error, Result};

fn check_positions(pi: &Permutation, positions: &[usize]) -> Result<()> {
    let n = pi.degree();
    for (i, &p) in positions.iter().enumerate() {
        if p == 0 || p > n {
            return Err(Error::InvalidPosition {
                n,
                detail: format!("position {p} outside 1..={n}"),
            });
        }
        if positions[..i].contains(&p) {
            return Err(Error::InvalidPosition {
                n,
                detail: format!("position {p} repeated"),
            });
        }
    }
    Ok(())
}

/// True iff the entries at positions `a`, `b`, `c` appear in this cyclic
/// order: `a < b < c`, `b < c < a` or `c < a < b`.
pub fn in_cyclic_order(pi: &Permutation, a: usize, b: usize, c: usize) -> Result<bool> {
    check_positions(pi, &[a, b, c])?;
    Ok((a < b && b < c) || (b < c && c < a) || (c < a && a < b))
}

/// The linear order `<_z` on positions other than `z`: `a <_z b` iff
/// `(z, a, b)` is in cyclic order.
pub fn less_z(pi: &Permutation, z: usize, a: usize, b: usize) -> Result<bool> {
    in_cyclic_order(pi, z, a, b)
}

/// Counts pairs `lo <= p < q <= hi` whose values are out of order with
/// respect to the cyclic order of `1..=n` read starting just after the
/// reference value `z`. A window that reads `z+1, z+2, …` (mod n) has no
/// inversions; its reversal of length `m` has `m(m-1)/2`.
pub fn window_inversions(pi: &Permutation, z: u16, lo: usize, hi: usize) -> Result<u64> {
    let n = pi.degree();
    if lo == 0 || lo > hi || hi > n {
        return Err(Error::InvalidPosition {
            n,
            detail: format!("window needs 1 <= lo <= hi <= n, got lo={lo}, hi={hi}"),
        });
    }
    if z == 0 || z as usize > n {
        return Err(Error::OutOfRange(format!(
            "reference value {z} outside 1..={n}"
        )));
    }
    let window = &pi.as_slice()[lo - 1..hi];
    if window.contains(&z) {
        return Err(Error::OutOfRange(format!(
            "reference value {z} lies inside the window {lo}..={hi}"
        )));
    }
    let key = |v: u16| (v as i64 - z as i64).rem_euclid(n as i64);
    let mut count = 0;
    for (p, &a) in window.iter().enumerate() {
        count += window[p + 1..].iter().filter(|&&b| key(a) > key(b)).count() as u64;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Generator;
    use proptest::prelude::*;

    fn id(n: usize) -> Permutation {
        Permutation::identity(n).unwrap()
    }

    #[test]
    fn cyclic_chains() {
        let pi = id(5);
        assert!(in_cyclic_order(&pi, 1, 2, 3).unwrap());
        assert!(in_cyclic_order(&pi, 3, 1, 2).unwrap());
        assert!(in_cyclic_order(&pi, 2, 3, 1).unwrap());
        assert!(!in_cyclic_order(&pi, 2, 1, 3).unwrap());
        assert!(in_cyclic_order(&pi, 1, 1, 3).is_err());
        assert!(in_cyclic_order(&pi, 1, 2, 6).is_err());
    }

    #[test]
    fn less_z_examples() {
        let pi = id(5);
        assert!(less_z(&pi, 1, 2, 3).unwrap());
        assert!(less_z(&pi, 3, 4, 1).unwrap());
        assert!(!less_z(&pi, 3, 1, 4).unwrap());
        assert!(less_z(&pi, 3, 3, 1).is_err());
    }

    #[test]
    fn less_z_is_a_strict_total_order() {
        let n = 7;
        let pi = id(n);
        for z in 1..=n {
            for a in (1..=n).filter(|&a| a != z) {
                for b in (1..=n).filter(|&b| b != z && b != a) {
                    let ab = less_z(&pi, z, a, b).unwrap();
                    let ba = less_z(&pi, z, b, a).unwrap();
                    assert!(ab ^ ba);
                    for c in (1..=n).filter(|&c| c != z && c != a && c != b) {
                        if ab && less_z(&pi, z, b, c).unwrap() {
                            assert!(less_z(&pi, z, a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inversion_counts() {
        let pi = id(8);
        // sorted window relative to the value just before it
        assert_eq!(window_inversions(&pi, 8, 1, 5).unwrap(), 0);
        for j in 2..=7usize {
            let rev = pi.reversal(1, j).unwrap();
            assert_eq!(
                window_inversions(&rev, 8, 1, j).unwrap(),
                (j * (j - 1) / 2) as u64
            );
        }
        assert_eq!(window_inversions(&pi, 8, 3, 3).unwrap(), 0);
        // the window 5 6 7 8 1 2 is sorted relative to reference 4
        let rotated = pi.rotate(4);
        assert_eq!(window_inversions(&rotated, 4, 1, 6).unwrap(), 0);
        assert!(window_inversions(&pi, 3, 1, 5).is_err());
        assert!(window_inversions(&pi, 8, 4, 2).is_err());
    }

    proptest! {
        #[test]
        fn adjacent_swap_moves_inversions_by_one(
            word in (3usize..=10).prop_flat_map(|n| Just((1..=n as u16).collect::<Vec<_>>()).prop_shuffle())
        ) {
            let pi = Permutation::new(word).unwrap();
            let n = pi.degree();
            let z = pi.at(n).unwrap();
            let before = window_inversions(&pi, z, 1, n - 1).unwrap() as i64;
            let after = window_inversions(&pi.apply(Generator::Swap).unwrap(), z, 1, n - 1).unwrap() as i64;
            prop_assert_eq!((after - before).abs(), 1);
        }
    }
}
