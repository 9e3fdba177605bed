use std::fmt;

use super::{check_degree, Permutation};
use crate::error::{Error, Result};

/// An element `s^ε r^k` of the dihedral subgroup `H_n = ⟨r, s⟩ ≤ S_n`, where
/// `s` is the full reversal and `r` the left shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    n: usize,
    reflect: bool,
    shift: usize,
}

impl DihedralElement {
    pub fn new(n: usize, reflect: bool, shift: i64) -> Result<Self> {
        check_degree(n, 1)?;
        Ok(DihedralElement {
            n,
            reflect,
            shift: shift.rem_euclid(n as i64) as usize,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        DihedralElement::new(n, false, 0)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn reflect(&self) -> bool {
        self.reflect
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// `(s^a r^b)(s^c r^d) = s^(a+c) r^((-1)^c b + d)`, from `r s = s r⁻¹`.
    pub fn multiply(&self, other: &DihedralElement) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let b = self.shift as i64;
        let carried = if other.reflect { -b } else { b };
        DihedralElement::new(
            self.n,
            self.reflect ^ other.reflect,
            carried + other.shift as i64,
        )
    }

    pub fn inverse(&self) -> Self {
        let shift = if self.reflect {
            self.shift
        } else {
            (self.n - self.shift) % self.n
        };
        DihedralElement { shift, ..*self }
    }

    pub fn to_permutation(&self) -> Permutation {
        let base = if self.reflect {
            Permutation::full_reversal(self.n)
        } else {
            Permutation::identity(self.n)
        };
        base.expect("degree validated on construction")
            .rotate(self.shift as i64)
    }

    /// Recognizes a permutation as `s^ε r^k`, if it lies in `H_n`.
    ///
    /// For `n <= 2` the two cosets coincide; the rotation reading wins.
    pub fn from_permutation(pi: &Permutation) -> Option<Self> {
        let n = pi.degree();
        let id = Permutation::identity(n).ok()?;
        if let Ok(Some(k)) = id.rotation_offset(pi) {
            return Some(DihedralElement {
                n,
                reflect: false,
                shift: k,
            });
        }
        let s = Permutation::full_reversal(n).ok()?;
        match s.rotation_offset(pi) {
            Ok(Some(k)) => Some(DihedralElement {
                n,
                reflect: true,
                shift: k,
            }),
            _ => None,
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflect, self.shift) {
            (false, 0) => write!(f, "id"),
            (false, k) => write!(f, "r^{k}"),
            (true, 0) => write!(f, "s"),
            (true, k) => write!(f, "s*r^{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize) -> Vec<DihedralElement> {
        [false, true]
            .into_iter()
            .flat_map(|e| (0..n as i64).map(move |k| DihedralElement::new(n, e, k).unwrap()))
            .collect()
    }

    #[test]
    fn relations() {
        for n in 3..=9 {
            let id = DihedralElement::identity(n).unwrap();
            let r = DihedralElement::new(n, false, 1).unwrap();
            let s = DihedralElement::new(n, true, 0).unwrap();
            let mut acc = id;
            for _ in 0..n {
                acc = acc.multiply(&r).unwrap();
            }
            assert_eq!(acc, id);
            assert_eq!(s.multiply(&s).unwrap(), id);
            let srs = s.multiply(&r).unwrap().multiply(&s).unwrap();
            assert_eq!(srs, r.inverse());
        }
    }

    #[test]
    fn reflections_multiply_to_rotations() {
        let n = 7;
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                let x = DihedralElement::new(n, true, a).unwrap();
                let y = DihedralElement::new(n, true, b).unwrap();
                let prod = x.multiply(&y).unwrap();
                assert_eq!(prod, DihedralElement::new(n, false, b - a).unwrap());
                let direct = x.to_permutation().compose(&y.to_permutation()).unwrap();
                assert_eq!(direct, Permutation::shift(n, b - a).unwrap());
            }
        }
    }

    #[test]
    fn to_permutation_example() {
        let e = DihedralElement::new(4, true, 2).unwrap();
        assert_eq!(e.to_permutation().as_slice(), &[2, 1, 4, 3]);
        assert_eq!(e.to_string(), "s*r^2");
    }

    #[test]
    fn phi_is_a_homomorphism() {
        for n in 1..=16 {
            let elems = all(n);
            for a in &elems {
                let pa = a.to_permutation();
                for b in &elems {
                    let lhs = a.multiply(b).unwrap().to_permutation();
                    let rhs = pa.compose(&b.to_permutation()).unwrap();
                    assert_eq!(lhs, rhs, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn recognition_round_trips() {
        for n in 3..=12 {
            for e in all(n) {
                assert_eq!(
                    DihedralElement::from_permutation(&e.to_permutation()),
                    Some(e)
                );
                assert_eq!(
                    e.multiply(&e.inverse()).unwrap(),
                    DihedralElement::identity(n).unwrap()
                );
            }
        }
        let outside = Permutation::new(vec![2, 1, 3, 4]).unwrap();
        assert_eq!(DihedralElement::from_permutation(&outside), None);
    }

    #[test]
    fn degree_mismatch() {
        let a = DihedralElement::identity(4).unwrap();
        let b = DihedralElement::identity(5).unwrap();
        assert!(matches!(a.multiply(&b), Err(Error::DegreeMismatch { .. })));
    }
}
