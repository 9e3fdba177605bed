//! Small permutations packed four bits per entry into a `u64`, 0-based
//! values, position 0 in the low nibble.

use crate::perm::{Generator, Permutation};

pub(crate) const MAX_PACKED_DEGREE: usize = 16;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Packer {
    n: usize,
    mask: u64,
    top: u32,
}

impl Packer {
    pub(crate) fn new(n: usize) -> Self {
        assert!((1..=MAX_PACKED_DEGREE).contains(&n));
        let mask = if n == 16 {
            u64::MAX
        } else {
            (1u64 << (4 * n)) - 1
        };
        Packer {
            n,
            mask,
            top: 4 * (n as u32 - 1),
        }
    }

    pub(crate) fn pack(&self, pi: &Permutation) -> u64 {
        debug_assert_eq!(pi.degree(), self.n);
        pi.as_slice()
            .iter()
            .enumerate()
            .fold(0u64, |acc, (p, &v)| acc | ((v as u64 - 1) << (4 * p)))
    }

    #[cfg(test)]
    pub(crate) fn unpack(&self, code: u64) -> Permutation {
        let word = (0..self.n)
            .map(|p| ((code >> (4 * p)) & 0xF) as u16 + 1)
            .collect();
        Permutation::from_word_unchecked(word)
    }

    #[inline]
    pub(crate) fn apply(&self, code: u64, g: Generator) -> u64 {
        match g {
            Generator::Swap => {
                let a = code & 0xF;
                let b = (code >> 4) & 0xF;
                (code & !0xFF) | (a << 4) | b
            }
            Generator::Left => (code >> 4) | ((code & 0xF) << self.top),
            Generator::Right => ((code << 4) & self.mask) | (code >> self.top),
        }
    }

    #[inline]
    pub(crate) fn values(&self, code: u64) -> impl Iterator<Item = u32> + '_ {
        (0..self.n).map(move |p| ((code >> (4 * p)) & 0xF) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_generators_match_permutations() {
        for n in 2..=16 {
            let packer = Packer::new(n);
            let q = Permutation::full_reversal(n)
                .unwrap()
                .rotate(3)
                .apply(Generator::Swap)
                .unwrap();
            let code = packer.pack(&q);
            assert_eq!(packer.unpack(code), q);
            for g in Generator::ALL {
                assert_eq!(packer.unpack(packer.apply(code, g)), q.apply(g).unwrap());
            }
        }
    }
}
