//! Generator words: finite sequences over `{X, L, R}`, read left to right as
//! paths in the Cayley graph.

mod builders;

use std::fmt;

pub use builders::{
    decomposition_a, decomposition_b, greedy_pair_word, lemma_word, theorem_branch_word,
    theorem_word, Branch, LemmaVariant, LemmaWord, PairScheme, ReversalPlan, MAX_BUILDER_DEGREE,
};

use crate::error::{Error, Result};
use crate::perm::{check_degree, Generator, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenWord {
    degree: usize,
    tokens: Vec<Generator>,
}

impl GenWord {
    pub fn new(degree: usize, tokens: Vec<Generator>) -> Result<Self> {
        check_degree(degree, 1)?;
        if degree < 2 && tokens.contains(&Generator::Swap) {
            return Err(Error::SwapOnDegreeOne);
        }
        Ok(GenWord { degree, tokens })
    }

    pub fn empty(degree: usize) -> Result<Self> {
        GenWord::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[Generator] {
        &self.tokens
    }

    pub(crate) fn push(&mut self, g: Generator) {
        self.tokens.push(g);
    }

    pub(crate) fn push_n(&mut self, g: Generator, count: usize) {
        self.tokens.extend(std::iter::repeat_n(g, count));
    }

    pub(crate) fn append(&mut self, other: &GenWord) {
        debug_assert_eq!(self.degree, other.degree);
        self.tokens.extend_from_slice(&other.tokens);
    }

    pub fn count(&self, g: Generator) -> usize {
        self.tokens.iter().filter(|&&t| t == g).count()
    }

    /// Net number of left shifts (`#L - #R`).
    pub fn net_shift(&self) -> i64 {
        self.count(Generator::Left) as i64 - self.count(Generator::Right) as i64
    }

    /// Parity of the group element the word spells: each `X` is odd and each
    /// shift has the parity of an n-cycle.
    pub fn element_is_odd(&self) -> bool {
        let swaps = self.count(Generator::Swap);
        let shifts = self.len() - swaps;
        (swaps + shifts * (self.degree - 1)) % 2 == 1
    }

    /// Parses whitespace-separated tokens `X`, `L`, `R`, each optionally
    /// followed by a run length `^k` with `k >= 0`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut tokens = Vec::new();
        for raw in text.split_whitespace() {
            let (name, count) = match raw.split_once('^') {
                None => (raw, 1usize),
                Some((name, exp)) => {
                    if exp.starts_with('-') && exp[1..].parse::<u64>().is_ok() {
                        return Err(Error::NegativeRunLength(raw.to_string()));
                    }
                    let count = exp
                        .parse::<usize>()
                        .map_err(|_| Error::UnknownToken(raw.to_string()))?;
                    (name, count)
                }
            };
            let g =
                Generator::from_token(name).ok_or_else(|| Error::UnknownToken(raw.to_string()))?;
            if tokens.len().saturating_add(count) > MAX_PARSED_TOKENS {
                return Err(Error::OutOfRange(format!(
                    "word longer than {MAX_PARSED_TOKENS} tokens"
                )));
            }
            tokens.extend(std::iter::repeat_n(g, count));
        }
        GenWord::new(degree, tokens)
    }

    /// Applies the word to `π`, token by token from the left.
    pub fn apply(&self, pi: &Permutation) -> Result<Permutation> {
        let n = pi.degree();
        if n != self.degree {
            return Err(Error::DegreeMismatch {
                left: n,
                right: self.degree,
            });
        }
        // Track rotations as an offset so each token is O(1).
        let mut buf = pi.as_slice().to_vec();
        let mut offset = 0usize;
        for &g in &self.tokens {
            match g {
                Generator::Left => offset = (offset + 1) % n,
                Generator::Right => offset = (offset + n - 1) % n,
                Generator::Swap => {
                    if n < 2 {
                        return Err(Error::SwapOnDegreeOne);
                    }
                    buf.swap(offset, (offset + 1) % n);
                }
            }
        }
        buf.rotate_left(offset);
        Ok(Permutation::from_word_unchecked(buf))
    }

    /// Free reduction under `XX = LR = RL = ()`.
    pub fn reduce(&self) -> GenWord {
        let mut out: Vec<Generator> = Vec::with_capacity(self.tokens.len());
        for &g in &self.tokens {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        GenWord {
            degree: self.degree,
            tokens: out,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.tokens.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn inverse(&self) -> GenWord {
        GenWord {
            degree: self.degree,
            tokens: self.tokens.iter().rev().map(|g| g.inverse()).collect(),
        }
    }
}

/// Upper bound on parsed word length; run-length input could otherwise ask
/// for an arbitrarily large allocation.
pub const MAX_PARSED_TOKENS: usize = 1 << 28;

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(text: &str, n: usize) -> GenWord {
        GenWord::parse(text, n).unwrap()
    }

    fn p(word: &[u16]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        use Generator::*;
        assert_eq!(w("X L^2 X", 5).tokens(), &[Swap, Left, Left, Swap]);
        assert!(w("", 5).is_empty());
        assert!(w("  \n ", 5).is_empty());
        assert_eq!(w("R^0 X", 5).tokens(), &[Swap]);
        assert!(matches!(
            GenWord::parse("X Q", 5),
            Err(Error::UnknownToken(_))
        ));
        assert!(matches!(
            GenWord::parse("L^-2", 5),
            Err(Error::NegativeRunLength(_))
        ));
        assert!(matches!(
            GenWord::parse("L^", 5),
            Err(Error::UnknownToken(_))
        ));
        assert!(matches!(
            GenWord::parse("x", 5),
            Err(Error::UnknownToken(_))
        ));
        assert!(GenWord::parse("L^99999999999", 5).is_err());
        assert!(matches!(
            GenWord::parse("X", 1),
            Err(Error::SwapOnDegreeOne)
        ));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(
            w("X L L X", 4).apply(&p(&[4, 3, 2, 1])).unwrap(),
            p(&[1, 2, 3, 4])
        );
        let q = p(&[3, 1, 5, 2, 4]);
        assert_eq!(w("L R", 5).apply(&q).unwrap(), q);
        assert_eq!(w("", 5).apply(&q).unwrap(), q);
        assert_eq!(
            w("X L X R X", 5).apply(&p(&[1, 2, 3, 4, 5])).unwrap(),
            p(&[3, 2, 1, 4, 5])
        );
        assert!(matches!(
            w("X", 4).apply(&q),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("X X L", 4).reduce(), w("L", 4));
        assert!(w("L R", 4).reduce().is_empty());
        assert!(w("X L R X", 4).reduce().is_empty());
        assert_eq!(w("L X R R L X", 4).reduce(), w("L X R X", 4));
    }

    fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = GenWord> {
        proptest::collection::vec(
            prop_oneof![
                Just(Generator::Swap),
                Just(Generator::Left),
                Just(Generator::Right)
            ],
            0..max_len,
        )
        .prop_map(move |t| GenWord::new(n, t).unwrap())
    }

    proptest! {
        #[test]
        fn apply_matches_generator_fold(word in arb_word(6, 40), seed in 0u64..720) {
            let start = crate::perm::unrank(6, seed).unwrap();
            let mut folded = start.clone();
            for &g in word.tokens() {
                folded = folded.apply(g).unwrap();
            }
            prop_assert_eq!(word.apply(&start).unwrap(), folded);
        }

        #[test]
        fn reduce_preserves_the_element(word in arb_word(5, 40)) {
            let id = Permutation::identity(5).unwrap();
            let reduced = word.reduce();
            prop_assert!(reduced.len() <= word.len());
            prop_assert!(reduced.is_reduced());
            prop_assert_eq!(reduced.apply(&id).unwrap(), word.apply(&id).unwrap());
        }

        #[test]
        fn text_round_trip(word in arb_word(7, 60)) {
            prop_assert_eq!(GenWord::parse(&word.to_string(), 7).unwrap(), word);
        }

        #[test]
        fn parity_tracks_the_element(word in arb_word(7, 30)) {
            let id = Permutation::identity(7).unwrap();
            prop_assert_eq!(word.element_is_odd(), word.apply(&id).unwrap().is_odd());
        }

        #[test]
        fn inverse_word_undoes(word in arb_word(6, 30)) {
            let id = Permutation::identity(6).unwrap();
            let there = word.apply(&id).unwrap();
            prop_assert!(word.inverse().apply(&there).unwrap().is_identity());
        }
    }
}
