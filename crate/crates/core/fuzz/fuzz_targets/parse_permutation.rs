//! Permutation text (`id`, `s*r^k`, one-line words) must parse or error,
//! never panic, and whatever parses must print back to itself.

#![no_main]

use libfuzzer_sys::fuzz_target;
use lrx_core::perm::{rank, unrank};
use lrx_core::Permutation;

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let n = 1 + (first % 20) as usize;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(pi) = Permutation::parse(text, n) {
        assert_eq!(pi.degree(), n);
        assert_eq!(Permutation::parse(&pi.to_string(), n).unwrap(), pi);
        let r = rank(&pi).unwrap();
        assert_eq!(unrank(n, r).unwrap(), pi);
    }
});
