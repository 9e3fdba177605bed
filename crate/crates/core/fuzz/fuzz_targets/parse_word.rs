//! Generator words with run lengths (`X L^3 R`).

#![no_main]

use libfuzzer_sys::fuzz_target;
use lrx_core::{GenWord, Permutation};

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let degree = 1 + (first % 32) as usize;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let Ok(word) = GenWord::parse(text, degree) else {
        return;
    };
    if word.len() > 100_000 {
        return;
    }
    assert_eq!(GenWord::parse(&word.to_string(), degree).unwrap(), word);
    let id = Permutation::identity(degree).unwrap();
    let image = word.apply(&id).unwrap();
    assert!(word.inverse().apply(&image).unwrap().is_identity());
});
