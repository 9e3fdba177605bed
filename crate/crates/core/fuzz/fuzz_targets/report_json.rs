//! Verification reports read back from JSON.

#![no_main]

use libfuzzer_sys::fuzz_target;
use lrx_core::verifier::VerificationReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = VerificationReport::from_json(text) {
        let again = VerificationReport::from_json(&report.to_json()).unwrap();
        assert_eq!(again.rows.len(), report.rows.len());
        let _ = report.to_csv();
        let _ = report.to_text();
    }
});
