//! Binary distance-table dumps: reject malformed input, re-encode accepted
//! input byte for byte.

#![no_main]

use libfuzzer_sys::fuzz_target;
use lrx_core::bfs::DistanceTable;

fuzz_target!(|data: &[u8]| {
    if let Ok(table) = DistanceTable::from_bytes(data) {
        assert_eq!(table.to_bytes(), data);
        let _ = table.histogram();
    }
});
