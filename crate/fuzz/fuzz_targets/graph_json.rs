#![no_main]

use libfuzzer_sys::fuzz_target;
use mplex_core::io::{from_canonical_json, to_canonical_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = from_canonical_json(text) {
        let canonical = to_canonical_json(&g);
        let back = from_canonical_json(&canonical).expect("canonical output reloads");
        assert_eq!(to_canonical_json(&back), canonical);
    }
});
