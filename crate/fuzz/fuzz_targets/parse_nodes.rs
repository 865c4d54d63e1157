#![no_main]

use libfuzzer_sys::fuzz_target;
use mplex_core::io::parse_nodes;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(parsed) = parse_nodes(text) {
            let mut sorted = parsed.labels.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), parsed.labels.len());
        }
    }
});
