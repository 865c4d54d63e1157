#![no_main]

use libfuzzer_sys::fuzz_target;
use mplex_core::io::{gpa_buckets, parse_attributes, BucketRules};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_attributes(text, &BucketRules::new(), None);
    let _ = parse_attributes(text, &gpa_buckets(), None);
});
