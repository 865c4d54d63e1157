#![no_main]

use libfuzzer_sys::fuzz_target;
use mplex_core::io::DatasetManifest;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = DatasetManifest::from_json(text) {
        let again = DatasetManifest::from_json(&m.to_json()).expect("serialized manifest reloads");
        assert_eq!(again, m);
    }
});
