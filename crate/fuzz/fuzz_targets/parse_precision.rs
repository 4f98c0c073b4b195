#![no_main]

use libfuzzer_sys::fuzz_target;
use regdet::PrecisionConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = PrecisionConfig::from_json(text) {
        cfg.validate().expect("from_json only returns validated configs");
    }
});
