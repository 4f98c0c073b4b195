#![no_main]

use libfuzzer_sys::fuzz_target;
use regdet::cli::parse_grid;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(grid) = parse_grid(text) {
            assert!(!grid.is_empty());
        }
    }
});
