#![no_main]

use libfuzzer_sys::fuzz_target;
use regdet::{parse_polynomial, signature};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = parse_polynomial(text) else { return };
    assert!(p.degree() >= 1);
    // rendering must parse back to the same polynomial
    assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    assert_eq!(parse_polynomial(&p.to_list_string()).unwrap(), p);
    if p.degree() <= 32 {
        if let Ok(sig) = signature(&p) {
            assert_eq!(sig.r1 + 2 * sig.r2, sig.degree);
        }
    }
});
