//! Coefficient arrays with integer / rational-string entries.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qfkg::io::parse_polynomial_json;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poly) = parse_polynomial_json(text) {
        let _ = poly.eval_one();
        let _ = poly.to_string();
    }
});
