//! Complex documents: decode, then (on success) materialize the face list
//! and f-polynomial, which must never panic on a structurally valid complex.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qfkg::io::parse_complex_json;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(complex) = parse_complex_json(text) {
        let _ = complex.f_polynomial();
        let _ = complex.face_count();
    }
});
