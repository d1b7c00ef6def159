//! Full instance documents (poset + three tables + exponents). The lattice
//! cap keeps adversarial antichains from materializing 2^n ideals.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qfkg::fkg::check_qfkg;
use qfkg::io::parse_instance_json_capped;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(inst) = parse_instance_json_capped(text, 512) {
        let _ = check_qfkg(&inst.lattice, &inst.mu, &inst.g, &inst.h);
    }
});
