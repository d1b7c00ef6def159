//! The poset JSON decoder must be total: arbitrary bytes produce either a
//! valid poset or a clean error, never a panic. Successful parses are pushed
//! through the (capped) ideal enumeration, which must also be total.

#![no_main]

use libfuzzer_sys::fuzz_target;
use qfkg::io::parse_poset_json;
use qfkg::lattice::IdealLattice;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(poset) = parse_poset_json(text) {
        let _ = IdealLattice::from_poset_capped(&poset, 1 << 12);
    }
});
