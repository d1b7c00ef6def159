//! Partition text: parse, then exercise the diagram combinatorics that a
//! valid partition must support (hooks, conjugation involution, Display
//! roundtrip).

#![no_main]

use libfuzzer_sys::fuzz_target;
use qfkg::io::parse_partition_text;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lam) = parse_partition_text(text) {
        assert_eq!(lam.conjugate().conjugate(), lam);
        let reparsed = parse_partition_text(&lam.to_string()).expect("display reparses");
        assert_eq!(reparsed, lam);
        if lam.size() <= 30 {
            let _ = lam.hook_lengths();
        }
    }
});
