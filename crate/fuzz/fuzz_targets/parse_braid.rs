#![no_main]

use libfuzzer_sys::fuzz_target;
use vknot::{gauss_from_closure, p_invariant, parse_braid, u_invariant};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(word) = parse_braid(text, None) else { return };
    let again = parse_braid(&word.to_string(), Some(word.strands())).expect("emitted braid reparses");
    assert_eq!(again, word);
    if word.len() <= 64 {
        if let Ok(gd) = gauss_from_closure(&word) {
            let _ = p_invariant(&gd);
            let _ = u_invariant(&gd);
        }
    }
});
