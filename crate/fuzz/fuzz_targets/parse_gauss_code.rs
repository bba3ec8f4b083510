#![no_main]

use libfuzzer_sys::fuzz_target;
use vknot::{p_invariant, simplify, u_invariant, GaussDiagram};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(gd) = text.parse::<GaussDiagram>() else { return };
    let again: GaussDiagram = gd.to_string().parse().expect("emitted Gauss code reparses");
    assert_eq!(again, gd);
    let _ = p_invariant(&gd);
    let _ = u_invariant(&gd);
    assert!(simplify(&gd).chord_count() <= gd.chord_count());
});
