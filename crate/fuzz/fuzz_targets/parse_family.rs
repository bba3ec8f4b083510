#![no_main]

use libfuzzer_sys::fuzz_target;
use vknot::FamilySpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = text.parse::<FamilySpec>() else { return };
    assert_eq!(spec.to_string().parse::<FamilySpec>().expect("emitted family reparses"), spec);
    let (FamilySpec::Vt { p, q, .. } | FamilySpec::Ijk { i: p, j: q, .. }) = spec;
    if p.saturating_mul(q) <= 4096 {
        let _ = spec.build();
    }
});
