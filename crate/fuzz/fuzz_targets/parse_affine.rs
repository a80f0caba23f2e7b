#![no_main]

use libfuzzer_sys::fuzz_target;
use reversal_core::json::{affine_from_value, any_affine_to_value, parse_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(value) = parse_json(text) else { return };
    if let Ok(g) = affine_from_value(&value) {
        let out = any_affine_to_value(&g);
        assert_eq!(affine_from_value(&out).expect("emitted affine map reparses"), g);
    }
});
