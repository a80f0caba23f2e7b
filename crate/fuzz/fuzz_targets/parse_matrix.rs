#![no_main]

use libfuzzer_sys::fuzz_target;
use reversal_core::json::{any_matrix_to_value, matrix_from_value, parse_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(value) = parse_json(text) else { return };
    if let Ok(m) = matrix_from_value(&value) {
        let out = any_matrix_to_value(&m);
        assert_eq!(matrix_from_value(&out).expect("emitted matrix reparses"), m);
    }
});
