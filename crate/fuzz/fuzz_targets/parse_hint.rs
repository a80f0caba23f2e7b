#![no_main]

use libfuzzer_sys::fuzz_target;
use reversal_core::json::{parse_json, spectrum_from_value, spectrum_to_value};
use reversal_core::Ring;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(value) = parse_json(text) else { return };
    for ring in [Ring::R, Ring::C, Ring::H] {
        if let Ok(s) = spectrum_from_value(&value, ring) {
            let back = spectrum_from_value(&spectrum_to_value(&s), ring).expect("emitted hint reparses");
            assert_eq!(back.eigenvalues, s.eigenvalues);
        }
    }
});
