#![no_main]

use libfuzzer_sys::fuzz_target;
use reversal_core::{Ring, Scalar};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for ring in [Ring::R, Ring::C, Ring::H] {
        if let Ok(s) = Scalar::parse(text, ring) {
            let printed = s.to_string();
            let again = Scalar::parse(&printed, ring).expect("printed literal reparses");
            assert_eq!(again, s);
            assert_eq!(again.to_string(), printed);
        }
    }
});
