#![no_main]

use libfuzzer_sys::fuzz_target;
use reversal_core::json::{input_from_value, input_to_value, parse_input, parse_json};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = parse_input(data) else { return };
    let first = input_to_value(&input).to_string();
    let back = input_from_value(&parse_json(&first).expect("emitted JSON parses")).expect("emitted input reparses");
    assert_eq!(back, input);
    assert_eq!(input_to_value(&back).to_string(), first);
});
