#![no_main]

use libfuzzer_sys::fuzz_target;
use wrd::weight::{parse_rational, ratio_to_string};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(value) = parse_rational(text) else { return };
    let canonical = ratio_to_string(&value);
    let reparsed = parse_rational(&canonical).expect("canonical form parses");
    assert_eq!(value, reparsed);
});
