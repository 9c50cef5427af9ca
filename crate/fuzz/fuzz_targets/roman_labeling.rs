#![no_main]

use libfuzzer_sys::fuzz_target;
use wrd::RomanLabeling;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(labeling) = text.parse::<RomanLabeling>() else { return };
    let echoed = labeling.to_string();
    let reparsed = echoed.parse::<RomanLabeling>().expect("echoed labeling parses");
    assert_eq!(labeling, reparsed);
});
