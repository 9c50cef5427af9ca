#![no_main]

use libfuzzer_sys::fuzz_target;
use wrd::verify::CorpusParams;

// The Display form is the canonical echo, so it must be a fixed point.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(params) = text.parse::<CorpusParams>() else { return };
    let echoed = params.to_string();
    let reparsed = echoed.parse::<CorpusParams>().expect("echoed params parse");
    assert_eq!(params, reparsed);
    assert_eq!(echoed, reparsed.to_string());
});
