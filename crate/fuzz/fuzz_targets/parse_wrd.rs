#![no_main]

use libfuzzer_sys::fuzz_target;
use wrd::{parse_wrd, to_wrd_string};

// Accepted inputs must survive a serialize/reparse cycle unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(graph) = parse_wrd(text) else { return };
    let canonical = to_wrd_string(&graph);
    let reparsed = parse_wrd(&canonical).expect("serializer emits parseable text");
    assert_eq!(graph, reparsed);
    assert_eq!(canonical, to_wrd_string(&reparsed));
});
