#![no_main]

use libfuzzer_sys::fuzz_target;
use wrd::gen::WeightSampler;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(sampler) = text.parse::<WeightSampler>() else { return };
    let echoed = sampler.to_string();
    let reparsed = echoed.parse::<WeightSampler>().expect("echoed spec parses");
    assert_eq!(sampler, reparsed);
});
