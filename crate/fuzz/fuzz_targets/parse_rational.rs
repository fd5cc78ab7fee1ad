#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // cap the length: giant digit strings only exercise bigint parsing
    if data.len() > 4096 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(value) = parkfun::input::parse_rational(text) {
            let rendered = parkfun::rational::format_rat(&value);
            let back = parkfun::input::parse_rational(&rendered).expect("canonical form parses");
            assert_eq!(back, value);
        }
    }
});
