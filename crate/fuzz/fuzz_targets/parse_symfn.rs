#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 16384 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(f) = parkfun::input::parse_symfn(text) {
            let json = parkfun::input::symfn_to_json(&f);
            let rendered = serde_json::to_string(&json).expect("serializable");
            let back = parkfun::input::parse_symfn(&rendered).expect("canonical form parses");
            assert_eq!(back, f);
        }
    }
});
