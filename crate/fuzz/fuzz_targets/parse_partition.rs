#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(partition) = parkfun::input::parse_partition(text) {
            // accepted input must round-trip through the canonical form
            let rendered = partition.to_string();
            let back = parkfun::input::parse_partition(&rendered).expect("canonical form parses");
            assert_eq!(back, partition);
        }
    }
});
