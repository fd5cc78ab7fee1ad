#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(seq) = parkfun::input::parse_pref_seq(text) {
            let rendered = seq.to_string();
            let back = parkfun::input::parse_pref_seq(&rendered).expect("canonical form parses");
            assert_eq!(back, seq);
            // membership predicates must never panic on parsed input
            let _ = parkfun::parking::is_rk_parking(&seq, 2, 3);
            let _ = parkfun::dual::is_in_dual_set(&seq, 2, 3);
        }
    }
});
