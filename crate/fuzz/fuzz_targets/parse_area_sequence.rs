#![no_main]

use libfuzzer_sys::fuzz_target;

use csq::graphs::AreaSequence;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(e) = text.parse::<AreaSequence>() {
        // Canonical text form round-trips.
        let back: AreaSequence = e.to_string().parse().unwrap();
        assert_eq!(back, e);
    }
});
