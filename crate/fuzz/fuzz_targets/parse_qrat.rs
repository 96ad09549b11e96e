#![no_main]

use libfuzzer_sys::fuzz_target;

use csq::qalg::QRat;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = text.parse::<QRat>() {
        // Parsing normalizes, so the canonical form round-trips.
        let back: QRat = r.to_string().parse().unwrap();
        assert_eq!(back, r);
    }
});
