#![no_main]

use libfuzzer_sys::fuzz_target;

use csq::qalg::QPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<QPoly>() {
        let back: QPoly = p.to_string().parse().unwrap();
        assert_eq!(back, p);
    }
});
