#![no_main]

use libfuzzer_sys::fuzz_target;

use csq::tableaux::Tableau;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = text.parse::<Tableau>() {
        t.check_invariants().expect("parsed tableaux are standard");
        let back: Tableau = t.to_string().parse().unwrap();
        assert_eq!(back, t);
        // The JSON row rendering parses back too.
        let json = serde_json::to_string(&t).unwrap();
        let again: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(again, t);
    }
});
