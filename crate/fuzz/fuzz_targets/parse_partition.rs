#![no_main]

use libfuzzer_sys::fuzz_target;

use csq::tableaux::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(shape) = text.parse::<Partition>() {
        let back: Partition = shape.to_string().parse().unwrap();
        assert_eq!(back, shape);
    }
});
