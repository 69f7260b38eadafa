#![no_main]

use libfuzzer_sys::fuzz_target;
use scrollcurves::ruled_cubic::{contains_preserved, is_effective, preserved_link, APicClass};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(t) = s.parse::<APicClass>() else {
        return;
    };
    assert_eq!(t.to_string().parse::<APicClass>().unwrap(), t);
    if !t.parity_ok() {
        assert!(is_effective(&t).is_err());
        return;
    }
    let effective = is_effective(&t).unwrap();
    if contains_preserved(&t).unwrap() {
        assert!(effective);
    }
    if let Ok(link) = preserved_link(&t) {
        assert!(contains_preserved(&link).unwrap());
    }
});
