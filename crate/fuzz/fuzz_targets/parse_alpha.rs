#![no_main]

use libfuzzer_sys::fuzz_target;
use scrollcurves::ruled_cubic::{parse_alpha, reduce_alpha};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(a) = parse_alpha(s) else { return };
    let again = parse_alpha(&a.to_string()).expect("displayed alpha must parse");
    assert_eq!(again, a);
    let r = reduce_alpha(&a);
    assert_eq!(reduce_alpha(&r), r);
    assert!(r.iter().all(|(_, m)| m > 0));
});
