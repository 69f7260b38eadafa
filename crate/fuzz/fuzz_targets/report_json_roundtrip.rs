#![no_main]

use libfuzzer_sys::fuzz_target;
use scrollcurves_cli::{Format, Report};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(r) = Report::from_json(s) else { return };
    let json = r.to_json();
    assert_eq!(Report::from_json(&json).unwrap(), r);
    let _ = r.render(Format::Text);
    let _ = r.render(Format::Csv);
});
