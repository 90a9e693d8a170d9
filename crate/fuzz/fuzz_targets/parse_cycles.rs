#![no_main]

use gencayley::perm::{format_cycles, parse_cycles};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&deg, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let degree = usize::from(deg % 16);
    if let Ok(p) = parse_cycles(text, degree) {
        let again = parse_cycles(&format_cycles(&p), degree).expect("canonical form parses");
        assert_eq!(again, p);
    }
});
