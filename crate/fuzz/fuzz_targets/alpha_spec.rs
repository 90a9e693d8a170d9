#![no_main]

use std::sync::OnceLock;

use gencayley::group::FiniteGroup;
use gencayley::input::parse_alpha_spec;
use libfuzzer_sys::fuzz_target;

fn s4() -> &'static FiniteGroup {
    static G: OnceLock<FiniteGroup> = OnceLock::new();
    G.get_or_init(|| FiniteGroup::symmetric(4).unwrap())
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = parse_alpha_spec(text) {
        let _ = spec.resolve(s4());
    }
});
