#![no_main]

use std::sync::OnceLock;

use gencayley::aut::inner;
use gencayley::gencayley::validate_subset;
use gencayley::group::FiniteGroup;
use gencayley::input::resolve_subset;
use libfuzzer_sys::fuzz_target;

fn s4() -> &'static FiniteGroup {
    static G: OnceLock<FiniteGroup> = OnceLock::new();
    G.get_or_init(|| FiniteGroup::symmetric(4).unwrap())
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let g = s4();
    if let Ok(s) = resolve_subset(g, text) {
        let _ = validate_subset(g, &inner(g, 1), &s);
    }
});
