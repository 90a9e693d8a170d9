#![no_main]

use gencayley::graph::parse_edge_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(g) = parse_edge_list(usize::from(n), text) {
        assert!(g.is_symmetric());
        assert_eq!(
            parse_edge_list(usize::from(n), &g.to_edge_list()).unwrap(),
            g
        );
    }
});
