//! Replays the checked-in fuzz corpus through the same entry points the fuzz
//! targets call, so the seeds stay meaningful under plain `cargo test`.

use std::fs;
use std::path::PathBuf;

use gencayley::aut::inner;
use gencayley::gencayley::validate_subset;
use gencayley::graph::parse_edge_list;
use gencayley::group::FiniteGroup;
use gencayley::input::{parse_alpha_spec, parse_group_spec, resolve_subset};
use gencayley::perm::{format_cycles, parse_cycles};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty(), "no seeds for {target}");
    files.into_iter().map(|p| fs::read(p).unwrap()).collect()
}

#[test]
fn parse_cycles_seeds() {
    for data in seeds("parse_cycles") {
        let (&deg, rest) = data.split_first().unwrap();
        let text = std::str::from_utf8(rest).unwrap();
        let degree = usize::from(deg % 16);
        let p = parse_cycles(text, degree).unwrap_or_else(|e| panic!("{text:?}: {e}"));
        assert_eq!(parse_cycles(&format_cycles(&p), degree).unwrap(), p);
    }
}

#[test]
fn group_spec_seeds() {
    for data in seeds("group_spec") {
        let text = std::str::from_utf8(&data).unwrap();
        let g = parse_group_spec(text).unwrap().build_capped(512);
        assert!(g.is_ok(), "{text:?}");
    }
}

#[test]
fn alpha_spec_seeds() {
    let s4 = FiniteGroup::symmetric(4).unwrap();
    let s6 = FiniteGroup::symmetric(6).unwrap();
    for data in seeds("alpha_spec") {
        let text = std::str::from_utf8(&data).unwrap();
        let spec = parse_alpha_spec(text).unwrap();
        let g = if text.starts_with("s6-delta") {
            &s6
        } else {
            &s4
        };
        assert!(spec.resolve(g).unwrap().squares_to_identity(), "{text:?}");
    }
}

#[test]
fn subset_spec_seeds() {
    let s4 = FiniteGroup::symmetric(4).unwrap();
    for data in seeds("subset_spec") {
        let text = std::str::from_utf8(&data).unwrap();
        let s = resolve_subset(&s4, text).unwrap_or_else(|e| panic!("{text:?}: {e}"));
        let _ = validate_subset(&s4, &inner(&s4, 1), &s);
    }
}

#[test]
fn edge_list_seeds() {
    for data in seeds("edge_list") {
        let (&n, rest) = data.split_first().unwrap();
        let g = parse_edge_list(usize::from(n), std::str::from_utf8(rest).unwrap()).unwrap();
        assert!(g.is_symmetric());
        assert_eq!(
            parse_edge_list(usize::from(n), &g.to_edge_list()).unwrap(),
            g
        );
    }
}
