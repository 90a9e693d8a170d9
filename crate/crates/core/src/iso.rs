//! Graph isomorphism for small graphs, CI/GCI isomorphism between
//! (generalized) Cayley graphs, and checks that the explicit vertex maps of the
//! shift and twist constructions are isomorphisms.

use std::collections::BTreeMap;

use serde_json::json;
use thiserror::Error;

use crate::aut::{inner, AutGroup, Automorphism, Provenance};
use crate::gencayley::{build_graph, partition, GenCayleyError, GenCayleyPair, Violation};
use crate::graph::UGraph;
use crate::group::{ElemSet, FiniteGroup};

/// Vertex count above which only the structured fast paths run.
pub const DEFAULT_VERTEX_CAP: usize = 160;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("graphs with {0} vertices exceed the general search cap and no structured fast path applies")]
    CapExceeded(usize),
    #[error("automorphism is not inner")]
    NotInner,
    #[error("element {0} is not in Ω_α")]
    NotInBigOmega(usize),
    #[error("element {0} does not normalize S")]
    NotNormalizing(usize),
    #[error("subset is not a Cayley subset (needs S = S⁻¹ and e ∉ S)")]
    NotCayleySubset,
    #[error("involution g lies in S, so gS is not a Cayley subset")]
    InvolutionInSubset,
    #[error("S meets the conjugacy class of its involution, so gS meets ω")]
    MeetsClass,
    #[error("involutions are not conjugate")]
    NotConjugate,
    #[error("certificate does not verify")]
    InvalidCertificate,
    #[error("automorphism list is incomplete for this group")]
    IncompleteAutList,
    #[error(transparent)]
    GenCayley(#[from] GenCayleyError),
    #[error(transparent)]
    Violation(#[from] Violation),
}

/// Deterministic isomorphism search by colour refinement with
/// individualization and backtracking.
pub fn graph_isomorphic(a: &UGraph, b: &UGraph) -> Result<Option<Vec<usize>>, IsoError> {
    graph_isomorphic_capped(a, b, DEFAULT_VERTEX_CAP)
}

pub fn graph_isomorphic_capped(
    a: &UGraph,
    b: &UGraph,
    cap: usize,
) -> Result<Option<Vec<usize>>, IsoError> {
    let n = a.vertex_count();
    if n != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(None);
    }
    if let (Some(da), Some(db)) = (a.regular_degree(), b.regular_degree()) {
        debug_assert_eq!(da, db);
        if da == 0 {
            return Ok(Some((0..n).collect()));
        }
        if da == 1 || da == 2 {
            return Ok(cycle_cover_isomorphism(a, b));
        }
    }
    if n > cap {
        return Err(IsoError::CapExceeded(n));
    }
    let mut ca = vec![0u32; n];
    let mut cb = vec![0u32; n];
    if !refine(a, b, &mut ca, &mut cb) {
        return Ok(None);
    }
    Ok(search(a, b, ca, cb))
}

/// Matches components of 1- or 2-regular graphs (disjoint edges or cycles)
/// by length.
fn cycle_cover_isomorphism(a: &UGraph, b: &UGraph) -> Option<Vec<usize>> {
    let walks = |g: &UGraph| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = g
            .components()
            .into_iter()
            .map(|comp| {
                // Walk the cycle (or edge) in order from its smallest vertex.
                let start = comp[0];
                let mut order = vec![start];
                let mut prev = usize::MAX;
                let mut cur = start;
                loop {
                    let next = g
                        .neighbors(cur)
                        .iter()
                        .copied()
                        .find(|&w| w != prev && w != start);
                    match next {
                        Some(w) if order.len() < comp.len() => {
                            order.push(w);
                            prev = cur;
                            cur = w;
                        }
                        _ => break,
                    }
                }
                order
            })
            .collect();
        out.sort_by_key(Vec::len);
        out
    };
    let wa = walks(a);
    let wb = walks(b);
    if wa.iter().map(Vec::len).ne(wb.iter().map(Vec::len)) {
        return None;
    }
    let mut map = vec![0; a.vertex_count()];
    for (ca, cb) in wa.iter().zip(&wb) {
        for (&x, &y) in ca.iter().zip(cb) {
            map[x] = y;
        }
    }
    a.is_isomorphism(b, &map).then_some(map)
}

/// Refines the joint colouring of `a` and `b` to a stable partition. Returns
/// false if some colour class has different sizes in the two graphs.
fn refine(a: &UGraph, b: &UGraph, ca: &mut [u32], cb: &mut [u32]) -> bool {
    let n = a.vertex_count();
    let mut classes = count_classes(ca, cb);
    loop {
        let sig = |g: &UGraph, c: &[u32], v: usize| {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(a, ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(b, cb, v)).collect();
        let mut names: BTreeMap<&(u32, Vec<u32>), (u32, i64)> = BTreeMap::new();
        for s in &sa {
            names.entry(s).or_insert((0, 0)).1 += 1;
        }
        for s in &sb {
            names.entry(s).or_insert((0, 0)).1 -= 1;
        }
        if names.values().any(|&(_, bal)| bal != 0) {
            return false;
        }
        for (k, v) in names.values_mut().enumerate() {
            v.0 = k as u32;
        }
        let na: Vec<u32> = sa.iter().map(|s| names[s].0).collect();
        let nb: Vec<u32> = sb.iter().map(|s| names[s].0).collect();
        let new_classes = names.len();
        ca.copy_from_slice(&na);
        cb.copy_from_slice(&nb);
        if new_classes == classes {
            return true;
        }
        classes = new_classes;
    }
}

fn count_classes(ca: &[u32], cb: &[u32]) -> usize {
    let mut all: Vec<u32> = ca.iter().chain(cb).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn search(a: &UGraph, b: &UGraph, ca: Vec<u32>, cb: Vec<u32>) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &ca {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(&c, &s)| (s, c))
        .map(|(&c, _)| c);
    let Some(cell) = target else {
        let mut pos = vec![0usize; sizes.len()];
        for (v, &c) in cb.iter().enumerate() {
            pos[c as usize] = v;
        }
        let map: Vec<usize> = ca.iter().map(|&c| pos[c as usize]).collect();
        return a.is_isomorphism(b, &map).then_some(map);
    };
    let v = (0..n).find(|&v| ca[v] == cell).expect("cell is nonempty");
    let fresh = sizes.len() as u32;
    for w in (0..n).filter(|&w| cb[w] == cell) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[w] = fresh;
        if refine(a, b, &mut na, &mut nb) {
            if let Some(map) = search(a, b, na, nb) {
                return Some(map);
            }
        }
    }
    None
}

/// Whether the graph is 1-regular, with its component count.
pub fn is_perfect_matching(g: &UGraph) -> (bool, usize) {
    let ok = g.vertex_count() > 0 && g.regular_degree() == Some(1);
    (ok, g.components().len())
}

/// A GCI isomorphism witness: `α₂ = γ α₁ γ⁻¹` and
/// `S₂ = {g^{α₂} · γ(s) · g⁻¹ : s ∈ S₁}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GciCertificate {
    pub gamma: Automorphism,
    pub g: usize,
}

impl GciCertificate {
    pub fn verify(&self, grp: &FiniteGroup, p1: &GenCayleyPair, p2: &GenCayleyPair) -> bool {
        p2.alpha().is_conjugate_by(p1.alpha(), &self.gamma)
            && &gci_image(grp, p2.alpha(), &self.gamma, self.g, p1.subset()) == p2.subset()
    }

    /// The explicit graph isomorphism `v ↦ γ(v) · g⁻¹` it induces.
    pub fn vertex_map(&self, grp: &FiniteGroup) -> Vec<usize> {
        let ginv = grp.inv(self.g);
        (0..grp.order())
            .map(|v| grp.mul(self.gamma.apply(v), ginv))
            .collect()
    }

    pub fn to_json(&self, grp: &FiniteGroup, with_map: bool) -> serde_json::Value {
        let mut v = json!({
            "kind": "gci",
            "gamma": self.gamma.to_json(grp),
            "g": grp.fmt(self.g),
        });
        if with_map {
            v["vertex_map"] = json!(self.vertex_map(grp));
        }
        v
    }
}

/// `{α₂(g) · γ(s) · g⁻¹ : s ∈ S}`
fn gci_image(
    grp: &FiniteGroup,
    alpha2: &Automorphism,
    gamma: &Automorphism,
    g: usize,
    s: &ElemSet,
) -> ElemSet {
    let left = alpha2.apply(g);
    let right = grp.inv(g);
    s.iter()
        .map(|&x| grp.mul3(left, gamma.apply(x), right))
        .collect()
}

/// Certificates in general: graph bijection, CI witness, or GCI witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoCertificate {
    GraphIso(Vec<usize>),
    Ci(Automorphism),
    Gci(GciCertificate),
}

impl IsoCertificate {
    pub fn to_json(&self, grp: &FiniteGroup) -> serde_json::Value {
        match self {
            IsoCertificate::GraphIso(m) => json!({ "kind": "graph_iso", "vertex_map": m }),
            IsoCertificate::Ci(a) => json!({ "kind": "ci", "gamma": a.to_json(grp) }),
            IsoCertificate::Gci(c) => c.to_json(grp, true),
        }
    }
}

/// First `(γ, g)` in stored-then-index order relating the two pairs.
pub fn gci_isomorphic(
    grp: &FiniteGroup,
    p1: &GenCayleyPair,
    p2: &GenCayleyPair,
    auts: &AutGroup,
) -> Option<GciCertificate> {
    if p1.len() != p2.len() {
        return None;
    }
    for gamma in auts.iter() {
        if !p2.alpha().is_conjugate_by(p1.alpha(), gamma) {
            continue;
        }
        let moved = gamma.apply_set(p1.subset());
        for g in 0..grp.order() {
            let left = p2.alpha().apply(g);
            let right = grp.inv(g);
            if moved
                .iter()
                .all(|&x| p2.subset().contains(&grp.mul3(left, x, right)))
            {
                return Some(GciCertificate {
                    gamma: gamma.clone(),
                    g,
                });
            }
        }
    }
    None
}

fn is_cayley_subset(grp: &FiniteGroup, s: &ElemSet) -> bool {
    !s.contains(&0) && s.iter().all(|&x| s.contains(&grp.inv(x)))
}

/// Some `γ` in `auts` with `S₂ = γ(S₁)`.
pub fn ci_isomorphic<'a>(
    grp: &FiniteGroup,
    s1: &ElemSet,
    s2: &ElemSet,
    auts: &'a AutGroup,
) -> Result<Option<&'a Automorphism>, IsoError> {
    if !is_cayley_subset(grp, s1) || !is_cayley_subset(grp, s2) {
        return Err(IsoError::NotCayleySubset);
    }
    if s1.len() != s2.len() {
        return Ok(None);
    }
    Ok(auts.iter().find(|gamma| &gamma.apply_set(s1) == s2))
}

/// The element `g` with `α = σ(g)`, read from provenance or found by search.
fn inner_element(grp: &FiniteGroup, alpha: &Automorphism) -> Result<usize, IsoError> {
    match alpha.provenance() {
        Provenance::Inner(g) => Ok(g),
        Provenance::Identity => Ok(0),
        _ => (0..grp.order())
            .find(|&g| inner(grp, g) == *alpha)
            .ok_or(IsoError::NotInner),
    }
}

/// For `x ∈ Ω_{σ(g)}`: `xSx` is again a generalized Cayley subset and
/// `y ↦ yx` maps `GC(G, S, σ(g))` onto `GC(G, xSx, σ(g))`.
pub fn conjugation_shift_theorem_check(
    grp: &FiniteGroup,
    pair: &GenCayleyPair,
    x: usize,
) -> Result<bool, IsoError> {
    inner_element(grp, pair.alpha())?;
    let part = partition(grp, pair.alpha())?;
    if !part.big_omega.contains(&x) {
        return Err(IsoError::NotInBigOmega(x));
    }
    let shifted: ElemSet = pair.subset().iter().map(|&s| grp.mul3(x, s, x)).collect();
    let Ok(pair2) = GenCayleyPair::new(grp, pair.alpha().clone(), shifted) else {
        return Ok(false);
    };
    let map: Vec<usize> = (0..grp.order()).map(|y| grp.mul(y, x)).collect();
    Ok(build_graph(grp, pair).is_isomorphism(&build_graph(grp, &pair2), &map))
}

/// For `x ∈ N_G(S)`: `[g,x]S` is again a generalized Cayley subset and
/// `h ↦ hx` maps `GC(G, S, σ(g))` onto `GC(G, [g,x]S, σ(g))`.
pub fn normalizer_shift_theorem_check(
    grp: &FiniteGroup,
    pair: &GenCayleyPair,
    x: usize,
) -> Result<bool, IsoError> {
    let g = inner_element(grp, pair.alpha())?;
    let left: ElemSet = grp.left_mul_set(x, pair.subset());
    let right: ElemSet = pair.subset().iter().map(|&s| grp.mul(s, x)).collect();
    if left != right {
        return Err(IsoError::NotNormalizing(x));
    }
    let shifted = grp.left_mul_set(grp.commutator(g, x), pair.subset());
    let Ok(pair2) = GenCayleyPair::new(grp, pair.alpha().clone(), shifted) else {
        return Ok(false);
    };
    let map: Vec<usize> = (0..grp.order()).map(|h| grp.mul(h, x)).collect();
    Ok(build_graph(grp, pair).is_isomorphism(&build_graph(grp, &pair2), &map))
}

/// `(β(S), β α β⁻¹)` is a valid pair and `h ↦ β(h)` maps `GC(G, S, α)` onto
/// its graph.
pub fn beta_twist_check(grp: &FiniteGroup, pair: &GenCayleyPair, beta: &Automorphism) -> bool {
    let alpha2 = beta.compose(pair.alpha()).compose(&beta.inverse());
    let Ok(pair2) = GenCayleyPair::new(grp, alpha2, beta.apply_set(pair.subset())) else {
        return false;
    };
    build_graph(grp, pair).is_isomorphism(&build_graph(grp, &pair2), beta.map())
}

/// From a GCI certificate between `GC(G, S₁, σ(g₁))` and `GC(G, S₂, σ(g₂))`
/// with `gᵢ ∉ Sᵢ`, produces the inner automorphism `σ(x·h)` carrying `g₁S₁`
/// to `g₂S₂`, where `γ = σ(h)` and `x` is the certificate's translation.
pub fn gci_to_ci_transfer(
    grp: &FiniteGroup,
    p1: &GenCayleyPair,
    p2: &GenCayleyPair,
    cert: &GciCertificate,
) -> Result<Automorphism, IsoError> {
    let g1 = inner_element(grp, p1.alpha())?;
    let g2 = inner_element(grp, p2.alpha())?;
    if p1.subset().contains(&g1) || p2.subset().contains(&g2) {
        return Err(IsoError::InvolutionInSubset);
    }
    if !cert.verify(grp, p1, p2) {
        return Err(IsoError::InvalidCertificate);
    }
    let h = inner_element(grp, &cert.gamma)?;
    let t1 = grp.left_mul_set(g1, p1.subset());
    let t2 = grp.left_mul_set(g2, p2.subset());
    if !is_cayley_subset(grp, &t1) || !is_cayley_subset(grp, &t2) {
        return Err(IsoError::InvalidCertificate);
    }
    let witness = inner(grp, grp.mul(cert.g, h));
    if witness.apply_set(&t1) != t2 {
        return Err(IsoError::InvalidCertificate);
    }
    Ok(witness)
}

/// The GCI side of a CI isomorphism.
#[derive(Debug, Clone)]
pub struct CiToGci {
    pub pair1: GenCayleyPair,
    pub pair2: GenCayleyPair,
    pub certificate: GciCertificate,
}

/// From `S₂ = σ(h)(S₁)` with Cayley subsets avoiding the classes of the
/// conjugate involutions `g₁, g₂`, produces the certificate `γ = σ(g)`,
/// translation `x = h g₁ g⁻¹ g₂` (where `g₂ = g g₁ g⁻¹`) between
/// `GC(G, g₁S₁, σ(g₁))` and `GC(G, g₂S₂, σ(g₂))`.
pub fn ci_to_gci_transfer(
    grp: &FiniteGroup,
    g1: usize,
    g2: usize,
    s1: &ElemSet,
    s2: &ElemSet,
    ci_witness: &Automorphism,
) -> Result<CiToGci, IsoError> {
    if !is_cayley_subset(grp, s1) || !is_cayley_subset(grp, s2) {
        return Err(IsoError::NotCayleySubset);
    }
    let class1 = grp.conjugacy_class(g1);
    let class2 = grp.conjugacy_class(g2);
    if !s1.is_disjoint(&class1) || !s2.is_disjoint(&class2) {
        return Err(IsoError::MeetsClass);
    }
    if &ci_witness.apply_set(s1) != s2 {
        return Err(IsoError::InvalidCertificate);
    }
    let h = inner_element(grp, ci_witness)?;
    let g = (0..grp.order())
        .find(|&g| grp.conj(g, g1) == g2)
        .ok_or(IsoError::NotConjugate)?;
    let pair1 = GenCayleyPair::new(grp, inner(grp, g1), grp.left_mul_set(g1, s1))?;
    let pair2 = GenCayleyPair::new(grp, inner(grp, g2), grp.left_mul_set(g2, s2))?;
    let x = grp.mul(grp.mul(h, g1), grp.mul(grp.inv(g), g2));
    let certificate = GciCertificate {
        gamma: inner(grp, g),
        g: x,
    };
    if !certificate.verify(grp, &pair1, &pair2) {
        return Err(IsoError::InvalidCertificate);
    }
    Ok(CiToGci {
        pair1,
        pair2,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{aut_group_bruteforce, automorphism_group};
    use crate::gencayley::{enumerate_subsets, try_build_graph};

    fn el(g: &FiniteGroup, s: &str) -> usize {
        g.parse_element(s).unwrap().unwrap()
    }

    fn set(g: &FiniteGroup, items: &[&str]) -> ElemSet {
        items.iter().map(|s| el(g, s)).collect()
    }

    fn pair(g: &FiniteGroup, inv: &str, items: &[&str]) -> GenCayleyPair {
        GenCayleyPair::new(g, inner(g, el(g, inv)), set(g, items)).unwrap()
    }

    fn cycle(n: usize) -> UGraph {
        UGraph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    /// Brute force over all n! bijections.
    fn brute_iso(a: &UGraph, b: &UGraph) -> bool {
        fn rec(a: &UGraph, b: &UGraph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let k = map.len();
            if k == a.vertex_count() {
                return a.is_isomorphism(b, map);
            }
            for w in 0..b.vertex_count() {
                if used[w] || (0..k).any(|u| a.has_edge(u, k) != b.has_edge(map[u], w)) {
                    continue;
                }
                used[w] = true;
                map.push(w);
                if rec(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
            false
        }
        a.vertex_count() == b.vertex_count()
            && rec(a, b, &mut Vec::new(), &mut vec![false; b.vertex_count()])
    }

    #[test]
    fn identity_and_refutation() {
        let c6 = cycle(6);
        assert_eq!(
            graph_isomorphic(&c6, &c6)
                .unwrap()
                .map(|m| c6.is_isomorphism(&c6, &m)),
            Some(true)
        );
        let m3 = UGraph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(graph_isomorphic(&m3, &c6).unwrap(), None);
        let two_triangles =
            UGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(graph_isomorphic(&two_triangles, &c6).unwrap(), None);
    }

    #[test]
    fn search_agrees_with_brute_force_on_small_graphs() {
        // Pseudo-random graphs on 6 vertices from a fixed LCG.
        let mut state = 12345u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..200 {
            let mk = |next: &mut dyn FnMut() -> usize| {
                let edges: Vec<_> = (0..6)
                    .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
                    .filter(|_| next().is_multiple_of(2))
                    .collect();
                UGraph::from_edges(6, &edges).unwrap()
            };
            let a = mk(&mut next);
            let b = mk(&mut next);
            let got = graph_isomorphic(&a, &b).unwrap();
            if let Some(m) = &got {
                assert!(a.is_isomorphism(&b, m));
            }
            assert_eq!(got.is_some(), brute_iso(&a, &b));
        }
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // Petersen graph vs a relabeled copy.
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inner_e: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let edges: Vec<_> = [outer, inner_e, spokes].concat();
        let p = UGraph::from_edges(10, &edges).unwrap();
        let relabel = [3, 7, 1, 9, 0, 2, 8, 5, 4, 6];
        let q = UGraph::from_edges(
            10,
            &edges
                .iter()
                .map(|&(a, b)| (relabel[a], relabel[b]))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let m = graph_isomorphic(&p, &q).unwrap().unwrap();
        assert!(p.is_isomorphism(&q, &m));
        // 3-prism vs K_{3,3}: both 3-regular on 6 vertices.
        let prism = UGraph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = UGraph::from_edges(
            6,
            &(0..3)
                .flat_map(|i| (3..6).map(move |j| (i, j)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(graph_isomorphic(&prism, &k33).unwrap(), None);
    }

    #[test]
    fn cap_applies_only_without_fast_path() {
        let big =
            UGraph::from_edges(200, &(0..199).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        assert_eq!(
            graph_isomorphic(&big, &big),
            Err(IsoError::CapExceeded(200))
        );
        let c200 = cycle(200);
        assert!(graph_isomorphic(&c200, &c200).unwrap().is_some());
    }

    #[test]
    fn matching_graphs() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let gc = build_graph(&s3, &pair(&s3, "(12)", &["(12)"]));
        assert_eq!(is_perfect_matching(&gc), (true, 3));
        let cay = try_build_graph(&s3, &Automorphism::identity(&s3), &set(&s3, &["(12)"])).unwrap();
        assert!(graph_isomorphic(&gc, &cay).unwrap().is_some());
        assert!(!is_perfect_matching(&UGraph::empty(4)).0);
    }

    #[test]
    fn gci_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let auts = automorphism_group(&s3).unwrap();
        let p = pair(&s3, "(12)", &["(12)"]);
        let c = gci_isomorphic(&s3, &p, &p, &auts).unwrap();
        assert!(c.gamma.is_identity());
        assert_eq!(c.g, 0);
        let q = pair(&s3, "(13)", &["(13)"]);
        let c = gci_isomorphic(&s3, &p, &q, &auts).unwrap();
        assert!(c.verify(&s3, &p, &q));
        let map = c.vertex_map(&s3);
        assert!(build_graph(&s3, &p).is_isomorphism(&build_graph(&s3, &q), &map));
    }

    #[test]
    fn ci_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let auts = automorphism_group(&s3).unwrap();
        let s = set(&s3, &["(12)"]);
        assert!(ci_isomorphic(&s3, &s, &s, &auts)
            .unwrap()
            .unwrap()
            .is_identity());
        assert!(ci_isomorphic(&s3, &s, &set(&s3, &["(13)"]), &auts)
            .unwrap()
            .is_some());
        assert_eq!(
            ci_isomorphic(&s3, &set(&s3, &["(123)"]), &s, &auts),
            Err(IsoError::NotCayleySubset)
        );
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let auts4 = AutGroup::new(aut_group_bruteforce(&s4).unwrap()).unwrap();
        assert_eq!(
            ci_isomorphic(&s4, &set(&s4, &["(12)"]), &set(&s4, &["(12)(34)"]), &auts4).unwrap(),
            None
        );
    }

    #[test]
    fn shift_theorem_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t = el(&s3, "(12)");
        let p = pair(&s3, "(12)", &["(13)", "(23)"]);
        assert!(conjugation_shift_theorem_check(&s3, &p, t).unwrap());
        assert_eq!(
            conjugation_shift_theorem_check(&s3, &p, el(&s3, "(13)")),
            Err(IsoError::NotInBigOmega(el(&s3, "(13)")))
        );
        let m = pair(&s3, "(12)", &["(12)"]);
        assert!(normalizer_shift_theorem_check(&s3, &m, 0).unwrap());
        assert!(normalizer_shift_theorem_check(&s3, &m, t).unwrap());
        assert_eq!(s3.commutator(t, t), 0);
        assert!(matches!(
            normalizer_shift_theorem_check(&s3, &m, el(&s3, "(13)")),
            Err(IsoError::NotNormalizing(_))
        ));
    }

    #[test]
    fn normalizer_sweep_s4() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let a = inner(&s4, el(&s4, "(12)"));
        let mut nontrivial = 0;
        for p in enumerate_subsets(&s4, &a, 4)
            .unwrap()
            .filter(|p| !p.is_empty())
        {
            let norm = s4.subset_normalizer(p.subset());
            if norm.len() > 1 {
                nontrivial += 1;
            }
            for x in norm {
                assert!(normalizer_shift_theorem_check(&s4, &p, x).unwrap());
            }
        }
        assert!(nontrivial > 0);
    }

    #[test]
    fn beta_twist_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let p = pair(&s3, "(12)", &["(12)"]);
        assert!(beta_twist_check(&s3, &p, &Automorphism::identity(&s3)));
        assert!(beta_twist_check(&s3, &p, &inner(&s3, el(&s3, "(123)"))));
    }

    #[test]
    fn transfers() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let auts = automorphism_group(&s3).unwrap();
        let p1 = pair(&s3, "(12)", &["(13)", "(23)"]);
        let beta = inner(&s3, el(&s3, "(123)"));
        let p2 = GenCayleyPair::new(
            &s3,
            beta.compose(p1.alpha()).compose(&beta.inverse()),
            beta.apply_set(p1.subset()),
        )
        .unwrap();
        let cert = gci_isomorphic(&s3, &p1, &p2, &auts).unwrap();
        let w = gci_to_ci_transfer(&s3, &p1, &p2, &cert).unwrap();
        let t1 = s3.left_mul_set(el(&s3, "(12)"), p1.subset());
        let g2 = s3.conj(el(&s3, "(123)"), el(&s3, "(12)"));
        assert_eq!(w.apply_set(&t1), s3.left_mul_set(g2, p2.subset()));

        let self_cert = gci_isomorphic(&s3, &p1, &p1, &auts).unwrap();
        assert!(gci_to_ci_transfer(&s3, &p1, &p1, &self_cert)
            .unwrap()
            .is_identity());

        let m = pair(&s3, "(12)", &["(12)"]);
        let c = gci_isomorphic(&s3, &m, &m, &auts).unwrap();
        assert_eq!(
            gci_to_ci_transfer(&s3, &m, &m, &c),
            Err(IsoError::InvolutionInSubset)
        );
    }

    #[test]
    fn ci_to_gci_examples() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let s = set(&s3, &["(123)", "(132)"]);
        let a = el(&s3, "(12)");
        let b = el(&s3, "(13)");
        let out = ci_to_gci_transfer(&s3, a, b, &s, &s, &inner(&s3, 0)).unwrap();
        assert!(out.certificate.verify(&s3, &out.pair1, &out.pair2));
        let same = ci_to_gci_transfer(&s3, a, a, &s, &s, &inner(&s3, 0)).unwrap();
        assert!(same.certificate.verify(&s3, &same.pair1, &same.pair2));
        assert_eq!(
            ci_to_gci_transfer(
                &s3,
                a,
                b,
                &set(&s3, &["(23)"]),
                &set(&s3, &["(23)"]),
                &inner(&s3, 0)
            )
            .unwrap_err(),
            IsoError::MeetsClass
        );
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let s = set(&s4, &["(123)", "(132)"]);
        assert_eq!(
            ci_to_gci_transfer(
                &s4,
                el(&s4, "(12)"),
                el(&s4, "(12)(34)"),
                &s,
                &s,
                &inner(&s4, 0)
            )
            .unwrap_err(),
            IsoError::NotConjugate
        );
    }
}
