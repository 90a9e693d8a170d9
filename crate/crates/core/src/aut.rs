//! Automorphisms of finite groups stored as full element-index tables.
//!
//! Composition reads as functions: `a.compose(&b)` maps `x ↦ a(b(x))`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::group::{ElemSet, FiniteGroup};
use crate::perm::parse_cycles;

/// Largest group order the brute-force automorphism search accepts.
pub const BRUTEFORCE_CAP: usize = 720;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("group order {order} exceeds the automorphism search cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("the group is not the full symmetric group on 6 points")]
    NotS6,
    #[error("the prescribed generator images do not extend to an automorphism")]
    NotAutomorphism,
    #[error("automorphism list failed its closure check: {0}")]
    NotClosed(&'static str),
    #[error("map is not a bijection preserving products")]
    InvalidMap,
}

/// Where an automorphism came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Identity,
    /// `σ(g): h ↦ g h g⁻¹`
    Inner(usize),
    /// `δ_g: h ↦ g δ(h) g⁻¹` on `S6`.
    S6Outer(usize),
    Raw,
}

#[derive(Debug, Clone)]
pub struct Automorphism {
    map: Vec<usize>,
    provenance: Provenance,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for Automorphism {}

impl std::hash::Hash for Automorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.map.hash(state)
    }
}

impl Automorphism {
    pub fn identity(g: &FiniteGroup) -> Self {
        Automorphism {
            map: (0..g.order()).collect(),
            provenance: Provenance::Identity,
        }
    }

    /// Validates `map` against the group's multiplication table.
    pub fn from_map(g: &FiniteGroup, map: Vec<usize>) -> Result<Self, AutError> {
        let n = g.order();
        if map.len() != n || map[0] != 0 {
            return Err(AutError::InvalidMap);
        }
        let mut seen = vec![false; n];
        for &m in &map {
            if m >= n || seen[m] {
                return Err(AutError::InvalidMap);
            }
            seen[m] = true;
        }
        let gens = g.generator_indices();
        // Checking products against generators suffices: every element is a
        // word in them.
        for x in 0..n {
            for &s in gens {
                if map[g.mul(x, s)] != g.mul(map[x], map[s]) {
                    return Err(AutError::InvalidMap);
                }
            }
        }
        Ok(Automorphism {
            map,
            provenance: Provenance::Raw,
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn apply_set(&self, s: &ElemSet) -> ElemSet {
        s.iter().map(|&x| self.map[x]).collect()
    }

    /// `self ∘ rhs`
    pub fn compose(&self, rhs: &Automorphism) -> Automorphism {
        Automorphism {
            map: rhs.map.iter().map(|&x| self.map[x]).collect(),
            provenance: Provenance::Raw,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y] = x;
        }
        Automorphism {
            map,
            provenance: Provenance::Raw,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Order exactly two.
    pub fn is_involutory(&self) -> bool {
        !self.is_identity() && self.map.iter().enumerate().all(|(i, &j)| self.map[j] == i)
    }

    /// Identity or involutory.
    pub fn squares_to_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| self.map[j] == i)
    }

    /// `Fix(α) = {h : h^α = h}`
    pub fn fixed_points(&self) -> ElemSet {
        (0..self.map.len()).filter(|&i| self.map[i] == i).collect()
    }

    /// True when `self = γ ∘ other ∘ γ⁻¹`, checked as `self ∘ γ = γ ∘ other`.
    pub fn is_conjugate_by(&self, other: &Automorphism, gamma: &Automorphism) -> bool {
        (0..self.map.len()).all(|x| self.map[gamma.map[x]] == gamma.map[other.map[x]])
    }

    /// Human-readable provenance, e.g. `inner:(12)`.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        match self.provenance {
            Provenance::Identity => "id".into(),
            Provenance::Inner(x) => format!("inner:{}", g.fmt(x)),
            Provenance::S6Outer(x) => format!("s6-delta:{}", g.fmt(x)),
            Provenance::Raw => "raw".into(),
        }
    }

    /// `{provenance, images}` with images keyed by cycle string.
    pub fn to_json(&self, g: &FiniteGroup) -> serde_json::Value {
        let images: serde_json::Map<String, serde_json::Value> = (0..g.order())
            .map(|x| (g.fmt(x), json!(g.fmt(self.map[x]))))
            .collect();
        json!({ "provenance": self.describe(g), "images": images })
    }
}

/// `σ(g): h ↦ g h g⁻¹`
pub fn inner(g: &FiniteGroup, x: usize) -> Automorphism {
    let map = (0..g.order()).map(|h| g.conj(x, h)).collect();
    let provenance = if x == 0 {
        Provenance::Identity
    } else {
        Provenance::Inner(x)
    };
    Automorphism { map, provenance }
}

/// All inner automorphisms, one per element (duplicates when the center is
/// nontrivial).
pub fn inner_automorphisms(g: &FiniteGroup) -> Vec<Automorphism> {
    (0..g.order()).map(|x| inner(g, x)).collect()
}

/// Extends generator images to a homomorphism by walking the right Cayley
/// graph from the identity. Returns `None` on inconsistency or non-bijection.
fn extend_homomorphism(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let n = g.order();
    let mut map = vec![UNSET; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(h) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let k = g.mul(h, s);
            let v = g.mul(map[h], t);
            if map[k] == UNSET {
                if used[v] {
                    return None;
                }
                used[v] = true;
                map[k] = v;
                queue.push_back(k);
            } else if map[k] != v {
                return None;
            }
        }
    }
    map.iter().all(|&m| m != UNSET).then_some(map)
}

/// Every automorphism of `g`, found by assigning images to a small generating
/// set among elements of matching order.
///
/// Partial assignments are pruned by also matching the orders of pairwise
/// products. Inner automorphisms are tagged with their smallest inducing
/// element. Output order is deterministic.
pub fn aut_group_bruteforce(g: &FiniteGroup) -> Result<Vec<Automorphism>, AutError> {
    if g.order() > BRUTEFORCE_CAP {
        return Err(AutError::CapExceeded {
            order: g.order(),
            cap: BRUTEFORCE_CAP,
        });
    }
    let n = g.order();
    if n == 1 {
        return Ok(vec![Automorphism::identity(g)]);
    }
    let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let gens = g.small_generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..n).filter(|&t| orders[t] == orders[s]).collect())
        .collect();
    let pair_orders: Vec<Vec<usize>> = gens
        .iter()
        .map(|&a| gens.iter().map(|&b| orders[g.mul(a, b)]).collect())
        .collect();

    fn search(
        g: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        pair_orders: &[Vec<usize>],
        orders: &[usize],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = chosen.len();
        if k == gens.len() {
            if let Some(map) = extend_homomorphism(g, gens, chosen) {
                out.push(map);
            }
            return;
        }
        for &t in &candidates[k] {
            let consistent = (0..k).all(|j| {
                orders[g.mul(chosen[j], t)] == pair_orders[j][k]
                    && orders[g.mul(t, chosen[j])] == pair_orders[k][j]
            });
            if consistent {
                chosen.push(t);
                search(g, gens, candidates, pair_orders, orders, chosen, out);
                chosen.pop();
            }
        }
    }

    let maps: Vec<Vec<usize>> = candidates[0]
        .par_iter()
        .flat_map_iter(|&t0| {
            let mut out = Vec::new();
            let mut chosen = vec![t0];
            search(
                g,
                &gens,
                &candidates,
                &pair_orders,
                &orders,
                &mut chosen,
                &mut out,
            );
            out
        })
        .collect();

    let mut inner_of: HashMap<Vec<usize>, usize> = HashMap::new();
    for x in (0..n).rev() {
        inner_of.insert(inner(g, x).map, x);
    }
    Ok(maps
        .into_iter()
        .map(|map| {
            let provenance = match inner_of.get(&map) {
                Some(0) => Provenance::Identity,
                Some(&x) => Provenance::Inner(x),
                None => Provenance::Raw,
            };
            Automorphism { map, provenance }
        })
        .collect())
}

fn require_s6(g: &FiniteGroup) -> Result<(), AutError> {
    if g.degree() == 6 && g.order() == 720 {
        Ok(())
    } else {
        Err(AutError::NotS6)
    }
}

const PHI_IMAGES: [(&str, &str); 5] = [
    ("(12)", "(12)(36)(45)"),
    ("(13)", "(16)(24)(35)"),
    ("(14)", "(13)(25)(46)"),
    ("(15)", "(15)(26)(34)"),
    ("(16)", "(14)(23)(56)"),
];

/// The outer automorphism φ of `S6`, fixed by its images of the
/// transpositions `(1k)`.
pub fn s6_phi(g: &FiniteGroup) -> Result<Automorphism, AutError> {
    require_s6(g)?;
    let idx = |s: &str| {
        g.index_of(&parse_cycles(s, 6).expect("literal parses"))
            .expect("S6 contains every permutation")
    };
    let gens: Vec<usize> = PHI_IMAGES.iter().map(|(a, _)| idx(a)).collect();
    let images: Vec<usize> = PHI_IMAGES.iter().map(|(_, b)| idx(b)).collect();
    let map = extend_homomorphism(g, &gens, &images).ok_or(AutError::NotAutomorphism)?;
    let phi = Automorphism::from_map(g, map)?;
    Ok(phi.with_provenance(Provenance::Raw))
}

/// The point `x = (12345)` whose inner automorphism turns φ into an involution.
pub fn s6_twist_element(g: &FiniteGroup) -> Result<usize, AutError> {
    require_s6(g)?;
    Ok(
        g.index_of(&parse_cycles("(12345)", 6).expect("literal parses"))
            .expect("S6 contains (12345)"),
    )
}

/// `δ = σ(x) ∘ φ` with `x = (12345)`.
pub fn s6_delta(g: &FiniteGroup) -> Result<Automorphism, AutError> {
    s6_delta_g(g, 0)
}

/// `δ_g: h ↦ g · δ(h) · g⁻¹`
pub fn s6_delta_g(g: &FiniteGroup, elem: usize) -> Result<Automorphism, AutError> {
    let phi = s6_phi(g)?;
    let x = s6_twist_element(g)?;
    let gx = g.mul(elem, x);
    Ok(s6_delta_g_from(g, &phi, gx, elem))
}

fn s6_delta_g_from(g: &FiniteGroup, phi: &Automorphism, gx: usize, elem: usize) -> Automorphism {
    let map = (0..g.order()).map(|h| g.conj(gx, phi.apply(h))).collect();
    Automorphism {
        map,
        provenance: Provenance::S6Outer(elem),
    }
}

/// `{σ(g)} ∪ {δ_g}`, inner automorphisms first, each family in element order.
pub fn s6_automorphism_group(g: &FiniteGroup) -> Result<Vec<Automorphism>, AutError> {
    let phi = s6_phi(g)?;
    let x = s6_twist_element(g)?;
    let mut out = inner_automorphisms(g);
    out.extend((0..g.order()).map(|e| s6_delta_g_from(g, &phi, g.mul(e, x), e)));
    Ok(out)
}

/// A list of automorphisms indexed for membership tests.
#[derive(Debug, Clone)]
pub struct AutGroup {
    members: Vec<Automorphism>,
    index: HashMap<Vec<usize>, usize>,
}

impl AutGroup {
    /// Deduplicates `members` and runs a cheap closure check: the identity is
    /// present, inverses are present, and products with a handful of members
    /// stay inside. Use [`AutGroup::verify_closed`] for the exhaustive check.
    pub fn new(members: Vec<Automorphism>) -> Result<Self, AutError> {
        let mut index = HashMap::new();
        let mut uniq = Vec::new();
        for a in members {
            if !index.contains_key(&a.map) {
                index.insert(a.map.clone(), uniq.len());
                uniq.push(a);
            }
        }
        let group = AutGroup {
            members: uniq,
            index,
        };
        if group.members.is_empty() || !group.members.iter().any(Automorphism::is_identity) {
            return Err(AutError::NotClosed("identity missing"));
        }
        let probes: Vec<&Automorphism> = group.members.iter().take(4).collect();
        for a in &group.members {
            if !group.contains(&a.inverse()) {
                return Err(AutError::NotClosed("inverse missing"));
            }
            for p in &probes {
                if !group.contains(&a.compose(p)) {
                    return Err(AutError::NotClosed("product missing"));
                }
            }
        }
        Ok(group)
    }

    /// Every pairwise product is a member.
    pub fn verify_closed(&self) -> bool {
        self.members
            .par_iter()
            .all(|a| self.members.iter().all(|b| self.contains(&a.compose(b))))
    }

    pub fn contains(&self, a: &Automorphism) -> bool {
        self.index.contains_key(&a.map)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Automorphism> {
        self.members.iter()
    }

    pub fn members(&self) -> &[Automorphism] {
        &self.members
    }

    /// The stored copy of `a`, which carries its provenance.
    pub fn lookup(&self, a: &Automorphism) -> Option<&Automorphism> {
        self.index.get(&a.map).map(|&i| &self.members[i])
    }

    pub fn involutory(&self) -> impl Iterator<Item = &Automorphism> {
        self.members.iter().filter(|a| a.is_involutory())
    }
}

/// The full automorphism group: the explicit description for `S6`, brute
/// force otherwise.
pub fn automorphism_group(g: &FiniteGroup) -> Result<AutGroup, AutError> {
    if g.symmetric_degree() == Some(6) {
        AutGroup::new(s6_automorphism_group(g)?)
    } else {
        AutGroup::new(aut_group_bruteforce(g)?)
    }
}

/// Some `γ` in `auts` with `β = γ ∘ α ∘ γ⁻¹`, searched in stored order.
pub fn conjugate_in_aut<'a>(
    alpha: &Automorphism,
    beta: &Automorphism,
    auts: &'a AutGroup,
) -> Option<&'a Automorphism> {
    auts.iter().find(|gamma| beta.is_conjugate_by(alpha, gamma))
}
