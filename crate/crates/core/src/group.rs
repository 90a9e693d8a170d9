//! Finite permutation groups built by closure, with the structural queries used
//! throughout the crate: center, centralizers, conjugacy classes, commutators,
//! normalizers and involutions.
//!
//! Elements are identified by their index in breadth-first order from the
//! identity (index 0), so every result is deterministic for a fixed generator
//! list.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde_json::json;
use thiserror::Error;

use crate::aut::{self, Automorphism};
use crate::perm::{format_cycles, PermError, Permutation};

/// Default cap on group orders produced by closure.
pub const DEFAULT_ORDER_CAP: usize = 10080;

/// Groups up to this order get a materialized multiplication table.
pub const TABLE_LIMIT: usize = 1024;

/// A set of element indices.
pub type ElemSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order exceeds the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error(
        "order {order} exceeds the automorphism search cap {cap} and no named shortcut applies"
    )]
    AutCapExceeded { order: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: ElemSet,
}

pub struct FiniteGroup {
    name: Option<String>,
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inv: Vec<usize>,
    generators: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl FiniteGroup {
    /// Closes `gens` under multiplication, with the default order cap.
    pub fn close_generators(
        gens: &[Permutation],
        degree: usize,
        name: Option<&str>,
    ) -> Result<Self, GroupError> {
        Self::close_generators_capped(gens, degree, name, DEFAULT_ORDER_CAP)
    }

    pub fn close_generators_capped(
        gens: &[Permutation],
        degree: usize,
        name: Option<&str>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for g in gens {
                let k = elements[h].compose_unchecked(g);
                if !index.contains_key(&k) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(k.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(k);
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let inv = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut group = FiniteGroup {
            name: name.map(str::to_string),
            degree,
            elements,
            index,
            table: None,
            inv,
            generators,
        };
        if group.order() <= TABLE_LIMIT {
            let n = group.order();
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let prod = group.elements[a].compose_unchecked(&group.elements[b]);
                    table[a * n + b] = group.index[&prod] as u32;
                }
            }
            group.table = Some(table);
        }
        Ok(group)
    }

    /// Symmetric group on `n` points generated by the transpositions `(1k)`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        let gens = (2..=n)
            .map(|k| Permutation::cycle(n, &[1, k]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::close_generators(&gens, n.max(1), Some(&format!("S{n}")))
    }

    /// Alternating group on `n` points generated by the 3-cycles `(12k)`.
    pub fn alternating(n: usize) -> Result<Self, GroupError> {
        let gens = (3..=n)
            .map(|k| Permutation::cycle(n, &[1, 2, k]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::close_generators(&gens, n.max(1), Some(&format!("A{n}")))
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        let pts: Vec<usize> = (1..=n).collect();
        let gens = if n > 1 {
            vec![Permutation::cycle(n, &pts)?]
        } else {
            vec![]
        };
        Self::close_generators(&gens, n.max(1), Some(&format!("C{n}")))
    }

    /// Dihedral group of order `2m`, acting on the `m` vertices of a polygon.
    /// Named `D{2m}`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m < 3 {
            return Err(GroupError::UnknownName(format!("D{}", 2 * m)));
        }
        let pts: Vec<usize> = (1..=m).collect();
        let rot = Permutation::cycle(m, &pts)?;
        let refl = Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
        Self::close_generators(&[rot, refl], m, Some(&format!("D{}", 2 * m)))
    }

    /// Looks up `S4`, `A5`, `D8`, `C4` style names.
    pub fn named(name: &str) -> Result<Self, GroupError> {
        let unknown = || GroupError::UnknownName(name.to_string());
        let mut chars = name.chars();
        let kind = chars.next().ok_or_else(unknown)?;
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        match kind {
            'S' if (1..=7).contains(&n) => Self::symmetric(n),
            'A' if (1..=7).contains(&n) => Self::alternating(n),
            'C' if (1..=64).contains(&n) => Self::cyclic(n),
            'D' if n >= 6 && n.is_multiple_of(2) && n <= 128 => Self::dihedral(n / 2),
            _ => Err(unknown()),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The name, or a generator listing when unnamed.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => {
                let gens: Vec<String> = self.generators.iter().map(|&g| self.fmt(g)).collect();
                format!("<{}>", gens.join(","))
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Canonical cycle string of element `i`.
    pub fn fmt(&self, i: usize) -> String {
        format_cycles(&self.elements[i])
    }

    /// Parses cycle notation and locates the element in this group.
    pub fn parse_element(&self, text: &str) -> Result<Option<usize>, PermError> {
        let p = crate::perm::parse_cycles(text, self.degree)?;
        Ok(self.index_of(&p))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose_unchecked(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    /// `g · h · g⁻¹`
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul3(g, h, self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn all(&self) -> ElemSet {
        (0..self.order()).collect()
    }

    pub fn center(&self) -> ElemSet {
        (0..self.order())
            .filter(|&h| {
                self.generators
                    .iter()
                    .all(|&g| self.mul(g, h) == self.mul(h, g))
            })
            .collect()
    }

    pub fn centralizer(&self, g: usize) -> ElemSet {
        (0..self.order())
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .collect()
    }

    /// `{x g x⁻¹ : x ∈ G}`
    pub fn conjugacy_class(&self, g: usize) -> ElemSet {
        (0..self.order()).map(|x| self.conj(x, g)).collect()
    }

    /// Classes in order of their smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut assigned = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if assigned[g] {
                continue;
            }
            let members = self.conjugacy_class(g);
            for &m in &members {
                assigned[m] = true;
            }
            out.push(ConjugacyClass {
                representative: g,
                members,
            });
        }
        out
    }

    pub fn are_conjugate(&self, g: usize, h: usize) -> bool {
        (0..self.order()).any(|x| self.conj(x, g) == h)
    }

    /// `[g, h] = g⁻¹ h⁻¹ g h`
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    /// `[g] = {[g, h] : h ∈ G}`
    pub fn commutator_set(&self, g: usize) -> ElemSet {
        (0..self.order()).map(|h| self.commutator(g, h)).collect()
    }

    /// `{x : xS = Sx}`
    pub fn subset_normalizer(&self, s: &ElemSet) -> ElemSet {
        (0..self.order())
            .filter(|&x| {
                let left: ElemSet = s.iter().map(|&t| self.mul(x, t)).collect();
                s.iter().all(|&t| left.contains(&self.mul(t, x)))
            })
            .collect()
    }

    pub fn involutions(&self) -> ElemSet {
        (1..self.order()).filter(|&g| self.mul(g, g) == 0).collect()
    }

    /// `{s · t : t ∈ set}`
    pub fn left_mul_set(&self, s: usize, set: &ElemSet) -> ElemSet {
        set.iter().map(|&t| self.mul(s, t)).collect()
    }

    pub fn inverse_set(&self, set: &ElemSet) -> ElemSet {
        set.iter().map(|&t| self.inv(t)).collect()
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> ElemSet {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(h) = stack.pop() {
            for &g in gens {
                let k = self.mul(h, g);
                if !seen[k] {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    /// A short generating list chosen greedily: repeatedly take the element of
    /// largest order outside the current subgroup.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<(usize, usize)> = (1..self.order())
            .map(|g| (self.element_order(g), g))
            .collect();
        by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut gens = Vec::new();
        let mut sub = self.subgroup_closure(&gens);
        while sub.len() < self.order() {
            // Prefer the candidate that grows the subgroup most among the
            // highest-order elements not yet covered.
            let best = by_order
                .iter()
                .filter(|(_, g)| !sub.contains(g))
                .take(64)
                .map(|&(_, g)| {
                    let mut trial = gens.clone();
                    trial.push(g);
                    (self.subgroup_closure(&trial).len(), g)
                })
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                .expect("subgroup is proper");
            gens.push(best.1);
            sub = self.subgroup_closure(&gens);
        }
        gens
    }

    /// Recognizes the full symmetric group on its degree.
    pub fn symmetric_degree(&self) -> Option<usize> {
        let n = self.degree;
        let fact: usize = (1..=n).product();
        (self.order() == fact).then_some(n)
    }

    /// JSON export of the element table with 1-based cycle strings.
    pub fn to_json(&self) -> serde_json::Value {
        let names: Vec<String> = (0..self.order()).map(|i| self.fmt(i)).collect();
        let table: Option<Vec<Vec<&str>>> = (self.order() <= 120).then(|| {
            (0..self.order())
                .map(|a| {
                    (0..self.order())
                        .map(|b| names[self.mul(a, b)].as_str())
                        .collect()
                })
                .collect()
        });
        json!({
            "name": self.label(),
            "degree": self.degree,
            "order": self.order(),
            "generators": self.generators.iter().map(|&g| &names[g]).collect::<Vec<_>>(),
            "elements": names,
            "multiplication": table,
        })
    }
}

/// Why a group failed (or passed) the completeness test.
#[derive(Debug, Clone)]
pub enum Completeness {
    Complete,
    NontrivialCenter(usize),
    OuterAutomorphism(Automorphism),
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        matches!(self, Completeness::Complete)
    }
}

/// `Z(G) = e` and every automorphism is inner.
///
/// Full symmetric groups use the known answer (complete for `n ≥ 3`, `n ≠ 6`;
/// `S6` fails through its outer automorphism φ). Otherwise `auts`, or a
/// brute-force automorphism search when `auts` is `None`, decides.
pub fn is_complete_group(
    g: &FiniteGroup,
    auts: Option<&[Automorphism]>,
) -> Result<Completeness, GroupError> {
    if let Some(&z) = g.center().iter().find(|&&z| z != 0) {
        return Ok(Completeness::NontrivialCenter(z));
    }
    if let Some(n) = g.symmetric_degree() {
        if n == 6 {
            let phi = aut::s6_phi(g).expect("degree-6 group of order 720 is S6");
            return Ok(Completeness::OuterAutomorphism(phi));
        }
        if auts.is_none() {
            return Ok(Completeness::Complete);
        }
    }
    let owned;
    let list = match auts {
        Some(a) => a,
        None => {
            if g.order() > aut::BRUTEFORCE_CAP {
                return Err(GroupError::AutCapExceeded {
                    order: g.order(),
                    cap: aut::BRUTEFORCE_CAP,
                });
            }
            owned = aut::aut_group_bruteforce(g).map_err(|_| GroupError::AutCapExceeded {
                order: g.order(),
                cap: aut::BRUTEFORCE_CAP,
            })?;
            &owned
        }
    };
    let inner: std::collections::HashSet<Vec<usize>> = (0..g.order())
        .map(|x| aut::inner(g, x).map().to_vec())
        .collect();
    match list.iter().find(|a| !inner.contains(a.map())) {
        Some(outer) => Ok(Completeness::OuterAutomorphism(outer.clone())),
        None => Ok(Completeness::Complete),
    }
}
