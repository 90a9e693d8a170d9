//! GCI and restricted-GCI decisions for complete groups, and a claim-by-claim
//! verification harness over the properties of generalized Cayley graphs.
//!
//! A group is *restricted GCI* when every isomorphism between generalized
//! Cayley graphs with involutory automorphisms is realized by a pair `(γ, g)`
//! as in [`GciCertificate`]. For a complete group of even order with an
//! involution `g`, this holds iff all involutions are conjugate and, for any
//! two subsets `S₁, S₂` under `σ(g)` with isomorphic graphs, some inner
//! automorphism carries `gS₁` onto `gS₂`. That criterion is what
//! [`restricted_gci_decide`] runs.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::aut::{self, inner, AutError, AutGroup, Automorphism};
use crate::gencayley::{
    build_graph, display_set, enumerate_subsets, left_translation_is_graph_automorphism,
    never_complete_check, partition, GenCayleyError, GenCayleyPair,
};
use crate::graph::UGraph;
use crate::group::{is_complete_group, Completeness, ElemSet, FiniteGroup, GroupError};
use crate::iso::{
    beta_twist_check, ci_isomorphic, ci_to_gci_transfer, conjugation_shift_theorem_check,
    gci_isomorphic, gci_to_ci_transfer, graph_isomorphic, is_perfect_matching,
    normalizer_shift_theorem_check, IsoError,
};

/// Enumeration budget for [`restricted_gci_decide`].
pub const MAX_DECISION_PAIRS: usize = 20_000;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("group has odd order, so it has no involutions")]
    OddOrder,
    #[error("group is not complete")]
    NotComplete,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    GenCayley(#[from] GenCayleyError),
}

/// `Cay(G, {g}) ≅ GC(G, {g}, σ(g)) ≅ (|G|/2)K₂` while `σ(g)` is not conjugate
/// to the identity.
#[derive(Debug, Clone)]
pub struct MatchingWitness {
    pub involution: usize,
    pub components: usize,
    pub vertex_map: Vec<usize>,
}

impl MatchingWitness {
    pub fn to_json(&self, g: &FiniteGroup) -> Value {
        json!({
            "kind": "matching",
            "involution": g.fmt(self.involution),
            "cayley": format!("Cay({},{{{}}})", g.label(), g.fmt(self.involution)),
            "generalized": format!("GC({},{{{}}},inner:{})", g.label(), g.fmt(self.involution), g.fmt(self.involution)),
            "components": self.components,
        })
    }
}

/// Smallest-index involution outside the center.
fn noncentral_involution(g: &FiniteGroup) -> Option<usize> {
    let z = g.center();
    g.involutions().into_iter().find(|x| !z.contains(x))
}

/// Two isomorphic graphs, one Cayley and one with an involutory automorphism,
/// which no GCI isomorphism can relate.
pub fn not_gci_via_matching(g: &FiniteGroup) -> Result<MatchingWitness, ClassifyError> {
    if g.order() % 2 == 1 {
        return Err(ClassifyError::OddOrder);
    }
    let t = noncentral_involution(g).ok_or(ClassifyError::NotComplete)?;
    let s = ElemSet::from([t]);
    let cay = build_graph(
        g,
        &GenCayleyPair::new(g, Automorphism::identity(g), s.clone())
            .map_err(GenCayleyError::from)?,
    );
    let sigma = inner(g, t);
    let gc = build_graph(
        g,
        &GenCayleyPair::new(g, sigma.clone(), s).map_err(GenCayleyError::from)?,
    );
    let (m1, c1) = is_perfect_matching(&cay);
    let (m2, c2) = is_perfect_matching(&gc);
    if !(m1 && m2 && c1 == g.order() / 2 && c2 == c1) {
        return Err(ClassifyError::Verification("matching graphs".into()));
    }
    let vertex_map = graph_isomorphic(&cay, &gc)?
        .ok_or_else(|| ClassifyError::Verification("matchings not isomorphic".into()))?;
    // Every conjugate of the identity is the identity.
    if sigma.is_identity() {
        return Err(ClassifyError::Verification("σ(g) is trivial".into()));
    }
    Ok(MatchingWitness {
        involution: t,
        components: c1,
        vertex_map,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status<W> {
    Yes,
    /// Criterion holds for subsets up to this size only.
    YesUpTo(usize),
    No(W),
    Undecided(String),
}

impl<W> Status<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Status::Yes)
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Status::No(_))
    }
}

#[derive(Debug, Clone)]
pub enum RestrictedWitness {
    /// Two involutions in different conjugacy classes.
    NonConjugateInvolutions(usize, usize),
    /// Isomorphic graphs under `σ(g)` with no inner automorphism taking `gS₁`
    /// to `gS₂`.
    IsomorphicNotGci {
        involution: usize,
        s1: ElemSet,
        s2: ElemSet,
    },
    /// No automorphism conjugates `σ(a)` to `σ(b)` although their matching
    /// graphs are isomorphic.
    AutLevel(Box<S6Refutation>),
}

impl RestrictedWitness {
    pub fn to_json(&self, g: &FiniteGroup) -> Value {
        match self {
            RestrictedWitness::NonConjugateInvolutions(a, b) => json!({
                "kind": "non_conjugate_involutions",
                "involutions": [g.fmt(*a), g.fmt(*b)],
            }),
            RestrictedWitness::IsomorphicNotGci { involution, s1, s2 } => json!({
                "kind": "isomorphic_not_gci",
                "involution": g.fmt(*involution),
                "s1": display_set(g, s1),
                "s2": display_set(g, s2),
            }),
            RestrictedWitness::AutLevel(r) => r.to_json(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RestrictedDecision {
    pub status: Status<RestrictedWitness>,
    /// The involution the criterion was run with.
    pub involution: Option<usize>,
    pub m: usize,
    pub pairs_enumerated: usize,
    pub iso_classes: usize,
}

/// Default subset-size cap: exhaustive up to order 24.
pub fn default_m(g: &FiniteGroup) -> usize {
    if g.order() <= 24 {
        g.order()
    } else {
        4
    }
}

/// Orders involutions by support size, then cycle string.
fn simplest(g: &FiniteGroup, it: impl Iterator<Item = usize>) -> Option<usize> {
    it.min_by_key(|&x| (g.element(x).support_size(), g.fmt(x)))
}

/// Decides restricted-GCI status of a complete group of even order.
///
/// `S6`, which is not complete, is answered by [`s6_restricted_gci_refutation`].
pub fn restricted_gci_decide(
    g: &FiniteGroup,
    m: Option<usize>,
    auts: &AutGroup,
) -> Result<RestrictedDecision, ClassifyError> {
    let m = m.unwrap_or_else(|| default_m(g));
    if g.order() % 2 == 1 {
        return Err(ClassifyError::OddOrder);
    }
    match is_complete_group(g, Some(auts.members()))? {
        Completeness::Complete => {}
        _ if g.symmetric_degree() == Some(6) => {
            let r = s6_refutation_in(g)?;
            return Ok(RestrictedDecision {
                status: Status::No(RestrictedWitness::AutLevel(Box::new(r))),
                involution: None,
                m,
                pairs_enumerated: 0,
                iso_classes: 0,
            });
        }
        _ => return Err(ClassifyError::NotComplete),
    }
    let invs = g.involutions();
    let t = *invs.iter().next().ok_or(ClassifyError::OddOrder)?;
    let class = g.conjugacy_class(t);
    if let Some(other) = simplest(g, invs.iter().copied().filter(|x| !class.contains(x))) {
        let a = simplest(g, invs.iter().copied()).expect("nonempty");
        let (a, b) = if class.contains(&a) {
            (a, other)
        } else {
            (a, t)
        };
        return Ok(RestrictedDecision {
            status: Status::No(RestrictedWitness::NonConjugateInvolutions(a, b)),
            involution: Some(t),
            m,
            pairs_enumerated: 0,
            iso_classes: 0,
        });
    }

    let sigma = inner(g, t);
    let mut pairs = Vec::new();
    for p in enumerate_subsets(g, &sigma, m)? {
        if pairs.len() == MAX_DECISION_PAIRS {
            return Ok(RestrictedDecision {
                status: Status::Undecided(format!("more than {MAX_DECISION_PAIRS} subsets")),
                involution: Some(t),
                m,
                pairs_enumerated: pairs.len(),
                iso_classes: 0,
            });
        }
        pairs.push(p);
    }
    let graphs: Vec<UGraph> = pairs.iter().map(|p| build_graph(g, p)).collect();
    // Isomorphism classes as (representative, members).
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, gr) in graphs.iter().enumerate() {
        let mut placed = false;
        for (rep, members) in classes.iter_mut() {
            let r = &graphs[*rep];
            if r.edge_count() == gr.edge_count()
                && component_profile(r) == component_profile(gr)
                && graph_isomorphic(r, gr)?.is_some()
            {
                members.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((i, vec![i]));
        }
    }
    for (rep, members) in &classes {
        let t1 = g.left_mul_set(t, pairs[*rep].subset());
        for &j in members {
            let t2 = g.left_mul_set(t, pairs[j].subset());
            let ok = (0..g.order()).any(|x| inner(g, x).apply_set(&t1) == t2);
            if !ok {
                return Ok(RestrictedDecision {
                    status: Status::No(RestrictedWitness::IsomorphicNotGci {
                        involution: t,
                        s1: pairs[*rep].subset().clone(),
                        s2: pairs[j].subset().clone(),
                    }),
                    involution: Some(t),
                    m,
                    pairs_enumerated: pairs.len(),
                    iso_classes: classes.len(),
                });
            }
        }
    }
    Ok(RestrictedDecision {
        status: if m >= g.order() {
            Status::Yes
        } else {
            Status::YesUpTo(m)
        },
        involution: Some(t),
        m,
        pairs_enumerated: pairs.len(),
        iso_classes: classes.len(),
    })
}

fn component_profile(g: &UGraph) -> Vec<usize> {
    let mut v: Vec<usize> = g.components().iter().map(Vec::len).collect();
    v.sort_unstable();
    v
}

/// Evidence that `S6` is not restricted GCI.
#[derive(Debug, Clone, Serialize)]
pub struct S6Refutation {
    pub components_transposition: usize,
    pub components_double_transposition: usize,
    pub automorphisms: usize,
    pub candidates_checked: usize,
    pub successes: usize,
    pub inner_failures: usize,
    pub outer_failures: usize,
    /// Image of `(12)` under the outer involution δ.
    pub delta_of_12: String,
    /// `δ_g σ((12)) δ_g⁻¹ = σ(g (12)^δ g⁻¹)` checked for every `g`.
    pub conjugation_rule_checked: usize,
}

impl S6Refutation {
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("plain struct");
        v["kind"] = json!("aut_level");
        v["involutions"] = json!(["(12)", "(12)(34)"]);
        v
    }
}

/// `GC(S6, {(12)}, σ((12)))` and `GC(S6, {(12)(34)}, σ((12)(34)))` are both
/// `360K₂`, yet none of the 1440 automorphisms conjugates `σ((12))` to
/// `σ((12)(34))`.
pub fn s6_restricted_gci_refutation() -> Result<S6Refutation, ClassifyError> {
    let s6 = FiniteGroup::symmetric(6)?;
    s6_refutation_in(&s6)
}

fn s6_refutation_in(s6: &FiniteGroup) -> Result<S6Refutation, ClassifyError> {
    let el = |s: &str| {
        s6.parse_element(s)
            .ok()
            .flatten()
            .ok_or_else(|| ClassifyError::Verification(format!("{s} not in S6")))
    };
    let a = el("(12)")?;
    let b = el("(12)(34)")?;
    let sa = inner(s6, a);
    let sb = inner(s6, b);
    let ga = build_graph(
        s6,
        &GenCayleyPair::new(s6, sa.clone(), ElemSet::from([a])).map_err(GenCayleyError::from)?,
    );
    let gb = build_graph(
        s6,
        &GenCayleyPair::new(s6, sb.clone(), ElemSet::from([b])).map_err(GenCayleyError::from)?,
    );
    let (ma, ca) = is_perfect_matching(&ga);
    let (mb, cb) = is_perfect_matching(&gb);
    if !(ma && mb && ca == 360 && cb == 360) {
        return Err(ClassifyError::Verification("S6 matchings".into()));
    }
    let family = aut::s6_automorphism_group(s6)?;
    let auts = AutGroup::new(family)?;
    if auts.len() != 1440 {
        return Err(ClassifyError::Verification(format!(
            "expected 1440 automorphisms, got {}",
            auts.len()
        )));
    }
    let mut inner_failures = 0;
    let mut outer_failures = 0;
    let mut successes = 0;
    for gamma in auts.iter() {
        if sb.is_conjugate_by(&sa, gamma) {
            successes += 1;
        } else if matches!(gamma.provenance(), aut::Provenance::S6Outer(_)) {
            outer_failures += 1;
        } else {
            inner_failures += 1;
        }
    }
    let delta = aut::s6_delta(s6)?;
    let d12 = delta.apply(a);
    let mut rule = 0;
    for gamma in auts.iter() {
        if let aut::Provenance::S6Outer(x) = gamma.provenance() {
            let lhs = gamma.compose(&sa).compose(&gamma.inverse());
            let rhs = inner(s6, s6.conj(x, d12));
            if lhs != rhs {
                return Err(ClassifyError::Verification("δ_g conjugation rule".into()));
            }
            rule += 1;
        }
    }
    Ok(S6Refutation {
        components_transposition: ca,
        components_double_transposition: cb,
        automorphisms: auts.len(),
        candidates_checked: inner_failures + outer_failures + successes,
        successes,
        inner_failures,
        outer_failures,
        delta_of_12: s6.fmt(d12),
        conjugation_rule_checked: rule,
    })
}

/// Per-involution `Ω_{σ(g)}` contents and the implications that force it to
/// be `{g}`.
#[derive(Debug, Clone)]
pub struct OmegaReport {
    pub entries: Vec<(usize, ElemSet)>,
    pub restricted_implication: Option<bool>,
    pub not_div4_implication: Option<bool>,
    /// Component sizes of `GC(G, {g, h}, σ(g))` for the first `h ∈ Ω \ {g}`.
    pub pair_components: Option<(usize, usize, Vec<usize>)>,
}

impl OmegaReport {
    pub fn all_singleton(&self) -> bool {
        self.entries
            .iter()
            .all(|(g, o)| o.len() == 1 && o.contains(g))
    }

    pub fn pass(&self) -> bool {
        self.restricted_implication.unwrap_or(true) && self.not_div4_implication.unwrap_or(true)
    }
}

/// `Ω_{σ(g)}` for each involution (class representatives above order 120).
pub fn omega_singleton_checks(
    g: &FiniteGroup,
    restricted_gci: Option<bool>,
) -> Result<OmegaReport, ClassifyError> {
    let invs: Vec<usize> = if g.order() <= 120 {
        g.involutions().into_iter().collect()
    } else {
        class_representatives(g, &g.involutions())
    };
    let mut entries = Vec::new();
    let mut pair_components = None;
    for &t in &invs {
        let part = partition(g, &inner(g, t))?;
        if pair_components.is_none() {
            if let Some(&h) = part.big_omega.iter().find(|&&h| h != t) {
                let pair = GenCayleyPair::new(g, inner(g, t), ElemSet::from([t, h]))
                    .map_err(GenCayleyError::from)?;
                let mut sizes = component_profile(&build_graph(g, &pair));
                sizes.dedup();
                pair_components = Some((t, h, sizes));
            }
        }
        entries.push((t, part.big_omega));
    }
    let mut report = OmegaReport {
        entries,
        restricted_implication: None,
        not_div4_implication: None,
        pair_components,
    };
    let singleton = report.all_singleton();
    if restricted_gci == Some(true) {
        report.restricted_implication = Some(singleton);
    }
    if g.order().is_multiple_of(2) && !g.order().is_multiple_of(4) {
        report.not_div4_implication = Some(singleton);
    }
    Ok(report)
}

fn class_representatives(g: &FiniteGroup, s: &ElemSet) -> Vec<usize> {
    let mut reps = Vec::new();
    let mut covered = ElemSet::new();
    for &x in s {
        if !covered.contains(&x) {
            covered.extend(g.conjugacy_class(x));
            reps.push(x);
        }
    }
    reps
}

/// GCI-isomorphic pairs under different involutions with `gᵢ ∉ Sᵢ`, found by
/// exhaustive certificate search. Returns `(pair1, pair2, certificate)`.
pub fn collect_gci_pairs(
    g: &FiniteGroup,
    auts: &AutGroup,
    max_size: usize,
    limit: usize,
) -> Result<Vec<(GenCayleyPair, GenCayleyPair, crate::iso::GciCertificate)>, ClassifyError> {
    let mut pool = Vec::new();
    for t in g.involutions() {
        for p in enumerate_subsets(g, &inner(g, t), max_size)? {
            if !p.is_empty() && !p.subset().contains(&t) {
                pool.push(p);
            }
        }
    }
    let mut out = Vec::new();
    'outer: for i in 0..pool.len() {
        for j in (i + 1)..pool.len() {
            if pool[i].alpha() == pool[j].alpha() || pool[i].len() != pool[j].len() {
                continue;
            }
            if let Some(c) = gci_isomorphic(g, &pool[i], &pool[j], auts) {
                out.push((pool[i].clone(), pool[j].clone(), c));
                if out.len() >= limit {
                    break 'outer;
                }
            }
        }
    }
    Ok(out)
}

/// A CI-isomorphic pair of Cayley subsets together with conjugate involutions
/// whose classes both subsets avoid.
#[derive(Debug, Clone)]
pub struct CiInstance {
    pub g1: usize,
    pub g2: usize,
    pub s1: ElemSet,
    pub s2: ElemSet,
    pub witness: Automorphism,
}

/// Collects CI-isomorphic Cayley-subset pairs avoiding the class of an
/// involution, pairing each with two conjugate involutions. `S₁ = S₂` pairs
/// are included only when `reflexive` is set.
pub fn collect_ci_instances(
    g: &FiniteGroup,
    auts: &AutGroup,
    max_size: usize,
    limit: usize,
    reflexive: bool,
) -> Result<Vec<CiInstance>, ClassifyError> {
    let invs = g.involutions();
    let mut out = Vec::new();
    for rep in class_representatives(g, &invs) {
        let class: Vec<usize> = g.conjugacy_class(rep).into_iter().collect();
        let classset: ElemSet = class.iter().copied().collect();
        let subsets: Vec<ElemSet> = enumerate_subsets(g, &Automorphism::identity(g), max_size)?
            .map(|p| p.subset().clone())
            .filter(|s| !s.is_empty() && s.is_disjoint(&classset))
            .collect();
        for i in 0..subsets.len() {
            for j in (if reflexive { i } else { i + 1 })..subsets.len() {
                if let Some(w) = ci_isomorphic(g, &subsets[i], &subsets[j], auts)? {
                    let g2 = class[(out.len() + j) % class.len()];
                    out.push(CiInstance {
                        g1: rep,
                        g2,
                        s1: subsets[i].clone(),
                        s2: subsets[j].clone(),
                        witness: w.clone(),
                    });
                    if out.len() >= limit {
                        return Ok(out);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub pass: bool,
    pub witness: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub group: String,
    pub m: usize,
    pub gci: Value,
    pub restricted_gci: Value,
    pub claims: Vec<Claim>,
}

impl ClassificationReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// One line per claim.
    pub fn render_text(&self) -> String {
        let mut s = format!(
            "group {}  m={}  gci={}  restricted_gci={}\n",
            self.group,
            self.m,
            self.gci["status"].as_str().unwrap_or("?"),
            self.restricted_gci["status"].as_str().unwrap_or("?")
        );
        for c in &self.claims {
            s.push_str(&format!(
                "  [{}] {:<40} {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.anchor
            ));
        }
        s
    }
}

fn status_json<W>(s: &Status<W>, f: impl Fn(&W) -> Value) -> Value {
    match s {
        Status::Yes => json!({ "status": "yes" }),
        Status::YesUpTo(m) => json!({ "status": "yes_up_to_m", "m": m }),
        Status::No(w) => json!({ "status": "no", "witness": f(w) }),
        Status::Undecided(r) => json!({ "status": "undecided", "reason": r }),
    }
}

/// Size cap and per-involution pair budget used by the sweeps.
fn sweep_budget(g: &FiniteGroup) -> (usize, usize) {
    match g.order() {
        0..=6 => (g.order(), usize::MAX),
        7..=24 => (4, usize::MAX),
        25..=120 => (2, 150),
        _ => (2, 20),
    }
}

/// Involutions to sweep: all of them for small groups, class
/// representatives otherwise.
fn sweep_involutions(g: &FiniteGroup) -> Vec<usize> {
    let invs = g.involutions();
    if g.order() <= 24 {
        invs.into_iter().collect()
    } else {
        class_representatives(g, &invs)
    }
}

fn sweep_pairs(g: &FiniteGroup) -> Result<Vec<(usize, GenCayleyPair)>, ClassifyError> {
    let (cap, budget) = sweep_budget(g);
    let mut out = Vec::new();
    for t in sweep_involutions(g) {
        for p in enumerate_subsets(g, &inner(g, t), cap)?.take(budget) {
            out.push((t, p));
        }
    }
    Ok(out)
}

struct ClaimLog {
    claims: Vec<Claim>,
}

impl ClaimLog {
    fn push(&mut self, id: &str, anchor: &str, pass: bool, witness: Value) {
        self.claims.push(Claim {
            id: id.into(),
            anchor: anchor.into(),
            pass,
            witness,
        });
    }
}

/// Runs every applicable claim check on `g` and assembles the report.
pub fn verify_group(g: &FiniteGroup) -> Result<ClassificationReport, ClassifyError> {
    let auts = aut::automorphism_group(g)?;
    let completeness = is_complete_group(g, Some(auts.members()))?;
    let complete = completeness.is_complete();
    let mut log = ClaimLog { claims: Vec::new() };
    let invs = g.involutions();
    let sweep_invs = sweep_involutions(g);

    log.push(
        "group-complete",
        "completeness: whether Z(G) = e and Aut(G) = Inn(G)",
        true,
        match &completeness {
            Completeness::Complete => json!({ "complete": true, "automorphisms": auts.len() }),
            Completeness::NontrivialCenter(z) => json!({ "complete": false, "central": g.fmt(*z) }),
            Completeness::OuterAutomorphism(a) => json!({
                "complete": false,
                "outer_images_of_generators": g.generator_indices().iter()
                    .map(|&x| [g.fmt(x), g.fmt(a.apply(x))]).collect::<Vec<_>>(),
            }),
        },
    );

    // σ(g) involutory iff g is an involution (complete groups).
    if complete {
        let bad: Vec<String> = (0..g.order())
            .filter(|&x| inner(g, x).is_involutory() != invs.contains(&x))
            .map(|x| g.fmt(x))
            .collect();
        log.push(
            "inner-involutory-iff-involution",
            "σ(g) is involutory exactly when g is an involution",
            bad.is_empty(),
            json!({ "checked": g.order(), "counterexamples": bad }),
        );

        let reps = class_representatives(g, &invs);
        let mut checked = 0;
        let mut bad = Vec::new();
        for &x in &reps {
            for &y in invs.iter().take(64) {
                let in_aut = aut::conjugate_in_aut(&inner(g, x), &inner(g, y), &auts).is_some();
                if in_aut != g.are_conjugate(x, y) {
                    bad.push([g.fmt(x), g.fmt(y)]);
                }
                checked += 1;
            }
        }
        log.push(
            "inner-conjugacy-transfer",
            "σ(g), σ(h) conjugate in Aut(G) iff g, h conjugate in G",
            bad.is_empty(),
            json!({ "checked": checked, "counterexamples": bad }),
        );
    }

    // Partition-level claims per involution.
    {
        let mut mho_bad = Vec::new();
        let mut omega_bad = Vec::new();
        let mut in_big_omega_bad = Vec::new();
        let mut never_complete_bad = Vec::new();
        let mut shift_identity_checks = 0usize;
        let mut shift_identity_bad = Vec::new();
        for &t in &sweep_invs {
            let sigma = inner(g, t);
            let part = partition(g, &sigma)?;
            for x in 0..g.order() {
                let gx = g.mul(t, x);
                let expect_mho = g.mul(gx, gx) != 0;
                if part.mho.contains(&x) != expect_mho {
                    mho_bad.push([g.fmt(t), g.fmt(x)]);
                }
            }
            if part.omega != g.commutator_set(t) {
                omega_bad.push(g.fmt(t));
            }
            if !part.big_omega.contains(&t) {
                in_big_omega_bad.push(g.fmt(t));
            }
            if !never_complete_check(g, &sigma)? {
                never_complete_bad.push(g.fmt(t));
            }
            let hs: Vec<usize> = if g.order() <= 120 {
                (0..g.order()).collect()
            } else {
                (0..g.order()).step_by(7).collect()
            };
            for &x in &part.big_omega {
                let xi = g.inv(x);
                for &h in &hs {
                    let lhs = g.mul3(xi, g.commutator(t, h), xi);
                    let rhs = g.commutator(t, g.mul(h, xi));
                    shift_identity_checks += 1;
                    if lhs != rhs {
                        shift_identity_bad.push([g.fmt(t), g.fmt(x), g.fmt(h)]);
                    }
                }
            }
        }
        let n = sweep_invs.len();
        log.push(
            "mho-criterion",
            "x ∈ ℧_σ(g) iff (gx)² ≠ e",
            mho_bad.is_empty(),
            json!({ "involutions": n, "counterexamples": mho_bad }),
        );
        log.push(
            "involution-in-big-omega",
            "g ∈ Ω_σ(g)",
            in_big_omega_bad.is_empty(),
            json!({ "involutions": n, "counterexamples": in_big_omega_bad }),
        );
        log.push(
            "omega-equals-commutator-set",
            "ω_σ(g) = [g] = {[g,h] : h ∈ G}",
            omega_bad.is_empty(),
            json!({ "involutions": n, "counterexamples": omega_bad }),
        );
        log.push(
            "never-complete",
            "|ω_σ(g)| ≥ 2, so no generalized Cayley graph is complete",
            never_complete_bad.is_empty(),
            json!({ "involutions": n, "counterexamples": never_complete_bad }),
        );
        log.push(
            "commutator-shift-identity",
            "x⁻¹[g,h]x⁻¹ = [g, hx⁻¹] for x ∈ Ω_σ(g)",
            shift_identity_bad.is_empty(),
            json!({ "checked": shift_identity_checks, "counterexamples": shift_identity_bad }),
        );
    }

    // Counting lemma over every involutory automorphism.
    {
        let mut checked = 0;
        let mut bad = Vec::new();
        let targets: Vec<&Automorphism> = if auts.len() <= 200 {
            auts.involutory().collect()
        } else {
            auts.involutory().step_by(10).collect()
        };
        for a in targets {
            checked += 1;
            if !counting_lemma_holds(g, a) {
                bad.push(a.describe(g));
            }
        }
        log.push(
            "counting-lemma",
            "|ω_α|·|Fix(α)| = |G|, fibers of h ↦ (h⁻¹)^α h are cosets Fix(α)h",
            bad.is_empty(),
            json!({ "involutory_automorphisms": checked, "counterexamples": bad }),
        );
    }

    // Sweeps over enumerated pairs.
    let pairs = sweep_pairs(g)?;
    {
        let mut lt = (0usize, Vec::new());
        let mut cs = (0usize, Vec::new());
        let mut ns = (0usize, Vec::new());
        let mut bt = (0usize, Vec::new());
        let mut regular_bad = Vec::new();
        let mut max_size = 0;
        let betas: Vec<usize> = if g.order() <= 24 {
            (0..g.order()).collect()
        } else {
            (0..g.order()).step_by(g.order() / 12).collect()
        };
        for (t, p) in &pairs {
            let graph = build_graph(g, p);
            max_size = max_size.max(p.len());
            if graph.regular_degree() != Some(p.len()) || graph.is_complete() && g.order() > 1 {
                regular_bad.push(display_set(g, p.subset()));
            }
            for x in g.centralizer(*t) {
                lt.0 += 1;
                if !left_translation_is_graph_automorphism(g, &graph, x) {
                    lt.1.push(display_set(g, p.subset()));
                }
            }
            for &x in &partition(g, p.alpha())?.big_omega {
                cs.0 += 1;
                if !conjugation_shift_theorem_check(g, p, x)? {
                    cs.1.push([g.fmt(*t), g.fmt(x)]);
                }
            }
            if !p.is_empty() {
                for x in g.subset_normalizer(p.subset()) {
                    ns.0 += 1;
                    if !normalizer_shift_theorem_check(g, p, x)? {
                        ns.1.push([g.fmt(*t), g.fmt(x)]);
                    }
                }
            }
            for &b in &betas {
                bt.0 += 1;
                if !beta_twist_check(g, p, &inner(g, b)) {
                    bt.1.push([g.fmt(*t), g.fmt(b)]);
                }
            }
        }
        log.push(
            "regular-and-not-complete",
            "GC(G,S,α) is |S|-regular and never complete",
            regular_bad.is_empty(),
            json!({ "pairs": pairs.len(), "max_size": max_size, "counterexamples": regular_bad }),
        );
        log.push(
            "left-translations-are-automorphisms",
            "L(C_G(g)) ≤ Aut(GC(G,S,σ(g)))",
            lt.1.is_empty(),
            json!({ "checked": lt.0, "counterexamples": lt.1 }),
        );
        log.push(
            "conjugation-shift-theorem",
            "y ↦ yx: GC(G,S,σ(g)) ≅ GC(G,xSx,σ(g)) for x ∈ Ω",
            cs.1.is_empty(),
            json!({ "checked": cs.0, "counterexamples": cs.1 }),
        );
        log.push(
            "normalizer-shift-theorem",
            "h ↦ hx: GC(G,S,σ(g)) ≅ GC(G,[g,x]S,σ(g)) for x ∈ N_G(S)",
            ns.1.is_empty(),
            json!({ "checked": ns.0, "counterexamples": ns.1 }),
        );
        log.push(
            "beta-twist",
            "h ↦ h^β: GC(G,S,α) ≅ GC(G,S^β,βαβ⁻¹)",
            bt.1.is_empty(),
            json!({ "checked": bt.0, "counterexamples": bt.1 }),
        );
    }

    // GCI relation properties on small groups.
    if g.order() <= 24 {
        let small: Vec<&GenCayleyPair> = pairs
            .iter()
            .map(|(_, p)| p)
            .filter(|p| p.len() <= 2)
            .collect();
        let rel: Vec<Vec<bool>> = small
            .iter()
            .map(|a| {
                small
                    .iter()
                    .map(|b| gci_isomorphic(g, a, b, &auts).is_some())
                    .collect()
            })
            .collect();
        let k = small.len();
        let mut equiv = true;
        let mut implies_iso = true;
        for i in 0..k {
            equiv &= rel[i][i];
            for j in 0..k {
                equiv &= rel[i][j] == rel[j][i];
                if rel[i][j] {
                    let a = build_graph(g, small[i]);
                    let b = build_graph(g, small[j]);
                    implies_iso &= graph_isomorphic(&a, &b)?.is_some();
                    for (l, &jl) in rel[j].iter().enumerate() {
                        if jl {
                            equiv &= rel[i][l];
                        }
                    }
                }
            }
        }
        log.push(
            "gci-equivalence-relation",
            "GCI isomorphism is reflexive, symmetric and transitive",
            equiv,
            json!({ "pairs": k }),
        );
        log.push(
            "gci-implies-graph-isomorphism",
            "a GCI certificate yields a graph isomorphism",
            implies_iso,
            json!({ "pairs": k }),
        );
    }

    // Matching theorem over every involution.
    {
        let mut bad = Vec::new();
        for &t in &invs {
            let p = GenCayleyPair::new(g, inner(g, t), ElemSet::from([t]))
                .map_err(GenCayleyError::from)?;
            let (m, c) = is_perfect_matching(&build_graph(g, &p));
            if !(m && c == g.order() / 2) {
                bad.push(g.fmt(t));
            }
        }
        log.push(
            "matching-theorem",
            "GC(G,{g},σ(g)) ≅ (|G|/2)K₂",
            bad.is_empty(),
            json!({ "involutions": invs.len(), "components": g.order() / 2, "counterexamples": bad }),
        );
    }

    let gci = match not_gci_via_matching(g) {
        Ok(w) => {
            log.push(
                "not-gci-via-matching",
                "Cay(G,{g}) ≅ GC(G,{g},σ(g)) but id is not conjugate to σ(g)",
                true,
                w.to_json(g),
            );
            status_json(&Status::No(w), |w| w.to_json(g))
        }
        Err(ClassifyError::OddOrder) | Err(ClassifyError::NotComplete) => status_json::<()>(
            &Status::Undecided("no noncentral involution".into()),
            |_| Value::Null,
        ),
        Err(e) => return Err(e),
    };

    // CI and GCI transfers (complete groups only).
    if complete && g.order() <= 120 {
        let (size, limit) = if g.order() <= 24 { (2, 60) } else { (1, 10) };
        let gci_pairs = collect_gci_pairs(g, &auts, size, limit)?;
        let mut bad = 0;
        for (p1, p2, c) in &gci_pairs {
            if gci_to_ci_transfer(g, p1, p2, c).is_err() {
                bad += 1;
            }
        }
        log.push(
            "gci-to-ci-transfer",
            "GC(G,S₁,σ(g₁)) GCI-iso GC(G,S₂,σ(g₂)) ⇒ Cay(G,g₁S₁) CI-iso Cay(G,g₂S₂)",
            bad == 0 && !gci_pairs.is_empty(),
            json!({ "pairs": gci_pairs.len(), "failures": bad }),
        );
        let ci = collect_ci_instances(g, &auts, 2, if g.order() <= 24 { 30 } else { 10 }, true)?;
        let mut bad = 0;
        for inst in &ci {
            let ok = ci_to_gci_transfer(g, inst.g1, inst.g2, &inst.s1, &inst.s2, &inst.witness)
                .and_then(|r| gci_to_ci_transfer(g, &r.pair1, &r.pair2, &r.certificate))
                .map(|w| w.apply_set(&inst.s1) == inst.s2)
                .unwrap_or(false);
            if !ok {
                bad += 1;
            }
        }
        log.push(
            "ci-to-gci-transfer",
            "Cay(G,S₁) CI-iso Cay(G,S₂) ⇒ GC(G,g₁S₁,σ(g₁)) GCI-iso GC(G,g₂S₂,σ(g₂)), round trip",
            bad == 0 && !ci.is_empty(),
            json!({ "instances": ci.len(), "failures": bad }),
        );
    }

    // Restricted GCI decision.
    let mut restricted_flag = None;
    let m = default_m(g);
    let restricted = if g.order().is_multiple_of(2) && (complete || g.symmetric_degree() == Some(6))
    {
        let d = restricted_gci_decide(g, Some(m), &auts)?;
        restricted_flag = match d.status {
            Status::Yes => Some(true),
            Status::No(_) => Some(false),
            _ => None,
        };
        let v = status_json(&d.status, |w| w.to_json(g));
        log.push(
            "restricted-gci-decision",
            "restricted GCI iff G₂ = C(g) and isomorphic GC(G,Sᵢ,σ(g)) have gS₂ = (gS₁)^σ(x)",
            !matches!(d.status, Status::Undecided(_)),
            json!({
                "involution": d.involution.map(|t| g.fmt(t)),
                "m": d.m,
                "pairs": d.pairs_enumerated,
                "iso_classes": d.iso_classes,
                "status": v.clone(),
            }),
        );
        if let (Status::Yes, Some(t)) = (&d.status, d.involution) {
            let (unique, sizes) = valence_classes_unique(g, t, &auts, 3)?;
            log.push(
                "unique-valent-graph",
                "each d-valent GC(G,S,σ(g)) with d ≤ 3 forms one GCI class",
                unique,
                json!({ "involution": g.fmt(t), "pairs_per_valence": sizes }),
            );
        }
        if let Status::No(RestrictedWitness::NonConjugateInvolutions(a, b)) = &d.status {
            let classes = g.conjugacy_classes();
            let ca = classes.iter().position(|c| c.members.contains(a));
            let cb = classes.iter().position(|c| c.members.contains(b));
            log.push(
                "witness-involutions-not-conjugate",
                "the two witness involutions lie in different conjugacy classes",
                ca != cb,
                json!([g.fmt(*a), g.fmt(*b)]),
            );
        }
        if let Status::No(RestrictedWitness::AutLevel(r)) = &d.status {
            log.push(
                "s6-refutation",
                "σ((12)) and σ((12)(34)) are not conjugate in Aut(S6)",
                r.successes == 0 && r.candidates_checked == 1440,
                r.to_json(),
            );
        }
        v
    } else {
        status_json::<()>(
            &Status::Undecided("criterion needs a complete group of even order".into()),
            |_| Value::Null,
        )
    };

    if complete && g.order().is_multiple_of(2) {
        let o = omega_singleton_checks(g, restricted_flag)?;
        log.push(
            "omega-singleton",
            "Ω_σ(g) = {g} for restricted GCI groups and when 4 ∤ |G|",
            o.pass(),
            json!({
                "all_singleton": o.all_singleton(),
                "restricted_implication": o.restricted_implication,
                "not_div4_implication": o.not_div4_implication,
                "pair_graph": o.pair_components.as_ref().map(|(t, h, sizes)| json!({
                    "g": g.fmt(*t), "h": g.fmt(*h), "component_sizes": sizes,
                })),
            }),
        );
    }

    if let Some(n) = g.symmetric_degree().filter(|&n| n >= 3) {
        let expected = n == 3;
        log.push(
            "symmetric-classification",
            "S_n is restricted GCI iff n = 3",
            restricted_flag == Some(expected),
            json!({ "n": n, "restricted_gci": restricted_flag }),
        );
    }

    Ok(ClassificationReport {
        group: g.label(),
        m,
        gci,
        restricted_gci: restricted,
        claims: log.claims,
    })
}

/// Whether, for each valence `d ≤ max_d`, all pairs of size `d` under `σ(t)`
/// are GCI-isomorphic to the first one. Also returns the pair counts.
pub fn valence_classes_unique(
    g: &FiniteGroup,
    t: usize,
    auts: &AutGroup,
    max_d: usize,
) -> Result<(bool, Vec<usize>), ClassifyError> {
    let pairs: Vec<GenCayleyPair> = enumerate_subsets(g, &inner(g, t), max_d)?.collect();
    let mut unique = true;
    let mut sizes = Vec::new();
    for d in 1..=max_d {
        let of_d: Vec<&GenCayleyPair> = pairs.iter().filter(|p| p.len() == d).collect();
        sizes.push(of_d.len());
        if let Some(first) = of_d.first() {
            unique &= of_d
                .iter()
                .all(|p| gci_isomorphic(g, first, p, auts).is_some());
        }
    }
    Ok((unique, sizes))
}

/// `|ω_α|·|Fix(α)| = |G|` and each fiber of `h ↦ (h⁻¹)^α h` is a right coset
/// `Fix(α)·h`.
pub fn counting_lemma_holds(g: &FiniteGroup, alpha: &Automorphism) -> bool {
    let fix = alpha.fixed_points();
    let value: Vec<usize> = (0..g.order())
        .map(|h| g.mul(alpha.apply(g.inv(h)), h))
        .collect();
    let omega: ElemSet = value.iter().copied().collect();
    if omega.len() * fix.len() != g.order() {
        return false;
    }
    (0..g.order()).all(|h| {
        let fiber: ElemSet = (0..g.order()).filter(|&y| value[y] == value[h]).collect();
        let coset: ElemSet = fix.iter().map(|&f| g.mul(f, h)).collect();
        fiber == coset
    })
}

/// Reports for each named group, with timings.
pub fn verify_paper(targets: &[&str]) -> Result<Vec<(ClassificationReport, f64)>, ClassifyError> {
    targets
        .iter()
        .map(|name| {
            let start = Instant::now();
            let g = FiniteGroup::named(name)?;
            let r = verify_group(&g)?;
            Ok((r, start.elapsed().as_secs_f64()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_witnesses() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(not_gci_via_matching(&s3).unwrap().components, 3);
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(not_gci_via_matching(&s4).unwrap().components, 12);
        let c5 = FiniteGroup::cyclic(5).unwrap();
        assert!(matches!(
            not_gci_via_matching(&c5),
            Err(ClassifyError::OddOrder)
        ));
    }

    #[test]
    fn s3_is_restricted_gci() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let auts = aut::automorphism_group(&s3).unwrap();
        let d = restricted_gci_decide(&s3, Some(6), &auts).unwrap();
        assert!(d.status.is_yes());
        assert_eq!(d.pairs_enumerated, 4);
        assert_eq!(d.iso_classes, 4);
    }

    #[test]
    fn s4_fails_on_involution_classes() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let auts = aut::automorphism_group(&s4).unwrap();
        let d = restricted_gci_decide(&s4, None, &auts).unwrap();
        match d.status {
            Status::No(RestrictedWitness::NonConjugateInvolutions(a, b)) => {
                assert_eq!(
                    (s4.fmt(a).as_str(), s4.fmt(b).as_str()),
                    ("(12)", "(12)(34)")
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_complete_groups_are_rejected() {
        let d8 = FiniteGroup::named("D8").unwrap();
        let auts = aut::automorphism_group(&d8).unwrap();
        assert!(matches!(
            restricted_gci_decide(&d8, None, &auts),
            Err(ClassifyError::NotComplete)
        ));
    }

    #[test]
    fn omega_checks() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let r = omega_singleton_checks(&s3, Some(true)).unwrap();
        assert!(r.all_singleton());
        assert_eq!(r.restricted_implication, Some(true));
        assert_eq!(r.not_div4_implication, Some(true));
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let r = omega_singleton_checks(&s4, Some(false)).unwrap();
        assert!(r.pass());
        assert_eq!(r.restricted_implication, None);
        assert_eq!(r.not_div4_implication, None);
        assert!(!r.all_singleton());
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert!(omega_singleton_checks(&c3, None)
            .unwrap()
            .entries
            .is_empty());
    }

    #[test]
    fn counting_lemma_on_dihedral() {
        let d8 = FiniteGroup::named("D8").unwrap();
        let auts = aut::automorphism_group(&d8).unwrap();
        assert!(auts.involutory().count() > 0);
        for a in auts.involutory() {
            assert!(counting_lemma_holds(&d8, a));
        }
    }

    #[test]
    fn s3_report_passes() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let r = verify_group(&s3).unwrap();
        for c in &r.claims {
            assert!(c.pass, "{} failed: {}", c.id, c.witness);
        }
        assert_eq!(r.restricted_gci["status"], "yes");
        assert_eq!(r.gci["status"], "no");
        let text = r.render_text();
        assert_eq!(text.lines().count(), r.claims.len() + 1);
    }
}
