//! Text specs for groups, automorphisms and subsets.
//!
//! Groups: `S4`, `name:S4`, or `gens: (12),(123) degree:4`.
//! Automorphisms: `id`, `inner:(12)`, `s6-delta:(g)`.
//! Subsets: comma-separated cycle strings, e.g. `(12),(1,2,3)`, or `{}` for ∅.

use thiserror::Error;

use crate::aut::{self, inner, AutError, Automorphism};
use crate::group::{ElemSet, FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
use crate::perm::{parse_cycles, PermError, Permutation, MAX_DEGREE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("malformed group spec: {0}")]
    Group(String),
    #[error("malformed automorphism spec: {0}")]
    Alpha(String),
    #[error("malformed subset spec: {0}")]
    Subset(String),
    #[error("{0} is not an element of {1}")]
    NotInGroup(String, String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Build(#[from] GroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

/// A parsed group spec, not yet closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Named(String),
    Generators {
        gens: Vec<Permutation>,
        degree: usize,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, SpecError> {
        self.build_capped(DEFAULT_ORDER_CAP)
    }

    pub fn build_capped(&self, cap: usize) -> Result<FiniteGroup, SpecError> {
        match self {
            GroupSpec::Named(n) => {
                let g = FiniteGroup::named(n)?;
                if g.order() > cap {
                    return Err(GroupError::CapExceeded { cap }.into());
                }
                Ok(g)
            }
            GroupSpec::Generators { gens, degree } => Ok(FiniteGroup::close_generators_capped(
                gens, *degree, None, cap,
            )?),
        }
    }
}

/// Splits at commas outside parentheses.
fn split_top_level(text: &str) -> Result<Vec<&str>, ()> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => {
                depth += 1;
                if depth > 1 {
                    return Err(());
                }
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(());
                }
            }
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(());
    }
    out.push(&text[start..]);
    Ok(out)
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("name:") {
        return parse_name(rest.trim());
    }
    let Some(rest) = t.strip_prefix("gens:") else {
        return parse_name(t);
    };
    let (gens_text, degree) = match rest.rfind("degree:") {
        Some(pos) => {
            let d = rest[pos + "degree:".len()..].trim();
            let degree: usize = d
                .parse()
                .map_err(|_| SpecError::Group(format!("bad degree {d:?}")))?;
            (&rest[..pos], Some(degree))
        }
        None => (rest, None),
    };
    let pieces: Vec<&str> = split_top_level(gens_text)
        .map_err(|_| SpecError::Group("unbalanced parentheses".into()))?
        .into_iter()
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    if pieces.is_empty() {
        return Err(SpecError::Group("no generators".into()));
    }
    let degree = match degree {
        Some(d) => d,
        None => pieces
            .iter()
            .map(|p| max_point(p))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .max()
            .unwrap_or(1)
            .max(1),
    };
    if degree == 0 || degree > MAX_DEGREE {
        return Err(SpecError::Group(format!(
            "degree {degree} outside 1..={MAX_DEGREE}"
        )));
    }
    let gens = pieces
        .iter()
        .map(|p| parse_cycles(p, degree))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupSpec::Generators { gens, degree })
}

fn parse_name(name: &str) -> Result<GroupSpec, SpecError> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some('S' | 'A' | 'C' | 'D'))
        && !chars.as_str().is_empty()
        && chars.as_str().len() <= 4
        && chars.as_str().bytes().all(|b| b.is_ascii_digit());
    if !ok {
        return Err(SpecError::Group(format!("unknown group name {name:?}")));
    }
    Ok(GroupSpec::Named(name.to_string()))
}

/// Largest point mentioned in a cycle string, for degree inference.
fn max_point(text: &str) -> Result<usize, SpecError> {
    let mut best = 0;
    for cyc in text.split(['(', ')']).filter(|s| !s.trim().is_empty()) {
        let pts: Vec<&str> = if cyc.contains(',') {
            cyc.split(',').map(str::trim).collect()
        } else {
            cyc.trim().split("").filter(|s| !s.is_empty()).collect()
        };
        for p in pts {
            let v: usize = p
                .parse()
                .map_err(|_| SpecError::Group(format!("bad point {p:?}")))?;
            if v > MAX_DEGREE {
                return Err(SpecError::Group(format!("point {v} exceeds {MAX_DEGREE}")));
            }
            best = best.max(v);
        }
    }
    Ok(best)
}

/// A parsed automorphism spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaSpec {
    Identity,
    Inner(String),
    S6Delta(String),
}

pub fn parse_alpha_spec(text: &str) -> Result<AlphaSpec, SpecError> {
    let t = text.trim();
    if t == "id" || t == "e" {
        return Ok(AlphaSpec::Identity);
    }
    let (kind, arg) = t.split_once(':').ok_or_else(|| {
        SpecError::Alpha(format!("expected id, inner:<g> or s6-delta:<g>, got {t:?}"))
    })?;
    let arg = arg.trim();
    if arg.is_empty() {
        return Err(SpecError::Alpha("missing element".into()));
    }
    match kind.trim() {
        "inner" => Ok(AlphaSpec::Inner(arg.to_string())),
        "s6-delta" => Ok(AlphaSpec::S6Delta(arg.to_string())),
        k => Err(SpecError::Alpha(format!("unknown kind {k:?}"))),
    }
}

/// Locates a cycle string in `g`; `e` names the identity.
pub fn resolve_element(g: &FiniteGroup, text: &str) -> Result<usize, SpecError> {
    let t = text.trim();
    if t == "e" {
        return Ok(0);
    }
    g.parse_element(t)?
        .ok_or_else(|| SpecError::NotInGroup(t.to_string(), g.label()))
}

impl AlphaSpec {
    pub fn resolve(&self, g: &FiniteGroup) -> Result<Automorphism, SpecError> {
        match self {
            AlphaSpec::Identity => Ok(Automorphism::identity(g)),
            AlphaSpec::Inner(x) => Ok(inner(g, resolve_element(g, x)?)),
            AlphaSpec::S6Delta(x) => Ok(aut::s6_delta_g(g, resolve_element(g, x)?)?),
        }
    }
}

/// Cycle strings of a subset spec, unresolved.
pub fn parse_subset_spec(text: &str) -> Result<Vec<String>, SpecError> {
    let t = text.trim();
    if t.is_empty() || t == "{}" {
        return Ok(Vec::new());
    }
    let t = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(t);
    let parts =
        split_top_level(t).map_err(|_| SpecError::Subset("unbalanced parentheses".into()))?;
    parts
        .into_iter()
        .map(|p| {
            let p = p.trim();
            if p.is_empty() {
                Err(SpecError::Subset("empty entry".into()))
            } else if p == "e" || (p.starts_with('(') && p.ends_with(')')) {
                Ok(p.to_string())
            } else {
                Err(SpecError::Subset(format!(
                    "expected a cycle string, got {p:?}"
                )))
            }
        })
        .collect()
}

/// Parses and resolves a subset in `g`.
pub fn resolve_subset(g: &FiniteGroup, text: &str) -> Result<ElemSet, SpecError> {
    parse_subset_spec(text)?
        .iter()
        .map(|s| resolve_element(g, s))
        .collect()
}
