//! Permutations of `{1, …, n}` and cycle notation.
//!
//! Points are 1-based in all text I/O and 0-based internally. Products follow
//! function composition: in `p.compose(&q)` the right factor `q` is applied
//! first, so `compose(p, q)(i) = p(q(i))`.

use std::fmt;

use thiserror::Error;

/// Largest degree accepted by the parser.
pub const MAX_DEGREE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: &'static str },
    #[error("point {point} is out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated within a cycle")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("degree must be between 1 and {MAX_DEGREE}, got {0}")]
    BadDegree(usize),
    #[error("image list is not a bijection")]
    NotBijection,
}

/// A bijection on `degree` points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, `images[i]` being the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(PermError::BadDegree(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// A single cycle given by 1-based points.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self, PermError> {
        let mut p = Permutation::identity(degree);
        p.apply_cycle_left(points)?;
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != rhs.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: rhs.degree(),
            });
        }
        Ok(self.compose_unchecked(rhs))
    }

    /// `self ∘ rhs`; panics if the degrees differ.
    pub fn compose_unchecked(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Permutation {
            images: rhs
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        self.compose_unchecked(x).compose_unchecked(&self.inverse())
    }

    /// Disjoint cycles of length ≥ 2, 0-based, each starting at its smallest
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.image(j);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn is_involution(&self) -> bool {
        let ct = self.cycle_type();
        ct[0] == 2 && ct.iter().all(|&l| l <= 2)
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, lcm)
    }

    /// Number of points moved.
    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 != j)
            .count()
    }

    /// Some `x` with `x · self · x⁻¹ = other` in the full symmetric group, or
    /// `None` if the cycle types differ.
    pub fn conjugator_to(&self, other: &Permutation) -> Option<Permutation> {
        if self.degree() != other.degree() || self.cycle_type() != other.cycle_type() {
            return None;
        }
        let flatten = |p: &Permutation| {
            let mut cycles = p.cycles();
            let n = p.degree();
            let mut fixed: Vec<Vec<usize>> = (0..n)
                .filter(|&i| p.image(i) == i)
                .map(|i| vec![i])
                .collect();
            cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
            cycles.append(&mut fixed);
            cycles.concat()
        };
        // Both layouts list cycles longest first, so position k in one lines up
        // with position k in the other.
        let from = flatten(self);
        let to = flatten(other);
        let mut images = vec![0usize; self.degree()];
        for (a, b) in from.into_iter().zip(to) {
            images[a] = b;
        }
        Permutation::from_images(images).ok()
    }

    /// Left-multiplies by the cycle `points` (1-based): `self ← cycle ∘ self`.
    fn apply_cycle_left(&mut self, points: &[usize]) -> Result<(), PermError> {
        let n = self.degree();
        let mut seen = vec![false; n];
        for &p in points {
            if p == 0 || p > n {
                return Err(PermError::PointOutOfRange {
                    point: p,
                    degree: n,
                });
            }
            if seen[p - 1] {
                return Err(PermError::RepeatedPoint(p));
            }
            seen[p - 1] = true;
        }
        if points.len() < 2 {
            return Ok(());
        }
        let mut cyc: Vec<u32> = (0..n as u32).collect();
        for (k, &p) in points.iter().enumerate() {
            cyc[p - 1] = (points[(k + 1) % points.len()] - 1) as u32;
        }
        for img in self.images.iter_mut() {
            *img = cyc[*img as usize];
        }
        Ok(())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Parses cycle notation such as `"(12)(36)(45)"` over `degree` points.
///
/// Whitespace is ignored. Inside a cycle, points are single digits unless the
/// cycle contains commas, in which case the comma-separated tokens are the
/// points (`"(1,10,3)"`). `"e"`, `"()"` and 1-cycles like `"(1)"` denote the
/// identity. Cycles are multiplied right to left; they need not be disjoint.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(PermError::BadDegree(degree));
    }
    let compact: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if compact.is_empty() {
        return Err(PermError::Malformed {
            pos: 0,
            msg: "empty input",
        });
    }
    if compact.len() == 1 && compact[0].1 == 'e' {
        return Ok(Permutation::identity(degree));
    }

    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut k = 0;
    while k < compact.len() {
        let (pos, c) = compact[k];
        if c != '(' {
            return Err(PermError::Malformed {
                pos,
                msg: "expected '('",
            });
        }
        let close = compact[k + 1..]
            .iter()
            .position(|&(_, c)| c == ')')
            .map(|off| k + 1 + off)
            .ok_or(PermError::Malformed {
                pos,
                msg: "unclosed cycle",
            })?;
        let body = &compact[k + 1..close];
        cycles.push(parse_cycle_body(body, pos)?);
        k = close + 1;
    }

    let mut p = Permutation::identity(degree);
    // Rightmost cycle acts first, so fold from the right by left-multiplying.
    for cyc in cycles.iter().rev() {
        p.apply_cycle_left(cyc)?;
    }
    Ok(p)
}

fn parse_cycle_body(body: &[(usize, char)], open_pos: usize) -> Result<Vec<usize>, PermError> {
    let bad = |pos, msg| PermError::Malformed { pos, msg };
    if body.iter().any(|&(_, c)| c == ',') {
        let mut points = Vec::new();
        let mut cur: Option<usize> = None;
        let mut cur_pos = open_pos;
        for &(pos, c) in body.iter().chain(std::iter::once(&(usize::MAX, ','))) {
            match c {
                '0'..='9' => {
                    let d = c as usize - '0' as usize;
                    let v = cur.unwrap_or(0);
                    if v > MAX_DEGREE {
                        return Err(bad(pos, "point too large"));
                    }
                    cur = Some(v * 10 + d);
                    cur_pos = pos;
                }
                ',' => match cur.take() {
                    Some(v) => points.push(v),
                    None => return Err(bad(pos.min(cur_pos + 1), "empty point")),
                },
                _ => return Err(bad(pos, "unexpected character in cycle")),
            }
        }
        Ok(points)
    } else {
        body.iter()
            .map(|&(pos, c)| match c {
                '0'..='9' => Ok(c as usize - '0' as usize),
                _ => Err(bad(pos, "unexpected character in cycle")),
            })
            .collect()
    }
}

/// Canonical cycle notation: cycles sorted by smallest point, each rotated to
/// start there, identity written `e`. Degrees above 9 separate points with
/// commas so the output parses back unambiguously.
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "e".to_string();
    }
    let wide = p.degree() > 9;
    let mut s = String::new();
    for cyc in cycles {
        s.push('(');
        for (k, pt) in cyc.iter().enumerate() {
            if wide && k > 0 {
                s.push(',');
            }
            s.push_str(&(pt + 1).to_string());
        }
        s.push(')');
    }
    s
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", format_cycles(self), self.degree())
    }
}
