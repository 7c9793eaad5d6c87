use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

use super::FiniteQuandle;

/// A permutation of `0..d` in one-line form: `p[i]` is the image of `i`.
///
/// Products read left to right, so `a·b` applies `a` first. Conjugation
/// `b⁻¹ab` therefore sends `x` to `b(a(b⁻¹(x)))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || std::mem::replace(&mut seen[x], true) {
                return Err(Error::domain(format!(
                    "{images:?} is not a permutation of 0..{d}"
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((0..d).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `b⁻¹ · self · b`
    pub fn conjugate_by(&self, b: &Permutation) -> Self {
        let binv = b.inverse();
        Permutation((0..self.degree()).map(|x| b.0[self.0[binv.0[x]]]).collect())
    }

    /// One-line notation with 1-based images, e.g. `2 3 4 1` for `(1234)`.
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let digits: Vec<String> = if tokens.len() == 1 && tokens[0].len() > 1 {
            tokens[0].chars().map(String::from).collect()
        } else {
            tokens.iter().map(|t| t.to_string()).collect()
        };
        let images = digits
            .iter()
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::domain(format!("bad permutation entry {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }

    /// Cycle notation on `1..=degree`, e.g. `(1234)` or `(12)(34)`.
    /// Multi-digit points need commas: `(1,10,3)`.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation(images));
        }
        for part in s.split(')') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let body = part
                .strip_prefix('(')
                .ok_or_else(|| Error::domain(format!("bad cycle notation {s:?}")))?;
            let points: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
            } else {
                body.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_string().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
            }
            .map_err(|_| Error::domain(format!("bad cycle notation {s:?}")))?;
            if points.iter().any(|&p| p == 0 || p > degree) {
                return Err(Error::domain(format!(
                    "cycle {part}) leaves 1..={degree}"
                )));
            }
            for w in 0..points.len() {
                images[points[w] - 1] = points[(w + 1) % points.len()] - 1;
            }
        }
        Self::new(images)
    }

    /// All permutations of `0..d` except the identity, in lexicographic order.
    pub fn all_non_identity(d: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (0..d)
            .permutations(d)
            .map(Permutation)
            .filter(|p| *p != Permutation::identity(d))
            .collect()
    }

    /// Cycle notation, 1-based, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let d = self.degree();
        let mut seen = vec![false; d];
        let sep = if d >= 10 { "," } else { "" };
        let mut out = String::new();
        for start in 0..d {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = self.0[x];
            }
            out.push('(');
            out.push_str(&cycle.join(sep));
            out.push(')');
        }
        if out.is_empty() {
            "()".into()
        } else {
            out
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// Closes `generators` under `a ∗ b = b⁻¹ab` and returns the conjugation
/// quandle on the closure, elements sorted lexicographically in one-line form
/// and labelled in cycle notation.
pub fn conjugation(generators: &[Permutation]) -> Result<FiniteQuandle> {
    let elements = conjugation_closure(generators)?;
    let index = |p: &Permutation| elements.binary_search(p).expect("closed set");
    let rows = elements
        .iter()
        .map(|a| elements.iter().map(|b| index(&a.conjugate_by(b))).collect())
        .collect();
    let labels = elements.iter().map(Permutation::cycle_string).collect();
    FiniteQuandle::new(rows)?.with_labels(labels)
}

/// The closure itself, sorted.
pub fn conjugation_closure(generators: &[Permutation]) -> Result<Vec<Permutation>> {
    let Some(first) = generators.first() else {
        return Err(Error::domain("no generators"));
    };
    if generators.iter().any(|p| p.degree() != first.degree()) {
        return Err(Error::domain("permutations of different degrees"));
    }
    let mut set: BTreeSet<Permutation> = generators.iter().cloned().collect();
    loop {
        let current: Vec<Permutation> = set.iter().cloned().collect();
        let before = set.len();
        for a in &current {
            for b in &current {
                set.insert(a.conjugate_by(b));
            }
        }
        if set.len() == before {
            return Ok(current);
        }
    }
}
