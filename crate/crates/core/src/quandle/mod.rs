//! Finite racks and quandles as explicit operation tables.

mod alexander;
mod format;
mod perm;

pub use alexander::{alexander, LaurentPolynomial};
pub use format::{parse_quandle, write_quandle, QuandleFile};
pub use perm::{conjugation, conjugation_closure, Permutation};

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Elements are always the canonical integers `0..n`.
pub type Element = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomMode {
    Quandle,
    Rack,
}

/// One failed instance of an axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomViolation {
    /// `a ∗ a ≠ a`
    Idempotency { a: Element },
    /// `a ∗ b = a' ∗ b` with `a ≠ a'`
    RightInvertibility { b: Element, a: Element, a_prime: Element },
    /// `(a ∗ b) ∗ c ≠ (a ∗ c) ∗ (b ∗ c)`
    SelfDistributivity { a: Element, b: Element, c: Element },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Idempotency { a } => write!(f, "idempotency fails at a={a}"),
            AxiomViolation::RightInvertibility { b, a, a_prime } => write!(
                f,
                "right-invertibility fails at b={b}: {a}*{b} = {a_prime}*{b}"
            ),
            AxiomViolation::SelfDistributivity { a, b, c } => {
                write!(f, "self-distributivity fails at (a,b,c)=({a},{b},{c})")
            }
        }
    }
}

/// Outcome of a structural check: ok iff no violations were found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport<V> {
    pub violations: Vec<V>,
}

impl<V> ValidationReport<V> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<V> Default for ValidationReport<V> {
    fn default() -> Self {
        ValidationReport { violations: Vec::new() }
    }
}

fn check_shape(rows: &[Vec<Element>]) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    for (a, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((b, x)) = row.iter().enumerate().find(|(_, &x)| x >= n) {
            return Err(Error::MalformedTable(format!(
                "entry {a}*{b} = {x} is out of range 0..{n}"
            )));
        }
    }
    Ok(n)
}

/// Checks the quandle (or rack) axioms on a square table, listing every
/// violated instance.
pub fn verify_axioms(
    rows: &[Vec<Element>],
    mode: AxiomMode,
) -> Result<ValidationReport<AxiomViolation>> {
    let n = check_shape(rows)?;
    let op = |a: usize, b: usize| rows[a][b];
    let mut violations = Vec::new();
    if mode == AxiomMode::Quandle {
        for a in 0..n {
            if op(a, a) != a {
                violations.push(AxiomViolation::Idempotency { a });
            }
        }
    }
    for b in 0..n {
        let mut seen: Vec<Option<Element>> = vec![None; n];
        for a in 0..n {
            let x = op(a, b);
            match seen[x] {
                Some(first) => violations.push(AxiomViolation::RightInvertibility {
                    b,
                    a: first,
                    a_prime: a,
                }),
                None => seen[x] = Some(a),
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if op(op(a, b), c) != op(op(a, c), op(b, c)) {
                    violations.push(AxiomViolation::SelfDistributivity { a, b, c });
                }
            }
        }
    }
    Ok(ValidationReport { violations })
}

/// A finite rack: right-invertible and self-distributive, idempotency optional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RackTable {
    n: usize,
    table: Vec<Element>,
    // inv[a * n + b] = c with c ∗ b = a
    inv: Vec<Element>,
    labels: Option<Vec<String>>,
    idempotent: bool,
}

impl RackTable {
    pub fn new(rows: Vec<Vec<Element>>) -> Result<Self> {
        let report = verify_axioms(&rows, AxiomMode::Rack)?;
        if let Some(v) = report.violations.first() {
            return Err(Error::domain(format!("not a rack: {v}")));
        }
        Ok(Self::from_valid(rows))
    }

    fn from_valid(rows: Vec<Vec<Element>>) -> Self {
        let n = rows.len();
        let table: Vec<Element> = rows.into_iter().flatten().collect();
        let mut inv = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                inv[table[a * n + b] * n + b] = a;
            }
        }
        let idempotent = (0..n).all(|a| table[a * n + a] == a);
        RackTable {
            n,
            table,
            inv,
            labels: None,
            idempotent,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::domain(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    /// `a ∗ b`
    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table[a * self.n + b]
    }

    /// The unique `c` with `c ∗ b = a`.
    #[inline]
    pub fn op_inv(&self, a: Element, b: Element) -> Element {
        self.inv[a * self.n + b]
    }

    pub fn is_quandle(&self) -> bool {
        self.idempotent
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Element with the given label or decimal index.
    pub fn element(&self, token: &str) -> Option<Element> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|s| s == token) {
                return Some(i);
            }
        }
        token.parse().ok().filter(|&i: &Element| i < self.n)
    }

    /// Hash of the operation table only (labels excluded).
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.n.hash(&mut h);
        self.table.hash(&mut h);
        h.finish()
    }

    pub fn check_element(&self, a: Element) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "element {a} out of range 0..{}",
                self.n
            )))
        }
    }

    /// `S(b)` as a permutation in one-line form: `a ↦ a ∗ b`.
    pub fn inner_symmetry(&self, b: Element) -> Result<Vec<Element>> {
        self.check_element(b)?;
        Ok((0..self.n).map(|a| self.op(a, b)).collect())
    }

    /// `a S(b₁)^{ε₁} ⋯ S(b_k)^{ε_k}`, applied left to right.
    pub fn act_word(&self, a: Element, word: &[(Element, i8)]) -> Result<Element> {
        self.check_element(a)?;
        let mut x = a;
        for &(b, eps) in word {
            self.check_element(b)?;
            x = match eps {
                1 => self.op(x, b),
                -1 => self.op_inv(x, b),
                _ => return Err(Error::domain(format!("exponent {eps} is not ±1"))),
            };
        }
        Ok(x)
    }

    /// Orbits of the inner automorphism group, each sorted, ordered by their
    /// smallest element.
    pub fn orbits(&self) -> Vec<Vec<Element>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..self.n {
            for b in 0..self.n {
                let (x, y) = (find(&mut parent, a), find(&mut parent, self.op(a, b)));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let mut groups: Vec<Vec<Element>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for a in 0..self.n {
            let r = find(&mut parent, a);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(a);
        }
        groups
    }
}

/// A finite quandle: a rack whose table is also idempotent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteQuandle(RackTable);

impl FiniteQuandle {
    pub fn new(rows: Vec<Vec<Element>>) -> Result<Self> {
        let report = verify_axioms(&rows, AxiomMode::Quandle)?;
        if let Some(v) = report.violations.first() {
            return Err(Error::domain(format!("not a quandle: {v}")));
        }
        Ok(FiniteQuandle(RackTable::from_valid(rows)))
    }

    pub fn from_rack(rack: RackTable) -> Result<Self> {
        if !rack.is_quandle() {
            return Err(Error::domain("rack is not idempotent"));
        }
        Ok(FiniteQuandle(rack))
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Self> {
        Ok(FiniteQuandle(self.0.with_labels(labels)?))
    }

    pub fn as_rack(&self) -> &RackTable {
        &self.0
    }

    pub fn into_rack(self) -> RackTable {
        self.0
    }
}

impl Deref for FiniteQuandle {
    type Target = RackTable;

    fn deref(&self) -> &RackTable {
        &self.0
    }
}

/// The dihedral quandle `R_n` on `Z_n`: `i ∗ j = 2j − i mod n`.
pub fn dihedral(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::domain("dihedral quandle needs n >= 1"));
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| (2 * j + n - i) % n).collect())
        .collect();
    FiniteQuandle::new(rows)
}

/// The trivial quandle `T_n`: `a ∗ b = a`.
pub fn trivial(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::domain("trivial quandle needs n >= 1"));
    }
    FiniteQuandle::new((0..n).map(|a| vec![a; n]).collect())
}

/// A map between quandles that preserves the operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleHom {
    source: FiniteQuandle,
    target: FiniteQuandle,
    map: Vec<Element>,
}

fn check_map_shape(map: &[Element], source: &RackTable, target: &RackTable) -> Result<()> {
    if map.len() != source.size() {
        return Err(Error::domain(format!(
            "map has {} entries, source has {} elements",
            map.len(),
            source.size()
        )));
    }
    if let Some(&x) = map.iter().find(|&&x| x >= target.size()) {
        return Err(Error::domain(format!(
            "image {x} out of range 0..{}",
            target.size()
        )));
    }
    Ok(())
}

/// Pairs `(a, b)` where `f(a ∗ b) ≠ f(a) ∗ f(b)`.
pub fn check_hom(
    map: &[Element],
    source: &RackTable,
    target: &RackTable,
) -> Result<ValidationReport<(Element, Element)>> {
    check_map_shape(map, source, target)?;
    let mut violations = Vec::new();
    for a in 0..source.size() {
        for b in 0..source.size() {
            if map[source.op(a, b)] != target.op(map[a], map[b]) {
                violations.push((a, b));
            }
        }
    }
    Ok(ValidationReport { violations })
}

impl QuandleHom {
    pub fn new(source: FiniteQuandle, target: FiniteQuandle, map: Vec<Element>) -> Result<Self> {
        let report = check_hom(&map, &source, &target)?;
        if let Some((a, b)) = report.violations.first() {
            return Err(Error::Precondition(format!(
                "not a homomorphism: f({a}*{b}) != f({a})*f({b})"
            )));
        }
        Ok(QuandleHom { source, target, map })
    }

    pub fn identity(q: &FiniteQuandle) -> Self {
        QuandleHom {
            source: q.clone(),
            target: q.clone(),
            map: (0..q.size()).collect(),
        }
    }

    /// The constant map onto `x`; a homomorphism because `x ∗ x = x`.
    pub fn constant(source: &FiniteQuandle, target: &FiniteQuandle, x: Element) -> Result<Self> {
        target.check_element(x)?;
        Ok(QuandleHom {
            source: source.clone(),
            target: target.clone(),
            map: vec![x; source.size()],
        })
    }

    pub fn source(&self) -> &FiniteQuandle {
        &self.source
    }

    pub fn target(&self) -> &FiniteQuandle {
        &self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, a: Element) -> Element {
        self.map[a]
    }

    /// `then ∘ self`
    pub fn then(&self, then: &QuandleHom) -> Result<QuandleHom> {
        if then.source != self.target {
            return Err(Error::domain("composition: target and source differ"));
        }
        Ok(QuandleHom {
            source: self.source.clone(),
            target: then.target.clone(),
            map: self.map.iter().map(|&a| then.map[a]).collect(),
        })
    }
}
