//! Free abelian chain groups on element tuples and the rack boundary map.
//!
//! `C^R_n` is spanned by all n-tuples, `C^D_n` by tuples with an adjacent
//! repeat, and `C^Q_n = C^R_n / C^D_n` is represented by chains supported on
//! nondegenerate tuples.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::quandle::{Element, RackTable};

pub type Tuple = Vec<Element>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// rack complex
    R,
    /// degenerate subcomplex
    D,
    /// quandle quotient
    Q,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::R, Variant::D, Variant::Q];

    fn check_structure(self, rack: &RackTable) -> Result<()> {
        if self != Variant::R && !rack.is_quandle() {
            return Err(Error::Variant(format!(
                "variant {self} needs a quandle; this rack is not idempotent"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::R => "R",
            Variant::D => "D",
            Variant::Q => "Q",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(Variant::R),
            "D" | "d" => Ok(Variant::D),
            "Q" | "q" => Ok(Variant::Q),
            _ => Err(Error::domain(format!("unknown variant {s:?}; expected R, D or Q"))),
        }
    }
}

/// True iff some adjacent pair of entries is equal. Degree-1 tuples are never
/// degenerate.
pub fn is_degenerate(t: &[Element]) -> bool {
    t.windows(2).any(|w| w[0] == w[1])
}

/// Finite integer combination of tuples of one degree. Zero coefficients are
/// never stored; terms iterate in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Tuple, BigInt>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A single tuple with coefficient one.
    pub fn generator(t: Tuple) -> Self {
        let mut c = Chain::zero(t.len());
        c.add_term(t, BigInt::one());
        c
    }

    /// Sums `(coeff, tuple)` pairs; all tuples must have the given degree.
    pub fn from_terms<I, C>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (C, Tuple)>,
        C: Into<BigInt>,
    {
        let mut c = Chain::zero(degree);
        for (k, t) in terms {
            if t.len() != degree {
                return Err(Error::domain(format!(
                    "tuple {t:?} does not have degree {degree}"
                )));
            }
            c.add_term(t, k.into());
        }
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tuple, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &[Element]) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, t: Tuple, k: BigInt) {
        debug_assert_eq!(t.len(), self.degree);
        if k.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self + k·other`
    pub fn add_scaled(&mut self, other: &Chain, k: &BigInt) {
        if other.is_zero() || k.is_zero() {
            return;
        }
        assert_eq!(self.degree, other.degree, "adding chains of different degrees");
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c * k);
        }
    }

    pub fn plus(&self, other: &Chain) -> Chain {
        let mut c = self.clone();
        c.add_scaled(other, &BigInt::one());
        c
    }

    pub fn minus(&self, other: &Chain) -> Chain {
        let mut c = self.clone();
        c.add_scaled(other, &-BigInt::one());
        c
    }

    pub fn scaled(&self, k: &BigInt) -> Chain {
        let mut c = Chain::zero(self.degree);
        c.add_scaled(self, k);
        c
    }

    pub fn is_degenerate_support(&self) -> bool {
        self.terms.keys().all(|t| is_degenerate(t))
    }

    /// Checks every entry against the rack size.
    pub fn check_in(&self, rack: &RackTable) -> Result<()> {
        for t in self.terms.keys() {
            if let Some(&x) = t.iter().find(|&&x| x >= rack.size()) {
                return Err(Error::domain(format!(
                    "tuple {t:?} has entry {x} outside 0..{}",
                    rack.size()
                )));
            }
        }
        Ok(())
    }

    /// Human-readable form using the rack's labels, e.g. `(α,β) + (β,γ) - (β,α)`.
    pub fn display_with(&self, rack: &RackTable) -> String {
        self.render(|x| rack.label(x))
    }

    fn render(&self, label: impl Fn(Element) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (t, k)) in self.terms.iter().enumerate() {
            let neg = k.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = k.abs();
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            let cells: Vec<String> = t.iter().map(|&x| label(x)).collect();
            out.push('(');
            out.push_str(&cells.join(","));
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|x| x.to_string()))
    }
}

/// The rack boundary, extended linearly:
/// `∂(x₁,…,x_n) = Σ_{i=2}^{n} (−1)^i [(…x̂ᵢ…) − (x₁∗xᵢ,…,x_{i−1}∗xᵢ,x_{i+1},…,x_n)]`,
/// and zero in degrees ≤ 1.
pub fn boundary(rack: &RackTable, c: &Chain) -> Chain {
    let n = c.degree();
    let mut out = Chain::zero(n.saturating_sub(1));
    if n <= 1 {
        return out;
    }
    for (t, k) in c.terms() {
        for i in 1..n {
            // 0-based i is position i+1; sign (−1)^{i+1}
            let k = if i % 2 == 1 { k.clone() } else { -k.clone() };
            let xi = t[i];
            let mut omit = Vec::with_capacity(n - 1);
            let mut acted = Vec::with_capacity(n - 1);
            for (j, &x) in t.iter().enumerate() {
                match j.cmp(&i) {
                    std::cmp::Ordering::Less => {
                        omit.push(x);
                        acted.push(rack.op(x, xi));
                    }
                    std::cmp::Ordering::Greater => {
                        omit.push(x);
                        acted.push(x);
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
            out.add_term(omit, k.clone());
            out.add_term(acted, -k);
        }
    }
    out
}

/// Applies a map on elements to every entry of every tuple.
pub fn map_chain(map: &[Element], c: &Chain) -> Chain {
    let mut out = Chain::zero(c.degree());
    for (t, k) in c.terms() {
        out.add_term(t.iter().map(|&x| map[x]).collect(), k.clone());
    }
    out
}

/// Canonical representative of `c` in the given variant: unchanged for R and
/// D (D requires degenerate support), degenerate terms dropped for Q.
pub fn project(c: &Chain, v: Variant) -> Result<Chain> {
    match v {
        Variant::R => Ok(c.clone()),
        Variant::D => {
            if let Some(t) = c.terms.keys().find(|t| !is_degenerate(t)) {
                return Err(Error::Variant(format!(
                    "chain has nondegenerate term {t:?}, not in C^D"
                )));
            }
            Ok(c.clone())
        }
        Variant::Q => Ok(Chain {
            degree: c.degree,
            terms: c
                .terms
                .iter()
                .filter(|(t, _)| !is_degenerate(t))
                .map(|(t, k)| (t.clone(), k.clone()))
                .collect(),
        }),
    }
}

/// Ordered basis of `C^v_n` with coordinate maps.
#[derive(Clone, Debug)]
pub struct Basis {
    variant: Variant,
    degree: usize,
    tuples: Vec<Tuple>,
    index: HashMap<Tuple, usize>,
}

impl Basis {
    pub fn new(rack: &RackTable, v: Variant, n: usize) -> Result<Self> {
        let tuples = basis(rack, v, n)?;
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Ok(Basis {
            variant: v,
            degree: n,
            tuples,
            index,
        })
    }

    /// The zero basis used below degree 1.
    pub fn empty(v: Variant) -> Self {
        Basis {
            variant: v,
            degree: 0,
            tuples: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Tuple] {
        &self.tuples
    }

    pub fn position(&self, t: &[Element]) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Coordinates of `c` after projecting it to the basis variant.
    pub fn coordinates(&self, c: &Chain) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.len()];
        if c.is_zero() {
            return Ok(out);
        }
        if c.degree() != self.degree {
            return Err(Error::domain(format!(
                "chain of degree {} against basis of degree {}",
                c.degree(),
                self.degree
            )));
        }
        let c = project(c, self.variant)?;
        for (t, k) in c.terms() {
            let i = self.position(t).ok_or_else(|| {
                Error::domain(format!("tuple {t:?} is not a basis element"))
            })?;
            out[i] = k.clone();
        }
        Ok(out)
    }

    pub fn chain(&self, coords: &[BigInt]) -> Chain {
        assert_eq!(coords.len(), self.len());
        let mut c = Chain::zero(self.degree);
        for (t, k) in self.tuples.iter().zip(coords) {
            c.add_term(t.clone(), k.clone());
        }
        c
    }
}

/// Basis tuples of `C^v_n` in lexicographic order.
pub fn basis(rack: &RackTable, v: Variant, n: usize) -> Result<Vec<Tuple>> {
    if n == 0 {
        return Err(Error::domain("chain degree must be at least 1"));
    }
    v.check_structure(rack)?;
    let q = rack.size();
    let total = q
        .checked_pow(n as u32)
        .ok_or_else(|| Error::domain("chain group too large"))?;
    let mut out = Vec::new();
    let mut t = vec![0; n];
    for _ in 0..total {
        let keep = match v {
            Variant::R => true,
            Variant::D => is_degenerate(&t),
            Variant::Q => !is_degenerate(&t),
        };
        if keep {
            out.push(t.clone());
        }
        // odometer, last entry fastest
        for slot in t.iter_mut().rev() {
            *slot += 1;
            if *slot < q {
                break;
            }
            *slot = 0;
        }
    }
    Ok(out)
}

/// Matrix of `∂_n : C^v_n → C^v_{n−1}` in the lexicographic bases. For Q the
/// boundary is taken in `C^R` and degenerate terms are dropped. Degree 1 maps
/// to the zero group, so that matrix has no rows.
pub fn boundary_matrix(rack: &RackTable, v: Variant, n: usize) -> Result<IntMatrix> {
    let cols = Basis::new(rack, v, n)?;
    let rows = if n >= 2 {
        Basis::new(rack, v, n - 1)?
    } else {
        Basis::empty(v)
    };
    boundary_matrix_in(rack, &rows, &cols)
}

pub(crate) fn boundary_matrix_in(rack: &RackTable, rows: &Basis, cols: &Basis) -> Result<IntMatrix> {
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    if rows.is_empty() {
        return Ok(m);
    }
    for (j, t) in cols.tuples().iter().enumerate() {
        let b = boundary(rack, &Chain::generator(t.clone()));
        for (i, k) in rows.coordinates(&b)?.into_iter().enumerate() {
            if !k.is_zero() {
                m[(i, j)] = k;
            }
        }
    }
    Ok(m)
}

/// Chain file: one term per line, `<coeff> <x1> … <xk>`. Degree comes from the
/// line width; `#` comments and blank lines are skipped.
pub fn parse_chain(text: &str) -> Result<Chain> {
    let mut terms: Vec<(BigInt, Tuple)> = Vec::new();
    let mut degree: Option<usize> = None;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let no = i + 1;
        let mut tokens = line.split_whitespace();
        let coeff: BigInt = tokens
            .next()
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(no, "bad coefficient"))?;
        let t = tokens
            .map(|x| {
                x.parse::<Element>()
                    .map_err(|_| Error::parse(no, format!("bad element {x:?}")))
            })
            .collect::<Result<Tuple>>()?;
        if t.is_empty() {
            return Err(Error::parse(no, "term has no tuple"));
        }
        match degree {
            None => degree = Some(t.len()),
            Some(d) if d != t.len() => {
                return Err(Error::parse(
                    no,
                    format!("tuple of length {} in a chain of degree {d}", t.len()),
                ))
            }
            _ => {}
        }
        terms.push((coeff, t));
    }
    Chain::from_terms(degree.unwrap_or(0), terms)
}

pub fn write_chain(c: &Chain) -> String {
    let mut out = String::new();
    for (t, k) in c.terms() {
        out.push_str(&k.to_string());
        for x in t {
            out.push(' ');
            out.push_str(&x.to_string());
        }
        out.push('\n');
    }
    out
}
