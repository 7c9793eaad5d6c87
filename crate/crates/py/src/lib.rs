//! Python module `qhom`: quandles, chains, homology, the long exact sequence
//! and colored diagrams.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qhom_core::catalog;
use qhom_core::chains::{self, parse_chain, write_chain, Variant};
use qhom_core::diagrams::{
    enumerate_colorings, extract_chain, fundamental_presentation, realize_two_cycle, Coloring,
    Diagram1,
};
use qhom_core::homology::{self as hom, Complex, MapSummary};
use qhom_core::intlin::{smith_normal_form, IntMatrix};
use qhom_core::quandle::{verify_axioms, AxiomMode, Element, FiniteQuandle, QuandleHom};

create_exception!(qhom, QhomError, PyException, "Invalid input to a qhom operation.");
create_exception!(qhom, PreconditionError, QhomError, "A mathematical precondition failed.");

fn to_py(e: qhom_core::Error) -> PyErr {
    match e {
        qhom_core::Error::Precondition(_) => PreconditionError::new_err(e.to_string()),
        other => QhomError::new_err(other.to_string()),
    }
}

fn variant(v: &str) -> PyResult<Variant> {
    v.parse().map_err(to_py)
}

/// A finite quandle given by its operation table: `table[a][b] = a * b`.
#[pyclass(module = "qhom", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Quandle {
    inner: FiniteQuandle,
}

#[pymethods]
impl Quandle {
    #[new]
    #[pyo3(signature = (table, labels=None))]
    fn new(table: Vec<Vec<Element>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let mut q = FiniteQuandle::new(table).map_err(to_py)?;
        if let Some(l) = labels {
            q = q.with_labels(l).map_err(to_py)?;
        }
        Ok(Quandle { inner: q })
    }

    /// Built-in quandle by key, e.g. `dihedral:3`, `qs6`, `alexander:3:T+1`.
    #[staticmethod]
    fn catalog(key: &str) -> PyResult<Self> {
        Ok(Quandle {
            inner: catalog::lookup(key).map_err(to_py)?,
        })
    }

    /// Keys of the bundled catalog.
    #[staticmethod]
    fn bundled() -> Vec<String> {
        catalog::bundled()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        (0..self.inner.size()).map(|a| self.inner.label(a)).collect()
    }

    fn table(&self) -> Vec<Vec<Element>> {
        self.inner.rows()
    }

    fn op(&self, a: Element, b: Element) -> PyResult<Element> {
        self.inner.check_element(a).map_err(to_py)?;
        self.inner.check_element(b).map_err(to_py)?;
        Ok(self.inner.op(a, b))
    }

    fn element(&self, label: &str) -> PyResult<Element> {
        self.inner
            .element(label)
            .ok_or_else(|| QhomError::new_err(format!("{label} is not an element")))
    }

    fn orbits(&self) -> Vec<Vec<Element>> {
        self.inner.orbits()
    }

    /// Violated axiom instances, empty for a quandle.
    fn verify(&self) -> PyResult<Vec<String>> {
        let r = verify_axioms(&self.inner.rows(), AxiomMode::Quandle).map_err(to_py)?;
        Ok(r.violations.iter().map(ToString::to_string).collect())
    }

    fn __eq__(&self, other: &Quandle) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Quandle(size={}, labels={:?})", self.inner.size(), self.labels())
    }
}

/// Integer combination of tuples of quandle elements.
#[pyclass(module = "qhom", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Chain {
    inner: chains::Chain,
}

#[pymethods]
impl Chain {
    /// From `(coefficient, tuple)` pairs of one common degree.
    #[new]
    #[pyo3(signature = (terms, degree=None))]
    fn new(terms: Vec<(BigInt, Vec<Element>)>, degree: Option<usize>) -> PyResult<Self> {
        let degree = match (degree, terms.first()) {
            (Some(d), _) => d,
            (None, Some((_, t))) => t.len(),
            (None, None) => return Err(QhomError::new_err("degree of an empty chain must be given")),
        };
        Ok(Chain {
            inner: chains::Chain::from_terms(degree, terms).map_err(to_py)?,
        })
    }

    /// Parses the chain file format: `<coeff> <x1> … <xn>` per line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Chain {
            inner: parse_chain(text).map_err(to_py)?,
        })
    }

    fn to_text(&self) -> String {
        write_chain(&self.inner)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn terms(&self) -> Vec<(BigInt, Vec<Element>)> {
        self.inner.terms().map(|(t, k)| (k.clone(), t.clone())).collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Rendering with element labels, e.g. `(α,β) - (β,α)`.
    fn display(&self, q: &Quandle) -> String {
        self.inner.display_with(&q.inner)
    }

    fn __add__(&self, other: &Chain) -> PyResult<Chain> {
        self.combine(other, 1)
    }

    fn __sub__(&self, other: &Chain) -> PyResult<Chain> {
        self.combine(other, -1)
    }

    fn __mul__(&self, k: BigInt) -> Chain {
        Chain {
            inner: self.inner.scaled(&k),
        }
    }

    fn __rmul__(&self, k: BigInt) -> Chain {
        self.__mul__(k)
    }

    fn __repr__(&self) -> String {
        format!("Chain({:?})", self.terms())
    }
}

impl Chain {
    fn combine(&self, other: &Chain, sign: i64) -> PyResult<Chain> {
        let (a, b) = (&self.inner, &other.inner);
        if a.degree() != b.degree() && !a.is_zero() && !b.is_zero() {
            return Err(QhomError::new_err("chains of different degrees"));
        }
        let mut c = a.clone();
        c.add_scaled(b, &BigInt::from(sign));
        Ok(Chain { inner: c })
    }
}

/// `H^v_n` as free rank, torsion coefficients and representative cycles.
#[pyclass(module = "qhom", frozen)]
struct HomologyGroup {
    #[pyo3(get)]
    free_rank: usize,
    #[pyo3(get)]
    torsion: Vec<BigInt>,
    #[pyo3(get)]
    generators: Vec<Chain>,
    text: String,
}

#[pymethods]
impl HomologyGroup {
    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("HomologyGroup({})", self.text)
    }
}

fn wrap(c: chains::Chain) -> Chain {
    Chain { inner: c }
}

#[pyfunction]
#[pyo3(signature = (q, chain, variant="R"))]
fn boundary(q: &Quandle, chain: &Chain, variant: &str) -> PyResult<Chain> {
    let v = self::variant(variant)?;
    chain.inner.check_in(&q.inner).map_err(to_py)?;
    let c = chains::project(&chain.inner, v).map_err(to_py)?;
    Ok(wrap(chains::project(&chains::boundary(&q.inner, &c), v).map_err(to_py)?))
}

#[pyfunction]
fn homology(q: &Quandle, variant: &str, n: usize) -> PyResult<HomologyGroup> {
    let h = hom::homology(&q.inner, self::variant(variant)?, n).map_err(to_py)?;
    Ok(HomologyGroup {
        free_rank: h.free_rank(),
        torsion: h.torsion().to_vec(),
        generators: h.generators().iter().cloned().map(wrap).collect(),
        text: h.to_string(),
    })
}

#[pyfunction]
#[pyo3(signature = (q, chain, variant="Q"))]
fn is_cycle(q: &Quandle, chain: &Chain, variant: &str) -> PyResult<bool> {
    hom::is_cycle(&q.inner, &chain.inner, self::variant(variant)?).map_err(to_py)
}

/// A witness `nu` with `boundary(nu) == chain`, or `None`.
#[pyfunction]
#[pyo3(signature = (q, chain, variant="Q"))]
fn is_boundary(q: &Quandle, chain: &Chain, variant: &str) -> PyResult<Option<Chain>> {
    Ok(hom::is_boundary(&q.inner, &chain.inner, self::variant(variant)?)
        .map_err(to_py)?
        .map(wrap))
}

/// `(free_part, torsion_part)` coordinates of the class of a cycle.
#[pyfunction]
#[pyo3(signature = (q, chain, variant="Q"))]
fn class_of(q: &Quandle, chain: &Chain, variant: &str) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
    let k = hom::class_of(&q.inner, &chain.inner, self::variant(variant)?).map_err(to_py)?;
    Ok((k.free_part, k.torsion_part))
}

fn summary_dict<'py>(py: Python<'py>, m: &MapSummary) -> PyResult<Bound<'py, PyDict>> {
    let parse = |s: &String| s.parse::<BigInt>().expect("integer");
    let d = PyDict::new(py);
    let matrix: Vec<Vec<BigInt>> = m.matrix.iter().map(|r| r.iter().map(parse).collect()).collect();
    d.set_item("matrix", matrix)?;
    d.set_item("source_moduli", m.source_moduli.iter().map(parse).collect::<Vec<_>>())?;
    d.set_item("target_moduli", m.target_moduli.iter().map(parse).collect::<Vec<_>>())?;
    d.set_item("zero", m.zero)?;
    d.set_item("surjective", m.surjective)?;
    d.set_item("injective", m.injective)?;
    Ok(d)
}

/// Map induced on `H^v_n` by the homomorphism `images[a] = f(a)`.
#[pyfunction]
fn induced_map<'py>(
    py: Python<'py>,
    source: &Quandle,
    target: &Quandle,
    images: Vec<Element>,
    variant: &str,
    n: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let f = QuandleHom::new(source.inner.clone(), target.inner.clone(), images).map_err(to_py)?;
    let m = hom::induced_map(&f, self::variant(variant)?, n).map_err(to_py)?;
    summary_dict(py, &m.summary())
}

/// Connecting map `H^Q_n → H^D_{n−1}`.
#[pyfunction]
fn les_boundary_map<'py>(py: Python<'py>, q: &Quandle, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let m = hom::les_boundary_map(&q.inner, n).map_err(to_py)?;
    summary_dict(py, &m.summary())
}

/// Exactness of `H^D_n → H^R_n → H^Q_n → H^D_{n−1}` at the middle terms.
#[pyfunction]
fn les_check<'py>(py: Python<'py>, q: &Quandle, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = hom::les_check(&q.inner, n).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("degree", r.degree)?;
    d.set_item("groups", r.groups.to_vec())?;
    d.set_item("inclusion", summary_dict(py, &r.inclusion)?)?;
    d.set_item("quotient", summary_dict(py, &r.quotient)?)?;
    d.set_item("connecting", summary_dict(py, &r.connecting)?)?;
    d.set_item("exact_at_rack", r.exact_at_rack)?;
    d.set_item("exact_at_quandle", r.exact_at_quandle)?;
    Ok(d)
}

/// `(U, S, V)` with `U·A·V = S` in Smith normal form.
#[pyfunction]
fn smith(a: Vec<Vec<BigInt>>) -> PyResult<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)> {
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != cols) {
        return Err(QhomError::new_err("ragged matrix"));
    }
    let m = IntMatrix::from_fn(a.len(), cols, |i, j| a[i][j].clone());
    let d = smith_normal_form(&m);
    let rows = |m: &IntMatrix| (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    Ok((rows(&d.u), rows(&d.s), rows(&d.v)))
}

/// Crossing diagram in the text format with `regions:`, `edges:`,
/// `crossings:` and `endpoints:` sections.
#[pyclass(module = "qhom", frozen)]
struct Diagram {
    inner: Diagram1,
}

#[pymethods]
impl Diagram {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Diagram {
            inner: Diagram1::parse(text).map_err(to_py)?,
        })
    }

    /// A bundled fixture by file name, e.g. `fig3.adk`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let text = catalog::fixtures::get(name)
            .ok_or_else(|| QhomError::new_err(format!("no fixture {name}")))?;
        Self::parse(text)
    }

    fn to_text(&self) -> String {
        self.inner.to_string()
    }

    #[getter]
    fn edges(&self) -> Vec<String> {
        self.inner.edges.iter().map(|e| e.name.clone()).collect()
    }

    #[getter]
    fn crossings(&self) -> usize {
        self.inner.crossings.len()
    }

    fn validate(&self) -> Vec<String> {
        self.inner.validate().violations
    }

    /// Every coloring, as edge colors in edge order.
    fn colorings(&self, q: &Quandle) -> PyResult<Vec<Vec<Element>>> {
        Ok(enumerate_colorings(&self.inner, &q.inner)
            .map_err(to_py)?
            .into_iter()
            .map(|c| c.edges)
            .collect())
    }

    fn presentation(&self) -> PyResult<String> {
        Ok(fundamental_presentation(&self.inner).map_err(to_py)?.to_string())
    }

    /// The 2-chain `Σ sign·(source, over)` of a coloring of a closed diagram.
    fn extract(&self, q: &Quandle, edge_colors: Vec<Element>) -> PyResult<Chain> {
        let c = Coloring { edges: edge_colors };
        Ok(wrap(extract_chain(&self.inner, &q.inner, &c).map_err(to_py)?))
    }
}

/// A colored diagram representing the 2-cycle: `(diagram, edge_colors)`.
#[pyfunction]
#[pyo3(signature = (q, chain, variant="Q"))]
fn realize(q: &Quandle, chain: &Chain, variant: &str) -> PyResult<(Diagram, Vec<Element>)> {
    let (d, c) = realize_two_cycle(&q.inner, &chain.inner, self::variant(variant)?).map_err(to_py)?;
    Ok((Diagram { inner: d }, c.edges))
}

/// Number of basis elements of `C^v_n`.
#[pyfunction]
fn dimension(q: &Quandle, variant: &str, n: usize) -> PyResult<usize> {
    Ok(Complex::shared(&q.inner, self::variant(variant)?)
        .map_err(to_py)?
        .dimension(n))
}

#[pymodule]
fn qhom(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QhomError", m.py().get_type::<QhomError>())?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add_class::<Quandle>()?;
    m.add_class::<Chain>()?;
    m.add_class::<HomologyGroup>()?;
    m.add_class::<Diagram>()?;
    m.add_function(wrap_pyfunction!(boundary, m)?)?;
    m.add_function(wrap_pyfunction!(homology, m)?)?;
    m.add_function(wrap_pyfunction!(is_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(is_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(class_of, m)?)?;
    m.add_function(wrap_pyfunction!(induced_map, m)?)?;
    m.add_function(wrap_pyfunction!(les_boundary_map, m)?)?;
    m.add_function(wrap_pyfunction!(les_check, m)?)?;
    m.add_function(wrap_pyfunction!(smith, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(dimension, m)?)?;
    Ok(())
}
