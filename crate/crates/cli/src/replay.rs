//! Reference computations re-run from scratch, each reported as pass or fail.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use qhom_core::catalog::{fixtures, small_quandles};
use qhom_core::chains::{boundary, boundary_matrix, parse_chain, project, Basis, Chain, Variant};
use qhom_core::diagrams::{
    enumerate_colorings, extract_chain, extract_chain0, extract_shadow_chain, parse_assignments,
    realize_two_cycle, shadow_extend, Coloring, Diagram0, Diagram1, ShadowColoring0,
};
use qhom_core::homology::{class_of, homology, induced_map, is_boundary, is_cycle, les_boundary_map, les_check};
use qhom_core::intlin::kernel_basis;
use qhom_core::quandle::{trivial, Element, FiniteQuandle, QuandleHom};

use crate::commands::Outcome;
use crate::error::exit;
use crate::inputs::Inputs;

const A: Element = 0;
const B: Element = 1;
const G: Element = 2;

type CheckResult = Result<String, String>;

struct Env<'a> {
    inputs: &'a Inputs,
    seed: u64,
}

impl Env<'_> {
    fn quandle(&self, key: &str) -> Result<FiniteQuandle, String> {
        self.inputs.quandle(key).map_err(|e| e.to_string())
    }
}

struct Check {
    id: &'static str,
    title: &'static str,
    run: fn(&Env) -> CheckResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn chain(terms: &[(i64, &[Element])]) -> Chain {
    let degree = terms[0].1.len();
    Chain::from_terms(degree, terms.iter().map(|(k, t)| (*k, t.to_vec()))).expect("chain literal")
}

fn group_is(env: &Env, key: &str, n: usize, expected: &str) -> CheckResult {
    let q = env.quandle(key)?;
    let h = homology(&q, Variant::Q, n).map_err(err)?;
    let got = h.to_string();
    ensure(got == expected, || format!("got {got}, expected {expected}"))?;
    Ok(got)
}

/// Certifies `c` as a Q-boundary by recomputing the boundary of the witness.
fn certified_boundary(q: &FiniteQuandle, c: &Chain) -> CheckResult {
    ensure(is_cycle(q, c, Variant::Q).map_err(err)?, || "not a Q-cycle".into())?;
    let nu = is_boundary(q, c, Variant::Q)
        .map_err(err)?
        .ok_or("no witness found")?;
    let image = project(&boundary(q, &nu), Variant::Q).map_err(err)?;
    ensure(image == *c, || "witness boundary differs".into())?;
    Ok(format!("witness with {} terms", nu.len()))
}

fn two_cycles_bound(env: &Env) -> CheckResult {
    let q = env.quandle("dihedral:3")?;
    let first = chain(&[(1, &[A, B]), (1, &[B, G]), (-1, &[B, A])]);
    let second = chain(&[(1, &[A, B]), (1, &[G, A]), (1, &[B, G])]);
    let a = certified_boundary(&q, &first)?;
    let b = certified_boundary(&q, &second)?;
    Ok(format!("{a}; {b}"))
}

fn three_cycle_generates(env: &Env) -> CheckResult {
    let q = env.quandle("dihedral:3")?;
    let c = chain(&[(1, &[A, B, G]), (1, &[A, G, A])]);
    ensure(is_cycle(&q, &c, Variant::Q).map_err(err)?, || "not a Q-cycle".into())?;
    let rack_boundary = boundary(&q, &c);
    let expected = chain(&[(1, &[A, A]), (-1, &[G, G])]);
    ensure(rack_boundary == expected, || {
        format!("rack boundary is {}", rack_boundary.display_with(&q))
    })?;
    ensure(is_boundary(&q, &c, Variant::Q).map_err(err)?.is_none(), || "is a boundary".into())?;
    let coords = class_of(&q, &c, Variant::Q).map_err(err)?;
    let three = BigInt::from(3);
    ensure(
        coords.free_part.is_empty()
            && coords.torsion_part.len() == 1
            && (&coords.torsion_part[0] % &three) != BigInt::from(0),
        || format!("class {:?}", coords.to_vec()),
    )?;
    Ok(format!("class {} in Z_3", coords.torsion_part[0]))
}

fn qs6_projection(env: &Env) -> Result<QuandleHom, String> {
    let qs6 = env.quandle("qs6")?;
    let r3 = env.quandle("dihedral:3")?;
    QuandleHom::new(qs6, r3, vec![0, 1, 1, 2, 0, 2]).map_err(err)
}

fn qs6_surjects(env: &Env) -> CheckResult {
    let m = induced_map(&qs6_projection(env)?, Variant::Q, 3).map_err(err)?;
    ensure(m.is_surjective(), || "not surjective".into())?;
    let s = m.summary();
    Ok(format!("Z_{} -> Z_{}, matrix {:?}", s.source_moduli.join(","), s.target_moduli.join(","), s.matrix))
}

fn connecting_maps_vanish(env: &Env) -> CheckResult {
    let r3 = env.quandle("dihedral:3")?;
    let mut cases: Vec<(String, FiniteQuandle, usize)> = vec![
        ("R_3".into(), r3.clone(), 3),
        ("R_3".into(), r3, 4),
        ("QS(5)".into(), env.quandle("qs5")?, 3),
    ];
    for n in 2..=4 {
        cases.push((format!("T_{n}"), trivial(n).map_err(err)?, 3));
    }
    for order in 1..=4 {
        for (k, q) in small_quandles(order).into_iter().enumerate() {
            cases.push((format!("small:{order}:{}", k + 1), q, 3));
        }
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(name, q, n)| match les_boundary_map(q, *n) {
            Ok(m) if m.is_zero() => None,
            Ok(_) => Some(format!("{name} n={n}: nonzero")),
            Err(e) => Some(format!("{name} n={n}: {e}")),
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} cases zero", cases.len()))
}

fn les_exact(env: &Env) -> CheckResult {
    let cases = [
        ("dihedral:3", env.quandle("dihedral:3")?),
        ("qs5", env.quandle("qs5")?),
        ("trivial:2", trivial(2).map_err(err)?),
        ("trivial:3", trivial(3).map_err(err)?),
    ];
    for (name, q) in &cases {
        for n in [2, 3] {
            let r = les_check(q, n).map_err(err)?;
            ensure(r.is_exact(), || format!("{name} n={n} not exact"))?;
        }
    }
    Ok("8 cases exact".into())
}

fn fixture_extraction(env: &Env) -> CheckResult {
    let q = env.quandle("dihedral:3")?;
    let d3 = Diagram1::parse(fixtures::FIG3_DIAGRAM).map_err(err)?;
    let pairs = parse_assignments(fixtures::FIG3_COLORING).map_err(err)?;
    let c3 = Coloring::from_assignments(&d3, &q, &pairs).map_err(err)?;
    let got = extract_chain(&d3, &q, &c3).map_err(err)?;
    ensure(got == parse_chain(fixtures::FIG3_CYCLE).map_err(err)?, || {
        format!("fig3 gives {}", got.display_with(&q))
    })?;
    let d7 = Diagram0::parse(fixtures::FIG7_DIAGRAM).map_err(err)?;
    let pairs = parse_assignments(fixtures::FIG7_COLORING).map_err(err)?;
    let s7 = ShadowColoring0::from_assignments(&d7, &q, &pairs).map_err(err)?;
    let got = extract_chain0(&d7, &q, &s7).map_err(err)?;
    ensure(got == parse_chain(fixtures::FIG7_CYCLE).map_err(err)?, || {
        format!("fig7 gives {}", got.display_with(&q))
    })?;
    Ok("fig3 and fig7 match".into())
}

/// A nonzero random combination of a kernel basis of `∂_2` in `C^Q`.
pub fn random_two_cycle(q: &FiniteQuandle, rng: &mut impl Rng) -> qhom_core::Result<Chain> {
    let k = kernel_basis(&boundary_matrix(q, Variant::Q, 2)?);
    let basis = Basis::new(q, Variant::Q, 2)?;
    if k.cols() == 0 {
        return Ok(Chain::zero(2));
    }
    loop {
        let coords: Vec<BigInt> = (0..k.cols()).map(|_| BigInt::from(rng.gen_range(-2..=2))).collect();
        let c = basis.chain(&k.mul_vec(&coords));
        if !c.is_zero() {
            return Ok(c);
        }
    }
}

fn round_trips(env: &Env) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(env.seed);
    let mut crossings = 0;
    for key in ["dihedral:3", "qs6"] {
        let q = env.quandle(key)?;
        for i in 0..25 {
            let c = random_two_cycle(&q, &mut rng).map_err(err)?;
            let (d, col) = realize_two_cycle(&q, &c, Variant::Q).map_err(err)?;
            let back = extract_chain(&d, &q, &col).map_err(err)?;
            ensure(back == c, || format!("{key} cycle {i} does not round-trip"))?;
            crossings += d.crossings.len();
        }
    }
    Ok(format!("50 cycles, {crossings} crossings"))
}

fn qs5_shadow(env: &Env) -> CheckResult {
    let q = env.quandle("qs5")?;
    let d = Diagram1::parse(fixtures::FIG3_DIAGRAM).map_err(err)?;
    let transposition = |x: Element| {
        let p: Vec<usize> = (0..q.size()).map(|a| q.op(a, x)).collect();
        // conjugation by an involution is an involution
        (0..q.size()).all(|a| p[p[a]] == a) && (0..q.size()).any(|a| p[a] != a)
    };
    for c in enumerate_colorings(&d, &q).map_err(err)? {
        if !c.edges.iter().all(|&x| transposition(x)) {
            continue;
        }
        for seed in 0..q.size() {
            let Some(s) = shadow_extend(&d, &q, &c, "r0", seed).map_err(err)? else {
                continue;
            };
            let chain = extract_shadow_chain(&d, &q, &s).map_err(err)?;
            let coords = class_of(&q, &chain, Variant::Q).map_err(err)?;
            if !coords.is_zero() {
                return Ok(describe_shadow(&q, &d, &s, &coords.to_vec()));
            }
        }
    }
    Err("every transposition shadow coloring gives a boundary".into())
}

fn describe_shadow(q: &FiniteQuandle, d: &Diagram1, s: &qhom_core::diagrams::ShadowColoring, coords: &[BigInt]) -> String {
    let edges: Vec<String> = d.edges.iter().zip(&s.edges).map(|(e, &x)| format!("{}={}", e.name, q.label(x))).collect();
    let group = homology(q, Variant::Q, 3).map(|h| h.to_string()).unwrap_or_default();
    format!("{}; class {coords:?} in {group}", edges.join(" "))
}

const CHECKS: [Check; 11] = [
    Check { id: "h2q-r3", title: "H^Q_2(R_3) = 0", run: |e| group_is(e, "dihedral:3", 2, "0") },
    Check { id: "h3q-r3", title: "H^Q_3(R_3) = Z_3", run: |e| group_is(e, "dihedral:3", 3, "Z_3") },
    Check { id: "h3q-qs6", title: "H^Q_3(QS(6)) = Z_24", run: |e| group_is(e, "qs6", 3, "Z_24") },
    Check { id: "r3-two-cycles", title: "two R_3 2-cycles bound, witnesses verified", run: two_cycles_bound },
    Check { id: "r3-three-cycle", title: "(α,β,γ)+(α,γ,α) generates H^Q_3(R_3)", run: three_cycle_generates },
    Check { id: "qs6-surjection", title: "p_*: H^Q_3(QS(6)) -> H^Q_3(R_3) is onto", run: qs6_surjects },
    Check { id: "connecting-zero", title: "connecting maps vanish", run: connecting_maps_vanish },
    Check { id: "les-exact", title: "long exact sequence exact at degrees 2, 3", run: les_exact },
    Check { id: "fixtures-extract", title: "fig3 and fig7 extract to their cycles", run: fixture_extraction },
    Check { id: "realize-round-trip", title: "realize then extract is the identity", run: round_trips },
    Check { id: "qs5-shadow", title: "a QS(5) shadow of fig3 is not a boundary", run: qs5_shadow },
];

pub fn run_checks(inputs: &Inputs, seed: u64) -> Vec<CheckReport> {
    let env = Env { inputs, seed };
    CHECKS
        .par_iter()
        .map(|c| {
            let r = (c.run)(&env);
            CheckReport {
                id: c.id,
                title: c.title,
                passed: r.is_ok(),
                detail: r.unwrap_or_else(|e| e),
            }
        })
        .collect()
}

pub fn replay(inputs: &Inputs, seed: u64) -> Outcome {
    let reports = run_checks(inputs, seed);
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut text = String::new();
    for r in &reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(text, "{status}  {:width$}  {}: {}", r.id, r.title, r.detail).unwrap();
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    writeln!(text, "{}/{} checks passed", reports.len() - failed.len(), reports.len()).unwrap();
    if !failed.is_empty() {
        writeln!(text, "failed: {}", failed.join(", ")).unwrap();
    }
    Outcome {
        text,
        result: json!({ "seed": seed, "checks": reports, "failed": failed }),
        code: if failed.is_empty() { exit::OK } else { exit::CHECK_FAILED },
    }
}
