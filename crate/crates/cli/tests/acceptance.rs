//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal; exits nonzero on failure.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use qhom_cli::replay::random_two_cycle;
use qhom_core::catalog::{bundled, fixtures, lookup, qs5, qs6, r3, small_quandles};
use qhom_core::chains::{boundary, parse_chain, project, Chain, Variant};
use qhom_core::diagrams::{
    enumerate_colorings, extract_chain, extract_chain0, extract_shadow_chain,
    fundamental_presentation, parse_assignments, realize_two_cycle, shadow_extend, Coloring,
    Diagram0, Diagram1, ShadowColoring0,
};
use qhom_core::homology::{class_of, is_boundary, is_cycle, les_boundary_map, les_check};
use qhom_core::intlin::{smith_normal_form, IntMatrix};
use qhom_core::quandle::{
    alexander, conjugation, dihedral, trivial, verify_axioms, AxiomMode, Element, FiniteQuandle,
    LaurentPolynomial, Permutation,
};

const A: Element = 0;
const B: Element = 1;
const G: Element = 2;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn chain(terms: &[(i64, &[Element])]) -> Chain {
    Chain::from_terms(terms[0].1.len(), terms.iter().map(|(k, t)| (*k, t.to_vec()))).unwrap()
}

/// Runs the `qhom` binary and returns its stdout.
fn qhom(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qhom"))
        .args(args)
        .output()
        .map_err(err)?;
    if !out.status.success() {
        return Err(format!(
            "qhom {} exited {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn cli_group(args: &[&str], expected: &str) -> Outcome {
    let out = qhom(args)?;
    ensure(out.trim() == expected, || format!("printed {:?}", out.trim()))?;
    Ok(format!("`qhom {}` prints {expected}", args.join(" ")))
}

fn certified(q: &FiniteQuandle, c: &Chain) -> Result<usize, String> {
    ensure(is_cycle(q, c, Variant::Q).map_err(err)?, || "not a Q-cycle".into())?;
    let nu = is_boundary(q, c, Variant::Q).map_err(err)?.ok_or("not a boundary")?;
    ensure(project(&boundary(q, &nu), Variant::Q).map_err(err)? == *c, || {
        "witness boundary differs".into()
    })?;
    Ok(nu.len())
}

fn criterion_4() -> Outcome {
    let q = r3();
    let a = certified(&q, &chain(&[(1, &[A, B]), (1, &[B, G]), (-1, &[B, A])]))?;
    let b = certified(&q, &chain(&[(1, &[A, B]), (1, &[G, A]), (1, &[B, G])]))?;
    // the same certificate through the command line
    let out = qhom(&["--json", "chain", "is-boundary", "dihedral:3", "Q", "fig3_cycle.chn"])?;
    let v: Value = serde_json::from_str(&out).map_err(err)?;
    ensure(v["result"]["verified"] == Value::Bool(true), || format!("cli: {out}"))?;
    Ok(format!("witnesses of {a} and {b} terms verified"))
}

fn criterion_5() -> Outcome {
    let q = r3();
    let c = chain(&[(1, &[A, B, G]), (1, &[A, G, A])]);
    ensure(is_cycle(&q, &c, Variant::Q).map_err(err)?, || "not a Q-cycle".into())?;
    ensure(!is_cycle(&q, &c, Variant::R).map_err(err)?, || "is a rack cycle".into())?;
    let db = boundary(&q, &c);
    ensure(db == chain(&[(1, &[A, A]), (-1, &[G, G])]), || db.display_with(&q))?;
    ensure(is_boundary(&q, &c, Variant::Q).map_err(err)?.is_none(), || "is a boundary".into())?;
    let k = class_of(&q, &c, Variant::Q).map_err(err)?;
    ensure(k.free_part.is_empty() && k.torsion_part.len() == 1, || format!("{k:?}"))?;
    let x = &k.torsion_part[0];
    ensure(x % BigInt::from(3) != BigInt::from(0), || format!("coordinate {x}"))?;
    Ok(format!("rack boundary (α,α)-(γ,γ), class {x} in Z_3"))
}

fn criterion_6() -> Outcome {
    let out = qhom(&["--json", "hom", "induced", "qs6_to_r3.map", "Q", "3"])?;
    let v: Value = serde_json::from_str(&out).map_err(err)?;
    let r = &v["result"];
    ensure(r["map"]["surjective"] == Value::Bool(true), || format!("{r}"))?;
    Ok(format!("{} -> {} onto", r["source_group"], r["target_group"]))
}

fn criterion_7() -> Outcome {
    let mut cases: Vec<(String, FiniteQuandle, usize)> = vec![
        ("R_3".into(), r3(), 3),
        ("R_3".into(), r3(), 4),
        ("QS(5)".into(), qs5(), 3),
    ];
    for n in 2..=4 {
        cases.push((format!("T_{n}"), trivial(n).unwrap(), 3));
    }
    for order in 1..=4 {
        for (k, q) in small_quandles(order).into_iter().enumerate() {
            cases.push((format!("small:{order}:{}", k + 1), q, 3));
        }
    }
    for (name, q, n) in &cases {
        let m = les_boundary_map(q, *n).map_err(err)?;
        ensure(m.is_zero(), || format!("{name}, n = {n}: nonzero"))?;
    }
    Ok(format!("{} connecting maps are zero", cases.len()))
}

fn criterion_8() -> Outcome {
    let cases = [("R_3", r3()), ("QS(5)", qs5()), ("T_2", trivial(2).unwrap()), ("T_3", trivial(3).unwrap())];
    let mut groups = Vec::new();
    for (name, q) in &cases {
        for n in [2, 3] {
            let r = les_check(q, n).map_err(err)?;
            ensure(r.is_exact(), || format!("{name}, n = {n}: not exact"))?;
            groups.push(format!("{name}/{n}"));
        }
    }
    Ok(format!("exact for {}", groups.join(" ")))
}

fn criterion_9() -> Outcome {
    let q = r3();
    let d3 = Diagram1::parse(fixtures::FIG3_DIAGRAM).map_err(err)?;
    let c3 = Coloring::from_assignments(&d3, &q, &parse_assignments(fixtures::FIG3_COLORING).map_err(err)?)
        .map_err(err)?;
    ensure(extract_chain(&d3, &q, &c3).map_err(err)? == parse_chain(fixtures::FIG3_CYCLE).map_err(err)?, || {
        "fig3 mismatch".into()
    })?;
    let d7 = Diagram0::parse(fixtures::FIG7_DIAGRAM).map_err(err)?;
    let s7 = ShadowColoring0::from_assignments(&d7, &q, &parse_assignments(fixtures::FIG7_COLORING).map_err(err)?)
        .map_err(err)?;
    ensure(extract_chain0(&d7, &q, &s7).map_err(err)? == parse_chain(fixtures::FIG7_CYCLE).map_err(err)?, || {
        "fig7 mismatch".into()
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (name, q) in [("R_3", r3()), ("QS(6)", qs6())] {
        for i in 0..25 {
            let c = random_two_cycle(&q, &mut rng).map_err(err)?;
            let (d, col) = realize_two_cycle(&q, &c, Variant::Q).map_err(err)?;
            ensure(d.validate().is_ok(), || format!("{name} #{i}: invalid diagram"))?;
            ensure(extract_chain(&d, &q, &col).map_err(err)? == c, || format!("{name} #{i}: mismatch"))?;
        }
    }
    Ok("fig3, fig7 and 50 seeded realizations round-trip".into())
}

fn criterion_10() -> Outcome {
    let q = qs5();
    let d = Diagram1::parse(fixtures::FIG3_DIAGRAM).map_err(err)?;
    let transposition = |x: Element| q.label(x).len() == 4;
    for c in enumerate_colorings(&d, &q).map_err(err)? {
        if !c.edges.iter().all(|&x| transposition(x)) {
            continue;
        }
        for seed in 0..q.size() {
            if let Some(s) = shadow_extend(&d, &q, &c, "r0", seed).map_err(err)? {
                let chain = extract_shadow_chain(&d, &q, &s).map_err(err)?;
                let k = class_of(&q, &chain, Variant::Q).map_err(err)?;
                if !k.is_zero() {
                    return Ok(format!("region r0 = {}, class {:?}", q.label(seed), k.to_vec()));
                }
            }
        }
    }
    Err("no transposition shadow with nonzero class".into())
}

fn random_chain(rng: &mut impl Rng, n: usize, degree: usize) -> Chain {
    let terms = rng.gen_range(1..=8);
    Chain::from_terms(
        degree,
        (0..terms).map(|_| (rng.gen_range(-5i64..=5), (0..degree).map(|_| rng.gen_range(0..n)).collect())),
    )
    .unwrap()
}

fn boundary_squares() -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for key in bundled() {
        let q = lookup(&key).map_err(err)?;
        for degree in 2..=5 {
            for _ in 0..200 {
                let c = random_chain(&mut rng, q.size(), degree);
                ensure(boundary(&q, &boundary(&q, &c)).is_zero(), || format!("{key}: R"))?;
                let dq = project(&boundary(&q, &project(&c, Variant::Q).map_err(err)?), Variant::Q).map_err(err)?;
                ensure(project(&boundary(&q, &dq), Variant::Q).map_err(err)?.is_zero(), || format!("{key}: Q"))?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn constructors_verify() -> Result<usize, String> {
    let mut qs: Vec<FiniteQuandle> = bundled().iter().map(|k| lookup(k).unwrap()).collect();
    for n in 1..=8 {
        qs.push(dihedral(n).map_err(err)?);
        qs.push(trivial(n).map_err(err)?);
    }
    qs.push(conjugation(&Permutation::all_non_identity(3)).map_err(err)?);
    for (m, coeffs) in [(3u64, vec![1i64, 1]), (5, vec![1, 2]), (7, vec![3, 1]), (2, vec![1, 1, 1])] {
        qs.push(alexander(&LaurentPolynomial::new(m, 0, &coeffs).map_err(err)?).map_err(err)?);
    }
    for q in &qs {
        ensure(verify_axioms(&q.rows(), AxiomMode::Quandle).map_err(err)?.is_ok(), || format!("{q:?}"))?;
    }
    Ok(qs.len())
}

fn snf_reconstruction() -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..500 {
        let (rows, cols) = (rng.gen_range(0..=60), rng.gen_range(0..=60));
        let a = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
        let d = smith_normal_form(&a);
        ensure(d.u.mul(&a).mul(&d.v) == d.s, || format!("matrix {i} ({rows}x{cols})"))?;
    }
    Ok(500)
}

fn coloring_counts() -> Result<usize, String> {
    let mut diagrams = vec![
        Diagram1::parse(fixtures::FIG3_DIAGRAM).map_err(err)?,
        Diagram1::parse(fixtures::FIG10_DIAGRAM).map_err(err)?,
    ];
    let c = parse_chain(fixtures::FIG3_CYCLE).map_err(err)?;
    diagrams.push(realize_two_cycle(&r3(), &c, Variant::Q).map_err(err)?.0);
    let mut checked = 0;
    for d in &diagrams {
        for key in ["dihedral:3", "dihedral:4", "trivial:3", "qs5", "small:4:3"] {
            let q = lookup(key).map_err(err)?;
            let a = enumerate_colorings(d, &q).map_err(err)?.len();
            let b = fundamental_presentation(d).map_err(err)?.count_homs(&q);
            ensure(a == b, || format!("{key}: {a} colorings, {b} homs"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn criterion_11() -> Outcome {
    let chains = boundary_squares()?;
    let constructors = constructors_verify()?;
    let matrices = snf_reconstruction()?;
    let colorings = coloring_counts()?;
    Ok(format!(
        "{chains} chains with ∂∂ = 0, {constructors} quandles verified, {matrices} SNFs reconstructed, {colorings} coloring counts agree"
    ))
}

fn main() {
    let criteria: Vec<(u32, &str, Duration, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "H^Q_2(R_3) = 0", Duration::from_secs(1), Box::new(|| cli_group(&["homology", "dihedral:3", "Q", "2"], "0"))),
        (2, "H^Q_3(R_3) = Z_3", Duration::from_secs(1), Box::new(|| cli_group(&["homology", "dihedral:3", "Q", "3"], "Z_3"))),
        (3, "H^Q_3(QS(6)) = Z_24", Duration::from_secs(30), Box::new(|| cli_group(&["homology", "qs6", "Q", "3"], "Z_24"))),
        (4, "two R_3 2-cycles are boundaries with verified witnesses", Duration::MAX, Box::new(criterion_4)),
        (5, "(α,β,γ)+(α,γ,α) generates H^Q_3(R_3)", Duration::MAX, Box::new(criterion_5)),
        (6, "p_*: H^Q_3(QS(6)) -> H^Q_3(R_3) is surjective", Duration::MAX, Box::new(criterion_6)),
        (7, "connecting maps vanish", Duration::from_secs(120), Box::new(criterion_7)),
        (8, "long exact sequence exact at degrees 2, 3", Duration::MAX, Box::new(criterion_8)),
        (9, "diagram round trips", Duration::from_secs(30), Box::new(criterion_9)),
        (10, "QS(5) shadow of fig3 is not a boundary", Duration::MAX, Box::new(criterion_10)),
        (11, "property suites", Duration::MAX, Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= *limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}, but took {elapsed:.2?} (limit {limit:?})")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!("PASS {id:>2}  {name}: {detail} [{elapsed:.2?}]"),
            Err(e) => {
                failed += 1;
                println!("FAIL {id:>2}  {name}: {e} [{elapsed:.2?}]");
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
