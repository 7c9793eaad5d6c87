//! Named quandles, bundled diagram fixtures and the map-file format.
//!
//! Keys: `dihedral:n`, `trivial:n`, `alexander:n:h(T)`, `small:n:k` (the
//! `k`-th quandle of order `n ≤ 4` up to isomorphism, 1-based), `qs5`, `qs6`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::quandle::{
    alexander, conjugation, dihedral, trivial, Element, FiniteQuandle, LaurentPolynomial,
    Permutation, QuandleHom,
};

/// Keys exercised by the test suites: every quandle of order at most 4 plus
/// the larger named examples.
pub fn bundled() -> Vec<String> {
    let mut keys: Vec<String> = Vec::new();
    keys.extend((1..=4).map(|n| format!("trivial:{n}")));
    keys.extend((1..=4).map(|n| format!("dihedral:{n}")));
    keys.push("alexander:2:T^2+T+1".into());
    keys.push("alexander:3:T+1".into());
    for n in 1..=4 {
        let count = small_quandles(n).len();
        keys.extend((1..=count).map(|k| format!("small:{n}:{k}")));
    }
    keys.push("alexander:5:2T+1".into());
    keys.push("qs5".into());
    keys.push("qs6".into());
    keys
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

/// `R_3` with elements written α, β, γ.
pub fn r3() -> FiniteQuandle {
    dihedral(3)
        .and_then(|q| q.with_labels(labels(&["α", "β", "γ"])))
        .expect("R_3")
}

/// Conjugation quandle on the five non-identity permutations of three letters.
pub fn qs5() -> FiniteQuandle {
    conjugation(&Permutation::all_non_identity(3)).expect("QS(5)")
}

/// Conjugation quandle on the six 4-cycles of `S_4`, sorted by one-line
/// notation and named a, b, B, c, A, C (so that `X` is the inverse of `x`).
pub fn qs6() -> FiniteQuandle {
    let four_cycles: Vec<Permutation> = Permutation::all_non_identity(4)
        .into_iter()
        .filter(|p| {
            // the orbit of 0 has length 4
            let mut x = p.images()[0];
            let mut len = 1;
            while x != 0 {
                x = p.images()[x];
                len += 1;
            }
            len == 4
        })
        .collect();
    conjugation(&four_cycles)
        .and_then(|q| q.with_labels(labels(&["a", "b", "B", "c", "A", "C"])))
        .expect("QS(6)")
}

/// The surjection `QS(6) → R_3` sending `x` and `x⁻¹` to the same color.
pub fn qs6_to_r3() -> QuandleHom {
    QuandleHom::new(qs6(), r3(), vec![0, 1, 1, 2, 0, 2]).expect("hom")
}

fn number(s: &str, key: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::domain(format!("bad size in catalog key {key:?}")))
}

pub fn lookup(key: &str) -> Result<FiniteQuandle> {
    let parts: Vec<&str> = key.splitn(3, ':').collect();
    match parts[..] {
        ["qs5"] => Ok(qs5()),
        ["qs6"] => Ok(qs6()),
        ["dihedral", "3"] => Ok(r3()),
        ["dihedral", n] => dihedral(number(n, key)?),
        ["trivial", n] => trivial(number(n, key)?),
        ["alexander", n, h] => {
            let modulus = number(n, key)? as u64;
            alexander(&LaurentPolynomial::parse(modulus, h)?)
        }
        ["small", n, k] => {
            let n = number(n, key)?;
            if n > 4 {
                return Err(Error::domain("small quandles are listed up to order 4"));
            }
            let k = number(k, key)?;
            small_quandles(n)
                .into_iter()
                .nth(k.wrapping_sub(1))
                .ok_or_else(|| Error::domain(format!("no quandle {key}")))
        }
        _ => Err(Error::domain(format!("unknown catalog key {key:?}"))),
    }
}

/// All quandles of order `n` up to isomorphism, each in its lexicographically
/// smallest relabeling, sorted. Exhaustive: right translations are chosen as
/// permutations fixing their own element, then self-distributivity is checked.
pub fn small_quandles(n: usize) -> Vec<FiniteQuandle> {
    if n == 0 {
        return Vec::new();
    }
    // candidate right translations S_b (column b of the table)
    let options: Vec<Vec<Vec<Element>>> = (0..n)
        .map(|b| {
            (0..n)
                .permutations(n)
                .filter(|p| p[b] == b)
                .collect()
        })
        .collect();
    let mut found: Vec<Vec<Vec<Element>>> = Vec::new();
    for cols in options.iter().multi_cartesian_product() {
        let op = |a: usize, b: usize| cols[b][a];
        let distributive = (0..n)
            .cartesian_product(0..n)
            .cartesian_product(0..n)
            .all(|((a, b), c)| op(op(a, b), c) == op(op(a, c), op(b, c)));
        if distributive {
            let rows: Vec<Vec<Element>> = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
            found.push(canonical(&rows));
        }
    }
    found.sort();
    found.dedup();
    found
        .into_iter()
        .map(|rows| FiniteQuandle::new(rows).expect("enumerated quandle"))
        .collect()
}

fn canonical(rows: &[Vec<Element>]) -> Vec<Vec<Element>> {
    let n = rows.len();
    (0..n)
        .permutations(n)
        .map(|p| {
            // relabel x ↦ p[x]
            let mut t = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    t[p[a]][p[b]] = p[rows[a][b]];
                }
            }
            t
        })
        .min()
        .unwrap()
}

/// Diagram fixtures and the chains they represent.
pub mod fixtures {
    pub const FIG3_DIAGRAM: &str = include_str!("../fixtures/fig3.adk");
    pub const FIG3_COLORING: &str = include_str!("../fixtures/fig3.col");
    pub const FIG3_CYCLE: &str = include_str!("../fixtures/fig3_cycle.chn");
    pub const FIG7_DIAGRAM: &str = include_str!("../fixtures/fig7.adk");
    pub const FIG7_COLORING: &str = include_str!("../fixtures/fig7.col");
    pub const FIG7_CYCLE: &str = include_str!("../fixtures/fig7_cycle.chn");
    pub const FIG10_DIAGRAM: &str = include_str!("../fixtures/fig10.adk");
    pub const FIG10_COLORING: &str = include_str!("../fixtures/fig10.col");
    pub const FIG10_CYCLE: &str = include_str!("../fixtures/fig10_cycle.chn");
    pub const QS6_TO_R3: &str = include_str!("../fixtures/qs6_to_r3.map");

    /// `(name, contents)` of every bundled fixture file.
    pub const ALL: [(&str, &str); 10] = [
        ("fig3.adk", FIG3_DIAGRAM),
        ("fig3.col", FIG3_COLORING),
        ("fig3_cycle.chn", FIG3_CYCLE),
        ("fig7.adk", FIG7_DIAGRAM),
        ("fig7.col", FIG7_COLORING),
        ("fig7_cycle.chn", FIG7_CYCLE),
        ("fig10.adk", FIG10_DIAGRAM),
        ("fig10.col", FIG10_COLORING),
        ("fig10_cycle.chn", FIG10_CYCLE),
        ("qs6_to_r3.map", QS6_TO_R3),
    ];

    pub fn get(name: &str) -> Option<&'static str> {
        ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
    }
}

/// Map file: `source:` and `target:` quandle references (catalog keys or
/// paths, resolved by the caller) and `map:` images in source order, as
/// labels or indices of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFile {
    pub source: String,
    pub target: String,
    pub images: Vec<String>,
}

pub fn parse_map_file(text: &str) -> Result<MapFile> {
    let (mut source, mut target, mut images) = (None, None, None);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(i + 1, "expected `key: value`"))?;
        let value = value.trim();
        let slot = match key.trim() {
            "source" => &mut source,
            "target" => &mut target,
            "map" => &mut images,
            other => return Err(Error::parse(i + 1, format!("unknown key {other:?}"))),
        };
        if slot.replace(value.to_string()).is_some() {
            return Err(Error::parse(i + 1, format!("{} given twice", key.trim())));
        }
    }
    let missing = |what: &str| Error::parse(0, format!("map file lacks `{what}:`"));
    Ok(MapFile {
        source: source.ok_or_else(|| missing("source"))?,
        target: target.ok_or_else(|| missing("target"))?,
        images: images
            .ok_or_else(|| missing("map"))?
            .split_whitespace()
            .map(String::from)
            .collect(),
    })
}

impl MapFile {
    /// Builds the homomorphism once both quandles are resolved.
    pub fn resolve(&self, source: FiniteQuandle, target: FiniteQuandle) -> Result<QuandleHom> {
        if self.images.len() != source.size() {
            return Err(Error::domain(format!(
                "{} images for {} source elements",
                self.images.len(),
                source.size()
            )));
        }
        let map = self
            .images
            .iter()
            .map(|t| {
                target
                    .element(t)
                    .ok_or_else(|| Error::domain(format!("{t} is not an element of the target")))
            })
            .collect::<Result<Vec<_>>>()?;
        QuandleHom::new(source, target, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{verify_axioms, AxiomMode, Permutation};

    #[test]
    fn every_bundled_key_is_a_quandle() {
        for key in bundled() {
            let q = lookup(&key).unwrap();
            assert!(
                verify_axioms(&q.rows(), AxiomMode::Quandle).unwrap().is_ok(),
                "{key}"
            );
        }
    }

    #[test]
    fn small_quandle_counts() {
        // 1, 1, 3, 7 isomorphism classes of orders 1–4
        let counts: Vec<usize> = (1..=4).map(|n| small_quandles(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 7]);
        assert!(small_quandles(3).contains(&dihedral(3).unwrap()) || {
            let r3 = canonical(&dihedral(3).unwrap().rows());
            small_quandles(3).iter().any(|q| q.rows() == r3)
        });
    }

    #[test]
    fn named_quandles() {
        assert_eq!(r3().label(0), "α");
        let q = qs5();
        assert_eq!(q.size(), 5);
        assert_eq!(q.labels().unwrap()[0], "(23)");
        let q = qs6();
        assert_eq!(q.size(), 6);
        assert_eq!(q.orbits().len(), 1);
        // sorted one-line order starts with 2341 = (1234)
        let first = Permutation::parse_one_line("2341").unwrap();
        assert_eq!(first.cycle_string(), "(1234)");
        assert_eq!(lookup("dihedral:3").unwrap(), r3());
        assert!(lookup("nonsense").is_err());
        assert!(lookup("trivial:x").is_err());
        assert!(lookup("small:4:8").is_err());
        assert!(lookup("small:4:0").is_err());
    }

    #[test]
    fn projection_hom() {
        let p = qs6_to_r3();
        let parsed = parse_map_file(fixtures::QS6_TO_R3).unwrap();
        assert_eq!(parsed.source, "qs6");
        let q = parsed.resolve(lookup(&parsed.source).unwrap(), lookup(&parsed.target).unwrap()).unwrap();
        assert_eq!(q.map(), p.map());
        assert!(parse_map_file("source: a\n").is_err());
        assert!(parse_map_file("source: a\nsource: b\n").is_err());
    }

    #[test]
    fn fixtures_present() {
        assert!(fixtures::get("fig3.adk").unwrap().contains("crossings:"));
        assert!(fixtures::get("nope").is_none());
    }
}
