//! The bundled diagrams extract to the cycles they are meant to draw.

use qhom_core::catalog::{fixtures, qs5, r3};
use qhom_core::chains::{boundary, parse_chain, project, Chain, Variant};
use qhom_core::diagrams::{
    endpoint_chain, enumerate_colorings, extract_chain, extract_chain0, extract_shadow_chain,
    fundamental_presentation, parse_assignments, realize_two_cycle, shadow_extend, Coloring,
    Diagram0, Diagram1, ShadowColoring, ShadowColoring0,
};
use qhom_core::homology::{class_of, is_boundary, is_cycle};
use qhom_core::quandle::{trivial, Element};

const A: Element = 0;
const B: Element = 1;
const G: Element = 2;

fn fig3() -> (Diagram1, Coloring) {
    let d = Diagram1::parse(fixtures::FIG3_DIAGRAM).unwrap();
    let pairs = parse_assignments(fixtures::FIG3_COLORING).unwrap();
    let c = Coloring::from_assignments(&d, &r3(), &pairs).unwrap();
    (d, c)
}

fn fig10() -> (Diagram1, ShadowColoring) {
    let d = Diagram1::parse(fixtures::FIG10_DIAGRAM).unwrap();
    let pairs = parse_assignments(fixtures::FIG10_COLORING).unwrap();
    let s = ShadowColoring::from_assignments(&d, &r3(), &pairs).unwrap();
    (d, s)
}

#[test]
fn fig3_extracts_its_cycle() {
    let (d, c) = fig3();
    let q = r3();
    assert!(d.validate().is_ok());
    let chain = extract_chain(&d, &q, &c).unwrap();
    assert_eq!(chain, parse_chain(fixtures::FIG3_CYCLE).unwrap());
    assert_eq!(chain.display_with(&q), "(α,β) - (β,α) + (β,γ)");
    // closed diagrams give rack cycles
    assert!(boundary(&q, &chain).is_zero());
    let nu = is_boundary(&q, &chain, Variant::Q).unwrap().unwrap();
    assert_eq!(project(&boundary(&q, &nu), Variant::Q).unwrap(), chain);
}

#[test]
fn fig3_colorings_and_presentation() {
    let (d, c) = fig3();
    let q = r3();
    let all = enumerate_colorings(&d, &q).unwrap();
    assert_eq!(all.len(), 9);
    assert!(all.contains(&c));
    let p = fundamental_presentation(&d).unwrap();
    assert_eq!(p.to_string(), "<x,y,z : x*y=z, y*z=x, y*x=z>");
    assert_eq!(p.count_homs(&q), 9);
    for t in 1..=3 {
        assert_eq!(enumerate_colorings(&d, &trivial(t).unwrap()).unwrap().len(), t);
    }
}

#[test]
fn fig3_shadows() {
    let (d, c) = fig3();
    let q = r3();
    // the nontrivial coloring meets monodromy around the handle
    for x in [A, B, G] {
        assert!(shadow_extend(&d, &q, &c, "r0", x).unwrap().is_none());
    }
    let flat = Coloring { edges: vec![A; 6] };
    let s = shadow_extend(&d, &q, &flat, "r0", B).unwrap().unwrap();
    assert_eq!(s.regions[0], B);
    assert!(shadow_extend(&d, &q, &flat, "nowhere", B).is_err());
    let chain = extract_shadow_chain(&d, &q, &s).unwrap();
    assert!(boundary(&q, &chain).is_zero());
}

#[test]
fn fig3_transpositions_give_nontrivial_class() {
    let (d, _) = fig3();
    let q = qs5();
    let transposition = |x: Element| q.label(x).len() == 4;
    let mut found = false;
    for c in enumerate_colorings(&d, &q).unwrap() {
        if !c.edges.iter().all(|&x| transposition(x)) {
            continue;
        }
        for seed in 0..q.size() {
            let Some(s) = shadow_extend(&d, &q, &c, "r0", seed).unwrap() else {
                continue;
            };
            let chain = extract_shadow_chain(&d, &q, &s).unwrap();
            assert!(is_cycle(&q, &chain, Variant::Q).unwrap());
            if !class_of(&q, &chain, Variant::Q).unwrap().is_zero() {
                found = true;
            }
        }
    }
    assert!(found);
}

#[test]
fn fig7_extracts_its_cycle() {
    let q = r3();
    let d = Diagram0::parse(fixtures::FIG7_DIAGRAM).unwrap();
    assert!(d.validate().is_ok());
    let pairs = parse_assignments(fixtures::FIG7_COLORING).unwrap();
    let s = ShadowColoring0::from_assignments(&d, &q, &pairs).unwrap();
    let chain = extract_chain0(&d, &q, &s).unwrap();
    assert_eq!(chain, parse_chain(fixtures::FIG7_CYCLE).unwrap());
    assert!(boundary(&q, &chain).is_zero());
    assert!(is_boundary(&q, &chain, Variant::Q).unwrap().is_some());
}

#[test]
fn fig10_extracts_its_cycle() {
    let q = r3();
    let (d, s) = fig10();
    assert!(d.validate().is_ok());
    let crossings = extract_shadow_chain(&d, &q, &s).unwrap();
    let expected = parse_chain(fixtures::FIG10_CYCLE).unwrap();
    assert_eq!(project(&crossings, Variant::Q).unwrap(), expected);
    // endpoints cap off the rack boundary (α,α) − (γ,γ)
    let ends = endpoint_chain(&d, &q, &s).unwrap();
    let rack_boundary = Chain::from_terms(2, [(1, vec![A, A]), (-1, vec![G, G])]).unwrap();
    assert_eq!(boundary(&q, &crossings), rack_boundary);
    assert!(boundary(&q, &crossings).plus(&ends).is_zero());
    let class = class_of(&q, &crossings, Variant::Q).unwrap();
    assert!(!class.is_zero());
}

#[test]
fn fig10_shadow_from_seed() {
    let q = r3();
    let (d, s) = fig10();
    let c = s.coloring();
    assert_eq!(shadow_extend(&d, &q, &c, "r0", A).unwrap(), Some(s));
    // the endpoint pins its region to the arc color
    assert!(shadow_extend(&d, &q, &c, "r0", B).unwrap().is_none());
    assert!(extract_chain(&d, &q, &c).is_err());
    let p = fundamental_presentation(&d).unwrap();
    assert_eq!(p.count_homs(&q), enumerate_colorings(&d, &q).unwrap().len());
}

#[test]
fn fig3_round_trip_through_realization() {
    let q = r3();
    let c = parse_chain(fixtures::FIG3_CYCLE).unwrap();
    let (d, col) = realize_two_cycle(&q, &c, Variant::Q).unwrap();
    assert_eq!(d.crossings.len(), 3);
    let text = d.to_string();
    let reparsed = Diagram1::parse(&text).unwrap();
    let col2 = Coloring::from_assignments(&reparsed, &q, &parse_assignments(&col.assignments(&d, &q)).unwrap()).unwrap();
    assert_eq!(extract_chain(&reparsed, &q, &col2).unwrap(), c);
}
