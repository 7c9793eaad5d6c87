use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, ToPrimitive};

use crate::chains::{project, Chain, Variant};
use crate::error::{Error, Result};
use crate::homology::is_cycle;
use crate::quandle::{Element, RackTable};

use super::{Coloring, Crossing, Diagram1, Edge};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Side {
    Right,
    Left,
}

struct Regions {
    parent: HashMap<(usize, Side), (usize, Side)>,
}

impl Regions {
    fn find(&mut self, x: (usize, Side)) -> (usize, Side) {
        let p = *self.parent.entry(x).or_insert(x);
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.parent.insert(x, root);
        root
    }

    fn join(&mut self, a: (usize, Side), b: (usize, Side)) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent.insert(ra.max(rb), ra.min(rb));
        }
    }
}

/// A closed colored 1-diagram representing the 2-cycle `c`.
///
/// Each signed term `±(a, b)` (repeated `|coeff|` times) becomes one crossing
/// whose over strand is a kink loop colored `b` and whose under strand passes
/// from color `a` to `a ∗ b` (reversed for negative terms). Under ends of equal
/// color are then joined greedily: out-ports and in-ports sorted by
/// `(color, crossing)` are paired in order. The cycle condition is exactly
/// the statement that these multisets agree. Regions are the corners of the
/// thickened curve, glued at each crossing.
pub fn realize_two_cycle(rack: &RackTable, c: &Chain, v: Variant) -> Result<(Diagram1, Coloring)> {
    c.check_in(rack)?;
    if c.degree() != 2 && !c.is_zero() {
        return Err(Error::domain("realization needs a chain of degree 2"));
    }
    if !is_cycle(rack, c, v)? {
        return Err(Error::Precondition(format!("chain is not a {v} cycle")));
    }
    let c = project(c, v)?;

    // (sign, source color, over color)
    let mut terms: Vec<(i8, Element, Element)> = Vec::new();
    for (t, k) in c.terms() {
        let sign = if k.is_negative() { -1 } else { 1 };
        let copies = k
            .abs()
            .to_usize()
            .ok_or_else(|| Error::domain("coefficient too large to realize"))?;
        terms.extend(std::iter::repeat((sign, t[0], t[1])).take(copies));
    }
    let m = terms.len();
    // ports: colors entering and leaving each crossing along the under strand
    let ports: Vec<(Element, Element)> = terms
        .iter()
        .map(|&(s, a, b)| {
            let target = rack.op(a, b);
            if s > 0 {
                (a, target)
            } else {
                (target, a)
            }
        })
        .collect();

    let ins: BTreeSet<(Element, usize)> = ports.iter().enumerate().map(|(i, p)| (p.0, i)).collect();
    let outs: BTreeSet<(Element, usize)> = ports.iter().enumerate().map(|(i, p)| (p.1, i)).collect();
    // the under edge leaving crossing i enters crossing next[i]
    let mut next = vec![usize::MAX; m];
    for (&(oc, i), &(ic, j)) in outs.iter().zip(&ins) {
        if oc != ic {
            return Err(Error::Precondition("under ends cannot be paired".into()));
        }
        next[i] = j;
    }
    let mut prev = vec![usize::MAX; m];
    for (i, &j) in next.iter().enumerate() {
        prev[j] = i;
    }

    // edge 2i is the kink over crossing i, edge 2i+1 leaves crossing i underneath
    let kink = |i: usize| 2 * i;
    let under = |i: usize| 2 * i + 1;
    let mut regions = Regions {
        parent: HashMap::new(),
    };
    for i in 0..m {
        let (oi, oo, ui, uo) = (kink(i), kink(i), under(prev[i]), under(i));
        if terms[i].0 > 0 {
            regions.join((oo, Side::Right), (ui, Side::Right));
            regions.join((oo, Side::Left), (uo, Side::Right));
            regions.join((oi, Side::Left), (uo, Side::Left));
            regions.join((oi, Side::Right), (ui, Side::Left));
        } else {
            regions.join((oo, Side::Right), (uo, Side::Left));
            regions.join((oo, Side::Left), (ui, Side::Left));
            regions.join((oi, Side::Left), (ui, Side::Right));
            regions.join((oi, Side::Right), (uo, Side::Right));
        }
    }
    let mut names: HashMap<(usize, Side), String> = HashMap::new();
    let mut region_list = Vec::new();
    let mut name_of = |x: (usize, Side), regions: &mut Regions| -> String {
        let root = regions.find(x);
        names
            .entry(root)
            .or_insert_with(|| {
                let n = format!("r{}", region_list.len());
                region_list.push(n.clone());
                n
            })
            .clone()
    };

    let edge_name = |e: usize| {
        if e % 2 == 0 {
            format!("o{}", e / 2 + 1)
        } else {
            format!("u{}", e / 2 + 1)
        }
    };
    let mut edges = Vec::with_capacity(2 * m);
    let mut colors = Vec::with_capacity(2 * m);
    for e in 0..2 * m {
        let right = name_of((e, Side::Right), &mut regions);
        let left = name_of((e, Side::Left), &mut regions);
        edges.push(Edge {
            name: edge_name(e),
            right,
            left,
        });
        let i = e / 2;
        colors.push(if e % 2 == 0 { terms[i].2 } else { ports[i].1 });
    }
    let crossings = (0..m)
        .map(|i| {
            // right of the kink: right(over_out) at +, right(over_in) at −
            let source = (kink(i), Side::Right);
            Crossing {
                sign: terms[i].0,
                over_in: edge_name(kink(i)),
                over_out: edge_name(kink(i)),
                under_in: edge_name(under(prev[i])),
                under_out: edge_name(under(i)),
                source_region: name_of(source, &mut regions),
            }
        })
        .collect();

    let d = Diagram1 {
        regions: region_list,
        edges,
        crossings,
        endpoints: Vec::new(),
    };
    Ok((d, Coloring { edges: colors }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{extract_chain, fundamental_presentation};
    use crate::quandle::dihedral;

    fn chain(terms: &[(i64, &[Element])]) -> Chain {
        Chain::from_terms(2, terms.iter().map(|(k, t)| (*k, t.to_vec()))).unwrap()
    }

    #[test]
    fn three_crossing_round_trip() {
        let r3 = dihedral(3).unwrap();
        let c = chain(&[(1, &[0, 1]), (1, &[1, 2]), (-1, &[1, 0])]);
        let (d, col) = realize_two_cycle(&r3, &c, Variant::Q).unwrap();
        assert!(d.validate().is_ok(), "{:?}", d.validate());
        assert_eq!(d.crossings.len(), 3);
        assert_eq!(extract_chain(&d, &r3, &col).unwrap(), c);
        // one presentation generator per kink and per under edge chain
        assert!(fundamental_presentation(&d).unwrap().generators.len() >= 3);
    }

    #[test]
    fn empty_chain_gives_empty_diagram() {
        let r3 = dihedral(3).unwrap();
        let (d, col) = realize_two_cycle(&r3, &Chain::zero(2), Variant::Q).unwrap();
        assert_eq!(d, Diagram1::default());
        assert!(col.edges.is_empty());
        assert!(d.validate().is_ok());
    }

    #[test]
    fn coefficients_repeat_crossings() {
        let r3 = dihedral(3).unwrap();
        let c = chain(&[(2, &[0, 1]), (2, &[1, 2]), (-2, &[1, 0]), (5, &[2, 2])]);
        let (d, col) = realize_two_cycle(&r3, &c, Variant::R).unwrap();
        assert_eq!(d.crossings.len(), 11);
        assert_eq!(extract_chain(&d, &r3, &col).unwrap(), c);
        let (d, col) = realize_two_cycle(&r3, &c, Variant::Q).unwrap();
        assert_eq!(d.crossings.len(), 6);
        assert_eq!(
            extract_chain(&d, &r3, &col).unwrap(),
            project(&c, Variant::Q).unwrap()
        );
    }

    #[test]
    fn non_cycle_rejected() {
        let r3 = dihedral(3).unwrap();
        let c = chain(&[(1, &[0, 1])]);
        assert!(matches!(
            realize_two_cycle(&r3, &c, Variant::Q),
            Err(Error::Precondition(_))
        ));
    }
}
