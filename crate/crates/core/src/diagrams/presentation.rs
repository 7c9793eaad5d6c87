use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::quandle::{Element, RackTable};

use super::coloring::strands;
use super::Diagram1;

/// Wirtinger-style quandle presentation: one generator per strand and one
/// relation `source ∗ over = target` per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    /// `(source, over, target)` as generator indices
    pub relations: Vec<(usize, usize, usize)>,
}

fn generator_name(i: usize, total: usize) -> String {
    const LETTERS: [char; 8] = ['x', 'y', 'z', 'w', 'u', 'v', 's', 't'];
    if total <= LETTERS.len() {
        LETTERS[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

pub fn fundamental_presentation(d: &Diagram1) -> Result<Presentation> {
    let r = d.resolve()?;
    let (strand, k) = strands(&r);
    Ok(Presentation {
        generators: (0..k).map(|i| generator_name(i, k)).collect(),
        relations: r
            .crossings
            .iter()
            .map(|c| (strand[c.under_source()], strand[c.over_in], strand[c.under_target()]))
            .collect(),
    })
}

impl Presentation {
    /// Number of assignments of generators satisfying every relation, by
    /// exhaustive search. Exponential in the number of generators.
    pub fn count_homs(&self, rack: &RackTable) -> usize {
        let n = rack.size();
        let k = self.generators.len();
        let mut a: Vec<Element> = vec![0; k];
        let mut count = 0;
        loop {
            if self.relations.iter().all(|&(s, o, t)| rack.op(a[s], a[o]) == a[t]) {
                count += 1;
            }
            // odometer
            let mut i = k;
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                a[i] += 1;
                if a[i] < n {
                    break;
                }
                a[i] = 0;
            }
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.generators;
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|&(s, o, t)| format!("{}*{}={}", g[s], g[o], g[t]))
            .collect();
        if rels.is_empty() {
            write!(f, "<{} : >", g.join(","))
        } else {
            write!(f, "<{} : {}>", g.join(","), rels.join(", "))
        }
    }
}
