use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;

use crate::chains::Chain;
use crate::error::{Error, Result};
use crate::quandle::{Element, RackTable, ValidationReport};

use super::{Diagram0, Diagram1, Resolved};

/// Edge colors, indexed like [`Diagram1::edges`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub edges: Vec<Element>,
}

/// Edge and region colors, indexed like [`Diagram1::edges`] and
/// [`Diagram1::regions`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShadowColoring {
    pub edges: Vec<Element>,
    pub regions: Vec<Element>,
}

/// Vertex and region colors of a 0-diagram, indexed like
/// [`Diagram0::vertex_names`] and [`Diagram0::region_names`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShadowColoring0 {
    pub vertices: Vec<Element>,
    pub regions: Vec<Element>,
}

/// Parses `<name> = <element>` lines; elements stay as raw tokens.
pub fn parse_assignments(text: &str) -> Result<Vec<(String, String)>> {
    let mut out: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, value) = line
            .split_once('=')
            .ok_or_else(|| Error::parse(i + 1, "expected `<name> = <element>`"))?;
        let (name, value) = (name.trim(), value.trim());
        if name.is_empty() || value.is_empty() || value.contains(char::is_whitespace) {
            return Err(Error::parse(i + 1, "expected `<name> = <element>`"));
        }
        if out.iter().any(|(n, _)| n == name) {
            return Err(Error::parse(i + 1, format!("{name} assigned twice")));
        }
        out.push((name.into(), value.into()));
    }
    Ok(out)
}

/// One `<name> = <label>` line per pair.
pub fn write_assignments<'a>(
    rack: &RackTable,
    pairs: impl IntoIterator<Item = (&'a str, Element)>,
) -> String {
    pairs
        .into_iter()
        .map(|(n, x)| format!("{n} = {}\n", rack.label(x)))
        .collect()
}

struct Lookup<'a> {
    rack: &'a RackTable,
    map: HashMap<&'a str, &'a str>,
}

impl<'a> Lookup<'a> {
    fn new(rack: &'a RackTable, pairs: &'a [(String, String)], known: &[&[String]]) -> Result<Self> {
        for (n, _) in pairs {
            if !known.iter().any(|names| names.contains(n)) {
                return Err(Error::domain(format!("{n} is not part of the diagram")));
            }
        }
        Ok(Lookup {
            rack,
            map: pairs.iter().map(|(n, v)| (n.as_str(), v.as_str())).collect(),
        })
    }

    fn get(&self, name: &str) -> Result<Element> {
        let token = self
            .map
            .get(name)
            .ok_or_else(|| Error::domain(format!("no color for {name}")))?;
        self.rack
            .element(token)
            .ok_or_else(|| Error::domain(format!("{token} is not an element")))
    }

    fn all(&self, names: &[String]) -> Result<Vec<Element>> {
        names.iter().map(|n| self.get(n)).collect()
    }
}

fn names_of(d: &Diagram1) -> Vec<String> {
    d.edges.iter().map(|e| e.name.clone()).collect()
}

fn in_range(rack: &RackTable, colors: &[Element], what: &str, v: &mut Vec<String>) {
    for &x in colors {
        if x >= rack.size() {
            v.push(format!("{what} color {x} is not an element"));
        }
    }
}

fn require(report: ValidationReport<String>) -> Result<()> {
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "invalid coloring: {}",
            report.violations.join("; ")
        )))
    }
}

impl Coloring {
    /// Reads edge colors; region assignments, if present, are ignored.
    pub fn from_assignments(d: &Diagram1, rack: &RackTable, pairs: &[(String, String)]) -> Result<Self> {
        let lookup = Lookup::new(rack, pairs, &[&names_of(d), &d.regions])?;
        Ok(Coloring {
            edges: lookup.all(&names_of(d))?,
        })
    }

    pub fn check(&self, d: &Diagram1, rack: &RackTable) -> Result<ValidationReport<String>> {
        let r = d.resolve()?;
        Ok(self.check_resolved(&r, d, rack))
    }

    fn check_resolved(&self, r: &Resolved, d: &Diagram1, rack: &RackTable) -> ValidationReport<String> {
        let mut v = Vec::new();
        if self.edges.len() != d.edges.len() {
            v.push(format!("{} colors for {} edges", self.edges.len(), d.edges.len()));
            return ValidationReport { violations: v };
        }
        in_range(rack, &self.edges, "edge", &mut v);
        if !v.is_empty() {
            return ValidationReport { violations: v };
        }
        let c = &self.edges;
        for (k, x) in r.crossings.iter().enumerate() {
            if c[x.over_in] != c[x.over_out] {
                v.push(format!("crossing {}: over strand changes color", k + 1));
            }
            let expected = rack.op(c[x.under_source()], c[x.over_in]);
            if c[x.under_target()] != expected {
                v.push(format!(
                    "crossing {}: under-target is {} but should be {}",
                    k + 1,
                    rack.label(c[x.under_target()]),
                    rack.label(expected)
                ));
            }
        }
        ValidationReport { violations: v }
    }

    pub fn assignments(&self, d: &Diagram1, rack: &RackTable) -> String {
        write_assignments(rack, d.edges.iter().map(|e| e.name.as_str()).zip(self.edges.iter().copied()))
    }
}

impl ShadowColoring {
    pub fn from_assignments(d: &Diagram1, rack: &RackTable, pairs: &[(String, String)]) -> Result<Self> {
        let lookup = Lookup::new(rack, pairs, &[&names_of(d), &d.regions])?;
        Ok(ShadowColoring {
            edges: lookup.all(&names_of(d))?,
            regions: lookup.all(&d.regions)?,
        })
    }

    pub fn coloring(&self) -> Coloring {
        Coloring {
            edges: self.edges.clone(),
        }
    }

    pub fn check(&self, d: &Diagram1, rack: &RackTable) -> Result<ValidationReport<String>> {
        let r = d.resolve()?;
        Ok(self.check_resolved(&r, d, rack))
    }

    fn check_resolved(&self, r: &Resolved, d: &Diagram1, rack: &RackTable) -> ValidationReport<String> {
        let mut report = self.coloring().check_resolved(r, d, rack);
        let v = &mut report.violations;
        if self.regions.len() != d.regions.len() {
            v.push(format!("{} colors for {} regions", self.regions.len(), d.regions.len()));
            return report;
        }
        in_range(rack, &self.regions, "region", v);
        if !v.is_empty() {
            return report;
        }
        for (i, &(right, left)) in r.sides.iter().enumerate() {
            if self.regions[left] != rack.op(self.regions[right], self.edges[i]) {
                v.push(format!("edge {}: left ≠ right ∗ edge", d.edges[i].name));
            }
        }
        for &(e, _) in &r.endpoints {
            if self.regions[r.sides[e].0] != self.edges[e] {
                v.push(format!(
                    "endpoint of {}: region and arc colors differ",
                    d.edges[e].name
                ));
            }
        }
        report
    }

    pub fn assignments(&self, d: &Diagram1, rack: &RackTable) -> String {
        let edges = d.edges.iter().map(|e| e.name.as_str()).zip(self.edges.iter().copied());
        let regions = d.regions.iter().map(String::as_str).zip(self.regions.iter().copied());
        write_assignments(rack, edges.chain(regions))
    }
}

impl ShadowColoring0 {
    pub fn from_assignments(d: &Diagram0, rack: &RackTable, pairs: &[(String, String)]) -> Result<Self> {
        let vertices = d.vertex_names();
        let regions = d.region_names();
        let lookup = Lookup::new(rack, pairs, &[&vertices, &regions])?;
        Ok(ShadowColoring0 {
            vertices: lookup.all(&vertices)?,
            regions: lookup.all(&regions)?,
        })
    }

    pub fn check(&self, d: &Diagram0, rack: &RackTable) -> Result<ValidationReport<String>> {
        d.require_valid()?;
        let mut v = Vec::new();
        let regions = d.region_names();
        if self.vertices.len() != d.vertex_names().len() || self.regions.len() != regions.len() {
            v.push("color list lengths do not match the diagram".to_string());
            return Ok(ValidationReport { violations: v });
        }
        in_range(rack, &self.vertices, "vertex", &mut v);
        in_range(rack, &self.regions, "region", &mut v);
        if !v.is_empty() {
            return Ok(ValidationReport { violations: v });
        }
        for (before, x, after, sign) in slots(d, &regions) {
            let (src, dst) = if sign > 0 { (before, after) } else { (after, before) };
            if rack.op(self.regions[src], self.vertices[x]) != self.regions[dst] {
                v.push(format!(
                    "vertex {}: region colors do not match",
                    d.vertex_names()[x]
                ));
            }
        }
        Ok(ValidationReport { violations: v })
    }

    pub fn assignments(&self, d: &Diagram0, rack: &RackTable) -> String {
        let vn = d.vertex_names();
        let rn = d.region_names();
        let vertices = vn.iter().map(String::as_str).zip(self.vertices.iter().copied());
        let regions = rn.iter().map(String::as_str).zip(self.regions.iter().copied());
        write_assignments(rack, regions.chain(vertices))
    }
}

/// `(before region, vertex, after region, sign)` for every vertex.
fn slots(d: &Diagram0, regions: &[String]) -> Vec<(usize, usize, usize, i8)> {
    let index: HashMap<&str, usize> = regions.iter().enumerate().map(|(i, r)| (r.as_str(), i)).collect();
    let mut out = Vec::new();
    let mut x = 0;
    for c in &d.circles {
        let k = c.vertices.len();
        for (i, v) in c.vertices.iter().enumerate() {
            let before = index[c.regions[i].as_str()];
            let after = index[c.regions[(i + 1) % k].as_str()];
            out.push((before, x, after, v.sign));
            x += 1;
        }
    }
    out
}

/// Strand of each edge: edges joined through over-passes, numbered by first edge.
pub(crate) fn strands(r: &Resolved) -> (Vec<usize>, usize) {
    let n = r.sides.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in &r.crossings {
        let (a, b) = (find(&mut parent, c.over_in), find(&mut parent, c.over_out));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut id = HashMap::new();
    let strand = (0..n)
        .map(|e| {
            let root = find(&mut parent, e);
            let next = id.len();
            *id.entry(root).or_insert(next)
        })
        .collect();
    (strand, id.len())
}

/// Every coloring of the diagram, sorted by edge-color vector.
///
/// Strand colors are chosen in strand order; each choice is propagated through
/// the crossing relations in both directions before the next free strand is
/// chosen.
pub fn enumerate_colorings(d: &Diagram1, rack: &RackTable) -> Result<Vec<Coloring>> {
    let r = d.resolve()?;
    let (strand, k) = strands(&r);
    let relations: Vec<(usize, usize, usize)> = r
        .crossings
        .iter()
        .map(|c| (strand[c.under_source()], strand[c.over_in], strand[c.under_target()]))
        .collect();

    let mut found = Vec::new();
    search(rack, &relations, vec![None; k], &mut found);
    let mut out: Vec<Coloring> = found
        .into_iter()
        .map(|colors| Coloring {
            edges: strand.iter().map(|&s| colors[s]).collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

fn propagate(rack: &RackTable, relations: &[(usize, usize, usize)], a: &mut [Option<Element>]) -> bool {
    loop {
        let mut changed = false;
        for &(s, o, t) in relations {
            match (a[s], a[o], a[t]) {
                (Some(x), Some(y), Some(z)) => {
                    if rack.op(x, y) != z {
                        return false;
                    }
                }
                (Some(x), Some(y), None) => {
                    a[t] = Some(rack.op(x, y));
                    changed = true;
                }
                (None, Some(y), Some(z)) => {
                    a[s] = Some(rack.op_inv(z, y));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(
    rack: &RackTable,
    relations: &[(usize, usize, usize)],
    assigned: Vec<Option<Element>>,
    found: &mut Vec<Vec<Element>>,
) {
    let Some(free) = assigned.iter().position(Option::is_none) else {
        found.push(assigned.into_iter().map(Option::unwrap).collect());
        return;
    };
    for x in 0..rack.size() {
        let mut next = assigned.clone();
        next[free] = Some(x);
        if propagate(rack, relations, &mut next) {
            search(rack, relations, next, found);
        }
    }
}

/// Every region and element in one connected family must be reached from the
/// seed; otherwise the extension would not be unique.
fn unreached(names: &[String], colors: &[Option<Element>]) -> Result<Vec<Element>> {
    match colors.iter().position(Option::is_none) {
        Some(i) => Err(Error::Precondition(format!(
            "region {} is not connected to the seed region",
            names[i]
        ))),
        None => Ok(colors.iter().map(|c| c.unwrap()).collect()),
    }
}

/// Extends a coloring to the regions from one seeded region color.
/// `None` when propagation around some loop returns a different color.
pub fn shadow_extend(
    d: &Diagram1,
    rack: &RackTable,
    c: &Coloring,
    seed_region: &str,
    seed: Element,
) -> Result<Option<ShadowColoring>> {
    let r = d.resolve()?;
    require(c.check_resolved(&r, d, rack))?;
    let start = *r
        .region_index
        .get(seed_region)
        .ok_or_else(|| Error::domain(format!("unknown region {seed_region}")))?;
    rack.check_element(seed)?;

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); d.regions.len()];
    for (e, &(right, left)) in r.sides.iter().enumerate() {
        incident[right].push(e);
        if left != right {
            incident[left].push(e);
        }
    }
    let mut colors: Vec<Option<Element>> = vec![None; d.regions.len()];
    colors[start] = Some(seed);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &e in &incident[x] {
            let (right, left) = r.sides[e];
            let rc = colors[right];
            let lc = colors[left];
            let (target, value) = match (rc, lc) {
                (Some(a), _) => (left, rack.op(a, c.edges[e])),
                (None, Some(b)) => (right, rack.op_inv(b, c.edges[e])),
                (None, None) => unreachable!(),
            };
            match colors[target] {
                Some(existing) if existing != value => return Ok(None),
                Some(_) => {}
                None => {
                    colors[target] = Some(value);
                    queue.push_back(target);
                }
            }
        }
    }
    let regions = unreached(&d.regions, &colors)?;
    let shadow = ShadowColoring {
        edges: c.edges.clone(),
        regions,
    };
    Ok(shadow.check_resolved(&r, d, rack).is_ok().then_some(shadow))
}

/// Region colors of a 0-diagram from one seeded region and the vertex colors.
pub fn shadow_extend0(
    d: &Diagram0,
    rack: &RackTable,
    vertices: &[Element],
    seed_region: &str,
    seed: Element,
) -> Result<Option<ShadowColoring0>> {
    d.require_valid()?;
    let names = d.region_names();
    let start = names
        .iter()
        .position(|r| r == seed_region)
        .ok_or_else(|| Error::domain(format!("unknown region {seed_region}")))?;
    rack.check_element(seed)?;
    if vertices.len() != d.vertex_names().len() {
        return Err(Error::domain("one color per vertex required"));
    }
    for &x in vertices {
        rack.check_element(x)?;
    }
    // each vertex: src ∗ v = dst
    let rel: Vec<(usize, usize, usize)> = slots(d, &names)
        .into_iter()
        .map(|(b, x, a, s)| if s > 0 { (b, x, a) } else { (a, x, b) })
        .collect();
    let mut colors: Vec<Option<Element>> = vec![None; names.len()];
    colors[start] = Some(seed);
    let mut queue = VecDeque::from([start]);
    while let Some(r) = queue.pop_front() {
        for &(src, x, dst) in rel.iter().filter(|t| t.0 == r || t.2 == r) {
            let (target, value) = match colors[src] {
                Some(a) => (dst, rack.op(a, vertices[x])),
                None => (src, rack.op_inv(colors[dst].unwrap(), vertices[x])),
            };
            match colors[target] {
                Some(existing) if existing != value => return Ok(None),
                Some(_) => {}
                None => {
                    colors[target] = Some(value);
                    queue.push_back(target);
                }
            }
        }
    }
    Ok(Some(ShadowColoring0 {
        vertices: vertices.to_vec(),
        regions: unreached(&names, &colors)?,
    }))
}

/// `Σ sign·(under-source, over)` over the crossings of a closed diagram.
pub fn extract_chain(d: &Diagram1, rack: &RackTable, c: &Coloring) -> Result<Chain> {
    if !d.is_closed() {
        return Err(Error::Precondition(
            "endpoint terms need region colors; use a shadow coloring".into(),
        ));
    }
    let r = d.resolve()?;
    require(c.check_resolved(&r, d, rack))?;
    let mut chain = Chain::zero(2);
    for x in &r.crossings {
        let t = vec![c.edges[x.under_source()], c.edges[x.over_in]];
        chain.add_term(t, BigInt::from(x.sign));
    }
    Ok(chain)
}

/// `Σ sign·(source region, under-source, over)` over the crossings.
///
/// For a diagram with endpoints this is not a cycle by itself: its boundary
/// is cancelled by [`endpoint_chain`].
pub fn extract_shadow_chain(d: &Diagram1, rack: &RackTable, s: &ShadowColoring) -> Result<Chain> {
    let r = d.resolve()?;
    require(s.check_resolved(&r, d, rack))?;
    let mut chain = Chain::zero(3);
    for x in &r.crossings {
        let t = vec![
            s.regions[x.source_region],
            s.edges[x.under_source()],
            s.edges[x.over_in],
        ];
        chain.add_term(t, BigInt::from(x.sign));
    }
    Ok(chain)
}

/// Degenerate 2-chain of the endpoints: `+(a,a)` where an arc starts and
/// `−(a,a)` where it ends, `a` the arc color. Together with
/// [`extract_shadow_chain`] it satisfies `∂(crossing chain) + endpoints = 0`.
pub fn endpoint_chain(d: &Diagram1, rack: &RackTable, s: &ShadowColoring) -> Result<Chain> {
    let r = d.resolve()?;
    require(s.check_resolved(&r, d, rack))?;
    let mut chain = Chain::zero(2);
    for &(e, sign) in &r.endpoints {
        let a = s.edges[e];
        chain.add_term(vec![a, a], BigInt::from(sign));
    }
    Ok(chain)
}

/// `Σ sign·(source slot, vertex)`: the slot before a positive vertex, after a
/// negative one.
pub fn extract_chain0(d: &Diagram0, rack: &RackTable, s: &ShadowColoring0) -> Result<Chain> {
    require(s.check(d, rack)?)?;
    let mut chain = Chain::zero(2);
    for (before, x, after, sign) in slots(d, &d.region_names()) {
        let src = if sign > 0 { before } else { after };
        chain.add_term(vec![s.regions[src], s.vertices[x]], BigInt::from(sign));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{boundary, project, Variant};
    use crate::quandle::{dihedral, trivial};

    const A: Element = 0;
    const B: Element = 1;
    const G: Element = 2;

    const HOPF_LIKE: &str = "\
regions: p q
edges:
a p q
b q p
crossings:
+ a a b b p
";

    #[test]
    fn assignments_round_trip() {
        let labels = ["α", "β", "γ"].map(String::from).to_vec();
        let r3 = dihedral(3).unwrap().with_labels(labels).unwrap();
        let d = Diagram1::parse(HOPF_LIKE).unwrap();
        let pairs = parse_assignments("a = α\n# x\nb = 1\n").unwrap();
        let c = Coloring::from_assignments(&d, &r3, &pairs).unwrap();
        assert_eq!(c.edges, vec![A, B]);
        let text = c.assignments(&d, &r3);
        assert_eq!(text, "a = α\nb = β\n");
        assert!(parse_assignments("a α").is_err());
        assert!(parse_assignments("a = α\na = β").is_err());
        let pairs = parse_assignments("zz = α").unwrap();
        assert!(Coloring::from_assignments(&d, &r3, &pairs).is_err());
    }

    #[test]
    fn kink_colorings() {
        // one kink: under strand b passes under the loop a
        let r3 = dihedral(3).unwrap();
        let d = Diagram1::parse(HOPF_LIKE).unwrap();
        let all = enumerate_colorings(&d, &r3).unwrap();
        // b = b ∗ a forces a = b in R_3
        assert_eq!(all.len(), 3);
        for c in &all {
            assert_eq!(c.edges[0], c.edges[1]);
            assert!(extract_chain(&d, &r3, c).unwrap().is_degenerate_support());
        }
        let t2 = trivial(2).unwrap();
        assert_eq!(enumerate_colorings(&d, &t2).unwrap().len(), 4);
    }

    #[test]
    fn circles_always_shadow_extend() {
        let d = Diagram0::parse("circle: r").unwrap();
        let r3 = dihedral(3).unwrap();
        for x in [A, B, G] {
            let s = shadow_extend0(&d, &r3, &[], "r", x).unwrap().unwrap();
            assert_eq!(s.regions, vec![x]);
            assert!(extract_chain0(&d, &r3, &s).unwrap().is_zero());
        }
        assert!(matches!(shadow_extend0(&d, &r3, &[], "nope", A), Err(Error::Domain(_))));
    }

    #[test]
    fn negative_vertices_cancel() {
        let d = Diagram0::parse("circle: r0 v+ r1 w-").unwrap();
        let r3 = dihedral(3).unwrap();
        let s = shadow_extend0(&d, &r3, &[B, B], "r0", A).unwrap().unwrap();
        assert_eq!(s.regions, vec![A, G]);
        assert!(extract_chain0(&d, &r3, &s).unwrap().is_zero());
        // a 0-diagram whose vertex colors disagree around the circle
        assert!(shadow_extend0(&d, &r3, &[B, G], "r0", A).unwrap().is_none());
    }

    #[test]
    fn zero_diagram_chain_is_cycle() {
        let r3 = dihedral(3).unwrap();
        let d = Diagram0::parse("circle: a x+ b y+ c z- ").unwrap();
        for vs in [[A, B, G], [B, B, B], [A, G, B]] {
            if let Some(s) = shadow_extend0(&d, &r3, &vs, "a", A).unwrap() {
                let c = extract_chain0(&d, &r3, &s).unwrap();
                assert!(boundary(&r3, &c).is_zero());
            }
        }
    }

    #[test]
    fn bare_coloring_rejects_endpoints() {
        let r3 = dihedral(3).unwrap();
        let d = Diagram1::parse("regions: r\nedges:\ne r r\nendpoints:\ne starts\ne ends\n").unwrap();
        let c = Coloring { edges: vec![B] };
        assert!(matches!(extract_chain(&d, &r3, &c), Err(Error::Precondition(_))));
        let s = shadow_extend(&d, &r3, &c, "r", B).unwrap().unwrap();
        assert!(extract_shadow_chain(&d, &r3, &s).unwrap().is_zero());
        // +(β,β) − (β,β)
        assert!(endpoint_chain(&d, &r3, &s).unwrap().is_zero());
        // endpoint region must match the arc color
        assert!(shadow_extend(&d, &r3, &c, "r", A).unwrap().is_none());
    }

    #[test]
    fn invalid_coloring_rejected() {
        let r3 = dihedral(3).unwrap();
        let d = Diagram1::parse(HOPF_LIKE).unwrap();
        let c = Coloring { edges: vec![A, B] };
        assert!(!c.check(&d, &r3).unwrap().is_ok());
        assert!(matches!(extract_chain(&d, &r3, &c), Err(Error::Precondition(_))));
        assert!(shadow_extend(&d, &r3, &c, "p", A).is_err());
        let c = Coloring { edges: vec![A, A] };
        let q = project(&extract_chain(&d, &r3, &c).unwrap(), Variant::Q).unwrap();
        assert!(q.is_zero());
    }
}
