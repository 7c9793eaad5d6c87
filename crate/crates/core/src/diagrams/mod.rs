//! Abstract 0- and 1-knot diagrams with explicit region incidence, their
//! quandle colorings and shadow colorings, and the chains they represent.
//!
//! Conventions used throughout:
//! - an edge is directed and records the region on its right and on its left;
//!   across an edge colored `e`, `left = right ∗ e`;
//! - at a crossing of sign `+1` the under-source edge is `under_in`, at `−1`
//!   it is `under_out`; the other under edge is the under-target, colored
//!   `source ∗ over`;
//! - a positive 0-diagram vertex `v` relates its neighbouring slots by
//!   `after = before ∗ v`, a negative one by `before = after ∗ v`.

mod coloring;
mod presentation;
mod realize;

pub use coloring::{
    endpoint_chain, enumerate_colorings, extract_chain, extract_chain0, extract_shadow_chain,
    parse_assignments, shadow_extend, shadow_extend0, write_assignments, Coloring,
    ShadowColoring, ShadowColoring0,
};
pub use presentation::{fundamental_presentation, Presentation};
pub use realize::realize_two_cycle;

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quandle::ValidationReport;

/// Directed segment of the universe with its two adjacent regions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub name: String,
    pub right: String,
    pub left: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: i8,
    pub over_in: String,
    pub over_out: String,
    pub under_in: String,
    pub under_out: String,
    pub source_region: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EndpointKind {
    Starts,
    Ends,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoint {
    pub edge: String,
    pub kind: EndpointKind,
}

/// Abstract 1-knot diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram1 {
    pub regions: Vec<String>,
    pub edges: Vec<Edge>,
    pub crossings: Vec<Crossing>,
    pub endpoints: Vec<Endpoint>,
}

/// Index form of a valid [`Diagram1`].
#[derive(Clone, Debug)]
pub(crate) struct Resolved {
    /// `(right, left)` region of each edge
    pub sides: Vec<(usize, usize)>,
    pub crossings: Vec<ResolvedCrossing>,
    /// `(edge, +1 for starts / −1 for ends)`
    pub endpoints: Vec<(usize, i8)>,
    pub region_index: HashMap<String, usize>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ResolvedCrossing {
    pub sign: i8,
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub source_region: usize,
}

impl ResolvedCrossing {
    pub fn under_source(&self) -> usize {
        if self.sign > 0 {
            self.under_in
        } else {
            self.under_out
        }
    }

    pub fn under_target(&self) -> usize {
        if self.sign > 0 {
            self.under_out
        } else {
            self.under_in
        }
    }
}

impl Diagram1 {
    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn region_index(&self, name: &str) -> Option<usize> {
        self.regions.iter().position(|r| r == name)
    }

    pub fn is_closed(&self) -> bool {
        self.endpoints.is_empty()
    }

    pub fn validate(&self) -> ValidationReport<String> {
        let mut v = Vec::new();
        let mut regions = HashSet::new();
        for r in &self.regions {
            if !regions.insert(r.as_str()) {
                v.push(format!("region {r} declared twice"));
            }
        }
        let mut edges = HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if edges.insert(e.name.as_str(), i).is_some() {
                v.push(format!("edge {} declared twice", e.name));
            }
            for r in [&e.right, &e.left] {
                if !regions.contains(r.as_str()) {
                    v.push(format!("edge {} borders undeclared region {r}", e.name));
                }
            }
        }
        for r in &self.regions {
            if !self.edges.iter().any(|e| &e.right == r || &e.left == r) {
                v.push(format!("region {r} is not adjacent to any edge"));
            }
        }

        let mut inbound = vec![0usize; self.edges.len()];
        let mut outbound = vec![0usize; self.edges.len()];
        let touch = |name: &str, slot: &mut Vec<usize>, what: &str, v: &mut Vec<String>| {
            match edges.get(name) {
                Some(&i) => slot[i] += 1,
                None => v.push(format!("{what} references unknown edge {name}")),
            }
        };
        for (k, c) in self.crossings.iter().enumerate() {
            let what = format!("crossing {}", k + 1);
            if c.sign != 1 && c.sign != -1 {
                v.push(format!("{what} has sign {}", c.sign));
            }
            touch(&c.over_in, &mut inbound, &what, &mut v);
            touch(&c.under_in, &mut inbound, &what, &mut v);
            touch(&c.over_out, &mut outbound, &what, &mut v);
            touch(&c.under_out, &mut outbound, &what, &mut v);
            let over = [&c.over_in, &c.over_out];
            if over.contains(&&c.under_in) || over.contains(&&c.under_out) {
                v.push(format!("{what} uses one edge both over and under"));
            }
            if !regions.contains(c.source_region.as_str()) {
                v.push(format!(
                    "{what} has undeclared source region {}",
                    c.source_region
                ));
            }
        }
        for p in &self.endpoints {
            match p.kind {
                EndpointKind::Starts => touch(&p.edge, &mut outbound, "endpoint", &mut v),
                EndpointKind::Ends => touch(&p.edge, &mut inbound, "endpoint", &mut v),
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if inbound[i] != 1 {
                v.push(format!("edge {} is inbound {} times", e.name, inbound[i]));
            }
            if outbound[i] != 1 {
                v.push(format!("edge {} is outbound {} times", e.name, outbound[i]));
            }
        }
        ValidationReport { violations: v }
    }

    pub(crate) fn resolve(&self) -> Result<Resolved> {
        let report = self.validate();
        if !report.is_ok() {
            return Err(Error::Precondition(format!(
                "invalid diagram: {}",
                report.violations.join("; ")
            )));
        }
        let region_index: HashMap<String, usize> = self
            .regions
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let edge_index: HashMap<&str, usize> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.name.as_str(), i))
            .collect();
        Ok(Resolved {
            sides: self
                .edges
                .iter()
                .map(|e| (region_index[&e.right], region_index[&e.left]))
                .collect(),
            crossings: self
                .crossings
                .iter()
                .map(|c| ResolvedCrossing {
                    sign: c.sign,
                    over_in: edge_index[c.over_in.as_str()],
                    over_out: edge_index[c.over_out.as_str()],
                    under_in: edge_index[c.under_in.as_str()],
                    under_out: edge_index[c.under_out.as_str()],
                    source_region: region_index[&c.source_region],
                })
                .collect(),
            endpoints: self
                .endpoints
                .iter()
                .map(|p| {
                    let sign = match p.kind {
                        EndpointKind::Starts => 1,
                        EndpointKind::Ends => -1,
                    };
                    (edge_index[p.edge.as_str()], sign)
                })
                .collect(),
            region_index,
        })
    }

    /// Parses the sectioned text format:
    ///
    /// ```text
    /// regions: r0 r1
    /// edges:
    /// e1 r0 r1
    /// crossings:
    /// + e1 e1 e2 e3 r0
    /// endpoints:
    /// e2 starts
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Section {
            None,
            Edges,
            Crossings,
            Endpoints,
        }
        let mut d = Diagram1::default();
        let mut section = Section::None;
        let mut saw_regions = false;
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("regions:") {
                if saw_regions {
                    return Err(Error::parse(no, "second regions section"));
                }
                saw_regions = true;
                d.regions = rest.split_whitespace().map(String::from).collect();
                section = Section::None;
                continue;
            }
            let header = |s: &str| line.strip_prefix(s).map(str::trim);
            if let Some(rest) = header("edges:") {
                section = Section::Edges;
                if !rest.is_empty() {
                    return Err(Error::parse(no, "edges header takes no arguments"));
                }
                continue;
            }
            if let Some(rest) = header("crossings:") {
                section = Section::Crossings;
                if !rest.is_empty() {
                    return Err(Error::parse(no, "crossings header takes no arguments"));
                }
                continue;
            }
            if let Some(rest) = header("endpoints:") {
                section = Section::Endpoints;
                if !rest.is_empty() {
                    return Err(Error::parse(no, "endpoints header takes no arguments"));
                }
                continue;
            }
            let t: Vec<&str> = line.split_whitespace().collect();
            match section {
                Section::None => return Err(Error::parse(no, format!("line outside any section: {line:?}"))),
                Section::Edges => {
                    let [name, right, left] = t[..] else {
                        return Err(Error::parse(no, "expected `<edge> <right> <left>`"));
                    };
                    d.edges.push(Edge {
                        name: name.into(),
                        right: right.into(),
                        left: left.into(),
                    });
                }
                Section::Crossings => {
                    let [sign, oi, oo, ui, uo, src] = t[..] else {
                        return Err(Error::parse(
                            no,
                            "expected `<sign> <over_in> <over_out> <under_in> <under_out> <source_region>`",
                        ));
                    };
                    d.crossings.push(Crossing {
                        sign: parse_sign(sign).ok_or_else(|| Error::parse(no, format!("bad sign {sign:?}")))?,
                        over_in: oi.into(),
                        over_out: oo.into(),
                        under_in: ui.into(),
                        under_out: uo.into(),
                        source_region: src.into(),
                    });
                }
                Section::Endpoints => {
                    let kind = match t[..] {
                        [_, "starts"] => EndpointKind::Starts,
                        [_, "ends"] => EndpointKind::Ends,
                        _ => return Err(Error::parse(no, "expected `<edge> starts|ends`")),
                    };
                    d.endpoints.push(Endpoint {
                        edge: t[0].into(),
                        kind,
                    });
                }
            }
        }
        Ok(d)
    }
}

fn parse_sign(s: &str) -> Option<i8> {
    match s {
        "+" | "+1" | "1" => Some(1),
        "-" | "-1" => Some(-1),
        _ => None,
    }
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for Diagram1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "regions: {}", self.regions.join(" "))?;
        writeln!(f, "edges:")?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.name, e.right, e.left)?;
        }
        writeln!(f, "crossings:")?;
        for c in &self.crossings {
            writeln!(
                f,
                "{} {} {} {} {} {}",
                sign_char(c.sign),
                c.over_in,
                c.over_out,
                c.under_in,
                c.under_out,
                c.source_region
            )?;
        }
        if !self.endpoints.is_empty() {
            writeln!(f, "endpoints:")?;
            for p in &self.endpoints {
                let kind = match p.kind {
                    EndpointKind::Starts => "starts",
                    EndpointKind::Ends => "ends",
                };
                writeln!(f, "{} {kind}", p.edge)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub name: String,
    pub sign: i8,
}

/// One oriented circle: `regions[i]` precedes `vertices[i]`, which is
/// followed by `regions[(i + 1) % k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circle {
    pub regions: Vec<String>,
    pub vertices: Vec<Vertex>,
}

/// Abstract 0-knot diagram: oriented circles carrying signed vertices.
/// A region name occurring in several slots denotes one region.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram0 {
    pub circles: Vec<Circle>,
}

impl Diagram0 {
    /// Vertex names in order of appearance.
    pub fn vertex_names(&self) -> Vec<String> {
        self.circles
            .iter()
            .flat_map(|c| c.vertices.iter().map(|v| v.name.clone()))
            .collect()
    }

    /// Distinct region names in order of first appearance.
    pub fn region_names(&self) -> Vec<String> {
        let mut seen = HashSet::new();
        self.circles
            .iter()
            .flat_map(|c| c.regions.iter())
            .filter(|r| seen.insert(r.as_str()))
            .cloned()
            .collect()
    }

    pub fn validate(&self) -> ValidationReport<String> {
        let mut v = Vec::new();
        let mut vertices = HashSet::new();
        for (k, c) in self.circles.iter().enumerate() {
            let ok = if c.vertices.is_empty() {
                c.regions.len() == 1
            } else {
                c.regions.len() == c.vertices.len()
            };
            if !ok {
                v.push(format!(
                    "circle {} has {} region slots and {} vertices",
                    k + 1,
                    c.regions.len(),
                    c.vertices.len()
                ));
            }
            for x in &c.vertices {
                if x.sign != 1 && x.sign != -1 {
                    v.push(format!("vertex {} has sign {}", x.name, x.sign));
                }
                if !vertices.insert(x.name.as_str()) {
                    v.push(format!("vertex {} occurs twice", x.name));
                }
            }
        }
        for r in self.region_names() {
            if vertices.contains(r.as_str()) {
                v.push(format!("{r} names both a region and a vertex"));
            }
        }
        ValidationReport { violations: v }
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "invalid diagram: {}",
                report.violations.join("; ")
            )))
        }
    }

    /// One line per circle: `circle: r0 v1+ r1 v2- …`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut d = Diagram0::default();
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rest = line
                .strip_prefix("circle:")
                .ok_or_else(|| Error::parse(no, "expected `circle:`"))?;
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            if tokens.is_empty() {
                return Err(Error::parse(no, "empty circle"));
            }
            let mut c = Circle {
                regions: Vec::new(),
                vertices: Vec::new(),
            };
            for (j, t) in tokens.iter().enumerate() {
                if j % 2 == 0 {
                    c.regions.push(t.to_string());
                    continue;
                }
                let (name, sign) = match (t.strip_suffix('+'), t.strip_suffix('-')) {
                    (Some(n), _) => (n, 1),
                    (_, Some(n)) => (n, -1),
                    _ => return Err(Error::parse(no, format!("vertex {t:?} lacks a +/- flag"))),
                };
                if name.is_empty() {
                    return Err(Error::parse(no, "vertex without a name"));
                }
                c.vertices.push(Vertex {
                    name: name.into(),
                    sign,
                });
            }
            d.circles.push(c);
        }
        Ok(d)
    }
}

impl fmt::Display for Diagram0 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.circles {
            f.write_str("circle:")?;
            for (i, r) in c.regions.iter().enumerate() {
                write!(f, " {r}")?;
                if let Some(v) = c.vertices.get(i) {
                    write!(f, " {}{}", v.name, sign_char(v.sign))?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Either kind of diagram, detected from the file contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyDiagram {
    Zero(Diagram0),
    One(Diagram1),
}

impl AnyDiagram {
    pub fn parse(text: &str) -> Result<Self> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with("circle:") => Ok(AnyDiagram::Zero(Diagram0::parse(text)?)),
            _ => Ok(AnyDiagram::One(Diagram1::parse(text)?)),
        }
    }

    pub fn validate(&self) -> ValidationReport<String> {
        match self {
            AnyDiagram::Zero(d) => d.validate(),
            AnyDiagram::One(d) => d.validate(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KINK: &str = "\
regions: a b
edges:
o a b
u1 a b
u2 b a
crossings:
+ o o u1 u2 a
+ x x u2 u1 b
";

    #[test]
    fn parse_and_print_round_trip() {
        let text = "regions: r0 r1\nedges:\ne1 r0 r1\ne2 r1 r0\ncrossings:\n+ e1 e1 e2 e2 r0\n";
        let d = Diagram1::parse(text).unwrap();
        assert_eq!(d.crossings[0].sign, 1);
        assert_eq!(Diagram1::parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn kink_is_legal() {
        let text = "regions: a b\nedges:\no a b\nu a b\ncrossings:\n+ o o u u a\n";
        let d = Diagram1::parse(text).unwrap();
        assert!(d.validate().is_ok(), "{:?}", d.validate());
    }

    #[test]
    fn duplicate_inbound_is_reported() {
        let text = "regions: a b\nedges:\no a b\nu a b\nw a b\ncrossings:\n+ o o u w a\n+ o o u w a\n";
        let d = Diagram1::parse(text).unwrap();
        let r = d.validate();
        assert!(r.violations.iter().any(|m| m.contains("edge u is inbound 2 times")));
    }

    #[test]
    fn unknown_references() {
        let d = Diagram1::parse(KINK).unwrap();
        let r = d.validate();
        assert!(r.violations.iter().any(|m| m.contains("unknown edge x")));
        let d = Diagram1::parse("regions: a\nedges:\ne a z\nendpoints:\ne starts\ne ends\n").unwrap();
        assert!(d.validate().violations.iter().any(|m| m.contains("undeclared region z")));
        assert!(d.resolve().is_err());
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(Diagram1::parse("e a b\n"), Err(Error::Parse { line: 1, .. })));
        assert!(Diagram1::parse("regions: a\ncrossings:\n* a a a a a\n").is_err());
        assert!(Diagram1::parse("regions: a\nendpoints:\ne middle\n").is_err());
    }

    #[test]
    fn zero_diagram_format() {
        let d = Diagram0::parse("circle: r0 v1+ r1 v2- \ncircle: s\n").unwrap();
        assert_eq!(d.circles.len(), 2);
        assert_eq!(d.circles[0].vertices[1].sign, -1);
        assert!(d.validate().is_ok());
        assert_eq!(Diagram0::parse(&d.to_string()).unwrap(), d);
        assert_eq!(d.region_names(), vec!["r0", "r1", "s"]);

        let bad = Diagram0::parse("circle: r0 v1+\ncircle: r0 v1+ r0\n").unwrap();
        assert!(!bad.validate().is_ok());
        assert!(Diagram0::parse("circle: r0 v1").is_err());
    }

    #[test]
    fn detects_kind() {
        assert!(matches!(AnyDiagram::parse("# c\ncircle: r").unwrap(), AnyDiagram::Zero(_)));
        assert!(matches!(AnyDiagram::parse("regions: r\n").unwrap(), AnyDiagram::One(_)));
    }
}
