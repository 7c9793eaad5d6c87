//! Text format for operation tables.
//!
//! ```text
//! # R_3
//! 3
//! 0 2 1
//! 2 1 0
//! 1 0 2
//! labels: α β γ
//! ```
//!
//! Row `a` lists `a∗0 … a∗(n−1)`. Lines starting with `#` and blank lines are
//! ignored.

use crate::error::{Error, Result};

use super::Element;

/// Raw table and optional labels; axioms are not checked here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleFile {
    pub rows: Vec<Vec<Element>>,
    pub labels: Option<Vec<String>>,
}

pub fn parse_quandle(text: &str) -> Result<QuandleFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (no, first) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing size line"))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::parse(no, format!("expected size, found {first:?}")))?;
    if n == 0 {
        return Err(Error::parse(no, "size must be positive"));
    }

    let mut rows = Vec::with_capacity(n);
    while rows.len() < n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(no, format!("expected {n} rows, found {}", rows.len())))?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<Element>()
                    .map_err(|_| Error::parse(no, format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::parse(
                no,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }

    let mut labels = None;
    for (no, line) in lines {
        match line.strip_prefix("labels:") {
            Some(rest) if labels.is_none() => {
                let l: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if l.len() != n {
                    return Err(Error::parse(no, format!("{} labels for {n} elements", l.len())));
                }
                labels = Some(l);
            }
            _ => return Err(Error::parse(no, format!("unexpected line {line:?}"))),
        }
    }
    Ok(QuandleFile { rows, labels })
}

pub fn write_quandle(rows: &[Vec<Element>], labels: Option<&[String]>) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(l) = labels {
        out.push_str("labels: ");
        out.push_str(&l.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::dihedral;

    #[test]
    fn round_trip() {
        let r3 = dihedral(3).unwrap();
        let labels = vec!["α".to_string(), "β".into(), "γ".into()];
        let text = write_quandle(&r3.rows(), Some(&labels));
        let parsed = parse_quandle(&text).unwrap();
        assert_eq!(parsed.rows, r3.rows());
        assert_eq!(parsed.labels, Some(labels));
    }

    #[test]
    fn comments_and_errors() {
        let text = "# trivial\n2\n0 0\n\n# middle\n1 1\n";
        assert_eq!(parse_quandle(text).unwrap().rows, vec![vec![0, 0], vec![1, 1]]);
        assert!(matches!(parse_quandle("2\n0 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quandle("2\n0 0 0\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_quandle("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_quandle("1\n0\nlabels: a b\n").is_err());
        assert!(parse_quandle("1\n0\nextra\n").is_err());
    }
}
