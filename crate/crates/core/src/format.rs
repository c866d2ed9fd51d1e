//! Text formats `polysupp 1` and `polymat 1`.
//!
//! ```text
//! polysupp 1
//! d=3 n=4
//! 0,0,0
//! 0,1,3
//! ```
//!
//! Support indices are listed one per line in lexicographic order. Matrix
//! files list the `n^d` entries in cell order, `n` per line, as integers or
//! `p/q` fractions in lowest terms.

use std::fmt::Write;

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::matrix::{HyperMatrix, Q};
use crate::shape::Shape;
use crate::support::SupportSet;

fn header(kind: &str, shape: Shape) -> String {
    format!("{kind} 1\nd={} n={}\n", shape.d(), shape.n())
}

pub fn write_support(s: &SupportSet) -> String {
    let mut out = header("polysupp", s.shape());
    for idx in s.indices() {
        let parts: Vec<String> = idx.iter().map(|a| a.to_string()).collect();
        out.push_str(&parts.join(","));
        out.push('\n');
    }
    out
}

fn format_q(e: &Q) -> String {
    if e.is_integer() {
        e.numer().to_string()
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

pub fn write_matrix(m: &HyperMatrix) -> String {
    let mut out = header("polymat", m.shape());
    for row in m.entries().chunks(m.shape().n()) {
        let parts: Vec<String> = row.iter().map(format_q).collect();
        let _ = writeln!(out, "{}", parts.join(" "));
    }
    out
}

fn parse_header<'a>(text: &'a str, kind: &str) -> Result<(Shape, impl Iterator<Item = (usize, &'a str)>)> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim()));
    let (_, magic) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    if magic != format!("{kind} 1") {
        return Err(Error::Parse { line: 1, msg: format!("expected `{kind} 1`") });
    }
    let (_, dims) = lines.next().ok_or(Error::Parse { line: 2, msg: "missing shape line".into() })?;
    let bad = || Error::Parse { line: 2, msg: "expected `d=<d> n=<n>`".into() };
    let mut d = None;
    let mut n = None;
    for tok in dims.split_whitespace() {
        match tok.split_once('=') {
            Some(("d", v)) => d = Some(v.parse::<usize>().map_err(|_| bad())?),
            Some(("n", v)) => n = Some(v.parse::<usize>().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    let shape = Shape::new(d.ok_or_else(bad)?, n.ok_or_else(bad)?)?;
    Ok((shape, lines))
}

pub fn parse_support(text: &str) -> Result<SupportSet> {
    let (shape, lines) = parse_header(text, "polysupp")?;
    let mut s = SupportSet::empty(shape);
    for (line, l) in lines {
        if l.is_empty() {
            continue;
        }
        let idx = l
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { line, msg: format!("bad index `{l}`") })?;
        shape.check_index(&idx).map_err(|_| Error::Parse { line, msg: format!("index `{l}` outside the shape") })?;
        s.insert(shape.cell(&idx));
    }
    Ok(s)
}

fn parse_q(tok: &str) -> Option<Q> {
    match tok.split_once('/') {
        Some((p, q)) => {
            let den: BigInt = q.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Q::new(p.parse().ok()?, den))
        }
        None => Some(Q::from_integer(tok.parse().ok()?)),
    }
}

pub fn parse_matrix(text: &str) -> Result<HyperMatrix> {
    let (shape, lines) = parse_header(text, "polymat")?;
    let mut entries = Vec::with_capacity(shape.cells());
    let mut last = 2;
    for (line, l) in lines {
        last = line;
        for tok in l.split_whitespace() {
            entries.push(parse_q(tok).ok_or_else(|| Error::Parse { line, msg: format!("bad rational `{tok}`") })?);
        }
    }
    if entries.len() != shape.cells() {
        return Err(Error::Parse { line: last, msg: format!("expected {} entries, found {}", shape.cells(), entries.len()) });
    }
    HyperMatrix::new(shape, entries).map_err(|e| Error::Parse { line: last, msg: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::q;

    #[test]
    fn support_round_trip() {
        let sh = Shape::new(3, 4).unwrap();
        let s = SupportSet::from_cells(sh, [0, 7, 63]);
        let text = write_support(&s);
        assert_eq!(text, "polysupp 1\nd=3 n=4\n0,0,0\n0,1,3\n3,3,3\n");
        assert_eq!(parse_support(&text).unwrap(), s);
        assert_eq!(write_support(&parse_support(&text).unwrap()), text);
    }

    #[test]
    fn matrix_round_trip() {
        let sh = Shape::new(2, 2).unwrap();
        let m = HyperMatrix::new(sh, vec![q(1, 2), q(1, 2), q(1, 1), q(0, 1)]).unwrap();
        let text = write_matrix(&m);
        assert_eq!(text, "polymat 1\nd=2 n=2\n1/2 1/2\n1 0\n");
        assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_support("polysupp 2\nd=3 n=4\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_support("polysupp 1\nd=3 n=4\n0,0,4\n"), Err(Error::Parse { line: 3, .. })));
        assert!(parse_matrix("polymat 1\nd=1 n=2\n1/0 1\n").is_err());
        assert!(parse_matrix("polymat 1\nd=1 n=2\n-1 2\n").is_err());
    }
}
