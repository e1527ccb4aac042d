//! Plain-text formats.
//!
//! Tables: the order `n` on the first line, then `n` rows of `n`
//! whitespace-separated entries; `#` starts a comment. Symmetric spaces add a
//! `#symspace base=<e|none>` header. Permutations are image sequences, one per
//! line. A (σ,φ) instance is a group table followed by a `sigma:` line with the
//! image sequence and a `phi:` block of `a -> b` lines covering `N`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::sigmaphi::SigmaPhiData;
use crate::symspace::{GroupWithInvolution, SymSpace};
use crate::table::{CayleyTable, Loop, Magma, DEFAULT_ORDER_CAP};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| parse_err(line_no, format!("expected an integer, found {t:?}")))
        })
        .collect()
}

fn parse_index(line_no: usize, token: &str) -> Result<usize> {
    token
        .trim()
        .parse::<usize>()
        .map_err(|_| parse_err(line_no, format!("expected an element index, found {:?}", token.trim())))
}

fn parse_rows<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Vec<Vec<i64>>> {
    let (first, header) = lines.next().ok_or(Error::Empty)?;
    let n = parse_index(first, header)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = first;
    for _ in 0..n {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(last, format!("expected {n} rows, found {}", rows.len())))?;
        rows.push(parse_numbers(no, line)?);
        last = no;
    }
    Ok(rows)
}

/// Reads the raw rows of a table file without validating them.
pub fn parse_table(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut lines = content_lines(text);
    let rows = parse_rows(&mut lines)?;
    if let Some((no, _)) = lines.next() {
        return Err(parse_err(no, "unexpected content after the table"));
    }
    Ok(rows)
}

pub fn read_magma(text: &str) -> Result<Magma> {
    Magma::from_rows(&parse_table(text)?)
}

pub fn read_loop(text: &str) -> Result<Loop> {
    Loop::new(CayleyTable::new(read_magma(text)?)?)
}

fn write_rows(out: &mut String, m: &Magma) {
    let n = m.order();
    let width = (n.saturating_sub(1)).to_string().len();
    writeln!(out, "{n}").unwrap();
    for x in 0..n {
        let row: Vec<String> = m.row(x).iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

pub fn write_table(m: &Magma) -> String {
    let mut out = String::new();
    write_rows(&mut out, m);
    out
}

pub fn read_symspace(text: &str) -> Result<SymSpace> {
    let mut base = None;
    for (i, line) in text.lines().enumerate() {
        if let Some(rest) = line.trim().strip_prefix("#symspace") {
            let value = rest
                .trim()
                .strip_prefix("base=")
                .ok_or_else(|| parse_err(i + 1, "expected base=<e|none>"))?;
            base = match value.trim() {
                "none" => None,
                e => Some(parse_index(i + 1, e)?),
            };
        }
    }
    SymSpace::new(read_magma(text)?, base)
}

pub fn write_symspace(s: &SymSpace) -> String {
    let mut out = match s.base() {
        Some(e) => format!("#symspace base={e}\n"),
        None => "#symspace base=none\n".to_string(),
    };
    write_rows(&mut out, s.table());
    out
}

pub fn parse_perm(line: &str) -> Result<Perm> {
    let images = line
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::NotPermutation(line.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Perm::new(images)
}

/// One permutation per line; all must share a degree.
pub fn read_perms(text: &str) -> Result<Vec<Perm>> {
    let mut out: Vec<Perm> = Vec::new();
    for (no, line) in content_lines(text) {
        let p = parse_perm(line).map_err(|e| parse_err(no, e.to_string()))?;
        if let Some(first) = out.first() {
            if first.degree() != p.degree() {
                return Err(parse_err(no, format!("degree {} differs from {}", p.degree(), first.degree())));
            }
        }
        out.push(p);
    }
    Ok(out)
}

pub fn write_perms(perms: &[Perm]) -> String {
    perms.iter().map(|p| format!("{p}\n")).collect()
}

pub fn read_instance(text: &str) -> Result<SigmaPhiData> {
    let mut lines = content_lines(text).peekable();
    let rows = parse_rows(&mut lines)?;
    let group = Loop::new(CayleyTable::new(Magma::from_rows(&rows)?)?)?;
    let n = group.order();
    // The loop may have moved the identity to 0; carry sigma and phi along.
    let rel = group.relabeling();
    let relabel = |no: usize, x: usize| {
        rel.get(x)
            .copied()
            .ok_or_else(|| parse_err(no, format!("element {x} is outside 0..{n}")))
    };

    let (no, line) = lines.next().ok_or_else(|| parse_err(0, "missing sigma: line"))?;
    let images = line
        .strip_prefix("sigma:")
        .ok_or_else(|| parse_err(no, "expected sigma:"))?;
    let images = images
        .split_whitespace()
        .map(|t| parse_index(no, t))
        .collect::<Result<Vec<_>>>()?;
    if images.len() != n {
        return Err(parse_err(no, format!("sigma has {} images, expected {n}", images.len())));
    }
    let mut sigma = vec![0; n];
    for (x, &s) in images.iter().enumerate() {
        sigma[relabel(no, x)?] = relabel(no, s)?;
    }

    let (no, line) = lines.next().ok_or_else(|| parse_err(0, "missing phi: block"))?;
    if line.strip_prefix("phi:").map(str::trim) != Some("") {
        return Err(parse_err(no, "expected phi:"));
    }
    let mut pairs = Vec::new();
    for (no, line) in lines {
        let (a, b) = line
            .split_once("->")
            .ok_or_else(|| parse_err(no, "expected `a -> b`"))?;
        pairs.push((relabel(no, parse_index(no, a)?)?, relabel(no, parse_index(no, b)?)?));
    }

    let trivial = sigma.iter().enumerate().all(|(x, &s)| x == s);
    let gw = if trivial {
        GroupWithInvolution::trivial(group)?
    } else {
        GroupWithInvolution::new(group, sigma)?
    };
    SigmaPhiData::new(gw, pairs)
}

pub fn write_instance(d: &SigmaPhiData) -> String {
    let mut out = write_table(d.group());
    let sigma: Vec<String> = d.gw().sigma_map().iter().map(|s| s.to_string()).collect();
    writeln!(out, "sigma: {}", sigma.join(" ")).unwrap();
    out.push_str("phi:\n");
    for (a, b) in d.pairs() {
        writeln!(out, "{a} -> {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::groups;
    use crate::sigmaphi::instances;
    use crate::symspace::group_plus;

    #[test]
    fn table_round_trip() {
        let text = "# Z3\n3\n0 1 2\n1 2 0 # row 1\n\n2 0 1\n";
        let m = read_magma(text).unwrap();
        assert_eq!(m.to_rows(), vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(read_magma(&write_table(&m)).unwrap(), m);
    }

    #[test]
    fn table_errors_carry_lines() {
        assert_eq!(parse_table(""), Err(Error::Empty));
        assert!(matches!(parse_table("2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_table("2\n0 x\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_table("1\n0\n0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_magma("2\n0 1\n1\n"), Err(Error::NotSquare { row: 1, .. })));
    }

    #[test]
    fn symspace_round_trip() {
        let s = group_plus(&groups::cyclic(5)).unwrap();
        let text = write_symspace(&s);
        assert!(text.starts_with("#symspace base=0\n"));
        assert_eq!(read_symspace(&text).unwrap(), s);
        let unpunctured = SymSpace::new(s.table().clone(), None).unwrap();
        assert_eq!(read_symspace(&write_symspace(&unpunctured)).unwrap(), unpunctured);
    }

    #[test]
    fn perms_round_trip() {
        let perms = vec![Perm::new(vec![1, 2, 0]).unwrap(), Perm::identity(3)];
        assert_eq!(read_perms(&write_perms(&perms)).unwrap(), perms);
        assert!(read_perms("0 1\n0 1 2\n").is_err());
        assert!(read_perms("0 0\n").is_err());
    }

    #[test]
    fn instance_round_trip() {
        for d in [instances::z3z3_swap(), instances::z5_negation(), instances::trivial()] {
            let text = write_instance(&d);
            assert_eq!(read_instance(&text).unwrap(), d);
        }
    }

    #[test]
    fn instance_rejects_phi_outside_n() {
        let mut text = write_instance(&instances::z3z3_swap());
        text.push_str("1 -> 0\n");
        assert!(matches!(read_instance(&text), Err(Error::InvalidPhi(_))));
    }
}
