//! The bundled corpus under `crates/core/corpus/`, generated from code so the
//! files can be checked against a fresh regeneration.

use std::fmt::Write as _;

use crate::corpus::{chein_double, groups, iso::is_isomorphic, search::bol_search};
use crate::error::Result;
use crate::io::{write_instance, write_symspace, write_table};
use crate::sigmaphi::instances;
use crate::symspace::{group_plus, space_on_twisted_set, GroupWithInvolution};
use crate::table::{identify, is_moufang, Loop, Magma};

/// Groups shipped as plain tables.
pub const GROUPS: &[&str] = &[
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z2xZ2", "Z3xZ3", "S3", "Q8", "D4", "A4", "A5",
];

/// Bases for Chein doubles; the doubles have order at most 24.
pub const CHEIN_BASES: &[&str] = &["Z3", "Z2xZ2", "S3", "D4", "Q8", "D5", "A4", "D6", "Dic3"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleEntry {
    /// Path relative to the corpus root.
    pub path: String,
    pub contents: String,
    /// Classification flags a re-check must reproduce.
    pub flags: Vec<String>,
}

fn table_entry(path: String, m: &Magma) -> BundleEntry {
    let rows: Vec<Vec<i64>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v as i64).collect())
        .collect();
    let mut flags: Vec<String> = identify(&rows).flags().into_iter().map(String::from).collect();
    if flags.iter().any(|f| f == "bol") && !flags.iter().any(|f| f == "moufang") {
        flags.push("not-moufang".into());
    }
    BundleEntry {
        path,
        contents: write_table(m),
        flags,
    }
}

fn file_name(name: &str) -> String {
    name.to_lowercase()
}

/// The first non-Moufang order-8 Bol loop in search order, and one
/// representative per isomorphism class of order-8 Bol loops (in order of
/// first appearance).
pub fn order8_loops(budget: u64) -> Result<(Loop, Vec<Loop>)> {
    let mut first = None;
    let mut classes: Vec<Loop> = Vec::new();
    bol_search(8, budget, |l| {
        if first.is_none() && !is_moufang(&l).holds {
            first = Some(l.clone());
        }
        if !classes.iter().any(|c| is_isomorphic(c, &l)) {
            classes.push(l);
        }
        std::ops::ControlFlow::Continue(())
    })?;
    let first = first.ok_or_else(|| crate::Error::Invalid("order 8 search found no non-Moufang loop".into()))?;
    Ok((first, classes))
}

pub fn bundle(budget: u64) -> Result<Vec<BundleEntry>> {
    let mut out = Vec::new();
    for name in GROUPS {
        out.push(table_entry(format!("groups/{}.tbl", file_name(name)), &*groups::by_name(name)?));
    }

    let (b8, classes) = order8_loops(budget)?;
    out.push(table_entry("bol8/b8.tbl".into(), &b8));
    for (k, l) in classes.iter().enumerate() {
        out.push(table_entry(format!("bol8/class{:02}.tbl", k + 1), l));
    }

    for name in CHEIN_BASES {
        let m = chein_double(&groups::by_name(name)?)?;
        out.push(table_entry(format!("chein/m_{}.tbl", file_name(name)), &m));
    }

    let sub5 = Magma::from_fn(5, |x, y| (x + 5 - y) % 5);
    out.push(table_entry("magmas/sub5.tbl".into(), &sub5));

    for (name, space) in [
        ("z5_plus", group_plus(&groups::cyclic(5))?),
        ("s3_plus", group_plus(&groups::symmetric3())?),
        ("z3z3_twisted", space_on_twisted_set(&GroupWithInvolution::swap(&groups::cyclic(3))?)?.space),
    ] {
        out.push(BundleEntry {
            path: format!("spaces/{name}.sym"),
            contents: write_symspace(&space),
            flags: vec!["symspace".into()],
        });
    }

    for (name, d, flags) in [
        ("z3z3_swap", instances::z3z3_swap(), "sigma-phi"),
        ("z5_negation", instances::z5_negation(), "sigma-phi"),
        ("trivial", instances::trivial(), "sigma-phi"),
        ("z3z3_swap_bad", instances::z3z3_swap_bad(), "conditions-fail"),
    ] {
        out.push(BundleEntry {
            path: format!("instances/{name}.inst"),
            contents: write_instance(&d),
            flags: vec![flags.into()],
        });
    }
    Ok(out)
}

/// One line per entry: path, flags, and the `connected` attribute, which is
/// recorded as unknown for every entry.
pub fn manifest(entries: &[BundleEntry]) -> String {
    let mut out = String::from("# path flags connected\n");
    for e in entries {
        writeln!(out, "{} {} connected=unknown", e.path, e.flags.join(",")).unwrap();
    }
    out
}
