//! Cayley tables of finite binary systems and the identity checkers.
//!
//! A [`Magma`] is any `n x n` table with entries in `0..n`. A [`CayleyTable`]
//! is a magma whose rows and columns are all permutations (a quasigroup), and
//! a [`Loop`] is a quasigroup with a two-sided identity, relabelled so that
//! the identity is element `0`.
//!
//! Every identity checker scans triples with `x` outermost, then `z`, then
//! `y`, and reports the first failing triple in that order. Checkers run in
//! parallel over `x` but the reported witness does not depend on scheduling.

use std::ops::Deref;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Axis, Error, Result};

/// Largest table order accepted by default (bounds memory at `n^2` entries).
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// An arbitrary binary operation on `0..n`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Magma {
    n: usize,
    data: Vec<u32>,
}

impl Magma {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows_capped(rows, DEFAULT_ORDER_CAP)
    }

    pub fn from_rows_capped(rows: &[Vec<i64>], cap: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > cap {
            return Err(Error::OrderTooLarge { order: n, cap });
        }
        let mut data = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &entry) in entries.iter().enumerate() {
                if entry < 0 || entry >= n as i64 {
                    return Err(Error::OutOfRange {
                        entry,
                        row,
                        col,
                        order: n,
                    });
                }
                data.push(entry as u32);
            }
        }
        Ok(Magma { n, data })
    }

    /// Builds a magma from a product function on `0..n`.
    ///
    /// Panics if `f` returns a value outside `0..n`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        assert!(n > 0, "a magma needs at least one element");
        let mut data = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = f(x, y);
                assert!(v < n, "product {x}*{y} = {v} is out of range");
                data.push(v as u32);
            }
        }
        Magma { n, data }
    }

    pub(crate) fn from_raw(n: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        Magma { n, data }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.data[x * self.n + y] as usize
    }

    /// Row `x`: the images of the left translation `y -> x*y`.
    pub fn row(&self, x: usize) -> &[u32] {
        &self.data[x * self.n..(x + 1) * self.n]
    }

    /// Column `y` as an owned vector: the images of `x -> x*y`.
    pub fn column(&self, y: usize) -> Vec<u32> {
        (0..self.n).map(|x| self.data[x * self.n + y]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| self.row(x).iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    fn first_repeat(line: impl Iterator<Item = u32>, n: usize) -> bool {
        let mut seen = vec![false; n];
        for v in line {
            if std::mem::replace(&mut seen[v as usize], true) {
                return true;
            }
        }
        false
    }
}

/// A validated quasigroup table: every row and every column is a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable(Magma);

impl CayleyTable {
    pub fn new(magma: Magma) -> Result<Self> {
        let n = magma.n;
        for x in 0..n {
            if Magma::first_repeat(magma.row(x).iter().copied(), n) {
                return Err(Error::NotLatin {
                    axis: Axis::Row,
                    index: x,
                });
            }
        }
        for y in 0..n {
            if Magma::first_repeat((0..n).map(|x| magma.data[x * n + y]), n) {
                return Err(Error::NotLatin {
                    axis: Axis::Col,
                    index: y,
                });
            }
        }
        Ok(CayleyTable(magma))
    }

    pub fn magma(&self) -> &Magma {
        &self.0
    }

    /// The unique `x` with `x * y = b`.
    pub fn right_div(&self, b: usize, y: usize) -> usize {
        (0..self.0.n)
            .find(|&x| self.0.mul(x, y) == b)
            .expect("columns of a quasigroup are permutations")
    }

    /// The unique `y` with `x * y = b`.
    pub fn left_div(&self, x: usize, b: usize) -> usize {
        self.0
            .row(x)
            .iter()
            .position(|&v| v as usize == b)
            .expect("rows of a quasigroup are permutations")
    }
}

impl Deref for CayleyTable {
    type Target = Magma;

    fn deref(&self) -> &Magma {
        &self.0
    }
}

/// Parses raw rows and checks both Latin-square conditions.
pub fn validate_table(raw: &[Vec<i64>]) -> Result<CayleyTable> {
    CayleyTable::new(Magma::from_rows(raw)?)
}

/// A loop whose identity element is `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Loop {
    table: CayleyTable,
    inv: Vec<u32>,
    relabel: Vec<u32>,
}

impl Loop {
    pub fn new(table: CayleyTable) -> Result<Self> {
        let n = table.order();
        let is_identity = |e: usize| (0..n).all(|x| table.mul(e, x) == x && table.mul(x, e) == x);
        let e = (0..n).find(|&e| is_identity(e)).ok_or(Error::NoIdentity)?;

        // Swap labels 0 and e.
        let relabel: Vec<u32> = (0..n)
            .map(|x| match x {
                0 => e as u32,
                x if x == e => 0,
                x => x as u32,
            })
            .collect();
        let table = if e == 0 {
            table
        } else {
            let mut data = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let (na, nb) = (relabel[a] as usize, relabel[b] as usize);
                    data[na * n + nb] = relabel[table.mul(a, b)];
                }
            }
            CayleyTable(Magma::from_raw(n, data))
        };
        let inv = (0..n).map(|x| table.left_div(x, 0) as u32).collect();
        Ok(Loop {
            table,
            inv,
            relabel,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    /// The right inverse: the solution of `x * inv(x) = 0`.
    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `relabeling()[old] = new`; the identity of the input table maps to `0`.
    pub fn relabeling(&self) -> Vec<usize> {
        self.relabel.iter().map(|&v| v as usize).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

impl Deref for Loop {
    type Target = CayleyTable;

    fn deref(&self) -> &CayleyTable {
        &self.table
    }
}

pub fn validate_loop(t: CayleyTable) -> Result<Loop> {
    Loop::new(t)
}

/// The identities this crate can check, with their evaluation rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// `((xy)z)y = x((yz)y)`
    RightBol,
    /// `y(z(yx)) = (y(zy))x`
    Moufang,
    /// `(xy)z = x(yz)`
    Associative,
    /// `x.x = x`
    Idempotent,
    /// `x.(x.y) = y`
    LeftSymmetric,
    /// `x.(y.z) = (x.y).(x.z)`
    LeftDistributive,
}

impl Law {
    /// Evaluates both sides of the law at `(x, y, z)`.
    pub fn eval(self, m: &Magma, x: usize, y: usize, z: usize) -> (usize, usize) {
        let p = |a, b| m.mul(a, b);
        match self {
            Law::RightBol => (p(p(p(x, y), z), y), p(x, p(p(y, z), y))),
            Law::Moufang => (p(y, p(z, p(y, x))), p(p(y, p(z, y)), x)),
            Law::Associative => (p(p(x, y), z), p(x, p(y, z))),
            Law::Idempotent => (p(x, x), x),
            Law::LeftSymmetric => (p(x, p(x, y)), y),
            Law::LeftDistributive => (p(x, p(y, z)), p(p(x, y), p(x, z))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: Law,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: usize,
    pub rhs: usize,
}

impl Counterexample {
    /// Re-evaluates the law on the stored triple; true iff the sides still differ.
    pub fn reproduces(&self, m: &Magma) -> bool {
        let (lhs, rhs) = self.law.eval(m, self.x, self.y, self.z);
        lhs == self.lhs && rhs == self.rhs && lhs != rhs
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityWitness {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl IdentityWitness {
    pub const HOLDS: IdentityWitness = IdentityWitness {
        holds: true,
        counterexample: None,
    };

    pub fn from_counterexample(c: Option<Counterexample>) -> Self {
        IdentityWitness {
            holds: c.is_none(),
            counterexample: c,
        }
    }
}

/// Naive check of a three-variable law over all `n^3` triples.
pub fn check_law_naive(m: &Magma, law: Law) -> IdentityWitness {
    let n = m.order();
    let found = (0..n).into_par_iter().find_map_first(|x| {
        for z in 0..n {
            for y in 0..n {
                let (lhs, rhs) = law.eval(m, x, y, z);
                if lhs != rhs {
                    return Some(Counterexample {
                        law,
                        x,
                        y,
                        z,
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    });
    IdentityWitness::from_counterexample(found)
}

/// `(x, z, y)`: the scan order shared by every checker.
fn scan_key(c: &Counterexample) -> (usize, usize, usize) {
    (c.x, c.z, c.y)
}

/// Translation-operator form of a three-variable law.
///
/// For right Bol this compares `R_y R_z R_y` with `R_{(yz)y}`; for Moufang it
/// compares `L_y L_z L_y` with `L_{y(zy)}`. Operators act on the right, so
/// `x R_y R_z R_y = ((xy)z)y`.
fn check_operator(m: &Magma, law: Law) -> IdentityWitness {
    let n = m.order();
    // Right Bol composes right translations (columns), Moufang left ones (rows).
    let ops: Vec<Vec<u32>> = match law {
        Law::RightBol => (0..n).map(|y| m.column(y)).collect(),
        Law::Moufang => (0..n).map(|y| m.row(y).to_vec()).collect(),
        _ => unreachable!("operator form is defined for right Bol and Moufang only"),
    };
    let target = |y: usize, z: usize| match law {
        Law::RightBol => m.mul(m.mul(y, z), y),
        _ => m.mul(y, m.mul(z, y)),
    };

    let best = (0..n)
        .into_par_iter()
        .filter_map(|z| {
            let mut best: Option<Counterexample> = None;
            let mut composed = vec![0u32; n];
            for y in 0..n {
                let (oy, oz) = (&ops[y], &ops[z]);
                for (x, slot) in composed.iter_mut().enumerate() {
                    *slot = oy[oz[oy[x] as usize] as usize];
                }
                let w = &ops[target(y, z)];
                let limit = best.map_or(n, |b| b.x);
                if let Some(x) = (0..limit).find(|&x| composed[x] != w[x]) {
                    let (lhs, rhs) = law.eval(m, x, y, z);
                    best = Some(Counterexample {
                        law,
                        x,
                        y,
                        z,
                        lhs,
                        rhs,
                    });
                    if x == 0 {
                        break;
                    }
                }
            }
            best
        })
        .min_by_key(scan_key);
    IdentityWitness::from_counterexample(best)
}

pub fn is_right_bol(m: &Magma) -> IdentityWitness {
    check_operator(m, Law::RightBol)
}

pub fn is_right_bol_naive(m: &Magma) -> IdentityWitness {
    check_law_naive(m, Law::RightBol)
}

pub fn is_moufang(m: &Magma) -> IdentityWitness {
    check_operator(m, Law::Moufang)
}

pub fn is_moufang_naive(m: &Magma) -> IdentityWitness {
    check_law_naive(m, Law::Moufang)
}

pub fn is_associative(m: &Magma) -> IdentityWitness {
    check_law_naive(m, Law::Associative)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InverseProperties {
    pub right_ip: bool,
    pub left_ip: bool,
}

pub fn inverse_properties(l: &Loop) -> InverseProperties {
    let n = l.order();
    let right_ip = (0..n).all(|x| (0..n).all(|y| l.mul(l.mul(y, x), l.inv(x)) == y));
    let left_ip = (0..n).all(|x| (0..n).all(|y| l.mul(x, l.mul(l.inv(x), y)) == y));
    InverseProperties { right_ip, left_ip }
}

/// Right-nested power: `x^0 = 0`, `x^(k+1) = x^k * x`, `x^(-k) = inv(x^k)`.
pub fn power(l: &Loop, x: usize, k: i64) -> usize {
    let mut acc = 0;
    for _ in 0..k.unsigned_abs() {
        acc = l.mul(acc, x);
    }
    if k < 0 {
        l.inv(acc)
    } else {
        acc
    }
}

/// Order of `x`: the least `k >= 1` with `x^k = 0`.
pub fn element_order(l: &Loop, x: usize) -> usize {
    let mut acc = x;
    let mut k = 1;
    while acc != 0 {
        acc = l.mul(acc, x);
        k += 1;
        assert!(k <= l.order() + 1, "powers of {x} never reach the identity");
    }
    k
}

/// Everything [`identify`] can say about a raw table. Failures of earlier
/// stages are recorded in `error` and leave later fields unset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub order: usize,
    pub error: Option<String>,
    pub quasigroup: bool,
    pub has_identity: bool,
    /// Index of the identity in the input labelling.
    pub identity: Option<usize>,
    pub associative: Option<IdentityWitness>,
    pub right_bol: Option<IdentityWitness>,
    pub moufang: Option<IdentityWitness>,
    pub commutative: Option<bool>,
    pub inverse_properties: Option<InverseProperties>,
}

impl ClassificationReport {
    pub fn is_loop(&self) -> bool {
        self.quasigroup && self.has_identity
    }

    pub fn is_group(&self) -> bool {
        self.is_loop() && self.associative.is_some_and(|w| w.holds)
    }

    /// Short labels for the properties that hold.
    pub fn flags(&self) -> Vec<&'static str> {
        let mut flags = Vec::new();
        if self.quasigroup {
            flags.push("quasigroup");
        }
        if self.is_loop() {
            flags.push("loop");
        } else if self.quasigroup {
            flags.push("no-identity");
        }
        if self.is_group() {
            flags.push("group");
        }
        if self.right_bol.is_some_and(|w| w.holds) {
            flags.push("bol");
        }
        if self.moufang.is_some_and(|w| w.holds) {
            flags.push("moufang");
        }
        if self.commutative == Some(true) {
            flags.push("commutative");
        }
        flags
    }
}

pub fn identify(raw: &[Vec<i64>]) -> ClassificationReport {
    let mut report = ClassificationReport {
        order: raw.len(),
        error: None,
        quasigroup: false,
        has_identity: false,
        identity: None,
        associative: None,
        right_bol: None,
        moufang: None,
        commutative: None,
        inverse_properties: None,
    };
    let magma = match Magma::from_rows(raw) {
        Ok(m) => m,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    report.associative = Some(is_associative(&magma));
    report.right_bol = Some(is_right_bol(&magma));
    report.moufang = Some(is_moufang(&magma));
    report.commutative = Some(magma.is_commutative());

    let table = match CayleyTable::new(magma) {
        Ok(t) => t,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    report.quasigroup = true;
    match Loop::new(table) {
        Ok(l) => {
            report.has_identity = true;
            report.identity = l.relabeling().iter().position(|&v| v == 0);
            report.inverse_properties = Some(inverse_properties(&l));
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn sub5() -> Magma {
        Magma::from_fn(5, |x, y| (x + 5 - y) % 5)
    }

    fn z3() -> CayleyTable {
        validate_table(&raw(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]])).unwrap()
    }

    #[test]
    fn one_element_table_is_valid() {
        let t = validate_table(&raw(&[&[0]])).unwrap();
        assert_eq!(t.order(), 1);
        let l = Loop::new(t).unwrap();
        assert_eq!(power(&l, 0, 7), 0);
    }

    #[test]
    fn repeated_row_entry_is_rejected() {
        assert_eq!(
            validate_table(&raw(&[&[0, 0], &[1, 1]])),
            Err(Error::NotLatin {
                axis: Axis::Row,
                index: 0
            })
        );
        assert_eq!(
            validate_table(&raw(&[&[0, 1], &[0, 1]])),
            Err(Error::NotLatin {
                axis: Axis::Col,
                index: 0
            })
        );
    }

    #[test]
    fn out_of_range_and_ragged_input() {
        assert!(matches!(
            validate_table(&raw(&[&[0, 2], &[1, 0]])),
            Err(Error::OutOfRange { entry: 2, row: 0, col: 1, .. })
        ));
        assert!(matches!(
            validate_table(&raw(&[&[0, -1], &[1, 0]])),
            Err(Error::OutOfRange { entry: -1, .. })
        ));
        assert!(matches!(
            validate_table(&raw(&[&[0, 1], &[1]])),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert_eq!(validate_table(&[]), Err(Error::Empty));
        assert!(matches!(
            Magma::from_rows_capped(&raw(&[&[0, 1], &[1, 0]]), 1),
            Err(Error::OrderTooLarge { order: 2, cap: 1 })
        ));
    }

    #[test]
    fn z3_loop_inverses() {
        let l = Loop::new(z3()).unwrap();
        assert_eq!((0..3).map(|x| l.inv(x)).collect::<Vec<_>>(), vec![0, 2, 1]);
        assert_eq!(power(&l, 1, 3), 0);
        assert_eq!(power(&l, 2, 1), 2);
        assert_eq!(power(&l, 1, -1), 2);
        assert_eq!(element_order(&l, 1), 3);
    }

    #[test]
    fn identity_is_renormalised_to_zero() {
        // Z3 with labels shifted so that the identity is element 2: a*b = a+b-2.
        let shifted = Magma::from_fn(3, |a, b| (a + b + 1) % 3);
        let l = Loop::new(CayleyTable::new(shifted).unwrap()).unwrap();
        assert_eq!(l.relabeling(), vec![2, 1, 0]);
        for x in 0..3 {
            assert_eq!(l.mul(0, x), x);
            assert_eq!(l.mul(x, 0), x);
        }
        assert!(is_associative(&l).holds);
    }

    #[test]
    fn subtraction_quasigroup_has_no_identity() {
        let t = CayleyTable::new(sub5()).unwrap();
        assert_eq!(Loop::new(t), Err(Error::NoIdentity));
    }

    #[test]
    fn subtraction_quasigroup_identities() {
        let m = sub5();
        let bol = is_right_bol(&m);
        let c = bol.counterexample.unwrap();
        assert_eq!((c.triple(), c.lhs, c.rhs), ((0, 1, 0), 3, 0));
        assert_eq!(is_right_bol_naive(&m), bol);
        assert!(is_moufang(&m).holds);
        assert!(is_moufang_naive(&m).holds);
        assert!(!is_associative(&m).holds);
    }

    #[test]
    fn witness_reproduces() {
        let m = sub5();
        let c = is_associative(&m).counterexample.unwrap();
        assert!(c.reproduces(&m));
        let mut tampered = c;
        tampered.lhs = tampered.rhs;
        assert!(!tampered.reproduces(&m));
    }

    #[test]
    fn identify_reports() {
        let z3 = identify(&raw(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]));
        assert_eq!(
            z3.flags(),
            vec!["quasigroup", "loop", "group", "bol", "moufang", "commutative"]
        );
        let rows: Vec<Vec<i64>> = sub5().to_rows().iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        let s = identify(&rows);
        assert_eq!(s.flags(), vec!["quasigroup", "no-identity", "moufang"]);
        assert!(s.error.is_some());
        let bad = identify(&raw(&[&[0, 5], &[1, 0]]));
        assert!(bad.error.is_some() && !bad.quasigroup && bad.right_bol.is_none());
    }
}
