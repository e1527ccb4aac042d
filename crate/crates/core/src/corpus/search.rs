//! Depth-first completion of loop tables under the right Bol law.
//!
//! Row 0 and column 0 are fixed to the identity. Cells are branched on in
//! row-major order with values ascending, so solutions come out in
//! lexicographic order of their tables. After every assignment the Bol law
//! `((xy)z)y = x((yz)y)` is propagated: each instance touching the new cell
//! is evaluated as far as the known entries allow, conflicts prune the
//! branch, and an instance with one side known and the other one step short
//! forces that missing entry (using row and column division where needed).

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::table::{CayleyTable, Loop, Magma};

pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

const EMPTY: u8 = u8::MAX;

/// Largest order the search accepts (entries are stored as bytes).
pub const MAX_SEARCH_ORDER: usize = 254;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Branching assignments tried.
    pub nodes: u64,
    pub solutions: u64,
    /// False when the visitor stopped the search early.
    pub complete: bool,
}

struct State {
    n: usize,
    cells: Vec<u8>,
    /// `row_pos[r * n + v]`: the column where row `r` holds `v`.
    row_pos: Vec<u8>,
    /// `col_pos[c * n + v]`: the row where column `c` holds `v`.
    col_pos: Vec<u8>,
    trail: Vec<usize>,
    queue_head: usize,
}

impl State {
    fn new(n: usize) -> Self {
        State {
            n,
            cells: vec![EMPTY; n * n],
            row_pos: vec![EMPTY; n * n],
            col_pos: vec![EMPTY; n * n],
            trail: Vec::with_capacity(n * n),
            queue_head: 0,
        }
    }

    #[inline]
    fn get(&self, r: u8, c: u8) -> u8 {
        self.cells[r as usize * self.n + c as usize]
    }

    /// Row `r` such that `r * c = v`.
    #[inline]
    fn row_with(&self, c: u8, v: u8) -> u8 {
        self.col_pos[c as usize * self.n + v as usize]
    }

    /// Column `c` such that `r * c = v`.
    #[inline]
    fn col_with(&self, r: u8, v: u8) -> u8 {
        self.row_pos[r as usize * self.n + v as usize]
    }

    fn assign(&mut self, r: u8, c: u8, v: u8) -> bool {
        let n = self.n;
        let cell = r as usize * n + c as usize;
        let current = self.cells[cell];
        if current != EMPTY {
            return current == v;
        }
        let (rp, cp) = (r as usize * n + v as usize, c as usize * n + v as usize);
        if self.row_pos[rp] != EMPTY || self.col_pos[cp] != EMPTY {
            return false;
        }
        self.cells[cell] = v;
        self.row_pos[rp] = c;
        self.col_pos[cp] = r;
        self.trail.push(cell);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        let n = self.n;
        while self.trail.len() > mark {
            let cell = self.trail.pop().expect("trail longer than mark");
            let (r, c) = (cell / n, cell % n);
            let v = self.cells[cell] as usize;
            self.cells[cell] = EMPTY;
            self.row_pos[r * n + v] = EMPTY;
            self.col_pos[c * n + v] = EMPTY;
        }
        self.queue_head = self.queue_head.min(mark);
    }

    /// Evaluates one Bol instance; false on a conflict.
    fn check(&mut self, x: u8, y: u8, z: u8) -> bool {
        let p1 = self.get(x, y);
        let p2 = if p1 != EMPTY { self.get(p1, z) } else { EMPTY };
        let lhs = if p2 != EMPTY { self.get(p2, y) } else { EMPTY };
        let q1 = self.get(y, z);
        let q2 = if q1 != EMPTY { self.get(q1, y) } else { EMPTY };
        let rhs = if q2 != EMPTY { self.get(x, q2) } else { EMPTY };

        match (lhs != EMPTY, rhs != EMPTY) {
            (true, true) => lhs == rhs,
            (true, false) => {
                // x * ((y z) y) must equal lhs.
                if q2 != EMPTY {
                    return self.assign(x, q2, lhs);
                }
                let w2 = self.col_with(x, lhs);
                if w2 == EMPTY {
                    return true;
                }
                if q1 != EMPTY {
                    return self.assign(q1, y, w2);
                }
                let w1 = self.row_with(y, w2);
                w1 == EMPTY || self.assign(y, z, w1)
            }
            (false, true) => {
                // ((x y) z) y must equal rhs.
                if p2 != EMPTY {
                    return self.assign(p2, y, rhs);
                }
                let v2 = self.row_with(y, rhs);
                if v2 == EMPTY {
                    return true;
                }
                if p1 != EMPTY {
                    return self.assign(p1, z, v2);
                }
                let v1 = self.row_with(z, v2);
                v1 == EMPTY || self.assign(x, y, v1)
            }
            (false, false) => true,
        }
    }

    /// Re-examines every instance in which a newly assigned cell occurs as one
    /// of the six sub-products, until no assignment is pending.
    fn propagate(&mut self) -> bool {
        let n = self.n as u8;
        while self.queue_head < self.trail.len() {
            let cell = self.trail[self.queue_head];
            self.queue_head += 1;
            let (a, b) = ((cell / self.n) as u8, (cell % self.n) as u8);
            let c = self.cells[cell];

            // (a, b) as x*y and as y*z.
            for t in 0..n {
                if !self.check(a, b, t) || !self.check(t, a, b) {
                    return false;
                }
            }
            for t in 0..n {
                // (a, b) as (xy)*z: x*t = a with y = t.
                let x = self.row_with(t, a);
                if x != EMPTY && !self.check(x, t, b) {
                    return false;
                }
                // (a, b) as ((xy)z)*y: x*b = p1, p1*z = a.
                let p1 = self.get(t, b);
                if p1 != EMPTY {
                    let z = self.col_with(p1, a);
                    if z != EMPTY && !self.check(t, b, z) {
                        return false;
                    }
                }
                // (a, b) as x*((yz)y): q1*t = b, t*z = q1.
                let q1 = self.row_with(t, b);
                if q1 != EMPTY {
                    let z = self.col_with(t, q1);
                    if z != EMPTY && !self.check(a, t, z) {
                        return false;
                    }
                }
            }
            // (a, b) as (yz)*y: b*z = a.
            let z = self.col_with(b, a);
            if z != EMPTY {
                for x in 0..n {
                    if !self.check(x, b, z) {
                        return false;
                    }
                }
            }
            debug_assert_eq!(self.cells[cell], c);
        }
        true
    }

    fn to_loop(&self) -> Loop {
        let data = self.cells.iter().map(|&v| v as u32).collect();
        let table = CayleyTable::new(Magma::from_raw(self.n, data)).expect("search keeps rows and columns Latin");
        Loop::new(table).expect("row and column 0 are the identity")
    }
}

struct Search<'a, F> {
    state: State,
    stats: SearchStats,
    budget: u64,
    visit: &'a mut F,
}

impl<F: FnMut(Loop) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, from: usize) -> Result<ControlFlow<()>> {
        let n = self.state.n;
        let Some(cell) = (from..n * n).find(|&c| self.state.cells[c] == EMPTY) else {
            self.stats.solutions += 1;
            return Ok((self.visit)(self.state.to_loop()));
        };
        let (r, c) = ((cell / n) as u8, (cell % n) as u8);
        for v in 0..n as u8 {
            if self.state.col_with(r, v) != EMPTY || self.state.row_with(c, v) != EMPTY {
                continue;
            }
            self.stats.nodes += 1;
            if self.stats.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            let mark = self.state.trail.len();
            let ok = self.state.assign(r, c, v) && self.state.propagate();
            if ok && self.run(cell + 1)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            self.state.undo_to(mark);
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Enumerates right Bol loops of order `n` with identity `0` in lexicographic
/// table order, handing each to `visit` until it breaks.
pub fn bol_search<F>(n: usize, budget: u64, mut visit: F) -> Result<SearchStats>
where
    F: FnMut(Loop) -> ControlFlow<()>,
{
    if n == 0 || n > MAX_SEARCH_ORDER {
        return Err(Error::Invalid(format!("search order must be in 1..={MAX_SEARCH_ORDER}")));
    }
    let mut state = State::new(n);
    for x in 0..n as u8 {
        let fixed = state.assign(0, x, x) && state.assign(x, 0, x);
        debug_assert!(fixed);
    }
    let mut search = Search {
        stats: SearchStats::default(),
        budget,
        visit: &mut visit,
        state,
    };
    if !search.state.propagate() {
        search.stats.complete = true;
        return Ok(search.stats);
    }
    let flow = search.run(0)?;
    search.stats.complete = flow.is_continue();
    Ok(search.stats)
}

/// The first `limit` solutions (all of them when `limit` is `None`).
pub fn bol_search_collect(n: usize, limit: Option<usize>, budget: u64) -> Result<(Vec<Loop>, SearchStats)> {
    let mut found = Vec::new();
    let stats = bol_search(n, budget, |l| {
        found.push(l);
        if limit.is_some_and(|k| found.len() >= k) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok((found, stats))
}

/// The first solution in search order that fails the Moufang law.
pub fn first_non_moufang(n: usize, budget: u64) -> Result<Option<Loop>> {
    let mut hit = None;
    bol_search(n, budget, |l| {
        if crate::table::is_moufang(&l).holds {
            ControlFlow::Continue(())
        } else {
            hit = Some(l);
            ControlFlow::Break(())
        }
    })?;
    Ok(hit)
}
