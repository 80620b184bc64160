//! Backtracking realization of a chain Gram matrix inside `D^n`.
//!
//! Rows are built one coordinate at a time, directly in canonical form (see
//! [`crate::lattice::canonical_form`]): coordinates already in use form a
//! prefix, inside a block of columns that agree on every earlier row the new
//! entries are non-increasing, and fresh columns receive positive
//! non-increasing entries. Every canonical matrix is therefore produced
//! exactly once and no deduplication is needed.
//!
//! Pruning, per coordinate: the remaining norm bounds each entry, and for each
//! earlier row the outstanding product must satisfy Cauchy-Schwarz against the
//! remaining norm and that row's unvisited support. Per row: the final matrix
//! is square and nonsingular, so all `n` columns must end up used, which the
//! remaining weights have to be able to pay for.

use num_integer::Roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Consecutive products exactly 1.
    Standard,
    /// Consecutive products 0 or 1.
    Good,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    Complete,
    Stopped,
    Exceeded,
}

pub(crate) struct Searcher<'a, F> {
    n: usize,
    weights: &'a [i64],
    mode: Mode,
    max_nodes: u64,
    pub(crate) nodes: u64,
    exceeded: bool,
    stopped: bool,
    rows: Vec<Vec<i64>>,
    // nonzero entries of committed rows, by column
    col_rows: Vec<Vec<(usize, i64)>>,
    // tie[c]: column c equals column c - 1 on every committed row
    tie: Vec<bool>,
    used: usize,
    // suffix[i] = weights[i..].sum()
    suffix: Vec<i64>,
    visit: F,
}

struct RowCtx {
    partial: Vec<i64>,
    tail: Vec<i64>,
    target: Vec<i64>,
    row: Vec<i64>,
    out: Vec<Vec<i64>>,
}

impl<'a, F: FnMut(&[Vec<i64>]) -> bool> Searcher<'a, F> {
    /// `visit` receives each complete matrix and returns `true` to stop.
    pub(crate) fn new(weights: &'a [i64], mode: Mode, max_nodes: u64, visit: F) -> Self {
        let n = weights.len();
        let mut suffix = vec![0; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] + weights[i];
        }
        Searcher {
            n,
            weights,
            mode,
            max_nodes,
            nodes: 0,
            exceeded: false,
            stopped: false,
            rows: Vec::with_capacity(n),
            col_rows: vec![Vec::new(); n],
            tie: vec![true; n],
            used: 0,
            suffix,
            visit,
        }
    }

    pub(crate) fn run(&mut self) -> Outcome {
        if self.n > 0 {
            self.descend(0);
        }
        if self.exceeded {
            Outcome::Exceeded
        } else if self.stopped {
            Outcome::Stopped
        } else {
            Outcome::Complete
        }
    }

    fn descend(&mut self, i: usize) {
        if i == self.n {
            if (self.visit)(&self.rows) {
                self.stopped = true;
            }
            return;
        }
        let targets: &[i64] = match (self.mode, i) {
            (_, 0) => &[0],
            (Mode::Standard, _) => &[-1],
            (Mode::Good, _) => &[-1, 0],
        };
        for &t in targets {
            for cand in self.candidates(i, t) {
                let saved_tie = self.tie.clone();
                let saved_used = self.used;
                self.commit(i, cand);
                self.descend(i + 1);
                self.uncommit();
                self.tie = saved_tie;
                self.used = saved_used;
                if self.stopped || self.exceeded {
                    return;
                }
            }
            if self.exceeded {
                return;
            }
        }
    }

    fn commit(&mut self, i: usize, row: Vec<i64>) {
        for c in 1..self.n {
            self.tie[c] = self.tie[c] && row[c] == row[c - 1];
        }
        for (c, &x) in row.iter().enumerate() {
            if x != 0 {
                self.col_rows[c].push((i, x));
                self.used = self.used.max(c + 1);
            }
        }
        self.rows.push(row);
    }

    fn uncommit(&mut self) {
        let row = self.rows.pop().expect("uncommit after commit");
        for (c, &x) in row.iter().enumerate() {
            if x != 0 {
                self.col_rows[c].pop();
            }
        }
    }

    /// All admissible rows `i` in search order, given the coefficient product
    /// `target_prev` with row `i - 1`.
    fn candidates(&mut self, i: usize, target_prev: i64) -> Vec<Vec<i64>> {
        let target: Vec<i64> = (0..i)
            .map(|j| if j + 1 == i { target_prev } else { 0 })
            .collect();
        let unsat = target.iter().filter(|&&t| t != 0).count();
        let mut ctx = RowCtx {
            partial: vec![0; i],
            tail: self.weights[..i].to_vec(),
            target,
            row: vec![0; self.n],
            out: Vec::new(),
        };
        self.columns(i, 0, self.weights[i], unsat, &mut ctx);
        ctx.out
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exceeded = true;
        }
        !self.exceeded
    }

    fn columns(&mut self, i: usize, c: usize, rem: i64, unsat: usize, ctx: &mut RowCtx) {
        if self.exceeded {
            return;
        }
        if rem == 0 {
            // the rest of the row is zero
            if unsat == 0 && !(c > 0 && c < self.used && self.tie[c] && ctx.row[c - 1] < 0) {
                self.emit(i, self.used, ctx);
            }
            return;
        }
        if c == self.used {
            if unsat == 0 {
                self.fresh(i, c, rem, i64::MAX, ctx);
            }
            return;
        }

        for k in 0..self.col_rows[c].len() {
            let (j, v) = self.col_rows[c][k];
            ctx.tail[j] -= v * v;
        }
        let root = rem.sqrt();
        let mut hi = root;
        if c > 0 && self.tie[c] {
            hi = hi.min(ctx.row[c - 1]);
        }
        let mut x = hi;
        while x >= -root {
            if !self.tick() {
                break;
            }
            let rem2 = rem - x * x;
            let mut unsat2 = unsat;
            if x != 0 {
                for k in 0..self.col_rows[c].len() {
                    let (j, v) = self.col_rows[c][k];
                    let was = ctx.partial[j] == ctx.target[j];
                    ctx.partial[j] += x * v;
                    let is = ctx.partial[j] == ctx.target[j];
                    if was && !is {
                        unsat2 += 1;
                    } else if !was && is {
                        unsat2 -= 1;
                    }
                }
            }
            let feasible = (rem2 > 0 || unsat2 == 0)
                && self.col_rows[c].iter().all(|&(j, _)| {
                    let d = (ctx.target[j] - ctx.partial[j]) as i128;
                    d * d <= rem2 as i128 * ctx.tail[j] as i128
                });
            if feasible {
                ctx.row[c] = x;
                self.columns(i, c + 1, rem2, unsat2, ctx);
                ctx.row[c] = 0;
            }
            if x != 0 {
                for k in 0..self.col_rows[c].len() {
                    let (j, v) = self.col_rows[c][k];
                    ctx.partial[j] -= x * v;
                }
            }
            if self.exceeded {
                break;
            }
            x -= 1;
        }
        for k in 0..self.col_rows[c].len() {
            let (j, v) = self.col_rows[c][k];
            ctx.tail[j] += v * v;
        }
    }

    /// Spends `rem` on fresh columns `c..` with positive entries at most `cap`.
    fn fresh(&mut self, i: usize, c: usize, rem: i64, cap: i64, ctx: &mut RowCtx) {
        if rem == 0 {
            self.emit(i, c, ctx);
            return;
        }
        if c >= self.n || self.exceeded {
            return;
        }
        // at most n - c further columns of entries <= x
        let slots = (self.n - c) as i64;
        let mut x = rem.sqrt().min(cap);
        while x >= 1 {
            if x * x * slots < rem {
                break;
            }
            if !self.tick() {
                return;
            }
            ctx.row[c] = x;
            self.fresh(i, c + 1, rem - x * x, x, ctx);
            ctx.row[c] = 0;
            x -= 1;
        }
    }

    fn emit(&mut self, i: usize, used_after: usize, ctx: &mut RowCtx) {
        let missing = (self.n - used_after) as i64;
        if self.suffix[i + 1] < missing || (i + 1 == self.n && missing != 0) {
            return;
        }
        ctx.out.push(ctx.row.clone());
    }
}
