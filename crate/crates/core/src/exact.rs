//! Exact solvers over RC sequences.
//!
//! [`solve_dp`] runs the height-minimizing recurrence
//!
//! ```text
//! f(i, j, k) = min { f(i-1, j, k) + l[ij-j+1],  f(i, j-1, k - l[ij-i+1]) }
//! f(1, 1, k) = l[1]   for l[1] <= k <= b
//! ```
//!
//! where `f(i, j, k)` is the least height of an `i x j` RC layout of squares
//! `1..=ij` whose width is at most `k`. [`solve_ripp_width_dp`] runs the
//! mirrored recurrence for rectangles, minimizing width under a height
//! budget.
//!
//! # Candidate shapes
//!
//! A step is only worth taking when the new row or column starts with a
//! real square, i.e. the shape before it holds fewer than `n` cells. So
//! every optimum is found among the shapes `ij >= n` whose last row *or*
//! last column is non-empty ([`ShapeSet::Reachable`], the default).
//!
//! Requiring both to be non-empty, `i(j-1) < n` and `(i-1)j < n`, gives
//! [`ShapeSet::Restricted`]. That set is smaller but not always enough:
//! squares `12, 10, 5, 1` in a strip of width 27 need a `2 x 3` layout
//! (`CCR`, height 13) whose top row holds only the smallest square, and
//! the restricted shapes only reach height 17.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::sequence::{RcOp, RcSequence};

/// Upper bound on the number of `(shape, budget)` cells a DP table may hold.
pub const MAX_TABLE_CELLS: u128 = 1 << 27;

/// Largest instance the brute-force oracle accepts.
pub const ORACLE_MAX_N: usize = 20;

const INF: u64 = u64::MAX;

/// Result of an exact or approximate solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpSolution {
    /// Minimized extent: height for squares, height for [`RippInstance`]s.
    pub objective: u64,
    /// `(rows, cols)` of the returned layout.
    pub shape: (usize, usize),
    pub rc_sequence: RcSequence,
    /// Extent along the budgeted axis (the width).
    pub budget_used: u64,
}

/// Rectangles with widths and heights both non-increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RippInstance {
    widths: Vec<u64>,
    heights: Vec<u64>,
    strip_width: u64,
}

impl RippInstance {
    pub fn new(widths: Vec<u64>, heights: Vec<u64>, strip_width: u64) -> Result<Self> {
        if widths.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if widths.len() != heights.len() {
            return Err(Error::InvalidArgument(format!(
                "{} widths but {} heights",
                widths.len(),
                heights.len()
            )));
        }
        if let Some(i) = (0..widths.len()).find(|&i| widths[i] == 0 || heights[i] == 0) {
            return Err(Error::ZeroLength { index: i + 1 });
        }
        if let Some(i) = (1..widths.len()).find(|&i| widths[i] > widths[i - 1] || heights[i] > heights[i - 1])
        {
            return Err(Error::RippOrdering { index: i + 1 });
        }
        if widths[0] > strip_width {
            return Err(Error::Infeasible {
                largest: widths[0],
                strip_width,
            });
        }
        let n = widths.len() as u64;
        for max in [widths[0], heights[0]] {
            if !matches!(n.checked_mul(max), Some(v) if v < u64::MAX) {
                return Err(Error::Overflow(format!("{n} rectangles of side up to {max}")));
            }
        }
        Ok(Self {
            widths,
            heights,
            strip_width,
        })
    }

    /// The square instance seen as rectangles with `w = h = l`.
    pub fn from_squares(inst: &Instance) -> Self {
        Self {
            widths: inst.lengths().to_vec(),
            heights: inst.lengths().to_vec(),
            strip_width: inst.strip_width(),
        }
    }

    pub fn n(&self) -> usize {
        self.widths.len()
    }

    pub fn widths(&self) -> &[u64] {
        &self.widths
    }

    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    pub fn strip_width(&self) -> u64 {
        self.strip_width
    }

    #[inline]
    pub fn width(&self, label: usize) -> u64 {
        self.widths.get(label - 1).copied().unwrap_or(0)
    }

    #[inline]
    pub fn height(&self, label: usize) -> u64 {
        self.heights.get(label - 1).copied().unwrap_or(0)
    }

    /// `(width, height)` of the packing built by `seq`.
    pub fn evaluate(&self, seq: &RcSequence) -> (u64, u64) {
        seq.evaluate_with(|l| self.width(l), |l| self.height(l))
    }
}

fn ceil_sqrt(n: usize) -> usize {
    let mut s = (n as f64).sqrt() as usize;
    while s * s < n {
        s += 1;
    }
    while s > 1 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}

/// Which layout shapes the exact solvers consider.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum ShapeSet {
    /// Shapes reached by a step whose new row or column starts with a real
    /// item. Always contains an optimum.
    #[default]
    Reachable,
    /// Shapes whose last row and last column both start with a real item.
    Restricted,
}

/// True for `rows x cols` shapes with no empty last row and no empty last
/// column.
pub fn is_restricted_candidate(n: usize, rows: usize, cols: usize) -> bool {
    rows * cols >= n && rows * (cols - 1) < n && (rows - 1) * cols < n
}

/// True for shapes that are the result of a useful step.
fn is_reachable(n: usize, rows: usize, cols: usize) -> bool {
    (rows, cols) == (1, 1) || row_step_useful(n, rows, cols) || col_step_useful(n, rows, cols)
}

#[inline]
fn row_step_useful(n: usize, rows: usize, cols: usize) -> bool {
    rows > 1 && (rows - 1) * cols < n
}

#[inline]
fn col_step_useful(n: usize, rows: usize, cols: usize) -> bool {
    cols > 1 && rows * (cols - 1) < n
}

/// True when `rows x cols` is a final shape of `set`.
pub fn is_candidate(set: ShapeSet, n: usize, rows: usize, cols: usize) -> bool {
    match set {
        ShapeSet::Reachable => rows * cols >= n && is_reachable(n, rows, cols),
        ShapeSet::Restricted => is_restricted_candidate(n, rows, cols),
    }
}

type Shapes = Vec<(usize, usize)>;

/// Shapes visited by the DP, in evaluation order, with the candidate shapes
/// in the order their objective is inspected.
struct ShapePlan {
    order: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    candidates: Vec<(usize, usize)>,
}

impl ShapePlan {
    fn new(n: usize, set: ShapeSet) -> Self {
        let (order, candidates) = match set {
            ShapeSet::Reachable => Self::reachable(n),
            ShapeSet::Restricted => Self::restricted(n),
        };
        let index = order
            .iter()
            .enumerate()
            .map(|(idx, &shape)| (shape, idx))
            .collect();
        Self {
            order,
            index,
            candidates,
        }
    }

    /// Row by row, every reachable shape; `O(n log n)` of them.
    fn reachable(n: usize) -> (Shapes, Shapes) {
        let mut order = Vec::new();
        for i in 1..=n {
            order.extend((1..).map(|j| (i, j)).take_while(|&(i, j)| is_reachable(n, i, j)));
        }
        let candidates = order.iter().copied().filter(|&(i, j)| i * j >= n).collect();
        (order, candidates)
    }

    /// First every `i <= ceil(sqrt n)` with `j <= ceil(n/i)`, then every
    /// `j <= ceil(sqrt n)` with `ceil(sqrt n) < i <= ceil(n/j)`.
    fn restricted(n: usize) -> (Shapes, Shapes) {
        let s = ceil_sqrt(n);
        let mut order = Vec::new();
        let mut candidates = Vec::new();
        for i in 1..=s {
            let last = n.div_ceil(i);
            order.extend((1..=last).map(|j| (i, j)));
            if is_restricted_candidate(n, i, last) {
                candidates.push((i, last));
            }
        }
        for j in 1..=s {
            let last = n.div_ceil(j);
            order.extend((s + 1..=last).map(|i| (i, j)));
            if last > s && is_restricted_candidate(n, last, j) {
                candidates.push((last, j));
            }
        }
        (order, candidates)
    }
}

/// Which axis carries the budget; the other axis is minimized.
#[derive(Clone, Copy, PartialEq, Eq)]
enum BudgetAxis {
    Width,
    Height,
}

/// A filled table for one of the two mirrored recurrences.
///
/// Entry `(shape, k)` is the least cost (extent along the free axis) of an
/// RC layout of that shape whose extent along the budget axis is at most
/// `k`, for `k` in `budget_min..=budget_min + slots - 1`.
struct RcTable {
    plan: ShapePlan,
    axis: BudgetAxis,
    budget_min: u64,
    slots: usize,
    values: Vec<u64>,
    // true when the last step was AR
    from_row: Vec<bool>,
}

impl RcTable {
    fn build(
        n: usize,
        set: ShapeSet,
        axis: BudgetAxis,
        budget_min: u64,
        budget_max: u64,
        width_of: impl Fn(usize) -> u64,
        height_of: impl Fn(usize) -> u64,
    ) -> Result<Self> {
        let plan = ShapePlan::new(n, set);
        let slots = (budget_max - budget_min + 1) as usize;
        let cells = plan.order.len() as u128 * slots as u128;
        if cells > MAX_TABLE_CELLS {
            return Err(Error::TableTooLarge {
                cells,
                limit: MAX_TABLE_CELLS,
            });
        }
        let cells = cells as usize;
        let mut values = vec![INF; cells];
        let mut from_row = vec![false; cells];

        let base_cost = match axis {
            BudgetAxis::Width => height_of(1),
            BudgetAxis::Height => width_of(1),
        };

        for (idx, &(i, j)) in plan.order.iter().enumerate() {
            let here = idx * slots;
            if (i, j) == (1, 1) {
                values[here..here + slots].fill(base_cost);
                continue;
            }
            // largest item of the new top row / new right column
            let row_len = height_of(i * j - j + 1);
            let col_len = width_of(i * j - i + 1);
            // a step that opens an empty row or column is never needed
            let below = row_step_useful(n, i, j).then(|| plan.index[&(i - 1, j)] * slots);
            let left = col_step_useful(n, i, j).then(|| plan.index[&(i, j - 1)] * slots);

            for slot in 0..slots {
                let (via_row, via_col) = match axis {
                    BudgetAxis::Width => (
                        below.map_or(INF, |b| add(values[b + slot], row_len)),
                        left.map_or(INF, |l| shift(slot, col_len).map_or(INF, |s| values[l + s])),
                    ),
                    BudgetAxis::Height => (
                        below.map_or(INF, |b| shift(slot, row_len).map_or(INF, |s| values[b + s])),
                        left.map_or(INF, |l| add(values[l + slot], col_len)),
                    ),
                };
                // ties go to the row step
                if via_row <= via_col {
                    values[here + slot] = via_row;
                    from_row[here + slot] = true;
                } else {
                    values[here + slot] = via_col;
                }
            }
        }

        Ok(Self {
            plan,
            axis,
            budget_min,
            slots,
            values,
            from_row,
        })
    }

    fn value(&self, rows: usize, cols: usize, budget: u64) -> Option<u64> {
        if budget < self.budget_min {
            return None;
        }
        let slot = ((budget - self.budget_min) as usize).min(self.slots - 1);
        let idx = *self.plan.index.get(&(rows, cols))?;
        Some(self.values[idx * self.slots + slot])
    }

    /// Walks parent decisions back from `(shape, slot)` to the base layout.
    fn backtrack(
        &self,
        shape: (usize, usize),
        mut slot: usize,
        width_of: impl Fn(usize) -> u64,
        height_of: impl Fn(usize) -> u64,
    ) -> RcSequence {
        let (mut i, mut j) = shape;
        let mut ops = Vec::with_capacity(i + j - 2);
        while (i, j) != (1, 1) {
            let idx = self.plan.index[&(i, j)] * self.slots + slot;
            if self.from_row[idx] {
                if self.axis == BudgetAxis::Height {
                    slot -= height_of(i * j - j + 1) as usize;
                }
                ops.push(RcOp::AddRow);
                i -= 1;
            } else {
                if self.axis == BudgetAxis::Width {
                    slot -= width_of(i * j - i + 1) as usize;
                }
                ops.push(RcOp::AddColumn);
                j -= 1;
            }
        }
        ops.reverse();
        RcSequence::new(ops)
    }
}

#[inline]
fn add(value: u64, len: u64) -> u64 {
    if value == INF {
        INF
    } else {
        value + len
    }
}

#[inline]
fn shift(slot: usize, len: u64) -> Option<usize> {
    slot.checked_sub(usize::try_from(len).ok()?)
}

/// The full height-minimizing table; kept for inspection and backtracking.
pub struct HeightTable<'a> {
    inst: &'a Instance,
    table: RcTable,
}

impl<'a> HeightTable<'a> {
    pub fn build(inst: &'a Instance) -> Result<Self> {
        Self::build_with(inst, ShapeSet::default())
    }

    pub fn build_with(inst: &'a Instance, set: ShapeSet) -> Result<Self> {
        let table = RcTable::build(
            inst.n(),
            set,
            BudgetAxis::Width,
            inst.largest(),
            inst.strip_width(),
            |l| inst.length(l),
            |l| inst.length(l),
        )?;
        Ok(Self { inst, table })
    }

    /// `f(rows, cols, width_budget)`, or `None` when the shape is not part
    /// of the table. Infinite entries come back as `Some(u64::MAX)`; budgets
    /// below `l_1` give `None`, budgets above `b` are clamped to `b`.
    pub fn value(&self, rows: usize, cols: usize, width_budget: u64) -> Option<u64> {
        self.table.value(rows, cols, width_budget)
    }

    /// Shapes held in the table, in evaluation order.
    pub fn shapes(&self) -> &[(usize, usize)] {
        &self.table.plan.order
    }

    pub fn candidates(&self) -> &[(usize, usize)] {
        &self.table.plan.candidates
    }

    pub fn solution(&self) -> DpSolution {
        let last = self.table.slots - 1;
        let mut best: Option<((usize, usize), u64)> = None;
        for &shape in &self.table.plan.candidates {
            let v = self.table.values[self.table.plan.index[&shape] * self.table.slots + last];
            if v != INF && best.is_none_or(|(_, b)| v < b) {
                best = Some((shape, v));
            }
        }
        // the single column always fits because l_1 <= b
        let (shape, objective) = best.expect("single-column layout is always feasible");
        let inst = self.inst;
        let seq = self
            .table
            .backtrack(shape, last, |l| inst.length(l), |l| inst.length(l));
        let (width, height) = seq.evaluate(inst);
        debug_assert_eq!(height, objective);
        DpSolution {
            objective,
            shape,
            rc_sequence: seq,
            budget_used: width,
        }
    }
}

/// Minimum strip height with an optimal RC sequence, in `O(n log(n) b)`
/// time.
pub fn solve_dp(inst: &Instance) -> Result<DpSolution> {
    solve_dp_with(inst, ShapeSet::default())
}

/// [`solve_dp`] restricted to the final shapes of `set`.
pub fn solve_dp_with(inst: &Instance, set: ShapeSet) -> Result<DpSolution> {
    Ok(HeightTable::build_with(inst, set)?.solution())
}

/// Same optimum as [`solve_dp`] using `O(sqrt(n) b)` memory and no
/// sequence recovery.
///
/// Every candidate shape has `min(i, j) <= ceil(sqrt n)`. The first pass
/// rolls over rows `i = 1, 2, ...` keeping columns `j <= ceil(sqrt n)`; the
/// second rolls over columns keeping rows `i <= ceil(sqrt n)`. Each pass
/// holds two buffers of `ceil(sqrt n)` budget rows.
pub fn solve_dp_low_memory(inst: &Instance) -> Result<u64> {
    solve_dp_low_memory_with(inst, ShapeSet::default())
}

pub fn solve_dp_low_memory_with(inst: &Instance, set: ShapeSet) -> Result<u64> {
    let n = inst.n();
    let s = ceil_sqrt(n);
    let l1 = inst.largest();
    let slots = (inst.strip_width() - l1 + 1) as usize;
    let cells = 2 * s as u128 * slots as u128;
    if cells > MAX_TABLE_CELLS {
        return Err(Error::TableTooLarge {
            cells,
            limit: MAX_TABLE_CELLS,
        });
    }
    let len = |label: usize| inst.length(label);
    let mut best = INF;

    // pass 1: outer index = rows, inner = columns
    // pass 2: outer index = columns, inner = rows
    for outer_is_rows in [true, false] {
        let mut prev = vec![INF; s * slots];
        let mut cur = vec![INF; s * slots];
        for outer in 1..=n {
            cur.fill(INF);
            let mut any = false;
            for inner in 1..=s {
                let (i, j) = if outer_is_rows {
                    (outer, inner)
                } else {
                    (inner, outer)
                };
                if !is_reachable(n, i, j) {
                    break;
                }
                any = true;
                let here = (inner - 1) * slots;
                if (i, j) == (1, 1) {
                    cur[here..here + slots].fill(l1);
                } else {
                    let row_len = len(i * j - j + 1);
                    let col_len = len(i * j - i + 1);
                    for slot in 0..slots {
                        // row step: (i-1, j); column step: (i, j-1)
                        let below = row_step_useful(n, i, j).then(|| {
                            if outer_is_rows {
                                prev[here + slot]
                            } else {
                                cur[here - slots + slot]
                            }
                        });
                        let left = shift(slot, col_len).and_then(|s2| {
                            col_step_useful(n, i, j).then(|| {
                                if outer_is_rows {
                                    cur[here - slots + s2]
                                } else {
                                    prev[here + s2]
                                }
                            })
                        });
                        let via_row = below.map_or(INF, |v| add(v, row_len));
                        let via_col = left.unwrap_or(INF);
                        cur[here + slot] = via_row.min(via_col);
                    }
                }
                if is_candidate(set, n, i, j) {
                    best = best.min(cur[here + slots - 1]);
                }
            }
            if !any {
                break;
            }
            std::mem::swap(&mut prev, &mut cur);
        }
    }
    Ok(best)
}

/// Minimum height for a rectangle instance, found as the least height
/// budget `k` for which some candidate shape has `g(i, j, k) <= b`.
///
/// `g(i, j, k)` is the least width of an `i x j` RC layout of rectangles
/// `1..=ij` with height at most `k`, for `k` from `h_1` to the total height.
pub fn solve_ripp_width_dp(inst: &RippInstance) -> Result<DpSolution> {
    let h1 = inst.heights[0];
    let total: u64 = inst.heights.iter().sum();
    let table = RcTable::build(
        inst.n(),
        ShapeSet::default(),
        BudgetAxis::Height,
        h1,
        total,
        |l| inst.width(l),
        |l| inst.height(l),
    )?;

    let mut best: Option<((usize, usize), usize)> = None;
    for &shape in &table.plan.candidates {
        let base = table.plan.index[&shape] * table.slots;
        let first = (0..table.slots).find(|&slot| table.values[base + slot] <= inst.strip_width);
        if let Some(slot) = first {
            if best.is_none_or(|(_, b)| slot < b) {
                best = Some((shape, slot));
            }
        }
    }
    let (shape, slot) = best.expect("single-column layout is always feasible");
    let seq = table.backtrack(shape, slot, |l| inst.width(l), |l| inst.height(l));
    let (width, height) = inst.evaluate(&seq);
    debug_assert_eq!(height, h1 + slot as u64);
    Ok(DpSolution {
        objective: h1 + slot as u64,
        shape,
        rc_sequence: seq,
        budget_used: width,
    })
}

/// Exhaustive search over RC sequences. Ties go to the lexicographically
/// smallest sequence with AR before AC.
///
/// A sequence is extended until it first holds `n` cells; since adding rows
/// or columns never shrinks the extents, longer sequences cannot do better.
/// This uses none of the DP's shape rules.
pub fn brute_force_oracle(inst: &Instance) -> Result<DpSolution> {
    oracle_over(inst, |_, _| true)
}

/// [`brute_force_oracle`] over the final shapes of `set` only.
pub fn brute_force_oracle_with(inst: &Instance, set: ShapeSet) -> Result<DpSolution> {
    oracle_over(inst, |rows, cols| is_candidate(set, inst.n(), rows, cols))
}

fn oracle_over(inst: &Instance, keep: impl Fn(usize, usize) -> bool) -> Result<DpSolution> {
    let n = inst.n();
    if n > ORACLE_MAX_N {
        return Err(Error::OracleTooLarge {
            n,
            limit: ORACLE_MAX_N,
        });
    }
    let mut best: Option<(u64, RcSequence, u64)> = None;
    for_each_covering_sequence(n, &mut |ops, rows, cols| {
        if !keep(rows, cols) {
            return;
        }
        let seq = RcSequence::new(ops.to_vec());
        let (width, height) = seq.evaluate(inst);
        if width > inst.strip_width() {
            return;
        }
        let better = match &best {
            None => true,
            Some((h, s, _)) => (height, &seq) < (*h, s),
        };
        if better {
            best = Some((height, seq, width));
        }
    });
    let (objective, rc_sequence, budget_used) = best.expect("single-column layout is always feasible");
    Ok(DpSolution {
        objective,
        shape: rc_sequence.shape(),
        rc_sequence,
        budget_used,
    })
}

/// Calls `visit(ops, rows, cols)` with every sequence whose shape holds at
/// least `n` cells while its longest proper prefix does not.
fn for_each_covering_sequence(n: usize, visit: &mut dyn FnMut(&[RcOp], usize, usize)) {
    fn go(
        n: usize,
        rows: usize,
        cols: usize,
        buf: &mut Vec<RcOp>,
        visit: &mut dyn FnMut(&[RcOp], usize, usize),
    ) {
        if rows * cols >= n {
            visit(buf, rows, cols);
            return;
        }
        buf.push(RcOp::AddRow);
        go(n, rows + 1, cols, buf, visit);
        buf.pop();
        buf.push(RcOp::AddColumn);
        go(n, rows, cols + 1, buf, visit);
        buf.pop();
    }
    go(n, 1, 1, &mut Vec::new(), visit);
}
