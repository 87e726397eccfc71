//! Layouts: `p x q` grids of square labels and the transforms between the
//! general, sorted and RC forms.
//!
//! Row 0 is the bottom row and column 0 the leftmost column, so
//! [`Layout::from_rows`] takes rows bottom-up. Labels are 1-based; labels
//! above `n` are dummy squares of side 0.

use std::fmt;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::sequence::{RcOp, RcSequence};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layout {
    rows: usize,
    cols: usize,
    // row-major, row 0 = bottom
    cells: Vec<usize>,
}

impl Layout {
    /// Builds a layout from row-major cells; `cells` must be a permutation of
    /// `1..=rows*cols`.
    pub fn new(rows: usize, cols: usize, cells: Vec<usize>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidLayout(
                "layout needs at least one row and one column".into(),
            ));
        }
        let size = rows * cols;
        if cells.len() != size {
            return Err(Error::InvalidLayout(format!(
                "{rows}x{cols} layout needs {size} cells, got {}",
                cells.len()
            )));
        }
        let mut seen = vec![false; size];
        for &label in &cells {
            if label == 0 || label > size || std::mem::replace(&mut seen[label - 1], true) {
                return Err(Error::InvalidLayout(format!(
                    "cells must contain every label 1..={size} exactly once (bad label {label})"
                )));
            }
        }
        Ok(Self { rows, cols, cells })
    }

    /// Builds a layout from rows listed bottom-up.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidLayout("rows have different lengths".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    /// The 1x1 layout holding label 1.
    pub fn base() -> Self {
        Self {
            rows: 1,
            cols: 1,
            cells: vec![1],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Label at zero-based `(row, col)`.
    #[inline]
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[usize] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rows).map(move |r| self.get(r, col))
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Sum over columns of the largest square in each column.
    pub fn width(&self, inst: &Instance) -> u64 {
        self.width_by(|label| inst.length(label))
    }

    /// Sum over rows of the largest square in each row.
    pub fn height(&self, inst: &Instance) -> u64 {
        self.height_by(|label| inst.length(label))
    }

    pub fn width_by(&self, len: impl Fn(usize) -> u64) -> u64 {
        (0..self.cols)
            .map(|c| self.column(c).map(&len).max().unwrap_or(0))
            .sum()
    }

    pub fn height_by(&self, len: impl Fn(usize) -> u64) -> u64 {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&l| len(l)).max().unwrap_or(0))
            .sum()
    }

    /// True when labels strictly increase left to right along every row and
    /// bottom to top along every column.
    pub fn is_sorted(&self) -> bool {
        let rows_ok = (0..self.rows).all(|r| self.row(r).windows(2).all(|w| w[0] < w[1]));
        let cols_ok = (1..self.rows).all(|r| (0..self.cols).all(|c| self.get(r - 1, c) < self.get(r, c)));
        rows_ok && cols_ok
    }

    /// Transforms the layout into a sorted layout of the same shape whose
    /// width and height are no larger.
    ///
    /// Each round moves the row holding the smallest remaining label to the
    /// front, pulls every column minimum into that row, reorders columns by
    /// their first label, then emits and removes the first row.
    pub fn to_sorted(&self) -> Layout {
        let mut work = self.to_rows();
        let mut out = Vec::with_capacity(self.rows * self.cols);

        while !work.is_empty() {
            let min_row = (0..work.len())
                .min_by_key(|&r| work[r].iter().min())
                .expect("non-empty");
            work.swap(0, min_row);

            for c in 0..self.cols {
                let r_min = (0..work.len()).min_by_key(|&r| work[r][c]).expect("non-empty");
                if r_min != 0 {
                    let first = work[0][c];
                    work[0][c] = work[r_min][c];
                    work[r_min][c] = first;
                }
            }

            let mut order: Vec<usize> = (0..self.cols).collect();
            order.sort_by_key(|&c| work[0][c]);
            for row in &mut work {
                *row = order.iter().map(|&c| row[c]).collect();
            }

            out.extend(work.remove(0));
        }

        Layout {
            rows: self.rows,
            cols: self.cols,
            cells: out,
        }
    }

    /// Appends the row `(pq+1, ..., pq+q)` on top.
    pub fn apply_ar(&self) -> Layout {
        let size = self.rows * self.cols;
        let mut cells = self.cells.clone();
        cells.extend(size + 1..=size + self.cols);
        Layout {
            rows: self.rows + 1,
            cols: self.cols,
            cells,
        }
    }

    /// Appends the column `(pq+1, ..., pq+p)` on the right.
    pub fn apply_ac(&self) -> Layout {
        let size = self.rows * self.cols;
        let cols = self.cols + 1;
        let mut cells = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            cells.extend_from_slice(self.row(r));
            cells.push(size + 1 + r);
        }
        Layout {
            rows: self.rows,
            cols,
            cells,
        }
    }

    /// True when the layout can be built from the base layout by AR/AC steps.
    pub fn is_rc(&self) -> bool {
        self.rc_sequence().is_some()
    }

    /// Recovers the RC sequence that builds this layout, if any.
    ///
    /// Peels the last row or last column while it carries the labels an
    /// AR/AC step would have appended to the remaining submatrix. At most
    /// one of the two can match unless the remainder is a single line, in
    /// which case both readings agree.
    pub fn rc_sequence(&self) -> Option<RcSequence> {
        let (mut p, mut q) = (self.rows, self.cols);
        let mut ops = Vec::with_capacity(p + q - 2);
        while p > 1 || q > 1 {
            let last_row_fits = p > 1 && (0..q).all(|c| self.get(p - 1, c) == (p - 1) * q + c + 1);
            let last_col_fits = q > 1 && (0..p).all(|r| self.get(r, q - 1) == p * (q - 1) + r + 1);
            if last_row_fits {
                ops.push(RcOp::AddRow);
                p -= 1;
            } else if last_col_fits {
                ops.push(RcOp::AddColumn);
                q -= 1;
            } else {
                return None;
            }
        }
        if self.get(0, 0) != 1 {
            return None;
        }
        ops.reverse();
        Some(RcSequence::new(ops))
    }

    /// Transforms a sorted layout into an RC layout of the same shape
    /// without increasing width or height.
    ///
    /// Grows an RC submatrix from the base cell. Whichever of the cells to
    /// the right of or above the submatrix holds the next label decides the
    /// direction; the rest of the new line is then normalized by repeatedly
    /// swapping each of its cells with the cell holding the next-smaller
    /// label.
    pub fn sorted_to_rc(&self) -> Result<Layout> {
        if !self.is_sorted() {
            return Err(Error::NotSorted);
        }
        let (p, q) = (self.rows, self.cols);
        let mut cells = self.cells.clone();
        let mut pos = vec![0usize; p * q + 1];
        for (idx, &label) in cells.iter().enumerate() {
            pos[label] = idx;
        }
        let at = |r: usize, c: usize| r * q + c;

        // Normalizes one cell of the line being appended to hold `want`.
        let settle = |cells: &mut Vec<usize>, pos: &mut Vec<usize>, idx: usize, want: usize| {
            while cells[idx] > want {
                let other = pos[cells[idx] - 1];
                cells.swap(idx, other);
                pos[cells[idx]] = idx;
                pos[cells[other]] = other;
            }
        };

        let (mut pp, mut qq) = (1usize, 1usize);
        while pp < p || qq < q {
            let mut grew = false;
            if qq < q && cells[at(0, qq)] == pp * qq + 1 {
                for k in 2..=pp {
                    settle(&mut cells, &mut pos, at(k - 1, qq), pp * qq + k);
                }
                qq += 1;
                grew = true;
            }
            if pp < p && cells[at(pp, 0)] == pp * qq + 1 {
                for k in 2..=qq {
                    settle(&mut cells, &mut pos, at(pp, k - 1), pp * qq + k);
                }
                pp += 1;
                grew = true;
            }
            // a sorted layout always stores the next label beside the submatrix
            assert!(grew, "sorted layout invariant broken at {pp}x{qq}");
        }

        Ok(Layout {
            rows: p,
            cols: q,
            cells,
        })
    }

    /// Labels in the first row or first column of a sorted layout, ascending.
    pub fn bottleneck_values(&self) -> Result<Vec<usize>> {
        if !self.is_sorted() {
            return Err(Error::NotSorted);
        }
        let mut values: Vec<usize> = self.row(0).to_vec();
        values.extend(self.column(0).skip(1));
        values.sort_unstable();
        Ok(values)
    }
}

impl fmt::Display for Layout {
    /// One line per row, bottom row first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = (self.rows * self.cols).to_string().len();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|l| format!("{l:>w$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Upper bound on the `k`-th smallest bottleneck label of any sorted layout:
/// `(k+1)(k-1)/4 + 1` for odd `k`, `k^2/4 + 1` for even `k`.
pub fn omega(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidArgument("omega is defined for k >= 1".into()));
    }
    Ok(if k % 2 == 1 {
        (k + 1) * (k - 1) / 4 + 1
    } else {
        k * k / 4 + 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> Instance {
        Instance::new(vec![20, 15, 13, 13, 11, 8, 5, 3], 60).unwrap()
    }

    fn layout_a() -> Layout {
        Layout::from_rows(&[vec![3, 7, 2], vec![5, 6, 9], vec![4, 1, 8]]).unwrap()
    }

    fn layout_b() -> Layout {
        Layout::from_rows(&[vec![1, 2, 3], vec![4, 6, 8], vec![5, 7, 9]]).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Layout::new(2, 2, vec![1, 2, 3, 3]).is_err());
        assert!(Layout::new(2, 2, vec![1, 2, 3]).is_err());
        assert!(Layout::new(1, 2, vec![0, 1]).is_err());
        assert!(Layout::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn metrics_of_example_layouts() {
        let inst = example1();
        assert_eq!(layout_a().width(&inst), 48);
        assert_eq!(layout_a().height(&inst), 46);
        assert_eq!(layout_b().width(&inst), 48);
        assert_eq!(layout_b().height(&inst), 44);
        assert_eq!(Layout::base().width(&inst), 20);
        assert_eq!(Layout::base().height(&inst), 20);
    }

    #[test]
    fn sortedness() {
        assert!(layout_b().is_sorted());
        assert!(!layout_a().is_sorted());
        assert!(Layout::base().is_sorted());
    }

    #[test]
    fn sorting_example_layout() {
        assert_eq!(layout_a().to_sorted(), layout_b());
        assert_eq!(layout_b().to_sorted(), layout_b());
    }

    #[test]
    fn add_row_and_column() {
        let ar = Layout::from_rows(&[vec![3, 7, 2], vec![5, 6, 9], vec![4, 1, 8], vec![10, 11, 12]]).unwrap();
        let ac = Layout::from_rows(&[vec![3, 7, 2, 10], vec![5, 6, 9, 11], vec![4, 1, 8, 12]]).unwrap();
        assert_eq!(layout_a().apply_ar(), ar);
        assert_eq!(layout_a().apply_ac(), ac);
        assert_eq!(
            Layout::base().apply_ar(),
            Layout::from_rows(&[vec![1], vec![2]]).unwrap()
        );
    }

    #[test]
    fn rc_recognition() {
        let two_rows: RcSequence = "CCRC".parse().unwrap();
        let layout = two_rows.to_layout();
        assert_eq!(
            layout,
            Layout::from_rows(&[vec![1, 2, 3, 7], vec![4, 5, 6, 8]]).unwrap()
        );
        assert!(layout.is_rc());
        assert_eq!(layout.rc_sequence(), Some(two_rows));
        assert!(!layout_b().is_rc());
        assert!(!layout_a().is_rc());
        assert!(Layout::base().is_rc());
        assert_eq!(Layout::base().rc_sequence(), Some(RcSequence::empty()));
    }

    #[test]
    fn sorted_example_to_rc() {
        let inst = example1();
        let rc = layout_b().sorted_to_rc().unwrap();
        assert!(rc.is_rc());
        assert!(rc.width(&inst) <= 48);
        assert!(rc.height(&inst) <= 44);
        assert!(matches!(layout_a().sorted_to_rc(), Err(Error::NotSorted)));
        let already = "RCRC".parse::<RcSequence>().unwrap().to_layout();
        assert_eq!(already.sorted_to_rc().unwrap(), already);
    }

    #[test]
    fn bottlenecks() {
        let two_rows = "CCRC".parse::<RcSequence>().unwrap().to_layout();
        assert_eq!(two_rows.bottleneck_values().unwrap(), vec![1, 2, 3, 4, 7]);
        assert_eq!(Layout::base().bottleneck_values().unwrap(), vec![1]);
        let rr = "RR".parse::<RcSequence>().unwrap().to_layout();
        assert_eq!(rr.bottleneck_values().unwrap(), vec![1, 2, 3]);
        assert!(layout_a().bottleneck_values().is_err());
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(1).unwrap(), 1);
        assert_eq!(omega(2).unwrap(), 2);
        assert_eq!(omega(3).unwrap(), 3);
        assert_eq!(omega(4).unwrap(), 5);
        assert_eq!(omega(5).unwrap(), 7);
        assert!(omega(0).is_err());
    }
}
