//! Row-column (RC) sequences: the compact solution encoding.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::layout::Layout;

/// One step of an RC sequence.
///
/// `AddRow` appends a row of fresh labels on top of the layout, `AddColumn`
/// appends a column on its right. The derived ordering puts `AddRow` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RcOp {
    AddRow,
    AddColumn,
}

impl RcOp {
    pub fn as_char(self) -> char {
        match self {
            RcOp::AddRow => 'R',
            RcOp::AddColumn => 'C',
        }
    }
}

/// A sequence of add-row / add-column operations applied to the 1x1 base
/// layout. Rendered as a string over `{R, C}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RcSequence(Vec<RcOp>);

impl RcSequence {
    pub fn new(ops: Vec<RcOp>) -> Self {
        Self(ops)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn ops(&self) -> &[RcOp] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, op: RcOp) {
        self.0.push(op);
    }

    /// `(rows, cols)` of the layout this sequence builds.
    pub fn shape(&self) -> (usize, usize) {
        let rows = 1 + self.0.iter().filter(|&&op| op == RcOp::AddRow).count();
        (rows, 1 + self.0.len() + 1 - rows)
    }

    /// Materializes the layout by folding the operations over the base layout.
    pub fn to_layout(&self) -> Layout {
        self.0.iter().fold(Layout::base(), |layout, op| match op {
            RcOp::AddRow => layout.apply_ar(),
            RcOp::AddColumn => layout.apply_ac(),
        })
    }

    /// `(width, height)` of the packing under `inst`, computed incrementally.
    pub fn evaluate(&self, inst: &Instance) -> (u64, u64) {
        self.evaluate_with(|label| inst.length(label), |label| inst.length(label))
    }

    /// Incremental evaluation with separate width and height per label.
    ///
    /// Starting from the base layout, an operation applied to a `p x q`
    /// layout adds the height (AR) or width (AC) of label `pq + 1`, the
    /// largest item of the new line.
    pub fn evaluate_with(
        &self,
        width_of: impl Fn(usize) -> u64,
        height_of: impl Fn(usize) -> u64,
    ) -> (u64, u64) {
        let (mut rows, mut cols) = (1usize, 1usize);
        let (mut width, mut height) = (width_of(1), height_of(1));
        for op in &self.0 {
            let head = rows * cols + 1;
            match op {
                RcOp::AddRow => {
                    height += height_of(head);
                    rows += 1;
                }
                RcOp::AddColumn => {
                    width += width_of(head);
                    cols += 1;
                }
            }
        }
        (width, height)
    }
}

impl From<Vec<RcOp>> for RcSequence {
    fn from(ops: Vec<RcOp>) -> Self {
        Self(ops)
    }
}

impl fmt::Display for RcSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.0 {
            write!(f, "{}", op.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for RcSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'R' => Ok(RcOp::AddRow),
                'C' => Ok(RcOp::AddColumn),
                other => Err(Error::InvalidSequence(format!(
                    "unexpected character {other:?}; use R (add row) and C (add column)"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(RcSequence)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RcOp::*;

    fn example1() -> Instance {
        Instance::new(vec![20, 15, 13, 13, 11, 8, 5, 3], 60).unwrap()
    }

    #[test]
    fn evaluates_two_row_sequence() {
        let seq = RcSequence::new(vec![AddColumn, AddColumn, AddRow, AddColumn]);
        assert_eq!(seq.evaluate(&example1()), (53, 33));
        assert_eq!(seq.shape(), (2, 4));
    }

    #[test]
    fn empty_sequence_is_base_layout() {
        assert_eq!(RcSequence::empty().evaluate(&example1()), (20, 20));
        assert_eq!(RcSequence::empty().to_layout(), Layout::base());
    }

    #[test]
    fn alternative_sequence_matches_materialized_layout() {
        let inst = example1();
        let seq: RcSequence = "CRCC".parse().unwrap();
        let layout = seq.to_layout();
        assert_eq!(seq.evaluate(&inst), (51, 33));
        assert_eq!((layout.width(&inst), layout.height(&inst)), (51, 33));
    }

    #[test]
    fn parses_and_prints() {
        let seq: RcSequence = "ccrc".parse().unwrap();
        assert_eq!(seq.to_string(), "CCRC");
        assert_eq!("".parse::<RcSequence>().unwrap(), RcSequence::empty());
        assert!("CRX".parse::<RcSequence>().is_err());
    }

    #[test]
    fn single_add_row() {
        let layout = RcSequence::new(vec![AddRow]).to_layout();
        assert_eq!(layout, Layout::from_rows(&[vec![1], vec![2]]).unwrap());
    }
}
