//! Problem input: square side lengths and the strip width.

use crate::error::{Error, Result};

/// An instance of the square independent packing problem.
///
/// Side lengths are kept in non-increasing order; square labels used
/// throughout the crate are 1-based positions in that order. Labels larger
/// than `n` denote dummy squares of side 0. The permutation applied on
/// construction is retained so results can be mapped back to input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    lengths: Vec<u64>,
    strip_width: u64,
    // original[label - 1] = position of that square in the input sequence
    original: Vec<usize>,
}

impl Instance {
    /// Builds an instance from side lengths in any order.
    ///
    /// Equal lengths keep their input order. Fails when a length is zero,
    /// when the largest square is wider than the strip, or when
    /// `n * max(l)` does not fit in a `u64` accumulator.
    pub fn new(lengths: Vec<u64>, strip_width: u64) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if let Some(index) = lengths.iter().position(|&l| l == 0) {
            return Err(Error::ZeroLength { index: index + 1 });
        }

        let mut original: Vec<usize> = (0..lengths.len()).collect();
        original.sort_by(|&a, &b| lengths[b].cmp(&lengths[a]).then(a.cmp(&b)));
        let sorted: Vec<u64> = original.iter().map(|&i| lengths[i]).collect();

        let largest = sorted[0];
        if largest > strip_width {
            return Err(Error::Infeasible { largest, strip_width });
        }
        let bound = (sorted.len() as u64).checked_mul(largest);
        if !matches!(bound, Some(v) if v < u64::MAX) {
            return Err(Error::Overflow(format!(
                "{} squares of side up to {largest} overflow the length accumulator",
                sorted.len()
            )));
        }

        Ok(Self {
            lengths: sorted,
            strip_width,
            original,
        })
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    /// Side lengths in non-increasing order.
    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn strip_width(&self) -> u64 {
        self.strip_width
    }

    /// Side length of a 1-based label; dummy labels (`> n`) have length 0.
    #[inline]
    pub fn length(&self, label: usize) -> u64 {
        debug_assert!(label >= 1);
        self.lengths.get(label - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u64 {
        self.lengths[0]
    }

    pub fn total_length(&self) -> u64 {
        self.lengths.iter().sum()
    }

    /// Zero-based input position of the square with the given label, or
    /// `None` for dummy labels.
    pub fn original_index(&self, label: usize) -> Option<usize> {
        label.checked_sub(1).and_then(|i| self.original.get(i)).copied()
    }

    /// Lengths in the order they were supplied.
    pub fn original_lengths(&self) -> Vec<u64> {
        let mut out = vec![0; self.n()];
        for (label0, &pos) in self.original.iter().enumerate() {
            out[pos] = self.lengths[label0];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_and_remembers_input_order() {
        let inst = Instance::new(vec![3, 20, 13, 15, 13], 60).unwrap();
        assert_eq!(inst.lengths(), &[20, 15, 13, 13, 3]);
        assert_eq!(inst.original_index(1), Some(1));
        // ties keep input order: the first 13 (position 2) gets label 3
        assert_eq!(inst.original_index(3), Some(2));
        assert_eq!(inst.original_index(4), Some(4));
        assert_eq!(inst.original_index(6), None);
        assert_eq!(inst.original_lengths(), vec![3, 20, 13, 15, 13]);
    }

    #[test]
    fn dummy_labels_have_zero_length() {
        let inst = Instance::new(vec![5, 4], 9).unwrap();
        assert_eq!(inst.length(1), 5);
        assert_eq!(inst.length(3), 0);
        assert_eq!(inst.length(100), 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Instance::new(vec![], 5), Err(Error::EmptyInstance)));
        assert!(matches!(
            Instance::new(vec![3, 0], 5),
            Err(Error::ZeroLength { index: 2 })
        ));
        let err = Instance::new(vec![6, 1], 5).unwrap_err();
        assert!(err.to_string().contains("infeasible instance"));
        assert!(matches!(
            Instance::new(vec![u64::MAX / 2; 3], u64::MAX),
            Err(Error::Overflow(_))
        ));
    }
}
