use crate::instance::Instance;
use crate::layout::Layout;
use crate::sequence::RcSequence;

/// A packing evaluated against an instance.
///
/// Width and height are always recomputed from the stored layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionReport {
    width: u64,
    height: u64,
    layout: Layout,
    rc_sequence: Option<RcSequence>,
    places_all: bool,
    feasible: bool,
}

impl SolutionReport {
    pub fn from_layout(inst: &Instance, layout: Layout) -> Self {
        let rc_sequence = layout.rc_sequence();
        Self::build(inst, layout, rc_sequence)
    }

    pub fn from_sequence(inst: &Instance, seq: &RcSequence) -> Self {
        Self::build(inst, seq.to_layout(), Some(seq.clone()))
    }

    fn build(inst: &Instance, layout: Layout, rc_sequence: Option<RcSequence>) -> Self {
        let width = layout.width(inst);
        let height = layout.height(inst);
        let places_all = layout.rows() * layout.cols() >= inst.n();
        Self {
            width,
            height,
            layout,
            rc_sequence,
            places_all,
            feasible: places_all && width <= inst.strip_width(),
        }
    }

    pub fn width(&self) -> u64 {
        self.width
    }

    pub fn height(&self) -> u64 {
        self.height
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn rc_sequence(&self) -> Option<&RcSequence> {
        self.rc_sequence.as_ref()
    }

    /// True when the layout has a cell for every square.
    pub fn places_all(&self) -> bool {
        self.places_all
    }

    /// Every square is placed and the width fits the strip.
    pub fn feasible(&self) -> bool {
        self.feasible
    }

    /// The layout with each label replaced by the 1-based input position of
    /// its square; dummy cells become `None`. Rows are bottom-up.
    pub fn original_positions(&self, inst: &Instance) -> Vec<Vec<Option<usize>>> {
        self.layout
            .to_rows()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|label| inst.original_index(label).map(|i| i + 1))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_maps_back_to_input_order() {
        let inst = Instance::new(vec![4, 9, 6], 15).unwrap();
        let report = SolutionReport::from_sequence(&inst, &"CR".parse().unwrap());
        assert_eq!(report.layout().shape(), (2, 2));
        assert_eq!((report.width(), report.height()), (15, 13));
        assert!(report.feasible());
        assert_eq!(
            report.original_positions(&inst),
            vec![vec![Some(2), Some(3)], vec![Some(1), None]]
        );
    }

    #[test]
    fn too_few_cells_is_not_feasible() {
        let inst = Instance::new(vec![4, 9, 6], 15).unwrap();
        let report = SolutionReport::from_sequence(&inst, &"C".parse().unwrap());
        assert!(!report.places_all());
        assert!(!report.feasible());
    }

    #[test]
    fn infeasible_width_is_flagged() {
        let inst = Instance::new(vec![5, 5, 5], 9).unwrap();
        let report = SolutionReport::from_sequence(&inst, &"CC".parse().unwrap());
        assert_eq!(report.width(), 15);
        assert!(!report.feasible());
        let layout = Layout::from_rows(&[vec![1], vec![2], vec![3]]).unwrap();
        let report = SolutionReport::from_layout(&inst, layout);
        assert_eq!(report.rc_sequence().map(ToString::to_string), Some("RR".into()));
        assert!(report.feasible());
    }
}
