use proptest::prelude::*;

use sipp::approx::{fptas, Epsilon};
use sipp::exact::{
    brute_force_oracle, brute_force_oracle_with, solve_dp, solve_dp_low_memory, solve_dp_with,
    solve_ripp_width_dp,
};
use sipp::instgen::{format_instance, gen_uniform, parse_instance, reduce_partition, PartitionInput};
use sipp::models::{assignment_for_sequence, check_assignment, emit_model, ModelKind, RcVariant};
use sipp::multidim::{
    apply_thickness, grid_extents, materialize_grid, solve_kdim_dp, solve_with_thickness, KInstance,
};
use sipp::{Instance, Layout, RcOp, RcSequence, RippInstance, ShapeSet, SolutionReport};

/// Lengths in 1..=max and a strip width between the largest and the sum.
fn instance(max_n: usize, max_len: u64) -> impl Strategy<Value = Instance> {
    prop::collection::vec(1..=max_len, 1..=max_n).prop_flat_map(|lengths| {
        let lo = *lengths.iter().max().unwrap();
        let hi = lengths.iter().sum::<u64>();
        (Just(lengths), lo..=hi).prop_map(|(l, b)| Instance::new(l, b).unwrap())
    })
}

fn sequence(max_len: usize) -> impl Strategy<Value = RcSequence> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(|v| {
        RcSequence::new(
            v.into_iter()
                .map(|r| if r { RcOp::AddRow } else { RcOp::AddColumn })
                .collect(),
        )
    })
}

/// Width and height of a grid of labels, measured directly.
fn measure(rows: &[Vec<usize>], len: impl Fn(usize) -> u64) -> (u64, u64) {
    let cols = rows.first().map_or(0, Vec::len);
    let width = (0..cols)
        .map(|c| rows.iter().map(|r| len(r[c])).max().unwrap_or(0))
        .sum();
    let height = rows
        .iter()
        .map(|r| r.iter().map(|&x| len(x)).max().unwrap_or(0))
        .sum();
    (width, height)
}

/// Least height over every grid placement with width at most `b`.
///
/// Squares go in one at a time, each into an existing or a new row and an
/// existing or a new column, never sharing a cell. Row and column order do
/// not change the extents, so new ones are only ever appended.
fn plane_oracle(lengths: &[u64], b: u64) -> u64 {
    fn go(
        lengths: &[u64],
        b: u64,
        i: usize,
        rows: &mut Vec<u64>,
        cols: &mut Vec<u64>,
        used: &mut Vec<(usize, usize)>,
        best: &mut u64,
    ) {
        let width: u64 = cols.iter().sum();
        let height: u64 = rows.iter().sum();
        if width > b || height >= *best {
            return;
        }
        if i == lengths.len() {
            *best = height;
            return;
        }
        let l = lengths[i];
        for r in 0..=rows.len() {
            for c in 0..=cols.len() {
                if used.contains(&(r, c)) {
                    continue;
                }
                let (old_r, old_c) = (rows.get(r).copied(), cols.get(c).copied());
                if r == rows.len() {
                    rows.push(l)
                } else {
                    rows[r] = rows[r].max(l)
                }
                if c == cols.len() {
                    cols.push(l)
                } else {
                    cols[c] = cols[c].max(l)
                }
                used.push((r, c));
                go(lengths, b, i + 1, rows, cols, used, best);
                used.pop();
                match old_r {
                    Some(v) => rows[r] = v,
                    None => {
                        rows.pop();
                    }
                }
                match old_c {
                    Some(v) => cols[c] = v,
                    None => {
                        cols.pop();
                    }
                }
            }
        }
    }
    let mut best = u64::MAX;
    go(
        lengths,
        b,
        0,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut Vec::new(),
        &mut best,
    );
    best
}

fn has_equal_split(values: &[u64]) -> bool {
    let total: u64 = values.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let mut reach = vec![false; total as usize + 1];
    reach[0] = true;
    for &v in values {
        for s in (v as usize..=total as usize).rev() {
            reach[s] |= reach[s - v as usize];
        }
    }
    reach[total as usize / 2]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn instances_are_normalized(lengths in prop::collection::vec(1u64..50, 1..20)) {
        let b = *lengths.iter().max().unwrap() + 3;
        let inst = Instance::new(lengths.clone(), b).unwrap();
        prop_assert!(inst.lengths().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(inst.original_lengths(), lengths.clone());
        let mut seen: Vec<usize> = (1..=inst.n()).map(|l| inst.original_index(l).unwrap()).collect();
        for l in 1..=inst.n() {
            prop_assert_eq!(lengths[inst.original_index(l).unwrap()], inst.length(l));
        }
        seen.sort();
        prop_assert_eq!(seen, (0..inst.n()).collect::<Vec<_>>());
        prop_assert_eq!(inst.original_index(inst.n() + 1), None);
    }

    #[test]
    fn sequences_round_trip_and_evaluate(inst in instance(10, 30), seq in sequence(10)) {
        let text = seq.to_string();
        prop_assert!(text.chars().all(|c| c == 'R' || c == 'C'));
        prop_assert_eq!(text.parse::<RcSequence>().unwrap(), seq.clone());

        let layout = seq.to_layout();
        prop_assert!(layout.is_rc());
        prop_assert_eq!(layout.rc_sequence(), Some(seq.clone()));
        prop_assert_eq!(layout.shape(), seq.shape());
        let direct = measure(&layout.to_rows(), |l| inst.length(l));
        prop_assert_eq!(seq.evaluate(&inst), direct);
    }

    #[test]
    fn sorting_never_grows(inst in instance(9, 30), rows in 1usize..=4, cols in 1usize..=4, perm in any::<u64>()) {
        let cells = rows * cols;
        let mut labels: Vec<usize> = (1..=cells).collect();
        // deterministic shuffle from the drawn seed
        let mut state = perm;
        for i in (1..cells).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            labels.swap(i, (state >> 33) as usize % (i + 1));
        }
        let layout = Layout::new(rows, cols, labels).unwrap();
        let sorted = layout.to_sorted();
        prop_assert!(sorted.is_sorted());
        prop_assert!(sorted.width(&inst) <= layout.width(&inst));
        prop_assert!(sorted.height(&inst) <= layout.height(&inst));
        let mut a = sorted.cells().to_vec();
        a.sort();
        prop_assert_eq!(a, (1..=cells).collect::<Vec<_>>());
    }

    #[test]
    fn exact_solvers_agree_with_plane_search(inst in instance(6, 20)) {
        let opt = plane_oracle(inst.lengths(), inst.strip_width());
        let dp = solve_dp(&inst).unwrap();
        prop_assert_eq!(dp.objective, opt);
        prop_assert_eq!(solve_dp_low_memory(&inst).unwrap(), opt);
        prop_assert_eq!(brute_force_oracle(&inst).unwrap().objective, opt);
        let (w, h) = dp.rc_sequence.evaluate(&inst);
        prop_assert!(w <= inst.strip_width());
        prop_assert_eq!((w, h), (dp.budget_used, dp.objective));
        prop_assert!(SolutionReport::from_sequence(&inst, &dp.rc_sequence).feasible());
    }

    #[test]
    fn restricted_shapes_are_consistent_but_can_lose(inst in instance(8, 20)) {
        let full = solve_dp(&inst).unwrap().objective;
        let narrow = solve_dp_with(&inst, ShapeSet::Restricted).unwrap();
        prop_assert!(narrow.objective >= full);
        prop_assert_eq!(
            brute_force_oracle_with(&inst, ShapeSet::Restricted).unwrap().objective,
            narrow.objective
        );
        prop_assert_eq!(solve_ripp_width_dp(&RippInstance::from_squares(&inst)).unwrap().objective, full);
    }

    #[test]
    fn fptas_stays_within_its_bound(inst in instance(12, 20), which in 0usize..5) {
        let eps: Epsilon = ["1/10", "1/4", "1/2", "1", "2"][which].parse().unwrap();
        let opt = solve_dp(&inst).unwrap().objective;
        let sol = fptas(&inst, eps).unwrap();
        prop_assert!(opt <= sol.objective);
        prop_assert!(sol.objective <= eps.inflate_floor(opt));
        let (w, h) = sol.rc_sequence.evaluate(&inst);
        prop_assert!(w <= inst.strip_width());
        prop_assert_eq!(h, sol.objective);
    }

    #[test]
    fn instance_files_round_trip(inst in instance(30, 1000)) {
        let text = format_instance(&inst);
        prop_assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn models_accept_covering_sequences(inst in instance(5, 20), seq in sequence(8)) {
        let (rows, cols) = seq.shape();
        prop_assume!(rows * cols >= inst.n());
        let (w, h) = seq.evaluate(&inst);
        for kind in [ModelKind::Basic, ModelKind::Sorted, ModelKind::Rc] {
            let doc = emit_model(kind, RcVariant::Capped, &inst);
            let asg = assignment_for_sequence(kind, &inst, &seq).unwrap();
            let report = check_assignment(&doc, &asg).unwrap();
            prop_assert_eq!(report.feasible, w <= inst.strip_width(), "{} {:?}", kind, report.violated);
            if report.feasible {
                prop_assert_eq!(report.objective, h as i64);
            }
        }
    }

    #[test]
    fn thickness_shifts_the_optimum(inst in instance(7, 15), eta in 0u64..6) {
        let (shifted, offset) = apply_thickness(&inst, eta).unwrap();
        prop_assert_eq!(offset, eta);
        let with = solve_dp(&shifted).unwrap().objective - offset;
        let (bigger, _) = apply_thickness(&inst, eta + 1).unwrap();
        prop_assert!(solve_dp(&bigger).unwrap().objective - (eta + 1) >= with);
        prop_assert!(with >= solve_dp(&inst).unwrap().objective);
        prop_assert_eq!(solve_with_thickness(&inst, eta, eta).unwrap().objective, with);
    }

    #[test]
    fn slab_extents_match_the_grid(lengths in prop::collection::vec(1u64..20, 1..10), ext in prop::collection::vec(0usize..3, 0..6)) {
        let inst = KInstance::new(lengths, vec![1000, 1000]).unwrap();
        let grid = materialize_grid(3, &ext);
        let mut labels: Vec<usize> = grid.cells.iter().map(|c| c.1).collect();
        labels.sort();
        prop_assert_eq!(labels, (1..=grid.shape.iter().product::<usize>()).collect::<Vec<_>>());
        // every plane's thickness is its largest cube
        let direct: Vec<u64> = (0..3)
            .map(|t| {
                (0..grid.shape[t])
                    .map(|p| grid.cells.iter().filter(|(c, _)| c[t] == p).map(|(_, l)| inst.length(*l)).max().unwrap_or(0))
                    .sum()
            })
            .collect();
        prop_assert_eq!(grid_extents(&inst, &ext), direct);
    }

    #[test]
    fn two_dimensional_grids_match_the_plane(inst in instance(10, 20)) {
        let sol = solve_kdim_dp(&KInstance::from_instance(&inst)).unwrap();
        prop_assert_eq!(sol.objective, solve_dp(&inst).unwrap().objective);
    }

    #[test]
    fn reduction_preserves_the_answer(values in prop::collection::vec(1u64..6, 1..=3)) {
        let pp = PartitionInput::new(values.clone()).unwrap();
        let red = reduce_partition(&pp).unwrap();
        let opt = solve_dp(&red.instance).unwrap().objective;
        prop_assert!(opt >= red.lambda);
        prop_assert_eq!(opt == red.lambda, has_equal_split(&values));
        prop_assert_eq!(pp.has_equal_split().unwrap(), has_equal_split(&values));
    }

    #[test]
    fn generation_is_deterministic(n in 1usize..40, seed in any::<u64>()) {
        let a = gen_uniform(n, seed).unwrap();
        prop_assert_eq!(&a, &gen_uniform(n, seed).unwrap());
        prop_assert!(a.lengths().iter().all(|&l| (1..=20).contains(&l)));
        let sq: u64 = a.lengths().iter().map(|l| l * l).sum();
        let b = a.strip_width();
        prop_assert!(b * b >= sq && (b - 1) * (b - 1) < sq);
    }
}
