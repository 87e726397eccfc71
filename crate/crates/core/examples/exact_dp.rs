//! Exact optimum three ways: the table DP, the low-memory DP and exhaustive
//! search.

use std::error::Error;

use sipp::exact::{brute_force_oracle, solve_dp, solve_dp_low_memory, solve_dp_with, HeightTable};
use sipp::{Instance, ShapeSet, SolutionReport};

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = Instance::new(vec![20, 15, 13, 13, 11, 8, 5, 3], 60)?;
    let sol = solve_dp(&inst)?;
    println!(
        "dp: height {} width {} shape {}x{} sequence {}",
        sol.objective, sol.budget_used, sol.shape.0, sol.shape.1, sol.rc_sequence
    );
    println!("low-memory dp: height {}", solve_dp_low_memory(&inst)?);
    println!("oracle: height {}", brute_force_oracle(&inst)?.objective);

    let table = HeightTable::build(&inst)?;
    println!(
        "{} shapes in the table, {} candidates",
        table.shapes().len(),
        table.candidates().len()
    );
    for k in [20, 30, 40, 50, 60] {
        let v = table.value(2, 4, k).filter(|&v| v != u64::MAX);
        println!("  f(2, 4, {k}) = {}", v.map_or("inf".into(), |v| v.to_string()));
    }

    let report = SolutionReport::from_sequence(&inst, &sol.rc_sequence);
    for (r, row) in report.original_positions(&inst).iter().enumerate().rev() {
        let cells: Vec<String> = row
            .iter()
            .map(|c| c.map_or("-".into(), |i| format!("#{i}")))
            .collect();
        println!("  row {r}: {}", cells.join(" "));
    }

    // An instance where a nearly empty top row pays off.
    let tricky = Instance::new(vec![12, 10, 5, 1], 27)?;
    let full = solve_dp(&tricky)?;
    let narrow = solve_dp_with(&tricky, ShapeSet::Restricted)?;
    println!(
        "12 10 5 1 in width 27: {} via {}, restricted shapes only reach {} via {}",
        full.objective, full.rc_sequence, narrow.objective, narrow.rc_sequence
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
