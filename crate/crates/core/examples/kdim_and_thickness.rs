//! Packing cubes in three dimensions, and partitions with thickness.

use std::error::Error;

use sipp::exact::solve_dp;
use sipp::multidim::{
    apply_thickness, brute_force_kdim, materialize_grid, solve_kdim_dp, solve_with_thickness, KInstance,
};
use sipp::Instance;

pub fn run() -> Result<(), Box<dyn Error>> {
    let cubes = KInstance::new(vec![11, 10, 9, 5], vec![15, 18])?;
    let sol = solve_kdim_dp(&cubes)?;
    println!(
        "cubes 11 10 9 5, budgets 15 x 18: depth {} (brute force {}), shape {:?}, extents {:?}",
        sol.objective,
        brute_force_kdim(&cubes)?,
        sol.shape,
        sol.extents
    );
    let grid = materialize_grid(3, &sol.extensions);
    println!("grid cells {:?}", grid.cells);

    let inst = Instance::new(vec![20, 15, 13, 13, 11, 8, 5, 3], 60)?;
    let plain = solve_dp(&inst)?.objective;
    for eta in [0, 1, 2, 5] {
        let (shifted, offset) = apply_thickness(&inst, eta)?;
        let with = solve_dp(&shifted)?.objective - offset;
        println!("thickness {eta}: height {with} (plain {plain})");
    }
    let mixed = solve_with_thickness(&inst, 1, 3)?;
    println!("horizontal 1, vertical 3: height {}", mixed.objective);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
