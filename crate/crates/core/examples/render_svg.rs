//! Draws the optimal layout and an infeasible one as SVG files.

use std::error::Error;

use sipp::exact::solve_dp;
use sipp::render::{render_svg, SvgStyle};
use sipp::{Instance, SolutionReport};

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = Instance::new(vec![20, 15, 13, 13, 11, 8, 5, 3], 60)?;
    let dir = std::env::temp_dir().join("sipp-render");
    std::fs::create_dir_all(&dir)?;

    let sol = solve_dp(&inst)?;
    let good = SolutionReport::from_sequence(&inst, &sol.rc_sequence);
    let wide = SolutionReport::from_sequence(&inst, &"CCCCCCC".parse()?);

    for (name, report) in [("optimal", &good), ("too_wide", &wide)] {
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, render_svg(&inst, report, &SvgStyle::default()))?;
        println!(
            "{} ({}x{}, feasible {})",
            path.display(),
            report.width(),
            report.height(),
            report.feasible()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
