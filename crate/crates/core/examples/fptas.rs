//! The approximation scheme against the exact optimum on a generated
//! instance.

use std::error::Error;

use sipp::approx::{fptas, scale_factor, Epsilon};
use sipp::exact::solve_dp;
use sipp::instgen::gen_uniform;

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = gen_uniform(30, 7)?;
    let opt = solve_dp(&inst)?.objective;
    println!("n = 30, b = {}, optimum {opt}", inst.strip_width());
    for text in ["1/10", "0.25", "0.5", "1", "2"] {
        let eps: Epsilon = text.parse()?;
        let sol = fptas(&inst, eps)?;
        let bound = eps.inflate_floor(opt);
        println!(
            "eps {:>5}: t = {:>4}, height {:>3} (bound {bound}), sequence {}",
            eps.to_string(),
            scale_factor(&inst, eps).to_string(),
            sol.objective,
            sol.rc_sequence
        );
        assert!(opt <= sol.objective && sol.objective <= bound);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
