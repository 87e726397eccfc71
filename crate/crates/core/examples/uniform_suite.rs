//! Regenerates the pinned benchmark suite and prints a small slice of the
//! results table.

use std::error::Error;

use sipp::bench::{run_bench, BenchOptions};
use sipp::instgen::{format_instance, gen_uniform};

pub fn run() -> Result<(), Box<dyn Error>> {
    print!("{}", format_instance(&gen_uniform(10, 1)?));
    let opts = BenchOptions {
        sizes: Some(vec![10, 20]),
        seeds: Some(vec![1, 2, 3]),
        ..BenchOptions::default()
    };
    print!("{}", run_bench(&opts)?.to_csv_without_times());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
