//! Partition instances turned into packing instances: a yes-instance packs
//! to exactly lambda, a no-instance cannot.

use std::error::Error;

use sipp::exact::solve_dp;
use sipp::instgen::{reduce_partition, PartitionInput};

pub fn run() -> Result<(), Box<dyn Error>> {
    for values in ["3,1,1,2,2,1", "2,2,2,4", "1,2,4"] {
        let pp: PartitionInput = values.parse()?;
        let red = reduce_partition(&pp)?;
        let opt = solve_dp(&red.instance)?.objective;
        println!(
            "{values:<12} split: {:<5} n = {:>2} b = {:>3} lambda = {:>3} optimum = {opt}{}",
            pp.has_equal_split()?,
            red.instance.n(),
            red.instance.strip_width(),
            red.lambda,
            if red.doubled { " (values doubled)" } else { "" }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
