//! Layouts, their sorted form and the RC form, on the eight-square example.

use std::error::Error;

use sipp::{Instance, Layout, RcSequence};

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = Instance::new(vec![20, 15, 13, 13, 11, 8, 5, 3], 60)?;

    // row 0 is the bottom row; label 9 is an empty cell
    let layout = Layout::from_rows(&[vec![3, 7, 2], vec![5, 6, 9], vec![4, 1, 8]])?;
    println!("layout:\n{layout}");
    println!("W = {}, H = {}", layout.width(&inst), layout.height(&inst));

    let sorted = layout.to_sorted();
    println!("sorted:\n{sorted}");
    println!("W = {}, H = {}", sorted.width(&inst), sorted.height(&inst));

    let rc = sorted.sorted_to_rc()?;
    let seq = rc.rc_sequence().ok_or("sorted_to_rc returned a non-RC layout")?;
    println!("as RC layout ({seq}):\n{rc}");
    println!("W = {}, H = {}", rc.width(&inst), rc.height(&inst));

    let best: RcSequence = "CCRC".parse()?;
    let (w, h) = best.evaluate(&inst);
    println!("{best}: W = {w}, H = {h}\n{}", best.to_layout());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
