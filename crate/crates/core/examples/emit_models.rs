//! Writes the three formulations and checks the optimal sequence in each.

use std::error::Error;

use sipp::exact::solve_dp;
use sipp::models::{assignment_for_sequence, check_assignment, emit_model, ModelKind, RcVariant};
use sipp::Instance;

pub fn run() -> Result<(), Box<dyn Error>> {
    let inst = Instance::new(vec![5, 4, 3], 9)?;
    let sol = solve_dp(&inst)?;
    println!("optimum {} via {}", sol.objective, sol.rc_sequence);

    for kind in [ModelKind::Basic, ModelKind::Sorted, ModelKind::Rc] {
        let doc = emit_model(kind, RcVariant::Capped, &inst);
        println!(
            "{kind}: {} variables ({} binary), {} constraints",
            doc.variable_count, doc.binary_count, doc.constraint_count
        );
        let asg = assignment_for_sequence(kind, &inst, &sol.rc_sequence)?;
        let check = check_assignment(&doc, &asg)?;
        println!("  feasible {} objective {}", check.feasible, check.objective);
    }

    let rc = emit_model(ModelKind::Rc, RcVariant::Capped, &inst);
    print!("{}", rc.text);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
