//! The `sipp` command line.
//!
//! Exit codes: 0 on success, 1 when a layout is infeasible, a check fails or
//! a file cannot be used, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::approx::{fptas, Epsilon};
use crate::bench::{run_bench, BenchOptions, LpRoundtrip, DEFAULT_EPS};
use crate::error::{Error, Result};
use crate::exact::{brute_force_oracle_with, solve_dp_low_memory_with, solve_dp_with, DpSolution, ShapeSet};
use crate::instance::Instance;
use crate::instgen::{
    format_instance, gen_uniform, read_instance, reduce_partition, suite_file_name, PartitionInput,
};
use crate::models::{check_assignment, emit_model, Assignment, ModelKind, RcVariant};
use crate::multidim::{solve_kdim_dp, KInstance};
use crate::render::{render_svg, SvgStyle};
use crate::report::SolutionReport;
use crate::sequence::RcSequence;

#[derive(Debug, Parser)]
#[command(
    name = "sipp",
    version,
    about = "Pack squares into independent cells of a strip"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate random or Partition-derived instance files
    Gen(GenArgs),
    /// Solve an instance
    Solve(SolveArgs),
    /// Write a mathematical programming model in LP format
    Emit(EmitArgs),
    /// Check an RC sequence or a model assignment
    Verify(VerifyArgs),
    /// Draw an RC sequence as SVG
    Render(RenderArgs),
    /// Run the 60-instance benchmark and print CSV
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Number of squares
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1_000_000), required_unless_present = "partition")]
    n: Option<u64>,
    /// First seed; instance i uses seed + i
    #[arg(long, required_unless_present = "partition")]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    /// Comma-separated Partition values, e.g. 4,8,12
    #[arg(long, conflicts_with_all = ["n", "seed", "count"])]
    partition: Option<PartitionInput>,
    /// Output directory; instances go to stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Dp,
    DpLowmem,
    Fptas,
    Oracle,
    Kdim,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum, default_value_t = Algo::Dp)]
    algo: Algo,
    /// Accuracy for fptas, e.g. 0.1 or 1/2
    #[arg(long)]
    eps: Option<Epsilon>,
    /// Budgets of the first k-1 dimensions for kdim (default: b)
    #[arg(long, value_delimiter = ',')]
    budgets: Option<Vec<u64>>,
    /// Final shapes considered by dp, dp-lowmem, oracle and kdim
    #[arg(long, value_enum, default_value_t = ShapeSet::Reachable)]
    shapes: ShapeSet,
    instance: PathBuf,
}

#[derive(Debug, Args)]
struct EmitArgs {
    #[arg(long, value_enum)]
    model: ModelKind,
    #[arg(long, value_enum, default_value_t = RcVariant::Capped)]
    variant: RcVariant,
    instance: PathBuf,
    /// Output file; the model goes to stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// RC sequence over R (add row) and C (add column)
    #[arg(long, conflicts_with_all = ["model", "assignment"], required_unless_present = "model")]
    sequence: Option<RcSequence>,
    #[arg(long, value_enum, requires = "assignment")]
    model: Option<ModelKind>,
    #[arg(long, value_enum, default_value_t = RcVariant::Capped)]
    variant: RcVariant,
    /// File of `name value` lines
    #[arg(long, requires = "model")]
    assignment: Option<PathBuf>,
    instance: PathBuf,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long)]
    sequence: RcSequence,
    instance: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Pixels per unit length
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    scale: u32,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated accuracies for the fptas columns
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_EPS.map(String::from))]
    eps: Vec<String>,
    /// Only these sizes
    #[arg(long = "n", value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Only these seeds
    #[arg(long, value_delimiter = ',')]
    seeds: Option<Vec<u64>>,
    /// Solver command run on each emitted model with n <= 15
    #[arg(long)]
    lp_roundtrip: Option<String>,
    #[arg(long, value_enum, default_value_t = ModelKind::Sorted)]
    lp_model: ModelKind,
    /// CSV file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Emit(a) => cmd_emit(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Render(a) => cmd_render(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Error::InvalidArgument(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(path, contents)?;
    Ok(())
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Result<i32> {
    if let Some(pp) = a.partition {
        let red = reduce_partition(&pp)?;
        let text = format_instance(&red.instance);
        let joined: Vec<String> = pp.values().iter().map(u64::to_string).collect();
        match &a.out {
            Some(dir) => {
                let path = dir.join(format!("partition_{}.txt", joined.join("-")));
                write_file(&path, &text)?;
                writeln!(out, "wrote {}", path.display())?;
            }
            None => write!(out, "{text}")?,
        }
        writeln!(out, "# lambda = {}", red.lambda)?;
        if red.doubled {
            writeln!(out, "# values doubled to keep b integral")?;
        }
        return Ok(0);
    }

    let n = a.n.expect("clap enforces --n") as usize;
    let first = a.seed.expect("clap enforces --seed");
    for i in 0..a.count {
        let seed = first
            .checked_add(i)
            .ok_or_else(|| Error::InvalidArgument("seed range overflows u64".into()))?;
        let inst = gen_uniform(n, seed)?;
        let text = format_instance(&inst);
        match &a.out {
            Some(dir) => {
                let path = dir.join(suite_file_name(n, seed));
                write_file(&path, &text)?;
                writeln!(out, "wrote {}", path.display())?;
            }
            None => {
                writeln!(out, "# {}", suite_file_name(n, seed))?;
                write!(out, "{text}")?;
            }
        }
    }
    Ok(0)
}

fn print_solution(out: &mut dyn Write, inst: &Instance, sol: &DpSolution) -> Result<()> {
    let report = SolutionReport::from_sequence(inst, &sol.rc_sequence);
    writeln!(out, "height: {}", report.height())?;
    writeln!(out, "width: {}", report.width())?;
    writeln!(out, "shape: {}x{}", sol.shape.0, sol.shape.1)?;
    writeln!(out, "sequence: {}", sol.rc_sequence)?;
    Ok(())
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = read_instance(&a.instance)?;
    if a.algo == Algo::Fptas && a.eps.is_none() {
        return Err(Error::InvalidArgument("--algo fptas requires --eps".into()));
    }
    if a.algo != Algo::Kdim && a.budgets.is_some() {
        return Err(Error::InvalidArgument(
            "--budgets only applies to --algo kdim".into(),
        ));
    }
    if a.algo == Algo::Fptas && a.shapes != ShapeSet::Reachable {
        return Err(Error::InvalidArgument(
            "--shapes does not apply to --algo fptas".into(),
        ));
    }
    let start = Instant::now();
    match a.algo {
        Algo::Dp => print_solution(out, &inst, &solve_dp_with(&inst, a.shapes)?)?,
        Algo::Oracle => print_solution(out, &inst, &brute_force_oracle_with(&inst, a.shapes)?)?,
        Algo::Fptas => {
            let eps = a.eps.expect("checked above");
            let sol = fptas(&inst, eps)?;
            print_solution(out, &inst, &sol)?;
            writeln!(out, "eps: {eps}")?;
        }
        Algo::DpLowmem => {
            let height = solve_dp_low_memory_with(&inst, a.shapes)?;
            writeln!(out, "height: {height}")?;
            writeln!(out, "width: -")?;
            writeln!(out, "shape: -")?;
            writeln!(out, "sequence: - (not reconstructed in low-memory mode)")?;
        }
        Algo::Kdim => {
            let budgets = a.budgets.unwrap_or_else(|| vec![inst.strip_width()]);
            let kinst = KInstance::new(inst.lengths().to_vec(), budgets)?.with_shape_set(a.shapes);
            let sol = solve_kdim_dp(&kinst)?;
            let k = kinst.k();
            writeln!(out, "height: {}", sol.objective)?;
            if k == 2 {
                writeln!(out, "width: {}", sol.extents[0])?;
                writeln!(out, "shape: {}x{}", sol.shape[1], sol.shape[0])?;
                let seq: String = sol
                    .extensions
                    .iter()
                    .map(|&t| if t == 0 { 'C' } else { 'R' })
                    .collect();
                writeln!(out, "sequence: {seq}")?;
            } else {
                let extents: Vec<String> = sol.extents.iter().map(u64::to_string).collect();
                let shape: Vec<String> = sol.shape.iter().map(usize::to_string).collect();
                let ext: Vec<String> = sol.extensions.iter().map(|t| (t + 1).to_string()).collect();
                writeln!(out, "extents: {}", extents.join(" "))?;
                writeln!(out, "shape: {}", shape.join("x"))?;
                writeln!(out, "extensions: {}", ext.join(" "))?;
            }
        }
    }
    writeln!(out, "time_ms: {:.3}", start.elapsed().as_secs_f64() * 1e3)?;
    Ok(0)
}

fn cmd_emit(a: EmitArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = read_instance(&a.instance)?;
    let doc = emit_model(a.model, a.variant, &inst);
    match &a.out {
        Some(path) => {
            write_file(path, &doc.text)?;
            writeln!(
                out,
                "wrote {} ({} variables, {} binaries, {} constraints)",
                path.display(),
                doc.variable_count,
                doc.binary_count,
                doc.constraint_count
            )?;
        }
        None => write!(out, "{}", doc.text)?,
    }
    Ok(0)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = read_instance(&a.instance)?;
    if let Some(seq) = a.sequence {
        let report = SolutionReport::from_sequence(&inst, &seq);
        let (rows, cols) = report.layout().shape();
        writeln!(out, "width: {}", report.width())?;
        writeln!(out, "height: {}", report.height())?;
        writeln!(out, "shape: {rows}x{cols}")?;
        if !report.places_all() {
            writeln!(out, "note: {} cells for {} squares", rows * cols, inst.n())?;
        }
        writeln!(out, "feasible: {}", yes_no(report.feasible()))?;
        return Ok(if report.feasible() { 0 } else { 1 });
    }

    let kind = a.model.expect("clap requires --model without --sequence");
    let path = a.assignment.expect("clap requires --assignment with --model");
    let doc = emit_model(kind, a.variant, &inst);
    let asg = Assignment::read(&path)?;
    let report = check_assignment(&doc, &asg)?;
    writeln!(out, "feasible: {}", yes_no(report.feasible))?;
    writeln!(out, "objective: {}", report.objective)?;
    if !report.violated.is_empty() {
        writeln!(out, "violated: {}", report.violated.join(" "))?;
    }
    Ok(if report.feasible { 0 } else { 1 })
}

fn cmd_render(a: RenderArgs, out: &mut dyn Write) -> Result<i32> {
    let inst = read_instance(&a.instance)?;
    let report = SolutionReport::from_sequence(&inst, &a.sequence);
    let style = SvgStyle {
        scale: a.scale,
        ..SvgStyle::default()
    };
    write_file(&a.out, &render_svg(&inst, &report, &style))?;
    writeln!(out, "wrote {}", a.out.display())?;
    writeln!(out, "width: {}", report.width())?;
    writeln!(out, "height: {}", report.height())?;
    writeln!(out, "feasible: {}", yes_no(report.feasible()))?;
    Ok(if report.feasible() { 0 } else { 1 })
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let eps = a
        .eps
        .iter()
        .map(|s| {
            s.parse::<Epsilon>()
                .map(|e| (s.trim().to_string(), e))
                .map_err(|e| Error::InvalidArgument(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let opts = BenchOptions {
        eps,
        sizes: a.sizes,
        seeds: a.seeds,
        lp_roundtrip: a.lp_roundtrip.map(|command| LpRoundtrip {
            command,
            model: a.lp_model,
        }),
    };
    let csv = run_bench(&opts)?.to_csv();
    match &a.out {
        Some(path) => {
            write_file(path, &csv)?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => write!(out, "{csv}")?,
    }
    Ok(0)
}
