//! Mathematical programming formulations written as LP-format text.
//!
//! Three formulations are available:
//!
//! * **basic** (MILP): binaries `x_i_j_k` place square `k` in row `i`,
//!   column `j`; continuous `y_i` / `z_j` carry row heights and column
//!   widths.
//! * **sorted** (ILP): the same binaries with row and column monotonicity
//!   rows; height and width are read off the first column and first row.
//! * **rc** (IQCP): `2n` binaries `mu_i` / `nu_i` mark squares in the first
//!   column / first row; one bilinear row per square forces it to start a
//!   new row or column once the grid spanned by earlier bottlenecks is full.
//!
//! The emitted text always lists the objective, the constraints in a fixed
//! row-name order, bounds, the binary section and `End`. Every document
//! keeps its rows in memory so [`check_assignment`] can evaluate candidate
//! solutions exactly.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::sequence::RcSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum ModelKind {
    Basic,
    Sorted,
    Rc,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Basic => "basic",
            ModelKind::Sorted => "sorted",
            ModelKind::Rc => "rc",
        })
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(ModelKind::Basic),
            "sorted" => Ok(ModelKind::Sorted),
            "rc" => Ok(ModelKind::Rc),
            other => Err(Error::InvalidArgument(format!(
                "unknown model kind {other:?} (expected basic, sorted or rc)"
            ))),
        }
    }
}

/// Variant of the rc formulation. `Relaxed` drops the `mu_i + nu_i <= 1`
/// cap; the other kinds ignore this setting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum RcVariant {
    #[default]
    Capped,
    Relaxed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sense {
    Le,
    Ge,
    Eq,
}

impl Sense {
    fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        }
    }

    fn holds(self, lhs: i128, rhs: i128) -> bool {
        match self {
            Sense::Le => lhs <= rhs,
            Sense::Ge => lhs >= rhs,
            Sense::Eq => lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum VarKind {
    Binary,
    Continuous { lower: i64, upper: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Variable {
    name: String,
    kind: VarKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Row {
    name: String,
    linear: Vec<(i64, usize)>,
    // unit-coefficient products
    quadratic: Vec<(usize, usize)>,
    sense: Sense,
    rhs: i64,
}

/// An emitted formulation: the LP text plus the rows it encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelDocument {
    pub kind: ModelKind,
    pub variant: RcVariant,
    pub text: String,
    pub variable_count: usize,
    pub binary_count: usize,
    pub constraint_count: usize,
    vars: Vec<Variable>,
    objective: Vec<(i64, usize)>,
    rows: Vec<Row>,
}

impl ModelDocument {
    /// Variable names in declaration order.
    pub fn variable_names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|v| v.name.as_str())
    }

    /// Constraint row names in emission order.
    pub fn row_names(&self) -> impl Iterator<Item = &str> {
        self.rows.iter().map(|r| r.name.as_str())
    }

    pub fn write_to(&self, path: &Path) -> Result<()> {
        std::fs::write(path, &self.text)?;
        Ok(())
    }
}

struct Builder {
    vars: Vec<Variable>,
    ids: HashMap<String, usize>,
    objective: Vec<(i64, usize)>,
    rows: Vec<Row>,
}

impl Builder {
    fn new() -> Self {
        Self {
            vars: Vec::new(),
            ids: HashMap::new(),
            objective: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn var(&mut self, name: String, kind: VarKind) -> usize {
        let id = self.vars.len();
        self.ids.insert(name.clone(), id);
        self.vars.push(Variable { name, kind });
        id
    }

    fn id(&self, name: &str) -> usize {
        self.ids[name]
    }

    fn row(&mut self, name: String, linear: Vec<(i64, usize)>, sense: Sense, rhs: i64) {
        self.rows.push(Row {
            name,
            linear,
            quadratic: Vec::new(),
            sense,
            rhs,
        });
    }

    fn finish(self, kind: ModelKind, variant: RcVariant, inst: &Instance) -> ModelDocument {
        let text = render_lp(kind, variant, inst, &self.vars, &self.objective, &self.rows);
        ModelDocument {
            kind,
            variant,
            text,
            variable_count: self.vars.len(),
            binary_count: self.vars.iter().filter(|v| v.kind == VarKind::Binary).count(),
            constraint_count: self.rows.len(),
            vars: self.vars,
            objective: self.objective,
            rows: self.rows,
        }
    }
}

fn x_name(i: usize, j: usize, k: usize) -> String {
    format!("x_{i}_{j}_{k}")
}

fn length(inst: &Instance, k: usize) -> i64 {
    inst.length(k) as i64
}

/// Declares `x_i_j_k` and adds the assignment and cell rows shared by the
/// basic and sorted formulations.
fn placement_rows(b: &mut Builder, n: usize) {
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                b.var(x_name(i, j, k), VarKind::Binary);
            }
        }
    }
    for k in 1..=n {
        let terms = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| (1, (i - 1) * n * n + (j - 1) * n + (k - 1)))
            .collect();
        b.row(format!("assign_{k}"), terms, Sense::Eq, 1);
    }
    for i in 1..=n {
        for j in 1..=n {
            let terms = (1..=n).map(|k| (1, b.id(&x_name(i, j, k)))).collect();
            b.row(format!("cell_{i}_{j}"), terms, Sense::Le, 1);
        }
    }
}

/// `sum_k l_k x_i_j_k` with the given sign.
fn cell_size(b: &Builder, inst: &Instance, i: usize, j: usize, sign: i64) -> Vec<(i64, usize)> {
    let n = inst.n();
    (1..=n)
        .map(|k| (sign * length(inst, k), b.id(&x_name(i, j, k))))
        .collect()
}

/// Basic MILP: minimize the sum of row heights.
pub fn emit_basic_model(inst: &Instance) -> ModelDocument {
    let n = inst.n();
    let upper = inst.total_length() as i64;
    let mut b = Builder::new();
    placement_rows(&mut b, n);
    let ys: Vec<usize> = (1..=n)
        .map(|i| b.var(format!("y_{i}"), VarKind::Continuous { lower: 0, upper }))
        .collect();
    let zs: Vec<usize> = (1..=n)
        .map(|j| b.var(format!("z_{j}"), VarKind::Continuous { lower: 0, upper }))
        .collect();
    b.objective = ys.iter().map(|&y| (1, y)).collect();

    for i in 1..=n {
        for j in 1..=n {
            let mut terms = vec![(1, ys[i - 1])];
            terms.extend(cell_size(&b, inst, i, j, -1));
            b.row(format!("rowh_{i}_{j}"), terms, Sense::Ge, 0);
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let mut terms = vec![(1, zs[j - 1])];
            terms.extend(cell_size(&b, inst, i, j, -1));
            b.row(format!("colw_{i}_{j}"), terms, Sense::Ge, 0);
        }
    }
    let width = zs.iter().map(|&z| (1, z)).collect();
    b.row("width".into(), width, Sense::Le, inst.strip_width() as i64);
    b.finish(ModelKind::Basic, RcVariant::Capped, inst)
}

/// Sorted ILP: placements only, with rows and columns kept non-increasing.
pub fn emit_sorted_model(inst: &Instance) -> ModelDocument {
    let n = inst.n();
    let mut b = Builder::new();
    placement_rows(&mut b, n);
    b.objective = (1..=n).flat_map(|i| cell_size(&b, inst, i, 1, 1)).collect();

    let width = (1..=n).flat_map(|j| cell_size(&b, inst, 1, j, 1)).collect();
    b.row("width".into(), width, Sense::Le, inst.strip_width() as i64);
    for i in 1..=n {
        for j in 2..=n {
            let mut terms = cell_size(&b, inst, i, j - 1, 1);
            terms.extend(cell_size(&b, inst, i, j, -1));
            b.row(format!("rsort_{i}_{j}"), terms, Sense::Ge, 0);
        }
    }
    for j in 1..=n {
        for i in 2..=n {
            let mut terms = cell_size(&b, inst, i - 1, j, 1);
            terms.extend(cell_size(&b, inst, i, j, -1));
            b.row(format!("csort_{i}_{j}"), terms, Sense::Ge, 0);
        }
    }
    b.finish(ModelKind::Sorted, RcVariant::Capped, inst)
}

/// RC IQCP over first-column (`mu_i`) and first-row (`nu_i`) indicators.
///
/// For each `i >= 2` the row `rc_lo_i` reads
/// `mu_i + nu_i + (sum_{j<i} mu_j)(sum_{j<i} nu_j) >= i`, with the product
/// expanded into unit bilinear terms ordered by `(j, j')`, and `rc_hi_i`
/// caps `mu_i + nu_i <= 1` unless the relaxed variant is requested.
pub fn emit_rc_model(inst: &Instance, variant: RcVariant) -> ModelDocument {
    let n = inst.n();
    let mut b = Builder::new();
    let mu: Vec<usize> = (1..=n)
        .map(|i| b.var(format!("mu_{i}"), VarKind::Binary))
        .collect();
    let nu: Vec<usize> = (1..=n)
        .map(|i| b.var(format!("nu_{i}"), VarKind::Binary))
        .collect();
    b.objective = (1..=n).map(|i| (length(inst, i), mu[i - 1])).collect();

    let width = (1..=n).map(|i| (length(inst, i), nu[i - 1])).collect();
    b.row("width".into(), width, Sense::Le, inst.strip_width() as i64);
    b.row("base_mu".into(), vec![(1, mu[0])], Sense::Eq, 1);
    b.row("base_nu".into(), vec![(1, nu[0])], Sense::Eq, 1);
    for i in 2..=n {
        let pair = vec![(1, mu[i - 1]), (1, nu[i - 1])];
        let quadratic = (0..i - 1)
            .flat_map(|a| (0..i - 1).map(move |c| (a, c)))
            .map(|(a, c)| (mu[a], nu[c]))
            .collect();
        b.rows.push(Row {
            name: format!("rc_lo_{i}"),
            linear: pair.clone(),
            quadratic,
            sense: Sense::Ge,
            rhs: i as i64,
        });
        if variant == RcVariant::Capped {
            b.row(format!("rc_hi_{i}"), pair, Sense::Le, 1);
        }
    }
    b.finish(ModelKind::Rc, variant, inst)
}

pub fn emit_model(kind: ModelKind, variant: RcVariant, inst: &Instance) -> ModelDocument {
    match kind {
        ModelKind::Basic => emit_basic_model(inst),
        ModelKind::Sorted => emit_sorted_model(inst),
        ModelKind::Rc => emit_rc_model(inst, variant),
    }
}

const LINE_WIDTH: usize = 78;

/// Accumulates tokens into lines no wider than [`LINE_WIDTH`].
struct LineWrap<'a> {
    out: &'a mut String,
    line: String,
}

impl<'a> LineWrap<'a> {
    fn new(out: &'a mut String, head: &str) -> Self {
        Self {
            out,
            line: format!(" {head}"),
        }
    }

    fn push(&mut self, token: &str) {
        if self.line.len() + 1 + token.len() > LINE_WIDTH && !self.line.trim().is_empty() {
            self.out.push_str(&self.line);
            self.out.push('\n');
            self.line = String::from("  ");
        }
        if !self.line.ends_with(' ') {
            self.line.push(' ');
        }
        self.line.push_str(token);
    }

    fn finish(self) {
        self.out.push_str(&self.line);
        self.out.push('\n');
    }
}

fn linear_tokens(terms: &[(i64, usize)], vars: &[Variable]) -> Vec<String> {
    terms
        .iter()
        .enumerate()
        .map(|(pos, &(coef, id))| {
            let name = &vars[id].name;
            let sign = if coef < 0 { "-" } else { "+" };
            let mag = coef.unsigned_abs();
            let body = if mag == 1 {
                name.clone()
            } else {
                format!("{mag} {name}")
            };
            match (pos, coef < 0) {
                (0, false) => body,
                _ => format!("{sign} {body}"),
            }
        })
        .collect()
}

fn render_lp(
    kind: ModelKind,
    variant: RcVariant,
    inst: &Instance,
    vars: &[Variable],
    objective: &[(i64, usize)],
    rows: &[Row],
) -> String {
    let mut out = String::new();
    let title = match (kind, variant) {
        (ModelKind::Basic, _) => "basic formulation (MILP)",
        (ModelKind::Sorted, _) => "sorted formulation (ILP)",
        (ModelKind::Rc, RcVariant::Capped) => "rc formulation (IQCP)",
        (ModelKind::Rc, RcVariant::Relaxed) => "rc formulation, relaxed cap (IQCP)",
    };
    let lengths: Vec<String> = inst.lengths().iter().map(u64::to_string).collect();
    let _ = writeln!(out, "\\ Square independent packing: {title}");
    let _ = writeln!(out, "\\ n = {}, b = {}", inst.n(), inst.strip_width());
    let _ = writeln!(out, "\\ lengths = {}", lengths.join(" "));

    out.push_str("Minimize\n");
    let mut wrap = LineWrap::new(&mut out, "obj:");
    for tok in linear_tokens(objective, vars) {
        wrap.push(&tok);
    }
    wrap.finish();

    out.push_str("Subject To\n");
    for row in rows {
        let mut wrap = LineWrap::new(&mut out, &format!("{}:", row.name));
        for tok in linear_tokens(&row.linear, vars) {
            wrap.push(&tok);
        }
        if !row.quadratic.is_empty() {
            wrap.push("+ [");
            for (pos, &(a, c)) in row.quadratic.iter().enumerate() {
                let term = format!("{} * {}", vars[a].name, vars[c].name);
                if pos == 0 {
                    wrap.push(&term);
                } else {
                    wrap.push(&format!("+ {term}"));
                }
            }
            wrap.push("]");
        }
        wrap.push(&format!("{} {}", row.sense.symbol(), row.rhs));
        wrap.finish();
    }

    let bounded: Vec<_> = vars
        .iter()
        .filter_map(|v| match v.kind {
            VarKind::Continuous { lower, upper } => Some((v, lower, upper)),
            VarKind::Binary => None,
        })
        .collect();
    if !bounded.is_empty() {
        out.push_str("Bounds\n");
        for (v, lower, upper) in bounded {
            let _ = writeln!(out, " {lower} <= {} <= {upper}", v.name);
        }
    }

    out.push_str("Binaries\n");
    let mut wrap = LineWrap::new(&mut out, "");
    for v in vars.iter().filter(|v| v.kind == VarKind::Binary) {
        wrap.push(&v.name);
    }
    wrap.finish();
    out.push_str("End\n");
    out
}

/// Integer values for model variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<String, i64>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, name: impl Into<String>, value: i64) {
        self.values.insert(name.into(), value);
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.values.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.values.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// Parses `name value` lines; blank lines and `#` comments are skipped.
    /// Values must be integral (`3` or `3.0`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut asg = Assignment::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(name), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::parse(
                    idx + 1,
                    format!("expected `name value`, got {line:?}"),
                ));
            };
            asg.set(
                name,
                parse_integral(value).ok_or_else(|| {
                    Error::parse(idx + 1, format!("value {value:?} for {name} is not an integer"))
                })?,
            );
        }
        Ok(asg)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| e.with_path(path))
    }

    pub fn to_text(&self) -> String {
        self.values.iter().map(|(k, v)| format!("{k} {v}\n")).collect()
    }
}

fn parse_integral(s: &str) -> Option<i64> {
    if let Ok(v) = s.parse::<i64>() {
        return Some(v);
    }
    let (int, frac) = s.split_once('.')?;
    if !frac.chars().all(|c| c == '0') {
        return None;
    }
    if int.is_empty() || int == "-" {
        return Some(0);
    }
    int.parse().ok()
}

/// Outcome of evaluating an assignment against a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub feasible: bool,
    pub objective: i64,
    /// Names of violated rows; bound violations appear as `bound_<var>`.
    pub violated: Vec<String>,
}

/// Evaluates every row, including the bilinear rc rows, in exact integer
/// arithmetic.
pub fn check_assignment(doc: &ModelDocument, asg: &Assignment) -> Result<CheckReport> {
    let index: HashMap<&str, usize> = doc
        .vars
        .iter()
        .enumerate()
        .map(|(i, v)| (v.name.as_str(), i))
        .collect();
    for (name, _) in asg.iter() {
        if !index.contains_key(name) {
            return Err(Error::UnknownVariable(name.to_string()));
        }
    }
    let mut values = Vec::with_capacity(doc.vars.len());
    for v in &doc.vars {
        let value = asg
            .get(&v.name)
            .ok_or_else(|| Error::MissingVariable(v.name.clone()))?;
        if v.kind == VarKind::Binary && !(value == 0 || value == 1) {
            return Err(Error::NonBinary {
                name: v.name.clone(),
                value,
            });
        }
        values.push(value as i128);
    }

    let linear =
        |terms: &[(i64, usize)]| -> i128 { terms.iter().map(|&(c, id)| c as i128 * values[id]).sum() };

    let mut violated = Vec::new();
    for row in &doc.rows {
        let quad: i128 = row.quadratic.iter().map(|&(a, c)| values[a] * values[c]).sum();
        let lhs = linear(&row.linear) + quad;
        if !row.sense.holds(lhs, row.rhs as i128) {
            violated.push(row.name.clone());
        }
    }
    for (v, &value) in doc.vars.iter().zip(&values) {
        if let VarKind::Continuous { lower, upper } = v.kind {
            if value < lower as i128 || value > upper as i128 {
                violated.push(format!("bound_{}", v.name));
            }
        }
    }

    Ok(CheckReport {
        feasible: violated.is_empty(),
        objective: linear(&doc.objective) as i64,
        violated,
    })
}

/// Translates an RC sequence into an assignment for the given formulation.
///
/// Placements follow the sequence's layout (row 1 = bottom row); `y_i` and
/// `z_j` take the row heights and column widths; `mu` / `nu` mark the first
/// column and first row.
pub fn assignment_for_sequence(kind: ModelKind, inst: &Instance, seq: &RcSequence) -> Result<Assignment> {
    let n = inst.n();
    let layout = seq.to_layout();
    let (rows, cols) = layout.shape();
    let mut asg = Assignment::new();
    match kind {
        ModelKind::Basic | ModelKind::Sorted => {
            let used_rows = (0..rows)
                .filter(|&r| layout.row(r).iter().any(|&l| l <= n))
                .count();
            let used_cols = (0..cols).filter(|&c| layout.column(c).any(|l| l <= n)).count();
            if used_rows > n || used_cols > n {
                return Err(Error::InvalidArgument(format!(
                    "{rows}x{cols} layout does not fit the {n}x{n} placement grid"
                )));
            }
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        asg.set(x_name(i, j, k), 0);
                    }
                }
            }
            for r in 0..rows {
                for c in 0..cols {
                    let label = layout.get(r, c);
                    if label <= n {
                        asg.set(x_name(r + 1, c + 1, label), 1);
                    }
                }
            }
            if kind == ModelKind::Basic {
                for i in 1..=n {
                    let h = if i <= rows {
                        layout
                            .row(i - 1)
                            .iter()
                            .map(|&l| inst.length(l))
                            .max()
                            .unwrap_or(0)
                    } else {
                        0
                    };
                    asg.set(format!("y_{i}"), h as i64);
                }
                for j in 1..=n {
                    let w = if j <= cols {
                        layout.column(j - 1).map(|l| inst.length(l)).max().unwrap_or(0)
                    } else {
                        0
                    };
                    asg.set(format!("z_{j}"), w as i64);
                }
            }
        }
        ModelKind::Rc => {
            for i in 1..=n {
                asg.set(format!("mu_{i}"), 0);
                asg.set(format!("nu_{i}"), 0);
            }
            for label in layout.column(0).filter(|&l| l <= n) {
                asg.set(format!("mu_{label}"), 1);
            }
            for &label in layout.row(0).iter().filter(|&&l| l <= n) {
                asg.set(format!("nu_{label}"), 1);
            }
        }
    }
    Ok(asg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::Layout;

    fn example1() -> Instance {
        Instance::new(vec![20, 15, 13, 13, 11, 8, 5, 3], 60).unwrap()
    }

    #[test]
    fn basic_single_square() {
        let inst = Instance::new(vec![5], 5).unwrap();
        let doc = emit_basic_model(&inst);
        assert_eq!(doc.binary_count, 1);
        assert_eq!(
            doc.row_names().collect::<Vec<_>>(),
            ["assign_1", "cell_1_1", "rowh_1_1", "colw_1_1", "width"]
        );
    }

    #[test]
    fn basic_counts() {
        let two = emit_basic_model(&Instance::new(vec![5, 4], 9).unwrap());
        assert_eq!(two.binary_count, 8);
        let names: Vec<_> = two.row_names().collect();
        assert_eq!(names.iter().filter(|r| r.starts_with("assign_")).count(), 2);
        assert_eq!(names.iter().filter(|r| r.starts_with("cell_")).count(), 4);

        let ex = emit_basic_model(&example1());
        assert_eq!(ex.binary_count, 512);
        assert_eq!(ex.variable_count, 528);
    }

    #[test]
    fn sorted_counts_and_objective() {
        let one = emit_sorted_model(&Instance::new(vec![5], 5).unwrap());
        assert!(one.text.contains(" obj: 5 x_1_1_1\n"), "{}", one.text);
        let two = emit_sorted_model(&Instance::new(vec![5, 4], 9).unwrap());
        assert_eq!(two.constraint_count, 2 + 4 + 1 + 2 + 2);
        let ex = emit_sorted_model(&example1());
        assert!(ex.variable_names().all(|v| v.starts_with("x_")));
        assert_eq!(ex.binary_count, 512);
    }

    #[test]
    fn rc_model_shape() {
        let one = emit_rc_model(&Instance::new(vec![5], 5).unwrap(), RcVariant::Capped);
        assert_eq!(
            one.row_names().collect::<Vec<_>>(),
            ["width", "base_mu", "base_nu"]
        );
        assert!(one.text.contains(" obj: 5 mu_1\n"));

        let two = emit_rc_model(&Instance::new(vec![5, 4], 9).unwrap(), RcVariant::Capped);
        assert!(
            two.text
                .contains(" rc_lo_2: mu_2 + nu_2 + [ mu_1 * nu_1 ] >= 2\n"),
            "{}",
            two.text
        );
        assert!(two.text.contains(" rc_hi_2: mu_2 + nu_2 <= 1\n"));

        let relaxed = emit_rc_model(&Instance::new(vec![5, 4], 9).unwrap(), RcVariant::Relaxed);
        assert!(!relaxed.text.contains("rc_hi_"));

        let ex = emit_rc_model(&example1(), RcVariant::Capped);
        assert_eq!(ex.binary_count, 16);
        assert_eq!(ex.variable_count, 16);
    }

    #[test]
    fn text_is_printable_ascii_with_fixed_sections() {
        for doc in [
            emit_basic_model(&example1()),
            emit_sorted_model(&example1()),
            emit_rc_model(&example1(), RcVariant::Capped),
        ] {
            assert!(doc.text.bytes().all(|b| b == b'\n' || (0x20..0x7f).contains(&b)));
            assert!(doc.text.lines().all(|l| l.len() <= LINE_WIDTH));
            let pos = |s: &str| doc.text.find(s).unwrap();
            assert!(pos("Minimize") < pos("Subject To"));
            assert!(pos("Subject To") < pos("Binaries"));
            assert!(doc.text.ends_with("End\n"));
        }
    }

    #[test]
    fn two_row_sequence_satisfies_rc_model() {
        let inst = example1();
        let seq: RcSequence = "CCRC".parse().unwrap();
        let doc = emit_rc_model(&inst, RcVariant::Capped);
        let asg = assignment_for_sequence(ModelKind::Rc, &inst, &seq).unwrap();
        let ones: Vec<_> = asg.iter().filter(|&(_, v)| v == 1).map(|(k, _)| k).collect();
        assert_eq!(ones, ["mu_1", "mu_4", "nu_1", "nu_2", "nu_3", "nu_7"]);
        let report = check_assignment(&doc, &asg).unwrap();
        assert!(report.feasible, "{:?}", report.violated);
        assert_eq!(report.objective, 33);
    }

    #[test]
    fn all_zero_rc_assignment_violates_base() {
        let inst = example1();
        let doc = emit_rc_model(&inst, RcVariant::Capped);
        let mut asg = Assignment::new();
        for name in doc.variable_names() {
            asg.set(name, 0);
        }
        let report = check_assignment(&doc, &asg).unwrap();
        assert!(!report.feasible);
        assert!(report.violated.iter().any(|r| r == "base_mu"));
    }

    #[test]
    fn unsorted_placement_violates_monotonicity() {
        let inst = example1();
        let doc = emit_sorted_model(&inst);
        let a = Layout::from_rows(&[vec![3, 7, 2], vec![5, 6, 9], vec![4, 1, 8]]).unwrap();
        let mut asg = Assignment::new();
        for name in doc.variable_names() {
            asg.set(name, 0);
        }
        for r in 0..3 {
            for c in 0..3 {
                let label = a.get(r, c);
                if label <= inst.n() {
                    asg.set(x_name(r + 1, c + 1, label), 1);
                }
            }
        }
        let report = check_assignment(&doc, &asg).unwrap();
        assert!(!report.feasible);
        assert!(report
            .violated
            .iter()
            .any(|r| r.starts_with("rsort_") || r.starts_with("csort_")));
    }

    #[test]
    fn basic_width_violation_is_named() {
        let inst = Instance::new(vec![5, 5], 9).unwrap();
        let doc = emit_basic_model(&inst);
        let asg = assignment_for_sequence(ModelKind::Basic, &inst, &"C".parse().unwrap()).unwrap();
        let report = check_assignment(&doc, &asg).unwrap();
        assert_eq!(report.violated, ["width"]);
    }

    #[test]
    fn checker_errors() {
        let inst = Instance::new(vec![5], 5).unwrap();
        let doc = emit_rc_model(&inst, RcVariant::Capped);
        let mut asg = Assignment::new();
        asg.set("mu_1", 1);
        asg.set("nu_1", 1);
        asg.set("zz", 1);
        assert!(matches!(
            check_assignment(&doc, &asg),
            Err(Error::UnknownVariable(_))
        ));
        let mut asg = Assignment::new();
        asg.set("mu_1", 2);
        asg.set("nu_1", 1);
        assert!(matches!(
            check_assignment(&doc, &asg),
            Err(Error::NonBinary { .. })
        ));
        let mut asg = Assignment::new();
        asg.set("mu_1", 1);
        assert!(matches!(
            check_assignment(&doc, &asg),
            Err(Error::MissingVariable(_))
        ));
    }

    #[test]
    fn assignment_file_format() {
        let asg = Assignment::parse("# solver output\nmu_1 1\n\nnu_1 1.0  # trailing\ny_2 -0\n").unwrap();
        assert_eq!(asg.get("mu_1"), Some(1));
        assert_eq!(asg.get("nu_1"), Some(1));
        assert_eq!(asg.get("y_2"), Some(0));
        let err = Assignment::parse("mu_1 1\nnu_1 0.5\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        assert!(Assignment::parse("mu_1\n").is_err());
        assert_eq!(Assignment::parse(&asg.to_text()).unwrap(), asg);
    }

    #[test]
    fn emission_is_deterministic() {
        let a = emit_sorted_model(&example1());
        let b = emit_sorted_model(&example1());
        assert_eq!(a.text, b.text);
    }
}
