//! Higher-dimensional packing and partitions of positive thickness.
//!
//! # k-dimensional grids
//!
//! Cubes go into a `d_1 x ... x d_k` grid of independent cells. The first
//! `k - 1` extents are bounded by budgets and the last one is minimized.
//! As in the plane, an optimal grid can be grown from a single cell by
//! appending slabs: extending dimension `t` of a shape `d` appends a slab of
//! `prod_{s != t} d_s` cells whose labels continue the numbering, so the slab
//! is as thick as its first cube, label `(d_t - 1) * prod_{s != t} d_s + 1`.
//!
//! The DP keeps, for every shape reachable by extensions whose slabs start
//! with a real cube, the minimum last extent for every vector of consumed
//! budgets. Shapes with at least `n` cells are the candidates.
//!
//! Requiring `(d_t - 1) * prod_{s != t} d_s < n` for *every* `t`
//! ([`ShapeSet::Restricted`]) loses optima here as in the plane: cubes
//! `11, 10, 9, 5` under budgets `15, 18` need a `1 x 2 x 3` grid with two
//! empty cells to reach extent 30.
//!
//! [`brute_force_kdim`] searches all placements without using any of this
//! structure and serves as a reference for small instances.
//!
//! # Thickness
//!
//! Partitions of thickness `eta` add `eta` per internal boundary. Adding
//! `eta` to every length and to the strip width turns this into the plain
//! problem with an optimum exactly `eta` larger.

use std::collections::HashMap;

use crate::error::{Error, Result};
pub use crate::exact::ShapeSet;
use crate::exact::{solve_ripp_width_dp, DpSolution, RippInstance, MAX_TABLE_CELLS};
use crate::instance::Instance;

const INF: u64 = u64::MAX;

/// Cubes with `k - 1` budgets; dimension `k` is minimized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KInstance {
    lengths: Vec<u64>,
    budgets: Vec<u64>,
    state_cap: u128,
    shapes: ShapeSet,
}

impl KInstance {
    /// Lengths are sorted into non-increasing order.
    pub fn new(mut lengths: Vec<u64>, budgets: Vec<u64>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if budgets.is_empty() {
            return Err(Error::InvalidArgument("need at least one budget (k >= 2)".into()));
        }
        if let Some(index) = lengths.iter().position(|&l| l == 0) {
            return Err(Error::ZeroLength { index: index + 1 });
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let largest = lengths[0];
        let tightest = *budgets.iter().min().expect("non-empty");
        if largest > tightest {
            return Err(Error::Infeasible {
                largest,
                strip_width: tightest,
            });
        }
        let total = lengths.iter().try_fold(0u64, |acc, &l| acc.checked_add(l));
        if total.is_none() {
            return Err(Error::Overflow("sum of lengths exceeds u64".into()));
        }
        Ok(Self {
            lengths,
            budgets,
            state_cap: MAX_TABLE_CELLS,
            shapes: ShapeSet::default(),
        })
    }

    /// Plane instance with `b` as the only budget.
    pub fn from_instance(inst: &Instance) -> Self {
        Self {
            lengths: inst.lengths().to_vec(),
            budgets: vec![inst.strip_width()],
            state_cap: MAX_TABLE_CELLS,
            shapes: ShapeSet::default(),
        }
    }

    /// Overrides the cap on `candidate shapes x budget states`.
    pub fn with_state_cap(mut self, cap: u128) -> Self {
        self.state_cap = cap;
        self
    }

    pub fn with_shape_set(mut self, shapes: ShapeSet) -> Self {
        self.shapes = shapes;
        self
    }

    pub fn k(&self) -> usize {
        self.budgets.len() + 1
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn budgets(&self) -> &[u64] {
        &self.budgets
    }

    /// Length of a 1-based label; labels past `n` are empty cells.
    pub fn length(&self, label: usize) -> u64 {
        self.lengths.get(label - 1).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSolution {
    /// Minimal extent of the last dimension.
    pub objective: u64,
    pub shape: Vec<usize>,
    /// Dimensions (0-based) extended, in order, starting from one cell.
    pub extensions: Vec<usize>,
    /// Extents of all `k` dimensions for the returned grid.
    pub extents: Vec<u64>,
}

/// Number of cells in the slab preceding dimension `t`'s latest slab, i.e.
/// the governing label minus one.
fn slab_start(shape: &[usize], t: usize) -> usize {
    shape
        .iter()
        .enumerate()
        .map(|(s, &d)| if s == t { d - 1 } else { d })
        .product()
}

fn in_shape_set(shape: &[usize], n: usize, set: ShapeSet) -> bool {
    let useful = |t: usize| shape[t] > 1 && slab_start(shape, t) < n;
    match set {
        ShapeSet::Reachable => shape.iter().all(|&d| d == 1) || (0..shape.len()).any(useful),
        ShapeSet::Restricted => (0..shape.len()).all(|t| slab_start(shape, t) < n),
    }
}

fn enumerate_shapes(k: usize, n: usize, set: ShapeSet) -> Vec<Vec<usize>> {
    // Every member has fewer than 2n cells and no side above n.
    fn grow(prefix: &mut Vec<usize>, k: usize, n: usize, set: ShapeSet, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            if in_shape_set(prefix, n, set) {
                out.push(prefix.clone());
            }
            return;
        }
        for d in 1..=n {
            prefix.push(d);
            if prefix.iter().product::<usize>() >= 2 * n.max(1) && d > 1 {
                prefix.pop();
                break;
            }
            grow(prefix, k, n, set, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::with_capacity(k), k, n, set, &mut out);
    out.sort_by(|a, b| {
        let sa: usize = a.iter().sum();
        let sb: usize = b.iter().sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    out
}

/// Minimum last extent over all k-dimensional grids.
pub fn solve_kdim_dp(inst: &KInstance) -> Result<KSolution> {
    let n = inst.n();
    let k = inst.k();
    let l1 = inst.lengths[0];
    let shapes = enumerate_shapes(k, n, inst.shapes);
    let index: HashMap<&[usize], usize> = shapes
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();

    let sizes: Vec<usize> = inst.budgets.iter().map(|&b| (b - l1 + 1) as usize).collect();
    let per_shape: u128 = sizes.iter().map(|&s| s as u128).product();
    let cells = per_shape * shapes.len() as u128;
    if cells > inst.state_cap {
        return Err(Error::TableTooLarge {
            cells,
            limit: inst.state_cap,
        });
    }
    let per_shape = per_shape as usize;
    let mut strides = vec![1usize; k - 1];
    for t in (0..k.saturating_sub(2)).rev() {
        strides[t] = strides[t + 1] * sizes[t + 1];
    }
    let coord = |flat: usize, t: usize| flat / strides[t] % sizes[t];

    // Best predecessor value for `shape` via dimension `t` at budget `flat`.
    let via = |table: &[Vec<u64>], shape: &[usize], t: usize, flat: usize| -> Option<u64> {
        if shape[t] == 1 || slab_start(shape, t) >= n {
            return None;
        }
        let mut pred = shape.to_vec();
        pred[t] -= 1;
        let prev = &table[index[pred.as_slice()]];
        let len = inst.length(slab_start(shape, t) + 1);
        let value = if t < k - 1 {
            let c = coord(flat, t);
            if (c as u64) < len {
                return None;
            }
            prev[flat - len as usize * strides[t]]
        } else {
            prev[flat].checked_add(len).unwrap_or(INF)
        };
        (value != INF).then_some(value)
    };

    let mut table: Vec<Vec<u64>> = Vec::with_capacity(shapes.len());
    for shape in &shapes {
        if shape.iter().all(|&d| d == 1) {
            table.push(vec![l1; per_shape]);
            continue;
        }
        let row = (0..per_shape)
            .map(|flat| {
                (0..k)
                    .filter_map(|t| via(&table, shape, t, flat))
                    .min()
                    .unwrap_or(INF)
            })
            .collect();
        table.push(row);
    }

    let full = per_shape - 1;
    let (best, objective) = shapes
        .iter()
        .enumerate()
        .filter(|(_, s)| s.iter().product::<usize>() >= n)
        .map(|(i, _)| (i, table[i][full]))
        .min_by_key(|&(i, v)| (v, i))
        .expect("the single-column shape is always a candidate");
    debug_assert!(objective != INF, "stacking along the last dimension always fits");

    let mut extensions = Vec::new();
    let mut shape = shapes[best].clone();
    let mut flat = full;
    while shape.iter().any(|&d| d > 1) {
        let target = table[index[shape.as_slice()]][flat];
        let t = (0..k)
            .find(|&t| via(&table, &shape, t, flat) == Some(target))
            .expect("every DP value has a witness");
        if t < k - 1 {
            flat -= inst.length(slab_start(&shape, t) + 1) as usize * strides[t];
        }
        extensions.push(t);
        shape[t] -= 1;
    }
    extensions.reverse();

    let extents = grid_extents(inst, &extensions);
    Ok(KSolution {
        objective,
        shape: shapes[best].clone(),
        extensions,
        extents,
    })
}

/// A k-dimensional grid of labels built by slab extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGrid {
    pub shape: Vec<usize>,
    /// `(coordinates, label)` in label order.
    pub cells: Vec<(Vec<usize>, usize)>,
}

/// Materializes the grid reached from one cell by the given extensions.
/// New slabs number their cells in lexicographic coordinate order.
pub fn materialize_grid(k: usize, extensions: &[usize]) -> KGrid {
    let mut shape = vec![1usize; k];
    let mut cells = vec![(vec![0usize; k], 1usize)];
    for &t in extensions {
        let mut others: Vec<Vec<usize>> = vec![Vec::new()];
        for (s, &d) in shape.iter().enumerate() {
            let range: Vec<usize> = if s == t { vec![d] } else { (0..d).collect() };
            others = others
                .into_iter()
                .flat_map(|p| {
                    range.iter().map(move |&x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        for c in others {
            let label = cells.len() + 1;
            cells.push((c, label));
        }
        shape[t] += 1;
    }
    KGrid { shape, cells }
}

impl KGrid {
    /// Sum over the planes of each dimension of the largest cube in the plane.
    pub fn extents(&self, length: impl Fn(usize) -> u64) -> Vec<u64> {
        let k = self.shape.len();
        (0..k)
            .map(|t| {
                let mut planes = vec![0u64; self.shape[t]];
                for (c, label) in &self.cells {
                    planes[c[t]] = planes[c[t]].max(length(*label));
                }
                planes.iter().sum()
            })
            .collect()
    }
}

/// Extents of the materialized grid under the instance's lengths.
pub fn grid_extents(inst: &KInstance, extensions: &[usize]) -> Vec<u64> {
    materialize_grid(inst.k(), extensions).extents(|label| inst.length(label))
}

/// Largest `n` accepted by [`brute_force_kdim`].
pub const KDIM_ORACLE_MAX_N: usize = 8;

/// Exhaustive search over every placement of the cubes into grid planes.
///
/// Cubes are placed largest first; each picks, per dimension, an existing
/// plane or a new one (which then has the cube's thickness). Only plane
/// order is factored out, so no layout structure is assumed.
pub fn brute_force_kdim(inst: &KInstance) -> Result<u64> {
    let n = inst.n();
    if n > KDIM_ORACLE_MAX_N {
        return Err(Error::OracleTooLarge {
            n,
            limit: KDIM_ORACLE_MAX_N,
        });
    }

    struct Search<'a> {
        inst: &'a KInstance,
        k: usize,
        planes: Vec<usize>,
        extents: Vec<u64>,
        occupied: Vec<Vec<usize>>,
        best: u64,
    }

    impl Search<'_> {
        fn place(&mut self, label: usize) {
            if label > self.inst.n() {
                self.best = self.best.min(self.extents[self.k - 1]);
                return;
            }
            self.choose(label, 0, &mut vec![0; self.k]);
        }

        fn choose(&mut self, label: usize, t: usize, coord: &mut Vec<usize>) {
            if t == self.k {
                if !self.occupied.contains(coord) {
                    self.occupied.push(coord.clone());
                    self.place(label + 1);
                    self.occupied.pop();
                }
                return;
            }
            let len = self.inst.length(label);
            for p in 0..=self.planes[t] {
                let fresh = p == self.planes[t];
                if fresh {
                    let grown = self.extents[t] + len;
                    let over = if t + 1 < self.k {
                        grown > self.inst.budgets[t]
                    } else {
                        grown >= self.best
                    };
                    if over {
                        continue;
                    }
                    self.extents[t] = grown;
                    self.planes[t] += 1;
                }
                coord[t] = p;
                self.choose(label, t + 1, coord);
                if fresh {
                    self.extents[t] -= len;
                    self.planes[t] -= 1;
                }
            }
        }
    }

    let k = inst.k();
    let mut search = Search {
        inst,
        k,
        planes: vec![0; k],
        extents: vec![0; k],
        occupied: Vec::with_capacity(n),
        best: INF,
    };
    search.place(1);
    Ok(search.best)
}

/// Adds `eta` to every length and to the strip width. Returns the new
/// instance and the offset to subtract from its optimum.
pub fn apply_thickness(inst: &Instance, eta: u64) -> Result<(Instance, u64)> {
    let lengths = inst
        .original_lengths()
        .into_iter()
        .map(|l| l.checked_add(eta))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Overflow(format!("thickness {eta}")))?;
    let b = inst
        .strip_width()
        .checked_add(eta)
        .ok_or_else(|| Error::Overflow(format!("thickness {eta}")))?;
    Ok((Instance::new(lengths, b)?, eta))
}

/// Optimal height with horizontal partitions of thickness `eta_h` and
/// vertical ones of thickness `eta_v`.
///
/// Solved as rectangles with `w_i = l_i + eta_v`, `h_i = l_i + eta_h` and
/// strip width `b + eta_v`. The returned objective and width are those of
/// the original strip, thickness included.
pub fn solve_with_thickness(inst: &Instance, eta_h: u64, eta_v: u64) -> Result<DpSolution> {
    let shift = |eta: u64| -> Result<Vec<u64>> {
        inst.lengths()
            .iter()
            .map(|&l| {
                l.checked_add(eta)
                    .ok_or_else(|| Error::Overflow(format!("thickness {eta}")))
            })
            .collect()
    };
    let b = inst
        .strip_width()
        .checked_add(eta_v)
        .ok_or_else(|| Error::Overflow(format!("thickness {eta_v}")))?;
    let rects = RippInstance::new(shift(eta_v)?, shift(eta_h)?, b)?;
    let sol = solve_ripp_width_dp(&rects)?;
    Ok(DpSolution {
        objective: sol.objective - eta_h,
        budget_used: sol.budget_used - eta_v,
        ..sol
    })
}
