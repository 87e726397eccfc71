//! Fully polynomial approximation scheme.
//!
//! Heights are scaled down by `t = max(eps * l_1 / n, 1)` and rounded up
//! while widths and the strip width stay exact, so every layout keeps its
//! feasibility. The rectangle DP then minimizes the scaled height and the
//! returned layout is re-measured with the original lengths.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exact::{solve_ripp_width_dp, DpSolution, RippInstance};
use crate::instance::Instance;

/// A positive rational accuracy parameter, parsed exactly from `"0.25"`,
/// `"1/4"` or `"2"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Epsilon(Ratio<u128>);

impl Epsilon {
    pub fn new(numer: u128, denom: u128) -> Result<Self> {
        if numer == 0 || denom == 0 {
            return Err(Error::InvalidEpsilon(format!("{numer}/{denom}")));
        }
        Ok(Self(Ratio::new(numer, denom)))
    }

    pub fn ratio(&self) -> Ratio<u128> {
        self.0
    }

    /// `floor((1 + eps) * value)`.
    pub fn inflate_floor(&self, value: u64) -> u64 {
        let scaled = (Ratio::from_integer(1) + self.0) * Ratio::from_integer(value as u128);
        scaled.to_integer() as u64
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidEpsilon(s.to_string());
        let text = s.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num: u128 = num.trim().parse().map_err(|_| bad())?;
            let den: u128 = den.trim().parse().map_err(|_| bad())?;
            return Epsilon::new(num, den).map_err(|_| bad());
        }
        let (int_part, frac_part) = text.split_once('.').unwrap_or((text, ""));
        let digits_ok = |d: &str| d.chars().all(|c| c.is_ascii_digit());
        if (int_part.is_empty() && frac_part.is_empty())
            || !digits_ok(int_part)
            || !digits_ok(frac_part)
            || frac_part.len() > 30
        {
            return Err(bad());
        }
        let denom = 10u128.pow(frac_part.len() as u32);
        let numer = format!("{int_part}{frac_part}")
            .trim_start_matches('0')
            .parse::<u128>()
            .unwrap_or(0);
        Epsilon::new(numer, denom).map_err(|_| bad())
    }
}

/// `t = max(eps * l_1 / n, 1)` as an exact rational.
pub fn scale_factor(inst: &Instance, eps: Epsilon) -> Ratio<u128> {
    let t = eps.0 * Ratio::new(inst.largest() as u128, inst.n() as u128);
    t.max(Ratio::from_integer(1))
}

/// The rectangle instance with `w_i = l_i`, `h_i = ceil(l_i / t)` and the
/// original strip width.
pub fn scaled_instance(inst: &Instance, eps: Epsilon) -> Result<RippInstance> {
    let t = scale_factor(inst, eps);
    let heights = inst
        .lengths()
        .iter()
        .map(|&l| (l as u128 * t.denom()).div_ceil(*t.numer()) as u64)
        .collect();
    RippInstance::new(inst.lengths().to_vec(), heights, inst.strip_width())
}

/// A layout whose height is at most `(1 + eps)` times the optimum.
///
/// The objective reported is the true height under the original lengths.
pub fn fptas(inst: &Instance, eps: Epsilon) -> Result<DpSolution> {
    let scaled = scaled_instance(inst, eps)?;
    let sol = solve_ripp_width_dp(&scaled)?;
    let (width, height) = sol.rc_sequence.evaluate(inst);
    Ok(DpSolution {
        objective: height,
        shape: sol.shape,
        rc_sequence: sol.rc_sequence,
        budget_used: width,
    })
}
