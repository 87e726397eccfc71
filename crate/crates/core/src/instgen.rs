//! Instance generators and the instance file format.
//!
//! # Random instances
//!
//! [`gen_uniform`] draws side lengths uniformly from `1..=20` with a
//! PCG-XSH-RR 64/32 generator:
//!
//! * state update `s' = s * 6364136223846793005 + inc (mod 2^64)`,
//! * `inc = (0xa02bdbf7bb3c0a7 << 1) | 1`,
//! * initialization `s = seed + inc`, then one state update,
//! * output: `rot = s >> 59`, `x = ((s >> 18) ^ s) >> 27` truncated to 32
//!   bits, result `x.rotate_right(rot)`, computed from the state before the
//!   update.
//!
//! A 32-bit draw `x` is rejected while `x >= 4294967280` (the largest
//! multiple of 20 not above `2^32`); otherwise the length is `x % 20 + 1`.
//! The strip width is `ceil(sqrt(sum l_i^2))`.
//!
//! # File format
//!
//! ```text
//! # optional comment lines
//! 8 60
//! 20 15 13 13 11 8 5 3
//! ```
//!
//! The first line holds `n` and `b`, the second the `n` lengths in input
//! order. Text after `#` is ignored.

use std::fmt::Write as _;
use std::path::Path;

use rand_core::Rng;
use rand_pcg::Pcg32;

use crate::error::{Error, Result};
use crate::instance::Instance;

/// PCG stream selector used by [`gen_uniform`].
pub const PCG_STREAM: u64 = 0x0a02_bdbf_7bb3_c0a7;

pub const MIN_LENGTH: u64 = 1;
pub const MAX_LENGTH: u64 = 20;

const SPAN: u32 = (MAX_LENGTH - MIN_LENGTH + 1) as u32;
const REJECT_FROM: u32 = ((1u64 << 32) / SPAN as u64 * SPAN as u64) as u32;

/// Problem sizes of the benchmark suite.
pub const SUITE_SIZES: [usize; 6] = [10, 15, 20, 25, 30, 35];
/// Seeds used for every suite size.
pub const SUITE_SEEDS: std::ops::RangeInclusive<u64> = 1..=10;

/// A seeded stream of side lengths in `1..=20`.
#[derive(Debug, Clone)]
pub struct LengthSampler {
    rng: Pcg32,
}

impl LengthSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: Pcg32::new(seed, PCG_STREAM),
        }
    }

    pub fn next_length(&mut self) -> u64 {
        loop {
            let x = self.rng.next_u32();
            if x < REJECT_FROM {
                return MIN_LENGTH + u64::from(x % SPAN);
            }
        }
    }
}

/// `ceil(sqrt(sum l_i^2))` in exact integer arithmetic.
pub fn uniform_strip_width(lengths: &[u64]) -> u64 {
    let sum: u128 = lengths.iter().map(|&l| u128::from(l) * u128::from(l)).sum();
    let root = sum.isqrt();
    let root = if root * root < sum { root + 1 } else { root };
    root as u64
}

/// A random instance with `n` lengths drawn from [`LengthSampler`], sorted
/// in non-increasing order.
pub fn gen_uniform(n: usize, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut sampler = LengthSampler::new(seed);
    let mut lengths: Vec<u64> = (0..n).map(|_| sampler.next_length()).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    let b = uniform_strip_width(&lengths);
    Instance::new(lengths, b)
}

pub fn suite_file_name(n: usize, seed: u64) -> String {
    format!("n{n}_s{seed}.txt")
}

/// The 60 benchmark instances in `(n, seed)` order.
pub fn suite() -> Vec<(usize, u64, Instance)> {
    SUITE_SIZES
        .iter()
        .flat_map(|&n| SUITE_SEEDS.map(move |seed| (n, seed)))
        .map(|(n, seed)| (n, seed, gen_uniform(n, seed).expect("suite sizes are positive")))
        .collect()
}

/// A Partition instance: can the values be split into two equal-sum halves?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionInput {
    values: Vec<u64>,
}

/// Largest `m` accepted by [`PartitionInput::has_equal_split`].
pub const SUBSET_ENUMERATION_LIMIT: usize = 24;

impl PartitionInput {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "partition input needs at least one value".into(),
            ));
        }
        if let Some(pos) = values.iter().position(|&s| s == 0) {
            return Err(Error::InvalidArgument(format!(
                "partition value {} is 0; values must be positive",
                pos + 1
            )));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    pub fn beta(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Answers the instance by enumerating all subsets.
    pub fn has_equal_split(&self) -> Result<bool> {
        let m = self.m();
        if m > SUBSET_ENUMERATION_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "subset enumeration limited to {SUBSET_ENUMERATION_LIMIT} values, got {m}"
            )));
        }
        let beta = self.beta();
        if beta % 2 == 1 {
            return Ok(false);
        }
        Ok((0u32..1 << m).any(|mask| {
            let sum: u64 = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| self.values[i])
                .sum();
            2 * sum == beta
        }))
    }
}

impl std::str::FromStr for PartitionInput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad partition value {v:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

/// Result of [`reduce_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReduction {
    pub instance: Instance,
    /// Height threshold; the Partition answer is yes iff the optimum equals it.
    pub lambda: u64,
    /// True when every value was doubled to keep `b` integral.
    pub doubled: bool,
}

/// Builds the packing instance whose optimal height equals `lambda` exactly
/// when `pp` has an equal split, and exceeds it otherwise.
///
/// With `beta = sum s_i`: `n = (m+1)^2`, `b = lambda =
/// beta((m+1)(m+2) + 1) / 2` and `l_1 = (m+1)beta`; for block `i`, labels
/// `i^2+1 ..= i(i+1)` get `(m-i+1)beta + s_i` and labels
/// `i(i+1)+1 ..= (i+1)^2` get `(m-i+1)beta`. An odd `beta` doubles every
/// `s_i` first.
pub fn reduce_partition(pp: &PartitionInput) -> Result<PartitionReduction> {
    let doubled = pp.beta() % 2 == 1;
    let s: Vec<u64> = if doubled {
        pp.values.iter().map(|&v| 2 * v).collect()
    } else {
        pp.values.clone()
    };
    let m = s.len() as u64;
    let beta: u64 = s.iter().sum();
    let overflow = || Error::Overflow(format!("partition reduction with m = {m}, beta = {beta}"));

    let lambda = ((m + 1) * (m + 2) + 1).checked_mul(beta).ok_or_else(overflow)? / 2;
    let mut lengths = Vec::with_capacity(((m + 1) * (m + 1)) as usize);
    lengths.push((m + 1).checked_mul(beta).ok_or_else(overflow)?);
    for (i, &si) in (1..=m).zip(&s) {
        let base = (m - i + 1) * beta;
        lengths.extend(std::iter::repeat_n(base + si, i as usize));
        lengths.extend(std::iter::repeat_n(base, (i + 1) as usize));
    }
    Ok(PartitionReduction {
        instance: Instance::new(lengths, lambda)?,
        lambda,
        doubled,
    })
}

/// Renders an instance in the file format, lengths in input order.
pub fn format_instance(inst: &Instance) -> String {
    let mut out = format!("{} {}\n", inst.n(), inst.strip_width());
    let lengths: Vec<String> = inst.original_lengths().iter().map(u64::to_string).collect();
    let _ = writeln!(out, "{}", lengths.join(" "));
    out
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line `n b`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, b] = fields[..] else {
        return Err(Error::parse(
            header_line,
            format!("header must be `n b`, found {} fields", fields.len()),
        ));
    };
    let number = |line: usize, tok: &str| {
        tok.parse::<u64>()
            .map_err(|_| Error::parse(line, format!("{tok:?} is not a non-negative integer")))
    };
    let n = number(header_line, n)? as usize;
    let b = number(header_line, b)?;
    if n == 0 {
        return Err(Error::parse(header_line, "n must be at least 1"));
    }

    let mut lengths = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        for tok in line.split_whitespace() {
            if lengths.len() == n {
                return Err(Error::parse(line_no, format!("expected {n} lengths, found more")));
            }
            lengths.push(number(line_no, tok)?);
        }
    }
    if lengths.len() != n {
        return Err(Error::parse(
            last_line,
            format!("expected {n} lengths, found {}", lengths.len()),
        ));
    }
    Instance::new(lengths, b)
}

pub fn write_instance(inst: &Instance, path: &Path) -> Result<()> {
    std::fs::write(path, format_instance(inst))?;
    Ok(())
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text).map_err(|e| e.with_path(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight-line PCG-XSH-RR 64/32 from the constants in the module docs.
    struct ReferencePcg {
        state: u64,
        inc: u64,
    }

    impl ReferencePcg {
        fn new(seed: u64) -> Self {
            let inc = (0x0a02_bdbf_7bb3_c0a7u64 << 1) | 1;
            let mut r = Self {
                state: seed.wrapping_add(inc),
                inc,
            };
            r.step();
            r
        }

        fn step(&mut self) {
            self.state = self
                .state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(self.inc);
        }

        fn next(&mut self) -> u32 {
            let old = self.state;
            self.step();
            let x = (((old >> 18) ^ old) >> 27) as u32;
            x.rotate_right((old >> 59) as u32)
        }
    }

    #[test]
    fn sampler_matches_reference_generator() {
        assert_eq!(REJECT_FROM, 4_294_967_280);
        for seed in [0, 1, 42, u64::MAX] {
            let mut reference = ReferencePcg::new(seed);
            let mut sampler = LengthSampler::new(seed);
            for _ in 0..200 {
                let expected = loop {
                    let x = reference.next();
                    if x < 4_294_967_280 {
                        break u64::from(x % 20) + 1;
                    }
                };
                assert_eq!(sampler.next_length(), expected);
            }
        }
    }

    #[test]
    fn uniform_is_deterministic_and_bounded() {
        let a = gen_uniform(10, 7).unwrap();
        assert_eq!(a, gen_uniform(10, 7).unwrap());
        assert!(a.lengths().iter().all(|&l| (1..=20).contains(&l)));
        assert!(a.lengths().windows(2).all(|w| w[0] >= w[1]));
        assert!(a.strip_width() >= a.largest());
        for seed in 0..50 {
            let b = gen_uniform(30, seed).unwrap().strip_width();
            assert!((6..=110).contains(&b), "b = {b}");
        }
        assert!(gen_uniform(0, 1).is_err());
    }

    #[test]
    fn strip_width_is_exact_ceiling() {
        assert_eq!(uniform_strip_width(&[3, 4]), 5);
        assert_eq!(uniform_strip_width(&[3, 4, 1]), 6);
        assert_eq!(uniform_strip_width(&[1]), 1);
        assert_eq!(uniform_strip_width(&[20; 35]), 119);
    }

    #[test]
    fn frequencies_are_flat() {
        let mut sampler = LengthSampler::new(2024);
        let mut counts = [0u32; 20];
        for _ in 0..10_000 {
            counts[(sampler.next_length() - 1) as usize] += 1;
        }
        for c in counts {
            assert!((400..=600).contains(&c), "count {c}");
        }
    }

    #[test]
    fn reduction_m3_layout() {
        let pp = PartitionInput::new(vec![4, 8, 12]).unwrap();
        let red = reduce_partition(&pp).unwrap();
        assert!(!red.doubled);
        assert_eq!(red.lambda, 252);
        let b = 24;
        let expected = [
            4 * b,
            3 * b + 4,
            3 * b,
            3 * b,
            2 * b + 8,
            2 * b + 8,
            2 * b,
            2 * b,
            2 * b,
            b + 12,
            b + 12,
            b + 12,
            b,
            b,
            b,
            b,
        ];
        assert_eq!(red.instance.lengths(), expected);
        assert_eq!(red.instance.strip_width(), 252);
    }

    #[test]
    fn reduction_doubles_odd_beta() {
        let red = reduce_partition(&PartitionInput::new(vec![1, 2]).unwrap()).unwrap();
        assert!(red.doubled);
        // beta = 6 after doubling: lambda = 6 * 13 / 2
        assert_eq!(red.lambda, 39);
        assert_eq!(red.instance.n(), 9);
        assert_eq!(red.instance.largest(), 18);
    }

    #[test]
    fn subset_answers() {
        let yes = |v: Vec<u64>| PartitionInput::new(v).unwrap().has_equal_split().unwrap();
        assert!(yes(vec![4, 8, 12]));
        assert!(yes(vec![2, 2]));
        assert!(!yes(vec![1, 2]));
        assert!(!yes(vec![3]));
        assert!(!yes(vec![1, 1, 4]));
        assert!(PartitionInput::new(vec![]).is_err());
        assert!(PartitionInput::new(vec![1, 0]).is_err());
        assert_eq!("4, 8,12".parse::<PartitionInput>().unwrap().values(), [4, 8, 12]);
    }

    #[test]
    fn file_round_trip_keeps_input_order() {
        let inst = Instance::new(vec![5, 20, 3, 15, 13, 13, 11, 8], 60).unwrap();
        let text = format_instance(&inst);
        assert_eq!(text, "8 60\n5 20 3 15 13 13 11 8\n");
        assert_eq!(parse_instance(&text).unwrap(), inst);

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ex.txt");
        write_instance(&inst, &path).unwrap();
        assert_eq!(read_instance(&path).unwrap(), inst);
    }

    #[test]
    fn parse_diagnostics() {
        let short = parse_instance("# example\n8 60\n20 15 13 13 11 8 5\n").unwrap_err();
        assert_eq!(short.to_string(), "line 3: expected 8 lengths, found 7");
        let bad = parse_instance("2 9\n4 x\n").unwrap_err();
        assert!(bad.to_string().starts_with("line 2:"), "{bad}");
        let wide = parse_instance("2 9\n10 4\n").unwrap_err();
        assert!(wide.to_string().contains("infeasible instance"));
        assert!(parse_instance("3\n1 2 3\n").is_err());
        assert!(parse_instance("").is_err());
        let commented = parse_instance("2 9 # header\n# lengths next\n4 5\n").unwrap();
        assert_eq!(commented.lengths(), [5, 4]);
    }

    #[test]
    fn suite_has_sixty_instances() {
        let all = suite();
        assert_eq!(all.len(), 60);
        assert_eq!((all[0].0, all[0].1), (10, 1));
        assert_eq!((all[59].0, all[59].1), (35, 10));
        assert_eq!(suite_file_name(25, 3), "n25_s3.txt");
    }
}
