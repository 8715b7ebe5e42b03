//! Closed-form counts: divisor function, theory counts for cyclic groups,
//! star/direct product counts, Bell numbers, and the per-shape count of
//! partition theories over the `p+1` lines.

use crate::error::{Error, Result};
use crate::group::Prime;
use num_bigint::BigUint;
use std::collections::BTreeMap;

/// Number of divisors of `n`.
pub fn tau(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidArgument("tau needs n >= 1".into()));
    }
    Ok((1..=n).filter(|d| n % d == 0).count() as u64)
}

/// Number of distinct theories of a cyclic group of order `p`: one per
/// subgroup of the unit group, i.e. `tau(p-1)`.
pub fn cyclic_sct_count(p: Prime) -> u64 {
    tau(p.get() as u64 - 1).unwrap()
}

/// Number of distinct nontrivial star products: `(p+1) tau(p-1)^2`.
pub fn star_count(p: Prime) -> u64 {
    let t = cyclic_sct_count(p);
    (p.get() as u64 + 1) * t * t
}

/// Number of distinct direct products including the finest theory:
/// `1 + C(p+1, 2) (tau(p-1)^2 - 1)`.
pub fn direct_count(p: Prime) -> u64 {
    let t = cyclic_sct_count(p);
    let k = p.get() as u64 + 1;
    1 + k * (k - 1) / 2 * (t * t - 1)
}

/// `Bell(n)` via the Bell-triangle recurrence.
pub fn bell(n: usize) -> BigUint {
    let mut row = vec![BigUint::from(1u32)];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let last = next.last().unwrap().clone();
            next.push(last + v);
        }
        row = next;
    }
    row[0].clone()
}

/// Block-size multiplicities of a set partition of `{1..k}`: `n[i]` blocks
/// of size `i+1`, with `sum (i+1) n[i] = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub multiplicities: Vec<u64>,
}

impl Shape {
    pub fn ground_size(&self) -> u64 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, &n)| (i as u64 + 1) * n)
            .sum()
    }

    /// Number of singleton blocks; the type of the resulting theory.
    pub fn singletons(&self) -> u64 {
        self.multiplicities.first().copied().unwrap_or(0)
    }
}

/// All shapes of set partitions of a `k`-set, lexicographic on the
/// multiplicity vector.
pub fn shapes(k: u64) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut current = vec![0u64; k as usize];
    fn rec(k: u64, size: usize, remaining: u64, current: &mut Vec<u64>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape {
                multiplicities: current.clone(),
            });
            return;
        }
        if size as u64 > remaining {
            return;
        }
        for count in 0..=(remaining / size as u64) {
            current[size - 1] = count;
            rec(k, size + 1, remaining - count * size as u64, current, out);
            current[size - 1] = 0;
        }
    }
    rec(k, 1, k, &mut current, &mut out);
    out.sort_by(|a, b| a.multiplicities.cmp(&b.multiplicities));
    out
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::from(1u32))
}

/// Exact number of set partitions of a `(p+1)`-set with the given shape:
/// for each block size `i`, choose the blocks of size `i` from what is
/// left and divide by the permutations of equal-size blocks.
pub fn shape_count(shape: &Shape, p: Prime) -> Result<BigUint> {
    let k = p.get() as u64 + 1;
    if shape.ground_size() != k {
        return Err(Error::InvalidArgument(format!(
            "shape covers {} of {} line indices",
            shape.ground_size(),
            k
        )));
    }
    let mut remaining = k;
    let mut total = BigUint::from(1u32);
    for (idx, &n_i) in shape.multiplicities.iter().enumerate() {
        let i = idx as u64 + 1;
        let mut factor = BigUint::from(1u32);
        for _ in 0..n_i {
            factor *= binomial(remaining, i);
            remaining -= i;
        }
        total *= factor / factorial(n_i);
    }
    Ok(total)
}

/// Per-type counts of partition theories: the type equals the number of
/// singleton blocks, so group shape counts by that multiplicity.
pub fn partition_counts_by_type(p: Prime) -> BTreeMap<u64, BigUint> {
    let mut out: BTreeMap<u64, BigUint> = BTreeMap::new();
    for shape in shapes(p.get() as u64 + 1) {
        let count = shape_count(&shape, p).unwrap();
        *out.entry(shape.singletons()).or_default() += count;
    }
    out.retain(|_, v| *v != BigUint::from(0u32));
    out
}
