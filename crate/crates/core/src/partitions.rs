//! Integer partitions as cycle types of permutations.

use std::fmt;

use num_bigint::BigUint;
use num_integer::gcd;
use num_traits::One;

/// A partition stored as its parts in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into canonical order. Panics on a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_fixed_point(&self) -> bool {
        self.0.last() == Some(&1)
    }

    /// Centralizer order `z = prod_i i^{l_i} l_i!`, where `l_i` is the
    /// multiplicity of `i`. There are `m!/z` permutations of this type.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for run in self.0.chunk_by(|a, b| a == b) {
            let part = run[0];
            for mult in 1..=run.len() {
                z *= part * mult;
            }
        }
        z
    }

    /// Cycle type of `pi^i` for `pi` of this cycle type: a `p`-cycle splits
    /// into `gcd(p, i)` cycles of length `p / gcd(p, i)`.
    pub fn power(&self, i: usize) -> Partition {
        assert!(i >= 1, "cycle power needs i >= 1");
        let mut parts = Vec::with_capacity(self.0.len());
        for &p in &self.0 {
            let g = gcd(p, i);
            parts.extend(std::iter::repeat_n(p / g, g));
        }
        Partition::new(parts)
    }

    /// Removes one part equal to 1, or `None` if there is none.
    pub fn drop_one_fixed_point(&self) -> Option<Partition> {
        if !self.has_fixed_point() {
            return None;
        }
        let mut parts = self.0.clone();
        parts.pop();
        Some(Partition(parts))
    }

    pub fn add_fixed_point(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.push(1);
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `m` in reverse-lexicographic order, starting from `(m)`
/// and ending at `(1,...,1)`. `partitions_of(0)` is the single empty
/// partition.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

pub fn z_of(lambda: &Partition) -> BigUint {
    lambda.z()
}

pub fn cycle_power(lambda: &Partition, i: usize) -> Partition {
    lambda.power(i)
}

pub fn drop_one_fixed_point(lambda: &Partition) -> Option<Partition> {
    lambda.drop_one_fixed_point()
}
