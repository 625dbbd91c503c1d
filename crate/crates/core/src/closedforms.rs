//! Hand-collapsed formulas for `k <= 4`, kept separate from the general
//! engine so the two can be compared.
//!
//! For `k = 1` and `k = 2` the fixed-tree series are solved here from scratch
//! with rational [`Series`] arithmetic. For `k = 3` and `k = 4` the `C_mu`
//! come from the engine, but the combination into `U` is written out by hand
//! instead of going through the `B`, `C`, `E` aggregates.

use num_bigint::BigInt;

use crate::engine::SeriesCache;
use crate::error::Result;
use crate::partitions::Partition;
use crate::series::{Coefficient, Series};

fn q(n: i64, d: i64) -> Coefficient {
    Coefficient::new(BigInt::from(n), BigInt::from(d))
}

/// `sum_{m=1..=order} f(x^m) / m`, restricted to the `m` accepted by `keep`.
fn power_sum(f: &Series, keep: impl Fn(usize) -> bool) -> Result<Series> {
    let mut acc = Series::zero(f.order());
    for m in (1..=f.order()).filter(|&m| keep(m)) {
        acc = acc.add(&f.substitute_power(m)?.scale(&q(1, m as i64)))?;
    }
    Ok(acc)
}

/// Vertex-rooted trees by edges: `C_1 = exp(sum_m x^m C_1(x^m) / m)`.
pub fn otter_c1(order: usize) -> Result<Series> {
    let mut c1 = Series::one(order);
    for d in 1..=order {
        let xc = c1.with_order(d).shift(1);
        c1 = power_sum(&xc, |_| true)?.exp()?.with_order(order);
    }
    Ok(c1)
}

/// Unlabeled trees by edges, `U = C_1 - (x/2)(C_1^2 - C_1(x^2))`.
pub fn otter_u(order: usize) -> Result<Series> {
    let c1 = otter_c1(order)?;
    let sym = c1
        .mul(&c1)?
        .sub(&c1.substitute_power(2)?)?
        .shift(1)
        .scale(&q(1, 2));
    c1.sub(&sym)
}

/// `(C_{1,1}, C_2)` for `k = 2`, where
/// `C_{1,1} = exp(sum_m x^m C_{1,1}(x^m)^2 / m)` and `C_2` takes
/// `x^m C_{1,1}(x^{2m})` for odd `m` and `x^m C_{1,1}(x^m)^2` for even `m`.
pub fn twotree_parts(order: usize) -> Result<(Series, Series)> {
    let mut c11 = Series::one(order);
    for d in 1..=order {
        let c = c11.with_order(d);
        let sq = c.mul(&c)?.shift(1);
        c11 = power_sum(&sq, |_| true)?.exp()?.with_order(order);
    }
    let sq = c11.mul(&c11)?.shift(1);
    let half = c11.substitute_power(2)?.shift(1);
    let c2 = power_sum(&half, |m| m % 2 == 1)?
        .add(&power_sum(&sq, |m| m % 2 == 0)?)?
        .exp()?;
    Ok((c11, c2))
}

/// Unlabeled 2-trees by triangles,
/// `U = C - (x/3)(C_{1,1}^3 - C_{1,1}(x^3))` with `C = (C_{1,1} + C_2)/2`.
pub fn twotree_u(order: usize) -> Result<Series> {
    let (c11, c2) = twotree_parts(order)?;
    let c = c11.add(&c2)?.scale(&q(1, 2));
    let nonsym = c11
        .pow(3)
        .sub(&c11.substitute_power(3)?)?
        .shift(1)
        .scale(&q(1, 3));
    c.sub(&nonsym)
}

fn lookup(cache: &SeriesCache, parts: &[usize]) -> Series {
    cache
        .c(&Partition::new(parts.to_vec()))
        .expect("partition of k")
        .clone()
}

/// Unlabeled 3-trees by hedra from the engine's `C_mu`.
pub fn threetree_u(order: usize) -> Result<Series> {
    let cache = SeriesCache::solve(3, order)?;
    let c111 = lookup(&cache, &[1, 1, 1]);
    let c21 = lookup(&cache, &[2, 1]);
    let c3 = lookup(&cache, &[3]);

    let c = c111
        .scale(&q(1, 6))
        .add(&c21.scale(&q(1, 2)))?
        .add(&c3.scale(&q(1, 3)))?;

    let c111_2 = c111.substitute_power(2)?;
    let inner = c111
        .pow(4)
        .scale(&q(1, 8))
        .add(&c111_2.mul(&c21.pow(2))?.scale(&q(1, 4)))?
        .sub(&c111_2.pow(2).scale(&q(1, 8)))?
        .sub(&c111.substitute_power(4)?.scale(&q(1, 4)))?;
    c.sub(&inner.shift(1))
}

/// Unlabeled 4-trees by hedra from the engine's `C_mu`.
pub fn fourtree_u(order: usize) -> Result<Series> {
    let cache = SeriesCache::solve(4, order)?;
    let c1111 = lookup(&cache, &[1, 1, 1, 1]);
    let c211 = lookup(&cache, &[2, 1, 1]);
    let c22 = lookup(&cache, &[2, 2]);
    let c31 = lookup(&cache, &[3, 1]);
    let c4 = lookup(&cache, &[4]);

    let c = c1111
        .scale(&q(1, 24))
        .add(&c211.scale(&q(1, 4)))?
        .add(&c22.scale(&q(1, 8)))?
        .add(&c31.scale(&q(1, 3)))?
        .add(&c4.scale(&q(1, 4)))?;

    let inner = c1111
        .pow(5)
        .scale(&q(1, 30))
        .add(&c1111.substitute_power(3)?.mul(&c31.pow(2))?.scale(&q(1, 6)))?
        .add(&c1111.substitute_power(2)?.mul(&c211.pow(3))?.scale(&q(1, 6)))?
        .sub(
            &c211
                .substitute_power(3)?
                .mul(&c31.substitute_power(2)?)?
                .scale(&q(1, 6)),
        )?
        .sub(&c1111.substitute_power(5)?.scale(&q(1, 5)))?;
    c.sub(&inner.shift(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    #[test]
    fn otter_table_row() {
        assert_eq!(ints(&otter_u(9).unwrap()), [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert_eq!(ints(&otter_u(0).unwrap()), [1]);
    }

    #[test]
    fn otter_rooted_trees() {
        // rooted trees with n edges = rooted trees on n+1 vertices
        assert_eq!(ints(&otter_c1(6).unwrap()), [1, 1, 2, 4, 9, 20, 48]);
    }

    #[test]
    fn twotree_table_row() {
        let u = twotree_u(9).unwrap();
        assert_eq!(ints(&u), [1, 1, 1, 2, 5, 12, 39, 136, 529, 2171]);
        assert_eq!(ints(&u)[4], 5);
    }

    #[test]
    fn threetree_table_row() {
        assert_eq!(
            ints(&threetree_u(9).unwrap()),
            [1, 1, 1, 2, 5, 15, 58, 275, 1505, 9003]
        );
    }

    #[test]
    fn fourtree_table_row() {
        let u = ints(&fourtree_u(9).unwrap());
        assert_eq!(u, [1, 1, 1, 2, 5, 15, 64, 331, 2150, 15817]);
        assert_eq!(u[5], 15);
    }
}
