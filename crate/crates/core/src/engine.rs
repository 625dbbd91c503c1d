//! The generating-function system for unlabeled k-trees.
//!
//! Colour the vertices of a k-tree with `k+1` colours so that every hedron
//! uses all of them, encode the result as a coding tree, and count orbits of
//! coding trees under permutations of the colours. For a permutation of cycle
//! type `mu` (a partition of `k`, with the root colour as an extra fixed
//! point) the series of fixed trees satisfy
//!
//! ```text
//! Bbar_mu = x * prod_{i in mu} C_{mu^i}(x^i)
//! C_mu    = exp( sum_{m >= 1} Bbar_{mu^m}(x^m) / m )
//! ```
//!
//! and the unrooted count follows from averaging over cycle types and the
//! dissymmetry identity `U = B + C - E`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::series::{Coefficient, Series};

/// Fixed-tree series `C_mu` and `Bbar_mu` for every `mu` partitioning `k`.
#[derive(Clone, Debug)]
pub struct SeriesCache {
    k: usize,
    order: usize,
    c_table: BTreeMap<Partition, Series>,
    bbar_table: BTreeMap<Partition, Series>,
}

impl SeriesCache {
    /// Solves the system through degree `order`.
    ///
    /// Starts from `C_mu = 1`, `Bbar_mu = 0` and, for each degree `d`, first
    /// extends every `Bbar_mu` through `d` (the leading `x` means this only
    /// reads `C` through `d - 1`), then every `C_mu` through `d`. Lower
    /// degrees never change after their own pass, so each pass only has to
    /// produce the new top coefficient.
    pub fn solve(k: usize, order: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let mut solver = Solver::new(k, order);
        for d in 1..=order {
            solver.pass(d)?;
        }
        let to_series =
            |v: &Vec<BigInt>| Series::from_coeffs(order, v.iter().cloned().map(Coefficient::from_integer));
        Ok(SeriesCache {
            k,
            order,
            c_table: solver
                .keys
                .iter()
                .cloned()
                .zip(solver.c.iter().map(to_series))
                .collect(),
            bbar_table: solver
                .keys
                .iter()
                .cloned()
                .zip(solver.bbar.iter().map(to_series))
                .collect(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `C_mu` for `mu` partitioning `k`.
    pub fn c(&self, mu: &Partition) -> Option<&Series> {
        self.c_table.get(mu)
    }

    /// `Bbar_mu` for `mu` partitioning `k`.
    pub fn bbar(&self, mu: &Partition) -> Option<&Series> {
        self.bbar_table.get(mu)
    }

    pub fn c_table(&self) -> &BTreeMap<Partition, Series> {
        &self.c_table
    }

    pub fn bbar_table(&self) -> &BTreeMap<Partition, Series> {
        &self.bbar_table
    }

    /// `C_lambda` for a cycle type of all `k+1` colours: the entry for
    /// `lambda` minus one fixed point, or zero if `lambda` has none.
    pub fn c_full(&self, lambda: &Partition) -> Series {
        match lambda.drop_one_fixed_point() {
            Some(mu) => self.c_table[&mu].clone(),
            None => Series::zero(self.order),
        }
    }

    fn check_size(&self, p: &Partition, expected: usize) -> Result<()> {
        if p.size() != expected {
            return Err(Error::WrongPartitionSize {
                partition: p.clone(),
                expected,
            });
        }
        Ok(())
    }

    /// Black-rooted trees fixed by a permutation of type `lambda`:
    /// `B_lambda = x * prod_{i in lambda} C_{lambda^i}(x^i)`.
    pub fn b_lambda(&self, lambda: &Partition) -> Result<Series> {
        self.check_size(lambda, self.k + 1)?;
        let mut prod = Series::one(self.order);
        for &i in lambda.parts() {
            prod = prod.mul(&self.c_full(&lambda.power(i)).substitute_power(i)?)?;
        }
        Ok(prod.shift(1))
    }

    /// Unrooted coding trees fixed by a permutation of type `lambda`,
    /// `U_lambda = B_lambda + f (C_lambda - Bbar_lambda C_lambda)` where `f`
    /// is the number of fixed points of `lambda` (each one a possible colour
    /// for a fixed coloured root). Averaging over `lambda` gives `U`.
    pub fn u_lambda(&self, lambda: &Partition) -> Result<Series> {
        let b = self.b_lambda(lambda)?;
        let Some(mu) = lambda.drop_one_fixed_point() else {
            return Ok(b);
        };
        let fixed = lambda.parts().iter().filter(|&&p| p == 1).count();
        let c = &self.c_table[&mu];
        let rooted = c.sub(&self.bbar_table[&mu].mul(c)?)?;
        b.add(&rooted.scale(&Coefficient::from_integer(BigInt::from(fixed))))
    }

    /// Black-rooted color-orbits, `B = sum_{lambda |- k+1} B_lambda / z_lambda`.
    pub fn b(&self) -> Result<Series> {
        let mut acc = Series::zero(self.order);
        for lambda in partitions_of(self.k + 1) {
            acc = acc.add(&self.b_lambda(&lambda)?.scale(&inv_z(&lambda)))?;
        }
        Ok(acc)
    }

    /// Colored-rooted color-orbits, `C = sum_{mu |- k} C_mu / z_mu`.
    pub fn c_total(&self) -> Result<Series> {
        let mut acc = Series::zero(self.order);
        for (mu, c) in &self.c_table {
            acc = acc.add(&c.scale(&inv_z(mu)))?;
        }
        Ok(acc)
    }

    /// Edge-rooted color-orbits, `E = sum_{mu |- k} Bbar_mu C_mu / z_mu`.
    pub fn e(&self) -> Result<Series> {
        let mut acc = Series::zero(self.order);
        for (mu, c) in &self.c_table {
            acc = acc.add(&self.bbar_table[mu].mul(c)?.scale(&inv_z(mu)))?;
        }
        Ok(acc)
    }
}

/// Integer state behind [`SeriesCache::solve`]. Every `C_mu` and `Bbar_mu`
/// counts trees, so their coefficients are integers, and so is `j * A[j]`
/// for the exponent argument `A` of `C_mu = exp(A)`.
struct Solver {
    keys: Vec<Partition>,
    c: Vec<Vec<BigInt>>,
    bbar: Vec<Vec<BigInt>>,
    /// `(index of mu^i, i)` for each part `i` of `mu`.
    factors: Vec<Vec<(usize, usize)>>,
    /// Running products of the factors of `Bbar_mu / x`.
    partial: Vec<Vec<Vec<BigInt>>>,
    /// `j * A_mu[j]`.
    weighted_arg: Vec<Vec<BigInt>>,
    /// `powers[m][mu]` is the index of `mu^m`.
    powers: Vec<Vec<usize>>,
}

impl Solver {
    fn new(k: usize, order: usize) -> Self {
        let keys = partitions_of(k);
        let index: HashMap<Partition, usize> =
            keys.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let powers = (0..=order.max(1))
            .map(|m| {
                keys.iter()
                    .map(|mu| if m == 0 { 0 } else { index[&mu.power(m)] })
                    .collect()
            })
            .collect();
        let factors: Vec<Vec<(usize, usize)>> = keys
            .iter()
            .map(|mu| mu.parts().iter().map(|&i| (index[&mu.power(i)], i)).collect())
            .collect();
        let zeros = || vec![BigInt::zero(); order + 1];
        let mut c = vec![zeros(); keys.len()];
        for s in &mut c {
            s[0] = BigInt::one();
        }
        Solver {
            partial: factors.iter().map(|f| vec![zeros(); f.len()]).collect(),
            bbar: vec![zeros(); keys.len()],
            weighted_arg: vec![zeros(); keys.len()],
            c,
            factors,
            powers,
            keys,
        }
    }

    fn pass(&mut self, d: usize) -> Result<()> {
        let e = d - 1;
        for mu in 0..self.keys.len() {
            for (t, &(nu, i)) in self.factors[mu].iter().enumerate() {
                let c_nu = &self.c[nu];
                let factor = |deg: usize| deg.is_multiple_of(i).then(|| &c_nu[deg / i]);
                let value = if t == 0 {
                    factor(e).cloned().unwrap_or_default()
                } else {
                    let prev = &self.partial[mu][t - 1];
                    let mut acc = BigInt::zero();
                    for (j, p) in prev[..=e].iter().enumerate() {
                        if let Some(f) = factor(e - j) {
                            if !p.is_zero() && !f.is_zero() {
                                acc += p * f;
                            }
                        }
                    }
                    acc
                };
                self.partial[mu][t][e] = value;
            }
            self.bbar[mu][d] = self.partial[mu].last().map(|p| p[e].clone()).unwrap_or_default();
        }

        for mu in 0..self.keys.len() {
            let mut arg = BigInt::zero();
            for m in (1..=d).filter(|&m| d.is_multiple_of(m)) {
                let nu = self.powers[m][mu];
                arg += &self.bbar[nu][d / m] * BigInt::from(d / m);
            }
            self.weighted_arg[mu][d] = arg;

            let c_mu = &self.c[mu];
            let mut acc = BigInt::zero();
            for j in 1..=d {
                let a = &self.weighted_arg[mu][j];
                if !a.is_zero() {
                    acc += a * &c_mu[d - j];
                }
            }
            let (q, r) = acc.div_rem(&BigInt::from(d));
            if !r.is_zero() {
                return Err(Error::NotIntegral {
                    degree: d,
                    value: Coefficient::new(acc, BigInt::from(d)),
                });
            }
            self.c[mu][d] = q;
        }
        Ok(())
    }
}

fn inv_z(p: &Partition) -> Coefficient {
    Coefficient::new(BigInt::one(), BigInt::from(p.z()))
}

/// Counts by number of hedra `n = 0..=order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultBundle {
    pub k: usize,
    pub order: usize,
    /// Unlabeled k-trees; `u[n]` is `K_{n,k}`.
    pub u: Vec<BigInt>,
    /// Color-orbits rooted at a hedron.
    pub b: Vec<BigInt>,
    /// Color-orbits rooted at a front.
    pub c: Vec<BigInt>,
    /// Color-orbits rooted at a hedron-front incidence.
    pub e: Vec<BigInt>,
}

pub fn solve_system(k: usize, order: usize) -> Result<SeriesCache> {
    SeriesCache::solve(k, order)
}

pub fn compute_b_lambda(cache: &SeriesCache, lambda: &Partition) -> Result<Series> {
    cache.b_lambda(lambda)
}

pub fn compute_b(cache: &SeriesCache) -> Result<Series> {
    cache.b()
}

pub fn compute_c(cache: &SeriesCache) -> Result<Series> {
    cache.c_total()
}

pub fn compute_e(cache: &SeriesCache) -> Result<Series> {
    cache.e()
}

/// Number of unlabeled k-trees with `n` hedra (`n + k` vertices) for every
/// `n <= order`, together with the three rooted series behind it.
///
/// ```
/// let counts = ktrees::count_ktrees(2, 6).unwrap();
/// let u: Vec<u64> = counts.u.iter().map(|c| c.try_into().unwrap()).collect();
/// assert_eq!(u, [1, 1, 1, 2, 5, 12, 39]);
/// ```
pub fn count_ktrees(k: usize, order: usize) -> Result<ResultBundle> {
    let cache = SeriesCache::solve(k, order)?;
    let b = cache.b()?;
    let c = cache.c_total()?;
    let e = cache.e()?;
    let u = b.add(&c)?.sub(&e)?;
    Ok(ResultBundle {
        k,
        order,
        u: u.integer_coeffs()?,
        b: b.integer_coeffs()?,
        c: c.integer_coeffs()?,
        e: e.integer_coeffs()?,
    })
}

/// `K_{n, max(n-1, 1)}` for `n <= order`; these values no longer change as
/// `k` grows.
pub fn stable_counts(order: usize) -> Result<Vec<BigInt>> {
    (0..=order)
        .map(|n| {
            let k = n.saturating_sub(1).max(1);
            Ok(count_ktrees(k, n)?.u.swap_remove(n))
        })
        .collect()
}

/// Convenience for tests and the CLI: is every entry nonnegative?
pub(crate) fn all_nonnegative(v: &[BigInt]) -> bool {
    v.iter().all(|c| c >= &BigInt::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn rooted_trees_for_k1() {
        // Rooted unlabeled trees with 0..=3 edges: 1, 1, 2, 4.
        let cache = solve_system(1, 3).unwrap();
        assert_eq!(cache.c(&p(&[1])).unwrap(), &Series::from_ints(&[1, 1, 2, 4]));
    }

    #[test]
    fn degree_zero() {
        for k in 1..=5 {
            let cache = solve_system(k, 0).unwrap();
            for mu in partitions_of(k) {
                assert_eq!(cache.c(&mu).unwrap(), &Series::one(0));
                assert_eq!(cache.bbar(&mu).unwrap(), &Series::zero(0));
            }
        }
    }

    #[test]
    fn bbar_leading_coefficient_k2() {
        let cache = solve_system(2, 3).unwrap();
        assert_eq!(cache.bbar(&p(&[1, 1])).unwrap().coeff(1), &Coefficient::one());
    }

    #[test]
    fn zero_k_is_rejected() {
        assert_eq!(solve_system(0, 3).unwrap_err(), Error::ZeroK);
        assert_eq!(count_ktrees(0, 3).unwrap_err(), Error::ZeroK);
    }

    #[test]
    fn b_lambda_k1() {
        let cache = solve_system(1, 5).unwrap();
        let b11 = cache.b_lambda(&p(&[1, 1])).unwrap();
        assert_eq!(b11.coeff(1), &Coefficient::one());
        // x * C_1(x^2) with C_1 = 1 + x + 2x^2 + ...
        let b2 = cache.b_lambda(&p(&[2])).unwrap();
        assert_eq!(b2, Series::from_ints(&[0, 1, 0, 1, 0, 2]));
    }

    #[test]
    fn b_lambda_rejects_wrong_size() {
        let cache = solve_system(2, 3).unwrap();
        assert_eq!(
            cache.b_lambda(&p(&[1, 1])).unwrap_err(),
            Error::WrongPartitionSize {
                partition: p(&[1, 1]),
                expected: 3
            }
        );
    }

    #[test]
    fn b_lambda_k2_three_cycle() {
        let cache = solve_system(2, 10).unwrap();
        let c11 = cache.c(&p(&[1, 1])).unwrap();
        let expected = c11.substitute_power(3).unwrap().shift(1);
        assert_eq!(cache.b_lambda(&p(&[3])).unwrap(), expected);
    }

    #[test]
    fn aggregates_at_degree_zero() {
        for k in 1..=4 {
            let cache = solve_system(k, 4).unwrap();
            assert!(cache.b().unwrap().coeff(0).is_zero());
            assert!(cache.c_total().unwrap().coeff(0).is_one());
            assert!(cache.e().unwrap().coeff(0).is_zero());
        }
        let cache = solve_system(2, 4).unwrap();
        assert!(cache.b().unwrap().coeff(1).is_one());
    }

    #[test]
    fn k1_aggregates_match_hand_formulas() {
        let n = 15;
        let cache = solve_system(1, n).unwrap();
        let c1 = cache.c(&p(&[1])).unwrap();
        let half = Coefficient::new(1.into(), 2.into());
        let b = c1
            .mul(c1)
            .unwrap()
            .add(&c1.substitute_power(2).unwrap())
            .unwrap()
            .shift(1)
            .scale(&half);
        assert_eq!(cache.b().unwrap(), b);
        assert_eq!(&cache.c_total().unwrap(), c1);
        assert_eq!(cache.e().unwrap(), c1.mul(c1).unwrap().shift(1));
    }

    #[test]
    fn k2_aggregates_match_hand_formulas() {
        let n = 15;
        let cache = solve_system(2, n).unwrap();
        let c11 = cache.c(&p(&[1, 1])).unwrap();
        let c2 = cache.c(&p(&[2])).unwrap();
        let half = Coefficient::new(1.into(), 2.into());
        let c = c11.add(c2).unwrap().scale(&half);
        assert_eq!(cache.c_total().unwrap(), c);
        let e = c11
            .pow(3)
            .add(&c11.substitute_power(2).unwrap().mul(c2).unwrap())
            .unwrap()
            .shift(1)
            .scale(&half);
        assert_eq!(cache.e().unwrap(), e);
        let sixth = Coefficient::new(1.into(), 6.into());
        let b = c11
            .pow(3)
            .add(
                &c11.substitute_power(2)
                    .unwrap()
                    .mul(c2)
                    .unwrap()
                    .scale(&Coefficient::from_integer(3.into())),
            )
            .unwrap()
            .add(
                &c11.substitute_power(3)
                    .unwrap()
                    .scale(&Coefficient::from_integer(2.into())),
            )
            .unwrap()
            .shift(1)
            .scale(&sixth);
        assert_eq!(cache.b().unwrap(), b);
    }

    #[test]
    fn table_rows() {
        assert_eq!(
            count_ktrees(1, 9).unwrap().u,
            ints(&[1, 1, 1, 2, 3, 6, 11, 23, 47, 106])
        );
        assert_eq!(
            count_ktrees(2, 9).unwrap().u,
            ints(&[1, 1, 1, 2, 5, 12, 39, 136, 529, 2171])
        );
        assert_eq!(
            count_ktrees(4, 9).unwrap().u,
            ints(&[1, 1, 1, 2, 5, 15, 64, 331, 2150, 15817])
        );
    }

    #[test]
    fn stable_row() {
        assert_eq!(stable_counts(0).unwrap(), ints(&[1]));
        let stable = stable_counts(9).unwrap();
        assert_eq!(stable, ints(&[1, 1, 1, 2, 5, 15, 64, 342, 2344, 19137]));
        let k5 = count_ktrees(5, 9).unwrap();
        assert_eq!(&stable[8] - &k5.u[8], BigInt::from(23));
    }

    #[test]
    fn fixed_tree_series_are_nonnegative_integers() {
        for k in 1..=4 {
            let cache = solve_system(k, 12).unwrap();
            for s in cache.c_table().values().chain(cache.bbar_table().values()) {
                assert!(all_nonnegative(&s.integer_coeffs().unwrap()));
            }
        }
    }
}
