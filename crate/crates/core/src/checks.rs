//! Verification suites shared by the `verify` subcommand and the tests.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::closedforms;
use crate::engine::{all_nonnegative, count_ktrees, stable_counts, SeriesCache};
use crate::error::Result;
use crate::oracle::{self, ColorPermutation};
use crate::partitions::{partitions_of, Partition};
use crate::reference::TABLE1;
use crate::series::{Coefficient, Series};

pub const CLOSEDFORM_ORDER: usize = 30;
pub const ORACLE_MAX_K: usize = 3;
pub const ORACLE_MAX_N: usize = 6;
pub const DISSYMMETRY_MAX_K: usize = 6;
pub const DISSYMMETRY_ORDER: usize = 40;
pub const STABILITY_MAX_N: usize = 12;
pub const STABILITY_MAX_K: usize = 14;

type Formula = fn(usize) -> Result<Series>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Reference,
    Closedform,
    Oracle,
    Dissymmetry,
    Stability,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

pub fn run(mode: Mode) -> Result<Vec<Check>> {
    Ok(match mode {
        Mode::Reference => reference()?,
        Mode::Closedform => closedform()?,
        Mode::Oracle => oracle()?,
        Mode::Dissymmetry => dissymmetry()?,
        Mode::Stability => stability()?,
        Mode::All => {
            let mut all = reference()?;
            all.extend(closedform()?);
            all.extend(oracle()?);
            all.extend(dissymmetry()?);
            all.extend(stability()?);
            all
        }
    })
}

fn to_big(row: &[u64]) -> Vec<BigInt> {
    row.iter().map(|&c| BigInt::from(c)).collect()
}

fn matching(a: &[BigInt], b: &[BigInt]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x == y).count()
}

/// Every cell of the embedded table against the engine.
pub fn reference() -> Result<Vec<Check>> {
    let max_n = TABLE1.max_n();
    let mut checks = Vec::new();
    for k in 1..=TABLE1.max_k() {
        let expected = to_big(TABLE1.row(k).expect("row"));
        let got = count_ktrees(k, max_n)?.u;
        let hits = matching(&expected, &got);
        checks.push(Check::new(
            format!("reference k={k}"),
            hits == expected.len(),
            format!("{hits}/{} cells match", expected.len()),
        ));
    }
    let expected = to_big(&TABLE1.stable);
    let got = stable_counts(max_n)?;
    let hits = matching(&expected, &got);
    checks.push(Check::new(
        "reference stable",
        hits == expected.len(),
        format!("{hits}/{} cells match", expected.len()),
    ));
    Ok(checks)
}

fn first_difference(a: &Series, b: &[BigInt]) -> Option<usize> {
    let a = a.integer_coeffs().ok()?;
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y)
}

fn agreement(name: String, formula: &Series, engine: &[BigInt]) -> Check {
    match first_difference(formula, engine) {
        None if formula.integer_coeffs().is_ok() => {
            Check::new(name, true, format!("exact through x^{}", engine.len() - 1))
        }
        None => Check::new(name, false, "formula has a non-integer coefficient"),
        Some(d) => Check::new(name, false, format!("first difference at x^{d}")),
    }
}

/// The explicit `k <= 4` formulas against the general engine.
pub fn closedform() -> Result<Vec<Check>> {
    let n = CLOSEDFORM_ORDER;
    let formulas: [(usize, Formula); 4] = [
        (1, closedforms::otter_u),
        (2, closedforms::twotree_u),
        (3, closedforms::threetree_u),
        (4, closedforms::fourtree_u),
    ];
    let mut checks = Vec::new();
    for (k, formula) in formulas {
        let engine = count_ktrees(k, n)?.u;
        checks.push(agreement(format!("closedform k={k}"), &formula(n)?, &engine));
    }
    let (c11, c2) = closedforms::twotree_parts(n)?;
    let cache = SeriesCache::solve(2, n)?;
    for (parts, series) in [(vec![1, 1], c11), (vec![2], c2)] {
        let mu = Partition::new(parts);
        let same = cache.c(&mu) == Some(&series);
        checks.push(Check::new(
            format!("closedform C_{mu} k=2"),
            same,
            if same {
                "matches engine"
            } else {
                "differs from engine"
            },
        ));
    }
    Ok(checks)
}

/// Brute-force orbit counts and the Burnside identity on them.
pub fn oracle() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 1..=ORACLE_MAX_K {
        let engine = count_ktrees(k, ORACLE_MAX_N)?.u;
        let perms = ColorPermutation::all(k + 1);
        let group_order = perms.len();
        for (n, expected) in engine.iter().enumerate() {
            let orbits = oracle::orbit_count(k, n)?;
            checks.push(Check::new(
                format!("oracle k={k} n={n}"),
                BigInt::from(orbits) == *expected,
                format!("brute force {orbits}, engine {expected}"),
            ));
            let fixed_total: usize = perms
                .iter()
                .map(|p| oracle::fixed_count(k, n, p))
                .sum::<Result<usize>>()?;
            checks.push(Check::new(
                format!("burnside k={k} n={n}"),
                fixed_total == group_order * orbits,
                format!("sum of fixed {fixed_total}, {group_order} x {orbits} orbits"),
            ));
        }
    }
    Ok(checks)
}

/// `U = B + C - E` with all four integral, plus a second route to `U` by
/// averaging fixed unrooted trees over cycle types.
pub fn dissymmetry() -> Result<Vec<Check>> {
    let n = DISSYMMETRY_ORDER;
    let mut checks = Vec::new();
    for k in 1..=DISSYMMETRY_MAX_K {
        let bundle = count_ktrees(k, n)?;
        let identity = (0..=n).all(|d| bundle.u[d] == &bundle.b[d] + &bundle.c[d] - &bundle.e[d]);
        let nonneg = all_nonnegative(&bundle.u);

        let cache = SeriesCache::solve(k, n)?;
        let mut burnside = Series::zero(n);
        for lambda in partitions_of(k + 1) {
            let weight = Coefficient::new(BigInt::from(1), BigInt::from(lambda.z()));
            burnside = burnside.add(&cache.u_lambda(&lambda)?.scale(&weight))?;
        }
        let second_route = burnside.integer_coeffs().ok().as_deref() == Some(&bundle.u[..]);

        checks.push(Check::new(
            format!("dissymmetry k={k} N={n}"),
            identity && nonneg && second_route,
            format!(
                "U=B+C-E {}, U>=0 {}, averaged fixed trees {}",
                yes(identity),
                yes(nonneg),
                yes(second_route)
            ),
        ));
    }
    Ok(checks)
}

fn yes(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "FAILS"
    }
}

/// `K_{n,k}` for `k = 1..=max_k` and `n <= max_n`, indexed `[k - 1][n]`.
pub fn grid(max_k: usize, max_n: usize) -> Result<Vec<Vec<BigInt>>> {
    (1..=max_k).map(|k| Ok(count_ktrees(k, max_n)?.u)).collect()
}

/// Stability in `k` once `k >= n - 1`, and
/// `K_{n,n-2} - K_{n,n-3} = K_{n-1,1}` for `n >= 4`.
pub fn stability() -> Result<Vec<Check>> {
    let rows = grid(STABILITY_MAX_K, STABILITY_MAX_N)?;
    let at = |n: usize, k: usize| &rows[k - 1][n];
    let mut checks = Vec::new();
    for n in 0..=STABILITY_MAX_N {
        let ks = (n.saturating_sub(1).max(2)..=STABILITY_MAX_K).collect_vec();
        let broken = ks.iter().find(|&&k| at(n, k) != at(n, k - 1));
        checks.push(Check::new(
            format!("stability n={n}"),
            broken.is_none(),
            match broken {
                None => format!(
                    "K_{{{n},k}} = {} for k = {}..={STABILITY_MAX_K}",
                    at(n, ks[0] - 1),
                    ks[0] - 1
                ),
                Some(k) => format!(
                    "K_{{{n},{k}}} = {} but K_{{{n},{}}} = {}",
                    at(n, *k),
                    k - 1,
                    at(n, k - 1)
                ),
            },
        ));
    }
    for n in 4..=STABILITY_MAX_N {
        let diff = at(n, n - 2) - at(n, n - 3);
        let trees = at(n - 1, 1);
        checks.push(Check::new(
            format!("difference n={n}"),
            &diff == trees,
            format!(
                "K_{{{n},{}}} - K_{{{n},{}}} = {diff}, K_{{{},1}} = {trees}",
                n - 2,
                n - 3,
                n - 1
            ),
        ));
    }
    Ok(checks)
}
