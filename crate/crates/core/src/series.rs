//! Truncated formal power series in one variable with exact rational
//! coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `x^0 ..= x^N`. Every
//! binary operation requires both operands to carry the same order; mixing
//! orders is reported as [`Error::OrderMismatch`] instead of being coerced.
//! Nothing above the order is ever read or written, so a result of order `N`
//! is exact through degree `N`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient type. Always kept in lowest terms with a positive
/// denominator.
pub type Coefficient = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Coefficient>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Coefficient::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, Coefficient::one(), order)
    }

    /// The indeterminate `x` (the zero series at order 0).
    pub fn x(order: usize) -> Self {
        Self::monomial(1, Coefficient::one(), order)
    }

    /// `c * x^degree`, or zero if the degree lies above the order.
    pub fn monomial(degree: usize, c: Coefficient, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Builds a series of the given order from leading coefficients. Missing
    /// coefficients are zero; extra ones are dropped.
    pub fn from_coeffs<I, C>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Coefficient>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    /// Integer coefficients; the order is `coeffs.len() - 1`.
    ///
    /// ```
    /// use ktrees::Series;
    /// let s = Series::from_ints(&[1, 2, 1]);
    /// assert_eq!(s.order(), 2);
    /// assert_eq!(s.to_string(), "1 + 2x + x^2 + O(x^3)");
    /// ```
    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self::from_coeffs(
            coeffs.len() - 1,
            coeffs.iter().map(|&c| Coefficient::from_integer(BigInt::from(c))),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Coefficient of `x^degree`. Panics above the order.
    pub fn coeff(&self, degree: usize) -> &Coefficient {
        &self.coeffs[degree]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-truncates (or zero-pads) to a different order.
    pub fn with_order(&self, order: usize) -> Self {
        let mut coeffs: Vec<Coefficient> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Coefficient::zero());
        Series { coeffs }
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Series { coeffs })
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: usize) -> Series {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    pub fn scale(&self, c: &Coefficient) -> Series {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^by`, keeping the order (the top `by` coefficients
    /// fall off).
    pub fn shift(&self, by: usize) -> Series {
        let order = self.order();
        let mut out = Self::zero(order);
        for d in by..=order {
            out.coeffs[d] = self.coeffs[d - by].clone();
        }
        out
    }

    /// The operator `f(x) -> f(x^m)` at the same order.
    ///
    /// ```
    /// use ktrees::Series;
    /// let f = Series::from_ints(&[1, 1, 1, 0, 0]);
    /// assert_eq!(f.substitute_power(2).unwrap(), Series::from_ints(&[1, 0, 1, 0, 1]));
    /// ```
    pub fn substitute_power(&self, m: usize) -> Result<Series> {
        if m == 0 {
            return Err(Error::ZeroPower);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        for d in 0..=order / m {
            out.coeffs[d * m] = self.coeffs[d].clone();
        }
        Ok(out)
    }

    /// Truncated exponential of a series with zero constant term.
    ///
    /// Uses `E' = f' E`, i.e. `n E[n] = sum_{j=1..n} j f[j] E[n-j]`, which
    /// needs `O(N^2)` exact operations.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(self.coeffs[0].clone()));
        }
        let order = self.order();
        let weighted: Vec<(usize, Coefficient)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c * BigInt::from(j)))
            .collect();
        let mut out = Self::zero(order);
        out.coeffs[0] = Coefficient::one();
        for n in 1..=order {
            let mut acc = Coefficient::zero();
            for (j, wj) in weighted.iter().take_while(|(j, _)| *j <= n) {
                let e = &out.coeffs[n - j];
                if !e.is_zero() {
                    acc += wj * e;
                }
            }
            out.coeffs[n] = acc / BigInt::from(n);
        }
        Ok(out)
    }

    /// All coefficients as integers, failing on the first non-integer.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(degree, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotIntegral {
                        degree,
                        value: c.clone(),
                    })
                }
            })
            .collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        if abs.is_integer() {
                            write!(f, "{abs}")?;
                        } else {
                            write!(f, "({abs})")?;
                        }
                    }
                    if d == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{d}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}
