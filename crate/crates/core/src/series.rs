//! Truncated formal power series over an exact coefficient ring.
//!
//! Coefficients are stored as ordinary (OGF) values; the n!-weighted
//! coefficients in which number families are usually stated are read off
//! through [`Series::coeff_egf`] at the reporting boundary. Binary
//! operations truncate to the minimum of the two orders, matching formal
//! series semantics. Division is forward substitution — O(K²) ring
//! operations, exact, no FFT.

use std::fmt;

use crate::coeff::{factorial_in, Coeff};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series division requires an invertible constant term in the denominator")]
    NonInvertibleConstant,
    #[error("coefficient index {index} exceeds the series order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("series has a nonzero constant term; cannot factor out the variable")]
    NonzeroConstantTerm,
}

/// Outcome of comparing two series coefficient-wise up to some index.
#[derive(Debug, Clone, PartialEq)]
pub enum MatchReport<C> {
    Match,
    Mismatch {
        index: usize,
        lhs: C,
        rhs: C,
    },
}

impl<C> MatchReport<C> {
    pub fn is_match(&self) -> bool {
        matches!(self, MatchReport::Match)
    }
}

/// A power series truncated at a fixed order K, holding the ordinary
/// coefficients c_0..c_K of the series variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    /// Series with the given ordinary coefficients; order = len − 1.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        Series { coeffs }
    }

    /// Build c_n = f(n) for n = 0..=order.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| C::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::from_fn(order, |n| if n == 0 { C::one() } else { C::zero() })
    }

    /// The constant series c·1.
    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// n!·c_n, the exponential-generating-function coefficient.
    pub fn coeff_egf(&self, n: usize) -> Result<C, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::IndexOutOfRange {
                index: n,
                order: self.order(),
            });
        }
        Ok(factorial_in::<C>(n) * self.coeffs[n].clone())
    }

    pub fn truncate(&self, order: usize) -> Series<C> {
        let upto = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=upto].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| self.coeffs[n].clone() + rhs.coeffs[n].clone())
    }

    pub fn sub(&self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| self.coeffs[n].clone() - rhs.coeffs[n].clone())
    }

    pub fn neg(&self) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Cauchy product, truncated to the minimum order.
    pub fn mul(&self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| {
            let mut acc = C::zero();
            for i in 0..=n {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * b.clone();
            }
            acc
        })
    }

    /// Multiply every coefficient by a fixed ring element.
    pub fn mul_scalar(&self, c: &C) -> Series<C> {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Quotient q with q·den = num up to the common order. Fails unless
    /// the denominator's constant term is a unit of the ring; series
    /// with a pole at 0 must have the variable factored out first.
    pub fn div(&self, den: &Series<C>) -> Result<Series<C>, SeriesError> {
        let inv0 = den.coeffs[0]
            .try_inv()
            .ok_or(SeriesError::NonInvertibleConstant)?;
        let order = self.order().min(den.order());
        let mut q: Vec<C> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                if den.coeffs[i].is_zero() || q[n - i].is_zero() {
                    continue;
                }
                acc = acc - den.coeffs[i].clone() * q[n - i].clone();
            }
            q.push(acc * inv0.clone());
        }
        Ok(Series { coeffs: q })
    }

    /// Substitute variable ↦ c·variable: c_n becomes cⁿ·c_n.
    pub fn scale_var(&self, c: &C) -> Series<C> {
        let mut power = C::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| {
                if n > 0 {
                    power = power.clone() * c.clone();
                }
                a.clone() * power.clone()
            })
            .collect();
        Series { coeffs }
    }

    /// Divide by the variable; requires c_0 = 0 and drops the order by 1.
    pub fn shift_down(&self) -> Result<Series<C>, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        if self.coeffs.len() == 1 {
            return Ok(Series {
                coeffs: vec![C::zero()],
            });
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiply by the variable; raises the order by 1.
    pub fn shift_up(&self) -> Series<C> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Compare c_0..c_upto; on mismatch reports the smallest failing
    /// index with both coefficients.
    pub fn eq_upto(&self, rhs: &Series<C>, upto: usize) -> Result<MatchReport<C>, SeriesError> {
        let order = self.order().min(rhs.order());
        if upto > order {
            return Err(SeriesError::IndexOutOfRange {
                index: upto,
                order,
            });
        }
        for n in 0..=upto {
            if self.coeffs[n] != rhs.coeffs[n] {
                return Ok(MatchReport::Mismatch {
                    index: n,
                    lhs: self.coeffs[n].clone(),
                    rhs: rhs.coeffs[n].clone(),
                });
            }
        }
        Ok(MatchReport::Match)
    }

    /// Map the coefficients into another ring.
    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// JSON rendering: ordered coefficient array of strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl<C: Coeff> fmt::Display for Series<C> {
    /// "c0 + c1*a + c2*a^2 + ..." with compound coefficients
    /// parenthesized; zero terms are skipped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let rendered = c.to_string();
            let atomic = !rendered.contains(' ');
            match n {
                0 => write!(f, "{rendered}")?,
                _ => {
                    if c.is_one() {
                        write!(f, "")?;
                    } else if atomic {
                        write!(f, "{rendered}*")?;
                    } else {
                        write!(f, "({rendered})*")?;
                    }
                    if n == 1 {
                        write!(f, "a")?;
                    } else {
                        write!(f, "a^{n}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;
    use crate::{LambdaPoly, Rational};
    use num_traits::{One, Zero};

    fn rat(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn rs(coeffs: &[&str]) -> Series<Rational> {
        Series::from_coeffs(coeffs.iter().map(|s| rat(s)).collect())
    }

    #[test]
    fn add_and_truncation() {
        let a = rs(&["1", "1"]);
        let b = rs(&["1", "-1", "5"]);
        assert_eq!(a.add(&b), rs(&["2", "0"]));
        let z = Series::<Rational>::zero(1);
        assert_eq!(a.add(&z), rs(&["0", "0"]).add(&a));
    }

    #[test]
    fn mul_examples() {
        // (1 + t)(1 − t) = 1 − t²
        let p = rs(&["1", "1", "0"]);
        let m = rs(&["1", "-1", "0"]);
        assert_eq!(p.mul(&m), rs(&["1", "0", "-1"]));
        // geometric series times (1 − t) telescopes to 1
        let geo = Series::from_fn(6, |_| Rational::one());
        let lin = rs(&["1", "-1", "0", "0", "0", "0", "0"]);
        assert_eq!(geo.mul(&lin), Series::one(6));
    }

    #[test]
    fn div_geometric() {
        let one = Series::<Rational>::one(5);
        let den = rs(&["1", "-1", "0", "0", "0", "0"]);
        let q = one.div(&den).unwrap();
        assert_eq!(q, Series::from_fn(5, |_| Rational::one()));
    }

    #[test]
    fn div_gregory_coefficients() {
        // log(1+t)/t = Σ (−1)^k t^k/(k+1); its reciprocal carries the
        // ordinary coefficients of t/log(1+t).
        let den = Series::from_fn(4, |k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::new(sign.into(), ((k + 1) as i64).into())
        });
        let q = Series::one(4).div(&den).unwrap();
        assert_eq!(
            q.coeffs().to_vec(),
            vec![rat("1"), rat("1/2"), rat("-1/12"), rat("1/24"), rat("-19/720")]
        );
        // round-trip
        assert_eq!(q.mul(&den), Series::one(4));
    }

    #[test]
    fn div_self_is_one() {
        let s = rs(&["2", "7", "-1/3", "4"]);
        assert_eq!(s.div(&s).unwrap(), Series::one(3));
    }

    #[test]
    fn div_rejects_non_unit_constant() {
        let num = Series::<LambdaPoly>::one(3);
        let den = Series::from_coeffs(vec![
            LambdaPoly::lambda_pow(1),
            LambdaPoly::one(),
            LambdaPoly::zero(),
            LambdaPoly::zero(),
        ]);
        assert_eq!(num.div(&den), Err(SeriesError::NonInvertibleConstant));
    }

    #[test]
    fn scale_var_examples() {
        let s = rs(&["1", "1", "1"]);
        assert_eq!(s.scale_var(&Rational::zero()), rs(&["1", "0", "0"]));
        assert_eq!(s.scale_var(&Rational::one()), s);
        // t ↦ λt on the bare variable
        let t = Series::from_coeffs(vec![LambdaPoly::zero(), LambdaPoly::one()]);
        let scaled = t.scale_var(&LambdaPoly::lambda_pow(1));
        assert_eq!(
            scaled.coeffs().to_vec(),
            vec![LambdaPoly::zero(), LambdaPoly::lambda_pow(1)]
        );
    }

    #[test]
    fn eq_upto_reports_first_mismatch() {
        let a = rs(&["1", "1", "0"]);
        let b = rs(&["1", "1", "1"]);
        assert!(a.eq_upto(&b, 1).unwrap().is_match());
        let c = rs(&["1", "-1"]);
        match a.eq_upto(&c, 1).unwrap() {
            MatchReport::Mismatch { index, lhs, rhs } => {
                assert_eq!(index, 1);
                assert_eq!(lhs, rat("1"));
                assert_eq!(rhs, rat("-1"));
            }
            MatchReport::Match => panic!("expected mismatch"),
        }
        assert!(a.eq_upto(&c, 2).is_err());
    }

    #[test]
    fn egf_weighting() {
        let geo = Series::from_fn(4, |_| Rational::one());
        assert_eq!(geo.coeff_egf(0).unwrap(), rat("1"));
        assert_eq!(geo.coeff_egf(3).unwrap(), rat("6"));
        assert!(geo.coeff_egf(5).is_err());
    }

    #[test]
    fn shifts_are_inverse_on_zero_constant() {
        let s = rs(&["0", "1", "1/2"]);
        let down = s.shift_down().unwrap();
        assert_eq!(down.coeffs().to_vec(), vec![rat("1"), rat("1/2")]);
        assert_eq!(down.shift_up(), s);
        assert!(rs(&["1", "0"]).shift_down().is_err());
    }

    #[test]
    fn display_renders_compound_coefficients() {
        let s: Series<LambdaPoly> = Series::from_coeffs(vec![
            LambdaPoly::from_int(2),
            "1/2 + l".parse().unwrap(),
            LambdaPoly::zero(),
            LambdaPoly::lambda_pow(1),
        ]);
        assert_eq!(s.to_string(), "2 + (1/2 + l)*a + l*a^3");
        assert_eq!(Series::<Rational>::zero(2).to_string(), "0");
    }
}
