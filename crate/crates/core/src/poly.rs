//! Univariate polynomials in the deformation parameter λ over the
//! rationals.
//!
//! This is the coefficient ring in which the degenerate number families
//! live: keeping λ symbolic means every identity check is an exact
//! polynomial equality, and numeric instances fall out by evaluation.
//!
//! Text format: sum of terms `c`, `c*l`, `c*l^k` with `l` denoting λ,
//! e.g. `1/6 + 1/2*l` or `-l^2 - 1/2*l`.

use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::rational::parse_rational;
use crate::Rational;

/// Polynomial in λ, coefficients stored by ascending degree.
///
/// The zero polynomial is the empty list; otherwise the highest stored
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        LambdaPoly::new(vec![c])
    }

    /// c·λ^k
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return LambdaPoly::default();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        LambdaPoly { coeffs }
    }

    /// λ^k
    pub fn lambda_pow(k: usize) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of λ^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The constant term as a rational, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// p(−λ): flips the sign of every odd-degree coefficient.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        LambdaPoly { coeffs }
    }

    /// Exact Horner evaluation at a rational λ.
    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return LambdaPoly::default();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

impl From<Rational> for LambdaPoly {
    fn from(c: Rational) -> Self {
        LambdaPoly::constant(c)
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: LambdaPoly) -> LambdaPoly {
        &self + &rhs
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LambdaPoly::new(coeffs)
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: LambdaPoly) -> LambdaPoly {
        &self - &rhs
    }
}

impl Sub for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        LambdaPoly::new(coeffs)
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        &self * &rhs
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LambdaPoly::default();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::new(coeffs)
    }
}

impl Zero for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LambdaPoly {
    fn one() -> Self {
        LambdaPoly::constant(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "l")?,
                (1, false) => write!(f, "{mag}*l")?,
                (_, true) => write!(f, "l^{k}")?,
                (_, false) => write!(f, "{mag}*l^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed lambda-polynomial {0:?}")]
pub struct ParsePolyError(String);

impl FromStr for LambdaPoly {
    type Err = ParsePolyError;

    /// Parse the text format produced by `Display`. Whitespace around
    /// terms and operators is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParsePolyError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // Split into signed terms at '+'/'-' that are not inside a term.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut seen_any = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
                seen_any = true;
            } else if (ch == '+' || ch == '-') && !seen_any && cur.is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
                seen_any = true;
            } else {
                cur.push(ch);
                seen_any = true;
            }
        }
        if cur.is_empty() {
            return Err(err());
        }
        terms.push((neg, cur));

        let mut acc = LambdaPoly::default();
        for (negated, term) in terms {
            let (coeff_str, power) = match term.split_once('l') {
                None => (term.as_str(), 0usize),
                Some((c, rest)) => {
                    let k = if rest.is_empty() {
                        1usize
                    } else {
                        let digits = rest.strip_prefix('^').ok_or_else(err)?;
                        digits.parse::<usize>().map_err(|_| err())?
                    };
                    let c = c.strip_suffix('*').unwrap_or(c);
                    (c, k)
                }
            };
            let coeff = if coeff_str.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_str).map_err(|_| err())?
            };
            let signed = if negated { -coeff } else { coeff };
            acc = &acc + &LambdaPoly::monomial(signed, power);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn poly(s: &str) -> LambdaPoly {
        s.parse().unwrap()
    }

    #[test]
    fn reflect_flips_odd_coefficients() {
        // 1/6 + (1/2)λ → 1/6 − (1/2)λ
        assert_eq!(poly("1/6 + 1/2*l").reflect(), poly("1/6 - 1/2*l"));
        // even polynomials are fixed
        assert_eq!(poly("1").reflect(), poly("1"));
        assert_eq!(poly("l^2").reflect(), poly("l^2"));
    }

    #[test]
    fn reflect_is_an_involution() {
        let p = poly("2 - 3*l + 1/7*l^2 + l^5");
        assert_eq!(p.reflect().reflect(), p);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly("1/6 + 1/2*l").eval(&rat("0")), rat("1/6"));
        assert_eq!(poly("l^2").eval(&rat("3")), rat("9"));
        // the degenerate Bernoulli value at index 3, evaluated at λ = 1
        assert_eq!(poly("-l^2 - 1/2*l").eval(&rat("1")), rat("-3/2"));
    }

    #[test]
    fn zero_is_the_empty_list() {
        assert!(LambdaPoly::new(vec![Rational::zero(); 3]).is_zero());
        assert_eq!(LambdaPoly::zero().degree(), None);
        assert_eq!((&poly("l") - &poly("l")).to_string(), "0");
    }

    #[test]
    fn display_format() {
        assert_eq!(poly("1/6+1/2*l").to_string(), "1/6 + 1/2*l");
        assert_eq!(poly("-l^2-1/2*l").to_string(), "-1/2*l - l^2");
        assert_eq!(LambdaPoly::lambda_pow(3).to_string(), "l^3");
        assert_eq!(LambdaPoly::constant(rat("-2")).to_string(), "-2");
    }

    #[test]
    fn parse_rejects_junk() {
        for s in ["", "l^", "1**l", "x", "1/0*l", "l^-2", "1+"] {
            assert!(s.parse::<LambdaPoly>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn ring_identities_spot_checks() {
        let a = poly("1 - l");
        let b = poly("1 + l");
        assert_eq!(&a * &b, poly("1 - l^2"));
        assert_eq!(&a + &b, poly("2"));
        assert!((&a - &a).is_zero());
        assert_eq!(
            &poly("1/2 - 2*l") * &LambdaPoly::one(),
            poly("1/2 - 2*l")
        );
    }

    #[test]
    fn as_constant_detects_degree() {
        assert_eq!(LambdaPoly::zero().as_constant(), Some(Rational::zero()));
        assert_eq!(poly("5/3").as_constant(), Some(rat("5/3")));
        assert_eq!(poly("1 + l").as_constant(), None);
    }
}
