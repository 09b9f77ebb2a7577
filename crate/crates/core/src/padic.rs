//! Finite-level simulation of the Volkenborn and fermionic p-adic
//! integrals for polynomial integrands.
//!
//! The level-N Riemann sums are never iterated term by term: both the
//! plain sum (1/p^N)·Σ_{x<p^N} f(x) and the alternating sum
//! Σ_{x<p^N} (−1)^x f(x) reduce to closed-form power sums, so level 12
//! costs the same as level 1. The alternating case splits x into even
//! and odd and falls back on the same Faulhaber formula; since p^N is
//! odd the trailing sign is always +.
//!
//! Division by p^N happens on exact rationals before any p-adic
//! truncation, so finite precision enters only when a value is
//! converted to a [`PadicNumber`] residue or when two residues are
//! compared.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{is_odd_prime, p_valuation, power_of_prime, Valuation};
use crate::special::{
    classical_numbers, degenerate_bernoulli, degenerate_euler, stirling_first, ClassicalKind,
};
use crate::Rational;

/// Largest polynomial degree the closed-form sums accept.
pub const MAX_DEGREE: usize = 12;
/// Largest falling-factorial index accepted by convergence reports.
pub const MAX_CONVERGENCE_INDEX: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PadicError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("precision must be at least 1 significant digit")]
    PrecisionZero,
    #[error("level N must be at least 1")]
    InvalidLevel,
    #[error("levels must be ascending")]
    LevelsNotAscending,
    #[error("integrand degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("falling-factorial index {n} exceeds the supported maximum {max}")]
    IndexTooLarge { n: usize, max: usize },
    #[error("lambda = {lambda} is not a p-adic integer at p = {p}")]
    LambdaNotPadicInteger { lambda: String, p: u64 },
    #[error("this operation requires a monomial-basis integrand")]
    MonomialBasisRequired,
}

/// The two measures under simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Volkenborn,
    Fermionic,
}

impl Measure {
    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Volkenborn => "volkenborn",
            Measure::Fermionic => "fermionic",
        }
    }

    pub fn parse(s: &str) -> Option<Measure> {
        match s {
            "volkenborn" => Some(Measure::Volkenborn),
            "fermionic" => Some(Measure::Fermionic),
            _ => None,
        }
    }
}

/// Fixed odd prime and working precision (significant p-adic digits).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicContext {
    p: u64,
    precision: u32,
    modulus: BigInt,
}

impl PadicContext {
    pub fn new(p: u64, precision: u32) -> Result<Self, PadicError> {
        if !is_odd_prime(p) {
            return Err(PadicError::NotOddPrime(p));
        }
        if precision == 0 {
            return Err(PadicError::PrecisionZero);
        }
        Ok(PadicContext {
            p,
            precision,
            modulus: BigInt::from(p).pow(precision),
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    fn level_modulus(&self, level: u32) -> BigInt {
        BigInt::from(self.p).pow(level)
    }
}

/// A p-adic value p^valuation·unit at the context precision; zero is
/// the infinite valuation with a zero residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicNumber {
    valuation: Valuation,
    unit: BigUint,
}

impl PadicNumber {
    pub fn zero() -> Self {
        PadicNumber {
            valuation: Valuation::Infinite,
            unit: BigUint::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_infinite()
    }

    pub fn valuation(&self) -> Valuation {
        self.valuation
    }

    /// Unit residue in [1, p^precision − 1], coprime to p (0 for zero).
    pub fn unit(&self) -> &BigUint {
        &self.unit
    }
}

/// Which basis an integrand is expressed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegrandBasis {
    /// Σ c_k·x^k, stored by descending degree with nonzero coefficients.
    Monomial(Vec<(Rational, usize)>),
    /// The falling factorial (x)_{n,λ} at a fixed rational λ.
    Falling { n: usize, lambda: Rational },
}

impl IntegrandBasis {
    /// Normalize monomial terms: merge duplicate degrees, drop zeros,
    /// sort by descending degree.
    pub fn monomial(terms: Vec<(Rational, usize)>) -> Self {
        let mut merged: Vec<(Rational, usize)> = Vec::new();
        for (c, d) in terms {
            match merged.iter_mut().find(|(_, e)| *e == d) {
                Some((acc, _)) => *acc += c,
                None => merged.push((c, d)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        merged.sort_by(|a, b| b.1.cmp(&a.1));
        IntegrandBasis::Monomial(merged)
    }

    pub fn degree(&self) -> usize {
        match self {
            IntegrandBasis::Monomial(terms) => terms.first().map_or(0, |(_, d)| *d),
            IntegrandBasis::Falling { n, .. } => *n,
        }
    }
}

/// An integrand together with the measure it is to be integrated
/// against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrandSpec {
    pub basis: IntegrandBasis,
    pub measure: Measure,
}

/// Dense polynomial in x over the rationals; the working form every
/// integrand is lowered to.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    #[cfg(test)]
    fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// f(a·y + b) expanded in y, by Horner over polynomials.
    fn compose_affine(&self, a: i64, b: i64) -> RatPoly {
        let mut acc: Vec<Rational> = Vec::new();
        for c in self.coeffs.iter().rev() {
            // acc = acc·(a·y + b) + c
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (k, v) in acc.iter().enumerate() {
                next[k] += v * Rational::from_integer(b.into());
                next[k + 1] += v * Rational::from_integer(a.into());
            }
            if next.is_empty() {
                next.push(Rational::zero());
            }
            next[0] += c;
            acc = next;
        }
        RatPoly::new(acc)
    }
}

/// Lower an integrand to monomial form, checking the degree cap and,
/// for the falling basis, that λ is a p-adic integer at the context
/// prime (so the sums take p-integral values up to bounded
/// denominators).
fn lower(basis: &IntegrandBasis, ctx: &PadicContext) -> Result<RatPoly, PadicError> {
    let degree = basis.degree();
    if degree > MAX_DEGREE {
        return Err(PadicError::DegreeTooLarge {
            degree,
            max: MAX_DEGREE,
        });
    }
    match basis {
        IntegrandBasis::Monomial(terms) => {
            let mut coeffs = vec![Rational::zero(); degree + 1];
            for (c, d) in terms {
                coeffs[*d] += c;
            }
            Ok(RatPoly::new(coeffs))
        }
        IntegrandBasis::Falling { n, lambda } => {
            let v = p_valuation(lambda, ctx.p).expect("context prime is odd");
            if matches!(v, Valuation::Finite(w) if w < 0) {
                return Err(PadicError::LambdaNotPadicInteger {
                    lambda: lambda.to_string(),
                    p: ctx.p,
                });
            }
            // (x)_{n,λ} = Σ_k s(n,k)·λ^{n−k}·x^k
            let mut coeffs = vec![Rational::zero(); n + 1];
            let mut lambda_power = Rational::one();
            for k in (0..=*n).rev() {
                let s = Rational::from_integer(stirling_first(*n, k));
                coeffs[k] = s * &lambda_power;
                lambda_power *= lambda;
            }
            Ok(RatPoly::new(coeffs))
        }
    }
}

/// Σ_{x=0}^{upper−1} x^k by the Bernoulli closed form.
fn power_sum(k: usize, upper: &BigInt, bernoulli: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (j, b) in bernoulli.iter().enumerate().take(k + 1) {
        if b.is_zero() {
            continue;
        }
        let binom = num_integer::binomial(BigInt::from(k + 1), BigInt::from(j));
        let upper_power = upper.pow((k + 1 - j) as u32);
        acc += Rational::from_integer(binom * upper_power) * b;
    }
    acc / Rational::from_integer((k as i64 + 1).into())
}

/// Σ_{x=0}^{upper−1} f(x).
fn sum_poly(f: &RatPoly, upper: &BigInt) -> Rational {
    if f.coeffs.is_empty() {
        return Rational::zero();
    }
    let bernoulli = classical_numbers(ClassicalKind::Bernoulli, f.degree()).values;
    let mut acc = Rational::zero();
    for (k, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc += c * power_sum(k, upper, &bernoulli);
    }
    acc
}

/// Σ_{x=0}^{upper−1} (−1)^x f(x) for odd upper, by splitting even and
/// odd x into two plain power sums.
fn alternating_sum_poly(f: &RatPoly, upper: &BigInt) -> Rational {
    debug_assert!(upper.is_odd());
    let half = (upper - BigInt::one()) / BigInt::from(2);
    // x = 2y for y = 0..=half, minus x = 2y+1 for y = 0..half
    let evens = sum_poly(&f.compose_affine(2, 0), &(&half + BigInt::one()));
    let odds = sum_poly(&f.compose_affine(2, 1), &half);
    evens - odds
}

/// Exact level-N Volkenborn sum S_N = (1/p^N)·Σ_{x<p^N} f(x).
pub fn volkenborn_sum_exact(
    f: &IntegrandBasis,
    ctx: &PadicContext,
    level: u32,
) -> Result<Rational, PadicError> {
    if level == 0 {
        return Err(PadicError::InvalidLevel);
    }
    let poly = lower(f, ctx)?;
    let modulus = ctx.level_modulus(level);
    Ok(sum_poly(&poly, &modulus) / Rational::from_integer(modulus))
}

/// Exact level-N fermionic sum T_N = Σ_{x<p^N} (−1)^x f(x).
pub fn fermionic_sum_exact(
    f: &IntegrandBasis,
    ctx: &PadicContext,
    level: u32,
) -> Result<Rational, PadicError> {
    if level == 0 {
        return Err(PadicError::InvalidLevel);
    }
    let poly = lower(f, ctx)?;
    Ok(alternating_sum_poly(&poly, &ctx.level_modulus(level)))
}

/// Level-N Volkenborn sum as a p-adic number at the context precision.
pub fn volkenborn_sum(
    f: &IntegrandBasis,
    ctx: &PadicContext,
    level: u32,
) -> Result<PadicNumber, PadicError> {
    Ok(exact_to_padic(&volkenborn_sum_exact(f, ctx, level)?, ctx))
}

/// Level-N fermionic sum as a p-adic number at the context precision.
pub fn fermionic_sum(
    f: &IntegrandBasis,
    ctx: &PadicContext,
    level: u32,
) -> Result<PadicNumber, PadicError> {
    Ok(exact_to_padic(&fermionic_sum_exact(f, ctx, level)?, ctx))
}

/// Dispatch on the measure carried by the spec.
pub fn integral_sum_exact(
    spec: &IntegrandSpec,
    ctx: &PadicContext,
    level: u32,
) -> Result<Rational, PadicError> {
    match spec.measure {
        Measure::Volkenborn => volkenborn_sum_exact(&spec.basis, ctx, level),
        Measure::Fermionic => fermionic_sum_exact(&spec.basis, ctx, level),
    }
}

/// The exact limit value the level sums converge to: classical
/// Bernoulli/Euler numbers for monomials, evaluated degenerate numbers
/// for the falling basis.
pub fn exact_integral(f: &IntegrandBasis, measure: Measure) -> Rational {
    match f {
        IntegrandBasis::Monomial(terms) => {
            let degree = f.degree();
            let table = match measure {
                Measure::Volkenborn => classical_numbers(ClassicalKind::Bernoulli, degree),
                Measure::Fermionic => classical_numbers(ClassicalKind::Euler, degree),
            };
            let mut acc = Rational::zero();
            for (c, d) in terms {
                acc += c * &table.values[*d];
            }
            acc
        }
        IntegrandBasis::Falling { n, lambda } => {
            let table = match measure {
                Measure::Volkenborn => degenerate_bernoulli(*n),
                Measure::Fermionic => degenerate_euler(*n),
            };
            table.values[*n].eval(lambda)
        }
    }
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> BigInt {
    let (mut r0, mut r1) = (modulus.clone(), a.mod_floor(modulus));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
    }
    assert!(r0.is_one(), "inverse of a non-unit residue");
    s0.mod_floor(modulus)
}

/// Embed an exact rational (negative valuation allowed) as a p-adic
/// number: strip the p-power, then reduce the p-free part modulo
/// p^precision.
pub fn exact_to_padic(r: &Rational, ctx: &PadicContext) -> PadicNumber {
    if r.is_zero() {
        return PadicNumber::zero();
    }
    let valuation = match p_valuation(r, ctx.p).expect("context prime is odd") {
        Valuation::Finite(v) => v,
        Valuation::Infinite => unreachable!("nonzero rational"),
    };
    let unit_part = r / power_of_prime(ctx.p, valuation);
    let numer = unit_part.numer().mod_floor(&ctx.modulus);
    let denom_inv = mod_inverse(unit_part.denom(), &ctx.modulus);
    let unit = (numer * denom_inv).mod_floor(&ctx.modulus);
    PadicNumber {
        valuation: Valuation::Finite(valuation),
        unit: unit.to_biguint().expect("reduced residue is nonnegative"),
    }
}

/// p-adic distance |u − v|_p computed from the aligned residues.
/// Returns 0 when the residues agree to the full context precision
/// (the true distance is then at most p^{−precision} relative to the
/// common valuation).
pub fn padic_distance(u: &PadicNumber, v: &PadicNumber, ctx: &PadicContext) -> Rational {
    let norm_of = |n: &PadicNumber| match n.valuation {
        Valuation::Infinite => Rational::zero(),
        Valuation::Finite(w) => power_of_prime(ctx.p, -w),
    };
    match (u.is_zero(), v.is_zero()) {
        (true, true) => Rational::zero(),
        (true, false) => norm_of(v),
        (false, true) => norm_of(u),
        (false, false) => {
            let vu = u.valuation.finite().expect("nonzero");
            let vv = v.valuation.finite().expect("nonzero");
            let base = vu.min(vv);
            let lift = |val: i64, unit: &BigUint| -> BigInt {
                let shift = (val - base) as u32;
                (BigInt::from(unit.clone()) * BigInt::from(ctx.p).pow(shift))
                    .mod_floor(&ctx.modulus)
            };
            let diff = (lift(vu, &u.unit) - lift(vv, &v.unit)).mod_floor(&ctx.modulus);
            if diff.is_zero() {
                return Rational::zero();
            }
            let p = BigInt::from(ctx.p);
            let mut extra = 0i64;
            let mut m = diff;
            while (&m % &p).is_zero() {
                extra += 1;
                m /= &p;
            }
            power_of_prime(ctx.p, -(base + extra))
        }
    }
}

/// One measure's residual in the shift equation at a given level.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftCheck {
    pub measure: Measure,
    pub level: u32,
    /// S_N(f(·+1)) − S_N(f), resp. T_N(f(·+1)) + T_N(f).
    pub lhs: Rational,
    /// f′(0), resp. 2·f(0).
    pub target: Rational,
    /// |lhs − target|_p, exact.
    pub distance: Rational,
}

/// Check the defining shift equations of both measures on a
/// monomial-basis integrand: the Volkenborn difference telescopes to
/// (f(p^N) − f(0))/p^N and must approach f′(0); the fermionic sum of
/// shifted and unshifted sums equals f(0) + f(p^N) and must approach
/// 2·f(0).
pub fn verify_shift_equation(
    f: &IntegrandBasis,
    ctx: &PadicContext,
    level: u32,
) -> Result<[ShiftCheck; 2], PadicError> {
    if matches!(f, IntegrandBasis::Falling { .. }) {
        return Err(PadicError::MonomialBasisRequired);
    }
    if level == 0 {
        return Err(PadicError::InvalidLevel);
    }
    let poly = lower(f, ctx)?;
    let shifted = poly.compose_affine(1, 1);
    let shifted_basis = IntegrandBasis::monomial(
        shifted
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| (c.clone(), d))
            .collect(),
    );

    let s_shifted = volkenborn_sum_exact(&shifted_basis, ctx, level)?;
    let s_plain = volkenborn_sum_exact(f, ctx, level)?;
    let volkenborn_lhs = s_shifted - s_plain;
    let derivative_at_zero = poly.coeff(1);
    let volkenborn = ShiftCheck {
        measure: Measure::Volkenborn,
        level,
        distance: distance_exact(&volkenborn_lhs, &derivative_at_zero, ctx.p),
        lhs: volkenborn_lhs,
        target: derivative_at_zero,
    };

    let t_shifted = fermionic_sum_exact(&shifted_basis, ctx, level)?;
    let t_plain = fermionic_sum_exact(f, ctx, level)?;
    let fermionic_lhs = t_shifted + t_plain;
    let twice_at_zero = poly.coeff(0) * Rational::from_integer(2.into());
    let fermionic = ShiftCheck {
        measure: Measure::Fermionic,
        level,
        distance: distance_exact(&fermionic_lhs, &twice_at_zero, ctx.p),
        lhs: fermionic_lhs,
        target: twice_at_zero,
    };
    Ok([volkenborn, fermionic])
}

fn distance_exact(a: &Rational, b: &Rational, p: u64) -> Rational {
    crate::rational::p_norm(&(a - b), p).expect("context prime is odd")
}

/// One level of a convergence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub level: u32,
    pub sum: Rational,
    /// v_p(sum − exact); `Infinite` means the sum is exactly the limit.
    pub distance_valuation: Valuation,
}

/// Convergence of the level sums of (x)_{n,λ} toward the exact
/// degenerate number, for one measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceTable {
    pub p: u64,
    pub lambda: Rational,
    pub n: usize,
    pub measure: Measure,
    pub exact: Rational,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    /// Distances are non-increasing iff their valuations never drop.
    pub fn distances_non_increasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].distance_valuation >= w[0].distance_valuation)
    }

    pub fn distance_string(&self, row: &ConvergenceRow) -> String {
        match row.distance_valuation {
            Valuation::Infinite => "0".to_string(),
            Valuation::Finite(w) => format!("{}^{}", self.p, -w),
        }
    }

    /// JSON: { "p", "lambda", "n", "measure", "rows": [{ "N", "sum",
    /// "distance" }] }.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.p,
            "lambda": self.lambda.to_string(),
            "n": self.n,
            "measure": self.measure.as_str(),
            "rows": self.rows.iter().map(|row| serde_json::json!({
                "N": row.level,
                "sum": row.sum.to_string(),
                "distance": self.distance_string(row),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Simulate both integrals of (x)_{n,λ} at the given ascending levels
/// and measure the p-adic distance to the exact degenerate Bernoulli /
/// Euler value.
pub fn convergence_report(
    n: usize,
    lambda: &Rational,
    ctx: &PadicContext,
    levels: &[u32],
) -> Result<Vec<ConvergenceTable>, PadicError> {
    if n > MAX_CONVERGENCE_INDEX {
        return Err(PadicError::IndexTooLarge {
            n,
            max: MAX_CONVERGENCE_INDEX,
        });
    }
    if levels.is_empty() || levels.windows(2).any(|w| w[1] <= w[0]) {
        return Err(PadicError::LevelsNotAscending);
    }
    let basis = IntegrandBasis::Falling {
        n,
        lambda: lambda.clone(),
    };
    let mut tables = Vec::with_capacity(2);
    for measure in [Measure::Volkenborn, Measure::Fermionic] {
        let exact = exact_integral(&basis, measure);
        let mut rows = Vec::with_capacity(levels.len());
        for &level in levels {
            let sum = match measure {
                Measure::Volkenborn => volkenborn_sum_exact(&basis, ctx, level)?,
                Measure::Fermionic => fermionic_sum_exact(&basis, ctx, level)?,
            };
            let distance_valuation =
                p_valuation(&(&sum - &exact), ctx.p).expect("context prime is odd");
            rows.push(ConvergenceRow {
                level,
                sum,
                distance_valuation,
            });
        }
        tables.push(ConvergenceTable {
            p: ctx.p,
            lambda: lambda.clone(),
            n,
            measure,
            exact,
            rows,
        });
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn rat(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn ctx(p: u64) -> PadicContext {
        PadicContext::new(p, 3).unwrap()
    }

    fn monomial(terms: &[(&str, usize)]) -> IntegrandBasis {
        IntegrandBasis::monomial(terms.iter().map(|(c, d)| (rat(c), *d)).collect())
    }

    #[test]
    fn context_rejects_bad_parameters() {
        assert_eq!(PadicContext::new(4, 3), Err(PadicError::NotOddPrime(4)));
        assert_eq!(PadicContext::new(2, 3), Err(PadicError::NotOddPrime(2)));
        assert_eq!(PadicContext::new(5, 0), Err(PadicError::PrecisionZero));
    }

    #[test]
    fn power_sums_match_brute_force() {
        let bernoulli = classical_numbers(ClassicalKind::Bernoulli, 6).values;
        for k in 0..=6usize {
            for upper in 1..=10i64 {
                let direct: i64 = (0..upper).map(|x| x.pow(k as u32)).sum();
                assert_eq!(
                    power_sum(k, &BigInt::from(upper), &bernoulli),
                    Rational::from_integer(direct.into()),
                    "k={k} upper={upper}"
                );
            }
        }
    }

    #[test]
    fn alternating_sums_match_brute_force() {
        for degree in 0..=4usize {
            let poly = RatPoly::new(
                (0..=degree)
                    .map(|k| Rational::from_integer((k as i64 + 1).into()))
                    .collect(),
            );
            for upper in [3i64, 9, 27, 5, 25] {
                let direct: Rational = (0..upper)
                    .map(|x| {
                        let sign = if x % 2 == 0 { 1 } else { -1 };
                        Rational::from_integer(sign.into())
                            * poly.eval(&Rational::from_integer(x.into()))
                    })
                    .sum();
                assert_eq!(
                    alternating_sum_poly(&poly, &BigInt::from(upper)),
                    direct,
                    "degree={degree} upper={upper}"
                );
            }
        }
    }

    #[test]
    fn volkenborn_spec_examples() {
        let f_x = monomial(&[("1", 1)]);
        assert_eq!(volkenborn_sum_exact(&f_x, &ctx(5), 2).unwrap(), rat("12"));
        let s = volkenborn_sum(&f_x, &ctx(5), 2).unwrap();
        assert_eq!(s.valuation(), Valuation::Finite(0));

        let f_one = monomial(&[("1", 0)]);
        for level in 1..=6 {
            assert_eq!(
                volkenborn_sum_exact(&f_one, &ctx(3), level).unwrap(),
                rat("1")
            );
        }

        let f_x2 = monomial(&[("1", 2)]);
        let s = volkenborn_sum_exact(&f_x2, &ctx(3), 3).unwrap();
        assert_eq!(s, rat("689/3"));
        assert_eq!(
            volkenborn_sum(&f_x2, &ctx(3), 3).unwrap().valuation(),
            Valuation::Finite(-1)
        );
    }

    #[test]
    fn fermionic_spec_examples() {
        let f_one = monomial(&[("1", 0)]);
        for level in 1..=6 {
            assert_eq!(
                fermionic_sum_exact(&f_one, &ctx(3), level).unwrap(),
                rat("1")
            );
        }
        let f_x = monomial(&[("1", 1)]);
        assert_eq!(fermionic_sum_exact(&f_x, &ctx(3), 2).unwrap(), rat("4"));
        let f_x2 = monomial(&[("1", 2)]);
        assert_eq!(fermionic_sum_exact(&f_x2, &ctx(3), 2).unwrap(), rat("36"));
    }

    #[test]
    fn degree_cap_and_level_checks() {
        let too_big = monomial(&[("1", 13)]);
        assert!(matches!(
            volkenborn_sum_exact(&too_big, &ctx(3), 1),
            Err(PadicError::DegreeTooLarge { degree: 13, .. })
        ));
        let f = monomial(&[("1", 1)]);
        assert_eq!(
            volkenborn_sum_exact(&f, &ctx(3), 0),
            Err(PadicError::InvalidLevel)
        );
    }

    #[test]
    fn falling_basis_requires_integral_lambda() {
        let bad = IntegrandBasis::Falling {
            n: 2,
            lambda: rat("1/3"),
        };
        assert!(matches!(
            volkenborn_sum_exact(&bad, &ctx(3), 2),
            Err(PadicError::LambdaNotPadicInteger { .. })
        ));
        // 1/3 is a 5-adic integer, so the same integrand is fine at p=5
        assert!(volkenborn_sum_exact(&bad, &ctx(5), 2).is_ok());
    }

    #[test]
    fn falling_expansion_matches_direct_product() {
        // (x)_{2,1} = x(x−1)
        let f = IntegrandBasis::Falling {
            n: 2,
            lambda: rat("1"),
        };
        let lowered = lower(&f, &ctx(5)).unwrap();
        assert_eq!(lowered.coeffs, vec![rat("0"), rat("-1"), rat("1")]);
    }

    #[test]
    fn exact_to_padic_spec_examples() {
        let c = PadicContext::new(5, 3).unwrap();
        let minus_half = exact_to_padic(&rat("-1/2"), &c);
        assert_eq!(minus_half.valuation(), Valuation::Finite(0));
        assert_eq!(*minus_half.unit(), BigUint::from(62u32));

        let sixth = exact_to_padic(&rat("1/6"), &c);
        assert_eq!(sixth.valuation(), Valuation::Finite(0));
        assert_eq!(*sixth.unit(), BigUint::from(21u32));

        let heavy = exact_to_padic(&rat("25/2"), &c);
        assert_eq!(heavy.valuation(), Valuation::Finite(2));
        assert_eq!(*heavy.unit(), BigUint::from(63u32)); // 2·63 ≡ 1 (mod 125)

        assert!(exact_to_padic(&rat("0"), &c).is_zero());
    }

    #[test]
    fn distance_spec_examples() {
        let c = ctx(5);
        let s2 = volkenborn_sum(&monomial(&[("1", 1)]), &c, 2).unwrap();
        let exact = exact_to_padic(&rat("-1/2"), &c);
        assert_eq!(padic_distance(&s2, &exact, &c), rat("1/25"));
        assert_eq!(padic_distance(&exact, &exact, &c), rat("0"));

        let c3 = ctx(3);
        let t2 = fermionic_sum(&monomial(&[("1", 2)]), &c3, 2).unwrap();
        let zero = exact_to_padic(&rat("0"), &c3);
        assert_eq!(padic_distance(&t2, &zero, &c3), rat("1/9"));
    }

    #[test]
    fn distance_is_capped_by_precision() {
        let c = PadicContext::new(3, 2).unwrap();
        let a = exact_to_padic(&rat("1"), &c);
        let b = exact_to_padic(&rat("10"), &c); // 1 + 3², invisible at precision 2
        assert_eq!(padic_distance(&a, &b, &c), rat("0"));
    }

    #[test]
    fn telescoping_holds_exactly() {
        // S_N(f(·+1)) − S_N(f) = (f(p^N) − f(0))/p^N as rationals
        let c = ctx(3);
        let f = monomial(&[("1", 3), ("-2", 1), ("5", 0)]);
        let poly = lower(&f, &c).unwrap();
        for level in 1..=5 {
            let checks = verify_shift_equation(&f, &c, level).unwrap();
            let modulus = Rational::from_integer(BigInt::from(3).pow(level));
            let expected = (poly.eval(&modulus) - poly.eval(&rat("0"))) / &modulus;
            assert_eq!(checks[0].lhs, expected, "level {level}");
        }
    }

    #[test]
    fn shift_equation_spec_examples() {
        let c = ctx(5);
        // f = x: the Volkenborn difference is exactly f′(0) = 1
        let f_x = monomial(&[("1", 1)]);
        for level in 1..=4 {
            let checks = verify_shift_equation(&f_x, &c, level).unwrap();
            assert_eq!(checks[0].lhs, rat("1"));
            assert_eq!(checks[0].distance, rat("0"));
            // fermionic: T_N(x+1) + T_N(x) = p^N, at distance p^{−N} from 0
            assert_eq!(
                checks[1].lhs,
                Rational::from_integer(BigInt::from(5).pow(level))
            );
            assert_eq!(checks[1].target, rat("0"));
            assert_eq!(checks[1].distance, power_of_prime(5, -(level as i64)));
        }
        // f = x²: difference is p^N, at distance p^{−N} from f′(0) = 0
        let f_x2 = monomial(&[("1", 2)]);
        for level in 1..=4 {
            let checks = verify_shift_equation(&f_x2, &c, level).unwrap();
            assert_eq!(
                checks[0].lhs,
                Rational::from_integer(BigInt::from(5).pow(level))
            );
            assert_eq!(checks[0].distance, power_of_prime(5, -(level as i64)));
        }
        assert_eq!(
            verify_shift_equation(
                &IntegrandBasis::Falling {
                    n: 1,
                    lambda: rat("0")
                },
                &c,
                1
            ),
            Err(PadicError::MonomialBasisRequired)
        );
    }

    #[test]
    fn convergence_base_cases() {
        let c = ctx(5);
        // n = 0: both measures give exactly 1 at every level
        let tables = convergence_report(0, &rat("1"), &c, &[1, 2, 3]).unwrap();
        for table in &tables {
            assert_eq!(table.exact, rat("1"));
            for row in &table.rows {
                assert_eq!(row.sum, rat("1"));
                assert_eq!(row.distance_valuation, Valuation::Infinite);
                assert_eq!(table.distance_string(row), "0");
            }
        }
        // n = 1: Volkenborn distance at level N is exactly 5^{−N}
        let tables = convergence_report(1, &rat("7"), &c, &[1, 2, 3, 4]).unwrap();
        let volkenborn = &tables[0];
        assert_eq!(volkenborn.exact, rat("-1/2"));
        for row in &volkenborn.rows {
            assert_eq!(row.distance_valuation, Valuation::Finite(row.level as i64));
        }
        assert!(volkenborn.distances_non_increasing());
    }

    #[test]
    fn convergence_example_n2_lambda1() {
        let c = ctx(5);
        let tables = convergence_report(2, &rat("1"), &c, &[2, 3, 4]).unwrap();
        let volkenborn = &tables[0];
        assert_eq!(volkenborn.exact, rat("2/3"));
        assert!(volkenborn.distances_non_increasing());
        let last = volkenborn.rows.last().unwrap();
        assert!(matches!(last.distance_valuation, Valuation::Finite(w) if w >= 2));
    }

    #[test]
    fn convergence_input_validation() {
        let c = ctx(5);
        assert!(matches!(
            convergence_report(9, &rat("1"), &c, &[1, 2]),
            Err(PadicError::IndexTooLarge { n: 9, .. })
        ));
        assert_eq!(
            convergence_report(1, &rat("1"), &c, &[2, 2]),
            Err(PadicError::LevelsNotAscending)
        );
        assert_eq!(
            convergence_report(1, &rat("1"), &c, &[]),
            Err(PadicError::LevelsNotAscending)
        );
    }

    #[test]
    fn convergence_json_shape() {
        let c = ctx(3);
        let tables = convergence_report(2, &rat("0"), &c, &[2]).unwrap();
        let fermionic = tables[1].to_json();
        assert_eq!(fermionic["p"], 3);
        assert_eq!(fermionic["measure"], "fermionic");
        assert_eq!(fermionic["lambda"], "0");
        // T_2(x²) = 36, at distance 3^{−2} from E_2 = 0
        assert_eq!(fermionic["rows"][0]["N"], 2);
        assert_eq!(fermionic["rows"][0]["sum"], "36");
        assert_eq!(fermionic["rows"][0]["distance"], "3^-2");
    }
}
