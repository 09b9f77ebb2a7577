//! Degenerate hyperbolic functions as truncated series in `a` with
//! λ-polynomial coefficients, plus the double-angle and addition
//! identity checks.
//!
//! cosh and sinh are assembled directly from falling factorials and
//! their λ ↦ −λ reflections; tanh and coth are series quotients. The
//! cotangent has a simple pole at a = 0, so only the regular product
//! a·coth_λ(1/2:a) is ever materialized — its constant term is 2.

use num_traits::One;

use crate::coeff::Coeff;
use crate::identity::{compare_series, IdentityReport};
use crate::poly::LambdaPoly;
use crate::series::Series;
use crate::special::falling_factorial;
use crate::{LambdaSeries, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperbolicKind {
    Cosh,
    Sinh,
    TanhHalf,
    CothHalfScaled,
}

impl HyperbolicKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HyperbolicKind::Cosh => "cosh",
            HyperbolicKind::Sinh => "sinh",
            HyperbolicKind::TanhHalf => "tanh-half",
            HyperbolicKind::CothHalfScaled => "coth-half-scaled",
        }
    }
}

/// A degenerate hyperbolic function at parameter x, truncated in `a`.
/// The two half-argument kinds fix x = 1/2.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicSeries {
    pub kind: HyperbolicKind,
    pub x: Rational,
    pub series: LambdaSeries,
}

impl HyperbolicSeries {
    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// m!-weighted coefficient of a^m.
    pub fn coeff_egf(&self, m: usize) -> LambdaPoly {
        self.series.coeff_egf(m).expect("index within order")
    }

    /// JSON: { "kind", "x", "order", "egf_coefficients": [strings] }.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.as_str(),
            "x": self.x.to_string(),
            "order": self.order(),
            "egf_coefficients": (0..=self.order())
                .map(|m| self.coeff_egf(m).to_string())
                .collect::<Vec<_>>(),
        })
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// EGF coefficient of cosh: ((x)_{m,λ} + (−1)^m (x)_{m,−λ})/2.
fn cosh_egf_coeff(x: &Rational, m: usize) -> LambdaPoly {
    let ff = falling_factorial(x, m);
    let reflected = ff.reflect();
    let signed = if m % 2 == 0 { reflected } else { -reflected };
    (&ff + &signed).scale(&half())
}

/// EGF coefficient of sinh: ((x)_{m,λ} − (−1)^m (x)_{m,−λ})/2.
fn sinh_egf_coeff(x: &Rational, m: usize) -> LambdaPoly {
    let ff = falling_factorial(x, m);
    let reflected = ff.reflect();
    let signed = if m % 2 == 0 { reflected } else { -reflected };
    (&ff - &signed).scale(&half())
}

fn egf_to_series(order: usize, mut egf: impl FnMut(usize) -> LambdaPoly) -> LambdaSeries {
    let mut m_factorial = Rational::one();
    Series::from_fn(order, |m| {
        if m > 0 {
            m_factorial *= Rational::from_integer(m.into());
        }
        egf(m).scale(&m_factorial.recip())
    })
}

/// Degenerate hyperbolic cosine of x, to the given order.
pub fn cosh_series(x: &Rational, order: usize) -> HyperbolicSeries {
    HyperbolicSeries {
        kind: HyperbolicKind::Cosh,
        x: x.clone(),
        series: egf_to_series(order, |m| cosh_egf_coeff(x, m)),
    }
}

/// Degenerate hyperbolic sine of x, to the given order.
pub fn sinh_series(x: &Rational, order: usize) -> HyperbolicSeries {
    HyperbolicSeries {
        kind: HyperbolicKind::Sinh,
        x: x.clone(),
        series: egf_to_series(order, |m| sinh_egf_coeff(x, m)),
    }
}

/// tanh_λ(1/2 : a) = sinh_λ(1/2:a)/cosh_λ(1/2:a); the denominator has
/// constant term 1, so the quotient is a plain series division.
pub fn tanh_half_series(order: usize) -> HyperbolicSeries {
    let x = half();
    let sinh = sinh_series(&x, order);
    let cosh = cosh_series(&x, order);
    let series = sinh
        .series
        .div(&cosh.series)
        .expect("cosh has constant term 1");
    HyperbolicSeries {
        kind: HyperbolicKind::TanhHalf,
        x,
        series,
    }
}

/// a·coth_λ(1/2 : a), regular at a = 0 with constant term 2. The pole
/// is removed by dividing cosh by sinh/a, whose constant term is the
/// linear EGF coefficient of sinh — always 1/2 at x = 1/2.
pub fn coth_half_scaled_series(order: usize) -> HyperbolicSeries {
    let x = half();
    let cosh = cosh_series(&x, order);
    let sinh = sinh_series(&x, order + 1);
    let sinh_over_a = sinh.series.shift_down().expect("sinh vanishes at a = 0");
    assert_eq!(
        *sinh_over_a.coeff(0),
        LambdaPoly::constant(half()),
        "sinh linear coefficient must be 1/2 at x = 1/2"
    );
    let series = cosh
        .series
        .div(&sinh_over_a)
        .expect("sinh/a has constant term 1/2");
    HyperbolicSeries {
        kind: HyperbolicKind::CothHalfScaled,
        x,
        series,
    }
}

/// Double-angle identities: cosh(2x) against both 2cosh²(x)−1 and
/// 1+2sinh²(x), and sinh(2x) against 2·sinh(x)·cosh(x), all
/// coefficient-wise in λ up to the given order.
pub fn verify_double_angle(x: &Rational, order: usize) -> (IdentityReport, IdentityReport) {
    let two = LambdaPoly::from_int(2);
    let one = Series::one(order);
    let cosh_x = cosh_series(x, order).series;
    let sinh_x = sinh_series(x, order).series;
    let double = Rational::from_integer(2.into()) * x;
    let cosh_2x = cosh_series(&double, order).series;
    let sinh_2x = sinh_series(&double, order).series;

    let via_cosh = cosh_x.mul(&cosh_x).mul_scalar(&two).sub(&one);
    let via_sinh = one.add(&sinh_x.mul(&sinh_x).mul_scalar(&two));
    let cosh_report = compare_series(
        &format!("double_angle_cosh(x={x})"),
        order,
        &[&cosh_2x, &via_cosh, &via_sinh],
    );

    let product = sinh_x.mul(&cosh_x).mul_scalar(&two);
    let sinh_report = compare_series(
        &format!("double_angle_sinh(x={x})"),
        order,
        &[&sinh_2x, &product],
    );
    (cosh_report, sinh_report)
}

/// Addition identities for cosh(x+y) and sinh(x+y).
pub fn verify_addition(
    x: &Rational,
    y: &Rational,
    order: usize,
) -> (IdentityReport, IdentityReport) {
    let cosh_x = cosh_series(x, order).series;
    let sinh_x = sinh_series(x, order).series;
    let cosh_y = cosh_series(y, order).series;
    let sinh_y = sinh_series(y, order).series;
    let sum = x + y;

    let cosh_rhs = cosh_x.mul(&cosh_y).add(&sinh_x.mul(&sinh_y));
    let cosh_report = compare_series(
        &format!("addition_cosh(x={x},y={y})"),
        order,
        &[&cosh_series(&sum, order).series, &cosh_rhs],
    );

    let sinh_rhs = sinh_x.mul(&cosh_y).add(&cosh_x.mul(&sinh_y));
    let sinh_report = compare_series(
        &format!("addition_sinh(x={x},y={y})"),
        order,
        &[&sinh_series(&sum, order).series, &sinh_rhs],
    );
    (cosh_report, sinh_report)
}
