//! The verification suite: every structural identity between the
//! degenerate number families, the Cauchy numbers, and the degenerate
//! hyperbolic series, checked as exact coefficient-wise equalities of
//! λ-polynomials.
//!
//! All checks run at symbolic λ; a passing report is a polynomial
//! identity, so it subsumes every numeric instance. Failures are
//! reported, never raised: a report carries the first failing index
//! together with both offending coefficients.

use num_traits::{One, Zero};

use crate::hyperbolic::{
    coth_half_scaled_series, tanh_half_series, verify_addition, verify_double_angle,
};
use crate::poly::LambdaPoly;
use crate::series::Series;
use crate::special::{
    cauchy_numbers, classical_numbers, degenerate_bernoulli, degenerate_euler, ClassicalKind,
    NumberTable,
};
use crate::{LambdaSeries, Rational};

/// Outcome of one named identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub order: usize,
    pub passed: bool,
    pub first_failure_index: Option<usize>,
    pub lhs_coeff: Option<LambdaPoly>,
    pub rhs_coeff: Option<LambdaPoly>,
}

impl IdentityReport {
    pub fn pass(name: &str, order: usize) -> Self {
        IdentityReport {
            name: name.to_string(),
            order,
            passed: true,
            first_failure_index: None,
            lhs_coeff: None,
            rhs_coeff: None,
        }
    }

    pub fn fail(name: &str, order: usize, index: usize, lhs: LambdaPoly, rhs: LambdaPoly) -> Self {
        IdentityReport {
            name: name.to_string(),
            order,
            passed: false,
            first_failure_index: Some(index),
            lhs_coeff: Some(lhs),
            rhs_coeff: Some(rhs),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "order": self.order,
            "passed": self.passed,
            "first_failure_index": self.first_failure_index,
            "lhs_coeff": self.lhs_coeff.as_ref().map(|p| p.to_string()),
            "rhs_coeff": self.rhs_coeff.as_ref().map(|p| p.to_string()),
        })
    }
}

/// Compare two or more series coefficient-wise up to the given order;
/// the first series is the reference side.
pub fn compare_series(name: &str, order: usize, series: &[&LambdaSeries]) -> IdentityReport {
    let upto = series
        .iter()
        .map(|s| s.order())
        .min()
        .expect("at least one series")
        .min(order);
    for n in 0..=upto {
        let reference = series[0].coeff(n);
        for other in &series[1..] {
            if other.coeff(n) != reference {
                return IdentityReport::fail(
                    name,
                    order,
                    n,
                    reference.clone(),
                    other.coeff(n).clone(),
                );
            }
        }
    }
    IdentityReport::pass(name, order)
}

/// Even λ-part of a table entry: (v(λ) + (−1)^n v(−λ))/2.
fn even_part(value: &LambdaPoly, n: usize) -> LambdaPoly {
    let reflected = value.reflect();
    let signed = if n % 2 == 0 { reflected } else { -reflected };
    (value + &signed).scale(&Rational::new(1.into(), 2.into()))
}

/// Odd λ-part of a table entry: (v(λ) − (−1)^n v(−λ))/2.
fn odd_part(value: &LambdaPoly, n: usize) -> LambdaPoly {
    let reflected = value.reflect();
    let signed = if n % 2 == 0 { reflected } else { -reflected };
    (value - &signed).scale(&Rational::new(1.into(), 2.into()))
}

/// Series Σ part(v_n)·aⁿ/n! for a table of n!-weighted values.
fn table_part_series(
    table: &NumberTable<LambdaPoly>,
    order: usize,
    part: impl Fn(&LambdaPoly, usize) -> LambdaPoly,
) -> LambdaSeries {
    let mut n_factorial = Rational::one();
    Series::from_fn(order, |n| {
        if n > 0 {
            n_factorial *= Rational::from_integer(n.into());
        }
        part(&table.values[n], n).scale(&n_factorial.recip())
    })
}

/// The series of λa/log(1+λa): the Cauchy-number series with its
/// variable rescaled by λ.
fn cauchy_lambda_series(order: usize) -> LambdaSeries {
    let mut l_factorial = Rational::one();
    let cauchy = cauchy_numbers(order).values;
    let ogf: LambdaSeries = Series::from_fn(order, |l| {
        if l > 0 {
            l_factorial *= Rational::from_integer(l.into());
        }
        LambdaPoly::constant(&cauchy[l] / &l_factorial)
    });
    ogf.scale_var(&LambdaPoly::lambda_pow(1))
}

/// The two Volkenborn integral relations: weighting the even-β series
/// by λa/log(1+λa) reproduces (a/2)·coth_λ(1/2:a), and the same weight
/// applied to the odd-β series collapses to the single term −a/2.
pub fn check_coth_integral_relations(order: usize) -> (IdentityReport, IdentityReport) {
    let beta = degenerate_bernoulli(order);
    let weight = cauchy_lambda_series(order);

    let even_series = table_part_series(&beta, order, even_part);
    let half_coth = coth_half_scaled_series(order)
        .series
        .mul_scalar(&LambdaPoly::constant(Rational::new(1.into(), 2.into())));
    let cosh_relation = compare_series(
        "coth_volkenborn_relation",
        order,
        &[&weight.mul(&even_series), &half_coth],
    );

    let odd_series = table_part_series(&beta, order, odd_part);
    let minus_half_a: LambdaSeries = Series::from_fn(order, |n| {
        if n == 1 {
            LambdaPoly::constant(Rational::new((-1).into(), 2.into()))
        } else {
            LambdaPoly::zero()
        }
    });
    let sinh_relation = compare_series(
        "sinh_volkenborn_relation",
        order,
        &[&weight.mul(&odd_series), &minus_half_a],
    );
    (cosh_relation, sinh_relation)
}

fn bernoulli_reflection_report(beta: &NumberTable<LambdaPoly>, n_max: usize) -> IdentityReport {
    let name = "bernoulli_reflection";
    for n in 1..=n_max {
        let value = &beta.values[n];
        let reflected = value.reflect();
        let signed = if n % 2 == 0 { reflected } else { -reflected };
        let lhs = value - &signed;
        // −(n−1)!·(−λ)^{n−1}
        let sign = if (n - 1) % 2 == 0 { -1 } else { 1 };
        let magnitude = Rational::from_integer(sign * crate::rational::factorial(n - 1));
        let rhs = LambdaPoly::monomial(magnitude, n - 1);
        if lhs != rhs {
            return IdentityReport::fail(name, n_max, n, lhs, rhs);
        }
    }
    IdentityReport::pass(name, n_max)
}

/// β_{n,λ} − (−1)^n β_{n,−λ} = −(n−1)!·(−λ)^{n−1}, exactly, for
/// 1 ≤ n ≤ n_max.
pub fn check_bernoulli_reflection(n_max: usize) -> IdentityReport {
    bernoulli_reflection_report(&degenerate_bernoulli(n_max), n_max)
}

/// Rebuilds (a/2)·coth_λ(1/2:a) from the explicit convolution
/// Σ_m binom(n,m)·((β_{m,λ}+(−1)^m β_{m,−λ})/2)·C_{n−m}·λ^{n−m} — a
/// cross-check of the series-division construction with the product
/// spelled out term by term.
pub fn check_coth_cauchy_expansion(order: usize) -> IdentityReport {
    let beta = degenerate_bernoulli(order);
    let cauchy = cauchy_numbers(order).values;
    let mut n_factorial = Rational::one();
    let expansion: LambdaSeries = Series::from_fn(order, |n| {
        if n > 0 {
            n_factorial *= Rational::from_integer(n.into());
        }
        let mut egf = LambdaPoly::zero();
        for m in 0..=n {
            let binom = Rational::from_integer(num_integer::binomial(n.into(), m.into()));
            let term = even_part(&beta.values[m], m)
                .scale(&(binom * &cauchy[n - m]));
            egf = &egf + &(&term * &LambdaPoly::lambda_pow(n - m));
        }
        egf.scale(&n_factorial.recip())
    });
    let half_coth = coth_half_scaled_series(order)
        .series
        .mul_scalar(&LambdaPoly::constant(Rational::new(1.into(), 2.into())));
    compare_series(
        "coth_cauchy_convolution",
        order,
        &[&expansion, &half_coth],
    )
}

/// The two fermionic integral relations: the even-𝓔 series is the
/// constant 1, and the odd-𝓔 series equals −tanh_λ(1/2:a), which in
/// turn equals Σ_{n≥1} 𝓔_{n,λ} aⁿ/n!.
pub fn check_fermionic_integral_relations(order: usize) -> (IdentityReport, IdentityReport) {
    let euler = degenerate_euler(order);

    let even_series = table_part_series(&euler, order, even_part);
    let cosh_relation = compare_series(
        "cosh_fermionic_constant",
        order,
        &[&even_series, &Series::one(order)],
    );

    let odd_series = table_part_series(&euler, order, odd_part);
    let minus_tanh = tanh_half_series(order).series.neg();
    let mut n_factorial = Rational::one();
    let euler_tail: LambdaSeries = Series::from_fn(order, |n| {
        if n > 0 {
            n_factorial *= Rational::from_integer(n.into());
        }
        if n == 0 {
            LambdaPoly::zero()
        } else {
            euler.values[n].scale(&n_factorial.recip())
        }
    });
    let tanh_relation = compare_series(
        "tanh_fermionic_relation",
        order,
        &[&odd_series, &minus_tanh, &euler_tail],
    );
    (cosh_relation, tanh_relation)
}

/// Structural facts about the degenerate Euler numbers: the even λ-part
/// (𝓔_{n,λ}+(−1)^n 𝓔_{n,−λ})/2 is 1 at n = 0 and vanishes for n ≥ 1,
/// and 𝓔_{n,λ} = (−1)^{n−1} 𝓔_{n,−λ} for n ≥ 1.
pub fn check_euler_structure(n_max: usize) -> (IdentityReport, IdentityReport) {
    let euler = degenerate_euler(n_max);

    let even_name = "euler_even_part_vanishes";
    let mut even_report = IdentityReport::pass(even_name, n_max);
    for n in 0..=n_max {
        let lhs = even_part(&euler.values[n], n);
        let rhs = if n == 0 {
            LambdaPoly::one()
        } else {
            LambdaPoly::zero()
        };
        if lhs != rhs {
            even_report = IdentityReport::fail(even_name, n_max, n, lhs, rhs);
            break;
        }
    }

    let refl_name = "euler_reflection";
    let mut refl_report = IdentityReport::pass(refl_name, n_max);
    for n in 1..=n_max {
        let lhs = euler.values[n].clone();
        let reflected = euler.values[n].reflect();
        let rhs = if (n - 1) % 2 == 0 { reflected } else { -reflected };
        if lhs != rhs {
            refl_report = IdentityReport::fail(refl_name, n_max, n, lhs, rhs);
            break;
        }
    }
    (even_report, refl_report)
}

/// λ = 0 degeneration: the degenerate tables reduce to the classical
/// Bernoulli and Euler numbers, and the hyperbolic EGF coefficients at
/// x = 1 and x = 1/2 reduce to the Taylor coefficients of cosh(xa) and
/// sinh(xa).
pub fn check_classical_limits(order: usize) -> IdentityReport {
    let name = "classical_limits";
    let zero = Rational::zero();
    let beta = degenerate_bernoulli(order);
    let bernoulli = classical_numbers(ClassicalKind::Bernoulli, order).values;
    for n in 0..=order {
        let got = beta.values[n].eval(&zero);
        if got != bernoulli[n] {
            return IdentityReport::fail(
                name,
                order,
                n,
                LambdaPoly::constant(got),
                LambdaPoly::constant(bernoulli[n].clone()),
            );
        }
    }
    let euler = degenerate_euler(order);
    let classical_euler = classical_numbers(ClassicalKind::Euler, order).values;
    for n in 0..=order {
        let got = euler.values[n].eval(&zero);
        if got != classical_euler[n] {
            return IdentityReport::fail(
                name,
                order,
                n,
                LambdaPoly::constant(got),
                LambdaPoly::constant(classical_euler[n].clone()),
            );
        }
    }
    for x in [Rational::one(), Rational::new(1.into(), 2.into())] {
        let cosh = crate::hyperbolic::cosh_series(&x, order);
        let sinh = crate::hyperbolic::sinh_series(&x, order);
        let mut x_power = Rational::one();
        for m in 0..=order {
            if m > 0 {
                x_power *= &x;
            }
            let expect_cosh = if m % 2 == 0 { x_power.clone() } else { zero.clone() };
            let expect_sinh = if m % 2 == 1 { x_power.clone() } else { zero.clone() };
            let got_cosh = cosh.coeff_egf(m).eval(&zero);
            let got_sinh = sinh.coeff_egf(m).eval(&zero);
            if got_cosh != expect_cosh {
                return IdentityReport::fail(
                    name,
                    order,
                    m,
                    LambdaPoly::constant(got_cosh),
                    LambdaPoly::constant(expect_cosh),
                );
            }
            if got_sinh != expect_sinh {
                return IdentityReport::fail(
                    name,
                    order,
                    m,
                    LambdaPoly::constant(got_sinh),
                    LambdaPoly::constant(expect_sinh),
                );
            }
        }
    }
    IdentityReport::pass(name, order)
}

/// Run the whole suite at the given truncation order: double-angle and
/// addition identities at the sampled points, then every number-family
/// relation. Output order is deterministic.
pub fn run_all(order: usize, samples: &[(Rational, Rational)]) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    for (x, y) in samples {
        let (c, s) = verify_double_angle(x, order);
        reports.push(c);
        reports.push(s);
        if y != x {
            let (c, s) = verify_double_angle(y, order);
            reports.push(c);
            reports.push(s);
        }
        let (c, s) = verify_addition(x, y, order);
        reports.push(c);
        reports.push(s);
    }
    let (coth_rel, sinh_rel) = check_coth_integral_relations(order);
    reports.push(coth_rel);
    reports.push(sinh_rel);
    reports.push(check_bernoulli_reflection(order.max(1)));
    reports.push(check_coth_cauchy_expansion(order));
    let (cosh_const, tanh_rel) = check_fermionic_integral_relations(order);
    reports.push(cosh_const);
    reports.push(tanh_rel);
    let (even, refl) = check_euler_structure(order.max(1));
    reports.push(even);
    reports.push(refl);
    reports.push(check_classical_limits(order));
    reports
}

/// JSON for a full suite run: an array of report objects.
pub fn reports_to_json(reports: &[IdentityReport]) -> serde_json::Value {
    serde_json::Value::Array(reports.iter().map(IdentityReport::to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coeff;
    use crate::rational::parse_rational;

    fn rat(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn coth_relations_hold_to_order_16() {
        let (cosh_rel, sinh_rel) = check_coth_integral_relations(16);
        assert!(cosh_rel.passed, "{cosh_rel:?}");
        assert!(sinh_rel.passed, "{sinh_rel:?}");
    }

    #[test]
    fn coth_relation_leading_coefficients() {
        // order-0: 1·1 against half of the constant 2; order-1: λ/2.
        let beta = degenerate_bernoulli(4);
        let weight = cauchy_lambda_series(4);
        let even = table_part_series(&beta, 4, even_part);
        let product = weight.mul(&even);
        assert_eq!(*product.coeff(0), LambdaPoly::one());
        assert_eq!(
            *product.coeff(1),
            LambdaPoly::monomial(rat("1/2"), 1)
        );
    }

    #[test]
    fn bernoulli_reflection_small_cases() {
        let beta = degenerate_bernoulli(3);
        // n = 1: both sides −1
        let b1 = &beta.values[1];
        assert_eq!(b1 - &(-b1.reflect()), LambdaPoly::from_int(-1));
        // n = 2: both sides λ
        let b2 = &beta.values[2];
        assert_eq!(b2 - &b2.reflect(), LambdaPoly::lambda_pow(1));
        // n = 3: both sides −2λ²
        let b3 = &beta.values[3];
        assert_eq!(
            b3 - &(-b3.reflect()),
            LambdaPoly::monomial(rat("-2"), 2)
        );
        assert!(check_bernoulli_reflection(24).passed);
    }

    #[test]
    fn corrupted_table_is_reported_with_first_failure() {
        // n = 5 is odd, so the reflection difference keeps only even
        // λ-degrees; an even-degree perturbation is guaranteed visible.
        let mut beta = degenerate_bernoulli(8);
        beta.values[5] = &beta.values[5] + &LambdaPoly::lambda_pow(6);
        let report = bernoulli_reflection_report(&beta, 8);
        assert!(!report.passed);
        assert_eq!(report.first_failure_index, Some(5));
        assert!(report.lhs_coeff.is_some() && report.rhs_coeff.is_some());
    }

    #[test]
    fn coth_cauchy_expansion_to_order_12() {
        let report = check_coth_cauchy_expansion(12);
        assert!(report.passed, "{report:?}");
    }

    #[test]
    fn fermionic_relations_hold() {
        let (cosh_const, tanh_rel) = check_fermionic_integral_relations(16);
        assert!(cosh_const.passed, "{cosh_const:?}");
        assert!(tanh_rel.passed, "{tanh_rel:?}");
    }

    #[test]
    fn tanh_egf_matches_euler_values() {
        // EGF coefficient 2 of tanh is −𝓔_{2,λ} = −λ/2; coefficient 3
        // gives 𝓔_{3,λ} = −λ² + 1/4 after the sign flip.
        let tanh = tanh_half_series(4);
        let euler = degenerate_euler(4);
        assert_eq!(-tanh.coeff_egf(2), euler.values[2]);
        assert_eq!(-tanh.coeff_egf(3), euler.values[3]);
    }

    #[test]
    fn euler_structure_reports_pass() {
        let (even, refl) = check_euler_structure(16);
        assert!(even.passed, "{even:?}");
        assert!(refl.passed, "{refl:?}");
        // spot values: (𝓔₂(λ)+𝓔₂(−λ))/2 = 0 and 𝓔₃ is even in λ
        let table = degenerate_euler(3);
        assert_eq!(even_part(&table.values[2], 2), LambdaPoly::zero());
        assert_eq!(table.values[3], table.values[3].reflect());
    }

    #[test]
    fn classical_limits_pass() {
        assert!(check_classical_limits(16).passed);
    }

    #[test]
    fn run_all_default_is_reproducible_and_green() {
        let samples = vec![(rat("1/2"), rat("1/3"))];
        let first = run_all(16, &samples);
        let second = run_all(16, &samples);
        assert_eq!(first, second);
        assert!(first.iter().all(|r| r.passed), "{first:#?}");
        let names: Vec<&str> = first.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(
            names,
            vec![
                "double_angle_cosh(x=1/2)",
                "double_angle_sinh(x=1/2)",
                "double_angle_cosh(x=1/3)",
                "double_angle_sinh(x=1/3)",
                "addition_cosh(x=1/2,y=1/3)",
                "addition_sinh(x=1/2,y=1/3)",
                "coth_volkenborn_relation",
                "sinh_volkenborn_relation",
                "bernoulli_reflection",
                "coth_cauchy_convolution",
                "cosh_fermionic_constant",
                "tanh_fermionic_relation",
                "euler_even_part_vanishes",
                "euler_reflection",
                "classical_limits",
            ]
        );
    }

    #[test]
    fn run_all_at_order_zero_checks_constants() {
        let reports = run_all(0, &[(rat("1/2"), rat("1/3"))]);
        assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
    }

    #[test]
    fn report_json_shape() {
        let report = IdentityReport::fail(
            "example",
            4,
            2,
            LambdaPoly::one(),
            LambdaPoly::zero(),
        );
        let j = report.to_json();
        assert_eq!(j["passed"], false);
        assert_eq!(j["first_failure_index"], 2);
        assert_eq!(j["lhs_coeff"], "1");
        assert_eq!(j["rhs_coeff"], "0");
    }
}
