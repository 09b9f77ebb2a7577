//! Falling factorials, degenerate exponentials, and the special-number
//! families: degenerate Bernoulli β_{n,λ}, degenerate Euler 𝓔_{n,λ},
//! Cauchy numbers of the first kind, and the classical Bernoulli and
//! Euler numbers they degenerate to at λ = 0.
//!
//! The degenerate tables are produced by generating-function division
//! over the λ-polynomial ring, and independently by a Stirling-number
//! expansion ([`oracle_degenerate_number`]); the two routes are kept
//! free of shared code so that agreement is meaningful. Likewise the
//! classical tables come from a recurrence / plain exponential division
//! rather than from evaluating the degenerate ones.
//!
//! The defining quotients converge p-adically only under side
//! conditions on t and λ; none of that matters here, where every
//! identity is coefficient-wise in a truncated series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::poly::LambdaPoly;
use crate::series::Series;
use crate::{LambdaSeries, Rational, RationalSeries};

/// Which number family a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberKind {
    DegenerateBernoulli,
    DegenerateEuler,
    Cauchy,
    Bernoulli,
    Euler,
}

impl NumberKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NumberKind::DegenerateBernoulli => "degenerate-bernoulli",
            NumberKind::DegenerateEuler => "degenerate-euler",
            NumberKind::Cauchy => "cauchy",
            NumberKind::Bernoulli => "bernoulli",
            NumberKind::Euler => "euler",
        }
    }

    pub fn parse(s: &str) -> Option<NumberKind> {
        Some(match s {
            "degenerate-bernoulli" => NumberKind::DegenerateBernoulli,
            "degenerate-euler" => NumberKind::DegenerateEuler,
            "cauchy" => NumberKind::Cauchy,
            "bernoulli" => NumberKind::Bernoulli,
            "euler" => NumberKind::Euler,
            _ => return None,
        })
    }
}

/// The two classical families, used to select recurrence targets and
/// the Stirling-oracle basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    Bernoulli,
    Euler,
}

/// Table of values indexed 0..=max_index; entry 0 is 1 for every kind.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberTable<T> {
    pub kind: NumberKind,
    pub values: Vec<T>,
}

impl<T: std::fmt::Display> NumberTable<T> {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// JSON: { "kind", "max_index", "values": [strings] }.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.as_str(),
            "max_index": self.max_index(),
            "values": self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl NumberTable<LambdaPoly> {
    /// Evaluate every entry at a numeric λ.
    pub fn eval_lambda(&self, v: &Rational) -> Vec<Rational> {
        self.values.iter().map(|p| p.eval(v)).collect()
    }
}

/// (x)_{n,λ} = x(x−λ)···(x−(n−1)λ) as a polynomial in λ.
pub fn falling_factorial(x: &Rational, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for k in 0..n {
        // factor x − kλ
        let factor = LambdaPoly::new(vec![x.clone(), -Rational::from_integer(k.into())]);
        acc = &acc * &factor;
    }
    acc
}

/// Series of the degenerate exponential of x: c_n = (x)_{n,λ}/n!.
pub fn degenerate_exp_series(x: &Rational, order: usize) -> LambdaSeries {
    let mut n_factorial = Rational::one();
    Series::from_fn(order, |n| {
        if n > 0 {
            n_factorial *= Rational::from_integer(n.into());
        }
        falling_factorial(x, n).scale(&n_factorial.recip())
    })
}

/// Series of (1/λ)·log(1+λt): c_0 = 0 and c_k = (−1)^{k−1} λ^{k−1}/k.
pub fn log1p_over_lambda_series(order: usize) -> LambdaSeries {
    Series::from_fn(order, |k| {
        if k == 0 {
            return LambdaPoly::zero();
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        LambdaPoly::monomial(Rational::new(sign.into(), (k as i64).into()), k - 1)
    })
}

/// Degenerate Bernoulli numbers β_{0,λ}..β_{K,λ}, as the n!-weighted
/// coefficients of ((1/λ)log(1+λt)) / (e_λ(t)−1). Both series vanish at
/// t = 0 with unit linear coefficient, so one power of t is cancelled
/// before dividing.
pub fn degenerate_bernoulli(max_index: usize) -> NumberTable<LambdaPoly> {
    let num = log1p_over_lambda_series(max_index + 1)
        .shift_down()
        .expect("log series has no constant term");
    let one = Series::one(max_index + 1);
    let den = degenerate_exp_series(&Rational::one(), max_index + 1)
        .sub(&one)
        .shift_down()
        .expect("e_λ(t) − 1 has no constant term");
    let q = num.div(&den).expect("denominator starts at 1");
    egf_table(NumberKind::DegenerateBernoulli, &q)
}

/// Degenerate Euler numbers 𝓔_{0,λ}..𝓔_{K,λ}, as the n!-weighted
/// coefficients of 2 / (e_λ(t)+1).
pub fn degenerate_euler(max_index: usize) -> NumberTable<LambdaPoly> {
    let num = Series::constant(LambdaPoly::from_int(2), max_index);
    let den = degenerate_exp_series(&Rational::one(), max_index).add(&Series::one(max_index));
    let q = num.div(&den).expect("denominator starts at 2");
    egf_table(NumberKind::DegenerateEuler, &q)
}

/// Cauchy numbers of the first kind: n!-weighted coefficients of
/// t/log(1+t), computed as the reciprocal of log(1+t)/t.
pub fn cauchy_numbers(max_index: usize) -> NumberTable<Rational> {
    let den: RationalSeries = Series::from_fn(max_index, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        Rational::new(sign.into(), ((k + 1) as i64).into())
    });
    let q = Series::one(max_index).div(&den).expect("log(1+t)/t starts at 1");
    egf_table(NumberKind::Cauchy, &q)
}

/// Classical Bernoulli or Euler numbers, by methods independent of the
/// degenerate tables: the binomial recurrence for B_n, series division
/// of 2/(e^t+1) for E_n.
pub fn classical_numbers(kind: ClassicalKind, max_index: usize) -> NumberTable<Rational> {
    match kind {
        ClassicalKind::Bernoulli => {
            let mut values: Vec<Rational> = Vec::with_capacity(max_index + 1);
            values.push(Rational::one());
            for n in 1..=max_index {
                let mut acc = Rational::zero();
                for (k, b) in values.iter().enumerate() {
                    acc += Rational::from_integer(binomial(n + 1, k)) * b;
                }
                values.push(-acc / Rational::from_integer((n as i64 + 1).into()));
            }
            NumberTable {
                kind: NumberKind::Bernoulli,
                values,
            }
        }
        ClassicalKind::Euler => {
            let mut n_factorial = Rational::one();
            let exp: RationalSeries = Series::from_fn(max_index, |n| {
                if n > 0 {
                    n_factorial *= Rational::from_integer(n.into());
                }
                n_factorial.recip()
            });
            let den = exp.add(&Series::one(max_index));
            let num = Series::constant(Rational::from_integer(2.into()), max_index);
            let q = num.div(&den).expect("e^t + 1 starts at 2");
            egf_table(NumberKind::Euler, &q)
        }
    }
}

/// Signed Stirling numbers of the first kind:
/// s(n+1,k) = s(n,k−1) − n·s(n,k), s(0,0) = 1.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    assert!(k <= n, "stirling_first requires k <= n");
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (j, v) in row.iter().enumerate() {
            let factor = BigInt::from(m);
            next[j + 1] += v;
            next[j] -= factor * v;
        }
        row = next;
    }
    row[k].clone()
}

/// Independent construction of β_{n,λ} or 𝓔_{n,λ} through the Stirling
/// expansion of the falling factorial: Σ_k s(n,k)·λ^{n−k}·B_k (resp.
/// E_k), using only the classical tables and the Stirling triangle.
pub fn oracle_degenerate_number(n: usize, kind: ClassicalKind) -> LambdaPoly {
    let classical = classical_numbers(kind, n).values;
    let mut acc = LambdaPoly::zero();
    for k in 0..=n {
        let s = Rational::from_integer(stirling_first(n, k));
        if s.is_zero() {
            continue;
        }
        acc = &acc + &LambdaPoly::monomial(s * &classical[k], n - k);
    }
    acc
}

fn egf_table<T: crate::coeff::Coeff>(kind: NumberKind, series: &Series<T>) -> NumberTable<T> {
    let values = (0..=series.order())
        .map(|n| series.coeff_egf(n).expect("index within order"))
        .collect();
    NumberTable { kind, values }
}

fn binomial(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
