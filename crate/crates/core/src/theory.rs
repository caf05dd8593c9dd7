//! The large-deviation rate function `H(t) = 1 - t + t log t`, the inverse
//! family `Ĥ_a`, and the binomial/Poisson Chernoff bounds built on `H`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::math::{exp, ln};
use core::f64::consts::PI;

/// Limit of `k(n) / log n`.
///
/// `Infinite` is a distinct regime (thresholds normalised by `k(n)` instead
/// of `log n`) and is never represented by a large float.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaMode {
    Finite(f64),
    Infinite,
}

impl BetaMode {
    pub fn finite(beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta < 0.0 {
            return Err(domain!("beta must be finite and >= 0, got {beta}"));
        }
        Ok(BetaMode::Finite(beta))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BetaMode::Infinite)
    }
}

/// `H(t) = 1 - t + t log t` for `t > 0`, `H(0) = 1`.
pub fn h_function(t: f64) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(domain!("H(t) requires finite t >= 0, got {t}"));
    }
    Ok(h_unchecked(t))
}

pub(crate) fn h_unchecked(t: f64) -> f64 {
    if t == 0.0 {
        return 1.0;
    }
    let u = t - 1.0;
    if u.abs() < 0.25 {
        // H(1+u) = sum_{m>=2} (-1)^m u^m / (m (m-1)); avoids the cancellation
        // between t log t and t - 1 near t = 1.
        let mut sum = 0.0;
        let mut pow = u * u;
        let mut m = 2.0;
        loop {
            let sign = if (m as u64) % 2 == 0 { 1.0 } else { -1.0 };
            let term = sign * pow / (m * (m - 1.0));
            sum += term;
            if term.abs() <= 1e-18 * sum.abs() || m > 80.0 {
                break;
            }
            pow *= u;
            m += 1.0;
        }
        sum
    } else {
        1.0 - t + t * ln(t)
    }
}

/// `y ↦ y H(a / y)` for `y > 0`, written as `y - a + a log(a/y)` in the stable form.
fn scaled_rate(a: f64, y: f64) -> f64 {
    y * h_unchecked(a / y)
}

/// `Ĥ_a(x)`: the unique `y >= a` with `y H(a/y) = x`.
///
/// Bracketed bisection to an absolute tolerance of `1e-12`, then a few
/// safeguarded Newton steps.
pub fn hhat(a: f64, x: f64) -> Result<f64> {
    if !a.is_finite() || a < 0.0 || !x.is_finite() || x < 0.0 {
        return Err(domain!("Ĥ_a(x) requires finite a >= 0 and x >= 0, got a={a}, x={x}"));
    }
    if a == 0.0 {
        return Ok(x);
    }
    if x == 0.0 {
        return Ok(a);
    }
    let g = |y: f64| scaled_rate(a, y) - x;
    let mut lo = a;
    let mut hi = a + x + 20.0;
    while g(hi) < 0.0 {
        hi = a + 2.0 * (hi - a);
    }
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // d/dy [y H(a/y)] = 1 - a/y
    let mut y = 0.5 * (lo + hi);
    for _ in 0..4 {
        let slope = 1.0 - a / y;
        if slope <= 0.0 {
            break;
        }
        let next = y - g(y) / slope;
        if !(next >= lo && next <= hi) || next == y {
            break;
        }
        y = next;
    }
    Ok(y)
}

/// Parameters for one part of the Chernoff-bound lemma.
///
/// All binomial variants require `p ∈ (0, 1)` and `0 <= k < n`; Poisson
/// variants require `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChernoffBound {
    /// `P[Bin(n,p) >= k] <= exp(-np H(k/np))`, for `k >= np`.
    BinomUpper { n: u64, p: f64, k: u64 },
    /// `P[Bin(n,p) <= k] <= exp(-np H(k/np))`, for `k <= np`.
    BinomLower { n: u64, p: f64, k: u64 },
    /// `P[Bin(n,p) >= k] <= exp(-(k/2) log(k/np))`, for `k >= e^2 np`.
    BinomPoly { n: u64, p: f64, k: u64 },
    /// `P[Z_t <= k] <= exp(-t H(k/t))`, for `k < t`.
    PoissonLower { t: f64, k: u64 },
    /// `P[Z_t = k] >= (2πk)^{-1/2} e^{-1/(12k)} exp(-t H(k/t))`, for `k >= 1`.
    PoissonPointLb { t: f64, k: u64 },
}

fn check_binomial(n: u64, p: f64, k: u64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(domain!("p must lie in (0, 1), got {p}"));
    }
    if k >= n {
        return Err(domain!("k < n violated: k={k}, n={n}"));
    }
    Ok(n as f64 * p)
}

fn check_rate(t: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(domain!("t > 0 violated: t={t}"));
    }
    Ok(())
}

/// Evaluates the right-hand side of the selected Chernoff bound.
///
/// Returns the bound, not the probability; preconditions are checked and a
/// violation names the inequality that failed.
pub fn chernoff_bound(bound: ChernoffBound) -> Result<f64> {
    match bound {
        ChernoffBound::BinomUpper { n, p, k } => {
            let m = check_binomial(n, p, k)?;
            if (k as f64) < m {
                return Err(domain!("k >= np violated: k={k}, np={m}"));
            }
            Ok(exp(-m * h_unchecked(k as f64 / m)))
        }
        ChernoffBound::BinomLower { n, p, k } => {
            let m = check_binomial(n, p, k)?;
            if (k as f64) > m {
                return Err(domain!("k <= np violated: k={k}, np={m}"));
            }
            Ok(exp(-m * h_unchecked(k as f64 / m)))
        }
        ChernoffBound::BinomPoly { n, p, k } => {
            let m = check_binomial(n, p, k)?;
            let e2 = core::f64::consts::E * core::f64::consts::E;
            if (k as f64) < e2 * m {
                return Err(domain!("k >= e^2 np violated: k={k}, e^2 np={}", e2 * m));
            }
            let k = k as f64;
            Ok(exp(-(k / 2.0) * ln(k / m)))
        }
        ChernoffBound::PoissonLower { t, k } => {
            check_rate(t)?;
            if (k as f64) >= t {
                return Err(domain!("k < t violated: k={k}, t={t}"));
            }
            Ok(exp(-t * h_unchecked(k as f64 / t)))
        }
        ChernoffBound::PoissonPointLb { t, k } => {
            check_rate(t)?;
            if k < 1 {
                return Err(domain!("k >= 1 violated: k={k}"));
            }
            let kf = k as f64;
            let log_bound = -0.5 * ln(2.0 * PI * kf) - 1.0 / (12.0 * kf) - t * h_unchecked(kf / t);
            Ok(exp(log_bound))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn h_examples() {
        assert_eq!(h_function(0.0).unwrap(), 1.0);
        assert_eq!(h_function(1.0).unwrap(), 0.0);
        assert!((h_function(2.0).unwrap() - 0.386_294_361_119_890_6).abs() < 1e-15);
        assert!(h_function(-0.1).is_err());
        assert!(h_function(f64::NAN).is_err());
        assert!(h_function(f64::INFINITY).is_err());
    }

    #[test]
    fn h_series_matches_direct_form_at_the_switch() {
        for &t in &[0.75, 0.7500001, 1.2499999, 1.25] {
            let direct = 1.0 - t + t * ln(t);
            assert!((h_unchecked(t) - direct).abs() < 1e-15, "t={t}");
        }
        // quadratic behaviour near 1
        let u = 1e-6;
        assert!((h_unchecked(1.0 + u) / (u * u / 2.0) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn hhat_examples() {
        assert_eq!(hhat(0.0, 5.0).unwrap(), 5.0);
        assert_eq!(hhat(2.0, 0.0).unwrap(), 2.0);
        // y - log y = 2, mpmath: 3.146193220620582585...
        assert!((hhat(1.0, 1.0).unwrap() - 3.146_193_220_620_583).abs() < 1e-11);
        assert!((hhat(1.0, 0.5).unwrap() - 2.357_676_673_945_899).abs() < 1e-11);
        assert!((hhat(2.0, 5.0).unwrap() - 10.272_681_896_349_503).abs() < 1e-10);
        assert!((hhat(10.0, 3.0).unwrap() - 19.862_468_559_702_339).abs() < 1e-10);
        assert!((hhat(0.25, 0.1).unwrap() - 0.544_688_108_964_769_3).abs() < 1e-11);
        assert!(hhat(-1.0, 1.0).is_err());
        assert!(hhat(1.0, -1.0).is_err());
    }

    #[test]
    fn chernoff_examples() {
        let b = chernoff_bound(ChernoffBound::BinomUpper { n: 10, p: 0.5, k: 5 }).unwrap();
        assert_eq!(b, 1.0);
        let b = chernoff_bound(ChernoffBound::BinomUpper { n: 20, p: 0.1, k: 5 }).unwrap();
        assert!((b - 0.205_675_898_093_441_7).abs() < 1e-12);
        let b = chernoff_bound(ChernoffBound::PoissonLower { t: 10.0, k: 5 }).unwrap();
        assert!((b - 0.215_614_303_970_734_9).abs() < 1e-12);
    }

    #[test]
    fn chernoff_preconditions_are_named() {
        let e = chernoff_bound(ChernoffBound::BinomUpper { n: 10, p: 0.5, k: 4 }).unwrap_err();
        assert!(alloc::format!("{e}").contains("k >= np"));
        let e = chernoff_bound(ChernoffBound::BinomLower { n: 10, p: 0.5, k: 6 }).unwrap_err();
        assert!(alloc::format!("{e}").contains("k <= np"));
        let e = chernoff_bound(ChernoffBound::BinomPoly { n: 40, p: 0.1, k: 20 }).unwrap_err();
        assert!(alloc::format!("{e}").contains("e^2 np"));
        let e = chernoff_bound(ChernoffBound::PoissonLower { t: 3.0, k: 3 }).unwrap_err();
        assert!(alloc::format!("{e}").contains("k < t"));
        let e = chernoff_bound(ChernoffBound::PoissonPointLb { t: 3.0, k: 0 }).unwrap_err();
        assert!(alloc::format!("{e}").contains("k >= 1"));
        assert!(chernoff_bound(ChernoffBound::BinomUpper { n: 10, p: 1.0, k: 9 }).is_err());
        assert!(chernoff_bound(ChernoffBound::BinomUpper { n: 10, p: 0.5, k: 10 }).is_err());
    }

    #[test]
    fn beta_mode_validation() {
        assert!(BetaMode::finite(-1.0).is_err());
        assert!(BetaMode::finite(f64::INFINITY).is_err());
        assert_eq!(BetaMode::finite(0.5).unwrap(), BetaMode::Finite(0.5));
    }

    proptest! {
        #[test]
        fn hhat_inverts_scaled_rate(a in 0.0f64..50.0, x in 0.0f64..100.0) {
            let y = hhat(a, x).unwrap();
            prop_assert!(y >= a);
            if y > 0.0 {
                let back = y * h_function(a / y).unwrap();
                prop_assert!((back - x).abs() <= 1e-10 * x.max(1.0));
            }
        }

        #[test]
        fn hhat_monotone_in_x_and_a(a in 0.0f64..20.0, x in 0.0f64..20.0, dx in 0.01f64..5.0, da in 0.01f64..5.0) {
            let y = hhat(a, x).unwrap();
            prop_assert!(hhat(a, x + dx).unwrap() > y);
            prop_assert!(hhat(a + da, x).unwrap() >= y);
        }

        #[test]
        fn h_is_unimodal(s in 0.0f64..1.0, t in 0.0f64..1.0) {
            let (lo, hi) = if s < t { (s, t) } else { (t, s) };
            prop_assert!(h_unchecked(lo) >= h_unchecked(hi));
            prop_assert!(h_unchecked(1.0 + lo) <= h_unchecked(1.0 + hi));
        }
    }
}
