//! Interval-bounded numerical evaluation of zeta values.
//!
//! Partial sums are exact up to floating-point rounding; tails are enclosed
//! between integrals of the (decreasing) summand. The number of terms doubles
//! until the enclosure is narrow enough.

use num_traits::ToPrimitive;

use crate::error::MzvError;
use crate::scalar::{Atom, MzvExpr};

/// Smallest supported target error.
pub const NUMERIC_LIMIT: f64 = 1e-10;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const START_TERMS: u64 = 256;
const MAX_TERMS: u64 = 1 << 24;
const ROUNDING_SLACK: f64 = 1e-14;

/// A closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(v: f64) -> Interval {
        Interval { lo: v, hi: v }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    fn widen(self, eps: f64) -> Interval {
        Interval { lo: self.lo - eps, hi: self.hi + eps }
    }

    fn add(self, o: Interval) -> Interval {
        Interval { lo: self.lo + o.lo, hi: self.hi + o.hi }
    }

    /// Product of two intervals with nonnegative endpoints.
    fn mul_pos(self, o: Interval) -> Interval {
        Interval { lo: self.lo * o.lo, hi: self.hi * o.hi }
    }

    fn scale(self, c: f64) -> Interval {
        if c >= 0.0 {
            Interval { lo: self.lo * c, hi: self.hi * c }
        } else {
            Interval { lo: self.hi * c, hi: self.lo * c }
        }
    }
}

#[derive(Default)]
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn add(&mut self, v: f64) {
        let y = v - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }
}

/// `∫_M^∞ t^{-s} dt`.
fn power_tail(m: f64, s: f64) -> f64 {
    m.powf(1.0 - s) / (s - 1.0)
}

/// `∫_M^∞ (ln t + γ) t^{-a} dt`.
fn log_tail(m: f64, a: f64) -> f64 {
    let k = a - 1.0;
    m.powf(-k) * (m.ln() / k + 1.0 / (k * k) + EULER_GAMMA / k)
}

/// Encloses `ζ(s)`, `s ≥ 2`, using `n` explicit terms.
fn single_interval(s: u32, n: u64) -> Interval {
    let mut acc = Kahan::default();
    for k in (1..=n).rev() {
        acc.add((k as f64).powi(-(s as i32)));
    }
    let sf = s as f64;
    let nf = n as f64;
    Interval::new(acc.sum + power_tail(nf + 1.0, sf), acc.sum + power_tail(nf, sf)).widen(ROUNDING_SLACK)
}

/// Encloses `ζ(a,b) = Σ_{n>m≥1} n^{-a} m^{-b}`, `a ≥ 2`, using `n` outer terms.
fn double_interval(a: u32, b: u32, n: u64) -> Interval {
    let mut inner = Kahan::default();
    let mut outer = Kahan::default();
    for k in 1..=n {
        outer.add(inner.sum * (k as f64).powi(-(a as i32)));
        inner.add((k as f64).powi(-(b as i32)));
    }
    let (af, nf) = (a as f64, n as f64);
    let h_n = inner.sum;
    let (lo, hi) = if b == 1 {
        // ln k + γ - 1/k ≤ H_{k-1} ≤ ln k + γ
        (log_tail(nf + 1.0, af) - power_tail(nf, af + 1.0), log_tail(nf, af))
    } else {
        // H_N^{(b)} ≤ H_{k-1}^{(b)} ≤ ζ(b) for k > N
        let zeta_b_hi = h_n + power_tail(nf, b as f64);
        (h_n * power_tail(nf + 1.0, af), zeta_b_hi * power_tail(nf, af))
    };
    Interval::new(outer.sum + lo, outer.sum + hi).widen(ROUNDING_SLACK)
}

fn refine<F: Fn(u64) -> Interval>(target: f64, f: F) -> Result<Interval, MzvError> {
    if target.is_nan() || target < NUMERIC_LIMIT {
        return Err(MzvError::TargetTooSmall(target));
    }
    let mut n = START_TERMS;
    loop {
        let iv = f(n);
        if iv.width() <= 2.0 * target || n >= MAX_TERMS {
            return Ok(iv);
        }
        n *= 2;
    }
}

/// `ζ(s)` with absolute error at most `target`.
pub fn single_zeta_numeric(s: u32, target: f64) -> Result<f64, MzvError> {
    if s < 2 {
        return Err(MzvError::NotAdmissible(crate::word::Composition::new(vec![s.max(1)])));
    }
    Ok(refine(target, |n| single_interval(s, n))?.mid())
}

/// `ζ(a,b)` by double summation with absolute error at most `target`.
pub fn double_zeta_numeric(a: u32, b: u32, target: f64) -> Result<f64, MzvError> {
    if a < 2 || b < 1 {
        return Err(MzvError::NotAdmissible(crate::word::Composition::new(vec![a.max(1), b.max(1)])));
    }
    Ok(refine(target, |n| double_interval(a, b, n))?.mid())
}

fn atom_interval(atom: Atom, n: u64) -> Interval {
    match atom {
        Atom::Z35 => double_interval(3, 5, n),
        a => single_interval(a.weight(), n),
    }
}

fn expr_interval(e: &MzvExpr, n: u64) -> Interval {
    let atoms: Vec<(Atom, Interval)> = Atom::ALL.iter().map(|&a| (a, atom_interval(a, n))).collect();
    let mut total = Interval::point(0.0);
    for (m, c) in e.terms() {
        let mut iv = Interval::point(1.0);
        for (a, a_iv) in &atoms {
            for _ in 0..m.count(*a) {
                iv = iv.mul_pos(*a_iv);
            }
        }
        let cf = c.to_f64().unwrap_or(f64::NAN);
        total = total.add(iv.scale(cf).widen(cf.abs() * iv.hi * f64::EPSILON));
    }
    total
}

/// Numerical value of `e` with absolute error at most `target` (≥ [`NUMERIC_LIMIT`]).
pub fn numeric_eval(e: &MzvExpr, target: f64) -> Result<f64, MzvError> {
    Ok(refine(target, |n| expr_interval(e, n))?.mid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::mzv::special::zeta_even;

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let v = numeric_eval(&MzvExpr::atom(Atom::Z2), 1e-10).unwrap();
        assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-10);
        assert!((v - 1.644_934_066_8).abs() < 1e-9);
    }

    #[test]
    fn zeta_six_identity_vanishes_numerically() {
        let z6 = single_zeta_numeric(6, 1e-10).unwrap();
        let z2 = numeric_eval(&MzvExpr::atom(Atom::Z2), 1e-10).unwrap();
        assert!((z6 - 8.0 / 35.0 * z2.powi(3)).abs() < 1e-8);
        let e = zeta_even(6).unwrap();
        assert!((numeric_eval(&e, 1e-10).unwrap() - z6).abs() < 1e-9);
    }

    #[test]
    fn double_zeta_reference_values() {
        // ζ(2,1) = ζ(3) and ζ(3,1) = π⁴/360
        let z3 = single_zeta_numeric(3, 1e-10).unwrap();
        assert!((double_zeta_numeric(2, 1, 1e-10).unwrap() - z3).abs() < 1e-9);
        let z31 = std::f64::consts::PI.powi(4) / 360.0;
        assert!((double_zeta_numeric(3, 1, 1e-10).unwrap() - z31).abs() < 1e-9);
        // ζ(2,2) = (ζ(2)² - ζ(4)) / 2 = 3/4 ζ(4)
        let z22 = 0.75 * std::f64::consts::PI.powi(4) / 90.0;
        assert!((double_zeta_numeric(2, 2, 1e-10).unwrap() - z22).abs() < 1e-9);
    }

    #[test]
    fn enclosure_contains_known_value() {
        let pi2 = std::f64::consts::PI.powi(2) / 6.0;
        for n in [16, 256, 4096] {
            let iv = single_interval(2, n);
            assert!(iv.lo <= pi2 && pi2 <= iv.hi);
        }
        let z3 = 1.202_056_903_159_594_3;
        for n in [16, 256, 4096] {
            let iv = double_interval(2, 1, n);
            assert!(iv.lo <= z3 && z3 <= iv.hi, "{iv:?}");
        }
    }

    #[test]
    fn target_limit_is_enforced() {
        assert_eq!(numeric_eval(&MzvExpr::one(), 1e-12), Err(MzvError::TargetTooSmall(1e-12)));
        assert_eq!(numeric_eval(&MzvExpr::rational(rat(3, 4)), 1e-6).unwrap(), 0.75);
    }
}
