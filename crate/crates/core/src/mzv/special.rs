use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lincomb::CompositionPoly;
use crate::arith::{big, binomial, factorial, int, sign, Rational};
use crate::error::MzvError;
use crate::scalar::{Atom, MzvExpr, ZetaMonomial};
use crate::word::Composition;

/// Bernoulli number `B_n` from `Σ_{j=0}^{n} C(n+1, j) B_j = 0`, `B_0 = 1`.
pub fn bernoulli(n: u32) -> Rational {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let s: Rational = (0..m).map(|j| big(&binomial(m + 1, j)) * &b[j as usize]).sum();
        b.push(-s / int(m as i64 + 1));
    }
    b[n as usize].clone()
}

/// `ζ(2n)` as a rational multiple of `ζ(2)^n`, from
/// `ζ(2n) = (-1)^{n-1} (2π)^{2n} B_{2n} / (2 (2n)!)` and `π² = 6ζ(2)`.
pub fn zeta_even(two_n: u32) -> Result<MzvExpr, MzvError> {
    if two_n < 2 || two_n % 2 == 1 {
        return Err(MzvError::OddArgument(two_n));
    }
    let n = two_n / 2;
    let q = sign(n as i64 - 1) * big(&BigInt::from(24).pow(n)) * bernoulli(two_n) / big(&(BigInt::from(2) * factorial(two_n)));
    Ok(MzvExpr::term(ZetaMonomial::one().times(Atom::Z2, n as u8), q))
}

/// `ζ(k)` in the basis: `0` for `k = 1`, a multiple of `ζ(2)^{k/2}` for even
/// `k`, the atom for odd `k ≤ 11`.
pub fn single_zeta(k: u32) -> Result<MzvExpr, MzvError> {
    match k {
        0 => Err(MzvError::NotAdmissible(Composition::empty())),
        1 => Ok(MzvExpr::zero()),
        k if k % 2 == 0 => zeta_even(k),
        k => Atom::single(k).map(MzvExpr::atom).ok_or(MzvError::WeightOutOfRange { weight: k, max: 11 }),
    }
}

/// Euler's reduction `2ζ(a,1) = a ζ(a+1) - Σ_{b=2}^{a-1} ζ(b) ζ(a+1-b)`.
pub fn euler_a1(a: u32) -> Result<MzvExpr, MzvError> {
    if a < 2 {
        return Err(MzvError::NotAdmissible(Composition::new(vec![a.max(1), 1])));
    }
    let mut e = single_zeta(a + 1)?.scale(&int(a as i64));
    for b in 2..a {
        e -= &(&single_zeta(b)? * &single_zeta(a + 1 - b)?);
    }
    Ok(e.scale(&Rational::new(1.into(), 2.into())))
}

/// `ζ(x^a y x^b) = (-1)^b C(a+b, a) ζ(a+b+1)` under shuffle regularization.
pub fn zeta_deg1_closed_form(a: u32, b: u32) -> CompositionPoly {
    let c = sign(b as i64) * big(&binomial(a + b, a));
    if c.is_zero() {
        return CompositionPoly::zero();
    }
    CompositionPoly::term(Composition::new(vec![a + b + 1]), c)
}
