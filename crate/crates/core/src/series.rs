//! Truncated noncommutative power series in `x` and `y`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::AlgebraError;
use crate::scalar::Scalar;
use crate::word::Word;

/// Default truncation length.
pub const DEFAULT_MAX_LEN: usize = 8;
/// Default truncation in the number of `y` letters.
pub const DEFAULT_MAX_YDEG: usize = 2;

/// `constant + Σ coeffs[w]·w`, keeping only words of length `≤ max_len`
/// and y-degree `≤ max_ydeg`.
#[derive(Clone, PartialEq)]
pub struct NCSeries {
    constant: Rational,
    coeffs: BTreeMap<Word, Scalar>,
    max_len: usize,
    max_ydeg: usize,
    mu: Rational,
}

impl NCSeries {
    pub fn zero(max_len: usize, max_ydeg: usize) -> NCSeries {
        NCSeries { constant: Rational::zero(), coeffs: BTreeMap::new(), max_len, max_ydeg, mu: Rational::zero() }
    }

    pub fn one(max_len: usize, max_ydeg: usize) -> NCSeries {
        NCSeries { constant: Rational::one(), ..NCSeries::zero(max_len, max_ydeg) }
    }

    /// The single word `w` with coefficient `c`.
    pub fn monomial(w: Word, c: Scalar, max_len: usize, max_ydeg: usize) -> NCSeries {
        let mut s = NCSeries::zero(max_len, max_ydeg);
        if w.is_empty() {
            s.constant = c.as_rational().expect("constant term must be rational");
        } else {
            s.add_to(w, &c);
        }
        s
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn max_ydeg(&self) -> usize {
        self.max_ydeg
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn set_constant(&mut self, c: Rational) {
        self.constant = c;
    }

    /// The associator parameter μ (1 for KZ-type associators, 0 for group elements).
    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn with_mu(mut self, mu: Rational) -> NCSeries {
        self.mu = mu;
        self
    }

    pub fn fits(&self, w: &Word) -> bool {
        w.len() <= self.max_len && w.y_degree() <= self.max_ydeg
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        if w.is_empty() {
            return Scalar::rational(self.constant.clone());
        }
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// Adds `c` to the coefficient of `w`; words beyond the truncation are dropped.
    pub fn add_to(&mut self, w: Word, c: &Scalar) {
        if w.is_empty() {
            self.constant += c.as_rational().expect("constant term must be rational");
            return;
        }
        if c.is_zero() || !self.fits(&w) {
            return;
        }
        let slot = self.coeffs.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn set(&mut self, w: Word, c: Scalar) {
        if w.is_empty() {
            self.constant = c.as_rational().expect("constant term must be rational");
            return;
        }
        self.coeffs.remove(&w);
        self.add_to(w, &c);
    }

    /// Nonzero non-constant terms in shortlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    pub fn truncate(&self, max_len: usize, max_ydeg: usize) -> NCSeries {
        let mut out = NCSeries { constant: self.constant.clone(), mu: self.mu.clone(), ..NCSeries::zero(max_len, max_ydeg) };
        for (w, c) in &self.coeffs {
            out.add_to(*w, c);
        }
        out
    }

    pub fn add(&self, other: &NCSeries) -> NCSeries {
        let mut out = self.truncate(self.max_len.min(other.max_len), self.max_ydeg.min(other.max_ydeg));
        out.constant += &other.constant;
        for (w, c) in &other.coeffs {
            out.add_to(*w, c);
        }
        out
    }

    pub fn sub(&self, other: &NCSeries) -> NCSeries {
        self.add(&other.scale(&Scalar::rational(-Rational::one())))
    }

    /// Multiplies every non-constant coefficient by `s`; `s` must be rational
    /// for a nonzero constant term.
    pub fn scale(&self, s: &Scalar) -> NCSeries {
        let mut out = NCSeries::zero(self.max_len, self.max_ydeg).with_mu(self.mu.clone());
        if !self.constant.is_zero() {
            let r = s.as_rational().expect("scaling a nonzero constant needs a rational factor");
            out.constant = &self.constant * r;
        }
        for (w, c) in &self.coeffs {
            out.add_to(*w, &(c * s));
        }
        out
    }

    /// Concatenation product truncated at the given bounds.
    pub fn mul_trunc(&self, other: &NCSeries, max_len: usize, max_ydeg: usize) -> NCSeries {
        let mut out = NCSeries::zero(max_len, max_ydeg).with_mu(other.mu.clone());
        out.constant = &self.constant * &other.constant;
        if !other.constant.is_zero() {
            let k = Scalar::rational(other.constant.clone());
            for (u, a) in &self.coeffs {
                out.add_to(*u, &(a * &k));
            }
        }
        if !self.constant.is_zero() {
            let k = Scalar::rational(self.constant.clone());
            for (v, b) in &other.coeffs {
                out.add_to(*v, &(&k * b));
            }
        }
        for (u, a) in &self.coeffs {
            for (v, b) in &other.coeffs {
                if u.len() + v.len() <= max_len && u.y_degree() + v.y_degree() <= max_ydeg {
                    out.add_to(u.concat(v), &(a * b));
                }
            }
        }
        out
    }

    /// Concatenation product at the tighter of the two truncations.
    pub fn mul(&self, other: &NCSeries) -> NCSeries {
        self.mul_trunc(other, self.max_len.min(other.max_len), self.max_ydeg.min(other.max_ydeg))
    }

    /// The two-sided inverse, computed length by length from
    /// `b_w = -Σ_{w = uv, u ≠ 1} a_u b_v`.
    pub fn inverse(&self) -> Result<NCSeries, AlgebraError> {
        if !self.constant.is_one() {
            return Err(AlgebraError::NonUnitConstant(self.constant.to_string()));
        }
        let mut out = NCSeries::one(self.max_len, self.max_ydeg).with_mu(self.mu.clone());
        for len in 1..=self.max_len {
            for w in Word::all(len, self.max_ydeg) {
                let mut acc = Scalar::zero();
                for k in 1..=len {
                    let a = match self.coeffs.get(&w.slice(0, k)) {
                        Some(a) => a,
                        None => continue,
                    };
                    acc -= &(a * &out.coeff(&w.slice(k, len)));
                }
                out.add_to(w, &acc);
            }
        }
        Ok(out)
    }

    /// Words on which `self` and `other` differ (including the constant, as the empty word).
    pub fn differences(&self, other: &NCSeries) -> Vec<Word> {
        let mut out = Vec::new();
        if self.constant != other.constant {
            out.push(Word::empty());
        }
        let mut words: Vec<Word> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        words.sort();
        words.dedup();
        out.extend(words.into_iter().filter(|w| self.coeff(w) != other.coeff(w)));
        out
    }

    /// True when content agrees on every word that fits both truncations.
    pub fn agrees_with(&self, other: &NCSeries) -> bool {
        let (l, y) = (self.max_len.min(other.max_len), self.max_ydeg.min(other.max_ydeg));
        self.truncate(l, y).differences(&other.truncate(l, y)).is_empty()
    }
}

impl fmt::Debug for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (w, c) in &self.coeffs {
            write!(f, " + [{c}]{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn r(n: i64) -> Scalar {
        Scalar::rational(int(n))
    }

    fn one_plus(word: &str, c: i64) -> NCSeries {
        let mut s = NCSeries::one(8, 2);
        s.add_to(w(word), &r(c));
        s
    }

    #[test]
    fn square_of_one_plus_xy() {
        let a = one_plus("xy", 1);
        let p = a.mul(&a);
        assert_eq!(p.coeff(&w("xy")), r(2));
        assert_eq!(p.coeff(&w("xyxy")), r(1));
        assert_eq!(p.len(), 2);
        assert_eq!(p.constant(), &int(1));
    }

    #[test]
    fn unit_is_neutral() {
        let a = one_plus("x^2y", 5);
        assert_eq!(a.mul(&NCSeries::one(8, 2)), a);
    }

    #[test]
    fn concatenation_coefficient() {
        let p = one_plus("x^2y", 3).mul(&one_plus("xy^2", 7));
        assert_eq!(p.coeff(&w("x^2yxy^2")), r(0), "y-degree 3 is truncated");
        let q = one_plus("x^2y", 3).mul_trunc(&one_plus("xy^2", 7), 8, 3);
        assert_eq!(q.coeff(&w("x^2yxy^2")), r(21));
    }

    #[test]
    fn inverse_of_one_plus_xy() {
        let inv = one_plus("xy", 1).inverse().unwrap();
        assert_eq!(inv.coeff(&w("xy")), r(-1));
        assert_eq!(inv.coeff(&w("xyxy")), r(1));
        assert_eq!(inv.coeff(&w("xyxyxy")), r(0), "y-degree 3 is truncated");
        assert_eq!(NCSeries::one(5, 2).inverse().unwrap(), NCSeries::one(5, 2));
    }

    #[test]
    fn inverse_requires_unit_constant() {
        let mut a = one_plus("xy", 1);
        a.set_constant(int(2));
        assert!(matches!(a.inverse(), Err(AlgebraError::NonUnitConstant(_))));
    }

    fn arb_series() -> impl Strategy<Value = NCSeries> {
        let word = (1usize..=4, any::<u64>()).prop_map(|(len, bits)| {
            Word::from_letters((0..len).map(|i| if bits >> i & 1 == 1 { crate::word::Letter::Y } else { crate::word::Letter::X }))
        });
        proptest::collection::vec((word, -5i64..=5, 1i64..=3), 0..5).prop_map(|terms| {
            let mut s = NCSeries::one(6, 3);
            for (w, n, d) in terms {
                s.add_to(w, &Scalar::rational(rat(n, d)));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn product_is_associative(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn inverse_is_two_sided(a in arb_series()) {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.mul(&inv), NCSeries::one(6, 3));
            prop_assert_eq!(inv.mul(&a), NCSeries::one(6, 3));
        }
    }
}
