//! The group law and Lie action on truncated group elements (y-degree ≤ 2).

use crate::error::AlgebraError;
use crate::lie::LieElement;
use crate::scalar::Scalar;
use crate::series::NCSeries;
use crate::word::{Letter, Word};

fn deg1_word(w: &Word) -> Result<(usize, usize), AlgebraError> {
    w.as_deg1().ok_or(AlgebraError::WrongDegree { word: *w, expected: 1, found: w.y_degree() })
}

fn deg2_word(w: &Word) -> Result<(usize, usize, usize), AlgebraError> {
    w.as_deg2().ok_or(AlgebraError::WrongDegree { word: *w, expected: 2, found: w.y_degree() })
}

/// Coefficient of `w = x^a y x^b` in the product: `a_w + b_w`.
pub fn product_deg1(a: &NCSeries, b: &NCSeries, w: &Word) -> Result<Scalar, AlgebraError> {
    deg1_word(w)?;
    Ok(a.coeff(w) + b.coeff(w))
}

/// Coefficient of `w = x^a y x^b y x^c` in the product.
pub fn product_deg2(p: &NCSeries, q: &NCSeries, w: &Word) -> Result<Scalar, AlgebraError> {
    let (a, b, c) = deg2_word(w)?;
    let d1 = Word::deg1;
    let mut out = p.coeff(w) + q.coeff(w);
    for j in 0..=b {
        out += &(&p.coeff(&d1(a, j)) * &q.coeff(&d1(b - j, c)));
    }
    for j in 0..=a {
        out -= &(&q.coeff(&d1(j, c)) * &p.coeff(&d1(a - j, b)));
    }
    for j in 0..=c {
        out += &(&q.coeff(&d1(a, j)) * &p.coeff(&d1(b, c - j)));
    }
    Ok(out)
}

/// `(Φ·Φ′)(x,y) = Φ(x,y)·Φ′(x, Φ⁻¹yΦ)`, computed by literal substitution.
pub fn substitution_product(phi: &NCSeries, phi2: &NCSeries) -> Result<NCSeries, AlgebraError> {
    let (max_len, max_ydeg) = (phi.max_len().min(phi2.max_len()), phi.max_ydeg().min(phi2.max_ydeg()));
    let phi = phi.truncate(max_len, max_ydeg);
    let inv = phi.inverse()?;
    let y = NCSeries::monomial(Word::y(), Scalar::one(), max_len, max_ydeg);
    let conj = inv.mul(&y).mul(&phi);
    let x = NCSeries::monomial(Word::x(), Scalar::one(), max_len, max_ydeg);

    let mut substituted = NCSeries::zero(max_len, max_ydeg);
    substituted.set_constant(phi2.constant().clone());
    for (w, c) in phi2.terms() {
        let mut acc = NCSeries::one(max_len, max_ydeg);
        for (i, l) in w.letters().enumerate() {
            // the remaining letters still need at least one letter each
            let room = max_len - (w.len() - i - 1);
            acc = acc.mul_trunc(if l == Letter::X { &x } else { &conj }, room, max_ydeg);
            if acc.is_empty() {
                break;
            }
        }
        substituted = substituted.add(&acc.scale(c));
    }
    Ok(phi.mul(&substituted).with_mu(phi2.mu().clone()))
}

/// `Σ_w c_w Σ_{y-slots} (w with that y replaced by g)`, truncated like `phi`.
pub fn replace_y_slots(g: &NCSeries, phi: &NCSeries) -> NCSeries {
    let (max_len, max_ydeg) = (phi.max_len(), phi.max_ydeg());
    let mut out = NCSeries::zero(max_len, max_ydeg);
    for (w, c) in phi.terms() {
        for pos in (0..w.len()).filter(|&i| w.get(i) == Letter::Y) {
            let (pre, post) = (w.slice(0, pos), w.slice(pos + 1, w.len()));
            for (v, d) in g.terms() {
                out.add_to(pre.concat(v).concat(&post), &(c * d));
            }
        }
    }
    out
}

/// The derivation action `γΦ + [y,γ]∂_yΦ` of a Lie element on a series.
pub fn grt_lie_action(g: &LieElement, phi: &NCSeries) -> NCSeries {
    let (max_len, max_ydeg) = (phi.max_len(), phi.max_ydeg());
    let gamma = g.expand(max_len).truncate(max_len, max_ydeg);
    let y = NCSeries::monomial(Word::y(), Scalar::one(), max_len, max_ydeg);
    let comm = y.mul(&gamma).sub(&gamma.mul(&y));
    gamma.mul(phi).add(&replace_y_slots(&comm, phi))
}

/// `{p, q} = [p, q] + D_p(q) − D_q(p)` with `D_p(x) = 0`, `D_p(y) = [y, p]`.
/// Both arguments must have y-degree ≤ 1.
pub fn ihara_bracket(p: &LieElement, q: &LieElement) -> Result<LieElement, AlgebraError> {
    if p.y_degree() > 1 || q.y_degree() > 1 {
        return Err(AlgebraError::BracketOverflow);
    }
    Ok(p.bracket(q)?.add(&derive(p, q)?).sub(&derive(q, p)?))
}

/// `D_p(q)` for y-degree ≤ 1 arguments: `D_p(ad_x^k(y)) = ad_x^k([y, p])`.
fn derive(p: &LieElement, q: &LieElement) -> Result<LieElement, AlgebraError> {
    let y_p = LieElement::ad(0).bracket(p)?;
    let mut out = LieElement::zero();
    for (&k, c) in q.deg1() {
        out = out.add(&y_p.ad_x_pow(k).scale(c));
    }
    Ok(out)
}

/// Degree-one words `w` with `g_w ≠ −g_{w(y,x)}`, where `w(y,x)` exchanges
/// the letters; only pairs inside the truncation are compared.
pub fn deg1_antisymmetry_violations(s: &NCSeries) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 2..=s.max_len() {
        for a in 0..len {
            let w = Word::deg1(a, len - 1 - a);
            let swapped = w.swap_letters();
            if s.fits(&swapped) && !(s.coeff(&w) + s.coeff(&swapped)).is_zero() {
                out.push(w);
            }
        }
    }
    out
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

    fn sample(seed: i64) -> NCSeries {
        let mut s = NCSeries::one(7, 2);
        for (i, t) in ["x^2y", "yx^2", "xyx", "xy", "yx", "x^3y^2", "xyxy", "x^2yxy", "xyx^3", "yx^3"].iter().enumerate() {
            s.add_to(w(t), &Scalar::rational(rat(seed * (i as i64 + 1) % 7 - 3, 1 + i as i64 % 3)));
        }
        s
    }

    #[test]
    fn units() {
        let one = NCSeries::one(7, 2);
        let a = sample(5);
        assert_eq!(substitution_product(&one, &a).unwrap(), a);
        assert_eq!(substitution_product(&a, &one).unwrap(), a);
        for v in Word::all(6, 2).into_iter().filter(|v| v.y_degree() == 2) {
            assert_eq!(product_deg2(&a, &one, &v).unwrap(), a.coeff(&v));
            assert_eq!(product_deg2(&one, &a, &v).unwrap(), a.coeff(&v));
        }
        assert_eq!(product_deg1(&a, &one, &w("x^2y")).unwrap(), a.coeff(&w("x^2y")));
    }

    #[test]
    fn wrong_degree_is_rejected() {
        let a = sample(1);
        assert!(matches!(product_deg1(&a, &a, &w("xy^2")), Err(AlgebraError::WrongDegree { expected: 1, found: 2, .. })));
        assert!(matches!(product_deg2(&a, &a, &w("xy")), Err(AlgebraError::WrongDegree { expected: 2, found: 1, .. })));
    }

    #[test]
    fn deg1_antisymmetry_propagates() {
        let mut a = NCSeries::one(6, 2);
        let mut b = NCSeries::one(6, 2);
        for (p, q, c, d) in [(1, 0, 3, 1), (0, 1, -2, 5), (2, 0, 1, -1), (1, 1, 4, 2), (0, 2, 7, 0)] {
            let v = Word::deg1(p, q);
            a.add_to(v, &r(c));
            a.add_to(v.swap_letters(), &r(-c));
            b.add_to(v, &r(d));
            b.add_to(v.swap_letters(), &r(-d));
        }
        a.add_to(w("x^2yxy"), &r(3));
        b.add_to(w("xy^2x"), &r(-1));
        let prod = substitution_product(&a, &b).unwrap();
        assert!(deg1_antisymmetry_violations(&a).is_empty());
        assert!(deg1_antisymmetry_violations(&prod).is_empty());
        let mut bad = NCSeries::one(6, 2);
        bad.add_to(w("x^2y"), &r(1));
        assert_eq!(deg1_antisymmetry_violations(&bad), vec![w("x^2y")]);
    }

    #[test]
    fn action_examples() {
        let g = LieElement::ad(2).add(&LieElement::ad(1).scale(&r(3)));
        assert_eq!(grt_lie_action(&LieElement::zero(), &sample(3)), NCSeries::zero(7, 2));
        assert_eq!(grt_lie_action(&g, &NCSeries::one(8, 2)), g.expand(8));
        // ∂-part on x²yxyx³ rewrites each y slot
        let phi = NCSeries::monomial(w("x^2yxyx^3"), Scalar::one(), 12, 3);
        let g = LieElement::ad(0);
        let gamma = g.expand(12).truncate(12, 3);
        let y = NCSeries::monomial(Word::y(), Scalar::one(), 12, 3);
        let comm = y.mul(&gamma).sub(&gamma.mul(&y));
        let left = NCSeries::monomial(w("x^2"), Scalar::one(), 12, 3);
        let mid = NCSeries::monomial(w("xyx^3"), Scalar::one(), 12, 3);
        let (l2, r2) = (NCSeries::monomial(w("x^2yx"), Scalar::one(), 12, 3), NCSeries::monomial(w("x^3"), Scalar::one(), 12, 3));
        let expected = left.mul(&comm).mul(&mid).add(&l2.mul(&comm).mul(&r2));
        assert_eq!(replace_y_slots(&comm, &phi), expected);
        assert!(expected.is_empty(), "[y, y] vanishes");
        let g = LieElement::ad(1);
        let gamma = g.expand(12).truncate(12, 3);
        let comm = y.mul(&gamma).sub(&gamma.mul(&y));
        assert_eq!(replace_y_slots(&comm, &phi), left.mul(&comm).mul(&mid).add(&l2.mul(&comm).mul(&r2)));
    }

    /// `PQ − QP + D_P(Q) − D_Q(P)` in the free associative algebra.
    fn ihara_free(p: &NCSeries, q: &NCSeries) -> NCSeries {
        let (l, d) = (p.max_len(), p.max_ydeg());
        let y = NCSeries::monomial(Word::y(), Scalar::one(), l, d);
        let dp = |a: &NCSeries, b: &NCSeries| replace_y_slots(&y.mul(a).sub(&a.mul(&y)), b);
        p.mul(q).sub(&q.mul(p)).add(&dp(p, q)).sub(&dp(q, p))
    }

    #[test]
    fn ihara_golden() {
        // [ad²,ad⁴] + ad_x⁴[y,ad²] − ad_x²[y,ad⁴]
        let b = ihara_bracket(&LieElement::ad(2), &LieElement::ad(4)).unwrap();
        let golden = LieElement::ad_bracket(1, 5).scale(&r(2)).add(&LieElement::ad_bracket(2, 4).scale(&r(5)));
        assert_eq!(b, golden);
        let (p, q) = (LieElement::ad(2).expand(8), LieElement::ad(4).expand(8));
        assert_eq!(b.expand(8), ihara_free(&p, &q));
    }

    #[test]
    fn ihara_is_bilinear_and_antisymmetric() {
        let p = LieElement::ad(1).add(&LieElement::ad(3).scale(&r(2)));
        let q = LieElement::ad(2).sub(&LieElement::ad(0));
        assert!(ihara_bracket(&p, &p).unwrap().is_zero());
        assert_eq!(ihara_bracket(&p, &q).unwrap(), ihara_bracket(&q, &p).unwrap().scale(&r(-1)));
        assert_eq!(ihara_bracket(&p.scale(&r(2)), &q).unwrap(), ihara_bracket(&p, &q).unwrap().scale(&r(2)));
        assert_eq!(ihara_bracket(&LieElement::ad_bracket(0, 1), &q), Err(AlgebraError::BracketOverflow));
    }

    #[test]
    fn ihara_free_form_satisfies_jacobi() {
        let e = |a: u32| LieElement::ad(a).expand(9).truncate(9, 3);
        let (p, q, s) = (e(1), e(2).add(&e(0)), e(3));
        let jac = ihara_free(&p, &ihara_free(&q, &s)).add(&ihara_free(&q, &ihara_free(&s, &p))).add(&ihara_free(&s, &ihara_free(&p, &q)));
        assert!(jac.is_empty(), "{jac:?}");
    }

    fn arb_sparse() -> impl Strategy<Value = NCSeries> {
        let word = (2usize..=7, any::<u8>(), any::<u8>()).prop_map(|(len, i, j)| {
            let (i, j) = (i as usize % len, j as usize % len);
            let mut v = Word::x_pow(len);
            let mut letters: Vec<Letter> = v.letters().collect();
            letters[i] = Letter::Y;
            letters[j] = Letter::Y;
            v = Word::from_letters(letters);
            if v.x_degree() == 0 {
                Word::deg1(1, 0)
            } else {
                v
            }
        });
        proptest::collection::vec((word, -6i64..=6, 1i64..=4), 0..8).prop_map(|terms| {
            let mut s = NCSeries::one(7, 2);
            for (v, n, d) in terms {
                s.add_to(v, &Scalar::rational(rat(n, d)));
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn closed_formulas_match_substitution(a in arb_sparse(), b in arb_sparse()) {
            let oracle = substitution_product(&a, &b).unwrap();
            for len in 2..=7 {
                for v in Word::all(len, 2) {
                    let formula = match v.y_degree() {
                        1 => product_deg1(&a, &b, &v).unwrap(),
                        2 => product_deg2(&a, &b, &v).unwrap(),
                        _ => continue,
                    };
                    prop_assert_eq!(formula, oracle.coeff(&v), "word {}", v);
                }
            }
        }

        #[test]
        fn substitution_keeps_shape(a in arb_sparse(), b in arb_sparse()) {
            let p = substitution_product(&a, &b).unwrap();
            prop_assert_eq!(p.constant(), &int(1));
            for (v, _) in p.terms() {
                prop_assert!(v.len() >= 2 && v.y_degree() >= 1 && v.x_degree() >= 1, "{}", v);
            }
        }
    }
}
