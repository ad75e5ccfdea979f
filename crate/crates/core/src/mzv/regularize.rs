use std::collections::HashMap;

use num_traits::One;

use super::lincomb::{CompositionPoly, WordPoly};
use super::products::{shuffle, stuffle};
use crate::arith::{int, Rational};
use crate::word::{Composition, Letter, Word};

/// Projects `w` onto admissible words modulo the shuffle ideal generated by
/// `x` and `y`, so that `ζ(x) = ζ(y) = 0`.
///
/// Leading `y`s are peeled with `y ш y^{k-1}v = k·y^k v + (other terms)`,
/// trailing `x`s with the mirrored identity for `x`.
pub fn shuffle_regularize(w: &Word) -> WordPoly {
    let mut memo = HashMap::new();
    reg_word(w, &mut memo)
}

fn reg_word(w: &Word, memo: &mut HashMap<Word, WordPoly>) -> WordPoly {
    if w.is_admissible() {
        return WordPoly::single(*w);
    }
    if w.x_degree() == 0 || w.y_degree() == 0 {
        return WordPoly::zero();
    }
    if let Some(p) = memo.get(w) {
        return p.clone();
    }
    let runs = w.runs();
    let (letter, k, reduced) = if runs[0].0 == Letter::Y {
        let k = runs[0].1;
        (Letter::Y, k, w.slice(1, w.len()))
    } else {
        let k = runs.last().unwrap().1;
        (Letter::X, k, w.slice(0, w.len() - 1))
    };
    let peeled = shuffle(&Word::letter(letter), &reduced);
    let inv_k = -Rational::one() / int(k as i64);
    let mut out = WordPoly::zero();
    for (v, c) in peeled.iter() {
        if v == w {
            continue;
        }
        out.add_scaled(&reg_word(v, memo), &(c * &inv_k));
    }
    debug_assert_eq!(peeled.coeff(w), int(k as i64));
    memo.insert(*w, out.clone());
    out
}

/// Projects `c` onto admissible compositions modulo the stuffle ideal
/// generated by `(1)`, so that `ζ(1) = 0`.
pub fn stuffle_regularize(c: &Composition) -> CompositionPoly {
    let mut memo = HashMap::new();
    reg_comp(c, &mut memo)
}

fn reg_comp(c: &Composition, memo: &mut HashMap<Composition, CompositionPoly>) -> CompositionPoly {
    if c.is_admissible() {
        return CompositionPoly::single(c.clone());
    }
    if let Some(p) = memo.get(c) {
        return p.clone();
    }
    let k = c.parts().iter().take_while(|&&p| p == 1).count();
    let (_, reduced) = c.split_first().unwrap();
    let peeled = stuffle(&Composition::new(vec![1]), &reduced);
    let inv_k = -Rational::one() / int(k as i64);
    let mut out = CompositionPoly::zero();
    for (v, coef) in peeled.iter() {
        if v == c {
            continue;
        }
        out.add_scaled(&reg_comp(v, memo), &(coef * &inv_k));
    }
    memo.insert(c.clone(), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::mzv::special::zeta_deg1_closed_form;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn c(s: &str) -> Composition {
        Composition::parse(s).unwrap()
    }

    #[test]
    fn worked_word_example() {
        assert_eq!(shuffle_regularize(&w("x^2yx^2")), WordPoly::term(w("x^4y"), int(6)));
    }

    #[test]
    fn admissible_words_are_fixed() {
        assert_eq!(shuffle_regularize(&w("x^4y")), WordPoly::single(w("x^4y")));
        assert_eq!(shuffle_regularize(&Word::empty()), WordPoly::single(Word::empty()));
    }

    #[test]
    fn pure_letters_vanish() {
        for n in 1..6 {
            assert!(shuffle_regularize(&Word::x_pow(n)).is_empty());
            assert!(shuffle_regularize(&Word::x_pow(n).swap_letters()).is_empty());
        }
    }

    #[test]
    fn leading_y() {
        assert_eq!(shuffle_regularize(&w("yxy")), WordPoly::term(w("xy^2"), int(-2)));
        assert_eq!(shuffle_regularize(&w("yx^4")), WordPoly::single(w("x^4y")));
    }

    #[test]
    fn worked_composition_example() {
        let expected: CompositionPoly =
            [("3,3", -1), ("2,1,3", -1), ("2,4", -1), ("2,3,1", -1)].iter().map(|(s, n)| (c(s), int(*n))).collect();
        assert_eq!(stuffle_regularize(&c("1,2,3")), expected);
    }

    #[test]
    fn stuffle_edge_cases() {
        assert_eq!(stuffle_regularize(&c("2,1")), CompositionPoly::single(c("2,1")));
        assert!(stuffle_regularize(&c("1")).is_empty());
        assert_eq!(stuffle_regularize(&c("1,1")), CompositionPoly::term(c("2"), rat(-1, 2)));
    }

    #[test]
    fn regularization_matches_degree_one_closed_form() {
        for n in 1..=7usize {
            for a in 0..=n {
                let b = n - a;
                let alg = shuffle_regularize(&Word::deg1(a, b)).map_keys(|v| v.to_composition().unwrap());
                assert_eq!(alg, zeta_deg1_closed_form(a as u32, b as u32), "x^{a}yx^{b}");
            }
        }
    }

    #[test]
    fn results_are_admissible_with_same_letter_counts() {
        for len in 1..=7 {
            for v in Word::all(len, 2) {
                for (u, _) in shuffle_regularize(&v).iter() {
                    assert!(u.is_admissible());
                    assert_eq!(u.y_degree(), v.y_degree());
                    assert_eq!(u.len(), v.len());
                }
            }
        }
    }
}
