use num_traits::One;

use super::lincomb::{CompositionPoly, WordPoly};
use crate::arith::Rational;
use crate::word::{Composition, Word};

/// Shuffle product: the sum over all interlacings of `u` and `v`.
pub fn shuffle(u: &Word, v: &Word) -> WordPoly {
    let (n, m) = (u.len(), v.len());
    // table[i][j] = u[i..] ш v[j..]
    let mut table: Vec<Vec<WordPoly>> = vec![vec![WordPoly::zero(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            table[i][j] = if i == n {
                WordPoly::single(v.slice(j, m))
            } else if j == m {
                WordPoly::single(u.slice(i, n))
            } else {
                let mut acc = prepend_word(&Word::letter(u.get(i)), &table[i + 1][j]);
                acc.add_scaled(&prepend_word(&Word::letter(v.get(j)), &table[i][j + 1]), &Rational::one());
                acc
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prepend_word(prefix: &Word, p: &WordPoly) -> WordPoly {
    p.map_keys(|w| prefix.concat(w))
}

/// Stuffle (quasi-shuffle) product of compositions.
pub fn stuffle(u: &Composition, v: &Composition) -> CompositionPoly {
    let (a, b) = (u.parts(), v.parts());
    let (n, m) = (a.len(), b.len());
    let mut table: Vec<Vec<CompositionPoly>> = vec![vec![CompositionPoly::zero(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            table[i][j] = if i == n {
                CompositionPoly::single(Composition::from(&b[j..]))
            } else if j == m {
                CompositionPoly::single(Composition::from(&a[i..]))
            } else {
                let one = Rational::one();
                let mut acc = prepend_part(a[i], &table[i + 1][j]);
                acc.add_scaled(&prepend_part(b[j], &table[i][j + 1]), &one);
                acc.add_scaled(&prepend_part(a[i] + b[j], &table[i + 1][j + 1]), &one);
                acc
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prepend_part(n: u32, p: &CompositionPoly) -> CompositionPoly {
    p.map_keys(|c| c.prepend(n))
}
