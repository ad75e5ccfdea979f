//! Free Lie elements of y-degree ≤ 2 in the basis `x`, `ad_x^a(y)` and
//! `[ad_x^α(y), ad_x^β(y)]` (α < β), Lyndon words and the bracketing map γ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::{big, binomial, sign};
use crate::error::AlgebraError;
use crate::scalar::Scalar;
use crate::series::NCSeries;
use crate::word::{Letter, Word};

/// `x_coeff·x + Σ deg1[a]·ad_x^a(y) + Σ deg2[(α,β)]·[ad_x^α(y), ad_x^β(y)]`.
#[derive(Clone, Default, PartialEq)]
pub struct LieElement {
    x_coeff: Scalar,
    deg1: BTreeMap<u32, Scalar>,
    deg2: BTreeMap<(u32, u32), Scalar>,
}

impl LieElement {
    pub fn zero() -> LieElement {
        LieElement::default()
    }

    pub fn x() -> LieElement {
        LieElement { x_coeff: Scalar::one(), ..LieElement::default() }
    }

    /// `ad_x^a(y)`.
    pub fn ad(a: u32) -> LieElement {
        let mut e = LieElement::zero();
        e.add_deg1(a, &Scalar::one());
        e
    }

    /// `[ad_x^α(y), ad_x^β(y)]`, normalized to α < β.
    pub fn ad_bracket(alpha: u32, beta: u32) -> LieElement {
        let mut e = LieElement::zero();
        e.add_deg2(alpha, beta, &Scalar::one());
        e
    }

    pub fn x_coeff(&self) -> &Scalar {
        &self.x_coeff
    }

    pub fn deg1(&self) -> &BTreeMap<u32, Scalar> {
        &self.deg1
    }

    pub fn deg2(&self) -> &BTreeMap<(u32, u32), Scalar> {
        &self.deg2
    }

    pub fn is_zero(&self) -> bool {
        self.x_coeff.is_zero() && self.deg1.is_empty() && self.deg2.is_empty()
    }

    /// Largest y-degree present (0 for multiples of `x` and for zero).
    pub fn y_degree(&self) -> usize {
        if !self.deg2.is_empty() {
            2
        } else if !self.deg1.is_empty() {
            1
        } else {
            0
        }
    }

    pub fn add_deg1(&mut self, a: u32, c: &Scalar) {
        add_entry(&mut self.deg1, a, c);
    }

    /// Adds `c·[ad^α, ad^β]`, using antisymmetry when α > β.
    pub fn add_deg2(&mut self, alpha: u32, beta: u32, c: &Scalar) {
        match alpha.cmp(&beta) {
            Ordering::Less => add_entry(&mut self.deg2, (alpha, beta), c),
            Ordering::Greater => add_entry(&mut self.deg2, (beta, alpha), &-c),
            Ordering::Equal => {}
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.x_coeff += &other.x_coeff;
        for (&a, c) in &other.deg1 {
            out.add_deg1(a, c);
        }
        for (&(a, b), c) in &other.deg2 {
            out.add_deg2(a, b, c);
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> LieElement {
        let mut out = LieElement { x_coeff: &self.x_coeff * s, ..LieElement::zero() };
        for (&a, c) in &self.deg1 {
            out.add_deg1(a, &(c * s));
        }
        for (&(a, b), c) in &self.deg2 {
            out.add_deg2(a, b, &(c * s));
        }
        out
    }

    /// The Lie bracket, as long as the result stays within y-degree 2.
    pub fn bracket(&self, other: &LieElement) -> Result<LieElement, AlgebraError> {
        if self.y_degree() + other.y_degree() > 2
            && (!self.deg2.is_empty() && !other.deg1.is_empty()
                || !self.deg1.is_empty() && !other.deg2.is_empty()
                || !self.deg2.is_empty() && !other.deg2.is_empty())
        {
            return Err(AlgebraError::BracketOverflow);
        }
        let mut out = LieElement::zero();
        // [x, ·] raises ad-exponents; [·, x] is its negative
        let ad_x = |out: &mut LieElement, e: &LieElement, k: &Scalar| {
            for (&a, c) in &e.deg1 {
                out.add_deg1(a + 1, &(c * k));
            }
            for (&(a, b), c) in &e.deg2 {
                out.add_deg2(a + 1, b, &(c * k));
                out.add_deg2(a, b + 1, &(c * k));
            }
        };
        if !self.x_coeff.is_zero() {
            ad_x(&mut out, other, &self.x_coeff);
        }
        if !other.x_coeff.is_zero() {
            ad_x(&mut out, self, &-&other.x_coeff);
        }
        for (&a, p) in &self.deg1 {
            for (&b, q) in &other.deg1 {
                out.add_deg2(a, b, &(p * q));
            }
        }
        Ok(out)
    }

    /// `ad_x^k(self)`.
    pub fn ad_x_pow(&self, k: u32) -> LieElement {
        (0..k).fold(self.clone(), |e, _| LieElement::x().bracket(&e).expect("ad_x keeps the y-degree"))
    }

    /// Image in the free associative algebra, truncated at `max_len` and y-degree 2.
    pub fn expand(&self, max_len: usize) -> NCSeries {
        let mut out = NCSeries::zero(max_len, 2);
        out.add_to(Word::x(), &self.x_coeff);
        for (&a, c) in &self.deg1 {
            for (w, k) in expand_ad(a) {
                out.add_to(w, &c.scale(&k));
            }
        }
        for (&(a, b), c) in &self.deg2 {
            for (w, k) in expand_ad_bracket(a, b) {
                out.add_to(w, &c.scale(&k));
            }
        }
        out
    }
}

fn add_entry<K: Ord + Copy>(map: &mut BTreeMap<K, Scalar>, k: K, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(k).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&k);
    }
}

/// `ad_x^a(y) = Σ_i C(a,i)(−1)^i x^{a−i} y x^i`.
pub fn expand_ad(a: u32) -> Vec<(Word, crate::Rational)> {
    (0..=a).map(|i| (Word::deg1((a - i) as usize, i as usize), sign(i as i64) * big(&binomial(a, i)))).collect()
}

/// `[ad_x^α(y), ad_x^β(y)]` as a list of degree-2 words with coefficients.
pub fn expand_ad_bracket(alpha: u32, beta: u32) -> Vec<(Word, crate::Rational)> {
    let mut acc: BTreeMap<Word, crate::Rational> = BTreeMap::new();
    let (p, q) = (expand_ad(alpha), expand_ad(beta));
    for (u, a) in &p {
        for (v, b) in &q {
            let k = a * b;
            *acc.entry(u.concat(v)).or_insert_with(crate::Rational::zero) += &k;
            *acc.entry(v.concat(u)).or_insert_with(crate::Rational::zero) -= &k;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Coefficient of the degree-2 word `w` in `[ad_x^α(y), ad_x^β(y)]`.
pub fn ad_bracket_coeff(alpha: u32, beta: u32, w: &Word) -> crate::Rational {
    let Some((a, b, c)) = w.as_deg2() else { return crate::Rational::zero() };
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let (al, be) = (alpha as i64, beta as i64);
    // ad^α(y)·ad^β(y) hits x^a y x^b y x^c with i = α − a, j = c, b = i + β − j
    let term = |al: i64, be: i64| -> crate::Rational {
        let (i, j) = (al - a, c);
        if i < 0 || i + be - j != b || j > be {
            return crate::Rational::zero();
        }
        sign(i + j) * big(&crate::arith::binomial_i(al, i)) * big(&crate::arith::binomial_i(be, j))
    };
    term(al, be) - term(be, al)
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.x_coeff.is_zero() {
            parts.push(format!("[{}]x", self.x_coeff));
        }
        parts.extend(self.deg1.iter().map(|(a, c)| format!("[{c}]ad^{a}")));
        parts.extend(self.deg2.iter().map(|((a, b), c)| format!("[{c}][ad^{a},ad^{b}]")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn is_lyndon(w: &Word) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w.lex_cmp(&w.rotate(k)) == Ordering::Less)
}

/// Lyndon words of the given length and y-degree ≤ `max_ydeg`, in
/// lexicographic order with `x < y`.
pub fn lyndon_words(length: usize, max_ydeg: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Word::all(length, max_ydeg).into_iter().filter(is_lyndon).collect();
    out.sort_by(|a, b| a.lex_cmp(b));
    out
}

/// The standard bracketing of a Lyndon word of y-degree ≤ 2.
pub fn gamma(w: &Word) -> Result<LieElement, AlgebraError> {
    if !is_lyndon(w) {
        return Err(AlgebraError::NotLyndon(*w));
    }
    if w.y_degree() > 2 {
        return Err(AlgebraError::DegreeTooHigh(w.y_degree()));
    }
    gamma_rec(w)
}

fn gamma_rec(w: &Word) -> Result<LieElement, AlgebraError> {
    if w.len() == 1 {
        return Ok(match w.get(0) {
            Letter::X => LieElement::x(),
            Letter::Y => LieElement::ad(0),
        });
    }
    let split = (1..w.len()).find(|&k| is_lyndon(&w.slice(k, w.len()))).expect("a single letter is Lyndon");
    gamma_rec(&w.slice(0, split))?.bracket(&gamma_rec(&w.slice(split, w.len()))?)
}
