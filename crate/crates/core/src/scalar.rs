//! The graded coefficient ring: rational combinations of basis zeta monomials,
//! tagged with formal powers of `(2πi)⁻¹`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{big, fmt_rational, lcm_denominators, Rational};
use crate::error::AlgebraError;

/// Basis atoms. `Z35` is the irreducible double value `ζ(3,5)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Z2,
    Z3,
    Z5,
    Z7,
    Z9,
    Z11,
    Z35,
}

impl Atom {
    pub const ALL: [Atom; 7] = [Atom::Z2, Atom::Z3, Atom::Z5, Atom::Z7, Atom::Z9, Atom::Z11, Atom::Z35];

    fn index(self) -> usize {
        self as usize
    }

    pub fn weight(self) -> u32 {
        match self {
            Atom::Z2 => 2,
            Atom::Z3 => 3,
            Atom::Z5 => 5,
            Atom::Z7 => 7,
            Atom::Z9 => 9,
            Atom::Z11 => 11,
            Atom::Z35 => 8,
        }
    }

    /// The atom `ζ(k)` for `k ∈ {2, 3, 5, 7, 9, 11}`.
    pub fn single(k: u32) -> Option<Atom> {
        match k {
            2 => Some(Atom::Z2),
            3 => Some(Atom::Z3),
            5 => Some(Atom::Z5),
            7 => Some(Atom::Z7),
            9 => Some(Atom::Z9),
            11 => Some(Atom::Z11),
            _ => None,
        }
    }

    /// Machine name used in JSON output: `z2`, …, `z35`.
    pub fn name(self) -> &'static str {
        match self {
            Atom::Z2 => "z2",
            Atom::Z3 => "z3",
            Atom::Z5 => "z5",
            Atom::Z7 => "z7",
            Atom::Z9 => "z9",
            Atom::Z11 => "z11",
            Atom::Z35 => "z35",
        }
    }

    pub fn from_name(name: &str) -> Option<Atom> {
        Atom::ALL.into_iter().find(|a| a.name() == name)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Atom::Z2 => "ζ(2)",
            Atom::Z3 => "ζ(3)",
            Atom::Z5 => "ζ(5)",
            Atom::Z7 => "ζ(7)",
            Atom::Z9 => "ζ(9)",
            Atom::Z11 => "ζ(11)",
            Atom::Z35 => "ζ(3,5)",
        }
    }

    /// Position in printed monomials: `ζ(3,5)` first, then odd singles, `ζ(2)` last.
    fn print_rank(self) -> usize {
        match self {
            Atom::Z35 => 0,
            Atom::Z3 => 1,
            Atom::Z5 => 2,
            Atom::Z7 => 3,
            Atom::Z9 => 4,
            Atom::Z11 => 5,
            Atom::Z2 => 6,
        }
    }
}

/// A product of atoms, stored as exponent counts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZetaMonomial {
    counts: [u8; 7],
}

impl ZetaMonomial {
    pub fn one() -> ZetaMonomial {
        ZetaMonomial::default()
    }

    pub fn atom(a: Atom) -> ZetaMonomial {
        ZetaMonomial::one().times(a, 1)
    }

    pub fn from_atoms<I: IntoIterator<Item = Atom>>(atoms: I) -> ZetaMonomial {
        atoms.into_iter().fold(ZetaMonomial::one(), |m, a| m.times(a, 1))
    }

    /// `self · a^k`.
    pub fn times(mut self, a: Atom, k: u8) -> ZetaMonomial {
        self.counts[a.index()] += k;
        self
    }

    pub fn count(&self, a: Atom) -> u32 {
        self.counts[a.index()] as u32
    }

    pub fn is_one(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn weight(&self) -> u32 {
        Atom::ALL.iter().map(|a| a.weight() * self.count(*a)).sum()
    }

    pub fn mul(&self, other: &ZetaMonomial) -> ZetaMonomial {
        let mut out = *self;
        for i in 0..7 {
            out.counts[i] += other.counts[i];
        }
        out
    }

    /// The monomial with its `ζ(2)` factor removed.
    pub fn without_z2(&self) -> ZetaMonomial {
        let mut out = *self;
        out.counts[Atom::Z2.index()] = 0;
        out
    }

    /// Atoms with multiplicity in printing order.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut order = Atom::ALL.to_vec();
        order.sort_by_key(|a| a.print_rank());
        order
            .into_iter()
            .flat_map(|a| std::iter::repeat_n(a, self.count(a) as usize))
            .collect()
    }

    /// Every monomial of the given weight, in display order.
    pub fn all_of_weight(weight: u32) -> Vec<ZetaMonomial> {
        fn go(atoms: &[Atom], remaining: u32, cur: ZetaMonomial, out: &mut Vec<ZetaMonomial>) {
            if remaining == 0 {
                out.push(cur);
                return;
            }
            let Some((&a, rest)) = atoms.split_first() else { return };
            let mut k = 0u8;
            let mut m = cur;
            while a.weight() * k as u32 <= remaining {
                go(rest, remaining - a.weight() * k as u32, m, out);
                m = m.times(a, 1);
                k += 1;
            }
        }
        let mut out = Vec::new();
        go(&Atom::ALL, weight, ZetaMonomial::one(), &mut out);
        out.sort_by(display_cmp);
        out
    }

    fn display_key(&self) -> (u32, u32, usize, Vec<usize>) {
        let non_z2: Vec<usize> = self.atoms().into_iter().filter(|a| *a != Atom::Z2).map(|a| a.print_rank()).collect();
        (self.weight(), self.count(Atom::Z2), non_z2.len(), non_z2)
    }
}

/// Canonical display order: by weight, then ascending `ζ(2)` power, then
/// fewer factors first, then `ζ(3,5)` before single values.
pub fn display_cmp(a: &ZetaMonomial, b: &ZetaMonomial) -> Ordering {
    a.display_key().cmp(&b.display_key())
}

impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut order = Atom::ALL.to_vec();
        order.sort_by_key(|a| a.print_rank());
        for a in order {
            match self.count(a) {
                0 => {}
                1 => write!(f, "{}", a.symbol())?,
                k => write!(f, "{}^{}", a.symbol(), k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite rational combination of zeta monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MzvExpr {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl MzvExpr {
    pub fn zero() -> MzvExpr {
        MzvExpr::default()
    }

    pub fn one() -> MzvExpr {
        MzvExpr::rational(Rational::one())
    }

    pub fn rational(r: Rational) -> MzvExpr {
        MzvExpr::term(ZetaMonomial::one(), r)
    }

    pub fn atom(a: Atom) -> MzvExpr {
        MzvExpr::term(ZetaMonomial::atom(a), Rational::one())
    }

    pub fn term(m: ZetaMonomial, c: Rational) -> MzvExpr {
        let mut e = MzvExpr::zero();
        e.add_term(m, c);
        e
    }

    pub fn add_term(&mut self, m: ZetaMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &ZetaMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical display order.
    pub fn terms(&self) -> Vec<(&ZetaMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_cmp(a.0, b.0));
        v
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weight of all terms; `None` for zero or mixed weights.
    pub fn weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(|m| m.weight());
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, weight: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == weight)
    }

    pub fn component(&self, weight: u32) -> MzvExpr {
        MzvExpr { terms: self.terms.iter().filter(|(m, _)| m.weight() == weight).map(|(m, c)| (*m, c.clone())).collect() }
    }

    pub fn scale(&self, r: &Rational) -> MzvExpr {
        if r.is_zero() {
            return MzvExpr::zero();
        }
        MzvExpr { terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect() }
    }

    pub fn pow(&self, k: u32) -> MzvExpr {
        (0..k).fold(MzvExpr::one(), |acc, _| &acc * self)
    }

    /// The rational `q` with `self = q · ζ(2)^k`, if such exists.
    pub fn as_z2_multiple(&self, k: u32) -> Option<Rational> {
        let m = ZetaMonomial::one().times(Atom::Z2, k as u8);
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&m).cloned(),
            _ => None,
        }
    }

    /// The rational value if the expression is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_z2_multiple(0)
    }

    fn fmt_compact_terms(&self) -> Vec<(bool, String)> {
        let d = lcm_denominators(self.terms.values());
        self.terms()
            .into_iter()
            .map(|(m, c)| {
                let n = (c * big(&d)).to_integer();
                (n.is_negative(), numerator_term(&n.abs(), &m.to_string(), m.is_one()))
            })
            .collect()
    }
}

fn numerator_term(n: &BigInt, body: &str, body_empty: bool) -> String {
    if body_empty {
        n.to_string()
    } else if n.is_one() {
        body.to_string()
    } else {
        format!("{n}{body}")
    }
}

fn join_signed(parts: &[(bool, String)]) -> String {
    let mut s = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push('-'),
            (_, false) => s.push('+'),
        }
        s.push_str(body);
    }
    s
}

impl fmt::Display for MzvExpr {
    /// `ζ(3)^2 - 32/105 ζ(2)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MzvExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MzvExpr({self})")
    }
}

impl<'a> Add<&'a MzvExpr> for &'a MzvExpr {
    type Output = MzvExpr;
    fn add(self, rhs: &MzvExpr) -> MzvExpr {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MzvExpr {
    type Output = MzvExpr;
    fn add(mut self, rhs: MzvExpr) -> MzvExpr {
        self += &rhs;
        self
    }
}

impl AddAssign<&MzvExpr> for MzvExpr {
    fn add_assign(&mut self, rhs: &MzvExpr) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MzvExpr> for MzvExpr {
    fn sub_assign(&mut self, rhs: &MzvExpr) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Sub<&'a MzvExpr> for &'a MzvExpr {
    type Output = MzvExpr;
    fn sub(self, rhs: &MzvExpr) -> MzvExpr {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MzvExpr {
    type Output = MzvExpr;
    fn sub(mut self, rhs: MzvExpr) -> MzvExpr {
        self -= &rhs;
        self
    }
}

impl Neg for &MzvExpr {
    type Output = MzvExpr;
    fn neg(self) -> MzvExpr {
        MzvExpr { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for MzvExpr {
    type Output = MzvExpr;
    fn neg(self) -> MzvExpr {
        -&self
    }
}

impl<'a> Mul<&'a MzvExpr> for &'a MzvExpr {
    type Output = MzvExpr;
    fn mul(self, rhs: &MzvExpr) -> MzvExpr {
        let mut out = MzvExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MzvExpr {
    type Output = MzvExpr;
    fn mul(self, rhs: MzvExpr) -> MzvExpr {
        &self * &rhs
    }
}

/// Output styles for [`Scalar::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    /// `ζ(3)/(2πi)^3`.
    TwoPiI,
    /// `(2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)`; needs even powers of `2πi` only.
    PiPower,
}

/// `Σ_k E_k / (2πi)^k` with each `E_k` homogeneous of weight `k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<u32, MzvExpr>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::rational(Rational::one())
    }

    /// A rational constant (key 0).
    pub fn rational(r: Rational) -> Scalar {
        Scalar::new(0, MzvExpr::rational(r)).expect("constants have weight 0")
    }

    /// `expr / (2πi)^key`; rejects terms whose weight differs from `key`.
    pub fn new(key: u32, expr: MzvExpr) -> Result<Scalar, AlgebraError> {
        let mut s = Scalar::zero();
        s.insert(key, expr)?;
        Ok(s)
    }

    /// Adds `expr / (2πi)^key` in place, enforcing homogeneity.
    pub fn insert(&mut self, key: u32, expr: MzvExpr) -> Result<(), AlgebraError> {
        if let Some(m) = expr.terms.keys().find(|m| m.weight() != key) {
            return Err(AlgebraError::Inhomogeneous { key, weight: m.weight() });
        }
        self.add_unchecked(key, &expr);
        Ok(())
    }

    fn add_unchecked(&mut self, key: u32, expr: &MzvExpr) {
        if expr.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += expr;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: u32) -> MzvExpr {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn parts(&self) -> impl Iterator<Item = (u32, &MzvExpr)> {
        self.terms.iter().map(|(k, e)| (*k, e))
    }

    pub fn keys(&self) -> Vec<u32> {
        self.terms.keys().copied().collect()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).and_then(|e| e.as_rational()),
            _ => None,
        }
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(k, e)| (*k, e.scale(r))).collect() }
    }

    pub fn render(&self, style: RenderStyle) -> Result<String, AlgebraError> {
        match style {
            RenderStyle::TwoPiI => Ok(self.render_two_pi_i()),
            RenderStyle::PiPower => self.render_pi_power(),
        }
    }

    /// Pi-power style when every key is even, otherwise `2πi` style.
    pub fn render_auto(&self) -> String {
        self.render_pi_power().unwrap_or_else(|_| self.render_two_pi_i())
    }

    pub fn preferred_style(&self) -> RenderStyle {
        if self.terms.keys().all(|k| k % 2 == 0) {
            RenderStyle::PiPower
        } else {
            RenderStyle::TwoPiI
        }
    }

    fn render_two_pi_i(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let pieces: Vec<String> = self
            .terms
            .iter()
            .map(|(&k, e)| {
                let d = lcm_denominators(e.terms.values());
                let parts = e.fmt_compact_terms();
                let power = match k {
                    0 => String::new(),
                    1 => "(2πi)".to_string(),
                    _ => format!("(2πi)^{k}"),
                };
                let denom = match (d.is_one(), power.is_empty()) {
                    (true, true) => None,
                    (true, false) => Some(power),
                    (false, true) => Some(d.to_string()),
                    (false, false) => Some(format!("({d}{power})")),
                };
                fraction(&parts, denom)
            })
            .collect();
        pieces.join(" + ")
    }

    fn render_pi_power(&self) -> Result<String, AlgebraError> {
        if let Some(k) = self.terms.keys().find(|k| *k % 2 == 1) {
            return Err(AlgebraError::OddPower(*k));
        }
        if self.is_zero() {
            return Ok("0".to_string());
        }
        // (2πi)^{-2m} ζ(2)^j = π^{2j-2m} / (6^j (-4)^m)
        let mut combined: BTreeMap<ZetaMonomial, Rational> = BTreeMap::new();
        for (&k, e) in &self.terms {
            let m = k / 2;
            for (mono, c) in &e.terms {
                let j = mono.count(Atom::Z2);
                let denom = BigInt::from(6).pow(j) * BigInt::from(-4).pow(m);
                let q = c / big(&denom);
                *combined.entry(mono.without_z2()).or_insert_with(Rational::zero) += q;
            }
        }
        combined.retain(|_, q| !q.is_zero());
        if combined.is_empty() {
            return Ok("0".to_string());
        }
        let p = combined.keys().map(|m| m.weight()).max().unwrap_or(0);
        let d = lcm_denominators(combined.values());
        let mut entries: Vec<(&ZetaMonomial, &Rational)> = combined.iter().collect();
        entries.sort_by(|a, b| b.0.weight().cmp(&a.0.weight()).then(display_cmp(a.0, b.0)));
        let parts: Vec<(bool, String)> = entries
            .into_iter()
            .map(|(m, q)| {
                let n = (q * big(&d)).to_integer();
                let e = p - m.weight();
                let mut body = if m.is_one() { String::new() } else { m.to_string() };
                if e > 0 {
                    body.push_str(&format!("π^{e}"));
                }
                (n.is_negative(), numerator_term(&n.abs(), &body, body.is_empty()))
            })
            .collect();
        let denom = match (d.is_one(), p == 0) {
            (true, true) => None,
            (true, false) => Some(format!("π^{p}")),
            (false, true) => Some(d.to_string()),
            (false, false) => Some(format!("({d}π^{p})")),
        };
        Ok(fraction(&parts, denom))
    }
}

fn fraction(parts: &[(bool, String)], denom: Option<String>) -> String {
    let num = join_signed(parts);
    match denom {
        None => num,
        Some(d) if parts.len() > 1 => format!("({num})/{d}"),
        Some(d) => format!("{num}/{d}"),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_two_pi_i())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.render_two_pi_i())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, e) in &rhs.terms {
            self.add_unchecked(*k, e);
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (k, e) in &rhs.terms {
            self.add_unchecked(*k, &-e);
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(k, e)| (*k, -e)).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (k1, e1) in &self.terms {
            for (k2, e2) in &rhs.terms {
                out.add_unchecked(k1 + k2, &(e1 * e2));
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn atom(a: Atom) -> MzvExpr {
        MzvExpr::atom(a)
    }

    #[test]
    fn expression_display() {
        let e = atom(Atom::Z3).pow(2) - atom(Atom::Z2).pow(3).scale(&rat(32, 105));
        assert_eq!(e.to_string(), "ζ(3)^2 - 32/105 ζ(2)^3");
        let f = &atom(Atom::Z3).pow(2) * &atom(Atom::Z2);
        assert_eq!(f.to_string(), "ζ(3)^2ζ(2)");
        assert_eq!(MzvExpr::zero().to_string(), "0");
        assert_eq!(atom(Atom::Z5).scale(&int(-6)).to_string(), "-6 ζ(5)");
    }

    #[test]
    fn weight_eight_basis_has_four_monomials() {
        let b = ZetaMonomial::all_of_weight(8);
        let shown: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["ζ(3,5)", "ζ(3)ζ(5)", "ζ(3)^2ζ(2)", "ζ(2)^4"]);
        assert_eq!(ZetaMonomial::all_of_weight(7).len(), 3);
        assert_eq!(ZetaMonomial::all_of_weight(9).len(), 5);
    }

    #[test]
    fn homogeneity_is_enforced() {
        assert_eq!(Scalar::new(4, atom(Atom::Z3)), Err(AlgebraError::Inhomogeneous { key: 4, weight: 3 }));
        assert!(Scalar::new(3, atom(Atom::Z3)).is_ok());
        let mixed = atom(Atom::Z3) + MzvExpr::one();
        assert!(Scalar::new(3, mixed).is_err());
    }

    #[test]
    fn multiplication_adds_keys() {
        let a = Scalar::new(3, atom(Atom::Z3)).unwrap();
        let b = Scalar::new(5, atom(Atom::Z5)).unwrap();
        let p = &a * &b;
        assert_eq!(p.keys(), vec![8]);
        assert_eq!(p.get(8), &atom(Atom::Z3) * &atom(Atom::Z5));
    }

    #[test]
    fn pi_power_rendering_of_theorem_value() {
        let e = atom(Atom::Z35).scale(&rat(2, 1)) - (&atom(Atom::Z3) * &atom(Atom::Z5)).scale(&int(7));
        let s = Scalar::new(8, e.scale(&rat(1, 2))).unwrap();
        assert_eq!(s.render(RenderStyle::PiPower).unwrap(), "(2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)");
    }

    #[test]
    fn two_pi_i_rendering() {
        let s = Scalar::new(3, -atom(Atom::Z3)).unwrap();
        assert_eq!(s.render(RenderStyle::TwoPiI).unwrap(), "-ζ(3)/(2πi)^3");
        assert_eq!(s.render(RenderStyle::PiPower), Err(AlgebraError::OddPower(3)));
        assert_eq!(Scalar::zero().render(RenderStyle::PiPower).unwrap(), "0");
        assert_eq!(Scalar::zero().render(RenderStyle::TwoPiI).unwrap(), "0");
        let half = Scalar::new(5, atom(Atom::Z5).scale(&rat(1, 2))).unwrap();
        assert_eq!(half.to_string(), "ζ(5)/(2(2πi)^5)");
    }

    #[test]
    fn rational_pi_power_rendering() {
        let kz_xy = Scalar::new(2, -atom(Atom::Z2)).unwrap();
        assert_eq!(kz_xy.render(RenderStyle::TwoPiI).unwrap(), "-ζ(2)/(2πi)^2");
        assert_eq!(kz_xy.render(RenderStyle::PiPower).unwrap(), "1/24");
        assert_eq!(Scalar::rational(rat(-3, 7)).render_auto(), "-3/7");
        let z3sq = Scalar::new(6, atom(Atom::Z3).pow(2)).unwrap();
        assert_eq!(z3sq.render_auto(), "-ζ(3)^2/(64π^6)");
        let mixed = &Scalar::new(8, atom(Atom::Z35)).unwrap() + &Scalar::new(8, &atom(Atom::Z3).pow(2) * &atom(Atom::Z2)).unwrap();
        assert_eq!(mixed.render_auto(), "(6ζ(3,5)+ζ(3)^2π^2)/(1536π^8)");
    }

    #[test]
    fn multiple_keys_in_two_pi_i_style() {
        let s = &Scalar::rational(int(1)) + &Scalar::new(3, atom(Atom::Z3)).unwrap();
        assert_eq!(s.render(RenderStyle::TwoPiI).unwrap(), "1 + ζ(3)/(2πi)^3");
    }
}
