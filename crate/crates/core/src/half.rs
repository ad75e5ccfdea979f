//! Coefficient families of the associators on words of y-degree ≤ 2:
//! KZ (`u`), anti-KZ, the group element ψ (`c`), its square root (`d`),
//! `Φ_{1/2}` (`f`) and `Φ_AT` (`f̃`, see [`crate::at`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_traits::One;

use crate::arith::{int, rat, sign, Rational};
use crate::at::AtSolution;
use crate::error::{AlgebraError, AssocError};
use crate::mzv::ReductionTable;
use crate::scalar::Scalar;
use crate::series::NCSeries;
use crate::word::Word;

/// Default reduction-table weight (enough for words of length ≤ 8).
pub const DEFAULT_TABLE_WEIGHT: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `Φ_KZ`, coefficients `u_w`.
    Kz,
    /// `Φ_KZ(−x,−y)`.
    Akz,
    /// The group element ψ with `ψ·Φ_KZ = Φ_AKZ`, coefficients `c_w`.
    Psi,
    /// `ψ^{1/2}`, coefficients `d_w`.
    PsiHalf,
    /// `Φ_{1/2} = ψ^{1/2}·Φ_KZ`, coefficients `f_w`.
    Half,
    /// The Alekseev–Torossian associator, coefficients `f̃_w`.
    At,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::Kz, Family::Akz, Family::Psi, Family::PsiHalf, Family::Half, Family::At];

    pub fn name(self) -> &'static str {
        match self {
            Family::Kz => "kz",
            Family::Akz => "akz",
            Family::Psi => "psi",
            Family::PsiHalf => "psi-half",
            Family::Half => "half",
            Family::At => "at",
        }
    }

    /// The associator parameter: 1 for associators, 0 for group elements.
    pub fn mu(self) -> Rational {
        match self {
            Family::Psi | Family::PsiHalf => Rational::from_integer(0.into()),
            _ => Rational::one(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Family, String> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// `δ_{pq}`: 1 when `x^p y x^q` has odd length.
pub fn delta(p: usize, q: usize) -> bool {
    (p + q + 1) % 2 == 1
}

/// Memoized coefficient families over a shared reduction table.
///
/// Each family has its own memo behind a read-write lock, so concurrent
/// lookups only serialize on insertion.
pub struct Associators {
    table: Arc<ReductionTable>,
    memo: HashMap<Family, RwLock<HashMap<Word, Scalar>>>,
    pub(crate) at_solutions: RwLock<BTreeMap<u32, Arc<AtSolution>>>,
}

impl Associators {
    pub fn new(table: Arc<ReductionTable>) -> Associators {
        let memo = Family::ALL.into_iter().map(|f| (f, RwLock::new(HashMap::new()))).collect();
        Associators { table, memo, at_solutions: RwLock::new(BTreeMap::new()) }
    }

    /// Uses the shared table of the given weight.
    pub fn with_weight(max_weight: u32) -> Result<Associators, AssocError> {
        Ok(Associators::new(ReductionTable::shared(max_weight)?))
    }

    pub fn table(&self) -> &ReductionTable {
        &self.table
    }

    /// The coefficient of `w` in the given family.
    pub fn coeff(&self, family: Family, w: &Word) -> Result<Scalar, AssocError> {
        if w.y_degree() > 2 {
            return Err(AlgebraError::DegreeTooHigh(w.y_degree()).into());
        }
        if w.is_empty() {
            return Ok(Scalar::one());
        }
        if let Some(s) = self.memo[&family].read().expect("memo poisoned").get(w) {
            return Ok(s.clone());
        }
        let value = match family {
            Family::Kz => self.compute_u(w)?,
            Family::Akz => self.u(w)?.scale(&sign(w.len() as i64)),
            Family::Psi => self.compute_c(w)?,
            Family::PsiHalf => self.compute_d(w)?,
            Family::Half => self.compute_f(w)?,
            Family::At => self.compute_at(w)?,
        };
        self.memo[&family].write().expect("memo poisoned").insert(*w, value.clone());
        Ok(value)
    }

    pub fn u(&self, w: &Word) -> Result<Scalar, AssocError> {
        self.coeff(Family::Kz, w)
    }

    pub fn akz(&self, w: &Word) -> Result<Scalar, AssocError> {
        self.coeff(Family::Akz, w)
    }

    pub fn c(&self, w: &Word) -> Result<Scalar, AssocError> {
        self.coeff(Family::Psi, w)
    }

    pub fn d(&self, w: &Word) -> Result<Scalar, AssocError> {
        self.coeff(Family::PsiHalf, w)
    }

    pub fn f(&self, w: &Word) -> Result<Scalar, AssocError> {
        self.coeff(Family::Half, w)
    }

    pub fn at(&self, w: &Word) -> Result<Scalar, AssocError> {
        self.coeff(Family::At, w)
    }

    /// All coefficients of y-degree ≤ 2 and length ≤ `max_len` as a series.
    pub fn series(&self, family: Family, max_len: usize) -> Result<NCSeries, AssocError> {
        let mut s = NCSeries::one(max_len, 2).with_mu(family.mu());
        for len in 1..=max_len {
            for w in Word::all(len, 2) {
                s.add_to(w, &self.coeff(family, &w)?);
            }
        }
        Ok(s)
    }

    /// `u_w = (−1)^{n_w} ζ(w) / (2πi)^{|w|}` with `n_w` the number of y's.
    fn compute_u(&self, w: &Word) -> Result<Scalar, AssocError> {
        let z = self.table.zeta_word(w)?.scale(&sign(w.y_degree() as i64));
        Ok(Scalar::new(w.len() as u32, z)?)
    }

    /// The δ-weighted double sum shared by the ψ, ψ^{1/2} and Φ_{1/2} formulas.
    fn delta_sum(&self, a: usize, b: usize, c: usize) -> Result<Scalar, AssocError> {
        let d1 = Word::deg1;
        let mut out = Scalar::zero();
        for j in (0..=b).filter(|&j| delta(a, j)) {
            out += &(&self.u(&d1(a, j))? * &self.u(&d1(b - j, c))?);
        }
        for j in (0..=a).filter(|&j| delta(a - j, b)) {
            out -= &(&self.u(&d1(j, c))? * &self.u(&d1(a - j, b))?);
        }
        for j in (0..=c).filter(|&j| delta(b, c - j)) {
            out += &(&self.u(&d1(a, j))? * &self.u(&d1(b, c - j))?);
        }
        Ok(out)
    }

    fn compute_c(&self, w: &Word) -> Result<Scalar, AssocError> {
        let u = self.u(w)?;
        Ok(match w.y_degree() {
            0 => Scalar::zero(),
            1 if w.len() % 2 == 1 => u.scale(&int(-2)),
            1 => Scalar::zero(),
            _ => {
                let (a, b, c) = w.as_deg2().expect("y-degree 2");
                -&u + u.scale(&sign(w.len() as i64)) + self.delta_sum(a, b, c)?.scale(&int(2))
            }
        })
    }

    fn compute_d(&self, w: &Word) -> Result<Scalar, AssocError> {
        Ok(match w.y_degree() {
            0 => Scalar::zero(),
            1 => self.c(w)?.scale(&rat(1, 2)),
            _ if w.len() % 2 == 1 => self.c(w)?.scale(&rat(1, 2)),
            _ => {
                let (a, b, c) = w.as_deg2().expect("y-degree 2");
                self.delta_sum(a, b, c)?.scale(&rat(1, 2))
            }
        })
    }

    fn compute_f(&self, w: &Word) -> Result<Scalar, AssocError> {
        Ok(match w.y_degree() {
            0 => Scalar::zero(),
            _ if w.len() % 2 == 1 => Scalar::zero(),
            1 => self.u(w)?,
            _ => {
                let (a, b, c) = w.as_deg2().expect("y-degree 2");
                self.u(w)? - self.delta_sum(a, b, c)?.scale(&rat(1, 2))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grt::substitution_product;
    use crate::scalar::{Atom, MzvExpr, RenderStyle};

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn assoc() -> Associators {
        Associators::with_weight(8).unwrap()
    }

    #[test]
    fn kz_examples() {
        let a = assoc();
        assert_eq!(a.u(&w("x^2y")).unwrap(), Scalar::new(3, -MzvExpr::atom(Atom::Z3)).unwrap());
        assert_eq!(a.u(&w("x^2yx^4y")).unwrap(), Scalar::new(8, MzvExpr::atom(Atom::Z35)).unwrap());
        assert_eq!(a.u(&w("x^2yx^2")).unwrap(), Scalar::new(5, MzvExpr::atom(Atom::Z5).scale(&int(-6))).unwrap());
        assert_eq!(a.u(&w("xy")).unwrap().render(RenderStyle::PiPower).unwrap(), "1/24");
        assert_eq!(a.u(&w("xy")).unwrap().render(RenderStyle::TwoPiI).unwrap(), "-ζ(2)/(2πi)^2");
        assert_eq!(a.u(&w("x^3")).unwrap(), Scalar::zero());
        assert_eq!(a.u(&Word::empty()).unwrap(), Scalar::one());
    }

    #[test]
    fn akz_signs() {
        let a = assoc();
        assert_eq!(a.akz(&w("x^2y")).unwrap(), Scalar::new(3, MzvExpr::atom(Atom::Z3)).unwrap());
        assert_eq!(a.akz(&w("xyxy")).unwrap(), a.u(&w("xyxy")).unwrap());
        assert_eq!(a.akz(&w("xy^2")).unwrap(), -a.u(&w("xy^2")).unwrap());
    }

    #[test]
    fn psi_and_half_examples() {
        let a = assoc();
        assert_eq!(a.c(&w("x^2y")).unwrap(), Scalar::new(3, MzvExpr::atom(Atom::Z3).scale(&int(2))).unwrap());
        assert_eq!(a.c(&w("xy")).unwrap(), Scalar::zero());
        assert_eq!(a.d(&w("x^2y")).unwrap(), -a.u(&w("x^2y")).unwrap());
        assert_eq!(a.f(&w("xy")).unwrap(), a.u(&w("xy")).unwrap());
        assert_eq!(a.f(&w("x^2y")).unwrap(), Scalar::zero());
        let theorem = a.f(&w("x^2yx^4y")).unwrap();
        assert_eq!(theorem.render(RenderStyle::PiPower).unwrap(), "(2ζ(3,5)-7ζ(3)ζ(5))/(512π^8)");
    }

    #[test]
    fn degree_one_reversal_sign() {
        let a = assoc();
        for len in 2..=8 {
            for p in 0..len {
                let (v, rev) = (Word::deg1(p, len - 1 - p), Word::deg1(len - 1 - p, p));
                let sign = if len % 2 == 0 { -Scalar::one() } else { Scalar::one() };
                assert_eq!(a.u(&v).unwrap(), &sign * &a.u(&rev).unwrap(), "{v}");
            }
        }
        // reversal alone does not flip the sign in odd length
        assert_eq!(a.u(&w("x^2y")).unwrap(), a.u(&w("yx^2")).unwrap());
        assert!(!a.u(&w("x^2y")).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let a = assoc();
        assert!(matches!(a.u(&w("xy^3")), Err(AssocError::Algebra(AlgebraError::DegreeTooHigh(3)))));
        assert!(matches!(a.u(&w("x^8y")), Err(AssocError::Mzv(_))));
        assert_eq!("psi-half".parse::<Family>(), Ok(Family::PsiHalf));
        assert!("phi".parse::<Family>().is_err());
    }

    #[test]
    fn oracle_equations() {
        let a = assoc();
        let s = |f| a.series(f, 8).unwrap();
        let (kz, akz, psi, half_psi, half) = (s(Family::Kz), s(Family::Akz), s(Family::Psi), s(Family::PsiHalf), s(Family::Half));
        assert_eq!(substitution_product(&psi, &kz).unwrap().differences(&akz), Vec::<Word>::new());
        assert_eq!(substitution_product(&half_psi, &half_psi).unwrap().differences(&psi), Vec::<Word>::new());
        assert_eq!(substitution_product(&half_psi, &kz).unwrap().differences(&half), Vec::<Word>::new());
    }

    #[test]
    fn concurrent_lookups_agree() {
        let a = Arc::new(assoc());
        let words: Vec<Word> = Word::all(7, 2);
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let (a, words) = (a.clone(), words.clone());
                std::thread::spawn(move || words.iter().map(|v| a.f(v).unwrap()).collect::<Vec<_>>())
            })
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|p| p[0] == p[1]));
    }
}
