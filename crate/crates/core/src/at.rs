//! The Alekseev–Torossian associator: exact integrals, the coefficients
//! `c_{2n}` and `c_{α,β}` of `x_{2n+1}`, and the coefficients `f̃_w`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::{big, binomial, factorial, int, rat, sign, Rational};
use crate::error::AssocError;
use crate::grt::grt_lie_action;
use crate::half::{Associators, Family};
use crate::lie::{ad_bracket_coeff, LieElement};
use crate::linalg::{LabeledMatrix, SolveOutcome};
use crate::mzv::single_zeta;
use crate::scalar::{MzvExpr, Scalar, ZetaMonomial};
use crate::series::NCSeries;
use crate::word::Word;

/// Dense polynomial in one variable with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolynomialQ(Vec<Rational>);

impl PolynomialQ {
    pub fn new(mut coeffs: Vec<Rational>) -> PolynomialQ {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolynomialQ(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> PolynomialQ {
        PolynomialQ::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn one() -> PolynomialQ {
        PolynomialQ(vec![Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn mul(&self, other: &PolynomialQ) -> PolynomialQ {
        if self.0.is_empty() || other.0.is_empty() {
            return PolynomialQ::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolynomialQ::new(out)
    }

    pub fn pow(&self, k: u32) -> PolynomialQ {
        (0..k).fold(PolynomialQ::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * s + c)
    }

    /// The antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> PolynomialQ {
        let mut out = vec![Rational::zero()];
        out.extend(self.0.iter().enumerate().map(|(i, c)| c / int(i as i64 + 1)));
        PolynomialQ::new(out)
    }
}

pub fn integrate_poly(p: &PolynomialQ, lo: &Rational, hi: &Rational) -> Rational {
    let f = p.antiderivative();
    f.eval(hi) - f.eval(lo)
}

/// `(s(s−1))^{2n}`.
pub fn integrand(n: u32) -> PolynomialQ {
    PolynomialQ::from_ints(&[0, -1, 1]).pow(2 * n)
}

/// `I₁^{2n} = ∫₀¹ (s(s−1))^{2n} ds = ((2n)!)²/(4n+1)!`.
pub fn i1(n: u32) -> Rational {
    let f = big(&factorial(2 * n));
    &f * &f / big(&factorial(4 * n + 1))
}

/// `J₁^{2n} = ∫₀^{1/2} (s(s−1))^{2n} ds = I₁^{2n}/2`.
pub fn j1(n: u32) -> Rational {
    i1(n) / int(2)
}

/// `B_x(a,b) = ∫₀^x t^{a−1}(1−t)^{b−1} dt` for integers `a, b ≥ 1`.
pub fn incomplete_beta(x: &Rational, a: u32, b: u32) -> Rational {
    let p = PolynomialQ::from_ints(&[0, 1]).pow(a - 1).mul(&PolynomialQ::from_ints(&[1, -1]).pow(b - 1));
    integrate_poly(&p, &Rational::zero(), x)
}

/// `I_x(a,b) = B_x(a,b)/B_1(a,b)`.
pub fn regularized_incomplete_beta(x: &Rational, a: u32, b: u32) -> Rational {
    incomplete_beta(x, a, b) / incomplete_beta(&Rational::one(), a, b)
}

/// `∫₀^T (s₁(s₁−1))^{2l} ∫₀^{s₁} (s₂(s₂−1))^{2m} ds₂ ds₁`.
pub fn nested_integral(l: u32, m: u32, upper: &Rational) -> Rational {
    let inner = integrand(m).antiderivative();
    integrate_poly(&integrand(l).mul(&inner), &Rational::zero(), upper)
}

/// `J₂^{l,m}`: the nested integral up to 1/2.
pub fn j2(l: u32, m: u32) -> Rational {
    nested_integral(l, m, &rat(1, 2))
}

/// `I₂^{l,m}`: the nested integral up to 1.
pub fn i2(l: u32, m: u32) -> Rational {
    nested_integral(l, m, &Rational::one())
}

/// `c_{2n} = 2(4n+1)! ζ(2n+1) / ((2πi)^{2n+1} ((2n)!)²)`.
pub fn c2n(n: u32) -> Result<Scalar, AssocError> {
    let f = big(&factorial(2 * n));
    let k = int(2) * big(&factorial(4 * n + 1)) / (&f * &f);
    Ok(Scalar::new(2 * n + 1, single_zeta(2 * n + 1)?.scale(&k))?)
}

/// Solution of the `c_{α,β}` system for one `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AtSolution {
    pub n: u32,
    pub c2n: Scalar,
    /// Keyed by `(α, β)` with `α < β`, `α + β = 2n − 1`.
    pub cab: BTreeMap<(u32, u32), Scalar>,
    /// Number of `(a,b,c)` equations.
    pub equations: usize,
    /// Rank of the coefficient matrix.
    pub rank: usize,
}

impl AtSolution {
    /// `x_{2n+1}` truncated at y-degree 2.
    pub fn generator(&self) -> LieElement {
        let mut e = LieElement::zero();
        e.add_deg1(2 * self.n, &self.c2n);
        for (&(a, b), c) in &self.cab {
            e.add_deg2(a, b, c);
        }
        e
    }
}

fn deg1_term_sums(assoc: &Associators, a: usize, b: usize, c: usize, weight: impl Fn(u32) -> Rational) -> Result<Scalar, AssocError> {
    // Σ_{2s = a+b−p} W(s) c_{2s} u_{x^p y x^c} (C(2s,a)(−1)^a − C(2s,b)(−1)^b)
    //   + Σ_{2s = b+c−q} W(s) c_{2s} u_{x^a y x^q} C(2s,b)(−1)^b
    let bin = |n: u32, k: usize| big(&binomial(n, k as u32));
    let mut out = Scalar::zero();
    for s in (1..).take_while(|s| 2 * s <= (a + b) as u32) {
        let p = a + b - 2 * s as usize;
        let k = bin(2 * s, a) * sign(a as i64) - bin(2 * s, b) * sign(b as i64);
        if !k.is_zero() {
            out += &(&c2n(s)? * &assoc.u(&Word::deg1(p, c))?).scale(&(weight(s) * k));
        }
    }
    for s in (1..).take_while(|s| 2 * s <= (b + c) as u32) {
        let q = b + c - 2 * s as usize;
        let k = bin(2 * s, b) * sign(b as i64);
        if !k.is_zero() {
            out += &(&c2n(s)? * &assoc.u(&Word::deg1(a, q))?).scale(&(weight(s) * k));
        }
    }
    Ok(out)
}

/// Assembles and exactly solves the overdetermined system for `c_{α,β}`:
/// for every `w = x^a y x^b y x^c` of length `2n+1`,
/// `I₁^{2n} Σ c_{α,β}[ad^α,ad^β]_w = −2u_w − (terms from c_{2s} with s < n)`.
pub fn solve_cab(n: u32, assoc: &Associators) -> Result<AtSolution, AssocError> {
    if n == 0 {
        return Err(AssocError::ZeroOrder);
    }
    let weight = 2 * n + 1;
    let table = assoc.table();
    if weight > table.max_weight() || !table.has_weight(weight) {
        return Err(AssocError::TableTooSmall { n, needed: weight, have: table.max_weight() });
    }
    let len = (2 * n + 1) as usize;
    let unknowns: Vec<(u32, u32)> = (0..n).map(|a| (a, 2 * n - 1 - a)).collect();
    let words: Vec<Word> = Word::all(len, 2).into_iter().filter(|w| w.y_degree() == 2).collect();
    let basis = ZetaMonomial::all_of_weight(weight);
    let i1n = i1(n);

    let mut rows = Vec::new();
    let mut labels = Vec::new();
    let mut rhs = vec![Vec::new(); basis.len()];
    for w in &words {
        let (a, b, c) = w.as_deg2().expect("y-degree 2");
        rows.push(unknowns.iter().map(|&(al, be)| &i1n * ad_bracket_coeff(al, be, w)).collect());
        labels.push(format!("({a},{b},{c})"));
        let r = -assoc.u(w)?.scale(&int(2)) - deg1_term_sums(assoc, a, b, c, i1)?;
        debug_assert!(r.keys().iter().all(|&k| k == weight));
        let expr = r.get(weight);
        for (j, m) in basis.iter().enumerate() {
            rhs[j].push(expr.coeff(m));
        }
    }
    let cols = unknowns.iter().map(|(a, b)| format!("c({a},{b})")).collect();
    let matrix = LabeledMatrix::new(rows, labels, cols).expect("labels are distinct");
    let rank = matrix.rank();
    let solution = match matrix.solve_overdetermined(&rhs).expect("shapes match") {
        SolveOutcome::Solution(x) => x,
        SolveOutcome::Inconsistent { label, .. } => return Err(AssocError::Inconsistent { n, row: label }),
        SolveOutcome::Underdetermined { rank, unknowns } => return Err(AssocError::Underdetermined { n, rank, unknowns }),
    };
    let mut cab = BTreeMap::new();
    for (i, &key) in unknowns.iter().enumerate() {
        let mut e = MzvExpr::zero();
        for (j, m) in basis.iter().enumerate() {
            e.add_term(*m, solution[j][i].clone());
        }
        cab.insert(key, Scalar::new(weight, e)?);
    }
    Ok(AtSolution { n, c2n: c2n(n)?, cab, equations: words.len(), rank })
}

/// Checks `I₁^{2n} c_{2n} C(2n,j)(−1)^j = −2u_{x^j y x^{2n−j}}` for every `j`.
pub fn verify_c2n(n: u32, assoc: &Associators) -> Result<bool, AssocError> {
    let c = c2n(n)?;
    for j in 0..=2 * n {
        let lhs = c.scale(&(i1(n) * big(&binomial(2 * n, j)) * sign(j as i64)));
        let rhs = assoc.u(&Word::deg1(j as usize, (2 * n - j) as usize))?.scale(&int(-2));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Associators {
    /// The cached solution for `n`, solving on first use.
    pub fn at_solution(&self, n: u32) -> Result<Arc<AtSolution>, AssocError> {
        if let Some(s) = self.at_solutions.read().expect("memo poisoned").get(&n) {
            return Ok(s.clone());
        }
        let sol = Arc::new(solve_cab(n, self)?);
        self.at_solutions.write().expect("memo poisoned").insert(n, sol.clone());
        Ok(sol)
    }

    pub(crate) fn compute_at(&self, w: &Word) -> Result<Scalar, AssocError> {
        match w.y_degree() {
            0 => Ok(Scalar::zero()),
            1 if w.len() % 2 == 1 => Ok(Scalar::zero()),
            1 => self.u(w),
            _ if w.len() % 2 == 1 => {
                let value = self.at_odd_deg2(w)?;
                if !value.is_zero() {
                    return Err(AssocError::NonVanishing(*w));
                }
                Ok(value)
            }
            _ => self.at_even_deg2(w),
        }
    }

    /// The full expression for an odd-length degree-2 word; it is half the
    /// `c_{α,β}` equation and must vanish.
    fn at_odd_deg2(&self, w: &Word) -> Result<Scalar, AssocError> {
        let (a, b, c) = w.as_deg2().expect("y-degree 2");
        let n = (w.len() as u32 - 1) / 2;
        let sol = self.at_solution(n)?;
        let mut out = self.u(w)?;
        for (&(al, be), cab) in &sol.cab {
            out += &cab.scale(&(j1(n) * ad_bracket_coeff(al, be, w)));
        }
        out += &deg1_term_sums(self, a, b, c, j1)?;
        Ok(out)
    }

    /// `u_w + Σ_{l+m+1=n} J₂^{l,m} c_{2l}c_{2m}(…) + (transported degree-1 terms)`
    /// for `|w| = 2n`.
    fn at_even_deg2(&self, w: &Word) -> Result<Scalar, AssocError> {
        let (a, b, c) = w.as_deg2().expect("y-degree 2");
        let n = w.len() as u32 / 2;
        let bin = |n: u32, k: usize| big(&binomial(n, k as u32));
        let mut out = self.u(w)?;
        for l in 1..n.saturating_sub(1) {
            let m = n - 1 - l;
            let k = bin(2 * l, a) * bin(2 * m, c) * sign(a as i64 - c as i64)
                + bin(2 * m, a) * bin(2 * l, b) * sign((a + b) as i64)
                - bin(2 * m, c) * bin(2 * l, b) * sign((b + c) as i64);
            if !k.is_zero() {
                out += &(&c2n(l)? * &c2n(m)?).scale(&(j2(l, m) * k));
            }
        }
        out += &deg1_term_sums(self, a, b, c, j1)?;
        Ok(out)
    }

    /// The path-ordered exponential of `Σ_j x_{2j+1}(s(s−1))^{2j}` over
    /// `[0, upper]`, truncated at y-degree 2 and length `max_len`.
    pub fn path_exponential(&self, upper: &Rational, max_len: usize) -> Result<NCSeries, AssocError> {
        let mut out = NCSeries::one(max_len, 2).with_mu(Family::Psi.mu());
        let gens: Vec<LieElement> = (1..)
            .take_while(|&j| (2 * j + 1) as usize <= max_len)
            .map(|j| self.at_solution(j).map(|s| s.generator()))
            .collect::<Result<_, _>>()?;
        for (i, g) in gens.iter().enumerate() {
            let j = i as u32 + 1;
            let weight = integrate_poly(&integrand(j), &Rational::zero(), upper);
            out = out.add(&g.expand(max_len).scale(&Scalar::rational(weight)));
        }
        for (i, g) in gens.iter().enumerate() {
            for (k, h) in gens.iter().enumerate() {
                let (l, m) = (i as u32 + 1, k as u32 + 1);
                if (2 * (l + m + 1)) as usize > max_len {
                    continue;
                }
                let inner = NCSeries::zero(max_len, 2).add(&h.expand(max_len));
                let prod = grt_lie_action(g, &inner);
                out = out.add(&prod.scale(&Scalar::rational(nested_integral(l, m, upper))));
            }
        }
        Ok(out)
    }
}
