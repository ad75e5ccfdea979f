//! A self-contained battery of exact checks over the coefficient families.

use crate::arith::{int, rat};
use crate::at::{c2n, solve_cab, verify_c2n};
use crate::error::AssocError;
use crate::grt::substitution_product;
use crate::half::{Associators, Family};
use crate::scalar::{Atom, MzvExpr, Scalar, ZetaMonomial};
use crate::word::Word;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &str, r: Result<Option<String>, AssocError>) -> Check {
        let (passed, detail) = match r {
            Ok(None) => (true, String::new()),
            Ok(Some(d)) => (false, d),
            Err(e) => (false, e.to_string()),
        };
        Check { name: name.to_string(), passed, detail }
    }
}

fn deg2_word() -> Word {
    Word::deg2(2, 4, 0)
}

/// `(ζ(3,5) − 7/2 ζ(3)ζ(5))/(2πi)^8`, the expected `f_{x²yx⁴y}`.
pub fn expected_half_value() -> Scalar {
    let e = MzvExpr::atom(Atom::Z35).scale(&int(2)) - MzvExpr::term(ZetaMonomial::from_atoms([Atom::Z3, Atom::Z5]), int(7));
    Scalar::new(8, e.scale(&rat(1, 2))).expect("weight 8")
}

/// `(2048ζ(3,5) − 6293ζ(3)ζ(5))/(2048 (2πi)^8)`, the expected `f̃_{x²yx⁴y}`.
pub fn expected_at_value() -> Scalar {
    let e = MzvExpr::atom(Atom::Z35) - MzvExpr::term(ZetaMonomial::from_atoms([Atom::Z3, Atom::Z5]), rat(6293, 2048));
    Scalar::new(8, e).expect("weight 8")
}

fn compare(label: &str, got: Scalar, want: Scalar) -> Option<String> {
    (got != want).then(|| format!("{label}: got {got}, expected {want}"))
}

fn oracle(assoc: &Associators, lhs: (Family, Family), rhs: Family, max_len: usize) -> Result<Option<String>, AssocError> {
    let p = substitution_product(&assoc.series(lhs.0, max_len)?, &assoc.series(lhs.1, max_len)?)?;
    let diff = p.differences(&assoc.series(rhs, max_len)?);
    Ok(diff.first().map(|w| format!("{} words differ, first {w}", diff.len())))
}

fn words(max_len: usize, ydeg: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = Word> {
    (1..=max_len).flat_map(|len| Word::all(len, 2)).filter(move |w| ydeg.contains(&w.y_degree()))
}

/// Runs every check on words of length ≤ `max_len` (at most 8 for the
/// default table) and `c_{α,β}` systems for `n ≤ max_n`.
pub fn run_suite(assoc: &Associators, max_len: usize, max_n: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let w = deg2_word();
    out.push(Check::from_result("half-theorem", assoc.f(&w).map(|v| compare("f", v, expected_half_value()))));
    out.push(Check::from_result("at-theorem", assoc.at(&w).map(|v| compare("f~", v, expected_at_value()))));
    out.push(Check::from_result("psi*kz=akz", oracle(assoc, (Family::Psi, Family::Kz), Family::Akz, max_len)));
    out.push(Check::from_result("psi-half*psi-half=psi", oracle(assoc, (Family::PsiHalf, Family::PsiHalf), Family::Psi, max_len)));
    out.push(Check::from_result("psi-half*kz=half", oracle(assoc, (Family::PsiHalf, Family::Kz), Family::Half, max_len)));
    out.push(Check::from_result(
        "path-exponential",
        (|| {
            let kz = assoc.series(Family::Kz, max_len)?;
            let psi = assoc.path_exponential(&int(1), max_len)?;
            if let Some(v) = psi.differences(&assoc.series(Family::Psi, max_len)?).first() {
                return Ok(Some(format!("unit-interval exponential differs at {v}")));
            }
            let half = assoc.path_exponential(&rat(1, 2), max_len)?;
            let at = substitution_product(&half, &kz)?;
            Ok(at.differences(&assoc.series(Family::At, max_len)?).first().map(|v| format!("half-interval exponential differs at {v}")))
        })(),
    ));
    out.push(Check::from_result(
        "odd-vanishing",
        (|| {
            for v in words(max_len.min(7), 1..=2).filter(|v| v.len() % 2 == 1) {
                for f in [Family::Half, Family::At] {
                    if !assoc.coeff(f, &v)?.is_zero() {
                        return Ok(Some(format!("{f} coefficient of {v} is nonzero")));
                    }
                }
            }
            Ok(None)
        })(),
    ));
    out.push(Check::from_result(
        "degree-one-even",
        (|| {
            for v in words(max_len, 1..=1).filter(|v| v.len() % 2 == 0) {
                let u = assoc.u(&v)?;
                for f in [Family::Half, Family::At] {
                    if assoc.coeff(f, &v)? != u {
                        return Ok(Some(format!("{f} coefficient of {v} differs from u")));
                    }
                }
                if u.get(v.len() as u32).as_z2_multiple(v.len() as u32 / 2).is_none() {
                    return Ok(Some(format!("u of {v} is not a rational multiple of ζ(2)^{}", v.len() / 2)));
                }
            }
            Ok(None)
        })(),
    ));
    out.push(Check::from_result(
        "degree-one-antisymmetry",
        (|| {
            for f in Family::ALL {
                let s = assoc.series(f, max_len)?;
                if let Some(v) = crate::grt::deg1_antisymmetry_violations(&s).first() {
                    return Ok(Some(format!("{f} at {v}")));
                }
            }
            Ok(None)
        })(),
    ));
    out.push(Check::from_result(
        "c2n",
        (|| {
            for n in 1..=max_n {
                c2n(n)?;
                if !verify_c2n(n, assoc)? {
                    return Ok(Some(format!("relation fails at n = {n}")));
                }
            }
            Ok(None)
        })(),
    ));
    out.push(Check::from_result(
        "cab-consistency",
        (|| {
            for n in 1..=max_n {
                solve_cab(n, assoc)?;
            }
            Ok(None)
        })(),
    ));
    out.push(Check::from_result(
        "table-numeric",
        assoc.table().verify_numeric(1e-6).map(|_| None).map_err(AssocError::from),
    ));
    out
}
