//! Structured JSON form of a coefficient.

use assoc_core::arith::{fmt_rational, parse_rational};
use assoc_core::{Atom, MzvExpr, RenderStyle, Scalar, ZetaMonomial};
use serde::{Deserialize, Serialize};

/// One term `rational · Π atoms · (2πi)^twoPiIPower`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TermRecord {
    pub rational: String,
    pub atoms: Vec<String>,
    pub two_pi_i_power: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub word: String,
    pub family: String,
    pub terms: Vec<TermRecord>,
    pub rendered: String,
}

pub fn scalar_terms(s: &Scalar) -> Vec<TermRecord> {
    let mut out = Vec::new();
    for (k, e) in s.parts() {
        for (m, c) in e.terms() {
            out.push(TermRecord {
                rational: fmt_rational(c),
                atoms: m.atoms().into_iter().map(|a| a.name().to_string()).collect(),
                two_pi_i_power: -(k as i64),
            });
        }
    }
    out
}

/// Rebuilds the scalar; `None` for malformed terms.
pub fn terms_scalar(terms: &[TermRecord]) -> Option<Scalar> {
    let mut s = Scalar::zero();
    for t in terms {
        let c = parse_rational(&t.rational)?;
        let atoms = t.atoms.iter().map(|a| Atom::from_name(a)).collect::<Option<Vec<_>>>()?;
        let key = u32::try_from(-t.two_pi_i_power).ok()?;
        s.insert(key, MzvExpr::term(ZetaMonomial::from_atoms(atoms), c)).ok()?;
    }
    Some(s)
}

impl OutputRecord {
    pub fn new(word: &str, family: &str, value: &Scalar, style: RenderStyle) -> Result<OutputRecord, assoc_core::AlgebraError> {
        Ok(OutputRecord {
            word: word.to_string(),
            family: family.to_string(),
            terms: scalar_terms(value),
            rendered: value.render(style)?,
        })
    }

    pub fn scalar(&self) -> Option<Scalar> {
        terms_scalar(&self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use assoc_core::arith::{int, rat};

    #[test]
    fn terms_round_trip() {
        let mut s = Scalar::new(8, MzvExpr::atom(Atom::Z35) - MzvExpr::term(ZetaMonomial::from_atoms([Atom::Z3, Atom::Z5]), rat(6293, 2048))).unwrap();
        s += Scalar::rational(int(3));
        let terms = scalar_terms(&s);
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0], TermRecord { rational: "3".into(), atoms: vec![], two_pi_i_power: 0 });
        assert_eq!(terms_scalar(&terms), Some(s));
    }

    #[test]
    fn malformed_terms_are_rejected() {
        let bad = |rational: &str, atom: &str, p| vec![TermRecord { rational: rational.into(), atoms: vec![atom.into()], two_pi_i_power: p }];
        assert_eq!(terms_scalar(&bad("1/0", "z3", -3)), None);
        assert_eq!(terms_scalar(&bad("1", "z4", -4)), None);
        assert_eq!(terms_scalar(&bad("1", "z3", 3)), None);
        assert_eq!(terms_scalar(&bad("1", "z3", -5)), None, "weight differs from the key");
    }

    #[test]
    fn json_field_names() {
        let json = serde_json::to_string(&TermRecord { rational: "1".into(), atoms: vec![], two_pi_i_power: -2 }).unwrap();
        assert_eq!(json, r#"{"rational":"1","atoms":[],"twoPiIPower":-2}"#);
    }
}
