use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::lincomb::CompositionPoly;
use super::numeric::{double_zeta_numeric, numeric_eval, single_zeta_numeric};
use super::products::{shuffle, stuffle};
use super::regularize::{shuffle_regularize, stuffle_regularize};
use super::special::{euler_a1, single_zeta};
use crate::arith::{big, binomial, int, sign, Rational};
use crate::error::MzvError;
use crate::linalg::LabeledMatrix;
use crate::scalar::{Atom, MzvExpr, ZetaMonomial};
use crate::word::{Composition, Word};

/// Largest weight the atom set supports.
pub const MAX_TABLE_WEIGHT: u32 = 11;
/// Weight 10 would need `ζ(3,7)`; no computation here requires it.
const SKIPPED_WEIGHT: u32 = 10;
const VERIFY_TOLERANCE: f64 = 1e-6;
const VERIFY_TARGET: f64 = 1e-8;

/// Reductions of every admissible composition of depth ≤ 2 and tabulated
/// weight to the basis monomials.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTable {
    max_weight: u32,
    weights: BTreeSet<u32>,
    entries: BTreeMap<Composition, MzvExpr>,
}

/// One harvested relation `Σ c_i ζ(comp_i) = value`.
struct Relation {
    label: String,
    lhs: CompositionPoly,
    value: MzvExpr,
}

impl ReductionTable {
    /// Harvests every weight `2..=max_weight` except 10 and checks each entry
    /// against direct numerical summation.
    pub fn build(max_weight: u32) -> Result<ReductionTable, MzvError> {
        let table = ReductionTable::build_unverified(max_weight)?;
        table.verify_numeric(VERIFY_TOLERANCE)?;
        Ok(table)
    }

    /// Harvest without the numerical check.
    pub fn build_unverified(max_weight: u32) -> Result<ReductionTable, MzvError> {
        if max_weight > MAX_TABLE_WEIGHT {
            return Err(MzvError::MaxWeightTooLarge(max_weight));
        }
        let mut table = ReductionTable { max_weight, weights: BTreeSet::new(), entries: BTreeMap::new() };
        for n in (2..=max_weight).filter(|&n| n != SKIPPED_WEIGHT) {
            table.entries.extend(harvest_weight(n)?);
            table.weights.insert(n);
        }
        Ok(table)
    }

    /// A process-wide shared table, built on first use.
    pub fn shared(max_weight: u32) -> Result<Arc<ReductionTable>, MzvError> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ReductionTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("table cache poisoned").get(&max_weight) {
            return Ok(t.clone());
        }
        let built = Arc::new(ReductionTable::build(max_weight)?);
        cache.lock().expect("table cache poisoned").entry(max_weight).or_insert(built.clone());
        Ok(built)
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.weights.iter().copied()
    }

    pub fn has_weight(&self, n: u32) -> bool {
        self.weights.contains(&n)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Composition, &MzvExpr)> {
        self.entries.iter()
    }

    pub fn get(&self, c: &Composition) -> Option<&MzvExpr> {
        self.entries.get(c)
    }

    /// `ζ(c)` in the basis.
    pub fn reduce(&self, c: &Composition) -> Result<MzvExpr, MzvError> {
        if c.depth() == 0 {
            return Ok(MzvExpr::one());
        }
        if !c.is_admissible() {
            return Err(MzvError::NotAdmissible(c.clone()));
        }
        if c.weight() > self.max_weight {
            return Err(MzvError::WeightOutOfRange { weight: c.weight(), max: self.max_weight });
        }
        if c.depth() > 2 {
            return Err(MzvError::DepthTooLarge(c.clone()));
        }
        if c.depth() == 1 {
            return single_zeta(c.weight());
        }
        if !self.has_weight(c.weight()) {
            return Err(MzvError::WeightNotTabulated(c.weight()));
        }
        Ok(self.entries.get(c).cloned().expect("every tabulated composition is present"))
    }

    /// Shuffle-regularized `ζ(w)` in the basis.
    pub fn zeta_word(&self, w: &Word) -> Result<MzvExpr, MzvError> {
        if w.len() as u32 > self.max_weight {
            return Err(MzvError::WeightOutOfRange { weight: w.len() as u32, max: self.max_weight });
        }
        let mut out = MzvExpr::zero();
        for (v, c) in shuffle_regularize(w).iter() {
            let comp = v.to_composition().expect("regularized words are admissible");
            out += &self.reduce(&comp)?.scale(c);
        }
        Ok(out)
    }

    /// Compares every entry with direct summation; returns the largest deviation.
    pub fn verify_numeric(&self, tolerance: f64) -> Result<f64, MzvError> {
        let mut worst = 0.0f64;
        for (comp, expr) in &self.entries {
            let direct = match comp.parts() {
                [s] => single_zeta_numeric(*s, VERIFY_TARGET)?,
                [a, b] => double_zeta_numeric(*a, *b, VERIFY_TARGET)?,
                _ => unreachable!("table holds depth ≤ 2"),
            };
            let deviation = (direct - numeric_eval(expr, VERIFY_TARGET)?).abs();
            if deviation > tolerance {
                return Err(MzvError::NumericMismatch { comp: comp.clone(), deviation });
            }
            worst = worst.max(deviation);
        }
        Ok(worst)
    }

    /// The relation matrix harvested at weight `n`: columns are the unknown
    /// values (lexicographic) followed by the basis monomials in brackets.
    pub fn relation_matrix(n: u32) -> Result<LabeledMatrix, MzvError> {
        let (unknowns, basis) = columns(n);
        let rows = relations(n)?;
        let mut labels = Vec::new();
        let mut matrix = Vec::new();
        for r in rows {
            let mut row: Vec<Rational> = unknowns.iter().map(|c| r.lhs.coeff(c)).collect();
            for (c, _) in r.lhs.iter() {
                debug_assert!(unknowns.contains(c), "relation {} mentions ζ{c}", r.label);
            }
            row.extend(basis.iter().map(|m| -r.value.coeff(m)));
            labels.push(r.label);
            matrix.push(row);
        }
        let cols = unknowns.iter().map(|c| format!("ζ{c}")).chain(basis.iter().map(|m| format!("[{m}]"))).collect();
        Ok(LabeledMatrix::new(matrix, labels, cols).expect("relation labels are distinct"))
    }
}

fn columns(n: u32) -> (Vec<Composition>, Vec<ZetaMonomial>) {
    let mut unknowns: Vec<Composition> = (2..n).map(|a| Composition::new(vec![a, n - a])).collect();
    unknowns.push(Composition::new(vec![n]));
    unknowns.sort();
    (unknowns, ZetaMonomial::all_of_weight(n))
}

/// `ζ(x^p y x^q) = (-1)^q C(p+q, p) ζ(p+q+1)`.
fn zeta_deg1(p: usize, q: usize) -> Result<MzvExpr, MzvError> {
    let c = sign(q as i64) * big(&binomial((p + q) as u32, p as u32));
    Ok(single_zeta((p + q + 1) as u32)?.scale(&c))
}

fn word_poly_to_comps(w: &Word) -> CompositionPoly {
    shuffle_regularize(w).map_keys(|v| v.to_composition().expect("admissible"))
}

fn relations(n: u32) -> Result<Vec<Relation>, MzvError> {
    let n_us = n as usize;
    let mut out = Vec::new();

    // shuffle products of two y-degree-one words
    for l in 1..n_us {
        let m = n_us - l;
        if l > m {
            break;
        }
        for p in 0..l {
            for r in 0..m {
                let (u, v) = (Word::deg1(p, l - 1 - p), Word::deg1(r, m - 1 - r));
                if l == m && v < u {
                    continue;
                }
                let mut lhs = CompositionPoly::zero();
                for (t, c) in shuffle(&u, &v).iter() {
                    lhs.add_scaled(&word_poly_to_comps(t), c);
                }
                let value = &zeta_deg1(p, l - 1 - p)? * &zeta_deg1(r, m - 1 - r)?;
                out.push(Relation { label: format!("shuffle {u}·{v}"), lhs, value });
            }
        }
    }

    // stuffle products of two single values
    for a in 1..=n / 2 {
        let b = n - a;
        let mut lhs = CompositionPoly::zero();
        for (c, k) in stuffle(&Composition::new(vec![a]), &Composition::new(vec![b])).iter() {
            lhs.add_scaled(&stuffle_regularize(c), k);
        }
        let value = &single_zeta(a)? * &single_zeta(b)?;
        out.push(Relation { label: format!("stuffle ({a})*({b})"), lhs, value });
    }

    // both regularizations agree on a single leading 1
    if n >= 3 {
        let b = n - 1;
        let mut lhs = stuffle_regularize(&Composition::new(vec![1, b]));
        let yxy = Word::y().concat(&Word::deg1(b as usize - 1, 0));
        lhs.add_scaled(&word_poly_to_comps(&yxy), &int(-1));
        out.push(Relation { label: format!("bridge (1,{b})"), lhs, value: MzvExpr::zero() });
        out.push(Relation {
            label: format!("euler ({b},1)"),
            lhs: CompositionPoly::single(Composition::new(vec![b, 1])),
            value: euler_a1(b)?,
        });
    }

    out.push(Relation { label: format!("single ({n})"), lhs: CompositionPoly::single(Composition::new(vec![n])), value: single_zeta(n)? });
    if n == Atom::Z35.weight() {
        out.push(Relation { label: "atom (3,5)".into(), lhs: CompositionPoly::single(Composition::new(vec![3, 5])), value: MzvExpr::atom(Atom::Z35) });
    }
    Ok(out)
}

/// Solves the weight-`n` relation system for every depth-≤2 value.
pub(crate) fn harvest_weight(n: u32) -> Result<BTreeMap<Composition, MzvExpr>, MzvError> {
    let (unknowns, basis) = columns(n);
    let matrix = ReductionTable::relation_matrix(n)?;
    let (reduced, pivots) = matrix.rref();
    let nu = unknowns.len();
    if pivots.iter().any(|&p| p >= nu) {
        return Err(MzvError::BasisRelation { weight: n });
    }
    let unreduced: Vec<Composition> = (0..nu).filter(|i| !pivots.contains(i)).map(|i| unknowns[i].clone()).collect();
    if !unreduced.is_empty() {
        return Err(MzvError::RankDeficient { weight: n, unreduced });
    }
    let mut out = BTreeMap::new();
    for (row, &p) in pivots.iter().enumerate() {
        let mut value = MzvExpr::zero();
        for (j, m) in basis.iter().enumerate() {
            let c = &reduced.rows()[row][nu + j];
            if !c.is_zero() {
                value.add_term(*m, -c.clone());
            }
        }
        out.insert(unknowns[p].clone(), value);
    }
    Ok(out)
}
