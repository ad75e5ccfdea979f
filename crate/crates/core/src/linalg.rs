//! Exact linear algebra over ℚ: Gauss–Jordan elimination and certified
//! solving of overdetermined systems.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{fmt_rational, Rational};
use crate::error::LinalgError;

/// A rectangular rational matrix with row and column labels.
#[derive(Clone, PartialEq)]
pub struct LabeledMatrix {
    rows: Vec<Vec<Rational>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

/// Result of [`LabeledMatrix::solve_overdetermined`].
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    /// One value per column for each right-hand side; every residual is exactly zero.
    Solution(Vec<Vec<Rational>>),
    /// The system has no solution; `row` is an equation whose residual is nonzero.
    Inconsistent { rhs: usize, row: usize, label: String },
    /// Consistent but with free unknowns.
    Underdetermined { rank: usize, unknowns: usize },
}

impl LabeledMatrix {
    pub fn new(rows: Vec<Vec<Rational>>, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<LabeledMatrix, LinalgError> {
        let cols = col_labels.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::Ragged { row: i, expected: cols, found: r.len() });
            }
        }
        if row_labels.len() != rows.len() {
            return Err(LinalgError::LabelCount { expected: rows.len(), found: row_labels.len() });
        }
        for labels in [&row_labels, &col_labels] {
            let mut seen = HashSet::new();
            if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(LinalgError::DuplicateLabel(dup.clone()));
            }
        }
        Ok(LabeledMatrix { rows, row_labels, col_labels })
    }

    /// Labels rows `r0, r1, …` and columns `c0, c1, …`.
    pub fn unlabeled(rows: Vec<Vec<Rational>>) -> Result<LabeledMatrix, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rl = (0..rows.len()).map(|i| format!("r{i}")).collect();
        let cl = (0..cols).map(|j| format!("c{j}")).collect();
        LabeledMatrix::new(rows, rl, cl)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<LabeledMatrix, LinalgError> {
        LabeledMatrix::unlabeled(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// Reduced row-echelon form with column-order, first-nonzero pivoting.
    /// Returns the reduced matrix (rows carry the label of the source row
    /// that was swapped into place) and the pivot columns.
    pub fn rref(&self) -> (LabeledMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut labels = self.row_labels.clone();
        let pivots = eliminate(&mut rows, &mut labels, self.n_cols(), &mut []);
        (LabeledMatrix { rows, row_labels: labels, col_labels: self.col_labels.clone() }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `A x = b` for every `b` in `rhs`. A solution is returned only
    /// when the rank equals the number of columns and `A x - b` is exactly
    /// zero on every row.
    pub fn solve_overdetermined(&self, rhs: &[Vec<Rational>]) -> Result<SolveOutcome, LinalgError> {
        for b in rhs {
            if b.len() != self.n_rows() {
                return Err(LinalgError::RhsShape { expected: self.n_rows(), found: b.len() });
            }
        }
        let n = self.n_cols();
        let mut rows = self.rows.clone();
        let mut labels = self.row_labels.clone();
        let mut aug: Vec<Vec<Rational>> = (0..self.n_rows()).map(|i| rhs.iter().map(|b| b[i].clone()).collect()).collect();
        let pivots = eliminate(&mut rows, &mut labels, n, &mut aug);

        let mut solutions = Vec::with_capacity(rhs.len());
        for (k, b) in rhs.iter().enumerate() {
            let mut x = vec![Rational::zero(); n];
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = aug[i][k].clone();
            }
            if let Some(row) = self.first_nonzero_residual(&x, b) {
                return Ok(SolveOutcome::Inconsistent { rhs: k, row, label: self.row_labels[row].clone() });
            }
            solutions.push(x);
        }
        if pivots.len() < n {
            return Ok(SolveOutcome::Underdetermined { rank: pivots.len(), unknowns: n });
        }
        Ok(SolveOutcome::Solution(solutions))
    }

    /// Index of the first row with `(A x - b)_i ≠ 0`.
    pub fn first_nonzero_residual(&self, x: &[Rational], b: &[Rational]) -> Option<usize> {
        self.rows.iter().zip(b).position(|(row, bi)| {
            let lhs: Rational = row.iter().zip(x).filter(|(a, _)| !a.is_zero()).map(|(a, v)| a * v).sum();
            lhs != *bi
        })
    }
}

/// In-place Gauss–Jordan on the first `n_cols` columns of `rows`, mirroring
/// every row operation on `aug`. Returns the pivot columns.
fn eliminate(rows: &mut [Vec<Rational>], labels: &mut [String], n_cols: usize, aug: &mut [Vec<Rational>]) -> Vec<usize> {
    let has_aug = !aug.is_empty();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        labels.swap(r, p);
        if has_aug {
            aug.swap(r, p);
        }
        let inv = Rational::one() / &rows[r][c];
        if !inv.is_one() {
            for v in rows[r].iter_mut() {
                *v *= &inv;
            }
            if has_aug {
                for v in aug[r].iter_mut() {
                    *v *= &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let pivot_aug = if has_aug { aug[r].clone() } else { Vec::new() };
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for (v, pv) in rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            if has_aug {
                for (v, pv) in aug[i].iter_mut().zip(&pivot_aug) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Debug for LabeledMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>8} {}", "", self.col_labels.join(" "))?;
        for (l, r) in self.row_labels.iter().zip(&self.rows) {
            let cells: Vec<String> = r.iter().map(fmt_rational).collect();
            writeln!(f, "{l:>8} {}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn rank_one_matrix() {
        let m = LabeledMatrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(p, vec![0]);
        assert_eq!(r.rows()[0], vec![int(1), int(2)]);
        assert_eq!(r.rows()[1], vec![int(0), int(0)]);
    }

    #[test]
    fn identity_is_fixed() {
        let m = LabeledMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(r.rows(), m.rows());
    }

    #[test]
    fn duplicated_equation_solves() {
        let m = LabeledMatrix::from_ints(&[&[1], &[1], &[1]]).unwrap();
        let out = m.solve_overdetermined(&[vec![int(1), int(1), int(1)]]).unwrap();
        assert_eq!(out, SolveOutcome::Solution(vec![vec![int(1)]]));
    }

    #[test]
    fn contradiction_is_reported_with_witness() {
        let m = LabeledMatrix::from_ints(&[&[1], &[1]]).unwrap();
        let out = m.solve_overdetermined(&[vec![int(1), int(2)]]).unwrap();
        assert_eq!(out, SolveOutcome::Inconsistent { rhs: 0, row: 1, label: "r1".into() });
    }

    #[test]
    fn free_unknowns_are_reported() {
        let m = LabeledMatrix::from_ints(&[&[1, 1], &[2, 2]]).unwrap();
        let out = m.solve_overdetermined(&[vec![int(1), int(2)]]).unwrap();
        assert_eq!(out, SolveOutcome::Underdetermined { rank: 1, unknowns: 2 });
    }

    #[test]
    fn shape_and_label_errors() {
        assert!(matches!(LabeledMatrix::unlabeled(vec![vec![int(1)], vec![]]), Err(LinalgError::Ragged { row: 1, .. })));
        let dup = LabeledMatrix::new(vec![vec![int(1)], vec![int(2)]], vec!["a".into(), "a".into()], vec!["c".into()]);
        assert_eq!(dup, Err(LinalgError::DuplicateLabel("a".into())));
        let m = LabeledMatrix::from_ints(&[&[1]]).unwrap();
        assert!(matches!(m.solve_overdetermined(&[vec![]]), Err(LinalgError::RhsShape { .. })));
    }

    #[test]
    fn several_right_hand_sides() {
        let m = LabeledMatrix::from_ints(&[&[2, 0], &[0, 3], &[2, 3]]).unwrap();
        let out = m.solve_overdetermined(&[vec![int(2), int(3), int(5)], vec![int(1), int(0), int(1)]]).unwrap();
        assert_eq!(out, SolveOutcome::Solution(vec![vec![int(1), int(1)], vec![rat(1, 2), int(0)]]));
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec((-4i64..=4).prop_map(int), c), r)
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(rows in arb_matrix()) {
            let m = LabeledMatrix::unlabeled(rows).unwrap();
            let (once, p1) = m.rref();
            let (twice, p2) = once.rref();
            prop_assert_eq!(once.rows(), twice.rows());
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn solutions_have_zero_residual(rows in arb_matrix(), xs in proptest::collection::vec(-3i64..=3, 4)) {
            let m = LabeledMatrix::unlabeled(rows).unwrap();
            let x: Vec<Rational> = xs.into_iter().take(m.n_cols()).map(int).collect();
            prop_assume!(x.len() == m.n_cols());
            let b: Vec<Rational> = m.rows().iter().map(|r| r.iter().zip(&x).map(|(a, v)| a * v).sum()).collect();
            match m.solve_overdetermined(std::slice::from_ref(&b)).unwrap() {
                SolveOutcome::Solution(s) => {
                    prop_assert_eq!(m.first_nonzero_residual(&s[0], &b), None);
                    prop_assert_eq!(&s[0], &x);
                }
                SolveOutcome::Underdetermined { rank, unknowns } => prop_assert!(rank < unknowns),
                SolveOutcome::Inconsistent { .. } => prop_assert!(false, "constructed system is consistent"),
            }
        }
    }
}
