//! Linear-algebra oracle for module decompositions.
//!
//! Builds the matrix whose columns are `h * label` for every standard monomial
//! `h` of `H_n` and every label, expressed in the standard basis of `H_(n+1)`,
//! and solves it by fraction-free Gauss–Jordan elimination over the polynomial
//! ring. Nothing here reuses the leading-term peeling of the inductive module.

use crate::coeffring::Polynomial;
use crate::heckealg::{AlgebraError, Element, HeckeAlgebra, Monomial};
use crate::inductive::{Decomposition, Inductive, Label};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("change-of-basis matrix is singular (no pivot for unknown {0})")]
    Singular(String),
    #[error("matrix is {rows} x {cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("solution does not divide exactly by its pivot")]
    Inexact,
    #[error("back-substitution does not reproduce the input")]
    Validation,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelFamily {
    J,
    T,
}

type Row = BTreeMap<usize, Polynomial>;

/// Coefficients for every `(h, label)` unknown, one solution per right-hand side.
pub struct OracleSolution {
    pub unknowns: Vec<(Monomial, Label)>,
    pub values: Vec<Vec<Polynomial>>,
}

/// Decompose `x` in `H_(n+1)` by solving the linear system directly.
pub fn oracle_decompose(
    ind: &Inductive,
    x: &Element,
    family: LabelFamily,
) -> Result<Decomposition, OracleError> {
    Ok(oracle_decompose_many(ind, std::slice::from_ref(x), family)?.remove(0))
}

/// Decompose several elements of the same `H_(n+1)` with one elimination.
pub fn oracle_decompose_many(
    ind: &Inductive,
    xs: &[Element],
    family: LabelFamily,
) -> Result<Vec<Decomposition>, OracleError> {
    let alg = ind.algebra();
    let top = xs[0].n();
    let sol = solve(ind, top, family, xs)?;
    let mut out = Vec::with_capacity(xs.len());
    for (r, x) in xs.iter().enumerate() {
        let mut coeffs: BTreeMap<Label, Element> = BTreeMap::new();
        let mut check = Element::zero(alg.m(), top);
        for ((h, label), values) in sol.unknowns.iter().zip(&sol.values) {
            let c = &values[r];
            if c.is_zero() {
                continue;
            }
            let h_elt = Element::monomial(alg.m(), h.clone());
            coeffs
                .entry(*label)
                .or_insert_with(|| Element::zero(alg.m(), top - 1))
                .add_scaled(c, &h_elt);
            let column = alg.mul(&h_elt.embed(top), &ind.label_word(*label, top)?)?;
            check.add_scaled(c, &column);
        }
        if &check != x {
            return Err(OracleError::Validation);
        }
        coeffs.retain(|_, c| !c.is_zero());
        out.push(Decomposition {
            m: alg.m(),
            top,
            coeffs,
        });
    }
    Ok(out)
}

/// Check that the change-of-basis matrix is square and has full rank.
pub fn matrix_is_invertible(
    ind: &Inductive,
    top: usize,
    family: LabelFamily,
) -> Result<bool, OracleError> {
    match solve(ind, top, family, &[]) {
        Ok(_) => Ok(true),
        Err(OracleError::Singular(_)) | Err(OracleError::NotSquare { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

fn solve(
    ind: &Inductive,
    top: usize,
    family: LabelFamily,
    rhs: &[Element],
) -> Result<OracleSolution, OracleError> {
    let alg: &HeckeAlgebra = ind.algebra();
    let m = alg.m();
    let n = top - 1;
    let labels = match family {
        LabelFamily::J => Label::j_labels(m, n),
        LabelFamily::T => Label::t_labels(m, n),
    };
    let row_index: HashMap<Monomial, usize> = alg
        .basis(top)
        .into_iter()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let mut unknowns = Vec::new();
    for h in alg.basis(n) {
        for &label in &labels {
            unknowns.push((h.clone(), label));
        }
    }
    let cols = unknowns.len();
    if cols != row_index.len() {
        return Err(OracleError::NotSquare {
            rows: row_index.len(),
            cols,
        });
    }
    let mut rows: Vec<Row> = vec![Row::new(); row_index.len()];
    for (c, (h, label)) in unknowns.iter().enumerate() {
        let h_elt = Element::monomial(m, h.embed(top));
        let column = alg.mul(&h_elt, &ind.label_word(*label, top)?)?;
        for (mono, coeff) in column.terms() {
            rows[row_index[mono]].insert(c, coeff.clone());
        }
    }
    for (r, x) in rhs.iter().enumerate() {
        for (mono, coeff) in x.terms() {
            rows[row_index[mono]].insert(cols + r, coeff.clone());
        }
    }
    let pivots = eliminate(&mut rows, cols).map_err(|c| {
        let (h, label) = &unknowns[c];
        OracleError::Singular(format!("{} * {label}", Element::monomial(m, h.clone())))
    })?;
    let mut values = vec![vec![Polynomial::zero(m); rhs.len()]; cols];
    for (c, r) in pivots {
        let row = &rows[r];
        let pivot = &row[&c];
        for (k, value) in values[c].iter_mut().enumerate() {
            if let Some(b) = row.get(&(cols + k)) {
                *value = b.div_exact(pivot).ok_or(OracleError::Inexact)?;
            }
        }
    }
    Ok(OracleSolution { unknowns, values })
}

/// Gauss–Jordan elimination on the first `cols` columns; returns `(column, row)` pivots.
///
/// Pivots are chosen Markowitz-style: the column with fewest candidate rows,
/// preferring constant entries, which are scaled to 1. Non-constant pivots use
/// the fraction-free update `row <- p*row - e*pivot_row`.
fn eliminate(rows: &mut [Row], cols: usize) -> Result<Vec<(usize, usize)>, usize> {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys().take_while(|&&c| c < cols) {
            col_rows[c].insert(r);
        }
    }
    let mut used = vec![false; rows.len()];
    let mut done = vec![false; cols];
    let mut pivots = Vec::with_capacity(cols);
    for _ in 0..cols {
        let (c, candidates) = (0..cols)
            .filter(|&c| !done[c])
            .map(|c| (c, col_rows[c].iter().filter(|&&r| !used[r]).count()))
            .min_by_key(|&(c, count)| (count, c))
            .unwrap();
        if candidates == 0 {
            return Err(c);
        }
        let r = *col_rows[c]
            .iter()
            .filter(|&&r| !used[r])
            .min_by_key(|&&r| (rows[r][&c].as_constant().is_none(), rows[r].len(), r))
            .unwrap();
        used[r] = true;
        done[c] = true;
        pivots.push((c, r));
        if let Some(k) = rows[r][&c].as_constant() {
            let inv = num_traits::Inv::inv(k);
            for v in rows[r].values_mut() {
                *v = v.scale(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        let p = pivot_row[&c].clone();
        let unit = p.is_one();
        let targets: Vec<usize> = col_rows[c].iter().copied().filter(|&t| t != r).collect();
        for t in targets {
            let e = rows[t].remove(&c).unwrap();
            col_rows[c].remove(&t);
            let row = &mut rows[t];
            if !unit {
                for v in row.values_mut() {
                    *v = &*v * &p;
                }
            }
            for (&k, v) in &pivot_row {
                if k == c {
                    continue;
                }
                let delta = -(&e * v);
                let entry = row.entry(k).or_insert_with(|| Polynomial::zero(p.m()));
                entry.add_assign_ref(&delta);
                if entry.is_zero() {
                    row.remove(&k);
                    if k < cols {
                        col_rows[k].remove(&t);
                    }
                } else if k < cols {
                    col_rows[k].insert(t);
                }
            }
        }
    }
    Ok(pivots)
}
