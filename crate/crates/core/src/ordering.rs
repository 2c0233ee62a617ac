//! Monomial orderings.
//!
//! Every ordering is compiled to an integer matrix `M` with `n` columns and
//! rank `n`; monomials compare by the lexicographic order of `M·a`. Orderings
//! may be local in some variables (`x_i < 1`), which is what the weighted
//! homogenization and the block orderings with a negative part rely on.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, Term};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderingKind {
    Lex,
    DegRevLex,
    /// Compare a weighted degree first, then fall back to `tie_break`.
    Weighted {
        weights: Vec<i64>,
        tie_break: Box<MonomialOrdering>,
    },
    Matrix,
    /// `first` on `first_vars`, ties broken by `second` on `second_vars`.
    Block {
        first: Box<MonomialOrdering>,
        first_vars: Vec<usize>,
        second: Box<MonomialOrdering>,
        second_vars: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrdering {
    kind: OrderingKind,
    nvars: usize,
    rows: Vec<Vec<i64>>,
}

/// Per-variable globality: `true` when `x_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalityReport {
    pub global: Vec<bool>,
}

impl GlobalityReport {
    pub fn is_global(&self) -> bool {
        self.global.iter().all(|&g| g)
    }

    pub fn local_variables(&self) -> Vec<usize> {
        self.global.iter().enumerate().filter(|(_, g)| !**g).map(|(i, _)| i).collect()
    }
}

fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    let mut m: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl MonomialOrdering {
    pub fn lex(nvars: usize) -> Self {
        let rows = (0..nvars).map(|i| unit_row(nvars, i, 1)).collect();
        Self { kind: OrderingKind::Lex, nvars, rows }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        let mut rows = Vec::with_capacity(nvars);
        if nvars > 0 {
            rows.push(vec![1; nvars]);
        }
        for i in (1..nvars).rev() {
            rows.push(unit_row(nvars, i, -1));
        }
        Self { kind: OrderingKind::DegRevLex, nvars, rows }
    }

    /// Weighted degree, ties broken by degrevlex.
    pub fn weighted(weights: Vec<i64>) -> Self {
        let n = weights.len();
        Self::weighted_with(weights, Self::degrevlex(n)).expect("lengths agree")
    }

    pub fn weighted_with(weights: Vec<i64>, tie_break: MonomialOrdering) -> Result<Self> {
        if weights.len() != tie_break.nvars {
            return Err(Error::InvalidOrdering(format!(
                "weight vector has {} entries but the tie-break ordering has {} variables",
                weights.len(),
                tie_break.nvars
            )));
        }
        let nvars = weights.len();
        let mut rows = vec![weights.clone()];
        rows.extend(tie_break.rows.iter().cloned());
        let kind = OrderingKind::Weighted { weights, tie_break: Box::new(tie_break) };
        Ok(Self { kind, nvars, rows })
    }

    /// Matrix ordering; the matrix must have full column rank.
    pub fn matrix(rows: Vec<Vec<i64>>) -> Result<Self> {
        let nvars = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != nvars) {
            return Err(Error::InvalidOrdering("matrix rows have different lengths".into()));
        }
        if rank(&rows, nvars) != nvars {
            return Err(Error::InvalidOrdering(format!("matrix does not have rank {nvars}")));
        }
        Ok(Self { kind: OrderingKind::Matrix, nvars, rows })
    }

    /// Negative lexicographic ordering: `1 > x_1 > x_2 > …` locally.
    pub fn neg_lex(nvars: usize) -> Self {
        let rows = (0..nvars).map(|i| unit_row(nvars, i, -1)).collect();
        Self { kind: OrderingKind::Matrix, nvars, rows }
    }

    /// Negative degree lexicographic ordering (local in every variable).
    pub fn neg_deglex(nvars: usize) -> Self {
        let mut rows = vec![vec![-1; nvars]];
        rows.extend((0..nvars.saturating_sub(1)).map(|i| unit_row(nvars, i, 1)));
        Self { kind: OrderingKind::Matrix, nvars, rows }
    }

    pub fn block(
        first: MonomialOrdering,
        first_vars: Vec<usize>,
        second: MonomialOrdering,
        second_vars: Vec<usize>,
    ) -> Result<Self> {
        let nvars = first_vars.len() + second_vars.len();
        if first.nvars != first_vars.len() || second.nvars != second_vars.len() {
            return Err(Error::InvalidOrdering("block sizes do not match their orderings".into()));
        }
        let mut seen = vec![false; nvars];
        for &v in first_vars.iter().chain(&second_vars) {
            if v >= nvars || seen[v] {
                return Err(Error::InvalidOrdering("block variables must partition the ring variables".into()));
            }
            seen[v] = true;
        }
        let mut rows = Vec::with_capacity(first.rows.len() + second.rows.len());
        for (block, vars) in [(&first, &first_vars), (&second, &second_vars)] {
            for r in &block.rows {
                let mut row = vec![0; nvars];
                for (j, &v) in vars.iter().enumerate() {
                    row[v] = r[j];
                }
                rows.push(row);
            }
        }
        let kind = OrderingKind::Block { first: Box::new(first), first_vars, second: Box::new(second), second_vars };
        Ok(Self { kind, nvars, rows })
    }

    /// The ordering `>_M` used by Bayer's method on `K[X_1..X_k, t]`, with
    /// `deg t = t_degree`. Requires `w >= 0` and `w_k != 0`.
    pub fn bayer_matrix(w: &[i64], t_degree: i64) -> Result<Self> {
        if t_degree != 1 && t_degree != -1 {
            return Err(Error::InvalidOrdering("the degree of t must be +1 or -1".into()));
        }
        if w.iter().any(|&x| x < 0) {
            return Err(Error::InvalidOrdering("weights must be non-negative".into()));
        }
        match w.last() {
            None => return Err(Error::InvalidOrdering("empty weight vector".into())),
            Some(0) if w.iter().all(|&x| x == 0) => return Err(Error::InvalidOrdering("weight vector is zero".into())),
            Some(0) => return Err(Error::InvalidOrdering("last weight is zero; reorder the variables first".into())),
            Some(_) => {}
        }
        let k = w.len();
        Self::matrix(bayer_rows(w, t_degree, k - 1))
    }

    pub fn kind(&self) -> &OrderingKind {
        &self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `M·a`; monomials compare lexicographically by this key.
    pub fn key(&self, exps: &[u32]) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().zip(exps).map(|(w, &e)| w * i64::from(e)).sum()).collect()
    }

    /// The key of an arbitrary integer vector (used for valuation values).
    pub fn key_signed(&self, v: &[i64]) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().zip(v).map(|(w, e)| w * e).sum()).collect()
    }

    pub(crate) fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        for r in &self.rows {
            let da: i64 = r.iter().zip(a).map(|(w, &e)| w * i64::from(e)).sum();
            let db: i64 = r.iter().zip(b).map(|(w, &e)| w * i64::from(e)).sum();
            match da.cmp(&db) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub(crate) fn cmp_signed(&self, a: &[i64], b: &[i64]) -> Ordering {
        self.key_signed(a).cmp(&self.key_signed(b))
    }

    pub fn compare(&self, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
        for m in [m1, m2] {
            if m.nvars() != self.nvars {
                return Err(Error::LengthMismatch { expected: self.nvars, found: m.nvars() });
            }
        }
        Ok(self.cmp_exponents(m1.exponents(), m2.exponents()))
    }

    pub fn leading_term(&self, f: &Polynomial) -> Result<Term> {
        if f.ring().nvars() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: f.ring().nvars() });
        }
        f.terms()
            .max_by(|a, b| self.cmp_exponents(a.0.exponents(), b.0.exponents()))
            .map(|(m, c)| Term { coeff: c.clone(), monomial: m.clone() })
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn globality(&self) -> GlobalityReport {
        let global =
            (0..self.nvars).map(|j| self.rows.iter().map(|r| r[j]).find(|&x| x != 0).is_some_and(|x| x > 0)).collect();
        GlobalityReport { global }
    }

    pub fn is_global(&self) -> bool {
        self.globality().is_global()
    }
}

fn unit_row(n: usize, i: usize, value: i64) -> Vec<i64> {
    let mut r = vec![0; n];
    r[i] = value;
    r
}

/// Rows of `>_M` for the ring `K[X_1..X_k, t]` where `pivot` is the index of
/// an `X` variable with non-zero weight. With `pivot = k - 1` this is exactly
/// the matrix of [`MonomialOrdering::bayer_matrix`]; other pivots give the
/// same ordering after moving the pivot variable last.
pub(crate) fn bayer_rows(w: &[i64], t_degree: i64, pivot: usize) -> Vec<Vec<i64>> {
    let k = w.len();
    let mut first = w.to_vec();
    first.push(t_degree);
    let mut rows = vec![first, unit_row(k + 1, k, -1)];
    rows.extend((0..k).filter(|&j| j != pivot).map(|j| unit_row(k + 1, j, 1)));
    rows
}
