//! Homogenization with respect to integer weight rows.
//!
//! With sign `-1` the homogenizing variable `t` has degree −1 and
//! `f^hom = Σ f_d t^(d - mindeg f)`; with sign `+1` it has degree +1 and
//! `f^hom = Σ f_d t^(topdeg f - d)`. Either way `f^hom|_{t=1} = f`.
//!
//! Ideals are homogenized by saturating `⟨g^hom⟩` at `t`, either directly or
//! through a standard basis under a Bayer ordering.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{standard_basis_with_limit, Ideal};
use crate::ordering::MonomialOrdering;
use crate::poly::{fresh_names, Monomial, PolyRing, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Bayer,
    Saturation,
}

/// Rows `W ∈ Z^{m×k}` with one homogenizing variable per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    rows: Vec<Vec<i64>>,
    signs: Vec<i8>,
}

impl WeightSystem {
    pub fn new(rows: Vec<Vec<i64>>, signs: Vec<i8>) -> Result<Self> {
        if rows.len() != signs.len() {
            return Err(Error::LengthMismatch { expected: rows.len(), found: signs.len() });
        }
        let k = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidGrading("weight rows have different lengths".into()));
        }
        for &s in &signs {
            check_sign(s)?;
        }
        Ok(Self { rows, signs })
    }

    /// Every homogenizing variable in degree −1.
    pub fn negative(rows: Vec<Vec<i64>>) -> Result<Self> {
        let m = rows.len();
        Self::new(rows, vec![-1; m])
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Rows with a negative entry, which the Bayer method rejects.
    pub fn negative_rows(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&i| self.rows[i].iter().any(|&w| w < 0)).collect()
    }

    /// Per-row methods: `preferred`, except that rows with negative weights
    /// fall back to saturation. Also returns one warning per fallback.
    pub fn resolve_methods(&self, preferred: Method) -> (Vec<Method>, Vec<String>) {
        let mut warnings = Vec::new();
        let methods = (0..self.rows.len())
            .map(|i| {
                if preferred == Method::Bayer && self.rows[i].iter().any(|&w| w < 0) {
                    warnings.push(format!(
                        "weight row {i} {:?} has negative entries; homogenizing it by saturation",
                        self.rows[i]
                    ));
                    Method::Saturation
                } else {
                    preferred
                }
            })
            .collect();
        (methods, warnings)
    }
}

fn check_sign(sign: i8) -> Result<()> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(Error::InvalidGrading(format!("homogenizing sign must be ±1, got {sign}")))
    }
}

fn check_row(f: &Polynomial, w: &[i64]) -> Result<()> {
    if w.len() != f.ring().nvars() {
        return Err(Error::LengthMismatch { expected: f.ring().nvars(), found: w.len() });
    }
    Ok(())
}

fn weighted(w: &[i64], m: &Monomial) -> i64 {
    w.iter().zip(m.exponents()).map(|(a, &e)| a * i64::from(e)).sum()
}

/// Per-row minimum of the weighted degree over the terms of `f`.
pub fn mindeg(rows: &[Vec<i64>], f: &Polynomial) -> Result<Vec<i64>> {
    extreme_degree(rows, f, false)
}

/// Per-row maximum of the weighted degree over the terms of `f`.
pub fn topdeg(rows: &[Vec<i64>], f: &Polynomial) -> Result<Vec<i64>> {
    extreme_degree(rows, f, true)
}

fn extreme_degree(rows: &[Vec<i64>], f: &Polynomial, top: bool) -> Result<Vec<i64>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    rows.iter()
        .map(|w| {
            check_row(f, w)?;
            let degrees = f.terms().map(|(m, _)| weighted(w, m));
            Ok(if top { degrees.max() } else { degrees.min() }.expect("non-zero polynomial"))
        })
        .collect()
}

/// `ring` followed by `m` fresh homogenizing variables: `t` when `m = 1`,
/// otherwise `t1, …, tm`.
pub fn homogenized_ring(ring: &Arc<PolyRing>, m: usize) -> Result<Arc<PolyRing>> {
    let mut names = ring.names().to_vec();
    names.extend(fresh_names("t", m, true, ring.names()));
    PolyRing::new(names)
}

/// Homogenizes `f` in its own ring, using variable `t` (which must not occur
/// in `f` and whose weight is ignored) as the homogenizing variable.
fn homogenize_at(f: &Polynomial, w: &[i64], t: usize, sign: i8) -> Polynomial {
    let Some(anchor) = f.terms().map(|(m, _)| weighted(w, m) - w[t] * i64::from(m.exponents()[t])).reduce(|a, b| {
        if sign < 0 {
            a.min(b)
        } else {
            a.max(b)
        }
    }) else {
        return f.clone();
    };
    let mut out = Polynomial::zero(f.ring());
    for (m, c) in f.terms() {
        let d = weighted(w, m) - w[t] * i64::from(m.exponents()[t]);
        let mut exps = m.exponents().to_vec();
        exps[t] += ((d - anchor) * -i64::from(sign)) as u32;
        out.add_term(Monomial::new(exps), c.clone());
    }
    out
}

fn widen(w: &[i64], n: usize) -> Vec<i64> {
    let mut full = w.to_vec();
    full.resize(n, 0);
    full
}

/// `f^hom` in `homogenized_ring(f.ring(), 1)`; `0^hom = 0`.
pub fn homogenize_poly(w: &[i64], sign: i8, f: &Polynomial) -> Result<Polynomial> {
    homogenize_poly_multi(&WeightSystem::new(vec![w.to_vec()], vec![sign])?, f)
}

/// Homogenization with respect to every row of `ws`, in
/// `homogenized_ring(f.ring(), ws.nrows())`.
pub fn homogenize_poly_multi(ws: &WeightSystem, f: &Polynomial) -> Result<Polynomial> {
    let k = f.ring().nvars();
    for w in ws.rows() {
        check_row(f, w)?;
    }
    let target = homogenized_ring(f.ring(), ws.nrows())?;
    let mut h = f.embed(&target, &(0..k).collect::<Vec<_>>());
    for (i, (w, &s)) in ws.rows().iter().zip(ws.signs()).enumerate() {
        h = homogenize_at(&h, &widen(w, target.nvars()), k + i, s);
    }
    Ok(h)
}

/// Sets every variable in `t_vars` to 1 and drops it from the ring.
pub fn dehomogenize(f: &Polynomial, t_vars: &[usize]) -> Result<Polynomial> {
    let ring = f.ring();
    if let Some(&v) = t_vars.iter().find(|&&v| v >= ring.nvars()) {
        return Err(Error::InvalidRing(format!("variable index {v} out of range")));
    }
    let kept: Vec<usize> = (0..ring.nvars()).filter(|v| !t_vars.contains(v)).collect();
    let target = PolyRing::new(kept.iter().map(|&i| ring.names()[i].clone()))?;
    let one = Rational::from_integer(1.into());
    let evaluated = t_vars.iter().fold(f.clone(), |acc, &t| acc.evaluate_variable(t, &one));
    Ok(evaluated.restrict(&target, &kept).expect("homogenizing variables evaluated"))
}

/// One homogenization step inside a fixed ring: `gens` do not involve `t`
/// and `w` covers every variable of the ring.
fn homogenize_gens(
    gens: &[Polynomial],
    ring: &Arc<PolyRing>,
    w: &[i64],
    t: usize,
    sign: i8,
    method: Method,
    pair_limit: usize,
) -> Result<Vec<Polynomial>> {
    let homs: Vec<Polynomial> = gens.iter().map(|g| homogenize_at(g, w, t, sign)).collect();
    let others = (0..w.len()).filter(|&j| j != t);
    if others.clone().all(|j| w[j] == 0) {
        return Ok(homs);
    }
    match method {
        Method::Bayer => {
            if let Some(j) = others.clone().find(|&j| w[j] < 0) {
                return Err(Error::BayerPrecondition(format!(
                    "weight of `{}` is {}; the Bayer method needs nonnegative weights, use the saturation method",
                    ring.names()[j],
                    w[j]
                )));
            }
            let pivot = others.clone().rfind(|&j| w[j] != 0).expect("non-zero weight");
            let n = w.len();
            let mut first = w.to_vec();
            first[t] = i64::from(sign);
            let mut rows = vec![first, unit_row(n, t, -1)];
            rows.extend(others.filter(|&j| j != pivot).map(|j| unit_row(n, j, 1)));
            let ord = MonomialOrdering::matrix(rows)?;
            let sb = standard_basis_with_limit(&homs, &ord, pair_limit)?;
            let mut stripped: Vec<Polynomial> = sb.iter().map(|g| g.strip_variable_power(t)).collect();
            if sign > 0 {
                return Ok(stripped);
            }
            // With deg t = -1 the ordering is local and degree-0 monomials such as
            // X·t^w(X) are units, so the stripped basis only agrees with the
            // saturation after localization. It lies between ⟨g^hom⟩ and the
            // saturation, so closing it under `: t` is exact and usually a no-op.
            stripped.extend(homs);
            let ideal = Ideal::new(ring, stripped)?.with_pair_limit(pair_limit);
            Ok(ideal.saturation(&Polynomial::variable(ring, t))?.gens().to_vec())
        }
        Method::Saturation => {
            let ideal = Ideal::new(ring, homs)?.with_pair_limit(pair_limit);
            let sat = ideal.saturation(&Polynomial::variable(ring, t))?;
            Ok(sat.gens().to_vec())
        }
    }
}

fn unit_row(n: usize, i: usize, value: i64) -> Vec<i64> {
    let mut r = vec![0; n];
    r[i] = value;
    r
}

/// `I^hom = ⟨f^hom | f ∈ I⟩` in `homogenized_ring(I.ring(), 1)`.
pub fn homogenize_ideal(ideal: &Ideal, w: &[i64], sign: i8, method: Method) -> Result<Ideal> {
    multi_homogenize_with(ideal, &WeightSystem::new(vec![w.to_vec()], vec![sign])?, &[method])
}

/// Homogenizes row by row with the same method for every row.
pub fn multi_homogenize(ideal: &Ideal, ws: &WeightSystem, method: Method) -> Result<Ideal> {
    multi_homogenize_with(ideal, ws, &vec![method; ws.nrows()])
}

/// Homogenizes row by row, row `i` with `methods[i]`, in
/// `homogenized_ring(I.ring(), ws.nrows())`.
pub fn multi_homogenize_with(ideal: &Ideal, ws: &WeightSystem, methods: &[Method]) -> Result<Ideal> {
    if methods.len() != ws.nrows() {
        return Err(Error::LengthMismatch { expected: ws.nrows(), found: methods.len() });
    }
    let ring = ideal.ring();
    let k = ring.nvars();
    if let Some(w) = ws.rows().iter().find(|w| w.len() != k) {
        return Err(Error::LengthMismatch { expected: k, found: w.len() });
    }
    let target = homogenized_ring(ring, ws.nrows())?;
    let map: Vec<usize> = (0..k).collect();
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.embed(&target, &map)).collect();
    for (i, ((w, &s), &method)) in ws.rows().iter().zip(ws.signs()).zip(methods).enumerate() {
        gens = homogenize_gens(&gens, &target, &widen(w, target.nvars()), k + i, s, method, ideal.pair_limit())?;
    }
    Ok(Ideal::new(&target, gens)?.with_pair_limit(ideal.pair_limit()))
}

/// `in_w(I)`, read off as `I^hom|_{t=0}` with `deg t = -1`.
pub fn initial_ideal(ideal: &Ideal, w: &[i64]) -> Result<Ideal> {
    let method = if w.iter().all(|&x| x >= 0) { Method::Bayer } else { Method::Saturation };
    let hom = homogenize_ideal(ideal, w, -1, method)?;
    hom.specialize(ideal.ring().nvars(), &Rational::from_integer(0.into()))
}
