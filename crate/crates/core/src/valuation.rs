//! Monomial valuations `v: B \ {0} → Z^r`.
//!
//! A monomial valuation is linear on exponent vectors and extends to
//! polynomials by taking the minimum over the support. The initial form of
//! `f` is the sum of the terms attaining that minimum.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ordering::MonomialOrdering;
use crate::poly::{Monomial, Polynomial};

/// How values in `Z^r` are compared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GammaOrder {
    /// Lexicographic order on `Z^r` (the natural order when `r = 1`).
    Natural,
    /// `γ₁ ⪰ γ₂` iff `X^γ₁ ≤ X^γ₂` in the given ordering.
    Induced(MonomialOrdering),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialValuation {
    rows: Vec<Vec<i64>>,
    nvars: usize,
    order: GammaOrder,
}

impl MonomialValuation {
    pub fn new(rows: Vec<Vec<i64>>, nvars: usize, order: GammaOrder) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidValuation("a valuation needs at least one row".into()));
        }
        if rows.iter().any(|r| r.len() != nvars) {
            return Err(Error::InvalidValuation(format!("every row must have {nvars} entries")));
        }
        if let GammaOrder::Induced(ord) = &order {
            if ord.nvars() != rows.len() {
                return Err(Error::InvalidValuation("the inducing ordering must act on the value group".into()));
            }
        }
        Ok(Self { rows, nvars, order })
    }

    /// Grading function of a weight vector, `Γ = Z`.
    pub fn weight(w: Vec<i64>) -> Self {
        let nvars = w.len();
        Self { rows: vec![w], nvars, order: GammaOrder::Natural }
    }

    /// Order of divisibility by variable `var`.
    pub fn divisibility(nvars: usize, var: usize) -> Result<Self> {
        if var >= nvars {
            return Err(Error::InvalidValuation(format!("variable index {var} out of range")));
        }
        let mut w = vec![0; nvars];
        w[var] = 1;
        Ok(Self::weight(w))
    }

    /// The valuation induced by a monomial ordering, `Γ = Z^n`.
    pub fn from_ordering(ord: MonomialOrdering) -> Self {
        let n = ord.nvars();
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Self { rows, nvars: n, order: GammaOrder::Induced(ord) }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn order(&self) -> &GammaOrder {
        &self.order
    }

    /// `Γ = Z` with its natural order.
    pub fn is_integer_valued(&self) -> bool {
        self.rows.len() == 1 && self.order == GammaOrder::Natural
    }

    pub fn monomial_value(&self, m: &Monomial) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().zip(m.exponents()).map(|(w, &e)| w * i64::from(e)).sum()).collect()
    }

    pub fn gamma_compare(&self, g1: &[i64], g2: &[i64]) -> Result<Ordering> {
        for g in [g1, g2] {
            if g.len() != self.rank() {
                return Err(Error::LengthMismatch { expected: self.rank(), found: g.len() });
            }
        }
        Ok(self.cmp_values(g1, g2))
    }

    pub(crate) fn cmp_values(&self, g1: &[i64], g2: &[i64]) -> Ordering {
        match &self.order {
            GammaOrder::Natural => g1.cmp(g2),
            GammaOrder::Induced(ord) => ord.cmp_signed(g2, g1),
        }
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        if f.ring().nvars() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: f.ring().nvars() });
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(())
    }

    pub fn value(&self, f: &Polynomial) -> Result<Vec<i64>> {
        self.check(f)?;
        Ok(f.terms()
            .map(|(m, _)| self.monomial_value(m))
            .min_by(|a, b| self.cmp_values(a, b))
            .expect("non-zero polynomial"))
    }

    pub fn initial_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let v = self.value(f)?;
        let terms = f.terms().filter(|(m, _)| self.monomial_value(m) == v).map(|(m, c)| (m.clone(), c.clone()));
        Polynomial::from_terms(f.ring(), terms)
    }

    /// Value and initial form together.
    pub fn initial(&self, f: &Polynomial) -> Result<(Vec<i64>, Polynomial)> {
        let v = self.value(f)?;
        let terms = f.terms().filter(|(m, _)| self.monomial_value(m) == v).map(|(m, c)| (m.clone(), c.clone()));
        let init = Polynomial::from_terms(f.ring(), terms)?;
        Ok((v, init))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn xy() -> Arc<PolyRing> {
        PolyRing::new(["x", "y"]).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn block_valuation() -> MonomialValuation {
        // variables (x, y, z): neg-lex on z, then degrevlex on x > y
        let ord =
            MonomialOrdering::block(MonomialOrdering::neg_lex(1), vec![2], MonomialOrdering::degrevlex(2), vec![0, 1])
                .unwrap();
        MonomialValuation::from_ordering(ord)
    }

    #[test]
    fn values() {
        let r = xy();
        let v = MonomialValuation::weight(vec![0, 1]);
        assert_eq!(v.value(&p(&r, "x + y")).unwrap(), vec![0]);
        assert_eq!(v.value(&p(&r, "y + y^2")).unwrap(), vec![1]);
        assert_eq!(v.value(&p(&r, "7")).unwrap(), vec![0]);
        assert!(matches!(v.value(&Polynomial::zero(&r)), Err(Error::ZeroPolynomial)));
        assert_eq!(MonomialValuation::divisibility(2, 1).unwrap(), v);
    }

    #[test]
    fn initial_forms() {
        let r = xy();
        let v = MonomialValuation::weight(vec![1, 0]);
        assert_eq!(v.initial_form(&p(&r, "x^2 + y^2")).unwrap(), p(&r, "y^2"));
        assert_eq!(v.initial_form(&p(&r, "x*y")).unwrap(), p(&r, "x*y"));
        let r3 = PolyRing::new(["x", "y", "z"]).unwrap();
        let v = block_valuation();
        assert_eq!(v.initial_form(&p(&r3, "x + y + z")).unwrap(), p(&r3, "x"));
        assert_eq!(v.initial_form(&p(&r3, "x*y^2")).unwrap(), p(&r3, "x*y^2"));
    }

    #[test]
    fn gamma_comparison() {
        assert_eq!(MonomialValuation::weight(vec![1]).gamma_compare(&[1], &[0]).unwrap(), Ordering::Greater);
        let v = MonomialValuation::from_ordering(MonomialOrdering::degrevlex(2));
        assert_eq!(v.gamma_compare(&[0, 1], &[1, 0]).unwrap(), Ordering::Greater);
        assert_eq!(v.gamma_compare(&[2, 1], &[2, 1]).unwrap(), Ordering::Equal);
        assert!(v.gamma_compare(&[1], &[1, 0]).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
        prop::collection::vec((-4i64..5, [0u32..3, 0u32..3, 0u32..3]), 1..5)
    }

    fn build(r: &Arc<PolyRing>, terms: &[(i64, [u32; 3])]) -> Polynomial {
        Polynomial::from_terms(r, terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), crate::poly::rat(*c, 1))))
            .unwrap()
    }

    fn valuations() -> Vec<MonomialValuation> {
        vec![
            MonomialValuation::weight(vec![1, 0, 2]),
            MonomialValuation::weight(vec![0, -1, 1]),
            block_valuation(),
            MonomialValuation::new(vec![vec![1, 1, 0], vec![0, 0, 1]], 3, GammaOrder::Natural).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn valuation_axioms(a in arb_poly(), b in arb_poly()) {
            let r = PolyRing::new(["x", "y", "z"]).unwrap();
            let f = build(&r, &a);
            let g = build(&r, &b);
            prop_assume!(!f.is_zero() && !g.is_zero());
            for v in valuations() {
                let vf = v.value(&f).unwrap();
                let vg = v.value(&g).unwrap();
                let fg = &f * &g;
                let sum: Vec<i64> = vf.iter().zip(&vg).map(|(x, y)| x + y).collect();
                prop_assert_eq!(v.value(&fg).unwrap(), sum.clone());
                prop_assert_eq!(
                    v.initial_form(&fg).unwrap(),
                    &v.initial_form(&f).unwrap() * &v.initial_form(&g).unwrap()
                );
                let (val, init) = v.initial(&f).unwrap();
                prop_assert!(init.terms().all(|(m, _)| v.monomial_value(m) == val));
                let s = &f + &g;
                if !s.is_zero() {
                    let min = if v.cmp_values(&vf, &vg) == Ordering::Greater { vg.clone() } else { vf.clone() };
                    prop_assert_ne!(v.cmp_values(&v.value(&s).unwrap(), &min), Ordering::Less);
                }
            }
        }
    }
}
