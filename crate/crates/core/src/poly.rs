//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] is a finite map from exponent vectors to non-zero
//! coefficients, tagged with the [`PolyRing`] it lives in. Rings are compared
//! structurally by their variable names; mixing polynomials from different
//! rings is an error rather than a silent coercion.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field.
pub type Rational = BigRational;

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial ring over the rationals, identified by its variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("variable `{name}` declared twice")));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Returns `count` names `prefix1, prefix2, …` (or just `prefix` when
/// `count == 1` and `single` is set) that avoid every name in `taken`.
pub fn fresh_names(prefix: &str, count: usize, single: bool, taken: &[String]) -> Vec<String> {
    let mut prefix = prefix.to_string();
    loop {
        let names: Vec<String> = if count == 1 && single {
            vec![prefix.clone()]
        } else {
            (1..=count).map(|i| format!("{prefix}{i}")).collect()
        };
        if names.iter().all(|n| !taken.contains(n)) {
            return names;
        }
        prefix.push('_');
    }
}

/// An exponent vector `X^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }
}

/// Degree reverse lexicographic comparison with `x_1 > x_2 > … > x_n`.
pub fn degrevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// A single non-zero term `coeff * X^monomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn variable(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::term(ring, Monomial::variable(ring.nvars(), index), Rational::one())
    }

    /// Panics if the monomial has the wrong length.
    pub fn term(ring: &Arc<PolyRing>, monomial: Monomial, c: Rational) -> Self {
        assert_eq!(monomial.nvars(), ring.nvars(), "monomial length does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(monomial, c);
        }
        Self { ring: ring.clone(), terms }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch { expected: ring.nvars(), found: m.nvars() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn from_map_unchecked(ring: &Arc<PolyRing>, terms: BTreeMap<Monomial, Rational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self { ring: ring.clone(), terms }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Self> {
        Ok(crate::parse::parse_polynomial(ring, text)?)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in an unspecified but deterministic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The non-zero terms, sorted descending in degrevlex.
    pub fn support(&self) -> Vec<Term> {
        let mut out: Vec<Term> =
            self.terms.iter().map(|(m, c)| Term { coeff: c.clone(), monomial: m.clone() }).collect();
        out.sort_by(|a, b| degrevlex_cmp(b.monomial.exponents(), a.monomial.exponents()));
        out
    }

    /// Leading term with respect to degrevlex; `None` for zero.
    pub fn degrevlex_leading(&self) -> Option<Term> {
        self.terms
            .iter()
            .max_by(|a, b| degrevlex_cmp(a.0.exponents(), b.0.exponents()))
            .map(|(m, c)| Term { coeff: c.clone(), monomial: m.clone() })
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Largest `e` with `x_var^e` dividing `self` (0 for the zero polynomial).
    pub fn var_content(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).min().unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring.names.join(","), right: other.ring.names.join(",") })
        }
    }

    pub fn same_ring(&self, ring: &PolyRing) -> bool {
        *self.ring == *ring
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces variable `i` by `images[i]` and expands in the images' ring.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), found: images.len() });
        }
        for img in images {
            if *img.ring != **target {
                return Err(Error::RingMismatch { left: target.names.join(","), right: img.ring.names.join(",") });
            }
        }
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|img| vec![Polynomial::one(target), img.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                prod = &prod * &cache[e as usize];
            }
            for (n, a) in prod.terms {
                out.add_term(n, a);
            }
        }
        Ok(out)
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// variable `var_map[i]` of the target ring.
    pub fn embed(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; n];
                for (i, &e) in m.0.iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial(exps), c.clone())
            })
            .collect();
        Polynomial { ring: target.clone(), terms }
    }

    /// Restricts to `target`, whose variable `j` is variable `var_map[j]`
    /// of `self`'s ring. Returns `None` if a dropped variable occurs.
    pub fn restrict(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Option<Polynomial> {
        assert_eq!(var_map.len(), target.nvars());
        let mut kept = vec![false; self.ring.nvars()];
        for &v in var_map {
            kept[v] = true;
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| e > 0 && !kept[i]) {
                return None;
            }
            terms.insert(Monomial(var_map.iter().map(|&v| m.0[v]).collect()), c.clone());
        }
        Some(Polynomial { ring: target.clone(), terms })
    }

    /// Sets variable `var` to the constant `value`, staying in the same ring.
    pub fn evaluate_variable(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::replace(&mut exps[var], 0);
            let factor = num_traits::pow(value.clone(), e as usize);
            out.add_term(Monomial(exps), c * factor);
        }
        out
    }

    /// Divides every exponent of `var` by the largest common power.
    pub fn strip_variable_power(&self, var: usize) -> Polynomial {
        let k = self.var_content(var);
        if k == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.0.clone();
                exps[var] -= k;
                (Monomial(exps), c.clone())
            })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Scales to integer coefficients with gcd 1 and a positive
    /// degrevlex-leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        let Some(lead) = self.degrevlex_leading() else {
            return self.clone();
        };
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&denom_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut factor = Rational::new(denom_lcm, num_gcd);
        if lead.coeff.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Divides by the leading coefficient in degrevlex.
    pub fn monic(&self) -> Polynomial {
        match self.degrevlex_leading() {
            Some(t) => self.scale(&t.coeff.recip()),
            None => self.clone(),
        }
    }

    /// Exact division; `Ok(None)` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        let Some(lead) = divisor.degrevlex_leading() else {
            return Err(Error::ZeroPolynomial);
        };
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero(&self.ring);
        while let Some(t) = rem.degrevlex_leading() {
            let Some(m) = lead.monomial.quotient_of(&t.monomial) else {
                return Ok(None);
            };
            let c = &t.coeff / &lead.coeff;
            rem = &rem - &divisor.mul_term(&c, &m);
            quotient.add_term(m, c);
        }
        Ok(Some(quotient))
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.ring.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in support.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                self.fmt_monomial(&t.monomial, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings; use the
            /// `try_*` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(["x", "y", "z"]).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring();
        assert_eq!(p(&r, "x + y") + p(&r, "-y"), p(&r, "x"));
        assert_eq!(p(&r, "x + y") * p(&r, "x - y"), p(&r, "x^2 - y^2"));
        assert_eq!(p(&r, "x^2 + y^2") - p(&r, "x^2 - y^2"), p(&r, "2*y^2"));
        assert!((p(&r, "x") - p(&r, "x")).is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring();
        let s = PolyRing::new(["x", "y"]).unwrap();
        let err = p(&r, "x").try_add(&Polynomial::variable(&s, 0)).unwrap_err();
        assert!(matches!(err, Error::RingMismatch { .. }));
        // structurally equal rings are the same ring
        let r2 = ring();
        assert_eq!(p(&r, "x").try_add(&p(&r2, "y")).unwrap(), p(&r, "x + y"));
    }

    #[test]
    fn invalid_rings() {
        assert!(PolyRing::new(["x", "x"]).is_err());
        assert!(PolyRing::new(["1x"]).is_err());
        assert!(PolyRing::new([""]).is_err());
    }

    #[test]
    fn substitution_examples() {
        let b = PolyRing::new(["x", "y"]).unwrap();
        let tags = PolyRing::new(["X1", "X2", "X3", "X4"]).unwrap();
        let images = vec![p(&b, "x^2 + y^2"), p(&b, "x^2 - y^2"), p(&b, "x*y"), p(&b, "2*x^2")];
        let h = p(&tags, "X1^2 - X2^2");
        assert_eq!(h.substitute(&b, &images).unwrap(), p(&b, "4*x^2*y^2"));
        let h = p(&tags, "1/2*X4^2");
        assert_eq!(h.substitute(&b, &images).unwrap(), p(&b, "2*x^4"));
        let h = p(&tags, "X1");
        assert_eq!(h.substitute(&b, &images).unwrap(), images[0]);
        let err = h.substitute(&b, &images[..2]).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { expected: 4, found: 2 }));
    }

    #[test]
    fn support_examples() {
        let r = ring();
        let s = p(&r, "x^2 + 2*y").support();
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].monomial, Monomial::new(vec![2, 0, 0]));
        assert_eq!(s[0].coeff, rat(1, 1));
        assert_eq!(s[1].monomial, Monomial::new(vec![0, 1, 0]));
        assert_eq!(s[1].coeff, rat(2, 1));
        assert!(Polynomial::zero(&r).support().is_empty());
        assert_eq!(p(&r, "x + y + z").support().len(), 3);
    }

    #[test]
    fn display_is_canonical() {
        let r = ring();
        assert_eq!(p(&r, "2*y - 1/3 + x^2").to_string(), "x^2 + 2*y - 1/3");
        assert_eq!(p(&r, "-x + 1/2*x*y^2").to_string(), "1/2*x*y^2 - x");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn primitive_and_division() {
        let r = ring();
        assert_eq!(p(&r, "2*x^2").primitive(), p(&r, "x^2"));
        assert_eq!(p(&r, "-y").primitive(), p(&r, "y"));
        assert_eq!(p(&r, "1/2*x - 1/3*y").primitive(), p(&r, "3*x - 2*y"));
        let q = p(&r, "x^2 - y^2").exact_div(&p(&r, "x + y")).unwrap();
        assert_eq!(q, Some(p(&r, "x - y")));
        assert_eq!(p(&r, "x^2 + 1").exact_div(&p(&r, "x")).unwrap(), None);
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let taken = vec!["t".to_string(), "X1".to_string()];
        assert_eq!(fresh_names("t", 1, true, &taken), vec!["t_"]);
        assert_eq!(fresh_names("X", 2, false, &taken), vec!["X_1", "X_2"]);
        assert_eq!(fresh_names("g", 2, false, &taken), vec!["g1", "g2"]);
    }
}
