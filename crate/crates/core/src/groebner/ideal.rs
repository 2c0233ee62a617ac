//! Ideal handles and the derived operations built on standard bases.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use super::{normal_form, standard_basis_with_limit, DEFAULT_PAIR_LIMIT};
use crate::error::{Error, Result};
use crate::ordering::MonomialOrdering;
use crate::poly::{fresh_names, PolyRing, Polynomial};

/// Answer of a containment test `I ⊆ J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Containment {
    Contained,
    /// A generator of `I` outside `J`.
    NotContained(Polynomial),
}

impl Containment {
    pub fn holds(&self) -> bool {
        matches!(self, Containment::Contained)
    }
}

/// Generators of an ideal plus a per-ordering cache of standard bases.
///
/// The cache makes the handle `Send` but not `Sync`.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    pair_limit: usize,
    cache: RefCell<HashMap<MonomialOrdering, Vec<Polynomial>>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if **g.ring() != **ring {
                return Err(Error::RingMismatch { left: ring.names().join(","), right: g.ring().names().join(",") });
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self { ring: ring.clone(), gens, pair_limit: DEFAULT_PAIR_LIMIT, cache: RefCell::default() })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self { ring: ring.clone(), gens: Vec::new(), pair_limit: DEFAULT_PAIR_LIMIT, cache: RefCell::default() }
    }

    /// Parses each generator in `ring`.
    pub fn parse(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|g| Polynomial::parse(ring, g)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn with_pair_limit(mut self, limit: usize) -> Self {
        self.pair_limit = limit;
        self.cache.borrow_mut().clear();
        self
    }

    pub fn pair_limit(&self) -> usize {
        self.pair_limit
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn standard_basis(&self, ord: &MonomialOrdering) -> Result<Vec<Polynomial>> {
        if let Some(sb) = self.cache.borrow().get(ord) {
            return Ok(sb.clone());
        }
        if ord.nvars() != self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), found: ord.nvars() });
        }
        let sb = standard_basis_with_limit(&self.gens, ord, self.pair_limit)?;
        self.cache.borrow_mut().insert(ord.clone(), sb.clone());
        Ok(sb)
    }

    /// Reduced Gröbner basis for degrevlex.
    pub fn groebner_basis(&self) -> Result<Vec<Polynomial>> {
        self.standard_basis(&MonomialOrdering::degrevlex(self.ring.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(Polynomial::is_constant))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if **f.ring() != *self.ring {
            return Err(Error::RingMismatch { left: self.ring.names().join(","), right: f.ring().names().join(",") });
        }
        if f.is_zero() {
            return Ok(true);
        }
        let ord = MonomialOrdering::degrevlex(self.ring.nvars());
        let gb = self.standard_basis(&ord)?;
        Ok(normal_form(f, &gb, &ord)?.is_zero())
    }

    /// `self ⊆ other`, with the first offending generator as witness.
    pub fn is_contained_in(&self, other: &Ideal) -> Result<Containment> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(Containment::NotContained(g.clone()));
            }
        }
        Ok(Containment::Contained)
    }

    /// Equality by double containment.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_contained_in(other)?.holds() && other.is_contained_in(self)?.holds())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens).map(|i| i.with_pair_limit(self.pair_limit))
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens).map(|i| i.with_pair_limit(self.pair_limit))
    }

    /// `I ∩ K[retained]` in the ring of retained variables (original order).
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if let Some(&v) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidRing(format!("variable index {v} out of range")));
        }
        let mut elim: Vec<usize> = vars.to_vec();
        elim.sort_unstable();
        elim.dedup();
        let kept: Vec<usize> = (0..n).filter(|v| !elim.contains(v)).collect();
        let target = PolyRing::new(kept.iter().map(|&i| self.ring.names()[i].clone()))?;
        if elim.is_empty() {
            return Ideal::new(
                &target,
                self.gens.iter().map(|g| g.restrict(&target, &kept).expect("no variable dropped")).collect(),
            );
        }
        let ord = MonomialOrdering::block(
            MonomialOrdering::degrevlex(elim.len()),
            elim.clone(),
            MonomialOrdering::degrevlex(kept.len()),
            kept.clone(),
        )?;
        let gb = self.standard_basis(&ord)?;
        let gens = gb.iter().filter_map(|g| g.restrict(&target, &kept)).collect();
        Ideal::new(&target, gens).map(|i| i.with_pair_limit(self.pair_limit))
    }

    /// `I ∩ ⟨f⟩` via a fresh variable `s`: eliminate `s` from `s·I + (1-s)·f`.
    pub fn intersect_principal(&self, f: &Polynomial) -> Result<Ideal> {
        let n = self.ring.nvars();
        let s_name = fresh_names("s", 1, true, self.ring.names()).remove(0);
        let mut names: Vec<String> = self.ring.names().to_vec();
        names.push(s_name);
        let big = PolyRing::new(names)?;
        let map: Vec<usize> = (0..n).collect();
        let s = Polynomial::variable(&big, n);
        let one_minus_s = &Polynomial::one(&big) - &s;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &s * &g.embed(&big, &map)).collect();
        gens.push(&one_minus_s * &f.embed(&big, &map));
        let big_ideal = Ideal::new(&big, gens)?.with_pair_limit(self.pair_limit);
        let elim = big_ideal.eliminate(&[n])?;
        let gens = elim.gens.iter().map(|g| g.restrict(&self.ring, &map).expect("s eliminated")).collect();
        Ideal::new(&self.ring, gens).map(|i| i.with_pair_limit(self.pair_limit))
    }

    /// `I : f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let inter = self.intersect_principal(f)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for g in &inter.gens {
            let q = g
                .exact_div(f)?
                .ok_or_else(|| Error::InvariantViolation(format!("`{f}` does not divide `{g}` in I ∩ ⟨f⟩")))?;
            gens.push(q);
        }
        Ideal::new(&self.ring, gens).map(|i| i.with_pair_limit(self.pair_limit))
    }

    /// `I : f^∞`, by iterated quotients until the chain stabilizes.
    pub fn saturation(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut current = self.reduced()?;
        loop {
            let next = current.quotient(f)?.reduced()?;
            if next.is_contained_in(&current)?.holds() {
                return Ok(current);
            }
            current = next;
        }
    }

    /// The same ideal generated by its reduced degrevlex Gröbner basis.
    pub fn reduced(&self) -> Result<Ideal> {
        let gb = self.groebner_basis()?;
        let out = Ideal::new(&self.ring, gb)?.with_pair_limit(self.pair_limit);
        Ok(out)
    }

    /// Sets `var` to `value` and drops it from the ring.
    pub fn specialize(&self, var: usize, value: &crate::poly::Rational) -> Result<Ideal> {
        let kept: Vec<usize> = (0..self.ring.nvars()).filter(|&v| v != var).collect();
        let target = PolyRing::new(kept.iter().map(|&i| self.ring.names()[i].clone()))?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.evaluate_variable(var, value).restrict(&target, &kept).expect("variable removed"))
            .collect();
        Ideal::new(&target, gens).map(|i| i.with_pair_limit(self.pair_limit))
    }
}

impl PartialEq for Ideal {
    /// Structural equality of ring and generators; use [`Ideal::equals`]
    /// for equality of ideals.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

/// `X_i ↦ images[i]` from `source` to `target / ⟨relations⟩`.
#[derive(Debug, Clone)]
pub struct RingMap {
    pub source: Arc<PolyRing>,
    pub target: Arc<PolyRing>,
    pub images: Vec<Polynomial>,
    pub relations: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(
        source: &Arc<PolyRing>,
        target: &Arc<PolyRing>,
        images: Vec<Polynomial>,
        relations: Vec<Polynomial>,
    ) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::LengthMismatch { expected: source.nvars(), found: images.len() });
        }
        for p in images.iter().chain(&relations) {
            if **p.ring() != **target {
                return Err(Error::RingMismatch { left: target.names().join(","), right: p.ring().names().join(",") });
            }
        }
        Ok(Self { source: source.clone(), target: target.clone(), images, relations })
    }

    /// Product ring (target variables, then source variables), with target
    /// names renamed where they clash with source names.
    fn product_ring(&self) -> Result<Arc<PolyRing>> {
        let source_names = self.source.names();
        let mut names: Vec<String> = Vec::new();
        for name in self.target.names() {
            let mut n = name.clone();
            while source_names.contains(&n) || names.contains(&n) {
                n.push('_');
            }
            names.push(n);
        }
        names.extend(source_names.iter().cloned());
        PolyRing::new(names)
    }

    /// The ideal `⟨X_i - image_i⟩ + relations` in the product ring, and the
    /// positions of target and source variables in it.
    pub fn graph_ideal(&self) -> Result<(Ideal, Vec<usize>, Vec<usize>)> {
        let big = self.product_ring()?;
        let m = self.target.nvars();
        let k = self.source.nvars();
        let tmap: Vec<usize> = (0..m).collect();
        let smap: Vec<usize> = (m..m + k).collect();
        let mut gens: Vec<Polynomial> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| &Polynomial::variable(&big, m + i) - &img.embed(&big, &tmap))
            .collect();
        gens.extend(self.relations.iter().map(|r| r.embed(&big, &tmap)));
        Ok((Ideal::new(&big, gens)?, tmap, smap))
    }

    /// `{h | h(images) ≡ 0 mod relations}`, by eliminating target variables.
    pub fn kernel(&self) -> Result<Ideal> {
        let (graph, tmap, smap) = self.graph_ideal()?;
        let elim = graph.eliminate(&tmap)?;
        let gens = elim
            .gens()
            .iter()
            .map(|g| {
                // eliminate() keeps the source variables in order
                let ident: Vec<usize> = (0..smap.len()).collect();
                g.restrict(&self.source, &ident).expect("same variable count")
            })
            .collect();
        Ideal::new(&self.source, gens)
    }

    /// Image of `h` in the target ring (relations not applied).
    pub fn apply(&self, h: &Polynomial) -> Result<Polynomial> {
        h.substitute(&self.target, &self.images)
    }
}
