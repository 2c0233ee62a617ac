//! Homogeneous subduction.
//!
//! Initial forms are tagged with their Δ-degree in `B ⊗ KΔ`. Membership of a
//! tagged initial form in the algebra generated by the tagged initial forms
//! of a basis is decided by a normal form modulo the eliminated ideal
//! `⟨X_i - in_v(f_i)·g^δ_i⟩ + relations`; the resulting witness is truncated
//! to the (Γ, Δ)-degree of the target.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grading::{DeltaDegree, DeltaGroup, GradedElement, GradedTagRing, GroupRing};
use crate::groebner::{normal_form, standard_basis, Ideal};
use crate::ordering::MonomialOrdering;
use crate::poly::{fresh_names, PolyRing, Polynomial};
use crate::valuation::MonomialValuation;

pub const DEFAULT_MAX_ITER: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubductionStatus {
    ReducedToZero,
    IrreducibleRemainder,
    IterationCapHit,
}

/// `f = h(f_1, …, f_k) + r`.
#[derive(Debug, Clone)]
pub struct SubductionResult {
    /// Indices of the basis elements occurring in `h`, ascending.
    pub used: Vec<usize>,
    /// Polynomial in the tag variables, one per basis element.
    pub h: Polynomial,
    pub remainder: Polynomial,
    pub status: SubductionStatus,
    /// `v(r)` before each reduction step; strictly increasing.
    pub trace: Vec<Vec<i64>>,
}

impl SubductionResult {
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }
}

/// Solves `h'(in_v^Δ(f_1), …) = target` for a fixed basis.
#[derive(Debug, Clone)]
pub struct PreimageSolver {
    base: Arc<PolyRing>,
    group_ring: GroupRing,
    tag: GradedTagRing,
    big: Arc<PolyRing>,
    ord: Option<MonomialOrdering>,
    gb: Vec<Polynomial>,
    initials: Vec<Polynomial>,
    values: Vec<Vec<i64>>,
}

fn check_element(base: &Arc<PolyRing>, group: &DeltaGroup, e: &GradedElement) -> Result<()> {
    if **e.poly.ring() != **base {
        return Err(Error::RingMismatch { left: base.names().join(","), right: e.poly.ring().names().join(",") });
    }
    if !group.contains(&e.degree) {
        return Err(Error::InvalidGrading(format!("degree {} is not an element of {group}", e.degree)));
    }
    Ok(())
}

/// `K[X_1..X_k]` with names that do not depend on `B`.
pub fn tag_ring(k: usize) -> Result<Arc<PolyRing>> {
    PolyRing::new((1..=k).map(|i| format!("X{i}")))
}

impl PreimageSolver {
    pub fn new(
        base: &Arc<PolyRing>,
        basis: &[GradedElement],
        v: &MonomialValuation,
        group: &DeltaGroup,
    ) -> Result<Self> {
        if v.nvars() != base.nvars() {
            return Err(Error::LengthMismatch { expected: base.nvars(), found: v.nvars() });
        }
        for e in basis {
            check_element(base, group, e)?;
        }
        let k = basis.len();
        let mut initials = Vec::with_capacity(k);
        let mut values = Vec::with_capacity(k);
        for e in basis {
            let (value, init) = v.initial(&e.poly)?;
            initials.push(init);
            values.push(value);
        }
        let tag = GradedTagRing::new(tag_ring(k)?, group.clone(), basis.iter().map(|e| e.degree.clone()).collect())?
            .with_gamma(values.clone())?;
        let group_ring = GroupRing::new(base, group)?;
        let nb = group_ring.ring().nvars();
        let mut names = group_ring.ring().names().to_vec();
        names.extend(fresh_names("X", k, false, &names));
        let big = PolyRing::new(names)?;
        let low: Vec<usize> = (0..nb).collect();
        let high: Vec<usize> = (nb..nb + k).collect();
        let (ord, gb) = if k == 0 {
            (None, Vec::new())
        } else {
            let ord = MonomialOrdering::block(
                MonomialOrdering::degrevlex(nb),
                low.clone(),
                MonomialOrdering::degrevlex(k),
                high,
            )?;
            let mut gens: Vec<Polynomial> = group_ring.relations().iter().map(|r| r.embed(&big, &low)).collect();
            for (i, (init, e)) in initials.iter().zip(basis).enumerate() {
                let tagged = group_ring.tag(init, &e.degree).embed(&big, &low);
                gens.push(&Polynomial::variable(&big, nb + i) - &tagged);
            }
            let gb = standard_basis(&gens, &ord)?;
            (Some(ord), gb)
        };
        Ok(Self { base: base.clone(), group_ring, tag, big, ord, gb, initials, values })
    }

    /// The tag ring with `deg_Δ(X_i) = deg_Δ(f_i)` and `deg_Γ(X_i) = v(f_i)`.
    pub fn tag(&self) -> &GradedTagRing {
        &self.tag
    }

    pub fn initials(&self) -> &[Polynomial] {
        &self.initials
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    fn k(&self) -> usize {
        self.initials.len()
    }

    fn tag_vars(&self) -> Vec<usize> {
        let nb = self.group_ring.ring().nvars();
        (nb..nb + self.k()).collect()
    }

    /// `ker(X_i ↦ in_v^Δ(f_i))` as its reduced Gröbner basis for degrevlex.
    pub fn kernel(&self) -> Result<Ideal> {
        let vars = self.tag_vars();
        let gens = self.gb.iter().filter_map(|g| g.restrict(self.tag.ring(), &vars)).collect();
        Ideal::new(self.tag.ring(), gens)
    }

    /// A (Γ, Δ)-homogeneous `h'` with `h'(in_v^Δ(f_i)) = target ⊗ degree`,
    /// or `None` if the target is not in the algebra.
    pub fn preimage(&self, target: &Polynomial, value: &[i64], degree: &DeltaDegree) -> Result<Option<Polynomial>> {
        if **target.ring() != *self.base {
            return Err(Error::RingMismatch {
                left: self.base.names().join(","),
                right: target.ring().names().join(","),
            });
        }
        if target.is_zero() {
            return Ok(Some(Polynomial::zero(self.tag.ring())));
        }
        let Some(ord) = &self.ord else {
            return Ok(None);
        };
        let low: Vec<usize> = (0..self.group_ring.ring().nvars()).collect();
        let p = self.group_ring.tag(target, degree).embed(&self.big, &low);
        let nf = normal_form(&p, &self.gb, ord)?;
        let Some(h) = nf.restrict(self.tag.ring(), &self.tag_vars()) else {
            return Ok(None);
        };
        let truncated = Polynomial::from_terms(
            self.tag.ring(),
            h.terms()
                .filter(|(m, _)| {
                    self.tag.monomial_gamma(m).as_deref() == Some(value) && self.tag.monomial_delta(m) == *degree
                })
                .map(|(m, c)| (m.clone(), c.clone())),
        )?;
        if truncated.substitute(&self.base, &self.initials)? != *target {
            return Err(Error::InvariantViolation(format!(
                "truncated preimage `{truncated}` does not map to `{target}`"
            )));
        }
        Ok(Some(truncated))
    }
}

/// One-shot form of [`PreimageSolver::preimage`].
pub fn homogeneous_preimage(
    target: &Polynomial,
    value: &[i64],
    degree: &DeltaDegree,
    basis: &[GradedElement],
    v: &MonomialValuation,
    group: &DeltaGroup,
) -> Result<Option<Polynomial>> {
    PreimageSolver::new(target.ring(), basis, v, group)?.preimage(target, value, degree)
}

/// Subducts `f` by `basis`, stopping after `max_iter` reduction steps.
pub fn subduct(
    f: &GradedElement,
    basis: &[GradedElement],
    v: &MonomialValuation,
    group: &DeltaGroup,
    max_iter: usize,
) -> Result<SubductionResult> {
    let solver = PreimageSolver::new(f.poly.ring(), basis, v, group)?;
    subduct_with(&solver, f, basis, v, max_iter)
}

/// [`subduct`] with a prepared solver for `basis`.
pub fn subduct_with(
    solver: &PreimageSolver,
    f: &GradedElement,
    basis: &[GradedElement],
    v: &MonomialValuation,
    max_iter: usize,
) -> Result<SubductionResult> {
    if basis.len() != solver.k() {
        return Err(Error::LengthMismatch { expected: solver.k(), found: basis.len() });
    }
    check_element(&solver.base, solver.tag.group(), f)?;
    let ring = solver.base.clone();
    let images: Vec<Polynomial> = basis.iter().map(|e| e.poly.clone()).collect();
    let mut h = Polynomial::zero(solver.tag.ring());
    let mut r = f.poly.clone();
    let mut trace: Vec<Vec<i64>> = Vec::new();
    let status = loop {
        if r.is_zero() {
            break SubductionStatus::ReducedToZero;
        }
        let (value, init) = v.initial(&r)?;
        if let Some(last) = trace.last() {
            if v.cmp_values(&value, last) != Ordering::Greater {
                return Err(Error::InvariantViolation(format!("v(r) did not increase: {last:?} then {value:?}")));
            }
        }
        let Some(step) = solver.preimage(&init, &value, &f.degree)? else {
            break SubductionStatus::IrreducibleRemainder;
        };
        if trace.len() == max_iter {
            break SubductionStatus::IterationCapHit;
        }
        trace.push(value);
        r = &r - &step.substitute(&ring, &images)?;
        h = &h + &step;
    };
    let used: BTreeSet<usize> = (0..solver.k()).filter(|&i| h.involves(i)).collect();
    Ok(SubductionResult { used: used.into_iter().collect(), h, remainder: r, status, trace })
}
