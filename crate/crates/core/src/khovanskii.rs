//! Homogeneous Khovanskii bases.
//!
//! Each round builds one [`PreimageSolver`] for the current basis, takes the
//! (Γ, Δ)-homogeneous components of the reduced Gröbner basis of
//! `ker(X_i ↦ in_v^Δ(f_i))`, evaluates them at the basis and subducts the
//! results. Nonzero remainders are added between rounds.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grading::{DeltaGroup, GradedElement, Split};
use crate::groebner::{Containment, RingMap};
use crate::homogenize::initial_ideal;
use crate::poly::Polynomial;
use crate::subduction::{subduct_with, tag_ring, PreimageSolver, SubductionResult, SubductionStatus};
use crate::valuation::MonomialValuation;

pub const DEFAULT_MAX_ROUNDS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KhovanskiiOptions {
    pub max_rounds: usize,
    pub max_iter: usize,
}

impl Default for KhovanskiiOptions {
    fn default() -> Self {
        Self { max_rounds: DEFAULT_MAX_ROUNDS, max_iter: crate::subduction::DEFAULT_MAX_ITER }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Complete,
    RoundCapHit,
}

#[derive(Debug, Clone)]
pub struct RoundLog {
    /// Kernel generators, (Γ, Δ)-homogeneous, in the tag ring of this round.
    pub kernel_generators: Vec<Polynomial>,
    /// Normalized remainders added at the end of the round.
    pub added: Vec<GradedElement>,
    /// Kernel generators whose subduction hit the iteration cap.
    pub deferred: Vec<Polynomial>,
}

#[derive(Debug, Clone)]
pub struct KhovanskiiRun {
    pub basis: Vec<GradedElement>,
    pub rounds: usize,
    pub status: RunStatus,
    pub log: Vec<RoundLog>,
}

pub(crate) fn check_generators(gens: &[GradedElement], v: &MonomialValuation, group: &DeltaGroup) -> Result<()> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidRing("at least one generator is required".into()));
    };
    let ring = first.poly.ring();
    if v.nvars() != ring.nvars() {
        return Err(Error::LengthMismatch { expected: ring.nvars(), found: v.nvars() });
    }
    for g in gens {
        if g.poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if **g.poly.ring() != **ring {
            return Err(Error::RingMismatch { left: ring.names().join(","), right: g.poly.ring().names().join(",") });
        }
        if !group.contains(&g.degree) {
            return Err(Error::InvalidGrading(format!("degree {} is not an element of {group}", g.degree)));
        }
    }
    Ok(())
}

/// `α: X_i ↦ f_i` from the tag ring to `B`.
pub(crate) fn evaluation_map(basis: &[GradedElement]) -> Result<RingMap> {
    let ring = basis[0].poly.ring();
    RingMap::new(&tag_ring(basis.len())?, ring, basis.iter().map(|e| e.poly.clone()).collect(), Vec::new())
}

/// Kernel generators of `β` split into (Γ, Δ)-homogeneous components.
fn kernel_generators(solver: &PreimageSolver) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for g in solver.kernel()?.gens() {
        out.extend(solver.tag().homogeneous_components(g, Split::Both)?);
    }
    Ok(out)
}

/// Evaluates and subducts every kernel generator, in order.
fn subduct_kernel(
    solver: &PreimageSolver,
    basis: &[GradedElement],
    v: &MonomialValuation,
    kernel: &[Polynomial],
    max_iter: usize,
) -> Result<Vec<(GradedElement, SubductionResult)>> {
    let ring = basis[0].poly.ring();
    let images: Vec<Polynomial> = basis.iter().map(|e| e.poly.clone()).collect();
    kernel
        .par_iter()
        .map(|h| {
            let degree = solver
                .tag()
                .delta_degree(h)?
                .ok_or_else(|| Error::InvariantViolation(format!("kernel component `{h}` is not Δ-homogeneous")))?;
            let f = GradedElement::new(h.substitute(ring, &images)?, degree);
            let res = subduct_with(solver, &f, basis, v, max_iter)?;
            Ok((f, res))
        })
        .collect()
}

/// Runs the homogeneous Khovanskii basis algorithm on `gens`.
pub fn khovanskii_basis(
    gens: &[GradedElement],
    v: &MonomialValuation,
    group: &DeltaGroup,
    opts: KhovanskiiOptions,
) -> Result<KhovanskiiRun> {
    check_generators(gens, v, group)?;
    let ring = gens[0].poly.ring().clone();
    let mut basis = gens.to_vec();
    let mut log = Vec::new();
    let mut idle_rounds = 0;
    loop {
        if log.len() == opts.max_rounds {
            return Ok(KhovanskiiRun { basis, rounds: log.len(), status: RunStatus::RoundCapHit, log });
        }
        let solver = PreimageSolver::new(&ring, &basis, v, group)?;
        let kernel = kernel_generators(&solver)?;
        let results = subduct_kernel(&solver, &basis, v, &kernel, opts.max_iter)?;
        let mut added: Vec<GradedElement> = Vec::new();
        let mut deferred = Vec::new();
        for (h, (f, res)) in kernel.iter().zip(results) {
            match res.status {
                SubductionStatus::ReducedToZero => {}
                SubductionStatus::IterationCapHit => deferred.push(h.clone()),
                SubductionStatus::IrreducibleRemainder => {
                    let r = GradedElement::new(res.remainder.primitive(), f.degree);
                    if !added.contains(&r) {
                        added.push(r);
                    }
                }
            }
        }
        let done = added.is_empty() && deferred.is_empty();
        let all_deferred = added.is_empty() && !deferred.is_empty();
        basis.extend(added.iter().cloned());
        log.push(RoundLog { kernel_generators: kernel, added, deferred });
        if done {
            return Ok(KhovanskiiRun { basis, rounds: log.len(), status: RunStatus::Complete, log });
        }
        idle_rounds = if all_deferred { idle_rounds + 1 } else { 0 };
        if idle_rounds == 2 {
            return Ok(KhovanskiiRun { basis, rounds: log.len(), status: RunStatus::RoundCapHit, log });
        }
    }
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Verified,
    /// `generator(f_1, …)` leaves the nonzero remainder `witness`.
    Refuted {
        generator: Polynomial,
        witness: GradedElement,
    },
    /// Subduction of `generator(f_1, …)` hit the iteration cap.
    Inconclusive {
        generator: Polynomial,
    },
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }
}

#[derive(Debug, Clone)]
pub struct KhovanskiiCertificate {
    pub verdict: Verdict,
    /// `(kernel generator h, subduction witness)` with `h(f) = witness(f)`
    /// for every generator that reduced to zero.
    pub witnesses: Vec<(Polynomial, Polynomial)>,
    /// For `Γ = Z`: whether `in_Γ(ker α) = ker β`.
    pub initial_ideal_agrees: Option<bool>,
}

/// Checks that every (Γ, Δ)-homogeneous kernel generator subducts to zero.
pub fn verify_khovanskii(
    basis: &[GradedElement],
    v: &MonomialValuation,
    group: &DeltaGroup,
    max_iter: usize,
) -> Result<KhovanskiiCertificate> {
    check_generators(basis, v, group)?;
    let ring = basis[0].poly.ring().clone();
    let solver = PreimageSolver::new(&ring, basis, v, group)?;
    let kernel = kernel_generators(&solver)?;
    let results = subduct_kernel(&solver, basis, v, &kernel, max_iter)?;
    let mut witnesses = Vec::new();
    let mut verdict = Verdict::Verified;
    for (h, (f, res)) in kernel.iter().zip(results) {
        match res.status {
            SubductionStatus::ReducedToZero => witnesses.push((h.clone(), res.h)),
            SubductionStatus::IrreducibleRemainder => {
                if verdict.is_verified() || matches!(verdict, Verdict::Inconclusive { .. }) {
                    let witness = GradedElement::new(res.remainder, f.degree);
                    verdict = Verdict::Refuted { generator: h.clone(), witness };
                }
            }
            SubductionStatus::IterationCapHit => {
                if verdict.is_verified() {
                    verdict = Verdict::Inconclusive { generator: h.clone() };
                }
            }
        }
    }
    let initial_ideal_agrees = if v.is_integer_valued() {
        let weights: Vec<i64> = solver.values().iter().map(|g| g[0]).collect();
        let ideal = evaluation_map(basis)?.kernel()?;
        let initial = initial_ideal(&ideal, &weights)?;
        let j = solver.kernel()?;
        Some(matches!(initial.is_contained_in(&j)?, Containment::Contained) && j.is_contained_in(&initial)?.holds())
    } else {
        None
    };
    Ok(KhovanskiiCertificate { verdict, witnesses, initial_ideal_agrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::MonomialOrdering;
    use crate::poly::PolyRing;
    use std::sync::Arc;

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn elements(r: &Arc<PolyRing>, group: &DeltaGroup, items: &[(&str, &[i64])]) -> Vec<GradedElement> {
        items.iter().map(|(s, d)| GradedElement::new(p(r, s), group.degree(d).unwrap())).collect()
    }

    fn xy() -> Arc<PolyRing> {
        PolyRing::new(["x", "y"]).unwrap()
    }

    #[test]
    fn sign_grading_is_already_a_basis() {
        let r = xy();
        let group = DeltaGroup::new(1, vec![2, 2]).unwrap();
        let gens = elements(&r, &group, &[("x^2 + y^2", &[2, 0, 0]), ("x^2 - y^2", &[2, 1, 0]), ("x*y", &[2, 0, 1])]);
        let v = MonomialValuation::weight(vec![1, 0]);
        let run = khovanskii_basis(&gens, &v, &group, KhovanskiiOptions::default()).unwrap();
        assert_eq!(run.status, RunStatus::Complete);
        assert_eq!(run.rounds, 1);
        assert_eq!(run.basis, gens);
        let cert = verify_khovanskii(&run.basis, &v, &group, 100).unwrap();
        assert!(cert.verdict.is_verified());
        assert_eq!(cert.initial_ideal_agrees, Some(true));
        assert_eq!(cert.witnesses.len(), 1);
    }

    #[test]
    fn degree_grading_adds_x_squared() {
        let r = xy();
        let group = DeltaGroup::integers();
        let gens = elements(&r, &group, &[("x^2 + y^2", &[2]), ("x^2 - y^2", &[2]), ("x*y", &[2])]);
        let v = MonomialValuation::weight(vec![1, 0]);
        let cert = verify_khovanskii(&gens, &v, &group, 100).unwrap();
        match &cert.verdict {
            Verdict::Refuted { witness, .. } => assert_eq!(witness.poly.primitive(), p(&r, "x^2")),
            other => panic!("expected refutation, got {other:?}"),
        }
        assert_eq!(cert.initial_ideal_agrees, Some(false));

        let run = khovanskii_basis(&gens, &v, &group, KhovanskiiOptions::default()).unwrap();
        assert_eq!(run.status, RunStatus::Complete);
        assert_eq!(run.rounds, 2);
        assert_eq!(run.basis.len(), 4);
        assert_eq!(run.basis[3].poly, p(&r, "x^2"));
        let cert = verify_khovanskii(&run.basis, &v, &group, 100).unwrap();
        assert!(cert.verdict.is_verified());
        assert_eq!(cert.initial_ideal_agrees, Some(true));

        let again = khovanskii_basis(&run.basis, &v, &group, KhovanskiiOptions::default()).unwrap();
        assert_eq!(again.rounds, 1);
        assert_eq!(again.basis, run.basis);
    }

    fn block_valued() -> (Vec<Polynomial>, MonomialValuation) {
        let r = PolyRing::new(["x", "y", "z"]).unwrap();
        let ord =
            MonomialOrdering::block(MonomialOrdering::neg_lex(1), vec![2], MonomialOrdering::degrevlex(2), vec![0, 1])
                .unwrap();
        let gens = ["x + y + z", "x*y", "x*y^2"].iter().map(|s| p(&r, s)).collect();
        (gens, MonomialValuation::from_ordering(ord))
    }

    #[test]
    fn free_grading_has_no_relations() {
        let (polys, v) = block_valued();
        let group = DeltaGroup::new(3, vec![]).unwrap();
        let gens: Vec<GradedElement> =
            polys.into_iter().enumerate().map(|(i, f)| GradedElement::new(f, group.unit(i))).collect();
        let run = khovanskii_basis(&gens, &v, &group, KhovanskiiOptions::default()).unwrap();
        assert_eq!(run.status, RunStatus::Complete);
        assert_eq!(run.basis.len(), 3);
        assert!(run.log[0].kernel_generators.is_empty());
        let cert = verify_khovanskii(&gens, &v, &group, 100).unwrap();
        assert!(cert.verdict.is_verified());
        assert_eq!(cert.initial_ideal_agrees, None);
    }

    #[test]
    fn standard_grading_grows() {
        let (polys, v) = block_valued();
        let group = DeltaGroup::integers();
        let gens: Vec<GradedElement> = polys
            .into_iter()
            .map(|f| {
                let d = f.total_degree().unwrap() as i64;
                GradedElement::new(f, group.degree(&[d]).unwrap())
            })
            .collect();
        let opts = KhovanskiiOptions { max_rounds: 3, max_iter: 200 };
        let run = khovanskii_basis(&gens, &v, &group, opts).unwrap();
        assert_eq!(run.status, RunStatus::RoundCapHit);
        assert_eq!(run.rounds, 3);
        for round in &run.log {
            assert!(!round.added.is_empty());
        }
    }
}
