//! Homogeneous MUVAK bases for several `Z`-valued valuations.
//!
//! With `W_ij = v_i(f_j)`, `I = ker α` and `J_i = ker β_i`, the basis is a
//! MUVAK basis iff `J_i^hom ⊆ I^hom + ⟨t_i⟩` for every `i`, where `hom` is
//! negative homogenization with respect to all rows of `W`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grading::{DeltaGroup, GradedElement};
use crate::groebner::{lift, Ideal};
use crate::homogenize::{dehomogenize, homogenize_poly_multi, multi_homogenize_with, Method, WeightSystem};
use crate::khovanskii::{check_generators, evaluation_map, RunStatus};
use crate::ordering::MonomialOrdering;
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::subduction::{tag_ring, PreimageSolver};
use crate::valuation::MonomialValuation;

pub const DEFAULT_MAX_ROUNDS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuvakOptions {
    pub max_rounds: usize,
    pub method: Method,
}

impl Default for MuvakOptions {
    fn default() -> Self {
        Self { max_rounds: DEFAULT_MAX_ROUNDS, method: Method::Bayer }
    }
}

/// The containment `J_i^hom ⊆ I^hom + ⟨t_i⟩` for one valuation.
#[derive(Debug, Clone)]
pub struct ContainmentCheck {
    pub valuation: usize,
    pub i_hom: Ideal,
    pub j_hom: Ideal,
    /// Generators of `J_i^hom` outside `I^hom + ⟨t_i⟩`.
    pub offending: Vec<Polynomial>,
}

impl ContainmentCheck {
    pub fn holds(&self) -> bool {
        self.offending.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct MuvakRound {
    pub checks: Vec<ContainmentCheck>,
    pub added: Vec<GradedElement>,
}

#[derive(Debug, Clone)]
pub struct MuvakRun {
    pub basis: Vec<GradedElement>,
    pub rounds: usize,
    pub status: RunStatus,
    pub log: Vec<MuvakRound>,
    /// Rows homogenized by saturation although Bayer's method was requested.
    pub warnings: Vec<String>,
}

fn check_valuations(valuations: &[MonomialValuation]) -> Result<()> {
    if valuations.is_empty() {
        return Err(Error::InvalidValuation("at least one valuation is required".into()));
    }
    if let Some(i) = valuations.iter().position(|v| !v.is_integer_valued()) {
        return Err(Error::InvalidValuation(format!("valuation {i} is not Z-valued with the natural order")));
    }
    Ok(())
}

/// `W_ij = v_i(f_j)`.
fn weight_system(basis: &[GradedElement], valuations: &[MonomialValuation]) -> Result<WeightSystem> {
    let rows = valuations
        .iter()
        .map(|v| basis.iter().map(|e| v.value(&e.poly).map(|g| g[0])).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    WeightSystem::negative(rows)
}

/// Per-round state for a fixed basis.
struct Stage {
    ws: WeightSystem,
    methods: Vec<Method>,
    i_hom: Ideal,
}

impl Stage {
    fn new(basis: &[GradedElement], valuations: &[MonomialValuation], method: Method) -> Result<(Self, Vec<String>)> {
        let ws = weight_system(basis, valuations)?;
        let (methods, warnings) = ws.resolve_methods(method);
        let i = evaluation_map(basis)?.kernel()?;
        let i_hom = multi_homogenize_with(&i, &ws, &methods)?;
        Ok((Self { ws, methods, i_hom }, warnings))
    }

    fn t(&self, i: usize) -> Polynomial {
        let ring = self.i_hom.ring();
        Polynomial::variable(ring, ring.nvars() - self.ws.nrows() + i)
    }

    fn check(
        &self,
        basis: &[GradedElement],
        valuations: &[MonomialValuation],
        group: &DeltaGroup,
        i: usize,
    ) -> Result<ContainmentCheck> {
        let ring = basis[0].poly.ring();
        let j = PreimageSolver::new(ring, basis, &valuations[i], group)?.kernel()?;
        let j_hom = multi_homogenize_with(&j, &self.ws, &self.methods)?;
        let target = self.i_hom.with_generators(&[self.t(i)])?;
        let mut offending = Vec::new();
        for h in j_hom.gens() {
            if !target.contains(h)? {
                offending.push(h.clone());
            }
        }
        Ok(ContainmentCheck { valuation: i, i_hom: self.i_hom.clone(), j_hom, offending })
    }
}

fn t_vars(ring: &Arc<PolyRing>, m: usize) -> Vec<usize> {
    (ring.nvars() - m..ring.nvars()).collect()
}

/// Runs the homogeneous MUVAK basis algorithm.
pub fn muvak_basis(
    gens: &[GradedElement],
    valuations: &[MonomialValuation],
    group: &DeltaGroup,
    opts: MuvakOptions,
) -> Result<MuvakRun> {
    check_valuations(valuations)?;
    for v in valuations {
        check_generators(gens, v, group)?;
    }
    let ring = gens[0].poly.ring().clone();
    let m = valuations.len();
    let mut basis = gens.to_vec();
    let mut log = Vec::new();
    let mut warnings: Vec<String> = Vec::new();
    loop {
        if log.len() == opts.max_rounds {
            return Ok(MuvakRun { basis, rounds: log.len(), status: RunStatus::RoundCapHit, log, warnings });
        }
        let mut round = MuvakRound { checks: Vec::new(), added: Vec::new() };
        let mut stage: Option<Stage> = None;
        for i in 0..m {
            if stage.is_none() {
                let (s, w) = Stage::new(&basis, valuations, opts.method)?;
                for msg in w {
                    if !warnings.contains(&msg) {
                        warnings.push(msg);
                    }
                }
                stage = Some(s);
            }
            let s = stage.as_ref().expect("stage computed");
            let check = s.check(&basis, valuations, group, i)?;
            let images: Vec<Polynomial> = basis.iter().map(|e| e.poly.clone()).collect();
            let tag = PreimageSolver::new(&ring, &basis, &valuations[i], group)?;
            let mut fresh: Vec<GradedElement> = Vec::new();
            for h in &check.offending {
                let deh = dehomogenize(h, &t_vars(h.ring(), m))?;
                let tagged = deh.restrict(tag.tag().ring(), &(0..basis.len()).collect::<Vec<_>>()).expect("tag ring");
                let degree = tag.tag().delta_degree(&tagged)?.ok_or_else(|| {
                    Error::InvariantViolation(format!("generator `{h}` of J^hom is not Δ-homogeneous"))
                })?;
                let f = GradedElement::new(tagged.substitute(&ring, &images)?.primitive(), degree);
                if f.poly.is_zero() || fresh.iter().any(|e| e.poly == f.poly) {
                    continue;
                }
                if !fresh.is_empty() {
                    let mut extended = basis.clone();
                    extended.extend(fresh.iter().cloned());
                    if faithfully_representable(&f, &extended, valuations, group, opts.method)?.is_some() {
                        continue;
                    }
                }
                fresh.push(f);
            }
            round.checks.push(check);
            if !fresh.is_empty() {
                basis.extend(fresh.iter().cloned());
                round.added.extend(fresh);
                stage = None;
            }
        }
        let done = round.added.is_empty();
        log.push(round);
        if done {
            return Ok(MuvakRun { basis, rounds: log.len(), status: RunStatus::Complete, log, warnings });
        }
    }
}

/// The `J_i^hom ⊆ I^hom + ⟨t_i⟩` checks for a fixed basis.
#[derive(Debug, Clone)]
pub struct MuvakCertificate {
    pub checks: Vec<ContainmentCheck>,
}

impl MuvakCertificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(ContainmentCheck::holds)
    }

    /// The first generator outside its containment, if any.
    pub fn witness(&self) -> Option<&Polynomial> {
        self.checks.iter().find_map(|c| c.offending.first())
    }
}

pub fn verify_muvak(
    basis: &[GradedElement],
    valuations: &[MonomialValuation],
    group: &DeltaGroup,
    method: Method,
) -> Result<MuvakCertificate> {
    check_valuations(valuations)?;
    for v in valuations {
        check_generators(basis, v, group)?;
    }
    let (stage, _) = Stage::new(basis, valuations, method)?;
    let checks = (0..valuations.len()).map(|i| stage.check(basis, valuations, group, i)).collect::<Result<_>>()?;
    Ok(MuvakCertificate { checks })
}

/// `h ∈ K[X]` with `h(f_1, …) = f`, found by elimination.
pub fn subalgebra_preimage(f: &Polynomial, gens: &[Polynomial]) -> Result<Option<Polynomial>> {
    let ring = f.ring();
    let k = gens.len();
    let n = ring.nvars();
    let tags = tag_ring(k)?;
    let mut names = ring.names().to_vec();
    names.extend(crate::poly::fresh_names("X", k, false, &names));
    let big = PolyRing::new(names)?;
    let low: Vec<usize> = (0..n).collect();
    let high: Vec<usize> = (n..n + k).collect();
    let ord = MonomialOrdering::block(
        MonomialOrdering::degrevlex(n),
        low.clone(),
        MonomialOrdering::degrevlex(k),
        high.clone(),
    )?;
    let ideal: Vec<Polynomial> =
        gens.iter().enumerate().map(|(i, g)| &Polynomial::variable(&big, n + i) - &g.embed(&big, &low)).collect();
    let gb = crate::groebner::standard_basis(&ideal, &ord)?;
    let nf = crate::groebner::normal_form(&f.embed(&big, &low), &gb, &ord)?;
    Ok(nf.restrict(&tags, &high))
}

/// A witness `h` with `h(f_1, …) = f` and `v_i(t(f_1, …)) ≥ v_i(f)` for
/// every term `t` of `h` and every `i`, or `None` if `f` is not faithfully
/// representable. Fails with [`Error::NotInSubalgebra`] if `f ∉ K[f_1, …]`.
pub fn faithfully_representable(
    f: &GradedElement,
    gens: &[GradedElement],
    valuations: &[MonomialValuation],
    group: &DeltaGroup,
    method: Method,
) -> Result<Option<Polynomial>> {
    check_valuations(valuations)?;
    for v in valuations {
        check_generators(gens, v, group)?;
    }
    let polys: Vec<Polynomial> = gens.iter().map(|e| e.poly.clone()).collect();
    if f.poly.is_zero() {
        return Ok(Some(Polynomial::zero(&tag_ring(gens.len())?)));
    }
    let h = subalgebra_preimage(&f.poly, &polys)?.ok_or(Error::NotInSubalgebra)?;
    let ws = weight_system(gens, valuations)?;
    let (methods, _) = ws.resolve_methods(method);
    let i = evaluation_map(gens)?.kernel()?;
    let i_hom = multi_homogenize_with(&i, &ws, &methods)?;
    let hom_ring = i_hom.ring().clone();
    let k = gens.len();
    let m = valuations.len();

    let targets: Vec<i64> = valuations.iter().map(|v| v.value(&f.poly).map(|g| g[0])).collect::<Result<_>>()?;
    let low = crate::homogenize::mindeg(ws.rows(), &h)?;
    let mut theta_exps = vec![0u32; k + m];
    for i in 0..m {
        let gap = targets[i] - low[i];
        if gap < 0 {
            return Err(Error::InvariantViolation(format!(
                "v_{i}(f) = {} below the minimal degree {}",
                targets[i], low[i]
            )));
        }
        theta_exps[k + i] = gap as u32;
    }
    let theta = Polynomial::term(&hom_ring, Monomial::new(theta_exps), crate::poly::rat(1, 1));
    let h_hom = homogenize_poly_multi(&ws, &h)?;
    let mut lift_gens = i_hom.gens().to_vec();
    lift_gens.push(theta);
    let Some(cofactors) = lift(&h_hom, &lift_gens, &MonomialOrdering::degrevlex(hom_ring.nvars()))? else {
        return Ok(None);
    };
    let c = cofactors.last().expect("θ cofactor");
    let component = Polynomial::from_terms(
        &hom_ring,
        c.terms()
            .filter(|(mono, _)| {
                ws.rows().iter().enumerate().all(|(i, row)| {
                    let x: i64 = row.iter().zip(mono.exponents()).map(|(w, &e)| w * i64::from(e)).sum();
                    x - i64::from(mono.exponents()[k + i]) == targets[i]
                })
            })
            .map(|(mono, coeff)| (mono.clone(), coeff.clone())),
    )?;
    let deh = dehomogenize(&component, &t_vars(&hom_ring, m))?;
    let witness = deh.restrict(&tag_ring(k)?, &(0..k).collect::<Vec<_>>()).expect("tag ring");
    check_witness(&witness, &f.poly, &polys, valuations, &targets)?;
    Ok(Some(witness))
}

fn check_witness(
    h: &Polynomial,
    f: &Polynomial,
    gens: &[Polynomial],
    valuations: &[MonomialValuation],
    targets: &[i64],
) -> Result<()> {
    if h.substitute(f.ring(), gens)? != *f {
        return Err(Error::InvariantViolation(format!("witness `{h}` does not evaluate to `{f}`")));
    }
    for (mono, _) in h.terms() {
        for (v, &target) in valuations.iter().zip(targets) {
            let value: i64 = mono
                .exponents()
                .iter()
                .zip(gens)
                .map(|(&e, g)| i64::from(e) * v.value(g).map(|x| x[0]).unwrap_or(0))
                .sum();
            if value < target {
                return Err(Error::InvariantViolation(format!("witness term of `{h}` has value {value} < {target}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanskii::verify_khovanskii;

    fn xy() -> Arc<PolyRing> {
        PolyRing::new(["x", "y"]).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn trivial(r: &Arc<PolyRing>, items: &[&str]) -> Vec<GradedElement> {
        items.iter().map(|s| GradedElement::new(p(r, s), DeltaGroup::trivial().zero())).collect()
    }

    fn v41() -> Vec<MonomialValuation> {
        vec![MonomialValuation::weight(vec![0, 1])]
    }

    #[test]
    fn divisibility_run_adds_y() {
        let r = xy();
        let gens = trivial(&r, &["x", "x + y", "y + y^2"]);
        let run = muvak_basis(&gens, &v41(), &DeltaGroup::trivial(), MuvakOptions::default()).unwrap();
        assert_eq!(run.status, RunStatus::Complete);
        assert_eq!(run.rounds, 2);
        assert_eq!(run.basis.len(), 4);
        assert_eq!(run.basis[3].poly, p(&r, "y"));
        let first = &run.log[0].checks[0];
        let rt = PolyRing::new(["X1", "X2", "X3", "t"]).unwrap();
        let expected = Ideal::parse(&rt, &["X1^2 - 2*X1*X2 - X1 + X2^2 + X2 - X3*t"]).unwrap();
        assert!(first.i_hom.equals(&expected).unwrap());
        assert!(first.j_hom.equals(&Ideal::parse(&rt, &["X1 - X2"]).unwrap()).unwrap());
        assert!(!first.holds());
        assert!(run.log[1].checks[0].holds());
        assert!(run.warnings.is_empty());

        let cert = verify_muvak(&run.basis, &v41(), &DeltaGroup::trivial(), Method::Bayer).unwrap();
        assert!(cert.holds());
        let cert = verify_muvak(&gens, &v41(), &DeltaGroup::trivial(), Method::Saturation).unwrap();
        assert!(!cert.holds());
        assert!(Ideal::new(cert.witness().unwrap().ring(), vec![cert.witness().unwrap().clone()])
            .unwrap()
            .equals(&Ideal::parse(&rt, &["X1 - X2"]).unwrap())
            .unwrap());
    }

    #[test]
    fn faithful_representability() {
        let r = xy();
        let group = DeltaGroup::trivial();
        let gens = trivial(&r, &["x", "x + y", "y + y^2"]);
        let f = GradedElement::new(p(&r, "-y"), group.zero());
        assert!(faithfully_representable(&f, &gens, &v41(), &group, Method::Bayer).unwrap().is_none());
        let more = trivial(&r, &["x", "x + y", "y + y^2", "-y"]);
        let w = faithfully_representable(&f, &more, &v41(), &group, Method::Bayer).unwrap().unwrap();
        assert_eq!(w, p(&tag_ring(4).unwrap(), "X4"));
        let outside = GradedElement::new(p(&r, "x*y^3 + 7"), group.zero());
        let gens2 = trivial(&r, &["x^2", "y"]);
        assert!(matches!(
            faithfully_representable(&outside, &gens2, &v41(), &group, Method::Bayer),
            Err(Error::NotInSubalgebra)
        ));

        let g42 = DeltaGroup::new(1, vec![2, 2]).unwrap();
        let gens: Vec<GradedElement> = [("x^2 + y^2", [2, 0, 0]), ("x^2 - y^2", [2, 1, 0]), ("x*y", [2, 0, 1])]
            .iter()
            .map(|(s, d)| GradedElement::new(p(&r, s), g42.degree(d).unwrap()))
            .collect();
        let v = vec![MonomialValuation::weight(vec![1, 0])];
        let f = GradedElement::new(p(&r, "4*x^2*y^2"), g42.degree(&[4, 0, 0]).unwrap());
        let w = faithfully_representable(&f, &gens, &v, &g42, Method::Bayer).unwrap().unwrap();
        assert_eq!(w, p(&tag_ring(3).unwrap(), "4*X3^2"));
    }

    #[test]
    fn sign_grading_single_valuation() {
        let r = xy();
        let g42 = DeltaGroup::new(1, vec![2, 2]).unwrap();
        let gens: Vec<GradedElement> = [("x^2 + y^2", [2, 0, 0]), ("x^2 - y^2", [2, 1, 0]), ("x*y", [2, 0, 1])]
            .iter()
            .map(|(s, d)| GradedElement::new(p(&r, s), g42.degree(d).unwrap()))
            .collect();
        let v = vec![MonomialValuation::weight(vec![1, 0])];
        let run = muvak_basis(&gens, &v, &g42, MuvakOptions::default()).unwrap();
        assert_eq!(run.status, RunStatus::Complete);
        assert_eq!(run.rounds, 1);
        assert_eq!(run.basis.len(), 3);
        assert!(verify_khovanskii(&run.basis, &v[0], &g42, 100).unwrap().verdict.is_verified());
    }

    #[test]
    fn two_valuations_and_free_algebra() {
        let r = xy();
        let group = DeltaGroup::trivial();
        let gens = trivial(&r, &["x + y"]);
        let vs = vec![MonomialValuation::weight(vec![1, 0]), MonomialValuation::weight(vec![0, 1])];
        assert!(verify_muvak(&gens, &vs, &group, Method::Bayer).unwrap().holds());

        let gens = trivial(&r, &["x", "x + y", "y + y^2"]);
        let run = muvak_basis(&gens, &vs, &group, MuvakOptions::default()).unwrap();
        assert_eq!(run.status, RunStatus::Complete);
        assert!(verify_muvak(&run.basis, &vs, &group, Method::Saturation).unwrap().holds());
        let again = muvak_basis(&run.basis, &vs, &group, MuvakOptions::default()).unwrap();
        assert_eq!(again.rounds, 1);
        assert_eq!(again.basis.len(), run.basis.len());
    }

    #[test]
    fn negative_weights_fall_back_to_saturation() {
        let r = xy();
        let group = DeltaGroup::trivial();
        let gens = trivial(&r, &["x", "x + y", "y + y^2"]);
        let vs = vec![MonomialValuation::weight(vec![0, -1])];
        let run = muvak_basis(&gens, &vs, &group, MuvakOptions::default()).unwrap();
        assert!(!run.warnings.is_empty());
        assert_eq!(run.status, RunStatus::Complete);
    }

    #[test]
    fn rejects_rank_two_valuations() {
        let r = xy();
        let gens = trivial(&r, &["x"]);
        let v = vec![MonomialValuation::from_ordering(MonomialOrdering::degrevlex(2))];
        assert!(matches!(
            muvak_basis(&gens, &v, &DeltaGroup::trivial(), MuvakOptions::default()),
            Err(Error::InvalidValuation(_))
        ));
    }
}
