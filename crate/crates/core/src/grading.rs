//! Gradings of tag rings by finitely generated abelian groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{fresh_names, Monomial, PolyRing, Polynomial};

/// `Z^free_rank × Z/n_1 × … × Z/n_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeltaGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// An element of a [`DeltaGroup`]: free coordinates, then residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaDegree {
    pub free: Vec<i64>,
    pub torsion: Vec<u64>,
}

impl DeltaDegree {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.torsion.iter().all(|&x| x == 0)
    }

    /// Flat layout: free coordinates first, then residues.
    pub fn to_vec(&self) -> Vec<i64> {
        self.free.iter().copied().chain(self.torsion.iter().map(|&r| r as i64)).collect()
    }
}

impl fmt::Display for DeltaDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_vec().iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl DeltaGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(n) = torsion.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGrading(format!("torsion order {n} must be at least 2")));
        }
        Ok(Self { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        Self { free_rank: 0, torsion: Vec::new() }
    }

    pub fn integers() -> Self {
        Self { free_rank: 1, torsion: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Number of coordinates in the flat layout.
    pub fn width(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn zero(&self) -> DeltaDegree {
        DeltaDegree { free: vec![0; self.free_rank], torsion: vec![0; self.torsion.len()] }
    }

    /// Builds a degree from the flat layout, reducing residues.
    pub fn degree(&self, coords: &[i64]) -> Result<DeltaDegree> {
        if coords.len() != self.width() {
            return Err(Error::InvalidGrading(format!(
                "degree has {} coordinates but the group needs {}",
                coords.len(),
                self.width()
            )));
        }
        let (free, tors) = coords.split_at(self.free_rank);
        let torsion = tors.iter().zip(&self.torsion).map(|(&c, &n)| c.rem_euclid(n as i64) as u64).collect();
        Ok(DeltaDegree { free: free.to_vec(), torsion })
    }

    /// The `i`-th free basis vector.
    pub fn unit(&self, i: usize) -> DeltaDegree {
        let mut d = self.zero();
        d.free[i] = 1;
        d
    }

    pub fn contains(&self, d: &DeltaDegree) -> bool {
        d.free.len() == self.free_rank
            && d.torsion.len() == self.torsion.len()
            && d.torsion.iter().zip(&self.torsion).all(|(r, n)| r < n)
    }

    pub fn add(&self, a: &DeltaDegree, b: &DeltaDegree) -> DeltaDegree {
        DeltaDegree {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a.torsion.iter().zip(&b.torsion).zip(&self.torsion).map(|((x, y), n)| (x + y) % n).collect(),
        }
    }

    pub fn scale(&self, a: &DeltaDegree, k: u64) -> DeltaDegree {
        DeltaDegree {
            free: a.free.iter().map(|x| x * k as i64).collect(),
            torsion: a.torsion.iter().zip(&self.torsion).map(|(x, n)| (x * (k % n)) % n).collect(),
        }
    }
}

impl fmt::Display for DeltaGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            a => parts.push(format!("Z^{a}")),
        }
        parts.extend(self.torsion.iter().map(|n| format!("Z/{n}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// An element of `A` with its Δ-degree. `B` itself need not be Δ-graded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    pub poly: Polynomial,
    pub degree: DeltaDegree,
}

impl GradedElement {
    pub fn new(poly: Polynomial, degree: DeltaDegree) -> Self {
        Self { poly, degree }
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.poly, self.degree)
    }
}

/// Which degree to split by in [`GradedTagRing::homogeneous_components`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    Delta,
    Gamma,
    Both,
}

/// Tag ring `K[X_1..X_k]` with `deg_Δ(X_i)` and optionally `deg_Γ(X_i)`.
#[derive(Debug, Clone)]
pub struct GradedTagRing {
    ring: Arc<PolyRing>,
    group: DeltaGroup,
    delta: Vec<DeltaDegree>,
    gamma: Option<Vec<Vec<i64>>>,
}

impl GradedTagRing {
    pub fn new(ring: Arc<PolyRing>, group: DeltaGroup, delta: Vec<DeltaDegree>) -> Result<Self> {
        if delta.len() != ring.nvars() {
            return Err(Error::LengthMismatch { expected: ring.nvars(), found: delta.len() });
        }
        if let Some(d) = delta.iter().find(|d| !group.contains(d)) {
            return Err(Error::InvalidGrading(format!("degree {d} is not an element of {group}")));
        }
        Ok(Self { ring, group, delta, gamma: None })
    }

    /// Standard `Z`-grading with every variable in degree 1.
    pub fn standard(ring: Arc<PolyRing>) -> Self {
        let group = DeltaGroup::integers();
        let delta = vec![group.unit(0); ring.nvars()];
        Self { ring, group, delta, gamma: None }
    }

    pub fn with_gamma(mut self, gamma: Vec<Vec<i64>>) -> Result<Self> {
        if gamma.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), found: gamma.len() });
        }
        let r = gamma.first().map_or(0, Vec::len);
        if gamma.iter().any(|g| g.len() != r) {
            return Err(Error::InvalidGrading("Γ-degrees have different lengths".into()));
        }
        self.gamma = Some(gamma);
        Ok(self)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn group(&self) -> &DeltaGroup {
        &self.group
    }

    pub fn delta_degrees(&self) -> &[DeltaDegree] {
        &self.delta
    }

    pub fn gamma_degrees(&self) -> Option<&[Vec<i64>]> {
        self.gamma.as_deref()
    }

    pub fn monomial_delta(&self, m: &Monomial) -> DeltaDegree {
        m.exponents().iter().zip(&self.delta).fold(self.group.zero(), |acc, (&e, d)| {
            if e == 0 {
                acc
            } else {
                self.group.add(&acc, &self.group.scale(d, u64::from(e)))
            }
        })
    }

    pub fn monomial_gamma(&self, m: &Monomial) -> Option<Vec<i64>> {
        let gamma = self.gamma.as_ref()?;
        let r = gamma.first().map_or(0, Vec::len);
        let mut out = vec![0; r];
        for (&e, g) in m.exponents().iter().zip(gamma) {
            for (o, x) in out.iter_mut().zip(g) {
                *o += i64::from(e) * x;
            }
        }
        Some(out)
    }

    /// The common Δ-degree of all terms, or `None` if `h` is inhomogeneous.
    pub fn delta_degree(&self, h: &Polynomial) -> Result<Option<DeltaDegree>> {
        self.check_ring(h)?;
        let mut degrees = h.terms().map(|(m, _)| self.monomial_delta(m));
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        Ok(degrees.all(|d| d == first).then_some(first))
    }

    /// Partition of the terms of `h` by degree, in canonical term order of
    /// each class's leading term. Components re-sum to `h`.
    pub fn homogeneous_components(&self, h: &Polynomial, split: Split) -> Result<Vec<Polynomial>> {
        self.check_ring(h)?;
        if matches!(split, Split::Gamma | Split::Both) && self.gamma.is_none() {
            return Err(Error::InvalidGrading("no Γ-degrees attached to the tag ring".into()));
        }
        let mut index: HashMap<(Option<DeltaDegree>, Option<Vec<i64>>), usize> = HashMap::new();
        let mut parts: Vec<Vec<(Monomial, crate::poly::Rational)>> = Vec::new();
        for t in h.support() {
            let delta = (split != Split::Gamma).then(|| self.monomial_delta(&t.monomial));
            let gamma = if split == Split::Delta { None } else { self.monomial_gamma(&t.monomial) };
            let slot = *index.entry((delta, gamma)).or_insert_with(|| {
                parts.push(Vec::new());
                parts.len() - 1
            });
            parts[slot].push((t.monomial, t.coeff));
        }
        parts.into_iter().map(|terms| Polynomial::from_terms(&self.ring, terms)).collect()
    }

    /// `h` tagged with its degree, when this ring grades an ambient `B`.
    pub fn graded_element(&self, h: &Polynomial) -> Result<GradedElement> {
        match self.delta_degree(h)? {
            Some(d) => Ok(GradedElement::new(h.clone(), d)),
            None => Err(Error::Inhomogeneous(format!("`{h}` is not homogeneous for the grading by {}", self.group))),
        }
    }

    fn check_ring(&self, h: &Polynomial) -> Result<()> {
        if h.ring() != &self.ring && **h.ring() != *self.ring {
            return Err(Error::RingMismatch { left: self.ring.names().join(","), right: h.ring().names().join(",") });
        }
        Ok(())
    }
}

/// `B ⊗ KΔ`: the base ring extended by a Laurent pair `(g, ḡ)` for each free
/// factor and one variable `g` with `g^n = 1` for each torsion factor.
#[derive(Debug, Clone)]
pub struct GroupRing {
    ring: Arc<PolyRing>,
    base_nvars: usize,
    group: DeltaGroup,
    relations: Vec<Polynomial>,
}

impl GroupRing {
    pub fn new(base: &Arc<PolyRing>, group: &DeltaGroup) -> Result<Self> {
        let taken: Vec<String> = base.names().to_vec();
        let a = group.free_rank();
        let free = fresh_names("g", a, false, &taken);
        let inv = fresh_names("gi", a, false, &taken);
        let tors = fresh_names("h", group.torsion().len(), false, &taken);
        let mut names = taken;
        for (g, gi) in free.iter().zip(&inv) {
            names.push(g.clone());
            names.push(gi.clone());
        }
        names.extend(tors);
        let ring = PolyRing::new(names)?;
        let n = base.nvars();
        let mut relations = Vec::new();
        for i in 0..a {
            let g = Polynomial::variable(&ring, n + 2 * i);
            let gi = Polynomial::variable(&ring, n + 2 * i + 1);
            relations.push(&(&g * &gi) - &Polynomial::one(&ring));
        }
        for (j, &order) in group.torsion().iter().enumerate() {
            let g = Polynomial::variable(&ring, n + 2 * a + j);
            relations.push(&g.pow(order as u32) - &Polynomial::one(&ring));
        }
        Ok(Self { ring, base_nvars: n, group: group.clone(), relations })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// Positions of the base variables.
    pub fn base_vars(&self) -> Vec<usize> {
        (0..self.base_nvars).collect()
    }

    /// Positions of the group variables.
    pub fn group_vars(&self) -> Vec<usize> {
        (self.base_nvars..self.ring.nvars()).collect()
    }

    /// The monomial `g^δ`.
    pub fn group_monomial(&self, d: &DeltaDegree) -> Monomial {
        let n = self.base_nvars;
        let a = self.group.free_rank();
        let mut exps = vec![0u32; self.ring.nvars()];
        for (i, &c) in d.free.iter().enumerate() {
            if c >= 0 {
                exps[n + 2 * i] = c as u32;
            } else {
                exps[n + 2 * i + 1] = c.unsigned_abs() as u32;
            }
        }
        for (j, &r) in d.torsion.iter().enumerate() {
            exps[n + 2 * a + j] = r as u32;
        }
        Monomial::new(exps)
    }

    /// `f ⊗ δ`, i.e. `f · g^δ` with `f` in the base ring.
    pub fn tag(&self, f: &Polynomial, d: &DeltaDegree) -> Polynomial {
        let base = f.embed(&self.ring, &self.base_vars());
        base.mul_term(&crate::poly::Rational::from_integer(1.into()), &self.group_monomial(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Tag ring of the `(Z/2)^2 × Z` example, free coordinate first.
    fn klein_ring() -> GradedTagRing {
        let ring = PolyRing::new(["X1", "X2", "X3"]).unwrap();
        let group = DeltaGroup::new(1, vec![2, 2]).unwrap();
        let delta = [[2, 0, 0], [2, 1, 0], [2, 0, 1]].iter().map(|d| group.degree(d).unwrap()).collect();
        GradedTagRing::new(ring, group, delta).unwrap()
    }

    #[test]
    fn group_arithmetic() {
        let g = DeltaGroup::new(1, vec![2, 3]).unwrap();
        let a = g.degree(&[1, 1, 2]).unwrap();
        let b = g.degree(&[-4, 3, 5]).unwrap();
        assert_eq!(b.to_vec(), vec![-4, 1, 2]);
        assert_eq!(g.add(&a, &b).to_vec(), vec![-3, 0, 1]);
        assert_eq!(g.scale(&a, 3).to_vec(), vec![3, 1, 0]);
        assert!(DeltaGroup::new(0, vec![1]).is_err());
        assert!(g.degree(&[1]).is_err());
        assert_eq!(g.to_string(), "Z x Z/2 x Z/3");
        assert_eq!(DeltaGroup::trivial().to_string(), "0");
    }

    #[test]
    fn delta_degree_examples() {
        let r = klein_ring();
        let h = Polynomial::parse(r.ring(), "X1^2 - X2^2").unwrap();
        assert_eq!(r.delta_degree(&h).unwrap().unwrap().to_vec(), vec![4, 0, 0]);
        let h = Polynomial::parse(r.ring(), "X1 + X2").unwrap();
        assert_eq!(r.delta_degree(&h).unwrap(), None);
        let c = Polynomial::parse(r.ring(), "5").unwrap();
        assert!(r.delta_degree(&c).unwrap().unwrap().is_zero());
        assert!(matches!(r.delta_degree(&Polynomial::zero(r.ring())), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn components_examples() {
        let ring = PolyRing::new(["x"]).unwrap();
        let std = GradedTagRing::standard(ring.clone());
        let f = Polynomial::parse(&ring, "x^2 + x").unwrap();
        let parts = std.homogeneous_components(&f, Split::Delta).unwrap();
        assert_eq!(parts.iter().map(ToString::to_string).collect::<Vec<_>>(), ["x^2", "x"]);

        let r = klein_ring();
        let h = Polynomial::parse(r.ring(), "X1 + X2").unwrap();
        let parts = r.homogeneous_components(&h, Split::Delta).unwrap();
        assert_eq!(parts.iter().map(ToString::to_string).collect::<Vec<_>>(), ["X1", "X2"]);
        let h = Polynomial::parse(r.ring(), "X1^2 - X2^2").unwrap();
        assert_eq!(r.homogeneous_components(&h, Split::Delta).unwrap(), vec![h.clone()]);
        assert!(r.homogeneous_components(&h, Split::Gamma).is_err());
    }

    #[test]
    fn gamma_split() {
        let r = klein_ring().with_gamma(vec![vec![0], vec![0], vec![1]]).unwrap();
        let h = Polynomial::parse(r.ring(), "X1^2 - X2^2 + X3^2 + X1*X3").unwrap();
        let parts = r.homogeneous_components(&h, Split::Both).unwrap();
        assert_eq!(parts.len(), 3);
        let parts = r.homogeneous_components(&h, Split::Gamma).unwrap();
        assert_eq!(parts.len(), 3);
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
        prop::collection::vec((-5i64..6, [0u32..3, 0u32..3, 0u32..3]), 1..6)
    }

    fn build(r: &GradedTagRing, terms: &[(i64, [u32; 3])]) -> Polynomial {
        Polynomial::from_terms(
            r.ring(),
            terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), crate::poly::rat(*c, 1))),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn components_partition(terms in arb_poly()) {
            let r = klein_ring();
            let h = build(&r, &terms);
            prop_assume!(!h.is_zero());
            let parts = r.homogeneous_components(&h, Split::Delta).unwrap();
            let mut sum = Polynomial::zero(r.ring());
            let mut seen = Vec::new();
            for p in &parts {
                let d = r.delta_degree(p).unwrap();
                prop_assert!(d.is_some());
                prop_assert!(!seen.contains(&d));
                seen.push(d);
                sum = &sum + p;
            }
            prop_assert_eq!(sum, h);
        }

        #[test]
        fn degree_is_additive(a in [0u32..3, 0u32..3, 0u32..3], b in [0u32..3, 0u32..3, 0u32..3], c in 1i64..4, d in 1i64..4) {
            let r = klein_ring();
            let f = build(&r, &[(c, a)]);
            let g = build(&r, &[(d, b)]);
            let df = r.delta_degree(&f).unwrap().unwrap();
            let dg = r.delta_degree(&g).unwrap().unwrap();
            let dfg = r.delta_degree(&(&f * &g)).unwrap().unwrap();
            prop_assert_eq!(dfg, r.group().add(&df, &dg));
        }
    }

    #[test]
    fn group_ring_tags() {
        let base = PolyRing::new(["x", "y"]).unwrap();
        let group = DeltaGroup::new(1, vec![2, 2]).unwrap();
        let gr = GroupRing::new(&base, &group).unwrap();
        assert_eq!(gr.ring().names(), ["x", "y", "g1", "gi1", "h1", "h2"]);
        assert_eq!(gr.relations().len(), 3);
        let f = Polynomial::parse(&base, "-y^2").unwrap();
        let tagged = gr.tag(&f, &group.degree(&[2, 1, 0]).unwrap());
        assert_eq!(tagged.to_string(), "-y^2*g1^2*h1");
        let inv = gr.tag(&Polynomial::one(&base), &group.degree(&[-1, 0, 1]).unwrap());
        assert_eq!(inv.to_string(), "gi1*h2");
    }
}
