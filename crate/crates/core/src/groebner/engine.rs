//! Buchberger and Mora on polynomials stored in ordering-sorted form.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ordering::MonomialOrdering;
use crate::poly::{Monomial, PolyRing, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OTerm {
    pub key: Vec<i64>,
    pub exps: Vec<u32>,
    pub coeff: Rational,
}

/// Terms sorted strictly descending by ordering key. Because the ordering
/// matrix has full rank, equal keys mean equal monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct OPoly {
    pub terms: Vec<OTerm>,
}

impl OPoly {
    pub fn lead(&self) -> Option<&OTerm> {
        self.terms.first()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| exp_degree(&t.exps)).max().unwrap_or(0)
    }

    pub fn ecart(&self) -> u64 {
        self.lead().map_or(0, |lt| self.degree() - exp_degree(&lt.exps))
    }

    pub fn scale(&self, c: &Rational) -> OPoly {
        if c.is_zero() {
            return OPoly::default();
        }
        let terms = self
            .terms
            .iter()
            .map(|t| OTerm { key: t.key.clone(), exps: t.exps.clone(), coeff: &t.coeff * c })
            .collect();
        OPoly { terms }
    }

    /// `self - c * X^m * other`, where `mkey` is the key of `X^m`.
    pub fn sub_mul(&self, c: &Rational, m: &[u32], mkey: &[i64], other: &OPoly) -> OPoly {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let shifted = other.terms.iter().map(|t| OTerm {
            key: t.key.iter().zip(mkey).map(|(x, y)| x + y).collect(),
            exps: t.exps.iter().zip(m).map(|(x, y)| x + y).collect(),
            coeff: -(&t.coeff * c),
        });
        let mut b = shifted.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match x.key.cmp(&y.key) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => out.push(b.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let coeff = &x.coeff + &y.coeff;
                        if !coeff.is_zero() {
                            out.push(OTerm { key: y.key, exps: y.exps, coeff });
                        }
                    }
                },
            }
        }
        OPoly { terms: out }
    }

    pub fn add(&self, other: &OPoly, nvars: usize, keylen: usize) -> OPoly {
        self.sub_mul(&-Rational::one(), &vec![0; nvars], &vec![0; keylen], other)
    }
}

pub(crate) fn exp_degree(e: &[u32]) -> u64 {
    e.iter().map(|&x| u64::from(x)).sum()
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub(crate) struct Ctx<'a> {
    pub ord: &'a MonomialOrdering,
    pub nvars: usize,
    pub keylen: usize,
}

impl<'a> Ctx<'a> {
    pub fn new(ord: &'a MonomialOrdering) -> Self {
        Self { ord, nvars: ord.nvars(), keylen: ord.rows().len() }
    }

    pub fn key(&self, exps: &[u32]) -> Vec<i64> {
        self.ord.key(exps)
    }

    pub fn encode(&self, f: &Polynomial) -> OPoly {
        let mut terms: Vec<OTerm> = f
            .terms()
            .map(|(m, c)| OTerm { key: self.key(m.exponents()), exps: m.exponents().to_vec(), coeff: c.clone() })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        OPoly { terms }
    }

    pub fn to_poly(&self, ring: &Arc<PolyRing>, p: &OPoly) -> Polynomial {
        let map: BTreeMap<Monomial, Rational> =
            p.terms.iter().map(|t| (Monomial::new(t.exps.clone()), t.coeff.clone())).collect();
        Polynomial::from_map_unchecked(ring, map)
    }

    pub fn constant(&self, c: Rational) -> OPoly {
        if c.is_zero() {
            return OPoly::default();
        }
        OPoly { terms: vec![OTerm { key: vec![0; self.keylen], exps: vec![0; self.nvars], coeff: c }] }
    }

    pub fn monic(&self, p: &OPoly) -> (OPoly, Rational) {
        match p.lead() {
            Some(lt) => {
                let inv = lt.coeff.recip();
                (p.scale(&inv), inv)
            }
            None => (p.clone(), Rational::one()),
        }
    }

    /// `p - (LT(p) / LT(g)) * g`; the caller guarantees divisibility.
    fn reduce_step(&self, p: &OPoly, g: &OPoly) -> (Rational, Vec<u32>, Vec<i64>, OPoly) {
        let lp = p.lead().expect("non-zero");
        let lg = g.lead().expect("non-zero");
        let m = quotient(&lg.exps, &lp.exps);
        let mkey: Vec<i64> = lp.key.iter().zip(&lg.key).map(|(a, b)| a - b).collect();
        let c = &lp.coeff / &lg.coeff;
        let out = p.sub_mul(&c, &m, &mkey, g);
        (c, m, mkey, out)
    }

    /// Full reduction for global orderings. Returns the remainder and, if
    /// requested, quotients with `f = Σ q_i g_i + r`.
    pub fn full_reduce(&self, f: &OPoly, basis: &[&OPoly], track: bool) -> (OPoly, Vec<OPoly>) {
        let mut quots = if track { vec![OPoly::default(); basis.len()] } else { Vec::new() };
        let mut p = f.clone();
        let mut rem: Vec<OTerm> = Vec::new();
        while let Some(lt) = p.lead() {
            let hit = basis.iter().position(|g| g.lead().is_some_and(|lg| divides(&lg.exps, &lt.exps)));
            match hit {
                Some(i) => {
                    let (c, m, mkey, next) = self.reduce_step(&p, basis[i]);
                    if track {
                        let term = OPoly { terms: vec![OTerm { key: mkey, exps: m, coeff: c }] };
                        quots[i] = quots[i].add(&term, self.nvars, self.keylen);
                    }
                    p = next;
                }
                None => {
                    rem.push(p.terms.remove(0));
                }
            }
        }
        (OPoly { terms: rem }, quots)
    }

    /// Mora's weak normal form with the ecart strategy. With `track`, the
    /// result carries `(u, q)` such that `u f - r = Σ q_i g_i` and `LT(u)`
    /// is a constant.
    pub fn mora_nf(&self, f: &OPoly, basis: &[&OPoly], track: bool) -> (OPoly, Option<(OPoly, Vec<OPoly>)>) {
        let k = basis.len();
        // Each reducer `t` satisfies t = a f + Σ b_i g_i.
        struct Reducer {
            poly: OPoly,
            ecart: u64,
            a: OPoly,
            b: Vec<OPoly>,
        }
        let mut extra: Vec<Reducer> = Vec::new();
        let base: Vec<(u64, Vec<OPoly>)> = basis
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut b = Vec::new();
                if track {
                    b = vec![OPoly::default(); k];
                    b[i] = self.constant(Rational::one());
                }
                (g.ecart(), b)
            })
            .collect();
        let mut h = f.clone();
        let mut ha = if track { self.constant(Rational::one()) } else { OPoly::default() };
        let mut hb = if track { vec![OPoly::default(); k] } else { Vec::new() };
        while let Some(lt) = h.lead() {
            // Minimal ecart; ties go to basis elements, then to earlier entries.
            let mut best: Option<(u64, usize)> = None;
            for (i, g) in basis.iter().enumerate() {
                if g.lead().is_some_and(|lg| divides(&lg.exps, &lt.exps)) {
                    let e = base[i].0;
                    if best.is_none_or(|(be, _)| e < be) {
                        best = Some((e, i));
                    }
                }
            }
            for (j, t) in extra.iter().enumerate() {
                if t.poly.lead().is_some_and(|lg| divides(&lg.exps, &lt.exps))
                    && best.is_none_or(|(be, _)| t.ecart < be)
                {
                    best = Some((t.ecart, k + j));
                }
            }
            let Some((e, idx)) = best else { break };
            let h_ecart = h.ecart();
            if e > h_ecart {
                extra.push(Reducer { poly: h.clone(), ecart: h_ecart, a: ha.clone(), b: hb.clone() });
            }
            let (g, ga, gb): (&OPoly, Option<&OPoly>, &[OPoly]) = if idx < k {
                (basis[idx], None, &base[idx].1)
            } else {
                let t = &extra[idx - k];
                (&t.poly, Some(&t.a), &t.b)
            };
            let (c, m, mkey, next) = self.reduce_step(&h, g);
            if track {
                if let Some(ga) = ga {
                    ha = ha.sub_mul(&c, &m, &mkey, ga);
                }
                for (hbi, gbi) in hb.iter_mut().zip(gb) {
                    *hbi = hbi.sub_mul(&c, &m, &mkey, gbi);
                }
            }
            h = next;
        }
        if track {
            // r = a f + Σ b g  ⇒  a f - r = Σ (-b) g
            let q = hb.iter().map(|b| b.scale(&-Rational::one())).collect();
            (h, Some((ha, q)))
        } else {
            (h, None)
        }
    }

    fn spoly(&self, f: &OPoly, g: &OPoly) -> OPoly {
        let lf = f.lead().expect("non-zero");
        let lg = g.lead().expect("non-zero");
        let l = lcm(&lf.exps, &lg.exps);
        let mf = quotient(&lf.exps, &l);
        let mg = quotient(&lg.exps, &l);
        let kf = self.key(&mf);
        let kg = self.key(&mg);
        let zero = OPoly::default();
        let a = zero.sub_mul(&-lf.coeff.recip(), &mf, &kf, f);
        a.sub_mul(&lg.coeff.recip(), &mg, &kg, g)
    }
}

struct Elem {
    poly: OPoly,
    sugar: u64,
    /// Cofactors with respect to the input generators (lift only).
    rep: Vec<OPoly>,
}

/// Outcome of [`Ctx::buchberger`]: basis and optional cofactor rows.
pub(crate) struct BasisRun {
    pub basis: Vec<OPoly>,
    pub reps: Vec<Vec<OPoly>>,
}

impl Ctx<'_> {
    /// Standard basis of `gens`. Global orderings use Buchberger with the
    /// product and chain criteria; otherwise Mora's normal form is used
    /// without criteria. With `reduce`, global output is the reduced basis
    /// and local output a minimal one.
    pub fn buchberger(
        &self,
        gens: &[OPoly],
        global: bool,
        limit: usize,
        track: bool,
        reduce: bool,
    ) -> Result<BasisRun> {
        let ngens = gens.len();
        let mut g: Vec<Elem> = Vec::new();
        let mut queue: BTreeMap<(u64, u64), (usize, usize)> = BTreeMap::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        let mut seq = 0u64;

        let unit_rep = |i: usize| -> Vec<OPoly> {
            let mut r = vec![OPoly::default(); ngens];
            r[i] = self.constant(Rational::one());
            r
        };

        for (i, f) in gens.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let rep = if track { unit_rep(i) } else { Vec::new() };
            let elem = Elem { poly: f.clone(), sugar: f.degree(), rep };
            let elem = if global { self.top_reduce(elem, &g, track) } else { elem };
            if elem.poly.is_zero() {
                continue;
            }
            self.insert(&mut g, elem, &mut queue, &mut pending, &mut seq, track);
        }

        let mut processed = 0usize;
        while let Some((_, (i, j))) = queue.pop_first() {
            pending.remove(&(i, j));
            processed += 1;
            if processed > limit {
                return Err(Error::PairLimit { limit });
            }
            let li = &g[i].poly.lead().unwrap().exps;
            let lj = &g[j].poly.lead().unwrap().exps;
            if global {
                if coprime(li, lj) {
                    continue;
                }
                let l = lcm(li, lj);
                let chain = (0..g.len()).any(|k| {
                    k != i
                        && k != j
                        && divides(&g[k].poly.lead().unwrap().exps, &l)
                        && !pending.contains(&(i.min(k), i.max(k)))
                        && !pending.contains(&(j.min(k), j.max(k)))
                });
                if chain {
                    continue;
                }
            }
            let s = self.spoly(&g[i].poly, &g[j].poly);
            let sugar = pair_sugar(&g[i], &g[j]);
            let rep = if track { self.spoly_rep(&g[i], &g[j]) } else { Vec::new() };
            let elem = Elem { poly: s, sugar, rep };
            let elem = if global {
                self.top_reduce(elem, &g, track)
            } else {
                let refs: Vec<&OPoly> = g.iter().map(|e| &e.poly).collect();
                let (r, _) = self.mora_nf(&elem.poly, &refs, false);
                Elem { poly: r, sugar: elem.sugar, rep: Vec::new() }
            };
            if !elem.poly.is_zero() {
                self.insert(&mut g, elem, &mut queue, &mut pending, &mut seq, track);
            }
        }

        if !reduce {
            let reps = g.iter().map(|e| e.rep.clone()).collect();
            return Ok(BasisRun { basis: g.into_iter().map(|e| e.poly).collect(), reps });
        }
        // Minimalize: drop elements whose leading monomial is divisible by
        // another one (earlier index wins on equality).
        let keep: Vec<usize> = (0..g.len())
            .filter(|&i| {
                let li = &g[i].poly.lead().unwrap().exps;
                !(0..g.len()).any(|j| {
                    let lj = &g[j].poly.lead().unwrap().exps;
                    j != i && divides(lj, li) && (lj != li || j < i)
                })
            })
            .collect();
        let mut basis: Vec<OPoly> = keep.iter().map(|&i| g[i].poly.clone()).collect();
        if global {
            for i in 0..basis.len() {
                let others: Vec<&OPoly> = basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
                let (r, _) = self.full_reduce(&basis[i], &others, false);
                basis[i] = r;
            }
        }
        let mut basis: Vec<OPoly> = basis.iter().map(|p| self.monic(p).0).collect();
        basis.sort_by(|a, b| a.lead().unwrap().key.cmp(&b.lead().unwrap().key));
        Ok(BasisRun { basis, reps: Vec::new() })
    }

    fn insert(
        &self,
        g: &mut Vec<Elem>,
        elem: Elem,
        queue: &mut BTreeMap<(u64, u64), (usize, usize)>,
        pending: &mut HashSet<(usize, usize)>,
        seq: &mut u64,
        track: bool,
    ) {
        let (poly, inv) = self.monic(&elem.poly);
        let rep = if track { elem.rep.iter().map(|r| r.scale(&inv)).collect() } else { Vec::new() };
        let new = Elem { poly, sugar: elem.sugar, rep };
        let s = g.len();
        for (i, old) in g.iter().enumerate() {
            let sugar = pair_sugar(old, &new);
            queue.insert((sugar, *seq), (i, s));
            pending.insert((i, s));
            *seq += 1;
        }
        g.push(new);
    }

    fn top_reduce(&self, mut h: Elem, basis: &[Elem], track: bool) -> Elem {
        while let Some(lt) = h.poly.lead() {
            let Some(g) = basis.iter().find(|g| divides(&g.poly.lead().unwrap().exps, &lt.exps)) else {
                break;
            };
            let (c, m, mkey, next) = self.reduce_step(&h.poly, &g.poly);
            h.sugar = h.sugar.max(g.sugar + exp_degree(&m));
            if track {
                for (r, gr) in h.rep.iter_mut().zip(&g.rep) {
                    *r = r.sub_mul(&c, &m, &mkey, gr);
                }
            }
            h.poly = next;
        }
        h
    }

    fn spoly_rep(&self, f: &Elem, g: &Elem) -> Vec<OPoly> {
        let lf = f.poly.lead().unwrap();
        let lg = g.poly.lead().unwrap();
        let l = lcm(&lf.exps, &lg.exps);
        let mf = quotient(&lf.exps, &l);
        let mg = quotient(&lg.exps, &l);
        let kf = self.key(&mf);
        let kg = self.key(&mg);
        f.rep
            .iter()
            .zip(&g.rep)
            .map(|(a, b)| {
                OPoly::default().sub_mul(&-lf.coeff.recip(), &mf, &kf, a).sub_mul(&lg.coeff.recip(), &mg, &kg, b)
            })
            .collect()
    }

    pub fn is_standard_basis(&self, basis: &[OPoly], global: bool) -> bool {
        let refs: Vec<&OPoly> = basis.iter().filter(|p| !p.is_zero()).collect();
        for i in 0..refs.len() {
            for j in i + 1..refs.len() {
                let s = self.spoly(refs[i], refs[j]);
                let r = if global { self.full_reduce(&s, &refs, false).0 } else { self.mora_nf(&s, &refs, false).0 };
                if !r.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn pair_sugar(a: &Elem, b: &Elem) -> u64 {
    let la = &a.poly.lead().unwrap().exps;
    let lb = &b.poly.lead().unwrap().exps;
    let l = lcm(la, lb);
    let dl = exp_degree(&l);
    (a.sugar + dl - exp_degree(la)).max(b.sugar + dl - exp_degree(lb))
}
