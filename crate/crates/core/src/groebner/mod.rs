//! Gröbner and standard bases, normal forms, and ideal operations.
//!
//! Global orderings use Buchberger's algorithm with the sugar selection
//! strategy and the product and chain criteria. Orderings with local
//! variables use Mora's normal form; for those, input must be homogeneous
//! with respect to the first row of the ordering matrix.

mod engine;
mod ideal;

pub use ideal::{Containment, Ideal, RingMap};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ordering::MonomialOrdering;
use crate::poly::{PolyRing, Polynomial};
use engine::{Ctx, OPoly};

pub const DEFAULT_PAIR_LIMIT: usize = 100_000;

/// `u·f - r = Σ q_i g_i` with `LT(u)` constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakNormalForm {
    pub unit: Polynomial,
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn check_inputs(ring: &Arc<PolyRing>, polys: &[&Polynomial], ord: &MonomialOrdering) -> Result<()> {
    if ord.nvars() != ring.nvars() {
        return Err(Error::LengthMismatch { expected: ring.nvars(), found: ord.nvars() });
    }
    for p in polys {
        if **p.ring() != **ring {
            return Err(Error::RingMismatch { left: ring.names().join(","), right: p.ring().names().join(",") });
        }
    }
    Ok(())
}

fn check_local_homogeneous(gens: &[Polynomial], ord: &MonomialOrdering) -> Result<()> {
    let row = &ord.rows()[0];
    for g in gens {
        let mut degrees =
            g.terms().map(|(m, _)| row.iter().zip(m.exponents()).map(|(w, &e)| w * i64::from(e)).sum::<i64>());
        if let Some(d) = degrees.next() {
            if degrees.any(|e| e != d) {
                return Err(Error::InhomogeneousLocalInput(format!("`{g}` is not homogeneous for {row:?}")));
            }
        }
    }
    Ok(())
}

/// Standard basis of `⟨gens⟩` with the default pair limit.
pub fn standard_basis(gens: &[Polynomial], ord: &MonomialOrdering) -> Result<Vec<Polynomial>> {
    standard_basis_with_limit(gens, ord, DEFAULT_PAIR_LIMIT)
}

/// Reduced Gröbner basis (global orderings) or minimal standard basis
/// (orderings with local variables), monic, sorted by leading monomial.
pub fn standard_basis_with_limit(gens: &[Polynomial], ord: &MonomialOrdering, limit: usize) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    check_inputs(&ring, &gens.iter().collect::<Vec<_>>(), ord)?;
    let global = ord.is_global();
    if !global {
        check_local_homogeneous(gens, ord)?;
    }
    let ctx = Ctx::new(ord);
    let opolys: Vec<OPoly> = gens.iter().map(|g| ctx.encode(g)).collect();
    let run = ctx.buchberger(&opolys, global, limit, false, true)?;
    Ok(run.basis.iter().map(|p| ctx.to_poly(&ring, p)).collect())
}

/// Remainder of `f` modulo `basis`: full reduction for global orderings,
/// Mora's weak normal form otherwise.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrdering) -> Result<Polynomial> {
    check_inputs(f.ring(), &basis.iter().collect::<Vec<_>>(), ord)?;
    let ctx = Ctx::new(ord);
    let of = ctx.encode(f);
    let ob: Vec<OPoly> = basis.iter().filter(|g| !g.is_zero()).map(|g| ctx.encode(g)).collect();
    let refs: Vec<&OPoly> = ob.iter().collect();
    let r = if ord.is_global() { ctx.full_reduce(&of, &refs, false).0 } else { ctx.mora_nf(&of, &refs, false).0 };
    Ok(ctx.to_poly(f.ring(), &r))
}

/// Mora's weak normal form with its unit and quotients. For global
/// orderings the unit is 1 and the remainder is fully reduced.
pub fn normal_form_with_unit(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrdering) -> Result<WeakNormalForm> {
    check_inputs(f.ring(), &basis.iter().collect::<Vec<_>>(), ord)?;
    if basis.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let ring = f.ring();
    let ctx = Ctx::new(ord);
    let of = ctx.encode(f);
    let ob: Vec<OPoly> = basis.iter().map(|g| ctx.encode(g)).collect();
    let refs: Vec<&OPoly> = ob.iter().collect();
    if ord.is_global() {
        let (r, q) = ctx.full_reduce(&of, &refs, true);
        return Ok(WeakNormalForm {
            unit: Polynomial::one(ring),
            quotients: q.iter().map(|p| ctx.to_poly(ring, p)).collect(),
            remainder: ctx.to_poly(ring, &r),
        });
    }
    let (r, track) = ctx.mora_nf(&of, &refs, true);
    let (u, q) = track.expect("tracking requested");
    Ok(WeakNormalForm {
        unit: ctx.to_poly(ring, &u),
        quotients: q.iter().map(|p| ctx.to_poly(ring, p)).collect(),
        remainder: ctx.to_poly(ring, &r),
    })
}

/// Cofactors `c` with `f = Σ c_i gens_i`, or `None` if `f ∉ ⟨gens⟩`.
/// Requires a global ordering.
pub fn lift(f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrdering) -> Result<Option<Vec<Polynomial>>> {
    check_inputs(f.ring(), &gens.iter().collect::<Vec<_>>(), ord)?;
    if !ord.is_global() {
        return Err(Error::InvalidOrdering("lifting requires a global ordering".into()));
    }
    let ring = f.ring();
    if f.is_zero() {
        return Ok(Some(vec![Polynomial::zero(ring); gens.len()]));
    }
    let ctx = Ctx::new(ord);
    let ogens: Vec<OPoly> = gens.iter().map(|g| ctx.encode(g)).collect();
    let run = ctx.buchberger(&ogens, true, DEFAULT_PAIR_LIMIT, true, false)?;
    let refs: Vec<&OPoly> = run.basis.iter().collect();
    let (r, q) = ctx.full_reduce(&ctx.encode(f), &refs, true);
    if !r.is_zero() {
        return Ok(None);
    }
    let mut cof = vec![OPoly::default(); gens.len()];
    for (qk, rep) in q.iter().zip(&run.reps) {
        if qk.is_zero() {
            continue;
        }
        for (c, rk) in cof.iter_mut().zip(rep) {
            *c = c.add(&mul(qk, rk), ctx.nvars, ctx.keylen);
        }
    }
    Ok(Some(cof.iter().map(|p| ctx.to_poly(ring, p)).collect()))
}

fn mul(a: &OPoly, b: &OPoly) -> OPoly {
    let mut out = OPoly::default();
    for t in &a.terms {
        out = out.sub_mul(&-t.coeff.clone(), &t.exps, &t.key, b);
    }
    out
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub fn is_standard_basis(basis: &[Polynomial], ord: &MonomialOrdering) -> Result<bool> {
    let Some(first) = basis.first() else {
        return Ok(true);
    };
    check_inputs(first.ring(), &basis.iter().collect::<Vec<_>>(), ord)?;
    let ctx = Ctx::new(ord);
    let ob: Vec<OPoly> = basis.iter().map(|g| ctx.encode(g)).collect();
    Ok(ctx.is_standard_basis(&ob, ord.is_global()))
}

/// `true` iff `f` reduces to zero modulo a Gröbner basis of `gens`.
pub fn is_member(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let ord = MonomialOrdering::degrevlex(f.ring().nvars());
    let gb = standard_basis(gens, &ord)?;
    Ok(normal_form(f, &gb, &ord)?.is_zero())
}

#[cfg(test)]
mod tests;
