//! Homogeneous Khovanskii and MUVAK bases of subalgebras of polynomial rings.
//!
//! The crate is layered bottom-up: exact sparse polynomials ([`poly`]),
//! monomial orderings ([`ordering`]), gradings by abelian groups
//! ([`grading`]), monomial valuations ([`valuation`]), a standard-basis engine
//! with the usual ideal operations ([`groebner`]), negative homogenization
//! ([`homogenize`]), and finally the subalgebra algorithms ([`subduction`],
//! [`khovanskii`], [`muvak`]).

pub mod error;
pub mod grading;
pub mod groebner;
pub mod homogenize;
pub mod khovanskii;
pub mod muvak;
pub mod ordering;
pub mod parse;
pub mod poly;
pub mod subduction;
pub mod valuation;

pub use error::{Error, Result};
pub use grading::{DeltaDegree, DeltaGroup, GradedElement, GradedTagRing, GroupRing, Split};
pub use groebner::{Ideal, RingMap};
pub use ordering::MonomialOrdering;
pub use poly::{Monomial, PolyRing, Polynomial, Rational, Term};
pub use valuation::MonomialValuation;
