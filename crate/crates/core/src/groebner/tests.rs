use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::poly::{rat, Monomial};

fn ring(names: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(names.iter().copied()).unwrap()
}

fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let dr = MonomialOrdering::degrevlex(2);
    assert_eq!(normal_form(&p(&r, "x^2*y"), &[p(&r, "x^2 - 1")], &dr).unwrap(), p(&r, "y"));
    let gens = [p(&r, "x^2 - y"), p(&r, "x*y - 1")];
    let f = p(&r, "(x^2 - y)*(x + 3) + (x*y - 1)*y^2");
    let gb = standard_basis(&gens, &dr).unwrap();
    assert!(normal_form(&f, &gb, &dr).unwrap().is_zero());
}

#[test]
fn mora_normal_form_example() {
    let r = ring(&["x"]);
    let ord = MonomialOrdering::neg_deglex(1);
    let basis = [p(&r, "x - x^2")];
    let f = p(&r, "x");
    assert!(normal_form(&f, &basis, &ord).unwrap().is_zero());
    let wnf = normal_form_with_unit(&f, &basis, &ord).unwrap();
    assert!(wnf.remainder.is_zero());
    assert_eq!(wnf.unit, p(&r, "1 - x"));
    assert!(ord.leading_term(&wnf.unit).unwrap().monomial.is_one());
    assert_eq!(&wnf.unit * &f, &wnf.quotients[0] * &basis[0]);
}

#[test]
fn standard_basis_examples() {
    let r = ring(&["x"]);
    let sb = standard_basis(&[p(&r, "x^2 - 1")], &MonomialOrdering::degrevlex(1)).unwrap();
    assert_eq!(sb, vec![p(&r, "x^2 - 1")]);

    let r = ring(&["x", "X1", "X2"]);
    let ord =
        MonomialOrdering::block(MonomialOrdering::degrevlex(1), vec![0], MonomialOrdering::degrevlex(2), vec![1, 2])
            .unwrap();
    let sb = standard_basis(&[p(&r, "X1 - x^2"), p(&r, "X2 - x^3")], &ord).unwrap();
    assert!(sb.contains(&p(&r, "X1^3 - X2^2")));
    assert!(is_standard_basis(&sb, &ord).unwrap());

    // deg_w-homogeneous ideal under the ordering of Bayer's method
    let r = ring(&["X1", "X2", "X3", "t"]);
    let ord = MonomialOrdering::bayer_matrix(&[0, 0, 1], -1).unwrap();
    let gens = [p(&r, "X1^2 - 2*X1*X2 - X1 + X2^2 + X2 - X3*t"), p(&r, "X1*X3 - X2*X3 - X3^2*t")];
    let sb = standard_basis(&gens, &ord).unwrap();
    assert!(is_standard_basis(&sb, &ord).unwrap());
}

#[test]
fn local_orderings_reject_inhomogeneous_input() {
    let r = ring(&["x", "t"]);
    let ord = MonomialOrdering::bayer_matrix(&[1], -1).unwrap();
    assert!(matches!(standard_basis(&[p(&r, "x + x^2")], &ord), Err(Error::InhomogeneousLocalInput(_))));
}

#[test]
fn pair_limit_is_reported() {
    let r = ring(&["x", "y", "z"]);
    let gens = [p(&r, "x^3 - y*z"), p(&r, "y^3 - x*z"), p(&r, "z^3 - x*y")];
    let res = standard_basis_with_limit(&gens, &MonomialOrdering::lex(3), 2);
    assert_eq!(res, Err(Error::PairLimit { limit: 2 }));
}

#[test]
fn kernel_examples() {
    // Tagged initial forms of the (Z/2)^2 × Z example.
    let t = ring(&["x", "y", "a", "b", "g", "gi"]);
    let s = ring(&["X1", "X2", "X3"]);
    let map = RingMap::new(
        &s,
        &t,
        vec![p(&t, "y^2*g^2"), p(&t, "-y^2*a*g^2"), p(&t, "x*y*b*g^2")],
        vec![p(&t, "a^2 - 1"), p(&t, "b^2 - 1"), p(&t, "g*gi - 1")],
    )
    .unwrap();
    let k = map.kernel().unwrap();
    assert!(k.equals(&ideal(&s, &["X1^2 - X2^2"])).unwrap());

    // Standard grading only, after adding 2x^2.
    let t = ring(&["x", "y", "g", "gi"]);
    let s = ring(&["X1", "X2", "X3", "X4"]);
    let map = RingMap::new(
        &s,
        &t,
        vec![p(&t, "y^2*g^2"), p(&t, "-y^2*g^2"), p(&t, "x*y*g^2"), p(&t, "2*x^2*g^2")],
        vec![p(&t, "g*gi - 1")],
    )
    .unwrap();
    let k = map.kernel().unwrap();
    assert!(k.equals(&ideal(&s, &["X1 + X2", "X2*X4 + 2*X3^2"])).unwrap());

    // Algebraically independent images.
    let t = ring(&["x", "y", "z", "g1", "g2", "g3"]);
    let s = ring(&["X1", "X2", "X3"]);
    let map = RingMap::new(&s, &t, vec![p(&t, "x*g1"), p(&t, "x*y*g2"), p(&t, "x*y^2*g3")], vec![]).unwrap();
    assert!(map.kernel().unwrap().groebner_basis().unwrap().is_empty());

    // Clashing variable names between source and target.
    let t = ring(&["x"]);
    let s = ring(&["x", "y"]);
    let map = RingMap::new(&s, &t, vec![p(&t, "x^2"), p(&t, "x^3")], vec![]).unwrap();
    assert!(map.kernel().unwrap().equals(&ideal(&s, &["x^3 - y^2"])).unwrap());
}

#[test]
fn quotient_and_saturation_examples() {
    let r = ring(&["x", "t"]);
    let i = ideal(&r, &["x*t", "t^2"]);
    let sat = i.saturation(&p(&r, "t")).unwrap();
    assert!(sat.is_unit().unwrap());
    let q = i.quotient(&p(&r, "t")).unwrap();
    assert!(q.equals(&ideal(&r, &["x", "t"])).unwrap());

    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x"]);
    assert!(i.saturation(&p(&r, "y")).unwrap().equals(&i).unwrap());
    assert!(i.quotient(&p(&r, "1")).unwrap().equals(&i).unwrap());
    let i = ideal(&r, &["x^2*y", "x*y^3"]);
    assert!(i.quotient(&p(&r, "x")).unwrap().equals(&ideal(&r, &["x*y", "y^3"])).unwrap());
    assert!(i.saturation(&p(&r, "x")).unwrap().equals(&ideal(&r, &["y"])).unwrap());
}

#[test]
fn containment_examples() {
    let r = ring(&["X1", "X2", "X3", "t"]);
    let ihom_t = ideal(&r, &["X1^2 - 2*X1*X2 - X1 + X2^2 + X2 - X3*t", "t"]);
    let j = ideal(&r, &["X1 - X2"]);
    assert_eq!(j.is_contained_in(&ihom_t).unwrap(), Containment::NotContained(p(&r, "X1 - X2")));

    let r = ring(&["X1", "X2", "X3", "X4", "t"]);
    let ihom_t = ideal(&r, &["X1 - X2 - X4*t", "X3 + X4 - X4^2*t", "t"]);
    let j = ideal(&r, &["X1 - X2", "X3 + X4"]);
    assert!(j.is_contained_in(&ihom_t).unwrap().holds());
    assert!(ihom_t.is_contained_in(&ihom_t).unwrap().holds());
}

#[test]
fn elimination_examples() {
    let r = ring(&["x", "X1", "X2"]);
    let e = ideal(&r, &["X1 - x^2", "X2 - x^3"]).eliminate(&[0]).unwrap();
    assert_eq!(e.ring().names(), ["X1", "X2"]);
    assert!(e.equals(&ideal(e.ring(), &["X1^3 - X2^2"])).unwrap());

    let r = ring(&["x"]);
    assert!(ideal(&r, &["x"]).eliminate(&[0]).unwrap().is_zero());

    let r = ring(&["x", "X1", "y"]);
    let e = ideal(&r, &["X1 - x", "x - y"]).eliminate(&[0]).unwrap();
    assert!(e.equals(&ideal(e.ring(), &["X1 - y"])).unwrap());
}

#[test]
fn lift_produces_cofactors() {
    let r = ring(&["x", "y"]);
    let gens = [p(&r, "x^2 - y"), p(&r, "x*y - 1")];
    let f = p(&r, "y^2 - x");
    let c = lift(&f, &gens, &MonomialOrdering::degrevlex(2)).unwrap().unwrap();
    assert_eq!(&(&c[0] * &gens[0]) + &(&c[1] * &gens[1]), f);
    assert_eq!(lift(&p(&r, "x"), &gens, &MonomialOrdering::degrevlex(2)).unwrap(), None);
}

#[test]
fn bases_are_deterministic() {
    let r = ring(&["x", "y", "z"]);
    let gens = [p(&r, "x^2 + y*z - 1"), p(&r, "y^2 - x*z"), p(&r, "x*y*z - z")];
    let a = standard_basis(&gens, &MonomialOrdering::degrevlex(3)).unwrap();
    let b = standard_basis(&gens, &MonomialOrdering::degrevlex(3)).unwrap();
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
}

fn arb_poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-3i64..4, prop::collection::vec(0..=max_deg, nvars)), 1..4)
}

fn build(r: &Arc<PolyRing>, terms: &[(i64, Vec<u32>)], max_deg: u64) -> Polynomial {
    Polynomial::from_terms(
        r,
        terms
            .iter()
            .filter(|(_, e)| e.iter().map(|&x| u64::from(x)).sum::<u64>() <= max_deg)
            .map(|(c, e)| (Monomial::new(e.clone()), rat(*c, 1))),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn buchberger_output_is_a_basis_of_the_ideal(
        g in prop::collection::vec(arb_poly(3, 2), 1..4),
        f in arb_poly(3, 2),
    ) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<Polynomial> = g.iter().map(|t| build(&r, t, 3)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        for ord in [MonomialOrdering::degrevlex(3), MonomialOrdering::lex(3)] {
            let gb = standard_basis(&gens, &ord).unwrap();
            prop_assert!(is_standard_basis(&gb, &ord).unwrap());
            for g in &gens {
                prop_assert!(normal_form(g, &gb, &ord).unwrap().is_zero());
            }
            // membership soundness via explicit cofactors
            let h = build(&r, &f, 3);
            let member = &h * &gens[0];
            prop_assert!(normal_form(&member, &gb, &ord).unwrap().is_zero());
            if normal_form(&h, &gb, &ord).unwrap().is_zero() {
                let c = lift(&h, &gens, &ord).unwrap().unwrap();
                let mut sum = Polynomial::zero(&r);
                for (ci, gi) in c.iter().zip(&gens) {
                    sum = &sum + &(ci * gi);
                }
                prop_assert_eq!(sum, h);
            }
        }
    }

    #[test]
    fn mora_contract(g in prop::collection::vec(arb_poly(2, 3), 1..3), f in arb_poly(2, 3)) {
        let r = ring(&["x", "y"]);
        let basis: Vec<Polynomial> = g.iter().map(|t| build(&r, t, 4)).filter(|p| !p.is_zero()).collect();
        let f = build(&r, &f, 4);
        prop_assume!(!basis.is_empty());
        let mixed = MonomialOrdering::block(
            MonomialOrdering::neg_lex(1), vec![1], MonomialOrdering::degrevlex(1), vec![0],
        ).unwrap();
        for ord in [MonomialOrdering::neg_deglex(2), mixed] {
            let w = normal_form_with_unit(&f, &basis, &ord).unwrap();
            let mut rhs = Polynomial::zero(&r);
            for (q, g) in w.quotients.iter().zip(&basis) {
                rhs = &rhs + &(q * g);
            }
            prop_assert_eq!(&(&w.unit * &f) - &w.remainder, rhs);
            prop_assert!(ord.leading_term(&w.unit).unwrap().monomial.is_one());
            if let Ok(lr) = ord.leading_term(&w.remainder) {
                for g in &basis {
                    let lg = ord.leading_term(g).unwrap();
                    prop_assert!(!lg.monomial.divides(&lr.monomial));
                }
            }
        }
    }
}
