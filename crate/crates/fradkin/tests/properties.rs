use fradkin::algebra_core::{bracket_lf, f_basis, from_f_basis, lf_basis, to_f_basis, AlgebraElement, AlgebraMode};
use fradkin::iho_discretization::{invariant_set, pullback, symplectic_defect, DiscretizationParams, PhaseState};
use fradkin::nambu_gradient::matfam::{MatA, MatB};
use fradkin::nambu_gradient::{nambu_bracket, NambuFn};

use fradkin::rational::Q;
use fradkin::symplectic_oracle::{poisson_bracket, realize_generator, QuadraticObservable};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Q::new(BigInt::from(n), BigInt::from(d)))
}

fn pos() -> impl Strategy<Value = Q> {
    (1i64..=30, 1i64..=12).prop_map(|(n, d)| Q::new(BigInt::from(n), BigInt::from(d)))
}

fn mode() -> impl Strategy<Value = AlgebraMode> {
    prop_oneof![
        pos().prop_map(AlgebraMode::Plus),
        pos().prop_map(AlgebraMode::Minus),
        Just(AlgebraMode::Zero)
    ]
}

fn elem(n: usize, m: &AlgebraMode, v: &[Q]) -> AlgebraElement {
    AlgebraElement::from_coords(n, m.clone(), &lf_basis(n), v).unwrap()
}

fn realize(x: &AlgebraElement) -> QuadraticObservable {
    let mut o = QuadraticObservable::zero(x.n);
    for (g, c) in x.terms() {
        o = o.add(&realize_generator(*g, &x.mode, x.n).unwrap().scale(c)).unwrap();
    }
    o
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric_and_jacobi(m in mode(), v in prop::collection::vec(rat(), 27)) {
        let n = 3;
        let d = n * n;
        let (x, y, z) = (elem(n, &m, &v[..d]), elem(n, &m, &v[d..2 * d]), elem(n, &m, &v[2 * d..]));
        let xy = bracket_lf(&x, &y).unwrap();
        prop_assert!(xy.add(&bracket_lf(&y, &x).unwrap()).unwrap().is_zero());
        let j = bracket_lf(&x, &bracket_lf(&y, &z).unwrap()).unwrap()
            .add(&bracket_lf(&y, &bracket_lf(&z, &x).unwrap()).unwrap()).unwrap()
            .add(&bracket_lf(&z, &xy).unwrap()).unwrap();
        prop_assert!(j.is_zero());
    }

    #[test]
    fn realization_is_a_homomorphism(m in mode(), v in prop::collection::vec(rat(), 8)) {
        let n = 2;
        let (x, y) = (elem(n, &m, &v[..4]), elem(n, &m, &v[4..]));
        let lhs = poisson_bracket(&realize(&x), &realize(&y)).unwrap();
        prop_assert_eq!(lhs, realize(&bracket_lf(&x, &y).unwrap()));
    }

    #[test]
    fn f_basis_round_trip(w in pos(), plus in any::<bool>(), v in prop::collection::vec(rat(), 16)) {
        let n = 4;
        let m = if plus { AlgebraMode::Plus(w) } else { AlgebraMode::Minus(w) };
        let x = AlgebraElement::from_coords(n, m.clone(), &f_basis(n), &v).unwrap();
        prop_assert_eq!(to_f_basis(&from_f_basis(&x).unwrap()).unwrap(), x);
        let y = elem(n, &m, &v);
        prop_assert_eq!(from_f_basis(&to_f_basis(&y).unwrap()).unwrap(), y);
    }

    #[test]
    fn uniform_weights_keep_every_invariant(h in pos(), w in pos(), a in rat(), n in 1usize..=3) {
        if let Ok(p) = DiscretizationParams::uniform(n, h, w, a) {
            for (label, o) in invariant_set(&p).unwrap() {
                prop_assert_eq!(pullback(&o, &p).unwrap(), o, "{}", label);
            }
        }
    }

    #[test]
    fn defect_matches_closed_form(h in pos(), w in pos(), a in rat(), b in rat()) {
        if let Ok(p) = DiscretizationParams::new(h.clone(), w.clone(), vec![a.clone()], vec![b.clone()]) {
            // h^2 w^2 (a - b) / Delta
            let k = &h * &h * &w * &w;
            let expected = &k * (&a - &b) / p.delta(0);
            prop_assert_eq!(symplectic_defect(&p), vec![expected]);
        }
    }

    #[test]
    fn family_products_associate(x in prop::collection::vec(rat(), 15)) {
        let a1 = MatA::new(x[0].clone(), x[1].clone(), x[2..5].to_vec());
        let a2 = MatA::new(x[5].clone(), x[6].clone(), x[7..10].to_vec());
        let b = MatB::new(x[10].clone(), x[11].clone(), x[12..14].to_vec());
        let left = a1.mul(&a2).unwrap().mul_b(&b).unwrap();
        let right = a1.mul_b(&a2.mul_b(&b).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(b.mul_a(&a1).unwrap().realize(), b.realize().matmul(&a1.realize()));
    }

    #[test]
    fn nambu_swap_flips_sign(v in prop::collection::vec(rat(), 4), c in prop::collection::vec(rat(), 10)) {
        let s = PhaseState::new(v[..2].to_vec(), v[2..].to_vec()).unwrap();
        let mut o1 = QuadraticObservable::zero(2);
        let mut o2 = QuadraticObservable::zero(2);
        for k in 0..4 {
            o1.add_monomial(k, (k + 1) % 4, &c[k]);
            o2.add_monomial(k, k, &c[4 + k]);
        }
        o2.add_monomial(0, 3, &c[8]);
        let f = vec![NambuFn::Quad(o1.clone()), NambuFn::q(2), NambuFn::Quad(o2.clone()), NambuFn::p(2, 1)];
        let g = vec![NambuFn::Quad(o2), NambuFn::q(2), NambuFn::Quad(o1), NambuFn::p(2, 1)];
        let mu = c[9].clone();
        prop_assert_eq!(nambu_bracket(&f, &s, &mu).unwrap(), -nambu_bracket(&g, &s, &mu).unwrap());
    }
}
