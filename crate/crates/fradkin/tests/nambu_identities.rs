//! Bracket identities on polynomial inputs and the Gonzalez construction.

use fradkin::nambu_gradient::poly::{nambu_poly, Poly};
use fradkin::nambu_gradient::{dg_identity_residual, discrete_gradient, extended_a_vector, DgScheme, NambuFn};
use fradkin::rational::{q, Q};
use fradkin::sample::Sampler;
use num_traits::Zero;

fn random_poly(s: &mut Sampler, nvars: usize, terms: usize) -> Poly {
    let mut p = Poly::zero(nvars);
    for _ in 0..terms {
        let e = (0..nvars).map(|_| s.int(0, 2) as u32).collect();
        p = p.add(&Poly::monomial(s.rational(), e));
    }
    p
}

#[test]
fn skew_symmetry_on_products_of_coordinates() {
    let mut s = Sampler::new(3).with_bound(9);
    let x: Vec<Poly> = (0..3).map(|k| Poly::var(3, k)).collect();
    let f = [x[0].mul(&x[1]), x[2].mul(&x[2]), x[0].add(&x[1].mul(&x[2]))];
    let mu = s.nonzero();
    let b = nambu_poly(&f, &mu);
    let swapped = nambu_poly(&[f[1].clone(), f[0].clone(), f[2].clone()], &mu);
    assert_eq!(b, swapped.scale(&q(-1)));
    assert!(nambu_poly(&[f[0].clone(), f[0].clone(), f[2].clone()], &mu).is_zero());
}

#[test]
fn leibniz_rule() {
    for seed in 0..10 {
        let mut s = Sampler::new(seed).with_bound(7);
        let (f, g, h, k) = (
            random_poly(&mut s, 3, 3),
            random_poly(&mut s, 3, 3),
            random_poly(&mut s, 3, 3),
            random_poly(&mut s, 3, 3),
        );
        let mu = s.nonzero();
        let lhs = nambu_poly(&[f.mul(&g), h.clone(), k.clone()], &mu);
        let rhs = f
            .mul(&nambu_poly(&[g.clone(), h.clone(), k.clone()], &mu))
            .add(&g.mul(&nambu_poly(&[f, h, k], &mu)));
        assert_eq!(lhs, rhs);
    }
}

/// `{f_1..f_{n-1}, {g_1..g_n}} - sum_k {g_1.., {f_1..f_{n-1}, g_k}, ..g_n}`.
fn fundamental_defect(f: &[Poly], g: &[Poly], mu: &Q) -> Poly {
    let with = |extra: Poly| {
        let mut v = f.to_vec();
        v.push(extra);
        nambu_poly(&v, mu)
    };
    let mut out = with(nambu_poly(g, mu));
    for k in 0..g.len() {
        let mut gk = g.to_vec();
        gk[k] = with(g[k].clone());
        out = out.sub(&nambu_poly(&gk, mu));
    }
    out
}

#[test]
fn fundamental_identity_order_two_and_three() {
    for seed in 0..6 {
        let mut s = Sampler::new(100 + seed).with_bound(5);
        let mu = s.nonzero();
        let f2 = [random_poly(&mut s, 2, 3)];
        let g2 = [random_poly(&mut s, 2, 3), random_poly(&mut s, 2, 3)];
        assert!(fundamental_defect(&f2, &g2, &mu).is_zero());
        let f3 = [random_poly(&mut s, 3, 2), Poly::var(3, 0).mul(&Poly::var(3, 2))];
        let g3 = [Poly::var(3, 1), random_poly(&mut s, 3, 2), random_poly(&mut s, 3, 2)];
        let d = fundamental_defect(&f3, &g3, &mu);
        let x = [s.rational(), s.rational(), s.rational()];
        assert!(d.eval(&x).is_zero() && d.is_zero());
    }
}

#[test]
fn gonzalez_on_a_quartic() {
    let quartic = NambuFn::Poly(Poly::monomial(q(1), vec![4, 0]));
    for seed in 0..20 {
        let mut s = Sampler::new(200 + seed).with_bound(15);
        let (x, y) = (s.vec(2), s.vec(2));
        let a = quartic.gradient(&x);
        assert!(dg_identity_residual(&quartic, &x, &y, &DgScheme::GonzalezFrom(a))
            .unwrap()
            .is_zero());
        let ext = extended_a_vector(&quartic, &x, &y, &s.rational());
        assert!(dg_identity_residual(&quartic, &x, &y, &DgScheme::GonzalezFrom(ext))
            .unwrap()
            .is_zero());
    }
    let x = vec![q(2), q(3)];
    let g = discrete_gradient(&quartic, &x, &x, &DgScheme::GonzalezFrom(vec![q(0), q(0)])).unwrap();
    assert_eq!(g, vec![q(32), q(0)]);
}
