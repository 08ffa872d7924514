//! Sparse multivariate polynomials over Q, enough for bracket identities on
//! products of coordinates.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate function `x_k`, 0-based.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Q::one());
        p
    }

    pub fn monomial(c: Q, exps: Vec<u32>) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut r = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c * k);
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn diff(&self, k: usize) -> Self {
        let mut r = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[k] > 0 {
                let mut f = e.clone();
                f[k] -= 1;
                r.add_term(f, c * Q::from_integer(e[k].into()));
            }
        }
        r
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|k| self.diff(k)).collect()
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&p, xi)| acc * crate::rational::pow(xi, p as i32))
            })
            .sum()
    }

    pub fn eval_gradient(&self, x: &[Q]) -> Vec<Q> {
        self.gradient().iter().map(|g| g.eval(x)).collect()
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            // inserting at k moves the new element past n - 1 - k others
            let sign = if (n - 1 - k).is_multiple_of(2) { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// `mu det(d f_a / d x_b)` as a polynomial; the order equals the number of variables.
pub fn nambu_poly(funcs: &[Poly], mu: &Q) -> Poly {
    let n = funcs.len();
    let nv = funcs.first().map_or(0, |f| f.nvars);
    assert_eq!(n, nv, "bracket order must equal the number of variables");
    let grads: Vec<Vec<Poly>> = funcs.iter().map(Poly::gradient).collect();
    let mut out = Poly::zero(nv);
    for (perm, sign) in permutations(n) {
        let mut t = Poly::constant(nv, Q::from_integer(sign.into()));
        for (row, &col) in perm.iter().enumerate() {
            t = t.mul(&grads[row][col]);
        }
        out = out.add(&t);
    }
    out.scale(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn arithmetic() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&x).add(&y.scale(&q(3)));
        assert_eq!(p.eval(&[q(2), q(5)]), q(19));
        assert_eq!(p.diff(0), x.scale(&q(2)));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn permutation_signs() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps.iter().map(|p| p.1).sum::<i32>(), 0);
        assert!(ps.contains(&(vec![0, 1, 2], 1)));
        assert!(ps.contains(&(vec![1, 0, 2], -1)));
        assert!(ps.contains(&(vec![1, 2, 0], 1)));
    }

    #[test]
    fn canonical_pair() {
        let (x, y) = (Poly::var(2, 0), Poly::var(2, 1));
        assert_eq!(nambu_poly(&[x.clone(), y.clone()], &q(1)), Poly::constant(2, q(1)));
        assert!(nambu_poly(&[x.clone(), x], &q(1)).is_zero());
    }
}
