//! Canonical Poisson brackets of quadratic phase-space functions.
//!
//! Coordinates are ordered `(q_1..q_N, p_1..p_N)` and an observable is stored as
//! the symmetric matrix `S` with `f(x) = x^T S x`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra_core::{
    f_generator_in_lf, lf_basis, AlgebraElement, AlgebraMode, BasisKind, Generator, StructureTensor,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::Matrix;
use crate::rational::{q, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticObservable {
    pub n: usize,
    s: Matrix<Q>,
}

pub fn qi(i: usize) -> usize {
    i - 1
}

pub fn pi(n: usize, i: usize) -> usize {
    n + i - 1
}

impl QuadraticObservable {
    pub fn new(n: usize, s: Matrix<Q>) -> Result<Self> {
        if s.rows() != 2 * n || s.cols() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                found: s.rows(),
            });
        }
        if !s.is_symmetric() {
            return Err(Error::InvalidParameter("observable matrix must be symmetric".into()));
        }
        Ok(QuadraticObservable { n, s })
    }

    pub fn zero(n: usize) -> Self {
        QuadraticObservable {
            n,
            s: Matrix::zeros(2 * n, 2 * n),
        }
    }

    pub fn matrix(&self) -> &Matrix<Q> {
        &self.s
    }

    /// Adds `c * x_a * x_b` for raw coordinate positions a, b.
    pub fn add_monomial(&mut self, a: usize, b: usize, c: &Q) {
        if a == b {
            self.s[(a, a)] += c;
        } else {
            let h = c / q(2);
            self.s[(a, b)] += &h;
            self.s[(b, a)] += h;
        }
    }

    pub fn with_monomial(mut self, a: usize, b: usize, c: Q) -> Self {
        self.add_monomial(a, b, &c);
        self
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        let sx = self.s.mul_vec(x);
        x.iter().zip(&sx).map(|(a, b)| a * b).sum()
    }

    pub fn gradient(&self, x: &[Q]) -> Vec<Q> {
        self.s.mul_vec(x).into_iter().map(|v| v * q(2)).collect()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(QuadraticObservable {
            n: self.n,
            s: self.s.add(&o.s),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(QuadraticObservable {
            n: self.n,
            s: self.s.sub(&o.s),
        })
    }

    pub fn scale(&self, k: &Q) -> Self {
        QuadraticObservable {
            n: self.n,
            s: self.s.scale(k),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: o.n,
            });
        }
        Ok(())
    }

    /// Upper-triangular coefficients of the polynomial, used as span coordinates.
    pub fn monomial_coords(&self) -> Vec<Q> {
        let d = 2 * self.n;
        let mut v = Vec::with_capacity(d * (d + 1) / 2);
        for a in 0..d {
            v.push(self.s[(a, a)].clone());
            for b in a + 1..d {
                v.push(&self.s[(a, b)] * q(2));
            }
        }
        v
    }
}

/// `[[0, I], [-I, 0]]`.
pub fn canonical_j(n: usize) -> Matrix<Q> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n {
            Q::one()
        } else if i == j + n {
            -Q::one()
        } else {
            Q::zero()
        }
    })
}

/// `{f, g}` has matrix `2(S J T - T J S)`.
pub fn poisson_bracket(f: &QuadraticObservable, g: &QuadraticObservable) -> Result<QuadraticObservable> {
    f.check(g)?;
    let j = canonical_j(f.n);
    let sjt = f.s.matmul(&j).matmul(&g.s);
    let tjs = g.s.matmul(&j).matmul(&f.s);
    Ok(QuadraticObservable {
        n: f.n,
        s: sjt.sub(&tjs).scale(&q(2)),
    })
}

/// F_{i,j} -> p_i p_j + alpha q_i q_j, L_{i,j} -> q_i p_j - q_j p_i.
pub fn realize_with_alpha(g: Generator, alpha: &Q, n: usize) -> Result<QuadraticObservable> {
    g.check(n)?;
    let mut o = QuadraticObservable::zero(n);
    match g {
        Generator::F(i, j) => {
            o.add_monomial(pi(n, i), pi(n, j), &q(1));
            o.add_monomial(qi(i), qi(j), alpha);
        }
        Generator::L(i, j) => {
            o.add_monomial(qi(i), pi(n, j), &q(1));
            o.add_monomial(qi(j), pi(n, i), &q(-1));
        }
        _ => return Err(Error::Unsupported(format!("{g} has no realization without omega"))),
    }
    Ok(o)
}

pub fn realize_generator(g: Generator, mode: &AlgebraMode, n: usize) -> Result<QuadraticObservable> {
    mode.validate()?;
    let alpha = mode.alpha();
    match g {
        Generator::Fb(..) | Generator::R => {
            g.check(n)?;
            let w = mode.omega().ok_or(Error::ZeroModeUnsupported)?;
            let mut o = QuadraticObservable::zero(n);
            for (h, c) in f_generator_in_lf(g, n, w) {
                o = o.add(&realize_with_alpha(h, &alpha, n)?.scale(&c))?;
            }
            Ok(o)
        }
        _ => realize_with_alpha(g, &alpha, n),
    }
}

/// Exact coordinates of quadratics over a fixed list of observables.
pub struct SpanSolver {
    basis: Matrix<Q>,
    rows: Vec<usize>,
    inv: Matrix<Q>,
}

impl SpanSolver {
    pub fn new(obs: &[QuadraticObservable]) -> Result<Self> {
        let cols: Vec<Vec<Q>> = obs.iter().map(|o| o.monomial_coords()).collect();
        let m = cols.first().map_or(0, |c| c.len());
        let basis = Matrix::from_fn(m, cols.len(), |i, j| cols[j][i].clone());
        // pivot rows of A are the pivot columns of A^T
        let mut rows = Vec::new();
        let mut acc: Vec<Vec<Q>> = Vec::new();
        for i in 0..m {
            acc.push(basis.row(i).to_vec());
            if Matrix::from_rows(acc.clone()).rank() == acc.len() {
                rows.push(i);
                if rows.len() == cols.len() {
                    break;
                }
            } else {
                acc.pop();
            }
        }
        if rows.len() < cols.len() {
            return Err(Error::InvalidParameter("observables are linearly dependent".into()));
        }
        let inv = basis.select(&rows, &(0..cols.len()).collect::<Vec<_>>()).inverse()?;
        Ok(SpanSolver { basis, rows, inv })
    }

    pub fn coords(&self, o: &QuadraticObservable) -> Result<Vec<Q>> {
        let b = o.monomial_coords();
        let rhs: Vec<Q> = self.rows.iter().map(|&r| b[r].clone()).collect();
        let x = self.inv.mul_vec(&rhs);
        if self.basis.mul_vec(&x) != b {
            return Err(Error::NotInSpan);
        }
        Ok(x)
    }
}

/// All pairwise brackets of `obs`, expressed back in `obs`.
pub fn bracket_table(obs: &[QuadraticObservable], exec: Exec) -> Result<Vec<Vec<Vec<Q>>>> {
    let solver = SpanSolver::new(obs)?;
    let d = obs.len();
    exec.map_range(0..d, |a| {
        (0..d)
            .map(|b| solver.coords(&poisson_bracket(&obs[a], &obs[b])?))
            .collect::<Result<Vec<_>>>()
    })
    .into_iter()
    .collect()
}

pub fn structure_constants_bruteforce(n: usize, mode: &AlgebraMode) -> Result<StructureTensor> {
    structure_constants_bruteforce_with(n, mode, Exec::default())
}

pub fn structure_constants_bruteforce_with(n: usize, mode: &AlgebraMode, exec: Exec) -> Result<StructureTensor> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("N must be at least 2, got {n}")));
    }
    mode.validate()?;
    let basis = lf_basis(n);
    let obs = basis
        .iter()
        .map(|g| realize_generator(*g, mode, n))
        .collect::<Result<Vec<_>>>()?;
    let t = bracket_table(&obs, exec)?;
    Ok(StructureTensor::from_dense(
        n,
        mode.alpha(),
        mode.omega().cloned(),
        BasisKind::LF,
        basis,
        t,
    ))
}

pub fn express_in_basis(obs: &QuadraticObservable, n: usize, mode: &AlgebraMode) -> Result<AlgebraElement> {
    if obs.n != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: obs.n,
        });
    }
    let basis = lf_basis(n);
    let realized = basis
        .iter()
        .map(|g| realize_generator(*g, mode, n))
        .collect::<Result<Vec<_>>>()?;
    let x = SpanSolver::new(&realized)?.coords(obs)?;
    AlgebraElement::from_coords(n, mode.clone(), &basis, &x)
}

/// Sparse view of an observable's monomials, keyed by coordinate positions a <= b.
pub fn monomials(o: &QuadraticObservable) -> BTreeMap<(usize, usize), Q> {
    let d = 2 * o.n;
    let mut m = BTreeMap::new();
    for a in 0..d {
        for b in a..d {
            let c = if a == b {
                o.s[(a, a)].clone()
            } else {
                &o.s[(a, b)] * q(2)
            };
            if !c.is_zero() {
                m.insert((a, b), c);
            }
        }
    }
    m
}

/// `x = (q, p)` concatenated.
pub fn phase_point(qv: &[Q], pv: &[Q]) -> Vec<Q> {
    qv.iter().chain(pv).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::structure_tensor;
    use crate::rational::qq;
    use crate::sample::Sampler;

    #[test]
    fn q_squared_with_p_squared() {
        let f = QuadraticObservable::zero(1).with_monomial(0, 0, q(1));
        let g = QuadraticObservable::zero(1).with_monomial(1, 1, q(1));
        let b = poisson_bracket(&f, &g).unwrap();
        assert_eq!(b, QuadraticObservable::zero(1).with_monomial(0, 1, q(4)));
        assert_eq!(b.matrix()[(0, 1)], q(2));
    }

    #[test]
    fn j_is_canonical() {
        let j = canonical_j(3);
        assert_eq!(j.transpose(), j.neg());
        assert_eq!(j.matmul(&j), Matrix::identity(6).neg());
    }

    #[test]
    fn documented_realizations() {
        let l = realize_generator(Generator::L(1, 2), &AlgebraMode::Zero, 2).unwrap();
        assert_eq!(l.matrix()[(0, 3)], qq(1, 2));
        assert_eq!(l.matrix()[(1, 2)], -qq(1, 2));
        let f = realize_generator(Generator::F(1, 1), &AlgebraMode::Plus(q(1)), 2).unwrap();
        assert_eq!(
            f,
            QuadraticObservable::zero(2)
                .with_monomial(2, 2, q(1))
                .with_monomial(0, 0, q(1))
        );
        let f = realize_generator(Generator::F(1, 2), &AlgebraMode::Zero, 2).unwrap();
        assert_eq!(f, QuadraticObservable::zero(2).with_monomial(2, 3, q(1)));
    }

    #[test]
    fn zero_mode_table_entry() {
        let m = AlgebraMode::Zero;
        let f11 = realize_generator(Generator::F(1, 1), &m, 3).unwrap();
        let l12 = realize_generator(Generator::L(1, 2), &m, 3).unwrap();
        let f12 = realize_generator(Generator::F(1, 2), &m, 3).unwrap();
        assert_eq!(poisson_bracket(&f11, &l12).unwrap(), f12.scale(&q(-2)));
        let f22 = realize_generator(Generator::F(2, 2), &m, 3).unwrap();
        assert!(poisson_bracket(&f11, &f22).unwrap().is_zero());
    }

    #[test]
    fn expression() {
        let m = AlgebraMode::Plus(q(1));
        let x = QuadraticObservable::zero(2)
            .with_monomial(0, 0, q(1))
            .with_monomial(2, 2, q(1));
        let e = express_in_basis(&x, 2, &m).unwrap();
        assert_eq!(e, AlgebraElement::generator(2, m.clone(), Generator::F(1, 1)).unwrap());
        let y = QuadraticObservable::zero(2).with_monomial(0, 0, q(1));
        assert_eq!(express_in_basis(&y, 2, &m).unwrap_err(), Error::NotInSpan);
        let z = realize_generator(Generator::L(1, 2), &m, 2)
            .unwrap()
            .scale(&q(3))
            .sub(&realize_generator(Generator::F(2, 2), &m, 2).unwrap())
            .unwrap();
        let e = express_in_basis(&z, 2, &m).unwrap();
        assert_eq!(e.coeff(&Generator::L(1, 2)), q(3));
        assert_eq!(e.coeff(&Generator::F(2, 2)), q(-1));
    }

    #[test]
    fn bruteforce_matches_relations_small() {
        for mode in [AlgebraMode::Plus(q(1)), AlgebraMode::Minus(qq(2, 3)), AlgebraMode::Zero] {
            for n in 2..=3 {
                let a = structure_constants_bruteforce(n, &mode).unwrap();
                let b = structure_tensor(n, &mode, BasisKind::LF).unwrap();
                assert_eq!(a.mismatches(&b), 0, "{} n={n}", mode.label());
            }
        }
        let t = structure_constants_bruteforce(2, &AlgebraMode::Minus(q(1))).unwrap();
        let (f11, f12, l12) = (
            t.position(&Generator::F(1, 1)).unwrap(),
            t.position(&Generator::F(1, 2)).unwrap(),
            t.position(&Generator::L(1, 2)).unwrap(),
        );
        assert_eq!(t.bracket(f11, f12), &[(l12, q(-2))]);
    }

    #[test]
    fn jacobi_on_random_quadratics() {
        let mut s = Sampler::new(11).with_bound(9);
        let mut rand_obs = |n: usize| {
            let mut o = QuadraticObservable::zero(n);
            for a in 0..2 * n {
                for b in a..2 * n {
                    o.add_monomial(a, b, &s.rational());
                }
            }
            o
        };
        for _ in 0..20 {
            let (f, g, h) = (rand_obs(2), rand_obs(2), rand_obs(2));
            let pb = |x: &QuadraticObservable, y: &QuadraticObservable| poisson_bracket(x, y).unwrap();
            let j = pb(&pb(&f, &g), &h)
                .add(&pb(&pb(&g, &h), &f))
                .unwrap()
                .add(&pb(&pb(&h, &f), &g))
                .unwrap();
            assert!(j.is_zero());
        }
    }
}
