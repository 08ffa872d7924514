//! Nambu brackets for the oscillator, discrete gradients and the discrete Nambu form
//! of the one-step map.
//!
//! `nambu_bracket` takes columns in `(q_1..q_N, p_1..p_N)` order. The Jacobians
//! `J_i` behind `nambu_rhs` use `(p_1..p_N, q_1..q_N)`, the order in which
//! `mu * det J_i` reproduces the Hamilton field for every N with
//! `mu = -1 / (4 w^{2(N-1)} L12^{N-1})`.

pub mod matfam;
pub mod poly;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra_core::Generator;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::iho_discretization::{invariant_f_with_weight, step, DiscretizationParams, PhaseState};
use crate::matrix::Matrix;
use crate::rational::{pow, q, qq, Q};
use crate::sample::Sampler;
use crate::symplectic_oracle::{realize_with_alpha, QuadraticObservable};

use poly::Poly;

/// Phase-space functions with exact gradients.
#[derive(Clone, Debug, PartialEq)]
pub enum NambuFn {
    /// Coordinate `x_k` of the `(q, p)` point, 0-based.
    Coord(usize),
    Quad(QuadraticObservable),
    Poly(Poly),
}

impl NambuFn {
    pub fn q(i: usize) -> Self {
        NambuFn::Coord(i - 1)
    }

    pub fn p(n: usize, i: usize) -> Self {
        NambuFn::Coord(n + i - 1)
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        match self {
            NambuFn::Coord(k) => x[*k].clone(),
            NambuFn::Quad(o) => o.eval(x),
            NambuFn::Poly(p) => p.eval(x),
        }
    }

    pub fn gradient(&self, x: &[Q]) -> Vec<Q> {
        match self {
            NambuFn::Coord(k) => (0..x.len())
                .map(|j| if j == *k { Q::one() } else { Q::zero() })
                .collect(),
            NambuFn::Quad(o) => o.gradient(x),
            NambuFn::Poly(p) => p.eval_gradient(x),
        }
    }
}

/// `mu det(grad f_1, .., grad f_2N)` at `x`.
pub fn nambu_bracket(funcs: &[NambuFn], x: &PhaseState, mu: &Q) -> Result<Q> {
    let pt = x.point();
    if funcs.len() != pt.len() {
        return Err(Error::CountMismatch {
            expected: pt.len(),
            found: funcs.len(),
        });
    }
    let m = Matrix::from_rows(funcs.iter().map(|f| f.gradient(&pt)).collect());
    Ok(mu * m.det())
}

/// The 2N - 1 integrals `F11..F1N, F22..F2N` for `w`.
#[derive(Clone, Debug)]
pub struct NambuContext {
    pub n: usize,
    pub omega_t: Q,
    pub labels: Vec<String>,
    pub s: Vec<QuadraticObservable>,
}

impl NambuContext {
    pub fn new(n: usize, omega_t: &Q) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("the Nambu form needs N >= 2, got {n}")));
        }
        let alpha = omega_t * omega_t;
        let mut labels = Vec::new();
        let mut s = Vec::new();
        for (i, start) in [(1, 1), (2, 2)] {
            for j in start..=n {
                labels.push(format!("F{i}{j}"));
                s.push(realize_with_alpha(Generator::F(i, j), &alpha, n)?);
            }
        }
        Ok(NambuContext {
            n,
            omega_t: omega_t.clone(),
            labels,
            s,
        })
    }

    fn check(&self, s: &PhaseState) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.n(),
            });
        }
        Ok(())
    }

    /// Jacobian of the integrals, columns `(q, p)`.
    pub fn jacobian(&self, s: &PhaseState) -> Result<Matrix<Q>> {
        self.check(s)?;
        let pt = s.point();
        Ok(Matrix::from_rows(self.s.iter().map(|o| o.gradient(&pt)).collect()))
    }

    /// `J_i` with first row `grad q_i` (or `grad p_i`), columns `(p, q)`.
    pub fn j_matrix(&self, s: &PhaseState, first: Coordinate) -> Result<Matrix<Q>> {
        self.check(s)?;
        let n = self.n;
        let pt = s.point();
        let head = match first {
            Coordinate::Q(i) => NambuFn::q(i),
            Coordinate::P(i) => NambuFn::p(n, i),
        };
        let mut rows = vec![head.gradient(&pt)];
        rows.extend(self.s.iter().map(|o| o.gradient(&pt)));
        let pq = |r: Vec<Q>| r[n..].iter().chain(&r[..n]).cloned().collect();
        Ok(Matrix::from_rows(rows.into_iter().map(pq).collect()))
    }

    pub fn det_j_dense(&self, s: &PhaseState, first: Coordinate) -> Result<Q> {
        Ok(self.j_matrix(s, first)?.det())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinate {
    Q(usize),
    P(usize),
}

/// `e_{i,j}` as an N x N matrix, 1-based.
pub fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix<Q> {
    let mut m = Matrix::zeros(n, n);
    m[(i - 1, j - 1)] = Q::one();
    m
}

pub fn l12(s: &PhaseState) -> Q {
    &s.q[0] * &s.p[1] - &s.q[1] * &s.p[0]
}

/// `-1 / (4 w^{2(N-1)} L12^{N-1})`.
pub fn mu_factor(n: usize, omega_t: &Q, s: &PhaseState) -> Result<Q> {
    if s.n() != n || n < 2 {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.n(),
        });
    }
    if omega_t.is_zero() {
        return Err(Error::InvalidParameter("the Nambu factor needs omega != 0".into()));
    }
    let l = l12(s);
    if l.is_zero() {
        return Err(Error::DegenerateAngularMomentum);
    }
    let e = n as i32 - 1;
    Ok(-(q(4) * pow(omega_t, 2 * e) * pow(&l, e)).recip())
}

/// `-4 w^{2(N-1)} L12^{N-1} p_i`.
pub fn det_j_closed(s: &PhaseState, n: usize, omega_t: &Q, i: usize) -> Q {
    let e = n as i32 - 1;
    q(-4) * pow(omega_t, 2 * e) * pow(&l12(s), e) * &s.p[i - 1]
}

/// Companion for the `p_i` row: `4 w^{2N} L12^{N-1} q_i`.
pub fn det_j_closed_p(s: &PhaseState, n: usize, omega_t: &Q, i: usize) -> Q {
    let e = n as i32 - 1;
    q(4) * pow(omega_t, 2 * e + 2) * pow(&l12(s), e) * &s.q[i - 1]
}

/// `(q', p')` from the Nambu form, by dense determinants.
pub fn nambu_rhs(s: &PhaseState, n: usize, omega_t: &Q) -> Result<(Vec<Q>, Vec<Q>)> {
    let ctx = NambuContext::new(n, omega_t)?;
    let mu = mu_factor(n, omega_t, s)?;
    let mut qd = Vec::with_capacity(n);
    let mut pd = Vec::with_capacity(n);
    for i in 1..=n {
        qd.push(&mu * ctx.det_j_dense(s, Coordinate::Q(i))?);
        pd.push(&mu * ctx.det_j_dense(s, Coordinate::P(i))?);
    }
    Ok((qd, pd))
}

pub fn jacobian_rank_s(s: &PhaseState, n: usize, omega_t: &Q) -> Result<usize> {
    Ok(NambuContext::new(n, omega_t)?.jacobian(s)?.rank())
}

/// `q = (0, 1, 0, ..)`, `p = (1, 0, ..)`.
pub fn special_point(n: usize) -> PhaseState {
    let mut s = PhaseState {
        q: vec![Q::zero(); n],
        p: vec![Q::zero(); n],
    };
    if n >= 2 {
        s.q[1] = Q::one();
    }
    s.p[0] = Q::one();
    s
}

#[derive(Clone, Debug, PartialEq)]
pub enum DgScheme {
    /// Gradient at `(x + x')/2`.
    Midpoint,
    /// `a + (x' - x)[F(x') - F(x) - (x' - x).a] / |x' - x|^2` for a given `a`.
    GonzalezFrom(Vec<Q>),
}

/// `grad F(a q' + (1 - a) q, a p + (1 - a) p')`.
pub fn extended_a_vector(f: &NambuFn, x: &[Q], xp: &[Q], a: &Q) -> Vec<Q> {
    let n = x.len() / 2;
    let b = Q::one() - a;
    let mut y: Vec<Q> = (0..n).map(|k| a * &xp[k] + &b * &x[k]).collect();
    y.extend((n..2 * n).map(|k| a * &x[k] + &b * &xp[k]));
    f.gradient(&y)
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn discrete_gradient(f: &NambuFn, x: &[Q], xp: &[Q], scheme: &DgScheme) -> Result<Vec<Q>> {
    if x.len() != xp.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: xp.len(),
        });
    }
    match scheme {
        DgScheme::Midpoint => {
            let mid: Vec<Q> = x.iter().zip(xp).map(|(a, b)| (a + b) * qq(1, 2)).collect();
            Ok(f.gradient(&mid))
        }
        DgScheme::GonzalezFrom(a) => {
            if a.len() != x.len() {
                return Err(Error::DimensionMismatch {
                    expected: x.len(),
                    found: a.len(),
                });
            }
            let d: Vec<Q> = xp.iter().zip(x).map(|(u, v)| u - v).collect();
            let nn = dot(&d, &d);
            if nn.is_zero() {
                return Ok(f.gradient(x));
            }
            let k = (f.eval(xp) - f.eval(x) - dot(&d, a)) / nn;
            Ok(a.iter().zip(&d).map(|(ai, di)| ai + &k * di).collect())
        }
    }
}

/// `(x' - x).DF - (F(x') - F(x))`.
pub fn dg_identity_residual(f: &NambuFn, x: &[Q], xp: &[Q], scheme: &DgScheme) -> Result<Q> {
    let g = discrete_gradient(f, x, xp, scheme)?;
    let d: Vec<Q> = xp.iter().zip(x).map(|(u, v)| u - v).collect();
    Ok(dot(&d, &g) - (f.eval(xp) - f.eval(x)))
}

/// Residuals `(x' - x)/h - mu~ det(D x_k, D F^{(h,a)}..)` for `x' = step(x)`, all
/// `q` components first. Exactly zero at `a = 1/2`.
pub fn discrete_nambu_residual(p: &DiscretizationParams, s: &PhaseState) -> Result<Vec<Q>> {
    let a = p.uniform_weight()?;
    let n = p.n;
    if n < 2 {
        return Err(Error::InvalidParameter(format!("the Nambu form needs N >= 2, got {n}")));
    }
    let sp = step(s, p)?;
    let (x, xp) = (s.point(), sp.point());
    let mid = PhaseState::from_point(&x.iter().zip(&xp).map(|(u, v)| (u + v) * qq(1, 2)).collect::<Vec<_>>());
    let mu = mu_factor(n, &p.omega_t, &mid)?;
    let mut funcs = Vec::with_capacity(2 * n - 1);
    for (i, start) in [(1, 1), (2, 2)] {
        for j in start..=n {
            funcs.push(NambuFn::Quad(invariant_f_with_weight(p, i, j, &a)?));
        }
    }
    let mut grads = Vec::with_capacity(2 * n - 1);
    for f in &funcs {
        grads.push(discrete_gradient(f, &x, &xp, &DgScheme::Midpoint)?);
    }
    let pq = |r: &[Q]| -> Vec<Q> { r[n..].iter().chain(&r[..n]).cloned().collect() };
    let mut out = Vec::with_capacity(2 * n);
    for k in 0..2 * n {
        let head = discrete_gradient(&NambuFn::Coord(k), &x, &xp, &DgScheme::Midpoint)?;
        let mut rows = vec![pq(&head)];
        rows.extend(grads.iter().map(|g| pq(g)));
        let lhs = (&xp[k] - &x[k]) / &p.h;
        out.push(lhs - &mu * Matrix::from_rows(rows).det());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct NambuReport {
    pub n: usize,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub omega_t: Q,
    pub points: usize,
    pub field_matches: usize,
    pub closed_form_matches: usize,
    pub special_point_rank: usize,
    pub pass: bool,
}

fn nonsingular_point(s: &mut Sampler, n: usize) -> PhaseState {
    loop {
        let st = PhaseState {
            q: s.vec(n),
            p: s.vec(n),
        };
        if !l12(&st).is_zero() {
            return st;
        }
    }
}

/// Nambu field and closed-form determinant at `draws` nonsingular rational points.
pub fn verify_nambu(n: usize, omega_t: &Q, draws: usize, seed: u64, exec: Exec) -> Result<NambuReport> {
    let ctx = NambuContext::new(n, omega_t)?;
    let w2 = omega_t * omega_t;
    let results = exec.map_range(0..draws, |k| -> Result<(bool, bool)> {
        let mut smp = Sampler::for_draw(seed, k).with_bound(20);
        let s = nonsingular_point(&mut smp, n);
        let (qd, pd) = nambu_rhs(&s, n, omega_t)?;
        let field = qd == s.p && pd.iter().zip(&s.q).all(|(x, y)| *x == -(&w2 * y));
        let mut closed = true;
        for i in 1..=n {
            closed &= ctx.det_j_dense(&s, Coordinate::Q(i))? == det_j_closed(&s, n, omega_t, i);
            closed &= ctx.det_j_dense(&s, Coordinate::P(i))? == det_j_closed_p(&s, n, omega_t, i);
        }
        Ok((field, closed))
    });
    let mut field_matches = 0;
    let mut closed_form_matches = 0;
    for r in results {
        let (f, c) = r?;
        field_matches += f as usize;
        closed_form_matches += c as usize;
    }
    let special_point_rank = ctx.jacobian(&special_point(n))?.rank();
    Ok(NambuReport {
        n,
        omega_t: omega_t.clone(),
        points: draws,
        field_matches,
        closed_form_matches,
        special_point_rank,
        pass: field_matches == draws && closed_form_matches == draws && special_point_rank == 2 * n - 1,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscreteNambuReport {
    pub n: usize,
    pub pairs: usize,
    pub zero_residual: usize,
    pub midpoint_identity: usize,
    pub pass: bool,
}

/// Discrete Nambu residual and midpoint identity on `(s, step(s))` pairs at `a = 1/2`.
pub fn verify_discrete_nambu(n: usize, draws: usize, seed: u64, exec: Exec) -> Result<DiscreteNambuReport> {
    let results = exec.map_range(0..draws, |k| -> Result<(bool, bool)> {
        let mut smp = Sampler::for_draw(seed, k).with_bound(12);
        let p = DiscretizationParams::uniform(n, smp.positive(), smp.positive(), qq(1, 2))?;
        // redraw until the midpoint is nonsingular
        loop {
            let s = nonsingular_point(&mut smp, n);
            let res = match discrete_nambu_residual(&p, &s) {
                Err(Error::DegenerateAngularMomentum) => continue,
                r => r?,
            };
            let sp = step(&s, &p)?;
            let (x, xp) = (s.point(), sp.point());
            let mut ident = true;
            for (i, start) in [(1, 1), (2, 2)] {
                for j in start..=n {
                    let f = NambuFn::Quad(invariant_f_with_weight(&p, i, j, &qq(1, 2))?);
                    ident &= dg_identity_residual(&f, &x, &xp, &DgScheme::Midpoint)?.is_zero();
                }
            }
            return Ok((res.iter().all(Q::is_zero), ident));
        }
    });
    let mut zero_residual = 0;
    let mut midpoint_identity = 0;
    for r in results {
        let (a, b) = r?;
        zero_residual += a as usize;
        midpoint_identity += b as usize;
    }
    Ok(DiscreteNambuReport {
        n,
        pairs: draws,
        zero_residual,
        midpoint_identity,
        pass: zero_residual == draws && midpoint_identity == draws,
    })
}
