//! A two-parameter family of one-step maps for the isotropic oscillator
//! `q' = p, p' = -w^2 q`, acting independently on each degree of freedom.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra_core::{change_basis, f_basis, f_transition, lf_basis, lf_tensor_with_alpha, structure_tensor};
use crate::algebra_core::{AlgebraMode, BasisKind, Generator, StructureTensor};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::Matrix;
use crate::rational::{q, qq, sqrt_exact, to_f64, Q};
use crate::symplectic_oracle::{bracket_table, pi, qi, QuadraticObservable};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscretizationParams {
    pub n: usize,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub h: Q,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub omega_t: Q,
    #[serde(serialize_with = "crate::rational::ser_q_vec")]
    pub a: Vec<Q>,
    #[serde(serialize_with = "crate::rational::ser_q_vec")]
    pub b: Vec<Q>,
}

impl DiscretizationParams {
    pub fn new(h: Q, omega_t: Q, a: Vec<Q>, b: Vec<Q>) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len(),
            });
        }
        if !h.is_positive() {
            return Err(Error::InvalidParameter(format!("step h must be positive, got {h}")));
        }
        if omega_t.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "omega must be non-negative, got {omega_t}"
            )));
        }
        let p = DiscretizationParams {
            n: a.len(),
            h,
            omega_t,
            a,
            b,
        };
        for i in 0..p.n {
            if p.delta(i).is_zero() {
                return Err(Error::SingularStep { index: i + 1 });
            }
        }
        Ok(p)
    }

    /// All weights equal to `a`, with b = a.
    pub fn uniform(n: usize, h: Q, omega_t: Q, a: Q) -> Result<Self> {
        Self::new(h, omega_t, vec![a.clone(); n], vec![a; n])
    }

    fn hw2(&self) -> Q {
        &self.h * &self.h * &self.omega_t * &self.omega_t
    }

    /// Delta_i = 1 + h^2 w^2 (1 - a_i) b_i for 0-based i.
    pub fn delta(&self, i: usize) -> Q {
        Q::one() + self.hw2() * (Q::one() - &self.a[i]) * &self.b[i]
    }

    /// The common weight when all a_i agree and b = a.
    pub fn uniform_weight(&self) -> Result<Q> {
        let a = &self.a[0];
        if self.a.iter().any(|x| x != a) || self.b != self.a {
            return Err(Error::NonUniformWeights("need a_i all equal and b = a".into()));
        }
        Ok(a.clone())
    }

    /// Per-dof block `[[A, B], [C, D]]` with `(q', p') = block (q, p)`, 0-based i.
    pub fn block(&self, i: usize) -> [[Q; 2]; 2] {
        let d = self.delta(i);
        let hw2 = self.hw2();
        let (a, b) = (&self.a[i], &self.b[i]);
        let w2 = &self.omega_t * &self.omega_t;
        [
            [(Q::one() - &hw2 * (Q::one() - a) * (Q::one() - b)) / &d, &self.h / &d],
            [-(&self.h * w2) / &d, (Q::one() - hw2 * a * b) / &d],
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhaseState {
    #[serde(serialize_with = "crate::rational::ser_q_vec")]
    pub q: Vec<Q>,
    #[serde(serialize_with = "crate::rational::ser_q_vec")]
    pub p: Vec<Q>,
}

impl PhaseState {
    pub fn new(q: Vec<Q>, p: Vec<Q>) -> Result<Self> {
        if q.len() != p.len() {
            return Err(Error::DimensionMismatch {
                expected: q.len(),
                found: p.len(),
            });
        }
        Ok(PhaseState { q, p })
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    /// `(q, p)` concatenated.
    pub fn point(&self) -> Vec<Q> {
        self.q.iter().chain(&self.p).cloned().collect()
    }

    pub fn from_point(x: &[Q]) -> Self {
        let n = x.len() / 2;
        PhaseState {
            q: x[..n].to_vec(),
            p: x[n..].to_vec(),
        }
    }

    pub fn to_f64(&self) -> PhaseStateF64 {
        PhaseStateF64 {
            q: self.q.iter().map(to_f64).collect(),
            p: self.p.iter().map(to_f64).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhaseStateF64 {
    pub q: Vec<f64>,
    pub p: Vec<f64>,
}

fn check_state(s: &PhaseState, p: &DiscretizationParams) -> Result<()> {
    if s.n() != p.n {
        return Err(Error::DimensionMismatch {
            expected: p.n,
            found: s.n(),
        });
    }
    Ok(())
}

pub fn step(s: &PhaseState, p: &DiscretizationParams) -> Result<PhaseState> {
    check_state(s, p)?;
    let mut out = PhaseState {
        q: Vec::with_capacity(p.n),
        p: Vec::with_capacity(p.n),
    };
    for i in 0..p.n {
        let [[a, b], [c, d]] = p.block(i);
        out.q.push(&a * &s.q[i] + &b * &s.p[i]);
        out.p.push(&c * &s.q[i] + &d * &s.p[i]);
    }
    Ok(out)
}

pub fn step_f64(s: &PhaseStateF64, p: &DiscretizationParams) -> Result<PhaseStateF64> {
    if s.q.len() != p.n || s.p.len() != p.n {
        return Err(Error::DimensionMismatch {
            expected: p.n,
            found: s.q.len(),
        });
    }
    let mut out = PhaseStateF64 {
        q: Vec::with_capacity(p.n),
        p: Vec::with_capacity(p.n),
    };
    for i in 0..p.n {
        let [[a, b], [c, d]] = p.block(i).map(|r| r.map(|x| to_f64(&x)));
        out.q.push(a * s.q[i] + b * s.p[i]);
        out.p.push(c * s.q[i] + d * s.p[i]);
    }
    Ok(out)
}

/// The 2N x 2N matrix of the step in `(q, p)` coordinates.
pub fn step_matrix(p: &DiscretizationParams) -> Matrix<Q> {
    let n = p.n;
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 1..=n {
        let [[a, b], [c, d]] = p.block(i - 1);
        m[(qi(i), qi(i))] = a;
        m[(qi(i), pi(n, i))] = b;
        m[(pi(n, i), qi(i))] = c;
        m[(pi(n, i), pi(n, i))] = d;
    }
    m
}

/// `{q_i', p_i'} - 1` for every degree of freedom.
pub fn symplectic_defect(p: &DiscretizationParams) -> Vec<Q> {
    (0..p.n)
        .map(|i| {
            let [[a, b], [c, d]] = p.block(i);
            a * d - b * c - Q::one()
        })
        .collect()
}

/// `p_i p_j + ((2a - 1)/2) h w^2 (q_i p_j + q_j p_i) + w^2 q_i q_j` for an explicit weight.
pub fn invariant_f_with_weight(p: &DiscretizationParams, i: usize, j: usize, a: &Q) -> Result<QuadraticObservable> {
    let n = p.n;
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange(format!("F({i},{j}) for N = {n}")));
    }
    let w2 = &p.omega_t * &p.omega_t;
    let cross = (q(2) * a - q(1)) / q(2) * &p.h * &w2;
    let mut o = QuadraticObservable::zero(n);
    o.add_monomial(pi(n, i), pi(n, j), &q(1));
    o.add_monomial(qi(i), pi(n, j), &cross);
    o.add_monomial(qi(j), pi(n, i), &cross);
    o.add_monomial(qi(i), qi(j), &w2);
    Ok(o)
}

/// Uses a_i on the diagonal; off the diagonal the weights must be uniform.
pub fn invariant_f(p: &DiscretizationParams, i: usize, j: usize) -> Result<QuadraticObservable> {
    if i == 0 || i > p.n {
        return Err(Error::IndexOutOfRange(format!("F({i},{j}) for N = {}", p.n)));
    }
    if i != j && p.a.iter().any(|x| x != &p.a[0]) {
        return Err(Error::NonUniformWeights(format!(
            "F({i},{j}) needs a_i = a_j for all weights"
        )));
    }
    invariant_f_with_weight(p, i, j, &p.a[i - 1])
}

pub fn invariant_l(n: usize, i: usize, j: usize) -> Result<QuadraticObservable> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange(format!("L({i},{j}) for N = {n}")));
    }
    let mut o = QuadraticObservable::zero(n);
    o.add_monomial(qi(i), pi(n, j), &q(1));
    o.add_monomial(qi(j), pi(n, i), &q(-1));
    Ok(o)
}

/// `f o step`, as the quadratic form `M^T S M`.
pub fn pullback(obs: &QuadraticObservable, p: &DiscretizationParams) -> Result<QuadraticObservable> {
    if obs.n != p.n {
        return Err(Error::DimensionMismatch {
            expected: p.n,
            found: obs.n,
        });
    }
    let m = step_matrix(p);
    QuadraticObservable::new(p.n, m.transpose().matmul(obs.matrix()).matmul(&m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    #[serde(rename = "plus")]
    PlusLike,
    #[serde(rename = "minus")]
    MinusLike,
    #[serde(rename = "zero")]
    ZeroLike,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::PlusLike => "plus",
            Regime::MinusLike => "minus",
            Regime::ZeroLike => "zero",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KappaRegime {
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub kappa: Q,
    pub regime: Regime,
}

/// `kappa = w^2 [1 - h^2 w^2 (a - 1/2)^2]`.
pub fn kappa(p: &DiscretizationParams) -> Result<KappaRegime> {
    let a = p.uniform_weight()?;
    let d = a - qq(1, 2);
    let kappa = &p.omega_t * &p.omega_t * (Q::one() - p.hw2() * &d * &d);
    let regime = if kappa.is_positive() {
        Regime::PlusLike
    } else if kappa.is_negative() {
        Regime::MinusLike
    } else {
        Regime::ZeroLike
    };
    Ok(KappaRegime { kappa, regime })
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub kappa: KappaRegime,
    pub lf_mismatches: usize,
    /// Set when |kappa| is the square of a rational, so the f basis is exact.
    #[serde(serialize_with = "crate::rational::ser_q_opt")]
    pub omega_eff: Option<Q>,
    pub f_mismatches: Option<usize>,
    pub pass: bool,
}

/// Brute-force brackets of the conserved quadratics against the constants of A_N(kappa).
pub fn symmetry_tensor(p: &DiscretizationParams, exec: Exec) -> Result<StructureTensor> {
    p.uniform_weight()?;
    let n = p.n;
    let basis = lf_basis(n);
    let obs = basis
        .iter()
        .map(|g| match *g {
            Generator::L(i, j) => invariant_l(n, i, j),
            Generator::F(i, j) => invariant_f(p, i, j),
            _ => unreachable!(),
        })
        .collect::<Result<Vec<_>>>()?;
    let t = bracket_table(&obs, exec)?;
    Ok(StructureTensor::from_dense(
        n,
        kappa(p)?.kappa,
        None,
        BasisKind::LF,
        basis,
        t,
    ))
}

pub fn verify_symmetry_algebra(p: &DiscretizationParams) -> Result<SymmetryReport> {
    let k = kappa(p)?;
    let brute = symmetry_tensor(p, Exec::default())?;
    let lf_mismatches = brute.mismatches(&lf_tensor_with_alpha(p.n, &k.kappa));
    let omega_eff = sqrt_exact(&k.kappa.abs()).filter(|w| w.is_positive());
    let f_mismatches = match &omega_eff {
        Some(w) if p.n >= 2 => {
            let mode = if k.kappa.is_positive() {
                AlgebraMode::Plus(w.clone())
            } else {
                AlgebraMode::Minus(w.clone())
            };
            let conj = change_basis(&brute, &f_transition(p.n, w), f_basis(p.n), BasisKind::F)?;
            Some(conj.mismatches(&structure_tensor(p.n, &mode, BasisKind::F)?))
        }
        _ => None,
    };
    Ok(SymmetryReport {
        pass: lf_mismatches == 0 && f_mismatches.unwrap_or(0) == 0,
        kappa: k,
        lf_mismatches,
        omega_eff,
        f_mismatches,
    })
}

/// `C = [2 - h^2 w^2 (2a^2 - 2a + 1)] / [1 + h^2 w^2 (1 - a) a]`.
pub fn second_difference_coeff(p: &DiscretizationParams) -> Result<Q> {
    let a = p.uniform_weight()?;
    let hw2 = p.hw2();
    let num = q(2) - &hw2 * (q(2) * &a * &a - q(2) * &a + q(1));
    Ok(num / (q(1) + hw2 * (q(1) - &a) * &a))
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub coeff: Q,
    pub steps: usize,
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub max_residual: Q,
    /// Discrete frequency when the radicand is positive.
    pub frequency: Option<f64>,
}

/// Max over the orbit of |q(t+h) - C q(t) + q(t-h)|, computed exactly.
pub fn orbit_residual(p: &DiscretizationParams, s0: &PhaseState, steps: usize) -> Result<OrbitReport> {
    let c = second_difference_coeff(p)?;
    let a = p.uniform_weight()?;
    let mut prev = s0.clone();
    let mut cur = step(&prev, p)?;
    let mut worst = Q::zero();
    for _ in 1..steps {
        let next = step(&cur, p)?;
        for i in 0..p.n {
            let r = (&next.q[i] - &c * &cur.q[i] + &prev.q[i]).abs();
            if r > worst {
                worst = r;
            }
        }
        prev = cur;
        cur = next;
    }
    let d = a - qq(1, 2);
    let radicand = q(1) - p.hw2() * &d * &d;
    let frequency = radicand
        .is_positive()
        .then(|| to_f64(&p.omega_t) * to_f64(&radicand).sqrt());
    Ok(OrbitReport {
        coeff: c,
        steps,
        max_residual: worst,
        frequency,
    })
}

/// Solves `(x' - x)/h = c1 A x' + c0 A x` per degree of freedom, A = [[0, 1], [-w^2, 0]].
fn implicit_linear(s: &PhaseState, h: &Q, w: &Q, c1: &Q, c0: &Q) -> Result<PhaseState> {
    let w2 = w * w;
    let a = Matrix::from_rows(vec![vec![q(0), q(1)], vec![-w2, q(0)]]);
    let id = Matrix::identity(2);
    let lhs = id.sub(&a.scale(&(h * c1)));
    let rhs = id.add(&a.scale(&(h * c0)));
    let m = lhs.inverse()?.matmul(&rhs);
    let mut out = PhaseState {
        q: Vec::new(),
        p: Vec::new(),
    };
    for i in 0..s.n() {
        let v = m.mul_vec(&[s.q[i].clone(), s.p[i].clone()]);
        out.q.push(v[0].clone());
        out.p.push(v[1].clone());
    }
    Ok(out)
}

/// `(x' - x)/h = l f(x') + (1 - 2l) f((x + x')/2) + l f(x)`.
pub fn rk_step(s: &PhaseState, h: &Q, omega_t: &Q, lambda: &Q) -> Result<PhaseState> {
    let mid = (q(1) - q(2) * lambda) / q(2);
    let c = lambda + &mid;
    implicit_linear(s, h, omega_t, &c, &c)
}

/// `(x' - x)/h = -f(x)/2 + 2 f((x + x')/2) - f(x')/2`, linear field.
pub fn khk_step(s: &PhaseState, h: &Q, omega_t: &Q) -> Result<PhaseState> {
    let c1 = q(1) - qq(1, 2);
    let c0 = q(1) - qq(1, 2);
    implicit_linear(s, h, omega_t, &c1, &c0)
}

pub fn trajectory(p: &DiscretizationParams, s0: &PhaseState, steps: usize) -> Result<Vec<PhaseState>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(s0.clone());
    for _ in 0..steps {
        let next = step(out.last().expect("nonempty"), p)?;
        out.push(next);
    }
    Ok(out)
}

/// Labels and observables F(i,j) (i <= j, weight a_i) then L(i,j) (i < j).
pub fn invariant_set(p: &DiscretizationParams) -> Result<Vec<(String, QuadraticObservable)>> {
    let n = p.n;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            out.push((format!("F{i}{j}"), invariant_f_with_weight(p, i, j, &p.a[i - 1])?));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((format!("L{i}{j}"), invariant_l(n, i, j)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::lf_tensor_with_alpha;

    fn st(qv: &[i64], pv: &[i64]) -> PhaseState {
        PhaseState::new(qv.iter().map(|&x| q(x)).collect(), pv.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn free_flight_and_fixed_point() {
        let p = DiscretizationParams::uniform(2, qq(1, 3), q(0), qq(1, 4)).unwrap();
        let s = st(&[1, 2], &[3, -1]);
        let t = step(&s, &p).unwrap();
        assert_eq!(t.q, vec![q(1) + qq(1, 1), q(2) - qq(1, 3)]);
        assert_eq!(t.p, s.p);
        assert_eq!(step(&st(&[0, 0], &[0, 0]), &p).unwrap(), st(&[0, 0], &[0, 0]));
    }

    #[test]
    fn midpoint_instance() {
        let p = DiscretizationParams::uniform(1, q(1), q(2), qq(1, 2)).unwrap();
        assert_eq!(p.delta(0), q(2));
        let s = st(&[3], &[5]);
        let t = step(&s, &p).unwrap();
        assert_eq!(t.q, vec![qq(5, 2)]);
        // p' = -[h w^2 (h a b p + q) - p] / Delta
        assert_eq!(t.p, vec![-(q(4) * (qq(5, 4) + q(3)) - q(5)) / q(2)]);
        assert_eq!(khk_step(&s, &q(1), &q(2)).unwrap(), t);
    }

    #[test]
    fn singular_delta() {
        // 1 + h^2 w^2 (1 - a) b = 0 at h = w = 1, a = 2, b = 1
        let e = DiscretizationParams::new(q(1), q(1), vec![q(2)], vec![q(1)]).unwrap_err();
        assert_eq!(e, Error::SingularStep { index: 1 });
    }

    #[test]
    fn defects() {
        let p = DiscretizationParams::new(q(1), q(1), vec![q(1)], vec![q(0)]).unwrap();
        assert_eq!(symplectic_defect(&p), vec![q(1)]);
        let p = DiscretizationParams::new(qq(2, 3), qq(5, 4), vec![qq(1, 3), q(0)], vec![qq(1, 3), q(0)]).unwrap();
        assert!(symplectic_defect(&p).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn invariants_and_pullback() {
        let p = DiscretizationParams::uniform(3, qq(1, 2), qq(3, 2), qq(1, 5)).unwrap();
        for (_, o) in invariant_set(&p).unwrap() {
            assert_eq!(pullback(&o, &p).unwrap(), o);
        }
        let mixed = DiscretizationParams::new(q(1), q(1), vec![q(1), q(0)], vec![q(1), q(0)]).unwrap();
        let l = invariant_l(2, 1, 2).unwrap();
        assert_ne!(pullback(&l, &mixed).unwrap(), l);
        assert!(pullback(&QuadraticObservable::zero(2), &mixed).unwrap().is_zero());
    }

    #[test]
    fn half_weight_gives_continuous_tensor() {
        let p = DiscretizationParams::uniform(2, qq(7, 3), qq(2, 5), qq(1, 2)).unwrap();
        let mode = AlgebraMode::Plus(qq(2, 5));
        for (i, j) in [(1, 1), (1, 2), (2, 2)] {
            let f = crate::symplectic_oracle::realize_generator(Generator::F(i, j), &mode, 2).unwrap();
            assert_eq!(invariant_f(&p, i, j).unwrap(), f);
        }
        let k = kappa(&p).unwrap();
        assert_eq!((k.kappa, k.regime), (qq(4, 25), Regime::PlusLike));
    }

    #[test]
    fn kappa_regimes() {
        let k = |a: Q| kappa(&DiscretizationParams::uniform(2, q(1), q(1), a).unwrap()).unwrap();
        assert_eq!(
            k(qq(3, 2)),
            KappaRegime {
                kappa: q(0),
                regime: Regime::ZeroLike
            }
        );
        assert_eq!(
            k(q(2)),
            KappaRegime {
                kappa: qq(-5, 4),
                regime: Regime::MinusLike
            }
        );
        let mixed = DiscretizationParams::new(q(1), q(1), vec![q(1), q(0)], vec![q(1), q(0)]).unwrap();
        assert!(kappa(&mixed).is_err());
    }

    #[test]
    fn symmetry_algebra() {
        for (n, a) in [(2, qq(1, 2)), (3, qq(3, 2)), (2, q(2))] {
            let p = DiscretizationParams::uniform(n, q(1), q(1), a).unwrap();
            let r = verify_symmetry_algebra(&p).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let p = DiscretizationParams::uniform(3, q(1), q(1), qq(3, 2)).unwrap();
        let t = symmetry_tensor(&p, Exec::Sequential).unwrap();
        assert_eq!(t.mismatches(&lf_tensor_with_alpha(3, &q(0))), 0);
    }

    #[test]
    fn second_difference() {
        let p = DiscretizationParams::uniform(1, q(1), q(1), qq(1, 2)).unwrap();
        assert_eq!(second_difference_coeff(&p).unwrap(), qq(6, 5));
        let r = orbit_residual(&p, &st(&[1], &[2]), 200).unwrap();
        assert!(r.max_residual.is_zero());
        let p = DiscretizationParams::uniform(1, q(1), q(1), qq(3, 2)).unwrap();
        assert!(orbit_residual(&p, &st(&[1], &[2]), 100).unwrap().max_residual.is_zero());
        let p = DiscretizationParams::uniform(2, q(1), q(0), qq(1, 3)).unwrap();
        assert_eq!(second_difference_coeff(&p).unwrap(), q(2));
        assert!(orbit_residual(&p, &st(&[1, 0], &[2, 1]), 50)
            .unwrap()
            .max_residual
            .is_zero());
    }

    #[test]
    fn scheme_collapse() {
        let (h, w) = (qq(3, 7), qq(5, 2));
        let s = st(&[1, -2], &[4, 3]);
        let p = DiscretizationParams::uniform(2, h.clone(), w.clone(), qq(1, 2)).unwrap();
        let target = step(&s, &p).unwrap();
        for l in [q(0), qq(1, 4), q(1)] {
            assert_eq!(rk_step(&s, &h, &w, &l).unwrap(), target);
        }
        assert_eq!(khk_step(&s, &h, &w).unwrap(), target);
        let free = rk_step(&s, &h, &q(0), &q(0)).unwrap();
        assert_eq!(free.q[0], q(1) + &h * q(4));
    }

    #[test]
    fn float_step_tracks_exact() {
        let p = DiscretizationParams::uniform(2, qq(1, 10), q(1), qq(1, 3)).unwrap();
        let s = st(&[1, 2], &[0, 1]);
        let e = step(&s, &p).unwrap().to_f64();
        let f = step_f64(&s.to_f64(), &p).unwrap();
        for (x, y) in e.q.iter().zip(&f.q) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
