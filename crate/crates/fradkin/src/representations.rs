//! Explicit matrix representations and an exact homomorphism checker.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra_core::{
    f_basis, lf_basis, radical_ordering, s_tilde, script_n, structure_tensor, AlgebraMode, BasisKind, Generator,
    StructureTensor,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ext::ExtScalar;
use crate::matrix::{rank_of_vectors, Matrix};
use crate::rational::{q, Q};

pub type CMatrix = Matrix<ExtScalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Su,
    U,
    Sl,
    Gl,
    Zero,
    Zeta2,
}

impl Target {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "su" => Ok(Target::Su),
            "u" => Ok(Target::U),
            "sl" => Ok(Target::Sl),
            "gl" => Ok(Target::Gl),
            "zero" => Ok(Target::Zero),
            "zeta2" => Ok(Target::Zeta2),
            other => Err(Error::InvalidParameter(format!("unknown target {other:?}"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Target::Su => "su",
            Target::U => "u",
            Target::Sl => "sl",
            Target::Gl => "gl",
            Target::Zero => "zero",
            Target::Zeta2 => "zeta2",
        };
        f.write_str(s)
    }
}

/// Images of the domain basis; `basis[k]` maps to `images[k]`.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub n: usize,
    pub mode: AlgebraMode,
    pub target: Target,
    pub basis: Vec<Generator>,
    pub images: Vec<CMatrix>,
    /// Real dimension of the target algebra.
    pub target_dim: usize,
}

impl MatrixRep {
    pub fn image(&self, g: &Generator) -> Option<&CMatrix> {
        self.basis.iter().position(|b| b == g).map(|k| &self.images[k])
    }

    pub fn matrix_size(&self) -> usize {
        self.images.first().map_or(0, |m| m.rows())
    }

    /// Image of a coordinate vector over `basis`.
    pub fn apply(&self, coords: &[Q]) -> CMatrix {
        let d = self.matrix_size();
        let mut m = CMatrix::zeros(d, d);
        for (c, img) in coords.iter().zip(&self.images) {
            if !c.is_zero() {
                m = m.add(&img.map(|x| x.scale(c)));
            }
        }
        m
    }
}

fn ext(a: Q, b: Q, c: Q, d: Q) -> ExtScalar {
    ExtScalar::new(a, b, c, d)
}

/// e_{i,j} with 1-based indices.
pub fn unit(size: usize, i: usize, j: usize) -> Matrix<Q> {
    let mut m = Matrix::zeros(size, size);
    m[(i - 1, j - 1)] = Q::one();
    m
}

fn unit_c(size: usize, i: usize, j: usize, c: ExtScalar) -> CMatrix {
    let mut m = CMatrix::zeros(size, size);
    m[(i - 1, j - 1)] = c;
    m
}

fn check_omega(w: &Q) -> Result<()> {
    if w <= &Q::zero() {
        return Err(Error::InvalidParameter(format!("omega must be positive, got {w}")));
    }
    Ok(())
}

fn su_image(n: usize, g: Generator, w: &Q) -> CMatrix {
    let z = Q::zero;
    match g {
        Generator::Fb(i, j) if i == j => {
            // 2 omega H_i with H_i = i (e_NN - e_ii)
            let c = ext(z(), z(), q(2) * w, z());
            unit_c(n, n, n, c.clone()).sub(&unit_c(n, i, i, c))
        }
        Generator::Fb(1, 2) => {
            let c = ext(z(), -w.clone(), z(), z());
            unit_c(n, 2, 1, c.clone()).sub(&unit_c(n, 1, 2, c))
        }
        Generator::Fb(2, 1) => {
            let c = ext(z(), z(), z(), w.clone());
            unit_c(n, 2, 1, c.clone()).add(&unit_c(n, 1, 2, c))
        }
        Generator::Fb(j, 2) => {
            let c = ext(z(), w.clone(), z(), z());
            unit_c(n, j, 2, c.clone()).sub(&unit_c(n, 2, j, c))
        }
        Generator::Fb(2, j) => {
            let c = ext(z(), z(), z(), w.clone());
            unit_c(n, j, 2, c.clone()).add(&unit_c(n, 2, j, c))
        }
        Generator::Fb(i, j) => {
            let a = ext(-w.clone(), z(), -w.clone(), z());
            let b = ext(w.clone(), z(), -w.clone(), z());
            unit_c(n, i, j, a).add(&unit_c(n, j, i, b))
        }
        Generator::R => CMatrix::identity(n).map(|x| x.clone() * ext(z(), z(), q(-2) * w, z())),
        _ => unreachable!("f basis only"),
    }
}

fn sl_image(n: usize, g: Generator, w: &Q) -> CMatrix {
    let k = q(-2) * w;
    let m = match g {
        // -2 omega (e_ii - e_NN)
        Generator::Fb(i, j) if i == j => unit(n, i, i).sub(&unit(n, n, n)).scale(&k),
        Generator::Fb(i, j) => unit(n, i, j).scale(&k),
        Generator::R => Matrix::identity(n).scale(&k),
        _ => unreachable!("f basis only"),
    };
    crate::matrix::to_ext(&m)
}

fn semisimple_basis(n: usize) -> Vec<Generator> {
    let mut b = f_basis(n);
    b.pop();
    b
}

pub fn rep_su(n: usize, omega: &Q) -> Result<MatrixRep> {
    check_omega(omega)?;
    let basis = semisimple_basis(n);
    let images = basis.iter().map(|g| su_image(n, *g, omega)).collect();
    Ok(MatrixRep {
        n,
        mode: AlgebraMode::Plus(omega.clone()),
        target: Target::Su,
        basis,
        images,
        target_dim: n * n - 1,
    })
}

/// Adds r_N -> -2 i omega Id.
pub fn rep_u(n: usize, omega: &Q) -> Result<MatrixRep> {
    check_omega(omega)?;
    let basis = f_basis(n);
    let images = basis.iter().map(|g| su_image(n, *g, omega)).collect();
    Ok(MatrixRep {
        n,
        mode: AlgebraMode::Plus(omega.clone()),
        target: Target::U,
        basis,
        images,
        target_dim: n * n,
    })
}

pub fn rep_sl(n: usize, omega: &Q) -> Result<MatrixRep> {
    check_omega(omega)?;
    let basis = semisimple_basis(n);
    let images = basis.iter().map(|g| sl_image(n, *g, omega)).collect();
    Ok(MatrixRep {
        n,
        mode: AlgebraMode::Minus(omega.clone()),
        target: Target::Sl,
        basis,
        images,
        target_dim: n * n - 1,
    })
}

/// Adds r_N -> -2 omega Id.
pub fn rep_gl(n: usize, omega: &Q) -> Result<MatrixRep> {
    check_omega(omega)?;
    let basis = f_basis(n);
    let images = basis.iter().map(|g| sl_image(n, *g, omega)).collect();
    Ok(MatrixRep {
        n,
        mode: AlgebraMode::Minus(omega.clone()),
        target: Target::Gl,
        basis,
        images,
        target_dim: n * n,
    })
}

/// Position of F_{k,l} in the radical ordering, 0-based.
pub fn radical_index(n: usize, k: usize, l: usize) -> usize {
    let g = Generator::f(k, l);
    radical_ordering(n).iter().position(|x| *x == g).expect("valid indices")
}

/// Action of L_{i,j} on the radical: column (k,l) holds the coordinates of [L_{i,j}, F_{k,l}].
pub fn tau(n: usize, i: usize, j: usize) -> Matrix<Q> {
    let rad = radical_ordering(n);
    Matrix::from_fn(rad.len(), rad.len(), |r, c| match (rad[r], rad[c]) {
        (Generator::F(a, b), Generator::F(k, l)) => q(s_tilde(a, b, i, j, k, l)),
        _ => unreachable!(),
    })
}

pub fn rep_zero(n: usize) -> Result<MatrixRep> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("N must be at least 2, got {n}")));
    }
    let dim = script_n(n) + 1;
    let basis = lf_basis(n);
    let images = basis
        .iter()
        .map(|g| {
            let m = match *g {
                Generator::L(i, j) => {
                    let t = tau(n, i, j);
                    Matrix::from_fn(dim, dim, |r, c| {
                        if r < dim - 1 && c < dim - 1 {
                            t[(r, c)].clone()
                        } else {
                            Q::zero()
                        }
                    })
                }
                Generator::F(k, l) => unit(dim, radical_index(n, k, l) + 1, dim),
                _ => unreachable!(),
            };
            crate::matrix::to_ext(&m)
        })
        .collect();
    Ok(MatrixRep {
        n,
        mode: AlgebraMode::Zero,
        target: Target::Zero,
        basis,
        images,
        target_dim: n * n,
    })
}

/// Generators of e_2 + R as 4x4 matrices: K1 = e_13, K2 = e_23, M = e_21 - e_12, H = e_44.
pub fn zeta2_target() -> [Matrix<Q>; 4] {
    [
        unit(4, 1, 3),
        unit(4, 2, 3),
        unit(4, 2, 1).sub(&unit(4, 1, 2)),
        unit(4, 4, 4),
    ]
}

pub fn rep_zeta2() -> MatrixRep {
    let [k1, k2, m, h] = zeta2_target();
    let basis = lf_basis(2);
    let images = basis
        .iter()
        .map(|g| {
            let x = match g {
                Generator::L(1, 2) => m.scale(&q(-2)),
                Generator::F(1, 1) => k1.sub(&k2).add(&h),
                Generator::F(2, 2) => k2.sub(&k1).add(&h),
                Generator::F(1, 2) => k1.add(&k2).neg(),
                _ => unreachable!(),
            };
            crate::matrix::to_ext(&x)
        })
        .collect();
    MatrixRep {
        n: 2,
        mode: AlgebraMode::Zero,
        target: Target::Zeta2,
        basis,
        images,
        target_dim: 4,
    }
}

pub fn build(target: Target, n: usize, omega: Option<&Q>) -> Result<MatrixRep> {
    let need = || omega.ok_or_else(|| Error::InvalidParameter(format!("target {target} needs omega")));
    match target {
        Target::Su => rep_su(n, need()?),
        Target::U => rep_u(n, need()?),
        Target::Sl => rep_sl(n, need()?),
        Target::Gl => rep_gl(n, need()?),
        Target::Zero => rep_zero(n),
        Target::Zeta2 if n == 2 => Ok(rep_zeta2()),
        Target::Zeta2 => Err(Error::Unsupported("zeta2 exists only for N = 2".into())),
    }
}

/// Builds the representation for `target` and checks it against the closed-form
/// tensor in the basis it is written in.
pub fn verify_target(target: Target, n: usize, omega: Option<&Q>, exec: Exec) -> Result<HomReport> {
    let rep = build(target, n, omega)?;
    let kind = match target {
        Target::Zero | Target::Zeta2 => BasisKind::LF,
        _ => BasisKind::F,
    };
    verify_homomorphism_with(&rep, &structure_tensor(n, &rep.mode, kind)?, exec)
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub x: String,
    pub y: String,
    pub residual: CMatrix,
}

impl Serialize for CMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[ExtScalar]> = (0..self.rows()).map(|i| self.row(i)).collect();
        rows.serialize(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomReport {
    pub target: Target,
    pub n: usize,
    pub pairs_checked: usize,
    pub first_violation: Option<Violation>,
    pub rank: usize,
    pub domain_dim: usize,
    pub target_dim: usize,
    pub injective: bool,
    pub surjective: bool,
    pub antihermitian: bool,
    pub traceless: bool,
    pub real: bool,
    pub pass: bool,
}

/// Checks `[Mat(x), Mat(y)] = Mat([x, y])` on all basis pairs, plus rank and
/// membership properties of the images.
pub fn verify_homomorphism(rep: &MatrixRep, t: &StructureTensor) -> Result<HomReport> {
    verify_homomorphism_with(rep, t, Exec::default())
}

pub fn verify_homomorphism_with(rep: &MatrixRep, t: &StructureTensor, exec: Exec) -> Result<HomReport> {
    let pos: Vec<usize> = rep
        .basis
        .iter()
        .map(|g| {
            t.position(g)
                .ok_or_else(|| Error::Unsupported(format!("{g} is not in the tensor basis")))
        })
        .collect::<Result<_>>()?;
    let d = rep.basis.len();
    let violations = exec.map_range(0..d, |a| {
        for b in 0..d {
            let lhs = rep.images[a].commutator(&rep.images[b]);
            let mut rhs = CMatrix::zeros(lhs.rows(), lhs.cols());
            for (c, v) in t.bracket(pos[a], pos[b]) {
                let Some(k) = pos.iter().position(|p| p == c) else {
                    return Some(Violation {
                        x: rep.basis[a].to_string(),
                        y: rep.basis[b].to_string(),
                        residual: lhs,
                    });
                };
                rhs = rhs.add(&rep.images[k].map(|x| x.scale(v)));
            }
            let res = lhs.sub(&rhs);
            if !res.is_zero() {
                return Some(Violation {
                    x: rep.basis[a].to_string(),
                    y: rep.basis[b].to_string(),
                    residual: res,
                });
            }
        }
        None
    });
    let first_violation = violations.into_iter().flatten().next();
    let rank = rank_of_vectors(&rep.images.iter().map(|m| m.flatten_rational()).collect::<Vec<_>>());
    let antihermitian = rep.images.iter().all(|m| m.is_antihermitian());
    let traceless = rep.images.iter().all(|m| m.trace().is_zero());
    let real = rep.images.iter().all(|m| m.is_real());
    let membership = match rep.target {
        Target::Su => antihermitian && traceless,
        Target::U => antihermitian,
        Target::Sl => real && traceless,
        Target::Gl | Target::Zero | Target::Zeta2 => real,
    };
    let injective = rank == d;
    let surjective = rank == rep.target_dim;
    Ok(HomReport {
        target: rep.target,
        n: rep.n,
        pairs_checked: d * d,
        pass: first_violation.is_none() && injective && surjective && membership,
        first_violation,
        rank,
        domain_dim: d,
        target_dim: rep.target_dim,
        injective,
        surjective,
        antihermitian,
        traceless,
        real,
    })
}

/// Basis of su_N: H_k = i(e_NN - e_kk), then M^a_k = e_{k+a-1,k} - e_{k,k+a-1} and
/// mu^a_k = i(e_{k+a-1,k} + e_{k,k+a-1}), ordered by a then k.
pub fn su_matrix_basis(n: usize) -> Vec<(String, CMatrix)> {
    let i = ExtScalar::i();
    let mut out = Vec::new();
    for k in 1..n {
        let m = unit_c(n, n, n, i.clone()).sub(&unit_c(n, k, k, i.clone()));
        out.push((format!("H{k}"), m));
    }
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|a| (1..=n + 1 - a).map(move |k| (a, k))).collect();
    for &(a, k) in &pairs {
        let r = k + a - 1;
        let m = crate::matrix::to_ext(&unit(n, r, k).sub(&unit(n, k, r)));
        out.push((format!("M{a}_{k}"), m));
    }
    for &(a, k) in &pairs {
        let r = k + a - 1;
        let m = unit_c(n, r, k, i.clone()).add(&unit_c(n, k, r, i.clone()));
        out.push((format!("mu{a}_{k}"), m));
    }
    out
}

/// Basis of sl_N: H_k = e_NN - e_kk, then e_{i,j} for i < j, then e_{i,j} for i > j.
pub fn sl_matrix_basis(n: usize) -> Vec<(String, CMatrix)> {
    let mut out = Vec::new();
    for k in 1..n {
        out.push((
            format!("H{k}"),
            crate::matrix::to_ext(&unit(n, n, n).sub(&unit(n, k, k))),
        ));
    }
    for upper in [true, false] {
        for i in 1..=n {
            for j in 1..=n {
                if (upper && i < j) || (!upper && i > j) {
                    out.push((format!("e{i}{j}"), crate::matrix::to_ext(&unit(n, i, j))));
                }
            }
        }
    }
    out
}
