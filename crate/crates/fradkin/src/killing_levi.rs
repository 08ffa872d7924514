//! Killing forms, spectra, signatures and Levi decompositions.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra_core::{lf_basis, structure_tensor, AlgebraMode, BasisKind, Generator, StructureTensor};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::Matrix;
use crate::rational::{pow, q, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct KillingMatrix {
    pub n: usize,
    pub basis: Vec<Generator>,
    pub k: Matrix<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub p: usize,
    pub n: usize,
    pub z: usize,
}

/// `K_{ab} = tr(ad_a ad_b)`.
pub fn killing_bruteforce(t: &StructureTensor) -> KillingMatrix {
    killing_bruteforce_with(t, Exec::default())
}

pub fn killing_bruteforce_with(t: &StructureTensor, exec: Exec) -> KillingMatrix {
    let d = t.dim();
    let ads: Vec<Matrix<Q>> = (0..d).map(|a| t.ad(a)).collect();
    let rows = exec.map_range(0..d, |a| {
        (0..d)
            .map(|b| {
                let mut s = Q::zero();
                for i in 0..d {
                    for j in 0..d {
                        let x = &ads[a][(i, j)];
                        if !x.is_zero() {
                            let y = &ads[b][(j, i)];
                            if !y.is_zero() {
                                s += x * y;
                            }
                        }
                    }
                }
                s
            })
            .collect::<Vec<Q>>()
    });
    KillingMatrix {
        n: t.n,
        basis: t.basis.clone(),
        k: Matrix::from_rows(rows),
    }
}

fn semisimple_len(n: usize) -> usize {
    n * n - 1
}

/// Brute-force Killing matrix on the semisimple factor: f basis without r_N.
pub fn killing_semisimple(n: usize, mode: &AlgebraMode) -> Result<KillingMatrix> {
    let t = structure_tensor(n, mode, BasisKind::F)?;
    let full = killing_bruteforce(&t);
    let idx: Vec<usize> = (0..semisimple_len(n)).collect();
    Ok(KillingMatrix {
        n,
        basis: full.basis[..idx.len()].to_vec(),
        k: full.k.select(&idx, &idx),
    })
}

/// Closed form on the f basis without r_N. The diagonal block is
/// `sign 8 N omega^2 (delta_{ik} + 1)`; off-diagonal generators pair with themselves
/// (plus) or with their transpose (minus).
pub fn killing_closedform(n: usize, mode: &AlgebraMode) -> Result<KillingMatrix> {
    mode.validate()?;
    let (w, plus) = match mode {
        AlgebraMode::Plus(w) => (w, true),
        AlgebraMode::Minus(w) => (w, false),
        AlgebraMode::Zero => return Err(Error::ZeroModeUnsupported),
    };
    let unit = q(8 * n as i64) * w * w * q(if plus { -1 } else { 1 });
    let basis: Vec<Generator> = crate::algebra_core::f_basis(n)[..semisimple_len(n)].to_vec();
    let k = Matrix::from_fn(basis.len(), basis.len(), |a, b| match (basis[a], basis[b]) {
        (Generator::Fb(i, j), Generator::Fb(k, l)) => {
            let c = if i == j && k == l {
                1 + i64::from(i == k)
            } else if i != j && k != l {
                let hit = if plus { i == k && j == l } else { i == l && j == k };
                i64::from(hit)
            } else {
                0
            };
            &unit * q(c)
        }
        _ => Q::zero(),
    });
    Ok(KillingMatrix { n, basis, k })
}

/// `I + 1 1^T` of size N-1, the block shared by both closed forms.
pub fn kappa_hat(n: usize) -> Matrix<Q> {
    Matrix::from_fn(n - 1, n - 1, |i, j| q(1 + i64::from(i == j)))
}

pub fn killing_determinant(k: &KillingMatrix) -> Q {
    k.k.det()
}

pub fn expected_determinant(n: usize, mode: &AlgebraMode) -> Result<Q> {
    mode.validate()?;
    let nn = (n * n) as i32;
    let big_n = q(n as i64);
    match mode {
        AlgebraMode::Plus(w) => Ok(pow(&(q(-8) * w * w), nn - 1) * pow(&big_n, nn)),
        AlgebraMode::Minus(w) => {
            let sign = if (n * (n - 1) / 2).is_multiple_of(2) {
                q(1)
            } else {
                q(-1)
            };
            Ok(sign * pow(&big_n, nn) * pow(&(q(8) * w * w), nn - 1))
        }
        AlgebraMode::Zero => Ok(Q::zero()),
    }
}

/// Multiplicity of `lambda` as an eigenvalue of a symmetric rational matrix.
pub fn eigen_multiplicity(k: &Matrix<Q>, lambda: &Q) -> usize {
    let d = k.rows();
    let shifted = k.sub(&Matrix::identity(d).scale(lambda));
    d - shifted.rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct Eigen {
    #[serde(serialize_with = "crate::rational::ser_q")]
    pub value: Q,
    pub expected: Option<usize>,
    pub found: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub mode: String,
    pub dim: usize,
    pub eigenvalues: Vec<Eigen>,
    pub pass: bool,
    pub note: Option<String>,
}

pub fn spectrum_verify(n: usize, mode: &AlgebraMode) -> Result<SpectrumReport> {
    let k = killing_semisimple(n, mode)?;
    let w2 = {
        let w = mode.omega().ok_or(Error::ZeroModeUnsupported)?;
        w * w
    };
    let nq = q(n as i64);
    let dim = semisimple_len(n);
    let big = &nq * &nq * q(8) * &w2;
    let small = &nq * q(8) * &w2;
    let (values, expected): (Vec<Q>, Vec<Option<usize>>) = match mode {
        AlgebraMode::Plus(_) => (vec![-big, -small], vec![Some(1), Some(n * n - 2)]),
        _ => (
            vec![big, small.clone(), -small],
            vec![Some(1), Some((n * n + n - 4) / 2), Some(n * (n - 1) / 2)],
        ),
    };
    let eigenvalues: Vec<Eigen> = values
        .into_iter()
        .zip(expected)
        .map(|(value, expected)| {
            let found = eigen_multiplicity(&k.k, &value);
            Eigen { value, expected, found }
        })
        .collect();
    let total: usize = eigenvalues.iter().map(|e| e.found).sum();
    let values_present = eigenvalues.iter().all(|e| e.found > 0);
    let counts_match = eigenvalues.iter().all(|e| e.expected.is_none_or(|x| x == e.found));
    let note = match mode {
        AlgebraMode::Minus(_) => {
            // grouping 8N w^2 for indices 2..N(N-1)/2 and -8N w^2 for the rest
            let claimed_pos = n * (n - 1) / 2 - 1;
            let claimed_neg = dim - 1 - claimed_pos;
            let (pos, neg) = (eigenvalues[1].found, eigenvalues[2].found);
            (pos != claimed_pos || neg != claimed_neg).then(|| {
                format!(
                    "measured multiplicities +8Nw^2 x{pos}, -8Nw^2 x{neg} differ from the index-range grouping \
                     (+ x{claimed_pos}, - x{claimed_neg})"
                )
            })
        }
        _ => None,
    };
    Ok(SpectrumReport {
        n,
        mode: mode.label(),
        dim,
        pass: values_present && counts_match && total == dim,
        eigenvalues,
        note,
    })
}

pub fn signature_of(k: &Matrix<Q>) -> Signature {
    let piv = k.congruence_pivots();
    Signature {
        p: piv.iter().filter(|x| x.is_positive()).count(),
        n: piv.iter().filter(|x| x.is_negative()).count(),
        z: piv.iter().filter(|x| x.is_zero()).count(),
    }
}

/// Semisimple factor for plus/minus, the full LF algebra for zero mode.
pub fn signature(n: usize, mode: &AlgebraMode) -> Result<Signature> {
    match mode {
        AlgebraMode::Zero => {
            let t = structure_tensor(n, mode, BasisKind::LF)?;
            Ok(signature_of(&killing_bruteforce(&t).k))
        }
        _ => Ok(signature_of(&killing_semisimple(n, mode)?.k)),
    }
}

pub fn expected_signature(n: usize, mode: &AlgebraMode) -> Signature {
    match mode {
        AlgebraMode::Plus(_) => Signature {
            p: 0,
            n: n * n - 1,
            z: 0,
        },
        AlgebraMode::Minus(_) => Signature {
            p: n * (n + 1) / 2 - 1,
            n: n * (n - 1) / 2,
            z: 0,
        },
        AlgebraMode::Zero => Signature {
            p: 0,
            n: n * (n - 1) / 2,
            z: n * (n + 1) / 2,
        },
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviReport {
    pub n: usize,
    pub mode: String,
    pub levi_factor: Vec<String>,
    pub radical: Vec<String>,
    pub s_closed: bool,
    pub r_ideal: bool,
    pub r_abelian: bool,
    pub killing_nondegenerate_on_s: bool,
    pub s_intrinsically_semisimple: bool,
    pub pass: bool,
}

fn spans(t: &StructureTensor, x: usize, y: usize, set: &[usize]) -> bool {
    t.bracket(x, y).iter().all(|(c, _)| set.contains(c))
}

pub fn levi_verify(n: usize, mode: &AlgebraMode) -> Result<LeviReport> {
    let (t, s, r): (StructureTensor, Vec<usize>, Vec<usize>) = match mode {
        AlgebraMode::Zero => {
            let t = structure_tensor(n, mode, BasisKind::LF)?;
            let l = n * (n - 1) / 2;
            (t, (0..l).collect(), (l..n * n).collect())
        }
        _ => {
            let t = structure_tensor(n, mode, BasisKind::F)?;
            (t, (0..n * n - 1).collect(), vec![n * n - 1])
        }
    };
    let d = t.dim();
    let s_closed = s.iter().all(|&a| s.iter().all(|&b| spans(&t, a, b, &s)));
    let r_ideal = (0..d).all(|a| r.iter().all(|&b| spans(&t, a, b, &r)));
    let r_abelian = r.iter().all(|&a| r.iter().all(|&b| t.bracket(a, b).is_empty()));
    let k = killing_bruteforce(&t).k;
    let killing_nondegenerate_on_s = !k.select(&s, &s).det().is_zero();
    // Killing form of s on its own, through ad restricted to s
    let intrinsic = Matrix::from_fn(s.len(), s.len(), |i, j| {
        let ad_i = t.ad(s[i]).select(&s, &s);
        let ad_j = t.ad(s[j]).select(&s, &s);
        ad_i.matmul(&ad_j).trace()
    });
    let label = |v: &[usize]| v.iter().map(|&i| t.basis[i].to_string()).collect();
    Ok(LeviReport {
        n,
        mode: mode.label(),
        levi_factor: label(&s),
        radical: label(&r),
        s_closed,
        r_ideal,
        r_abelian,
        killing_nondegenerate_on_s,
        s_intrinsically_semisimple: !intrinsic.det().is_zero(),
        pass: s_closed && r_ideal && r_abelian && killing_nondegenerate_on_s,
    })
}

/// Full-algebra brute-force Killing matrix on the LF basis.
pub fn killing_lf(n: usize, mode: &AlgebraMode) -> Result<KillingMatrix> {
    let t = structure_tensor(n, mode, BasisKind::LF)?;
    debug_assert_eq!(t.basis, lf_basis(n));
    Ok(killing_bruteforce(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qq;

    fn entry(k: &KillingMatrix, a: Generator, b: Generator) -> Q {
        let i = k.basis.iter().position(|g| *g == a).unwrap();
        let j = k.basis.iter().position(|g| *g == b).unwrap();
        k.k[(i, j)].clone()
    }

    #[test]
    fn two_by_two_entries() {
        let k = killing_semisimple(2, &AlgebraMode::Plus(q(1))).unwrap();
        assert_eq!(entry(&k, Generator::Fb(1, 1), Generator::Fb(1, 1)), q(-32));
        assert_eq!(entry(&k, Generator::Fb(1, 2), Generator::Fb(1, 2)), q(-16));
        let c = killing_closedform(2, &AlgebraMode::Plus(q(1))).unwrap();
        assert_eq!(
            c.k,
            Matrix::from_rows(vec![
                vec![q(-32), q(0), q(0)],
                vec![q(0), q(-16), q(0)],
                vec![q(0), q(0), q(-16)]
            ])
        );
        let c = killing_closedform(2, &AlgebraMode::Minus(q(1))).unwrap();
        assert_eq!(
            c.k,
            Matrix::from_rows(vec![
                vec![q(32), q(0), q(0)],
                vec![q(0), q(0), q(16)],
                vec![q(0), q(16), q(0)]
            ])
        );
    }

    #[test]
    fn closed_equals_brute_small() {
        for n in 2..=3 {
            for m in [AlgebraMode::Plus(qq(3, 2)), AlgebraMode::Minus(qq(2, 3))] {
                assert_eq!(killing_closedform(n, &m).unwrap(), killing_semisimple(n, &m).unwrap());
            }
        }
    }

    #[test]
    fn determinants() {
        let k = killing_semisimple(2, &AlgebraMode::Plus(q(1))).unwrap();
        assert_eq!(killing_determinant(&k), q(-8192));
        assert_eq!(expected_determinant(2, &AlgebraMode::Plus(q(1))).unwrap(), q(-8192));
        let w = qq(3, 2);
        for m in [AlgebraMode::Plus(w.clone()), AlgebraMode::Minus(w)] {
            assert_eq!(expected_determinant(2, &m).unwrap(), q(-93312));
            assert_eq!(killing_determinant(&killing_semisimple(2, &m).unwrap()), q(-93312));
        }
        for n in 2..=8 {
            assert_eq!(kappa_hat(n).det(), q(n as i64));
        }
    }

    #[test]
    fn spectra() {
        let r = spectrum_verify(3, &AlgebraMode::Plus(q(1))).unwrap();
        assert!(r.pass);
        assert_eq!((r.eigenvalues[0].value.clone(), r.eigenvalues[0].found), (q(-72), 1));
        assert_eq!((r.eigenvalues[1].value.clone(), r.eigenvalues[1].found), (q(-24), 7));
        let r = spectrum_verify(2, &AlgebraMode::Minus(q(1))).unwrap();
        assert!(r.pass);
        let found: Vec<_> = r.eigenvalues.iter().map(|e| (e.value.clone(), e.found)).collect();
        assert_eq!(found, vec![(q(32), 1), (q(16), 1), (q(-16), 1)]);
        assert!(r.note.is_some());
        let k = killing_semisimple(3, &AlgebraMode::Plus(q(1))).unwrap();
        assert_eq!(eigen_multiplicity(&k.k, &q(5)), 0);
    }

    #[test]
    fn signatures() {
        assert_eq!(
            signature(4, &AlgebraMode::Plus(q(1))).unwrap(),
            Signature { p: 0, n: 15, z: 0 }
        );
        assert_eq!(
            signature(2, &AlgebraMode::Minus(q(1))).unwrap(),
            Signature { p: 2, n: 1, z: 0 }
        );
        assert_eq!(signature(3, &AlgebraMode::Zero).unwrap().z, 6);
        assert_eq!(
            signature(3, &AlgebraMode::Zero).unwrap(),
            expected_signature(3, &AlgebraMode::Zero)
        );
    }

    #[test]
    fn signature_is_basis_independent() {
        let m = AlgebraMode::Minus(q(2));
        let lf = killing_lf(3, &m).unwrap();
        let f = killing_bruteforce(&structure_tensor(3, &m, BasisKind::F).unwrap());
        assert_eq!(signature_of(&lf.k), signature_of(&f.k));
        assert_eq!(signature_of(&lf.k).z, 1);
    }

    #[test]
    fn levi() {
        let r = levi_verify(3, &AlgebraMode::Plus(q(1))).unwrap();
        assert!(r.pass && r.s_intrinsically_semisimple);
        assert_eq!(r.radical, vec!["r".to_string()]);
        let r = levi_verify(3, &AlgebraMode::Zero).unwrap();
        assert!(r.pass && r.r_abelian);
        assert_eq!(r.levi_factor, vec!["L12", "L13", "L23"]);
        assert!(levi_verify(2, &AlgebraMode::Minus(q(1))).unwrap().pass);
    }
}
