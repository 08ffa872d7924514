//! Parametric N x N matrix families and their product and determinant rules.
//!
//! `A(x, a, v)`: lower triangular, first column `(x, v)`, diagonal `(x, a, .., a)`.
//! `B(x, a, v)`: zero first row and column, `A(x, a, v)` in the lower block.
//! `C(a, v, w)`: columns `v`, `w`, then `a` on the remaining diagonal.
//! The breve variants add `e_{1,i}`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::Matrix;
use crate::rational::{pow, Q};
use crate::sample::Sampler;

#[derive(Clone, Debug, PartialEq)]
pub struct MatA {
    pub x: Q,
    pub a: Q,
    pub v: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatB {
    pub x: Q,
    pub a: Q,
    pub v: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BreveB {
    pub b: MatB,
    pub i: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatC {
    pub a: Q,
    pub v: Vec<Q>,
    pub w: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BreveC {
    pub c: MatC,
    pub i: usize,
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn check_breve(i: usize, n: usize) -> Result<()> {
    if i < 3 || i > n {
        return Err(Error::IndexOutOfRange(format!("breve column {i} needs 3 <= i <= {n}")));
    }
    Ok(())
}

fn axpy(a: &Q, x: &[Q], y: &Q, z: &[Q]) -> Vec<Q> {
    x.iter().zip(z).map(|(p, r)| a * p + y * r).collect()
}

impl MatA {
    pub fn new(x: Q, a: Q, v: Vec<Q>) -> Self {
        MatA { x, a, v }
    }

    pub fn n(&self) -> usize {
        self.v.len() + 1
    }

    pub fn realize(&self) -> Matrix<Q> {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        m[(0, 0)] = self.x.clone();
        for k in 1..n {
            m[(k, 0)] = self.v[k - 1].clone();
            m[(k, k)] = self.a.clone();
        }
        m
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_len(self.n(), o.n())?;
        Ok(MatA::new(
            &self.x + &o.x,
            &self.a + &o.a,
            axpy(&Q::one(), &self.v, &Q::one(), &o.v),
        ))
    }

    /// `A(x, a, v) A(y, b, w) = A(xy, ab, a w + y v)`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_len(self.n(), o.n())?;
        Ok(MatA::new(
            &self.x * &o.x,
            &self.a * &o.a,
            axpy(&self.a, &o.v, &o.x, &self.v),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.x.is_zero() || self.a.is_zero() {
            return Err(Error::SingularFamilyMatrix(format!(
                "A needs x, a nonzero (x = {}, a = {})",
                self.x, self.a
            )));
        }
        let k = -(&self.a * &self.x).recip();
        Ok(MatA::new(
            self.x.recip(),
            self.a.recip(),
            self.v.iter().map(|t| t * &k).collect(),
        ))
    }

    /// `A(x, a, v)^-1 A(y, b, w) = A(y/x, b/a, (w - (y/x) v)/a)`.
    pub fn inv_mul(&self, o: &Self) -> Result<Self> {
        check_len(self.n(), o.n())?;
        self.inv()?;
        let r = &o.x / &self.x;
        let w = o.v.iter().zip(&self.v).map(|(w, v)| (w - &r * v) / &self.a).collect();
        Ok(MatA::new(r, &o.a / &self.a, w))
    }

    /// `A(x, a, v) B(y, b, w) = B(ay, ab, a w)`.
    pub fn mul_b(&self, o: &MatB) -> Result<MatB> {
        check_len(self.n(), o.n())?;
        Ok(MatB::new(
            &self.a * &o.x,
            &self.a * &o.a,
            o.v.iter().map(|t| &self.a * t).collect(),
        ))
    }

    pub fn det(&self) -> Q {
        &self.x * pow(&self.a, self.n() as i32 - 1)
    }
}

impl MatB {
    pub fn new(x: Q, a: Q, v: Vec<Q>) -> Self {
        MatB { x, a, v }
    }

    pub fn n(&self) -> usize {
        self.v.len() + 2
    }

    pub fn realize(&self) -> Matrix<Q> {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        m[(1, 1)] = self.x.clone();
        for k in 2..n {
            m[(k, 1)] = self.v[k - 2].clone();
            m[(k, k)] = self.a.clone();
        }
        m
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_len(self.n(), o.n())?;
        Ok(MatB::new(
            &self.x + &o.x,
            &self.a + &o.a,
            axpy(&Q::one(), &self.v, &Q::one(), &o.v),
        ))
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_len(self.n(), o.n())?;
        Ok(MatB::new(
            &self.x * &o.x,
            &self.a * &o.a,
            axpy(&self.a, &o.v, &o.x, &self.v),
        ))
    }

    /// `B(x, a, v) A(y, b, w) = C(ab, V, W)`.
    pub fn mul_a(&self, o: &MatA) -> Result<MatC> {
        let n = self.n();
        check_len(n, o.n())?;
        let w1 = &o.v[0];
        let mut vv = vec![Q::zero(), &self.x * w1];
        let mut ww = vec![Q::zero(), &o.a * &self.x];
        for k in 2..n {
            vv.push(&self.a * &o.v[k - 1] + w1 * &self.v[k - 2]);
            ww.push(&o.a * &self.v[k - 2]);
        }
        Ok(MatC::new(&self.a * &o.a, vv, ww))
    }

    pub fn scale(&self, k: &Q) -> Self {
        MatB::new(&self.x * k, &self.a * k, self.v.iter().map(|t| t * k).collect())
    }

    pub fn det(&self) -> Q {
        Q::zero()
    }
}

impl BreveB {
    pub fn new(b: MatB, i: usize) -> Result<Self> {
        check_breve(i, b.n())?;
        Ok(BreveB { b, i })
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    pub fn realize(&self) -> Matrix<Q> {
        let mut m = self.b.realize();
        m[(0, self.i - 1)] += Q::one();
        m
    }

    /// `B_i(z, c, u) A(t, d, f) = d C_i(c, F, U)` with
    /// `F = (f_{i-1}, z f_1, c f_2 + f_1 u_1, ..)/d`, `U = (0, z, u_1, ..)`.
    pub fn mul_a(&self, o: &MatA) -> Result<(Q, BreveC)> {
        let n = self.n();
        check_len(n, o.n())?;
        let d = &o.a;
        if d.is_zero() {
            return Err(Error::SingularFamilyMatrix("B_i A scaling needs d nonzero".into()));
        }
        let (z, c, u, f) = (&self.b.x, &self.b.a, &self.b.v, &o.v);
        let mut ff = vec![f[self.i - 2].clone() / d, z * &f[0] / d];
        let mut uu = vec![Q::zero(), z.clone()];
        for k in 2..n {
            ff.push((c * &f[k - 1] + &f[0] * &u[k - 2]) / d);
            uu.push(u[k - 2].clone());
        }
        Ok((d.clone(), BreveC::new(MatC::new(c.clone(), ff, uu), self.i)?))
    }
}

impl MatC {
    pub fn new(a: Q, v: Vec<Q>, w: Vec<Q>) -> Self {
        MatC { a, v, w }
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn realize(&self) -> Matrix<Q> {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m[(k, 0)] = self.v[k].clone();
            m[(k, 1)] = self.w[k].clone();
            if k >= 2 {
                m[(k, k)] = self.a.clone();
            }
        }
        m
    }

    pub fn scale(&self, k: &Q) -> Self {
        MatC::new(
            &self.a * k,
            self.v.iter().map(|t| t * k).collect(),
            self.w.iter().map(|t| t * k).collect(),
        )
    }

    pub fn det(&self) -> Q {
        pow(&self.a, self.n() as i32 - 2) * (&self.v[0] * &self.w[1] - &self.w[0] * &self.v[1])
    }
}

impl BreveC {
    pub fn new(c: MatC, i: usize) -> Result<Self> {
        check_len(c.v.len(), c.w.len())?;
        check_breve(i, c.n())?;
        Ok(BreveC { c, i })
    }

    pub fn n(&self) -> usize {
        self.c.n()
    }

    pub fn realize(&self) -> Matrix<Q> {
        let mut m = self.c.realize();
        m[(0, self.i - 1)] += Q::one();
        m
    }

    /// `a^{N-2}(v_1 w_2 - w_1 v_2) + a^{N-3}(w_i v_2 - v_i w_2)`.
    pub fn det(&self) -> Q {
        let (n, i) = (self.n() as i32, self.i - 1);
        let MatC { a, v, w } = &self.c;
        pow(a, n - 2) * (&v[0] * &w[1] - &w[0] * &v[1]) + pow(a, n - 3) * (&w[i] * &v[1] - &v[i] * &w[1])
    }
}

/// First row of `e_{1,j} A(x, a, v)` as sparse (column, value) pairs, 1-based.
pub fn e1i_mul_a(j: usize, o: &MatA) -> Result<Vec<(usize, Q)>> {
    let n = o.n();
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange(format!("e_(1,{j}) for N = {n}")));
    }
    let out = if j == 1 {
        vec![(1, o.x.clone())]
    } else {
        vec![(1, o.v[j - 2].clone()), (j, o.a.clone())]
    };
    Ok(out.into_iter().filter(|(_, x)| !x.is_zero()).collect())
}

/// `B(y, c, u) - C_i(a, v, w) = -C_i(a - c, v, (w_1, w_2 - y, w_3 - u_1, ..))`.
pub fn b_minus_breve_c(b: &MatB, ci: &BreveC) -> Result<(Q, BreveC)> {
    let n = b.n();
    check_len(n, ci.n())?;
    let MatC { a, v, w } = &ci.c;
    let mut y = vec![w[0].clone(), &w[1] - &b.x];
    y.extend(w[2..n].iter().zip(&b.v).map(|(wk, u)| wk - u));
    Ok((-Q::one(), BreveC::new(MatC::new(a - &b.a, v.clone(), y), ci.i)?))
}

/// Closed form of `det[B(t, d, r) - B_i(z, c, u) A(x, a, v)^-1 A(y, b, w)]`.
pub fn final_det(bt: &MatB, bz: &BreveB, ax: &MatA, ay: &MatA) -> Result<Q> {
    let n = bt.n();
    for m in [bz.n(), ax.n(), ay.n()] {
        check_len(n, m)?;
    }
    let (t, d, r) = (&bt.x, &bt.a, &bt.v);
    let (z, c, u) = (&bz.b.x, &bz.b.a, &bz.b.v);
    let (x, a, v) = (&ax.x, &ax.a, &ax.v);
    let (y, b, w) = (&ay.x, &ay.a, &ay.v);
    if x.is_zero() || a.is_zero() || b.is_zero() {
        return Err(Error::SingularFamilyMatrix(
            "final determinant needs x, a, b nonzero".into(),
        ));
    }
    let i = bz.i;
    let yx = y / x;
    let ab = a / b;
    let big_w = |k: usize| &w[k - 1] - &yx * &v[k - 1];
    let alpha = c - &ab * d;
    let zt = z - &ab * t;
    let ur = &u[i - 3] - &ab * &r[i - 3];
    let n = n as i32;
    let bracket = pow(&alpha, n - 2) * big_w(i - 1) * &zt
        + pow(&alpha, n - 3) * (z * &ur * big_w(1) - (c * big_w(i - 1) + big_w(1) * &u[i - 3]) * &zt);
    Ok(pow(&-(b / a), n) * bracket / b)
}

/// The product as printed, with prefactor `-(-b/a)^N` and no `1/b`.
pub fn final_det_as_printed(bt: &MatB, bz: &BreveB, ax: &MatA, ay: &MatA) -> Result<Q> {
    let b = &ay.a;
    Ok(final_det(bt, bz, ax, ay)? * -b)
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub lemma: &'static str,
    pub draws: usize,
    pub passed: usize,
    pub first_failure: Option<usize>,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.passed == self.draws
    }
}

pub const LEMMAS: [&str; 15] = [
    "linearity",
    "mul_A",
    "mul_B",
    "inv_A",
    "inv_mul_A",
    "AB",
    "BA",
    "e1i_A",
    "breveB_A",
    "B_minus_breveC",
    "det_A",
    "det_B",
    "det_C",
    "det_breveC",
    "final_det",
];

pub fn lemma_names() -> &'static [&'static str] {
    &LEMMAS
}

struct Draw {
    s: Sampler,
    n: usize,
}

impl Draw {
    fn q(&mut self) -> Q {
        self.s.rational()
    }
    fn nz(&mut self) -> Q {
        self.s.nonzero()
    }
    fn vec(&mut self, k: usize) -> Vec<Q> {
        self.s.vec(k)
    }
    fn a(&mut self) -> MatA {
        let n = self.n;
        MatA::new(self.nz(), self.nz(), self.vec(n - 1))
    }
    fn b(&mut self) -> MatB {
        let n = self.n;
        MatB::new(self.q(), self.q(), self.vec(n - 2))
    }
    fn i(&mut self) -> usize {
        self.s.index(3, self.n)
    }
    fn c(&mut self) -> MatC {
        let n = self.n;
        MatC::new(self.q(), self.vec(n), self.vec(n))
    }
}

fn run_one(lemma: &str, d: &mut Draw) -> Result<bool> {
    let n = d.n;
    Ok(match lemma {
        "linearity" => {
            let (x, y) = (d.a(), d.a());
            let (p, r) = (d.b(), d.b());
            x.add(&y)?.realize() == x.realize().add(&y.realize())
                && p.add(&r)?.realize() == p.realize().add(&r.realize())
        }
        "mul_A" => {
            let (x, y) = (d.a(), d.a());
            x.mul(&y)?.realize() == x.realize().matmul(&y.realize())
        }
        "mul_B" => {
            let (x, y) = (d.b(), d.b());
            x.mul(&y)?.realize() == x.realize().matmul(&y.realize())
        }
        "inv_A" => {
            let x = d.a();
            let inv = x.inv()?;
            x.realize().matmul(&inv.realize()) == Matrix::identity(n) && inv.realize() == x.realize().inverse()?
        }
        "inv_mul_A" => {
            let (x, y) = (d.a(), d.a());
            x.inv_mul(&y)?.realize() == x.realize().inverse()?.matmul(&y.realize())
        }
        "AB" => {
            let (x, y) = (d.a(), d.b());
            x.mul_b(&y)?.realize() == x.realize().matmul(&y.realize())
        }
        "BA" => {
            let (x, y) = (d.b(), d.a());
            x.mul_a(&y)?.realize() == x.realize().matmul(&y.realize())
        }
        "e1i_A" => {
            let x = d.a();
            let j = d.s.index(1, n);
            let dense = super::unit_matrix(n, 1, j).matmul(&x.realize());
            let mut sparse = Matrix::zeros(n, n);
            for (c, val) in e1i_mul_a(j, &x)? {
                sparse[(0, c - 1)] = val;
            }
            sparse == dense
        }
        "breveB_A" => {
            let i = d.i();
            let bb = BreveB::new(d.b(), i)?;
            let x = d.a();
            let (k, c) = bb.mul_a(&x)?;
            c.realize().scale(&k) == bb.realize().matmul(&x.realize())
        }
        "B_minus_breveC" => {
            let i = d.i();
            let b = d.b();
            let c = BreveC::new(d.c(), i)?;
            let (k, r) = b_minus_breve_c(&b, &c)?;
            r.realize().scale(&k) == b.realize().sub(&c.realize())
        }
        "det_A" => {
            let x = MatA::new(d.q(), d.q(), d.vec(n - 1));
            x.det() == x.realize().det()
        }
        "det_B" => {
            let b = d.b();
            b.det() == b.realize().det()
        }
        "det_C" => {
            let c = d.c();
            c.det() == c.realize().det()
        }
        "det_breveC" => {
            let i = d.i();
            let c = BreveC::new(MatC::new(d.nz(), d.vec(n), d.vec(n)), i)?;
            c.det() == c.realize().det()
        }
        "final_det" => {
            let bt = d.b();
            let i = d.i();
            let bz = BreveB::new(d.b(), i)?;
            let (ax, ay) = (d.a(), d.a());
            let dense = bt
                .realize()
                .sub(&bz.realize().matmul(&ax.realize().inverse()?).matmul(&ay.realize()));
            final_det(&bt, &bz, &ax, &ay)? == dense.det()
        }
        other => return Err(Error::InvalidParameter(format!("unknown lemma {other}"))),
    })
}

/// Dense-oracle check of one lemma on `draws` seeded draws; N is drawn from `sizes`.
pub fn verify_lemma(
    lemma: &'static str,
    sizes: (usize, usize),
    draws: usize,
    seed: u64,
    exec: Exec,
) -> Result<LemmaReport> {
    let (lo, hi) = sizes;
    if lo < 3 || hi < lo {
        return Err(Error::InvalidParameter(format!(
            "sizes must satisfy 3 <= lo <= hi, got {lo}..{hi}"
        )));
    }
    let tag = LEMMAS.iter().position(|l| *l == lemma).unwrap_or(usize::MAX) as u64;
    let results = exec.map_range(0..draws, |k| {
        let mut s = Sampler::for_draw(seed.wrapping_add(tag << 32), k).with_bound(12);
        let n = s.index(lo, hi);
        run_one(lemma, &mut Draw { s, n })
    });
    let mut passed = 0;
    let mut first_failure = None;
    for (k, r) in results.into_iter().enumerate() {
        if r? {
            passed += 1;
        } else if first_failure.is_none() {
            first_failure = Some(k);
        }
    }
    Ok(LemmaReport {
        lemma,
        draws,
        passed,
        first_failure,
    })
}

pub fn verify_all(sizes: (usize, usize), draws: usize, seed: u64, exec: Exec) -> Result<Vec<LemmaReport>> {
    LEMMAS
        .iter()
        .map(|l| verify_lemma(l, sizes, draws, seed, exec))
        .collect()
}
