//! The parametric algebra A_N(alpha) spanned by L_{i,j} and F_{i,j}.
//!
//! Two bases are supported. The LF basis is
//! `[L_{1,2}, .., L_{N-1,N}] ++ [F_{1,1}, .., F_{N,N}] ++ [F_{1,2}, .., F_{N-1,N}]`
//! and the f basis (omega > 0 only) is
//! `[f_{1,1}, .., f_{N-1,N-1}] ++ [f_{i,j}, i<j] ++ [f_{i,j}, i>j] ++ [r_N]`
//! with `f_{i,j} = F_{i,j} + omega L_{i,j} - delta_{i,j} F_{N,N}` and the central
//! `r_N = F_{1,1} + .. + F_{N,N}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matrix::Matrix;
use crate::rational::{q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraMode {
    Plus(Q),
    Minus(Q),
    Zero,
}

impl AlgebraMode {
    pub fn validate(&self) -> Result<()> {
        match self {
            AlgebraMode::Plus(w) | AlgebraMode::Minus(w) if !w.is_positive() => {
                Err(Error::InvalidParameter(format!("omega must be positive, got {w}")))
            }
            _ => Ok(()),
        }
    }

    pub fn alpha(&self) -> Q {
        match self {
            AlgebraMode::Plus(w) => w * w,
            AlgebraMode::Minus(w) => -(w * w),
            AlgebraMode::Zero => Q::zero(),
        }
    }

    pub fn omega(&self) -> Option<&Q> {
        match self {
            AlgebraMode::Plus(w) | AlgebraMode::Minus(w) => Some(w),
            AlgebraMode::Zero => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            AlgebraMode::Plus(w) => format!("plus({w})"),
            AlgebraMode::Minus(w) => format!("minus({w})"),
            AlgebraMode::Zero => "zero".to_string(),
        }
    }
}

/// Basis label. `Fb(i, j)` is the f-basis generator f_{i,j}; `R` is r_N.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    L(usize, usize),
    F(usize, usize),
    Fb(usize, usize),
    R,
}

impl Generator {
    /// Canonical form of L_{i,j}: `None` for i = j, otherwise a sign and L with i < j.
    pub fn l(i: usize, j: usize) -> Option<(i32, Generator)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Less => Some((1, Generator::L(i, j))),
            std::cmp::Ordering::Greater => Some((-1, Generator::L(j, i))),
        }
    }

    pub fn f(i: usize, j: usize) -> Generator {
        Generator::F(i.min(j), i.max(j))
    }

    pub fn fb(i: usize, j: usize, n: usize) -> Result<Generator> {
        if i == 0 || j == 0 || i > n || j > n || (i == n && j == n) {
            return Err(Error::IndexOutOfRange(format!("f_{{{i},{j}}} for N = {n}")));
        }
        Ok(Generator::Fb(i, j))
    }

    pub fn check(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Generator::L(i, j) => 1 <= i && i < j && j <= n,
            Generator::F(i, j) => 1 <= i && i <= j && j <= n,
            Generator::Fb(i, j) => 1 <= i && i <= n && 1 <= j && j <= n && !(i == n && j == n),
            Generator::R => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} for N = {n}")))
        }
    }

    pub fn is_lf(&self) -> bool {
        matches!(self, Generator::L(..) | Generator::F(..))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pair = |i: usize, j: usize| {
            if i < 10 && j < 10 {
                format!("{i}{j}")
            } else {
                format!("({i},{j})")
            }
        };
        match *self {
            Generator::L(i, j) => write!(f, "L{}", pair(i, j)),
            Generator::F(i, j) => write!(f, "F{}", pair(i, j)),
            Generator::Fb(i, j) => write!(f, "f{}", pair(i, j)),
            Generator::R => write!(f, "r"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BasisKind {
    LF,
    F,
}

pub fn lf_basis(n: usize) -> Vec<Generator> {
    let mut b = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in i + 1..=n {
            b.push(Generator::L(i, j));
        }
    }
    b.extend(radical_ordering(n));
    b
}

/// F generators only, diagonal first then off-diagonal lexicographic.
pub fn radical_ordering(n: usize) -> Vec<Generator> {
    let mut b: Vec<Generator> = (1..=n).map(|i| Generator::F(i, i)).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            b.push(Generator::F(i, j));
        }
    }
    b
}

pub fn f_basis(n: usize) -> Vec<Generator> {
    let mut b: Vec<Generator> = (1..n).map(|i| Generator::Fb(i, i)).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            b.push(Generator::Fb(i, j));
        }
    }
    for i in 1..=n {
        for j in 1..i {
            b.push(Generator::Fb(i, j));
        }
    }
    b.push(Generator::R);
    b
}

/// N(N+1)/2, the dimension of the span of the F generators.
pub fn script_n(n: usize) -> usize {
    n * (n + 1) / 2
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    pub n: usize,
    pub mode: AlgebraMode,
    coeffs: BTreeMap<Generator, Q>,
}

impl AlgebraElement {
    pub fn zero(n: usize, mode: AlgebraMode) -> Self {
        AlgebraElement {
            n,
            mode,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn generator(n: usize, mode: AlgebraMode, g: Generator) -> Result<Self> {
        let mut e = Self::zero(n, mode);
        e.add_term(g, q(1))?;
        Ok(e)
    }

    /// Adds `c * g`; `g` must already be canonical.
    pub fn add_term(&mut self, g: Generator, c: Q) -> Result<()> {
        g.check(self.n)?;
        if matches!(g, Generator::Fb(..) | Generator::R) && self.mode == AlgebraMode::Zero {
            return Err(Error::ZeroModeUnsupported);
        }
        add_into(&mut self.coeffs, g, c);
        Ok(())
    }

    /// Adds `c * L_{i,j}` with canonicalization through the ideal relations.
    pub fn add_l(&mut self, i: usize, j: usize, c: Q) -> Result<()> {
        match Generator::l(i, j) {
            None => Ok(()),
            Some((s, g)) => self.add_term(g, if s < 0 { -c } else { c }),
        }
    }

    pub fn add_f(&mut self, i: usize, j: usize, c: Q) -> Result<()> {
        self.add_term(Generator::f(i, j), c)
    }

    pub fn coeff(&self, g: &Generator) -> Q {
        self.coeffs.get(g).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_lf(&self) -> bool {
        self.coeffs.keys().all(|g| g.is_lf())
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut out = Self::zero(self.n, self.mode.clone());
        for (g, c) in &self.coeffs {
            add_into(&mut out.coeffs, *g, c * k);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_algebra(o)?;
        let mut out = self.clone();
        for (g, c) in &o.coeffs {
            add_into(&mut out.coeffs, *g, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&q(-1)))
    }

    fn same_algebra(&self, o: &Self) -> Result<()> {
        if self.n != o.n || self.mode != o.mode {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    /// Coordinates in the given basis order; fails on generators outside it.
    pub fn coords(&self, basis: &[Generator]) -> Result<Vec<Q>> {
        let mut v = vec![Q::zero(); basis.len()];
        for (g, c) in &self.coeffs {
            let k = basis.iter().position(|b| b == g).ok_or(Error::NotInSpan)?;
            v[k] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coords(n: usize, mode: AlgebraMode, basis: &[Generator], v: &[Q]) -> Result<Self> {
        let mut e = Self::zero(n, mode);
        for (g, c) in basis.iter().zip(v) {
            e.add_term(*g, c.clone())?;
        }
        Ok(e)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (g, c) in &self.coeffs {
            let neg = c.is_negative();
            let a = c.abs();
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            if a.is_one() {
                write!(f, "{sign}{g}")?;
            } else {
                write!(f, "{sign}{a} {g}")?;
            }
            first = false;
        }
        Ok(())
    }
}

fn add_into(m: &mut BTreeMap<Generator, Q>, g: Generator, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(g).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        m.remove(&g);
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn push_l(m: &mut BTreeMap<Generator, Q>, i: usize, j: usize, c: Q) {
    if let Some((s, g)) = Generator::l(i, j) {
        add_into(m, g, if s < 0 { -c } else { c });
    }
}

fn push_f(m: &mut BTreeMap<Generator, Q>, i: usize, j: usize, c: Q) {
    add_into(m, Generator::f(i, j), c);
}

/// Bracket of two canonical LF generators from the defining relations.
pub fn lf_bracket_generators(a: Generator, b: Generator, alpha: &Q) -> BTreeMap<Generator, Q> {
    let mut m = BTreeMap::new();
    match (a, b) {
        (Generator::L(i, j), Generator::L(k, l)) => {
            push_l(&mut m, j, l, q(delta(i, k)));
            push_l(&mut m, k, j, q(delta(l, i)));
            push_l(&mut m, l, i, q(delta(j, k)));
            push_l(&mut m, i, k, q(delta(l, j)));
        }
        (Generator::L(i, j), Generator::F(k, l)) => {
            push_f(&mut m, j, l, q(delta(i, k)));
            push_f(&mut m, k, j, q(delta(i, l)));
            push_f(&mut m, i, l, q(-delta(j, k)));
            push_f(&mut m, i, k, q(-delta(j, l)));
        }
        (Generator::F(..), Generator::L(..)) => {
            for (g, c) in lf_bracket_generators(b, a, alpha) {
                add_into(&mut m, g, -c);
            }
        }
        (Generator::F(i, j), Generator::F(k, l)) => {
            if !alpha.is_zero() {
                push_l(&mut m, j, l, alpha * q(delta(i, k)));
                push_l(&mut m, j, k, alpha * q(delta(i, l)));
                push_l(&mut m, i, l, alpha * q(delta(j, k)));
                push_l(&mut m, i, k, alpha * q(delta(j, l)));
            }
        }
        _ => panic!("lf_bracket_generators takes LF generators only"),
    }
    m
}

/// Bracket in the LF basis. Elements with f-basis terms are converted first.
pub fn bracket_lf(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.same_algebra(y)?;
    let x = if x.is_lf() { x.clone() } else { from_f_basis(x)? };
    let y = if y.is_lf() { y.clone() } else { from_f_basis(y)? };
    let alpha = x.mode.alpha();
    let mut out = AlgebraElement::zero(x.n, x.mode.clone());
    for (a, ca) in &x.coeffs {
        for (b, cb) in &y.coeffs {
            for (g, c) in lf_bracket_generators(*a, *b, &alpha) {
                add_into(&mut out.coeffs, g, c * ca * cb);
            }
        }
    }
    Ok(out)
}

/// LF expansion of an f-basis generator or of r_N.
pub fn f_generator_in_lf(g: Generator, n: usize, omega: &Q) -> BTreeMap<Generator, Q> {
    let mut m = BTreeMap::new();
    match g {
        Generator::Fb(i, j) => {
            push_f(&mut m, i, j, q(1));
            push_l(&mut m, i, j, omega.clone());
            if i == j {
                push_f(&mut m, n, n, q(-1));
            }
        }
        Generator::R => {
            for k in 1..=n {
                push_f(&mut m, k, k, q(1));
            }
        }
        other => {
            m.insert(other, q(1));
        }
    }
    m
}

pub fn from_f_basis(x: &AlgebraElement) -> Result<AlgebraElement> {
    let w = x.mode.omega().ok_or(Error::ZeroModeUnsupported)?.clone();
    let mut out = AlgebraElement::zero(x.n, x.mode.clone());
    for (g, c) in &x.coeffs {
        for (h, d) in f_generator_in_lf(*g, x.n, &w) {
            add_into(&mut out.coeffs, h, d * c);
        }
    }
    Ok(out)
}

/// Inverse change of basis:
/// `F_{i,j} = (f_{i,j} + f_{j,i})/2`, `L_{i,j} = (f_{i,j} - f_{j,i})/(2 omega)` for i < j,
/// `F_{N,N} = (r_N - sum_k f_{k,k})/N` and `F_{k,k} = f_{k,k} + F_{N,N}`.
pub fn to_f_basis(x: &AlgebraElement) -> Result<AlgebraElement> {
    let w = x.mode.omega().ok_or(Error::ZeroModeUnsupported)?.clone();
    let n = x.n;
    let mut out = AlgebraElement::zero(n, x.mode.clone());
    let fnn = |out: &mut BTreeMap<Generator, Q>, c: &Q| {
        let k = c / q(n as i64);
        add_into(out, Generator::R, k.clone());
        for i in 1..n {
            add_into(out, Generator::Fb(i, i), -k.clone());
        }
    };
    for (g, c) in &x.coeffs {
        match *g {
            Generator::L(i, j) => {
                let k = c / (q(2) * &w);
                add_into(&mut out.coeffs, Generator::Fb(i, j), k.clone());
                add_into(&mut out.coeffs, Generator::Fb(j, i), -k);
            }
            Generator::F(i, j) if i < j => {
                let k = c / q(2);
                add_into(&mut out.coeffs, Generator::Fb(i, j), k.clone());
                add_into(&mut out.coeffs, Generator::Fb(j, i), k);
            }
            Generator::F(i, _) => {
                if i < n {
                    add_into(&mut out.coeffs, Generator::Fb(i, i), c.clone());
                }
                fnn(&mut out.coeffs, c);
            }
            Generator::Fb(..) | Generator::R => add_into(&mut out.coeffs, *g, c.clone()),
        }
    }
    Ok(out)
}

/// Columns are the LF coordinates of the f-basis elements (r_N last).
pub fn f_transition(n: usize, omega: &Q) -> Matrix<Q> {
    let lf = lf_basis(n);
    let fb = f_basis(n);
    let mut m = Matrix::zeros(lf.len(), fb.len());
    for (c, g) in fb.iter().enumerate() {
        for (h, v) in f_generator_in_lf(*g, n, omega) {
            let r = lf.iter().position(|x| *x == h).expect("LF generator");
            m[(r, c)] = v;
        }
    }
    m
}

pub type Sparse = Vec<(usize, Q)>;

/// Structure constants with a pinned basis order: `bracket(a, b)` lists the nonzero
/// coordinates of `[e_a, e_b]`.
#[derive(Clone, Debug)]
pub struct StructureTensor {
    pub n: usize,
    pub alpha: Q,
    pub omega: Option<Q>,
    pub kind: BasisKind,
    pub basis: Vec<Generator>,
    index: HashMap<Generator, usize>,
    table: Vec<Vec<Sparse>>,
}

impl PartialEq for StructureTensor {
    fn eq(&self, o: &Self) -> bool {
        self.basis == o.basis && self.table == o.table
    }
}

fn sparse_from_dense(v: Vec<Q>) -> Sparse {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl StructureTensor {
    pub fn from_fn(
        n: usize,
        alpha: Q,
        omega: Option<Q>,
        kind: BasisKind,
        basis: Vec<Generator>,
        f: impl Fn(Generator, Generator) -> BTreeMap<Generator, Q>,
    ) -> Self {
        let index: HashMap<Generator, usize> = basis.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let table = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        let mut s: Sparse = f(*a, *b)
                            .into_iter()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(g, c)| (*index.get(&g).unwrap_or_else(|| panic!("{g} outside basis")), c))
                            .collect();
                        s.sort_by_key(|e| e.0);
                        s
                    })
                    .collect()
            })
            .collect();
        StructureTensor {
            n,
            alpha,
            omega,
            kind,
            basis,
            index,
            table,
        }
    }

    pub fn from_dense(
        n: usize,
        alpha: Q,
        omega: Option<Q>,
        kind: BasisKind,
        basis: Vec<Generator>,
        t: Vec<Vec<Vec<Q>>>,
    ) -> Self {
        let index = basis.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let table = t
            .into_iter()
            .map(|row| row.into_iter().map(sparse_from_dense).collect())
            .collect();
        StructureTensor {
            n,
            alpha,
            omega,
            kind,
            basis,
            index,
            table,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, g: &Generator) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.table[a][b]
    }

    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> Q {
        self.table[a][b]
            .iter()
            .find(|e| e.0 == c)
            .map(|e| e.1.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn bracket_dense(&self, a: usize, b: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (c, x) in &self.table[a][b] {
            v[*c] = x.clone();
        }
        v
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (c, t) in &self.table[a][b] {
                    v[*c] += t * xa * yb;
                }
            }
        }
        v
    }

    /// Copy with `value` added to the coefficient of `e_c` in `[e_a, e_b]`.
    pub fn perturbed(&self, a: usize, b: usize, c: usize, value: Q) -> Self {
        let mut dense = self.bracket_dense(a, b);
        dense[c] += value;
        let mut out = self.clone();
        out.table[a][b] = sparse_from_dense(dense);
        out
    }

    /// Number of (a, b) pairs whose brackets differ; bases must match.
    pub fn mismatches(&self, o: &Self) -> usize {
        if self.basis != o.basis {
            return usize::MAX;
        }
        self.table
            .iter()
            .zip(&o.table)
            .map(|(r, s)| r.iter().zip(s).filter(|(x, y)| x != y).count())
            .sum()
    }

    /// Matrix of ad(e_a): column b holds the coordinates of `[e_a, e_b]`.
    pub fn ad(&self, a: usize) -> Matrix<Q> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for b in 0..d {
            for (c, x) in &self.table[a][b] {
                m[(*c, b)] = x.clone();
            }
        }
        m
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| {
            (a..d).all(|b| {
                let x = &self.table[a][b];
                let y = &self.table[b][a];
                x.len() == y.len() && x.iter().zip(y).all(|(u, v)| u.0 == v.0 && u.1 == -v.1.clone())
            })
        })
    }
}

/// LF tensor of A_N(alpha) for any rational alpha.
pub fn lf_tensor_with_alpha(n: usize, alpha: &Q) -> StructureTensor {
    let omega = None;
    StructureTensor::from_fn(n, alpha.clone(), omega, BasisKind::LF, lf_basis(n), |a, b| {
        lf_bracket_generators(a, b, alpha)
    })
}

/// Symmetrized zero-mode constant for `[L_{i,j}, F_{k,l}]` on `F_{a,b}`, a <= b.
pub fn s_tilde(a: usize, b: usize, i: usize, j: usize, k: usize, l: usize) -> i64 {
    let d = delta;
    let off = 1 - d(a, b);
    off * (d(i, l) * d(a, k) * d(b, j) + d(i, k) * d(a, j) * d(b, l)
        - d(j, k) * d(a, i) * d(b, l)
        - d(j, l) * d(a, k) * d(b, i))
        + d(i, l) * d(a, j) * d(b, k)
        + d(i, k) * d(a, l) * d(b, j)
        - d(j, k) * d(a, l) * d(b, i)
        - d(j, l) * d(a, i) * d(b, k)
}

fn zero_mode_lf_tensor(n: usize) -> StructureTensor {
    let zero = Q::zero();
    StructureTensor::from_fn(n, zero.clone(), None, BasisKind::LF, lf_basis(n), |x, y| {
        let mut m = BTreeMap::new();
        let s_block = |i: usize, j: usize, k: usize, l: usize, sign: i64, m: &mut BTreeMap<Generator, Q>| {
            for a in 1..=n {
                for b in a..=n {
                    let c = s_tilde(a, b, i, j, k, l);
                    if c != 0 {
                        add_into(m, Generator::F(a, b), q(sign * c));
                    }
                }
            }
        };
        match (x, y) {
            (Generator::L(..), Generator::L(..)) => return lf_bracket_generators(x, y, &zero),
            (Generator::L(i, j), Generator::F(k, l)) => s_block(i, j, k, l, 1, &mut m),
            (Generator::F(k, l), Generator::L(i, j)) => s_block(i, j, k, l, -1, &mut m),
            _ => {}
        }
        m
    })
}

/// Plus-mode f-basis constant on f_{a,b} for `[f_{i,j}, f_{k,l}]`, in units of omega.
pub fn c_plus(a: usize, b: usize, i: usize, j: usize, k: usize, l: usize, n: usize) -> i64 {
    let d = delta;
    d(i, k) * (d(a, j) * d(b, l) - d(a, l) * d(b, j))
        + d(j, l) * (d(a, i) * d(b, k) - d(a, k) * d(b, i))
        + d(i, l) * (d(a, j) * d(b, k) + d(a, k) * d(b, j))
        - d(j, k) * (d(a, i) * d(b, l) + d(a, l) * d(b, i))
        - 2 * d(k, l) * (d(i, n) * d(a, j) * d(b, n) - d(j, n) * d(a, n) * d(b, i))
        + 2 * d(i, j) * (d(k, n) * d(a, l) * d(b, n) - d(l, n) * d(a, n) * d(b, k))
}

/// Minus-mode f-basis constant on f_{a,b} for `[f_{i,j}, f_{k,l}]`, in units of omega.
pub fn c_minus(a: usize, b: usize, i: usize, j: usize, k: usize, l: usize, n: usize) -> i64 {
    let d = delta;
    2 * (d(i, l) * d(a, k) * d(b, j) - d(j, k) * d(a, i) * d(b, l)
        + d(i, j) * (d(n, k) * d(a, n) * d(b, l) - d(l, n) * d(a, k) * d(b, n))
        + d(k, l) * (d(j, n) * d(a, i) * d(b, n) - d(n, i) * d(a, n) * d(b, j)))
}

fn f_tensor(n: usize, omega: &Q, plus: bool) -> StructureTensor {
    let alpha = if plus { omega * omega } else { -(omega * omega) };
    StructureTensor::from_fn(n, alpha, Some(omega.clone()), BasisKind::F, f_basis(n), |x, y| {
        let mut m = BTreeMap::new();
        if let (Generator::Fb(i, j), Generator::Fb(k, l)) = (x, y) {
            for a in 1..=n {
                for b in 1..=n {
                    if a == n && b == n {
                        continue;
                    }
                    let c = if plus {
                        c_plus(a, b, i, j, k, l, n)
                    } else {
                        c_minus(a, b, i, j, k, l, n)
                    };
                    if c != 0 {
                        add_into(&mut m, Generator::Fb(a, b), q(c) * omega);
                    }
                }
            }
        }
        m
    })
}

/// Closed-form structure tensor.
pub fn structure_tensor(n: usize, mode: &AlgebraMode, basis: BasisKind) -> Result<StructureTensor> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("N must be at least 2, got {n}")));
    }
    mode.validate()?;
    match (basis, mode) {
        (BasisKind::LF, AlgebraMode::Zero) => Ok(zero_mode_lf_tensor(n)),
        (BasisKind::LF, m) => {
            let mut t = lf_tensor_with_alpha(n, &m.alpha());
            t.omega = m.omega().cloned();
            Ok(t)
        }
        (BasisKind::F, AlgebraMode::Plus(w)) => Ok(f_tensor(n, w, true)),
        (BasisKind::F, AlgebraMode::Minus(w)) => Ok(f_tensor(n, w, false)),
        (BasisKind::F, AlgebraMode::Zero) => Err(Error::ZeroModeUnsupported),
    }
}

/// Re-expresses `t` in a new basis whose elements have old coordinates given by the
/// columns of `p`.
pub fn change_basis(
    t: &StructureTensor,
    p: &Matrix<Q>,
    basis: Vec<Generator>,
    kind: BasisKind,
) -> Result<StructureTensor> {
    let d = t.dim();
    if p.rows() != d || p.cols() != d || basis.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.cols(),
        });
    }
    let pinv = p.inverse()?;
    let cols: Vec<Vec<Q>> = (0..d).map(|a| p.column(a)).collect();
    let dense: Vec<Vec<Vec<Q>>> = (0..d)
        .map(|a| {
            (0..d)
                .map(|b| pinv.mul_vec(&t.bracket_vec(&cols[a], &cols[b])))
                .collect()
        })
        .collect();
    Ok(StructureTensor::from_dense(
        t.n,
        t.alpha.clone(),
        t.omega.clone(),
        kind,
        basis,
        dense,
    ))
}

/// Largest |coordinate| of the cyclic sum `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` over all
/// basis triples. Zero for a Lie algebra.
pub fn jacobiator(t: &StructureTensor) -> Q {
    jacobiator_with(t, Exec::default())
}

pub fn jacobiator_with(t: &StructureTensor, exec: Exec) -> Q {
    let d = t.dim();
    let nested = |x: usize, y: usize, z: usize, acc: &mut Vec<Q>| {
        for (c, v) in t.bracket(y, z) {
            for (e, w) in t.bracket(x, *c) {
                acc[*e] += v * w;
            }
        }
    };
    exec.map_range(0..d, |x| {
        let mut worst = Q::zero();
        let mut acc = vec![Q::zero(); d];
        for y in 0..d {
            for z in 0..d {
                acc.iter_mut().for_each(|v| v.set_zero());
                nested(x, y, z, &mut acc);
                nested(y, z, x, &mut acc);
                nested(z, x, y, &mut acc);
                for v in &acc {
                    let a = v.abs();
                    if a > worst {
                        worst = a;
                    }
                }
            }
        }
        worst
    })
    .into_iter()
    .fold(Q::zero(), |m, v| if v > m { v } else { m })
}

/// True iff r_N = F_{1,1} + .. + F_{N,N} commutes with every LF generator.
pub fn radical_commutes(n: usize, mode: &AlgebraMode) -> Result<bool> {
    mode.validate()?;
    let mut r = AlgebraElement::zero(n, mode.clone());
    for k in 1..=n {
        r.add_f(k, k, q(1))?;
    }
    for g in lf_basis(n) {
        let e = AlgebraElement::generator(n, mode.clone(), g)?;
        if !bracket_lf(&r, &e)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

mod enveloping {
    //! Degree-two slice of the enveloping algebra of the Euclidean algebra e_N:
    //! rotations J_{i,j} and commuting translations P_k.

    use std::collections::BTreeMap;

    use crate::rational::{q, Q};

    use super::add_into;
    use super::Generator;

    /// `[J_{i,j}, P_k] = delta_{i,k} P_j - delta_{j,k} P_i` as (index, coefficient) pairs.
    fn j_on_p(i: usize, j: usize, k: usize) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        if i == k {
            out.push((j, 1));
        }
        if j == k {
            out.push((i, -1));
        }
        out
    }

    /// `[J_{i,j}, P_k P_l]` by the derivation rule, monomials P_a P_b mapped to F_{a,b}.
    pub fn j_on_pp(i: usize, j: usize, k: usize, l: usize) -> BTreeMap<Generator, Q> {
        let mut m = BTreeMap::new();
        for (a, c) in j_on_p(i, j, k) {
            add_into(&mut m, Generator::f(a, l), q(c));
        }
        for (b, c) in j_on_p(i, j, l) {
            add_into(&mut m, Generator::f(k, b), q(c));
        }
        m
    }

    fn push_j(m: &mut BTreeMap<Generator, Q>, a: usize, b: usize, c: i64) {
        if c == 0 || a == b {
            return;
        }
        if a < b {
            add_into(m, Generator::L(a, b), q(c));
        } else {
            add_into(m, Generator::L(b, a), q(-c));
        }
    }

    pub fn j_on_j(i: usize, j: usize, k: usize, l: usize) -> BTreeMap<Generator, Q> {
        let d = |a: usize, b: usize| i64::from(a == b);
        let mut m = BTreeMap::new();
        push_j(&mut m, j, l, d(i, k));
        push_j(&mut m, k, j, d(l, i));
        push_j(&mut m, l, i, d(j, k));
        push_j(&mut m, i, k, d(l, j));
        m
    }
}

/// Number of basis pairs where the enveloping-algebra brackets
/// (J_{i,j} -> L_{i,j}, P_k P_l -> F_{k,l}) differ from the zero-mode constants.
pub fn enveloping_mismatches(n: usize) -> usize {
    let t = zero_mode_lf_tensor(n);
    let basis = t.basis.clone();
    let mut bad = 0;
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate() {
            let m: BTreeMap<Generator, Q> = match (*x, *y) {
                (Generator::L(i, j), Generator::L(k, l)) => enveloping::j_on_j(i, j, k, l),
                (Generator::L(i, j), Generator::F(k, l)) => enveloping::j_on_pp(i, j, k, l),
                (Generator::F(k, l), Generator::L(i, j)) => enveloping::j_on_pp(i, j, k, l)
                    .into_iter()
                    .map(|(g, c)| (g, -c))
                    .collect(),
                _ => BTreeMap::new(),
            };
            let mut v = vec![Q::zero(); basis.len()];
            for (g, c) in m {
                v[t.position(&g).expect("in basis")] = c;
            }
            if v != t.bracket_dense(a, b) {
                bad += 1;
            }
        }
    }
    bad
}

pub fn enveloping_check(n: usize) -> bool {
    enveloping_mismatches(n) == 0
}
