//! Commutation tables. Cell `[r][c]` holds the coordinates of `[x_r, x_c]`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra_core::{structure_tensor, AlgebraMode, BasisKind, Generator, StructureTensor};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{fmt_q, q, Q};
use crate::representations::{sl_matrix_basis, su_matrix_basis, CMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct CommTable {
    pub title: String,
    pub labels: Vec<String>,
    pub cells: Vec<Vec<Vec<Q>>>,
    /// Coefficients are displayed as multiples of this value, suffixed with "w".
    pub unit: Option<Q>,
}

impl CommTable {
    pub fn from_tensor(title: &str, t: &StructureTensor, order: &[Generator]) -> Result<Self> {
        let pos: Vec<usize> = order
            .iter()
            .map(|g| {
                t.position(g)
                    .ok_or_else(|| Error::Unsupported(format!("{g} not in basis")))
            })
            .collect::<Result<_>>()?;
        let mut cells = Vec::with_capacity(order.len());
        for &a in &pos {
            let mut row = Vec::with_capacity(order.len());
            for &b in &pos {
                let mut v = vec![Q::zero(); order.len()];
                for (c, x) in t.bracket(a, b) {
                    let k = pos.iter().position(|p| p == c).ok_or(Error::NotInSpan)?;
                    v[k] = x.clone();
                }
                row.push(v);
            }
            cells.push(row);
        }
        Ok(CommTable {
            title: title.to_string(),
            labels: order.iter().map(|g| g.to_string()).collect(),
            cells,
            unit: if t.kind == BasisKind::F { t.omega.clone() } else { None },
        })
    }

    pub fn from_matrices(title: &str, basis: &[(String, CMatrix)]) -> Result<Self> {
        let cols: Vec<Vec<Q>> = basis.iter().map(|(_, m)| m.flatten_rational()).collect();
        let a = Matrix::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i].clone());
        let mut cells = Vec::with_capacity(basis.len());
        for (_, x) in basis {
            let mut row = Vec::with_capacity(basis.len());
            for (_, y) in basis {
                let b = x.commutator(y).flatten_rational();
                let v = a.solve(&b).ok_or(Error::NotInSpan)?;
                row.push(v);
            }
            cells.push(row);
        }
        Ok(CommTable {
            title: title.to_string(),
            labels: basis.iter().map(|(l, _)| l.clone()).collect(),
            cells,
            unit: None,
        })
    }

    pub fn relabel(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
        self
    }

    pub fn cell_text(&self, r: usize, c: usize) -> String {
        let mut out = String::new();
        for (k, x) in self.cells[r][c].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (coef, suffix) = match &self.unit {
                Some(u) => (x / u, "w "),
                None => (x.clone(), ""),
            };
            let sign = if coef.is_negative() { "-" } else { "+" };
            let a = coef.abs();
            let mag = if a.is_one() && suffix.is_empty() {
                String::new()
            } else if a.is_one() {
                suffix.to_string()
            } else {
                format!("{}{}", fmt_plain(&a), if suffix.is_empty() { " " } else { suffix })
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(&mag);
            out.push_str(&self.labels[k]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn render_text(&self) -> String {
        let d = self.labels.len();
        let texts: Vec<Vec<String>> = (0..d).map(|r| (0..d).map(|c| self.cell_text(r, c)).collect()).collect();
        let mut width = self
            .title
            .len()
            .max(self.labels.iter().map(|l| l.len()).max().unwrap_or(0));
        for row in &texts {
            for t in row {
                width = width.max(t.len());
            }
        }
        let pad = |s: &str| format!("{s:>width$}");
        let mut out = String::new();
        out.push_str(&pad(&self.title));
        for l in &self.labels {
            out.push_str(" | ");
            out.push_str(&pad(l));
        }
        out.push('\n');
        for (r, row) in texts.iter().enumerate() {
            out.push_str(&pad(&self.labels[r]));
            for t in row {
                out.push_str(" | ");
                out.push_str(&pad(t));
            }
            out.push('\n');
        }
        out
    }

    /// Number of cells that differ from a table given as strings in `parse_cell` syntax.
    pub fn mismatches(&self, rows: &[&[&str]], omega: &Q) -> Result<usize> {
        let mut bad = 0;
        for (r, row) in rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if parse_cell(cell, &self.labels, omega)? != self.cells[r][c] {
                    bad += 1;
                }
            }
        }
        Ok(bad)
    }
}

fn fmt_plain(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        fmt_q(x)
    }
}

#[derive(Serialize)]
struct TableJson<'a> {
    title: &'a str,
    labels: &'a [String],
    cells: Vec<Vec<String>>,
}

impl Serialize for CommTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.labels.len();
        TableJson {
            title: &self.title,
            labels: &self.labels,
            cells: (0..d).map(|r| (0..d).map(|c| self.cell_text(r, c)).collect()).collect(),
        }
        .serialize(s)
    }
}

/// Parses a table cell such as `2w(f22 - f11) - f13` into coordinates over `labels`.
/// `w` stands for `omega`; juxtaposition multiplies.
pub fn parse_cell(s: &str, labels: &[String], omega: &Q) -> Result<Vec<Q>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = CellParser {
        chars: &chars,
        at: 0,
        labels,
        omega,
    };
    let v = p.expr()?;
    if p.at != chars.len() {
        return Err(Error::InvalidParameter(format!("trailing input in cell {s:?}")));
    }
    Ok(v)
}

struct CellParser<'a> {
    chars: &'a [char],
    at: usize,
    labels: &'a [String],
    omega: &'a Q,
}

impl CellParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn expr(&mut self) -> Result<Vec<Q>> {
        let mut acc = vec![Q::zero(); self.labels.len()];
        let mut sign = q(1);
        if let Some(c @ ('+' | '-')) = self.peek() {
            self.at += 1;
            if c == '-' {
                sign = q(-1);
            }
        }
        loop {
            let t = self.term()?;
            for (a, x) in acc.iter_mut().zip(t) {
                *a += x * &sign;
            }
            match self.peek() {
                Some('+') => sign = q(1),
                Some('-') => sign = q(-1),
                _ => return Ok(acc),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<Vec<Q>> {
        let mut coef = q(1);
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        let mut number = None;
        if self.at > start {
            let s: String = self.chars[start..self.at].iter().collect();
            let k: i64 = s.parse().map_err(|_| Error::ParseRational(s.clone()))?;
            number = Some(k);
            coef *= q(k);
        }
        if let Some('w' | 'ω') = self.peek() {
            self.at += 1;
            coef *= self.omega;
        }
        match self.peek() {
            Some('(') => {
                self.at += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::InvalidParameter("unbalanced parenthesis".into()));
                }
                self.at += 1;
                Ok(v.into_iter().map(|x| x * &coef).collect())
            }
            _ => {
                let rest: String = self.chars[self.at..].iter().collect();
                let best = self
                    .labels
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| rest.starts_with(l.as_str()))
                    .max_by_key(|(_, l)| l.len());
                match best {
                    Some((k, l)) => {
                        self.at += l.chars().count();
                        let mut v = vec![Q::zero(); self.labels.len()];
                        v[k] = coef;
                        Ok(v)
                    }
                    None if number == Some(0) => Ok(vec![Q::zero(); self.labels.len()]),
                    None => Err(Error::InvalidParameter(format!("cannot parse cell term at {rest:?}"))),
                }
            }
        }
    }
}

fn fb(pairs: &[(usize, usize)]) -> Vec<Generator> {
    pairs.iter().map(|&(i, j)| Generator::Fb(i, j)).collect()
}

pub const F2_ORDER: [(usize, usize); 3] = [(1, 1), (1, 2), (2, 1)];
pub const PLUS3_ORDER: [(usize, usize); 8] = [(1, 1), (2, 2), (1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)];
pub const MINUS3_ORDER: [(usize, usize); 8] = [(1, 1), (2, 2), (1, 2), (1, 3), (2, 3), (2, 1), (3, 1), (3, 2)];

/// Zero-mode table order: F diagonal, F off-diagonal, then L.
pub fn zero_order(n: usize) -> Vec<Generator> {
    let mut v = crate::algebra_core::radical_ordering(n);
    v.extend(
        crate::algebra_core::lf_basis(n)
            .into_iter()
            .filter(|g| matches!(g, Generator::L(..))),
    );
    v
}

fn t_labels(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("t{i}")).collect()
}

/// The ten reference tables in their canonical order, with identifiers.
pub fn reference_tables(omega: &Q) -> Result<Vec<(&'static str, CommTable)>> {
    let plus = AlgebraMode::Plus(omega.clone());
    let minus = AlgebraMode::Minus(omega.clone());
    let f = |n: usize, m: &AlgebraMode| structure_tensor(n, m, BasisKind::F);
    let z = |n: usize| structure_tensor(n, &AlgebraMode::Zero, BasisKind::LF);
    Ok(vec![
        (
            "a_plus_2",
            CommTable::from_tensor("a+_2", &f(2, &plus)?, &fb(&F2_ORDER))?,
        ),
        (
            "su_2",
            CommTable::from_matrices("su_2", &su_matrix_basis(2))?.relabel(t_labels(3)),
        ),
        (
            "a_plus_3",
            CommTable::from_tensor("a+_3", &f(3, &plus)?, &fb(&PLUS3_ORDER))?,
        ),
        (
            "su_3",
            CommTable::from_matrices("su_3", &su_matrix_basis(3))?.relabel(t_labels(8)),
        ),
        (
            "a_minus_2",
            CommTable::from_tensor("a-_2", &f(2, &minus)?, &fb(&F2_ORDER))?,
        ),
        (
            "sl_2",
            CommTable::from_matrices("sl_2", &sl_matrix_basis(2))?.relabel(t_labels(3)),
        ),
        (
            "a_minus_3",
            CommTable::from_tensor("a-_3", &f(3, &minus)?, &fb(&MINUS3_ORDER))?,
        ),
        ("sl_3", CommTable::from_matrices("sl_3", &sl_matrix_basis(3))?),
        ("a_zero_2", CommTable::from_tensor("A0_2", &z(2)?, &zero_order(2))?),
        ("a_zero_3", CommTable::from_tensor("A0_3", &z(3)?, &zero_order(3))?),
    ])
}
