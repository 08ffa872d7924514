//! The field Q(i, sqrt 2). An element is `a + b*sqrt2 + (c + d*sqrt2)*i`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{fmt_q, q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtScalar {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
}

impl ExtScalar {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Self {
        ExtScalar { a, b, c, d }
    }

    pub fn real(a: Q) -> Self {
        ExtScalar::new(a, Q::zero(), Q::zero(), Q::zero())
    }

    pub fn i() -> Self {
        ExtScalar::new(Q::zero(), Q::zero(), q(1), Q::zero())
    }

    pub fn sqrt2() -> Self {
        ExtScalar::new(Q::zero(), q(1), Q::zero(), Q::zero())
    }

    pub fn scale(&self, k: &Q) -> Self {
        ExtScalar::new(&self.a * k, &self.b * k, &self.c * k, &self.d * k)
    }

    pub fn conj(&self) -> Self {
        ExtScalar::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }

    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }

    /// Coordinates over Q in the basis (1, sqrt2, i, i*sqrt2).
    pub fn coords(&self) -> [Q; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }
}

// (x + y r)(z + w r) with r = sqrt 2
fn mul_r2(x: &Q, y: &Q, z: &Q, w: &Q) -> (Q, Q) {
    (x * z + q(2) * y * w, x * w + y * z)
}

impl Add for ExtScalar {
    type Output = ExtScalar;
    fn add(self, o: ExtScalar) -> ExtScalar {
        ExtScalar::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for ExtScalar {
    type Output = ExtScalar;
    fn sub(self, o: ExtScalar) -> ExtScalar {
        ExtScalar::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for ExtScalar {
    type Output = ExtScalar;
    fn mul(self, o: ExtScalar) -> ExtScalar {
        // (u1 + i v1)(u2 + i v2) = u1 u2 - v1 v2 + i (u1 v2 + v1 u2)
        let (uu0, uu1) = mul_r2(&self.a, &self.b, &o.a, &o.b);
        let (vv0, vv1) = mul_r2(&self.c, &self.d, &o.c, &o.d);
        let (uv0, uv1) = mul_r2(&self.a, &self.b, &o.c, &o.d);
        let (vu0, vu1) = mul_r2(&self.c, &self.d, &o.a, &o.b);
        ExtScalar::new(uu0 - vv0, uu1 - vv1, uv0 + vu0, uv1 + vu1)
    }
}

impl Zero for ExtScalar {
    fn zero() -> Self {
        ExtScalar::real(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl One for ExtScalar {
    fn one() -> Self {
        ExtScalar::real(q(1))
    }
}

impl From<Q> for ExtScalar {
    fn from(x: Q) -> Self {
        ExtScalar::real(x)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (&self.a, ""),
            (&self.b, "*sqrt2"),
            (&self.c, "*i"),
            (&self.d, "*sqrt2*i"),
        ];
        let mut out = String::new();
        for (v, unit) in parts {
            if v.is_zero() {
                continue;
            }
            let s = if v.is_integer() {
                v.numer().to_string()
            } else {
                v.to_string()
            };
            if !out.is_empty() && !s.starts_with('-') {
                out.push('+');
            }
            out.push_str(&s);
            out.push_str(unit);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl serde::Serialize for ExtScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = s.serialize_tuple(4)?;
        for v in self.coords() {
            t.serialize_element(&fmt_q(&v))?;
        }
        t.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_square_correctly() {
        let i = ExtScalar::i();
        let r = ExtScalar::sqrt2();
        assert_eq!(i.clone() * i.clone(), -ExtScalar::one());
        assert_eq!(r.clone() * r.clone(), ExtScalar::real(q(2)));
        let ir = i * r;
        assert_eq!(ir.clone() * ir, ExtScalar::real(q(-2)));
    }

    #[test]
    fn conjugation_is_multiplicative() {
        let x = ExtScalar::new(q(1), q(2), q(-3), q(5));
        let y = ExtScalar::new(q(-2), q(1), q(4), q(-1));
        assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
    }

    #[test]
    fn display() {
        assert_eq!(ExtScalar::new(q(1), q(0), q(-2), q(0)).to_string(), "1-2*i");
        assert_eq!(ExtScalar::zero().to_string(), "0");
    }
}
