//! Arithmetic in R = F_q + vF_q with v^2 = v.
//!
//! Every element `a + v*b` has a lossless CRT pair view
//! `(a0', a1') = (a + b, a)` with `a + v*b = v*a0' + (1 - v)*a1'`; products
//! are computed componentwise through that view. Zero divisors are ordinary
//! values here, only inversion rejects them.

use std::fmt;
use std::sync::Arc;

use crate::field::{Field, FieldElement, FieldError};

/// Element of R = F_q + vF_q, stored as the canonical pair (a, b).
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    a: FieldElement,
    b: FieldElement,
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + v*{:?})", self.a, self.b)
    }
}

/// Arithmetic context for R over a fixed base field.
#[derive(Clone)]
pub struct Ring {
    field: Arc<Field>,
}

impl Ring {
    pub fn new(field: Arc<Field>) -> Ring {
        Ring { field }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<Field> {
        self.field.clone()
    }

    pub fn zero(&self) -> RingElement {
        RingElement { a: self.field.zero(), b: self.field.zero() }
    }

    pub fn one(&self) -> RingElement {
        RingElement { a: self.field.one(), b: self.field.zero() }
    }

    /// The idempotent v.
    pub fn v(&self) -> RingElement {
        RingElement { a: self.field.zero(), b: self.field.one() }
    }

    /// The complementary idempotent v' = 1 - v.
    pub fn vprime(&self) -> RingElement {
        RingElement { a: self.field.one(), b: self.field.neg(self.field.one()) }
    }

    pub fn from_ab(&self, a: FieldElement, b: FieldElement) -> RingElement {
        RingElement { a, b }
    }

    pub fn from_field(&self, a: FieldElement) -> RingElement {
        RingElement { a, b: self.field.zero() }
    }

    pub fn a(&self, x: RingElement) -> FieldElement {
        x.a
    }

    pub fn b(&self, x: RingElement) -> FieldElement {
        x.b
    }

    /// CRT view: (a0', a1') = (a + b, a).
    pub fn split(&self, x: RingElement) -> (FieldElement, FieldElement) {
        (self.field.add(x.a, x.b), x.a)
    }

    /// Inverse of `split`: x = v*c0 + (1 - v)*c1.
    pub fn join(&self, c0: FieldElement, c1: FieldElement) -> RingElement {
        RingElement { a: c1, b: self.field.sub(c0, c1) }
    }

    pub fn is_zero(&self, x: RingElement) -> bool {
        self.field.is_zero(x.a) && self.field.is_zero(x.b)
    }

    pub fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        RingElement { a: self.field.add(x.a, y.a), b: self.field.add(x.b, y.b) }
    }

    pub fn neg(&self, x: RingElement) -> RingElement {
        RingElement { a: self.field.neg(x.a), b: self.field.neg(x.b) }
    }

    pub fn sub(&self, x: RingElement, y: RingElement) -> RingElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        let (x0, x1) = self.split(x);
        let (y0, y1) = self.split(y);
        self.join(self.field.mul(x0, y0), self.field.mul(x1, y1))
    }

    /// Scalar multiplication by a base-field element.
    pub fn scale(&self, c: FieldElement, x: RingElement) -> RingElement {
        RingElement { a: self.field.mul(c, x.a), b: self.field.mul(c, x.b) }
    }

    /// The extended automorphism theta_i: Frobenius on both coordinates,
    /// fixing v.
    pub fn theta(&self, x: RingElement, i: u32) -> RingElement {
        RingElement { a: self.field.frobenius(x.a, i), b: self.field.frobenius(x.b, i) }
    }

    /// Units are exactly the elements with both CRT components nonzero.
    pub fn is_unit(&self, x: RingElement) -> bool {
        let (c0, c1) = self.split(x);
        !self.field.is_zero(c0) && !self.field.is_zero(c1)
    }

    pub fn inv(&self, x: RingElement) -> Result<RingElement, FieldError> {
        let (c0, c1) = self.split(x);
        Ok(self.join(self.field.inv(c0)?, self.field.inv(c1)?))
    }

    /// Parses `a`, `v*b`, or `a + v*b` with element tokens from the field
    /// grammar.
    pub fn parse(&self, text: &str) -> Result<RingElement, FieldError> {
        let s = text.trim();
        let parse_part = |part: &str| -> Result<(bool, FieldElement), FieldError> {
            let part = part.trim();
            if let Some(rest) = part.strip_prefix("v*") {
                Ok((true, self.field.parse_element(rest)?))
            } else if part == "v" {
                Ok((true, self.field.one()))
            } else {
                Ok((false, self.field.parse_element(part)?))
            }
        };
        let mut a = self.field.zero();
        let mut b = self.field.zero();
        for part in s.split('+') {
            let (is_v, c) = parse_part(part)?;
            if is_v {
                b = self.field.add(b, c);
            } else {
                a = self.field.add(a, c);
            }
        }
        Ok(RingElement { a, b })
    }

    pub fn display(&self, x: RingElement) -> String {
        let fa = &self.field;
        match (fa.is_zero(x.a), fa.is_zero(x.b)) {
            (true, true) => "0".into(),
            (false, true) => fa.display(x.a),
            (true, false) => format!("v*{}", fa.display(x.b)),
            (false, false) => format!("{} + v*{}", fa.display(x.a), fa.display(x.b)),
        }
    }

    /// All q^2 ring elements, in a fixed order.
    pub fn all_elements(&self) -> Vec<RingElement> {
        let q = self.field.q();
        let mut out = Vec::with_capacity((q * q) as usize);
        for xa in 0..q {
            for xb in 0..q {
                out.push(RingElement {
                    a: self.field.from_raw_index(xa),
                    b: self.field.from_raw_index(xb),
                });
            }
        }
        out
    }
}
