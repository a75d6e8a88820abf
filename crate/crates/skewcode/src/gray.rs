//! The matrix Gray map phi : R -> F_q^2, its extension to words and
//! matrices over R, and Gray weights.
//!
//! phi(a) = (a0', a1') N where (a0', a1') is the CRT view of a and N is an
//! invertible 2x2 matrix with N N^T = eta I_2, eta != 0. The eta identity is
//! what makes phi carry R-duality to F_q-duality; eta itself is recorded but
//! unused downstream.

use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::matrix::{LinearCodeMatrix, Matrix};
use crate::ring::{Ring, RingElement};

#[derive(Debug, Error)]
pub enum GrayError {
    #[error("N*N^T is not a nonzero scalar multiple of the identity")]
    NotScaledOrthogonal,
    #[error("N is not invertible")]
    Singular,
    #[error("the default even-characteristic matrix degenerates over GF(2); supply N explicitly")]
    DefaultDegenerate,
}

/// A validated Gray matrix N (row-major 2x2) with its scalar eta and
/// precomputed inverse.
#[derive(Clone, Debug)]
pub struct GrayMatrix {
    n: [FieldElement; 4],
    inv: [FieldElement; 4],
    eta: FieldElement,
}

impl GrayMatrix {
    pub fn new(field: &Field, n: [FieldElement; 4]) -> Result<GrayMatrix, GrayError> {
        let [a, b, c, d] = n;
        // N N^T entries
        let diag0 = field.add(field.mul(a, a), field.mul(b, b));
        let diag1 = field.add(field.mul(c, c), field.mul(d, d));
        let off = field.add(field.mul(a, c), field.mul(b, d));
        if !field.is_zero(off) || diag0 != diag1 || field.is_zero(diag0) {
            return Err(GrayError::NotScaledOrthogonal);
        }
        let det = field.sub(field.mul(a, d), field.mul(b, c));
        let det_inv = field.inv(det).map_err(|_| GrayError::Singular)?;
        let inv = [
            field.mul(det_inv, d),
            field.neg(field.mul(det_inv, b)),
            field.neg(field.mul(det_inv, c)),
            field.mul(det_inv, a),
        ];
        Ok(GrayMatrix { n, inv, eta: diag0 })
    }

    /// The built-in choice: [[1, t], [t, 1]] in even characteristic,
    /// [[1, 1], [1, -1]] in odd characteristic.
    pub fn default_for(field: &Field) -> Result<GrayMatrix, GrayError> {
        let one = field.one();
        let n = if field.p() == 2 {
            let t = field.t();
            if field.q() == 2 {
                return Err(GrayError::DefaultDegenerate);
            }
            [one, t, t, one]
        } else {
            [one, one, one, field.neg(one)]
        };
        GrayMatrix::new(field, n)
    }

    pub fn entries(&self) -> &[FieldElement; 4] {
        &self.n
    }

    pub fn eta(&self) -> FieldElement {
        self.eta
    }
}

/// phi of a single ring element: the CRT pair times N.
pub fn phi(ring: &Ring, x: RingElement, n: &GrayMatrix) -> (FieldElement, FieldElement) {
    let f = ring.field();
    let (c0, c1) = ring.split(x);
    (
        f.add(f.mul(c0, n.n[0]), f.mul(c1, n.n[2])),
        f.add(f.mul(c0, n.n[1]), f.mul(c1, n.n[3])),
    )
}

/// Inverse of `phi` (N is invertible).
pub fn phi_inv(ring: &Ring, y: (FieldElement, FieldElement), n: &GrayMatrix) -> RingElement {
    let f = ring.field();
    let c0 = f.add(f.mul(y.0, n.inv[0]), f.mul(y.1, n.inv[2]));
    let c1 = f.add(f.mul(y.0, n.inv[1]), f.mul(y.1, n.inv[3]));
    ring.join(c0, c1)
}

/// Coordinatewise extension to words: (a_0 N, a_1 N, ..., a_(n-1) N).
pub fn phi_word(ring: &Ring, word: &[RingElement], n: &GrayMatrix) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(word.len() * 2);
    for &x in word {
        let (y0, y1) = phi(ring, x, n);
        out.push(y0);
        out.push(y1);
    }
    out
}

pub fn phi_word_inv(ring: &Ring, image: &[FieldElement], n: &GrayMatrix) -> Vec<RingElement> {
    assert!(image.len() % 2 == 0);
    image.chunks(2).map(|pair| phi_inv(ring, (pair[0], pair[1]), n)).collect()
}

/// Gray weight: Hamming weight of the phi image.
pub fn gray_weight(ring: &Ring, word: &[RingElement], n: &GrayMatrix) -> usize {
    let f = ring.field();
    phi_word(ring, word, n).iter().filter(|&&c| !f.is_zero(c)).count()
}

/// Row-wise phi: a k x w matrix over R becomes a k x 2w generator matrix
/// over F_q.
pub fn phi_matrix(ring: &Ring, rows: &[Vec<RingElement>], n: &GrayMatrix) -> LinearCodeMatrix {
    let f = ring.field();
    let image_rows: Vec<Vec<FieldElement>> = rows.iter().map(|r| phi_word(ring, r, n)).collect();
    let width = image_rows.first().map_or(0, |r| r.len());
    let matrix = if image_rows.is_empty() {
        Matrix::zeros(f, 0, 0)
    } else {
        assert!(image_rows.iter().all(|r| r.len() == width));
        Matrix::from_rows(f, &image_rows)
    };
    LinearCodeMatrix::new(ring.field_arc(), matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn ring(q: u32) -> Ring {
        let (p, m) = match q {
            2 => (2, 1),
            3 => (3, 1),
            4 => (2, 2),
            9 => (3, 2),
            16 => (2, 4),
            27 => (3, 3),
            _ => panic!(),
        };
        Ring::new(Arc::new(Field::with_default_modulus(p, m).unwrap()))
    }

    #[test]
    fn default_matrices() {
        let r27 = ring(27);
        let f = r27.field();
        let n = GrayMatrix::default_for(f).unwrap();
        let two = f.add(f.one(), f.one());
        assert_eq!(n.entries(), &[f.one(), f.one(), f.one(), two]); // -1 = 2
        assert_eq!(n.eta(), two);

        let r16 = ring(16);
        let f = r16.field();
        let n = GrayMatrix::default_for(f).unwrap();
        assert_eq!(n.entries(), &[f.one(), f.t(), f.t(), f.one()]);
        assert_eq!(n.eta(), f.add(f.one(), f.mul(f.t(), f.t())));

        assert!(matches!(GrayMatrix::default_for(ring(2).field()), Err(GrayError::DefaultDegenerate)));
    }

    #[test]
    fn phi_examples() {
        let r3 = ring(3);
        let f = r3.field();
        let n = GrayMatrix::default_for(f).unwrap();
        assert_eq!(phi(&r3, r3.zero(), &n), (f.zero(), f.zero()));
        // crt(v) = (1, 0), row-times-matrix picks the first row of N
        assert_eq!(phi(&r3, r3.v(), &n), (f.one(), f.one()));
        assert_eq!(gray_weight(&r3, &[r3.v()], &n), 2);
        assert_eq!(gray_weight(&r3, &[r3.zero(), r3.zero()], &n), 0);
    }

    #[test]
    fn phi_is_module_isomorphism_exhaustive() {
        for q in [3, 4, 9, 16, 27] {
            let r = ring(q);
            let f = r.field();
            let n = GrayMatrix::default_for(f).unwrap();
            let elems = r.all_elements();
            // injectivity + inverse
            let mut seen = std::collections::HashSet::new();
            for &x in &elems {
                let y = phi(&r, x, &n);
                assert!(seen.insert((f.raw_index(y.0), f.raw_index(y.1))));
                assert_eq!(phi_inv(&r, y, &n), x);
            }
            // additivity (exhaustive pairs for q <= 9, sampled stride above)
            let stride = if q <= 9 { 1 } else { 5 };
            for (ia, &x) in elems.iter().enumerate().step_by(stride) {
                for &y in elems.iter().skip(ia % stride).step_by(stride) {
                    let px = phi(&r, x, &n);
                    let py = phi(&r, y, &n);
                    let psum = phi(&r, r.add(x, y), &n);
                    assert_eq!(psum, (f.add(px.0, py.0), f.add(px.1, py.1)));
                }
            }
            // F_q-scalar multiplication commutes
            for &x in elems.iter().step_by(3) {
                for c in 0..f.q() {
                    let c = f.from_raw_index(c);
                    let px = phi(&r, x, &n);
                    let pscaled = phi(&r, r.scale(c, x), &n);
                    assert_eq!(pscaled, (f.mul(c, px.0), f.mul(c, px.1)));
                }
            }
        }
    }

    #[test]
    fn phi_matrix_shapes() {
        let r = ring(4);
        let f = r.field();
        let n = GrayMatrix::default_for(f).unwrap();
        let rows = vec![vec![r.one(), r.v()], vec![r.zero(), r.vprime()]];
        let img = phi_matrix(&r, &rows, &n);
        assert_eq!((img.rows(), img.cols()), (2, 4));
        let empty = phi_matrix(&r, &[], &n);
        assert_eq!(empty.rows(), 0);
    }
}
