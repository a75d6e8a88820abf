//! Lengthened generator matrices: from a double code of length (r, s), a
//! linear code of length 2(r+s) built from the blocks G (Gray image of the
//! length-r skew cyclic code <g>) and [L|H] (Gray image of the (l|h)
//! spanning rows), with the square block repeated, zero-padded or truncated
//! depending on how r compares to s.

use thiserror::Error;

use crate::distance::{min_distance_bz, DistanceBudget, DistanceResult};
use crate::doublecode::DoubleCode;
use crate::field::Field;
use crate::gray::{phi_matrix, GrayMatrix};
use crate::matrix::{LinearCodeMatrix, Matrix};
use crate::ring::RingElement;
use crate::skewpoly::SkewPoly;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("block widths do not line up: G is {g} wide, [L|H] is {lh} wide, lengths ({r}, {s})")]
    WidthMismatch { g: usize, lh: usize, r: usize, s: usize },
}

/// The two ingredient matrices: G from <g> alone (width 2r) and the Gray
/// image of the (l|h) spanning rows (width 2(r+s)).
pub struct ConstructionInput {
    pub g_block: LinearCodeMatrix,
    pub lh_block: LinearCodeMatrix,
}

/// Gray generator rows of the length-r skew cyclic code <g> over R:
/// x^i (g_w w) for i below r - deg g_w, per idempotent.
pub fn construction_input(code: &DoubleCode, n: &GrayMatrix) -> ConstructionInput {
    let ring = code.ring();
    let r = code.r();
    let c = code.components();
    let mut g_rows: Vec<Vec<RingElement>> = Vec::new();
    for (g, which_v) in [(&c.g_v, true), (&c.g_vp, false)] {
        let e = if which_v { ring.v() } else { ring.vprime() };
        let lifted = SkewPoly::from_coeffs(
            ring,
            g.coeffs().iter().map(|&x| ring.scale(x, e)).collect::<Vec<_>>(),
            code.auto_index(),
        );
        let count = r - g.deg().unwrap();
        let mut cur = lifted;
        for _ in 0..count {
            g_rows.push(cur.word(ring, r));
            cur = cur.mul_x_mod(ring, r);
        }
    }
    let g_block = if g_rows.is_empty() {
        LinearCodeMatrix::new(ring.field_arc(), Matrix::zeros(ring.field(), 0, 2 * r))
    } else {
        phi_matrix(ring, &g_rows, n)
    };

    let span = code.spanning_set();
    let lh_words: Vec<Vec<RingElement>> =
        span.iter().filter(|w| w.right.iter().any(|&x| !ring.is_zero(x))).map(|w| w.flat()).collect();
    let lh_block = if lh_words.is_empty() {
        LinearCodeMatrix::new(
            ring.field_arc(),
            Matrix::zeros(ring.field(), 0, code.gray_length()),
        )
    } else {
        phi_matrix(ring, &lh_words, n)
    };
    ConstructionInput { g_block, lh_block }
}

/// Assembles the length-2(r+s) generator matrix: [G G] when r = s,
/// [G G0] with right zero padding when r < s, [G G'] with the first 2s
/// columns of G when r > s; the [L|H] block sits below.
pub fn build_construction(
    inp: &ConstructionInput,
    r: usize,
    s: usize,
) -> Result<LinearCodeMatrix, ConstructionError> {
    let field = inp.g_block.field().clone();
    let g = inp.g_block.matrix();
    let lh = inp.lh_block.matrix();
    let total = 2 * (r + s);
    if g.cols() != 2 * r || (lh.rows() > 0 && lh.cols() != total) {
        return Err(ConstructionError::WidthMismatch {
            g: g.cols(),
            lh: lh.cols(),
            r,
            s,
        });
    }
    let right: Matrix = if r == s {
        g.clone()
    } else if r < s {
        let pad = Matrix::zeros(&field, g.rows(), 2 * s - 2 * r);
        g.hstack(&pad)
    } else {
        g.select_columns(&(0..2 * s).collect::<Vec<_>>())
    };
    let top = g.hstack(&right);
    let stacked = if lh.rows() == 0 {
        top
    } else if top.rows() == 0 {
        lh.clone()
    } else {
        top.vstack(lh)
    };
    debug_assert_eq!(stacked.cols(), total);
    Ok(LinearCodeMatrix::new(field, stacked))
}

/// Parameter report for one code and its lengthened companion.
pub struct ConstructionOutcome {
    pub n: usize,
    pub k_plain: usize,
    pub d_plain: Option<DistanceResult>,
    pub k_built: usize,
    pub d_built: Option<DistanceResult>,
    pub built: LinearCodeMatrix,
}

/// Builds both the plain Gray generator matrix and the lengthened one, and
/// measures rank and distance of each.
pub fn evaluate_construction(
    code: &DoubleCode,
    n: &GrayMatrix,
    budget: &DistanceBudget,
) -> Result<ConstructionOutcome, ConstructionError> {
    let plain = code.gray_matrix(n);
    let d_plain = min_distance_bz(&plain, budget);
    let inp = construction_input(code, n);
    let built = build_construction(&inp, code.r(), code.s())?;
    let d_built = min_distance_bz(&built, budget);
    Ok(ConstructionOutcome {
        n: code.gray_length(),
        k_plain: plain.rank(),
        d_plain,
        k_built: built.rank(),
        d_built,
        built,
    })
}

/// Case consistency: over a field the three branches agree where they
/// overlap (r = s is both a trivial pad and a full take).
pub fn branches_consistent(field: &Field, g: &Matrix, r: usize) -> bool {
    let pad = Matrix::zeros(field, g.rows(), 0);
    let padded = g.hstack(&pad);
    let taken = g.select_columns(&(0..2 * r).collect::<Vec<_>>());
    padded == *g && taken == *g
}
