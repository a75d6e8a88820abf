//! Dense matrices over GF(q): Gaussian elimination, rank, nullspace,
//! standard form with recorded column permutation, row-space membership.

use std::sync::{Arc, OnceLock};

use crate::field::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols));
        let _ = field;
        Matrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Stacks `self` on top of `other` (same width).
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Side-by-side concatenation (same height).
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { rows: self.rows, cols, data }
    }

    /// A copy restricted to the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j));
            }
        }
        Matrix { rows: self.rows, cols: cols.len(), data }
    }

    /// Reduced row echelon form (pivot search left to right). Returns the
    /// reduced matrix and the pivot column list; rank = number of pivots.
    pub fn rref(&self, field: &Field) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !field.is_zero(m.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let tmp = m.get(r, j);
                    m.set(r, j, m.get(pr, j));
                    m.set(pr, j, tmp);
                }
            }
            let inv = field.inv(m.get(r, c)).unwrap();
            for j in 0..m.cols {
                m.set(r, j, field.mul(inv, m.get(r, j)));
            }
            for i in 0..m.rows {
                if i != r && !field.is_zero(m.get(i, c)) {
                    let factor = m.get(i, c);
                    for j in 0..m.cols {
                        let v = field.sub(m.get(i, j), field.mul(factor, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rref(field).pivots.len()
    }

    /// Basis of the right nullspace {v : M v^T = 0}, one vector per row.
    pub fn nullspace(&self, field: &Field) -> Matrix {
        let Rref { matrix: r, pivots } = self.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(field, free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(bi, fc, field.one());
            for (pi, &pc) in pivots.iter().enumerate() {
                basis.set(bi, pc, field.neg(r.get(pi, fc)));
            }
        }
        basis
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, field: &Field, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.cols);
        let Rref { matrix: r, pivots } = self.rref(field);
        let mut rem = v.to_vec();
        for (pi, &pc) in pivots.iter().enumerate() {
            let c = rem[pc];
            if field.is_zero(c) {
                continue;
            }
            for j in 0..self.cols {
                rem[j] = field.sub(rem[j], field.mul(c, r.get(pi, j)));
            }
        }
        rem.iter().all(|&x| field.is_zero(x))
    }

    /// Solves x * M = rhs for a row vector x (any solution), if one exists.
    pub fn solve_left(&self, field: &Field, rhs: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(rhs.len(), self.cols);
        // transpose-free: solve M^T x^T = rhs^T by eliminating on rows of M
        let mut aug = Matrix::zeros(field, self.rows, self.cols + self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols + i, field.one());
        }
        let red = aug.rref(field);
        let mut x = vec![field.zero(); self.rows];
        let mut rem = rhs.to_vec();
        for (pi, &pc) in red.pivots.iter().enumerate() {
            if pc >= self.cols {
                break;
            }
            let c = rem[pc];
            if field.is_zero(c) {
                continue;
            }
            for j in 0..self.cols {
                rem[j] = field.sub(rem[j], field.mul(c, red.matrix.get(pi, j)));
            }
            for i in 0..self.rows {
                let coeff = red.matrix.get(pi, self.cols + i);
                x[i] = field.add(x[i], field.mul(c, coeff));
            }
        }
        if rem.iter().all(|&v| field.is_zero(v)) {
            Some(x)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Standard form [I | A] together with the column permutation that realizes
/// it (pivot columns first, in order, then the rest).
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub matrix: Matrix,
    pub column_order: Vec<usize>,
    pub rank: usize,
}

/// A generator matrix over GF(q) with cached elimination results.
#[derive(Clone)]
pub struct LinearCodeMatrix {
    field: Arc<Field>,
    matrix: Matrix,
    rref: OnceLock<Rref>,
}

impl LinearCodeMatrix {
    pub fn new(field: Arc<Field>, matrix: Matrix) -> LinearCodeMatrix {
        LinearCodeMatrix { field, matrix, rref: OnceLock::new() }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    fn rref_cached(&self) -> &Rref {
        self.rref.get_or_init(|| self.matrix.rref(&self.field))
    }

    pub fn rank(&self) -> usize {
        self.rref_cached().pivots.len()
    }

    /// Row-reduced standard form with the recorded column permutation.
    pub fn standard_form(&self) -> StandardForm {
        let red = self.rref_cached();
        let rank = red.pivots.len();
        let mut order: Vec<usize> = red.pivots.clone();
        order.extend((0..self.cols()).filter(|c| !red.pivots.contains(c)));
        let mut permuted = red.matrix.select_columns(&order);
        // drop all-zero rows below the rank
        permuted = Matrix {
            rows: rank,
            cols: permuted.cols(),
            data: permuted.data[..rank * permuted.cols()].to_vec(),
        };
        StandardForm { matrix: permuted, column_order: order, rank }
    }

    pub fn nullspace_basis(&self) -> Matrix {
        self.matrix.nullspace(&self.field)
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.matrix.row_space_contains(&self.field, v)
    }

    /// Row spaces coincide (mutual containment via rank checks).
    pub fn same_row_space(&self, other: &LinearCodeMatrix) -> bool {
        if self.cols() != other.cols() {
            return false;
        }
        let ra = self.rank();
        let rb = other.rank();
        ra == rb && self.matrix.vstack(&other.matrix).rank(&self.field) == ra
    }
}
