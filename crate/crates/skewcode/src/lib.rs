//! Double skew cyclic codes over R = F_q + vF_q (v^2 = v): construction and
//! validation from generator polynomials, Gray images over F_q, dual codes,
//! and exact minimum-distance computation.

pub mod field;
pub mod ring;
pub mod construction;
pub mod distance;
pub mod doublecode;
pub mod dual;
pub mod gray;
pub mod matrix;
pub mod skewpoly;
