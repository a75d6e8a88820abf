//! Exact arithmetic in GF(p^m) with a designated primitive element `t` and
//! the Frobenius automorphism family `theta_i : a -> a^(p^i)`.
//!
//! Elements live in log form: an element is either zero or `t^e` with the
//! exponent reduced mod `q - 1`. Addition goes through a precomputed Zech
//! logarithm table, so the whole field fits in three flat arrays and every
//! operation is a couple of table lookups. A parallel coefficient-vector view
//! (digits of the residue polynomial in `t`) is kept for I/O.

use std::fmt;
use thiserror::Error;

/// Sentinel in the Zech table: `1 + t^d = 0` at that offset.
const ZECH_NONE: u32 = u32::MAX;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("modulus must be monic of degree m with coefficients below p")]
    BadModulus,
    #[error("modulus is reducible over GF({p})")]
    Reducible { p: u32 },
    #[error("x is not primitive modulo the given modulus (order {order} < {expect})")]
    NotPrimitive { order: u32, expect: u32 },
    #[error("no built-in modulus for GF({p}^{m}); supply one explicitly")]
    NoDefaultModulus { p: u32, m: u32 },
    #[error("field too large: q = p^m must stay below 2^16")]
    TooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse field element from {0:?}")]
    Parse(String),
    #[error("prime-subfield literal {0} is not below p = {1}")]
    LiteralRange(u32, u32),
}

/// Built-in moduli (Conway polynomials), ascending coefficients.
/// `x` is a primitive element for each of these; construction re-verifies.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 1, &[3, 1]),
    (7, 1, &[4, 1]),
];

/// An element of GF(p^m): zero, or `t^e` in canonical log form.
///
/// The tag ties the element to the field it was made by; mixing elements of
/// different fields is a programming error and trips an assertion.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    tag: u32,
    /// 0 encodes zero, `1 + e` encodes `t^e`.
    idx: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.idx == 0 {
            write!(f, "0")
        } else {
            write!(f, "t^{}", self.idx - 1)
        }
    }
}

/// The arithmetic context for one finite field. Immutable after construction
/// and freely shareable across threads.
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    qm1: u32,
    modulus: Vec<u32>,
    tag: u32,
    label: Option<String>,
    /// exponent -> packed base-p digit vector of t^e
    exp_packed: Vec<u32>,
    /// packed vector -> element index (0 = zero, 1 + e = t^e)
    log_packed: Vec<u32>,
    /// zech[d] = z with 1 + t^d = t^z, or ZECH_NONE when the sum is zero
    zech: Vec<u32>,
    /// p^i mod (q-1) for i in 0..m
    frob_mul: Vec<u32>,
    /// exponent offset of -1 (0 in characteristic 2)
    neg_off: u32,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{} mod {:?})", self.p, self.m, self.modulus)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense commutative polynomial arithmetic over GF(p), used only while
/// setting up a field (irreducibility check, power table generation).
mod gfp {
    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while a.len() > db {
            let k = a.len() - 1 - db;
            let c = (a[a.len() - 1] * lead_inv) % p;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    let idx = k + j;
                    a[idx] = (a[idx] + p * p - (c * bj) % p) % p;
                }
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime and small; exponentiation is plenty
        let mut r = 1u64;
        let mut b = a as u64 % p as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }
}

impl Field {
    /// Builds GF(p^m) from an explicit monic modulus (ascending coefficients,
    /// length m + 1). Verifies primality, irreducibility and that the residue
    /// class of x has full multiplicative order q - 1.
    pub fn new(p: u32, m: u32, modulus: &[u32], label: Option<String>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m < 1 {
            return Err(FieldError::BadDegree);
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= 1 << 16).ok_or(FieldError::TooLarge)? as u32;
        if modulus.len() != m as usize + 1
            || modulus[m as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(FieldError::BadModulus);
        }
        Self::check_irreducible(p, modulus)?;

        let qm1 = q - 1;
        // Powers of x modulo the modulus, packed base p.
        let mut exp_packed = vec![0u32; qm1 as usize];
        let mut log_packed = vec![u32::MAX; q as usize];
        log_packed[0] = 0;
        let mut cur = vec![1u32]; // t^0
        for e in 0..qm1 {
            let packed = pack(&cur, p);
            exp_packed[e as usize] = packed;
            if log_packed[packed as usize] != u32::MAX {
                return Err(FieldError::NotPrimitive { order: e, expect: qm1 });
            }
            log_packed[packed as usize] = e + 1;
            // multiply by x and reduce
            cur.insert(0, 0);
            gfp::trim(&mut cur);
            if cur.len() == m as usize + 1 {
                cur = gfp::rem(cur, modulus, p);
            }
        }
        if pack(&cur, p) != 1 {
            // after q-1 steps we must be back at 1
            return Err(FieldError::NotPrimitive { order: qm1, expect: qm1 });
        }

        let mut zech = vec![0u32; qm1 as usize];
        for d in 0..qm1 {
            let s = add_packed(1, exp_packed[d as usize], p, m);
            zech[d as usize] = if s == 0 { ZECH_NONE } else { log_packed[s as usize] - 1 };
        }

        let mut frob_mul = Vec::with_capacity(m as usize);
        let mut f = 1u64;
        for _ in 0..m {
            frob_mul.push((f % qm1 as u64) as u32);
            f = f * p as u64 % qm1 as u64;
        }

        let tag = fnv_tag(p, m, modulus);
        Ok(Field {
            p,
            m,
            q,
            qm1,
            modulus: modulus.to_vec(),
            tag,
            label,
            exp_packed,
            log_packed,
            zech,
            frob_mul,
            neg_off: if p == 2 { 0 } else { qm1 / 2 },
        })
    }

    /// GF(p^m) with the built-in default modulus.
    pub fn with_default_modulus(p: u32, m: u32) -> Result<Field, FieldError> {
        let modulus = DEFAULT_MODULI
            .iter()
            .find(|&&(dp, dm, _)| dp == p && dm == m)
            .map(|&(_, _, md)| md)
            .ok_or(FieldError::NoDefaultModulus { p, m })?;
        Field::new(p, m, modulus, None)
    }

    fn check_irreducible(p: u32, modulus: &[u32]) -> Result<(), FieldError> {
        let m = modulus.len() - 1;
        // trial division by every monic polynomial of degree 1..=m/2
        for d in 1..=m / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                let mut v = idx;
                for _ in 0..d {
                    cand.push((v % p as u64) as u32);
                    v /= p as u64;
                }
                cand.push(1);
                if gfp::rem(modulus.to_vec(), &cand, p).is_empty() {
                    return Err(FieldError::Reducible { p });
                }
            }
        }
        Ok(())
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    fn check(&self, a: FieldElement) -> u32 {
        assert_eq!(a.tag, self.tag, "field element used with a mismatched field");
        a.idx
    }

    #[inline]
    fn elem(&self, idx: u32) -> FieldElement {
        FieldElement { tag: self.tag, idx }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }
    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }
    /// The designated primitive element.
    pub fn t(&self) -> FieldElement {
        if self.q == 2 {
            self.one()
        } else {
            self.elem(2)
        }
    }

    pub fn from_exp(&self, e: u64) -> FieldElement {
        self.elem((e % self.qm1 as u64) as u32 + 1)
    }

    /// The prime-subfield element 1 + 1 + ... (c times).
    pub fn from_prime(&self, c: u32) -> Result<FieldElement, FieldError> {
        if c >= self.p {
            return Err(FieldError::LiteralRange(c, self.p));
        }
        Ok(self.elem(self.log_packed[c as usize]))
    }

    /// Element from its coefficient-vector view (ascending digits, base p).
    pub fn from_vec(&self, digits: &[u32]) -> FieldElement {
        assert!(digits.len() <= self.m as usize && digits.iter().all(|&d| d < self.p));
        self.elem(self.log_packed[pack(digits, self.p) as usize])
    }

    /// Coefficient-vector view (length m). Roundtrips with `from_vec`.
    pub fn vec_of(&self, a: FieldElement) -> Vec<u32> {
        let idx = self.check(a);
        let mut packed = if idx == 0 { 0 } else { self.exp_packed[(idx - 1) as usize] };
        let mut out = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            out.push(packed % self.p);
            packed /= self.p;
        }
        out
    }

    /// Discrete log of a nonzero element.
    pub fn exp_of(&self, a: FieldElement) -> Option<u32> {
        let idx = self.check(a);
        if idx == 0 {
            None
        } else {
            Some(idx - 1)
        }
    }

    pub fn is_zero(&self, a: FieldElement) -> bool {
        self.check(a) == 0
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.check(a), self.check(b));
        self.elem(self.raw().add(x, y))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let x = self.check(a);
        self.elem(self.raw().neg(x))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.check(a), self.check(b));
        self.elem(self.raw().mul(x, y))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let x = self.check(a);
        if x == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.elem((self.qm1 - (x - 1)) % self.qm1 + 1))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        let x = self.check(a);
        if x == 0 {
            return if k == 0 { self.one() } else { self.zero() };
        }
        self.from_exp((x - 1) as u64 % self.qm1 as u64 * (k % self.qm1 as u64) % self.qm1 as u64)
    }

    /// Frobenius power: `a^(p^i)`, with `i` taken mod m.
    pub fn frobenius(&self, a: FieldElement, i: u32) -> FieldElement {
        let x = self.check(a);
        if x == 0 {
            return a;
        }
        let f = self.frob_mul[(i % self.m) as usize] as u64;
        self.elem(((x - 1) as u64 * f % self.qm1 as u64) as u32 + 1)
    }

    /// Raw table-driven operations on element indices, for hot loops.
    pub(crate) fn raw(&self) -> RawOps<'_> {
        RawOps { qm1: self.qm1, zech: &self.zech, neg_off: self.neg_off }
    }

    pub(crate) fn raw_index(&self, a: FieldElement) -> u32 {
        self.check(a)
    }

    pub(crate) fn from_raw_index(&self, idx: u32) -> FieldElement {
        debug_assert!(idx <= self.qm1);
        self.elem(idx)
    }

    /// Parses `0`, a prime-subfield literal below p, `t`, or `t^k`.
    pub fn parse_element(&self, token: &str) -> Result<FieldElement, FieldError> {
        let tok = token.trim();
        if tok == "t" {
            return Ok(self.t());
        }
        if let Some(exp) = tok.strip_prefix("t^") {
            let e: u64 = exp.trim().parse().map_err(|_| FieldError::Parse(tok.into()))?;
            return Ok(self.from_exp(e));
        }
        if let Ok(c) = tok.parse::<u32>() {
            if c >= self.p {
                return Err(FieldError::LiteralRange(c, self.p));
            }
            return self.from_prime(c);
        }
        Err(FieldError::Parse(tok.into()))
    }

    /// Canonical text form: `0`, a prime-subfield digit, `t`, or `t^k`.
    pub fn display(&self, a: FieldElement) -> String {
        let idx = self.check(a);
        if idx == 0 {
            return "0".into();
        }
        let packed = self.exp_packed[(idx - 1) as usize];
        if packed < self.p {
            return packed.to_string();
        }
        if idx == 2 {
            return "t".into();
        }
        format!("t^{}", idx - 1)
    }
}

/// Zech-table arithmetic on raw element indices (0 = zero, 1 + e = t^e).
#[derive(Copy, Clone)]
pub(crate) struct RawOps<'a> {
    pub qm1: u32,
    zech: &'a [u32],
    neg_off: u32,
}

impl RawOps<'_> {
    #[inline(always)]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        if x == 0 {
            return y;
        }
        if y == 0 {
            return x;
        }
        let (ex, ey) = (x - 1, y - 1);
        let d = if ey >= ex { ey - ex } else { ey + self.qm1 - ex };
        let z = self.zech[d as usize];
        if z == ZECH_NONE {
            0
        } else {
            let mut e = ex + z;
            if e >= self.qm1 {
                e -= self.qm1;
            }
            e + 1
        }
    }

    #[inline(always)]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let mut e = x - 1 + y - 1;
        if e >= self.qm1 {
            e -= self.qm1;
        }
        e + 1
    }

    #[inline(always)]
    pub fn neg(&self, x: u32) -> u32 {
        if x == 0 || self.neg_off == 0 {
            return x;
        }
        let mut e = x - 1 + self.neg_off;
        if e >= self.qm1 {
            e -= self.qm1;
        }
        e + 1
    }

    #[inline(always)]
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }
}

fn pack(digits: &[u32], p: u32) -> u32 {
    let mut v = 0u32;
    for &d in digits.iter().rev() {
        v = v * p + d;
    }
    v
}

fn add_packed(a: u32, b: u32, p: u32, m: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut mult = 1u32;
    for _ in 0..m {
        out += (a % p + b % p) % p * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    out
}

fn fnv_tag(p: u32, m: u32, modulus: &[u32]) -> u32 {
    let mut h = 0x811c9dc5u32;
    let mut accum = |v: u32| {
        for byte in v.to_le_bytes() {
            h ^= byte as u32;
            h = h.wrapping_mul(0x01000193);
        }
    };
    accum(p);
    accum(m);
    for &c in modulus {
        accum(c);
    }
    h
}
