//! Skew polynomials over GF(q) or over R = F_q + vF_q under the twisted
//! multiplication x*r = theta_i(r)*x.
//!
//! Everything here is right-sided: right division (the workhorse), right
//! gcd via the Euclidean scheme, right lcm from the extended cascade.
//! Left variants are intentionally absent.

use rayon::prelude::*;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::ring::{Ring, RingElement};

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor has a non-unit leading coefficient")]
    NonUnitLeading,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("lcm with a zero polynomial")]
    LcmWithZero,
    #[error("cannot parse polynomial near {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("search needs {needed} division trials, above the budget of {budget}")]
    SearchBudget { needed: u128, budget: u64 },
}

/// Coefficient domain for skew polynomials: a finite field or R = F_q + vF_q.
pub trait CoeffRing {
    type Elem: Copy + PartialEq + Eq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: Self::Elem) -> bool;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// None exactly when `a` has no multiplicative inverse.
    fn try_inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    /// Frobenius power a^(p^j).
    fn frob(&self, a: Self::Elem, j: u32) -> Self::Elem;
    /// Order of the Frobenius (the extension degree m).
    fn frob_order(&self) -> u32;
    fn display_elem(&self, a: Self::Elem) -> String;
}

impl CoeffRing for Field {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        Field::zero(self)
    }
    fn one(&self) -> FieldElement {
        Field::one(self)
    }
    fn is_zero(&self, a: FieldElement) -> bool {
        Field::is_zero(self, a)
    }
    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        Field::add(self, a, b)
    }
    fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        Field::sub(self, a, b)
    }
    fn neg(&self, a: FieldElement) -> FieldElement {
        Field::neg(self, a)
    }
    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        Field::mul(self, a, b)
    }
    fn try_inv(&self, a: FieldElement) -> Option<FieldElement> {
        Field::inv(self, a).ok()
    }
    fn frob(&self, a: FieldElement, j: u32) -> FieldElement {
        Field::frobenius(self, a, j)
    }
    fn frob_order(&self) -> u32 {
        self.m()
    }
    fn display_elem(&self, a: FieldElement) -> String {
        self.display(a)
    }
}

impl CoeffRing for Ring {
    type Elem = RingElement;

    fn zero(&self) -> RingElement {
        Ring::zero(self)
    }
    fn one(&self) -> RingElement {
        Ring::one(self)
    }
    fn is_zero(&self, a: RingElement) -> bool {
        Ring::is_zero(self, a)
    }
    fn add(&self, a: RingElement, b: RingElement) -> RingElement {
        Ring::add(self, a, b)
    }
    fn sub(&self, a: RingElement, b: RingElement) -> RingElement {
        Ring::sub(self, a, b)
    }
    fn neg(&self, a: RingElement) -> RingElement {
        Ring::neg(self, a)
    }
    fn mul(&self, a: RingElement, b: RingElement) -> RingElement {
        Ring::mul(self, a, b)
    }
    fn try_inv(&self, a: RingElement) -> Option<RingElement> {
        Ring::inv(self, a).ok()
    }
    fn frob(&self, a: RingElement, j: u32) -> RingElement {
        self.theta(a, j)
    }
    fn frob_order(&self) -> u32 {
        self.field().m()
    }
    fn display_elem(&self, a: RingElement) -> String {
        self.display(a)
    }
}

/// A twisted polynomial: coefficients ascending in degree plus the
/// automorphism index i (the twist is theta_i, Frobenius to the p^i).
///
/// Invariant: the leading coefficient is nonzero; the zero polynomial is the
/// empty coefficient sequence.
pub struct SkewPoly<C: CoeffRing> {
    coeffs: Vec<C::Elem>,
    auto: u32,
}

impl<C: CoeffRing> Clone for SkewPoly<C> {
    fn clone(&self) -> Self {
        SkewPoly { coeffs: self.coeffs.clone(), auto: self.auto }
    }
}

impl<C: CoeffRing> PartialEq for SkewPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.auto == other.auto && self.coeffs == other.coeffs
    }
}

impl<C: CoeffRing> Eq for SkewPoly<C> {}

impl<C: CoeffRing> std::fmt::Debug for SkewPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SkewPoly[i={}]{:?}", self.auto, self.coeffs)
    }
}

impl<C: CoeffRing> SkewPoly<C> {
    pub fn zero(auto: u32) -> Self {
        SkewPoly { coeffs: Vec::new(), auto }
    }

    pub fn constant(ctx: &C, c: C::Elem, auto: u32) -> Self {
        Self::from_coeffs(ctx, vec![c], auto)
    }

    pub fn one(ctx: &C, auto: u32) -> Self {
        Self::constant(ctx, ctx.one(), auto)
    }

    pub fn from_coeffs(ctx: &C, mut coeffs: Vec<C::Elem>, auto: u32) -> Self {
        while coeffs.last().is_some_and(|&c| ctx.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { coeffs, auto }
    }

    /// x^k
    pub fn x_pow(ctx: &C, k: usize, auto: u32) -> Self {
        let mut coeffs = vec![ctx.zero(); k + 1];
        coeffs[k] = ctx.one();
        SkewPoly { coeffs, auto }
    }

    /// x^n - 1
    pub fn x_pow_minus_one(ctx: &C, n: usize, auto: u32) -> Self {
        let mut coeffs = vec![ctx.zero(); n + 1];
        coeffs[0] = ctx.neg(ctx.one());
        coeffs[n] = ctx.one();
        SkewPoly { coeffs, auto }
    }

    pub fn auto_index(&self) -> u32 {
        self.auto
    }

    pub fn coeffs(&self) -> &[C::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, ctx: &C, j: usize) -> C::Elem {
        self.coeffs.get(j).copied().unwrap_or_else(|| ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<C::Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self, ctx: &C) -> bool {
        self.leading() == Some(ctx.one())
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.auto, other.auto, "skew polynomials with different automorphism indices");
    }

    /// theta_i^k applied to one coefficient: Frobenius power (i*k) mod m.
    fn twist(&self, ctx: &C, a: C::Elem, k: usize) -> C::Elem {
        let m = ctx.frob_order() as u64;
        ctx.frob(a, ((self.auto as u64 * (k as u64 % m)) % m) as u32)
    }

    pub fn add(&self, ctx: &C, other: &Self) -> Self {
        self.assert_compatible(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| ctx.add(self.coeff(ctx, j), other.coeff(ctx, j))).collect();
        Self::from_coeffs(ctx, coeffs, self.auto)
    }

    pub fn sub(&self, ctx: &C, other: &Self) -> Self {
        self.assert_compatible(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| ctx.sub(self.coeff(ctx, j), other.coeff(ctx, j))).collect();
        Self::from_coeffs(ctx, coeffs, self.auto)
    }

    pub fn neg(&self, ctx: &C) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| ctx.neg(c)).collect();
        Self::from_coeffs(ctx, coeffs, self.auto)
    }

    /// Noncommutative product: (a x^m)(b x^n) = a theta_i^m(b) x^(m+n).
    pub fn mul(&self, ctx: &C, other: &Self) -> Self {
        self.assert_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.auto);
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (j, &a) in self.coeffs.iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            for (k, &b) in other.coeffs.iter().enumerate() {
                if ctx.is_zero(b) {
                    continue;
                }
                let term = ctx.mul(a, self.twist(ctx, b, j));
                out[j + k] = ctx.add(out[j + k], term);
            }
        }
        Self::from_coeffs(ctx, out, self.auto)
    }

    /// Left multiplication by a constant: c * f.
    pub fn scale_left(&self, ctx: &C, c: C::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| ctx.mul(c, a)).collect();
        Self::from_coeffs(ctx, coeffs, self.auto)
    }

    /// x^k * f (coefficients pick up theta_i^k).
    pub fn shift_left_twisted(&self, ctx: &C, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![ctx.zero(); k + self.coeffs.len()];
        for (j, &a) in self.coeffs.iter().enumerate() {
            coeffs[k + j] = self.twist(ctx, a, k);
        }
        SkewPoly { coeffs, auto: self.auto }
    }

    /// Right division: g = quot * f + rem with deg rem < deg f.
    ///
    /// Over R the leading coefficient of `f` must be a unit.
    pub fn right_divmod(&self, ctx: &C, f: &Self) -> Result<(Self, Self), PolyError> {
        self.assert_compatible(f);
        let df = f.deg().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = ctx.try_inv(f.leading().unwrap()).ok_or(PolyError::NonUnitLeading)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ctx.zero(); self.coeffs.len().saturating_sub(df)];
        while rem.len() > df {
            let e = rem.len() - 1 - df;
            let lead = *rem.last().unwrap();
            if !ctx.is_zero(lead) {
                // q_e * theta^e(lc(f)) = lead
                let qc = ctx.mul(lead, self.twist(ctx, lead_inv, e));
                quot[e] = qc;
                // rem -= (qc x^e) * f
                for (j, &fj) in f.coeffs.iter().enumerate() {
                    let term = ctx.mul(qc, self.twist(ctx, fj, e));
                    rem[e + j] = ctx.sub(rem[e + j], term);
                }
            }
            rem.pop();
            while rem.last().is_some_and(|&c| ctx.is_zero(c)) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(ctx, quot, self.auto), Self::from_coeffs(ctx, rem, self.auto)))
    }

    /// Exact right quotient; panics if the division leaves a remainder.
    pub fn right_div_exact(&self, ctx: &C, f: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.right_divmod(ctx, f)?;
        assert!(r.is_zero(), "right division was expected to be exact");
        Ok(q)
    }

    /// f |_r g: the remainder of g on right division by f vanishes.
    pub fn right_divides(&self, ctx: &C, g: &Self) -> Result<bool, PolyError> {
        let (_, rem) = g.right_divmod(ctx, self)?;
        Ok(rem.is_zero())
    }

    /// Normalize to monic by a left constant multiple.
    pub fn monic(&self, ctx: &C) -> Result<Self, PolyError> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(lc) => {
                let inv = ctx.try_inv(lc).ok_or(PolyError::NonUnitLeading)?;
                Ok(self.scale_left(ctx, inv))
            }
        }
    }

    /// Monic greatest common right divisor via the right Euclidean scheme.
    pub fn right_gcd(&self, ctx: &C, other: &Self) -> Result<Self, PolyError> {
        self.assert_compatible(other);
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let b_monic = b.monic(ctx)?;
            let (_, r) = a.right_divmod(ctx, &b_monic)?;
            a = b_monic;
            b = r;
        }
        a.monic(ctx)
    }

    /// Monic least common left multiple: the minimal-degree gamma with
    /// f |_r gamma and g |_r gamma, from the extended Euclidean cascade.
    pub fn right_lcm(&self, ctx: &C, other: &Self) -> Result<Self, PolyError> {
        self.assert_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Err(PolyError::LcmWithZero);
        }
        // Track r_k = u_k * f + v_k * g; when r stops at 0, u * f is the lcm.
        let mut r_prev = self.clone();
        let mut r_cur = other.clone();
        let mut u_prev = Self::one(ctx, self.auto);
        let mut u_cur = Self::zero(self.auto);
        while !r_cur.is_zero() {
            let (q, r_next) = r_prev.right_divmod(ctx, &r_cur)?;
            let u_next = u_prev.sub(ctx, &q.mul(ctx, &u_cur));
            r_prev = r_cur;
            r_cur = r_next;
            u_prev = u_cur;
            u_cur = u_next;
        }
        let lcm = u_cur.mul(ctx, self).monic(ctx)?;
        debug_assert!(self.right_divides(ctx, &lcm).unwrap_or(false));
        Ok(lcm)
    }

    /// Reciprocal polynomial: sum theta_i^j(a_(s-j)) x^j for f of degree s.
    pub fn reciprocal_star(&self, ctx: &C) -> Self {
        let Some(s) = self.deg() else {
            return self.clone();
        };
        let coeffs = (0..=s).map(|j| self.twist(ctx, self.coeffs[s - j], j)).collect();
        Self::from_coeffs(ctx, coeffs, self.auto)
    }

    /// Coefficientwise homomorphism: theta_i applied to every coefficient,
    /// k times.
    pub fn theta_map(&self, ctx: &C, k: u32) -> Self {
        let m = ctx.frob_order() as u64;
        let j = (self.auto as u64 * (k as u64 % m) % m) as u32;
        let coeffs = self.coeffs.iter().map(|&c| ctx.frob(c, j)).collect();
        Self::from_coeffs(ctx, coeffs, self.auto)
    }

    /// Remainder modulo x^n - 1: exponents fold mod n with no twist.
    pub fn reduce_mod_xn_minus_one(&self, ctx: &C, n: usize) -> Self {
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut out = vec![ctx.zero(); n];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j % n] = ctx.add(out[j % n], c);
        }
        Self::from_coeffs(ctx, out, self.auto)
    }

    /// x * f reduced mod x^n - 1: the theta_i-cyclic shift on length-n words.
    pub fn mul_x_mod(&self, ctx: &C, n: usize) -> Self {
        let mut out = vec![ctx.zero(); n];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[(j + 1) % n] = ctx.add(out[(j + 1) % n], self.twist(ctx, c, 1));
        }
        Self::from_coeffs(ctx, out, self.auto)
    }

    /// Coefficient word of fixed length n (degree must be below n).
    pub fn word(&self, ctx: &C, n: usize) -> Vec<C::Elem> {
        assert!(self.coeffs.len() <= n, "polynomial does not fit in a length-{n} word");
        let mut w = vec![ctx.zero(); n];
        w[..self.coeffs.len()].copy_from_slice(&self.coeffs);
        w
    }

    pub fn display(&self, ctx: &C) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if ctx.is_zero(c) {
                continue;
            }
            let cs = ctx.display_elem(c);
            let part = match j {
                0 => cs,
                _ => {
                    let xs = if j == 1 { "x".to_string() } else { format!("x^{j}") };
                    if c == ctx.one() {
                        xs
                    } else {
                        format!("{cs}*{xs}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl SkewPoly<Ring> {
    /// CRT components (f_v, f_v') with f = v f_v + v' f_v'.
    pub fn decompose(&self, ring: &Ring) -> (SkewPoly<Field>, SkewPoly<Field>) {
        let f = ring.field();
        let mut cv = Vec::with_capacity(self.coeffs.len());
        let mut cvp = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            let (c0, c1) = ring.split(c);
            cv.push(c0);
            cvp.push(c1);
        }
        (SkewPoly::from_coeffs(f, cv, self.auto), SkewPoly::from_coeffs(f, cvp, self.auto))
    }

    pub fn compose(ring: &Ring, fv: &SkewPoly<Field>, fvp: &SkewPoly<Field>) -> SkewPoly<Ring> {
        assert_eq!(fv.auto, fvp.auto);
        let f = ring.field();
        let n = fv.coeffs.len().max(fvp.coeffs.len());
        let coeffs = (0..n).map(|j| ring.join(fv.coeff(f, j), fvp.coeff(f, j))).collect();
        SkewPoly::from_coeffs(ring, coeffs, fv.auto)
    }

    pub fn lift(ring: &Ring, f: &SkewPoly<Field>) -> SkewPoly<Ring> {
        SkewPoly::compose(ring, f, f)
    }
}

/// All monic degree-d right divisors of x^n - 1 over GF(q), by exhaustive
/// enumeration of the q^d monic candidates. Refuses when the trial count
/// exceeds the budget.
pub fn right_divisors_search(
    field: &Field,
    auto: u32,
    n: usize,
    d: usize,
    budget: u64,
) -> Result<Vec<SkewPoly<Field>>, PolyError> {
    let q = field.q() as u128;
    let needed = q.checked_pow(d as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(PolyError::SearchBudget { needed, budget });
    }
    if d == 0 {
        return Ok(vec![SkewPoly::one(field, auto)]);
    }
    let target = SkewPoly::x_pow_minus_one(field, n, auto);
    let decode = |idx: u64| {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut v = idx;
        for _ in 0..d {
            coeffs.push(field.from_raw_index((v % q as u64) as u32));
            v /= q as u64;
        }
        coeffs.push(field.one());
        SkewPoly::from_coeffs(field, coeffs, auto)
    };
    let found: Vec<SkewPoly<Field>> = (0..needed as u64)
        .into_par_iter()
        .filter_map(|idx| {
            let cand = decode(idx);
            match cand.right_divides(field, &target) {
                Ok(true) => Some(cand),
                _ => None,
            }
        })
        .collect();
    Ok(found)
}

/// Parses the polynomial grammar: `x^k` terms with field tokens as
/// coefficients, `*` optional, whitespace-insensitive, `+`/`-` separators.
pub fn parse_poly(field: &Field, auto: u32, text: &str) -> Result<SkewPoly<Field>, PolyError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyError::Parse(text.into()));
    }
    if compact == "0" {
        return Ok(SkewPoly::zero(auto));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false; // negative?
    let mut chars = compact.chars().peekable();
    // leading sign
    if let Some(&c) = chars.peek() {
        if c == '-' {
            sign = true;
            chars.next();
        } else if c == '+' {
            chars.next();
        }
    }
    let mut prev: Option<char> = None;
    for c in chars {
        if (c == '+' || c == '-') && prev != Some('^') {
            terms.push((sign, std::mem::take(&mut cur)));
            sign = c == '-';
        } else {
            cur.push(c);
        }
        prev = Some(c);
    }
    terms.push((sign, cur));

    let mut coeffs: Vec<FieldElement> = Vec::new();
    let set = |deg: usize, c: FieldElement, coeffs: &mut Vec<FieldElement>| {
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, field.zero());
        }
        coeffs[deg] = field.add(coeffs[deg], c);
    };
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(PolyError::Parse(text.into()));
        }
        let (coeff_txt, deg) = match term.find('x') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let after = &term[pos + 1..];
                let deg = if after.is_empty() {
                    1
                } else {
                    let e = after.strip_prefix('^').ok_or_else(|| PolyError::Parse(term.clone()))?;
                    e.parse::<usize>().map_err(|_| PolyError::Parse(term.clone()))?
                };
                (term[..pos].trim_end_matches('*'), deg)
            }
        };
        let coeff = if coeff_txt.is_empty() { field.one() } else { field.parse_element(coeff_txt)? };
        let coeff = if neg { field.neg(coeff) } else { coeff };
        set(deg, coeff, &mut coeffs);
    }
    Ok(SkewPoly::from_coeffs(field, coeffs, auto))
}
