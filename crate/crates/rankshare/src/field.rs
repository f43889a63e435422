//! Exact arithmetic in GF(q) for q = p^e <= 256.
//!
//! Elements are stored as integer representatives in `0..q`. For extension
//! fields the representative packs the polynomial coefficients in base p,
//! little-endian: `v = c_0 + c_1 p + ... + c_{e-1} p^{e-1}` stands for the
//! residue `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` modulo the field modulus.
//! All four operation tables are precomputed at construction, so arithmetic
//! is table lookups from then on.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 256;

/// An element representative; always `< q` of its field.
pub type Elem = u16;

#[derive(Debug)]
struct FieldInner {
    p: u16,
    e: u32,
    q: u16,
    /// Monic modulus, little-endian coefficients, length e+1. For e = 1 this
    /// is the formal `x - 0`, unused by the arithmetic.
    modulus: Vec<u16>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// A finite field GF(p^e), cheap to clone (shared tables).
#[derive(Clone, Debug)]
pub struct FiniteField(Arc<FieldInner>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FiniteField {}

impl std::hash::Hash for FiniteField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.e.hash(state);
        self.0.modulus.hash(state);
    }
}

impl PartialOrd for FiniteField {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteField {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.p, self.0.e, &self.0.modulus).cmp(&(other.0.p, other.0.e, &other.0.modulus))
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.e)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial helpers over F_p, coefficients little-endian in `Vec<u16>`.
mod poly {
    pub fn trim(v: &mut Vec<u16>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u16], b: &[u16], p: u16) -> Vec<u16> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai as u32 * bj as u32) % p as u32;
            }
        }
        let mut out: Vec<u16> = out.into_iter().map(|c| c as u16).collect();
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem(a: &[u16], m: &[u16], p: u16) -> Vec<u16> {
        let mut r: Vec<u16> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                let idx = i + shift;
                let sub = (lead as u32 * mi as u32) % p as u32;
                let cur = r[idx] as u32;
                r[idx] = ((cur + p as u32 - sub as u32 % p as u32) % p as u32) as u16;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    /// True if the monic polynomial `m` of degree >= 1 has no monic divisor
    /// of degree in `1..deg(m)`. Brute force; fine for the supported range.
    pub fn is_irreducible(m: &[u16], p: u16) -> bool {
        let deg = m.len() - 1;
        if deg == 1 {
            return true;
        }
        for d in 1..=deg / 2 {
            // all monic polynomials of degree d: p^d candidates
            let count = (p as u64).pow(d as u32);
            for enc in 0..count {
                let mut cand = decode(enc, p, d);
                cand.push(1); // monic
                if divides(&cand, m, p) {
                    return false;
                }
            }
        }
        true
    }

    fn divides(d: &[u16], m: &[u16], p: u16) -> bool {
        rem(m, d, p).is_empty()
    }

    /// Low coefficients of a polynomial from a base-p integer encoding.
    pub fn decode(enc: u64, p: u16, len: usize) -> Vec<u16> {
        let mut v = Vec::with_capacity(len);
        let mut n = enc;
        for _ in 0..len {
            v.push((n % p as u64) as u16);
            n /= p as u64;
        }
        v
    }
}

impl FiniteField {
    /// Build GF(p^e). When `modulus` is omitted and e > 1, the monic
    /// irreducible of degree e whose packed base-p coefficient value is
    /// smallest is chosen; for GF(4) this is x^2 + x + 1, for GF(8) it is
    /// x^3 + x + 1.
    pub fn new(p: u64, e: u32, modulus: Option<&[u16]>) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e < 1 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("order {p}^{e} exceeds {MAX_ORDER}")))?;
        let p = p as u16;
        let q = q as u16;

        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            match modulus {
                Some(m) => {
                    let mut m = m.to_vec();
                    poly::trim(&mut m);
                    if m.len() != e as usize + 1 {
                        return Err(Error::InvalidField(format!(
                            "modulus must have degree {e}"
                        )));
                    }
                    if m[e as usize] != 1 {
                        return Err(Error::InvalidField("modulus must be monic".into()));
                    }
                    if m.iter().any(|&c| c >= p) {
                        return Err(Error::InvalidField(
                            "modulus coefficients must be < p".into(),
                        ));
                    }
                    if !poly::is_irreducible(&m, p) {
                        return Err(Error::InvalidField("modulus is reducible".into()));
                    }
                    m
                }
                None => Self::least_irreducible(p, e),
            }
        };

        Ok(FiniteField(Arc::new(Self::build_tables(p, e, q, modulus))))
    }

    /// Prime field shorthand.
    pub fn prime(p: u64) -> Result<FiniteField> {
        FiniteField::new(p, 1, None)
    }

    fn least_irreducible(p: u16, e: u32) -> Vec<u16> {
        let count = (p as u64).pow(e);
        for enc in 0..count {
            let mut cand = poly::decode(enc, p, e as usize);
            cand.push(1);
            if poly::is_irreducible(&cand, p) {
                return cand;
            }
        }
        unreachable!("an irreducible of every degree exists over F_p")
    }

    fn build_tables(p: u16, e: u32, q: u16, modulus: Vec<u16>) -> FieldInner {
        let qs = q as usize;
        let mut add = vec![0 as Elem; qs * qs];
        let mut mul = vec![0 as Elem; qs * qs];
        let mut neg = vec![0 as Elem; qs];

        let enc = |coeffs: &[u16]| -> Elem {
            let mut v = 0u64;
            for &c in coeffs.iter().rev() {
                v = v * p as u64 + c as u64;
            }
            v as Elem
        };

        for a in 0..q {
            let pa = poly::decode(a as u64, p, e as usize);
            let mut na = vec![0u16; e as usize];
            for (i, &c) in pa.iter().enumerate() {
                na[i] = (p - c) % p;
            }
            neg[a as usize] = enc(&na);
            for b in 0..q {
                let pb = poly::decode(b as u64, p, e as usize);
                let mut s = vec![0u16; e as usize];
                for i in 0..e as usize {
                    s[i] = (pa[i] + pb[i]) % p;
                }
                add[a as usize * qs + b as usize] = enc(&s);
                let prod = poly::rem(&poly::mul(&pa, &pb, p), &modulus, p);
                let mut padded = prod.clone();
                padded.resize(e as usize, 0);
                mul[a as usize * qs + b as usize] = enc(&padded);
            }
        }

        let mut inv = vec![0 as Elem; qs];
        for a in 1..q {
            for b in 1..q {
                if mul[a as usize * qs + b as usize] == 1 {
                    inv[a as usize] = b;
                    break;
                }
            }
        }

        FieldInner {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn p(&self) -> u16 {
        self.0.p
    }
    pub fn e(&self) -> u32 {
        self.0.e
    }
    pub fn order(&self) -> u16 {
        self.0.q
    }
    /// Modulus coefficients, little-endian, length e+1. Meaningless for e = 1.
    pub fn modulus(&self) -> &[u16] {
        &self.0.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.0.add[a as usize * self.0.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.mul[a as usize * self.0.q as usize + b as usize]
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero in {self}");
        self.0.inv[a as usize]
    }

    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc: Elem = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Checks that a representative is valid for this field.
    pub fn check_elem(&self, a: u64) -> Result<Elem> {
        if a < self.0.q as u64 {
            Ok(a as Elem)
        } else {
            Err(Error::InvalidArgument(format!(
                "{a} is not an element representative of {self}"
            )))
        }
    }
}
