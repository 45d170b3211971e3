//! Exact arithmetic in small finite fields `GF(p^k)`.
//!
//! Elements are canonical indices `0..p^k` encoding the coefficient tuple of
//! the polynomial-basis representative, little-endian: the element with
//! coefficients `(c_0, .., c_{k-1})` has index `sum c_i p^i`.  All arithmetic
//! is table-driven; fields are interned so that `Gf::get(p, k)` always hands
//! back the same instance with the same fixed modulus (a Conway polynomial
//! where tabulated, otherwise the lexicographically least monic irreducible),
//! which keeps every serialized artifact reproducible.
//!
//! Two pieces of extra structure are carried when they exist: the involutory
//! automorphism `sigma: x -> x^(p^(k/2))` for even `k` (the hermitian forms
//! need it) and the inverse of Frobenius in characteristic 2 (every finite
//! field is perfect, so square roots are unique there).

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU16, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

/// Default cap on the field order; keeps every exhaustive scan desk-scale.
pub const DEFAULT_ORDER_BOUND: u64 = 81;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be positive")]
    DegreeZero,
    #[error("field order {order} exceeds the configured bound {bound}")]
    TooLarge { order: u64, bound: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field has no involution (degree must be even)")]
    NoInvolution,
    #[error("operation requires characteristic 2")]
    WrongCharacteristic,
    #[error("element index {0} out of range")]
    BadElement(u64),
}

/// A field element: canonical index plus the id of its owning field.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe {
    fid: u16,
    val: u16,
}

impl Fe {
    /// Canonical index of the element in `0..p^k`.
    pub fn index(self) -> u64 {
        self.val as u64
    }

    pub fn is_zero(self) -> bool {
        self.val == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({})", self.val)
    }
}

/// Binary/unary operations accepted by [`Gf::arith`].
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

struct GfInner {
    fid: u16,
    p: u64,
    k: u32,
    order: u64,
    /// Modulus coefficients, little-endian, length `k + 1`, leading 1.
    modulus: Vec<u64>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    sigma: Option<Vec<u16>>,
    sqrt: Option<Vec<u16>>,
}

/// Handle to an interned finite field.
#[derive(Clone)]
pub struct Gf(Arc<GfInner>);

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.0.fid == other.0.fid
    }
}
impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.k)
        }
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "gf({})", self.0.p)
        } else {
            write!(f, "gf({}^{})", self.0.p, self.0.k)
        }
    }
}

/// Conway polynomials for the composite orders below the default bound,
/// little-endian including the leading coefficient.
const CONWAY: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- polynomial helpers over GF(p), coefficients little-endian ---

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(p, m[dm]);
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = (r[dr] * lead_inv) % p;
        for i in 0..=dm {
            let idx = dr - dm + i;
            r[idx] = (r[idx] + p * c - (c * m[i]) % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn mod_inv(p: u64, a: u64) -> u64 {
    // p is prime and small; Fermat is plenty.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

fn encode(p: u64, coeffs: &[u64]) -> u64 {
    let mut v = 0;
    for &c in coeffs.iter().rev() {
        v = v * p + (c % p);
    }
    v
}

fn decode(p: u64, k: u32, mut v: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(v % p);
        v /= p;
    }
    out
}

/// Every monic polynomial of degree `deg` over GF(p), in lexicographic order
/// of the little-endian tuple of non-leading coefficients.
fn monic_polys(p: u64, deg: u32) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(deg);
    (0..count).map(move |v| {
        let mut c = decode(p, deg, v);
        c.push(1);
        c
    })
}

fn is_irreducible(p: u64, m: &[u64]) -> bool {
    let deg = (m.len() - 1) as u32;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for cand in monic_polys(p, d) {
            if poly_rem(p, m, &cand).is_empty() {
                return false;
            }
        }
    }
    true
}

fn pick_modulus(p: u64, k: u32) -> Vec<u64> {
    for &(cp, ck, coeffs) in CONWAY {
        if cp == p && ck == k {
            return coeffs.to_vec();
        }
    }
    monic_polys(p, k)
        .find(|m| is_irreducible(p, m))
        .expect("an irreducible polynomial of every degree exists over GF(p)")
}

static REGISTRY: OnceLock<Mutex<HashMap<(u64, u32), Gf>>> = OnceLock::new();
static NEXT_FID: AtomicU16 = AtomicU16::new(0);

impl Gf {
    /// Interned field of order `p^k` under the default size bound.
    pub fn new(p: u64, k: u32) -> Result<Gf, GfError> {
        Gf::with_bound(p, k, DEFAULT_ORDER_BOUND)
    }

    /// Interned field of order `p^k`, capped at `bound`.
    pub fn with_bound(p: u64, k: u32, bound: u64) -> Result<Gf, GfError> {
        if !is_prime(p) {
            return Err(GfError::NonPrime(p));
        }
        if k == 0 {
            return Err(GfError::DegreeZero);
        }
        let order = p
            .checked_pow(k)
            .ok_or(GfError::TooLarge { order: u64::MAX, bound })?;
        if order > bound {
            return Err(GfError::TooLarge { order, bound });
        }
        let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = registry.lock().unwrap();
        if let Some(gf) = map.get(&(p, k)) {
            return Ok(gf.clone());
        }
        let gf = Gf(Arc::new(build_field(p, k, order)));
        map.insert((p, k), gf.clone());
        Ok(gf)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Little-endian modulus coefficients (length `k + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn has_involution(&self) -> bool {
        self.0.sigma.is_some()
    }

    pub fn char_is_two(&self) -> bool {
        self.0.p == 2
    }

    pub fn zero(&self) -> Fe {
        Fe { fid: self.0.fid, val: 0 }
    }

    pub fn one(&self) -> Fe {
        Fe { fid: self.0.fid, val: 1 }
    }

    /// Element with canonical index `v`.
    pub fn el(&self, v: u64) -> Fe {
        assert!(v < self.0.order, "element index out of range");
        Fe { fid: self.0.fid, val: v as u16 }
    }

    pub fn try_el(&self, v: u64) -> Result<Fe, GfError> {
        if v < self.0.order {
            Ok(self.el(v))
        } else {
            Err(GfError::BadElement(v))
        }
    }

    /// Element from its little-endian coefficient tuple (length at most `k`).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe, GfError> {
        if coeffs.len() > self.0.k as usize {
            return Err(GfError::BadElement(encode(self.0.p, coeffs)));
        }
        Ok(self.el(encode(self.0.p, coeffs)))
    }

    /// Little-endian coefficient tuple of `a` (length `k`).
    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        self.check(a);
        decode(self.0.p, self.0.k, a.val as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        let fid = self.0.fid;
        (0..self.0.order).map(move |v| Fe { fid, val: v as u16 })
    }

    fn check(&self, a: Fe) {
        debug_assert_eq!(a.fid, self.0.fid, "element from a different field");
    }

    // Raw-index arithmetic; the workhorses for the linear algebra layer.
    #[inline]
    pub(crate) fn vadd(&self, a: u16, b: u16) -> u16 {
        self.0.add[a as usize * self.0.order as usize + b as usize]
    }
    #[inline]
    pub(crate) fn vmul(&self, a: u16, b: u16) -> u16 {
        self.0.mul[a as usize * self.0.order as usize + b as usize]
    }
    #[inline]
    pub(crate) fn vneg(&self, a: u16) -> u16 {
        self.0.neg[a as usize]
    }
    #[inline]
    pub(crate) fn vsub(&self, a: u16, b: u16) -> u16 {
        self.vadd(a, self.vneg(b))
    }
    #[inline]
    pub(crate) fn vinv(&self, a: u16) -> u16 {
        debug_assert!(a != 0);
        self.0.inv[a as usize]
    }
    #[inline]
    pub(crate) fn vsigma(&self, a: u16) -> u16 {
        self.0.sigma.as_ref().expect("no involution")[a as usize]
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        Fe { fid: self.0.fid, val: self.vadd(a.val, b.val) }
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        Fe { fid: self.0.fid, val: self.vsub(a.val, b.val) }
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.check(a);
        self.check(b);
        Fe { fid: self.0.fid, val: self.vmul(a.val, b.val) }
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.check(a);
        Fe { fid: self.0.fid, val: self.vneg(a.val) }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, GfError> {
        self.check(a);
        if a.val == 0 {
            return Err(GfError::DivisionByZero);
        }
        Ok(Fe { fid: self.0.fid, val: self.vinv(a.val) })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        self.check(a);
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Checked entry point with full error reporting; the CLI surface.
    pub fn arith(&self, a: Fe, b: Option<Fe>, op: ArithOp) -> Result<Fe, GfError> {
        if a.fid != self.0.fid || b.map_or(false, |b| b.fid != self.0.fid) {
            return Err(GfError::FieldMismatch);
        }
        match op {
            ArithOp::Neg => Ok(self.neg(a)),
            ArithOp::Inv => self.inv(a),
            _ => {
                let b = b.ok_or(GfError::FieldMismatch)?;
                match op {
                    ArithOp::Add => Ok(self.add(a, b)),
                    ArithOp::Sub => Ok(self.sub(a, b)),
                    ArithOp::Mul => Ok(self.mul(a, b)),
                    ArithOp::Div => self.div(a, b),
                    _ => unreachable!(),
                }
            }
        }
    }

    /// The involution `x -> x^(p^(k/2))`, defined when `k` is even.
    pub fn sigma(&self, a: Fe) -> Result<Fe, GfError> {
        self.check(a);
        match &self.0.sigma {
            Some(table) => Ok(Fe { fid: self.0.fid, val: table[a.val as usize] }),
            None => Err(GfError::NoInvolution),
        }
    }

    /// Unique square root in characteristic 2 (inverse of Frobenius).
    pub fn sqrt_char2(&self, a: Fe) -> Result<Fe, GfError> {
        self.check(a);
        match &self.0.sqrt {
            Some(table) => Ok(Fe { fid: self.0.fid, val: table[a.val as usize] }),
            None => Err(GfError::WrongCharacteristic),
        }
    }
}

fn build_field(p: u64, k: u32, order: u64) -> GfInner {
    let modulus = pick_modulus(p, k);
    assert!(
        is_irreducible(p, &modulus),
        "modulus for GF({p}^{k}) must be irreducible"
    );
    let n = order as usize;
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    let mut neg = vec![0u16; n];
    for a in 0..n {
        let ca = decode(p, k, a as u64);
        let negc: Vec<u64> = ca.iter().map(|&c| (p - c) % p).collect();
        neg[a] = encode(p, &negc) as u16;
        for b in a..n {
            let cb = decode(p, k, b as u64);
            let sum: Vec<u64> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
            let s = encode(p, &sum) as u16;
            add[a * n + b] = s;
            add[b * n + a] = s;
            let prod = poly_rem(p, &poly_mul(p, &ca, &cb), &modulus);
            let mut padded = prod;
            padded.resize(k as usize, 0);
            let m = encode(p, &padded) as u16;
            mul[a * n + b] = m;
            mul[b * n + a] = m;
        }
    }
    let mut inv = vec![0u16; n];
    for a in 1..n {
        for b in 1..n {
            if mul[a * n + b] == 1 {
                inv[a] = b as u16;
                break;
            }
        }
        assert!(inv[a] != 0, "every nonzero element has an inverse");
    }
    let pow_tbl = |e: u64| -> Vec<u16> {
        (0..n)
            .map(|a| {
                let mut acc = 1u16;
                let mut base = a as u16;
                let mut e = e;
                if a == 0 {
                    return if e == 0 { 1 } else { 0 };
                }
                while e > 0 {
                    if e & 1 == 1 {
                        acc = mul[acc as usize * n + base as usize];
                    }
                    base = mul[base as usize * n + base as usize];
                    e >>= 1;
                }
                acc
            })
            .collect()
    };
    let sigma = if k % 2 == 0 { Some(pow_tbl(p.pow(k / 2))) } else { None };
    let sqrt = if p == 2 {
        // Frobenius inverse: x -> x^(2^(k-1)).
        Some(pow_tbl(1u64 << (k - 1)))
    } else {
        None
    };
    GfInner {
        fid: NEXT_FID.fetch_add(1, Ordering::Relaxed),
        p,
        k,
        order,
        modulus,
        add,
        mul,
        neg,
        inv,
        sigma,
        sqrt,
    }
}

/// Parses a field spec string such as `gf(4)`, `gf(2^2)` or `gf(3)`.
pub fn parse_field_spec(s: &str) -> Result<Gf, GfError> {
    let inner = s
        .trim()
        .strip_prefix("gf(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or(GfError::BadElement(0))?;
    if let Some((base, exp)) = inner.split_once('^') {
        let p: u64 = base.trim().parse().map_err(|_| GfError::BadElement(0))?;
        let k: u32 = exp.trim().parse().map_err(|_| GfError::BadElement(0))?;
        return Gf::new(p, k);
    }
    let order: u64 = inner.trim().parse().map_err(|_| GfError::BadElement(0))?;
    if order < 2 {
        return Err(GfError::BadElement(order));
    }
    // Factor the order as p^k.
    let mut p = 2;
    while p * p <= order {
        if order % p == 0 {
            let mut k = 0;
            let mut rest = order;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            if rest != 1 {
                return Err(GfError::NonPrime(order));
            }
            return Gf::new(p, k);
        }
        p += 1;
    }
    Gf::new(order, 1)
}
