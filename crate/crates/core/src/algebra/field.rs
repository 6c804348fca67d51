use std::fmt;
use std::sync::Arc;

use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

/// An element of `F_q`, stored by its canonical index.
///
/// The index of the element with coefficient vector `(c_0, ..., c_{k-1})`
/// over `F_p` is `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. Index 0 is zero and
/// index 1 is one. Ordering elements by index is the canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldInner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus over `F_p` as ascending coefficients, `k + 1` entries. Empty for prime fields.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a primitive element `g`; only for extension fields.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The finite field `F_q` with `q = p^k`.
///
/// Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.k == other.inner.k
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.inner.p)
            .field("k", &self.inner.k)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.inner.p, self.inner.k)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// Builds `F_{p^k}`. For `k > 1` the modulus is the smallest monic
    /// irreducible of degree `k` over `F_p` in canonical order.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(q));
        }
        let p = p as u32;
        let prime = Field {
            inner: Arc::new(FieldInner {
                p,
                k: 1,
                q: p,
                modulus: Vec::new(),
                exp: Vec::new(),
                log: Vec::new(),
            }),
        };
        if k == 1 {
            return Ok(prime);
        }
        let q = q as u32;
        let modulus = (0..p.pow(k))
            .map(|idx| Polynomial::monic_from_index(&prime, k as usize, idx as u64))
            .find(|f| f.is_irreducible(&prime))
            .expect("irreducible polynomials exist in every degree");
        let modulus: Vec<u32> = (0..=k as usize).map(|i| modulus.coeff(i).0).collect();
        let (exp, log) = build_tables(p, k, q, &modulus);
        Ok(Field {
            inner: Arc::new(FieldInner {
                p,
                k,
                q,
                modulus,
                exp,
                log,
            }),
        })
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        if q < 2 {
            return Err(Error::NotPrime(q));
        }
        let p = prime_factors(q)[0];
        let mut k = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        Field::new(p, k)
    }

    /// Parses `"p^k"` or a bare prime power `"q"`.
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad field spec {s:?}")))
        };
        match s.split_once('^') {
            Some((p, k)) => {
                let k = num(k)?;
                let k =
                    u32::try_from(k).map_err(|_| Error::Parse(format!("bad field spec {s:?}")))?;
                Field::new(num(p)?, k)
            }
            None => Field::with_order(num(s)?),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// The defining modulus over `F_p`, present iff `k > 1`.
    pub fn modulus(&self) -> Option<Vec<u32>> {
        if self.inner.k == 1 {
            None
        } else {
            Some(self.inner.modulus.clone())
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element from its canonical index.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.inner.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::DigitOutOfRange {
                digit: index as u64,
                base: self.inner.q as u64,
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.inner.p as i64) as u32)
    }

    /// All `q` elements in canonical order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(FieldElement)
    }

    /// Coefficient vector over `F_p`, length `k`.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        let p = self.inner.p;
        let mut v = a.0;
        (0..self.inner.k)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    /// Canonical digit bijection `Z_q -> F_q`: the base-`p` digits of `d` are
    /// the coefficient vector. Maps 0 to zero.
    pub fn eta(&self, d: u64) -> Result<FieldElement> {
        if d < self.inner.q as u64 {
            Ok(FieldElement(d as u32))
        } else {
            Err(Error::DigitOutOfRange {
                digit: d,
                base: self.inner.q as u64,
            })
        }
    }

    pub fn eta_inv(&self, a: FieldElement) -> u64 {
        a.0 as u64
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let FieldInner { p, k, .. } = *self.inner;
        if k == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..k {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale = scale.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let FieldInner { p, k, .. } = *self.inner;
        if p == 2 || a.0 == 0 {
            return a;
        }
        if k == 1 {
            return FieldElement(p - a.0);
        }
        let mut x = a.0;
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..k {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale = scale.wrapping_mul(p);
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        if inner.k == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % inner.p as u64) as u32);
        }
        let order = inner.q - 1;
        let l = inner.log[a.0 as usize] + inner.log[b.0 as usize];
        FieldElement(inner.exp[(l % order) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let inner = &*self.inner;
        if inner.k == 1 {
            return Ok(self.pow(a, (inner.p - 2) as u64));
        }
        let order = inner.q - 1;
        Ok(FieldElement(
            inner.exp[((order - inner.log[a.0 as usize]) % order) as usize],
        ))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Square roots of `a` in canonical order (empty if `a` is a non-square).
    pub fn sqrt_all(&self, a: FieldElement) -> Vec<FieldElement> {
        self.elements().filter(|&r| self.mul(r, r) == a).collect()
    }
}

/// Multiplies coefficient vectors modulo the monic `modulus` over `F_p`.
fn mul_mod_slow(p: u32, modulus: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for d in (k..2 * k).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for j in 0..k {
            let sub = c * modulus[j] as u64 % p as u64;
            prod[d - k + j] = (prod[d - k + j] + p as u64 - sub) % p as u64;
        }
    }
    prod.truncate(k);
    prod.into_iter().map(|c| c as u32).collect()
}

fn to_digits(p: u32, k: u32, mut v: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let c = v % p;
            v /= p;
            c
        })
        .collect()
}

fn from_digits(p: u32, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn build_tables(p: u32, k: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let order = (q - 1) as u64;
    let factors = prime_factors(order);
    let pow_slow = |g: &[u32], mut e: u64| {
        let mut base = g.to_vec();
        let mut acc = to_digits(p, k, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod_slow(p, modulus, &acc, &base);
            }
            base = mul_mod_slow(p, modulus, &base, &base);
            e >>= 1;
        }
        acc
    };
    let one = to_digits(p, k, 1);
    let generator = (2..q)
        .map(|c| to_digits(p, k, c))
        .find(|g| factors.iter().all(|&r| pow_slow(g, order / r) != one))
        .expect("multiplicative group of a finite field is cyclic");
    let mut exp = vec![0u32; order as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = one;
    for (i, slot) in exp.iter_mut().enumerate() {
        let idx = from_digits(p, &cur);
        *slot = idx;
        log[idx as usize] = i as u32;
        cur = mul_mod_slow(p, modulus, &cur, &generator);
    }
    (exp, log)
}
