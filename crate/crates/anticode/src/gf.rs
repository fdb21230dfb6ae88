//! Exact arithmetic in finite fields GF(p^m).
//!
//! An element is stored as an integer in `[0, q)` encoding a polynomial of
//! degree below `m` over GF(p) in little-endian base-p digits: digit `i` is
//! the coefficient of `x^i`. Fields of order up to [`TABLE_LIMIT`] multiply
//! through precomputed log/antilog tables; larger fields reduce polynomial
//! products on the fly. Orders above [`MAX_FIELD_ORDER`] are rejected.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

/// Orders up to this limit get log/antilog multiplication tables.
pub const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {q} exceeds the supported limit {limit}")]
    OrderTooLarge { q: u128, limit: u64 },
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u64 },
    #[error("modulus must have degree {expected}: got {found} coefficients, expected {}", *expected as usize + 1)]
    WrongModulusDegree { expected: u32, found: usize },
    #[error("modulus must be monic with all coefficients below p")]
    MalformedModulus,
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("polynomial must be nonempty with nonzero leading coefficient and coefficients below p")]
    MalformedPolynomial,
    #[error("element encoding {value} is outside [0, {q})")]
    ValueOutOfRange { value: u64, q: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// Serializable description of a field: characteristic, extension degree,
/// and the monic irreducible modulus as little-endian coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    /// Coefficients of the modulus, length `m + 1`, leading coefficient 1.
    pub modulus: Vec<u64>,
}

/// An element of a specific [`Field`], stored as its integer encoding.
///
/// Elements are plain values; all arithmetic goes through the owning field.
/// Serialization emits the raw encoding.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u64);

impl FieldElement {
    /// The integer encoding in `[0, q)`.
    pub fn encoding(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.0)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // Range validation happens where the element meets a field.
        u64::deserialize(deserializer).map(FieldElement)
    }
}

struct Tables {
    /// `log[a]` = discrete log of `a` base the chosen generator; `log[0]` unused.
    log: Vec<u32>,
    /// `exp[i]` = generator^i for `i` in `[0, q-1)`.
    exp: Vec<u64>,
}

/// A finite field GF(p^m) with a fixed modulus representation.
pub struct Field {
    spec: FieldSpec,
    q: u64,
    tables: Option<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{} = {}, modulus {:?})",
            self.spec.p, self.spec.m, self.q, self.spec.modulus
        )
    }
}

impl Field {
    /// Builds GF(p^m). With `modulus = None` a default irreducible modulus is
    /// used: a fixed, documented polynomial for common `(p, m)` pairs, and
    /// otherwise the first monic irreducible of degree `m` in encoding order,
    /// so every valid `(p, m)` has a deterministic default.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Field, FieldError> {
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q128 = (p as u128)
            .checked_pow(m)
            .ok_or(FieldError::OrderTooLarge { q: u128::MAX, limit: MAX_FIELD_ORDER })?;
        if q128 > MAX_FIELD_ORDER as u128 {
            return Err(FieldError::OrderTooLarge { q: q128, limit: MAX_FIELD_ORDER });
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = q128 as u64;
        let modulus = match modulus {
            Some(coeffs) => {
                if coeffs.len() != m as usize + 1 {
                    return Err(FieldError::WrongModulusDegree { expected: m, found: coeffs.len() });
                }
                if coeffs[m as usize] != 1 || coeffs.iter().any(|&c| c >= p) {
                    return Err(FieldError::MalformedModulus);
                }
                if !is_irreducible(coeffs, p)? {
                    return Err(FieldError::ReducibleModulus { p });
                }
                coeffs.to_vec()
            }
            None => default_modulus(p, m),
        };
        let spec = FieldSpec { p, m, modulus };
        let mut field = Field { spec, q, tables: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// Builds the field of order `q`, factoring `q` as a prime power.
    pub fn from_order(q: u64) -> Result<Field, FieldError> {
        let (p, m) = prime_power(q)?;
        Field::new(p, m, None)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field, FieldError> {
        Field::new(spec.p, spec.m, Some(&spec.modulus))
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.m
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Validates an encoding and wraps it as an element of this field.
    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value < self.q {
            Ok(FieldElement(value))
        } else {
            Err(FieldError::ValueOutOfRange { value, q: self.q })
        }
    }

    /// All `q` elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        FieldElement(self.add_raw(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q);
        FieldElement(self.neg_raw(a.0))
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        FieldElement(self.mul_raw(a.0, b.0))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        debug_assert!(a.0 < self.q);
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        match &self.tables {
            Some(t) => {
                let e = t.log[a.0 as usize] as u64;
                Ok(FieldElement(t.exp[((self.q - 1 - e) % (self.q - 1)) as usize]))
            }
            None => Ok(FieldElement(self.pow_raw(a.0, self.q - 2))),
        }
    }

    /// `a^e` with the convention `pow(a, 0) = 1` for every `a`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        debug_assert!(a.0 < self.q);
        FieldElement(self.pow_raw(a.0, e))
    }

    #[inline]
    fn add_raw(&self, a: u64, b: u64) -> u64 {
        let p = self.spec.p;
        if p == 2 {
            a ^ b
        } else if self.spec.m == 1 {
            let s = a + b;
            if s >= self.q {
                s - self.q
            } else {
                s
            }
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.spec.m {
                out += (a % p + b % p) % p * place;
                place *= p;
                a /= p;
                b /= p;
            }
            out
        }
    }

    #[inline]
    fn neg_raw(&self, a: u64) -> u64 {
        let p = self.spec.p;
        if p == 2 {
            a
        } else if self.spec.m == 1 {
            if a == 0 {
                0
            } else {
                self.q - a
            }
        } else {
            let mut a = a;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.spec.m {
                out += (p - a % p) % p * place;
                place *= p;
                a /= p;
            }
            out
        }
    }

    #[inline]
    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let e = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % (self.q - 1);
                t.exp[e as usize]
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Polynomial multiplication modulo the field modulus; used to build the
    /// tables and as the arithmetic for fields above [`TABLE_LIMIT`].
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let p = self.spec.p;
        let m = self.spec.m as usize;
        if m == 1 {
            return ((a as u128 * b as u128) % p as u128) as u64;
        }
        // Digits fit 2^16 here (p^m <= 2^32, m >= 2), so products stay in u64.
        let da = to_digits(a, p, m);
        let db = to_digits(b, p, m);
        let mut prod = [0u64; 128];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // Reduce by the monic modulus.
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in self.spec.modulus.iter().enumerate().take(m) {
                prod[i - m + j] = (prod[i - m + j] + c * (p - mj) % p) % p;
            }
        }
        from_digits(&prod[..m], p)
    }

    fn pow_raw(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let e = (t.log[a as usize] as u128 * (e % (self.q - 1)) as u128) % (self.q - 1) as u128;
            return t.exp[e as usize];
        }
        let mut base = a;
        let mut e = e;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_slow(base, base);
            }
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let q = self.q;
        // Find a generator of the multiplicative group by walking orders.
        let mut generator = 1;
        'candidates: for cand in 1..q {
            let mut acc = cand;
            let mut steps = 1u64;
            while acc != 1 {
                acc = self.mul_slow(acc, cand);
                steps += 1;
                if steps > q - 1 {
                    continue 'candidates; // not invertible; cannot happen in a field
                }
            }
            if steps == q - 1 {
                generator = cand;
                break;
            }
        }
        let mut exp = vec![0u64; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_slow(acc, generator);
        }
        Tables { log, exp }
    }
}

fn to_digits(mut v: u64, p: u64, m: usize) -> Vec<u64> {
    let mut digits = vec![0u64; m];
    for d in digits.iter_mut() {
        *d = v % p;
        v /= p;
    }
    digits
}

fn from_digits(digits: &[u64], p: u64) -> u64 {
    let mut out = 0;
    for &d in digits.iter().rev() {
        out = out * p + d;
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Factors `q` as `p^m` with `p` prime, or reports that it is not a prime power.
pub fn prime_power(q: u64) -> Result<(u64, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower { q });
    }
    if q > MAX_FIELD_ORDER {
        return Err(FieldError::OrderTooLarge { q: q as u128, limit: MAX_FIELD_ORDER });
    }
    let mut p = q;
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    let mut rest = q;
    let mut m = 0u32;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(FieldError::NotPrimePower { q });
    }
    Ok((p, m))
}

fn default_modulus(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1]; // x itself
    }
    // Fixed defaults for common pairs, chosen from the classic primitive
    // polynomials (GF(256) uses x^8+x^4+x^3+x^2+1, the usual Reed-Solomon
    // modulus 0x11d).
    let fixed: &[(u64, u32, &[u64])] = &[
        (2, 2, &[1, 1, 1]),                // x^2 + x + 1
        (2, 3, &[1, 1, 0, 1]),             // x^3 + x + 1
        (2, 4, &[1, 1, 0, 0, 1]),          // x^4 + x + 1
        (2, 5, &[1, 0, 1, 0, 0, 1]),       // x^5 + x^2 + 1
        (2, 6, &[1, 1, 0, 0, 0, 0, 1]),    // x^6 + x + 1
        (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]), // x^7 + x + 1
        (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]), // x^8 + x^4 + x^3 + x^2 + 1 (0x11d)
        (3, 2, &[1, 0, 1]),                // x^2 + 1
        (3, 3, &[1, 2, 0, 1]),             // x^3 + 2x + 1
    ];
    for &(fp, fm, coeffs) in fixed {
        if fp == p && fm == m {
            return coeffs.to_vec();
        }
    }
    // Deterministic fallback: the first monic irreducible of degree m in
    // encoding order of its lower coefficients.
    find_irreducible(p, m)
}

fn find_irreducible(p: u64, m: u32) -> Vec<u64> {
    let m = m as usize;
    let mut lower = vec![0u64; m];
    loop {
        let mut poly = lower.clone();
        poly.push(1);
        if is_irreducible(&poly, p).expect("p validated prime") {
            return poly;
        }
        // Increment the lower coefficients as a base-p counter. Irreducible
        // polynomials of every degree exist, so this terminates.
        let mut i = 0;
        loop {
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
            assert!(i < m, "no irreducible polynomial found, which is impossible");
        }
    }
}

/// Rabin irreducibility test for a polynomial over GF(p), given as
/// little-endian coefficients with a nonzero leading coefficient.
///
/// Degree-0 polynomials (units) are reported as not irreducible.
pub fn is_irreducible(poly: &[u64], p: u64) -> Result<bool, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if poly.is_empty() || *poly.last().unwrap() == 0 || poly.iter().any(|&c| c >= p) {
        return Err(FieldError::MalformedPolynomial);
    }
    let d = poly.len() - 1;
    if d == 0 {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    // Normalize monic.
    let lead_inv = mod_inverse(poly[d], p);
    let f: Vec<u64> = poly.iter().map(|&c| mul_mod(c, lead_inv, p)).collect();

    // Frobenius ladder: frob[e] = x^(p^e) mod f for e = 0..d.
    let x = vec![0, 1];
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(x.clone());
    for _ in 0..d {
        let next = poly_powmod(frob.last().unwrap(), p, &f, p);
        frob.push(next);
    }
    if poly_trim(&poly_sub(&frob[d], &x, p)).is_empty() {
        // x^(p^d) == x mod f; now rule out factors of degree d/r.
        for r in prime_factors(d) {
            let diff = poly_sub(&frob[d / r], &x, p);
            let g = poly_gcd(&diff, &f, p);
            if poly_trim(&g).len() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        Ok(false)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= d {
        if d % f == 0 {
            out.push(f);
            while d % f == 0 {
                d /= f;
            }
        }
        f += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

// --- dense polynomial helpers over GF(p), little-endian Vec<u64> ---

fn poly_trim(a: &[u64]) -> Vec<u64> {
    let mut end = a.len();
    while end > 0 && a[end - 1] == 0 {
        end -= 1;
    }
    a[..end].to_vec()
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    out
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    out
}

/// Remainder of `a` modulo monic `f`.
fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    while {
        r = poly_trim(&r);
        r.len() > df
    } {
        let da = r.len() - 1;
        let c = r[da];
        let shift = da - df;
        for (j, &fj) in f.iter().enumerate() {
            r[shift + j] = (r[shift + j] + mul_mod(c, (p - fj) % p, p)) % p;
        }
    }
    r
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), f, p);
        }
        e >>= 1;
        if e > 0 {
            b = poly_rem(&poly_mul(&b, &b, p), f, p);
        }
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(a);
    let mut b = poly_trim(b);
    while !b.is_empty() {
        // Make the divisor monic so poly_rem applies.
        let inv = mod_inverse(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|&c| mul_mod(c, inv, p)).collect();
        let r = poly_trim(&poly_rem(&a, &monic, p));
        a = monic;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_matches_hand_tables() {
        // GF(4) with x^2 + x + 1; tables worked out by hand.
        let f = Field::new(2, 2, None).unwrap();
        let add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
        let mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        for a in 0..4u64 {
            for b in 0..4u64 {
                let (x, y) = (f.element(a).unwrap(), f.element(b).unwrap());
                assert_eq!(f.add(x, y).encoding(), add[a as usize][b as usize]);
                assert_eq!(f.mul(x, y).encoding(), mul[a as usize][b as usize]);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
            let f = Field::from_order(q).unwrap();
            let elems: Vec<_> = f.elements().collect();
            for &a in &elems {
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, inv), f.one());
                    assert_eq!(f.pow(a, q - 1), f.one());
                }
                for &b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &elems {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity failed in GF({q})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pow_conventions() {
        let f = Field::from_order(8).unwrap();
        assert_eq!(f.pow(f.zero(), 0), f.one());
        assert_eq!(f.pow(f.zero(), 5), f.zero());
        let a = f.element(5).unwrap();
        assert_eq!(f.pow(a, 0), f.one());
        assert_eq!(f.pow(a, 1), a);
        assert_eq!(f.pow(a, 2), f.mul(a, a));
    }

    #[test]
    fn inverse_of_zero_rejected() {
        let f = Field::from_order(9).unwrap();
        assert_eq!(f.inv(f.zero()), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn element_range_checked() {
        let f = Field::from_order(4).unwrap();
        assert!(f.element(3).is_ok());
        assert_eq!(f.element(4), Err(FieldError::ValueOutOfRange { value: 4, q: 4 }));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&[1, 1, 1], 2).unwrap()); // x^2 + x + 1
        assert!(!is_irreducible(&[1, 0, 1], 2).unwrap()); // x^2 + 1 = (x+1)^2
        assert!(is_irreducible(&[0, 1], 3).unwrap()); // x
        assert!(is_irreducible(&[1, 0, 1], 3).unwrap()); // x^2 + 1 over GF(3)
        assert!(!is_irreducible(&[2, 0, 1], 3).unwrap()); // x^2 + 2 = (x+1)(x+2)
        assert_eq!(is_irreducible(&[], 2), Err(FieldError::MalformedPolynomial));
        assert_eq!(is_irreducible(&[1, 0], 2), Err(FieldError::MalformedPolynomial));
        assert_eq!(is_irreducible(&[1, 1], 4), Err(FieldError::NotPrime(4)));
    }

    #[test]
    fn products_of_nonconstant_polynomials_are_reducible() {
        // Independent oracle for the irreducibility test: every product of
        // two monic nonconstant polynomials must be reported reducible.
        for p in [2u64, 3, 5] {
            for lo in 0..p {
                for hi in 0..p {
                    for c in 0..p {
                        let a = [lo, 1];          // x + lo
                        let b = [hi, c, 1];       // x^2 + c x + hi
                        let prod = poly_mul(&a, &b, p);
                        assert!(!is_irreducible(&prod, p).unwrap(), "{prod:?} over GF({p})");
                    }
                }
            }
        }
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for (p, max_m) in [(2u64, 10u32), (3, 5), (5, 3), (7, 2)] {
            for m in 1..=max_m {
                let f = Field::new(p, m, None).unwrap();
                assert!(is_irreducible(&f.spec().modulus, p).unwrap());
                assert_eq!(f.spec().modulus.len(), m as usize + 1);
            }
        }
    }

    #[test]
    fn table_and_slow_paths_agree_on_gf16() {
        let f = Field::new(2, 4, None).unwrap();
        assert!(f.tables.is_some());
        for a in 0..16u64 {
            for b in 0..16u64 {
                assert_eq!(f.mul_raw(a, b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn big_field_without_tables_is_consistent() {
        // GF(2^17) exceeds the table limit and exercises the slow path.
        let f = Field::new(2, 17, None).unwrap();
        assert!(f.tables.is_none());
        let a = f.element(0x1_2345 % f.order()).unwrap();
        let b = f.element(0x0_fedc).unwrap();
        assert_eq!(f.mul(a, b), f.mul(b, a));
        assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        assert_eq!(f.pow(a, f.order() - 1), f.one());
        assert_eq!(f.mul(a, f.add(b, f.one())), f.add(f.mul(a, b), a));
    }

    #[test]
    fn order_limits_enforced() {
        assert!(matches!(Field::new(2, 33, None), Err(FieldError::OrderTooLarge { .. })));
        assert!(matches!(Field::new(6, 1, None), Err(FieldError::NotPrime(6))));
        assert!(matches!(Field::new(2, 0, None), Err(FieldError::ZeroDegree)));
        assert!(matches!(Field::from_order(12), Err(FieldError::NotPrimePower { q: 12 })));
        assert!(matches!(Field::from_order(1), Err(FieldError::NotPrimePower { q: 1 })));
    }

    #[test]
    fn explicit_modulus_validated() {
        assert!(Field::new(2, 4, Some(&[1, 1, 0, 0, 1])).is_ok());
        assert!(matches!(
            Field::new(2, 4, Some(&[1, 0, 0, 0, 1])), // x^4 + 1 = (x+1)^4
            Err(FieldError::ReducibleModulus { p: 2 })
        ));
        assert!(matches!(
            Field::new(2, 4, Some(&[1, 1, 1])),
            Err(FieldError::WrongModulusDegree { expected: 4, found: 3 })
        ));
        assert!(matches!(
            Field::new(2, 2, Some(&[1, 1, 2])),
            Err(FieldError::MalformedModulus)
        ));
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(2).unwrap(), (2, 1));
        assert_eq!(prime_power(256).unwrap(), (2, 8));
        assert_eq!(prime_power(243).unwrap(), (3, 5));
        assert_eq!(prime_power(49).unwrap(), (7, 2));
        assert!(prime_power(36).is_err());
    }
}
