//! Exact arithmetic in small Galois fields GF(q), q = p^h.
//!
//! Elements are stored as canonical integer encodings in `[0, q)`: the
//! residue polynomial `c_0 + c_1 x + ... + c_{h-1} x^{h-1}` encodes as
//! `c_0 + c_1 p + ... + c_{h-1} p^{h-1}`. Encoding 0 is the additive
//! identity, encoding 1 the multiplicative identity.
//!
//! Reduction polynomials are fixed so that encodings are reproducible
//! across runs: GF(4) uses x^2+x+1, GF(8) x^3+x+1, GF(9) x^2+1,
//! GF(16) x^4+x+1, GF(25) x^2+2, GF(27) x^3+2x+1. For any other prime
//! power the monic polynomial x^h + c(x) with the smallest constant-part
//! encoding c that is irreducible over GF(p) is selected; the fixed list
//! above coincides with that rule.
//!
//! All binary operations are dense table lookups, since multiplication
//! and inversion sit in the innermost enumeration loops. Fields are
//! immutable after construction and safe to share across threads.
//!
//! ```
//! use quadric_codes::gf::{Field, Fe};
//!
//! let f4 = Field::new(2, 2).unwrap();
//! let x = Fe(2); // the residue class of x
//! assert_eq!(f4.mul(x, x), Fe(3)); // x^2 = x + 1
//! assert_eq!(f4.inv(x).unwrap(), Fe(3)); // x * (x+1) = 1
//! ```

use crate::error::{Error, Result};

/// An element of a [`Field`], stored by its canonical integer encoding.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fe(pub u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Debug for Fe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::fmt::Display for Fe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic tables for GF(p^h) with p^h <= 256 and h <= 4.
#[derive(Clone)]
pub struct Field {
    p: u16,
    h: u32,
    q: u16,
    /// Monic reduction polynomial, low-to-high degree, length h+1.
    reduction: Vec<u8>,
    add_t: Vec<u8>,
    mul_t: Vec<u8>,
    neg_t: Vec<u8>,
    inv_t: Vec<u8>,
    /// exp[i] = g^i for the fixed generator g, i in 0..q-1.
    exp_t: Vec<u8>,
    /// log[a] = i with g^i = a, for a != 0; log[0] is a sentinel.
    log_t: Vec<u16>,
    generator: u8,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial arithmetic over GF(p) on little-endian digit vectors,
/// used only while building the tables.
mod poly {
    pub fn trim(v: &mut Vec<u8>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u8], b: &[u8], p: u16) -> Vec<u8> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u16; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai as u16 * bj as u16) % p;
            }
        }
        let mut out: Vec<u8> = out.into_iter().map(|c| c as u8).collect();
        trim(&mut out);
        out
    }

    /// Remainder of a modulo the monic polynomial m.
    pub fn rem(a: &[u8], m: &[u8], p: u16) -> Vec<u8> {
        debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
        let mut r: Vec<u8> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = r[r.len() - 1] as u16;
            let shift = r.len() - 1 - dm;
            for (k, &mk) in m.iter().enumerate() {
                let idx = shift + k;
                let sub = (lead * mk as u16) % p;
                r[idx] = ((r[idx] as u16 + p - sub) % p) as u8;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    pub fn eval(a: &[u8], x: u16, p: u16) -> u16 {
        let mut acc = 0u16;
        for &c in a.iter().rev() {
            acc = (acc * x + c as u16) % p;
        }
        acc
    }

    pub fn has_root(a: &[u8], p: u16) -> bool {
        (0..p).any(|x| eval(a, x, p) == 0)
    }

    /// Exhaustive irreducibility check for degree <= 4 over GF(p):
    /// degree 2 and 3 reduce to the root test; degree 4 additionally
    /// rules out products of two irreducible quadratics.
    pub fn is_irreducible(a: &[u8], p: u16) -> bool {
        let deg = a.len() - 1;
        debug_assert!((2..=4).contains(&deg));
        if has_root(a, p) {
            return false;
        }
        if deg == 4 {
            // candidate monic quadratic divisors x^2 + c1 x + c0
            for c1 in 0..p {
                for c0 in 0..p {
                    let d = vec![c0 as u8, c1 as u8, 1];
                    if has_root(&d, p) {
                        continue;
                    }
                    if rem(a, &d, p).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Field {
    /// Build GF(p^h). Requires p prime, 1 <= h <= 4 and p^h <= 256.
    pub fn new(p: u64, h: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if !(1..=4).contains(&h) {
            return Err(Error::DegreeOutOfRange(h));
        }
        let q = p.pow(h);
        if q > 256 {
            return Err(Error::OrderTooLarge(q));
        }
        let p = p as u16;
        let q = q as u16;

        let reduction = Self::reduction_poly(p, h);
        let decode = |v: u16| -> Vec<u8> {
            let mut digits = Vec::with_capacity(h as usize);
            let mut v = v;
            for _ in 0..h {
                digits.push((v % p) as u8);
                v /= p;
            }
            digits
        };
        let encode = |digits: &[u8]| -> u16 {
            let mut v = 0u16;
            for &d in digits.iter().rev() {
                v = v * p + d as u16;
            }
            v
        };

        let qs = q as usize;
        let mut add_t = vec![0u8; qs * qs];
        let mut mul_t = vec![0u8; qs * qs];
        let mut neg_t = vec![0u8; qs];
        for a in 0..q {
            let da = decode(a);
            let neg: Vec<u8> = da.iter().map(|&d| ((p - d as u16) % p) as u8).collect();
            neg_t[a as usize] = encode(&neg) as u8;
            for b in 0..q {
                let db = decode(b);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as u16 + y as u16) % p) as u8)
                    .collect();
                add_t[a as usize * qs + b as usize] = encode(&sum) as u8;
                let prod = poly::rem(&poly::mul(&da, &db, p), &reduction, p);
                let mut padded = prod;
                padded.resize(h as usize, 0);
                mul_t[a as usize * qs + b as usize] = encode(&padded) as u8;
            }
        }

        // Fixed generator: the smallest encoding of multiplicative order q-1.
        let order = |g: u16| -> u32 {
            let mut acc = 1u16;
            let mut k = 0u32;
            loop {
                acc = mul_t[acc as usize * qs + g as usize] as u16;
                k += 1;
                if acc == 1 {
                    return k;
                }
            }
        };
        let generator = (1..q)
            .find(|&g| order(g) == (q - 1) as u32)
            .expect("every finite field has a primitive element") as u8;

        let mut exp_t = vec![0u8; (q - 1) as usize];
        let mut log_t = vec![u16::MAX; qs];
        let mut acc = 1u16;
        for (i, slot) in exp_t.iter_mut().enumerate() {
            *slot = acc as u8;
            log_t[acc as usize] = i as u16;
            acc = mul_t[acc as usize * qs + generator as usize] as u16;
        }

        let mut inv_t = vec![0u8; qs];
        for a in 1..q {
            let la = log_t[a as usize] as u32;
            let li = ((q - 1) as u32 - la) % (q - 1) as u32;
            inv_t[a as usize] = exp_t[li as usize];
        }

        Ok(Field {
            p,
            h,
            q,
            reduction,
            add_t,
            mul_t,
            neg_t,
            inv_t,
            exp_t,
            log_t,
            generator,
        })
    }

    /// The smallest-encoding monic irreducible x^h + c(x) over GF(p).
    /// For h = 1 this is just x.
    fn reduction_poly(p: u16, h: u32) -> Vec<u8> {
        if h == 1 {
            return vec![0, 1];
        }
        let ph = (p as u64).pow(h);
        for c in 0..ph {
            let mut poly = Vec::with_capacity(h as usize + 1);
            let mut v = c;
            for _ in 0..h {
                poly.push((v % p as u64) as u8);
                v /= p as u64;
            }
            poly.push(1);
            if poly::is_irreducible(&poly, p) {
                return poly;
            }
        }
        unreachable!("irreducible polynomials of every degree exist over GF(p)")
    }

    #[inline]
    pub fn p(&self) -> u16 {
        self.p
    }

    #[inline]
    pub fn h(&self) -> u32 {
        self.h
    }

    #[inline]
    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn reduction_polynomial(&self) -> &[u8] {
        &self.reduction
    }

    pub fn generator(&self) -> Fe {
        Fe(self.generator)
    }

    /// The element with encoding `v % q`.
    #[inline]
    pub fn elem(&self, v: u64) -> Fe {
        Fe((v % self.q as u64) as u8)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.q).map(|v| Fe(v as u8))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.add_t[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg_t[a.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.mul_t[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Fe(self.inv_t[a.0 as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        let mut acc = Fe::ONE;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// g^i for the fixed generator g; the exponent is taken mod q-1.
    pub fn exp(&self, i: usize) -> Fe {
        Fe(self.exp_t[i % (self.q as usize - 1)])
    }

    /// Discrete log base the fixed generator; errors on zero.
    pub fn log(&self, a: Fe) -> Result<usize> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.log_t[a.0 as usize] as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructs_prime_fields() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.q(), 2);
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.q(), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NonPrime(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), Error::NonPrime(1));
        assert_eq!(Field::new(2, 5).unwrap_err(), Error::DegreeOutOfRange(5));
        assert_eq!(Field::new(2, 0).unwrap_err(), Error::DegreeOutOfRange(0));
        assert_eq!(Field::new(5, 4).unwrap_err(), Error::OrderTooLarge(625));
    }

    #[test]
    fn fixed_reduction_polynomials() {
        // documented fixed choices, low-to-high degree
        let cases: [(u64, u32, &[u8]); 6] = [
            (2, 2, &[1, 1, 1]),    // x^2+x+1
            (2, 3, &[1, 1, 0, 1]), // x^3+x+1
            (3, 2, &[1, 0, 1]),    // x^2+1
            (2, 4, &[1, 1, 0, 0, 1]), // x^4+x+1
            (5, 2, &[2, 0, 1]),    // x^2+2
            (3, 3, &[1, 2, 0, 1]), // x^3+2x+1
        ];
        for (p, h, want) in cases {
            let f = Field::new(p, h).unwrap();
            assert_eq!(f.reduction_polynomial(), want, "GF({}^{})", p, h);
        }
    }

    #[test]
    fn gf4_multiplication() {
        let f = Field::new(2, 2).unwrap();
        let x = Fe(2);
        assert_eq!(f.mul(x, x), Fe(3)); // x^2 = x+1 mod x^2+x+1
        assert_eq!(f.inv(x).unwrap(), Fe(3));
        assert_eq!(f.mul(x, Fe(3)), Fe::ONE);
    }

    #[test]
    fn gf9_multiplication() {
        let f = Field::new(3, 2).unwrap();
        let x = Fe(3); // encoding of x is 0 + 1*3
        assert_eq!(f.mul(x, x), Fe(2)); // x^2 = -1 = 2 mod x^2+1
    }

    #[test]
    fn gf5_inverse() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(Fe(2)).unwrap(), Fe(3));
        assert_eq!(f.inv(Fe::ONE).unwrap(), Fe::ONE);
        assert_eq!(f.inv(Fe::ZERO).unwrap_err(), Error::ZeroInverse);
    }

    fn axiom_fields() -> Vec<Field> {
        [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]
            .into_iter()
            .map(|(p, h)| Field::new(p, h).unwrap())
            .collect()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in axiom_fields() {
            let q = f.q();
            for a in f.elements() {
                assert_eq!(f.add(a, Fe::ZERO), a);
                assert_eq!(f.mul(a, Fe::ONE), a);
                assert_eq!(f.mul(a, Fe::ZERO), Fe::ZERO);
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                    // a^(q-1) = 1
                    assert_eq!(f.pow(a, (q - 1) as u64), Fe::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for f in axiom_fields() {
            let p = f.p() as u64;
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.pow(f.add(a, b), p),
                        f.add(f.pow(a, p), f.pow(b, p))
                    );
                }
            }
        }
    }

    #[test]
    fn exp_log_are_inverse_bijections() {
        for f in axiom_fields() {
            let mut seen = std::collections::HashSet::new();
            for i in 0..(f.q() - 1) as usize {
                let a = f.exp(i);
                assert!(!a.is_zero());
                assert!(seen.insert(a));
                assert_eq!(f.log(a).unwrap(), i);
            }
            for a in f.elements().filter(|a| !a.is_zero()) {
                assert_eq!(f.exp(f.log(a).unwrap()), a);
            }
        }
    }

    #[test]
    fn largest_supported_field() {
        let f = Field::new(2, 4).unwrap();
        assert_eq!(f.q(), 16);
        let f = Field::new(5, 2).unwrap();
        assert_eq!(f.q(), 25);
        // 251 is the largest prime under the cap
        let f = Field::new(251, 1).unwrap();
        assert_eq!(f.q(), 251);
    }
}
