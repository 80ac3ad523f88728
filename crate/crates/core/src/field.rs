//! Explicit finite fields GF(p^f) with polynomial arithmetic and Frobenius.
//!
//! Elements are little-endian coefficient vectors over GF(p), reduced modulo
//! a fixed monic irreducible. The modulus is the lexicographically smallest
//! monic irreducible of the requested degree (coefficients compared
//! low-degree first), so constructions are reproducible without tables.

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, FactoredInteger};

const MAX_Q: u64 = 1 << 16;

/// An element of an [`FqField`]: coefficients c₀ + c₁t + … + c_{f-1}t^{f-1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqElement {
    coeffs: Vec<u64>,
}

impl FqElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

#[derive(Clone, Debug)]
pub struct FqField {
    p: u64,
    f: usize,
    /// Monic modulus, little-endian, length f+1. For f = 1 this is `x`.
    modulus: Vec<u64>,
    q: u64,
}

impl FqField {
    pub fn new(p: u64, f: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if f == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        let mut q: u64 = 1;
        for _ in 0..f {
            q = q
                .checked_mul(p)
                .filter(|&q| q <= MAX_Q)
                .ok_or_else(|| Error::guard("field-size", format!("p^f exceeds {MAX_Q}")))?;
        }
        let modulus = if f == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, f)
        };
        Ok(FqField { p, f, modulus, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn spec_string(&self) -> String {
        if self.f == 1 {
            format!("GF({})", self.p)
        } else {
            format!("GF({}^{})", self.p, self.f)
        }
    }

    pub fn zero(&self) -> FqElement {
        FqElement { coeffs: vec![0; self.f] }
    }

    pub fn one(&self) -> FqElement {
        let mut coeffs = vec![0; self.f];
        coeffs[0] = 1;
        FqElement { coeffs }
    }

    pub fn is_zero(&self, a: &FqElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn from_scalar(&self, c: u64) -> FqElement {
        let mut coeffs = vec![0; self.f];
        coeffs[0] = c % self.p;
        FqElement { coeffs }
    }

    /// The generator t of the polynomial representation (for f = 1: the
    /// scalar p-residue 1·t is meaningless, so this is just 1).
    pub fn gen_t(&self) -> FqElement {
        if self.f == 1 {
            return self.one();
        }
        let mut coeffs = vec![0; self.f];
        coeffs[1] = 1;
        FqElement { coeffs }
    }

    /// Field elements in enumeration order: index written base p,
    /// low digit = constant coefficient.
    pub fn elem_from_index(&self, idx: u64) -> FqElement {
        debug_assert!(idx < self.q);
        let mut coeffs = vec![0; self.f];
        let mut rem = idx;
        for c in coeffs.iter_mut() {
            *c = rem % self.p;
            rem /= self.p;
        }
        FqElement { coeffs }
    }

    pub fn index_of(&self, a: &FqElement) -> u64 {
        let mut idx = 0u64;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.q).map(move |i| self.elem_from_index(i))
    }

    pub fn add(&self, a: &FqElement, b: &FqElement) -> FqElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FqElement { coeffs }
    }

    pub fn neg(&self, a: &FqElement) -> FqElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FqElement { coeffs }
    }

    pub fn sub(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FqElement, b: &FqElement) -> FqElement {
        // schoolbook product then reduction modulo the monic modulus
        let mut prod = vec![0u64; 2 * self.f - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        if self.f == 1 {
            return FqElement { coeffs: prod };
        }
        for k in (self.f..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (d, &m) in self.modulus.iter().enumerate().take(self.f) {
                // t^f = -(m_0 + m_1 t + …), so t^k picks up -c·m_d at k-f+d
                let idx = k - self.f + d;
                prod[idx] = (prod[idx] + c * (self.p - m)) % self.p;
            }
        }
        prod.truncate(self.f);
        FqElement { coeffs: prod }
    }

    pub fn pow(&self, a: &FqElement, mut n: u64) -> FqElement {
        let mut result = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        result
    }

    pub fn inv(&self, a: &FqElement) -> Result<FqElement> {
        if self.is_zero(a) {
            return Err(Error::invalid("inverse of zero"));
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// a^{p^k}; `frobenius(a, f)` is the identity.
    pub fn frobenius(&self, a: &FqElement, k: u32) -> FqElement {
        let mut r = a.clone();
        for _ in 0..(k as usize % self.f.max(1)) {
            r = self.pow(&r, self.p);
        }
        r
    }

    pub fn multiplicative_order(&self, a: &FqElement) -> Result<u64> {
        if self.is_zero(a) {
            return Err(Error::invalid("multiplicative order of zero"));
        }
        let group_order = self.q - 1;
        if group_order == 0 {
            return Ok(1);
        }
        // strip each prime of q-1 as far as possible
        let mut ord = group_order;
        for &(prime, _) in FactoredInteger::from_u64(group_order).unwrap().factors() {
            while ord % prime == 0 {
                let cand = ord / prime;
                if self.pow(a, cand) == self.one() {
                    ord = cand;
                } else {
                    break;
                }
            }
        }
        Ok(ord)
    }

    /// A generator of the cyclic group GF(q)^*: the enumeration-first element
    /// of multiplicative order q-1.
    pub fn primitive_element(&self) -> FqElement {
        for idx in 1..self.q {
            let a = self.elem_from_index(idx);
            if self.multiplicative_order(&a).unwrap() == self.q - 1 {
                return a;
            }
        }
        unreachable!("GF(q)^* is cyclic")
    }

    pub fn is_square(&self, a: &FqElement) -> bool {
        if self.is_zero(a) || self.p == 2 {
            return true;
        }
        self.pow(a, (self.q - 1) / 2) == self.one()
    }

    /// Renders an element as "c0+c1t+…", skipping zero terms.
    pub fn render(&self, a: &FqElement) -> String {
        let mut parts = Vec::new();
        for (d, &c) in a.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match d {
                0 => c.to_string(),
                1 if c == 1 => "t".to_string(),
                1 => format!("{c}t"),
                _ if c == 1 => format!("t^{d}"),
                _ => format!("{c}t^{d}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// Multiplies two polynomials over GF(p), little-endian, no reduction.
fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of a modulo the monic polynomial m, over GF(p).
fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let k = r.len() - 1;
        if lead != 0 {
            for (d, &c) in m.iter().enumerate() {
                let idx = k - dm + d;
                r[idx] = (r[idx] + (p - lead % p) * c) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// True iff the monic polynomial m of degree ≥ 2 is irreducible over GF(p),
/// by trial division against all monic polynomials of degree up to deg(m)/2.
fn is_irreducible(p: u64, m: &[u64]) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut divisor = vec![0u64; d + 1];
            let mut rem = idx;
            for c in divisor.iter_mut().take(d) {
                *c = rem % p;
                rem /= p;
            }
            divisor[d] = 1;
            if poly_is_zero(&poly_rem(p, m, &divisor)) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree f over GF(p),
/// comparing coefficient vectors low-degree first.
fn smallest_irreducible(p: u64, f: usize) -> Vec<u64> {
    let count = p.pow(f as u32);
    for idx in 0..count {
        let mut m = vec![0u64; f + 1];
        let mut rem = idx;
        for c in m.iter_mut().take(f) {
            *c = rem % p;
            rem /= p;
        }
        m[f] = 1;
        if is_irreducible(p, &m) {
            return m;
        }
    }
    unreachable!("irreducibles of every degree exist")
}

// keep poly_mul exercised even though reduction inlines its own product
#[allow(dead_code)]
fn poly_mulrem(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    poly_rem(p, &poly_mul(p, a, b), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn euler_phi(mut n: u64) -> u64 {
        let mut result = n;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                while n % p == 0 {
                    n /= p;
                }
                result -= result / p;
            }
            p += 1;
        }
        if n > 1 {
            result -= result / n;
        }
        result
    }

    #[test]
    fn modulus_choices() {
        // GF(9): smallest irreducible quadratic over GF(3) is x²+1.
        let f9 = FqField::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        // GF(8): x³+x+1.
        let f8 = FqField::new(2, 3).unwrap();
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]);
        // Prime field shortcut.
        let f5 = FqField::new(5, 1).unwrap();
        assert_eq!(f5.modulus(), &[0, 1]);
        assert_eq!(f5.q(), 5);
    }

    #[test]
    fn construction_guards() {
        assert!(FqField::new(6, 1).is_err());
        assert!(FqField::new(2, 17).is_err());
        assert!(FqField::new(2, 0).is_err());
    }

    #[test]
    fn gf9_arithmetic() {
        let f = FqField::new(3, 2).unwrap();
        let t = f.gen_t();
        // t·t = t² = -1 = 2 mod (t²+1)
        assert_eq!(f.mul(&t, &t), f.from_scalar(2));
        // frobenius(t, 1) = t³ = -t = 2t
        let mut expect = f.zero();
        expect.coeffs[1] = 2;
        assert_eq!(f.frobenius(&t, 1), expect);
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (p, f) in [(5, 1), (2, 3), (3, 2), (5, 2), (3, 3), (2, 4)] {
            let field = FqField::new(p, f).unwrap();
            for _ in 0..60 {
                let a = field.elem_from_index(rng.gen_range(0..field.q()));
                let b = field.elem_from_index(rng.gen_range(0..field.q()));
                // a·1 = a
                assert_eq!(field.mul(&a, &field.one()), a);
                // a·a⁻¹ = 1
                if !field.is_zero(&a) {
                    assert_eq!(field.mul(&a, &field.inv(&a).unwrap()), field.one());
                }
                // Frobenius is additive and multiplicative
                let fa = field.frobenius(&a, 1);
                let fb = field.frobenius(&b, 1);
                assert_eq!(field.frobenius(&field.add(&a, &b), 1), field.add(&fa, &fb));
                assert_eq!(field.frobenius(&field.mul(&a, &b), 1), field.mul(&fa, &fb));
                // frobenius(·, f) is the identity
                assert_eq!(field.frobenius(&a, f as u32), a);
            }
        }
        assert!(FqField::new(5, 1).unwrap().inv(&FqField::new(5, 1).unwrap().zero()).is_err());
    }

    #[test]
    fn multiplicative_orders() {
        let f5 = FqField::new(5, 1).unwrap();
        assert_eq!(f5.multiplicative_order(&f5.one()).unwrap(), 1);
        assert_eq!(f5.multiplicative_order(&f5.from_scalar(2)).unwrap(), 4);
        assert!(f5.multiplicative_order(&f5.zero()).is_err());

        for (p, f) in [(5, 1), (2, 3), (3, 2), (5, 2)] {
            let field = FqField::new(p, f).unwrap();
            let q = field.q();
            let max = (1..q)
                .map(|i| field.multiplicative_order(&field.elem_from_index(i)).unwrap())
                .max()
                .unwrap();
            assert_eq!(max, q - 1, "GF({q}) multiplicative group is cyclic");
            // exactly φ(q-1) generators
            let generators = (1..q)
                .filter(|&i| {
                    field
                        .multiplicative_order(&field.elem_from_index(i))
                        .unwrap()
                        == q - 1
                })
                .count() as u64;
            assert_eq!(generators, euler_phi(q - 1));
        }
    }

    #[test]
    fn subfield_fixed_points() {
        // GF(3) sits inside GF(9) as the solutions of a^3 = a.
        let f9 = FqField::new(3, 2).unwrap();
        let fixed = f9
            .elements()
            .filter(|a| f9.pow(a, 3) == *a)
            .count();
        assert_eq!(fixed, 3);
        // GF(5) inside GF(25).
        let f25 = FqField::new(5, 2).unwrap();
        let fixed = f25.elements().filter(|a| f25.pow(a, 5) == *a).count();
        assert_eq!(fixed, 5);
    }

    #[test]
    fn squares_and_rendering() {
        let f9 = FqField::new(3, 2).unwrap();
        let squares = f9.elements().filter(|a| f9.is_square(a)).count();
        assert_eq!(squares, 5); // 0 plus (q-1)/2 nonzero squares
        let t = f9.gen_t();
        assert_eq!(f9.render(&t), "t");
        assert_eq!(f9.render(&f9.zero()), "0");
        assert_eq!(f9.render(&f9.add(&f9.one(), &t)), "1+t");
        assert_eq!(f9.spec_string(), "GF(3^2)");
    }
}
