//! Dense permutations on `{0..n-1}` and their cycle structure.
//!
//! Every group element in this crate is carried by a [`Permutation`]; the
//! cycle machinery here is what all Λ-style quantities bottom out in.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection on `{0..degree-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::invalid("image array is not a bijection"));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                let pt = pt as usize;
                if pt >= degree || moved[pt] {
                    return Err(Error::invalid("cycles are not disjoint or out of range"));
                }
                moved[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Composition `self ∘ other`: the result maps `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Same as [`compose`](Self::compose), for callers that already know the
    /// degrees agree.
    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    /// In-place variant of [`mul`](Self::mul) for hot sweeps.
    #[inline]
    pub fn mul_into(&self, other: &Self, out: &mut Vec<u32>) {
        out.clear();
        out.extend(other.images.iter().map(|&i| self.images[i as usize]));
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = base.mul(&result);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        result
    }

    /// Cycles ordered by smallest contained point, each starting from its
    /// smallest point. Fixed points appear as 1-cycles.
    pub fn cycle_decompose(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut pt = self.images[start as usize];
            while pt != start {
                seen[pt as usize] = true;
                cycle.push(pt);
                pt = self.images[pt as usize];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    /// Length of the cycle containing `x`.
    pub fn cycle_length_of(&self, x: u32) -> u64 {
        let mut len = 1u64;
        let mut pt = self.images[x as usize];
        while pt != x {
            pt = self.images[pt as usize];
            len += 1;
        }
        len
    }

    /// Λ: the maximum cycle length.
    pub fn lambda(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut best = 0u64;
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 1u64;
            seen[start as usize] = true;
            let mut pt = self.images[start as usize];
            while pt != start {
                seen[pt as usize] = true;
                pt = self.images[pt as usize];
                len += 1;
            }
            best = best.max(len);
        }
        best
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 1u64;
            seen[start as usize] = true;
            let mut pt = self.images[start as usize];
            while pt != start {
                seen[pt as usize] = true;
                pt = self.images[pt as usize];
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    /// True iff some cycle has length equal to the order.
    pub fn has_regular_cycle(&self) -> bool {
        self.lambda() == self.order()
    }

    /// Textual cycle notation, fixed points omitted; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let decomp = self.cycle_decompose();
        let mut out = String::new();
        for cycle in decomp.cycles.iter().filter(|c| c.len() > 1) {
            out.push('(');
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&pt.to_string());
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

/// The disjoint cycles of a permutation; see [`Permutation::cycle_decompose`].
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<u32>>,
}

impl CycleDecomposition {
    pub fn lengths(&self) -> Vec<u64> {
        self.cycles.iter().map(|c| c.len() as u64).collect()
    }

    pub fn lambda(&self) -> u64 {
        self.cycles.iter().map(|c| c.len() as u64).max().unwrap_or(0)
    }

    pub fn order(&self) -> u64 {
        self.cycles
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

/// Realizes the product self-transformation `p_1 × … × p_r` on the product
/// domain, encoded in mixed radix (last factor varies fastest).
pub fn product_on_mixed_radix(ps: &[&Permutation]) -> Permutation {
    let total: usize = ps.iter().map(|p| p.degree()).product();
    let mut images = Vec::with_capacity(total);
    for idx in 0..total {
        // decode, apply componentwise, re-encode
        let mut rem = idx;
        let mut digits = vec![0u32; ps.len()];
        for (k, p) in ps.iter().enumerate().rev() {
            digits[k] = (rem % p.degree()) as u32;
            rem /= p.degree();
        }
        let mut enc = 0usize;
        for (k, p) in ps.iter().enumerate() {
            enc = enc * p.degree() + p.image(digits[k]) as usize;
        }
        images.push(enc as u32);
    }
    Permutation { images }
}
