//! Exact Landau and Chebyshev functions, prime utilities, and the analytic
//! bounds used by the inequality checkers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A positive integer in factored form, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        FactoredInteger { factors: Vec::new() }
    }

    pub fn from_u64(mut n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cannot factor 0"));
        }
        let mut factors = Vec::new();
        let mut p = 2u64;
        while p * p <= n {
            if n % p == 0 {
                let mut e = 0u32;
                while n % p == 0 {
                    n /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            factors.push((n, 1));
        }
        Ok(FactoredInteger { factors })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// p-adic valuation; 0 for primes not present.
    pub fn nu(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn value(&self) -> BigUint {
        let mut v = BigUint::one();
        for &(p, e) in &self.factors {
            v *= BigUint::from(p).pow(e);
        }
        v
    }

    pub fn log(&self) -> f64 {
        self.factors
            .iter()
            .map(|&(p, e)| e as f64 * (p as f64).ln())
            .sum()
    }
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// The k-th prime, with `nth_prime(0) = 2`.
pub fn nth_prime(k: usize) -> u64 {
    let mut bound = 32u64;
    loop {
        let primes = primes_up_to(bound);
        if primes.len() > k {
            return primes[k];
        }
        bound *= 2;
    }
}

/// Writes `n = p^f` if possible.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut f = 0u32;
            while m % p == 0 {
                m /= p;
                f += 1;
            }
            return if m == 1 { Some((p, f)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

/// Landau's function g(n): the maximum element order in Sym_n, i.e. the
/// maximum lcm over partitions of n. Dynamic programming over prime powers:
/// each prime contributes at most one power p^k with Σ p^k ≤ n.
pub fn landau_g(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::invalid("landau_g requires n >= 1"));
    }
    let budget = n as usize;
    let mut best: Vec<BigUint> = vec![BigUint::one(); budget + 1];
    for p in primes_up_to(n) {
        for b in (0..=budget).rev() {
            let mut pk = p;
            while pk as usize <= b {
                let cand = &best[b - pk as usize] * BigUint::from(pk);
                if cand > best[b] {
                    best[b] = cand;
                }
                match pk.checked_mul(p) {
                    Some(next) if next as usize <= budget => pk = next,
                    _ => break,
                }
            }
        }
    }
    Ok(best[budget].clone())
}

/// Chebyshev's Ψ(n) = lcm(1..n) in factored form, together with
/// ψ(n) = log Ψ(n).
pub fn chebyshev_psi(n: u64) -> Result<(FactoredInteger, f64)> {
    if n == 0 {
        return Err(Error::invalid("chebyshev_psi requires n >= 1"));
    }
    let mut factors = Vec::new();
    for p in primes_up_to(n) {
        let mut e = 0u32;
        let mut pk = p;
        while pk <= n {
            e += 1;
            match pk.checked_mul(p) {
                Some(next) => pk = next,
                None => break,
            }
        }
        factors.push((p, e));
    }
    let fi = FactoredInteger { factors };
    let log = fi.log();
    Ok((fi, log))
}

/// Massias: log g(n) ≤ 1.05314·√(n log n) for n ≥ 2.
pub fn check_massias(n: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::invalid("check_massias requires n >= 2"));
    }
    let g = landau_g(n)?;
    let log_g = big_log(&g);
    let nf = n as f64;
    Ok(log_g <= 1.05314 * (nf * nf.ln()).sqrt())
}

/// Rosser–Schoenfeld: ψ(n) < 1.03883·n.
pub fn check_rosser_schoenfeld(n: u64) -> Result<bool> {
    let (_, psi) = chebyshev_psi(n)?;
    Ok(psi < 1.03883 * n as f64)
}

/// g(n) ≤ 3^{n/3}, comparing g(n)³ against 3ⁿ exactly.
/// Returns (holds, equality).
pub fn check_landau_exponential(n: u64) -> Result<(bool, bool)> {
    let g = landau_g(n)?;
    let lhs = g.pow(3);
    let rhs = BigUint::from(3u32).pow(n as u32);
    Ok((lhs <= rhs, lhs == rhs))
}

/// Natural log of a big integer via the digit representation.
pub fn big_log(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 52 {
        return n.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top = (n >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Maximum lcm obtainable by picking at most `k` values from `orders`
/// (repetition never helps an lcm, so subsets suffice).
pub fn max_lcm_of_at_most(orders: &[u64], k: usize) -> u64 {
    let mut distinct: Vec<u64> = orders.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    fn dfs(orders: &[u64], from: usize, left: usize, acc: u64, best: &mut u64) {
        if acc > *best {
            *best = acc;
        }
        if left == 0 {
            return;
        }
        for i in from..orders.len() {
            let next = acc.lcm(&orders[i]);
            if next != acc {
                dfs(orders, i + 1, left - 1, next, best);
            }
        }
    }
    let mut best = 1;
    dfs(&distinct, 0, k, 1, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: enumerate all partitions of n and take the
    /// maximum lcm of the parts.
    fn landau_brute(n: u64) -> u64 {
        fn rec(remaining: u64, max_part: u64, acc: u64) -> u64 {
            let mut best = acc;
            for part in (1..=max_part.min(remaining)).rev() {
                best = best.max(rec(remaining - part, part, acc.lcm(&part)));
            }
            best
        }
        rec(n, n, 1)
    }

    #[test]
    fn landau_matches_partition_oracle() {
        for n in 1..=25u64 {
            let dp = landau_g(n).unwrap();
            assert_eq!(dp, BigUint::from(landau_brute(n)), "n={n}");
        }
    }

    #[test]
    fn landau_examples() {
        assert_eq!(landau_g(1).unwrap(), BigUint::from(1u32));
        assert_eq!(landau_g(3).unwrap(), BigUint::from(3u32));
        assert_eq!(landau_g(7).unwrap(), BigUint::from(12u32));
        assert_eq!(landau_g(10).unwrap(), BigUint::from(30u32));
        assert!(landau_g(0).is_err());
    }

    #[test]
    fn landau_nondecreasing() {
        let mut prev = BigUint::from(1u32);
        for n in 1..=120u64 {
            let g = landau_g(n).unwrap();
            assert!(g >= prev);
            prev = g;
        }
    }

    #[test]
    fn chebyshev_examples() {
        let (fi, psi) = chebyshev_psi(1).unwrap();
        assert_eq!(fi.value(), BigUint::one());
        assert_eq!(psi, 0.0);
        assert_eq!(chebyshev_psi(10).unwrap().0.value(), BigUint::from(2520u32));
        assert_eq!(chebyshev_psi(6).unwrap().0.value(), BigUint::from(60u32));
    }

    #[test]
    fn massias_holds_up_to_200() {
        // n = 1 separately: log g(1) = 0.
        assert_eq!(landau_g(1).unwrap(), BigUint::one());
        for n in 2..=200 {
            assert!(check_massias(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn rosser_schoenfeld_holds_up_to_1000() {
        for n in 1..=1000 {
            assert!(check_rosser_schoenfeld(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn landau_exponential_equality_only_at_3() {
        for n in 1..=200 {
            let (holds, eq) = check_landau_exponential(n).unwrap();
            assert!(holds, "n={n}");
            assert_eq!(eq, n == 3, "n={n}");
        }
    }

    #[test]
    fn valuation_is_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let a = rng.gen_range(1..=1_000_000u64);
            let b = rng.gen_range(1..=1_000_000u64);
            let fa = FactoredInteger::from_u64(a).unwrap();
            let fb = FactoredInteger::from_u64(b).unwrap();
            let fab = FactoredInteger::from_u64(a.checked_mul(b).unwrap()).unwrap();
            for p in [2u64, 3, 5, 7, 11, 13] {
                assert_eq!(fab.nu(p), fa.nu(p) + fb.nu(p));
            }
        }
    }

    #[test]
    fn factored_roundtrip() {
        for n in 1..=500u64 {
            assert_eq!(FactoredInteger::from_u64(n).unwrap().value(), BigUint::from(n));
        }
        assert_eq!(FactoredInteger::from_u64(12).unwrap().nu(17), 0);
    }

    #[test]
    fn prime_utilities() {
        assert_eq!(nth_prime(0), 2);
        assert_eq!(nth_prime(2), 5);
        assert_eq!(nth_prime(3), 7);
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert_eq!(as_prime_power(27), Some((3, 3)));
        assert_eq!(as_prime_power(12), None);
        assert_eq!(as_prime_power(16), Some((2, 4)));
    }

    #[test]
    fn max_lcm_subsets() {
        assert_eq!(max_lcm_of_at_most(&[1, 2, 3, 4, 5, 6], 2), 30);
        assert_eq!(max_lcm_of_at_most(&[1, 2, 3, 4, 5, 6], 3), 60);
        assert_eq!(max_lcm_of_at_most(&[7], 3), 7);
        assert_eq!(max_lcm_of_at_most(&[2, 4], 1), 4);
    }
}
