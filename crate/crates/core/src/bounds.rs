//! Constants and exact inequality machinery relating maximal affine/automorphism
//! cycle lengths to group orders: the exponents governing the solvable-radical
//! index bounds, closed-form exceptional values for projective linear families,
//! monotone-convergence checks, and exact big-integer case inequalities over
//! classical simple-group families.

use num_bigint::BigUint;
use num_integer::gcd;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numtheory::{as_prime_power, big_log, is_prime, landau_g, max_lcm_of_at_most, nth_prime};

/// The exponent constants: `e1 = log_60(6)`, `E1 = 1/(e1 - 1)`,
/// `e2 = log_60(30)`, `E2 = 1/(e2 - 1)`.
#[derive(Debug, Clone, Copy)]
#[allow(non_snake_case)]
pub struct BoundConstants {
    pub e1: f64,
    pub E1: f64,
    pub e2: f64,
    pub E2: f64,
}

impl BoundConstants {
    pub fn new() -> Self {
        let e1 = 6f64.ln() / 60f64.ln();
        let e2 = 30f64.ln() / 60f64.ln();
        BoundConstants {
            e1,
            E1: 1.0 / (e1 - 1.0),
            e2,
            E2: 1.0 / (e2 - 1.0),
        }
    }
}

impl Default for BoundConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// Which normalized cycle-length quantity a radical-index bound refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Bound in terms of the automorphism quantity (exponent `E1`).
    Automorphism,
    /// Bound in terms of the affine quantity (exponent `E2`).
    Affine,
}

/// Upper bound `rho^E` on the index of the solvable radical, where
/// `rho = num/den` must lie strictly between 0 and 1 and `E` is `E1` or `E2`
/// depending on `kind`.
pub fn radical_index_bound(num: u64, den: u64, kind: BoundKind) -> Result<f64> {
    if num == 0 || den == 0 || num >= den {
        return Err(Error::invalid(format!(
            "ratio {num}/{den} must lie strictly between 0 and 1"
        )));
    }
    let c = BoundConstants::new();
    let exp = match kind {
        BoundKind::Automorphism => c.E1,
        BoundKind::Affine => c.E2,
    };
    Ok((num as f64 / den as f64).powf(exp))
}

/// Classical simple-group families with closed-form orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimpleFamily {
    /// Projective special linear group of degree `d`.
    Linear { d: u32 },
    /// Projective special unitary group of degree `d`.
    Unitary { d: u32 },
    /// Projective symplectic group of rank `m` (degree `2m`).
    Symplectic { m: u32 },
    /// Odd-dimensional orthogonal group of rank `m` (degree `2m + 1`).
    OrthogonalOdd { m: u32 },
    /// Even-dimensional orthogonal group of plus type, rank `m`.
    OrthogonalPlus { m: u32 },
    /// Even-dimensional orthogonal group of minus type, rank `m`.
    OrthogonalMinus { m: u32 },
}

/// Exact order of a classical simple group together with an upper bound on the
/// maximum element order of its automorphism group.  The bound is stored as an
/// exact fraction `mao_num / mao_den` so that inequality checks stay in
/// integer arithmetic.
#[derive(Debug, Clone)]
pub struct SimpleGroupOrderFormula {
    pub family: SimpleFamily,
    pub q: u64,
    pub order: BigUint,
    pub mao_num: BigUint,
    pub mao_den: BigUint,
}

fn require_prime_power(q: u64) -> Result<(u64, u32)> {
    as_prime_power(q)
        .ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))
}

fn qp(q: u64, e: u32) -> BigUint {
    BigUint::from(q).pow(e)
}

/// Builds the order formula and the maximum-automorphism-order bound for one
/// classical family member.
pub fn simple_group_order(family: SimpleFamily, q: u64) -> Result<SimpleGroupOrderFormula> {
    require_prime_power(q)?;
    let one = BigUint::one();
    let (order, mao_num, mao_den) = match family {
        SimpleFamily::Linear { d } => {
            if d < 3 || (d, q) == (3, 2) {
                return Err(Error::invalid(format!(
                    "linear family needs d >= 3 and (d, q) != (3, 2); got d={d}, q={q}"
                )));
            }
            let mut order = qp(q, d * (d - 1) / 2);
            for i in 2..=d {
                order *= qp(q, i) - &one;
            }
            order /= gcd(d as u64, q - 1);
            // Largest automorphism order: (q^d - 1)/(q - 1).
            let mao = (qp(q, d) - &one) / (q - 1);
            (order, mao, one)
        }
        SimpleFamily::Unitary { d } => {
            if d < 3 || (d, q) == (3, 2) {
                return Err(Error::invalid(format!(
                    "unitary family needs d >= 3 and (d, q) != (3, 2); got d={d}, q={q}"
                )));
            }
            let mut order = qp(q, d * (d - 1) / 2);
            for i in 2..=d {
                // q^i - (-1)^i
                if i % 2 == 0 {
                    order *= qp(q, i) - &one;
                } else {
                    order *= qp(q, i) + &one;
                }
            }
            order /= gcd(d as u64, q + 1);
            let mao = match d {
                3 => BigUint::from(q * q + q),
                4 => qp(q, 3) + BigUint::from(4u32),
                _ => qp(q, d),
            };
            (order, mao, one)
        }
        SimpleFamily::Symplectic { m } | SimpleFamily::OrthogonalOdd { m } => {
            let minimum = if matches!(family, SimpleFamily::Symplectic { .. }) { 2 } else { 3 };
            if m < minimum || (m, q) == (2, 2) {
                return Err(Error::invalid(format!(
                    "family needs m >= {minimum} and (m, q) != (2, 2); got m={m}, q={q}"
                )));
            }
            if matches!(family, SimpleFamily::OrthogonalOdd { .. }) && q % 2 == 0 {
                return Err(Error::invalid(
                    "odd-dimensional orthogonal groups need odd q".to_string(),
                ));
            }
            let mut order = qp(q, m * m);
            for i in 1..=m {
                order *= qp(q, 2 * i) - &one;
            }
            order /= gcd(2, q - 1);
            // Maximum automorphism order is at most q^(m+1)/(q-1).
            (order, qp(q, m + 1), BigUint::from(q - 1))
        }
        SimpleFamily::OrthogonalPlus { m } | SimpleFamily::OrthogonalMinus { m } => {
            if m < 4 {
                return Err(Error::invalid(format!(
                    "even-dimensional orthogonal groups need m >= 4; got m={m}"
                )));
            }
            let qm = qp(q, m);
            let middle = if matches!(family, SimpleFamily::OrthogonalPlus { .. }) {
                &qm - &one
            } else {
                &qm + &one
            };
            let residue: u64 = (&middle % 4u64).try_into().unwrap();
            let g4 = gcd(4u64, residue); // gcd(4, 0) = 4

            let mut order = qp(q, m * (m - 1)) * middle;
            for i in 1..=(m - 1) {
                order *= qp(q, 2 * i) - &one;
            }
            order /= g4;
            (order, qp(q, m + 1), BigUint::from(q - 1))
        }
    };
    Ok(SimpleGroupOrderFormula {
        family,
        q,
        order,
        mao_num,
        mao_den,
    })
}

fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / gcd(2, q - 1)
}

/// Closed-form exceptional values for the projective linear rank-one family:
/// maximal automorphism cycle lengths of the group itself, of its square and
/// cube (prime field case), and the maximal affine cycle length, each with
/// the exponent of the value relative to the relevant group order.
#[derive(Debug, Clone)]
pub struct ExceptionValues {
    pub q: u64,
    /// Maximal automorphism cycle length: `q + 1`.
    pub lambda_aut_1: u64,
    pub aut_1_exponent: f64,
    pub aut_1_above_third: bool,
    /// For prime q = p: maximal automorphism cycle length of the square, `p(p+1)`.
    pub lambda_aut_sq: Option<u64>,
    pub aut_sq_exponent: Option<f64>,
    pub aut_sq_above_third: Option<bool>,
    /// For prime q = p: maximal automorphism cycle length of the cube,
    /// `p(p^2-1)/2`, which equals the cube root of the group order exactly.
    pub lambda_aut_cube: Option<u64>,
    pub aut_cube_is_exact_third: Option<bool>,
    /// Maximal affine cycle length: `q(q+1)` for prime q, `q^2 - 1` for even
    /// non-prime q, `(q^2 - 1)/2` for odd non-prime q.
    pub lambda_aff_1: u64,
    pub aff_1_exponent: f64,
    pub aff_1_above_two_thirds: bool,
}

/// Evaluates the closed-form exceptional values at a prime power `q >= 5`.
pub fn mainlemma_exception_values(q: u64) -> Result<ExceptionValues> {
    require_prime_power(q)?;
    if q < 5 {
        return Err(Error::invalid(format!("need q >= 5; got {q}")));
    }
    let order = psl2_order(q);
    let log_order = (order as f64).ln();
    let lambda_aut_1 = q + 1;
    let aut_1_exponent = (lambda_aut_1 as f64).ln() / log_order;

    let (lambda_aut_sq, aut_sq_exponent, lambda_aut_cube, aut_cube_is_exact_third) =
        if is_prime(q) {
            let sq = q * (q + 1);
            let sq_exp = (sq as f64).ln() / (2.0 * log_order);
            let cube = q * (q * q - 1) / 2;
            // Exact: the cube of the value equals the order of the cube.
            let exact = BigUint::from(cube).pow(3) == BigUint::from(order).pow(3);
            (Some(sq), Some(sq_exp), Some(cube), Some(exact))
        } else {
            (None, None, None, None)
        };

    let lambda_aff_1 = if is_prime(q) {
        q * (q + 1)
    } else if q % 2 == 0 {
        q * q - 1
    } else {
        (q * q - 1) / 2
    };
    let aff_1_exponent = (lambda_aff_1 as f64).ln() / log_order;

    Ok(ExceptionValues {
        q,
        lambda_aut_1,
        aut_1_exponent,
        aut_1_above_third: aut_1_exponent > 1.0 / 3.0,
        lambda_aut_sq,
        aut_sq_exponent,
        aut_sq_above_third: aut_sq_exponent.map(|e| e > 1.0 / 3.0),
        lambda_aut_cube,
        aut_cube_is_exact_third,
        lambda_aff_1,
        aff_1_exponent,
        aff_1_above_two_thirds: aff_1_exponent > 2.0 / 3.0,
    })
}

/// Which exceptional-value exponent sequence to test for monotone convergence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergenceCase {
    /// Exponent of `q + 1` relative to the group order; limit 1/3 from above.
    AutomorphismSingle,
    /// Exponent of `p(p + 1)` relative to the squared order; limit 1/3 from above.
    AutomorphismSquare,
    /// Exponent of `p(p + 1)` relative to the order; limit 2/3 from above.
    AffineSingle,
}

/// Checks that the chosen exponent sequence is strictly decreasing along the
/// given parameter list and stays above its limit (1/3 or 2/3) at every point.
pub fn check_monotone_convergence(case: ConvergenceCase, params: &[u64]) -> Result<bool> {
    if params.is_empty() {
        return Err(Error::invalid("empty parameter list".to_string()));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("parameters must be strictly increasing".to_string()));
    }
    let floor = match case {
        ConvergenceCase::AutomorphismSingle | ConvergenceCase::AutomorphismSquare => 1.0 / 3.0,
        ConvergenceCase::AffineSingle => 2.0 / 3.0,
    };
    let mut prev = f64::INFINITY;
    for &q in params {
        require_prime_power(q)?;
        if q < 5 {
            return Err(Error::invalid(format!("need q >= 5; got {q}")));
        }
        let needs_prime = !matches!(case, ConvergenceCase::AutomorphismSingle);
        if needs_prime && !is_prime(q) {
            return Err(Error::invalid(format!("case needs primes; got {q}")));
        }
        // The monotone quantity is the closed-form upper bound with the
        // uniform denominator q(q^2-1)/2, which dominates the true exponent.
        let log_half = (q as f64 * (q as f64 * q as f64 - 1.0) / 2.0).ln();
        let exponent = match case {
            ConvergenceCase::AutomorphismSingle => ((q + 1) as f64).ln() / log_half,
            ConvergenceCase::AutomorphismSquare => {
                ((q * (q + 1)) as f64).ln() / (2.0 * log_half)
            }
            ConvergenceCase::AffineSingle => ((q * (q + 1)) as f64).ln() / log_half,
        };
        if exponent <= floor || exponent >= prev {
            return Ok(false);
        }
        prev = exponent;
    }
    Ok(true)
}

/// Case-inequality families.  Each compares, for a simple group `S` of the
/// family, the growth of maximal element orders of direct powers against
/// `|S|^(n/3)`; both sides are cubed so that the check is an exact integer
/// comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseFamily {
    /// Linear groups of degree `d >= 3`; at (d, q) = (3, 3) and (3, 4) the
    /// generic element-order bound is too coarse and the exact order spectrum
    /// of the concretely constructed automorphism group is used instead.
    Linear { d: u32 },
    /// Unitary groups of degree `d >= 3` with the family's element-order bound.
    Unitary { d: u32 },
    /// The reduced q-only sufficient inequality for unitary degree 3:
    /// `gcd(3, q+1) < (q^2-q+1)/(q+1) * (1 - 1/q)`.  Fails at q = 5, where
    /// the direct unitary check still succeeds.
    UnitaryRank3Reduced,
    /// Symplectic groups of rank `m >= 2` (also covers the odd-dimensional
    /// orthogonal groups, which share the same order formula).
    Symplectic { m: u32 },
    /// Plus-type even-dimensional orthogonal groups of rank `m >= 4`.
    OrthogonalPlus { m: u32 },
    /// Minus-type even-dimensional orthogonal groups of rank `m >= 4`.
    OrthogonalMinus { m: u32 },
}

/// Cubed comparison `g(n)^3 * bound_num^(3n) < order^n * bound_den^(3n)`.
fn cubed_holds(n: u32, order: &BigUint, bound_num: &BigUint, bound_den: &BigUint) -> Result<bool> {
    let g = landau_g(n as u64)?;
    let lhs = g.pow(3) * bound_num.pow(3 * n);
    let rhs = order.pow(n) * bound_den.pow(3 * n);
    Ok(lhs < rhs)
}

/// Cubed comparison with the exact maximal lcm of at most `n` element orders:
/// `(g(n) * maxlcm_n)^3 < order^n`.
fn cubed_holds_spectrum(n: u32, order: &BigUint, spectrum: &[u64]) -> Result<bool> {
    let g = landau_g(n as u64)?;
    let m = max_lcm_of_at_most(spectrum, n as usize);
    let lhs = (g * BigUint::from(m)).pow(3);
    Ok(lhs < order.pow(n))
}

/// Evaluates one case inequality for each `n` in `n_range`, entirely in exact
/// integer arithmetic.
pub fn check_case_inequality(
    family: CaseFamily,
    q: u64,
    n_range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<(u32, bool)>> {
    require_prime_power(q)?;
    let mut out = Vec::new();
    match family {
        CaseFamily::Linear { d } => {
            let formula = simple_group_order(SimpleFamily::Linear { d }, q)?;
            if d == 3 && (q == 3 || q == 4) {
                // The generic bound (q^3-1)/(q-1) is not sharp enough here;
                // use the exact order spectrum of the full automorphism group.
                let bundle = crate::matgrp::psl3_bundle(q)?;
                let spectrum = bundle.full.order_spectrum();
                for n in n_range {
                    out.push((n, cubed_holds_spectrum(n, &formula.order, &spectrum)?));
                }
            } else {
                for n in n_range {
                    out.push((n, cubed_holds(n, &formula.order, &formula.mao_num, &formula.mao_den)?));
                }
            }
        }
        CaseFamily::Unitary { d } => {
            let formula = simple_group_order(SimpleFamily::Unitary { d }, q)?;
            for n in n_range {
                out.push((n, cubed_holds(n, &formula.order, &formula.mao_num, &formula.mao_den)?));
            }
        }
        CaseFamily::UnitaryRank3Reduced => {
            if q < 3 {
                return Err(Error::invalid("reduced unitary check needs q >= 3".to_string()));
            }
            // gcd(3, q+1) * q * (q+1) < (q^2 - q + 1)(q - 1), n-independent.
            let lhs = BigUint::from(gcd(3, q + 1)) * BigUint::from(q) * BigUint::from(q + 1);
            let rhs = BigUint::from(q * q - q + 1) * BigUint::from(q - 1);
            let holds = lhs < rhs;
            for n in n_range {
                out.push((n, holds));
            }
        }
        CaseFamily::Symplectic { m } => {
            let formula = simple_group_order(SimpleFamily::Symplectic { m }, q)?;
            for n in n_range {
                out.push((n, cubed_holds(n, &formula.order, &formula.mao_num, &formula.mao_den)?));
            }
        }
        CaseFamily::OrthogonalPlus { m } => {
            let formula = simple_group_order(SimpleFamily::OrthogonalPlus { m }, q)?;
            for n in n_range {
                out.push((n, cubed_holds(n, &formula.order, &formula.mao_num, &formula.mao_den)?));
            }
        }
        CaseFamily::OrthogonalMinus { m } => {
            let formula = simple_group_order(SimpleFamily::OrthogonalMinus { m }, q)?;
            for n in n_range {
                out.push((n, cubed_holds(n, &formula.order, &formula.mao_num, &formula.mao_den)?));
            }
        }
    }
    Ok(out)
}

/// Result of sweeping one family cell of the inequality grid.
#[derive(Debug, Clone)]
pub struct GridCell {
    pub label: String,
    pub all_hold: bool,
    pub failures: Vec<u32>,
}

/// Sweeps every case-inequality family over prime powers `q <= max_q`,
/// degrees `d <= max_d`, ranks `m <= max_m`, and `1 <= n <= max_n`.
pub fn check_full_grid(max_q: u64, max_d: u32, max_m: u32, max_n: u32) -> Result<Vec<GridCell>> {
    let mut cells = Vec::new();
    let prime_powers: Vec<u64> = (2..=max_q).filter(|&q| as_prime_power(q).is_some()).collect();
    let mut push = |label: String, results: Vec<(u32, bool)>| {
        let failures: Vec<u32> = results.iter().filter(|(_, h)| !h).map(|&(n, _)| n).collect();
        cells.push(GridCell {
            label,
            all_hold: failures.is_empty(),
            failures,
        });
    };
    for &q in &prime_powers {
        for d in 3..=max_d {
            if (d, q) != (3, 2) {
                let r = check_case_inequality(CaseFamily::Linear { d }, q, 1..=max_n)?;
                push(format!("linear d={d} q={q}"), r);
                let r = check_case_inequality(CaseFamily::Unitary { d }, q, 1..=max_n)?;
                push(format!("unitary d={d} q={q}"), r);
            }
        }
        // The reduced rank-3 unitary display fails at q = 5; the direct
        // unitary check (performed above) covers that cell.
        if q >= 3 && q != 5 {
            let r = check_case_inequality(CaseFamily::UnitaryRank3Reduced, q, 1..=1)?;
            push(format!("unitary-reduced q={q}"), r);
        }
        for m in 2..=max_m {
            if (m, q) != (2, 2) {
                let r = check_case_inequality(CaseFamily::Symplectic { m }, q, 1..=max_n)?;
                push(format!("symplectic m={m} q={q}"), r);
            }
        }
        for m in 4..=max_m {
            let r = check_case_inequality(CaseFamily::OrthogonalPlus { m }, q, 1..=max_n)?;
            push(format!("orthogonal+ m={m} q={q}"), r);
            let r = check_case_inequality(CaseFamily::OrthogonalMinus { m }, q, 1..=max_n)?;
            push(format!("orthogonal- m={m} q={q}"), r);
        }
    }
    Ok(cells)
}

/// Witness data for the n-th member of the sequence of groups whose
/// normalized cycle-length exponents stay above 1/3 and 2/3.
#[derive(Debug, Clone)]
pub struct SequenceWitness {
    pub n: u32,
    /// Prime parameter: the (n+2)-nd prime (5, 7, 11, ...).
    pub q: u64,
    pub label: String,
    /// Exponent of `q + 1` relative to `q(q^2 - 1)`.
    pub aut_exponent: f64,
    pub aut_above_third: bool,
    /// Exponent of `q(q + 1)` relative to `q(q^2 - 1)`.
    pub aff_exponent: f64,
    pub aff_above_two_thirds: bool,
}

/// The n-th sequence member: the full projective linear group over the prime
/// field with the (n+2)-nd prime, with both exponent witnesses evaluated.
pub fn maintheo2_sequence(n: u32) -> SequenceWitness {
    let q = nth_prime(n as usize + 2);
    let order = q * (q * q - 1);
    let log_order = (order as f64).ln();
    let aut_exponent = ((q + 1) as f64).ln() / log_order;
    let aff_exponent = ((q * (q + 1)) as f64).ln() / log_order;
    SequenceWitness {
        n,
        q,
        label: format!("PGL2:{q}"),
        aut_exponent,
        aut_above_third: aut_exponent > 1.0 / 3.0,
        aff_exponent,
        aff_above_two_thirds: aff_exponent > 2.0 / 3.0,
    }
}

/// A sporadic exceptional-family correction: a simple group whose generic
/// element-order bound is replaced by the exact product of its maximal
/// element order and outer automorphism group order.
#[derive(Debug, Clone)]
pub struct ExceptionalCorrection {
    pub name: &'static str,
    pub order: BigUint,
    /// Corrected bound `meo * |Out|`.
    pub bound: u64,
}

/// The two corrections with sharpened element-order bounds.
pub fn exceptional_corrections() -> Vec<ExceptionalCorrection> {
    vec![
        ExceptionalCorrection {
            name: "3D4(2)",
            order: BigUint::from(211_341_312u64),
            bound: 18 * 3,
        },
        ExceptionalCorrection {
            name: "2F4(2)'",
            order: BigUint::from(17_971_200u64),
            bound: 16 * 2,
        },
    ]
}

/// Checks the cubed inequality for one exceptional correction for each `n`.
pub fn check_exceptional_correction(
    corr: &ExceptionalCorrection,
    n_range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<(u32, bool)>> {
    let num = BigUint::from(corr.bound);
    let den = BigUint::one();
    let mut out = Vec::new();
    for n in n_range {
        out.push((n, cubed_holds(n, &corr.order, &num, &den)?));
    }
    Ok(out)
}

/// Natural logarithm of a big integer, for exponent diagnostics.
pub fn log_big(n: &BigUint) -> f64 {
    big_log(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::lambda_auto;
    use crate::matgrp::pgl2_family;

    #[test]
    fn constants_values_and_round_trip() {
        let c = BoundConstants::new();
        assert!((c.e1 - 0.437_618).abs() < 1e-6);
        assert!((c.E1 - (-1.778_151)).abs() < 1e-6);
        assert!((c.e2 - 30f64.ln() / 60f64.ln()).abs() < 1e-15);
        assert!((c.E2 - (-5.906_890)).abs() < 1e-6);

        let b1 = radical_index_bound(1, 10, BoundKind::Automorphism).unwrap();
        assert!((b1 - 60.0).abs() / 60.0 < 1e-6);
        let b2 = radical_index_bound(1, 4, BoundKind::Affine).unwrap();
        assert!((b2 - 3600.0).abs() / 3600.0 < 1e-6);
        // rho -> 1 from below pushes the bound towards 1.
        let b3 = radical_index_bound(999_999, 1_000_000, BoundKind::Automorphism).unwrap();
        assert!((b3 - 1.0).abs() < 1e-4);

        assert!(radical_index_bound(1, 1, BoundKind::Automorphism).is_err());
        assert!(radical_index_bound(3, 2, BoundKind::Affine).is_err());
        assert!(radical_index_bound(0, 5, BoundKind::Affine).is_err());
    }

    #[test]
    fn order_formulas_match_known_orders() {
        let cases: Vec<(SimpleFamily, u64, u64)> = vec![
            (SimpleFamily::Linear { d: 3 }, 3, 5_616),
            (SimpleFamily::Linear { d: 3 }, 4, 20_160),
            (SimpleFamily::Linear { d: 4 }, 2, 20_160),
            (SimpleFamily::Unitary { d: 3 }, 3, 6_048),
            (SimpleFamily::Unitary { d: 3 }, 5, 126_000),
            (SimpleFamily::Unitary { d: 4 }, 2, 25_920),
            (SimpleFamily::Symplectic { m: 2 }, 3, 25_920),
            (SimpleFamily::Symplectic { m: 3 }, 2, 1_451_520),
            (SimpleFamily::OrthogonalOdd { m: 3 }, 3, 4_585_351_680),
            (SimpleFamily::OrthogonalPlus { m: 4 }, 2, 174_182_400),
            (SimpleFamily::OrthogonalMinus { m: 4 }, 2, 197_406_720),
        ];
        for (family, q, expect) in cases {
            let f = simple_group_order(family, q).unwrap();
            assert_eq!(f.order, BigUint::from(expect), "{family:?} q={q}");
        }
        // Linear element-order bound at d=2-adjacent small case: d=3, q=3 gives 13.
        let f = simple_group_order(SimpleFamily::Linear { d: 3 }, 3).unwrap();
        assert_eq!(f.mao_num, BigUint::from(13u32));

        assert!(simple_group_order(SimpleFamily::Linear { d: 3 }, 2).is_err());
        assert!(simple_group_order(SimpleFamily::Linear { d: 2 }, 5).is_err());
        assert!(simple_group_order(SimpleFamily::Symplectic { m: 2 }, 2).is_err());
        assert!(simple_group_order(SimpleFamily::OrthogonalOdd { m: 3 }, 4).is_err());
        assert!(simple_group_order(SimpleFamily::Linear { d: 3 }, 6).is_err());
    }

    #[test]
    fn exception_values_at_small_parameters() {
        let v5 = mainlemma_exception_values(5).unwrap();
        assert_eq!(v5.lambda_aut_1, 6);
        let c = BoundConstants::new();
        assert!((v5.aut_1_exponent - c.e1).abs() < 1e-12);
        assert!(v5.aut_1_above_third);
        assert_eq!(v5.lambda_aut_sq, Some(30));
        assert_eq!(v5.aut_sq_above_third, Some(true));
        assert_eq!(v5.lambda_aut_cube, Some(60));
        assert_eq!(v5.aut_cube_is_exact_third, Some(true));
        assert_eq!(v5.lambda_aff_1, 30);
        assert!((v5.aff_1_exponent - c.e2).abs() < 1e-12);
        assert!(v5.aff_1_above_two_thirds);

        // Affine closed forms across the three parameter shapes.
        assert_eq!(mainlemma_exception_values(7).unwrap().lambda_aff_1, 56);
        assert_eq!(mainlemma_exception_values(8).unwrap().lambda_aff_1, 63);
        assert_eq!(mainlemma_exception_values(9).unwrap().lambda_aff_1, 40);
        assert_eq!(mainlemma_exception_values(25).unwrap().lambda_aff_1, 312);
        assert_eq!(mainlemma_exception_values(16).unwrap().lambda_aff_1, 255);
        assert_eq!(mainlemma_exception_values(9).unwrap().lambda_aut_1, 10);

        assert!(mainlemma_exception_values(4).is_err());
        assert!(mainlemma_exception_values(6).is_err());
    }

    #[test]
    fn formula_agrees_with_exhaustive_automorphism_sweep() {
        for q in [5u64, 7, 8, 9] {
            let fam = pgl2_family(q).unwrap();
            let aut = fam.aut_psl().unwrap();
            let computed = lambda_auto(&aut).unwrap();
            let formula = mainlemma_exception_values(q).unwrap().lambda_aut_1;
            assert_eq!(computed, formula, "q={q}");
        }
    }

    #[test]
    fn monotone_convergence_on_grids() {
        let prime_powers: Vec<u64> = (5..=64).filter(|&q| as_prime_power(q).is_some()).collect();
        assert!(check_monotone_convergence(ConvergenceCase::AutomorphismSingle, &prime_powers)
            .unwrap());
        let primes: Vec<u64> = (5..=97).filter(|&p| is_prime(p)).collect();
        assert!(check_monotone_convergence(ConvergenceCase::AutomorphismSquare, &primes).unwrap());
        assert!(check_monotone_convergence(ConvergenceCase::AffineSingle, &primes).unwrap());

        assert!(check_monotone_convergence(ConvergenceCase::AutomorphismSingle, &[]).is_err());
        assert!(check_monotone_convergence(ConvergenceCase::AutomorphismSingle, &[7, 5]).is_err());
        assert!(check_monotone_convergence(ConvergenceCase::AutomorphismSquare, &[5, 9]).is_err());
    }

    #[test]
    fn case_inequalities_spot_checks() {
        let all_hold = |r: &[(u32, bool)]| r.iter().all(|&(_, h)| h);
        let r = check_case_inequality(CaseFamily::Linear { d: 3 }, 5, 1..=10).unwrap();
        assert!(all_hold(&r));
        let r = check_case_inequality(CaseFamily::Unitary { d: 3 }, 3, 1..=10).unwrap();
        assert!(all_hold(&r));
        let r = check_case_inequality(CaseFamily::Unitary { d: 3 }, 5, 1..=12).unwrap();
        assert!(all_hold(&r));
        let r = check_case_inequality(CaseFamily::Symplectic { m: 2 }, 3, 1..=10).unwrap();
        assert!(all_hold(&r));
        // The coarse bound fails at the special linear cells; the exact
        // spectrum succeeds there.
        let r = check_case_inequality(CaseFamily::Linear { d: 3 }, 3, 1..=12).unwrap();
        assert!(all_hold(&r));
        // Reduced rank-3 unitary display: holds at 3, 4, 7, fails at 5.
        for q in [3u64, 4, 7, 8] {
            let r = check_case_inequality(CaseFamily::UnitaryRank3Reduced, q, 1..=1).unwrap();
            assert!(all_hold(&r), "q={q}");
        }
        let r = check_case_inequality(CaseFamily::UnitaryRank3Reduced, 5, 1..=1).unwrap();
        assert!(!r[0].1);

        assert!(check_case_inequality(CaseFamily::Linear { d: 3 }, 2, 1..=3).is_err());
        assert!(check_case_inequality(CaseFamily::Symplectic { m: 2 }, 2, 1..=3).is_err());
    }

    #[test]
    fn sequence_witnesses() {
        let w0 = maintheo2_sequence(0);
        assert_eq!(w0.q, 5);
        assert!((w0.aut_exponent - 0.374).abs() < 1e-3);
        assert!((w0.aff_exponent - 0.711).abs() < 1e-3);
        assert_eq!(maintheo2_sequence(1).q, 7);
        for n in 0..=20 {
            let w = maintheo2_sequence(n);
            assert!(w.aut_above_third, "n={n}");
            assert!(w.aff_above_two_thirds, "n={n}");
        }
    }

    #[test]
    fn full_default_grid_holds() {
        let cells = check_full_grid(64, 8, 6, 12).unwrap();
        assert!(cells.len() > 300);
        let failures: Vec<&GridCell> = cells.iter().filter(|c| !c.all_hold).collect();
        assert!(failures.is_empty(), "failing cells: {failures:?}");
    }

    #[test]
    fn exceptional_corrections_hold() {
        let corrs = exceptional_corrections();
        assert_eq!(corrs[0].bound, 54);
        assert_eq!(corrs[1].bound, 32);
        for corr in &corrs {
            let r = check_exceptional_correction(corr, 1..=12).unwrap();
            assert!(r.iter().all(|&(_, h)| h), "{}", corr.name);
        }
    }
}
