//! Wreath products G ≀ Symₙ handled symbolically.
//!
//! Elements are (base tuple, top permutation) pairs; orders come from the
//! component-power formula, and meo over the whole wreath product is
//! computed per cycle type of the top permutation using only the element
//! order spectrum of G — no enumeration of Gⁿ.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{AutGroup, ConcreteGroup};
use crate::numtheory::max_lcm_of_at_most;
use crate::perm::Permutation;

/// Largest supported top degree for meo computations.
pub const WREATH_DEGREE_GUARD: usize = 6;

/// An element (g, ψ) of G ≀ Symₙ: a base tuple of element indices of G and a
/// top permutation of the n coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElement {
    pub base: Vec<usize>,
    pub top: Permutation,
}

impl WreathElement {
    pub fn identity(g: &ConcreteGroup, n: usize) -> Self {
        let _ = g;
        WreathElement { base: vec![0; n], top: Permutation::identity(n) }
    }

    pub fn is_identity(&self) -> bool {
        self.base.iter().all(|&b| b == 0) && self.top.is_identity()
    }
}

/// Semidirect multiplication (g,ψ)(h,φ) = (g·ψ(h), ψφ), with ψ permuting the
/// coordinates of h: (ψ(h))_i = h_{ψ⁻¹(i)}.
pub fn wr_mul(g: &ConcreteGroup, a: &WreathElement, b: &WreathElement) -> Result<WreathElement> {
    if a.base.len() != b.base.len() {
        return Err(Error::invalid("wreath elements of different degrees"));
    }
    let psi_inv = a.top.inverse();
    let base = a
        .base
        .iter()
        .enumerate()
        .map(|(i, &ai)| g.mul_idx(ai, b.base[psi_inv.image(i as u32) as usize]))
        .collect();
    Ok(WreathElement { base, top: a.top.mul(&b.top) })
}

/// el_i^{(ψ)}(g) = g_i·g_{ψ⁻¹(i)}·…·g_{ψ^{−cl+1}(i)} raised to
/// ord(ψ)/cl_ψ(i): the i-th component of w^{ord(ψ)}.
pub fn component_power(g: &ConcreteGroup, w: &WreathElement, i: usize) -> usize {
    let psi_inv = w.top.inverse();
    let cl = w.top.cycle_length_of(i as u32);
    let mut el = w.base[i];
    let mut j = i as u32;
    for _ in 1..cl {
        j = psi_inv.image(j);
        el = g.mul_idx(el, w.base[j as usize]);
    }
    let exponent = w.top.order() / cl;
    let mut pow = 0usize;
    for _ in 0..exponent {
        pow = g.mul_idx(pow, el);
    }
    pow
}

/// ord(w) = ord(ψ) · lcm over orbit representatives of the component-power
/// orders.
pub fn wreath_order(g: &ConcreteGroup, w: &WreathElement) -> u64 {
    let d = w.top.order();
    let mut lcm = 1u64;
    for cycle in w.top.cycle_decompose().cycles {
        let rep = cycle[0] as usize;
        lcm = lcm.lcm(&g.element_order(component_power(g, w, rep)));
    }
    d * lcm
}

/// Oracle: order by repeated symbolic multiplication.
pub fn wreath_order_by_iteration(g: &ConcreteGroup, w: &WreathElement) -> Result<u64> {
    let mut acc = w.clone();
    let mut ord = 1u64;
    while !acc.is_identity() {
        acc = wr_mul(g, &acc, w)?;
        ord += 1;
    }
    Ok(ord)
}

fn partitions(n: usize) -> Vec<Vec<u64>> {
    fn rec(remaining: u64, max_part: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            acc.push(part);
            rec(remaining - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u64, n as u64, &mut Vec::new(), &mut out);
    out
}

/// Maximum lcm picking exactly one value from each set (1 is always
/// available, so "skip" is a legal pick).
fn max_lcm_one_per_set(sets: &[Vec<u64>]) -> u64 {
    let maxima: Vec<u64> = sets.iter().map(|s| s.iter().copied().max().unwrap_or(1)).collect();
    fn dfs(sets: &[Vec<u64>], maxima: &[u64], i: usize, acc: u64, best: &mut u64) {
        if acc > *best {
            *best = acc;
        }
        if i == sets.len() {
            return;
        }
        // upper bound on what the remaining sets can still contribute
        let potential: u64 = maxima[i..].iter().product::<u64>().saturating_mul(acc);
        if potential <= *best {
            return;
        }
        dfs(sets, maxima, i + 1, acc, best); // pick a divisor of acc (e.g. 1)
        for &v in &sets[i] {
            let next = acc.lcm(&v);
            if next != acc {
                dfs(sets, maxima, i + 1, next, best);
            }
        }
    }
    let mut best = 1;
    dfs(sets, &maxima, 0, 1, &mut best);
    best
}

/// Exact meo(G ≀ Symₙ) from the order spectrum of G, by cycle type.
///
/// For a top permutation of cycle type (c₁,…,c_k) with L = lcm(cᵢ), the
/// element order is L · lcm of one achievable component order per cycle,
/// where a cycle of length c contributes {ord(el^{L/c})} = {o / gcd(o, L/c)}
/// over spectrum orders o. Every such pick is achievable by placing a
/// suitable g on one coordinate of the cycle.
pub fn wreath_meo_from_spectrum(spectrum: &[u64], n: usize) -> Result<u64> {
    if n == 0 || n > WREATH_DEGREE_GUARD {
        return Err(Error::guard(
            "wreath-degree",
            format!("top degree {n} outside 1..={WREATH_DEGREE_GUARD}"),
        ));
    }
    let mut best = 0u64;
    for cycle_type in partitions(n) {
        let l = cycle_type.iter().fold(1u64, |acc, c| acc.lcm(c));
        let sets: Vec<Vec<u64>> = cycle_type
            .iter()
            .map(|&c| {
                let e = l / c;
                let mut d: Vec<u64> = spectrum.iter().map(|&o| o / o.gcd(&e)).collect();
                d.sort_unstable();
                d.dedup();
                d
            })
            .collect();
        best = best.max(l * max_lcm_one_per_set(&sets));
    }
    Ok(best)
}

/// Exact meo(G ≀ Symₙ).
pub fn wreath_meo(g: &ConcreteGroup, n: usize) -> Result<u64> {
    wreath_meo_from_spectrum(&g.order_spectrum(), n)
}

/// meo(Gⁿ): the direct-power case, a maximum lcm of at most n spectrum
/// orders.
pub fn direct_power_meo(spectrum: &[u64], n: usize) -> u64 {
    max_lcm_of_at_most(spectrum, n)
}

/// Λ(Aut(Sⁿ)) for simple nonabelian S: Aut(Sⁿ) = Aut(S) ≀ Symₙ is
/// semisimple, so the value is meo(Aut(S) ≀ Symₙ).
pub fn lambda_aut_power(aut: &AutGroup, n: usize) -> Result<u64> {
    let spectrum = aut.as_group()?.order_spectrum();
    wreath_meo_from_spectrum(&spectrum, n)
}
