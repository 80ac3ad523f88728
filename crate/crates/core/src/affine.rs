//! Periodic affine maps A_{x,α}: g ↦ x·α(g) of a finite group.
//!
//! Central facts used here: the order of an affine map factors as
//! ord(A_{x,α}) = ord(α)·ord(sh_α(x)) where sh is the shift
//! x·α(x)·…·α^{ord(α)−1}(x), and for semisimple groups every affine map has
//! a cycle whose length equals its order, so Λ_aff(G) = meo(Hol(G)) can be
//! computed by sweeping the order formula instead of cycle structures.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{AutGroup, AutMap, AutRealization, ConcreteGroup};
use crate::numtheory::FactoredInteger;
use crate::perm::Permutation;

/// Cap on |G|·|Aut(G)| for exhaustive affine sweeps (about 10⁷ maps).
pub const AFFINE_SWEEP_GUARD: u64 = 20_000_000;
/// Below this many maps the exact sweep runs the plain (α, x) double loop;
/// above it, α is reduced to conjugacy-class representatives.
const PLAIN_SWEEP_LIMIT: u64 = 1_000_000;

/// Witness for an extremal affine-map cycle: the automorphism's position in
/// the sweep enumeration, the translation element, and a starting element of
/// a maximum-length cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWitness {
    pub alpha: usize,
    pub x: usize,
    pub start: usize,
}

/// The n-th shift x·α(x)·…·α^{n−1}(x), as an element index.
pub fn shift_n(aut: &AutGroup, alpha: &AutMap, x: usize, n: u64) -> usize {
    let g = aut.group();
    let mut acc = x;
    let mut cur = x;
    for _ in 1..n {
        cur = aut.apply_idx(alpha, cur);
        acc = g.mul_idx(acc, cur);
    }
    acc
}

/// The shift sh_α(x) = n-th shift with n = ord(α).
pub fn shift(aut: &AutGroup, alpha: &AutMap, x: usize) -> usize {
    shift_n(aut, alpha, x, alpha.order())
}

/// ord(A_{x,α}) via the order formula ord(α)·ord(sh_α(x)).
pub fn affine_order(aut: &AutGroup, alpha: &AutMap, x: usize) -> u64 {
    let sh = shift(aut, alpha, x);
    alpha.order() * aut.group().element_order(sh)
}

/// A_{x,α} as a permutation of the element indices of G.
pub fn affine_perm(aut: &AutGroup, alpha: &AutMap, x: usize) -> Permutation {
    let g = aut.group();
    let ip = aut.index_perm(alpha);
    let images = (0..g.order())
        .map(|j| g.mul_idx(x, ip.image(j as u32) as usize) as u32)
        .collect();
    Permutation::from_images(images).unwrap()
}

/// The common divisor LL_G(x,α) of all cycle lengths of A_{x,α}:
/// ord(sh_α(x)) multiplied by p^{ν_p(ord α)} for each prime p dividing both
/// ord(sh_α(x)) and ord(α).
pub fn divisor_ll(aut: &AutGroup, alpha: &AutMap, x: usize) -> u64 {
    let sh_ord = aut.group().element_order(shift(aut, alpha, x));
    let a_ord = alpha.order();
    let fa = FactoredInteger::from_u64(a_ord).unwrap();
    let mut ll = sh_ord;
    for &(p, e) in fa.factors() {
        if sh_ord % p == 0 {
            ll *= p.pow(e);
        }
    }
    ll
}

/// Fixed points of A_{x,α}, sorted. When nonempty this is a left coset
/// f·fix(α) of the fixed subgroup of α.
pub fn fix_structure(aut: &AutGroup, alpha: &AutMap, x: usize) -> Vec<usize> {
    let g = aut.group();
    (0..g.order())
        .filter(|&j| g.mul_idx(x, aut.apply_idx(alpha, j)) == j)
        .collect()
}

/// The inner automorphism g ↦ r·g·r⁻¹ as an index permutation of G.
pub fn inner_aut(g: &ConcreteGroup, r: usize) -> AutMap {
    let images = (0..g.order()).map(|j| g.conj_idx(r, j) as u32).collect();
    AutMap::Table(Permutation::from_images(images).unwrap())
}

/// Exact Λ_aff(G) with witness, by sweeping affine maps and their cycle
/// structures. Small instances run the full (α, x) double loop; larger ones
/// reduce α to conjugacy-class representatives, which is still exact because
/// β A_{x,α} β⁻¹ = A_{β(x), βαβ⁻¹} preserves cycle type.
pub fn lambda_aff_exact(aut: &AutGroup) -> Result<(u64, AffineWitness)> {
    let g = aut.group();
    let total = g.order() as u64 * aut.order();
    if total > AFFINE_SWEEP_GUARD {
        return Err(Error::guard(
            "affine-sweep",
            format!("|G|·|Aut(G)| = {total} exceeds {AFFINE_SWEEP_GUARD}"),
        ));
    }
    let alphas: Vec<AutMap> = if total <= PLAIN_SWEEP_LIMIT {
        aut.all()
    } else {
        aut.class_reps()?
    };
    let n = g.order();
    let mut best = 0u64;
    let mut witness = AffineWitness { alpha: 0, x: 0, start: 0 };
    let mut map_images: Vec<u32> = Vec::with_capacity(n);
    for (ai, alpha) in alphas.iter().enumerate() {
        let ip = aut.index_perm(alpha);
        for x in 0..n {
            map_images.clear();
            map_images.extend((0..n).map(|j| g.mul_idx(x, ip.image(j as u32) as usize) as u32));
            // longest cycle of the map, tracking its smallest start
            let mut seen = vec![false; n];
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut len = 1u64;
                seen[start] = true;
                let mut pt = map_images[start] as usize;
                while pt != start {
                    seen[pt] = true;
                    pt = map_images[pt] as usize;
                    len += 1;
                }
                if len > best {
                    best = len;
                    witness = AffineWitness { alpha: ai, x, start };
                }
            }
        }
    }
    Ok((best, witness))
}

fn compose_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    out.extend(b.iter().map(|&i| a[i as usize]));
}

fn order_of_images(images: &[u32]) -> u64 {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut ord = 1u64;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 1u64;
        seen[start] = true;
        let mut pt = images[start] as usize;
        while pt != start {
            seen[pt] = true;
            pt = images[pt] as usize;
            len += 1;
        }
        ord = ord.lcm(&len);
    }
    ord
}

/// Λ_aff(G) = meo(Hol(G)) for semisimple G, computed by maximizing the order
/// formula over automorphism class representatives and all translations,
/// without materializing the holomorph.
pub fn lambda_aff_semisimple(aut: &AutGroup) -> Result<u64> {
    let g = aut.group();
    if !g.is_semisimple()? {
        return Err(Error::invalid(format!(
            "{} is not semisimple; the Λ_aff = meo(Hol) identity does not apply",
            g.name()
        )));
    }
    let reps = aut.class_reps()?;
    let mut best = 0u64;
    match aut.realization() {
        AutRealization::Tables(_) => {
            for rep in &reps {
                let AutMap::Table(ip) = rep else { unreachable!() };
                let d = ip.order();
                for x in 0..g.order() {
                    let mut cur = x;
                    let mut sh = x;
                    for _ in 1..d {
                        cur = ip.image(cur as u32) as usize;
                        sh = g.mul_idx(sh, cur);
                    }
                    best = best.max(d * g.element_order(sh));
                }
            }
        }
        AutRealization::Ambient(_) => {
            // domain-level sweep: sh is accumulated as a product of small
            // permutations, so no element-index lookups are needed
            let threads = std::thread::available_parallelism().map_or(1, |t| t.get());
            for rep in &reps {
                let AutMap::Conj(a) = rep else { unreachable!() };
                let d = a.order();
                let a_inv = a.inverse();
                let n = g.order();
                let chunk = n.div_ceil(threads);
                let rep_best = std::thread::scope(|scope| {
                    let mut handles = Vec::new();
                    for t in 0..threads {
                        let lo = t * chunk;
                        let hi = ((t + 1) * chunk).min(n);
                        let a = &a;
                        let a_inv = &a_inv;
                        handles.push(scope.spawn(move || {
                            let mut local = 0u64;
                            let mut y: Vec<u32> = Vec::new();
                            let mut sh: Vec<u32> = Vec::new();
                            let mut tmp: Vec<u32> = Vec::new();
                            for x in lo..hi {
                                let xp = g.element(x).images();
                                y.clear();
                                y.extend_from_slice(xp);
                                sh.clear();
                                sh.extend_from_slice(xp);
                                for _ in 1..d {
                                    compose_into(a.images(), &y, &mut tmp);
                                    compose_into(&tmp, a_inv.images(), &mut y);
                                    compose_into(&sh, &y, &mut tmp);
                                    std::mem::swap(&mut sh, &mut tmp);
                                }
                                local = local.max(d * order_of_images(&sh));
                            }
                            local
                        }));
                    }
                    handles.into_iter().map(|h| h.join().unwrap()).max().unwrap_or(0)
                });
                best = best.max(rep_best);
            }
        }
    }
    Ok(best)
}

/// Λ over automorphisms only, by exact cycle sweep over class
/// representatives.
pub fn lambda_auto_exact(aut: &AutGroup) -> Result<u64> {
    let mut best = 0;
    for rep in aut.class_reps()? {
        best = best.max(aut.index_perm(&rep).lambda());
    }
    Ok(best)
}

/// Λ over automorphisms, using Λ(G) = mao(G) when G is semisimple and the
/// exact sweep otherwise.
pub fn lambda_auto(aut: &AutGroup) -> Result<u64> {
    if aut.group().is_semisimple()? {
        Ok(aut.mao())
    } else {
        lambda_auto_exact(aut)
    }
}

/// Checks that every affine map of a semisimple group has a regular cycle
/// (one of length equal to the map's order). Returns the first failing
/// (class-representative position, x) if any; conjugating an affine map
/// preserves its cycle type, so representatives cover all of Aff(G).
pub fn check_regular_cycles(aut: &AutGroup) -> Result<Option<(usize, usize)>> {
    let g = aut.group();
    if !g.is_semisimple()? {
        return Err(Error::invalid(format!(
            "{} is not semisimple; regular cycles are only asserted for semisimple groups",
            g.name()
        )));
    }
    let total = g.order() as u64 * aut.order();
    if total > AFFINE_SWEEP_GUARD {
        return Err(Error::guard(
            "affine-sweep",
            format!("|G|·|Aut(G)| = {total} exceeds {AFFINE_SWEEP_GUARD}"),
        ));
    }
    let n = g.order();
    for (ri, rep) in aut.class_reps()?.iter().enumerate() {
        let ip = aut.index_perm(rep);
        let mut map_images: Vec<u32> = Vec::with_capacity(n);
        for x in 0..n {
            map_images.clear();
            map_images.extend((0..n).map(|j| g.mul_idx(x, ip.image(j as u32) as usize) as u32));
            // single pass: longest cycle and lcm of cycle lengths
            let mut seen = vec![false; n];
            let mut longest = 0u64;
            let mut ord = 1u64;
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut len = 1u64;
                seen[start] = true;
                let mut pt = map_images[start] as usize;
                while pt != start {
                    seen[pt] = true;
                    pt = map_images[pt] as usize;
                    len += 1;
                }
                longest = longest.max(len);
                ord = ord.lcm(&len);
            }
            if longest != ord {
                return Ok(Some((ri, x)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alt, cyclic, dihedral, quaternion8, sym};
    use crate::matgrp::pgl2_family;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn small_corpus() -> Vec<AutGroup> {
        let groups = vec![
            cyclic(6).unwrap(),
            sym(3).unwrap(),
            sym(4).unwrap(),
            alt(4).unwrap(),
            dihedral(4).unwrap(),
            quaternion8().unwrap(),
            cyclic(12).unwrap(),
            dihedral(6).unwrap(),
        ];
        groups
            .into_iter()
            .map(|g| AutGroup::brute(Arc::new(g)).unwrap())
            .collect()
    }

    #[test]
    fn shift_basics() {
        let aut = AutGroup::brute(Arc::new(sym(4).unwrap())).unwrap();
        let g = aut.group().clone();
        let identity = AutMap::Table(Permutation::identity(g.order()));
        for x in 0..g.order() {
            // n = 1 gives x back
            assert_eq!(shift_n(&aut, &identity, x, 1), x);
            // identity automorphism: the n-th shift is xⁿ
            let mut xn = x;
            for n in 2..=5u64 {
                xn = g.mul_idx(xn, x);
                assert_eq!(shift_n(&aut, &identity, x, n), xn);
            }
            assert_eq!(shift(&aut, &identity, x), x);
        }
    }

    #[test]
    fn shift_cocycle_identity() {
        // shift_{m+n}(x) = shift_m(x) · α^m(shift_n(x))
        let aut = AutGroup::brute(Arc::new(sym(4).unwrap())).unwrap();
        let g = aut.group().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let alphas = aut.all();
        for _ in 0..200 {
            let alpha = &alphas[rng.gen_range(0..alphas.len())];
            let x = rng.gen_range(0..g.order());
            let m = rng.gen_range(1..=6u64);
            let n = rng.gen_range(1..=6u64);
            let lhs = shift_n(&aut, alpha, x, m + n);
            let mut am_sh = shift_n(&aut, alpha, x, n);
            for _ in 0..m {
                am_sh = aut.apply_idx(alpha, am_sh);
            }
            let rhs = g.mul_idx(shift_n(&aut, alpha, x, m), am_sh);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shift_conjugation_identity_small_corpus() {
        // α(sh_α(x)) is the conjugate of sh_α(x) by x; with maps acting on
        // the left and products read right-to-left this is x⁻¹·sh_α(x)·x
        for aut in small_corpus() {
            let g = aut.group().clone();
            for alpha in aut.all() {
                for x in 0..g.order() {
                    let sh = shift(&aut, &alpha, x);
                    let lhs = aut.apply_idx(&alpha, sh);
                    let rhs = g.mul_idx(g.mul_idx(g.inv_idx(x), sh), x);
                    assert_eq!(lhs, rhs, "group {}", g.name());
                }
            }
        }
    }

    #[test]
    fn shift_power_collapse() {
        // sh_α(x) = shift_d(x)^{ord(α)/d} whenever cl_α(x) | d | ord(α)
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for aut in small_corpus() {
            let g = aut.group().clone();
            let alphas = aut.all();
            for _ in 0..60 {
                let alpha = &alphas[rng.gen_range(0..alphas.len())];
                let x = rng.gen_range(0..g.order());
                let cl = aut.index_perm(alpha).cycle_length_of(x as u32);
                let ord = alpha.order();
                for d in 1..=ord {
                    if ord % d != 0 || d % cl != 0 {
                        continue;
                    }
                    let sd = shift_n(&aut, alpha, x, d);
                    let mut pow = 0; // identity index
                    for _ in 0..(ord / d) {
                        pow = g.mul_idx(pow, sd);
                    }
                    assert_eq!(shift(&aut, alpha, x), pow);
                }
            }
        }
    }

    #[test]
    fn order_formula_exhaustive_small_corpus() {
        for aut in small_corpus() {
            let g = aut.group().clone();
            for alpha in aut.all() {
                for x in 0..g.order() {
                    let formula = affine_order(&aut, &alpha, x);
                    let perm = affine_perm(&aut, &alpha, x);
                    assert_eq!(formula, perm.order(), "group {}", g.name());
                }
            }
        }
    }

    #[test]
    fn order_formula_alt5_exhaustive() {
        let aut = AutGroup::brute(Arc::new(alt(5).unwrap())).unwrap();
        let g = aut.group().clone();
        for alpha in aut.all() {
            for x in 0..g.order() {
                assert_eq!(affine_order(&aut, &alpha, x), affine_perm(&aut, &alpha, x).order());
            }
        }
    }

    #[test]
    fn inner_affine_orders_are_lcms() {
        // centerless G: ord(A_{sr⁻¹, τ_r}) = lcm(ord s, ord r); coprime
        // orders give the product
        let aut = AutGroup::brute(Arc::new(sym(5).unwrap())).unwrap();
        let g = aut.group().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..300 {
            let r = rng.gen_range(0..g.order());
            let s = rng.gen_range(0..g.order());
            let tau = inner_aut(&g, r);
            let x = g.mul_idx(s, g.inv_idx(r));
            let expect = g.element_order(s).lcm(&g.element_order(r));
            assert_eq!(affine_order(&aut, &tau, x), expect);
            if g.element_order(s).gcd(&g.element_order(r)) == 1 {
                assert_eq!(affine_order(&aut, &tau, x), g.element_order(s) * g.element_order(r));
            }
        }
    }

    #[test]
    fn shift_of_inner_commutes_with_displacement() {
        // x·r centralizes sh_{τ_r}(x) (the conjugation identity applied to
        // the inner automorphism τ_r, in our composition convention)
        for aut in small_corpus() {
            let g = aut.group().clone();
            for r in 0..g.order() {
                let tau = inner_aut(&g, r);
                for x in 0..g.order() {
                    let sh = shift(&aut, &tau, x);
                    let w = g.mul_idx(x, r);
                    assert_eq!(g.mul_idx(w, sh), g.mul_idx(sh, w), "group {}", g.name());
                }
            }
        }
    }

    #[test]
    fn divisor_ll_properties() {
        for aut in small_corpus() {
            let g = aut.group().clone();
            for alpha in aut.all() {
                for x in 0..g.order() {
                    let ll = divisor_ll(&aut, &alpha, x);
                    assert_eq!(g.order() as u64 % ll, 0, "LL divides |G| in {}", g.name());
                    let perm = affine_perm(&aut, &alpha, x);
                    for len in perm.cycle_decompose().lengths() {
                        assert_eq!(len % ll, 0, "LL divides cycle lengths in {}", g.name());
                    }
                }
            }
        }
        // identity automorphism: LL = ord(x)
        let aut = AutGroup::brute(Arc::new(sym(4).unwrap())).unwrap();
        let g = aut.group().clone();
        let id = AutMap::Table(Permutation::identity(g.order()));
        for x in 0..g.order() {
            assert_eq!(divisor_ll(&aut, &id, x), g.element_order(x));
        }
    }

    #[test]
    fn fixed_points_form_cosets() {
        let aut = AutGroup::brute(Arc::new(sym(4).unwrap())).unwrap();
        let g = aut.group().clone();
        for alpha in aut.all() {
            let fix_alpha: Vec<usize> =
                (0..g.order()).filter(|&j| aut.apply_idx(&alpha, j) == j).collect();
            for x in 0..g.order() {
                let fix = fix_structure(&aut, &alpha, x);
                if fix.is_empty() {
                    continue;
                }
                assert_eq!(fix.len(), fix_alpha.len());
                let f = fix[0];
                let mut coset: Vec<usize> =
                    fix_alpha.iter().map(|&h| g.mul_idx(f, h)).collect();
                coset.sort_unstable();
                assert_eq!(fix, coset);
            }
        }
        // identity map fixes everything
        let id = AutMap::Table(Permutation::identity(g.order()));
        assert_eq!(fix_structure(&aut, &id, 0).len(), g.order());
    }

    #[test]
    fn lambda_aff_exact_examples() {
        let aut = AutGroup::brute(Arc::new(alt(5).unwrap())).unwrap();
        let (lam, w) = lambda_aff_exact(&aut).unwrap();
        assert_eq!(lam, 15);
        // witness reproduces the value
        let alphas = aut.all();
        let perm = affine_perm(&aut, &alphas[w.alpha], w.x);
        assert_eq!(perm.cycle_length_of(w.start as u32), 15);

        for n in [5usize, 8, 12] {
            let aut = AutGroup::brute(Arc::new(cyclic(n).unwrap())).unwrap();
            assert_eq!(lambda_aff_exact(&aut).unwrap().0, n as u64);
        }
    }

    #[test]
    fn semisimple_fast_path_agrees_with_exact() {
        let cases: Vec<AutGroup> = vec![
            AutGroup::brute(Arc::new(alt(5).unwrap())).unwrap(),
            AutGroup::brute(Arc::new(sym(5).unwrap())).unwrap(),
            pgl2_family(5).unwrap().aut_pgl().unwrap(),
            pgl2_family(7).unwrap().aut_psl().unwrap(),
        ];
        for aut in cases {
            let exact = lambda_aff_exact(&aut).unwrap().0;
            let fast = lambda_aff_semisimple(&aut).unwrap();
            assert_eq!(exact, fast, "group {}", aut.group().name());
        }
    }

    #[test]
    fn lambda_aff_table1_samples() {
        // λ_aff|G| for PSL₂(5) and PSL₂(7)
        let f5 = pgl2_family(5).unwrap();
        assert_eq!(lambda_aff_semisimple(&f5.aut_psl().unwrap()).unwrap(), 15);
        let f7 = pgl2_family(7).unwrap();
        assert_eq!(lambda_aff_semisimple(&f7.aut_psl().unwrap()).unwrap(), 28);
    }

    #[test]
    fn lambda_auto_examples() {
        let aut = AutGroup::brute(Arc::new(alt(5).unwrap())).unwrap();
        assert_eq!(lambda_auto(&aut).unwrap(), 6);
        assert_eq!(lambda_auto_exact(&aut).unwrap(), 6);
        // Cyclic:p has a primitive-root automorphism with a (p−1)-cycle
        for p in [5usize, 7, 11] {
            let aut = AutGroup::brute(Arc::new(cyclic(p).unwrap())).unwrap();
            assert_eq!(lambda_auto(&aut).unwrap(), (p - 1) as u64);
        }
    }

    #[test]
    fn regular_cycles_for_semisimple() {
        let alt5 = AutGroup::brute(Arc::new(alt(5).unwrap())).unwrap();
        assert_eq!(check_regular_cycles(&alt5).unwrap(), None);
        let sym5 = AutGroup::brute(Arc::new(sym(5).unwrap())).unwrap();
        assert_eq!(check_regular_cycles(&sym5).unwrap(), None);
        // non-semisimple input is rejected, not answered
        let s4 = AutGroup::brute(Arc::new(sym(4).unwrap())).unwrap();
        assert!(check_regular_cycles(&s4).is_err());
        assert!(lambda_aff_semisimple(&s4).is_err());
    }

    #[test]
    fn ambient_and_brute_realizations_agree() {
        // Aut(PSL₂(5)) brute-forced abstractly matches the PΓL₂ construction
        let fam = pgl2_family(5).unwrap();
        let brute = AutGroup::brute(fam.psl.clone()).unwrap();
        let ambient = fam.aut_psl().unwrap();
        assert_eq!(brute.order(), ambient.order());
        assert_eq!(brute.mao(), ambient.mao());
        assert_eq!(
            lambda_aff_semisimple(&brute).unwrap(),
            lambda_aff_semisimple(&ambient).unwrap()
        );
    }
}
