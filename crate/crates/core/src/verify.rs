//! Named verification suites: each runs a batch of exact checks and returns
//! one pass/fail record per item. The command-line front end prints them;
//! integration tests reuse them directly.

use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine::{
    affine_order, affine_perm, check_regular_cycles, divisor_ll, fix_structure, inner_aut,
    lambda_aff_exact, lambda_aff_semisimple, lambda_auto, lambda_auto_exact, shift, shift_n,
};
use crate::bounds::{
    check_exceptional_correction, check_full_grid, check_monotone_convergence,
    exceptional_corrections, maintheo2_sequence, radical_index_bound, BoundKind, ConvergenceCase,
};
use crate::error::{Error, Result};
use crate::group::{alt, cyclic, dihedral, quaternion8, sym, AutGroup, ConcreteGroup};
use crate::matgrp::pgl2_family;
use crate::numtheory::{
    as_prime_power, check_landau_exponential, check_massias, check_rosser_schoenfeld, is_prime,
    landau_g,
};
use crate::perm::{product_on_mixed_radix, Permutation};
use crate::wreath::{
    direct_power_meo, lambda_aut_power, wreath_meo, wreath_order, wreath_order_by_iteration,
    WreathElement,
};

/// One checked item of a suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteItem {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl SuiteItem {
    fn new(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> SuiteItem {
        SuiteItem { label: label.into(), pass, detail: detail.into() }
    }
}

/// The named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table1,
    PslTheo,
    RegularCycle,
    ShiftLemmas,
    WreathOrder,
    Landau,
    CaseInequalities,
    MainCor,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Table1,
        Suite::PslTheo,
        Suite::RegularCycle,
        Suite::ShiftLemmas,
        Suite::WreathOrder,
        Suite::Landau,
        Suite::CaseInequalities,
        Suite::MainCor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::PslTheo => "psl-theo",
            Suite::RegularCycle => "regular-cycle",
            Suite::ShiftLemmas => "shift-lemmas",
            Suite::WreathOrder => "wreath-order",
            Suite::Landau => "landau",
            Suite::CaseInequalities => "case-inequalities",
            Suite::MainCor => "main-cor",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite '{s}'")))
    }
}

/// Runs one suite and returns its items in definition order.
pub fn run_suite(suite: Suite) -> Result<Vec<SuiteItem>> {
    match suite {
        Suite::Table1 => suite_table1(),
        Suite::PslTheo => suite_psl_theo(),
        Suite::RegularCycle => suite_regular_cycle(),
        Suite::ShiftLemmas => suite_shift_lemmas(),
        Suite::WreathOrder => suite_wreath_order(),
        Suite::Landau => suite_landau(),
        Suite::CaseInequalities => suite_case_inequalities(),
        Suite::MainCor => suite_main_cor(),
    }
}

fn aut_psl(q: u64) -> Result<AutGroup> {
    pgl2_family(q)?.aut_psl()
}

fn aut_alt7() -> Result<AutGroup> {
    AutGroup::from_ambient(Arc::new(alt(7)?), Arc::new(sym(7)?))
}

/// Maximal affine cycle lengths of the simple groups of order below 3600,
/// as exact fractions of the group order.
pub fn suite_table1() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    // (q, denominator of the expected fraction)
    for (q, den) in [(5u64, 4u64), (7, 6), (9, 9), (8, 8), (11, 10), (13, 12), (17, 16)] {
        let aut = aut_psl(q)?;
        let order = aut.group().order() as u64;
        let expect = order / den;
        let got = lambda_aff_semisimple(&aut)?;
        let g = got.gcd(&order);
        items.push(SuiteItem::new(
            format!("lambda-aff PSL2:{q}"),
            got == expect,
            format!("got {got} = {}/{} of |G| = {order}, expected {expect} (1/{den})", got / g, order / g),
        ));
    }
    let aut = aut_alt7()?;
    let got = lambda_aff_semisimple(&aut)?;
    items.push(SuiteItem::new(
        "lambda-aff Alt:7",
        got == 60,
        format!("got {got} of |G| = 2520, expected 60 (1/42)"),
    ));
    Ok(items)
}

/// Closed forms for the maximal automorphism and affine cycle lengths of the
/// rank-one projective family, checked against exhaustive sweeps.
pub fn suite_psl_theo() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    let qs = [5u64, 7, 8, 9, 11, 13, 16, 25, 27];
    for &q in &qs {
        let aut = aut_psl(q)?;
        let got = lambda_auto(&aut)?;
        items.push(SuiteItem::new(
            format!("lambda PSL2:{q}"),
            got == q + 1,
            format!("got {got}, expected {}", q + 1),
        ));
    }
    for &q in &qs {
        let expect = if is_prime(q) {
            q * (q + 1)
        } else if q % 2 == 0 {
            q * q - 1
        } else {
            (q * q - 1) / 2
        };
        let fam = pgl2_family(q)?;
        let aut = fam.aut_pgammal()?;
        let got = lambda_aff_semisimple(&aut)?;
        items.push(SuiteItem::new(
            format!("lambda-aff PGammaL2:{q}"),
            got == expect,
            format!("got {got}, expected {expect}"),
        ));
    }
    Ok(items)
}

/// Exhaustive regular-cycle checks on the six small semisimple groups.
pub fn suite_regular_cycle() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    let cases: Vec<(String, AutGroup)> = vec![
        ("Alt:5".into(), AutGroup::brute(Arc::new(alt(5)?))?),
        ("Sym:5".into(), AutGroup::brute(Arc::new(sym(5)?))?),
        ("PGL2:5".into(), pgl2_family(5)?.aut_pgl()?),
        ("Alt:6".into(), AutGroup::brute(Arc::new(alt(6)?))?),
        ("PSL2:7".into(), pgl2_family(7)?.aut_psl()?),
        ("PGL2:7".into(), pgl2_family(7)?.aut_pgl()?),
    ];
    for (name, aut) in cases {
        let total = aut.group().order() as u64 * aut.order();
        let counterexample = check_regular_cycles(&aut)?;
        items.push(SuiteItem::new(
            format!("regular-cycle {name}"),
            counterexample.is_none(),
            match counterexample {
                None => format!("all {total} affine maps have a regular cycle"),
                Some((rep, x)) => format!("counterexample at class rep {rep}, x = {x}"),
            },
        ));
    }
    Ok(items)
}

struct Counter {
    checked: u64,
    failures: u64,
}

impl Counter {
    fn new() -> Counter {
        Counter { checked: 0, failures: 0 }
    }
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }
    fn item(&self, label: &str) -> SuiteItem {
        SuiteItem::new(
            label,
            self.failures == 0,
            format!("{} checks, {} failures", self.checked, self.failures),
        )
    }
}

fn small_corpus() -> Result<Vec<AutGroup>> {
    let groups = vec![
        cyclic(6)?,
        cyclic(8)?,
        cyclic(24)?,
        sym(3)?,
        sym(4)?,
        alt(4)?,
        dihedral(4)?,
        dihedral(6)?,
        dihedral(12)?,
        quaternion8()?,
    ];
    groups.into_iter().map(|g| AutGroup::brute(Arc::new(g))).collect()
}

/// Property checks for the shift/order/divisor/fixed-point lemmas:
/// exhaustive on groups of order at most 24, randomized (10⁴ trials) on
/// groups of order up to 120, plus product-permutation and transfer
/// inequalities.
pub fn suite_shift_lemmas() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    let corpus = small_corpus()?;

    let mut order_formula = Counter::new();
    let mut conjugation = Counter::new();
    let mut collapse = Counter::new();
    let mut divisor = Counter::new();
    let mut centralizer = Counter::new();
    let mut fix_cosets = Counter::new();

    for aut in &corpus {
        let g = aut.group().clone();
        let n = g.order();
        for alpha in aut.all() {
            let ip = aut.index_perm(&alpha);
            let fix_alpha: Vec<usize> = (0..n).filter(|&j| ip.image(j as u32) as usize == j).collect();
            for x in 0..n {
                // order formula against the true permutation order
                let perm = affine_perm(aut, &alpha, x);
                order_formula.record(affine_order(aut, &alpha, x) == perm.order());
                // α(sh_α(x)) = x⁻¹ · sh_α(x) · x
                let sh = shift(aut, &alpha, x);
                let conj = g.mul_idx(g.mul_idx(g.inv_idx(x), sh), x);
                conjugation.record(aut.apply_idx(&alpha, sh) == conj);
                // sh_α(x) = shift_d(x)^{ord(α)/d} for cl_α(x) | d | ord(α)
                let cl = ip.cycle_length_of(x as u32);
                let ord = alpha.order();
                for d in 1..=ord {
                    if ord % d != 0 || d % cl != 0 {
                        continue;
                    }
                    let sd = shift_n(aut, &alpha, x, d);
                    let mut pow = 0;
                    for _ in 0..(ord / d) {
                        pow = g.mul_idx(pow, sd);
                    }
                    collapse.record(sh == pow);
                }
                // the common divisor LL divides |G| and every cycle length
                let ll = divisor_ll(aut, &alpha, x);
                let mut ok = n as u64 % ll == 0;
                for len in perm.cycle_decompose().lengths() {
                    ok &= len % ll == 0;
                }
                divisor.record(ok);
                // fixed points form a coset of fix(α) when nonempty
                let fix = fix_structure(aut, &alpha, x);
                if !fix.is_empty() {
                    let f = fix[0];
                    let mut coset: Vec<usize> =
                        fix_alpha.iter().map(|&h| g.mul_idx(f, h)).collect();
                    coset.sort_unstable();
                    fix_cosets.record(fix == coset);
                }
            }
        }
        // x·r centralizes sh_{τ_r}(x) for inner automorphisms τ_r
        for r in 0..n {
            let tau = inner_aut(&g, r);
            for x in 0..n {
                let sh = shift(aut, &tau, x);
                let w = g.mul_idx(x, r);
                centralizer.record(g.mul_idx(w, sh) == g.mul_idx(sh, w));
            }
        }
    }
    items.push(order_formula.item("order-formula (exhaustive, order <= 24)"));
    items.push(conjugation.item("shift-conjugation"));
    items.push(collapse.item("shift-power-collapse"));
    items.push(divisor.item("cycle-length-divisor"));
    items.push(centralizer.item("inner-shift-centralizer"));
    items.push(fix_cosets.item("fixed-point-cosets"));

    // lcm law for inner affine maps on centerless groups, with the coprime
    // special case
    let mut lcm_law = Counter::new();
    let mut coprime_law = Counter::new();
    for g in [sym(3)?, sym(4)?] {
        let aut = AutGroup::brute(Arc::new(g))?;
        let g = aut.group().clone();
        for r in 0..g.order() {
            let tau = inner_aut(&g, r);
            for s in 0..g.order() {
                let x = g.mul_idx(s, g.inv_idx(r));
                let os = g.element_order(s);
                let or = g.element_order(r);
                let got = affine_order(&aut, &tau, x);
                lcm_law.record(got == os.lcm(&or));
                if os.gcd(&or) == 1 {
                    coprime_law.record(got == os * or);
                }
            }
        }
    }
    items.push(lcm_law.item("inner-affine-lcm (centerless)"));
    items.push(coprime_law.item("inner-affine-product (coprime orders)"));

    // product permutations: tuple cycle lengths are lcms; regular cycles
    // survive products
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut fds = Counter::new();
    let mut prod_reg = Counter::new();
    let random_perm = |rng: &mut ChaCha8Rng, d: usize| {
        let mut v: Vec<u32> = (0..d as u32).collect();
        v.shuffle(rng);
        Permutation::from_images(v).unwrap()
    };
    for _ in 0..200 {
        let d1 = rng.gen_range(1..=8);
        let d2 = rng.gen_range(1..=8);
        let p1 = random_perm(&mut rng, d1);
        let p2 = random_perm(&mut rng, d2);
        let prod = product_on_mixed_radix(&[&p1, &p2]);
        let mut ok = true;
        for x1 in 0..d1 as u32 {
            for x2 in 0..d2 as u32 {
                let enc = x1 * d2 as u32 + x2;
                ok &= prod.cycle_length_of(enc)
                    == p1.cycle_length_of(x1).lcm(&p2.cycle_length_of(x2));
            }
        }
        ok &= prod.lambda() <= p1.lambda() * p2.lambda();
        fds.record(ok);
        if p1.has_regular_cycle() && p2.has_regular_cycle() {
            prod_reg.record(prod.has_regular_cycle());
        }
    }
    items.push(fds.item("product-cycle-lcm"));
    items.push(prod_reg.item("product-regular-cycle"));

    // transfer inequalities through characteristic subgroups
    let mut transfer = Counter::new();
    let transfer_corpus = vec![sym(4)?, alt(4)?, dihedral(6)?, quaternion8()?, cyclic(12)?];
    for g in transfer_corpus {
        let g = Arc::new(g);
        let aut = AutGroup::brute(g.clone())?;
        let lambda_g = lambda_auto_exact(&aut)?;
        let lambda_aff_g = lambda_aff_exact(&aut)?.0;
        for normal in [g.derived_subgroup(), g.center()] {
            let (laff_n, lam_q, laff_q) = transfer_sides(&g, &normal)?;
            transfer.record(lambda_g <= laff_n * lam_q);
            transfer.record(lambda_aff_g <= laff_n * laff_q);
        }
    }
    items.push(transfer.item("transfer-inequalities (derived, center)"));

    // randomized spot checks on groups of order up to 120
    let mut randomized = Counter::new();
    let big_corpus: Vec<AutGroup> = vec![
        AutGroup::brute(Arc::new(sym(5)?))?,
        AutGroup::brute(Arc::new(alt(5)?))?,
        AutGroup::brute(Arc::new(cyclic(120)?))?,
        AutGroup::brute(Arc::new(dihedral(30)?))?,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..10_000 {
        let aut = &big_corpus[rng.gen_range(0..big_corpus.len())];
        let g = aut.group();
        let alphas = aut.all();
        let alpha = &alphas[rng.gen_range(0..alphas.len())];
        let x = rng.gen_range(0..g.order());
        let perm = affine_perm(aut, alpha, x);
        let mut ok = affine_order(aut, alpha, x) == perm.order();
        let sh = shift(aut, alpha, x);
        ok &= aut.apply_idx(alpha, sh) == g.mul_idx(g.mul_idx(g.inv_idx(x), sh), x);
        let ll = divisor_ll(aut, alpha, x);
        ok &= perm.cycle_decompose().lengths().iter().all(|l| l % ll == 0);
        randomized.record(ok);
    }
    items.push(randomized.item("randomized trials (order <= 120)"));

    Ok(items)
}

/// Λ_aff(N), Λ(G/N), Λ_aff(G/N) for a normal subgroup given by element
/// indices.
fn transfer_sides(g: &Arc<ConcreteGroup>, normal: &[usize]) -> Result<(u64, u64, u64)> {
    let laff_n = if normal.len() <= 1 {
        1
    } else {
        let elems: Vec<Permutation> = normal.iter().map(|&i| g.element(i).clone()).collect();
        let sub = Arc::new(ConcreteGroup::from_elements("N", elems)?);
        lambda_aff_exact(&AutGroup::brute(sub)?)?.0
    };
    let (lam_q, laff_q) = if normal.len() == g.order() {
        (1, 1)
    } else {
        let quot = Arc::new(g.quotient(normal)?);
        let aut_q = AutGroup::brute(quot)?;
        (lambda_auto_exact(&aut_q)?, lambda_aff_exact(&aut_q)?.0)
    };
    Ok((laff_n, lam_q, laff_q))
}

/// Wreath-product order formula against brute iteration, and the pinned
/// maximal element orders of wreath and direct powers of automorphism groups.
pub fn suite_wreath_order() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for (base, n, label) in [(sym(5)?, 2usize, "Sym:5 wr Sym:2"), (sym(3)?, 3, "Sym:3 wr Sym:3")] {
        let mut counter = Counter::new();
        for _ in 0..10_000 {
            let basevec: Vec<usize> = (0..n).map(|_| rng.gen_range(0..base.order())).collect();
            let mut top: Vec<u32> = (0..n as u32).collect();
            top.shuffle(&mut rng);
            let w = WreathElement { base: basevec, top: Permutation::from_images(top).unwrap() };
            counter.record(wreath_order(&base, &w) == wreath_order_by_iteration(&base, &w)?);
        }
        items.push(counter.item(&format!("wreath-order formula {label}")));
    }

    let pg9 = pgl2_family(9)?.pgammal.clone();
    for (n, expect) in [(2usize, 40u64), (3, 120)] {
        let got = wreath_meo(&pg9, n)?;
        items.push(SuiteItem::new(
            format!("meo PGammaL2:9 wr Sym:{n}"),
            got == expect,
            format!("got {got}, expected {expect}"),
        ));
    }
    let pg5 = pgl2_family(5)?.pgammal.clone();
    let got = direct_power_meo(&pg5.order_spectrum(), 4);
    items.push(SuiteItem::new(
        "meo PGammaL2:5 ^ 4",
        got == 60,
        format!("got {got}, expected 60"),
    ));
    for (n, expect) in [(2usize, 30u64), (3, 60)] {
        let got = lambda_aut_power(&aut_psl(5)?, n)?;
        items.push(SuiteItem::new(
            format!("lambda PSL2:5 ^ {n}"),
            got == expect,
            format!("got {got}, expected {expect}"),
        ));
    }
    Ok(items)
}

/// Brute-force maximum lcm over the partitions of n, as an oracle for the
/// dynamic-programming computation.
fn partition_lcm_oracle(n: u64) -> u64 {
    fn go(remaining: u64, min_part: u64, acc: u64) -> u64 {
        let mut best = acc;
        for part in min_part..=remaining {
            best = best.max(go(remaining - part, part, acc.lcm(&part)));
        }
        best
    }
    go(n, 1, 1)
}

/// Landau and Chebyshev function checks: oracle agreement and the classical
/// explicit bounds.
pub fn suite_landau() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    let mut oracle = Counter::new();
    for n in 1..=25u64 {
        oracle.record(landau_g(n)? == partition_lcm_oracle(n).into());
    }
    items.push(oracle.item("landau oracle (n <= 25)"));

    let mut exp_holds = Counter::new();
    let mut equality_only_at_3 = Counter::new();
    for n in 1..=200u64 {
        let (holds, equality) = check_landau_exponential(n)?;
        exp_holds.record(holds);
        equality_only_at_3.record(equality == (n == 3));
    }
    items.push(exp_holds.item("g(n) <= 3^(n/3) (n <= 200)"));
    items.push(equality_only_at_3.item("equality only at n = 3"));

    let mut massias = Counter::new();
    for n in 2..=200u64 {
        massias.record(check_massias(n)?);
    }
    items.push(massias.item("log g(n) <= 1.05314*sqrt(n log n)"));

    let mut psi = Counter::new();
    for n in 2..=1000u64 {
        psi.record(check_rosser_schoenfeld(n)?);
    }
    items.push(psi.item("psi(n) < 1.03883*n (n <= 1000)"));
    Ok(items)
}

/// The exact integer inequality grids over the classical families, the
/// sporadic corrections, monotone convergence, and the witness sequence.
pub fn suite_case_inequalities() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    let cells = check_full_grid(64, 8, 6, 12)?;
    let failures: Vec<String> =
        cells.iter().filter(|c| !c.all_hold).map(|c| c.label.clone()).collect();
    items.push(SuiteItem::new(
        "inequality grid (q <= 64, d <= 8, m <= 6, n <= 12)",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} cells, all hold", cells.len())
        } else {
            format!("failures: {failures:?}")
        },
    ));

    for corr in exceptional_corrections() {
        let r = check_exceptional_correction(&corr, 1..=12)?;
        let ok = r.iter().all(|&(_, h)| h);
        items.push(SuiteItem::new(
            format!("exceptional correction {}", corr.name),
            ok,
            format!("bound {}, order {}", corr.bound, corr.order),
        ));
    }

    let prime_powers: Vec<u64> = (5..=64).filter(|&q| as_prime_power(q).is_some()).collect();
    let primes: Vec<u64> = (5..=97).filter(|&p| is_prime(p)).collect();
    for (case, params, label) in [
        (ConvergenceCase::AutomorphismSingle, &prime_powers, "single, prime powers 5..64"),
        (ConvergenceCase::AutomorphismSquare, &primes, "square, primes 5..97"),
        (ConvergenceCase::AffineSingle, &primes, "affine, primes 5..97"),
    ] {
        let ok = check_monotone_convergence(case, params)?;
        items.push(SuiteItem::new(
            format!("monotone convergence ({label})"),
            ok,
            format!("{} parameters", params.len()),
        ));
    }

    let mut seq = Counter::new();
    for n in 0..=20 {
        let w = maintheo2_sequence(n);
        seq.record(w.aut_above_third && w.aff_above_two_thirds);
    }
    items.push(seq.item("witness sequence exponents (n <= 20)"));
    Ok(items)
}

/// Constants round-trips and the sharpness witnesses of the main corollary.
pub fn suite_main_cor() -> Result<Vec<SuiteItem>> {
    let mut items = Vec::new();
    let b1 = radical_index_bound(1, 10, BoundKind::Automorphism)?;
    items.push(SuiteItem::new(
        "(1/10)^E1 = 60",
        (b1 - 60.0).abs() / 60.0 < 1e-6,
        format!("got {b1}"),
    ));
    let b2 = radical_index_bound(1, 4, BoundKind::Affine)?;
    items.push(SuiteItem::new(
        "(1/4)^E2 = 3600",
        (b2 - 3600.0).abs() / 3600.0 < 1e-6,
        format!("got {b2}"),
    ));

    let alt5 = AutGroup::brute(Arc::new(alt(5)?))?;
    let lam = lambda_auto(&alt5)?;
    items.push(SuiteItem::new("lambda Alt:5 = 6", lam == 6, format!("got {lam}")));
    let laff = lambda_aff_exact(&alt5)?.0;
    items.push(SuiteItem::new("lambda-aff Alt:5 = 15", laff == 15, format!("got {laff}")));

    let mut mao_ok = Counter::new();
    for q in [5u64, 7, 8, 9, 11, 13] {
        mao_ok.record(aut_psl(q)?.mao() == q + 1);
    }
    items.push(mao_ok.item("mao PSL2:q = q+1 (q <= 13)"));

    let mut spectrum = pgl2_family(9)?.pgammal.order_spectrum();
    spectrum.sort_unstable_by(|a, b| b.cmp(a));
    let top4: Vec<u64> = spectrum.into_iter().take(4).collect();
    items.push(SuiteItem::new(
        "top automorphism orders of PSL2:9",
        top4 == [10, 8, 6, 5],
        format!("got {top4:?}, expected [10, 8, 6, 5]"),
    ));

    let fam25 = pgl2_family(25)?;
    let outside = fam25.pgammal.elements().iter().any(|p| {
        p.order() == 12 && fam25.pgl.index_of(p).is_none()
    });
    items.push(SuiteItem::new(
        "order-12 automorphism of PSL2:25 outside PGL2:25",
        outside,
        if outside { "found".to_string() } else { "not found".to_string() },
    ));
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_str(s.name()).unwrap(), s);
        }
        assert!(Suite::from_str("nope").is_err());
    }

    #[test]
    fn landau_suite_passes() {
        let items = suite_landau().unwrap();
        assert!(items.iter().all(|i| i.pass), "{items:?}");
    }

    #[test]
    fn main_cor_suite_passes() {
        let items = suite_main_cor().unwrap();
        assert!(items.iter().all(|i| i.pass), "{items:?}");
    }

    #[test]
    fn wreath_suite_passes() {
        let items = suite_wreath_order().unwrap();
        assert!(items.iter().all(|i| i.pass), "{items:?}");
    }

    #[test]
    fn table1_fast_rows_pass() {
        // spot-check the two cheapest rows without running the full suite
        let aut = aut_psl(5).unwrap();
        assert_eq!(lambda_aff_semisimple(&aut).unwrap(), 15);
        let aut = aut_alt7().unwrap();
        assert_eq!(lambda_aff_semisimple(&aut).unwrap(), 60);
    }
}
