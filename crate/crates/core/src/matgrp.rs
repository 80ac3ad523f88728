//! Projective linear groups as explicit permutation groups.
//!
//! PSL₂(q), PGL₂(q) and PΓL₂(q) act on the projective line over GF(q)
//! (q+1 points); PSL₃(q) and its extension by field and graph automorphisms
//! act on the points and lines of the projective plane (2(q²+q+1) points).
//! The largest group of each bundle realizes the full automorphism group of
//! the socle by conjugation, which is what [`AutGroup::from_ambient`]
//! consumes.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FqElement, FqField};
use crate::group::{AutGroup, ConcreteGroup, CLOSURE_GUARD};
use crate::numtheory::as_prime_power;
use crate::perm::Permutation;

/// The projective line over GF(q): point 0 is [1:0], point 1+i is [aᵢ:1]
/// with aᵢ the field element of enumeration index i.
pub struct ProjectiveLine {
    pub field: FqField,
    points: Vec<(FqElement, FqElement)>,
}

impl ProjectiveLine {
    pub fn new(field: FqField) -> Self {
        let mut points = vec![(field.one(), field.zero())];
        for i in 0..field.q() {
            points.push((field.elem_from_index(i), field.one()));
        }
        ProjectiveLine { field, points }
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    fn index_of(&self, x: &FqElement, y: &FqElement) -> usize {
        let f = &self.field;
        if f.is_zero(y) {
            0
        } else {
            let a = f.mul(x, &f.inv(y).unwrap());
            1 + f.index_of(&a) as usize
        }
    }

    /// The permutation induced by the matrix [[a,b],[c,d]] (must be
    /// invertible).
    pub fn mat_perm(&self, a: &FqElement, b: &FqElement, c: &FqElement, d: &FqElement) -> Permutation {
        let f = &self.field;
        let images = self
            .points
            .iter()
            .map(|(x, y)| {
                let nx = f.add(&f.mul(a, x), &f.mul(b, y));
                let ny = f.add(&f.mul(c, x), &f.mul(d, y));
                self.index_of(&nx, &ny) as u32
            })
            .collect();
        Permutation::from_images(images).unwrap()
    }

    /// The permutation induced by the Frobenius x ↦ x^p on coordinates.
    pub fn frobenius_perm(&self) -> Permutation {
        let f = &self.field;
        let images = self
            .points
            .iter()
            .map(|(x, y)| self.index_of(&f.frobenius(x, 1), &f.frobenius(y, 1)) as u32)
            .collect();
        Permutation::from_images(images).unwrap()
    }
}

/// PSL₂(q) ⊆ PGL₂(q) ⊆ PΓL₂(q) on the q+1 projective points, all sharing the
/// same domain so the largest can serve as the automorphism-realizing ambient
/// group of the smaller ones.
pub struct PGL2Family {
    pub q: u64,
    pub p: u64,
    pub f: usize,
    pub psl: Arc<ConcreteGroup>,
    pub pgl: Arc<ConcreteGroup>,
    pub pgammal: Arc<ConcreteGroup>,
}

pub fn pgl2_family(q: u64) -> Result<PGL2Family> {
    let (p, f) = as_prime_power(q).ok_or_else(|| Error::invalid("q must be a prime power"))?;
    if q < 4 {
        return Err(Error::invalid("PSL2 requires q >= 4"));
    }
    let field = FqField::new(p, f as usize)?;
    let line = ProjectiveLine::new(field);
    let fld = &line.field;

    // transvections over an additive basis generate SL₂(q)
    let mut psl_gens = Vec::new();
    let t = fld.gen_t();
    let mut c = fld.one();
    for _ in 0..f {
        psl_gens.push(line.mat_perm(&fld.one(), &c, &fld.zero(), &fld.one()));
        psl_gens.push(line.mat_perm(&fld.one(), &fld.zero(), &c, &fld.one()));
        c = fld.mul(&c, &t);
    }
    let prim = fld.primitive_element();
    let diag = line.mat_perm(&prim, &fld.zero(), &fld.zero(), &fld.one());
    let frob = line.frobenius_perm();

    let psl = ConcreteGroup::from_generators(format!("PSL2:{q}"), psl_gens.clone(), CLOSURE_GUARD)?
        .with_semisimple_hint(true);
    let mut pgl_gens = psl_gens.clone();
    pgl_gens.push(diag);
    let pgl = ConcreteGroup::from_generators(format!("PGL2:{q}"), pgl_gens.clone(), CLOSURE_GUARD)?
        .with_semisimple_hint(true);
    let mut pgammal_gens = pgl_gens;
    pgammal_gens.push(frob);
    let pgammal =
        ConcreteGroup::from_generators(format!("PGammaL2:{q}"), pgammal_gens, CLOSURE_GUARD)?
            .with_semisimple_hint(true);

    let base = q * (q * q - 1);
    let expect_psl = base / if q % 2 == 1 { 2 } else { 1 };
    if psl.order() as u64 != expect_psl
        || pgl.order() as u64 != base
        || pgammal.order() as u64 != base * f as u64
    {
        return Err(Error::invalid(format!(
            "projective group orders for q={q} do not match the formulas"
        )));
    }
    Ok(PGL2Family {
        q,
        p,
        f: f as usize,
        psl: Arc::new(psl),
        pgl: Arc::new(pgl),
        pgammal: Arc::new(pgammal),
    })
}

impl PGL2Family {
    pub fn aut_psl(&self) -> Result<AutGroup> {
        AutGroup::from_ambient(self.psl.clone(), self.pgammal.clone())
    }

    pub fn aut_pgl(&self) -> Result<AutGroup> {
        AutGroup::from_ambient(self.pgl.clone(), self.pgammal.clone())
    }

    /// PΓL₂(q) is complete for q ≥ 5, so it is its own ambient group.
    pub fn aut_pgammal(&self) -> Result<AutGroup> {
        AutGroup::from_ambient(self.pgammal.clone(), self.pgammal.clone())
    }
}

/// The projective plane PG(2,q): normalized point vectors, in the order
/// (1,a,b), (0,1,b), (0,0,1) with a,b running through the field enumeration.
struct Pg2 {
    field: FqField,
    points: Vec<[FqElement; 3]>,
    index: HashMap<[u64; 3], usize>,
}

impl Pg2 {
    fn new(field: FqField) -> Self {
        let mut points = Vec::new();
        for i in 0..field.q() {
            for j in 0..field.q() {
                points.push([field.one(), field.elem_from_index(i), field.elem_from_index(j)]);
            }
        }
        for j in 0..field.q() {
            points.push([field.zero(), field.one(), field.elem_from_index(j)]);
        }
        points.push([field.zero(), field.zero(), field.one()]);
        let index = points
            .iter()
            .enumerate()
            .map(|(i, v)| (key_of(&field, v), i))
            .collect();
        Pg2 { field, points, index }
    }

    fn size(&self) -> usize {
        self.points.len()
    }

    fn normalize(&self, v: &[FqElement; 3]) -> [FqElement; 3] {
        let f = &self.field;
        let lead = v.iter().find(|c| !f.is_zero(c)).expect("zero vector");
        let s = f.inv(lead).unwrap();
        [f.mul(&v[0], &s), f.mul(&v[1], &s), f.mul(&v[2], &s)]
    }

    fn index_of(&self, v: &[FqElement; 3]) -> usize {
        self.index[&key_of(&self.field, &self.normalize(v))]
    }
}

fn key_of(field: &FqField, v: &[FqElement; 3]) -> [u64; 3] {
    [field.index_of(&v[0]), field.index_of(&v[1]), field.index_of(&v[2])]
}

type Mat3 = [FqElement; 9];

fn mat3_vec(f: &FqField, m: &Mat3, v: &[FqElement; 3]) -> [FqElement; 3] {
    let mut out = [f.zero(), f.zero(), f.zero()];
    for (r, o) in out.iter_mut().enumerate() {
        for c in 0..3 {
            *o = f.add(o, &f.mul(&m[3 * r + c], &v[c]));
        }
    }
    out
}

/// Adjugate transpose: proportional to the inverse transpose, which is all a
/// projective line action needs.
fn mat3_adjugate_transpose(f: &FqField, m: &Mat3) -> Mat3 {
    let e = |r: usize, c: usize| &m[3 * r + c];
    let cof = |r: usize, c: usize| {
        // minor with row r and column c deleted, with sign
        let rows: Vec<usize> = (0..3).filter(|&x| x != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&x| x != c).collect();
        let minor = f.sub(
            &f.mul(e(rows[0], cols[0]), e(rows[1], cols[1])),
            &f.mul(e(rows[0], cols[1]), e(rows[1], cols[0])),
        );
        if (r + c) % 2 == 0 {
            minor
        } else {
            f.neg(&minor)
        }
    };
    // adj(m) = cofactor(m)ᵀ, so adj(m)ᵀ = cofactor(m)
    [
        cof(0, 0), cof(0, 1), cof(0, 2),
        cof(1, 0), cof(1, 1), cof(1, 2),
        cof(2, 0), cof(2, 1), cof(2, 2),
    ]
}

/// PSL₃(q) together with the overgroup generated by PGL₃(q), the field
/// automorphisms, and the duality (graph) automorphism. The overgroup
/// realizes Aut(PSL₃(q)) by conjugation on the 2(q²+q+1) points and lines of
/// the projective plane.
pub struct PSL3Bundle {
    pub q: u64,
    pub socle: Arc<ConcreteGroup>,
    pub full: Arc<ConcreteGroup>,
}

pub fn psl3_bundle(q: u64) -> Result<PSL3Bundle> {
    let (p, f) = as_prime_power(q).ok_or_else(|| Error::invalid("q must be a prime power"))?;
    if q > 4 {
        return Err(Error::guard("closure", "PSL3 bundles are built only for q <= 4"));
    }
    let field = FqField::new(p, f as usize)?;
    let plane = Pg2::new(field);
    let n = plane.size();
    let fld = &plane.field;

    // permutation on points ∪ lines induced by a matrix: points by m,
    // lines (normal vectors) by the adjugate transpose
    let perm_of_mat = |m: &Mat3| -> Permutation {
        let adj_t = mat3_adjugate_transpose(fld, m);
        let mut images = Vec::with_capacity(2 * n);
        for v in &plane.points {
            images.push(plane.index_of(&mat3_vec(fld, m, v)) as u32);
        }
        for w in &plane.points {
            images.push((n + plane.index_of(&mat3_vec(fld, &adj_t, w))) as u32);
        }
        Permutation::from_images(images).unwrap()
    };
    let elementary = |r: usize, c: usize, coeff: &FqElement| -> Mat3 {
        let mut m: Mat3 = std::array::from_fn(|k| {
            if k / 3 == k % 3 {
                fld.one()
            } else {
                fld.zero()
            }
        });
        m[3 * r + c] = coeff.clone();
        m
    };

    let mut socle_gens = Vec::new();
    let t = fld.gen_t();
    let mut c = fld.one();
    for _ in 0..f {
        for (r, s) in [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)] {
            socle_gens.push(perm_of_mat(&elementary(r, s, &c)));
        }
        c = fld.mul(&c, &t);
    }
    let socle =
        ConcreteGroup::from_generators(format!("PSL3:{q}"), socle_gens.clone(), CLOSURE_GUARD)?
            .with_semisimple_hint(true);

    let mut full_gens = socle_gens;
    let prim = fld.primitive_element();
    let mut diag: Mat3 =
        std::array::from_fn(|k| if k / 3 == k % 3 { fld.one() } else { fld.zero() });
    diag[8] = prim;
    full_gens.push(perm_of_mat(&diag));
    if f > 1 {
        let mut images = Vec::with_capacity(2 * n);
        for half in 0..2 {
            for v in &plane.points {
                let fv = [
                    fld.frobenius(&v[0], 1),
                    fld.frobenius(&v[1], 1),
                    fld.frobenius(&v[2], 1),
                ];
                images.push((half * n + plane.index_of(&fv)) as u32);
            }
        }
        full_gens.push(Permutation::from_images(images)?);
    }
    // duality: swap each point with the line having the same coordinates
    let duality = Permutation::from_images(
        (0..2 * n as u32).map(|i| (i + n as u32) % (2 * n as u32)).collect(),
    )?;
    full_gens.push(duality);
    let full =
        ConcreteGroup::from_generators(format!("AutPSL3:{q}"), full_gens, CLOSURE_GUARD)?
            .with_semisimple_hint(true);

    // |PSL₃(q)| and |Aut(PSL₃(q))| = |PΓL₃(q)|·2
    let q2 = q * q;
    let q3 = q2 * q;
    let d = num_integer::gcd(3, q - 1);
    let expect_socle = q3 * (q3 - 1) * (q2 - 1) / d;
    let expect_full = expect_socle * d * f as u64 * 2;
    if socle.order() as u64 != expect_socle || full.order() as u64 != expect_full {
        return Err(Error::invalid(format!(
            "PSL3 orders for q={q} do not match the formulas"
        )));
    }
    Ok(PSL3Bundle { q, socle: Arc::new(socle), full: Arc::new(full) })
}

impl PSL3Bundle {
    pub fn aut_socle(&self) -> Result<AutGroup> {
        AutGroup::from_ambient(self.socle.clone(), self.full.clone())
    }

    /// The full extension is complete, so it is its own ambient group.
    pub fn aut_full(&self) -> Result<AutGroup> {
        AutGroup::from_ambient(self.full.clone(), self.full.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgl2_orders_small() {
        for q in [4u64, 5, 7, 8, 9, 11, 13] {
            let fam = pgl2_family(q).unwrap();
            let base = q * (q * q - 1);
            assert_eq!(fam.pgl.order() as u64, base);
            assert_eq!(fam.psl.order() as u64, base / if q % 2 == 1 { 2 } else { 1 });
            assert_eq!(fam.pgammal.order() as u64, base * fam.f as u64);
            assert_eq!(fam.psl.degree() as u64, q + 1);
            assert!(fam.pgammal.contains_group(&fam.psl));
            assert!(fam.pgammal.contains_group(&fam.pgl));
        }
    }

    #[test]
    fn pgl2_rejects_bad_q() {
        assert!(pgl2_family(6).is_err());
        assert!(pgl2_family(3).is_err());
    }

    #[test]
    fn psl2_small_isomorphism_signatures() {
        // PSL₂(4) ≅ Alt:5 and PGL₂(5) ≅ Sym:5
        let f4 = pgl2_family(4).unwrap();
        assert_eq!(f4.psl.order(), 60);
        assert_eq!(f4.psl.order_spectrum(), vec![1, 2, 3, 5]);
        let f5 = pgl2_family(5).unwrap();
        assert_eq!(f5.pgl.order(), 120);
        assert_eq!(f5.pgl.order_spectrum(), vec![1, 2, 3, 4, 5, 6]);
        // PSL₂(9) ≅ Alt:6
        let f9 = pgl2_family(9).unwrap();
        assert_eq!(f9.psl.order(), 360);
        assert_eq!(f9.psl.order_spectrum(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn pgammal2_9_structure() {
        let fam = pgl2_family(9).unwrap();
        assert_eq!(fam.pgammal.order(), 1440);
        let aut = fam.aut_psl().unwrap();
        assert_eq!(aut.order(), 1440);
        assert_eq!(aut.mao(), 10);
        // the four largest automorphism orders of PSL₂(9)
        let mut orders = fam.pgammal.order_spectrum();
        orders.reverse();
        assert_eq!(&orders[..4], &[10, 8, 6, 5]);
    }

    #[test]
    fn pgammal2_27_order() {
        let fam = pgl2_family(27).unwrap();
        assert_eq!(fam.psl.order(), 9828);
        assert_eq!(fam.pgammal.order(), 3 * 27 * 28 * 26);
    }

    #[test]
    fn psl2_25_has_order_12_automorphism_outside_pgl() {
        let fam = pgl2_family(25).unwrap();
        let pgl_meo = fam.pgl.meo();
        let pgammal_meo = fam.pgammal.meo();
        assert_eq!(pgl_meo, 26);
        assert_eq!(pgammal_meo, 26);
        // an order-12 element exists in PΓL₂(25) but outside PGL₂(25)
        let found = (0..fam.pgammal.order()).any(|i| {
            fam.pgammal.element_order(i) == 12
                && fam.pgl.index_of(fam.pgammal.element(i)).is_none()
        });
        assert!(found);
    }

    #[test]
    fn psl3_3_bundle() {
        let b = psl3_bundle(3).unwrap();
        assert_eq!(b.socle.order(), 5616);
        assert_eq!(b.full.order(), 11232);
        assert_eq!(b.socle.degree(), 26);
        assert_eq!(b.socle.order_spectrum(), vec![1, 2, 3, 4, 6, 8, 13]);
        assert_eq!(b.full.order_spectrum(), vec![1, 2, 3, 4, 6, 8, 12, 13]);
        assert_eq!(b.full.meo(), 13);
        assert!(b.full.contains_group(&b.socle));
        let aut = b.aut_socle().unwrap();
        assert_eq!(aut.order(), 11232);
        // the socle is simple
        let simple = ConcreteGroup::from_elements("PSL3:3", b.socle.elements().to_vec()).unwrap();
        assert_eq!(simple.normal_subgroups().unwrap().len(), 2);
    }

    #[test]
    fn psl3_bundle_guard() {
        assert!(psl3_bundle(5).is_err());
    }
}
