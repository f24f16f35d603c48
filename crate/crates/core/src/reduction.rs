//! Mod-p smoothness analysis: brute-force singular-point enumeration over
//! small prime fields, and the consistency check of the reduced curve
//! against the discriminant criterion.
//!
//! `singular_points_mod_p` lists the F_p-rational singular points. The
//! consistency oracle additionally searches small extension fields F_{p^k},
//! because a singular reduction can have all of its singular points in a
//! proper extension (conjugate nodes); the bound on k per degree comes from
//! the maximal Galois orbit of singular points (1, 2, 3, 4 for degrees
//! 1, 2, 3, 4).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::finite_field::{reduce_rational, PrimeFieldElement};
use crate::invariant::invariants_of_model;
use crate::model::{reduce_mod_p, GenusOneModel};
use crate::poly::SparsePolynomial;
use crate::rational::Rational;

/// A point of (weighted) projective space over F_p, normalized so the
/// first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectivePoint {
    pub coordinates: Vec<PrimeFieldElement>,
    pub weights: Vec<u32>,
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coordinates.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

// ---------------------------------------------------------------------------
// small extension fields F_{p^k}
// ---------------------------------------------------------------------------

/// F_{p^k} with elements as coefficient vectors of length k and reduction
/// by a monic irreducible polynomial found by search.
struct ExtField {
    p: u64,
    k: usize,
    /// x^k = reduce[0] + reduce[1] x + ... + reduce[k-1] x^{k-1}
    reduce: Vec<u64>,
}

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = PrimeFieldElement::from_small(b[db] as i64, p)
        .inv()
        .expect("nonzero leading coefficient")
        .residue();
    while r.len() > db {
        let d = r.len() - 1;
        let c = (r[d] as u128 * lead_inv as u128 % p as u128) as u64;
        for i in 0..=db {
            let sub = (c as u128 * b[i] as u128 % p as u128) as u64;
            r[d - db + i] = (r[d - db + i] + p - sub) % p;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ((x as u128 * y as u128) % p as u128) as u64) % p;
        }
    }
    poly_rem(&prod, f, p)
}

/// x^(p^i) mod f by square-and-multiply.
fn x_frobenius_power(i: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut exp: u128 = 1;
    for _ in 0..i {
        exp *= p as u128;
    }
    let mut base = vec![0u64, 1]; // x
    let mut acc = vec![1u64];
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mulmod(&acc, &base, f, p);
        }
        base = poly_mulmod(&base, &base, f, p);
        exp >>= 1;
    }
    acc
}

/// f monic of degree k is irreducible iff gcd(x^(p^i) - x, f) = 1 for
/// i = 1..k/2.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    for i in 1..=(k / 2) as u32 {
        let mut g = x_frobenius_power(i, f, p);
        // subtract x
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = (g[1] + p - 1) % p;
        poly_trim(&mut g);
        if g.is_empty() {
            return false;
        }
        let gcd = poly_gcd(&g, f, p);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

impl ExtField {
    fn new(p: u64, k: usize) -> ExtField {
        if k == 1 {
            return ExtField { p, k, reduce: vec![0] };
        }
        // search monic x^k + a_{k-1} x^{k-1} + ... + a_0 for irreducibility
        let mut tail = vec![0u64; k];
        loop {
            let mut f = tail.clone();
            f.push(1);
            if is_irreducible(&f, p) {
                let reduce = tail.iter().map(|&a| (p - a % p) % p).collect();
                return ExtField { p, k, reduce };
            }
            // increment tail as a base-p counter
            let mut i = 0;
            loop {
                tail[i] += 1;
                if tail[i] < p {
                    break;
                }
                tail[i] = 0;
                i += 1;
                assert!(i < k, "no irreducible polynomial found");
            }
        }
    }

    fn size(&self) -> u64 {
        let mut s = 1u64;
        for _ in 0..self.k {
            s *= self.p;
        }
        s
    }

    fn zero(&self) -> Vec<u64> {
        vec![0; self.k]
    }

    fn embed(&self, r: u64) -> Vec<u64> {
        let mut e = self.zero();
        e[0] = r % self.p;
        e
    }

    /// The idx-th field element, as base-p digits.
    fn element(&self, mut idx: u64) -> Vec<u64> {
        let mut e = self.zero();
        for d in e.iter_mut() {
            *d = idx % self.p;
            idx /= self.p;
        }
        e
    }

    fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ((x as u128 * y as u128) % p as u128) as u64) % p;
            }
        }
        for d in (self.k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for j in 0..self.k {
                let add = ((c as u128 * self.reduce[j] as u128) % p as u128) as u64;
                prod[d - self.k + j] = (prod[d - self.k + j] + add) % p;
            }
        }
        prod.truncate(self.k);
        prod
    }

    fn eval(&self, poly: &SparsePolynomial<PrimeFieldElement>, pt: &[Vec<u64>]) -> Vec<u64> {
        let mut acc = self.zero();
        for (e, c) in poly.terms() {
            let mut t = self.embed(c.residue());
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t = self.mul(&t, &pt[i]);
                }
            }
            acc = self.add(&acc, &t);
        }
        acc
    }

    fn all_vanish(&self, polys: &[SparsePolynomial<PrimeFieldElement>], pt: &[Vec<u64>]) -> bool {
        polys.iter().all(|f| self.is_zero(&self.eval(f, pt)))
    }
}

// ---------------------------------------------------------------------------
// singular-point systems
// ---------------------------------------------------------------------------

type FpPoly = SparsePolynomial<PrimeFieldElement>;

/// The vanishing conditions defining the singular locus of a reduced model,
/// together with the shape of the ambient space.
enum SingularSystem {
    /// degree 1: affine chart z = 1 of the long Weierstrass equation in
    /// (x, y); the point at infinity is always smooth
    Affine { polys: Vec<FpPoly> },
    /// degree 2, weighted (1,2,1): equation and partials on the charts
    /// z = 1 (variables x, y) and x = 1 (variables z, y)
    WeightedCharts { chart_z: Vec<FpPoly>, chart_x: Vec<FpPoly> },
    /// degrees 3 and 4: homogeneous conditions over straight P^dim
    Projective { polys: Vec<FpPoly>, dim: usize },
}

fn fp(p: u64, n: i64) -> PrimeFieldElement {
    PrimeFieldElement::from_small(n, p)
}

fn all_partials(f: &FpPoly) -> Vec<FpPoly> {
    let mut out = vec![f.clone()];
    for v in f.variables().to_vec() {
        out.push(f.partial_derivative(&v).unwrap());
    }
    out
}

fn build_system(m: &GenusOneModel<Rational>, p: u64) -> Result<SingularSystem> {
    match m {
        GenusOneModel::Weierstrass(_) => {
            let w = match reduce_mod_p(m, p)? {
                GenusOneModel::Weierstrass(w) => w,
                _ => unreachable!(),
            };
            let vars = ["x", "y"];
            // y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6
            let f = SparsePolynomial::from_terms(
                &vars,
                [
                    (vec![0, 2], fp(p, 1)),
                    (vec![1, 1], w.a1),
                    (vec![0, 1], w.a3),
                    (vec![3, 0], fp(p, -1)),
                    (vec![2, 0], w.a2.neg()),
                    (vec![1, 0], w.a4.neg()),
                    (vec![0, 0], w.a6.neg()),
                ],
            );
            Ok(SingularSystem::Affine { polys: all_partials(&f) })
        }
        GenusOneModel::BinaryQuartic(_) => {
            let b = match reduce_mod_p(m, p)? {
                GenusOneModel::BinaryQuartic(b) => b,
                _ => unreachable!(),
            };
            // chart z = 1: y^2 + (a0 x^2 + a1 x + a2) y - (a x^4 + ... + e)
            let vars = ["x", "y"];
            let chart_z = SparsePolynomial::from_terms(
                &vars,
                [
                    (vec![0, 2], fp(p, 1)),
                    (vec![2, 1], b.alpha[0]),
                    (vec![1, 1], b.alpha[1]),
                    (vec![0, 1], b.alpha[2]),
                    (vec![4, 0], b.quartic[0].neg()),
                    (vec![3, 0], b.quartic[1].neg()),
                    (vec![2, 0], b.quartic[2].neg()),
                    (vec![1, 0], b.quartic[3].neg()),
                    (vec![0, 0], b.quartic[4].neg()),
                ],
            );
            // chart x = 1: y^2 + (a0 + a1 z + a2 z^2) y - (a + b z + ... + e z^4)
            let vars = ["z", "y"];
            let chart_x = SparsePolynomial::from_terms(
                &vars,
                [
                    (vec![0, 2], fp(p, 1)),
                    (vec![0, 1], b.alpha[0]),
                    (vec![1, 1], b.alpha[1]),
                    (vec![2, 1], b.alpha[2]),
                    (vec![0, 0], b.quartic[0].neg()),
                    (vec![1, 0], b.quartic[1].neg()),
                    (vec![2, 0], b.quartic[2].neg()),
                    (vec![3, 0], b.quartic[3].neg()),
                    (vec![4, 0], b.quartic[4].neg()),
                ],
            );
            Ok(SingularSystem::WeightedCharts {
                chart_z: all_partials(&chart_z),
                chart_x: all_partials(&chart_x),
            })
        }
        GenusOneModel::TernaryCubic(t) => {
            let f = t
                .polynomial()
                .map_coeffs(|c| reduce_rational(c, p, "cubic coefficient"))?;
            Ok(SingularSystem::Projective { polys: all_partials(&f), dim: 2 })
        }
        GenusOneModel::QuadricPair(q) => {
            // reduce the quadric polynomials, not the Gram matrices: the
            // polynomials stay integral even when the Gram entries are
            // half-integers
            let q1 = q
                .quadric_polynomial(0)
                .map_coeffs(|c| reduce_rational(c, p, "q1 coefficient"))?;
            let q2 = q
                .quadric_polynomial(1)
                .map_coeffs(|c| reduce_rational(c, p, "q2 coefficient"))?;
            let vars: Vec<String> = q1.variables().to_vec();
            let d1: Vec<FpPoly> = vars.iter().map(|v| q1.partial_derivative(v).unwrap()).collect();
            let d2: Vec<FpPoly> = vars.iter().map(|v| q2.partial_derivative(v).unwrap()).collect();
            let mut polys = vec![q1, q2];
            for i in 0..4 {
                for j in i + 1..4 {
                    polys.push(d1[i].mul(&d2[j]).sub(&d1[j].mul(&d2[i])));
                }
            }
            Ok(SingularSystem::Projective { polys, dim: 3 })
        }
        GenusOneModel::Pfaffian(_) => Err(Error::UnsupportedDegree(5)),
    }
}

/// Enumerate the canonical representatives of P^dim(F_q): first nonzero
/// coordinate 1.
fn projective_reps(fq: &ExtField, dim: usize, mut visit: impl FnMut(&[Vec<u64>]) -> bool) {
    let q = fq.size();
    let n = dim + 1;
    for lead in 0..n {
        let free = n - lead - 1;
        let mut total = 1u64;
        for _ in 0..free {
            total *= q;
        }
        for idx in 0..total {
            let mut pt: Vec<Vec<u64>> = vec![fq.zero(); n];
            pt[lead] = fq.embed(1);
            let mut rest = idx;
            for c in pt.iter_mut().skip(lead + 1) {
                *c = fq.element(rest % q);
                rest /= q;
            }
            if !visit(&pt) {
                return;
            }
        }
    }
}

impl SingularSystem {
    /// Does the singular locus have a point over F_{p^k}?
    fn has_point_over(&self, p: u64, k: usize) -> bool {
        let fq = ExtField::new(p, k);
        let q = fq.size();
        match self {
            SingularSystem::Affine { polys } => {
                for ix in 0..q {
                    for iy in 0..q {
                        let pt = [fq.element(ix), fq.element(iy)];
                        if fq.all_vanish(polys, &pt) {
                            return true;
                        }
                    }
                }
                false
            }
            SingularSystem::WeightedCharts { chart_z, chart_x } => {
                for ix in 0..q {
                    for iy in 0..q {
                        let pt = [fq.element(ix), fq.element(iy)];
                        if fq.all_vanish(chart_z, &pt) {
                            return true;
                        }
                    }
                }
                // remaining points have z = 0, x = 1
                for iy in 0..q {
                    let pt = [fq.zero(), fq.element(iy)];
                    if fq.all_vanish(chart_x, &pt) {
                        return true;
                    }
                }
                false
            }
            SingularSystem::Projective { polys, dim } => {
                let mut found = false;
                projective_reps(&fq, *dim, |pt| {
                    if fq.all_vanish(polys, pt) {
                        found = true;
                        return false;
                    }
                    true
                });
                found
            }
        }
    }

    /// All F_p-rational singular points, as canonical projective
    /// representatives.
    fn rational_points(&self, p: u64) -> Vec<ProjectivePoint> {
        let fq = ExtField::new(p, 1);
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut weights = vec![1u32; 3];
        match self {
            SingularSystem::Affine { polys } => {
                for x in 0..p {
                    for y in 0..p {
                        let pt = [vec![x], vec![y]];
                        if fq.all_vanish(polys, &pt) {
                            // affine (x, y) -> (x : y : 1)
                            seen.insert(vec![x, y, 1]);
                        }
                    }
                }
            }
            SingularSystem::WeightedCharts { chart_z, chart_x } => {
                weights = vec![1, 2, 1];
                let inv = |a: u64| {
                    PrimeFieldElement::from_small(a as i64, p)
                        .inv()
                        .unwrap()
                        .residue()
                };
                for x in 0..p {
                    for y in 0..p {
                        let pt = [vec![x], vec![y]];
                        if fq.all_vanish(chart_z, &pt) {
                            // (x : y : 1); canonicalize so x ∈ {0, 1}
                            if x == 0 {
                                seen.insert(vec![0, y, 1]);
                            } else {
                                let l = inv(x);
                                let l2 = l * l % p;
                                seen.insert(vec![1, y * l2 % p, l]);
                            }
                        }
                    }
                }
                for z in 0..p {
                    for y in 0..p {
                        let pt = [vec![z], vec![y]];
                        if fq.all_vanish(chart_x, &pt) {
                            // already canonical: (1 : y : z)
                            seen.insert(vec![1, y, z]);
                        }
                    }
                }
            }
            SingularSystem::Projective { polys, dim } => {
                weights = vec![1; dim + 1];
                projective_reps(&fq, *dim, |pt| {
                    if fq.all_vanish(polys, pt) {
                        seen.insert(pt.iter().map(|c| c[0]).collect());
                    }
                    true
                });
            }
        }
        seen.into_iter()
            .map(|coords| ProjectivePoint {
                coordinates: coords
                    .iter()
                    .map(|&c| PrimeFieldElement::from_small(c as i64, p))
                    .collect(),
                weights: weights.clone(),
            })
            .collect()
    }
}

/// The F_p-rational singular points of the reduction of a model of degree
/// 1-4, as a sorted, deduplicated list of canonical representatives.
pub fn singular_points_mod_p(
    m: &GenusOneModel<Rational>,
    p: u64,
) -> Result<Vec<ProjectivePoint>> {
    if !crate::rational::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(build_system(m, p)?.rational_points(p))
}

/// Checks the discriminant criterion against brute force: the reduction
/// mod p is non-singular exactly when delta is a p-adic unit.
///
/// Geometric singularity is witnessed by searching F_{p^k} for k up to the
/// maximal Galois orbit size of singular points (1, 2, 3, 4 by degree), so
/// the check is two-sided even when every singular point is irrational.
pub fn smoothness_discriminant_consistency(m: &GenusOneModel<Rational>, p: u64) -> Result<bool> {
    let delta = invariants_of_model(m)?.delta;
    let delta_unit = !reduce_rational(&delta, p, "delta")?.is_zero();
    let system = build_system(m, p)?;
    if delta_unit {
        // smooth claim: no F_p-rational singular point may exist
        Ok(!system.has_point_over(p, 1))
    } else {
        let max_k = match m.degree() {
            1 => 1,
            2 => 2,
            3 => 3,
            _ => 4,
        };
        for k in 1..=max_k {
            if system.has_point_over(p, k) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
