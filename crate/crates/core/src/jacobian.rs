//! Jacobians of genus one models, the covariant point maps onto them, and
//! the scaling relations tying model invariants to Jacobian invariants.

use crate::error::{Error, Result};
use crate::invariant::{
    aronhold_st, invariants_of_model, quartic_ij, short_weierstrass_invariants, InvariantTriple,
};
use crate::model::{
    complete_square, gram_pencil_quartic, quartic_from_polynomial, quartic_to_polynomial,
    BinaryQuarticModel, GenusOneModel, ShortWeierstrass, TernaryCubicModel, WeierstrassModel,
};
use crate::poly::SparsePolynomial;
use crate::rational::Rational;

/// The scale factor relating model invariants to Jacobian invariants:
/// c4(model) = alpha^4 c4(W), c6(model) = alpha^6 c6(W),
/// delta(model) = alpha^12 delta(W).
pub fn alpha(degree: u8) -> Result<Rational> {
    match degree {
        2 => Ok(Rational::one()),
        3 => Ok(Rational::ratio(1, 2)),
        4 => Ok(Rational::from_integer(2)),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// The Jacobian y^2 = 4x^3 - g2 x - g3 of a model of degree 2, 3 or 4.
///
/// Degree 2 completes the square and takes (g2, g3) = (i, j) of the
/// quartic; degree 3 takes (-108 S, 27 T); degree 4 takes (i, j) of the
/// Gram pencil quartic.
pub fn jacobian_of_model(m: &GenusOneModel<Rational>) -> Result<ShortWeierstrass> {
    match m {
        GenusOneModel::BinaryQuartic(b) => {
            let done = complete_square(b);
            let ij = quartic_ij(&done.quartic);
            Ok(ShortWeierstrass { g2: ij.first, g3: ij.second })
        }
        GenusOneModel::TernaryCubic(t) => {
            let st = aronhold_st(t);
            Ok(ShortWeierstrass {
                g2: Rational::from_integer(-108) * st.first,
                g3: Rational::from_integer(27) * st.second,
            })
        }
        GenusOneModel::QuadricPair(q) => {
            let pencil = gram_pencil_quartic(q);
            let ij = quartic_ij(&quartic_from_polynomial(&pencil)?);
            Ok(ShortWeierstrass { g2: ij.first, g3: ij.second })
        }
        other => Err(Error::UnsupportedDegree(other.degree())),
    }
}

/// Outcome of comparing a model's invariants against its Jacobian's,
/// scaled by alpha.
#[derive(Clone, PartialEq, Debug)]
pub struct RelationReport {
    pub degree: u8,
    pub alpha: Rational,
    pub model: InvariantTriple,
    pub jacobian: InvariantTriple,
    pub c4_ok: bool,
    pub c6_ok: bool,
    pub delta_ok: bool,
}

impl RelationReport {
    pub fn all_ok(&self) -> bool {
        self.c4_ok && self.c6_ok && self.delta_ok
    }
}

/// Verify c4(model) = alpha^4 c4(W), c6(model) = alpha^6 c6(W) and
/// delta(model) = alpha^12 delta(W) for a model of degree 2, 3 or 4.
pub fn check_invariant_relations(m: &GenusOneModel<Rational>) -> Result<RelationReport> {
    let degree = m.degree();
    let a = alpha(degree)?;
    let model = invariants_of_model(m)?;
    let jac = short_weierstrass_invariants(&jacobian_of_model(m)?);
    let c4_ok = model.c4 == &a.pow(4) * &jac.c4;
    let c6_ok = model.c6 == &a.pow(6) * &jac.c6;
    let delta_ok = model.delta == &a.pow(12) * &jac.delta;
    Ok(RelationReport {
        degree,
        alpha: a,
        model,
        jacobian: jac,
        c4_ok,
        c6_ok,
        delta_ok,
    })
}

/// The quartic covariant g = (q_xz^2 - q_xx q_zz)/144 and sextic covariant
/// h = det([[q_x, q_z], [g_x, g_z]])/8 of a binary quartic q.
pub fn quartic_covariants_gh(
    q: &[Rational; 5],
) -> (SparsePolynomial<Rational>, SparsePolynomial<Rational>) {
    let q = quartic_to_polynomial(q);
    let qx = q.partial_derivative("x").unwrap();
    let qz = q.partial_derivative("z").unwrap();
    let qxx = qx.partial_derivative("x").unwrap();
    let qxz = qx.partial_derivative("z").unwrap();
    let qzz = qz.partial_derivative("z").unwrap();
    let g = qxz
        .mul(&qxz)
        .sub(&qxx.mul(&qzz))
        .scale(&Rational::ratio(1, 144));
    let gx = g.partial_derivative("x").unwrap();
    let gz = g.partial_derivative("z").unwrap();
    let h = qx.mul(&gz).sub(&qz.mul(&gx)).scale(&Rational::ratio(1, 8));
    (g, h)
}

/// The covariant map from a degree-2 model to its Jacobian: complete the
/// square, shift y by p(x, z)/2, then (xi, eta) = (g/y^2, h/y^3) with the
/// covariants of the completed quartic.
///
/// The point (x, y, z) must satisfy y^2 + p(x, z) y = q(x, z); points with
/// shifted y-coordinate zero are rejected.
pub fn point_map_f2(
    m: &BinaryQuarticModel<Rational>,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<(Rational, Rational)> {
    let pt = [x.clone(), z.clone()];
    let pval = m.p_polynomial().evaluate(&pt)?;
    let qval = m.q_polynomial().evaluate(&pt)?;
    if &(y * y) + &(&pval * y) != qval {
        return Err(Error::PointOffCurve);
    }
    let yy = y + &(pval / Rational::from_integer(2));
    if yy.is_zero() {
        return Err(Error::ChartDenominatorZero);
    }
    let done = complete_square(m);
    let (g, h) = quartic_covariants_gh(&done.quartic);
    let xi = &g.evaluate(&pt)? / &(&yy * &yy);
    let eta = &h.evaluate(&pt)? / &(&(&yy * &yy) * &yy);
    Ok((xi, eta))
}

/// The Hessian covariant of a ternary cubic: det of the matrix of second
/// partials, divided by 216.
pub fn hessian_covariant(t: &TernaryCubicModel<Rational>) -> SparsePolynomial<Rational> {
    let f = t.polynomial();
    let vars = ["x", "y", "z"];
    let d: Vec<SparsePolynomial<Rational>> =
        vars.iter().map(|v| f.partial_derivative(v).unwrap()).collect();
    let mut entries = Vec::with_capacity(9);
    for di in &d {
        for v in vars {
            entries.push(di.partial_derivative(v).unwrap());
        }
    }
    crate::poly::PolyMatrix::new(3, 3, entries)
        .determinant()
        .unwrap()
        .scale(&Rational::ratio(1, 216))
}

/// Change of Weierstrass coordinates by (u, r, s, t):
/// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t. Requires u != 0.
pub fn weierstrass_transform(
    w: &WeierstrassModel<Rational>,
    u: &Rational,
    r: &Rational,
    s: &Rational,
    t: &Rational,
) -> Result<WeierstrassModel<Rational>> {
    if u.is_zero() {
        return Err(Error::ZeroScale);
    }
    let two = Rational::from_integer(2);
    let three = Rational::from_integer(3);
    let a1 = &(&w.a1 + &(&two * s)) / &u.pow(1);
    let a2 = &(&(&w.a2 - &(s * &w.a1)) + &(&(&three * r) - &(s * s))) / &u.pow(2);
    let a3 = &(&(&w.a3 + &(r * &w.a1)) + &(&two * t)) / &u.pow(3);
    let a4 = &(&(&(&w.a4 - &(s * &w.a3)) + &(&(&two * r) * &w.a2))
        - &(&(t + &(r * s)) * &w.a1)
        + &(&(&three * r) * r))
        - &(&(&two * s) * t);
    let a4 = &a4 / &u.pow(4);
    let a6 = &(&(&(&(&w.a6 + &(r * &w.a4)) + &(&(r * r) * &w.a2)) + &(&(r * r) * r))
        - &(t * &w.a3)
        - &(t * t))
        - &(&(r * t) * &w.a1);
    let a6 = &a6 / &u.pow(6);
    Ok(WeierstrassModel { a1, a2, a3, a4, a6 })
}
