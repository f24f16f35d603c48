//! Classical and normalized invariants: (b2, b4, b6, c4, c6, delta) for
//! Weierstrass models, (i, j) for binary quartics, (S, T) for ternary
//! cubics, and the normalized (c4, c6, delta) for models of degrees 1-4.

use crate::error::{Error, Result};
use crate::model::{
    complete_square, gram_pencil_quartic, quartic_from_polynomial, GenusOneModel, ShortWeierstrass,
    TernaryCubicModel, WeierstrassModel, TERNARY_COEFF_NAMES,
};
use crate::poly::SparsePolynomial;
use crate::rational::Rational;
use crate::ternary_tables::{TERNARY_C4, TERNARY_C6};

/// The weight-4, weight-6 and weight-12 invariants of a model, with
/// delta = (c4^3 - c6^2)/1728 holding exactly by construction.
#[derive(Clone, PartialEq, Debug)]
pub struct InvariantTriple {
    pub c4: Rational,
    pub c6: Rational,
    pub delta: Rational,
}

impl InvariantTriple {
    pub fn from_c4_c6(c4: Rational, c6: Rational) -> Self {
        let delta = (&(&c4 * &c4) * &c4 - &c6 * &c6) / Rational::from_integer(1728);
        InvariantTriple { c4, c6, delta }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairKind {
    /// the classical binary quartic invariants i (degree 2) and j (degree 3)
    IJ,
    /// the ternary cubic invariants S (degree 4) and T (degree 6)
    ST,
}

/// A pair of classical invariants, (i, j) or (S, T).
#[derive(Clone, PartialEq, Debug)]
pub struct ClassicalPair {
    pub first: Rational,
    pub second: Rational,
    pub kind: PairKind,
}

/// b2, b4, b6 and the invariant triple of a Weierstrass model:
/// b2 = a1^2 + 4 a2, b4 = 2 a4 + a1 a3, b6 = a3^2 + 4 a6,
/// c4 = b2^2 - 24 b4, c6 = -b2^3 + 36 b2 b4 - 216 b6.
pub fn weierstrass_invariants(
    w: &WeierstrassModel<Rational>,
) -> (Rational, Rational, Rational, InvariantTriple) {
    let four = Rational::from_integer(4);
    let b2 = &(&w.a1 * &w.a1) + &(&four * &w.a2);
    let b4 = &(&Rational::from_integer(2) * &w.a4) + &(&w.a1 * &w.a3);
    let b6 = &(&w.a3 * &w.a3) + &(&four * &w.a6);
    let c4 = &(&b2 * &b2) - &(&Rational::from_integer(24) * &b4);
    let c6 = -&(&(&b2 * &b2) * &b2)
        + &(&(&Rational::from_integer(36) * &b2) * &b4)
        - &(&Rational::from_integer(216) * &b6);
    let triple = InvariantTriple::from_c4_c6(c4, c6);
    (b2, b4, b6, triple)
}

/// The classical invariants of a binary quartic a..e:
/// i = (12ae - 3bd + c^2)/12, j = (72ace - 27ad^2 - 27b^2e + 9bcd - 2c^3)/432.
pub fn quartic_ij(q: &[Rational; 5]) -> ClassicalPair {
    let [a, b, c, d, e] = q;
    let i = (&(&Rational::from_integer(12) * &(a * e)) - &(&Rational::from_integer(3) * &(b * d))
        + &(c * c))
        / Rational::from_integer(12);
    let j = (&(&(&Rational::from_integer(72) * &(a * c)) * e)
        - &(&(&Rational::from_integer(27) * a) * &(d * d))
        - &(&(&Rational::from_integer(27) * &(b * b)) * e)
        + &(&(&(&Rational::from_integer(9) * b) * c) * d)
        - &(&(&Rational::from_integer(2) * &(c * c)) * c))
        / Rational::from_integer(432);
    ClassicalPair { first: i, second: j, kind: PairKind::IJ }
}

fn eval_table(table: &[([u8; 10], i64)], coeffs: &[Rational; 10]) -> Rational {
    let mut acc = Rational::zero();
    for (exps, c) in table {
        let mut t = Rational::from_integer(*c);
        for (x, &e) in coeffs.iter().zip(exps) {
            for _ in 0..e {
                t *= x;
            }
        }
        acc += &t;
    }
    acc
}

/// The normalized weight-4 invariant of a ternary cubic, -2^4 3^4 S.
pub fn ternary_c4(t: &TernaryCubicModel<Rational>) -> Rational {
    eval_table(TERNARY_C4, &t.coeffs)
}

/// The normalized weight-6 invariant of a ternary cubic, 2^3 3^6 T.
pub fn ternary_c6(t: &TernaryCubicModel<Rational>) -> Rational {
    eval_table(TERNARY_C6, &t.coeffs)
}

/// The classical ternary cubic invariants, normalized so that
/// c4 = -2^4 3^4 S and c6 = 2^3 3^6 T.
pub fn aronhold_st(t: &TernaryCubicModel<Rational>) -> ClassicalPair {
    let s = ternary_c4(t) / Rational::from_integer(-1296);
    let tt = ternary_c6(t) / Rational::from_integer(5832);
    ClassicalPair { first: s, second: tt, kind: PairKind::ST }
}

/// The fully expanded c4 and c6 invariants of the generic ternary cubic,
/// as polynomials in the ten coefficients.
pub fn ternary_invariant_polynomials() -> (SparsePolynomial<Rational>, SparsePolynomial<Rational>) {
    let expand = |table: &[([u8; 10], i64)]| {
        SparsePolynomial::from_terms(
            &TERNARY_COEFF_NAMES,
            table.iter().map(|(e, c)| {
                (
                    e.iter().map(|&x| x as u32).collect(),
                    Rational::from_integer(*c),
                )
            }),
        )
    };
    (expand(TERNARY_C4), expand(TERNARY_C6))
}

/// The normalized invariants of a model of degree 1-4.
///
/// Degree 2 completes the square and scales (i, j) of the quartic by
/// (2^6*3, 2^9*3^3); degree 3 evaluates the cubic invariant tables;
/// degree 4 scales (i, j) of the Gram pencil quartic by (2^10*3, 2^15*3^3).
pub fn invariants_of_model(m: &GenusOneModel<Rational>) -> Result<InvariantTriple> {
    match m {
        GenusOneModel::Weierstrass(w) => Ok(weierstrass_invariants(w).3),
        GenusOneModel::BinaryQuartic(b) => {
            let done = complete_square(b);
            let ij = quartic_ij(&done.quartic);
            Ok(InvariantTriple::from_c4_c6(
                Rational::from_integer(192) * ij.first,
                Rational::from_integer(13824) * ij.second,
            ))
        }
        GenusOneModel::TernaryCubic(t) => {
            Ok(InvariantTriple::from_c4_c6(ternary_c4(t), ternary_c6(t)))
        }
        GenusOneModel::QuadricPair(q) => {
            let pencil = gram_pencil_quartic(q);
            let ij = quartic_ij(&quartic_from_polynomial(&pencil)?);
            Ok(InvariantTriple::from_c4_c6(
                Rational::from_integer(3072) * ij.first,
                Rational::from_integer(884736) * ij.second,
            ))
        }
        GenusOneModel::Pfaffian(_) => Err(Error::UnsupportedDegree(5)),
    }
}

/// c4 = 2^6*3*g2, c6 = 2^9*3^3*g3 for y^2 = 4x^3 - g2 x - g3; then
/// delta = 2^12 (g2^3 - 27 g3^2).
pub fn short_weierstrass_invariants(w: &ShortWeierstrass) -> InvariantTriple {
    InvariantTriple::from_c4_c6(
        Rational::from_integer(192) * w.g2.clone(),
        Rational::from_integer(13824) * w.g3.clone(),
    )
}
