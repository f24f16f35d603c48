//! Genus one models of degrees 1 through 5, their file format, and the
//! structural operations on them: completing the square, Gram pencils,
//! Pfaffian quadric extraction, homogenization and mod-p reduction.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::finite_field::{reduce_rational, PrimeFieldElement};
use crate::poly::{Coeff, PolyMatrix, SparsePolynomial};
use crate::rational::Rational;

pub const TERNARY_COEFF_NAMES: [&str; 10] =
    ["a", "b", "c", "a2", "a3", "b1", "b3", "c1", "c2", "m"];

/// y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6
#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassModel<C: Coeff = Rational> {
    pub a1: C,
    pub a2: C,
    pub a3: C,
    pub a4: C,
    pub a6: C,
}

/// y^2 + (alpha0*x^2 + alpha1*x*z + alpha2*z^2)*y = a*x^4 + ... + e*z^4
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryQuarticModel<C: Coeff = Rational> {
    /// alpha0, alpha1, alpha2: coefficients of the quadratic p(x, z)
    pub alpha: [C; 3],
    /// a, b, c, d, e: coefficients of the quartic q(x, z)
    pub quartic: [C; 5],
}

/// a*x^3 + b*y^3 + c*z^3 + a2*x^2*y + a3*x^2*z + b1*x*y^2 + b3*y^2*z
/// + c1*x*z^2 + c2*y*z^2 + m*x*y*z
#[derive(Clone, PartialEq, Debug)]
pub struct TernaryCubicModel<C: Coeff = Rational> {
    /// in the order a, b, c, a2, a3, b1, b3, c1, c2, m
    pub coeffs: [C; 10],
}

/// A pair of quadrics in four variables, stored as symmetric Gram matrices
/// with off-diagonal entries half the mixed coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadricPairModel<C: Coeff = Rational> {
    pub a: Vec<Vec<C>>,
    pub b: Vec<Vec<C>>,
}

/// A 5x5 alternating matrix of linear forms in x0..x4.
#[derive(Clone, PartialEq, Debug)]
pub struct PfaffianModel<C: Coeff = Rational> {
    pub matrix: PolyMatrix<C>,
}

/// y^2 = 4x^3 - g2*x - g3
#[derive(Clone, PartialEq, Debug)]
pub struct ShortWeierstrass {
    pub g2: Rational,
    pub g3: Rational,
}

#[derive(Clone, PartialEq, Debug)]
pub enum GenusOneModel<C: Coeff = Rational> {
    Weierstrass(WeierstrassModel<C>),
    BinaryQuartic(BinaryQuarticModel<C>),
    TernaryCubic(TernaryCubicModel<C>),
    QuadricPair(QuadricPairModel<C>),
    Pfaffian(PfaffianModel<C>),
}

impl<C: Coeff> GenusOneModel<C> {
    pub fn degree(&self) -> u8 {
        match self {
            GenusOneModel::Weierstrass(_) => 1,
            GenusOneModel::BinaryQuartic(_) => 2,
            GenusOneModel::TernaryCubic(_) => 3,
            GenusOneModel::QuadricPair(_) => 4,
            GenusOneModel::Pfaffian(_) => 5,
        }
    }
}

impl<C: Coeff> QuadricPairModel<C> {
    pub fn new(a: Vec<Vec<C>>, b: Vec<Vec<C>>) -> Result<Self> {
        for m in [&a, &b] {
            if m.len() != 4 || m.iter().any(|r| r.len() != 4) {
                return Err(Error::BadModelFile("Gram matrix must be 4x4".into()));
            }
        }
        for (which, m) in [&a, &b].into_iter().enumerate() {
            for i in 0..4 {
                for j in i + 1..4 {
                    if m[i][j] != m[j][i] {
                        let _ = which;
                        return Err(Error::NotSymmetric(i, j));
                    }
                }
            }
        }
        Ok(QuadricPairModel { a, b })
    }
}

impl<C: Coeff> PfaffianModel<C> {
    pub fn new(matrix: PolyMatrix<C>) -> Result<Self> {
        if matrix.rows() != 5 || matrix.cols() != 5 {
            return Err(Error::BadModelFile("Pfaffian matrix must be 5x5".into()));
        }
        for i in 0..5 {
            if !matrix.entry(i, i).is_zero() {
                return Err(Error::NotAlternating(i, i));
            }
            for j in i + 1..5 {
                if matrix.entry(i, j).neg() != *matrix.entry(j, i) {
                    return Err(Error::NotAlternating(i, j));
                }
                let e = matrix.entry(i, j);
                if !e.is_zero() && e.terms().any(|(exps, _)| exps.iter().sum::<u32>() != 1) {
                    return Err(Error::NotLinear(i, j));
                }
            }
        }
        Ok(PfaffianModel { matrix })
    }
}

impl WeierstrassModel<Rational> {
    pub fn zero() -> Self {
        WeierstrassModel {
            a1: Rational::zero(),
            a2: Rational::zero(),
            a3: Rational::zero(),
            a4: Rational::zero(),
            a6: Rational::zero(),
        }
    }

    pub fn from_slice(c: &[Rational; 5]) -> Self {
        WeierstrassModel {
            a1: c[0].clone(),
            a2: c[1].clone(),
            a3: c[2].clone(),
            a4: c[3].clone(),
            a6: c[4].clone(),
        }
    }
}

impl BinaryQuarticModel<Rational> {
    /// p(x, z) = alpha0*x^2 + alpha1*x*z + alpha2*z^2
    pub fn p_polynomial(&self) -> SparsePolynomial<Rational> {
        SparsePolynomial::from_terms(
            &["x", "z"],
            [
                (vec![2, 0], self.alpha[0].clone()),
                (vec![1, 1], self.alpha[1].clone()),
                (vec![0, 2], self.alpha[2].clone()),
            ],
        )
    }

    /// q(x, z) = a*x^4 + b*x^3*z + c*x^2*z^2 + d*x*z^3 + e*z^4
    pub fn q_polynomial(&self) -> SparsePolynomial<Rational> {
        quartic_to_polynomial(&self.quartic)
    }

    pub fn is_completed_square(&self) -> bool {
        self.alpha.iter().all(|a| a.is_zero())
    }
}

pub fn quartic_to_polynomial(q: &[Rational; 5]) -> SparsePolynomial<Rational> {
    SparsePolynomial::from_terms(
        &["x", "z"],
        (0..5).map(|i| (vec![(4 - i) as u32, i as u32], q[i].clone())),
    )
}

pub fn quartic_from_polynomial(p: &SparsePolynomial<Rational>) -> Result<[Rational; 5]> {
    let mut out = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    for (e, c) in p.terms() {
        if e.len() != 2 || e[0] + e[1] != 4 {
            return Err(Error::Internal(format!(
                "not a binary quartic monomial: {e:?}"
            )));
        }
        out[e[1] as usize] = c.clone();
    }
    Ok(out)
}

impl TernaryCubicModel<Rational> {
    pub fn polynomial(&self) -> SparsePolynomial<Rational> {
        let exps: [[u32; 3]; 10] = [
            [3, 0, 0],
            [0, 3, 0],
            [0, 0, 3],
            [2, 1, 0],
            [2, 0, 1],
            [1, 2, 0],
            [0, 2, 1],
            [1, 0, 2],
            [0, 1, 2],
            [1, 1, 1],
        ];
        SparsePolynomial::from_terms(
            &["x", "y", "z"],
            exps.iter()
                .zip(&self.coeffs)
                .map(|(e, c)| (e.to_vec(), c.clone())),
        )
    }

    pub fn from_polynomial(p: &SparsePolynomial<Rational>) -> Result<Self> {
        let exps: [[u32; 3]; 10] = [
            [3, 0, 0],
            [0, 3, 0],
            [0, 0, 3],
            [2, 1, 0],
            [2, 0, 1],
            [1, 2, 0],
            [0, 2, 1],
            [1, 0, 2],
            [0, 1, 2],
            [1, 1, 1],
        ];
        let mut coeffs: [Rational; 10] = Default::default();
        'outer: for (e, c) in p.terms() {
            for (i, known) in exps.iter().enumerate() {
                if e == known {
                    coeffs[i] = c.clone();
                    continue 'outer;
                }
            }
            return Err(Error::Internal(format!("not a ternary cubic monomial: {e:?}")));
        }
        Ok(TernaryCubicModel { coeffs })
    }
}

impl QuadricPairModel<Rational> {
    /// Build Gram matrices from two quadric polynomials in x0..x3; mixed
    /// coefficients are halved.
    pub fn from_quadrics(
        q1: &SparsePolynomial<Rational>,
        q2: &SparsePolynomial<Rational>,
    ) -> Result<Self> {
        let gram = |q: &SparsePolynomial<Rational>| -> Result<Vec<Vec<Rational>>> {
            let mut m = vec![vec![Rational::zero(); 4]; 4];
            let half = Rational::ratio(1, 2);
            for (e, c) in q.terms() {
                if e.len() != 4 || e.iter().sum::<u32>() != 2 {
                    return Err(Error::Internal(format!("not a quadric monomial: {e:?}")));
                }
                let idx: Vec<usize> = (0..4).filter(|&i| e[i] > 0).collect();
                if idx.len() == 1 {
                    m[idx[0]][idx[0]] = c.clone();
                } else {
                    let v = c * &half;
                    m[idx[0]][idx[1]] = v.clone();
                    m[idx[1]][idx[0]] = v;
                }
            }
            Ok(m)
        };
        QuadricPairModel::new(gram(q1)?, gram(q2)?)
    }

    /// The quadric polynomial x A x^T for Gram matrix `which` (0 or 1).
    pub fn quadric_polynomial(&self, which: usize) -> SparsePolynomial<Rational> {
        let m = if which == 0 { &self.a } else { &self.b };
        let vars = ["x0", "x1", "x2", "x3"];
        let mut p = SparsePolynomial::zero(&vars);
        for i in 0..4 {
            for j in 0..4 {
                let mut e = vec![0u32; 4];
                e[i] += 1;
                e[j] += 1;
                p = p.add(&SparsePolynomial::monomial(&vars, &e, m[i][j].clone()));
            }
        }
        p
    }
}

/// Completing the square: eliminate the linear-in-y term; the resulting
/// quartic is h = p^2/4 + q. Invariants are unchanged.
pub fn complete_square(m: &BinaryQuarticModel<Rational>) -> BinaryQuarticModel<Rational> {
    let p = m.p_polynomial();
    let quarter = Rational::ratio(1, 4);
    let h = p.mul(&p).scale(&quarter).add(&m.q_polynomial());
    let quartic = quartic_from_polynomial(&h).expect("p^2/4 + q is a binary quartic");
    BinaryQuarticModel {
        alpha: [Rational::zero(), Rational::zero(), Rational::zero()],
        quartic,
    }
}

/// det(xA + zB), the binary quartic attached to a pair of quadrics.
pub fn gram_pencil_quartic(m: &QuadricPairModel<Rational>) -> SparsePolynomial<Rational> {
    let vars = ["x", "z"];
    let mut entries = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            entries.push(SparsePolynomial::from_terms(
                &vars,
                [
                    (vec![1, 0], m.a[i][j].clone()),
                    (vec![0, 1], m.b[i][j].clone()),
                ],
            ));
        }
    }
    PolyMatrix::new(4, 4, entries)
        .determinant()
        .expect("4x4 determinant")
}

/// Pfaffian of a 4x4 alternating polynomial matrix:
/// m01*m23 - m02*m13 + m03*m12.
fn pfaffian4<C: Coeff>(m: &PolyMatrix<C>) -> SparsePolynomial<C> {
    m.entry(0, 1)
        .mul(m.entry(2, 3))
        .sub(&m.entry(0, 2).mul(m.entry(1, 3)))
        .add(&m.entry(0, 3).mul(m.entry(1, 2)))
}

/// The five quadrics q_i = (-1)^i * Pf(M with row and column i deleted).
pub fn pfaffian_quadrics<C: Coeff>(m: &PfaffianModel<C>) -> [SparsePolynomial<C>; 5] {
    let mut out = Vec::with_capacity(5);
    for i in 0..5 {
        let sub = m.matrix.minor(i, i);
        let pf = pfaffian4(&sub);
        out.push(if i % 2 == 0 { pf } else { pf.neg() });
    }
    out.try_into().expect("five Pfaffians")
}

/// Homogenize a Weierstrass model into the ternary cubic
/// y^2 z + a1 xyz + a3 yz^2 - x^3 - a2 x^2 z - a4 x z^2 - a6 z^3.
pub fn homogenize_weierstrass(w: &WeierstrassModel<Rational>) -> TernaryCubicModel<Rational> {
    TernaryCubicModel {
        coeffs: [
            Rational::from_integer(-1), // a  (x^3)
            Rational::zero(),           // b  (y^3)
            -&w.a6,                     // c  (z^3)
            Rational::zero(),           // a2 (x^2 y)
            -&w.a2,                     // a3 (x^2 z)
            Rational::zero(),           // b1 (x y^2)
            Rational::one(),            // b3 (y^2 z)
            -&w.a4,                     // c1 (x z^2)
            w.a3.clone(),               // c2 (y z^2)
            w.a1.clone(),               // m  (x y z)
        ],
    }
}

/// Coefficientwise reduction mod p; fails when p divides any denominator,
/// naming the offending coefficient.
pub fn reduce_mod_p(
    m: &GenusOneModel<Rational>,
    p: u64,
) -> Result<GenusOneModel<PrimeFieldElement>> {
    let red = |r: &Rational, name: &str| reduce_rational(r, p, name);
    Ok(match m {
        GenusOneModel::Weierstrass(w) => GenusOneModel::Weierstrass(WeierstrassModel {
            a1: red(&w.a1, "a1")?,
            a2: red(&w.a2, "a2")?,
            a3: red(&w.a3, "a3")?,
            a4: red(&w.a4, "a4")?,
            a6: red(&w.a6, "a6")?,
        }),
        GenusOneModel::BinaryQuartic(b) => {
            let names_a = ["alpha0", "alpha1", "alpha2"];
            let names_q = ["a", "b", "c", "d", "e"];
            let mut alpha = Vec::new();
            for (r, n) in b.alpha.iter().zip(names_a) {
                alpha.push(red(r, n)?);
            }
            let mut quartic = Vec::new();
            for (r, n) in b.quartic.iter().zip(names_q) {
                quartic.push(red(r, n)?);
            }
            GenusOneModel::BinaryQuartic(BinaryQuarticModel {
                alpha: alpha.try_into().unwrap(),
                quartic: quartic.try_into().unwrap(),
            })
        }
        GenusOneModel::TernaryCubic(t) => {
            let mut coeffs = Vec::new();
            for (r, n) in t.coeffs.iter().zip(TERNARY_COEFF_NAMES) {
                coeffs.push(red(r, n)?);
            }
            GenusOneModel::TernaryCubic(TernaryCubicModel {
                coeffs: coeffs.try_into().unwrap(),
            })
        }
        GenusOneModel::QuadricPair(q) => {
            let redm = |m: &Vec<Vec<Rational>>, tag: &str| -> Result<Vec<Vec<PrimeFieldElement>>> {
                let mut out = Vec::new();
                for (i, row) in m.iter().enumerate() {
                    let mut r = Vec::new();
                    for (j, c) in row.iter().enumerate() {
                        r.push(red(c, &format!("{tag}[{i}][{j}]"))?);
                    }
                    out.push(r);
                }
                Ok(out)
            };
            GenusOneModel::QuadricPair(QuadricPairModel {
                a: redm(&q.a, "q1")?,
                b: redm(&q.b, "q2")?,
            })
        }
        GenusOneModel::Pfaffian(pf) => {
            let mut entries = Vec::with_capacity(25);
            for i in 0..5 {
                for j in 0..5 {
                    entries.push(
                        pf.matrix
                            .entry(i, j)
                            .map_coeffs(|c| red(c, &format!("matrix[{i}][{j}]")))?,
                    );
                }
            }
            GenusOneModel::Pfaffian(PfaffianModel {
                matrix: PolyMatrix::new(5, 5, entries),
            })
        }
    })
}

// ---------------------------------------------------------------------------
// model file format
// ---------------------------------------------------------------------------

const PFAFFIAN_VARS: [&str; 5] = ["x0", "x1", "x2", "x3", "x4"];

fn get_coeff(obj: &serde_json::Map<String, Value>, key: &str) -> Result<Rational> {
    let v = obj
        .get(key)
        .ok_or_else(|| Error::BadModelFile(format!("missing coefficient `{key}`")))?;
    let s = v
        .as_str()
        .ok_or_else(|| Error::BadModelFile(format!("coefficient `{key}` must be a string")))?;
    s.parse()
        .map_err(|e| Error::BadModelFile(format!("coefficient `{key}`: {e}")))
}

fn check_keys(obj: &serde_json::Map<String, Value>, allowed: &[&str]) -> Result<()> {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::BadModelFile(format!("unexpected coefficient `{k}`")));
        }
    }
    Ok(())
}

fn parse_rational_matrix(v: &Value, key: &str, n: usize) -> Result<Vec<Vec<Rational>>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::BadModelFile(format!("`{key}` must be a {n}x{n} array")))?;
    if rows.len() != n {
        return Err(Error::BadModelFile(format!("`{key}` must have {n} rows")));
    }
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::BadModelFile(format!("`{key}` row {i} must be an array")))?;
        if row.len() != n {
            return Err(Error::BadModelFile(format!("`{key}` row {i} must have {n} entries")));
        }
        let mut r = Vec::new();
        for (j, c) in row.iter().enumerate() {
            let s = c.as_str().ok_or_else(|| {
                Error::BadModelFile(format!("`{key}`[{i}][{j}] must be a string"))
            })?;
            r.push(
                s.parse()
                    .map_err(|e| Error::BadModelFile(format!("`{key}`[{i}][{j}]: {e}")))?,
            );
        }
        out.push(r);
    }
    Ok(out)
}

/// Parse a model file (JSON, rationals as strings).
pub fn parse_model(text: &str) -> Result<GenusOneModel<Rational>> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::BadModelFile(format!("invalid JSON: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::BadModelFile("top level must be an object".into()))?;
    let degree = obj
        .get("degree")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| Error::BadModelFile("missing integer `degree`".into()))?;
    let coeffs = obj
        .get("coefficients")
        .and_then(|c| c.as_object())
        .ok_or_else(|| Error::BadModelFile("missing object `coefficients`".into()))?;
    match degree {
        1 => {
            let keys = ["a1", "a2", "a3", "a4", "a6"];
            check_keys(coeffs, &keys)?;
            Ok(GenusOneModel::Weierstrass(WeierstrassModel {
                a1: get_coeff(coeffs, "a1")?,
                a2: get_coeff(coeffs, "a2")?,
                a3: get_coeff(coeffs, "a3")?,
                a4: get_coeff(coeffs, "a4")?,
                a6: get_coeff(coeffs, "a6")?,
            }))
        }
        2 => {
            let keys = ["alpha0", "alpha1", "alpha2", "a", "b", "c", "d", "e"];
            check_keys(coeffs, &keys)?;
            let mut vals = Vec::new();
            for k in keys {
                vals.push(get_coeff(coeffs, k)?);
            }
            Ok(GenusOneModel::BinaryQuartic(BinaryQuarticModel {
                alpha: [vals[0].clone(), vals[1].clone(), vals[2].clone()],
                quartic: vals[3..8].to_vec().try_into().unwrap(),
            }))
        }
        3 => {
            check_keys(coeffs, &TERNARY_COEFF_NAMES)?;
            let mut vals = Vec::new();
            for k in TERNARY_COEFF_NAMES {
                vals.push(get_coeff(coeffs, k)?);
            }
            Ok(GenusOneModel::TernaryCubic(TernaryCubicModel {
                coeffs: vals.try_into().unwrap(),
            }))
        }
        4 => {
            check_keys(coeffs, &["q1", "q2"])?;
            let a = parse_rational_matrix(
                coeffs
                    .get("q1")
                    .ok_or_else(|| Error::BadModelFile("missing `q1`".into()))?,
                "q1",
                4,
            )?;
            let b = parse_rational_matrix(
                coeffs
                    .get("q2")
                    .ok_or_else(|| Error::BadModelFile("missing `q2`".into()))?,
                "q2",
                4,
            )?;
            Ok(GenusOneModel::QuadricPair(QuadricPairModel::new(a, b)?))
        }
        5 => {
            check_keys(coeffs, &["matrix"])?;
            let rows = coeffs
                .get("matrix")
                .and_then(|m| m.as_array())
                .ok_or_else(|| Error::BadModelFile("missing 5x5 array `matrix`".into()))?;
            if rows.len() != 5 {
                return Err(Error::BadModelFile("`matrix` must have 5 rows".into()));
            }
            let mut entries = Vec::with_capacity(25);
            for (i, row) in rows.iter().enumerate() {
                let row = row
                    .as_array()
                    .ok_or_else(|| Error::BadModelFile(format!("`matrix` row {i} must be an array")))?;
                if row.len() != 5 {
                    return Err(Error::BadModelFile(format!("`matrix` row {i} must have 5 entries")));
                }
                for (j, cell) in row.iter().enumerate() {
                    let s = cell.as_str().ok_or_else(|| {
                        Error::BadModelFile(format!("`matrix`[{i}][{j}] must be a string"))
                    })?;
                    entries.push(
                        SparsePolynomial::parse(&PFAFFIAN_VARS, s).map_err(|e| {
                            Error::BadModelFile(format!("`matrix`[{i}][{j}]: {e}"))
                        })?,
                    );
                }
            }
            Ok(GenusOneModel::Pfaffian(PfaffianModel::new(PolyMatrix::new(
                5, 5, entries,
            ))?))
        }
        d => Err(Error::BadModelFile(format!("unsupported degree {d}"))),
    }
}

/// Canonical serialization: UTF-8 JSON with fixed key order.
pub fn serialize_model(m: &GenusOneModel<Rational>) -> String {
    fn kv(pairs: &[(&str, String)]) -> String {
        pairs
            .iter()
            .map(|(k, v)| format!("\"{k}\": \"{v}\""))
            .collect::<Vec<_>>()
            .join(", ")
    }
    fn matrix_json<T: ToString>(rows: &[Vec<T>]) -> String {
        let rows: Vec<String> = rows
            .iter()
            .map(|r| {
                let cells: Vec<String> =
                    r.iter().map(|c| format!("\"{}\"", c.to_string())).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
    match m {
        GenusOneModel::Weierstrass(w) => format!(
            "{{\"degree\": 1, \"coefficients\": {{{}}}}}",
            kv(&[
                ("a1", w.a1.to_string()),
                ("a2", w.a2.to_string()),
                ("a3", w.a3.to_string()),
                ("a4", w.a4.to_string()),
                ("a6", w.a6.to_string()),
            ])
        ),
        GenusOneModel::BinaryQuartic(b) => format!(
            "{{\"degree\": 2, \"coefficients\": {{{}}}}}",
            kv(&[
                ("alpha0", b.alpha[0].to_string()),
                ("alpha1", b.alpha[1].to_string()),
                ("alpha2", b.alpha[2].to_string()),
                ("a", b.quartic[0].to_string()),
                ("b", b.quartic[1].to_string()),
                ("c", b.quartic[2].to_string()),
                ("d", b.quartic[3].to_string()),
                ("e", b.quartic[4].to_string()),
            ])
        ),
        GenusOneModel::TernaryCubic(t) => {
            let pairs: Vec<(&str, String)> = TERNARY_COEFF_NAMES
                .iter()
                .zip(&t.coeffs)
                .map(|(k, c)| (*k, c.to_string()))
                .collect();
            format!("{{\"degree\": 3, \"coefficients\": {{{}}}}}", kv(&pairs))
        }
        GenusOneModel::QuadricPair(q) => format!(
            "{{\"degree\": 4, \"coefficients\": {{\"q1\": {}, \"q2\": {}}}}}",
            matrix_json(&q.a),
            matrix_json(&q.b)
        ),
        GenusOneModel::Pfaffian(p) => {
            let rows: Vec<Vec<String>> = (0..5)
                .map(|i| (0..5).map(|j| p.matrix.entry(i, j).to_string()).collect())
                .collect();
            format!(
                "{{\"degree\": 5, \"coefficients\": {{\"matrix\": {}}}}}",
                matrix_json(&rows)
            )
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn degree2_anchor() -> BinaryQuarticModel<Rational> {
        // y^2 + y*z^2 = x^4 + x^3*z + x^2*z^2
        BinaryQuarticModel {
            alpha: [Rational::zero(), Rational::zero(), Rational::one()],
            quartic: [
                Rational::one(),
                Rational::one(),
                Rational::one(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    #[test]
    fn parse_degree2_anchor_model() {
        let text = r#"{"degree": 2, "coefficients": {"alpha0": "0", "alpha1": "0", "alpha2": "1",
            "a": "1", "b": "1", "c": "1", "d": "0", "e": "0"}}"#;
        let m = parse_model(text).unwrap();
        assert_eq!(m, GenusOneModel::BinaryQuartic(degree2_anchor()));
    }

    #[test]
    fn parse_zero_weierstrass() {
        let text = r#"{"degree": 1, "coefficients": {"a1": "0", "a2": "0", "a3": "0", "a4": "0", "a6": "0"}}"#;
        assert_eq!(
            parse_model(text).unwrap(),
            GenusOneModel::Weierstrass(WeierstrassModel::zero())
        );
    }

    #[test]
    fn parse_rejects_asymmetric_gram() {
        let text = r#"{"degree": 4, "coefficients": {
            "q1": [["0","1","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
            "q2": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}}"#;
        assert!(matches!(parse_model(text), Err(Error::NotSymmetric(0, 1))));
    }

    #[test]
    fn parse_rejects_wrong_coefficient_count() {
        let text = r#"{"degree": 1, "coefficients": {"a1": "0", "a2": "0"}}"#;
        assert!(matches!(parse_model(text), Err(Error::BadModelFile(_))));
        let text = r#"{"degree": 1, "coefficients": {"a1": "0", "a2": "0", "a3": "0", "a4": "0", "a6": "0", "a8": "1"}}"#;
        assert!(matches!(parse_model(text), Err(Error::BadModelFile(_))));
    }

    #[test]
    fn parse_rejects_malformed_rational() {
        let text = r#"{"degree": 1, "coefficients": {"a1": "1/0", "a2": "0", "a3": "0", "a4": "0", "a6": "0"}}"#;
        assert!(parse_model(text).is_err());
    }

    #[test]
    fn complete_square_anchor() {
        let m = degree2_anchor();
        let done = complete_square(&m);
        // h = (z^2)^2/4 + q = x^4 + x^3 z + x^2 z^2 + z^4/4
        assert_eq!(
            done.q_polynomial().to_string(),
            "x^4 + x^3*z + x^2*z^2 + 1/4*z^4"
        );
        // idempotent on completed models
        assert_eq!(complete_square(&done), done);
    }

    #[test]
    fn complete_square_pure_p() {
        // y^2 + x^2 y = 0  ->  y^2 = x^4/4
        let m = BinaryQuarticModel {
            alpha: [Rational::one(), Rational::zero(), Rational::zero()],
            quartic: [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ],
        };
        assert_eq!(complete_square(&m).q_polynomial().to_string(), "1/4*x^4");
    }

    pub(crate) fn pair1() -> QuadricPairModel<Rational> {
        let vars = ["x0", "x1", "x2", "x3"];
        let q1 = SparsePolynomial::parse(&vars, "x0*x1 + x0*x2 + x2*x3").unwrap();
        let q2 = SparsePolynomial::parse(&vars, "x0*x3 + x1*x2 + x1*x3").unwrap();
        QuadricPairModel::from_quadrics(&q1, &q2).unwrap()
    }

    pub(crate) fn pair2() -> QuadricPairModel<Rational> {
        let vars = ["x0", "x1", "x2", "x3"];
        let q1 = SparsePolynomial::parse(&vars, "x0^2 + x1^2 + x2^2 + 3*x3^2").unwrap();
        let q2 = SparsePolynomial::parse(&vars, "x0^2 + 2*x1^2 + 3*x2^2 + 5*x3^2").unwrap();
        QuadricPairModel::from_quadrics(&q1, &q2).unwrap()
    }

    #[test]
    fn pencil_quartic_pair1() {
        let q = gram_pencil_quartic(&pair1());
        assert_eq!(
            q.to_string(),
            "1/16*x^4 - 1/8*x^3*z - 1/16*x^2*z^2 - 1/8*x*z^3 + 1/16*z^4"
        );
    }

    #[test]
    fn pencil_quartic_pair2() {
        let q = gram_pencil_quartic(&pair2());
        assert_eq!(
            q.to_string(),
            "3*x^4 + 23*x^3*z + 63*x^2*z^2 + 73*x*z^3 + 30*z^4"
        );
    }

    #[test]
    fn pencil_quartic_identity_pair() {
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let m = QuadricPairModel::new(id.clone(), id).unwrap();
        let q = gram_pencil_quartic(&m);
        // (x + z)^4
        assert_eq!(q.to_string(), "x^4 + 4*x^3*z + 6*x^2*z^2 + 4*x*z^3 + z^4");
    }

    #[test]
    fn pencil_congruence_covariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(31);
        'outer: for _ in 0..100 {
            let base = pair1();
            let n: Vec<Vec<Rational>> = (0..4)
                .map(|_| {
                    (0..4)
                        .map(|_| Rational::from_integer(rng.gen_range(-2..3)))
                        .collect()
                })
                .collect();
            // det(N) as a 4x4 rational determinant via the poly machinery
            let vars = ["t"];
            let entries: Vec<_> = n
                .iter()
                .flatten()
                .map(|c| SparsePolynomial::constant(&vars, c.clone()))
                .collect();
            let detn = PolyMatrix::new(4, 4, entries)
                .determinant()
                .unwrap()
                .evaluate(&[Rational::zero()])
                .unwrap();
            if detn.is_zero() {
                continue 'outer;
            }
            // A -> N^T A N
            let congr = |m: &Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
                let mut out = vec![vec![Rational::zero(); 4]; 4];
                for i in 0..4 {
                    for j in 0..4 {
                        for k in 0..4 {
                            for l in 0..4 {
                                out[i][j] += &(&(&n[k][i] * &m[k][l]) * &n[l][j]);
                            }
                        }
                    }
                }
                out
            };
            let moved = QuadricPairModel::new(congr(&base.a), congr(&base.b)).unwrap();
            let lhs = gram_pencil_quartic(&moved);
            let rhs = gram_pencil_quartic(&base).scale(&(&detn * &detn));
            assert_eq!(lhs, rhs);
        }
    }

    fn linear(vars: &[&str], s: &str) -> SparsePolynomial<Rational> {
        SparsePolynomial::parse(vars, s).unwrap()
    }

    fn alternating_from_upper(
        upper: &[((usize, usize), SparsePolynomial<Rational>)],
    ) -> PfaffianModel<Rational> {
        let vars = PFAFFIAN_VARS;
        let zero = SparsePolynomial::<Rational>::zero(&vars);
        let mut entries = vec![zero; 25];
        for ((i, j), f) in upper {
            entries[i * 5 + j] = f.clone();
            entries[j * 5 + i] = f.neg();
        }
        PfaffianModel::new(PolyMatrix::new(5, 5, entries)).unwrap()
    }

    #[test]
    fn pfaffian_quadrics_examples() {
        let vars = PFAFFIAN_VARS;
        let m = alternating_from_upper(&[
            ((0, 1), linear(&vars, "x0")),
            ((2, 3), linear(&vars, "x1")),
        ]);
        let qs = pfaffian_quadrics(&m);
        for q in &qs[0..4] {
            assert!(q.is_zero());
        }
        assert_eq!(qs[4].to_string(), "x0*x1");

        // zero matrix
        let z = alternating_from_upper(&[]);
        assert!(pfaffian_quadrics(&z).iter().all(|q| q.is_zero()));

        // a single entry never yields two disjoint pairs
        let single = alternating_from_upper(&[((0, 1), linear(&vars, "x2"))]);
        assert!(pfaffian_quadrics(&single).iter().all(|q| q.is_zero()));
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(32);
        let vars = ["t"];
        for _ in 0..100 {
            let vals: Vec<Rational> = (0..6)
                .map(|_| Rational::from_integer(rng.gen_range(-9..10)))
                .collect();
            let mut entries =
                vec![SparsePolynomial::<Rational>::zero(&vars); 16];
            let upper = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for ((i, j), v) in upper.iter().zip(&vals) {
                entries[i * 4 + j] = SparsePolynomial::constant(&vars, v.clone());
                entries[j * 4 + i] = SparsePolynomial::constant(&vars, -v);
            }
            let m = PolyMatrix::new(4, 4, entries);
            let pf = pfaffian4(&m);
            assert_eq!(pf.mul(&pf), m.determinant().unwrap());
        }
    }

    #[test]
    fn homogenize_examples() {
        let zero = homogenize_weierstrass(&WeierstrassModel::zero());
        assert_eq!(zero.polynomial().to_string(), "-x^3 + y^2*z");

        let mut w = WeierstrassModel::zero();
        w.a3 = Rational::one();
        let t = homogenize_weierstrass(&w);
        assert_eq!(t.polynomial().to_string(), "-x^3 + y^2*z + y*z^2");

        let mut w = WeierstrassModel::zero();
        w.a4 = Rational::from_integer(-1);
        let t = homogenize_weierstrass(&w);
        assert_eq!(t.polynomial().to_string(), "-x^3 + x*z^2 + y^2*z");
    }

    #[test]
    fn reduce_mod_p_behaviour() {
        let m = GenusOneModel::BinaryQuartic(degree2_anchor());
        let r = reduce_mod_p(&m, 2).unwrap();
        match r {
            GenusOneModel::BinaryQuartic(b) => {
                assert_eq!(b.quartic[0].residue(), 1);
                assert_eq!(b.quartic[3].residue(), 0);
            }
            _ => panic!("wrong variant"),
        }

        // quartic with coefficient 1/4 cannot reduce mod 2
        let mut bad = degree2_anchor();
        bad.quartic[4] = Rational::ratio(1, 4);
        assert!(matches!(
            reduce_mod_p(&GenusOneModel::BinaryQuartic(bad), 2),
            Err(Error::NonUnitDenominator { .. })
        ));

        // Pair 1 Gram matrices reduce mod 3 but not mod 2
        let p1 = GenusOneModel::QuadricPair(pair1());
        assert!(reduce_mod_p(&p1, 3).is_ok());
        assert!(matches!(
            reduce_mod_p(&p1, 2),
            Err(Error::NonUnitDenominator { .. })
        ));
    }

    #[test]
    fn serialize_roundtrip_random_models() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(33);
        let rq = |rng: &mut rand::rngs::StdRng| {
            Rational::ratio(rng.gen_range(-20..21), rng.gen_range(1..7))
        };
        for _ in 0..200 {
            let deg = rng.gen_range(1..=5);
            let m: GenusOneModel<Rational> = match deg {
                1 => GenusOneModel::Weierstrass(WeierstrassModel {
                    a1: rq(&mut rng),
                    a2: rq(&mut rng),
                    a3: rq(&mut rng),
                    a4: rq(&mut rng),
                    a6: rq(&mut rng),
                }),
                2 => GenusOneModel::BinaryQuartic(BinaryQuarticModel {
                    alpha: [rq(&mut rng), rq(&mut rng), rq(&mut rng)],
                    quartic: [
                        rq(&mut rng),
                        rq(&mut rng),
                        rq(&mut rng),
                        rq(&mut rng),
                        rq(&mut rng),
                    ],
                }),
                3 => {
                    let mut coeffs: [Rational; 10] = Default::default();
                    for c in coeffs.iter_mut() {
                        *c = rq(&mut rng);
                    }
                    GenusOneModel::TernaryCubic(TernaryCubicModel { coeffs })
                }
                4 => {
                    let sym = |rng: &mut rand::rngs::StdRng| {
                        let mut m = vec![vec![Rational::zero(); 4]; 4];
                        for i in 0..4 {
                            for j in i..4 {
                                let v = Rational::ratio(rng.gen_range(-9..10), rng.gen_range(1..4));
                                m[i][j] = v.clone();
                                m[j][i] = v;
                            }
                        }
                        m
                    };
                    GenusOneModel::QuadricPair(
                        QuadricPairModel::new(sym(&mut rng), sym(&mut rng)).unwrap(),
                    )
                }
                _ => {
                    let vars = PFAFFIAN_VARS;
                    let zero = SparsePolynomial::<Rational>::zero(&vars);
                    let mut entries = vec![zero; 25];
                    for i in 0..5 {
                        for j in i + 1..5 {
                            let mut f = SparsePolynomial::zero(&vars);
                            for k in 0..5 {
                                let mut e = vec![0u32; 5];
                                e[k] = 1;
                                f = f.add(&SparsePolynomial::monomial(
                                    &vars,
                                    &e,
                                    Rational::from_integer(rng.gen_range(-3..4)),
                                ));
                            }
                            entries[i * 5 + j] = f.clone();
                            entries[j * 5 + i] = f.neg();
                        }
                    }
                    GenusOneModel::Pfaffian(
                        PfaffianModel::new(PolyMatrix::new(5, 5, entries)).unwrap(),
                    )
                }
            };
            let text = serialize_model(&m);
            let back = parse_model(&text).unwrap();
            assert_eq!(back, m);
            // canonical output is stable
            assert_eq!(serialize_model(&back), text);
        }
    }
}
