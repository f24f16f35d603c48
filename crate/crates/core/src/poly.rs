//! Sparse multivariate polynomials over an exact coefficient field, and
//! matrices of them.
//!
//! Terms are keyed by exponent vectors; no zero coefficient is ever stored.
//! The canonical term order for rendering is graded-lexicographic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::finite_field::PrimeFieldElement;
use crate::rational::Rational;

/// Coefficient field operations needed by the polynomial kernel.
///
/// The `_like` constructors take a witness element so that fields with
/// element-carried context (the prime modulus) can be supported.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The image of a small integer in the field, e.g. a derivative exponent.
    fn from_i64_like(&self, n: i64) -> Self;
}

impl Coeff for Rational {
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Coeff for PrimeFieldElement {
    fn is_zero(&self) -> bool {
        PrimeFieldElement::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        PrimeFieldElement::from_small(0, self.modulus())
    }
    fn add(&self, other: &Self) -> Self {
        PrimeFieldElement::add(*self, *other)
    }
    fn sub(&self, other: &Self) -> Self {
        PrimeFieldElement::sub(*self, *other)
    }
    fn mul(&self, other: &Self) -> Self {
        PrimeFieldElement::mul(*self, *other)
    }
    fn neg(&self) -> Self {
        PrimeFieldElement::neg(*self)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        PrimeFieldElement::from_small(n, self.modulus())
    }
}

/// A sparse multivariate polynomial with an ordered variable list.
#[derive(Clone, PartialEq, Debug)]
pub struct SparsePolynomial<C: Coeff> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> SparsePolynomial<C> {
    pub fn zero(vars: &[&str]) -> Self {
        SparsePolynomial {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn monomial(vars: &[&str], exps: &[u32], c: C) -> Self {
        let mut p = Self::zero(vars);
        assert_eq!(exps.len(), p.vars.len(), "exponent vector length");
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn coefficient(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(exps)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "mixed variable lists");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SparsePolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_vars(other);
        let mut out = Self::zero_from(self);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero_from(self);
        for (e, t) in &self.terms {
            out.add_term(e.clone(), t.mul(c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc: Option<Self> = None;
        for _ in 0..n {
            acc = Some(match acc {
                None => self.clone(),
                Some(a) => a.mul(self),
            });
        }
        match acc {
            Some(a) => a,
            None => {
                // empty product: 1, needs a witness coefficient
                let one = self
                    .terms
                    .values()
                    .next()
                    .map(|c| {
                        let z = c.zero_like();
                        z.from_i64_like(1)
                    })
                    .expect("pow(0) of the zero polynomial over an unknown field");
                Self::constant(
                    &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                    one,
                )
            }
        }
    }

    fn zero_from(p: &Self) -> Self {
        SparsePolynomial {
            vars: p.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn var_index(&self, v: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|w| w == v)
            .ok_or_else(|| Error::UnknownVariable(v.to_string()))
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn partial_derivative(&self, v: &str) -> Result<Self> {
        let i = self.var_index(v)?;
        let mut out = Self::zero_from(self);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.mul(&c.from_i64_like(e[i] as i64)));
        }
        Ok(out)
    }

    /// Exact evaluation at a point of the coefficient field.
    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let zero = match point.first() {
            Some(w) => w.zero_like(),
            None => match self.terms.values().next() {
                Some(c) => c.zero_like(),
                None => return Err(Error::Internal("cannot evaluate: no field witness".into())),
            },
        };
        let mut acc = zero;
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Map every coefficient through `f`, keeping the same monomials.
    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<SparsePolynomial<D>> {
        let mut out = SparsePolynomial::<D> {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Canonical graded-lex ordering of terms, highest first.
    fn ordered_terms(&self) -> Vec<(&Vec<u32>, &C)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        ts
    }
}

impl SparsePolynomial<Rational> {
    /// Compose with the linear change of variables x -> M x.
    pub fn substitute_linear(&self, m: &[Vec<Rational>]) -> Result<Self> {
        let n = self.vars.len();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.len(),
            });
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        // image of each variable as a linear form
        let images: Vec<Self> = (0..n)
            .map(|i| {
                let mut f = Self::zero(&vars);
                for (j, c) in m[i].iter().enumerate() {
                    let mut e = vec![0u32; n];
                    e[j] = 1;
                    f.add_term(e, c.clone());
                }
                f
            })
            .collect();
        let mut out = Self::zero(&vars);
        for (e, c) in &self.terms {
            let mut t = Self::constant(&vars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    t = t.mul(&images[i].pow(exp));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Parse from the textual form produced by `Display`, e.g.
    /// `"1/16*x^4 - 2*x^3*z + z^4"`. Also accepts bare variables and
    /// constants.
    pub fn parse(vars: &[&str], text: &str) -> Result<Self> {
        let mut out = Self::zero(vars);
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(out);
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut first = true;
        for ch in text.chars() {
            match ch {
                '+' | '-' if !first && !cur.trim().is_empty() => {
                    terms.push((neg, cur.trim().to_string()));
                    cur = String::new();
                    neg = ch == '-';
                }
                '-' if first || cur.trim().is_empty() => {
                    neg = !neg;
                }
                '+' if cur.trim().is_empty() => {}
                _ => cur.push(ch),
            }
            if !ch.is_whitespace() {
                first = false;
            }
        }
        if !cur.trim().is_empty() {
            terms.push((neg, cur.trim().to_string()));
        }
        for (neg, term) in terms {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::BadModelFile(format!("empty factor in `{term}`")));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e: u32 = e
                            .trim()
                            .parse()
                            .map_err(|_| Error::BadModelFile(format!("bad exponent in `{factor}`")))?;
                        (b.trim(), e)
                    }
                    None => (factor, 1),
                };
                if let Some(i) = vars.iter().position(|v| *v == base) {
                    exps[i] += exp;
                } else if base.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '-') {
                    let c: Rational = base.parse()?;
                    coeff = coeff * c.pow(exp as i64);
                } else {
                    return Err(Error::UnknownVariable(base.to_string()));
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Display for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.ordered_terms().into_iter().enumerate() {
            let text = c.to_string();
            let (sign, mag) = match text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", text),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            let constant = e.iter().all(|&x| x == 0);
            if mag != "1" || constant {
                parts.push(mag);
            }
            for (v, &exp) in self.vars.iter().zip(e) {
                if exp == 1 {
                    parts.push(v.clone());
                } else if exp > 1 {
                    parts.push(format!("{v}^{exp}"));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// A rectangular matrix of sparse polynomials sharing one variable list.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix<C: Coeff> {
    rows: usize,
    cols: usize,
    entries: Vec<SparsePolynomial<C>>,
}

impl<C: Coeff> PolyMatrix<C> {
    pub fn new(rows: usize, cols: usize, entries: Vec<SparsePolynomial<C>>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        if let Some(first) = entries.first() {
            for e in &entries {
                assert_eq!(e.variables(), first.variables(), "mixed variable lists");
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &SparsePolynomial<C> {
        &self.entries[i * self.cols + j]
    }

    /// Minor with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix<C> {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            for c in 0..self.cols {
                if c == j {
                    continue;
                }
                entries.push(self.entry(r, c).clone());
            }
        }
        PolyMatrix::new(self.rows - 1, self.cols - 1, entries)
    }

    /// Exact determinant by cofactor expansion along the first row.
    /// Restricted to size <= 6.
    pub fn determinant(&self) -> Result<SparsePolynomial<C>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > 6 {
            return Err(Error::MatrixTooLarge(self.rows));
        }
        Ok(self.det_rec())
    }

    fn det_rec(&self) -> SparsePolynomial<C> {
        let n = self.rows;
        if n == 1 {
            return self.entry(0, 0).clone();
        }
        let mut acc = {
            let vars: Vec<&str> = self.entry(0, 0).variables().iter().map(|s| s.as_str()).collect();
            SparsePolynomial::zero(&vars)
        };
        for j in 0..n {
            if self.entry(0, j).is_zero() {
                continue;
            }
            let term = self.entry(0, j).mul(&self.minor(0, j).det_rec());
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}
