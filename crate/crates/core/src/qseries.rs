//! Truncated q-expansions with exact rational coefficients: Eisenstein
//! series, the normalized discriminant cusp form, an eta-product oracle,
//! and Hasse-invariant congruences.

use std::fmt;

use crate::error::{Error, Result};
use crate::finite_field::reduce_rational;
use crate::rational::{bernoulli, is_prime, Rational};

/// A formal power series in q truncated to `precision` coefficients
/// (indices 0..precision-1). Arithmetic truncates to the shorter operand.
#[derive(Clone, PartialEq, Debug)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "precision must be at least 1");
        QSeries { coeffs }
    }

    pub fn constant(c: Rational, precision: usize) -> Self {
        assert!(precision >= 1);
        let mut coeffs = vec![Rational::zero(); precision];
        coeffs[0] = c;
        QSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let n = self.precision().min(other.precision());
        QSeries {
            coeffs: (0..n).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        QSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Renders like "1 + 240*q + 2160*q^2 + O(q^3)".
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (sign, mag) = match text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", text),
            };
            if wrote {
                write!(f, " {} ", if sign == "-" { "-" } else { "+" })?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            match n {
                0 => write!(f, "{mag}")?,
                1 if mag == "1" => write!(f, "q")?,
                1 => write!(f, "{mag}*q")?,
                _ if mag == "1" => write!(f, "q^{n}")?,
                _ => write!(f, "{mag}*q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.coeffs.len())
    }
}

/// sigma_k(n): sum of d^k over divisors d of n, by trial division.
pub fn divisor_sum(n: u64, k: u32) -> Rational {
    assert!(n >= 1);
    let mut acc = Rational::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += &Rational::from_integer(d as i64).pow(k as i64);
            let e = n / d;
            if e != d {
                acc += &Rational::from_integer(e as i64).pow(k as i64);
            }
        }
        d += 1;
    }
    acc
}

/// E_w = 1 - (2w/B_w) sum_{n >= 1} sigma_{w-1}(n) q^n for even w >= 4.
pub fn eisenstein_series(weight: u64, precision: usize) -> Result<QSeries> {
    if weight < 4 || weight % 2 != 0 {
        return Err(Error::BadWeight(weight as i64));
    }
    assert!(precision >= 1);
    let factor = -(Rational::from_integer(2 * weight as i64) / bernoulli(weight));
    let mut coeffs = vec![Rational::one()];
    for n in 1..precision as u64 {
        coeffs.push(&factor * &divisor_sum(n, weight as u32 - 1));
    }
    Ok(QSeries { coeffs })
}

/// The normalized discriminant cusp form (E_4^3 - E_6^2)/1728; every
/// coefficient is verified to be an integer.
pub fn discriminant_series(precision: usize) -> Result<QSeries> {
    let e4 = eisenstein_series(4, precision)?;
    let e6 = eisenstein_series(6, precision)?;
    let num = e4.mul(&e4).mul(&e4).sub(&e6.mul(&e6));
    let d = num.scale(&Rational::ratio(1, 1728));
    for (n, c) in d.coefficients().iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Internal(format!(
                "discriminant coefficient of q^{n} is not an integer: {c}"
            )));
        }
    }
    Ok(d)
}

/// q * prod_{n >= 1} (1 - q^n)^24, truncated: an independent oracle for
/// the discriminant series.
pub fn eta_product(precision: usize) -> QSeries {
    assert!(precision >= 1);
    let mut coeffs = vec![Rational::zero(); precision];
    if precision > 1 {
        coeffs[1] = Rational::one();
    }
    let mut acc = QSeries { coeffs };
    for n in 1..precision {
        // multiply by (1 - q^n)^24
        let mut factor = vec![Rational::zero(); precision];
        factor[0] = Rational::one();
        for (k, c) in (0..=24u64).zip(binomial_row_24()) {
            let idx = (k as usize) * n;
            if idx >= precision {
                break;
            }
            factor[idx] = c;
        }
        acc = acc.mul(&QSeries { coeffs: factor });
    }
    acc
}

fn binomial_row_24() -> impl Iterator<Item = Rational> {
    (0..=24u64).map(|k| {
        let b = Rational::from_bigint(crate::rational::binomial(24, k));
        if k % 2 == 0 {
            b
        } else {
            -b
        }
    })
}

/// Checks E_{p-1} = 1 in F_p[[q]] to the given precision, for p > 3.
pub fn hasse_congruence_check(p: u64, precision: usize) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::PrimeTooSmall(p));
    }
    let e = eisenstein_series(p - 1, precision)?;
    for (n, c) in e.coefficients().iter().enumerate() {
        let r = reduce_rational(c, p, &format!("coefficient of q^{n}"))?;
        let expected = u64::from(n == 0);
        if r.residue() != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| Rational::from_integer(n)).collect()
    }

    #[test]
    fn eisenstein_examples() {
        let e4 = eisenstein_series(4, 4).unwrap();
        assert_eq!(e4.coefficients(), &ints(&[1, 240, 2160, 6720])[..]);
        let e6 = eisenstein_series(6, 3).unwrap();
        assert_eq!(e6.coefficients(), &ints(&[1, -504, -16632])[..]);
        let e14 = eisenstein_series(14, 2).unwrap();
        assert_eq!(e14.coefficients(), &ints(&[1, -24])[..]);
    }

    #[test]
    fn eisenstein_rejects_bad_weights() {
        assert!(matches!(eisenstein_series(5, 3), Err(Error::BadWeight(5))));
        assert!(matches!(eisenstein_series(2, 3), Err(Error::BadWeight(2))));
        assert!(matches!(eisenstein_series(0, 3), Err(Error::BadWeight(0))));
    }

    #[test]
    fn discriminant_examples() {
        let d = discriminant_series(5).unwrap();
        assert_eq!(d.coefficients(), &ints(&[0, 1, -24, 252, -1472])[..]);
        assert_eq!(discriminant_series(1).unwrap().coefficients(), &ints(&[0])[..]);
        assert_eq!(discriminant_series(2).unwrap().coefficients(), &ints(&[0, 1])[..]);
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_product(3).coefficients(), &ints(&[0, 1, -24])[..]);
        assert_eq!(eta_product(1).coefficients(), &ints(&[0])[..]);
        assert_eq!(
            eta_product(5).coefficients(),
            &ints(&[0, 1, -24, 252, -1472])[..]
        );
    }

    #[test]
    fn discriminant_equals_eta_to_50() {
        assert_eq!(discriminant_series(50).unwrap(), eta_product(50));
    }

    #[test]
    fn numerator_is_divisible_by_1728() {
        let e4 = eisenstein_series(4, 50).unwrap();
        let e6 = eisenstein_series(6, 50).unwrap();
        let num = e4.mul(&e4).mul(&e4).sub(&e6.mul(&e6));
        for c in num.coefficients() {
            let q = c / &Rational::from_integer(1728);
            assert!(q.is_integer());
        }
    }

    #[test]
    fn weight_additivity_smoke_test() {
        let e4 = eisenstein_series(4, 30).unwrap();
        let e6 = eisenstein_series(6, 30).unwrap();
        let e10 = eisenstein_series(10, 30).unwrap();
        assert_eq!(e4.mul(&e6), e10);
    }

    #[test]
    fn hasse_congruences() {
        for p in [5u64, 7, 11, 13] {
            assert!(hasse_congruence_check(p, 50).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn hasse_rejections() {
        assert!(matches!(
            hasse_congruence_check(3, 10),
            Err(Error::PrimeTooSmall(3))
        ));
        assert!(matches!(
            hasse_congruence_check(2, 10),
            Err(Error::PrimeTooSmall(2))
        ));
        assert!(matches!(hasse_congruence_check(9, 10), Err(Error::NotPrime(9))));
    }

    #[test]
    fn series_truncation_and_display() {
        let e4 = eisenstein_series(4, 3).unwrap();
        assert_eq!(e4.to_string(), "1 + 240*q + 2160*q^2 + O(q^3)");
        let d = discriminant_series(3).unwrap();
        assert_eq!(d.to_string(), "q - 24*q^2 + O(q^3)");
        let a = eisenstein_series(4, 5).unwrap();
        let b = eisenstein_series(4, 3).unwrap();
        assert_eq!(a.mul(&b).precision(), 3);
        assert_eq!(a.sub(&b).precision(), 3);
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(divisor_sum(2, 3), Rational::from_integer(9));
        assert_eq!(divisor_sum(3, 3), Rational::from_integer(28));
        assert_eq!(divisor_sum(2, 5), Rational::from_integer(33));
        assert_eq!(divisor_sum(6, 1), Rational::from_integer(12));
    }
}
