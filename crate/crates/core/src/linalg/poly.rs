use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::rational::{to_exact_string, Rational};

/// Univariate polynomial with exact rational coefficients, stored lowest
/// degree first with trailing zeros trimmed (the zero polynomial has no
/// coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `root − x`, the shape every factor of `det(M − xI)` takes.
    pub fn root_minus_x(root: Rational) -> Self {
        Self::new(vec![root, -Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + crate::rational::to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if n < d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let q = &rem[k + d] / &lead;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&(Rational::one() / lead))
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Coefficients as `p/q` strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(to_exact_string).collect()
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;

    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;

    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;

    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::new(out)
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;

    fn neg(self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPolynomial {
    /// Highest degree first, e.g. `-x^3 + 20x^2 - 7/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mag_str = to_exact_string(&mag);
            match (k, mag.is_one()) {
                (0, _) => f.write_str(&mag_str)?,
                (_, true) => {}
                (_, false) if mag.is_integer() => f.write_str(&mag_str)?,
                (_, false) => write!(f, "({mag_str})")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial({self})")
    }
}

impl Serialize for RatPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn poly(c: &[i64]) -> RatPolynomial {
        RatPolynomial::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(RatPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = poly(&[1, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(&a * &b, poly(&[-1, 0, 1]));
        assert_eq!(&a + &b, poly(&[0, 2]));
        assert_eq!(&a - &a, RatPolynomial::zero());
        assert_eq!(a.pow(3), poly(&[1, 3, 3, 1]));
        assert_eq!(poly(&[5, 0, 3]).derivative(), poly(&[0, 6]));
        assert_eq!(poly(&[1, 2, 3]).eval(&ratio(1, 2)), ratio(11, 4));
    }

    #[test]
    fn division_and_gcd() {
        let p = poly(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&poly(&[1, 1]));
        assert_eq!(q, poly(&[-1, 1]));
        assert!(r.is_zero());
        let (q, r) = poly(&[1, 0, 1]).div_rem(&poly(&[0, 2]));
        assert_eq!(q, RatPolynomial::new(vec![int(0), ratio(1, 2)]));
        assert_eq!(r, poly(&[1]));

        // (x-1)^2 (x-2) and (x-1)(x-3)
        let f = &poly(&[-1, 1]).pow(2) * &poly(&[-2, 1]);
        let g = &poly(&[-1, 1]) * &poly(&[-3, 1]);
        assert_eq!(f.gcd(&g), poly(&[-1, 1]));
        assert_eq!(f.square_free(), &poly(&[-1, 1]) * &poly(&[-2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[0, -2, 1]).to_string(), "x^2 - 2x");
        assert_eq!(poly(&[283500]).to_string(), "283500");
        assert_eq!(
            RatPolynomial::new(vec![ratio(-7, 2), int(0), int(-1)]).to_string(),
            "-x^2 - 7/2"
        );
        assert_eq!(RatPolynomial::zero().to_string(), "0");
    }
}
