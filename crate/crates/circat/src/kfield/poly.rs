use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::Rational;
use crate::error::Error;

/// Univariate polynomial over Q in the formal variable `s`.
///
/// Coefficients are stored by ascending power with no trailing zeros, so the
/// zero polynomial is the empty coefficient list and the representation of a
/// value is unique.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::from_rational(Rational::one())
    }

    /// The variable `s` itself.
    pub fn var() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    pub fn from_rational(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Polynomial::from_rational(Rational::from_integer(n.into()))
    }

    /// `c * s^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Polynomial { coeffs }
    }

    /// Builds from ascending-power coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `s^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn into_monic(self) -> Polynomial {
        match self.leading() {
            None => self,
            Some(lead) => {
                let inv = Rational::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q*d + r` with deg r < deg d.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let dlead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &dlead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            // rem -= factor * s^shift * d
            for (k, dc) in d.coeffs.iter().enumerate() {
                let delta = dc * &factor;
                rem.coeffs[k + shift] = &rem.coeffs[k + shift] - &delta;
            }
            rem.trim();
        }
        Ok((Polynomial::from_coeffs(quot), rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm;
    /// gcd(0, 0) = 0.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut x = a.clone().into_monic();
        let mut y = b.clone().into_monic();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r.into_monic();
        }
        x
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers in the scalar text grammar, for example
    /// `2*s^3 - s + 1/2`. A leading negative coefficient keeps an explicit
    /// rational prefix (`-1*s^2`) because the grammar puts signs on rationals
    /// only.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}", monomial_text(c, k))?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", monomial_text(&-c, k))?;
            } else {
                write!(f, " + {}", monomial_text(c, k))?;
            }
        }
        Ok(())
    }
}

fn monomial_text(c: &Rational, power: usize) -> String {
    let var = match power {
        0 => return c.to_string(),
        1 => "s".to_string(),
        p => format!("s^{p}"),
    };
    if c.is_one() {
        var
    } else {
        format!("{c}*{var}")
    }
}
