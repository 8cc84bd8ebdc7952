use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::One;

use super::{Polynomial, Rational};
use crate::error::Error;

/// Element of Q(s): a rational function in canonical form.
///
/// Invariants: the denominator is nonzero and monic, and gcd(num, den) = 1.
/// Zero is 0/1 and one is 1/1, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

impl Scalar {
    /// Canonicalizes `num/den`: cancels the gcd and makes the denominator
    /// monic. Rejects a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Scalar, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Scalar {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, r) = num.div_rem(&g).expect("gcd divides");
        debug_assert!(r.is_zero());
        let (den, r) = den.div_rem(&g).expect("gcd divides");
        debug_assert!(r.is_zero());
        let lead = den.leading().expect("nonzero").clone();
        let inv = Rational::one() / lead;
        Ok(Scalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Polynomial) -> Scalar {
        Scalar {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar::from_poly(Polynomial::from_rational(r))
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_poly(Polynomial::from_int(n))
    }

    pub fn zero() -> Scalar {
        Scalar::from_poly(Polynomial::zero())
    }

    pub fn one() -> Scalar {
        Scalar::from_poly(Polynomial::one())
    }

    /// The variable `s`.
    pub fn var() -> Scalar {
        Scalar::from_poly(Polynomial::var())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a plain rational number (denominator 1 and a
    /// constant numerator). Used by display code to decide sign extraction.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.degree() {
            None => Some(Rational::from_integer(0.into())),
            Some(0) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::new(self.den.clone(), self.num.clone()).map_err(|_| Error::DivisionByZero)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &rhs.inv()?)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::new(num, den).expect("denominators are nonzero")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        Scalar::new(num, den).expect("denominators are nonzero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    /// Canonical text in the scalar grammar: the bare polynomial when the
    /// denominator is 1, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(text: &str) -> Result<Scalar, Error> {
        super::parse::parse_scalar(text)
    }
}
