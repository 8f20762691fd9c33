//! Reduced rational functions over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Cancels the gcd and moves the leading coefficient of the
    /// denominator into the numerator.
    pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = den.leading().unwrap().recip();
        Ok(RatFunc {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    /// Builds from parts already known to be reduced with monic denominator.
    fn from_reduced(num: Poly, den: Poly) -> RatFunc {
        debug_assert!(den.is_monic());
        RatFunc { num, den }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_reduced(Poly::zero(), Poly::one())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_reduced(Poly::one(), Poly::one())
    }

    pub fn x() -> RatFunc {
        RatFunc::from_poly(Poly::x())
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc::from_reduced(p, Poly::one())
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value when constant.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc::from_reduced(self.num.neg(), self.den.clone())
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return RatFunc::normalize(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        let g = self.den.gcd(&other.den).unwrap();
        let b = self.den.div_exact(&g).unwrap();
        let d = other.den.div_exact(&g).unwrap();
        let num = self.num.mul(&d).add(&other.num.mul(&b));
        if num.is_zero() {
            return RatFunc::zero();
        }
        // any common factor of num and b*d*g divides g
        let h = num.gcd(&g).unwrap();
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).unwrap(), g.div_exact(&h).unwrap())
        };
        let den = b.mul(&d).mul(&g);
        let lead = den.leading().unwrap().recip();
        RatFunc::from_reduced(num.scale(&lead), den.scale(&lead))
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&other.num));
        }
        let g1 = self.num.gcd(&other.den).unwrap();
        let g2 = other.num.gcd(&self.den).unwrap();
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lead = den.leading().unwrap().recip();
        RatFunc::from_reduced(num.scale(&lead), den.scale(&lead))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::from_reduced(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead = self.num.leading().unwrap().recip();
        Ok(RatFunc::from_reduced(
            self.den.scale(&lead),
            self.num.scale(&lead),
        ))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    /// Reduced powers stay reduced, so no gcd is needed.
    pub fn pow(&self, e: u64) -> RatFunc {
        if e == 0 {
            return RatFunc::one();
        }
        RatFunc::from_reduced(self.num.pow(e), self.den.pow(e))
    }

    /// Integer power; negative exponents invert, zero base fails for them.
    pub fn powi(&self, e: i64) -> Result<RatFunc> {
        let p = self.pow(e.unsigned_abs());
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// `A(self)` for a polynomial `A`.
    pub fn compose_into(&self, outer: &Poly) -> RatFunc {
        outer
            .coeffs()
            .iter()
            .rev()
            .fold(RatFunc::zero(), |acc, c| {
                acc.mul(self).add(&RatFunc::constant(c.clone()))
            })
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl std::ops::Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::mul(&self, &rhs)
    }
}
