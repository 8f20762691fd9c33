//! Univariate polynomials over the rationals in ascending coefficient order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{denominator_lcm, Rational};
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Polynomial in `x` with rational coefficients; `coeffs[k]` multiplies
/// `x^k`. The coefficient list never ends in a zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `x - c`
    pub fn linear_root(c: &Rational) -> Self {
        Poly::new(vec![-c.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        self.degree().finite().expect("degree of zero polynomial")
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (za, sa) = self.to_zpoly();
        let (zb, sb) = other.to_zpoly();
        Poly::from_zpoly(&za.mul(&zb), &(sa * sb))
    }

    pub fn pow(&self, e: u64) -> Poly {
        if e == 0 {
            return Poly::one();
        }
        let (z, s) = self.to_zpoly();
        Poly::from_zpoly(&z.pow(e), &num_traits::pow(s, e as usize))
    }

    /// Writes `self = scale * z` with `z` a primitive integer polynomial
    /// with positive leading coefficient. Zero maps to `(0, 1)`.
    pub fn to_zpoly(&self) -> (ZPoly, Rational) {
        if self.is_zero() {
            return (ZPoly::zero(), Rational::one());
        }
        let l = denominator_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let z = ZPoly::new(ints);
        let prim = z.primitive();
        let factor = Rational::new(z.leading().unwrap().clone(), prim.leading().unwrap().clone());
        (prim, factor / Rational::from_integer(l))
    }

    pub fn from_zpoly(z: &ZPoly, scale: &Rational) -> Poly {
        Poly::new(
            z.coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()) * scale)
                .collect(),
        )
    }

    /// Euclidean division; `d` must be nonzero.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().finite().ok_or(Error::DivisionByZero)?;
        let inv_lead = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd] * &inv_lead;
            if top.is_zero() {
                continue;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &top * c;
            }
            quot[k] = top;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_exact(self).is_some()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Monic gcd. Fails only when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(Error::GcdOfZeros),
            (true, false) => Ok(other.monic()),
            (false, true) => Ok(self.monic()),
            (false, false) => {
                let (a, _) = self.to_zpoly();
                let (b, _) = other.to_zpoly();
                Ok(Poly::from_zpoly(&a.gcd(&b), &Rational::one()).monic())
            }
        }
    }

    /// Largest `k` with `p^k | self` and the cofactor; `p` of positive degree.
    pub fn multiplicity_of(&self, p: &Poly) -> (u64, Poly) {
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(p) {
            k += 1;
            cur = q;
        }
        (k, cur)
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            first = false;
            let a = c.abs();
            let mag = if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            };
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses expressions such as `x^2+1`, `3/2*x^3 - x + 5`, `-2x`.
impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let bad = |m: &str| Error::Parse(format!("malformed polynomial {s:?}: {m}"));
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in src.chars().enumerate() {
            let after_caret = cur.ends_with('^');
            if (ch == '+' || ch == '-') && !after_caret {
                if i > 0 {
                    if cur.is_empty() {
                        return Err(bad("dangling sign"));
                    }
                    terms.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        terms.push((neg, cur));

        let mut acc = Poly::zero();
        for (neg, term) in terms {
            let (coef, power) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let c = term[..pos].trim_end_matches('*');
                    let rest = &term[pos + 1..];
                    let p = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse::<usize>().map_err(|_| bad("bad exponent"))?
                    } else {
                        return Err(bad("unexpected text after x"));
                    };
                    (c, p)
                }
            };
            let mut c = if coef.is_empty() {
                Rational::one()
            } else {
                super::rational::parse_rational(coef).map_err(|_| bad("bad coefficient"))?
            };
            if neg {
                c = -c;
            }
            let mut v = vec![Rational::zero(); power + 1];
            v[power] = c;
            acc = acc.add(&Poly::new(v));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};

    #[test]
    fn gcd_examples() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);
        assert_eq!(Poly::x().gcd(&Poly::from_ints(&[1, 1])).unwrap(), Poly::one());
        let c = Poly::from_ints(&[0, 6, 6]);
        let d = Poly::from_ints(&[0, 4]);
        assert_eq!(c.gcd(&d).unwrap(), Poly::x());
        assert_eq!(Poly::zero().gcd(&Poly::zero()), Err(Error::GcdOfZeros));
        assert_eq!(Poly::zero().gcd(&d).unwrap(), Poly::x());
    }

    #[test]
    fn gcd_rational_coefficients() {
        // (x - 1/2)(x + 1/3) and (x - 1/2)(x - 7)
        let r = Poly::linear_root(&ratio(1, 2));
        let a = r.mul(&Poly::linear_root(&ratio(-1, 3)));
        let b = r.mul(&Poly::linear_root(&rat(7)));
        assert_eq!(a.gcd(&b).unwrap(), r);
    }

    #[test]
    fn degree_of_zero_is_marker() {
        assert_eq!(Poly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Poly::one().degree(), Degree::Finite(0));
    }

    #[test]
    fn division() {
        let a = Poly::from_ints(&[1, 0, 0, 1]);
        let d = Poly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.div_rem(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn zpoly_round_trip() {
        let p = Poly::new(vec![ratio(1, 2), ratio(-3, 4), rat(2)]);
        let (z, s) = p.to_zpoly();
        assert_eq!(Poly::from_zpoly(&z, &s), p);
        assert!(z.leading().unwrap() > &BigInt::zero());
    }

    #[test]
    fn parse_display() {
        let p: Poly = "x^2+1".parse().unwrap();
        assert_eq!(p, Poly::from_ints(&[1, 0, 1]));
        let q: Poly = "3/2*x^3 - x + 5".parse().unwrap();
        assert_eq!(q, Poly::new(vec![rat(5), rat(-1), rat(0), ratio(3, 2)]));
        assert_eq!("-2x".parse::<Poly>().unwrap(), Poly::from_ints(&[0, -2]));
        assert_eq!(q.to_string().parse::<Poly>().unwrap(), q);
        assert_eq!(Poly::from_ints(&[-1, 0, -1]).to_string(), "-x^2-1");
        assert!("x^".parse::<Poly>().is_err());
        assert!("x+".parse::<Poly>().is_err());
        assert!("y".parse::<Poly>().is_err());
    }
}
