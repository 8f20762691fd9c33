//! Dense polynomials over the integers. Used internally wherever long
//! products are formed, since big-integer products avoid the per-term
//! gcd reduction that rational coefficients incur.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        ZPoly::new(coeffs)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ZPoly::new(out)
    }

    pub fn pow(&self, mut e: u64) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d` when `d` divides `self` in `Z[x]`, else `None`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::new(quot))
    }

    /// Pseudo-remainder of `self` by `d` with the content removed.
    pub fn prem_primitive(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("prem by zero");
        let lead = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let top = r.last().unwrap().clone();
            let g = top.gcd(lead);
            let mul_r = lead / &g;
            let mul_d = &top / &g;
            for c in r.iter_mut() {
                *c *= &mul_r;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &mul_d * c;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        ZPoly::new(r).primitive()
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return ZPoly::one();
            }
            let r = a.prem_primitive(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Largest `k` with `p^k | self`, and the cofactor. `p` must be
    /// primitive of positive degree; `self` nonzero.
    pub fn strip_factor(&self, p: &ZPoly) -> (u64, ZPoly) {
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(p) {
            k += 1;
            cur = q;
        }
        (k, cur)
    }

    /// Multiplicity of `x` as a factor: index of the lowest nonzero coefficient.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_basics() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = z(&[-2, 1, 1]);
        let b = z(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), z(&[-1, 1]));
        assert_eq!(z(&[0, 6, 6]).gcd(&z(&[0, 4])), z(&[0, 1]));
        assert_eq!(z(&[1, 1]).gcd(&z(&[0, 1])), ZPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = z(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&z(&[1, 1])), Some(z(&[-1, 1])));
        assert_eq!(a.div_exact(&z(&[2, 1])), None);
        assert_eq!(z(&[1, 2]).div_exact(&z(&[0, 2])), None);
        let (k, rest) = z(&[0, 0, 0, 5]).strip_factor(&z(&[0, 1]));
        assert_eq!((k, rest), (3, z(&[5])));
    }
}
