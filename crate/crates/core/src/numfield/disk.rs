//! Exact complex rationals and closed disks with outward dyadic rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::rational::sqrt_bounds;
use crate::arith::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: Rational,
    pub im: Rational,
}

impl Complex {
    pub fn new(re: Rational, im: Rational) -> Self {
        Complex { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Complex::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        Complex::real(Rational::zero())
    }

    pub fn one() -> Self {
        Complex::real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        Complex::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn scale(&self, c: &Rational) -> Complex {
        Complex::new(&self.re * c, &self.im * c)
    }

    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact inverse; `None` at zero.
    pub fn recip(&self) -> Option<Complex> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        Some(Complex::new(&self.re / &n, -&self.im / &n))
    }

    pub fn div(&self, o: &Complex) -> Option<Complex> {
        o.recip().map(|r| self.mul(&r))
    }

    pub fn abs_upper(&self, bits: u32) -> Rational {
        sqrt_bounds(&self.norm_sq(), bits).1
    }

    pub fn abs_lower(&self, bits: u32) -> Rational {
        sqrt_bounds(&self.norm_sq(), bits).0
    }

    /// Nearest point on the `2^-bits` grid; moves by less than `2^-bits`.
    pub fn round(&self, bits: u32) -> Complex {
        Complex::new(round_nearest(&self.re, bits), round_nearest(&self.im, bits))
    }

    /// Horner evaluation of a polynomial with rational coefficients.
    pub fn eval_poly(coeffs: &[Rational], z: &Complex) -> Complex {
        coeffs.iter().rev().fold(Complex::zero(), |acc, c| {
            let m = acc.mul(z);
            Complex::new(m.re + c, m.im)
        })
    }
}

fn grid(bits: u32) -> BigInt {
    BigInt::one() << bits
}

pub fn round_nearest(x: &Rational, bits: u32) -> Rational {
    let s = grid(bits);
    let y = x * Rational::from_integer(s.clone()) + Rational::new(BigInt::one(), BigInt::from(2));
    Rational::new(y.floor().to_integer(), s)
}

pub fn round_up(x: &Rational, bits: u32) -> Rational {
    let s = grid(bits);
    let y = x * Rational::from_integer(s.clone());
    Rational::new(y.ceil().to_integer(), s)
}

pub fn round_down(x: &Rational, bits: u32) -> Rational {
    let s = grid(bits);
    let y = x * Rational::from_integer(s.clone());
    Rational::new(y.floor().to_integer(), s)
}

/// `{z : |z - center| <= radius}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disk {
    pub center: Complex,
    pub radius: Rational,
}

impl Disk {
    pub fn new(center: Complex, radius: Rational) -> Self {
        debug_assert!(!radius.is_negative());
        Disk { center, radius }
    }

    pub fn point(center: Complex) -> Self {
        Disk::new(center, Rational::zero())
    }

    pub fn contains(&self, z: &Complex) -> bool {
        self.center.sub(z).norm_sq() <= &self.radius * &self.radius
    }

    /// Disjoint closed disks.
    pub fn disjoint(&self, o: &Disk) -> bool {
        let r = &self.radius + &o.radius;
        self.center.sub(&o.center).norm_sq() > &r * &r
    }

    /// Bounds `lo <= |z| <= hi` for every `z` in the disk.
    pub fn modulus_bounds(&self, bits: u32) -> (Rational, Rational) {
        let lo = self.center.abs_lower(bits) - &self.radius;
        let lo = if lo.is_negative() { Rational::zero() } else { lo };
        (lo, self.center.abs_upper(bits) + &self.radius)
    }

    /// Rounds the center to the grid and widens the radius to compensate.
    fn rounded(center: Complex, radius: Rational, bits: u32) -> Disk {
        let c = center.round(bits);
        let slack = Rational::new(BigInt::one(), grid(bits));
        Disk::new(c, round_up(&(radius + slack), bits))
    }

    pub fn mul(&self, o: &Disk, bits: u32) -> Disk {
        let a = self.center.abs_upper(bits);
        let b = o.center.abs_upper(bits);
        let r = &a * &o.radius + &b * &self.radius + &self.radius * &o.radius;
        Disk::rounded(self.center.mul(&o.center), r, bits)
    }

    /// Encloses `{1/z}`; `None` when the disk may contain zero.
    pub fn recip(&self, bits: u32) -> Option<Disk> {
        let m = self.center.abs_lower(bits);
        if m <= self.radius {
            return None;
        }
        let r = &self.radius / (&m * (&m - &self.radius));
        Some(Disk::rounded(self.center.recip()?, r, bits))
    }

    pub fn div(&self, o: &Disk, bits: u32) -> Option<Disk> {
        o.recip(bits).map(|r| self.mul(&r, bits))
    }

    pub fn pow(&self, mut e: u64, bits: u32) -> Disk {
        let mut acc = Disk::point(Complex::one());
        let mut base = self.clone();
        while e > 0 {
            if e.is_odd() {
                acc = acc.mul(&base, bits);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, bits);
            }
        }
        acc
    }
}
