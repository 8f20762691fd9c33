//! Certified isolation of the complex roots of a squarefree polynomial.
//!
//! Approximations come from Durand-Kerner iteration on a dyadic grid. With
//! Weierstrass corrections `w_i = p(z_i) / (lc prod_{j != i} (z_i - z_j))`,
//! the disks `|z - z_i| <= d |w_i|` cover all roots and every connected
//! component of their union holds as many roots as disks, so pairwise
//! disjoint disks isolate one root each.

use num_traits::{One, Signed, Zero};

use super::disk::{round_up, Complex, Disk};
use crate::arith::rational::{rat, ratio, sqrt_bounds};
use crate::arith::{Poly, Rational};
use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 2000;
const START_BITS: u32 = 48;

/// `1 + max |c_k / lc|`, an upper bound on every root modulus.
fn cauchy_bound(p: &Poly) -> Rational {
    let lc = p.leading().unwrap();
    let m = p.coeffs()[..p.deg()]
        .iter()
        .map(|c| (c / lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

fn corrections(coeffs: &[Rational], lc: &Rational, zs: &[Complex]) -> Option<Vec<Complex>> {
    let lc = Complex::real(lc.clone());
    zs.iter()
        .enumerate()
        .map(|(i, zi)| {
            let den = zs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(lc.clone(), |acc, (_, zj)| acc.mul(&zi.sub(zj)));
            Complex::eval_poly(coeffs, zi).div(&den)
        })
        .collect()
}

/// Disjoint disks, one around each root of the squarefree polynomial `p`,
/// with centers on the `2^-bits` grid. Fails with [`Error::Precision`] when
/// the iteration does not settle or the disks overlap.
pub fn isolate_roots(p: &Poly, bits: u32) -> Result<Vec<Disk>> {
    let d = p.deg();
    if d == 0 {
        return Ok(Vec::new());
    }
    let lc = p.leading().unwrap().clone();
    let coeffs = p.coeffs();
    if d == 1 {
        let root = -&coeffs[0] / &lc;
        return Ok(vec![Disk::point(Complex::real(root))]);
    }
    let target_w = bits + 16;
    let mut w = START_BITS.min(target_w);
    // standard starting points r (0.4 + 0.9i)^k
    let seed = Complex::new(ratio(2, 5), ratio(9, 10));
    let mut zs = Vec::with_capacity(d);
    let mut z = Complex::real(cauchy_bound(p)).round(w);
    for _ in 0..d {
        z = z.mul(&seed).round(w);
        zs.push(z.clone());
    }
    // settle at low precision, then double the grid until the target
    let mut iterations = 0;
    loop {
        let tol = Rational::new(1.into(), num_bigint::BigInt::one() << (2 * (w - 12)));
        loop {
            iterations += 1;
            if iterations > MAX_ITERATIONS {
                return Err(Error::Precision);
            }
            let ws = corrections(coeffs, &lc, &zs).ok_or(Error::Precision)?;
            let mut small = true;
            for (z, wi) in zs.iter_mut().zip(&ws) {
                small &= wi.norm_sq() <= tol;
                *z = z.sub(wi).round(w);
            }
            if small {
                break;
            }
        }
        if w == target_w {
            break;
        }
        w = (2 * w).min(target_w);
    }
    let zs: Vec<Complex> = zs.iter().map(|z| z.round(bits)).collect();
    let ws = corrections(coeffs, &lc, &zs).ok_or(Error::Precision)?;
    let disks: Vec<Disk> = zs
        .into_iter()
        .zip(ws)
        .map(|(z, wi)| {
            let r = sqrt_bounds(&wi.norm_sq(), bits + 8).1 * rat(d as i64);
            Disk::new(z, round_up(&r, bits + 8))
        })
        .collect();
    if !pairwise_disjoint(&disks) {
        return Err(Error::Precision);
    }
    Ok(sorted(disks))
}

pub fn pairwise_disjoint(disks: &[Disk]) -> bool {
    disks
        .iter()
        .enumerate()
        .all(|(i, a)| disks[i + 1..].iter().all(|b| a.disjoint(b)))
}

/// Orders disks by center, real part first.
pub fn sorted(mut disks: Vec<Disk>) -> Vec<Disk> {
    disks.sort_by(|a, b| {
        (&a.center.re, &a.center.im).cmp(&(&b.center.re, &b.center.im))
    });
    disks
}
