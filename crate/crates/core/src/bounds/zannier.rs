//! Zannier's function field inequality: for `phi_1..phi_n` linearly
//! independent over `C`, `sigma = sum phi_i` and a finite set of places `S`
//! containing the poles of all `phi_i` and the zeros of `phi_1..phi_r`,
//!
//! `sum_{v in S} (v(sigma) - min_i v(phi_i))
//!     <= binom(n, 2) (|S| + 2g - 2) + sum_{i > r} H(phi_i)`.

use serde::Serialize;

use super::{binom2, PlaceSetS, GENUS};
use crate::arith::{coprime_basis, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::linalg;
use crate::places::{height, val_infty, Place};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZannierInstance {
    phis: Vec<RatFunc>,
    r: usize,
    s: PlaceSetS,
    sigma: RatFunc,
}

impl ZannierInstance {
    /// Validates independence, `sigma != 0` and the covering conditions on `S`.
    pub fn new(phis: Vec<RatFunc>, r: usize, s: PlaceSetS) -> Result<Self> {
        if phis.is_empty() {
            return Err(Error::InvalidSpec("no functions".into()));
        }
        if r > phis.len() {
            return Err(Error::InvalidSpec(format!(
                "r = {r} exceeds the number of functions {}",
                phis.len()
            )));
        }
        if !linalg::is_independent(&linalg::common_vectors(&phis)) {
            return Err(Error::LinearlyDependent);
        }
        let sigma = phis.iter().fold(RatFunc::zero(), |acc, f| acc.add(f));
        if sigma.is_zero() {
            return Err(Error::ZeroSum);
        }
        for (i, phi) in phis.iter().enumerate() {
            let v_inf = val_infty(phi)?;
            if (v_inf < 0 || (i < r && v_inf > 0)) && !s.contains_infinity() {
                return Err(Error::HypothesisS(format!(
                    "infinity is a {} of phi_{} but not in S",
                    if v_inf < 0 { "pole" } else { "zero" },
                    i + 1
                )));
            }
            if !s.covers_roots_of(phi.den())? {
                return Err(Error::HypothesisS(format!(
                    "a pole of phi_{} is missing from S",
                    i + 1
                )));
            }
            if i < r && !s.covers_roots_of(phi.num())? {
                return Err(Error::HypothesisS(format!(
                    "a zero of phi_{} is missing from S",
                    i + 1
                )));
            }
        }
        Ok(ZannierInstance { phis, r, s, sigma })
    }

    pub fn phis(&self) -> &[RatFunc] {
        &self.phis
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> &PlaceSetS {
        &self.s
    }

    pub fn sigma(&self) -> &RatFunc {
        &self.sigma
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZannierOutcome {
    pub lhs: i64,
    pub rhs: i64,
    pub ok: bool,
}

/// Evaluates both sides exactly. The finite places of `S` are refined
/// against `sigma` and the `phi_i` so that each record has one valuation
/// per function.
pub fn zannier_check(inst: &ZannierInstance) -> Result<ZannierOutcome> {
    let s_finite: Vec<&Poly> = inst
        .s
        .places()
        .filter_map(|p| match p {
            Place::Finite(f) => Some(f),
            Place::Infinity => None,
        })
        .collect();

    let mut inputs: Vec<Poly> = s_finite.iter().map(|f| (*f).clone()).collect();
    let fn_start = inputs.len();
    let funcs: Vec<&RatFunc> = std::iter::once(&inst.sigma).chain(&inst.phis).collect();
    for f in &funcs {
        inputs.push(f.num().clone());
        inputs.push(f.den().clone());
    }
    let basis = coprime_basis(&inputs)?;

    let mut lhs = 0i64;
    for (fi, factor) in basis.factors.iter().enumerate() {
        let in_s = (0..fn_start).any(|i| basis.exponent(fi, i) > 0);
        if !in_s {
            continue;
        }
        let val = |k: usize| {
            basis.exponent(fi, fn_start + 2 * k) as i64
                - basis.exponent(fi, fn_start + 2 * k + 1) as i64
        };
        let v_sigma = val(0);
        let min_phi = (1..funcs.len()).map(val).min().unwrap();
        lhs += factor.deg() as i64 * (v_sigma - min_phi);
    }
    if inst.s.contains_infinity() {
        let v_sigma = val_infty(&inst.sigma)?;
        let mut min_phi = i64::MAX;
        for phi in &inst.phis {
            min_phi = min_phi.min(val_infty(phi)?);
        }
        lhs += v_sigma - min_phi;
    }

    let n = inst.phis.len() as u64;
    let mut rhs = binom2(n) * (inst.s.size_over_c() as i64 + 2 * GENUS - 2);
    for phi in &inst.phis[inst.r..] {
        rhs += height(phi)? as i64;
    }
    Ok(ZannierOutcome {
        lhs,
        rhs,
        ok: lhs <= rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn hand_example() {
        let s = PlaceSetS::from_places([Place::Infinity]).unwrap();
        let inst = ZannierInstance::new(vec![p(&[0, 0, 1]), p(&[1, 0, -1])], 0, s).unwrap();
        assert!(inst.sigma().is_one());
        let out = zannier_check(&inst).unwrap();
        assert_eq!(out, ZannierOutcome { lhs: 2, rhs: 3, ok: true });
    }

    #[test]
    fn single_function() {
        let s = PlaceSetS::from_places([Place::Finite(Poly::x()), Place::Infinity]).unwrap();
        let inst = ZannierInstance::new(vec![RatFunc::x()], 1, s).unwrap();
        let out = zannier_check(&inst).unwrap();
        assert_eq!(out, ZannierOutcome { lhs: 0, rhs: 0, ok: true });
    }

    #[test]
    fn hypothesis_enforcement() {
        let inf = PlaceSetS::from_places([Place::Infinity]).unwrap();
        // pole at 0 missing
        let e = ZannierInstance::new(vec![rf(&[1], &[0, 1]), p(&[1])], 0, inf.clone());
        assert!(matches!(e, Err(Error::HypothesisS(_))));
        // zero at 0 of phi_1 required when r = 1
        let e = ZannierInstance::new(vec![RatFunc::x(), p(&[1])], 1, inf.clone());
        assert!(matches!(e, Err(Error::HypothesisS(_))));
        // pole at infinity with S empty
        let e = ZannierInstance::new(vec![RatFunc::x()], 0, PlaceSetS::default());
        assert!(matches!(e, Err(Error::HypothesisS(_))));
        let e = ZannierInstance::new(vec![RatFunc::x(), p(&[0, 2])], 0, inf.clone());
        assert_eq!(e, Err(Error::LinearlyDependent));
        let e = ZannierInstance::new(vec![RatFunc::x(), p(&[1]), p(&[-1, -1])], 0, inf);
        assert_eq!(e, Err(Error::LinearlyDependent));
    }

    #[test]
    fn refines_s_against_sigma() {
        // S = {x^2 - 1, inf}; sigma = x - 1 + 2 = x + 1 vanishes at -1 only
        let s = PlaceSetS::from_places([Place::Finite(Poly::from_ints(&[-1, 0, 1])), Place::Infinity])
            .unwrap();
        let inst = ZannierInstance::new(vec![p(&[-1, 1]), p(&[2])], 0, s).unwrap();
        let out = zannier_check(&inst).unwrap();
        // at x = -1: v(sigma) = 1, min = 0; at x = 1: 0 - min(1, 0) = 0;
        // at inf: -1 - (-1) = 0
        assert_eq!(out.lhs, 1);
        // binom(2,2) (3 - 2) + H(x-1) + H(2)
        assert_eq!(out.rhs, 2);
        assert!(out.ok);
    }
}
