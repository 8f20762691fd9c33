//! Valuation bounds for power sums over `Q(x)`.
//!
//! For a place `mu` and `G_n = sum_j a_j(n) alpha_j^n` the ultrametric
//! inequality gives the unconditional lower bound
//! `mu(G_n) >= C~ + n min_j mu(alpha_j)`, with `C~` the least valuation of a
//! nonzero coefficient `a_{jk}`. In the other direction, once the elements
//! `pi_{ji} alpha_j^n` are linearly independent over `C`, the function
//! field subspace inequality applied on a set `S` of places gives
//! `mu(G_n) <= C2 + n min_j mu(alpha_j)` with
//! `C1 = binom(q, 2) (|S| + 2g - 2)` and `C2 = C1 + max H(a_{jk})`.

mod independence;
mod report;
mod zannier;

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::basis::refine;
use crate::arith::{coprime_basis, squarefree_part, Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::places::{height, val_at_place, Place};
use crate::recurrence::{require_nondegenerate, PowerSumSpec};

pub use independence::{independence_horizon, independence_profile, independence_test, IndependenceWitness};
pub use report::{
    degree_growth, verify_bounds, BoundReport, BoundRow, DegreeReport, DegreeRow,
};
pub use zannier::{zannier_check, ZannierInstance, ZannierOutcome};

/// Genus of `Q(x)`; kept symbolic in the constant formulas.
pub const GENUS: i64 = 0;

/// A finite set of places with pairwise coprime finite factors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaceSetS {
    places: BTreeSet<Place>,
}

impl PlaceSetS {
    /// Refines the finite factors so that distinct records never share a
    /// complex point; the covered set of points is unchanged.
    pub fn from_places(places: impl IntoIterator<Item = Place>) -> Result<Self> {
        let mut finite = Vec::new();
        let mut set = BTreeSet::new();
        for p in places {
            match p {
                Place::Infinity => {
                    set.insert(Place::Infinity);
                }
                Place::Finite(f) => finite.push(squarefree_part(&f)?),
            }
        }
        for f in refine(finite)? {
            set.insert(Place::Finite(f));
        }
        Ok(PlaceSetS { places: set })
    }

    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.places.iter()
    }

    pub fn contains(&self, p: &Place) -> bool {
        self.places.contains(p)
    }

    pub fn contains_infinity(&self) -> bool {
        self.places.contains(&Place::Infinity)
    }

    /// Number of complex places: sum of complex degrees.
    pub fn size_over_c(&self) -> u64 {
        self.places.iter().map(Place::complex_degree).sum()
    }

    /// Product of the finite factors: its roots are the finite points of S.
    pub fn finite_product(&self) -> Poly {
        self.places.iter().fold(Poly::one(), |acc, p| match p {
            Place::Finite(f) => acc.mul(f),
            Place::Infinity => acc,
        })
    }

    /// True if every root of `p` is a finite point of S.
    pub fn covers_roots_of(&self, p: &Poly) -> Result<bool> {
        if p.is_constant() {
            return Ok(true);
        }
        let sq = squarefree_part(p)?;
        Ok(sq.divides(&self.finite_product()))
    }
}

/// Every polynomial whose roots are zeros or poles of the data.
fn data_polys(spec: &PowerSumSpec) -> Vec<Poly> {
    let mut v = Vec::new();
    for a in spec.alphas() {
        v.push(a.num().clone());
        v.push(a.den().clone());
    }
    for (_, _, c) in spec.nonzero_coeffs() {
        v.push(c.num().clone());
        v.push(c.den().clone());
    }
    v
}

/// Zeros and poles of every root and nonzero coefficient, `mu`, and the
/// place at infinity.
pub fn build_s(spec: &PowerSumSpec, mu: &Place) -> Result<PlaceSetS> {
    let mut polys = data_polys(spec);
    if let Place::Finite(f) = mu {
        polys.push(f.clone());
    }
    let basis = coprime_basis(&polys)?;
    let mut places: BTreeSet<Place> = basis.factors.into_iter().map(Place::Finite).collect();
    places.insert(Place::Infinity);
    Ok(PlaceSetS { places })
}

/// `C~ = min mu(a_{jk})` over the nonzero coefficients.
pub fn trivial_lower_constant(spec: &PowerSumSpec, mu: &Place) -> Result<i64> {
    let mut best: Option<i64> = None;
    for (_, _, c) in spec.nonzero_coeffs() {
        let v = val_at_place(c, mu)?;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    Ok(best.expect("a valid spec has a nonzero coefficient"))
}

/// `min_j mu(alpha_j)`
pub fn min_alpha_valuation(spec: &PowerSumSpec, mu: &Place) -> Result<i64> {
    let mut best = i64::MAX;
    for a in spec.alphas() {
        best = best.min(val_at_place(a, mu)?);
    }
    Ok(best)
}

/// Per term, a maximal linearly independent subset `pi_{j1}, ..., pi_{jk_j}`
/// of the coefficients `a_{j0}, ..., a_{jm_j}`, and the polynomials
/// `b_{ji}(n)` with `a_j(n) = sum_i b_{ji}(n) pi_{ji}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientBasis {
    /// `pis[j]` are indices `k` into the coefficient list of term `j`.
    pub pis: Vec<Vec<usize>>,
    /// `b[j][i]` ascending coefficients in `n` of `b_{ji}`.
    pub b: Vec<Vec<Vec<Rational>>>,
}

impl CoefficientBasis {
    pub fn new(spec: &PowerSumSpec) -> Self {
        let mut pis = Vec::new();
        let mut bs = Vec::new();
        for t in spec.terms() {
            let vectors = linalg::common_vectors(&t.coeffs);
            let chosen = linalg::greedy_independent(&vectors);
            let basis: Vec<RatFunc> = chosen.iter().map(|&k| t.coeffs[k].clone()).collect();
            let mut b = vec![vec![Rational::zero(); t.coeffs.len()]; chosen.len()];
            for (k, c) in t.coeffs.iter().enumerate() {
                let coords = linalg::express_in_span(&basis, c).expect("coefficient lies in the span");
                for (i, lam) in coords.into_iter().enumerate() {
                    b[i][k] = lam;
                }
            }
            pis.push(chosen);
            bs.push(b);
        }
        CoefficientBasis { pis, b: bs }
    }

    /// `k_j` for every term.
    pub fn ranks(&self) -> Vec<usize> {
        self.pis.iter().map(Vec::len).collect()
    }

    /// True if some `b_{ji}(n)` vanishes.
    pub fn some_b_vanishes(&self, n: u64) -> bool {
        let n = Rational::from_integer(n.into());
        self.b.iter().flatten().any(|poly| {
            poly.iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * &n + c)
                .is_zero()
        })
    }
}

/// The constants of the growth bounds at one place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundConstants {
    pub c_tilde: i64,
    /// `sum_j k_j`
    pub q: u64,
    pub genus: i64,
    pub k_js: Vec<u64>,
    #[serde(rename = "S", serialize_with = "serialize_places")]
    pub s: PlaceSetS,
    #[serde(rename = "size_over_C")]
    pub size_over_c: u64,
    pub c1: i64,
    pub c2: i64,
    /// `min_j mu(alpha_j)`
    pub min_mu_alpha: i64,
    /// The additive constant of the upper bound: `c2` for two or more
    /// terms, `sum_k H(a_{1k})` for a single term.
    pub upper_constant: i64,
}

fn serialize_places<S: serde::Serializer>(s: &PlaceSetS, ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(None)?;
    for p in s.places() {
        seq.serialize_element(&p.to_string())?;
    }
    seq.end()
}

pub fn binom2(q: u64) -> i64 {
    (q * q.saturating_sub(1) / 2) as i64
}

/// Constants for `spec` at `mu`. Sequences with two or more terms must be
/// non-degenerate.
pub fn bound_constants(spec: &PowerSumSpec, mu: &Place) -> Result<BoundConstants> {
    if spec.len() >= 2 {
        require_nondegenerate(spec)?;
    }
    let c_tilde = trivial_lower_constant(spec, mu)?;
    let min_mu_alpha = min_alpha_valuation(spec, mu)?;
    let s = build_s(spec, mu)?;
    let size_over_c = s.size_over_c();
    let k_js: Vec<u64> = CoefficientBasis::new(spec)
        .ranks()
        .into_iter()
        .map(|k| k as u64)
        .collect();
    let q: u64 = k_js.iter().sum();
    let c1 = binom2(q) * (size_over_c as i64 + 2 * GENUS - 2);
    let mut max_h = 0i64;
    let mut sum_h = 0i64;
    for (_, _, c) in spec.nonzero_coeffs() {
        let h = height(c)? as i64;
        max_h = max_h.max(h);
        sum_h += h;
    }
    let c2 = c1 + max_h;
    let upper_constant = if spec.len() == 1 { sum_h } else { c2 };
    Ok(BoundConstants {
        c_tilde,
        q,
        genus: GENUS,
        k_js,
        s,
        size_over_c,
        c1,
        c2,
        min_mu_alpha,
        upper_constant,
    })
}

/// `C + n min_j mu(alpha_j)`, with `C = C2` for two or more terms and
/// `C = sum_k H(a_{1k})` for a single term.
pub fn growth_upper_bound(spec: &PowerSumSpec, mu: &Place, n: u64) -> Result<i64> {
    let c = bound_constants(spec, mu)?;
    Ok(c.upper_constant + n as i64 * c.min_mu_alpha)
}

/// `C~ + n min_j mu(alpha_j)`
pub fn trivial_lower_bound(spec: &PowerSumSpec, mu: &Place, n: u64) -> Result<i64> {
    Ok(trivial_lower_constant(spec, mu)? + n as i64 * min_alpha_valuation(spec, mu)?)
}

pub(crate) fn require_polynomial(spec: &PowerSumSpec) -> Result<()> {
    if spec.is_polynomial() {
        Ok(())
    } else {
        Err(Error::NonPolynomial)
    }
}
