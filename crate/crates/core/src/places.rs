//! Places of `Q(x)` seen inside `C(x)`, valuations, the divisor of a
//! function and the height.
//!
//! A finite place is recorded by a monic squarefree factor `p`. It stands
//! for the `deg p` complex points where `p` vanishes, all of which give the
//! same valuation to the functions it is used with. Every sum "over all
//! places" therefore weights a finite record by its complex degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::arith::{coprime_basis, squarefree_part, Poly, RatFunc, Rational, ZPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    /// Checks the factor is monic, squarefree and non-constant.
    pub fn finite(factor: Poly) -> Result<Place> {
        if factor.is_zero() || factor.is_constant() {
            return Err(Error::Parse(format!(
                "place factor {factor} must have positive degree"
            )));
        }
        let factor = factor.monic();
        if squarefree_part(&factor)? != factor {
            return Err(Error::Parse(format!(
                "place factor {factor} must be squarefree"
            )));
        }
        Ok(Place::Finite(factor))
    }

    /// The place `x = c`.
    pub fn point(c: &Rational) -> Place {
        Place::Finite(Poly::linear_root(c))
    }

    /// Number of points of the complex line this record stands for.
    pub fn complex_degree(&self) -> u64 {
        match self {
            Place::Finite(p) => p.deg() as u64,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// `deg den - deg num`.
pub fn val_infty(f: &RatFunc) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    Ok(f.den().deg() as i64 - f.num().deg() as i64)
}

/// Order of `f` at `x = c`.
pub fn val_at_point(f: &RatFunc, c: &Rational) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let lin = Poly::linear_root(c);
    let zeros = f.num().multiplicity_of(&lin).0 as i64;
    let poles = f.den().multiplicity_of(&lin).0 as i64;
    Ok(zeros - poles)
}

/// Order of `f` at every root of the place factor, which must be the same
/// for all of them.
pub fn val_at_place(f: &RatFunc, place: &Place) -> Result<i64> {
    match place {
        Place::Infinity => val_infty(f),
        Place::Finite(p) => {
            if f.is_zero() {
                return Err(Error::ValuationOfZero);
            }
            let (pz, _) = p.to_zpoly();
            let (nz, _) = f.num().to_zpoly();
            let (dz, _) = f.den().to_zpoly();
            order_of_fraction(&nz, &dz, &pz)
        }
    }
}

/// Order of `num / den` at the roots of the primitive squarefree `p`,
/// for a not necessarily reduced fraction. Fails if the roots of `p` do
/// not all see the same order in `num` and in `den`.
pub(crate) fn order_of_fraction(num: &ZPoly, den: &ZPoly, p: &ZPoly) -> Result<i64> {
    Ok(uniform_order(num, p)? as i64 - uniform_order(den, p)? as i64)
}

/// Multiplicity of the primitive squarefree `p` in `a`, required to be
/// the same at each root of `p`.
pub(crate) fn uniform_order(a: &ZPoly, p: &ZPoly) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    // x is the common case; avoid the division loop
    if p.degree() == Some(1) && p.coeffs()[0].is_zero() {
        return Ok(a.order_at_zero().unwrap() as u64);
    }
    let (k, rest) = a.strip_factor(p);
    if rest.degree().unwrap_or(0) > 0 && p.gcd(&rest).degree() != Some(0) {
        return Err(Error::IncompatiblePlace);
    }
    Ok(k)
}

/// Nonzero valuations of a function, keyed by place.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValuationDivisor {
    pub entries: BTreeMap<Place, i64>,
}

impl ValuationDivisor {
    /// `sum complex_degree * value`; zero for every nonzero function.
    pub fn weighted_sum(&self) -> i64 {
        self.entries
            .iter()
            .map(|(p, v)| p.complex_degree() as i64 * v)
            .sum()
    }

    pub fn get(&self, p: &Place) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A list of `{factor, complex_degree, value}` records.
impl serde::Serialize for ValuationDivisor {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{SerializeSeq, SerializeStruct};
        struct Entry<'a>(&'a Place, i64);
        impl serde::Serialize for Entry<'_> {
            fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
                let mut st = ser.serialize_struct("Entry", 3)?;
                st.serialize_field("factor", &self.0.to_string())?;
                st.serialize_field("complex_degree", &self.0.complex_degree())?;
                st.serialize_field("value", &self.1)?;
                st.end()
            }
        }
        let mut seq = ser.serialize_seq(Some(self.entries.len()))?;
        for (p, v) in &self.entries {
            seq.serialize_element(&Entry(p, *v))?;
        }
        seq.end()
    }
}

pub fn valuation_divisor(f: &RatFunc) -> Result<ValuationDivisor> {
    if f.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let mut entries = BTreeMap::new();
    let basis = coprime_basis(&[f.num().clone(), f.den().clone()])?;
    for (factor, e) in basis.factors.iter().zip(&basis.exponents) {
        let v = e[0] as i64 - e[1] as i64;
        if v != 0 {
            entries.insert(Place::Finite(factor.clone()), v);
        }
    }
    let vi = val_infty(f)?;
    if vi != 0 {
        entries.insert(Place::Infinity, vi);
    }
    Ok(ValuationDivisor { entries })
}

/// Sum of the positive parts of all valuations. Computed from the divisor
/// and checked against `max(deg num, deg den)`.
pub fn height(f: &RatFunc) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::HeightOfZero);
    }
    let div = valuation_divisor(f)?;
    let from_divisor: u64 = div
        .entries
        .iter()
        .filter(|(_, &v)| v > 0)
        .map(|(p, &v)| p.complex_degree() * v as u64)
        .sum();
    let from_degrees = f.num().deg().max(f.den().deg()) as u64;
    assert_eq!(
        from_divisor, from_degrees,
        "height mismatch for {f}: divisor {from_divisor}, degrees {from_degrees}"
    );
    Ok(from_divisor)
}

/// Height without building the divisor.
pub fn height_by_degree(f: &RatFunc) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::HeightOfZero);
    }
    Ok(f.num().deg().max(f.den().deg()) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyOutcome {
    Holds,
    Fails,
    /// Hypothesis of the property not met by the arguments.
    Skipped,
}

impl PropertyOutcome {
    fn from_bool(b: bool) -> Self {
        if b {
            PropertyOutcome::Holds
        } else {
            PropertyOutcome::Fails
        }
    }
}

/// Outcome of each height property for one set of arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightPropertyReport {
    /// `H(f) >= 0` and `H(f) = H(1/f)`
    pub nonneg_inverse: PropertyOutcome,
    /// `H(f) - H(g) <= H(f+g) <= H(f) + H(g)`
    pub sum: PropertyOutcome,
    /// `H(f) - H(g) <= H(fg) <= H(f) + H(g)`
    pub product: PropertyOutcome,
    /// `H(f^n) = |n| H(f)`
    pub power: PropertyOutcome,
    /// `H(f) = 0` iff `f` is constant
    pub constants: PropertyOutcome,
    /// `H(A(f)) = deg A * H(f)`
    pub composition: PropertyOutcome,
}

impl HeightPropertyReport {
    pub fn outcomes(&self) -> [PropertyOutcome; 6] {
        [
            self.nonneg_inverse,
            self.sum,
            self.product,
            self.power,
            self.constants,
            self.composition,
        ]
    }

    /// True when no property fails.
    pub fn holds(&self) -> bool {
        !self.outcomes().contains(&PropertyOutcome::Fails)
    }
}

/// Checks the height identities and inequalities for nonzero `f`, `g`, an
/// integer exponent and a nonzero polynomial `a`.
pub fn check_height_properties(
    f: &RatFunc,
    g: &RatFunc,
    n: i64,
    a: &Poly,
) -> Result<HeightPropertyReport> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::HeightOfZero);
    }
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("composition"));
    }
    let hf = height(f)? as i64;
    let hg = height(g)? as i64;

    let nonneg_inverse = PropertyOutcome::from_bool(hf >= 0 && height(&f.inv()?)? as i64 == hf);

    let s = f.add(g);
    let sum = if s.is_zero() {
        PropertyOutcome::Skipped
    } else {
        let hs = height(&s)? as i64;
        PropertyOutcome::from_bool(hf - hg <= hs && hs <= hf + hg)
    };

    let hp = height(&f.mul(g))? as i64;
    let product = PropertyOutcome::from_bool(hf - hg <= hp && hp <= hf + hg);

    let power =
        PropertyOutcome::from_bool(height(&f.powi(n)?)? as i64 == n.abs() * hf);

    let constants = PropertyOutcome::from_bool((hf == 0) == f.is_constant());

    let composed = f.compose_into(a);
    let composition = if composed.is_zero() {
        PropertyOutcome::Skipped
    } else {
        PropertyOutcome::from_bool(height(&composed)? as i64 == a.deg() as i64 * hf)
    };

    Ok(HeightPropertyReport {
        nonneg_inverse,
        sum,
        product,
        power,
        constants,
        composition,
    })
}
