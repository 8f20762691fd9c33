//! Integer linear recurrences over `Q`: exact terms, certified roots, the
//! growth inequality `|G_n| >= (max_j |alpha_j|)^{n (1 - eps)}`, Schmidt's
//! zero bound and the product sandwich for `f(r)`.

mod disk;
mod roots;

pub use disk::{Complex, Disk};
pub use roots::isolate_roots;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{squarefree_decomposition, Poly, Rational};
use crate::error::{Error, Result};
use disk::{round_down, round_up};

/// A distinct characteristic root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEnclosure {
    pub disk: Disk,
    pub multiplicity: u32,
}

/// `G_{n+d} = -(c_0 G_n + ... + c_{d-1} G_{n+d-1})` with a monic integer
/// characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRecurrence {
    char_coeffs: Vec<BigInt>,
    initial_terms: Vec<BigInt>,
    /// Characteristic polynomial of the shortest recurrence the sequence obeys.
    minimal: Poly,
    roots: Vec<RootEnclosure>,
    precision_bits: u32,
}

pub const MIN_PRECISION_BITS: u32 = 32;

impl IntRecurrence {
    pub fn new(char_coeffs: Vec<BigInt>, initial_terms: Vec<BigInt>, precision_bits: u32) -> Result<Self> {
        if char_coeffs.len() < 2 {
            return Err(Error::InvalidSpec("characteristic polynomial must have degree >= 1".into()));
        }
        if !char_coeffs.last().unwrap().is_one() {
            return Err(Error::InvalidSpec("characteristic polynomial must be monic".into()));
        }
        if char_coeffs[0].is_zero() {
            return Err(Error::InvalidSpec("characteristic polynomial has the root 0".into()));
        }
        let d = char_coeffs.len() - 1;
        if initial_terms.len() != d {
            return Err(Error::InvalidSpec(format!(
                "expected {d} initial terms, got {}",
                initial_terms.len()
            )));
        }
        if precision_bits < MIN_PRECISION_BITS {
            return Err(Error::InvalidSpec(format!(
                "precision_bits must be at least {MIN_PRECISION_BITS}"
            )));
        }
        let minimal = minimal_char_poly(&char_coeffs, &initial_terms)?;
        let roots = certify_roots(&minimal, precision_bits)?;
        Ok(IntRecurrence {
            char_coeffs,
            initial_terms,
            minimal,
            roots,
            precision_bits,
        })
    }

    /// The same sequence with roots recertified at another precision.
    pub fn with_precision(&self, precision_bits: u32) -> Result<Self> {
        IntRecurrence::new(self.char_coeffs.clone(), self.initial_terms.clone(), precision_bits)
    }

    pub fn char_coeffs(&self) -> &[BigInt] {
        &self.char_coeffs
    }

    pub fn initial_terms(&self) -> &[BigInt] {
        &self.initial_terms
    }

    pub fn minimal_poly(&self) -> &Poly {
        &self.minimal
    }

    /// Distinct roots of the minimal characteristic polynomial, ordered by
    /// center (real part first).
    pub fn roots(&self) -> &[RootEnclosure] {
        &self.roots
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn order(&self) -> usize {
        self.char_coeffs.len() - 1
    }

    /// `G_0, ..., G_{n_max}`.
    pub fn terms(&self, n_max: u64) -> Vec<BigInt> {
        let d = self.order();
        let mut g: Vec<BigInt> = self.initial_terms.clone();
        while (g.len() as u64) <= n_max {
            let k = g.len() - d;
            let next = -self.char_coeffs[..d]
                .iter()
                .zip(&g[k..])
                .map(|(c, x)| c * x)
                .sum::<BigInt>();
            g.push(next);
        }
        g.truncate(n_max as usize + 1);
        g
    }

    /// Number of distinct roots and their largest multiplicity.
    pub fn schmidt_input(&self) -> SchmidtBoundInput {
        SchmidtBoundInput {
            k: self.roots.len() as u64,
            a: self.roots.iter().map(|r| r.multiplicity).max().unwrap_or(1),
        }
    }

    /// Rational bounds `lo <= max_j |alpha_j| <= hi`.
    pub fn max_modulus_bounds(&self) -> (Rational, Rational) {
        let b = self.precision_bits;
        let bounds: Vec<(Rational, Rational)> =
            self.roots.iter().map(|r| r.disk.modulus_bounds(b)).collect();
        let lo = bounds.iter().map(|x| x.0.clone()).max().unwrap();
        let hi = bounds.iter().map(|x| x.1.clone()).max().unwrap();
        (round_down(&lo, b), round_up(&hi, b))
    }
}

/// Exact `G_n` by unrolling.
pub fn eval_int_recurrence(rec: &IntRecurrence, n: u64) -> BigInt {
    rec.terms(n).pop().unwrap()
}

fn int_poly(c: &[BigInt]) -> Poly {
    Poly::new(c.iter().map(|x| Rational::from_integer(x.clone())).collect())
}

/// The generating function is `N(z) / R(z)` with `R` the reversed
/// characteristic polynomial; cancelling `gcd(N, R)` and reversing back
/// gives the minimal characteristic polynomial.
fn minimal_char_poly(c: &[BigInt], g: &[BigInt]) -> Result<Poly> {
    let d = c.len() - 1;
    let rev: Vec<BigInt> = c.iter().rev().cloned().collect();
    let n: Vec<BigInt> = (0..d)
        .map(|m| (0..=m).map(|i| &rev[i] * &g[m - i]).sum())
        .collect();
    let n = int_poly(&n);
    if n.is_zero() {
        return Err(Error::InvalidSpec("the sequence is identically zero".into()));
    }
    let r = int_poly(&rev);
    let common = r.gcd(&n)?;
    let r_min = r.div_exact(&common).expect("gcd divides");
    let min = Poly::new(r_min.coeffs().iter().rev().cloned().collect()).monic();
    debug_assert!(min.coeffs().iter().all(|x| x.is_integer()));
    Ok(min)
}

fn certify_roots(p: &Poly, bits: u32) -> Result<Vec<RootEnclosure>> {
    let mut out = Vec::new();
    for (factor, mult) in squarefree_decomposition(p)? {
        for disk in isolate_roots(&factor, bits)? {
            out.push(RootEnclosure { disk, multiplicity: mult });
        }
    }
    let disks: Vec<Disk> = out.iter().map(|r| r.disk.clone()).collect();
    if !roots::pairwise_disjoint(&disks) {
        return Err(Error::Precision);
    }
    out.sort_by(|a, b| {
        (&a.disk.center.re, &a.disk.center.im).cmp(&(&b.disk.center.re, &b.disk.center.im))
    });
    Ok(out)
}

pub fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Orders a root of unity of degree at most `bound` over `Q` can have.
pub fn root_of_unity_orders(bound: u64) -> Vec<u64> {
    // phi(m) >= sqrt(m / 2)
    let limit = 2 * bound * bound + 2;
    (1..=limit).filter(|&m| euler_phi(m) <= bound).collect()
}

/// Degree bound for a ratio of two roots of a degree-`k` polynomial.
pub fn ratio_degree_bound(k: usize) -> u64 {
    let k = k as u64;
    (2 * k).max(k * k.saturating_sub(1))
}

/// Outcome of the root-of-unity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NfNondegeneracy {
    NonDegenerate,
    /// `alpha_i / alpha_j` (0-based) is a root of unity of the given order.
    Degenerate { i: usize, j: usize, order: u64 },
}

/// Decides whether some ratio of distinct roots is a root of unity. A ratio
/// is cleared once its modulus enclosure excludes 1 or none of its powers of
/// admissible order encloses 1. It is flagged when a power encloses 1 in a
/// disk of radius below `2^-(bits/2)`; wider enclosures are undecided.
pub fn check_nondegenerate_nf(rec: &IntRecurrence) -> Result<NfNondegeneracy> {
    let bits = rec.precision_bits;
    let roots = &rec.roots;
    let orders = root_of_unity_orders(ratio_degree_bound(roots.len()));
    let one = Complex::one();
    let tight = Rational::new(BigInt::one(), BigInt::one() << (bits / 2));
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let ratio = roots[i].disk.div(&roots[j].disk, bits).ok_or(Error::Precision)?;
            let (lo, hi) = ratio.modulus_bounds(bits);
            if lo > Rational::one() || hi < Rational::one() {
                continue;
            }
            let mut power = Disk::point(Complex::one());
            let mut e = 0;
            for &m in &orders {
                while e < m {
                    power = power.mul(&ratio, bits);
                    e += 1;
                }
                if power.contains(&one) {
                    if power.radius <= tight {
                        return Ok(NfNondegeneracy::Degenerate { i, j, order: m });
                    }
                    return Err(Error::Precision);
                }
            }
        }
    }
    Ok(NfNondegeneracy::NonDegenerate)
}

fn require_nondegenerate_nf(rec: &IntRecurrence) -> Result<()> {
    match check_nondegenerate_nf(rec)? {
        NfNondegeneracy::NonDegenerate => Ok(()),
        NfNondegeneracy::Degenerate { i, j, order } => Err(Error::RootOfUnityRatio { i, j, order }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonCheckConfig {
    pub epsilon: Rational,
    pub n_max: u64,
    pub precision_bits: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonRow {
    pub n: u64,
    pub abs_gn_digits: u64,
    /// `log10` of the upper enclosure of the threshold, 6 decimals.
    pub threshold_log: String,
    pub verdict: Verdict,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonReport {
    pub min_n: Option<u64>,
    pub rows: Vec<EpsilonRow>,
}

fn log10_rational(r: &Rational) -> f64 {
    fn log10_int(x: &BigInt) -> f64 {
        let bits = x.bits();
        let shift = bits.saturating_sub(60);
        let top = (x >> shift).to_f64().unwrap();
        top.log10() + shift as f64 * std::f64::consts::LOG10_2
    }
    log10_int(r.numer()) - log10_int(r.denom())
}

/// Compares `|g|` with `x^{p/q}` given `lo <= x <= hi`.
fn compare_power(g: &BigInt, lo: &Rational, hi: &Rational, p: &BigInt, q: &BigInt) -> Verdict {
    let (p, q) = (p.to_u32().expect("exponent fits"), q.to_u32().expect("exponent fits"));
    let gq = num_traits::pow::Pow::pow(g.abs(), q);
    // |g|^q >= (a/b)^p  <=>  |g|^q b^p >= a^p
    let ge = |x: &Rational| {
        let a = num_traits::pow::Pow::pow(x.numer(), p);
        let b = num_traits::pow::Pow::pow(x.denom(), p);
        &gq * b >= a
    };
    // coarser bounds first; a verdict there holds for the finer ones
    for bits in COMPARE_TIERS {
        if ge(&round_up(hi, bits)) {
            return Verdict::Pass;
        }
        if !ge(&round_down(lo, bits)) {
            return Verdict::Fail;
        }
    }
    if ge(hi) {
        Verdict::Pass
    } else if !ge(lo) {
        Verdict::Fail
    } else {
        Verdict::Undecided
    }
}

const COMPARE_TIERS: [u32; 2] = [24, 96];

/// Scans `n = 0..=n_max`; a row passes only when `|G_n|` provably reaches
/// the upper enclosure of `(max |alpha_j|)^{n (1 - eps)}`.
pub fn verify_epsilon_inequality(rec: &IntRecurrence, cfg: &EpsilonCheckConfig) -> Result<EpsilonReport> {
    if !(cfg.epsilon.is_positive() && cfg.epsilon < Rational::one()) {
        return Err(Error::InvalidSpec("epsilon must lie in (0, 1)".into()));
    }
    let owned;
    let rec = if cfg.precision_bits == rec.precision_bits {
        rec
    } else {
        owned = rec.with_precision(cfg.precision_bits)?;
        &owned
    };
    require_nondegenerate_nf(rec)?;
    let (lo, hi) = rec.max_modulus_bounds();
    if lo <= Rational::one() {
        return Err(Error::Hypothesis("max |alpha_j| > 1".into()));
    }
    let terms = rec.terms(cfg.n_max);
    let keep = Rational::one() - &cfg.epsilon;
    let log_hi = log10_rational(&hi);
    let rows: Vec<EpsilonRow> = terms
        .par_iter()
        .enumerate()
        .map(|(n, g)| {
            let e = Rational::from_integer(BigInt::from(n)) * &keep;
            let verdict = compare_power(g, &lo, &hi, e.numer(), e.denom());
            let threshold = log_hi * e.to_f64().unwrap();
            EpsilonRow {
                n: n as u64,
                abs_gn_digits: g.abs().to_string().len() as u64,
                threshold_log: format!("{threshold:.6}"),
                verdict,
                ok: verdict == Verdict::Pass,
            }
        })
        .collect();
    let mut min_n = None;
    for row in rows.iter().rev() {
        if !row.ok {
            break;
        }
        min_n = Some(row.n);
    }
    Ok(EpsilonReport { min_n, rows })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SchmidtBoundInput {
    /// Number of distinct roots.
    pub k: u64,
    /// Largest multiplicity.
    pub a: u32,
}

/// Bits allowed in a Schmidt bound before refusing to expand it.
const SCHMIDT_MAX_BITS: u64 = 1 << 26;

/// `ln c(k, a) = (7 k^a)^{8 k^a}` exactly.
pub fn schmidt_zero_bound_log(inp: SchmidtBoundInput) -> Result<BigUint> {
    if inp.k == 0 || inp.a == 0 {
        return Err(Error::InvalidSpec("Schmidt bound needs k >= 1 and a >= 1".into()));
    }
    let ka = BigUint::from(inp.k).pow(inp.a);
    let base = &ka * 7u32;
    let exp = ka * 8u32;
    let too_big = || Error::InvalidSpec("Schmidt bound too large to expand".into());
    let e = exp.to_u64().ok_or_else(too_big)?;
    if e.saturating_mul(base.bits()) > SCHMIDT_MAX_BITS {
        return Err(too_big());
    }
    Ok(num_traits::pow::Pow::pow(base, e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichOutcome {
    /// `prod_v max(1, |f(r)|_v)` over all places of `Q`.
    #[serde(serialize_with = "serialize_display")]
    pub product: BigInt,
    /// `max(1, sum |coefficients|)`
    #[serde(serialize_with = "serialize_display")]
    pub c_used: BigInt,
    /// `c^-1 |r|^-m <= product <= c |r|^m`
    pub ok: bool,
    /// The finite places multiply to `1 / |f(r)|`.
    pub cancellation_ok: bool,
}

fn serialize_display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Trial division up to `limit`; returns prime powers and the cofactor.
fn factor_small(mut v: BigInt, limit: u64) -> (Vec<(BigInt, u32)>, BigInt) {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= limit {
        let bp = BigInt::from(p);
        if &bp * &bp > v {
            break;
        }
        let mut e = 0;
        while (&v % &bp).is_zero() {
            v /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (out, v)
}

/// Evaluates `f(r)` for integer `f` and checks the height sandwich with
/// `T = {inf}` together with the product formula for `f(r)`.
pub fn product_sandwich(f_coeffs: &[BigInt], r: &BigInt) -> Result<SandwichOutcome> {
    if r.is_zero() {
        return Err(Error::Hypothesis("r != 0".into()));
    }
    let f = f_coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .map(|k| &f_coeffs[..=k])
        .unwrap_or(&[]);
    let value: BigInt = f.iter().rev().fold(BigInt::zero(), |acc, c| acc * r + c);
    if value.is_zero() {
        return Err(Error::ProductAtRoot);
    }
    let m = f.len() as u32 - 1;
    let abs = value.abs();

    // archimedean place: max(1, |f(r)|); finite places: max(1, p^-v) = 1
    let (primes, cofactor) = factor_small(abs.clone(), 1_000_000);
    let finite_den = primes
        .iter()
        .fold(cofactor.clone(), |acc, (p, e)| acc * num_traits::pow::Pow::pow(p, *e));
    let finite = Rational::new(BigInt::one(), finite_den);
    let cancellation_ok = (finite * Rational::from_integer(abs.clone())).is_one();
    let product = abs.clone().max(BigInt::one());

    let sum: BigInt = f.iter().map(|c| c.abs()).sum();
    let c_used = sum.max(BigInt::one());
    let rm = num_traits::pow::Pow::pow(r.abs(), m);
    let upper_ok = product <= &c_used * &rm;
    let lower_ok = &product * &c_used * &rm >= BigInt::one();
    Ok(SandwichOutcome {
        product,
        c_used,
        ok: upper_ok && lower_ok,
        cancellation_ok,
    })
}
