//! Power sums `G_n = a_1(n) alpha_1^n + ... + a_t(n) alpha_t^n` over `Q(x)`
//! and the linear recurrence they satisfy.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{Poly, RatFunc, Rational, ZPoly};
use crate::error::{Error, Result};

/// One summand `a(n) alpha^n`, with `a(n) = sum_k coeffs[k] n^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumTerm {
    pub coeffs: Vec<RatFunc>,
    pub alpha: RatFunc,
}

impl PowerSumTerm {
    pub fn new(coeffs: Vec<RatFunc>, alpha: RatFunc) -> Self {
        PowerSumTerm { coeffs, alpha }
    }

    /// Degree of the coefficient polynomial in `n`.
    pub fn degree_in_n(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `a(n)` as an element of `Q(x)`.
    pub fn coeff_at(&self, n: u64) -> RatFunc {
        let n = Rational::from_integer(BigInt::from(n));
        self.coeffs
            .iter()
            .rev()
            .fold(RatFunc::zero(), |acc, c| acc.scale(&n).add(c))
    }
}

/// A validated power sum: nonzero pairwise distinct roots and nonzero
/// coefficient polynomials with nonzero leading entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumSpec {
    terms: Vec<PowerSumTerm>,
}

impl PowerSumSpec {
    /// Trailing zero coefficients are dropped; a term whose coefficients
    /// are all zero is rejected.
    pub fn new(mut terms: Vec<PowerSumTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidSpec("no terms".into()));
        }
        for (j, term) in terms.iter_mut().enumerate() {
            while term.coeffs.last().is_some_and(RatFunc::is_zero) {
                term.coeffs.pop();
            }
            if term.coeffs.is_empty() {
                return Err(Error::InvalidSpec(format!(
                    "coefficient polynomial of term {} is zero",
                    j + 1
                )));
            }
            if term.alpha.is_zero() {
                return Err(Error::InvalidSpec(format!("alpha_{} is zero", j + 1)));
            }
        }
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                if terms[i].alpha == terms[j].alpha {
                    return Err(Error::InvalidSpec(format!(
                        "alpha_{} and alpha_{} coincide; merge the terms",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(PowerSumSpec { terms })
    }

    pub fn terms(&self) -> &[PowerSumTerm] {
        &self.terms
    }

    /// Number of summands `t`.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn alphas(&self) -> impl Iterator<Item = &RatFunc> {
        self.terms.iter().map(|t| &t.alpha)
    }

    /// All nonzero `a_{jk}` with their `(j, k)` position.
    pub fn nonzero_coeffs(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        self.terms.iter().enumerate().flat_map(|(j, t)| {
            t.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(k, c)| (j, k, c))
        })
    }

    /// True when every root and coefficient is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.alpha.is_polynomial() && t.coeffs.iter().all(RatFunc::is_polynomial))
    }
}

/// Exact `G_n`.
pub fn eval_power_sum(spec: &PowerSumSpec, n: u64) -> RatFunc {
    spec.terms
        .iter()
        .fold(RatFunc::zero(), |acc, t| acc.add(&t.coeff_at(n).mul(&t.alpha.pow(n))))
}

/// Characteristic polynomial over `Q(x)` and initial values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceForm {
    /// Ascending coefficients in `T`; the last entry is one.
    pub char_poly: Vec<RatFunc>,
    pub initial_terms: Vec<RatFunc>,
}

impl RecurrenceForm {
    pub fn order(&self) -> usize {
        self.char_poly.len() - 1
    }
}

/// Product of two polynomials in `T` with coefficients in `Q(x)`.
fn mul_in_t(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    let mut out = vec![RatFunc::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// `prod_j (T - alpha_j)^(m_j + 1)` with initial values `G_0..G_{order-1}`.
pub fn to_recurrence(spec: &PowerSumSpec) -> RecurrenceForm {
    let mut char_poly = vec![RatFunc::one()];
    for t in spec.terms() {
        let lin = [t.alpha.neg(), RatFunc::one()];
        for _ in 0..=t.degree_in_n() {
            char_poly = mul_in_t(&char_poly, &lin);
        }
    }
    let order = char_poly.len() - 1;
    let initial_terms = (0..order as u64).map(|n| eval_power_sum(spec, n)).collect();
    RecurrenceForm {
        char_poly,
        initial_terms,
    }
}

/// `G_n` by iterating `G_{k+d} = -sum_{i<d} c_i G_{k+i}`.
pub fn unroll(rec: &RecurrenceForm, n: u64) -> RatFunc {
    unroll_terms(rec, n).pop().unwrap()
}

/// `G_0, ..., G_{n_max}` from the recurrence in one pass.
pub fn unroll_terms(rec: &RecurrenceForm, n_max: u64) -> Vec<RatFunc> {
    let d = rec.order();
    let mut g: Vec<RatFunc> = rec.initial_terms.iter().take(n_max as usize + 1).cloned().collect();
    while (g.len() as u64) <= n_max {
        let k = g.len() - d;
        let next = (0..d).fold(RatFunc::zero(), |acc, i| acc.sub(&rec.char_poly[i].mul(&g[k + i])));
        g.push(next);
    }
    g
}

/// Outcome of the constant-ratio test on the roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nondegeneracy {
    NonDegenerate,
    /// `alpha_i / alpha_j` is the constant `ratio` (0-based indices).
    Degenerate { i: usize, j: usize, ratio: Rational },
}

impl Nondegeneracy {
    pub fn is_nondegenerate(&self) -> bool {
        matches!(self, Nondegeneracy::NonDegenerate)
    }
}

/// A ratio of elements of `Q(x)` lies in `C` exactly when it lies in `Q`.
pub fn is_nondegenerate(spec: &PowerSumSpec) -> Nondegeneracy {
    let alphas: Vec<&RatFunc> = spec.alphas().collect();
    for i in 0..alphas.len() {
        for j in i + 1..alphas.len() {
            let r = alphas[i].div(alphas[j]).expect("alphas are nonzero");
            if let Some(c) = r.as_constant() {
                return Nondegeneracy::Degenerate { i, j, ratio: c };
            }
        }
    }
    Nondegeneracy::NonDegenerate
}

pub fn require_nondegenerate(spec: &PowerSumSpec) -> Result<()> {
    match is_nondegenerate(spec) {
        Nondegeneracy::NonDegenerate => Ok(()),
        Nondegeneracy::Degenerate { i, j, .. } => Err(Error::Degenerate { i, j }),
    }
}

/// `G_n = N_n / D_n` over the integers without any gcd, for scanning many
/// consecutive `n`. With `alpha_j = P_j / Q_j` and `a_{jk} = U_{jk} / V`:
/// `N_n = sum_j (sum_k U_{jk} n^k) P_j^n prod_{l != j} Q_l^n` and
/// `D_n = V prod_l Q_l^n`.
#[derive(Clone, Debug)]
pub struct IntegerScan {
    alpha_num: Vec<ZPoly>,
    alpha_den: Vec<ZPoly>,
    /// `coeff_num[j][k] = U_{jk}`
    coeff_num: Vec<Vec<ZPoly>>,
    common_den: ZPoly,
    /// `P_j^n prod_{l != j} Q_l^n` at the current `n`
    powers: Vec<ZPoly>,
    /// `P_j prod_{l != j} Q_l`
    steps: Vec<ZPoly>,
    n: u64,
}

impl IntegerScan {
    pub fn new(spec: &PowerSumSpec) -> Self {
        let mut alpha_num = Vec::new();
        let mut alpha_den = Vec::new();
        for t in spec.terms() {
            let (p, ps) = t.alpha.num().to_zpoly();
            let (q, qs) = t.alpha.den().to_zpoly();
            // alpha = (ps/qs) p/q; fold the constant into the numerator
            let c = ps / qs;
            alpha_num.push(p.scale(c.numer()));
            alpha_den.push(q.scale(c.denom()));
        }
        // common denominator V of all coefficients: product of distinct dens
        let mut dens: Vec<Poly> = Vec::new();
        for (_, _, c) in spec.nonzero_coeffs() {
            if !c.den().is_one() && !dens.contains(c.den()) {
                dens.push(c.den().clone());
            }
        }
        let v = dens.iter().fold(Poly::one(), |acc, d| acc.mul(d));
        let mut coeff_num = Vec::new();
        let mut lcm_int = BigInt::one();
        let mut scaled: Vec<Vec<Poly>> = Vec::new();
        for t in spec.terms() {
            let row: Vec<Poly> = t
                .coeffs
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        Poly::zero()
                    } else {
                        c.num().mul(&v.div_exact(c.den()).unwrap())
                    }
                })
                .collect();
            for p in &row {
                lcm_int = num_integer::Integer::lcm(
                    &lcm_int,
                    &crate::arith::rational::denominator_lcm(p.coeffs()),
                );
            }
            scaled.push(row);
        }
        let l = Rational::from_integer(lcm_int.clone());
        for row in scaled {
            coeff_num.push(
                row.into_iter()
                    .map(|p| {
                        ZPoly::new(p.coeffs().iter().map(|c| (c * &l).to_integer()).collect())
                    })
                    .collect(),
            );
        }
        let (vz, vs) = v.to_zpoly();
        // v = vs * vz, and numerators were multiplied by l
        let vs_l = vs * &l;
        let common_den = vz.scale(vs_l.numer());
        let coeff_num = coeff_num
            .into_iter()
            .map(|row: Vec<ZPoly>| row.into_iter().map(|p| p.scale(vs_l.denom())).collect())
            .collect();
        let t = spec.len();
        let steps: Vec<ZPoly> = (0..t)
            .map(|j| {
                (0..t).fold(alpha_num[j].clone(), |acc, l| {
                    if l == j {
                        acc
                    } else {
                        acc.mul(&alpha_den[l])
                    }
                })
            })
            .collect();
        IntegerScan {
            alpha_num,
            alpha_den,
            coeff_num,
            common_den,
            powers: vec![ZPoly::one(); t],
            steps,
            n: 0,
        }
    }

    /// Jumps directly to index `n`.
    pub fn at(spec: &PowerSumSpec, n: u64) -> Self {
        let mut s = IntegerScan::new(spec);
        s.powers = s.steps.iter().map(|p| p.pow(n)).collect();
        s.n = n;
        s
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(N_n, D_n)` at the current index.
    pub fn fraction(&self) -> (ZPoly, ZPoly) {
        let num = self.numerator();
        let den = self
            .alpha_den
            .iter()
            .fold(self.common_den.clone(), |acc, q| acc.mul(&q.pow(self.n)));
        (num, den)
    }

    /// Numerator only; the denominator's valuation is linear in `n`.
    pub fn numerator(&self) -> ZPoly {
        let nn = BigInt::from(self.n);
        let mut num = ZPoly::zero();
        for (row, pw) in self.coeff_num.iter().zip(&self.powers) {
            let a = row.iter().rev().fold(ZPoly::zero(), |acc, c| acc.scale(&nn).add(c));
            num = num.add(&a.mul(pw));
        }
        num
    }

    pub fn common_den(&self) -> &ZPoly {
        &self.common_den
    }

    pub fn alpha_dens(&self) -> &[ZPoly] {
        &self.alpha_den
    }

    pub fn alpha_nums(&self) -> &[ZPoly] {
        &self.alpha_num
    }

    pub fn advance(&mut self) {
        for (p, s) in self.powers.iter_mut().zip(&self.steps) {
            *p = p.mul(s);
        }
        self.n += 1;
    }
}
