//! Linear (in)dependence over `Q` of elements of `Q(x)`.
//!
//! Elements are brought over a common denominator and compared as integer
//! coefficient vectors of their numerators. Any common multiple of the
//! denominators works, so no gcds are needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{Poly, RatFunc, Rational, ZPoly};

/// Row echelon form over the integers, kept fraction free.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    /// `(pivot column, row)` with the row primitive
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the residue.
    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (piv, row) in &self.rows {
            if v.len() <= *piv || v[*piv].is_zero() {
                continue;
            }
            if v.len() < row.len() {
                v.resize(row.len(), BigInt::zero());
            }
            let a = &row[*piv];
            let b = v[*piv].clone();
            let g = a.gcd(&b);
            let ma = a / &g;
            let mb = &b / &g;
            for (k, x) in v.iter_mut().enumerate() {
                let r = row.get(k).cloned().unwrap_or_default();
                *x = &*x * &ma - &mb * r;
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Adds `v` if it is independent of the stored rows.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(piv) => {
                self.rows.push((piv, v));
                true
            }
        }
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Integer numerator vectors of `fs` over a shared denominator.
pub fn common_vectors(fs: &[RatFunc]) -> Vec<Vec<BigInt>> {
    let mut dens: Vec<&Poly> = Vec::new();
    for f in fs {
        if !f.den().is_one() && !dens.contains(&f.den()) {
            dens.push(f.den());
        }
    }
    fs.iter()
        .map(|f| {
            let others = dens
                .iter()
                .filter(|d| **d != f.den())
                .fold(f.num().clone(), |acc, d| acc.mul(d));
            rational_to_int_vector(&others)
        })
        .collect()
}

/// Scales away denominators. Each vector may be scaled independently since
/// only the span matters.
fn rational_to_int_vector(p: &Poly) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let (z, _) = p.to_zpoly();
    z.coeffs().to_vec()
}

pub fn zpoly_vector(p: &ZPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

/// Indices of a maximal independent subset chosen greedily from the front.
pub fn greedy_independent(vectors: &[Vec<BigInt>]) -> Vec<usize> {
    let mut e = Echelon::new();
    vectors
        .iter()
        .enumerate()
        .filter_map(|(i, v)| e.insert(v.clone()).then_some(i))
        .collect()
}

pub fn rank(vectors: &[Vec<BigInt>]) -> usize {
    greedy_independent(vectors).len()
}

pub fn is_independent(vectors: &[Vec<BigInt>]) -> bool {
    rank(vectors) == vectors.len()
}

/// A dependent subset none of whose proper subsets is dependent, or `None`
/// when all vectors are independent.
pub fn minimal_dependent_subset(vectors: &[Vec<BigInt>]) -> Option<Vec<usize>> {
    if is_independent(vectors) {
        return None;
    }
    let mut keep: Vec<usize> = (0..vectors.len()).collect();
    let mut i = 0;
    while i < keep.len() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&k| k != keep[i]).collect();
        let sub: Vec<Vec<BigInt>> = trial.iter().map(|&k| vectors[k].clone()).collect();
        if !is_independent(&sub) {
            keep = trial;
        } else {
            i += 1;
        }
    }
    Some(keep)
}

/// Rational coefficients `c` with `target = sum c_i basis_i`, when the
/// target lies in the span of the (independent) basis.
pub fn express_in_span(basis: &[RatFunc], target: &RatFunc) -> Option<Vec<Rational>> {
    let mut all: Vec<RatFunc> = basis.to_vec();
    all.push(target.clone());
    // keep a common scale so that coordinates are meaningful
    let mut dens: Vec<&Poly> = Vec::new();
    for f in &all {
        if !f.den().is_one() && !dens.contains(&f.den()) {
            dens.push(f.den());
        }
    }
    let cols: Vec<Poly> = all
        .iter()
        .map(|f| {
            dens.iter()
                .filter(|d| **d != f.den())
                .fold(f.num().clone(), |acc, d| acc.mul(d))
        })
        .collect();
    let rows = cols.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let k = basis.len();
    // augmented matrix: rows = coefficient index, cols = basis elements + target
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| cols.iter().map(|p| p.coeff(r)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !m[i][k].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        sol[c] = m[row][k].clone();
    }
    Some(sol)
}
