//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recgrow::arith::rational::rat;
use recgrow::arith::{Poly, RatFunc, Rational};
use recgrow::recurrence::{is_nondegenerate, PowerSumSpec, PowerSumTerm};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub fn rf(n: &[i64], d: &[i64]) -> RatFunc {
    RatFunc::normalize(p(n), p(d)).unwrap()
}

pub fn poly_rf(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(p(c))
}

pub fn rand_poly(r: &mut impl Rng, max_deg: usize, coeff: i64) -> Poly {
    let d = r.gen_range(0..=max_deg);
    let c: Vec<i64> = (0..=d).map(|_| r.gen_range(-coeff..=coeff)).collect();
    p(&c)
}

pub fn rand_nonzero_poly(r: &mut impl Rng, max_deg: usize, coeff: i64) -> Poly {
    loop {
        let q = rand_poly(r, max_deg, coeff);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn rand_ratfunc(r: &mut impl Rng, max_deg: usize, coeff: i64) -> RatFunc {
    let n = rand_nonzero_poly(r, max_deg, coeff);
    let d = rand_nonzero_poly(r, max_deg, coeff);
    RatFunc::normalize(n, d).unwrap()
}

/// `c (x - r_1)^{e_1} ... / (x - s_1)^{f_1} ...` with integer points, so all
/// zeros and poles are rational.
pub fn rand_split_ratfunc(r: &mut impl Rng, max_deg: usize) -> RatFunc {
    let mut num = Poly::constant(rat(r.gen_range(1..=4) * if r.gen_bool(0.5) { 1 } else { -1 }));
    let mut den = Poly::one();
    let dn = r.gen_range(0..=max_deg);
    let dd = r.gen_range(0..=max_deg.saturating_sub(dn));
    for _ in 0..dn {
        num = num.mul(&Poly::linear_root(&rat(r.gen_range(-3..=3))));
    }
    for _ in 0..dd {
        den = den.mul(&Poly::linear_root(&rat(r.gen_range(-3..=3))));
    }
    RatFunc::normalize(num, den).unwrap()
}

fn order_by_derivatives(q: &Poly, c: &Rational) -> i64 {
    let mut d = q.clone();
    let mut k = 0;
    while d.eval(c).is_zero() {
        d = d.derivative();
        k += 1;
    }
    k
}

/// Order at the point `c` from the first non-vanishing derivative.
pub fn oracle_val_point(f: &RatFunc, c: &Rational) -> i64 {
    assert!(!f.is_zero());
    order_by_derivatives(f.num(), c) - order_by_derivatives(f.den(), c)
}

pub fn deg(q: &Poly) -> i64 {
    q.coeffs().len() as i64 - 1
}

pub fn oracle_val_inf(f: &RatFunc) -> i64 {
    deg(f.den()) - deg(f.num())
}

pub fn oracle_height(f: &RatFunc) -> i64 {
    deg(f.num()).max(deg(f.den()))
}

/// Rank by dense Gaussian elimination over `Q`.
pub fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                let pivot_row = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `Q` of rational functions from their values at enough points.
/// A nonzero combination has numerator degree at most
/// `max deg num + sum deg den`, so it cannot vanish at more points than that.
pub fn evaluation_rank(fs: &[RatFunc]) -> usize {
    if fs.is_empty() {
        return 0;
    }
    let bound: i64 = fs.iter().map(|f| deg(f.num())).max().unwrap()
        + fs.iter().map(|f| deg(f.den())).sum::<i64>();
    let need = bound as usize + 1;
    let mut rows = Vec::with_capacity(need);
    let mut x = 0i64;
    while rows.len() < need {
        x += 1;
        let xr = rat(x);
        let vals: Option<Vec<Rational>> = fs.iter().map(|f| f.eval(&xr)).collect();
        if let Some(v) = vals {
            rows.push(v);
        }
    }
    rational_rank(rows)
}

pub fn spec(terms: Vec<(Vec<RatFunc>, RatFunc)>) -> PowerSumSpec {
    PowerSumSpec::new(terms.into_iter().map(|(c, a)| PowerSumTerm::new(c, a)).collect()).unwrap()
}

/// `(x + 1) x^n + x (x + 1)^n`
pub fn worked() -> PowerSumSpec {
    spec(vec![
        (vec![poly_rf(&[1, 1])], poly_rf(&[0, 1])),
        (vec![poly_rf(&[0, 1])], poly_rf(&[1, 1])),
    ])
}

/// `x x^n + (x^2)^n`, dependent only at `n = 1`.
pub fn collision() -> PowerSumSpec {
    spec(vec![
        (vec![poly_rf(&[0, 1])], poly_rf(&[0, 1])),
        (vec![poly_rf(&[1])], poly_rf(&[0, 0, 1])),
    ])
}

/// `(x^3)^n`
pub fn cube() -> PowerSumSpec {
    spec(vec![(vec![poly_rf(&[1])], poly_rf(&[0, 0, 0, 1]))])
}

/// Non-degenerate specs used across tests, including one with a single term.
pub fn corpus() -> Vec<(&'static str, PowerSumSpec)> {
    vec![
        ("worked", worked()),
        ("single_rational", spec(vec![(vec![poly_rf(&[1]), poly_rf(&[0, 1])], rf(&[1, 1], &[0, 1]))])),
        ("collision", collision()),
        ("cube", cube()),
        (
            "rational_mixed",
            spec(vec![
                (vec![rf(&[1], &[2]), rf(&[1], &[-1, 1])], rf(&[1, 1], &[0, 1])),
                (vec![poly_rf(&[3, 0, 1])], poly_rf(&[0, 2])),
            ]),
        ),
        (
            "three_terms",
            spec(vec![
                (vec![poly_rf(&[1])], poly_rf(&[1, 0, 1])),
                (vec![poly_rf(&[0, -1]), poly_rf(&[2])], poly_rf(&[-1, 1])),
                (vec![rf(&[1], &[1, 1])], rf(&[0, 0, 1], &[2, 1])),
            ]),
        ),
    ]
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// The elements `pi_{ji} alpha_j^n` named by a witness.
pub fn elements(s: &PowerSumSpec, pis: &[Vec<usize>], n: u64) -> Vec<RatFunc> {
    let mut out = Vec::new();
    for (j, ks) in pis.iter().enumerate() {
        let t = &s.terms()[j];
        for &k in ks {
            out.push(t.coeffs[k].mul(&t.alpha.pow(n)));
        }
    }
    out
}

pub fn random_spec(r: &mut impl Rng) -> Option<PowerSumSpec> {
    let t = r.gen_range(1..=3);
    let mut terms = Vec::new();
    for _ in 0..t {
        let k = r.gen_range(1..=2);
        let coeffs: Vec<RatFunc> = (0..k)
            .map(|_| {
                if r.gen_bool(0.3) {
                    // proportional coefficients lower the rank
                    RatFunc::constant(rat(r.gen_range(1..=3)))
                } else {
                    rand_ratfunc(r, 2, 3)
                }
            })
            .collect();
        let alpha = if r.gen_bool(0.5) {
            RatFunc::from_poly(rand_nonzero_poly(r, 2, 3))
        } else {
            rand_ratfunc(r, 2, 3)
        };
        terms.push((coeffs, alpha));
    }
    let terms = terms
        .into_iter()
        .map(|(c, a)| PowerSumTerm::new(c, a))
        .collect();
    let s = PowerSumSpec::new(terms).ok()?;
    is_nondegenerate(&s).is_nondegenerate().then_some(s)
}

pub fn random_zannier(r: &mut impl Rng) -> Option<(Vec<RatFunc>, usize)> {
    let n = r.gen_range(1..=5);
    let phis: Vec<RatFunc> = (0..n).map(|_| rand_split_ratfunc(r, 6)).collect();
    if evaluation_rank(&phis) < n {
        return None;
    }
    let sigma = phis.iter().fold(RatFunc::zero(), |a, f| a.add(f));
    if sigma.is_zero() {
        return None;
    }
    Some((phis, r.gen_range(0..=n)))
}

/// All rational zeros and poles of the `phi_i`, plus infinity and a few
/// extra points.
pub fn covering_places(phis: &[RatFunc], r: &mut impl Rng) -> Vec<i64> {
    let mut pts: Vec<i64> = (-3..=3)
        .filter(|c| {
            phis.iter().any(|f| oracle_val_point(f, &rat(*c)) != 0)
        })
        .collect();
    if r.gen_bool(0.5) {
        pts.push(r.gen_range(4..=6));
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Both sides of the subspace inequality from derivative valuations, with
/// `S` the given integer points plus infinity.
pub fn zannier_oracle(phis: &[RatFunc], r: usize, pts: &[i64]) -> (i64, i64) {
    let sigma = phis.iter().fold(RatFunc::zero(), |a, f| a.add(f));
    let mut lhs = oracle_val_inf(&sigma) - phis.iter().map(oracle_val_inf).min().unwrap();
    for c in pts {
        let c = rat(*c);
        lhs += oracle_val_point(&sigma, &c) - phis.iter().map(|f| oracle_val_point(f, &c)).min().unwrap();
    }
    let n = phis.len() as i64;
    let size = pts.len() as i64 + 1;
    (lhs, n * (n - 1) / 2 * (size - 2) + phis[r..].iter().map(oracle_height).sum::<i64>())
}
