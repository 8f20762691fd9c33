use serde::Serialize;

use super::{bound_constants, independence_profile, require_polynomial, BoundConstants, CoefficientBasis};
use crate::error::{Error, Result};
use crate::places::{uniform_order, Place};
use crate::recurrence::{require_nondegenerate, IntegerScan, PowerSumSpec};

/// One index of a bound scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub n: u64,
    /// `mu(G_n)`, or `None` when `G_n = 0`.
    pub mu_gn: Option<i64>,
    pub lower: i64,
    pub upper: i64,
    pub ok: bool,
    /// The set `{pi_{ji} alpha_j^n}` is independent and no `b_{ji}(n)`
    /// vanishes, so the upper bound is proven at this `n`.
    pub guaranteed: bool,
}

impl BoundRow {
    pub fn zero_skip(&self) -> bool {
        self.mu_gn.is_none()
    }

    pub fn lower_ok(&self) -> bool {
        self.mu_gn.is_none_or(|m| self.lower <= m)
    }

    pub fn upper_ok(&self) -> bool {
        self.mu_gn.is_none_or(|m| m <= self.upper)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub place: String,
    pub constants: BoundConstants,
    pub rows: Vec<BoundRow>,
    /// Least `n0` with every row `n >= n0` ok; `None` if the last row fails.
    pub n0_observed: Option<u64>,
    pub independence_horizon: Option<u64>,
}

impl BoundReport {
    /// Rows that contradict a proven inequality: the lower bound anywhere,
    /// or the upper bound where it is guaranteed.
    pub fn violations(&self) -> Vec<&BoundRow> {
        self.rows
            .iter()
            .filter(|r| !r.lower_ok() || (r.guaranteed && !r.upper_ok()))
            .collect()
    }

    pub fn zero_rows(&self) -> Vec<u64> {
        self.rows.iter().filter(|r| r.zero_skip()).map(|r| r.n).collect()
    }
}

fn n0_of(oks: impl DoubleEndedIterator<Item = (u64, bool)>, n_max: u64) -> Option<u64> {
    let mut n0 = n_max + 1;
    for (n, ok) in oks.rev() {
        if !ok {
            break;
        }
        n0 = n;
    }
    (n0 <= n_max).then_some(n0)
}

/// `mu(G_n)` for `n = 0..=n_max` by a gcd-free integer scan.
fn valuations(spec: &PowerSumSpec, mu: &Place, n_max: u64) -> Result<Vec<Option<i64>>> {
    let mut scan = IntegerScan::new(spec);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    match mu {
        Place::Infinity => {
            let den_base = scan.common_den().degree().unwrap() as i64;
            let den_step: i64 = scan.alpha_dens().iter().map(|q| q.degree().unwrap() as i64).sum();
            for n in 0..=n_max {
                let num = scan.numerator();
                out.push(num.degree().map(|d| den_base + n as i64 * den_step - d as i64));
                scan.advance();
            }
        }
        Place::Finite(f) => {
            let p = f.to_zpoly().0;
            let den_base = uniform_order(scan.common_den(), &p)? as i64;
            let mut den_step = 0i64;
            for q in scan.alpha_dens() {
                den_step += uniform_order(q, &p)? as i64;
            }
            for n in 0..=n_max {
                let num = scan.numerator();
                let v = if num.is_zero() {
                    None
                } else {
                    Some(uniform_order(&num, &p)? as i64 - den_base - n as i64 * den_step)
                };
                out.push(v);
                scan.advance();
            }
        }
    }
    Ok(out)
}

/// Checks `C~ + n m <= mu(G_n) <= C + n m` with `m = min_j mu(alpha_j)` for
/// every `n <= n_max`.
pub fn verify_bounds(spec: &PowerSumSpec, mu: &Place, n_max: u64) -> Result<BoundReport> {
    if spec.len() >= 2 {
        require_nondegenerate(spec)?;
    }
    let constants = bound_constants(spec, mu)?;
    let vals = valuations(spec, mu, n_max)?;
    let profile = if spec.len() >= 2 {
        independence_profile(spec, n_max)
    } else {
        vec![true; n_max as usize + 1]
    };
    let cb = CoefficientBasis::new(spec);
    let rows: Vec<BoundRow> = vals
        .into_iter()
        .enumerate()
        .map(|(i, mu_gn)| {
            let n = i as u64;
            let lower = constants.c_tilde + n as i64 * constants.min_mu_alpha;
            let upper = constants.upper_constant + n as i64 * constants.min_mu_alpha;
            let ok = mu_gn.is_none_or(|m| lower <= m && m <= upper);
            BoundRow {
                n,
                mu_gn,
                lower,
                upper,
                ok,
                guaranteed: profile[i] && !cb.some_b_vanishes(n),
            }
        })
        .collect();
    let n0_observed = n0_of(rows.iter().map(|r| (r.n, r.ok)), n_max);
    let independence_horizon = profile.iter().rposition(|&ok| !ok).map(|n| n as u64 + 1);
    Ok(BoundReport {
        place: mu.to_string(),
        constants,
        rows,
        n0_observed,
        independence_horizon,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub n: u64,
    /// `deg G_n`, `None` when `G_n = 0`.
    pub deg_gn: Option<u64>,
    /// `nu_inf(G_n) = -deg G_n`
    pub nu_inf: Option<i64>,
    /// `n max_j deg alpha_j - C`
    pub bound: i64,
    /// `deg G_n - bound`
    pub slack: Option<i64>,
    pub ok: bool,
    pub guaranteed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub constant: i64,
    pub max_alpha_degree: u64,
    pub rows: Vec<DegreeRow>,
    pub n0_observed: Option<u64>,
}

impl DegreeReport {
    pub fn violations(&self) -> Vec<&DegreeRow> {
        self.rows.iter().filter(|r| r.guaranteed && !r.ok).collect()
    }
}

/// `deg G_n >= n max_j deg alpha_j - C` for polynomial data, which is the
/// upper bound at the place at infinity read through `deg = -nu_inf`.
pub fn degree_growth(spec: &PowerSumSpec, n_max: u64) -> Result<DegreeReport> {
    require_polynomial(spec).map_err(|_| Error::NonPolynomial)?;
    let base = verify_bounds(spec, &Place::Infinity, n_max)?;
    let max_alpha_degree = spec.alphas().map(|a| a.num().deg() as u64).max().unwrap();
    debug_assert_eq!(base.constants.min_mu_alpha, -(max_alpha_degree as i64));
    let constant = base.constants.upper_constant;
    let rows: Vec<DegreeRow> = base
        .rows
        .iter()
        .map(|r| {
            let bound = r.n as i64 * max_alpha_degree as i64 - constant;
            let deg = r.mu_gn.map(|m| (-m) as u64);
            DegreeRow {
                n: r.n,
                deg_gn: deg,
                nu_inf: r.mu_gn,
                bound,
                slack: deg.map(|d| d as i64 - bound),
                ok: deg.is_none_or(|d| d as i64 >= bound),
                guaranteed: r.guaranteed,
            }
        })
        .collect();
    let n0_observed = n0_of(rows.iter().map(|r| (r.n, r.ok)), n_max);
    Ok(DegreeReport {
        constant,
        max_alpha_degree,
        rows,
        n0_observed,
    })
}
