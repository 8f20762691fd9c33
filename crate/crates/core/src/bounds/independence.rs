use num_bigint::BigInt;
use rayon::prelude::*;

use super::CoefficientBasis;
use crate::arith::{Poly, ZPoly};
use crate::linalg;
use crate::recurrence::{require_nondegenerate, PowerSumSpec};
use crate::error::Result;

/// The chosen `pi_{ji}` and, when the set `{pi_{ji} alpha_j^n}` is
/// dependent, a minimal dependent subset of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceWitness {
    /// `pis[j]` lists indices `k` of the coefficients `a_{jk}` chosen for term `j`.
    pub pis: Vec<Vec<usize>>,
    /// Elements as `(j, k)`: `a_{jk} alpha_j^n`.
    pub dependent_subset: Option<Vec<(usize, usize)>>,
}

/// Integer numerators of `pi_{ji} alpha_j^n` over one common denominator,
/// in the order given by `pis`.
fn element_vectors(spec: &PowerSumSpec, pis: &[Vec<usize>], n: u64) -> Vec<Vec<BigInt>> {
    let terms = spec.terms();
    let mut pi_dens: Vec<&Poly> = Vec::new();
    for (j, ks) in pis.iter().enumerate() {
        for &k in ks {
            let d = terms[j].coeffs[k].den();
            if !d.is_one() && !pi_dens.contains(&d) {
                pi_dens.push(d);
            }
        }
    }
    let nums: Vec<ZPoly> = terms.iter().map(|t| t.alpha.num().to_zpoly().0).collect();
    let dens: Vec<ZPoly> = terms.iter().map(|t| t.alpha.den().to_zpoly().0).collect();
    let den_pows: Vec<ZPoly> = dens.iter().map(|d| d.pow(n)).collect();
    let mut out = Vec::new();
    for (j, ks) in pis.iter().enumerate() {
        // alpha_j^n times the denominators of the other roots, up to a constant
        let power = den_pows
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != j)
            .fold(nums[j].pow(n), |acc, (_, d)| acc.mul(d));
        for &k in ks {
            let c = &terms[j].coeffs[k];
            let pi = pi_dens
                .iter()
                .filter(|d| **d != c.den())
                .fold(c.num().clone(), |acc, d| acc.mul(d));
            out.push(linalg::zpoly_vector(&pi.to_zpoly().0.mul(&power)));
        }
    }
    out
}

/// Tests whether `{pi_{ji} alpha_j^n}` is linearly independent over `Q`
/// (equivalently over `C`).
pub fn independence_test(spec: &PowerSumSpec, n: u64) -> (bool, IndependenceWitness) {
    let pis = CoefficientBasis::new(spec).pis;
    independence_with(spec, pis, n)
}

fn independence_with(
    spec: &PowerSumSpec,
    pis: Vec<Vec<usize>>,
    n: u64,
) -> (bool, IndependenceWitness) {
    let vectors = element_vectors(spec, &pis, n);
    let labels: Vec<(usize, usize)> = pis
        .iter()
        .enumerate()
        .flat_map(|(j, ks)| ks.iter().map(move |&k| (j, k)))
        .collect();
    let dependent_subset = linalg::minimal_dependent_subset(&vectors)
        .map(|idx| idx.into_iter().map(|i| labels[i]).collect());
    (
        dependent_subset.is_none(),
        IndependenceWitness {
            pis,
            dependent_subset,
        },
    )
}

/// Independence of the set for each `n` in `0..=n_max`, computed in parallel.
pub fn independence_profile(spec: &PowerSumSpec, n_max: u64) -> Vec<bool> {
    let pis = CoefficientBasis::new(spec).pis;
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let v = element_vectors(spec, &pis, n);
            linalg::is_independent(&v)
        })
        .collect()
}

/// One more than the largest `n <= n_max` at which the set is dependent,
/// or `None` if it is independent throughout.
pub fn independence_horizon(spec: &PowerSumSpec, n_max: u64) -> Result<Option<u64>> {
    if spec.len() >= 2 {
        require_nondegenerate(spec)?;
    }
    let profile = independence_profile(spec, n_max);
    Ok(profile
        .iter()
        .rposition(|&ok| !ok)
        .map(|n| n as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn worked_example_is_independent() {
        let (ok, w) = independence_test(&worked(), 3);
        assert!(ok);
        assert_eq!(w.pis, vec![vec![0], vec![0]]);
        assert_eq!(w.dependent_subset, None);
    }

    #[test]
    fn collision_is_dependent_once() {
        let (ok, w) = independence_test(&collision(), 1);
        assert!(!ok);
        assert_eq!(w.dependent_subset, Some(vec![(0, 0), (1, 0)]));
        assert!(independence_test(&collision(), 0).0);
        assert!(independence_test(&collision(), 2).0);
        assert_eq!(independence_horizon(&collision(), 200).unwrap(), Some(2));
    }

    #[test]
    fn horizons() {
        // (x+1) x^1 = x (x+1)^1
        assert_eq!(independence_horizon(&worked(), 60).unwrap(), Some(2));
        let single = spec(vec![(vec![p(&[1]), p(&[0, 1])], rf(&[1, 1], &[0, 1]))]);
        assert_eq!(independence_horizon(&single, 30).unwrap(), None);
    }
}
