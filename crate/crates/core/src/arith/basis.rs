//! Squarefree parts and coprime-basis refinement.
//!
//! A coprime basis of `p_1, ..., p_k` is a list of monic squarefree,
//! pairwise coprime polynomials `f_1, ..., f_m` such that each `p_i` is a
//! constant times a product of powers of the `f_j`. Over `C` the roots of
//! distinct `f_j` are disjoint, and every root of `f_j` occurs in `p_i`
//! with the same multiplicity, so each factor stands for a set of points
//! on which every input has a uniform order of vanishing.

use super::poly::Poly;
use crate::error::{Error, Result};

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree part"));
    }
    if p.is_constant() {
        return Ok(Poly::one());
    }
    let g = p.gcd(&p.derivative())?;
    Ok(p.div_exact(&g).expect("gcd divides").monic())
}

/// Yun's algorithm: monic squarefree, pairwise coprime `s_i` (with
/// multiplicity `i`) such that `p = c * prod s_i^i`. Trivial factors are
/// omitted.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(Poly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree decomposition"));
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let g = p.gcd(&dp)?;
    let mut a = p.div_exact(&g).unwrap();
    let mut b = dp.div_exact(&g).unwrap();
    let mut c = b.sub(&a.derivative());
    let mut i = 1;
    loop {
        let d = a.gcd(&c)?;
        if !d.is_constant() {
            out.push((d.clone(), i));
        }
        a = a.div_exact(&d).unwrap();
        if a.is_constant() {
            break;
        }
        b = c.div_exact(&d).unwrap();
        c = b.sub(&a.derivative());
        i += 1;
    }
    Ok(out)
}

/// Pairwise coprime squarefree refinement of a set of inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeBasis {
    /// Monic squarefree factors in canonical order.
    pub factors: Vec<Poly>,
    /// `exponents[f][i]` is the exponent of `factors[f]` in input `i`.
    pub exponents: Vec<Vec<u32>>,
}

impl CoprimeBasis {
    /// Exponent of factor `f` in input `i`.
    pub fn exponent(&self, f: usize, i: usize) -> u32 {
        self.exponents[f][i]
    }

    /// `prod factor^exponent` for input `i` (monic).
    pub fn reconstruct(&self, i: usize) -> Poly {
        self.factors
            .iter()
            .zip(&self.exponents)
            .fold(Poly::one(), |acc, (f, e)| acc.mul(&f.pow(e[i] as u64)))
    }
}

pub fn coprime_basis(ps: &[Poly]) -> Result<CoprimeBasis> {
    if ps.iter().any(Poly::is_zero) {
        return Err(Error::ZeroPolynomial("coprime basis"));
    }
    let mut pool: Vec<Poly> = Vec::new();
    for p in ps {
        for (s, _) in squarefree_decomposition(p)? {
            pool.push(s);
        }
    }
    let factors = refine(pool)?;
    let exponents = factors
        .iter()
        .map(|f| {
            ps.iter()
                .map(|p| {
                    if p.is_constant() {
                        0
                    } else {
                        p.multiplicity_of(f).0 as u32
                    }
                })
                .collect()
        })
        .collect();
    Ok(CoprimeBasis { factors, exponents })
}

/// Splits squarefree polynomials into pairwise coprime pieces with the same
/// combined root set.
pub fn refine(input: Vec<Poly>) -> Result<Vec<Poly>> {
    let mut done: Vec<Poly> = Vec::new();
    let mut todo: Vec<Poly> = input
        .into_iter()
        .filter(|p| !p.is_constant())
        .map(|p| p.monic())
        .collect();
    'outer: while let Some(mut p) = todo.pop() {
        let mut i = 0;
        while i < done.len() {
            let g = p.gcd(&done[i])?;
            if !g.is_constant() {
                let q = done.swap_remove(i);
                let rest_q = q.div_exact(&g).unwrap();
                let rest_p = p.div_exact(&g).unwrap();
                for r in [g, rest_q, rest_p] {
                    if !r.is_constant() {
                        todo.push(r.monic());
                    }
                }
                continue 'outer;
            }
            i += 1;
        }
        p = p.monic();
        done.push(p);
    }
    done.sort();
    done.dedup();
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn squarefree_examples() {
        let cube = p(&[-1, 1]).pow(3);
        assert_eq!(squarefree_part(&cube).unwrap(), p(&[-1, 1]));
        assert_eq!(squarefree_part(&p(&[1, 2, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(squarefree_part(&p(&[1, 0, 1])).unwrap(), p(&[1, 0, 1]));
        assert!(squarefree_part(&Poly::zero()).is_err());
    }

    #[test]
    fn yun_decomposition() {
        // 3 (x-1)^2 (x+1) (x^2+1)^3
        let f = p(&[3])
            .mul(&p(&[-1, 1]).pow(2))
            .mul(&p(&[1, 1]))
            .mul(&p(&[1, 0, 1]).pow(3));
        let d = squarefree_decomposition(&f).unwrap();
        assert_eq!(
            d,
            vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 2), (p(&[1, 0, 1]), 3)]
        );
    }

    #[test]
    fn basis_examples() {
        let b = coprime_basis(&[Poly::x(), p(&[1, 1])]).unwrap();
        assert_eq!(b.factors, vec![Poly::x(), p(&[1, 1])]);
        assert_eq!(b.exponents, vec![vec![1, 0], vec![0, 1]]);

        let b = coprime_basis(&[p(&[-1, 0, 1]), p(&[-1, 1])]).unwrap();
        assert_eq!(b.factors, vec![p(&[-1, 1]), p(&[1, 1])]);
        assert_eq!(b.exponents, vec![vec![1, 1], vec![1, 0]]);

        let b = coprime_basis(&[p(&[0, 0, 0, 1])]).unwrap();
        assert_eq!(b.factors, vec![Poly::x()]);
        assert_eq!(b.exponents, vec![vec![3]]);

        assert!(coprime_basis(&[Poly::x(), Poly::zero()]).is_err());
    }

    #[test]
    fn uneven_multiplicities_split() {
        // (x-1)^2 (x+1) must not yield the single factor x^2-1
        let f = p(&[-1, 1]).pow(2).mul(&p(&[1, 1]));
        let b = coprime_basis(&[f.clone()]).unwrap();
        assert_eq!(b.factors.len(), 2);
        assert_eq!(b.reconstruct(0), f);
    }
}
