mod common;

use common::*;
use proptest::prelude::*;
use recgrow::arith::rational::rat;
use recgrow::arith::{coprime_basis, squarefree_decomposition, Poly, RatFunc};
use recgrow::places::{height, val_at_point, val_infty, valuation_divisor, Place};

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|c| p(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly_strategy(max_deg).prop_filter("nonzero", |q| !q.is_zero())
}

fn ratfunc(max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (nonzero_poly(max_deg), nonzero_poly(max_deg)).prop_map(|(n, d)| RatFunc::normalize(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gcd_divides_both(a in nonzero_poly(6), b in nonzero_poly(6), c in nonzero_poly(3)) {
        let (a, b) = (a.mul(&c), b.mul(&c));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(c.monic().divides(&g));
    }

    #[test]
    fn division_identity(a in poly_strategy(8), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn field_operations(f in ratfunc(4), g in ratfunc(4), h in ratfunc(3)) {
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        prop_assert_eq!(f.sub(&f), RatFunc::zero());
        prop_assert!(f.mul(&f.inv().unwrap()).is_one());
        prop_assert!(f.den().is_monic());
        prop_assert!(f.num().gcd(f.den()).unwrap().deg() == 0);
        for x in -3i64..=3 {
            let xr = rat(x);
            if let (Some(a), Some(b), Some(s)) = (f.eval(&xr), g.eval(&xr), f.add(&g).eval(&xr)) {
                prop_assert_eq!(a + b, s);
            }
        }
    }

    #[test]
    fn squarefree_parts_reconstruct(a in nonzero_poly(3), b in nonzero_poly(2)) {
        let q = a.mul(&a).mul(&b);
        let parts = squarefree_decomposition(&q).unwrap();
        let rebuilt = parts.iter().fold(Poly::one(), |acc, (f, e)| acc.mul(&f.pow(*e as u64)));
        prop_assert_eq!(rebuilt, q.monic());
        for (f, _) in &parts {
            prop_assert_eq!(f.gcd(&f.derivative()).unwrap().deg(), 0);
        }
    }

    #[test]
    fn coprime_basis_is_coprime(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let inputs = [a.mul(&c), b.mul(&c), c.clone()];
        let basis = coprime_basis(&inputs).unwrap();
        for (i, f) in basis.factors.iter().enumerate() {
            for g in &basis.factors[i + 1..] {
                prop_assert_eq!(f.gcd(g).unwrap().deg(), 0);
            }
        }
        for (i, input) in inputs.iter().enumerate() {
            prop_assert_eq!(basis.reconstruct(i), input.monic());
        }
    }

    #[test]
    fn valuations_match_derivative_oracle(f in ratfunc(5), c in -4i64..=4) {
        let c = rat(c);
        prop_assert_eq!(val_at_point(&f, &c).unwrap(), oracle_val_point(&f, &c));
        prop_assert_eq!(val_infty(&f).unwrap(), oracle_val_inf(&f));
        prop_assert_eq!(height(&f).unwrap() as i64, oracle_height(&f));
    }

    #[test]
    fn divisor_agrees_at_rational_points(f in ratfunc(5)) {
        let div = valuation_divisor(&f).unwrap();
        // finite part of the degree is deg num - deg den
        let finite: i64 = div.entries.iter()
            .filter(|(pl, _)| !pl.is_infinity())
            .map(|(pl, v)| pl.complex_degree() as i64 * v)
            .sum();
        prop_assert_eq!(finite, deg(f.num()) - deg(f.den()));
        prop_assert_eq!(div.get(&Place::Infinity), oracle_val_inf(&f));
    }
}

#[test]
fn parse_display_round_trip() {
    let mut r = rng(11);
    for _ in 0..200 {
        let q = rand_poly(&mut r, 7, 9);
        let text = q.to_string();
        assert_eq!(text.parse::<Poly>().unwrap(), q, "{text}");
    }
    assert!(Poly::zero().to_string().parse::<Poly>().unwrap().is_zero());
}
