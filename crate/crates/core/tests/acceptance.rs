//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::Rng;
use recgrow::arith::rational::{rat, ratio};
use recgrow::arith::RatFunc;
use recgrow::bounds::{
    bound_constants, degree_growth, independence_horizon, independence_test, verify_bounds,
    zannier_check, PlaceSetS, ZannierInstance,
};
use recgrow::io::{self, DocFormat};
use recgrow::numfield::{
    product_sandwich, schmidt_zero_bound_log, verify_epsilon_inequality, EpsilonCheckConfig,
    IntRecurrence, SchmidtBoundInput,
};
use recgrow::places::{check_height_properties, valuation_divisor, Place, PropertyOutcome};
use recgrow::recurrence::{eval_power_sum, to_recurrence, unroll_terms};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn divisor_sums_vanish() -> Check {
    let start = Instant::now();
    let mut r = rng(1);
    for i in 0..200 {
        let f = rand_ratfunc(&mut r, 8, 9);
        let div = valuation_divisor(&f).map_err(|e| e.to_string())?;
        ensure(div.weighted_sum() == 0, || format!("instance {i}: {f} sums to {}", div.weighted_sum()))?;
        let positive: i64 = div
            .entries
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(p, &v)| p.complex_degree() as i64 * v)
            .sum();
        ensure(positive == oracle_height(&f), || format!("instance {i}: height of {f}"))?;
        for c in -4..=4 {
            let c = rat(c);
            // factors are squarefree and pairwise coprime, so at most one vanishes at c
            let v: i64 = div
                .entries
                .iter()
                .filter(|(p, _)| matches!(p, Place::Finite(q) if q.eval(&c).is_zero()))
                .map(|(_, &v)| v)
                .sum();
            ensure(v == oracle_val_point(&f, &c), || format!("instance {i}: order of {f} at {c}"))?;
        }
        ensure(div.get(&Place::Infinity) == oracle_val_inf(&f), || format!("instance {i}: {f} at inf"))?;
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("200 functions in {:.2?}", start.elapsed()))
}

fn height_properties() -> Check {
    let start = Instant::now();
    let mut r = rng(2);
    for i in 0..500 {
        let f = rand_ratfunc(&mut r, 4, 6);
        let g = rand_ratfunc(&mut r, 4, 6);
        let n = r.gen_range(-4i64..=4);
        let a = rand_nonzero_poly(&mut r, 3, 4);
        let rep = check_height_properties(&f, &g, n, &a).map_err(|e| e.to_string())?;
        ensure(rep.holds(), || format!("instance {i}: {rep:?} for f={f} g={g} n={n} a={a}"))?;
        // the same properties against degree-based heights
        let (hf, hg) = (oracle_height(&f), oracle_height(&g));
        let s = f.add(&g);
        if !s.is_zero() {
            let hs = oracle_height(&s);
            ensure(hf - hg <= hs && hs <= hf + hg, || format!("instance {i}: sum"))?;
        } else {
            ensure(rep.sum == PropertyOutcome::Skipped, || format!("instance {i}: zero sum"))?;
        }
        let hp = oracle_height(&f.mul(&g));
        ensure(hf - hg <= hp && hp <= hf + hg, || format!("instance {i}: product"))?;
        ensure(oracle_height(&f.powi(n).unwrap()) == n.abs() * hf, || format!("instance {i}: power"))?;
        ensure(oracle_height(&f.inv().unwrap()) == hf, || format!("instance {i}: inverse"))?;
        let composed = f.compose_into(&a);
        ensure(oracle_height(&composed) == deg(&a) * hf, || format!("instance {i}: composition"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("500 instances in {:.2?}", start.elapsed()))
}

fn power_sum_matches_recurrence() -> Check {
    let corpus = corpus();
    for (name, s) in &corpus {
        let rec = to_recurrence(s);
        for (n, g) in unroll_terms(&rec, 60).iter().enumerate() {
            ensure(&eval_power_sum(s, n as u64) == g, || format!("{name} differs at n={n}"))?;
        }
    }
    Ok(format!("{} sequences, n <= 60", corpus.len()))
}

fn worked_example() -> Check {
    let s = worked();
    let c = bound_constants(&s, &Place::Infinity).map_err(|e| e.to_string())?;
    // S = {x, x + 1, inf}, q = 2, coefficients of height 1
    let coeffs: Vec<&RatFunc> = s.terms().iter().flat_map(|t| &t.coeffs).collect();
    let c_tilde = coeffs.iter().map(|f| oracle_val_inf(f)).min().unwrap();
    let c1 = 1 * (3 - 2);
    let c2 = c1 + coeffs.iter().map(|f| oracle_height(f)).max().unwrap();
    let got = (c.c_tilde, c.q, c.size_over_c as i64, c.c1, c.c2, c.min_mu_alpha);
    ensure(got == (c_tilde, 2, 3, c1, c2, -1), || format!("constants {got:?}"))?;
    let rep = verify_bounds(&s, &Place::Infinity, 300).map_err(|e| e.to_string())?;
    for row in &rep.rows {
        let g = eval_power_sum(&s, row.n);
        let v = -deg(g.num());
        ensure(row.mu_gn == Some(v), || format!("n={}: mu={:?} oracle {v}", row.n, row.mu_gn))?;
        let lower = c_tilde - row.n as i64;
        let upper = c2 - row.n as i64;
        ensure(row.lower == lower && row.upper == upper, || format!("n={}: bounds", row.n))?;
        ensure(lower <= v, || format!("n={}: lower bound violated", row.n))?;
        if row.n != 1 {
            ensure(row.guaranteed && v <= upper, || format!("n={}: upper bound", row.n))?;
        }
    }
    ensure(rep.violations().is_empty(), || "violations reported".into())?;
    ensure(rep.independence_horizon == Some(2), || format!("horizon {:?}", rep.independence_horizon))?;
    Ok(format!("C~={c_tilde} C1={c1} C2={c2}, n in [0, 300]"))
}

fn degree_growth_bound() -> Check {
    let rep = degree_growth(&worked(), 300).map_err(|e| e.to_string())?;
    for row in &rep.rows {
        let d = deg(eval_power_sum(&worked(), row.n).num());
        ensure(row.deg_gn == Some(d as u64), || format!("worked n={}", row.n))?;
        ensure(d >= row.n as i64 - 2, || format!("worked n={}: deg {d}", row.n))?;
    }
    let rep = degree_growth(&cube(), 300).map_err(|e| e.to_string())?;
    for row in &rep.rows {
        ensure(row.slack == Some(0) && row.deg_gn == Some(3 * row.n), || format!("cube n={}", row.n))?;
    }
    Ok("worked deg G_n >= n - 2, cube slack 0, n <= 300".into())
}

fn zannier_instances() -> Check {
    let mut r = rng(99);
    let mut done = 0;
    while done < 50 {
        let Some((phis, rr)) = random_zannier(&mut r) else { continue };
        let pts = covering_places(&phis, &mut r);
        let mut places: Vec<Place> = pts.iter().map(|c| Place::point(&rat(*c))).collect();
        places.push(Place::Infinity);
        let s = PlaceSetS::from_places(places).map_err(|e| e.to_string())?;
        let inst = ZannierInstance::new(phis.clone(), rr, s).map_err(|e| e.to_string())?;
        let out = zannier_check(&inst).map_err(|e| e.to_string())?;
        let expect = zannier_oracle(&phis, rr, &pts);
        ensure((out.lhs, out.rhs) == expect, || format!("got {:?} oracle {expect:?}", (out.lhs, out.rhs)))?;
        ensure(out.ok && expect.0 <= expect.1, || format!("inequality fails: {expect:?}"))?;
        done += 1;
    }
    // x^2 + (1 - x^2) = 1, S = {inf}
    let phis = vec![poly_rf(&[0, 0, 1]), poly_rf(&[1, 0, -1])];
    let s = PlaceSetS::from_places([Place::Infinity]).unwrap();
    let out = zannier_check(&ZannierInstance::new(phis, 0, s).unwrap()).map_err(|e| e.to_string())?;
    ensure((out.lhs, out.rhs, out.ok) == (2, 3, true), || format!("hand example {out:?}"))?;
    Ok("50 random instances, hand example 2 <= 3".into())
}

fn independence_oracle() -> Check {
    let mut r = rng(7);
    let mut checked = 0;
    while checked < 60 {
        let Some(s) = random_spec(&mut r) else { continue };
        for n in 0..=4 {
            let (ok, w) = independence_test(&s, n);
            let q: usize = w.pis.iter().map(Vec::len).sum();
            ensure(q <= 6, || format!("q = {q}"))?;
            let els = elements(&s, &w.pis, n);
            ensure(ok == (evaluation_rank(&els) == els.len()), || format!("n={n} spec={s:?}"))?;
        }
        checked += 1;
    }
    let h = independence_horizon(&collision(), 100).map_err(|e| e.to_string())?;
    ensure(h == Some(2), || format!("collision horizon {h:?}"))?;
    Ok("60 random sequences, collision horizon 2".into())
}

fn fibonacci_min_n() -> Check {
    let mut out = Vec::new();
    for bits in [128, 256, 512] {
        let rec = IntRecurrence::new(vec![big(-1), big(-1), big(1)], vec![big(0), big(1)], bits)
            .map_err(|e| e.to_string())?;
        let cfg = EpsilonCheckConfig { epsilon: ratio(1, 10), n_max: 200, precision_bits: bits };
        let rep = verify_epsilon_inequality(&rec, &cfg).map_err(|e| e.to_string())?;
        ensure(rep.min_n == Some(17), || format!("{bits} bits: min_n {:?}", rep.min_n))?;
        out.push(bits.to_string());
    }
    Ok(format!("min_n = 17 at {} bits", out.join("/")))
}

fn schmidt_values() -> Check {
    for (k, a) in [(1u64, 1u32), (2, 1), (3, 1), (1, 2), (2, 2)] {
        let ka = k.pow(a);
        let expect = BigUint::from(7 * ka).pow((8 * ka) as u32);
        let got = schmidt_zero_bound_log(SchmidtBoundInput { k, a }).map_err(|e| e.to_string())?;
        ensure(got == expect, || format!("k={k} a={a}: {got}"))?;
    }
    let v = schmidt_zero_bound_log(SchmidtBoundInput { k: 1, a: 1 }).unwrap();
    ensure(v.to_string() == "5764801", || format!("k=a=1: {v}"))?;
    Ok("(7 k^a)^(8 k^a) for five (k, a)".into())
}

fn sandwich_x2_plus_1() -> Check {
    let f = [big(1), big(0), big(1)];
    for r in (-50i64..=50).filter(|&r| r != 0) {
        let out = product_sandwich(&f, &big(r)).map_err(|e| e.to_string())?;
        let v = BigInt::from(r * r + 1);
        ensure(out.product == v, || format!("r={r}: product {}", out.product))?;
        ensure(v <= BigInt::from(2 * r * r), || format!("r={r}: upper"))?;
        ensure(out.ok && out.cancellation_ok, || format!("r={r}: {out:?}"))?;
    }
    let zero = product_sandwich(&f, &big(0));
    ensure(zero.is_err(), || "r = 0 accepted".into())?;
    Ok("r in [-50, 50] \\ {0}".into())
}

fn cli_round_trip() -> Check {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_recgrow");
    let data = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |args: &[&str], threads: &str| {
        Command::new(bin).args(args).env("RECGROW_THREADS", threads).output().expect("binary runs")
    };
    for (name, fmt) in [("worked.toml", DocFormat::Toml), ("rational.json", DocFormat::Json)] {
        let orig = data.join(name);
        let text = std::fs::read_to_string(&orig).map_err(|e| e.to_string())?;
        let spec = io::parse_spec(&text, fmt).map_err(|e| e.to_string())?;
        let again = dir.path().join(format!("again-{name}"));
        std::fs::write(&again, io::serialize_spec(&spec, fmt)).map_err(|e| e.to_string())?;
        let reparsed = io::parse_spec(&std::fs::read_to_string(&again).unwrap(), fmt).unwrap();
        ensure(reparsed == spec, || format!("{name}: spec round trip"))?;
        let a = run(&["verify", "--input", orig.to_str().unwrap(), "--n-max", "60", "--format", "json"], "1");
        let b = run(&["verify", "--input", again.to_str().unwrap(), "--n-max", "60", "--format", "json"], "4");
        ensure(a.status.code() == Some(0) && b.status.code() == Some(0), || format!("{name}: exit codes"))?;
        ensure(a.stdout == b.stdout, || format!("{name}: reports differ"))?;
    }
    let fib = data.join("fib.json");
    let args = ["numfield", "--input", fib.to_str().unwrap(), "--n-max", "80"];
    let a = run(&args, "1");
    let b = run(&args, "4");
    ensure(a.status.code() == Some(0) && a.stdout == b.stdout, || "numfield report differs".into())?;
    let bad = run(&["zannier", "--input", data.join("zannier_missing_pole.toml").to_str().unwrap()], "1");
    ensure(bad.status.code() == Some(2), || "missing pole accepted".into())?;
    Ok(format!("round trips and thread determinism in {:.2?}", start.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("divisor sum formula", divisor_sums_vanish),
        ("height properties", height_properties),
        ("power sum equals recurrence", power_sum_matches_recurrence),
        ("worked example sandwich", worked_example),
        ("degree growth", degree_growth_bound),
        ("subspace inequality", zannier_instances),
        ("independence test", independence_oracle),
        ("fibonacci epsilon threshold", fibonacci_min_n),
        ("zero count bound", schmidt_values),
        ("product formula sandwich", sandwich_x2_plus_1),
        ("cli round trip", cli_round_trip),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match res {
            Ok(detail) => println!("PASS {name}: {detail} ({:.2?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    let total = start.elapsed();
    if total > Duration::from_secs(120) {
        failed += 1;
        println!("FAIL total runtime {total:.2?} over 120s");
    }
    println!("{} of {} criteria passed in {total:.2?}", 11 - failed.min(11), 11);
    if failed > 0 {
        std::process::exit(1);
    }
}
