//! Acceptance harness. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use covseries::combinatorics::{dim_lemma1, dim_theorem1, dim_theorem2};
use covseries::exactpoly::{BivariateTruncatedSeries, IntPolynomial};
use covseries::fixtures;
use covseries::ratfun::FactoredRational;
use covseries::section::{phi_rational, phi_series, psi_diagonal, psi_single_factor};
use covseries::springer::{
    all_nonnegative, partial_fraction_check, partial_fraction_check_with, poincare_series, poincare_series_via_psi,
    residues, sectioned_terms,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rf(c: &[i64], den: &[usize]) -> FactoredRational {
    FactoredRational::new(IntPolynomial::from_i64s(c), den.to_vec())
}

fn random_rational(rng: &mut ChaCha8Rng) -> FactoredRational {
    let deg = rng.gen_range(0..=8);
    let mut num: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
    if num.iter().all(|&c| c == 0) {
        num[0] = 1;
    }
    let factors = rng.gen_range(0..=4);
    let den = (0..factors).map(|_| rng.gen_range(1..=6)).collect();
    FactoredRational::new(IntPolynomial::from_i64s(&num), den)
}

fn coeff_at(p: &FactoredRational, i: usize) -> BigInt {
    p.numerator().coeff(i)
}

fn golden_tables() -> Outcome {
    let mut slowest = Duration::ZERO;
    for f in fixtures::all() {
        let start = Instant::now();
        let p = poincare_series(f.d).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(p.equals(&f.expression), || format!("d={} computed {p}", f.d))?;
        ensure(elapsed < Duration::from_secs(1), || {
            format!("d={} took {elapsed:?}", f.d)
        })?;
    }
    let landmarks: [(u32, &[usize], i64); 4] = [
        (7, &[17, 18], 231),
        (8, &[9], 38),
        (9, &[31, 32], 24355),
        (10, &[18], 2506),
    ];
    for (d, at, peak) in landmarks {
        let g = fixtures::golden(d).unwrap().expression;
        ensure(coeff_at(&g, 0) == BigInt::from(1), || format!("p_{d} constant term"))?;
        let max = g.numerator().coeffs().iter().max().unwrap().clone();
        ensure(max == BigInt::from(peak), || format!("p_{d} peak {max} != {peak}"))?;
        for &i in at {
            ensure(coeff_at(&g, i) == BigInt::from(peak), || {
                format!("p_{d}[{i}] != {peak}")
            })?;
        }
    }
    Ok(format!("d=1..10 exact; slowest {slowest:?}"))
}

fn worked_example() -> Outcome {
    let terms = sectioned_terms(3);
    ensure(terms.len() == 2, || format!("{} sectioned terms", terms.len()))?;
    let phi3 = &terms[0];
    ensure(phi3.numerator() == &IntPolynomial::from_i64s(&[1, 1, 1, 2, 1]), || {
        format!("phi_3 term {phi3}")
    })?;
    let sum = FactoredRational::sum(&terms);
    let expected_sum = rf(&[1, 1, 0, 1, 1], &[2, 2, 4]);
    ensure(
        sum.numerator() == expected_sum.numerator() && sum.denominator() == expected_sum.denominator(),
        || format!("sum {sum}"),
    )?;
    let p = sum.normalize();
    let expected = rf(&[1, 0, 0, 1], &[1, 2, 4]);
    ensure(
        p.numerator() == expected.numerator() && p.denominator() == expected.denominator(),
        || format!("normalized {p}"),
    )?;
    ensure(p.to_plain() == "(1+z^3)/((1-z)*(1-z^2)*(1-z^4))", || p.to_plain())?;
    Ok(p.to_plain())
}

fn method_agreement(d_max: u32) -> std::result::Result<usize, String> {
    let mut compared = 0;
    for d in 1..=d_max {
        let du = d as usize;
        let series = poincare_series(d).map_err(|e| e.to_string())?.expand(15);
        for n in 0..=15 {
            let t1 = dim_theorem1(du, n);
            let t2 = dim_theorem2(du, n);
            let l1 = dim_lemma1(du, n);
            let s = series.coeff(n);
            ensure(t1 == t2 && t1 == l1 && &BigInt::from(t1.clone()) == s, || {
                format!("d={d} n={n}: theorem1={t1} theorem2={t2} lemma1={l1} series={s}")
            })?;
            compared += 1;
        }
    }
    Ok(compared)
}

fn psi_oracle() -> Outcome {
    for d in 1..=6u32 {
        let direct = poincare_series_via_psi(d as usize, 12);
        let closed = poincare_series(d).map_err(|e| e.to_string())?.expand(12);
        ensure(direct == closed, || format!("d={d}"))?;
    }
    Ok("d=1..6 to z^12".into())
}

fn diagonal_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let order = 30;
    let cases = 120;
    for case in 0..cases {
        let r = random_rational(&mut rng);
        let k = rng.gen_range(0..=6);
        let n = k + rng.gen_range(1..=5);
        let grid = BivariateTruncatedSeries::from_series_over_linear_t(&r.expand(n * order), k, order, n * order);
        let lhs = psi_diagonal(&grid, 1, n);
        let rhs = psi_single_factor(&r, k, n).map_err(|e| e.to_string())?.expand(order);
        ensure(lhs == rhs, || format!("case {case}: R={r} k={k} n={n}"))?;
    }
    Ok(format!("{cases} random cases to z^{order}"))
}

fn section_closed_form() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let cases = 120;
    for case in 0..cases {
        let a = random_rational(&mut rng);
        let n = rng.gen_range(2..=5);
        let closed = phi_rational(&a, n).expand(40);
        let direct = phi_series(&a.expand(40 * n), n);
        ensure(closed == direct, || format!("case {case}: a={a} n={n}"))?;
    }
    Ok(format!("{cases} random cases, n in 2..=5, to z^40"))
}

/// Each mutation of one residue that the reconstruction must reject.
fn mutations(r: &FactoredRational) -> Vec<FactoredRational> {
    let mut out = vec![
        r.neg(),
        FactoredRational::new(r.numerator().shift(1), r.denominator().to_vec()),
    ];
    if r.numerator().valuation().is_some_and(|v| v > 0) {
        let num = IntPolynomial::new(r.numerator().coeffs()[1..].to_vec());
        out.push(FactoredRational::new(num, r.denominator().to_vec()));
    }
    if let Some(&last) = r.denominator().last() {
        let mut den = r.denominator().to_vec();
        *den.last_mut().unwrap() = last + 2;
        out.push(FactoredRational::new(r.numerator().clone(), den));
    }
    out
}

fn partial_fractions() -> Outcome {
    let mut rejected = 0;
    for d in 1..=6usize {
        let orders = (8, 16 * d);
        ensure(partial_fraction_check(d, orders), || {
            format!("d={d} reconstruction failed")
        })?;
        let good = residues(d);
        for k in 0..=d {
            for bad in mutations(&good[k]) {
                let mut rs = good.clone();
                rs[k] = bad;
                ensure(!partial_fraction_check_with(d, orders, &rs), || {
                    format!("d={d}: mutation of R_{k} to {} accepted", rs[k])
                })?;
                rejected += 1;
            }
        }
    }
    Ok(format!("d=1..6 hold; {rejected} mutations rejected"))
}

fn scale_ceiling() -> Outcome {
    let start = Instant::now();
    let mut series = Vec::new();
    for d in 1..=20u32 {
        series.push(poincare_series(d).map_err(|e| e.to_string())?);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    for (i, p) in series.iter().enumerate() {
        let d = i + 1;
        ensure(all_nonnegative(&p.expand(50)), || {
            format!("d={d} negative coefficient below z^50")
        })?;
        ensure(p.numerator().is_palindromic(), || {
            format!("d={d} numerator not palindromic")
        })?;
        ensure(p.is_normalized(), || format!("d={d} not normalized"))?;
    }
    let compared = method_agreement(20)?;
    Ok(format!("d=1..20 in {elapsed:?}; {compared} dims agree"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 golden tables d=1..10", golden_tables),
        ("2 worked example d=3", worked_example),
        ("3 method agreement d<=10 n<=15", || {
            method_agreement(10).map(|n| format!("{n} dims"))
        }),
        ("4 diagonal extraction oracle d<=6", psi_oracle),
        ("5 single-factor diagonal identity", diagonal_identity),
        ("6 section closed form", section_closed_form),
        ("7 partial-fraction reconstruction", partial_fractions),
        ("8 scale ceiling d<=20", scale_ceiling),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS  {name}  ({detail}; {ms} ms)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}  ({detail}; {ms} ms)");
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
