//! One line per acceptance criterion: `criterion N: PASS|FAIL (seconds) description`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sccodes::cli::verify::{random_lc, random_sc};
use sccodes::codes::{linear_code, tenengolts, AllWords, Budget, Statistic, TenengoltsVariant};
use sccodes::enumerators::{
    lc_hamming, oracle_extended, tenengolts_cardinality, tenengolts_hamming, theorem1_extended,
    variant_cardinality, variant_hamming, Kind,
};
use sccodes::exactalg::{CycElement, IntPoly};
use sccodes::macwilliams::{random_full_rank, sizes_consistent, verify_macwilliams};
use sccodes::numtheory::{divisors, gcd, ramanujan_sum};
use sccodes::qcalc::{q_multinomial, q_multinomial_at_root, q_multinomial_dense, Composition};
use sccodes::Error;

const B: Budget = Budget::DEFAULT;

static SENTINEL_FIRED: AtomicBool = AtomicBool::new(false);

type Check = Result<(), String>;

/// Description, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

/// Unwraps a library result, remembering any integrality failure.
fn ok<T>(r: sccodes::Result<T>, ctx: impl FnOnce() -> String) -> Result<T, String> {
    r.map_err(|e: Error| {
        if e.is_integrality_violation() {
            SENTINEL_FIRED.store(true, Ordering::SeqCst);
        }
        format!("{}: {e}", ctx())
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn words(spec: &sccodes::codes::CodeSpec) -> Result<Vec<String>, String> {
    Ok(ok(spec.enumerate_codewords(B), || "enumerate".into())?.map(|w| w.to_string()).collect())
}

fn tables_of_small_codes() -> Check {
    let grid = [[5, 3, 3], [2, 3, 3], [2, 3, 3]];
    let table1 = [
        [&["000", "012", "111", "210", "222"][..], &["001", "022", "112"], &["002", "011", "122"]],
        [&["102", "201"][..], &["100", "202", "211"], &["101", "200", "212"]],
        [&["021", "120"][..], &["010", "121", "220"], &["020", "110", "221"]],
    ];
    for a1 in 0..3u64 {
        for a2 in 0..3u64 {
            let c = ok(tenengolts_cardinality(3, 3, a1, a2), || "cardinality".into())?;
            ensure(c == BigInt::from(grid[a1 as usize][a2 as usize]), || format!("|T_{a1},{a2}(3,3)| = {c}"))?;
            let spec = ok(tenengolts(3, 3, a1, a2, TenengoltsVariant::Gt), || "spec".into())?;
            let got = words(&spec)?;
            ensure(got == table1[a1 as usize][a2 as usize], || format!("T_{a1},{a2}(3,3) = {got:?}"))?;
        }
    }
    use TenengoltsVariant::*;
    let table2: [(u64, u64, [&[&str]; 4]); 6] = [
        (0, 0, [&["00", "12"], &["12"], &["00", "21"], &["21"]]),
        (0, 1, [&["01", "22"], &["01"], &["10", "22"], &["10"]]),
        (0, 2, [&["02", "11"], &["02"], &["11", "20"], &["20"]]),
        (1, 0, [&["21"], &["00", "21"], &["12"], &["00", "12"]]),
        (1, 1, [&["10"], &["10", "22"], &["01"], &["01", "22"]]),
        (1, 2, [&["20"], &["11", "20"], &["02"], &["02", "11"]]),
    ];
    for (a1, a2, sets) in table2 {
        for (v, want) in [Gt, Ge, Lt, Le].into_iter().zip(sets) {
            let spec = ok(tenengolts(2, 3, a1, a2, v), || "spec".into())?;
            let got = words(&spec)?;
            ensure(got == want, || format!("T^({v})_{a1},{a2}(2,3) = {got:?}"))?;
        }
    }
    Ok(())
}

fn enumerators_of_t00() -> Check {
    let spec = ok(tenengolts(3, 3, 0, 0, TenengoltsVariant::Gt), || "spec".into())?;
    let ext = ok(theorem1_extended(&spec, B), || "extended".into())?;
    let want_ext = "w0^3 + z2^3*w0*w1*w2 + z2^3*w1^3 + z1^3*z2^3*w0*w1*w2 + z2^6*w2^3";
    ensure(ext.to_string() == want_ext, || format!("extended = {ext}"))?;
    let want_ext: IntPoly = ok(want_ext.parse(), || "parse".into())?;
    ensure(ext.poly() == &want_ext, || "extended differs after parsing".into())?;
    let complete = ok(ext.specialize(Kind::Complete), || "complete".into())?;
    ensure(complete.to_string() == "w0^3 + 2*w0*w1*w2 + w1^3 + w2^3", || format!("complete = {complete}"))?;
    let hamming = ok(ext.specialize(Kind::Hamming), || "hamming".into())?;
    ensure(hamming.to_string() == "1 + 2*w^2 + 2*w^3", || format!("hamming = {hamming}"))?;
    let closed = ok(tenengolts_hamming(3, 3, 0, 0), || "closed form".into())?;
    ensure(closed.poly() == hamming.poly(), || format!("closed form = {closed}"))
}

fn tenengolts_case(n: usize, r: u32, v: TenengoltsVariant, a1: u64, a2: u64) -> Check {
    let ctx = || format!("{v} n={n} r={r} a=({a1},{a2})");
    let spec = ok(tenengolts(n, r, a1, a2, v), ctx)?;
    let oracle = ok(oracle_extended(&spec, B), ctx)?;
    let h = ok(variant_hamming(v, n, r, a1, a2), ctx)?;
    ensure(h.poly() == ok(oracle.specialize(Kind::Hamming), ctx)?.poly(), || format!("hamming {}", ctx()))?;
    let c = ok(variant_cardinality(v, n, r, a1, a2), ctx)?;
    ensure(c == oracle.cardinality(), || format!("cardinality {}", ctx()))?;
    if matches!(v, TenengoltsVariant::Gt | TenengoltsVariant::Lt) {
        let t = ok(theorem1_extended(&spec, B), ctx)?;
        ensure(t.poly() == oracle.poly(), || format!("extended {}", ctx()))?;
    }
    Ok(())
}

fn oracle_sweep() -> Check {
    let mut cases = Vec::new();
    for n in 1..=6usize {
        for r in 1..=4u32 {
            for v in TenengoltsVariant::ALL {
                for a1 in 0..n as u64 {
                    for a2 in 0..u64::from(r) {
                        cases.push((n, r, v, a1, a2));
                    }
                }
            }
        }
    }
    cases.par_iter().try_for_each(|&(n, r, v, a1, a2)| tenengolts_case(n, r, v, a1, a2))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5c);
    let lcs: Vec<_> = (0..50)
        .map(|i| random_lc(&mut rng, 8, if i % 2 == 0 { 4 } else { 2 }, 12))
        .collect();
    lcs.par_iter().try_for_each(|inst| {
        let ctx = || format!("lc {inst:?}");
        let oracle = ok(oracle_extended(&ok(inst.reduced_spec(), ctx)?, B), ctx)?;
        let h = ok(lc_hamming(inst.n, inst.m, inst.r, &inst.h, inst.a as i64), ctx)?;
        ensure(h.poly() == ok(oracle.specialize(Kind::Hamming), ctx)?.poly(), ctx)
    })?;

    let scs: Vec<_> = (0..20).map(|_| random_sc(&mut rng, 6, 4, 12)).collect();
    scs.par_iter().try_for_each(|spec| {
        let ctx = || format!("sc {}", spec.to_json().unwrap_or_default());
        let oracle = ok(oracle_extended(spec, B), ctx)?;
        let t = ok(theorem1_extended(spec, B), ctx)?;
        ensure(t.poly() == oracle.poly(), ctx)
    })
}

fn structural() -> Check {
    for n in 1..=10usize {
        for r in 1..=5u32 {
            let origin = ok(tenengolts_cardinality(n, r, 0, 0), || "origin".into())?;
            let mut total = BigInt::from(0);
            for a1 in 0..n as u64 {
                for a2 in 0..u64::from(r) {
                    let c = ok(tenengolts_cardinality(n, r, a1, a2), || "cardinality".into())?;
                    ensure(c <= origin, || format!("max at origin fails n={n} r={r} a=({a1},{a2})"))?;
                    total += c;
                }
            }
            ensure(total == BigInt::from(r).pow(n as u32), || format!("partition sum n={n} r={r}"))?;
        }
    }
    for d in 1..=60i64 {
        for a in 0..d {
            let mut acc = ok(CycElement::zero(d as u64), || "zero".into())?;
            for j in (1..=d).filter(|&j| gcd(j, d) == 1) {
                acc.add_root_multiple(a * j, &BigInt::from(1));
            }
            let direct = ok(acc.to_integer(), || format!("c_{d}({a})"))?;
            let closed = ok(ramanujan_sum(d, a), || "ramanujan".into())?;
            ensure(direct == BigInt::from(closed), || format!("c_{d}({a})"))?;
        }
    }
    for n in 1..=36i64 {
        for b in 0..=2 * n {
            let mut s = 0;
            for d in ok(divisors(n), || "divisors".into())? {
                s += ok(ramanujan_sum(d as i64, b), || "ramanujan".into())?;
            }
            ensure(s == if b % n == 0 { n } else { 0 }, || format!("divisor sum n={n} b={b}"))?;
        }
    }
    Ok(())
}

fn q_calculus() -> Check {
    for n in 0..=7u64 {
        for r in 1..=3usize {
            for t in Composition::all(n, r) {
                let terms = AllWords::new(n as usize, r as u32)
                    .filter(|x| x.composition() == t.parts())
                    .map(|x| Statistic::GammaGt.evaluate(&x).map(|g| (vec![g as u64], BigInt::from(1))))
                    .collect::<sccodes::Result<Vec<_>>>();
                let brute = ok(IntPoly::from_terms(&["q"], ok(terms, || "gamma".into())?), || "poly".into())?;
                ensure(brute == q_multinomial(&t), || format!("MacMahon t={:?}", t.parts()))?;
            }
        }
    }
    for total in 1..=10u64 {
        for r in 1..=4usize {
            for t in Composition::all(total, r) {
                let dense = q_multinomial_dense(&t);
                for d in ok(divisors(total as i64), || "divisors".into())? {
                    let at = ok(CycElement::evaluate_polynomial(dense.coeffs(), d, 1), || "evaluate".into())?;
                    let v = ok(at.to_integer(), || format!("t={:?} d={d}", t.parts()))?;
                    let want = ok(q_multinomial_at_root(&t, d), || "closed form".into())?;
                    ensure(v == want, || format!("root evaluation t={:?} d={d}", t.parts()))?;
                }
            }
        }
    }
    Ok(())
}

fn macwilliams() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3ac);
    let params: Vec<(u32, usize, usize, u64)> = (0..100)
        .map(|_| {
            let r = rng.random_range(2..=6u32);
            let n = rng.random_range(1..=6usize);
            let s = rng.random_range(1..=n.min(3));
            (r, n, s, rng.random())
        })
        .collect();
    params.par_iter().try_for_each(|&(r, n, s, seed)| {
        let ctx = || format!("r={r} n={n} s={s} seed={seed}");
        let code = ok(random_full_rank(&mut ChaCha8Rng::seed_from_u64(seed), r, n, s, B), ctx)?;
        let report = ok(verify_macwilliams(&code), ctx)?;
        ensure(report.verified, || format!("identity fails {} H={:?}", ctx(), code.matrix()))?;
        ensure(sizes_consistent(&code), || format!("sizes {}", ctx()))?;
        let rows: Vec<Vec<i64>> = code.matrix().iter().map(|row| row.iter().map(|&v| i64::from(v)).collect()).collect();
        let spec = ok(linear_code(r, &rows), ctx)?;
        let complete = ok(ok(theorem1_extended(&spec, B), ctx)?.specialize(Kind::Complete), ctx)?;
        ensure(complete.poly() == &report.left, || format!("complete enumerator {}", ctx()))
    })
}

fn sentinel() -> Check {
    ensure(!SENTINEL_FIRED.load(Ordering::SeqCst), || "an integrality error was raised".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("cardinality grid and codeword tables of T(3,3), T(2,3)", 1, tables_of_small_codes),
        ("Hamming, complete and extended enumerators of T_{0,0}(3,3)", 1, enumerators_of_t00),
        ("closed forms and character sums equal the oracle", 60, oracle_sweep),
        ("partition sum, max at origin, Ramanujan sums", 30, structural),
        ("MacMahon and root-of-unity evaluation", 10, q_calculus),
        ("MacWilliams identity on random full-rank codes", 30, macwilliams),
        ("no integrality error in any sweep", 1, sentinel),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took longer than {limit} s"))
        });
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS ({secs:.2} s) {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL ({secs:.2} s) {name}: {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
