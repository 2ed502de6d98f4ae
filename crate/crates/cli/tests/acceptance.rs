//! Exit criteria for the whole workspace. Each criterion prints one
//! `PASS`/`FAIL` line; the process fails if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use covseries::dims::{dim_cov, dim_cov_graded, dim_cov_qbin, dim_inv, dim_table, omega_row};
use covseries::poly::{BinomFactor, FactoredRational, TPoly, ZTPoly};
use covseries::psi::{big_psi_truncated, psi_poly, psi_rational, psi_series};
use covseries::{equal_rational, poincare_series, verify_series};
use covseries_cli::cache::{self, Loaded};

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const BATCH_BUDGET: Duration = Duration::from_secs(5 * 60);
const PROPERTY_CASES: u32 = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn golden_series() -> Outcome {
    let start = Instant::now();
    for d in 1..=5 {
        let p = poincare_series(d).map_err(|e| e.to_string())?;
        if !equal_rational(&p, &common::printed(d)) {
            return Err(format!("d={d} differs from the printed series"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > GOLDEN_BUDGET {
        return Err(format!("took {elapsed:?}, budget {GOLDEN_BUDGET:?}"));
    }
    Ok(format!("d=1..5 exact, {elapsed:?}"))
}

fn oracle_equivalence() -> Outcome {
    for d in 1..=10 {
        let p = poincare_series(d).map_err(|e| e.to_string())?;
        let expansion = p.expand_truncated(10, 20);
        let table = dim_table(d, 10, 20);
        for i in 0..=10 {
            for j in 0..=20 {
                let got = expansion.coeff(i, j);
                if got != *table.get(i, j) {
                    return Err(format!("d={d} ({i},{j}): expected {}, got {got}", table.get(i, j)));
                }
            }
        }
    }
    Ok("d=1..10, 11x21 cells each".into())
}

fn route_agreement() -> Outcome {
    let mut cells = 0usize;
    for d in 1..=8u32 {
        for i in 0..=10u32 {
            for j in 0..=d * i {
                if dim_cov(d, i, j) != dim_cov_qbin(d, i, j) {
                    return Err(format!("partition vs q-binomial route at d={d} i={i} j={j}"));
                }
                cells += 1;
            }
        }
        for n in 0..=10u32 {
            if dim_cov(d, n, 0) != dim_inv(d, n) {
                return Err(format!("invariant formula at d={d} n={n}"));
            }
            let row: BigInt = (0..=d * n).map(|j| dim_cov(d, n, j)).sum();
            if row != dim_cov_graded(d, n) {
                return Err(format!("graded formula at d={d} n={n}"));
            }
        }
    }
    Ok(format!("{cells} cells, d<=8, n<=10"))
}

fn batch_to_twenty() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_covseries"))
        .args(["batch", "--dmax", "20", "--cache"])
        .arg(dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if out.status.code() != Some(0) {
        return Err(format!("batch exited with {:?}", out.status.code()));
    }
    if elapsed > BATCH_BUDGET {
        return Err(format!("batch took {elapsed:?}, budget {BATCH_BUDGET:?}"));
    }
    check_cache(dir.path())?;
    Ok(format!("d=1..20 cached and re-verified, batch wall clock {elapsed:.2?}"))
}

fn check_cache(dir: &Path) -> Result<(), String> {
    for d in 1..=20 {
        let series = match cache::load(dir, d) {
            Loaded::Valid(series) => series,
            other => return Err(format!("d={d}: cache file {other:?}")),
        };
        let report = verify_series(&series, d, 6, 12);
        if !report.passed() {
            return Err(format!("d={d}: {} mismatches at imax=6 jmax=12", report.mismatches.len()));
        }
    }
    Ok(())
}

fn tpoly(max_deg: u32) -> impl Strategy<Value = TPoly> {
    prop::collection::vec((0..=max_deg, -6i64..=6), 0..8).prop_map(TPoly::from_terms)
}

fn operator_identities() -> Outcome {
    let config = Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    };

    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&(1u32..=6, tpoly(12), tpoly(12)), |(n, r, h)| {
            let lhs = psi_poly(i64::from(n), &(&r.substitute_power(n) * &h));
            let rhs = &ZTPoly::from_t_as_z(&r) * &psi_poly(i64::from(n), &h);
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| format!("psi pull-out identity: {e}"))?;

    let mut runner = TestRunner::new(config);
    runner
        .run(
            &(1u32..=6, tpoly(8), prop::collection::vec(1u32..=6, 0..5)),
            |(n, r, ks)| {
                let imax = 6u32;
                let top = (n * imax) as usize;
                let mut series = vec![BigInt::from(0); top + 1];
                for (e, c) in r.terms() {
                    if (*e as usize) <= top {
                        series[*e as usize] = c.clone();
                    }
                }
                for &k in &ks {
                    for m in k as usize..=top {
                        let prev = series[m - k as usize].clone();
                        series[m] += prev;
                    }
                }
                let lhs = psi_series(n, &series);
                let rhs = psi_rational(n, &r, &ks).expand_truncated(imax, n - 1);
                prop_assert_eq!(lhs, rhs);
                Ok(())
            },
        )
        .map_err(|e| format!("psi of rational functions: {e}"))?;

    let imax = 6u32;
    for d in 1..=4u32 {
        let gen = FactoredRational::new(
            ZTPoly::from_terms([((0, 0), 1), ((0, 2), -1)]),
            (0..=d).map(|s| BinomFactor::simple(1, 2 * s)),
        );
        let truncated = gen.expand_truncated(imax, d * imax);
        let lhs = big_psi_truncated(d, &truncated, imax, d * imax);
        let rhs = poincare_series(d).map_err(|e| e.to_string())?.expand_truncated(imax, d * imax);
        if lhs != rhs {
            return Err(format!("Psi_d of the generating function differs at d={d}"));
        }
    }
    Ok(format!("{PROPERTY_CASES} cases per identity; Psi check d<=4, imax=6"))
}

fn combinatorial_invariants() -> Outcome {
    for d in 0..=12u32 {
        for n in 0..=12u32 {
            let row = omega_row(d, n);
            let top = row.len() - 1;
            if (0..=top).any(|m| row[m] != row[top - m]) {
                return Err(format!("complement symmetry at d={d} n={n}"));
            }
            if row != omega_row(n, d) {
                return Err(format!("degree/count symmetry at d={d} n={n}"));
            }
            let total: BigInt = row.iter().sum();
            if total != binomial(n + d, d) {
                return Err(format!("total mass at d={d} n={n}"));
            }
        }
    }
    Ok("d, n <= 12".into())
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 golden series reproduction", golden_series),
        ("2 oracle equivalence d<=10", oracle_equivalence),
        ("3 dimension route agreement", route_agreement),
        ("4 batch to d=20 with cache re-verification", batch_to_twenty),
        ("5 operator identities", operator_identities),
        ("6 partition count invariants", combinatorial_invariants),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
