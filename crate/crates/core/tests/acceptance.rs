//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Grid criteria run on a single worker
//! thread and are held to their time budgets.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use apostol::identities::{default_grid, verify_grid, ReportSummary};
use apostol::{BaseKind, IdentityId, IdentityPoint, Rational, Shape};
use common::checks::{self, Check};
use common::cli::{check_golden, run, run_with_env};
use serde_json::Value;

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("thread pool")
        .install(f)
}

fn run_grids(ids: &[IdentityId], budget: Duration) -> Check {
    let start = Instant::now();
    let mut total = ReportSummary::default();
    for &id in ids {
        let grid = default_grid(id);
        let report = single_threaded(|| verify_grid(id, &grid));
        let s = report.summary;
        if s.failed > 0 || s.errored > 0 {
            return Err(format!(
                "{id}: {} failed, {} errored of {}",
                s.failed, s.errored, s.total
            ));
        }
        total.total += s.total;
        total.passed += s.passed;
    }
    let elapsed = start.elapsed();
    if elapsed > budget {
        return Err(format!(
            "{} points passed but took {elapsed:.1?}, budget {budget:?}",
            total.total
        ));
    }
    Ok(format!(
        "{}/{} points in {elapsed:.1?}",
        total.passed, total.total
    ))
}

fn criterion_1() -> Check {
    run_grids(&[IdentityId::Thm21], Duration::from_secs(60))
}

fn criterion_2() -> Check {
    let detail = run_grids(&[IdentityId::Thm22], Duration::from_secs(60))?;
    let even = IdentityPoint {
        shape: Shape::Shifted,
        n: 2,
        m: 1,
        c: 2,
        d: 2,
        lambda: Rational::from(2),
        mu: 0,
        nu: 0,
        base: BaseKind::Unit,
        x: Rational::frac(1, 2),
        y: Rational::frac(1, 3),
        big_x: Rational::frac(1, 5),
        big_y: Rational::frac(2, 7),
    };
    let report = verify_grid(IdentityId::Thm22, &[even]);
    if report.summary.total != 1 || report.summary.errored != 0 {
        return Err("report at c = d = 2 was not produced".into());
    }
    let outcome = if report.all_passed() {
        "holds"
    } else {
        "fails"
    };
    Ok(format!("{detail}; c = d = 2 report generated ({outcome})"))
}

fn criterion_3() -> Check {
    let ids: Vec<IdentityId> = IdentityId::ALL
        .iter()
        .copied()
        .filter(|id| id.is_corollary() || id.is_table())
        .collect();
    let detail = run_grids(&ids, Duration::from_secs(300))?;
    Ok(format!("{} identities, {detail}", ids.len()))
}

fn criterion_4() -> Check {
    let parts = [
        ("classical at lambda 1", checks::classical_at_one()?),
        ("order-m maps", checks::order_m_maps()?),
        ("sums at lambda 1", checks::sums_at_one()?),
        (
            "even-n alternating relation",
            checks::alternating_relation()?,
        ),
    ];
    Ok(parts
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect::<Vec<_>>()
        .join("; "))
}

fn criterion_5() -> Check {
    let parts = [
        ("kernels", checks::kernel_routes()?),
        ("families", checks::family_routes()?),
        ("generalized sums", checks::sums_oracle_route()?),
        ("genocchi shift", checks::genocchi_shift()?),
    ];
    Ok(parts
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect::<Vec<_>>()
        .join("; "))
}

fn criterion_6() -> Check {
    checks::proof_consistency(20_251_018)
}

fn criterion_7() -> Check {
    // golden files, twice
    let golden = check_golden()?;
    check_golden()?;

    // byte-identical repeats, with and without a worker cap
    let grid = r#"[{"shape":"shifted","n":4,"m":2,"c":3,"d":5,"lambda":"-2","mu":1,"nu":1,"base":"laguerre:3","x":"1/2","y":"1/3","X":"1/5","Y":"2/7"}]"#;
    let repeats: [&[&str]; 4] = [
        &["list"],
        &[
            "expand",
            "--family",
            "atp",
            "--m",
            "2",
            "--lambda",
            "1/2",
            "--mu",
            "1",
            "--nu",
            "1",
            "--base",
            "trunc_exp:2",
            "--n",
            "5",
            "--format",
            "json",
        ],
        &[
            "sums", "--kind", "genS", "--k", "5", "--n", "4", "--lambda", "-2", "--format", "csv",
        ],
        &["verify", "--identity", "thm22", "--grid", grid],
    ];
    for args in repeats {
        let a = run(args);
        let b = run_with_env(args, &[("APX_THREADS", "1")]);
        if a.stdout != b.stdout || a.code != b.code {
            return Err(format!("{args:?} is not reproducible"));
        }
    }

    // exit-code contract
    let failing = r#"[{"shape":"power_sum","n":2,"m":1,"c":1,"d":2,"lambda":"2","base":"exp","x":"1/2","y":"1/3","X":"1/5","Y":"2/7"}]"#;
    let codes: [(&[&str], i32); 4] = [
        (&["sums", "--kind", "S", "--k", "2", "--n", "3"], 0),
        (&["verify", "--identity", "tbl21_E", "--grid", failing], 1),
        (&["verify", "--identity", "nosuch"], 2),
        (&["expand", "--lambda", "-1", "--nu", "0", "--n", "3"], 3),
    ];
    for (args, want) in codes {
        let got = run(args).code;
        if got != want {
            return Err(format!("{args:?} exited {got}, expected {want}"));
        }
    }

    // every default grid through the binary
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut points = 0u64;
    for id in IdentityId::ALL {
        let out = dir.path().join(format!("{id}.json"));
        let r = run(&[
            "verify",
            "--identity",
            id.tag(),
            "--grid",
            "default",
            "--output",
            out.to_str().unwrap(),
        ]);
        if r.code != 0 {
            return Err(format!("verify {id} exited {}", r.code));
        }
        let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
        let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if v["schema"] != 1 || v["summary"]["failed"] != 0 || v["summary"]["errored"] != 0 {
            return Err(format!("verify {id} report is not clean"));
        }
        points += v["summary"]["total"].as_u64().unwrap_or(0);
    }
    Ok(format!(
        "{golden} golden files stable; repeats identical; exit codes 0/1/2/3; {} default grids exit 0 ({points} points)",
        IdentityId::ALL.len()
    ))
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Check);
    let criteria: [Criterion; 7] = [
        (1, "power-sum theorem over its default grid", criterion_1),
        (2, "shifted theorem over the odd (c, d) grid", criterion_2),
        (3, "corollaries and table rows", criterion_3),
        (
            4,
            "classical reductions and power-sum relations",
            criterion_4,
        ),
        (5, "oracle route equivalence", criterion_5),
        (
            6,
            "statements against generating-function coefficients",
            criterion_6,
        ),
        (
            7,
            "CLI determinism, exit codes and golden files",
            criterion_7,
        ),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {n} PASS  {name}: {detail} [{elapsed:.1?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL  {name}: {why} [{elapsed:.1?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
