//! Acceptance gate. Runs every criterion at its stated tolerance and time
//! budget, prints one line per criterion, and fails if any criterion does.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dual_horadam::dual_horadam::{self as dh, fibonacci};
use dual_horadam::octonion::random_rational;
use dual_horadam::scalar::rat;
use dual_horadam::verifier::{run_sweep, Expectations, ParamGrid, Status, SweepConfig, Value, Verdict};
use dual_horadam::{Conjugate, DualElem, HoradamParams, Octonion, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sweep(ids: &[&str], grid: ParamGrid, n_min: u64, n_max: u64) -> Vec<Verdict> {
    run_sweep(&SweepConfig {
        grid,
        n_min,
        n_max,
        identities: Some(ids.iter().map(|s| s.to_string()).collect()),
        ..SweepConfig::default()
    })
    .expect("valid sweep")
}

fn all_match(verdicts: &[Verdict]) -> Result<(), String> {
    match verdicts.iter().find(|v| v.status != Status::Match) {
        None => Ok(()),
        Some(v) => Err(format!("{} at {} is {}", v.identity_id, v.point_key(), v.status)),
    }
}

fn no_drift(verdicts: &[Verdict]) -> Result<(), String> {
    let report = Expectations::builtin().compare(verdicts, dual_horadam::series::DEFAULT_ORDER);
    ensure(report.uncatalogued.is_empty(), || {
        format!("{} uncatalogued verdicts", report.uncatalogued.len())
    })?;
    match report.drifted.first() {
        None => Ok(()),
        Some(d) => Err(format!(
            "{} drifted verdicts, first {} at {}: expected {}, got {}",
            report.drifted.len(),
            d.identity_id,
            d.point,
            d.expected,
            d.actual
        )),
    }
}

fn fib_seq(len: usize) -> Vec<i128> {
    let mut f = vec![0i128, 1];
    while f.len() < len {
        let n = f.len();
        f.push(f[n - 1] + f[n - 2]);
    }
    f
}

fn composition_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0001);
    for i in 0..1000 {
        let x = random_rational(&mut rng);
        let y = random_rational(&mut rng);
        let xy = x.mul_ref(&y);
        ensure(xy.norm() == x.norm() * y.norm(), || {
            format!("norm not multiplicative at sample {i}")
        })?;
        ensure(x.mul_ref(&xy) == x.mul_ref(&x).mul_ref(&y), || {
            format!("left alternative law fails at sample {i}")
        })?;
        ensure(y.mul_ref(&x).mul_ref(&x) == y.mul_ref(&x.mul_ref(&x)), || {
            format!("right alternative law fails at sample {i}")
        })?;
        ensure(xy.conj() == y.conj().mul_ref(&x.conj()), || {
            format!("conjugation fails at sample {i}")
        })?;
    }
    let e = |i| Octonion::basis(i, &rat(0));
    let witness = (1..8)
        .flat_map(|i| (1..8).flat_map(move |j| (1..8).map(move |k| (i, j, k))))
        .find(|&(i, j, k)| e(i).mul_ref(&e(j)).mul_ref(&e(k)) != e(i).mul_ref(&e(j).mul_ref(&e(k))))
        .ok_or("no non-associative basis triple")?;
    Ok(format!(
        "1000 samples; first non-associative triple (e{}e{})e{}",
        witness.0, witness.1, witness.2
    ))
}

fn binet_equivalence() -> Outcome {
    let grid = ParamGrid::default_grid();
    let points = grid.points(true).len();
    ensure(points >= 200, || format!("only {points} grid points"))?;
    let scalar = sweep(&["eq-2.3-binet-scalar"], grid.clone(), 0, 64);
    all_match(&scalar)?;
    let dual = sweep(&["eq-3.1-binet-dual"], grid, 0, 32);
    all_match(&dual)?;
    Ok(format!(
        "{points} points, {} scalar and {} dual verdicts match",
        scalar.len(),
        dual.len()
    ))
}

fn generating_functions() -> Outcome {
    let v = sweep(
        &["eq-2.4-genfun-scalar", "eq-3.6-genfun-dual"],
        ParamGrid::default_grid(),
        0,
        31,
    );
    all_match(&v)?;
    Ok(format!("{} coefficient verdicts match", v.len()))
}

fn dual_fibonacci_norm() -> Outcome {
    let v = sweep(
        &["dual-fib-norm-21"],
        ParamGrid::single(&HoradamParams::fibonacci()),
        0,
        16,
    );
    ensure(v.len() == 17, || format!("{} verdicts", v.len()))?;
    all_match(&v)?;
    let f = fib_seq(10);
    let re: i128 = f[..8].iter().map(|x| x * x).sum();
    let du: i128 = 2 * (0..8).map(|i| f[i] * f[i + 1]).sum::<i128>();
    ensure((re, du) == (273, 882), || format!("oracle gives {re} + {du}ε"))?;
    let spot = dh::dog(&HoradamParams::fibonacci(), 0).value.scalar_norm();
    ensure(spot == DualElem::new(rat(273), rat(882)), || {
        format!("library gives {spot}")
    })?;
    ensure(fibonacci::norm_rhs(0) == spot, || "closed form differs at n = 0".into())?;
    Ok(format!("17 match; n = 0 is {spot}"))
}

fn dual_fibonacci_cassini() -> Outcome {
    let v = sweep(
        &["dual-fib-cassini"],
        ParamGrid::single(&HoradamParams::fibonacci()),
        1,
        16,
    );
    ensure(v.len() == 16, || format!("{} verdicts", v.len()))?;
    ensure(v.iter().all(|x| x.status != Status::Inapplicable), || {
        "inapplicable verdict".into()
    })?;
    no_drift(&v)?;
    let mismatches = v.iter().filter(|x| x.status == Status::Mismatch).count();
    Ok(format!("16 verdicts pinned ({mismatches} mismatch)"))
}

fn scalar_audit() -> Outcome {
    let ids = [
        "eq-2.5-cassini-scalar-as-printed",
        "eq-2.5-cassini-scalar-corrected",
        "eq-2.5-cassini-scalar-neg-q",
        "eq-2.6-sum-scalar-as-printed",
        "eq-2.6-sum-scalar-neg-qw",
    ];
    let grid = ParamGrid::default_grid();
    let v = sweep(&ids, grid.clone(), 1, 16);
    ensure(v.len() == ids.len() * grid.points(true).len() * 16, || {
        format!("{} verdicts", v.len())
    })?;
    ensure(v == sweep(&ids, grid, 1, 16), || "repeat sweep differs".into())?;
    for x in &v {
        ensure((x.status == Status::Mismatch) == x.witness.is_some(), || {
            format!("witness flag wrong at {}", x.point_key())
        })?;
    }
    let fib = HoradamParams::fibonacci();
    let f = fib_seq(10);
    let find = |id: &str, n| {
        v.iter()
            .find(|x| x.identity_id == id && x.params == fib && x.n == n)
            .unwrap()
    };
    let c = find(ids[0], 2);
    ensure(c.status == Status::Mismatch, || {
        "Fibonacci n = 2 Cassini matches".into()
    })?;
    let lhs = Value::Rat(rat((f[3] * f[1] - f[2] * f[2]) as i64));
    ensure(c.witness.as_ref().unwrap().lhs == lhs, || {
        "Cassini witness lhs differs from oracle".into()
    })?;
    let s = find(ids[3], 3);
    ensure(s.status == Status::Mismatch, || "Fibonacci n = 3 sum matches".into())?;
    let lhs = Value::Rat(rat(f[..=3].iter().sum::<i128>() as i64));
    ensure(s.witness.as_ref().unwrap().lhs == lhs, || {
        "sum witness lhs differs from oracle".into()
    })?;
    no_drift(&v)?;
    let mismatches = v.iter().filter(|x| x.status == Status::Mismatch).count();
    Ok(format!("{} verdicts, {mismatches} mismatches with witnesses", v.len()))
}

fn dual_closed_forms() -> Outcome {
    let ids = [
        "eq-3.10-cassini-candidate",
        "eq-3.10-cassini-proof-variant",
        "eq-3.10-cassini-theorem-real-part",
        "eq-3.10-cassini-theorem-variant",
        "eq-3.11-sum-dual",
        "eq-3.12-norm-as-printed",
        "eq-3.12-norm-dual-part",
        "eq-3.12-norm-unit-lead",
    ];
    let v = sweep(&ids, ParamGrid::default_grid(), 0, 31);
    for x in &v {
        if let Some(w) = &x.witness {
            ensure(w.rhs.is_rational(), || {
                format!("{} at {} is irrational", x.identity_id, x.point_key())
            })?;
        }
    }
    no_drift(&v)?;
    all_match(
        &v.iter()
            .filter(|x| x.identity_id == "eq-3.12-norm-dual-part")
            .cloned()
            .collect::<Vec<_>>(),
    )?;
    Ok(format!("{} verdicts rational and catalogued", v.len()))
}

fn cli_determinism() -> Outcome {
    let run = |jobs: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_horadam"));
        cmd.args(["verify", "--all", "--format", "json"]);
        if let Some(j) = jobs {
            cmd.args(["--jobs", j]);
        }
        let out = cmd.output().expect("spawn horadam");
        (out.status.code(), out.stdout)
    };
    let first = run(None);
    let second = run(None);
    let serial = run(Some("1"));
    let parallel = run(Some("4"));
    ensure(first.0 == Some(0), || format!("exit code {:?}", first.0))?;
    ensure(first == second, || "consecutive runs differ".into())?;
    ensure(first == serial && first == parallel, || {
        "output depends on thread count".into()
    })?;
    Ok(format!("4 runs, {} identical bytes", first.1.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "composition algebra certification",
            Duration::from_secs(5),
            composition_algebra,
        ),
        ("Binet equivalence", Duration::from_secs(30), binet_equivalence),
        ("generating functions", Duration::from_secs(30), generating_functions),
        ("dual Fibonacci norm", Duration::from_secs(1), dual_fibonacci_norm),
        ("dual Fibonacci Cassini", Duration::from_secs(2), dual_fibonacci_cassini),
        ("scalar Cassini and sum audit", Duration::from_secs(10), scalar_audit),
        ("dual closed forms", Duration::from_secs(60), dual_closed_forms),
        ("determinism", Duration::from_secs(120), cli_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *budget => Err(format!(
                "took {:.2}s, budget {}s",
                elapsed.as_secs_f64(),
                budget.as_secs()
            )),
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {} {tag}: {name} ({:.2}s) {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria fail");
        ExitCode::FAILURE
    }
}
