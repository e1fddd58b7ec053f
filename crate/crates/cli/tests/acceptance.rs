//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fataci_core::betti::{aset_z, resolve_aci_triple, resolve_fat_aci};
use fataci_core::kernel::lines::{constrained_tuples, minimal_tuples, satisfies};
use fataci_core::kernel::{
    check_power_equality, check_power_equality_with, realize, split_factor, syzygy_betti,
    FieldConfig, PowerCount, SymbolicIdeal,
};
use fataci_core::verify::{sweep_params, verify_instance};
use fataci_core::{build_grid, AciParams, BettiTable};

mod common;
use common::{degs, fataci, predict_json, w, w1, w2, z};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Predict through the binary; returns the table and the wall time.
fn timed_predict(alpha: [u32; 2], beta: [u32; 2], m: [u32; 3]) -> (BettiTable, Duration) {
    let t = Instant::now();
    let table = predict_json(alpha, beta, m);
    (table, t.elapsed())
}

fn under_a_second(d: Duration) -> Result<(), String> {
    ensure(d < Duration::from_secs(1), || format!("took {d:?}"))
}

fn three_point_chain() -> Check {
    for (m, golden, name) in [
        ([0, 4, 1], w2(), "W2"),
        ([1, 4, 2], w1(), "W1"),
        ([2, 4, 3], w(), "W"),
    ] {
        let (t, d) = timed_predict([1, 1], [1, 1], m);
        ensure(t == golden, || {
            format!("{name}: differs at {:?}", t.diff(&golden))
        })?;
        under_a_second(d)?;
    }
    Ok("W2, W1 and W reproduced".into())
}

fn block_example() -> Check {
    let (t, d) = timed_predict([2, 1], [2, 2], [2, 4, 3]);
    ensure(t == z(), || format!("differs at {:?}", t.diff(&z())))?;
    under_a_second(d)?;
    let p = AciParams::new([2, 1], [2, 2], [2, 4, 3]).map_err(|e| e.to_string())?;
    ensure(aset_z(0, &p) == degs("(7,4) (9,2) (11,0)"), || {
        "A0 differs".into()
    })?;
    ensure(aset_z(1, &p) == degs("(9,4) (11,2)"), || {
        "A1 differs".into()
    })?;
    Ok("F0/F1/F2, A0 and A1 reproduced".into())
}

fn triple_points() -> Check {
    let mut slowest = Duration::ZERO;
    for a1 in 1..=2 {
        for a2 in 1..=2 {
            for b1 in 1..=2 {
                for b2 in 1..=2 {
                    let (t, d) = timed_predict([a1, a2], [b1, b2], [3, 3, 3]);
                    slowest = slowest.max(d);
                    let closed = resolve_aci_triple(b1 + b2, b1, a1, a2);
                    ensure(t == closed, || format!("({a1},{a2},{b1},{b2}) differs"))?;
                    let counts = [t.beta0.total(), t.beta1.total(), t.beta2.total()];
                    ensure(counts == [10, 12, 3], || format!("summands {counts:?}"))?;
                }
            }
        }
    }
    under_a_second(slowest)?;
    Ok("16 block shapes, 10/12/3 summands".into())
}

fn oracle_sweep(sweep: &[AciParams], cfg: &FieldConfig) -> (Check, Check) {
    let mut mismatched = Vec::new();
    let mut euler = Vec::new();
    let mut boxes = 0;
    for p in sweep {
        match verify_instance(p, cfg) {
            Ok(r) => {
                if !r.mismatches.is_empty() {
                    mismatched.push(*p);
                }
                if !r.euler_failures.is_empty() {
                    euler.push(*p);
                }
            }
            Err(e) => {
                boxes += 1;
                mismatched.push(*p);
                eprintln!("{p}: {e}");
            }
        }
    }
    let n = sweep.len();
    let tables = if mismatched.is_empty() {
        Ok(format!("{n} instances equal"))
    } else {
        Err(format!(
            "{} of {n} differ ({boxes} errors), first {}",
            mismatched.len(),
            mismatched[0]
        ))
    };
    let hilbert = if euler.is_empty() {
        Ok(format!("{n} instances, every box degree"))
    } else {
        Err(format!("{} of {n} fail, first {}", euler.len(), euler[0]))
    };
    (tables, hilbert)
}

fn sweep_through_binary() -> Result<(), String> {
    let out = fataci(&["verify", "--sweep", "--max-alpha", "2", "--max-m", "3"]);
    ensure(out.status.code() == Some(0), || {
        format!("binary sweep exit {:?}", out.status.code())
    })
}

fn powers(sweep: &[AciParams], cfg: &FieldConfig) -> Check {
    let smoke_start = Instant::now();
    let ones = sweep
        .iter()
        .filter(|p| [p.alpha1, p.alpha2, p.beta1, p.beta2] == [1; 4]);
    let mut smoke = 0;
    for p in ones {
        let dense =
            check_power_equality_with(p, 2, cfg, PowerCount::Dense).map_err(|e| e.to_string())?;
        ensure(dense.equal, || format!("smoke {p} not equal"))?;
        smoke += 1;
    }
    let smoke_time = smoke_start.elapsed();
    ensure(smoke_time < Duration::from_secs(60), || {
        format!("smoke took {smoke_time:?}")
    })?;
    for m in [2, 3] {
        for p in sweep {
            let r = check_power_equality(p, m, cfg).map_err(|e| e.to_string())?;
            ensure(r.equal, || {
                format!("{p} m={m}: {:?}", r.mismatches().next())
            })?;
        }
    }
    let exit = fataci(&[
        "powers", "--alpha", "2", "1", "--beta", "2", "2", "--m", "2", "4", "3", "--power", "2",
    ]);
    ensure(exit.status.success(), || "binary powers run failed".into())?;
    Ok(format!(
        "{} instances at m = 2, 3; dense smoke of {smoke} in {smoke_time:.2?}",
        sweep.len()
    ))
}

fn splits() -> Check {
    let mut n = 0;
    for m11 in 0..=3 {
        for m12 in 0..=3 {
            for m21 in 0..=3 {
                let mults = [m11, m12, m21];
                for m in 1..=3 {
                    for e in minimal_tuples(constrained_tuples(mults, m)) {
                        let (f1, f2) = split_factor(e, m, mults).map_err(|e| e.to_string())?;
                        let sum = [0, 1, 2, 3].map(|i| f1[i] + f2[i]);
                        ensure(
                            satisfies(f1, mults, 1) && satisfies(f2, mults, m - 1) && sum == e,
                            || format!("{e:?} with m={m}, mults {mults:?}"),
                        )?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{n} members split"))
}

fn oracle(p: &AciParams, cfg: &FieldConfig) -> Result<BettiTable, String> {
    let (arr, _) = realize(p, cfg).map_err(|e| e.to_string())?;
    let i = SymbolicIdeal::new(build_grid(p).map_err(|e| e.to_string())?, arr);
    let c = i.regularity_corner();
    syzygy_betti(&i, c).map_err(|e| e.to_string())
}

fn structure(sweep: &[AciParams]) -> Check {
    let base_cfg = FieldConfig::default();
    for p in sweep {
        let predicted = resolve_fat_aci(p);
        let computed = oracle(p, &base_cfg)?;
        ensure(predicted.rank() == 1 && computed.rank() == 1, || {
            format!("{p}: rank")
        })?;
        let t = p.transpose();
        ensure(resolve_fat_aci(&t) == predicted.transposed(), || {
            format!("{p}: predicted transpose")
        })?;
        ensure(oracle(&t, &base_cfg)? == computed.transposed(), || {
            format!("{p}: oracle transpose")
        })?;
        for prime in [32003, 101] {
            for seed in [1, 2, 3] {
                let cfg = FieldConfig::new(prime, seed);
                ensure(oracle(p, &cfg)? == computed, || {
                    format!("{p}: p={prime} seed={seed}")
                })?;
            }
        }
    }
    Ok(format!(
        "{} instances, primes 32003 and 101, seeds 1..3",
        sweep.len()
    ))
}

fn main() -> ExitCode {
    let sweep = sweep_params(2, 3);
    let cfg = FieldConfig::default();
    let mut failed = 0;
    let mut report = |n: u32, name: &str, start: Instant, result: Check| {
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n}: PASS  {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL  {name}: {why} [{secs:.2}s]");
            }
        }
    };

    let t = Instant::now();
    report(1, "three-point chain goldens", t, three_point_chain());
    let t = Instant::now();
    report(2, "block example goldens", t, block_example());
    let t = Instant::now();
    report(
        3,
        "triple points against the closed form",
        t,
        triple_points(),
    );

    let t = Instant::now();
    let (tables, hilbert) = oracle_sweep(&sweep, &cfg);
    let tables = tables.and_then(|s| sweep_through_binary().map(|_| s + ", binary sweep exit 0"));
    let tables = tables.and_then(|s| {
        ensure(t.elapsed() < Duration::from_secs(600), || {
            "over ten minutes".into()
        })
        .map(|_| s)
    });
    report(4, "oracle equals prediction on the sweep", t, tables);
    let t = Instant::now();
    report(5, "Euler sums equal the Hilbert function", t, hilbert);
    let t = Instant::now();
    report(
        6,
        "ordinary and symbolic powers agree",
        t,
        powers(&sweep, &cfg),
    );
    let t = Instant::now();
    report(7, "split_factor on every member", t, splits());
    let t = Instant::now();
    report(
        8,
        "rank, transpose and seed independence",
        t,
        structure(&sweep),
    );

    if failed == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria fail");
        ExitCode::FAILURE
    }
}
