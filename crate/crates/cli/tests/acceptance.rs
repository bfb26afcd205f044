//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; exits non-zero if any criterion fails.
//! All comparisons are exact.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use hypinertia_core::assembler::{
    pcr_first_principles, pcr_paper, reconcile, stringy_chow, Comparison, Grading, Mode,
};
use hypinertia_core::qpoly::QPolynomial;
use hypinertia_core::Rational;
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const GOLDEN: &str = "2 + 1*q^(1/2) + 1*q^(1) + 1*q^(3/2) + 1*q^(2) + 2*q^(12/5) + 1*q^(5/2) \
                      + 2*q^(14/5) + 4*q^(3) + 2*q^(16/5) + 2*q^(18/5) + 2*q^(4) + 2*q^(5)";

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypinertia"))
        .args(args)
        .output()
        .expect("spawn hypinertia")
}

fn ok_stdout(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = bin(args);
    if out.status.success() {
        Ok(out.stdout)
    } else {
        Err(format!(
            "`{}` exited {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ))
    }
}

fn json(args: &[&str]) -> Result<Value, String> {
    serde_json::from_slice(&ok_stdout(args)?).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(v: &Value) -> Rational {
    Rational::new(v["num"].as_i64().unwrap(), v["den"].as_i64().unwrap())
}

fn invariant_sweep() -> Check {
    let start = Instant::now();
    let stdout = ok_stdout(&["verify", "--g-max", "40"])?;
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&stdout);
    ensure(text.ends_with("PASS: all laws hold for g=2..=40\n"), || {
        format!("unexpected verify output tail: {:?}", text.lines().last())
    })?;
    ensure(
        text.lines().filter(|l| l.starts_with("ok ")).count() == 39,
        || "expected 39 genus lines".into(),
    )?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("g=2..=40 in {:.2}s", elapsed.as_secs_f64()))
}

fn formula_vs_oracle() -> Check {
    let mut rows = 0;
    for g in 2..=40 {
        let report = reconcile(g).map_err(|e| e.to_string())?;
        for row in &report.rows {
            let s = &row.sector;
            let k = s.k().unwrap() as i64;
            if s.reduced_order == 2 {
                ensure(
                    row.comparison == Comparison::Age && row.exponent_paper == row.age,
                    || format!("{s}: exponent {} vs age {}", row.exponent_paper, row.age),
                )?;
            } else {
                ensure(
                    row.exponent_paper - row.age.scale(2) == Rational::from(2 * (k - 1)),
                    || {
                        format!(
                            "{s}: exponent {} vs 2*age {}",
                            row.exponent_paper, row.twice_age
                        )
                    },
                )?;
            }
            rows += 1;
        }
    }
    let report = json(&["reconcile", "--g", "2", "--format", "json"])?;
    let witnesses: Vec<&Value> = report["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["record"]["N"] == 3 && r["record"]["label"]["members"][0] == 1)
        .collect();
    ensure(!witnesses.is_empty(), || "no N=3 witness row at g=2".into())?;
    for w in witnesses {
        let got = (
            rat(&w["exponent_paper"]),
            rat(&w["age"]),
            rat(&w["twice_age"]),
            rat(&w["difference"]),
        );
        let want = (
            Rational::from(4),
            Rational::ONE,
            Rational::from(2),
            Rational::from(2),
        );
        ensure(got == want, || format!("witness row {got:?}"))?;
    }
    Ok(format!(
        "{rows} twisted rows for g=2..=40; witness (4, 1, 2, 2)"
    ))
}

fn mode_equal_totals() -> Check {
    for g in 2..=40 {
        let paper = pcr_paper(g).map_err(|e| e.to_string())?.total();
        let real = pcr_first_principles(g, Grading::Real)
            .map_err(|e| e.to_string())?
            .total();
        let complex = pcr_first_principles(g, Grading::Complex)
            .map_err(|e| e.to_string())?
            .total();
        ensure(paper == real && real == complex, || {
            format!("g={g}: paper {paper}, real {real}, complex {complex}")
        })?;
    }
    for args in [
        &["poincare", "--g", "2", "--format", "json"][..],
        &["poincare", "--g", "2", "--mode", "fp", "--format", "json"],
        &[
            "poincare",
            "--g",
            "2",
            "--mode",
            "fp",
            "--grading",
            "complex",
            "--format",
            "json",
        ],
    ] {
        let total = json(args)?["total"].as_u64();
        ensure(total == Some(23), || {
            format!("`{}` total {total:?}", args.join(" "))
        })?;
    }
    for mode in [Mode::Paper, Mode::FirstPrinciples] {
        let count = stringy_chow(3, mode, Grading::Complex)
            .map_err(|e| e.to_string())?
            .total();
        ensure(count == 28, || {
            format!("stringy count at g=3 is {count} ({mode:?})")
        })?;
    }
    let cli = json(&["poincare", "--g", "3", "--stringy", "--format", "json"])?["total"].as_u64();
    ensure(cli == Some(28), || format!("CLI stringy count {cli:?}"))?;
    Ok("g=2..=40 agree; 23 at g=2; 28 stringy sectors at g=3".into())
}

fn golden_expansion() -> Check {
    let golden: QPolynomial = GOLDEN.parse().map_err(|e| format!("{e:?}"))?;
    let frozen = [
        ((0, 1), 2),
        ((1, 2), 1),
        ((1, 1), 1),
        ((3, 2), 1),
        ((2, 1), 1),
        ((5, 2), 1),
        ((12, 5), 2),
        ((14, 5), 2),
        ((3, 1), 4),
        ((16, 5), 2),
        ((18, 5), 2),
        ((4, 1), 2),
        ((5, 1), 2),
    ];
    let mut terms: Vec<(Rational, u64)> = frozen
        .iter()
        .map(|&((n, d), c)| (Rational::new(n, d), c))
        .collect();
    terms.sort();
    ensure(golden.terms().collect::<Vec<_>>() == terms, || {
        "golden text disagrees with the frozen term list".into()
    })?;
    let lib = pcr_paper(2).map_err(|e| e.to_string())?;
    ensure(lib == golden, || format!("library: {lib}"))?;
    let record = json(&["poincare", "--g", "2", "--format", "json"])?;
    ensure(record["text"] == GOLDEN, || {
        format!("CLI text: {}", record["text"])
    })?;
    let cli: Vec<(Rational, u64)> = record["polynomial"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (rat(&t["exp"]), t["coeff"].as_u64().unwrap()))
        .collect();
    ensure(cli == terms, || "CLI term list differs".into())?;
    Ok("13 terms, total 23".into())
}

fn constant_term() -> Check {
    for g in 2..=40 {
        let polys = [
            ("paper", pcr_paper(g)),
            ("real", pcr_first_principles(g, Grading::Real)),
            ("complex", pcr_first_principles(g, Grading::Complex)),
            ("stringy", stringy_chow(g, Mode::Paper, Grading::Real)),
        ];
        for (name, p) in polys {
            let c = p.map_err(|e| e.to_string())?.constant_term();
            ensure(c == 2, || format!("g={g} {name}: constant term {c}"))?;
        }
    }
    Ok("g=2..=40, four polynomials each".into())
}

fn corollary_reconciliation() -> Check {
    let out = bin(&["reconcile", "--g", "2", "--format", "json"]);
    ensure(out.status.success(), || {
        format!("reconcile exited {:?}", out.status.code())
    })?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let t = &report["totals"];
    let got = (
        t["corollary_literal"].as_i64(),
        t["corollary_clamped"].as_i64(),
        t["paper_total"].as_u64(),
        t["corollary_gap_status"].as_str(),
    );
    ensure(
        got == (Some(7), Some(15), Some(23), Some("informational")),
        || format!("totals {t}"),
    )?;
    Ok("literal 7, clamped 15, reference 23, gap informational".into())
}

fn determinism_and_performance() -> Check {
    let small: [&[&str]; 4] = [
        &["sectors", "--g-max", "30", "--format", "json"],
        &[
            "poincare", "--g-max", "30", "--mode", "fp", "--format", "json",
        ],
        &["reconcile", "--g-max", "30", "--format", "json"],
        &["verify", "--g-max", "30", "--format", "json"],
    ];
    for args in small {
        let one = ok_stdout(&[&["--jobs", "1"], args].concat())?;
        let four = ok_stdout(&[&["--jobs", "4"], args].concat())?;
        let again = ok_stdout(args)?;
        ensure(one == four && four == again, || {
            format!("`{}` not reproducible", args.join(" "))
        })?;
    }

    let sweep = ["sweep", "--g-max", "200"];
    let start = Instant::now();
    let one = ok_stdout(&[&["--jobs", "1"][..], &sweep].concat())?;
    let elapsed = start.elapsed();
    let four = ok_stdout(&[&["--jobs", "4"][..], &sweep].concat())?;
    let again = ok_stdout(&sweep)?;
    ensure(one == four && four == again, || {
        "sweep output not reproducible".into()
    })?;
    let records: Value = serde_json::from_slice(&one).map_err(|e| e.to_string())?;
    let n = records.as_array().map_or(0, Vec::len);
    ensure(n == 199, || format!("sweep produced {n} records"))?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("sweep took {elapsed:?}")
    })?;
    Ok(format!(
        "byte-identical over 1/4/default workers; sweep g<=200 ({} MB) in {:.2}s",
        one.len() / 1_000_000,
        elapsed.as_secs_f64()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("invariant sweep", invariant_sweep),
        ("formula vs oracle", formula_vs_oracle),
        ("mode-equal totals", mode_equal_totals),
        ("golden expansion", golden_expansion),
        ("constant term", constant_term),
        ("corollary reconciliation", corollary_reconciliation),
        ("determinism and performance", determinism_and_performance),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", idx + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", idx + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
