//! Acceptance run: one PASS or FAIL line per criterion, with wall-clock
//! limits enforced. Reports with no verdict are written under the target
//! directory.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use macllt::combinat::Partition;
use macllt::polyring::{LaurentPoly, Monomial, Var};
use macllt_cli::output::{report, Format};
use macllt_cli::{Suite, VerificationReport};

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(s: Suite, max_n: usize) -> VerificationReport {
    s.run(max_n).unwrap_or_else(|e| panic!("{s} errored: {e}"))
}

fn summary(r: &VerificationReport) -> String {
    let mut s = format!(
        "{} {}/{}",
        r.suite,
        r.attempted - r.failures.len(),
        r.attempted
    );
    if let Some(f) = r.first_counterexample() {
        s.push_str(&format!(", first failure {}: {}", f.instance, f.detail));
    }
    s
}

fn all_pass(reports: &[VerificationReport]) -> Outcome {
    Outcome {
        ok: reports.iter().all(|r| r.passed()),
        detail: reports.iter().map(summary).collect::<Vec<_>>().join("; "),
    }
}

fn archive(name: &str, r: &VerificationReport) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, report(r, Format::Json)).unwrap();
    path
}

/// Parse an entry such as `qt^2+qt+q^2t` as printed in the published table.
fn published(s: &str) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for term in s.split('+') {
        let mut exps = BTreeMap::from([('q', 0i64), ('t', 0i64)]);
        let mut chars = term.chars().peekable();
        if term == "1" {
            out = &out + &LaurentPoly::one();
            continue;
        }
        while let Some(v) = chars.next() {
            let mut e = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                e = chars.next().unwrap().to_digit(10).unwrap() as i64;
            }
            *exps.get_mut(&v).expect("q or t") += e;
        }
        let m = Monomial::from_pairs([(Var::Q, exps[&'q']), (Var::T, exps[&'t'])]);
        out = &out + &LaurentPoly::term(1, m);
    }
    out
}

fn criterion_1() -> Outcome {
    let rows = [
        ("4", ["1", "q+q^2+q^3", "q^2+q^4", "q^3+q^4+q^5", "q^6"]),
        ("2,2", ["1", "t+qt+q", "t^2+q^2", "qt^2+qt+q^2t", "q^2t^2"]),
        (
            "1,1,1,1",
            ["1", "t+t^2+t^3", "t^2+t^4", "t^3+t^4+t^5", "t^6"],
        ),
    ];
    let lambdas = ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"];
    let run = |args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_mac"))
            .arg("--no-cache")
            .args(args)
            .output()
            .unwrap();
        (o.status.success(), o.stdout)
    };
    let (verified, _) = run(&["verify", "kostka-table", "--n", "4"]);
    let (ok, json) = run(&["--format", "json", "kostka-table", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
    let mut matched = 0;
    let mut bad = Vec::new();
    for (mu, entries) in rows {
        let mu: Partition = mu.parse().unwrap();
        for (lambda, want) in lambdas.iter().zip(entries) {
            let lambda: Partition = lambda.parse().unwrap();
            let got = v["entries"]
                .as_array()
                .unwrap()
                .iter()
                .find(|e| {
                    e["lambda"] == serde_json::json!(lambda.parts())
                        && e["mu"] == serde_json::json!(mu.parts())
                })
                .map(|e| {
                    LaurentPoly::from_json(&serde_json::from_value(e["poly"].clone()).unwrap())
                        .unwrap()
                });
            if got.as_ref() == Some(&published(want)) {
                matched += 1;
            } else {
                bad.push(format!("K[{lambda}],[{mu}]"));
            }
        }
    }
    Outcome {
        ok: verified && ok && matched == 15,
        detail: format!(
            "{matched}/15 published entries match{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!(", mismatched {bad:?}")
            }
        ),
    }
}

fn criterion_7() -> Outcome {
    let r = suite(Suite::Quotient, 8);
    let path = archive("quotient_report", &r);
    let mut o = all_pass(&[r]);
    o.detail
        .push_str(&format!("; conjecture verdicts in {}", path.display()));
    o
}

fn criterion_8() -> Outcome {
    let equi = suite(Suite::Equidist, 7);
    let comp = suite(Suite::Composite, 6);
    let path = archive("composite_report", &comp);
    let mut o = all_pass(&[equi, comp]);
    o.detail
        .push_str(&format!("; report in {}", path.display()));
    o
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(u32, &str, Option<u64>, Check); 9] = [
        (1, "published Kostka table for n = 4", Some(5), criterion_1),
        (
            2,
            "two-row specialization equals unicellular LLT, n <= 7",
            Some(600),
            || all_pass(&[suite(Suite::Haglund, 7)]),
        ),
        (
            3,
            "LLT equivalences for ribbons up to 4 cells",
            Some(300),
            || all_pass(&[suite(Suite::LltEquiv, 4)]),
        ),
        (
            4,
            "reversal, near staircase and linear relations, n <= 7",
            None,
            || all_pass(&[suite(Suite::Linear, 7)]),
        ),
        (
            5,
            "stretched partitions and B polynomials, |k mu| <= 8",
            Some(900),
            || all_pass(&[suite(Suite::Stretch, 8)]),
        ),
        (
            6,
            "row, rectangle and column identities, flip and q,t symmetry",
            None,
            || all_pass(&[suite(Suite::RectColumn, 8), suite(Suite::Flipped, 8)]),
        ),
        (
            7,
            "row minus rectangle quotients divide and are Schur positive",
            None,
            criterion_7,
        ),
        (8, "Mahonian statistics", None, criterion_8),
        (
            9,
            "global invariants of H and LLT polynomials",
            None,
            || all_pass(&[suite(Suite::Axioms, 7)]),
        ),
    ];
    let filter: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let mut out = check();
        let took = start.elapsed();
        if let Some(secs) = limit {
            if took > Duration::from_secs(secs) {
                out.ok = false;
                out.detail.push_str(&format!("; over the {secs} s limit"));
            }
        }
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {id}: {verdict} [{:.1} s] {name}: {}",
            took.as_secs_f64(),
            out.detail
        );
        failed += !out.ok as u32;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
