//! Emitters for the three output formats.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use macllt::combinat::{partitions, Partition};
use macllt::mahonian::StatDistribution;
use macllt::polyring::LaurentPoly;
use macllt::symfunc::SymFunc;

use crate::suites::VerificationReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Pretty,
    Latex,
}

fn to_json_string(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

pub fn symfunc(
    f: &SymFunc,
    format: Format,
    op: &str,
    args: Value,
    specialization: &BTreeMap<String, i64>,
) -> String {
    match format {
        Format::Pretty => format!("{f}\n"),
        Format::Latex => format!("{}\n", f.to_latex()),
        Format::Json => {
            let mut v = json!({ "op": op, "args": args, "result": f.to_json() });
            if !specialization.is_empty() {
                v["specialization"] = json!(specialization);
            }
            to_json_string(&v)
        }
    }
}

pub fn poly(p: &LaurentPoly, format: Format, op: &str, args: Value) -> String {
    match format {
        Format::Pretty => format!("{p}\n"),
        Format::Latex => format!("{}\n", p.to_latex()),
        Format::Json => to_json_string(&json!({ "op": op, "args": args, "result": p.to_json() })),
    }
}

fn bracket(p: &Partition) -> String {
    format!("[{p}]")
}

/// Rows indexed by `mu`, columns by `lambda`, both in decreasing
/// lexicographic order.
pub fn kostka_table(
    n: usize,
    table: &BTreeMap<(Partition, Partition), LaurentPoly>,
    format: Format,
) -> String {
    let parts = partitions(n);
    match format {
        Format::Json => {
            let entries: Vec<Value> = parts
                .iter()
                .flat_map(|mu| {
                    parts.iter().map(move |l| {
                        json!({
                            "lambda": l.parts(),
                            "mu": mu.parts(),
                            "poly": table[&(l.clone(), mu.clone())].to_json(),
                        })
                    })
                })
                .collect();
            to_json_string(&json!({ "op": "kostka-table", "n": n, "entries": entries }))
        }
        Format::Latex => {
            let mut s = String::new();
            s.push_str(&format!(
                "\\begin{{tabular}}{{|c|{}}}\\hline\n",
                "c|".repeat(parts.len())
            ));
            let head: Vec<String> = parts.iter().map(bracket).collect();
            s.push_str(&format!(
                "$\\mu$ \\textbackslash $\\lambda$ & {} \\\\\\hline\n",
                head.join(" & ")
            ));
            for mu in &parts {
                let row: Vec<String> = parts
                    .iter()
                    .map(|l| {
                        let p = &table[&(l.clone(), mu.clone())];
                        if p.is_zero() || p.is_one() {
                            p.to_string()
                        } else {
                            format!("${}$", p.to_latex())
                        }
                    })
                    .collect();
                s.push_str(&format!(
                    "{} & {} \\\\\\hline\n",
                    bracket(mu),
                    row.join(" & ")
                ));
            }
            s.push_str("\\end{tabular}\n");
            s
        }
        Format::Pretty => {
            let mut cells: Vec<Vec<String>> = vec![std::iter::once("mu \\ lambda".to_string())
                .chain(parts.iter().map(bracket))
                .collect()];
            for mu in &parts {
                cells.push(
                    std::iter::once(bracket(mu))
                        .chain(
                            parts
                                .iter()
                                .map(|l| table[&(l.clone(), mu.clone())].to_string()),
                        )
                        .collect(),
                );
            }
            let widths: Vec<usize> = (0..cells[0].len())
                .map(|j| {
                    cells
                        .iter()
                        .map(|r| r[j].chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let mut s = String::new();
            for row in cells {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}", w = *w))
                    .collect();
                s.push_str(padded.join(" | ").trim_end());
                s.push('\n');
            }
            s
        }
    }
}

pub fn distributions(
    dists: &[(&str, &StatDistribution)],
    expected: &LaurentPoly,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let v: Vec<Value> = dists
                .iter()
                .map(|(name, d)| {
                    json!({
                        "name": name,
                        "distribution": d,
                        "generating_poly": d.generating_poly().to_json(),
                        "matches_q_multinomial": d.generating_poly() == *expected,
                    })
                })
                .collect();
            to_json_string(
                &json!({ "op": "stats", "q_multinomial": expected.to_json(), "statistics": v }),
            )
        }
        Format::Pretty | Format::Latex => {
            let show = |p: &LaurentPoly| {
                if format == Format::Latex {
                    p.to_latex()
                } else {
                    p.to_string()
                }
            };
            let mut s = format!("q-multinomial: {}\n", show(expected));
            for (name, d) in dists {
                let gf = d.generating_poly();
                let tag = if gf == *expected {
                    "matches"
                } else {
                    "differs"
                };
                s.push_str(&format!(
                    "{name} ({}): {} [{tag}]\n",
                    d.statistic,
                    show(&gf)
                ));
            }
            s
        }
    }
}

pub fn report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json_string(&json!({
            "suite": r.suite,
            "verdict": if r.passed() { "pass" } else { "fail" },
            "attempted": r.attempted,
            "failed": r.failures.len(),
            "first_counterexample": r.first_counterexample(),
            "failures": r.failures,
            "notes": r.notes,
            "elapsed_ms": r.elapsed_ms,
        })),
        Format::Pretty | Format::Latex => r.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use macllt::macdonald::kostka_table as compute_table;

    #[test]
    fn pretty_table_has_one_row_per_partition() {
        let t = compute_table(3).unwrap();
        let s = kostka_table(3, &t, Format::Pretty);
        assert_eq!(s.lines().count(), 4);
        assert!(s.lines().nth(1).unwrap().starts_with("[3]"));
    }

    #[test]
    fn latex_table_mirrors_layout() {
        let t = compute_table(4).unwrap();
        let s = kostka_table(4, &t, Format::Latex);
        assert!(s.contains("[2,2] & 1 & "));
        assert!(
            s.contains("$q^{2} + t^{2}$") || s.contains("$t^{2} + q^{2}$"),
            "{s}"
        );
    }
}
