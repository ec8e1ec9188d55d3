//! Report and table rendering: text for humans, JSON and CSV for machines.
//! Output is deterministic — same invocation, byte-identical bytes.

use serde::Serialize;
use tautring_core::identities::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
struct ReportRow<'a> {
    check: &'a str,
    param: &'a str,
    expected: &'a str,
    computed: &'a str,
    passed: bool,
}

#[derive(Serialize)]
pub struct TableRow {
    pub genus: u32,
    pub indices: Vec<u32>,
    pub value: String,
}

#[derive(Serialize)]
pub struct BernoulliRow {
    pub k: u32,
    pub value: String,
}

/// Quote a CSV field only when it needs quoting (commas or quotes inside).
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn print_reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Text => {
            for r in reports {
                if r.passed {
                    println!("[PASS] {}({}) = {}", r.check, r.param, r.computed);
                } else {
                    println!(
                        "[FAIL] {}({}): expected {}, computed {}",
                        r.check, r.param, r.expected, r.computed
                    );
                }
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                println!("{} checks: all passed", reports.len());
            } else {
                println!("{} checks: {failed} failed", reports.len());
            }
        }
        Format::Json => {
            let rows: Vec<ReportRow> = reports
                .iter()
                .map(|r| ReportRow {
                    check: &r.check,
                    param: &r.param,
                    expected: &r.expected,
                    computed: &r.computed,
                    passed: r.passed,
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
        }
        Format::Csv => {
            println!("check,param,expected,computed,passed");
            for r in reports {
                println!(
                    "{},{},{},{},{}",
                    csv_field(&r.check),
                    csv_field(&r.param),
                    csv_field(&r.expected),
                    csv_field(&r.computed),
                    r.passed
                );
            }
        }
    }
}

pub fn print_table(rows: &[TableRow], format: Format) {
    match format {
        Format::Text => {
            for row in rows {
                let ix: Vec<String> = row.indices.iter().map(|d| format!("t{d}")).collect();
                println!("<{}>_{} = {}", ix.join(" "), row.genus, row.value);
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(rows).expect("serializable"));
        }
        Format::Csv => {
            println!("genus,indices,value");
            for row in rows {
                let ix: Vec<String> = row.indices.iter().map(u32::to_string).collect();
                println!("{},{},{}", row.genus, csv_field(&ix.join(" ")), row.value);
            }
        }
    }
}

pub fn print_bernoulli(rows: &[BernoulliRow], format: Format) {
    match format {
        Format::Text => {
            for row in rows {
                println!("b_{} = {}", row.k, row.value);
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(rows).expect("serializable"));
        }
        Format::Csv => {
            println!("k,value");
            for row in rows {
                println!("{},{}", row.k, row.value);
            }
        }
    }
}
