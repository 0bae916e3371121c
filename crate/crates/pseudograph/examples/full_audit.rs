//! Run every applicable audit on one graph and print the findings table,
//! exactly as the `audit` subcommand does.
//!
//! Run with: cargo run --release --example full_audit

use pseudograph::audit::{full_report, AuditConfig};
use pseudograph::construct::paley;

fn main() {
    let built = paley(13).unwrap();
    let report = full_report(&built.graph, Some(&built.claims), &AuditConfig::default());
    println!(
        "graph: n = {}, m = {}, lambda_1 = {}, lambda = {}",
        report.header.n, report.header.m, report.header.lambda_1, report.header.lambda
    );
    for f in &report.findings {
        println!(
            "{:<40} {:<18} lhs {:>16} rhs {:>16} slack {:>16}",
            f.id,
            format!("{:?}", f.verdict),
            f.lhs,
            f.rhs,
            f.slack
        );
    }
    let failures = report.failures();
    println!(
        "{} findings, {} failures",
        report.findings.len(),
        failures.len()
    );
    std::process::exit(if failures.is_empty() { 0 } else { 2 });
}
