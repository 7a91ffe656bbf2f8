//! Farms census graphs out to a worker pool and folds the outcomes into reports.

use mcov_core::{read_all_graph6, to_graph6, Graph6Record};
use rayon::prelude::*;

use crate::analysis::{report_from_facts, AnalysisReport};
use crate::checks::{Check, Outcome};
use crate::error::{HarnessError, Result};
use crate::facts::Facts;
use crate::report::{ListedGraph, Summary, VerificationReport, ViolationRecord};

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Worker threads; `None` uses one per core.
    pub jobs: Option<usize>,
}

fn with_pool<T: Send>(opts: RunOptions, work: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        if j == 0 {
            return Err(HarnessError::Usage("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| HarnessError::Usage(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(work))
}

/// Parses a whole graph6 stream up front so that a bad line aborts the run
/// before any checking starts.
pub fn parse_census(text: &str) -> Result<Vec<Graph6Record>> {
    Ok(read_all_graph6(text.as_bytes())?)
}

/// Runs each check over `records`, or over its own fixed inputs when it has
/// them. Reports come back in the order of `checks`.
pub fn run_checks(records: &[Graph6Record], checks: &[&dyn Check], opts: RunOptions) -> Result<Vec<VerificationReport>> {
    let census_checks: Vec<&dyn Check> = checks.iter().copied().filter(|c| c.fixed_inputs().is_none()).collect();
    let outcomes = evaluate_all(records, &census_checks, opts)?;
    let mut reports = Vec::with_capacity(checks.len());
    for &check in checks {
        let report = match check.fixed_inputs() {
            Some(graphs) => {
                let fixed: Vec<Graph6Record> = graphs
                    .into_iter()
                    .enumerate()
                    .map(|(i, graph)| Graph6Record {
                        line: i + 1,
                        text: to_graph6(&graph).expect("fixed inputs stay within the graph6 limit"),
                        graph,
                    })
                    .collect();
                let own = evaluate_all(&fixed, &[check], opts)?;
                fold(check, &fixed, own.iter().map(|per| &per[0]))
            }
            None => {
                let k = census_checks.iter().position(|c| c.id() == check.id()).expect("listed above");
                fold(check, records, outcomes.iter().map(|per| &per[k]))
            }
        };
        reports.push(report);
    }
    Ok(reports)
}

/// `result[i][k]` is the outcome of `checks[k]` on `records[i]`.
fn evaluate_all(records: &[Graph6Record], checks: &[&dyn Check], opts: RunOptions) -> Result<Vec<Vec<Outcome>>> {
    if checks.is_empty() {
        return Ok(vec![Vec::new(); records.len()]);
    }
    with_pool(opts, || {
        records
            .par_iter()
            .map(|r| {
                let facts = Facts::new(r.line, r.text.clone(), r.graph.clone());
                checks.iter().map(|c| c.evaluate(&facts)).collect()
            })
            .collect()
    })
}

fn fold<'a>(check: &dyn Check, records: &[Graph6Record], outcomes: impl Iterator<Item = &'a Outcome>) -> VerificationReport {
    let mut violations = Vec::new();
    let mut summary = Summary::default();
    for (r, o) in records.iter().zip(outcomes) {
        for (k, v) in &o.tallies {
            *summary.tallies.entry(k.to_string()).or_insert(0) += v;
        }
        if !o.in_scope {
            continue;
        }
        summary.in_scope += 1;
        if o.listed {
            summary.listed.push(ListedGraph { line: r.line, graph6: r.text.clone() });
        }
        if !o.violations.is_empty() {
            summary.graphs_with_violations += 1;
        }
        violations.extend(o.violations.iter().map(|d| ViolationRecord {
            line: r.line,
            graph6: r.text.clone(),
            detail: d.clone(),
        }));
    }
    VerificationReport {
        check_id: check.id().to_string(),
        statement: check.statement().to_string(),
        inputs_processed: records.len(),
        violations,
        summary,
    }
}

/// Analysis rows for every record, in input order.
pub fn analyze_records(records: &[Graph6Record], opts: RunOptions) -> Result<Vec<(usize, String, AnalysisReport)>> {
    with_pool(opts, || {
        records
            .par_iter()
            .map(|r| {
                let facts = Facts::new(r.line, r.text.clone(), r.graph.clone());
                (r.line, r.text.clone(), report_from_facts(&facts))
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::select;

    #[test]
    fn malformed_line_is_an_input_error() {
        let err = parse_census("C~\nC~x\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn out_of_scope_graphs_never_violate() {
        // a path has no perfect matching, so every check but the fixed one skips it
        let records = parse_census("Ch\n").unwrap();
        let checks = select("all").unwrap();
        for r in run_checks(&records, &checks, RunOptions::default()).unwrap() {
            if r.check_id != "prop-3con" {
                assert_eq!(r.summary.in_scope, 0, "{}", r.check_id);
            }
            assert!(r.passed(), "{}", r.check_id);
        }
    }

    #[test]
    fn fixed_inputs_ignore_the_census() {
        let checks = select("prop-3con").unwrap();
        let r = &run_checks(&[], &checks, RunOptions { jobs: Some(1) }).unwrap()[0];
        assert_eq!(r.inputs_processed, 8);
        assert_eq!(r.summary.in_scope, 8);
        assert!(r.passed());
    }

    #[test]
    fn zero_jobs_is_rejected() {
        let checks = select("lem-2e").unwrap();
        assert!(run_checks(&parse_census("C~\n").unwrap(), &checks, RunOptions { jobs: Some(0) }).is_err());
    }
}
