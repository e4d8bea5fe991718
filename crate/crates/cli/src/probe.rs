//! Counterexample searches. A probe that finds nothing proves nothing; one
//! that finds something exits with the counterexample status.

use serde_json::json;

use rook_eulerian::boards::{same_phase_stability_probe, FerrersBoard};
use rook_eulerian::multiset::{conjecture2_check, conjecture2_instances};
use rook_eulerian::perms::{excedance_check, Permutation, DEFAULT_INTERVAL_LIMIT};
use rook_eulerian::posets::{conjecture1_candidates, conjecture1_check, DEFAULT_EXTENSION_LIMIT};

use crate::parallel::par_map;
use crate::record::{coeff_strings, ResultRecord};
use crate::{CliResult, Outcome, Status};

fn finish(rec: ResultRecord, checked: usize, counterexamples: Vec<serde_json::Value>) -> Outcome {
    let status = if counterexamples.is_empty() {
        Status::Ok
    } else {
        Status::Counterexample
    };
    let rec = rec
        .detail("checked", checked)
        .detail("counterexample_count", counterexamples.len())
        .detail("counterexamples", counterexamples);
    Outcome {
        records: vec![rec],
        status,
    }
}

/// Ultra-log-concavity of weak-interval descent polynomials.
pub fn ulc_weak(n: usize, trials: usize, max_random_n: usize, seed: u64) -> CliResult<Outcome> {
    let candidates = conjecture1_candidates(n, trials, max_random_n, seed);
    let results = par_map(&candidates, |p| conjecture1_check(p, DEFAULT_EXTENSION_LIMIT));
    let mut found = Vec::new();
    for (p, r) in candidates.iter().zip(results) {
        if let Some(w) = r? {
            found.push(json!({"permutation": p.to_string(), "polynomial": coeff_strings(&w)}));
        }
    }
    let rec = ResultRecord::new("probe")
        .input("conjecture", "ulc-weak")
        .input("n", n)
        .input("trials", trials)
        .input("max_random_n", max_random_n)
        .input("seed", seed);
    Ok(finish(rec, candidates.len(), found))
}

/// Real-rootedness of Bruhat excedance polynomials below 312-avoiders.
pub fn exc_bruhat(n: usize, filter_312: bool, extra: &[Permutation]) -> CliResult<Outcome> {
    let mut candidates: Vec<Permutation> = Permutation::all(n)
        .filter(|p| n > 0 && (!filter_312 || p.contains_312().is_none()))
        .collect();
    let mut skipped = Vec::new();
    for p in extra {
        if filter_312 && p.contains_312().is_some() {
            skipped.push(p.to_string());
        } else {
            candidates.push(p.clone());
        }
    }
    let results = par_map(&candidates, |p| excedance_check(p, DEFAULT_INTERVAL_LIMIT));
    let mut found = Vec::new();
    for (p, r) in candidates.iter().zip(results) {
        if let Some(poly) = r? {
            found.push(json!({
                "permutation": p.to_string(),
                "avoids_312": p.contains_312().is_none(),
                "polynomial": coeff_strings(&poly),
            }));
        }
    }
    let rec = ResultRecord::new("probe")
        .input("conjecture", "exc-bruhat")
        .input("n", n)
        .input("filter_312", filter_312)
        .detail("skipped_containing_312", skipped);
    Ok(finish(rec, candidates.len(), found))
}

/// Real-rootedness and interlacing of multiset refined families on straight boards.
pub fn multiset_interlace(side: usize, trials: usize, seed: u64) -> CliResult<Outcome> {
    let instances = conjecture2_instances(side, seed, trials);
    let results = par_map(&instances, |(s, c)| conjecture2_check(s, c));
    let mut found = Vec::new();
    for r in results {
        if let Some(c) = r? {
            found.push(json!({
                "shape": c.shape.to_string(),
                "content": c.content.to_string(),
                "polynomial": coeff_strings(&c.total),
                "real_rooted": c.real_rooted,
                "interlacing": c.interlacing,
            }));
        }
    }
    let rec = ResultRecord::new("probe")
        .input("conjecture", "multiset-interlace")
        .input("side", side)
        .input("trials", trials)
        .input("seed", seed);
    Ok(finish(rec, instances.len(), found))
}

/// Real-rootedness along random positive rays.
pub fn same_phase(shape: &str, trials: usize, seed: u64) -> CliResult<Outcome> {
    let board: FerrersBoard = shape.parse()?;
    let report = same_phase_stability_probe(&board, trials, seed)?;
    let found = report
        .failures
        .iter()
        .map(|(dir, poly)| json!({"direction": dir.to_string(), "polynomial": coeff_strings(poly)}))
        .collect();
    let rec = ResultRecord::new("probe")
        .input("conjecture", "same-phase")
        .input("shape", &board)
        .input("trials", trials)
        .input("seed", seed);
    Ok(finish(rec, report.trials, found))
}
