//! Recomputes each published value and diffs it against the embedded expectation.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use rook_eulerian::boards::{
    enumerate_row_complete, rook_descent_polynomial, rook_eulerian_brute, rook_eulerian_recursive,
    rook_eulerian_refined, FerrersBoard, Shape,
};
use rook_eulerian::exactpoly::{is_interlacing_sequence, is_real_rooted};
use rook_eulerian::invseq::search_s_match;
use rook_eulerian::multiset::{enumerate_words, multiset_refined, Content, SkewBoard};
use rook_eulerian::perms::{
    board_to_permutation, interval_stat_polynomial, lower_interval, permutation_to_board,
    verify_interval_equals_placements, OrderKind, Permutation, StatKind,
};
use rook_eulerian::posets::{
    count_linear_extensions, jordan_holder_set, permutation_poset, w_polynomial,
};
use rook_eulerian::IntPolynomial;

use crate::approx::approximate_roots;
use crate::parallel::par_map;
use crate::record::{coeff_strings, ResultRecord};
use crate::{CliError, CliResult, Outcome, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Eq1,
    Eq3,
    Eq5,
    Thm2Example,
    Thm3,
    Fig2,
    Fig3,
    MultisetExample,
    MultisetSkew,
    S6Scan,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::Eq1,
        Target::Eq3,
        Target::Eq5,
        Target::Thm2Example,
        Target::Thm3,
        Target::Fig2,
        Target::Fig3,
        Target::MultisetExample,
        Target::MultisetSkew,
        Target::S6Scan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Eq1 => "eq1",
            Target::Eq3 => "eq3",
            Target::Eq5 => "eq5",
            Target::Thm2Example => "thm2-example",
            Target::Thm3 => "thm3",
            Target::Fig2 => "fig2",
            Target::Fig3 => "fig3",
            Target::MultisetExample => "multiset-example",
            Target::MultisetSkew => "multiset-skew",
            Target::S6Scan => "s6-scan",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown target {s:?}"))
    }
}

/// Accumulates named expected/actual comparisons.
#[derive(Default)]
struct Diff {
    items: Vec<Value>,
    failed: usize,
}

impl Diff {
    fn check<T: Serialize + PartialEq>(&mut self, name: &str, expected: T, actual: T) {
        let ok = expected == actual;
        if !ok {
            self.failed += 1;
        }
        self.items.push(json!({"check": name, "expected": expected, "actual": actual, "ok": ok}));
    }

    fn poly(&mut self, name: &str, expected: &[i64], actual: &IntPolynomial) {
        self.check(
            name,
            coeff_strings(&IntPolynomial::from_i64s(expected)),
            coeff_strings(actual),
        );
    }

    fn real_rooted(&mut self, name: &str, expected: bool, p: &IntPolynomial) -> CliResult<()> {
        self.check(name, expected, is_real_rooted(p)?.is_real_rooted);
        Ok(())
    }

    /// The non-real root in the upper half plane nearest to `z`, within `tol` per component.
    fn root_near(&mut self, name: &str, z: Complex64, tol: f64, p: &IntPolynomial) -> CliResult<()> {
        let roots = approximate_roots(p)?;
        let best = roots
            .iter()
            .filter(|r| r.value().im > 0.0)
            .min_by(|a, b| (a.value() - z).norm().total_cmp(&(b.value() - z).norm()));
        let actual = best.map(|r| r.value());
        let ok = actual.is_some_and(|w| (w.re - z.re).abs() < tol && (w.im - z.im).abs() < tol);
        if !ok {
            self.failed += 1;
        }
        self.items.push(json!({
            "check": name,
            "expected": format!("{} ± {}i", z.re, z.im),
            "actual": best.map(|r| format!("{} ± {}i", r.re, r.im)),
            "tolerance": tol,
            "ok": ok,
        }));
        Ok(())
    }

    fn finish(self, rec: ResultRecord) -> (ResultRecord, bool) {
        let ok = self.failed == 0;
        let rec = rec
            .detail("checks", self.items)
            .detail("failed", self.failed)
            .detail("ok", ok);
        (rec, ok)
    }
}

fn perm(word: &[usize]) -> CliResult<Permutation> {
    Ok(Permutation::new(word.to_vec())?)
}

fn board(parts: &[usize]) -> CliResult<FerrersBoard> {
    Ok(FerrersBoard::new(parts.to_vec())?)
}

fn eq1(d: &mut Diff) -> CliResult<IntPolynomial> {
    let top = perm(&[4, 6, 2, 1, 7, 3, 5])?;
    let p = interval_stat_polynomial(&top, OrderKind::Bruhat, StatKind::Descent)?;
    d.poly("bruhat descent polynomial of 4621735", &[1, 43, 196, 168, 23, 1], &p);
    d.real_rooted("real-rooted", false, &p)?;
    d.root_near("non-real root", Complex64::new(-10.8143561, 4.5913096), 5e-6, &p)?;
    Ok(p)
}

fn eq3(d: &mut Diff) -> CliResult<IntPolynomial> {
    let top = perm(&[4, 1, 5, 6, 8, 2, 3, 7])?;
    let p = interval_stat_polynomial(&top, OrderKind::Bruhat, StatKind::Excedance)?;
    d.poly("bruhat excedance polynomial of 41568237", &[1, 21, 140, 290, 127, 5], &p);
    d.real_rooted("real-rooted", false, &p)?;
    d.check("contains 312", true, top.contains_312().is_some());
    Ok(p)
}

pub const WIDTH_TWO_PERMUTATION: [usize; 17] = [2, 4, 6, 8, 10, 1, 12, 3, 15, 5, 17, 7, 9, 11, 13, 14, 16];

fn eq5(d: &mut Diff) -> CliResult<IntPolynomial> {
    let pi = perm(&WIDTH_TWO_PERMUTATION)?;
    let poset = permutation_poset(&pi);
    let p = w_polynomial(&poset)?;
    d.poly("W-polynomial", &[1, 32, 336, 1420, 2534, 1946, 658, 86, 3], &p);
    d.check("linear extensions", 7016u128, count_linear_extensions(&poset)?);
    d.check("jordan-holder set size", 7016usize, jordan_holder_set(&poset)?.len());
    d.real_rooted("real-rooted", false, &p)?;
    d.root_near("non-real root", Complex64::new(-1.85884, 0.14976), 5e-5, &p)?;
    Ok(p)
}

fn thm2_example(d: &mut Diff) -> CliResult<IntPolynomial> {
    let b = board(&[3, 4, 4, 6, 7])?;
    let total = rook_eulerian_brute(&b);
    let refined = rook_eulerian_refined(&b);
    let (rec_total, rec_refined) = rook_eulerian_recursive(&b)?;
    d.poly("Q", &[0, 3, 63, 81, 15], &total);
    let expected: [&[i64]; 3] = [&[0, 0, 12, 30, 12], &[0, 0, 21, 30, 3], &[0, 3, 30, 21]];
    d.check("refined family size", 3, refined.len());
    for (i, (e, q)) in expected.iter().zip(&refined).enumerate() {
        d.poly(&format!("Q_{}", i + 1), e, q);
    }
    d.check("recursion agrees with enumeration", true, rec_total == total && rec_refined == refined);
    let seq: Vec<IntPolynomial> = refined.iter().rev().cloned().collect();
    d.check("Q_3, Q_2, Q_1 interlacing", true, is_interlacing_sequence(&seq)?);
    d.real_rooted("real-rooted", true, &total)?;
    Ok(total)
}

fn thm3(d: &mut Diff) -> CliResult<IntPolynomial> {
    let b = board(&[2, 3, 5, 5, 5])?;
    let des = rook_descent_polynomial(&b);
    let asc = rook_eulerian_brute(&b);
    d.poly("descent polynomial on row-complete placements", &[1, 13, 9, 1], &des);
    d.poly("ascent polynomial (reversal)", &[0, 1, 9, 13, 1], &asc);
    d.check("placements", 24u128, b.placement_count());
    let search = search_s_match(&des, None)?;
    d.check("s-vector matching 1+13t+9t^2+t^3", None, search.found.map(|s| s.to_string()));
    d.check("candidates enumerated", true, search.candidates_tested > 0);
    d.check("product searched", 24u128, search.product);
    Ok(des)
}

fn round_trip(d: &mut Diff, parts: &[usize], word: &[usize]) -> CliResult<()> {
    let b = board(parts)?;
    let p = perm(word)?;
    d.check(
        &format!("board {b} to permutation"),
        p.to_string(),
        board_to_permutation(&b)?.to_string(),
    );
    d.check(
        &format!("permutation {p} to board"),
        b.to_string(),
        permutation_to_board(&p)?.to_string(),
    );
    d.check(&format!("{p} avoids 312"), true, p.contains_312().is_none());
    Ok(())
}

fn fig2(d: &mut Diff) -> CliResult<()> {
    round_trip(d, &[4, 5, 5, 6, 6, 8, 8, 8], &[4, 5, 3, 6, 2, 8, 7, 1])
}

fn fig3(d: &mut Diff) -> CliResult<()> {
    round_trip(d, &[2, 3, 4, 4], &[2, 3, 4, 1])?;
    let b = board(&[2, 3, 4, 4])?;
    let interval = lower_interval(&perm(&[2, 3, 4, 1])?, OrderKind::Bruhat)?;
    let complete: Vec<String> = enumerate_row_complete(&b)
        .filter(|r| r.is_complete())
        .map(|r| Permutation::new(r.word).map(|p| p.to_string()))
        .collect::<Result<_, _>>()?;
    let interval: Vec<String> = interval.iter().map(ToString::to_string).collect();
    d.check("interval size", 8, interval.len());
    let mut sorted = complete.clone();
    sorted.sort();
    let mut isorted = interval.clone();
    isorted.sort();
    d.check("interval equals complete placements", sorted, isorted);
    d.check("library verification", true, verify_interval_equals_placements(&b)?);
    Ok(())
}

fn multiset_example(d: &mut Diff) -> CliResult<IntPolynomial> {
    let b = SkewBoard::straight(Shape::new(vec![2, 2, 2, 3, 3])?);
    let content = Content::new(vec![2, 2, 1]);
    let total: IntPolynomial = multiset_refined(&b, &content)?.iter().flatten().sum();
    d.poly("R", &[0, 3, 8, 1], &total);
    d.check("words on the board", 12, enumerate_words(&b, &content)?.len());
    let all = Permutation::all(5)
        .map(|p| p.word().iter().map(|&x| [1, 1, 2, 2, 3][x - 1]).collect::<Vec<_>>())
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    d.check("words with that content", 30, all);
    Ok(total)
}

fn multiset_skew(d: &mut Diff) -> CliResult<IntPolynomial> {
    let b = SkewBoard::from_decreasing(&[3, 3, 3, 3, 2, 1], &[1, 1])?;
    let content = Content::new(vec![2, 2, 2]);
    let total: IntPolynomial = multiset_refined(&b, &content)?.iter().flatten().sum();
    d.poly("R on 333321/11", &[0, 1, 6, 4, 1], &total);
    d.real_rooted("real-rooted", false, &total)?;
    Ok(total)
}

fn s6_scan(d: &mut Diff) -> CliResult<()> {
    let all: Vec<Permutation> = Permutation::all(6).collect();
    let verdicts = par_map(&all, |p| -> CliResult<bool> {
        let q = interval_stat_polynomial(p, OrderKind::Bruhat, StatKind::Descent)?;
        Ok(is_real_rooted(&q)?.is_real_rooted)
    });
    let mut failures = Vec::new();
    for (p, v) in all.iter().zip(verdicts) {
        if !v? {
            failures.push(p.to_string());
        }
    }
    d.check("permutations scanned", 720, all.len());
    d.check("not real-rooted", Vec::<String>::new(), failures);
    Ok(())
}

pub fn run_target(target: Target) -> CliResult<(ResultRecord, bool)> {
    let start = std::time::Instant::now();
    let mut d = Diff::default();
    let poly = match target {
        Target::Eq1 => Some(eq1(&mut d)?),
        Target::Eq3 => Some(eq3(&mut d)?),
        Target::Eq5 => Some(eq5(&mut d)?),
        Target::Thm2Example => Some(thm2_example(&mut d)?),
        Target::Thm3 => Some(thm3(&mut d)?),
        Target::Fig2 => fig2(&mut d).map(|_| None)?,
        Target::Fig3 => fig3(&mut d).map(|_| None)?,
        Target::MultisetExample => Some(multiset_example(&mut d)?),
        Target::MultisetSkew => Some(multiset_skew(&mut d)?),
        Target::S6Scan => s6_scan(&mut d).map(|_| None)?,
    };
    let mut rec = ResultRecord::new("reproduce").input("target", target);
    if let Some(p) = &poly {
        rec = rec.with_polynomial(p);
    }
    let (mut rec, ok) = d.finish(rec);
    rec.elapsed_ms = (start.elapsed().as_millis() as u64).max(1);
    Ok((rec, ok))
}

/// Runs the targets concurrently and reports them in the order given.
pub fn reproduce(targets: &[Target]) -> CliResult<Outcome> {
    let results = par_map(targets, |&t| run_target(t));
    let mut records = Vec::new();
    let mut failed = Vec::new();
    for (t, r) in targets.iter().zip(results) {
        let (rec, ok) = r?;
        if !ok {
            failed.push(t.name());
        }
        records.push(rec);
    }
    let status = if failed.is_empty() {
        Status::Ok
    } else {
        Status::Mismatch
    };
    Ok(Outcome { records, status })
}

pub fn parse_targets(names: &[String]) -> CliResult<Vec<Target>> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(Target::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| n.parse().map_err(CliError::Usage))
        .collect()
}
