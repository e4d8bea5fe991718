use num_bigint::BigInt;

use rook_eulerian::boards::{
    parse_int_list, rook_descent_polynomial, rook_eulerian_brute, rook_eulerian_recursive,
    rook_eulerian_refined, FerrersBoard, Shape,
};
use rook_eulerian::exactpoly::{is_interlacing_sequence, is_real_rooted, sturm_real_root_count};
use rook_eulerian::invseq::{search_s_match, s_eulerian_with_limit, SVector};
use rook_eulerian::multiset::{multiset_refined, Content, SkewBoard};
use rook_eulerian::perms::{
    interval_stat_polynomial_with_limit, OrderKind, Permutation, StatKind,
};
use rook_eulerian::IntPolynomial;

use crate::approx::approximate_roots;
use crate::record::{verdicts_for, Check, ResultRecord};
use crate::{CliError, CliResult, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Brute,
    Recursive,
    Both,
}

/// Verdicts and optional roots shared by the polynomial-producing commands.
#[derive(Clone, Debug, Default)]
pub struct Analysis {
    pub checks: Vec<Check>,
    pub roots: bool,
}

impl Analysis {
    fn apply(&self, rec: ResultRecord, p: &IntPolynomial) -> CliResult<ResultRecord> {
        let mut rec = rec.with_polynomial(p);
        rec.verdicts = verdicts_for(p, &self.checks)?;
        if self.roots && !p.is_zero() {
            rec.roots = Some(approximate_roots(p)?);
        }
        Ok(rec)
    }
}

pub fn parse_list(s: &str) -> CliResult<Vec<usize>> {
    parse_int_list(s).map_err(CliError::Usage)
}

pub fn parse_coeffs(s: &str) -> CliResult<IntPolynomial> {
    let cs = s
        .split(',')
        .map(|c| c.trim().parse::<BigInt>().map_err(|e| CliError::Usage(format!("{c:?}: {e}"))))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(IntPolynomial::new(cs))
}

pub fn board_poly(
    shape: &str,
    refined: bool,
    method: Method,
    analysis: &Analysis,
) -> CliResult<Outcome> {
    let board: FerrersBoard = shape.parse()?;
    let (total, family) = match method {
        Method::Brute => (rook_eulerian_brute(&board), rook_eulerian_refined(&board)),
        Method::Recursive => rook_eulerian_recursive(&board)?,
        Method::Both => {
            let brute = (rook_eulerian_brute(&board), rook_eulerian_refined(&board));
            let rec = rook_eulerian_recursive(&board)?;
            if brute != rec {
                return Err(CliError::Mismatch(format!(
                    "brute force {} and recursion {} disagree on {board}",
                    brute.0, rec.0
                )));
            }
            brute
        }
    };
    let mut rec = ResultRecord::new("board-poly")
        .input("shape", &board)
        .detail("placements", board.placement_count().to_string());
    if refined {
        let seq: Vec<IntPolynomial> = family.iter().rev().cloned().collect();
        rec.verdicts.interlacing = Some(is_interlacing_sequence(&seq)?);
        let fam: Vec<Option<IntPolynomial>> = family.into_iter().map(Some).collect();
        rec = rec.with_refined(&fam);
    }
    let interlacing = rec.verdicts.interlacing;
    let mut rec = analysis.apply(rec, &total)?;
    rec.verdicts.interlacing = interlacing;
    Ok(Outcome::ok(vec![rec]))
}

pub fn board_descents(shape: &str, analysis: &Analysis) -> CliResult<Outcome> {
    let board: FerrersBoard = shape.parse()?;
    let rec = ResultRecord::new("board-poly")
        .input("shape", &board)
        .input("statistic", "des");
    Ok(Outcome::ok(vec![analysis.apply(rec, &rook_descent_polynomial(&board))?]))
}

pub fn interval(
    top: &str,
    order: OrderKind,
    stat: StatKind,
    max_interval: usize,
    analysis: &Analysis,
) -> CliResult<Outcome> {
    let top: Permutation = top.parse()?;
    let poly = interval_stat_polynomial_with_limit(&top, order, stat, max_interval)?;
    let rec = ResultRecord::new("interval")
        .input("top", &top)
        .input("order", order)
        .input("stat", stat)
        .detail("size", poly.value_at_one().to_string());
    let rec = match top.contains_312() {
        Some(w) => rec.detail("pattern_312", w),
        None => rec,
    };
    Ok(Outcome::ok(vec![analysis.apply(rec, &poly)?]))
}

pub fn s_eulerian(s: &str, max_product: u128, analysis: &Analysis) -> CliResult<Outcome> {
    let s: SVector = s.parse()?;
    let poly = s_eulerian_with_limit(&s, max_product)?;
    let rec = ResultRecord::new("s-eulerian").input("s", &s);
    Ok(Outcome::ok(vec![analysis.apply(rec, &poly)?]))
}

pub enum SearchTarget {
    Shape { shape: String, descents: bool },
    Coeffs(String),
}

pub fn search_s(target: SearchTarget, max_len: Option<usize>) -> CliResult<Outcome> {
    let (rec, poly) = match target {
        SearchTarget::Shape { shape, descents } => {
            let board: FerrersBoard = shape.parse()?;
            let poly = if descents {
                rook_descent_polynomial(&board)
            } else {
                rook_eulerian_brute(&board)
            };
            let rec = ResultRecord::new("search-s")
                .input("shape", &board)
                .input("statistic", if descents { "des" } else { "asc" });
            (rec, poly)
        }
        SearchTarget::Coeffs(c) => {
            let poly = parse_coeffs(&c)?;
            (ResultRecord::new("search-s").input("target", c), poly)
        }
    };
    let out = search_s_match(&poly, max_len)?;
    let rec = rec
        .with_polynomial(&poly)
        .detail("found", out.found.as_ref().map(ToString::to_string))
        .detail("candidates_tested", out.candidates_tested)
        .detail("product", out.product.to_string());
    Ok(Outcome::ok(vec![rec]))
}

/// Parses a multiset board: increasing parts with `mu` padded by leading
/// zeros, or decreasing parts (longest row first) with `mu` padded by
/// trailing zeros, which is reversed into the increasing form.
pub fn parse_skew(shape: &str, mu: Option<&str>) -> CliResult<SkewBoard> {
    let lambda = parse_list(shape)?;
    let mu = mu.map(parse_list).transpose()?.unwrap_or_default();
    let increasing = lambda.windows(2).all(|w| w[0] <= w[1]);
    if increasing {
        Ok(SkewBoard::new(Shape::new(lambda)?, mu)?)
    } else if lambda.windows(2).all(|w| w[0] >= w[1]) {
        Ok(SkewBoard::from_decreasing(&lambda, &mu)?)
    } else {
        Err(CliError::Usage(format!("shape {shape} is neither increasing nor decreasing")))
    }
}

pub fn multiset(
    shape: &str,
    mu: Option<&str>,
    content: &str,
    refined: bool,
    analysis: &Analysis,
) -> CliResult<Outcome> {
    let board = parse_skew(shape, mu)?;
    let content = Content::new(parse_list(content)?);
    let family = multiset_refined(&board, &content)?;
    let total: IntPolynomial = family.iter().flatten().sum();
    let mut rec = ResultRecord::new("multiset")
        .input("board", &board)
        .input("content", &content)
        .detail("words", total.value_at_one().to_string());
    let mut interlacing = None;
    if refined {
        let present: Vec<IntPolynomial> = family.iter().rev().flatten().cloned().collect();
        if !present.is_empty() {
            interlacing = Some(is_interlacing_sequence(&present)?);
        }
        rec = rec.with_refined(&family);
    }
    let mut rec = analysis.apply(rec, &total)?;
    rec.verdicts.interlacing = interlacing;
    Ok(Outcome::ok(vec![rec]))
}

pub fn analyze(coeffs: &str, roots: bool) -> CliResult<Outcome> {
    let poly = parse_coeffs(coeffs)?;
    if poly.is_zero() {
        return Err(rook_eulerian::Error::ZeroPolynomial.into());
    }
    let nonneg = poly.coeffs().iter().all(|c| c >= &BigInt::from(0));
    let checks: Vec<Check> = if nonneg { Check::ALL.to_vec() } else { vec![Check::RealRooted] };
    let report = is_real_rooted(&poly)?;
    let rec = ResultRecord::new("analyze")
        .input("coeffs", coeffs)
        .detail("degree", report.degree)
        .detail("distinct_real_roots", sturm_real_root_count(&poly)?)
        .detail("real_roots_with_multiplicity", report.real_root_count)
        .detail("witness", report.witness.as_ref().map(crate::record::coeff_strings));
    let analysis = Analysis { checks, roots };
    Ok(Outcome::ok(vec![analysis.apply(rec, &poly)?]))
}
