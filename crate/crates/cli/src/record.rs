use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use rook_eulerian::exactpoly::{is_log_concave, is_real_rooted, is_ultra_log_concave, is_unimodal};
use rook_eulerian::IntPolynomial;

use crate::approx::ApproxRoot;

/// Ascending coefficients as decimal strings.
pub fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn parse_coeff_strings(cs: &[String]) -> Result<IntPolynomial, String> {
    cs.iter()
        .map(|c| c.parse::<BigInt>().map_err(|e| format!("{c:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(IntPolynomial::new)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub real_rooted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub interlacing: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ulc: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub log_concave: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unimodal: Option<bool>,
}

impl Verdicts {
    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    RealRooted,
    Ulc,
    LogConcave,
    Unimodal,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::RealRooted, Check::Ulc, Check::LogConcave, Check::Unimodal];

    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "real-rooted" | "rr" => Ok(Self::RealRooted),
            "ulc" => Ok(Self::Ulc),
            "lc" | "log-concave" => Ok(Self::LogConcave),
            "unimodal" => Ok(Self::Unimodal),
            _ => Err(format!("unknown check {s:?} (real-rooted, ulc, lc, unimodal)")),
        }
    }
}

/// Runs the requested decision procedures on `p`.
pub fn verdicts_for(p: &IntPolynomial, checks: &[Check]) -> rook_eulerian::Result<Verdicts> {
    let mut v = Verdicts::default();
    for c in checks {
        match c {
            Check::RealRooted => v.real_rooted = Some(is_real_rooted(p)?.is_real_rooted),
            Check::Ulc => v.ulc = Some(is_ultra_log_concave(p)?),
            Check::LogConcave => v.log_concave = Some(is_log_concave(p)?),
            Check::Unimodal => v.unimodal = Some(is_unimodal(p)?),
        }
    }
    Ok(v)
}

/// One line of output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomial: Option<Vec<String>>,
    /// Refined family in index order; `null` marks an absent member.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub refined: Option<Vec<Option<Vec<String>>>>,
    #[serde(skip_serializing_if = "Verdicts::is_empty", default)]
    pub verdicts: Verdicts,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub roots: Option<Vec<ApproxRoot>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, serde_json::Value>,
    pub elapsed_ms: u64,
}

impl ResultRecord {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            polynomial: None,
            refined: None,
            verdicts: Verdicts::default(),
            roots: None,
            details: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    pub fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(
            key.into(),
            serde_json::to_value(value).expect("details serialize"),
        );
        self
    }

    pub fn with_polynomial(mut self, p: &IntPolynomial) -> Self {
        self.polynomial = Some(coeff_strings(p));
        self
    }

    pub fn with_refined(mut self, family: &[Option<IntPolynomial>]) -> Self {
        self.refined = Some(family.iter().map(|p| p.as_ref().map(coeff_strings)).collect());
        self
    }

    pub fn polynomial_exact(&self) -> Option<Result<IntPolynomial, String>> {
        self.polynomial.as_ref().map(|c| parse_coeff_strings(c))
    }

    pub fn refined_exact(&self) -> Option<Result<Vec<Option<IntPolynomial>>, String>> {
        self.refined.as_ref().map(|fam| {
            fam.iter()
                .map(|c| c.as_ref().map(|c| parse_coeff_strings(c)).transpose())
                .collect()
        })
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn poly_text(cs: &[String]) -> String {
    parse_coeff_strings(cs)
        .map(|p| p.to_string())
        .unwrap_or_else(|e| format!("<{e}>"))
}

impl fmt::Display for ResultRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.command)?;
        for (k, v) in &self.inputs {
            write!(f, " {k}={v}")?;
        }
        writeln!(f, "  ({} ms)", self.elapsed_ms)?;
        if let Some(p) = &self.polynomial {
            writeln!(f, "  {}", poly_text(p))?;
        }
        if let Some(fam) = &self.refined {
            for (i, p) in fam.iter().enumerate() {
                match p {
                    Some(p) => writeln!(f, "  [{}] {}", i + 1, poly_text(p))?,
                    None => writeln!(f, "  [{}] absent", i + 1)?,
                }
            }
        }
        let v = &self.verdicts;
        for (name, val) in [
            ("real-rooted", v.real_rooted),
            ("interlacing", v.interlacing),
            ("ulc", v.ulc),
            ("log-concave", v.log_concave),
            ("unimodal", v.unimodal),
        ] {
            if let Some(b) = val {
                writeln!(f, "  {name}: {b}")?;
            }
        }
        if let Some(roots) = &self.roots {
            for r in roots {
                writeln!(f, "  root {r}")?;
            }
        }
        for (k, v) in &self.details {
            writeln!(f, "  {k}: {v}")?;
        }
        Ok(())
    }
}
