//! Executable checks of the structural results about robust clique
//! complexes: every claim is reduced to face-set equalities or homology
//! reports, compared exactly against an expected value whose source is
//! recorded alongside it.

mod claims;
mod recurrence;
mod scan;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{robust_clique_complex_capped, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use claims::{
    verify_clique_lemma, verify_decomposition, verify_duality_involution,
    verify_edge_corollary, verify_embedded_join_generic, verify_embedded_join_steps,
    verify_example_26, verify_join_of_spheres, verify_koenig, verify_main2, verify_thm_main,
    verify_total_cut, verify_two_skeleton, DecompositionCheck,
};
pub use recurrence::{gamma_recurrence, RecurrenceStep, RecurrenceTrace};
pub use scan::{scan_conjecture, scan_grid_alpha, ScanMode};

/// Resource limits for a single verification instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest vertex universe for robust clique complexes.
    pub universe: usize,
    /// Largest vertex universe for direct total cut enumeration.
    pub total_cut_universe: usize,
    /// Largest number of faces (or enumeration candidates) per complex.
    pub faces: usize,
    /// Wall-clock budget per instance.
    pub budget_secs: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            universe: 20,
            total_cut_universe: 14,
            faces: 2_000_000,
            budget_secs: 600,
        }
    }
}

impl Caps {
    /// `Cliq_k(g)` within the universe and face caps.
    pub fn robust_clique(&self, g: &Graph, k: usize) -> Result<SimplicialComplex> {
        if g.vertex_count() > self.universe {
            return Err(Error::SizeCap {
                what: "robust clique universe",
                actual: g.vertex_count(),
                cap: self.universe,
            });
        }
        Ok(robust_clique_complex_capped(g, k, Some(self.faces))?.0)
    }

    pub(crate) fn clock(&self) -> Budget {
        Budget {
            start: Instant::now(),
            limit: Duration::from_secs(self.budget_secs),
            secs: self.budget_secs,
        }
    }
}

pub(crate) struct Budget {
    start: Instant,
    limit: Duration,
    secs: u64,
}

impl Budget {
    pub(crate) fn check(&self, what: &'static str) -> Result<()> {
        if self.start.elapsed() > self.limit {
            Err(Error::BudgetExceeded {
                what,
                secs: self.secs,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn millis(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Expected and computed values agree exactly.
    Match,
    /// The computation contradicts the expected value.
    Mismatch,
    /// Stated values disagree with each other or with the computation in a
    /// way that is reported rather than decided.
    Flagged,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Flagged => "flagged",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    /// The least favourable of two verdicts (mismatch over flagged over match).
    pub fn worst(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Mismatch, _) | (_, Mismatch) => Mismatch,
            (Flagged, _) | (_, Flagged) => Flagged,
            _ => Match,
        }
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A closed-form count stated for the family.
    ClosedForm,
    /// The step-by-step sphere-count recurrence.
    Recurrence,
    /// An independent brute-force computation.
    Oracle,
    /// A specific value asserted for a single example, recorded for audit.
    Claimed,
    /// A structural identity (face-set or homology equality).
    Identity,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub name: String,
    pub value: Value,
    pub source: Source,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub formula: String,
}

impl Expected {
    pub fn new(name: &str, value: impl Into<Value>, source: Source, formula: &str) -> Self {
        Expected {
            name: name.to_string(),
            value: value.into(),
            source,
            formula: formula.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: Value,
    pub expected: Vec<Expected>,
    pub computed: Value,
    pub verdict: Verdict,
    pub runtime_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// Zeroes the runtime so reports compare byte for byte across runs.
    pub fn without_timing(mut self) -> Self {
        self.runtime_ms = 0;
        self
    }

    pub fn text_line(&self) -> String {
        let expected: Vec<String> = self
            .expected
            .iter()
            .map(|e| format!("{}={}", e.name, e.value))
            .collect();
        format!(
            "{:<8} {} {} expected[{}] computed {} ({} ms)",
            self.verdict.as_str(),
            self.claim,
            self.params,
            expected.join(", "),
            self.computed,
            self.runtime_ms
        )
    }
}

/// One JSON document per line.
pub fn reports_to_jsonl(reports: &[VerificationReport]) -> String {
    reports.iter().map(|r| r.to_json() + "\n").collect()
}

/// Summary table with columns claim, params, expected, computed, verdict, ms.
pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim", "params", "expected", "computed", "verdict", "ms"])
        .expect("in-memory write");
    for r in reports {
        let expected: Value = r
            .expected
            .iter()
            .map(|e| (e.name.clone(), e.value.clone()))
            .collect::<serde_json::Map<_, _>>()
            .into();
        w.write_record([
            r.claim.as_str(),
            &r.params.to_string(),
            &expected.to_string(),
            &r.computed.to_string(),
            r.verdict.as_str(),
            &r.runtime_ms.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Least favourable verdict over a batch; an empty batch is a match.
pub fn overall_verdict(reports: &[VerificationReport]) -> Verdict {
    reports
        .iter()
        .fold(Verdict::Match, |acc, r| acc.worst(r.verdict))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let c = (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    u64::try_from(c).expect("binomial fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(9, 0), 1);
        assert_eq!(binomial(15, 7), 6435);
        for n in 0..20 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn verdict_order() {
        use Verdict::*;
        assert_eq!(Match.worst(Flagged), Flagged);
        assert_eq!(Flagged.worst(Mismatch), Mismatch);
        assert_eq!(Match.worst(Match), Match);
    }

    #[test]
    fn csv_quotes_json_cells() {
        let r = VerificationReport {
            claim: "x".into(),
            params: serde_json::json!({"m": 2, "n": 3}),
            expected: vec![Expected::new("count", 2, Source::ClosedForm, "")],
            computed: serde_json::json!({"count": 2}),
            verdict: Verdict::Match,
            runtime_ms: 5,
            notes: vec![],
        };
        let csv = reports_to_csv(&[r]);
        assert_eq!(
            csv,
            "claim,params,expected,computed,verdict,ms\nx,\"{\"\"m\"\":2,\"\"n\"\":3}\",\"{\"\"count\"\":2}\",\"{\"\"count\"\":2}\",match,5\n"
        );
    }
}
