//! Machine-readable report documents.

use std::fmt::Write as _;

use expcommute_core::wermuth::{CheckOutcome, ScanSample};
use expcommute_core::{CongruenceReport, Spectrum, TheoremReport, Threshold, ToleranceConfig, WitnessScan};
use serde::{Deserialize, Serialize};

use crate::fuzz::FuzzSummary;
use crate::matrix_file::MatrixFile;
use crate::number::{Cplx, Real};

pub const TOOL: &str = "expcommute";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub config: ConfigEcho,
    pub seed: Option<u64>,
    pub body: ReportBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigEcho {
    pub eq_tol: Real,
    pub congruence_tol: Real,
    pub spectral_tol: Real,
    pub interval_margin: Real,
    /// The modulus `z = 2πi` is built from this double, the nearest one to 2π.
    pub two_pi: Real,
}

impl From<&ToleranceConfig> for ConfigEcho {
    fn from(cfg: &ToleranceConfig) -> Self {
        ConfigEcho {
            eq_tol: cfg.eq_tol.into(),
            congruence_tol: cfg.congruence_tol.into(),
            spectral_tol: cfg.spectral_tol.into(),
            interval_margin: cfg.interval_margin.into(),
            two_pi: std::f64::consts::TAU.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportBody {
    Eig(EigDoc),
    Theorem(TheoremDoc),
    Counterexample(CounterexampleDoc),
    Expm(ExpmDoc),
    Fuzz(FuzzSummary),
    Scan(ScanDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub s1: Cplx,
    pub s2: Cplx,
    pub k: i64,
    pub residual: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CongruenceDoc {
    pub z: Cplx,
    pub free: bool,
    pub min_distance: Option<Real>,
    pub witnesses: Vec<WitnessDoc>,
}

impl From<&CongruenceReport> for CongruenceDoc {
    fn from(r: &CongruenceReport) -> Self {
        CongruenceDoc {
            z: r.z.into(),
            free: r.free,
            min_distance: r.min_distance.map(Real),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessDoc { s1: w.s1.into(), s2: w.s2.into(), k: w.k, residual: w.residual.into() })
                .collect(),
        }
    }
}

/// `null` stands for the unbounded threshold of a one-point spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThresholdDoc(pub Option<Real>);

impl From<Threshold> for ThresholdDoc {
    fn from(t: Threshold) -> Self {
        ThresholdDoc(t.finite().map(Real))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigDoc {
    pub n: usize,
    pub spectrum: Vec<Cplx>,
    pub condition_hint: Real,
    pub diameter: Real,
    pub scaling_threshold: ThresholdDoc,
    pub congruence: CongruenceDoc,
}

impl EigDoc {
    pub fn new(n: usize, s: &Spectrum, diameter: f64, tau: Threshold, c: &CongruenceReport) -> Self {
        EigDoc {
            n,
            spectrum: s.values.iter().map(|&z| z.into()).collect(),
            condition_hint: s.condition_hint.into(),
            diameter: diameter.into(),
            scaling_threshold: tau.into(),
            congruence: c.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub congruence: Option<CongruenceDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremDoc {
    pub theorem: String,
    pub hypothesis_holds: bool,
    pub hypothesis: Vec<CheckDoc>,
    pub exp_defect: Real,
    pub op_defect: Real,
    pub verdict: String,
    pub inconclusive_margin: bool,
    pub forward_failure: bool,
    pub lemma_failure: bool,
}

impl From<&TheoremReport> for TheoremDoc {
    fn from(r: &TheoremReport) -> Self {
        TheoremDoc {
            theorem: r.theorem.as_str().into(),
            hypothesis_holds: r.hypothesis_holds,
            hypothesis: r
                .hypothesis_detail
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.into(),
                    passed: c.outcome.passed(),
                    congruence: match &c.outcome {
                        CheckOutcome::Congruence(r) => Some(r.into()),
                        CheckOutcome::Flag(_) => None,
                    },
                })
                .collect(),
            exp_defect: r.exp_defect.into(),
            op_defect: r.op_defect.into(),
            verdict: r.verdict.as_str().into(),
            inconclusive_margin: r.inconclusive_margin,
            forward_failure: r.forward_failure,
            lemma_failure: r.lemma_failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleDoc {
    pub a: Real,
    pub matrix_a: MatrixFile,
    pub matrix_b: MatrixFile,
    pub commutator: MatrixFile,
    pub exp_a: MatrixFile,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub files: Vec<String>,
    pub report: TheoremDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpmDoc {
    pub n: usize,
    pub value: MatrixFile,
    pub scaling_squarings: u32,
    pub oracle_gap: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSampleDoc {
    pub t: Real,
    pub exp_defect: Real,
    pub op_defect: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanDoc {
    pub tau: ThresholdDoc,
    pub inferred_op_defect: Real,
    pub samples: Vec<ScanSampleDoc>,
}

impl From<&WitnessScan> for ScanDoc {
    fn from(s: &WitnessScan) -> Self {
        ScanDoc {
            tau: s.tau.into(),
            inferred_op_defect: s.inferred_op_defect.into(),
            samples: s
                .samples
                .iter()
                .map(|&ScanSample { t, exp_defect, op_defect }| ScanSampleDoc {
                    t: t.into(),
                    exp_defect: exp_defect.into(),
                    op_defect: op_defect.into(),
                })
                .collect(),
        }
    }
}

impl ReportDocument {
    pub fn new(command: &str, cfg: &ToleranceConfig, seed: Option<u64>, body: ReportBody) -> Self {
        ReportDocument {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            timestamp: None,
            config: cfg.into(),
            seed,
            body,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// A short human-readable rendering.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.tool, self.version, self.command);
        match &self.body {
            ReportBody::Eig(e) => {
                let _ = writeln!(out, "spectrum ({}):", e.n);
                for z in &e.spectrum {
                    let _ = writeln!(out, "  {z}");
                }
                let _ = writeln!(out, "diameter {}", e.diameter);
                congruence_summary(&mut out, &e.congruence);
            }
            ReportBody::Theorem(t) => theorem_summary(&mut out, t),
            ReportBody::Counterexample(c) => {
                let _ = writeln!(out, "a = {}", c.a);
                for f in &c.files {
                    let _ = writeln!(out, "wrote {f}");
                }
                theorem_summary(&mut out, &c.report);
            }
            ReportBody::Expm(e) => {
                let _ = writeln!(out, "scaling_squarings {}", e.scaling_squarings);
                if let Some(g) = e.oracle_gap {
                    let _ = writeln!(out, "oracle_gap {g}");
                }
                for row in e.value.entries.chunks(e.n) {
                    let cells: Vec<String> = row.iter().map(|z| z.to_string()).collect();
                    let _ = writeln!(out, "  [{}]", cells.join(", "));
                }
            }
            ReportBody::Fuzz(f) => {
                let _ = writeln!(out, "theorem {} count {} seed {}", f.theorem, f.count, f.seed);
                let h = &f.histogram;
                let _ = writeln!(
                    out,
                    "consistent {} hypothesis-violated {} VIOLATION {} errors {}",
                    h.consistent,
                    h.hypothesis_violated,
                    h.violation,
                    f.errors.len()
                );
                let _ = writeln!(out, "margin certified {}/{}", f.margin_certified, f.count);
                let _ = writeln!(out, "worst commuting exp_defect {}", f.worst.commuting_exp_defect);
                for p in &f.dumps {
                    let _ = writeln!(out, "dump {p}");
                }
            }
            ReportBody::Scan(s) => {
                match s.tau.0 {
                    Some(t) => {
                        let _ = writeln!(out, "tau {t}");
                    }
                    None => {
                        let _ = writeln!(out, "tau unbounded");
                    }
                }
                for p in &s.samples {
                    let _ = writeln!(out, "  t {} exp_defect {} op_defect {}", p.t, p.exp_defect, p.op_defect);
                }
            }
        }
        out
    }
}

fn congruence_summary(out: &mut String, c: &CongruenceDoc) {
    let verdict = if c.free { "free" } else { "not free" };
    let _ = writeln!(out, "2pi*i-congruence: {verdict}");
    for w in &c.witnesses {
        let _ = writeln!(out, "  {} - {} = {} * z (residual {})", w.s1, w.s2, w.k, w.residual);
    }
}

fn theorem_summary(out: &mut String, t: &TheoremDoc) {
    let _ = writeln!(out, "theorem {}", t.theorem);
    for c in &t.hypothesis {
        let _ = writeln!(out, "  [{}] {}", if c.passed { "ok" } else { "no" }, c.name);
    }
    let _ = writeln!(out, "exp_defect {}", t.exp_defect);
    let _ = writeln!(out, "op_defect  {}", t.op_defect);
    let _ = writeln!(out, "verdict {}", t.verdict);
}
