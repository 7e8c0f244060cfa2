//! Seeded soundness campaigns, fanned out over a worker pool.

use std::fs;
use std::path::{Path, PathBuf};

use expcommute_core::wermuth::campaign::{run_instance, InstanceOutcome};
use expcommute_core::{TheoremId, ToleranceConfig, Verdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, ExitStatus};
use crate::matrix_file::MatrixFile;
use crate::number::Real;
use crate::report::{ConfigEcho, TheoremDoc};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Histogram {
    pub consistent: u64,
    pub hypothesis_violated: u64,
    pub violation: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorstDefects {
    /// Largest exponential defect over instances whose pair commutes.
    pub commuting_exp_defect: Real,
    pub commuting_op_defect: Real,
    /// Smallest defects over non-commuting instances whose hypothesis holds.
    pub noncommuting_exp_defect: Option<Real>,
    pub noncommuting_op_defect: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceError {
    pub index: u64,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzSummary {
    pub theorem: String,
    pub count: u64,
    pub seed: u64,
    pub margin: Real,
    pub histogram: Histogram,
    pub commuting_instances: u64,
    pub margin_certified: u64,
    pub inconclusive: u64,
    pub forward_failures: u64,
    pub lemma_failures: u64,
    pub worst: WorstDefects,
    pub errors: Vec<InstanceError>,
    pub failures: Vec<u64>,
    pub dumps: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForensicDump {
    pub theorem: String,
    pub campaign_seed: u64,
    pub index: u64,
    pub instance_seed: u64,
    pub kind: String,
    pub config: ConfigEcho,
    pub a: MatrixFile,
    pub b: MatrixFile,
    pub report: TheoremDoc,
}

pub struct Campaign<'a> {
    pub theorem: TheoremId,
    pub count: u64,
    pub seed: u64,
    pub margin: f64,
    pub cfg: &'a ToleranceConfig,
    pub dump_dir: Option<&'a Path>,
}

fn max_real(a: Real, b: f64) -> Real {
    Real(a.0.max(b))
}

fn min_opt(a: Option<Real>, b: f64) -> Option<Real> {
    Some(Real(a.map_or(b, |x| x.0.min(b))))
}

impl Campaign<'_> {
    pub fn run(&self) -> Result<(FuzzSummary, ExitStatus), CliError> {
        if self.count == 0 {
            return Err(CliError::Usage("--count must be at least 1".into()));
        }
        if !(self.margin.is_finite() && (0.0..0.5).contains(&self.margin)) {
            return Err(CliError::Usage("--margin must lie in [0, 0.5)".into()));
        }
        self.cfg.validate()?;
        let outcomes: Vec<(u64, expcommute_core::Result<InstanceOutcome>)> = (0..self.count)
            .into_par_iter()
            .map(|i| (i, run_instance(self.theorem, self.seed, i, self.margin, self.cfg)))
            .collect();

        let mut s = FuzzSummary {
            theorem: self.theorem.as_str().into(),
            count: self.count,
            seed: self.seed,
            margin: self.margin.into(),
            histogram: Histogram::default(),
            commuting_instances: 0,
            margin_certified: 0,
            inconclusive: 0,
            forward_failures: 0,
            lemma_failures: 0,
            worst: WorstDefects::default(),
            errors: Vec::new(),
            failures: Vec::new(),
            dumps: Vec::new(),
        };
        for (index, outcome) in outcomes {
            let o = match outcome {
                Ok(o) => o,
                Err(e) => {
                    s.errors.push(InstanceError { index, message: e.to_string() });
                    continue;
                }
            };
            let r = &o.report;
            match r.verdict {
                Verdict::Consistent => s.histogram.consistent += 1,
                Verdict::HypothesisViolated => s.histogram.hypothesis_violated += 1,
                Verdict::Violation => s.histogram.violation += 1,
            }
            s.margin_certified += o.margin_certified as u64;
            s.inconclusive += r.inconclusive_margin as u64;
            s.forward_failures += r.forward_failure as u64;
            s.lemma_failures += r.lemma_failure as u64;
            if o.instance.kind.commuting() {
                s.commuting_instances += 1;
                s.worst.commuting_exp_defect = max_real(s.worst.commuting_exp_defect, r.exp_defect);
                s.worst.commuting_op_defect = max_real(s.worst.commuting_op_defect, r.op_defect);
            } else if r.hypothesis_holds {
                s.worst.noncommuting_exp_defect = min_opt(s.worst.noncommuting_exp_defect, r.exp_defect);
                s.worst.noncommuting_op_defect = min_opt(s.worst.noncommuting_op_defect, r.op_defect);
            }
            if o.is_failure() {
                s.failures.push(index);
                if let Some(dir) = self.dump_dir {
                    s.dumps.push(self.dump(dir, &o)?.display().to_string());
                }
            }
        }
        let status = if !s.failures.is_empty() {
            ExitStatus::Violation
        } else if !s.errors.is_empty() {
            ExitStatus::Numerical
        } else {
            ExitStatus::Consistent
        };
        Ok((s, status))
    }

    fn dump(&self, dir: &Path, o: &InstanceOutcome) -> Result<PathBuf, CliError> {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.into(), source })?;
        let path = dir.join(format!("{}-{}-{}.json", self.theorem.as_str(), self.seed, o.instance.index));
        let doc = ForensicDump {
            theorem: self.theorem.as_str().into(),
            campaign_seed: self.seed,
            index: o.instance.index,
            instance_seed: o.instance.seed,
            kind: o.instance.kind.as_str().into(),
            config: self.cfg.into(),
            a: MatrixFile::from_matrix(&o.instance.a),
            b: MatrixFile::from_matrix(&o.instance.b),
            report: (&o.report).into(),
        };
        let text = serde_json::to_string_pretty(&doc).expect("dumps always serialize");
        fs::write(&path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
        Ok(path)
    }
}
