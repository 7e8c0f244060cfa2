//! Command implementations. Each returns the report and the exit status.

use std::path::{Path, PathBuf};

use expcommute_core::expm::{expm_cross_checked, TAYLOR_BUDGET};
use expcommute_core::spectrum::eigenvalues;
use expcommute_core::wermuth::campaign::verify;
use expcommute_core::wermuth::{counterexample_pair, t_witness_scan};
use expcommute_core::{commutator, expm, ComplexMatrix, TheoremId, TheoremReport, ToleranceConfig, Verdict, TWO_PI_I};

use crate::error::{CliError, ExitStatus};
use crate::fuzz::Campaign;
use crate::matrix_file::MatrixFile;
use crate::report::{CounterexampleDoc, EigDoc, ExpmDoc, ReportBody, ReportDocument, ScanDoc};

pub type Outcome = Result<(ReportDocument, ExitStatus), CliError>;

fn load_pair(a: &Path, b: &Path) -> Result<(ComplexMatrix, ComplexMatrix), CliError> {
    let ma = MatrixFile::load(a)?;
    let mb = MatrixFile::load(b)?;
    if ma.n() != mb.n() {
        return Err(CliError::Usage(format!(
            "dimension mismatch: {} is {}x{}, {} is {}x{}",
            a.display(),
            ma.n(),
            ma.n(),
            b.display(),
            mb.n(),
            mb.n()
        )));
    }
    Ok((ma, mb))
}

/// Exit status of a theorem report.
pub fn verdict_status(r: &TheoremReport) -> ExitStatus {
    if r.is_failure() {
        return ExitStatus::Violation;
    }
    match r.verdict {
        Verdict::Consistent => ExitStatus::Consistent,
        Verdict::HypothesisViolated => ExitStatus::HypothesisViolated,
        Verdict::Violation => ExitStatus::Violation,
    }
}

pub fn eig(file: &Path, cfg: &ToleranceConfig, seed: Option<u64>) -> Outcome {
    cfg.validate()?;
    let a = MatrixFile::load(file)?;
    let s = eigenvalues(&a, cfg)?;
    let report = s.congruence_report(TWO_PI_I, cfg)?;
    let doc = EigDoc::new(a.n(), &s, s.diameter()?, s.scaling_threshold(TWO_PI_I)?, &report);
    Ok((ReportDocument::new("eig", cfg, seed, ReportBody::Eig(doc)), ExitStatus::Consistent))
}

pub fn verify_files(theorem: TheoremId, a: &Path, b: &Path, cfg: &ToleranceConfig, seed: Option<u64>) -> Outcome {
    cfg.validate()?;
    let (ma, mb) = load_pair(a, b)?;
    let r = verify(theorem, &ma, &mb, cfg)?;
    let status = verdict_status(&r);
    let command = format!("verify {}", theorem.as_str());
    Ok((ReportDocument::new(&command, cfg, seed, ReportBody::Theorem((&r).into())), status))
}

/// Builds the rotation-by-π counterexample pair, optionally writing both
/// matrices as `A.json` and `B.json` under `out_dir`.
pub fn counterexample(a: f64, out_dir: Option<&Path>, cfg: &ToleranceConfig, seed: Option<u64>) -> Outcome {
    cfg.validate()?;
    if !a.is_finite() {
        return Err(CliError::Usage(format!("--a must be finite, got {a}")));
    }
    let (ma, mb) = counterexample_pair(a)?;
    let r = verify(TheoremId::Main, &ma, &mb, cfg)?;
    let (fa, fb) = (MatrixFile::from_matrix(&ma), MatrixFile::from_matrix(&mb));
    let mut files = Vec::new();
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.into(), source })?;
        for (name, f) in [("A.json", &fa), ("B.json", &fb)] {
            let path: PathBuf = dir.join(name);
            f.save(&path)?;
            files.push(path.display().to_string());
        }
    }
    let doc = CounterexampleDoc {
        a: a.into(),
        commutator: MatrixFile::from_matrix(&commutator(&ma, &mb)?),
        exp_a: MatrixFile::from_matrix(&expm(&ma)?.value),
        matrix_a: fa,
        matrix_b: fb,
        files,
        report: (&r).into(),
    };
    let status = if r.is_failure() { ExitStatus::Violation } else { ExitStatus::Consistent };
    Ok((ReportDocument::new("counterexample", cfg, seed, ReportBody::Counterexample(doc)), status))
}

pub fn exponential(file: &Path, cross_check: bool, cfg: &ToleranceConfig, seed: Option<u64>) -> Outcome {
    cfg.validate()?;
    let a = MatrixFile::load(file)?;
    let r = if cross_check { expm_cross_checked(&a, TAYLOR_BUDGET)? } else { expm(&a)? };
    let doc = ExpmDoc {
        n: a.n(),
        value: MatrixFile::from_matrix(&r.value),
        scaling_squarings: r.scaling_squarings,
        oracle_gap: r.oracle_gap.map(Into::into),
    };
    Ok((ReportDocument::new("expm", cfg, seed, ReportBody::Expm(doc)), ExitStatus::Consistent))
}

pub fn scan(a: &Path, b: &Path, samples: usize, cfg: &ToleranceConfig, seed: Option<u64>) -> Outcome {
    cfg.validate()?;
    let (ma, mb) = load_pair(a, b)?;
    let s = t_witness_scan(&ma, &mb, samples, cfg)?;
    Ok((ReportDocument::new("scan", cfg, seed, ReportBody::Scan(ScanDoc::from(&s))), ExitStatus::Consistent))
}

pub fn fuzz(campaign: &Campaign<'_>) -> Outcome {
    let (summary, status) = campaign.run()?;
    let doc = ReportDocument::new("fuzz", campaign.cfg, Some(campaign.seed), ReportBody::Fuzz(summary));
    Ok((doc, status))
}
