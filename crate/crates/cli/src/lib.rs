//! File formats, report documents and command implementations behind the
//! `expcommute` binary.
//!
//! Every command returns a [`ReportDocument`] together with the exit code the
//! binary should terminate with; the binary itself only parses arguments and
//! prints.

pub mod commands;
pub mod error;
pub mod fuzz;
pub mod matrix_file;
pub mod number;
pub mod report;

pub use error::{CliError, ExitStatus};
pub use matrix_file::MatrixFile;
pub use number::{Cplx, Real};
pub use report::{ReportBody, ReportDocument};
