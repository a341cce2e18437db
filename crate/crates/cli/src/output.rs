use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Relative `--out` paths are resolved against this directory when set.
pub const OUT_DIR_ENV: &str = "PRIMCIRC_OUT_DIR";

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or values outside the supported range (exit 2).
    Invalid(String),
    /// Could not write output (exit 3).
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<primcirc::Error> for CliError {
    fn from(e: primcirc::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Whether the computed results agreed with theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Consistent,
    Deviation,
}

impl Outcome {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Consistent
        } else {
            Outcome::Deviation
        }
    }

    pub fn exit_code(self) -> ExitCode {
        match self {
            Outcome::Consistent => ExitCode::SUCCESS,
            Outcome::Deviation => ExitCode::from(1),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Invalid(_) => ExitCode::from(2),
            CliError::Io(_) => ExitCode::from(3),
        }
    }
}

pub fn resolve_out(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Writes `doc` to `out` if given, otherwise to stdout.
pub fn emit(doc: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let path = resolve_out(path);
            fs::write(&path, doc).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(doc.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

pub fn json_doc<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
