//! Term-by-term comparison of the order-8 expansions with the checked-in
//! transcription of the printed operators.

use std::fs;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::json::from_json;
use crate::algebra::{heisenberg, Mode, OperatorPolynomial};
use crate::error::FormatError;

/// χ-order of the printed expansions.
pub const FIXTURE_ORDER: u32 = 8;

const CHECKSUM_FILE: &str = "SHA256SUMS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermMismatch {
    pub chi_order: u32,
    pub term: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixReport {
    pub mode: Mode,
    pub fixture: String,
    pub order: u32,
    pub terms_checked: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<TermMismatch>,
}

fn io_err(path: &Path, source: std::io::Error) -> FormatError {
    FormatError::Io { path: path.display().to_string(), source }
}

fn fixture_name(mode: Mode) -> &'static str {
    match mode {
        Mode::A | Mode::B => "appendix_a_mode_a.json",
        Mode::C => "appendix_a_mode_c.json",
    }
}

/// Read `name` from `dir`, rejecting it unless its SHA-256 matches the
/// entry in `SHA256SUMS` (standard `sha256sum` format).
pub fn read_checked(dir: &Path, name: &str) -> Result<String, FormatError> {
    let sums_path = dir.join(CHECKSUM_FILE);
    let sums = fs::read_to_string(&sums_path).map_err(|e| io_err(&sums_path, e))?;
    let expected = sums
        .lines()
        .filter_map(|l| l.split_once(char::is_whitespace))
        .find(|(_, f)| f.trim_start().trim_start_matches('*') == name)
        .map(|(h, _)| h.to_ascii_lowercase())
        .unwrap_or_default();
    let path = dir.join(name);
    let bytes = fs::read(&path).map_err(|e| io_err(&path, e))?;
    let found = format!("{:x}", Sha256::digest(&bytes));
    if found != expected {
        return Err(FormatError::Checksum { file: name.to_string(), expected, found });
    }
    String::from_utf8(bytes).map_err(|e| io_err(&path, std::io::Error::new(std::io::ErrorKind::InvalidData, e)))
}

fn first_difference(expected: &OperatorPolynomial, found: &OperatorPolynomial) -> Option<TermMismatch> {
    let mut keys: Vec<_> = expected.iter().map(|(k, _)| *k).chain(found.iter().map(|(k, _)| *k)).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().find_map(|k| {
        let e = expected.coefficient(k.order, &k.monomial).cloned().unwrap_or_default();
        let f = found.coefficient(k.order, &k.monomial).cloned().unwrap_or_default();
        (e != f).then(|| TermMismatch { chi_order: k.order, term: k.monomial.to_string(), expected: e.to_string(), found: f.to_string() })
    })
}

/// Compare the order-8 expansion of `mode` with the fixture in `dir`. The
/// idler is checked against the signal fixture with `a` and `b` exchanged.
pub fn verify_appendix_a(mode: Mode, dir: &Path) -> Result<AppendixReport, FormatError> {
    let name = fixture_name(mode);
    let mut printed = from_json(&read_checked(dir, name)?)?;
    if mode == Mode::B {
        printed = printed.swap_ab();
    }
    let derived = heisenberg(mode, FIXTURE_ORDER).expect("order-8 expansion is far below the term cap");
    let first_mismatch = first_difference(&printed, &derived);
    Ok(AppendixReport {
        mode,
        fixture: name.to_string(),
        order: FIXTURE_ORDER,
        terms_checked: printed.len().max(derived.len()),
        passed: first_mismatch.is_none(),
        first_mismatch,
    })
}
