//! Parsers for command-line arguments: gradings, ideals, points, files.

use std::path::Path;
use std::sync::Arc;

use arcclass::algebra::{parse_expression, MultiGrading, Ring, TermOrder};
use arcclass::groebner::Ideal;
use arcclass::jets::jet_grading;

use crate::CliError;

/// `var:deg;var:deg` with comma-separated degree vectors, in the order given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingSpec {
    pub names: Vec<String>,
    pub degrees: Vec<Vec<i64>>,
}

impl GradingSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, deg) = item
                .split_once(':')
                .ok_or_else(|| CliError::Input(format!("grading entry `{item}` is not `var:degree`")))?;
            let deg = parse_ints(deg)?;
            names.push(name.trim().to_string());
            degrees.push(deg);
        }
        let rank = degrees.first().map_or(0, Vec::len);
        if rank == 0 {
            return Err(CliError::Input("empty grading".into()));
        }
        if degrees.iter().any(|d| d.len() != rank) {
            return Err(CliError::Input("degree vectors have different lengths".into()));
        }
        Ok(GradingSpec { names, degrees })
    }

    pub fn rank(&self) -> usize {
        self.degrees[0].len()
    }

    /// Degrees for every variable of `ring`, taken from its base symbol.
    pub fn grading_for(&self, ring: &Ring) -> Result<MultiGrading, CliError> {
        let mut base = Vec::new();
        for name in ring.base_names() {
            let k = self
                .names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| CliError::Input(format!("no degree given for `{name}`")))?;
            base.push(self.degrees[k].clone());
        }
        Ok(jet_grading(ring, &base)?)
    }
}

pub fn parse_ints(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("`{}` is not an integer", s.trim())))
        })
        .collect()
}

pub fn parse_naturals(text: &str) -> Result<Vec<usize>, CliError> {
    parse_ints(text)?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| CliError::Input(format!("{x} is negative"))))
        .collect()
}

/// Polynomials separated by commas.
pub fn split_polynomials(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Base symbols in order: explicit names first, then those met in the
/// polynomials. Also returns the highest jet order used.
fn symbols(names: &[String], polys: &[&str]) -> Result<(Vec<String>, usize), CliError> {
    let mut out: Vec<String> = names.to_vec();
    let mut top = 0;
    for p in polys {
        for (name, jet) in parse_expression(p)?.variables() {
            top = top.max(jet);
            if !out.contains(&name) {
                out.push(name);
            }
        }
    }
    Ok((out, top))
}

/// The ring for `polys`: plain when no jet coordinates occur, otherwise
/// the jet ring of the highest order met.
pub fn ring_for(names: &[String], polys: &[&str]) -> Result<Arc<Ring>, CliError> {
    let (base, top) = symbols(names, polys)?;
    if base.is_empty() {
        return Err(CliError::Input("no variables".into()));
    }
    Ok(if top == 0 {
        Ring::with_names(&base)?
    } else {
        Ring::jets(&base, top, TermOrder::GrevLex)?
    })
}

pub fn ideal_in(ring: &Arc<Ring>, polys: &[&str]) -> Result<Ideal, CliError> {
    Ok(Ideal::parse(ring, polys)?)
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })
}
