//! Input arguments are file paths; when no such file exists the argument
//! (minus a `.json` suffix and any directory) is looked up in the corpus.

use std::path::Path;
use std::sync::Arc;

use dsgeom::corpus::{self, CorpusItem, NonfullnessParams};
use dsgeom::graded::{G0Module, GradedMap, GradedModule};
use dsgeom::io::{self, AlgebraDoc};
use dsgeom::rigid::RigidComplex;
use dsgeom::superalg::SuperAlgebra;

use crate::CliError;

fn file_text(arg: &str) -> Result<Option<String>, CliError> {
    let path = Path::new(arg);
    if !path.is_file() {
        return Ok(None);
    }
    std::fs::read_to_string(path).map(Some).map_err(|e| CliError::Malformed(format!("cannot read {arg}: {e}")))
}

fn corpus_name(arg: &str) -> &str {
    let base = Path::new(arg).file_name().and_then(|s| s.to_str()).unwrap_or(arg);
    base.strip_suffix(".json").unwrap_or(base)
}

fn missing(arg: &str, err: dsgeom::Error) -> CliError {
    CliError::Malformed(format!("{arg}: no such file, and {err}"))
}

pub(crate) fn algebra_doc(arg: &str) -> Result<AlgebraDoc, CliError> {
    match file_text(arg)? {
        Some(text) => serde_json::from_str(&text).map_err(|e| CliError::Malformed(format!("{arg}: {e}"))),
        None => {
            let name = corpus_name(arg);
            corpus::algebra(name).map_err(|e| missing(arg, e))?;
            Ok(AlgebraDoc::Name(name.to_string()))
        }
    }
}

pub(crate) fn algebra(arg: &str) -> Result<Arc<SuperAlgebra>, CliError> {
    Ok(algebra_doc(arg)?.resolve()?)
}

pub(crate) fn module(arg: &str) -> Result<GradedModule, CliError> {
    match file_text(arg)? {
        Some(text) => Ok(io::parse_module(&text)?),
        None => corpus::module(corpus_name(arg)).map_err(|e| missing(arg, e)),
    }
}

pub(crate) fn map(arg: &str) -> Result<GradedMap, CliError> {
    match file_text(arg)? {
        Some(text) => Ok(io::parse_map(&text)?),
        None => corpus::map(corpus_name(arg)).map_err(|e| missing(arg, e)),
    }
}

pub(crate) fn q(arg: &str) -> Result<G0Module, CliError> {
    match file_text(arg)? {
        Some(text) => Ok(io::parse_q(&text)?),
        None => corpus::q(corpus_name(arg)).map_err(|e| missing(arg, e)),
    }
}

pub(crate) fn complex(arg: &str) -> Result<RigidComplex, CliError> {
    match file_text(arg)? {
        Some(text) => Ok(io::parse_complex(&text)?),
        None => Err(CliError::Malformed(format!("{arg}: no such file"))),
    }
}

pub(crate) fn nonfullness_params(arg: &str) -> Result<NonfullnessParams, CliError> {
    let entry = corpus::entry(corpus_name(arg)).map_err(|e| missing(arg, e))?;
    match &entry.item {
        CorpusItem::Nonfullness(p) => Ok(p.clone()),
        _ => Err(CliError::Malformed(format!("{arg} is not a parameter set"))),
    }
}
