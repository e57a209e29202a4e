use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::Value;
use ybk::constructions::disjoint_union_solution;
use ybk::io::{SolutionDocument, ThetaDocument};
use ybk::kgraph::{constant_family, Letter, ThetaFamily};
use ybk::{builtin, Error, Result, Solution};

fn read_text(arg: &str) -> std::result::Result<String, String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        return Ok(s);
    }
    fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))
}

/// `name:N` names a builtin when no file of that name exists.
fn builtin_spec(arg: &str) -> Option<(&str, usize)> {
    if Path::new(arg).exists() {
        return None;
    }
    let (name, size) = arg.split_once(':')?;
    Some((name, size.parse().ok()?))
}

pub enum Input {
    Solution(Solution, Option<Value>),
    Theta(ThetaFamily, Option<Value>),
}

#[derive(Debug)]
pub enum LoadError {
    Io(String),
    Lib(Error),
}

impl From<Error> for LoadError {
    fn from(e: Error) -> Self {
        LoadError::Lib(e)
    }
}

pub fn load(arg: &str) -> std::result::Result<Input, LoadError> {
    if let Some((name, size)) = builtin_spec(arg) {
        return Ok(Input::Solution(builtin(name, size)?, None));
    }
    let text = match arg.strip_prefix("catalog:") {
        Some(name) => crate::catalog::get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?
            .to_string(),
        None => read_text(arg).map_err(LoadError::Io)?,
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| {
        LoadError::Lib(Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    })?;
    if value.get("maps").is_some() {
        let doc = ThetaDocument::parse(&text)?;
        Ok(Input::Theta(doc.to_family()?, doc.metadata))
    } else {
        let doc = SolutionDocument::parse(&text)?;
        Ok(Input::Solution(doc.to_solution()?, doc.metadata))
    }
}

/// A solution and its document metadata, taking the disjoint-union solution
/// of a theta document.
pub fn load_solution(arg: &str) -> std::result::Result<(Solution, Option<Value>), LoadError> {
    Ok(match load(arg)? {
        Input::Solution(r, meta) => (r, meta),
        Input::Theta(fam, meta) => (disjoint_union_solution(&fam), meta),
    })
}

/// A theta family, taking the constant `k`-colour family of a solution.
pub fn load_family(arg: &str, k: usize) -> std::result::Result<ThetaFamily, LoadError> {
    Ok(match load(arg)? {
        Input::Solution(r, _) => constant_family(&r, k)?,
        Input::Theta(fam, _) => fam,
    })
}

/// Parses `c:x c:x ...` (spaces or commas) into letters.
pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    text.split([' ', ','])
        .filter(|t| !t.is_empty())
        .map(|t| {
            let bad = || Error::InvalidLetter(format!("`{t}` is not of the form colour:index"));
            let (c, x) = t.split_once(':').ok_or_else(bad)?;
            Ok((c.parse().map_err(|_| bad())?, x.parse().map_err(|_| bad())?))
        })
        .collect()
}

pub fn format_word(letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "(empty)".into();
    }
    letters
        .iter()
        .map(|(c, x)| format!("{c}:{x}"))
        .collect::<Vec<_>>()
        .join(" ")
}
