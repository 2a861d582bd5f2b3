use std::fmt;
use std::io::Read;

use orbeuler::Rational;
use serde::de::DeserializeOwned;

use crate::DocArgs;

/// Anything that makes the input unusable; always exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<orbeuler::Error> for InputError {
    fn from(e: orbeuler::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type CliResult<T> = Result<T, InputError>;

/// The raw document text, if one was supplied.
pub fn read_doc(args: &DocArgs) -> CliResult<Option<String>> {
    if let Some(doc) = &args.doc {
        return Ok(Some(doc.clone()));
    }
    let Some(path) = &args.input else { return Ok(None) };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| InputError(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?
    };
    Ok(Some(text))
}

pub fn require_doc(args: &DocArgs, what: &str) -> CliResult<String> {
    read_doc(args)?.ok_or_else(|| InputError(format!("{what}: supply --input PATH or --doc JSON")))
}

pub fn parse_json<T: DeserializeOwned>(what: &str, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| InputError(format!("{what}: {e}")))
}

pub fn parse_rational(field: &str, s: &str) -> CliResult<Rational> {
    s.trim().parse().map_err(|e: orbeuler::Error| InputError(format!("{field}: {e}")))
}

/// `"r:t"` pairs of a `t_r` vector.
pub fn parse_counts(items: &[String]) -> CliResult<Vec<(u64, u64)>> {
    items
        .iter()
        .map(|item| {
            let (r, t) = item.split_once(':').ok_or_else(|| InputError(format!("t: expected r:t_r, got {item:?}")))?;
            let r = r.trim().parse().map_err(|_| InputError(format!("t: bad multiplicity {r:?} in {item:?}")))?;
            let t = t.trim().parse().map_err(|_| InputError(format!("t: bad count {t:?} in {item:?}")))?;
            Ok((r, t))
        })
        .collect()
}
