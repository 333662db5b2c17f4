//! Flag value syntaxes: comma-separated keys, colon-separated fields,
//! semicolon-separated entries.

use std::io::Read;

use multitree::{Error, Result};

fn number(s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("{s:?} is not a non-negative integer")))
}

/// `1,2,3`
pub fn list(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(number).collect()
}

pub fn list_u64(s: &str) -> Result<Vec<u64>> {
    Ok(list(s)?.into_iter().map(u64::from).collect())
}

/// `a,b:k;c,d:k` → `([a, b], k)`, …; every key must have `arity` parts.
pub fn keyed(s: &str, arity: usize) -> Result<Vec<(Vec<u32>, u32)>> {
    entries(s)
        .map(|e| {
            let (key, k) = e
                .rsplit_once(':')
                .ok_or_else(|| Error::Invalid(format!("entry {e:?} needs the form key:count")))?;
            let key = list(key)?;
            if key.len() != arity {
                return Err(Error::Invalid(format!("key {key:?} should have {arity} parts")));
            }
            Ok((key, number(k)?))
        })
        .collect()
}

/// `(key, c, k)`: a type (and parent type), a child-type vector and a multiplicity.
pub type ClassEntry = (Vec<u32>, Vec<u32>, u32);

/// `t:c1,…,cd:k` or, with a parent type, `t,u:c1,…,cd:k`.
pub fn classes(s: &str, key_arity: usize) -> Result<Vec<ClassEntry>> {
    entries(s)
        .map(|e| {
            let fields: Vec<&str> = e.split(':').collect();
            let [key, c, k] = fields[..] else {
                return Err(Error::Invalid(format!("entry {e:?} needs three ':'-separated fields")));
            };
            let key = list(key)?;
            if key.len() != key_arity {
                return Err(Error::Invalid(format!("key {key:?} should have {key_arity} parts")));
            }
            Ok((key, list(c)?, number(k)?))
        })
        .collect()
}

/// `1,2;2,1`
pub fn pairs(s: &str) -> Result<Vec<(u32, u32)>> {
    entries(s)
        .map(|e| match list(e)?[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Error::Invalid(format!("{e:?} is not a pair"))),
        })
        .collect()
}

fn entries(s: &str) -> impl Iterator<Item = &str> {
    s.split(';').map(str::trim).filter(|e| !e.is_empty())
}

/// A JSON argument: literal text, `@path`, or `-` for standard input.
pub fn json_text(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Invalid(format!("reading stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("reading {path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn json<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T> {
    serde_json::from_str(&json_text(arg)?).map_err(|e| Error::Invalid(format!("malformed JSON: {e}")))
}
