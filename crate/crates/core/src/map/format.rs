//! Plain-text map files.
//!
//! ```text
//! # quadrilateral with a diagonal
//! E 5
//! alpha 1 0 3 2 5 4 7 6 9 8
//! sigma 8 2 1 4 9 6 5 0 7 3
//! root 0
//! ```
//!
//! Tokens are separated by arbitrary whitespace, and `#` starts a comment
//! running to the end of the line. Each key (`E`, `alpha`, `sigma`, `root`)
//! appears exactly once and is followed by its integers: one for `E` and
//! `root`, `2E` for `alpha` and `sigma`. A file with `E 0` describes the empty
//! map and needs no other fields.

use std::fmt::Write as _;

use super::{CombinatorialMap, MapError};

fn err(msg: impl Into<String>) -> MapError {
    MapError::Parse(msg.into())
}

/// Parses and validates a map file.
pub fn parse_map(text: &str) -> Result<CombinatorialMap, MapError> {
    let tokens: Vec<&str> =
        text.lines().map(|line| line.split('#').next().unwrap_or("")).flat_map(str::split_whitespace).collect();

    let mut edges: Option<usize> = None;
    let mut alpha: Option<Vec<usize>> = None;
    let mut sigma: Option<Vec<usize>> = None;
    let mut root: Option<usize> = None;

    let mut i = 0;
    while i < tokens.len() {
        let key = tokens[i];
        i += 1;
        let mut numbers = Vec::new();
        while i < tokens.len() && tokens[i].chars().all(|c| c.is_ascii_digit()) {
            let n = tokens[i].parse::<usize>().map_err(|e| err(format!("{}: {e}", tokens[i])))?;
            numbers.push(n);
            i += 1;
        }
        let single = |numbers: &[usize]| match numbers {
            [n] => Ok(*n),
            _ => Err(err(format!("`{key}` takes one integer, found {}", numbers.len()))),
        };
        let slot_taken = || err(format!("`{key}` given twice"));
        match key {
            "E" => {
                if edges.replace(single(&numbers)?).is_some() {
                    return Err(slot_taken());
                }
            }
            "root" => {
                if root.replace(single(&numbers)?).is_some() {
                    return Err(slot_taken());
                }
            }
            "alpha" => {
                if alpha.replace(numbers).is_some() {
                    return Err(slot_taken());
                }
            }
            "sigma" => {
                if sigma.replace(numbers).is_some() {
                    return Err(slot_taken());
                }
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }

    let edges = edges.ok_or_else(|| err("missing `E`"))?;
    if edges == 0 {
        let clean = alpha.as_ref().is_none_or(Vec::is_empty)
            && sigma.as_ref().is_none_or(Vec::is_empty)
            && root.is_none_or(|r| r == 0);
        return if clean { Ok(CombinatorialMap::empty()) } else { Err(err("`E 0` with half-edge data")) };
    }
    let alpha = alpha.ok_or_else(|| err("missing `alpha`"))?;
    let sigma = sigma.ok_or_else(|| err("missing `sigma`"))?;
    let root = root.ok_or_else(|| err("missing `root`"))?;
    for (name, list) in [("alpha", &alpha), ("sigma", &sigma)] {
        if list.len() != 2 * edges {
            return Err(err(format!("`{name}` has {} entries, expected {}", list.len(), 2 * edges)));
        }
    }
    CombinatorialMap::new(alpha, sigma, root)
}

/// Writes a map in the format accepted by [`parse_map`].
pub fn write_map(m: &CombinatorialMap) -> String {
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "E {}", m.edge_count()).unwrap();
    if !m.is_empty() {
        writeln!(out, "alpha {}", join(m.alpha())).unwrap();
        writeln!(out, "sigma {}", join(m.sigma())).unwrap();
        writeln!(out, "root {}", m.root()).unwrap();
    }
    out
}
