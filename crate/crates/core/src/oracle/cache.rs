//! On-disk cache of enumeration results.
//!
//! ```text
//! planar-maps-cache v1
//! n 2
//! count 9
//! 1 0 3 2
//! ...
//! ```
//!
//! One line per map lists `sigma`; `alpha` is always `h -> h ^ 1` and the
//! root is half-edge 0. Loading re-validates every map, so a damaged file is
//! reported rather than trusted.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use super::enumerate::{enumerate_maps_with_limit, EnumerationResult};
use crate::map::CombinatorialMap;
use crate::Result;

pub const HEADER: &str = "planar-maps-cache v1";

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("planar-maps-n{n}.txt"))
}

pub fn write_cache(dir: &Path, result: &EnumerationResult) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut out = format!("{HEADER}\nn {}\ncount {}\n", result.n, result.count());
    for m in &result.maps {
        let line: Vec<String> = m.sigma().iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    fs::write(cache_path(dir, result.n), out)
}

fn invalid(msg: String) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg)
}

/// Reads a cache file; `Ok(None)` if it does not exist.
pub fn read_cache(dir: &Path, n: usize) -> io::Result<Option<EnumerationResult>> {
    let path = cache_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err(invalid(format!("{}: unknown cache header", path.display())));
    }
    let field = |line: Option<&str>, key: &str| -> io::Result<usize> {
        line.and_then(|l| l.strip_prefix(key))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| invalid(format!("{}: missing `{key}`", path.display())))
    };
    if field(lines.next(), "n ")? != n {
        return Err(invalid(format!("{}: wrong edge count", path.display())));
    }
    let count = field(lines.next(), "count ")?;
    let mut maps = Vec::with_capacity(count);
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let sigma: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| invalid(format!("{}: bad entry `{t}`", path.display()))))
            .collect::<io::Result<_>>()?;
        let map = if sigma.is_empty() {
            CombinatorialMap::empty()
        } else {
            let alpha = (0..sigma.len()).map(|h| h ^ 1).collect();
            CombinatorialMap::new(alpha, sigma, 0).map_err(|e| invalid(format!("{}: {e}", path.display())))?
        };
        maps.push(map);
    }
    if n == 0 && maps.is_empty() && count == 1 {
        maps.push(CombinatorialMap::empty());
    }
    if maps.len() != count {
        return Err(invalid(format!("{}: {} maps listed, header says {count}", path.display(), maps.len())));
    }
    if maps.iter().any(|m| m.edge_count() != n) {
        return Err(invalid(format!("{}: map of the wrong size", path.display())));
    }
    Ok(Some(EnumerationResult::from_maps(n, maps)))
}

/// Enumeration for `n`, read from `dir` when cached and written there otherwise.
pub fn enumerate_cached(dir: Option<&Path>, n: usize, limit: usize) -> Result<EnumerationResult, CacheError> {
    if let Some(dir) = dir {
        if let Some(r) = read_cache(dir, n)? {
            return Ok(r);
        }
    }
    let r = enumerate_maps_with_limit(n, limit)?;
    if let Some(dir) = dir {
        write_cache(dir, &r)?;
    }
    Ok(r)
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Enumeration(#[from] crate::Error),
}
