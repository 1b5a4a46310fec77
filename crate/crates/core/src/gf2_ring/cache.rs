//! On-disk cache of reduced Gröbner bases.
//!
//! One file per `(k, n)`: a header line `# k=<k> n=<n> order=wdegrevlex`
//! followed by one basis element per line in the polynomial text grammar.
//! Entries are re-certified on load and silently recomputed when they fail.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::{reduce_by_duality, Gf2Polynomial, GrassmannRing, GroebnerLimits, MONOMIAL_ORDER_TAG};
use crate::error::Result;

pub fn cache_file_name(k: usize, n: usize) -> String {
    format!("groebner-k{k}-n{n}-{MONOMIAL_ORDER_TAG}.txt")
}

fn header(k: usize, n: usize) -> String {
    format!("# k={k} n={n} order={MONOMIAL_ORDER_TAG}")
}

fn cache_path(dir: &Path, k: usize, n: usize) -> PathBuf {
    dir.join(cache_file_name(k, n))
}

/// Writes the ring's basis atomically (temp file renamed into place).
pub fn store_basis(dir: &Path, ring: &GrassmannRing) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    writeln!(tmp, "{}", header(ring.k(), ring.n()))?;
    for g in ring.groebner_basis() {
        writeln!(tmp, "{g}")?;
    }
    tmp.flush()?;
    let path = cache_path(dir, ring.k(), ring.n());
    tmp.persist(&path).map_err(|e| e.error)?;
    Ok(path)
}

/// Reads a cached basis, returning `None` if the file is missing or does not
/// parse. The result is not yet certified.
pub fn load_cached_basis(dir: &Path, k: usize, n: usize) -> Option<Vec<Gf2Polynomial>> {
    let text = fs::read_to_string(cache_path(dir, k, n)).ok()?;
    let mut lines = text.lines();
    if lines.next()?.trim() != header(k, n) {
        return None;
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.parse().ok())
        .collect()
}

/// Builds the ring, reusing a cached basis when one is present and passes
/// certification. A freshly computed basis is written back; write failures
/// only cost the cache, never the result.
pub fn make_ring_cached(
    k: usize,
    n: usize,
    limits: GroebnerLimits,
    cache_dir: Option<&Path>,
) -> Result<GrassmannRing> {
    let (k, n) = reduce_by_duality(k, n)?;
    let Some(dir) = cache_dir else {
        return GrassmannRing::new(k, n, limits);
    };
    if let Some(candidate) = load_cached_basis(dir, k, n) {
        if let Ok(ring) = GrassmannRing::from_certified_basis(k, n, candidate) {
            return Ok(ring);
        }
    }
    let ring = GrassmannRing::new(k, n, limits)?;
    let _ = store_basis(dir, &ring);
    Ok(ring)
}
