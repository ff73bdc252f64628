//! On-disk cache of `Φ^k` structure coefficients.
//!
//! One entry per line: `domain<TAB>constants<TAB>i1,j1|i2,j2|...<TAB>coefficient<TAB>q`,
//! after a version header. A file with any other header is ignored.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Rational};
use crate::toric::LatticePair;

pub const HEADER: &str = "# symcap phi cache v1";
pub const ENV_VAR: &str = "SYMCAP_CACHE";

/// Memo key text for a multiset of pairs.
pub fn multiset_key(pairs: &[LatticePair]) -> String {
    let mut v = pairs.to_vec();
    v.sort();
    v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("|")
}

#[derive(Debug, Default)]
pub struct PhiCache {
    path: Option<PathBuf>,
    entries: BTreeMap<(String, String, String), (Rational, u32)>,
    dirty: bool,
}

impl PhiCache {
    /// An in-memory cache that is never written.
    pub fn memory() -> Self {
        Self::default()
    }

    /// Loads `path`, or starts empty if it is missing or has another format version.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = PhiCache { path: Some(path.clone()), ..Default::default() };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return Ok(cache);
        }
        for (n, line) in lines.enumerate() {
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 5 {
                return Err(Error::Cache(format!("{}:{}: malformed entry", path.display(), n + 2)));
            }
            let c = parse_rational(f[3])?;
            let q: u32 = f[4].parse().map_err(|_| Error::Cache(format!("bad target in line {}", n + 2)))?;
            cache.entries.insert((f[0].into(), f[1].into(), f[2].into()), (c, q));
        }
        Ok(cache)
    }

    /// Path from the environment variable, if set.
    pub fn env_path() -> Option<PathBuf> {
        std::env::var_os(ENV_VAR).map(PathBuf::from)
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, domain: &str, mode: &str, pairs: &[LatticePair]) -> Option<(Rational, u32)> {
        self.entries.get(&(domain.into(), mode.into(), multiset_key(pairs))).cloned()
    }

    pub fn insert(&mut self, domain: &str, mode: &str, pairs: &[LatticePair], value: (Rational, u32)) {
        self.insert_key(domain, mode, &multiset_key(pairs), value)
    }

    pub fn insert_key(&mut self, domain: &str, mode: &str, key: &str, value: (Rational, u32)) {
        let k = (domain.to_string(), mode.to_string(), key.to_string());
        if self.entries.get(&k) != Some(&value) {
            self.entries.insert(k, value);
            self.dirty = true;
        }
    }

    pub fn merge(&mut self, other: PhiCache) {
        for ((d, m, k), v) in other.entries {
            self.insert_key(&d, &m, &k, v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(String, String, String), &(Rational, u32))> {
        self.entries.iter()
    }

    /// Writes the file if anything changed.
    pub fn save(&mut self) -> Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        if !self.dirty {
            return Ok(());
        }
        let mut out = String::from(HEADER);
        out.push('\n');
        for ((d, m, k), (c, q)) in &self.entries {
            out.push_str(&format!("{d}\t{m}\t{k}\t{}\t{q}\n", format_rational(c)));
        }
        let tmp = path.with_extension("tmp");
        let err = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(err)?;
        }
        fs::write(&tmp, out).map_err(err)?;
        fs::rename(&tmp, path).map_err(err)?;
        self.dirty = false;
        Ok(())
    }

    /// Removes the file.
    pub fn clear(&mut self) -> Result<()> {
        self.entries.clear();
        self.dirty = false;
        if let Some(path) = &self.path {
            match fs::remove_file(path) {
                Ok(()) => {}
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
                Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn round_trip_and_version() {
        let dir = std::env::temp_dir().join(format!("symcap-cache-test-{}", std::process::id()));
        let path = dir.join("phi.tsv");
        let pairs = [LatticePair::new(1, 1), LatticePair::new(1, 1)];
        let mut c = PhiCache::open(&path).unwrap();
        assert!(c.is_empty());
        c.insert("ellipsoid:1,100", "geometric", &pairs, (int(10), 5));
        c.save().unwrap();
        let c2 = PhiCache::open(&path).unwrap();
        assert_eq!(c2.get("ellipsoid:1,100", "geometric", &pairs), Some((int(10), 5)));
        assert_eq!(c2.get("ellipsoid:1,100", "ones", &pairs), None);
        fs::write(&path, "# symcap phi cache v0\nx\n").unwrap();
        assert!(PhiCache::open(&path).unwrap().is_empty());
        let mut c3 = PhiCache::open(&path).unwrap();
        c3.clear().unwrap();
        assert!(!path.exists());
        let _ = fs::remove_dir_all(dir);
    }

    #[test]
    fn key_format() {
        let k = multiset_key(&[LatticePair::new(2, 0), LatticePair::new(1, 1)]);
        assert_eq!(k, "1,1|2,0");
    }
}
