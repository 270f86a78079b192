//! Content-addressed store of KL tables and cell partitions.
//!
//! One JSON file per `(matrix, weights)`, named by the SHA-256 of a canonical
//! key that includes [`FORMAT_VERSION`]. Bump the version whenever the
//! computation or the layout changes; old entries are then never looked up.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::Context;
use klcells::{CellPartition, CellSet, CoxeterSystem, KLData, KLTable, WeightFunction};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "KLCELLS_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    matrix: Vec<Vec<u32>>,
    weights: Vec<i32>,
    kl: KLData,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    two_sided: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Disabled,
    Hit,
    Stored,
    /// The entry was unreadable or inconsistent and has been replaced.
    Repaired,
    /// `--verify-cache`: stored bytes equal a fresh computation.
    Verified,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Disabled => "disabled",
            Status::Hit => "hit",
            Status::Stored => "stored",
            Status::Repaired => "repaired",
            Status::Verified => "verified",
        })
    }
}

/// A cached entry whose bytes differ from recomputation.
#[derive(Debug)]
pub struct CacheMismatch(pub PathBuf);

impl std::fmt::Display for CacheMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cache entry {} differs from recomputation", self.0.display())
    }
}

impl std::error::Error for CacheMismatch {}

pub struct Cache {
    dir: Option<PathBuf>,
}

pub fn default_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(d));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("klcells"))
}

fn blocks(p: &CellPartition) -> Vec<Vec<u32>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|w| w.index() as u32).collect())
        .collect()
}

fn key(system: &CoxeterSystem, weights: &WeightFunction) -> String {
    let mut h = Sha256::new();
    h.update(format!("klcells-kl v{FORMAT_VERSION}\n"));
    for row in system.matrix().rows() {
        h.update(format!("{row:?}\n"));
    }
    h.update(format!("{:?}\n", weights.as_slice()));
    format!("{:x}", h.finalize())
}

fn encode(table: &KLTable, cells: &CellSet) -> anyhow::Result<Vec<u8>> {
    let entry = Entry {
        version: FORMAT_VERSION,
        matrix: table.system().matrix().rows().to_vec(),
        weights: table.weights().as_slice().to_vec(),
        kl: table.data().clone(),
        left: blocks(&cells.left),
        right: blocks(&cells.right),
        two_sided: blocks(&cells.two_sided),
    };
    Ok(serde_json::to_vec(&entry)?)
}

/// Rebuilds the table from stored bytes, insisting that the stored cells
/// agree with the ones the table induces.
fn decode(bytes: &[u8], system: &Arc<CoxeterSystem>, weights: &WeightFunction) -> anyhow::Result<(KLTable, CellSet)> {
    let entry: Entry = serde_json::from_slice(bytes)?;
    anyhow::ensure!(entry.version == FORMAT_VERSION, "version {}", entry.version);
    anyhow::ensure!(
        entry.matrix == system.matrix().rows() && entry.weights == weights.as_slice(),
        "entry is for another group"
    );
    let table = KLTable::from_data(system.clone(), weights.clone(), entry.kl)?;
    let cells = CellSet::compute(&table);
    anyhow::ensure!(
        blocks(&cells.left) == entry.left
            && blocks(&cells.right) == entry.right
            && blocks(&cells.two_sided) == entry.two_sided,
        "stored cells disagree with stored polynomials"
    );
    Ok((table, cells))
}

fn compute(system: &Arc<CoxeterSystem>, weights: &WeightFunction) -> anyhow::Result<(KLTable, CellSet)> {
    let table = KLTable::build(system.clone(), weights.clone())?;
    let cells = CellSet::compute(&table);
    Ok((table, cells))
}

fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    let dir = path.parent().expect("cache paths have a parent");
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)?;
    Ok(())
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    pub fn path_for(&self, system: &CoxeterSystem, weights: &WeightFunction) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        Some(dir.join(format!("{}.json", key(system, weights))))
    }

    /// KL table and cells for `(system, weights)`, from disk when possible.
    ///
    /// With `verify`, a present entry is recomputed and must match byte for
    /// byte; otherwise [`CacheMismatch`] is returned.
    pub fn load_or_compute(
        &self,
        system: &Arc<CoxeterSystem>,
        weights: &WeightFunction,
        verify: bool,
    ) -> anyhow::Result<(KLTable, CellSet, Status)> {
        let Some(path) = self.path_for(system, weights) else {
            let (t, c) = compute(system, weights)?;
            return Ok((t, c, Status::Disabled));
        };
        let stored = match std::fs::read(&path) {
            Ok(bytes) => Some(bytes),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
        };
        let Some(stored) = stored else {
            let (t, c) = compute(system, weights)?;
            write_atomic(&path, &encode(&t, &c)?)?;
            return Ok((t, c, Status::Stored));
        };
        if verify {
            let (t, c) = compute(system, weights)?;
            if encode(&t, &c)? != stored {
                return Err(CacheMismatch(path).into());
            }
            return Ok((t, c, Status::Verified));
        }
        match decode(&stored, system, weights) {
            Ok((t, c)) => Ok((t, c, Status::Hit)),
            Err(e) => {
                eprintln!("warning: ignoring cache entry {}: {e:#}", path.display());
                let (t, c) = compute(system, weights)?;
                write_atomic(&path, &encode(&t, &c)?)?;
                Ok((t, c, Status::Repaired))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> (Arc<CoxeterSystem>, WeightFunction) {
        let sys = Arc::new(CoxeterSystem::from_type("B2".parse().unwrap()).unwrap());
        let w = WeightFunction::new(sys.matrix(), vec![2, 1]).unwrap();
        (sys, w)
    }

    #[test]
    fn round_trip_reproduces_table() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let (sys, w) = b2();
        let (t1, c1, s1) = cache.load_or_compute(&sys, &w, false).unwrap();
        let (t2, c2, s2) = cache.load_or_compute(&sys, &w, false).unwrap();
        assert_eq!((s1, s2), (Status::Stored, Status::Hit));
        assert_eq!(t1.data(), t2.data());
        assert_eq!(c1.left, c2.left);
        assert_eq!(c1.two_sided, c2.two_sided);
        let (_, _, s3) = cache.load_or_compute(&sys, &w, true).unwrap();
        assert_eq!(s3, Status::Verified);
    }

    #[test]
    fn keys_separate_weights() {
        let (sys, w) = b2();
        let w2 = WeightFunction::new(sys.matrix(), vec![1, 2]).unwrap();
        assert_ne!(key(&sys, &w), key(&sys, &w2));
    }

    #[test]
    fn tampered_entry_is_caught() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let (sys, w) = b2();
        cache.load_or_compute(&sys, &w, false).unwrap();
        let path = cache.path_for(&sys, &w).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        // p_{1,1} = 1 becomes 2
        let tampered = text.replacen("[[0,1]]", "[[0,2]]", 1);
        assert_ne!(text, tampered);
        std::fs::write(&path, &tampered).unwrap();
        let err = cache.load_or_compute(&sys, &w, true).unwrap_err();
        assert!(err.downcast_ref::<CacheMismatch>().is_some());
        std::fs::write(&path, &text[..text.len() / 2]).unwrap();
        let (_, _, status) = cache.load_or_compute(&sys, &w, false).unwrap();
        assert_eq!(status, Status::Repaired);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
    }
}
