//! Irreducible characters of `S_d`.
//!
//! Values are computed with the Murnaghan–Nakayama rule on beta-sets and
//! memoized per column. Full tables are kept in a process-wide memory cache
//! and, when a cache directory is configured, persisted as
//! `chartab-v1-d{d}.json`. A cached file is only trusted after it passes the
//! orthogonality check; otherwise it is recomputed and overwritten.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{check_degree, enumerate_partitions, Partition};
use crate::rational::{factorial, int, Rational};

/// Version tag stored in cache files; bump when the layout changes.
pub const CACHE_VERSION: u32 = 1;

/// Rim-hook removals of length `r` from `lambda`: `(remaining shape, sign)`.
fn remove_rim_hooks(lambda: &Partition, r: u32) -> Vec<(Partition, i64)> {
    let len = lambda.len() as u32;
    let beta: Vec<u32> = (0..len)
        .map(|i| lambda.part(i as usize) + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x + i as u32 + 1 - len)
            .collect();
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

struct MnMemo<'a> {
    cycles: &'a [u32],
    memo: HashMap<(Partition, usize), i64>,
}

impl MnMemo<'_> {
    fn chi(&mut self, lambda: &Partition, k: usize) -> i64 {
        if k == self.cycles.len() {
            return if lambda.is_empty() { 1 } else { 0 };
        }
        let key = (lambda.clone(), k);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = remove_rim_hooks(lambda, self.cycles[k])
            .into_iter()
            .map(|(mu, sign)| sign * self.chi(&mu, k + 1))
            .sum();
        self.memo.insert(key, v);
        v
    }
}

/// `χ_λ(Δ)`: the character of the irreducible representation `λ` at a single
/// permutation of cycle type `Δ`.
pub fn character(lambda: &Partition, delta: &Partition) -> Result<i64> {
    if lambda.weight() != delta.weight() {
        return Err(weight_mismatch(lambda, delta));
    }
    let mut memo = MnMemo {
        cycles: delta.parts(),
        memo: HashMap::new(),
    };
    Ok(memo.chi(lambda, 0))
}

pub(crate) fn weight_mismatch(a: &Partition, b: &Partition) -> Error {
    Error::WeightMismatch {
        left: a.clone(),
        left_weight: a.weight(),
        right: b.clone(),
        right_weight: b.weight(),
    }
}

/// Dimension of the irreducible representation `λ`, by the hook length
/// formula.
pub fn dim(lambda: &Partition) -> u64 {
    let hooks: num_bigint::BigInt = lambda
        .hook_lengths()
        .iter()
        .map(|&h| num_bigint::BigInt::from(h))
        .product();
    let v = factorial(lambda.weight()) / hooks;
    u64::try_from(v).expect("dimension fits in u64 for supported degrees")
}

/// Character table of `S_d` with rows `λ` and columns `Δ`, both in the
/// canonical reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    d: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    phis: Vec<Vec<Rational>>,
}

impl CharacterTable {
    /// Computes the table from scratch, one Murnaghan–Nakayama memo per
    /// column.
    pub fn compute(d: usize) -> Result<Self> {
        check_degree(d)?;
        let partitions = enumerate_partitions(d);
        let columns: Vec<Vec<i64>> = partitions
            .par_iter()
            .map(|delta| {
                let mut memo = MnMemo {
                    cycles: delta.parts(),
                    memo: HashMap::new(),
                };
                partitions.iter().map(|lam| memo.chi(lam, 0)).collect()
            })
            .collect();
        let n = partitions.len();
        let values = (0..n)
            .map(|i| (0..n).map(|j| columns[j][i]).collect())
            .collect();
        Ok(Self::from_values(d, partitions, values))
    }

    fn from_values(d: usize, partitions: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut table = CharacterTable {
            d,
            partitions,
            index,
            values,
            phis: Vec::new(),
        };
        table.phis = table.compute_phis();
        table
    }

    fn compute_phis(&self) -> Vec<Vec<Rational>> {
        let id = self.partitions.len().saturating_sub(1);
        (0..self.partitions.len())
            .map(|i| {
                let dim = self.values[i][id];
                self.partitions
                    .iter()
                    .enumerate()
                    .map(|(j, delta)| {
                        if dim == 0 {
                            // Only reachable for corrupted tables.
                            return Rational::zero();
                        }
                        Rational::new(
                            (delta.class_size() as i64 * self.values[i][j]).into(),
                            dim.into(),
                        )
                    })
                    .collect()
            })
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// Position of `p` in the canonical order.
    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::InvalidPartition(format!("{p} is not a partition of {}", self.d)))
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    /// `χ_λ(Δ)` by index.
    pub fn chi_at(&self, lam: usize, delta: usize) -> i64 {
        self.values[lam][delta]
    }

    pub fn chi(&self, lambda: &Partition, delta: &Partition) -> Result<i64> {
        self.check_weights(lambda, delta)?;
        Ok(self.values[self.index_of(lambda)?][self.index_of(delta)?])
    }

    /// `dim λ = χ_λ(1^d)` by index.
    pub fn dim_at(&self, lam: usize) -> i64 {
        self.values[lam][self.partitions.len() - 1]
    }

    pub fn dim(&self, lambda: &Partition) -> Result<i64> {
        Ok(self.dim_at(self.index_of(lambda)?))
    }

    /// `dim λ / d!` by index.
    pub fn dim_ratio_at(&self, lam: usize) -> Rational {
        Rational::new(self.dim_at(lam).into(), factorial(self.d))
    }

    /// Normalized character `φ_λ(Δ) = |C_Δ| χ_λ(Δ) / dim λ`, by index.
    pub fn phi_at(&self, lam: usize, delta: usize) -> &Rational {
        &self.phis[lam][delta]
    }

    pub fn phi(&self, lambda: &Partition, delta: &Partition) -> Result<Rational> {
        self.check_weights(lambda, delta)?;
        Ok(self.phis[self.index_of(lambda)?][self.index_of(delta)?].clone())
    }

    fn check_weights(&self, lambda: &Partition, delta: &Partition) -> Result<()> {
        if lambda.weight() != delta.weight() {
            return Err(weight_mismatch(lambda, delta));
        }
        if lambda.weight() != self.d {
            return Err(Error::InvalidPartition(format!(
                "{lambda} does not have weight {}",
                self.d
            )));
        }
        Ok(())
    }

    /// Copy of the table with one entry replaced. Intended for negative
    /// controls of the verification routines.
    pub fn with_entry(&self, lambda: &Partition, delta: &Partition, value: i64) -> Result<Self> {
        let (i, j) = (self.index_of(lambda)?, self.index_of(delta)?);
        let mut values = self.values.clone();
        values[i][j] = value;
        Ok(Self::from_values(self.d, self.partitions.clone(), values))
    }
}

/// Outcome of [`verify_orthogonality`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub d: usize,
    pub passed: bool,
    pub pairs_checked: usize,
    /// First failing pair, e.g. `row (2,1) x (3): expected 0, got 1/4`.
    pub counterexample: Option<String>,
}

/// Checks both orthogonality relations exactly, in normalized-character
/// form:
///
/// * rows: `(dimλ/d!)² Σ_Δ z_Δ φ_λ(Δ) φ_μ(Δ) = δ_{λμ}`
/// * columns: `Σ_λ (dimλ/d!)² φ_λ(μ) φ_λ(Δ) = δ_{Δμ}/z_Δ`
pub fn verify_orthogonality(table: &CharacterTable) -> OrthogonalityReport {
    let n = table.len();
    let parts = table.partitions();
    let dim2: Vec<Rational> = (0..n)
        .map(|i| {
            let r = table.dim_ratio_at(i);
            &r * &r
        })
        .collect();
    let z: Vec<Rational> = parts.iter().map(|p| int(p.z() as i64)).collect();
    let mut checked = 0;
    for a in 0..n {
        for b in a..n {
            checked += 1;
            let sum: Rational = (0..n)
                .map(|j| &z[j] * table.phi_at(a, j) * table.phi_at(b, j))
                .sum::<Rational>()
                * &dim2[a];
            let expected = if a == b {
                Rational::one()
            } else {
                Rational::zero()
            };
            if sum != expected {
                return failure(
                    table.d, checked, "row", &parts[a], &parts[b], &expected, &sum,
                );
            }
        }
    }
    for a in 0..n {
        for b in a..n {
            checked += 1;
            let sum: Rational = (0..n)
                .map(|i| &dim2[i] * table.phi_at(i, a) * table.phi_at(i, b))
                .sum();
            let expected = if a == b {
                z[a].recip()
            } else {
                Rational::zero()
            };
            if sum != expected {
                return failure(
                    table.d, checked, "column", &parts[a], &parts[b], &expected, &sum,
                );
            }
        }
    }
    OrthogonalityReport {
        d: table.d,
        passed: true,
        pairs_checked: checked,
        counterexample: None,
    }
}

fn failure(
    d: usize,
    checked: usize,
    kind: &str,
    a: &Partition,
    b: &Partition,
    expected: &Rational,
    got: &Rational,
) -> OrthogonalityReport {
    use crate::rational::to_string;
    OrthogonalityReport {
        d,
        passed: false,
        pairs_checked: checked,
        counterexample: Some(format!(
            "{kind} {a} x {b}: expected {}, got {}",
            to_string(expected),
            to_string(got)
        )),
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    d: usize,
    partitions: Vec<Partition>,
    table: Vec<Vec<i64>>,
}

/// How a table was obtained by [`TableCache::load_or_compute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    /// Read from disk and validated.
    Hit,
    /// No usable file (or no cache directory); computed.
    Computed,
    /// A file existed but was rejected; recomputed and overwritten.
    Recomputed { reason: String },
}

/// On-disk character-table cache rooted at a directory.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: Option<PathBuf>,
}

impl TableCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        TableCache { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, d: usize) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|dir| dir.join(format!("chartab-v{CACHE_VERSION}-d{d}.json")))
    }

    pub fn load_or_compute(&self, d: usize) -> Result<(CharacterTable, CacheOutcome)> {
        check_degree(d)?;
        let Some(path) = self.path_for(d) else {
            return Ok((CharacterTable::compute(d)?, CacheOutcome::Computed));
        };
        let rejected = match fs::read(&path) {
            Ok(bytes) => match Self::decode(d, &bytes) {
                Ok(table) => return Ok((table, CacheOutcome::Hit)),
                Err(reason) => Some(reason),
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(e) => Some(format!("unreadable: {e}")),
        };
        if let Some(reason) = &rejected {
            log::warn!(
                "character table cache {} rejected ({reason}); recomputing",
                path.display()
            );
        }
        let table = CharacterTable::compute(d)?;
        if let Err(e) = self.store(&table) {
            log::warn!("could not write character table cache: {e}");
        }
        let outcome = match rejected {
            Some(reason) => CacheOutcome::Recomputed { reason },
            None => CacheOutcome::Computed,
        };
        Ok((table, outcome))
    }

    fn decode(d: usize, bytes: &[u8]) -> std::result::Result<CharacterTable, String> {
        let file: CacheFile =
            serde_json::from_slice(bytes).map_err(|e| format!("bad JSON: {e}"))?;
        if file.version != CACHE_VERSION {
            return Err(format!("version {} != {CACHE_VERSION}", file.version));
        }
        if file.d != d {
            return Err(format!("file is for d={}", file.d));
        }
        if file.partitions != enumerate_partitions(d) {
            return Err("partition order differs from the canonical order".into());
        }
        let n = file.partitions.len();
        if file.table.len() != n || file.table.iter().any(|r| r.len() != n) {
            return Err("table is not square".into());
        }
        let table = CharacterTable::from_values(d, file.partitions, file.table);
        let report = verify_orthogonality(&table);
        if !report.passed {
            return Err(format!(
                "orthogonality fails: {}",
                report.counterexample.unwrap_or_default()
            ));
        }
        Ok(table)
    }

    /// Atomically writes the table (temp file in the same directory, then
    /// rename).
    pub fn store(&self, table: &CharacterTable) -> Result<()> {
        let Some(path) = self.path_for(table.d) else {
            return Ok(());
        };
        let dir = path.parent().expect("cache file has a parent");
        let io = |source| Error::CacheIo {
            path: path.clone(),
            source,
        };
        fs::create_dir_all(dir).map_err(io)?;
        let file = CacheFile {
            version: CACHE_VERSION,
            d: table.d,
            partitions: table.partitions.clone(),
            table: table.values.clone(),
        };
        let tmp = dir.join(format!(
            ".chartab-v{CACHE_VERSION}-d{}.{}.tmp",
            table.d,
            std::process::id()
        ));
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(&serde_json::to_vec(&file)?).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }

    /// Cached degrees present on disk.
    pub fn entries(&self) -> Result<Vec<(usize, PathBuf)>> {
        let Some(dir) = &self.dir else {
            return Ok(Vec::new());
        };
        let rd = match fs::read_dir(dir) {
            Ok(rd) => rd,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(source) => {
                return Err(Error::CacheIo {
                    path: dir.clone(),
                    source,
                })
            }
        };
        let prefix = format!("chartab-v{CACHE_VERSION}-d");
        let mut out: Vec<(usize, PathBuf)> = rd
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let name = e.file_name().into_string().ok()?;
                let d = name
                    .strip_prefix(&prefix)?
                    .strip_suffix(".json")?
                    .parse()
                    .ok()?;
                Some((d, e.path()))
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Removes all cache files; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for (_, path) in &entries {
            fs::remove_file(path).map_err(|source| Error::CacheIo {
                path: path.clone(),
                source,
            })?;
        }
        Ok(entries.len())
    }
}

fn cache_dir_slot() -> &'static RwLock<Option<PathBuf>> {
    static SLOT: OnceLock<RwLock<Option<PathBuf>>> = OnceLock::new();
    SLOT.get_or_init(|| RwLock::new(std::env::var_os("HURWITZ_CACHE_DIR").map(PathBuf::from)))
}

/// Sets the directory used by [`character_table`] for persistence
/// (`None` disables the disk cache). Defaults to `$HURWITZ_CACHE_DIR`.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir_slot().write().unwrap() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    cache_dir_slot().read().unwrap().clone()
}

fn memory() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static MEM: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    MEM.get_or_init(Default::default)
}

/// Shared character table of `S_d`: memory cache, then disk cache, then
/// computation.
pub fn character_table(d: usize) -> Result<Arc<CharacterTable>> {
    check_degree(d)?;
    if let Some(t) = memory().lock().unwrap().get(&d) {
        return Ok(Arc::clone(t));
    }
    let (table, _) = TableCache::new(cache_dir()).load_or_compute(d)?;
    let table = Arc::new(table);
    memory()
        .lock()
        .unwrap()
        .entry(d)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}

/// `φ_λ(Δ)` through the shared table.
pub fn normalized_character(lambda: &Partition, delta: &Partition) -> Result<Rational> {
    if lambda.weight() != delta.weight() {
        return Err(weight_mismatch(lambda, delta));
    }
    character_table(lambda.weight())?.phi(lambda, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_characters() {
        assert_eq!(character(&p(&[3]), &p(&[3])).unwrap(), 1);
        assert_eq!(character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn small_tables() {
        assert_eq!(CharacterTable::compute(1).unwrap().values(), &[vec![1]]);
        // Rows and columns share the canonical order (2), (1,1).
        let t2 = CharacterTable::compute(2).unwrap();
        assert_eq!(t2.values(), &[vec![1, 1], vec![-1, 1]]);
        assert_eq!(t2.chi(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(t2.chi(&p(&[1, 1]), &p(&[1, 1])).unwrap(), 1);
        let t3 = CharacterTable::compute(3).unwrap();
        assert_eq!(t3.values()[1], vec![-1, 0, 2]);
        assert_eq!(t3.chi(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(t3.chi(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(t3.chi(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
    }

    #[test]
    fn dims_match_hook_formula() {
        for d in 1..=9 {
            let t = CharacterTable::compute(d).unwrap();
            let mut sum = 0i64;
            for (i, lam) in t.partitions().iter().enumerate() {
                assert_eq!(t.dim_at(i) as u64, dim(lam));
                sum += t.dim_at(i) * t.dim_at(i);
            }
            assert_eq!(num_bigint::BigInt::from(sum), factorial(d));
        }
        assert_eq!(dim(&p(&[2, 2])), 2);
    }

    #[test]
    fn normalized_values() {
        assert_eq!(
            normalized_character(&p(&[2, 1]), &p(&[3])).unwrap(),
            int(-1)
        );
        assert_eq!(normalized_character(&p(&[3]), &p(&[2, 1])).unwrap(), int(3));
        assert_eq!(
            normalized_character(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(),
            int(1)
        );
        assert_eq!(
            normalized_character(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(),
            int(2)
        );
        assert_eq!(
            normalized_character(&p(&[2, 2]), &p(&[3, 1])).unwrap(),
            ratio(-8, 2)
        );
    }

    #[test]
    fn conjugation_twists_by_sign() {
        for d in 1..=7 {
            let t = CharacterTable::compute(d).unwrap();
            for lam in t.partitions() {
                for delta in t.partitions() {
                    assert_eq!(
                        t.chi(lam, delta).unwrap(),
                        delta.sign() * t.chi(&lam.conjugate(), delta).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn orthogonality_and_negative_control() {
        for d in 0..=6 {
            assert!(verify_orthogonality(&CharacterTable::compute(d).unwrap()).passed);
        }
        let t = CharacterTable::compute(3).unwrap();
        let bad = t.with_entry(&p(&[2, 1]), &p(&[3]), 1).unwrap();
        let report = verify_orthogonality(&bad);
        assert!(!report.passed);
        let msg = report.counterexample.unwrap();
        assert!(msg.contains("[2,1]") || msg.contains("[3]"), "{msg}");
    }

    #[test]
    fn disk_cache_roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(Some(dir.path().to_path_buf()));
        let (t, outcome) = cache.load_or_compute(4).unwrap();
        assert_eq!(outcome, CacheOutcome::Computed);
        let (t2, outcome) = cache.load_or_compute(4).unwrap();
        assert_eq!(outcome, CacheOutcome::Hit);
        assert_eq!(t, t2);

        // Corrupt one entry: orthogonality must reject it.
        let path = cache.path_for(4).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let mut file: serde_json::Value = serde_json::from_str(&text).unwrap();
        file["table"][0][0] = serde_json::json!(7);
        fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        let (t3, outcome) = cache.load_or_compute(4).unwrap();
        assert!(matches!(outcome, CacheOutcome::Recomputed { .. }));
        assert_eq!(t3, t);
        assert_eq!(cache.load_or_compute(4).unwrap().1, CacheOutcome::Hit);

        fs::write(&path, "not json").unwrap();
        assert!(matches!(
            cache.load_or_compute(4).unwrap().1,
            CacheOutcome::Recomputed { .. }
        ));
        assert_eq!(cache.entries().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), 1);
        assert!(cache.entries().unwrap().is_empty());
    }
}
