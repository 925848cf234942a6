//! Partitions (Young diagrams) and their combinatorial statistics.
//!
//! A single [`Partition`] type plays three roles: ramification profiles,
//! conjugacy classes (cycle types) of `S_d`, and irreducible representations
//! of `S_d`. Partitions of a fixed weight are always listed in
//! reverse-lexicographic order, so `(3)` comes before `(2,1)` before
//! `(1,1,1)`; the derived [`Ord`] sorts by weight first and then in that same
//! order, which makes every `BTreeMap` keyed by partitions iterate
//! deterministically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on the degree `d` accepted by factorial-sized computations.
pub const DEFAULT_MAX_DEGREE: usize = 12;

/// Hard ceiling for [`set_max_degree`]; `z_Δ` and `|C_Δ|` must fit in `u64`.
pub const MAX_DEGREE_CEILING: usize = 20;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);

/// Current process-wide degree cap.
pub fn max_degree() -> usize {
    MAX_DEGREE.load(AtomicOrdering::Relaxed)
}

/// Changes the process-wide degree cap. Values above
/// [`MAX_DEGREE_CEILING`] are rejected.
pub fn set_max_degree(d: usize) -> Result<()> {
    if d > MAX_DEGREE_CEILING {
        return Err(Error::InvalidArgument(format!(
            "maximum degree {d} is above the supported ceiling {MAX_DEGREE_CEILING}"
        )));
    }
    MAX_DEGREE.store(d, AtomicOrdering::Relaxed);
    Ok(())
}

/// Errors with [`Error::DegreeTooLarge`] when `d` exceeds the cap.
pub fn check_degree(d: usize) -> Result<()> {
    let max = max_degree();
    if d > max {
        Err(Error::DegreeTooLarge { degree: d, max })
    } else {
        Ok(())
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row diagram `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The identity class `(1^d)`.
    pub fn ones(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    /// The class of transpositions `(2,1^{d-2})`; `None` for `d < 2`.
    pub fn transposition(d: usize) -> Option<Self> {
        if d < 2 {
            return None;
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, d - 2));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts `ℓ(Δ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|Δ| - ℓ(Δ)`, the minimal number of transpositions whose product
    /// has cycle type `Δ`.
    pub fn colength(&self) -> usize {
        self.weight() - self.len()
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if self.colength().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiplicity `m_i` of each part size `i`.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_Δ = ∏ m_i! i^{m_i}`, the order of the centralizer of a
    /// permutation of cycle type `Δ`.
    pub fn z(&self) -> u64 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| {
                let fact: u64 = (1..=m as u64).product();
                fact * (i as u64).pow(m as u32)
            })
            .product()
    }

    pub fn z_big(&self) -> BigInt {
        BigInt::from(self.z())
    }

    /// `|C_Δ| = d!/z_Δ`.
    pub fn class_size(&self) -> u64 {
        let d = self.weight() as u64;
        let fact: u64 = (1..=d).product();
        fact / self.z()
    }

    /// `|aut μ| = ∏ m_i!` (no factors of the part sizes).
    pub fn aut_multiplicity(&self) -> u64 {
        self.multiplicities()
            .into_values()
            .map(|m| (1..=m as u64).product::<u64>())
            .product()
    }

    /// Cells `(i, j)` with 1-based row `i` and column `j`.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len as i64).map(move |j| (i as i64 + 1, j)))
    }

    /// Contents `j - i` of all cells, row by row.
    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j - i).collect()
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| {
                let arm = self.parts[(i - 1) as usize] as i64 - j;
                let leg = conj.parts[(j - 1) as usize] as i64 - i;
                (arm + leg + 1) as u64
            })
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Part `i` (0-based), or zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiset union of the parts, as for the product `p_Δ p_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Removes one part equal to `k`, if present.
    pub fn remove_part(&self, k: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Compact key used in JSON maps, e.g. `"[2,1]"`.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[2,1]"`, `"2,1"` or `"[]"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u32>().map_err(|_| {
                    Error::Parse(format!("bad part {:?} in partition {s:?}", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `d`, reverse-lexicographic.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    fn fill(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            fill(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    fill(d as u32, d as u32, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `k` whose parts are all at most `max_part`.
pub fn partitions_with_max_part(k: usize, max_part: u32) -> Vec<Partition> {
    enumerate_partitions(k)
        .into_iter()
        .filter(|p| p.part(0) <= max_part)
        .collect()
}

/// Parses a comma-separated list of bracketed partitions such as
/// `"[3],[2,1],[1,1,1]"`. The offending token is named on failure.
pub fn parse_profile_list(s: &str) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        if !rest.starts_with('[') {
            let token: String = rest.chars().take_while(|&c| c != ',').collect();
            return Err(Error::Parse(format!(
                "expected '[' at {token:?} in profile list {s:?}"
            )));
        }
        let end = rest
            .find(']')
            .ok_or_else(|| Error::Parse(format!("unterminated profile {rest:?} in {s:?}")))?;
        let token = &rest[..=end];
        out.push(
            token
                .parse::<Partition>()
                .map_err(|e| Error::Parse(format!("malformed profile {token:?}: {e}")))?,
        );
        rest = rest[end + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(Error::Parse(format!(
                    "trailing comma in profile list {s:?}"
                )));
            }
        } else if !rest.is_empty() {
            return Err(Error::Parse(format!(
                "unexpected {rest:?} after {token:?} in profile list {s:?}"
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Partition counts from Euler's pentagonal-number recurrence.
    fn pentagonal_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for i in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[i] += sign * p[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    p[i] += sign * p[i - g2];
                }
                k += 1;
            }
        }
        p[n] as u64
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(5).len(), 7);
    }

    #[test]
    fn enumeration_counts_match_recurrence() {
        for d in 0..=15 {
            assert_eq!(
                enumerate_partitions(d).len() as u64,
                pentagonal_count(d),
                "d={d}"
            );
        }
    }

    #[test]
    fn enumeration_is_sorted_by_ord() {
        let parts = enumerate_partitions(7);
        let mut sorted = parts.clone();
        sorted.sort();
        assert_eq!(parts, sorted);
    }

    #[test]
    fn z_and_class_sizes() {
        assert_eq!(p(&[1]).z(), 1);
        assert_eq!(p(&[2, 1]).z(), 2);
        assert_eq!(p(&[3]).z(), 3);
        assert_eq!(p(&[1, 1, 1]).class_size(), 1);
        assert_eq!(p(&[2, 1]).class_size(), 3);
        assert_eq!(p(&[3]).class_size(), 2);
    }

    #[test]
    fn class_equation() {
        for d in 0..=12 {
            let fact: u64 = (1..=d as u64).product();
            let total: u64 = enumerate_partitions(d).iter().map(|q| q.class_size()).sum();
            assert_eq!(total, fact, "d={d}");
            for q in enumerate_partitions(d) {
                assert_eq!(q.z() * q.class_size(), fact);
            }
        }
    }

    #[test]
    fn colengths() {
        assert_eq!(p(&[1, 1, 1]).colength(), 0);
        assert_eq!(p(&[3]).colength(), 2);
        assert_eq!(p(&[2, 2, 1]).colength(), 2);
    }

    #[test]
    fn contents_and_hooks() {
        assert_eq!(p(&[1]).contents(), vec![0]);
        let mut c = p(&[2, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 1]);
        assert_eq!(p(&[3]).contents(), vec![0, 1, 2]);
        assert_eq!(p(&[1]).hook_lengths(), vec![1]);
        assert_eq!(p(&[2, 1]).hook_lengths(), vec![3, 1, 1]);
        assert_eq!(p(&[2, 2]).hook_lengths(), vec![3, 2, 2, 1]);
    }

    #[test]
    fn content_sum_flips_under_conjugation() {
        for d in 0..=8 {
            for q in enumerate_partitions(d) {
                let s: i64 = q.contents().iter().sum();
                let t: i64 = q.conjugate().contents().iter().sum();
                assert_eq!(q.contents().len(), d);
                assert_eq!(s, -t);
            }
        }
    }

    #[test]
    fn hook_product_divides_factorial() {
        for d in 1..=10 {
            let fact: u64 = (1..=d as u64).product();
            for q in enumerate_partitions(d) {
                let h: u64 = q.hook_lengths().iter().product();
                assert_eq!(fact % h, 0);
            }
        }
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn profile_lists() {
        let v = parse_profile_list("[3],[2,1], [1,1,1]").unwrap();
        assert_eq!(v, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert!(parse_profile_list("").unwrap().is_empty());
        let err = parse_profile_list("[3],[x]").unwrap_err().to_string();
        assert!(err.contains("[x]"), "{err}");
        let err = parse_profile_list("[3],2").unwrap_err().to_string();
        assert!(err.contains('2'), "{err}");
        assert!(parse_profile_list("[1,2]").is_err());
        assert!(parse_profile_list("[2],").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let q = p(&[2, 1]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[2,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), q);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn degree_cap() {
        assert!(check_degree(DEFAULT_MAX_DEGREE).is_ok());
        assert!(matches!(
            check_degree(DEFAULT_MAX_DEGREE + 1),
            Err(Error::DegreeTooLarge { .. })
        ));
        assert!(set_max_degree(MAX_DEGREE_CEILING + 1).is_err());
    }
}
