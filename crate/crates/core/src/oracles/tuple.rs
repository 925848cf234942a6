//! Hurwitz numbers by counting permutation tuples.
//!
//! A degree-`d` cover of a closed surface branched over points with profiles
//! `Δ¹,…,Δᶠ` is a tuple satisfying the surface relator
//!
//! ```text
//! [a₁,b₁]⋯[a_g,b_g] σ₁⋯σ_F = 1     (orientable, g = (2−e)/2)
//! c₁² ⋯ c_g² σ₁⋯σ_F = 1            (non-orientable, g = 2−e)
//! ```
//!
//! with `σ_i` of cycle type `Δⁱ`; the Hurwitz number is the count over `d!`.
//!
//! [`tuple_hurwitz`] counts by convolving distributions on `S_d`: the number
//! of ways to write each element as a commutator, a square, or a member of a
//! class. Every factor is a class function, so the order of the relator
//! does not matter. [`tuple_hurwitz_naive`] enumerates the tuples one by one
//! and is kept as a reference for the first.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::perm::{all_perms, Perm, SymmetricGroup};
use crate::error::{Error, Result};
use crate::hurwitz::SurfaceSpec;
use crate::partitions::{check_degree, enumerate_partitions, Partition};
use crate::rational::{self, factorial, Rational};

/// Default limit on elementary steps for the enumeration oracles.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Degrees above this are refused outright: one group element per step is
/// no longer practical.
pub const MAX_ORACLE_DEGREE: usize = 8;

fn factorial_u128(d: usize) -> u128 {
    (1..=d as u128).product()
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

fn check_oracle_degree(d: usize) -> Result<()> {
    check_degree(d)?;
    if d > MAX_ORACLE_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: d,
            max: MAX_ORACLE_DEGREE,
        });
    }
    Ok(())
}

fn check_profiles(d: usize, profiles: &[Partition]) -> Result<()> {
    match profiles.iter().find(|p| p.weight() != d) {
        Some(bad) => Err(crate::characters::weight_mismatch(&Partition::ones(d), bad)),
        None => Ok(()),
    }
}

/// Group arithmetic by rank: a precomputed table for small `d`, explicit
/// composition otherwise.
enum Group {
    Table(SymmetricGroup),
    Explicit { elements: Vec<Perm> },
}

impl Group {
    fn new(d: usize) -> Self {
        if d <= SymmetricGroup::MAX_TABLE_DEGREE {
            Group::Table(SymmetricGroup::new(d))
        } else {
            Group::Explicit {
                elements: all_perms(d),
            }
        }
    }

    fn order(&self) -> usize {
        match self {
            Group::Table(g) => g.order(),
            Group::Explicit { elements, .. } => elements.len(),
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Group::Table(g) => g.mul(a, b),
            Group::Explicit { elements, .. } => elements[a].compose(&elements[b]).rank(),
        }
    }

    fn inv(&self, a: usize) -> usize {
        match self {
            Group::Table(g) => g.inv(a),
            Group::Explicit { elements, .. } => elements[a].inverse().rank(),
        }
    }

    fn class_members(&self, delta: &Partition) -> Vec<usize> {
        match self {
            Group::Table(g) => g.class_members(delta),
            Group::Explicit { elements, .. } => (0..elements.len())
                .filter(|&i| &elements[i].cycle_type() == delta)
                .collect(),
        }
    }
}

type Dist = Vec<u128>;

fn add(acc: &mut u128, x: u128) -> Result<()> {
    *acc = acc
        .checked_add(x)
        .ok_or_else(|| Error::InvalidArgument("tuple count overflows 128 bits".into()))?;
    Ok(())
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b)
        .ok_or_else(|| Error::InvalidArgument("tuple count overflows 128 bits".into()))
}

/// `dist[x]` = number of pairs `(a, b)` with `a b a⁻¹ b⁻¹ = x`.
fn commutator_dist(g: &Group) -> Dist {
    let n = g.order();
    let rows: Vec<Dist> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut row = vec![0u128; n];
            let ai = g.inv(a);
            for b in 0..n {
                let x = g.mul(g.mul(a, b), g.mul(ai, g.inv(b)));
                row[x] += 1;
            }
            row
        })
        .collect();
    let mut dist = vec![0u128; n];
    for row in rows {
        for (x, c) in row.into_iter().enumerate() {
            dist[x] += c;
        }
    }
    dist
}

fn square_dist(g: &Group) -> Dist {
    let mut dist = vec![0u128; g.order()];
    for c in 0..g.order() {
        dist[g.mul(c, c)] += 1;
    }
    dist
}

fn class_dist(g: &Group, delta: &Partition) -> Dist {
    let mut dist = vec![0u128; g.order()];
    for i in g.class_members(delta) {
        dist[i] = 1;
    }
    dist
}

/// `(f * h)[x] = Σ_{ab = x} f[a] h[b]`.
fn convolve(g: &Group, f: &Dist, h: &Dist) -> Result<Dist> {
    let n = g.order();
    let support: Vec<(usize, u128)> = h
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect();
    let rows: Vec<Result<Vec<(usize, u128)>>> = (0..n)
        .into_par_iter()
        .filter(|&a| f[a] > 0)
        .map(|a| {
            support
                .iter()
                .map(|&(b, c)| Ok((g.mul(a, b), mul(f[a], c)?)))
                .collect()
        })
        .collect();
    let mut out = vec![0u128; n];
    for row in rows {
        for (x, c) in row? {
            add(&mut out[x], c)?;
        }
    }
    Ok(out)
}

fn support_size(f: &Dist) -> u128 {
    f.iter().filter(|&&c| c > 0).count() as u128
}

/// Steps needed by the convolution route, computed before any work.
fn dp_cost(d: usize, surface: &SurfaceSpec, profiles: &[Partition]) -> u128 {
    let n = factorial_u128(d);
    let g = surface.genus() as u128;
    let mut cost = 0u128;
    if g > 0 {
        cost += if surface.orientable { n * n } else { n };
        cost += g.saturating_sub(1) * n * n;
    }
    for p in profiles {
        cost += n * p.class_size() as u128;
    }
    cost.max(1)
}

/// The relator distribution after all handles / cross-caps and `profiles`.
fn relator_dist(g: &Group, surface: &SurfaceSpec, profiles: &[Partition]) -> Result<Dist> {
    let n = g.order();
    let mut dist = vec![0u128; n];
    dist[0] = 1;
    let genus = surface.genus();
    if genus > 0 {
        let piece = if surface.orientable {
            commutator_dist(g)
        } else {
            square_dist(g)
        };
        for _ in 0..genus {
            dist = convolve(g, &dist, &piece)?;
        }
    }
    for p in profiles {
        dist = convolve(g, &dist, &class_dist(g, p))?;
    }
    Ok(dist)
}

/// Number of relator solutions over `d!`, by convolution on `S_d`.
///
/// The budget bounds the group multiplications performed: about `(d!)²` per
/// handle or cross-cap and `d!·|C_Δ|` per branch point.
pub fn tuple_hurwitz(
    surface: &SurfaceSpec,
    d: usize,
    profiles: &[Partition],
    budget: u128,
) -> Result<Rational> {
    check_oracle_degree(d)?;
    check_profiles(d, profiles)?;
    check_budget(dp_cost(d, surface, profiles), budget)?;
    let g = Group::new(d);
    let count = relator_dist(&g, surface, profiles)?[0];
    Ok(rational::big(count) / rational::big(factorial(d)))
}

/// Number of tuples the naive enumeration visits: `(d!)` per handle
/// letter or cross-cap and `|C_Δ|` per branch point.
pub fn naive_cost(d: usize, surface: &SurfaceSpec, profiles: &[Partition]) -> u128 {
    let n = factorial_u128(d);
    let letters = if surface.orientable {
        2 * surface.genus()
    } else {
        surface.genus()
    };
    let mut cost = n.saturating_pow(letters);
    for p in profiles {
        cost = cost.saturating_mul(p.class_size() as u128);
    }
    cost
}

/// Slots of the relator: free group letters and class-constrained points.
fn relator_slots(
    g: &Group,
    surface: &SurfaceSpec,
    profiles: &[Partition],
) -> (Vec<Vec<usize>>, usize) {
    let free: Vec<usize> = (0..g.order()).collect();
    let letters = if surface.orientable {
        2 * surface.genus() as usize
    } else {
        surface.genus() as usize
    };
    let mut slots = vec![free; letters];
    for p in profiles {
        slots.push(g.class_members(p));
    }
    (slots, letters)
}

fn relator_value(g: &Group, surface: &SurfaceSpec, letters: usize, tuple: &[usize]) -> usize {
    let mut x = 0;
    if surface.orientable {
        for h in 0..letters / 2 {
            let (a, b) = (tuple[2 * h], tuple[2 * h + 1]);
            let comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            x = g.mul(x, comm);
        }
    } else {
        for &c in &tuple[..letters] {
            x = g.mul(x, g.mul(c, c));
        }
    }
    for &s in &tuple[letters..] {
        x = g.mul(x, s);
    }
    x
}

/// All relator solutions, as rank tuples.
fn solutions(g: &Group, surface: &SurfaceSpec, profiles: &[Partition]) -> Vec<Vec<usize>> {
    let (slots, letters) = relator_slots(g, surface, profiles);
    let first: Vec<usize> = slots.first().cloned().unwrap_or_default();
    let rest = &slots[slots.len().min(1)..];
    let search = |prefix: Vec<usize>| -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        let mut idx = vec![0usize; rest.len()];
        if rest.iter().any(Vec::is_empty) {
            return found;
        }
        loop {
            let mut tuple = prefix.clone();
            tuple.extend(idx.iter().zip(rest).map(|(&i, s)| s[i]));
            if relator_value(g, surface, letters, &tuple) == 0 {
                found.push(tuple);
            }
            let mut k = rest.len();
            loop {
                if k == 0 {
                    return found;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < rest[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    };
    if slots.is_empty() {
        return vec![Vec::new()];
    }
    first
        .into_par_iter()
        .flat_map_iter(|x| search(vec![x]))
        .collect()
}

/// Reference enumeration of every tuple; the budget bounds the tuple count.
pub fn tuple_hurwitz_naive(
    surface: &SurfaceSpec,
    d: usize,
    profiles: &[Partition],
    budget: u128,
) -> Result<Rational> {
    check_oracle_degree(d)?;
    check_profiles(d, profiles)?;
    check_budget(naive_cost(d, surface, profiles), budget)?;
    let g = Group::new(d);
    let count = solutions(&g, surface, profiles).len();
    Ok(rational::big(count) / rational::big(factorial(d)))
}

/// Orbits of relator solutions under simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub solutions: usize,
    pub orbits: usize,
    /// `Σ_orbits 1/|Stab|`, which must equal `solutions / d!`.
    #[serde(with = "crate::rational::serde_str")]
    pub weighted: Rational,
    pub passed: bool,
}

/// Checks conjugation invariance: every conjugate of a solution is a
/// solution, and orbit–stabilizer accounting reproduces `solutions / d!`.
pub fn conjugation_orbit_check(
    surface: &SurfaceSpec,
    d: usize,
    profiles: &[Partition],
    budget: u128,
) -> Result<OrbitReport> {
    check_oracle_degree(d)?;
    check_profiles(d, profiles)?;
    let n = factorial_u128(d);
    check_budget(naive_cost(d, surface, profiles).saturating_mul(n), budget)?;
    let g = Group::new(d);
    let sols = solutions(&g, surface, profiles);
    let set: HashSet<&Vec<usize>> = sols.iter().collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut orbits = 0;
    let mut weighted = Rational::zero();
    let mut closed = true;
    for s in &sols {
        if seen.contains(s) {
            continue;
        }
        orbits += 1;
        let mut orbit: HashSet<Vec<usize>> = HashSet::new();
        for h in 0..g.order() {
            let hi = g.inv(h);
            let c: Vec<usize> = s.iter().map(|&x| g.mul(g.mul(h, x), hi)).collect();
            closed &= set.contains(&c);
            orbit.insert(c);
        }
        let stab = g.order() / orbit.len();
        weighted += rational::ratio(1, stab as i64);
        seen.extend(orbit);
    }
    let expected = rational::big(sols.len()) / rational::big(factorial(d));
    Ok(OrbitReport {
        solutions: sols.len(),
        orbits,
        passed: closed && seen.len() == sols.len() && weighted == expected,
        weighted,
    })
}

/// Exact numbers indexed by one partition per free slot (watchtower).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileTally {
    pub d: usize,
    /// Power of `N` multiplying every entry; zero for pure counts.
    pub n_exponent: i64,
    pub entries: BTreeMap<Vec<Partition>, Rational>,
}

impl ProfileTally {
    /// All `slots`-tuples of partitions of `d`, with zero entries.
    pub fn zeros(d: usize, slots: usize, n_exponent: i64) -> Self {
        let mut keys: Vec<Vec<Partition>> = vec![Vec::new()];
        for _ in 0..slots {
            keys = keys
                .into_iter()
                .flat_map(|k| {
                    enumerate_partitions(d).into_iter().map(move |p| {
                        let mut k = k.clone();
                        k.push(p);
                        k
                    })
                })
                .collect();
        }
        ProfileTally {
            d,
            n_exponent,
            entries: keys.into_iter().map(|k| (k, Rational::zero())).collect(),
        }
    }

    pub fn get(&self, key: &[Partition]) -> Rational {
        self.entries
            .get(key)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total(&self) -> Rational {
        self.entries.values().sum()
    }
}

impl Serialize for ProfileTally {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            profiles: &'a [Partition],
            value: String,
        }
        #[derive(Serialize)]
        struct Tally<'a> {
            d: usize,
            n_exponent: i64,
            entries: Vec<Entry<'a>>,
        }
        Tally {
            d: self.d,
            n_exponent: self.n_exponent,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| Entry {
                    profiles: k,
                    value: rational::to_string(v),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// `H(Δ¹,…,Δᶠ, Δ̃¹,…,Δ̃ⱽ)` for every tuple `Δ̃` of `free_slots` partitions.
pub fn tuple_tally(
    surface: &SurfaceSpec,
    d: usize,
    fixed: &[Partition],
    free_slots: usize,
    budget: u128,
) -> Result<ProfileTally> {
    check_oracle_degree(d)?;
    check_profiles(d, fixed)?;
    let n = factorial_u128(d);
    let tuples = (enumerate_partitions(d).len() as u128).saturating_pow(free_slots as u32);
    let cost = dp_cost(d, surface, fixed) + tuples.saturating_mul(n * n);
    check_budget(cost, budget)?;
    let g = Group::new(d);
    let base = relator_dist(&g, surface, fixed)?;
    let mut tally = ProfileTally::zeros(d, free_slots, 0);
    let dfact = rational::big(factorial(d));
    let keys: Vec<Vec<Partition>> = tally.entries.keys().cloned().collect();
    for key in keys {
        let count = close_with(&g, &base, &key)?;
        tally.entries.insert(key, rational::big(count) / &dfact);
    }
    Ok(tally)
}

/// Number of ways to complete `base` to the identity with one element of
/// each class in `classes`.
fn close_with(g: &Group, base: &Dist, classes: &[Partition]) -> Result<u128> {
    let Some((last, init)) = classes.split_last() else {
        return Ok(base[0]);
    };
    let mut dist = base.clone();
    for p in init {
        if support_size(&dist) == 0 {
            return Ok(0);
        }
        dist = convolve(g, &dist, &class_dist(g, p))?;
    }
    let mut total = 0u128;
    for x in g.class_members(last) {
        add(&mut total, dist[g.inv(x)])?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::hurwitz_number;
    use crate::rational::{int, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn surf(e: i64, orientable: bool) -> SurfaceSpec {
        SurfaceSpec::new(e, orientable).unwrap()
    }

    #[test]
    fn worked_values() {
        let s2 = SurfaceSpec::sphere();
        assert_eq!(
            tuple_hurwitz(&s2, 3, &[p(&[3]), p(&[3]), p(&[3])], DEFAULT_BUDGET).unwrap(),
            ratio(1, 3)
        );
        assert_eq!(
            tuple_hurwitz(
                &SurfaceSpec::torus(),
                2,
                &[p(&[2]), p(&[2])],
                DEFAULT_BUDGET
            )
            .unwrap(),
            int(2)
        );
        assert_eq!(
            tuple_hurwitz(
                &SurfaceSpec::projective_plane(),
                1,
                &[p(&[1])],
                DEFAULT_BUDGET
            )
            .unwrap(),
            int(1)
        );
    }

    #[test]
    fn agrees_with_characters() {
        for d in 1..=4 {
            for e in [2, 1, 0, -1, -2] {
                let orientations: &[bool] = match e {
                    2 => &[true],
                    1 | -1 => &[false],
                    _ => &[true, false],
                };
                for &o in orientations {
                    let s = surf(e, o);
                    for set in crate::hurwitz::profile_sets(d, 2) {
                        let want = hurwitz_number(e, d, &set).unwrap();
                        let got = tuple_hurwitz(&s, d, &set, DEFAULT_BUDGET).unwrap();
                        assert_eq!(got, want, "d={d} e={e} orientable={o} {set:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn naive_matches_convolution() {
        for d in 1..=3 {
            for (e, o) in [(2, true), (1, false), (0, true), (0, false)] {
                let s = surf(e, o);
                for set in crate::hurwitz::profile_sets(d, 2) {
                    let a = tuple_hurwitz(&s, d, &set, DEFAULT_BUDGET).unwrap();
                    let b = tuple_hurwitz_naive(&s, d, &set, DEFAULT_BUDGET).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn budget_refusal() {
        let err = tuple_hurwitz(&surf(-4, true), 5, &[], 1000).unwrap_err();
        assert!(err.is_refusal());
        let err = tuple_hurwitz_naive(&surf(-2, true), 4, &[], 100_000).unwrap_err();
        match err {
            Error::BudgetExceeded { needed, budget } => {
                assert_eq!(needed, 24u128.pow(4));
                assert_eq!(budget, 100_000);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn tallies() {
        let t = tuple_tally(
            &SurfaceSpec::sphere(),
            3,
            &[p(&[3]), p(&[3])],
            1,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert_eq!(t.get(&[p(&[3])]), ratio(1, 3));
        assert_eq!(t.get(&[p(&[1, 1, 1])]), ratio(1, 3));
        assert_eq!(t.get(&[p(&[2, 1])]), int(0));
        let t = tuple_tally(&SurfaceSpec::torus(), 2, &[p(&[1, 1])], 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.get(&[p(&[1, 1])]), int(2));
        assert_eq!(t.get(&[p(&[2])]), int(0));
        let t = tuple_tally(&SurfaceSpec::sphere(), 1, &[p(&[1])], 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.get(&[p(&[1]), p(&[1])]), int(1));
    }

    #[test]
    fn orbits() {
        for (e, o, d, set) in [
            (2, true, 3, vec![p(&[3]), p(&[3]), p(&[3])]),
            (0, true, 3, vec![p(&[2, 1])]),
            (0, false, 3, vec![]),
            (2, true, 4, vec![p(&[2, 2]), p(&[2, 2])]),
        ] {
            let r = conjugation_orbit_check(&surf(e, o), d, &set, DEFAULT_BUDGET).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }
}
