//! Hurwitz numbers from characters, the cut relations between them, their
//! deformations by Jucys–Murphy insertions, and the 1-Hurwitz generating
//! series.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::characters::{character_table, weight_mismatch, CharacterTable};
use crate::class_algebra::{jm_insertion, SymmetricInsertion};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::rational::{self, factorial, int, powi, Rational};
use crate::series::TSeries;
use crate::symfun::{cut_and_join_apply, series_log, PolySeries, PowerSumPoly};

/// A closed surface, identified by its Euler characteristic.
///
/// Only `euler` enters the formulas; orientability is validated and
/// reported but otherwise ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceSpec {
    pub euler: i64,
    pub orientable: bool,
}

impl SurfaceSpec {
    pub fn new(euler: i64, orientable: bool) -> Result<Self> {
        if euler > 2 {
            return Err(Error::InvalidSurface(format!(
                "Euler characteristic {euler} exceeds 2"
            )));
        }
        if orientable && euler % 2 != 0 {
            return Err(Error::InvalidSurface(format!(
                "an orientable closed surface has even Euler characteristic, got {euler}"
            )));
        }
        if !orientable && euler > 1 {
            return Err(Error::InvalidSurface(format!(
                "a non-orientable closed surface has Euler characteristic at most 1, got {euler}"
            )));
        }
        Ok(SurfaceSpec { euler, orientable })
    }

    /// Some closed surface with characteristic `euler`: orientable when
    /// `euler` is even, non-orientable otherwise.
    pub fn with_euler(euler: i64) -> Result<Self> {
        Self::new(euler, euler % 2 == 0)
    }

    pub fn sphere() -> Self {
        SurfaceSpec {
            euler: 2,
            orientable: true,
        }
    }

    pub fn projective_plane() -> Self {
        SurfaceSpec {
            euler: 1,
            orientable: false,
        }
    }

    pub fn torus() -> Self {
        SurfaceSpec {
            euler: 0,
            orientable: true,
        }
    }

    pub fn klein_bottle() -> Self {
        SurfaceSpec {
            euler: 0,
            orientable: false,
        }
    }

    /// Orientable genus `(2−e)/2`, or the number of cross-caps `2−e`.
    pub fn genus(&self) -> u32 {
        if self.orientable {
            ((2 - self.euler) / 2) as u32
        } else {
            (2 - self.euler) as u32
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.orientable {
            "orientable"
        } else {
            "non-orientable"
        };
        write!(f, "{kind} surface with e = {}", self.euler)
    }
}

/// Branch profiles of a degree-`d` cover over a closed surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HurwitzQuery {
    pub surface: SurfaceSpec,
    pub degree: usize,
    pub profiles: Vec<Partition>,
}

impl HurwitzQuery {
    /// At least one profile is required to fix the degree; use
    /// [`HurwitzQuery::unbranched`] otherwise.
    pub fn new(surface: SurfaceSpec, profiles: Vec<Partition>) -> Result<Self> {
        let d = profiles.first().map(Partition::weight).ok_or_else(|| {
            Error::InvalidArgument("empty profile list: the degree is required".into())
        })?;
        Self::with_degree(surface, d, profiles)
    }

    pub fn with_degree(surface: SurfaceSpec, d: usize, profiles: Vec<Partition>) -> Result<Self> {
        check_profiles(d, &profiles)?;
        Ok(HurwitzQuery {
            surface,
            degree: d,
            profiles,
        })
    }

    pub fn unbranched(surface: SurfaceSpec, d: usize) -> Self {
        HurwitzQuery {
            surface,
            degree: d,
            profiles: Vec::new(),
        }
    }
}

fn check_profiles(d: usize, profiles: &[Partition]) -> Result<()> {
    if let Some(bad) = profiles.iter().find(|p| p.weight() != d) {
        let reference = profiles
            .iter()
            .find(|p| p.weight() == d)
            .cloned()
            .unwrap_or_else(|| Partition::ones(d));
        return Err(weight_mismatch(&reference, bad));
    }
    Ok(())
}

/// Per-representation weights `∏_i φ_λ(Δⁱ) · (dimλ/d!)^e`, in table order.
fn spectral_weights(
    table: &CharacterTable,
    e: i64,
    profiles: &[Partition],
) -> Result<Vec<Rational>> {
    let cols = profiles
        .iter()
        .map(|p| table.index_of(p))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..table.len())
        .into_par_iter()
        .map(|i| {
            let mut w = powi(&table.dim_ratio_at(i), e);
            for &j in &cols {
                if w.is_zero() {
                    break;
                }
                w *= table.phi_at(i, j);
            }
            w
        })
        .collect())
}

/// `H_e(Δ¹,…,Δᶠ)` for covers of degree `d`.
pub fn hurwitz_number(e: i64, d: usize, profiles: &[Partition]) -> Result<Rational> {
    check_profiles(d, profiles)?;
    let table = character_table(d)?;
    Ok(spectral_weights(&table, e, profiles)?.into_iter().sum())
}

/// The disconnected Hurwitz number of `q`, `Σ_λ ∏ φ_λ(Δⁱ) (dimλ/d!)^e`.
pub fn hurwitz(q: &HurwitzQuery) -> Result<Rational> {
    hurwitz_number(q.surface.euler, q.degree, &q.profiles)
}

/// `D(Δ) = z_Δ H₁(Δ)`.
pub fn moebius_functional(delta: &Partition) -> Result<Rational> {
    let h = hurwitz_number(1, delta.weight(), std::slice::from_ref(delta))?;
    Ok(h * rational::big(delta.z_big()))
}

/// `Σ_λ χ_λ(Δ)`, which must agree with [`moebius_functional`].
pub fn moebius_character_sum(delta: &Partition) -> Result<Rational> {
    let table = character_table(delta.weight())?;
    let j = table.index_of(delta)?;
    Ok(int((0..table.len()).map(|i| table.chi_at(i, j)).sum()))
}

fn serialize_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    rational::serde_str::serialize(x, s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CutRelation {
    Handle,
    Surface,
    Moebius,
}

/// Outcome of one cut relation: the glued number against the sum over the
/// cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub relation: CutRelation,
    pub description: String,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: Rational,
    pub passed: bool,
}

impl CutReport {
    fn new(relation: CutRelation, description: String, lhs: Rational, rhs: Rational) -> Self {
        let passed = lhs == rhs;
        CutReport {
            relation,
            description,
            lhs,
            rhs,
            passed,
        }
    }
}

fn show_profiles(profiles: &[Partition]) -> String {
    profiles
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn with_extra(profiles: &[Partition], extra: &[&Partition]) -> Vec<Partition> {
    profiles
        .iter()
        .cloned()
        .chain(extra.iter().map(|p| (*p).clone()))
        .collect()
}

/// `H_{e−2}(…) = Σ_Δ H_e(…,Δ,Δ) z_Δ`.
pub fn verify_handle_cut(e: i64, d: usize, profiles: &[Partition]) -> Result<CutReport> {
    let lhs = hurwitz_number(e - 2, d, profiles)?;
    let mut rhs = Rational::zero();
    for delta in enumerate_partitions(d) {
        let h = hurwitz_number(e, d, &with_extra(profiles, &[&delta, &delta]))?;
        rhs += h * rational::big(delta.z_big());
    }
    Ok(CutReport::new(
        CutRelation::Handle,
        format!("d={d} e={e} -> {} ({})", e - 2, show_profiles(profiles)),
        lhs,
        rhs,
    ))
}

/// `H_{e₁+e₂−2}(p₁,p₂) = Σ_Δ H_{e₁}(p₁,Δ) z_Δ H_{e₂}(Δ,p₂)`.
pub fn verify_surface_cut(
    e1: i64,
    e2: i64,
    d: usize,
    p1: &[Partition],
    p2: &[Partition],
) -> Result<CutReport> {
    let all: Vec<Partition> = p1.iter().chain(p2).cloned().collect();
    let lhs = hurwitz_number(e1 + e2 - 2, d, &all)?;
    let mut rhs = Rational::zero();
    for delta in enumerate_partitions(d) {
        let a = hurwitz_number(e1, d, &with_extra(p1, &[&delta]))?;
        if a.is_zero() {
            continue;
        }
        let b = hurwitz_number(e2, d, &with_extra(p2, &[&delta]))?;
        rhs += a * rational::big(delta.z_big()) * b;
    }
    Ok(CutReport::new(
        CutRelation::Surface,
        format!(
            "d={d} e={e1}+{e2} ({} | {})",
            show_profiles(p1),
            show_profiles(p2)
        ),
        lhs,
        rhs,
    ))
}

/// `H_{e−1}(…) = Σ_Δ H_e(…,Δ) D(Δ)`.
pub fn verify_moebius_cut(e: i64, d: usize, profiles: &[Partition]) -> Result<CutReport> {
    let lhs = hurwitz_number(e - 1, d, profiles)?;
    let mut rhs = Rational::zero();
    for delta in enumerate_partitions(d) {
        let dd = moebius_functional(&delta)?;
        if dd.is_zero() {
            continue;
        }
        rhs += hurwitz_number(e, d, &with_extra(profiles, &[&delta]))? * dd;
    }
    Ok(CutReport::new(
        CutRelation::Moebius,
        format!("d={d} e={e} -> {} ({})", e - 1, show_profiles(profiles)),
        lhs,
        rhs,
    ))
}

/// Result of running all three cut relations over many profile sets.
#[derive(Clone, Debug, Serialize)]
pub struct CutSuiteReport {
    pub d_max: usize,
    pub eulers: Vec<i64>,
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<CutReport>,
}

/// Multisets of at most `max_len` partitions of `d`.
pub fn profile_sets(d: usize, max_len: usize) -> Vec<Vec<Partition>> {
    let parts = enumerate_partitions(d);
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<Partition>)> = vec![(0, Vec::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (start, set) in &frontier {
            for (i, p) in parts.iter().enumerate().skip(*start) {
                let mut s = set.clone();
                s.push(p.clone());
                out.push(s.clone());
                next.push((i, s));
            }
        }
        frontier = next;
    }
    out
}

/// Every cut relation for `1 ≤ d ≤ d_max`, every `e` in `eulers` and every
/// profile multiset of size at most two.
pub fn verify_cut_suite(d_max: usize, eulers: &[i64]) -> Result<CutSuiteReport> {
    let mut jobs: Vec<(usize, Vec<Partition>)> = Vec::new();
    for d in 1..=d_max {
        for set in profile_sets(d, 2) {
            jobs.push((d, set));
        }
    }
    let reports: Vec<Vec<CutReport>> = jobs
        .par_iter()
        .map(|(d, set)| -> Result<Vec<CutReport>> {
            let mut out = Vec::new();
            for &e in eulers {
                out.push(verify_handle_cut(e, *d, set)?);
                out.push(verify_moebius_cut(e, *d, set)?);
                for &e2 in eulers {
                    for k in 0..=set.len() {
                        out.push(verify_surface_cut(e, e2, *d, &set[..k], &set[k..])?);
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let checked = reports.iter().map(Vec::len).sum();
    let failures: Vec<CutReport> = reports
        .into_iter()
        .flatten()
        .filter(|r| !r.passed)
        .collect();
    Ok(CutSuiteReport {
        d_max,
        eulers: eulers.to_vec(),
        checked,
        passed: failures.is_empty(),
        failures,
    })
}

/// Profile weights as a central element in the idempotent basis,
/// `∏_i 𝔠_{Δⁱ} = Σ_λ ∏_i φ_λ(Δⁱ) 𝔉_λ`, paired against a series-valued
/// insertion.
fn deformed_from(q: &HurwitzQuery, g: &SymmetricInsertion) -> Result<TSeries> {
    let d = q.degree;
    let table = character_table(d)?;
    let weights = spectral_weights(&table, q.surface.euler, &q.profiles)?;
    let insertion = jm_insertion(g, d)?;
    let mut out: Option<TSeries> = None;
    for (i, lam) in table.partitions().iter().enumerate() {
        let s = insertion
            .coeff(lam)
            .expect("insertion covers every partition")
            .scale(&weights[i]);
        out = Some(match out {
            None => s,
            Some(acc) => &acc + &s,
        });
    }
    Ok(out.expect("at least one partition"))
}

/// `H_e(Δ¹,…;t) = ⟨exp(t(q^{1/2}−q^{−1/2}) Σ_i q^{𝔍_i}) 𝔠_{Δ¹}⋯⟩` with
/// `q = s²`, truncated at `t^order`.
///
/// The `t^k` coefficient is `Σ_λ e_λ(q)^k/k! ∏ φ_λ(Δⁱ) (dimλ/d!)^e`.
pub fn deformed_hurwitz(q: &HurwitzQuery, s: &Rational, order: u32) -> Result<TSeries> {
    deformed_from(
        q,
        &SymmetricInsertion::QExponential {
            s: s.clone(),
            order,
        },
    )
}

/// Multi-time deformation `exp(Σ_{m=1}^{times} t_m q^{km} e_λ(q^m)/m)`.
pub fn deformed_hurwitz_jm(
    q: &HurwitzQuery,
    s: &Rational,
    k: i64,
    times: usize,
    order: u32,
) -> Result<TSeries> {
    if times == 0 {
        return Err(Error::InvalidArgument(
            "at least one time is required".into(),
        ));
    }
    deformed_from(
        q,
        &SymmetricInsertion::QExponentialMulti {
            s: s.clone(),
            k,
            times,
            order,
        },
    )
}

/// `h°_{m,Δ} = H₂(Δ, τ, …, τ)` with `m` simple branch points `τ = (2,1^{d−2})`.
/// Zero when `m > 0` and `|Δ| < 2`, since no transposition exists.
pub fn one_hurwitz(m: u32, delta: &Partition) -> Result<Rational> {
    let d = delta.weight();
    if m == 0 {
        return hurwitz_number(2, d, std::slice::from_ref(delta));
    }
    let Some(tau) = Partition::transposition(d) else {
        return Ok(Rational::zero());
    };
    let table = character_table(d)?;
    let i_tau = table.index_of(&tau)?;
    let j = table.index_of(delta)?;
    Ok((0..table.len())
        .map(|i| {
            table.phi_at(i, j)
                * powi(table.phi_at(i, i_tau), m as i64)
                * powi(&table.dim_ratio_at(i), 2)
        })
        .sum())
}

/// Table of `h_{m,Δ}` for `|Δ| ≤ d_max`, `m ≤ m_max`. The empty cover
/// contributes `h_{0,∅} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzTable {
    pub d_max: usize,
    pub m_max: u32,
    entries: BTreeMap<(u32, Partition), Rational>,
}

impl HurwitzTable {
    pub fn new(d_max: usize, m_max: u32) -> Self {
        HurwitzTable {
            d_max,
            m_max,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, m: u32, delta: &Partition) -> Rational {
        self.entries
            .get(&(m, delta.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, m: u32, delta: &Partition, v: Rational) {
        if v.is_zero() {
            self.entries.remove(&(m, delta.clone()));
        } else {
            self.entries.insert((m, delta.clone()), v);
        }
    }

    /// Nonzero entries.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, Partition), &Rational)> {
        self.entries.iter()
    }

    /// `F = Σ u^m/m! h_{m,Δ} p_Δ`.
    pub fn to_series(&self) -> PolySeries {
        let mut f = PolySeries::zero(self.d_max, self.m_max);
        for ((m, delta), v) in &self.entries {
            f.add_term(*m, delta, v / rational::big(factorial(*m as usize)));
        }
        f
    }

    pub fn from_series(f: &PolySeries) -> Self {
        let mut t = HurwitzTable::new(f.d_max, f.m_max);
        for ((m, delta), v) in f.terms() {
            t.set(*m, delta, v * rational::big(factorial(*m as usize)));
        }
        t
    }
}

impl Serialize for HurwitzTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            m: u32,
            delta: Partition,
            value: String,
        }
        #[derive(Serialize)]
        struct Table {
            d_max: usize,
            m_max: u32,
            entries: Vec<Entry>,
        }
        Table {
            d_max: self.d_max,
            m_max: self.m_max,
            entries: self
                .entries
                .iter()
                .map(|((m, delta), v)| Entry {
                    m: *m,
                    delta: delta.clone(),
                    value: rational::to_string(v),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// The disconnected 1-Hurwitz numbers `h°_{m,Δ}`.
pub fn generating_series(d_max: usize, m_max: u32) -> Result<HurwitzTable> {
    let mut t = HurwitzTable::new(d_max, m_max);
    t.set(0, &Partition::empty(), Rational::one());
    for d in 1..=d_max {
        for delta in enumerate_partitions(d) {
            for m in 0..=m_max {
                t.set(m, &delta, one_hurwitz(m, &delta)?);
            }
        }
    }
    Ok(t)
}

/// Connected numbers `h•_{m,Δ}` from `F• = ln F°`.
pub fn connected_log(table: &HurwitzTable) -> Result<HurwitzTable> {
    Ok(HurwitzTable::from_series(&series_log(&table.to_series())?))
}

/// First coefficient at which an evolution equation fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvolutionMismatch {
    pub m: u32,
    pub delta: Partition,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvolutionReport {
    pub d_max: usize,
    pub m_max: u32,
    pub coefficients_checked: usize,
    pub passed: bool,
    pub counterexample: Option<EvolutionMismatch>,
}

fn compare_series(lhs: &PolySeries, rhs: &PolySeries, d_max: usize, m_top: u32) -> EvolutionReport {
    let mut checked = 0;
    for d in 0..=d_max {
        for delta in enumerate_partitions(d) {
            for m in 0..m_top {
                checked += 1;
                let (a, b) = (lhs.coeff(m, &delta), rhs.coeff(m, &delta));
                if a != b {
                    return EvolutionReport {
                        d_max,
                        m_max: m_top,
                        coefficients_checked: checked,
                        passed: false,
                        counterexample: Some(EvolutionMismatch {
                            m,
                            delta,
                            lhs: a,
                            rhs: b,
                        }),
                    };
                }
            }
        }
    }
    EvolutionReport {
        d_max,
        m_max: m_top,
        coefficients_checked: checked,
        passed: true,
        counterexample: None,
    }
}

/// Checks `∂_u F° = L° F°` on a given table. Only `u^m` with `m < m_max`
/// is compared, since `∂_u` consumes one order.
pub fn check_cutjoin_evolution(table: &HurwitzTable) -> EvolutionReport {
    let f = table.to_series();
    let lhs = f.d_du();
    let rhs = f.map_slices(cut_and_join_apply);
    compare_series(&lhs, &rhs, table.d_max, table.m_max)
}

/// Builds `F°` for `|Δ| ≤ d_max`, `m ≤ m_max` and checks the cut-and-join
/// evolution.
pub fn verify_cutjoin_evolution(d_max: usize, m_max: u32) -> Result<EvolutionReport> {
    Ok(check_cutjoin_evolution(&generating_series(d_max, m_max)?))
}

/// Checks the connected form
/// `∂_u F• = L° F• + ½ Σ_{a,b} ab p_{a+b} ∂_a F• ∂_b F•` on a table of
/// connected numbers.
pub fn check_connected_evolution(connected: &HurwitzTable) -> EvolutionReport {
    let f = connected.to_series();
    let lhs = f.d_du();
    let mut rhs = f.map_slices(cut_and_join_apply);
    let d_max = connected.d_max as u32;
    let partials: Vec<PolySeries> = (0..=d_max)
        .map(|a| {
            if a == 0 {
                PolySeries::zero(connected.d_max, connected.m_max)
            } else {
                f.map_slices(|g| g.derivative(a))
            }
        })
        .collect();
    for a in 1..=d_max {
        for b in 1..=d_max - a {
            let prod = partials[a as usize].mul(&partials[b as usize]);
            let glued = prod.map_slices(|g| g.mul_monomial(&Partition::row(a + b)));
            rhs = rhs.add(&glued.scale(&rational::ratio((a * b) as i64, 2)));
        }
    }
    compare_series(&lhs, &rhs, connected.d_max, connected.m_max)
}

/// `F•` from `F°` for `|Δ| ≤ d_max`, then the connected evolution check.
pub fn verify_connected_evolution(d_max: usize, m_max: u32) -> Result<EvolutionReport> {
    let connected = connected_log(&generating_series(d_max, m_max)?)?;
    Ok(check_connected_evolution(&connected))
}

/// The `u^m` coefficient of the table's series, restricted to weight `d`.
pub fn weight_slice(table: &HurwitzTable, m: u32, d: usize) -> PowerSumPoly {
    table.to_series().u_slice(m).slice(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn h(e: i64, profiles: &[&[u32]]) -> Rational {
        let ps: Vec<Partition> = profiles.iter().map(|x| p(x)).collect();
        hurwitz(&HurwitzQuery::new(SurfaceSpec::with_euler(e).unwrap(), ps).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(h(2, &[&[3], &[3], &[3]]), ratio(1, 3));
        assert_eq!(h(2, &[&[3], &[3], &[2, 1]]), int(0));
        assert_eq!(h(0, &[&[1, 1], &[1, 1]]), int(2));
        assert_eq!(h(0, &[&[2], &[2]]), int(2));
        assert_eq!(h(0, &[&[2], &[1, 1]]), int(0));
        let q = HurwitzQuery::unbranched(SurfaceSpec::sphere(), 2);
        assert_eq!(hurwitz(&q).unwrap(), ratio(1, 2));
    }

    #[test]
    fn sphere_two_point_is_inverse_z() {
        for d in 1..=5 {
            for a in enumerate_partitions(d) {
                for b in enumerate_partitions(d) {
                    let v = hurwitz_number(2, d, &[a.clone(), b.clone()]).unwrap();
                    let want = if a == b {
                        ratio(1, a.z() as i64)
                    } else {
                        int(0)
                    };
                    assert_eq!(v, want, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn mixed_weights_rejected() {
        let err = HurwitzQuery::new(SurfaceSpec::sphere(), vec![p(&[2]), p(&[2, 1])]).unwrap_err();
        assert!(matches!(err, Error::WeightMismatch { .. }));
        assert!(HurwitzQuery::new(SurfaceSpec::sphere(), vec![]).is_err());
    }

    #[test]
    fn surface_validation() {
        assert!(SurfaceSpec::new(3, true).is_err());
        assert!(SurfaceSpec::new(1, true).is_err());
        assert!(SurfaceSpec::new(2, false).is_err());
        assert_eq!(SurfaceSpec::new(-1, false).unwrap().genus(), 3);
        assert_eq!(SurfaceSpec::new(-2, true).unwrap().genus(), 2);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius_functional(&p(&[1])).unwrap(), int(1));
        assert_eq!(moebius_functional(&p(&[1, 1])).unwrap(), int(2));
        assert_eq!(moebius_functional(&p(&[2])).unwrap(), int(0));
        assert_eq!(moebius_functional(&p(&[1, 1, 1])).unwrap(), int(4));
        for d in 1..=6 {
            for delta in enumerate_partitions(d) {
                assert_eq!(
                    moebius_functional(&delta).unwrap(),
                    moebius_character_sum(&delta).unwrap()
                );
            }
        }
    }

    #[test]
    fn cut_examples() {
        let r = verify_handle_cut(2, 2, &[p(&[1, 1])]).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, int(2));
        assert!(verify_handle_cut(2, 3, &[p(&[3])]).unwrap().passed);
        assert!(verify_handle_cut(1, 3, &[p(&[2, 1])]).unwrap().passed);
        let r = verify_surface_cut(2, 2, 3, &[p(&[3]), p(&[3])], &[p(&[3])]).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, ratio(1, 3));
        assert!(verify_surface_cut(2, 0, 2, &[p(&[2])], &[]).unwrap().passed);
        assert!(verify_moebius_cut(2, 1, &[]).unwrap().passed);
    }

    #[test]
    fn cut_suite_small() {
        let r = verify_cut_suite(3, &[2, 1, 0, -1]).unwrap();
        assert!(r.passed, "{:?}", r.failures.first());
        assert!(r.checked > 100);
    }

    #[test]
    fn deformed_basics() {
        let q = HurwitzQuery::new(SurfaceSpec::sphere(), vec![p(&[2]), p(&[2])]).unwrap();
        let s = ratio(3, 2);
        let t = deformed_hurwitz(&q, &s, 4).unwrap();
        assert_eq!(t.coeff1(0), hurwitz(&q).unwrap());
        let flat = deformed_hurwitz(&q, &int(1), 4).unwrap();
        for k in 1..=4 {
            assert!(flat.coeff1(k).is_zero());
        }
        // One sheet: e^{t(s − 1/s)}.
        let q1 = HurwitzQuery::new(SurfaceSpec::sphere(), vec![p(&[1])]).unwrap();
        let want = TSeries::exp_linear(&[&s - s.recip()], 5);
        assert_eq!(deformed_hurwitz(&q1, &s, 5).unwrap(), want);
    }

    #[test]
    fn one_hurwitz_values() {
        assert_eq!(one_hurwitz(0, &p(&[1, 1])).unwrap(), ratio(1, 2));
        assert_eq!(one_hurwitz(2, &p(&[1, 1])).unwrap(), ratio(1, 2));
        assert_eq!(one_hurwitz(1, &p(&[2])).unwrap(), ratio(1, 2));
        assert_eq!(one_hurwitz(3, &p(&[1])).unwrap(), int(0));
    }

    #[test]
    fn evolution_and_log() {
        assert!(verify_cutjoin_evolution(3, 3).unwrap().passed);
        let t = generating_series(3, 2).unwrap();
        let c = connected_log(&t).unwrap();
        assert_eq!(c.get(0, &p(&[1])), int(1));
        assert_eq!(c.get(0, &p(&[1, 1])), int(0));
        assert!(check_connected_evolution(&c).passed);
        let mut bad = t.clone();
        bad.set(1, &p(&[2]), ratio(7, 3));
        assert!(!check_cutjoin_evolution(&bad).passed);
    }
}
