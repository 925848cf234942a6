//! 2D Yang–Mills partition functions and Wilson-loop correlators, the
//! hypergeometric and Jucys–Murphy tau series, and the `1/N` expansion of
//! Yang–Mills correlators in Hurwitz numbers.
//!
//! Every `λ`-sum is truncated at `|λ| ≤ d_max` and restricted to `ℓ(λ) ≤ N`,
//! where `s_λ(𝕀_N)` would vanish. In exact mode the coupling (`ρ` or `t`) is
//! a formal variable and the output is a truncated power series in it;
//! numeric mode evaluates everything in `f64`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::hurwitz::{deformed_hurwitz_jm, HurwitzQuery, SurfaceSpec};
use crate::oracles::tuple::ProfileTally;
use crate::oracles::wick::{wick_contract, CombinatorialMap};
use crate::partitions::Partition;
use crate::rational::{self, factorial, int, powi, Rational};
use crate::series::{Laurent, TSeries};
use crate::symfun::{
    completed_cycle_eigen, content_product_at, phi_coefficient, phi_or_zero,
    principal_specialization, principal_specialization_at, tilde_phi,
};

/// `c₂ = Σ_{i=1}^{N} (λ_i − i + N)²`, with `λ` padded by zeros.
pub fn casimir(lambda: &Partition, n: i64) -> Result<i64> {
    check_length(lambda, n)?;
    Ok((1..=n)
        .map(|i| {
            let x = lambda.part(i as usize - 1) as i64 - i + n;
            x * x
        })
        .sum())
}

/// `c₂(∅) = (N−1)N(2N−1)/6`, the offset carried by every diagram.
pub fn casimir_offset(n: i64) -> i64 {
    (n - 1) * n * (2 * n - 1) / 6
}

/// `Σ_{i=1}^{N} (λ_i − i + N + ½)²`, the tau-function exponent.
pub fn tau_exponent(lambda: &Partition, n: i64) -> Result<Rational> {
    check_length(lambda, n)?;
    Ok((1..=n)
        .map(|i| {
            let x = int(lambda.part(i as usize - 1) as i64 - i + n) + rational::ratio(1, 2);
            &x * &x
        })
        .sum())
}

fn check_length(lambda: &Partition, n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "N must be positive, got {n}"
        )));
    }
    if lambda.len() as i64 > n {
        return Err(Error::InvalidArgument(format!(
            "{lambda} has more than N = {n} rows"
        )));
    }
    Ok(())
}

/// `dim_G λ = s_λ(𝕀_N) = (dimλ/d!) (N)_λ`.
pub fn dim_g(lambda: &Partition, n: i64) -> Result<Rational> {
    check_length(lambda, n)?;
    principal_specialization_at(lambda, n)
}

/// A conjugacy class of `U(N)`, through the power sums of its eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassSpec {
    /// Formal power sums `p_m(Θ)`; results stay polynomials in them.
    Symbolic,
    /// The identity, `p_m = N`.
    Identity,
    /// Exact power sums `p_1, p_2, …`.
    PowerSums {
        #[serde(with = "rational_list")]
        values: Vec<Rational>,
    },
    /// Eigenvalues `exp(2πi r)` given by the fractions of a turn `r`.
    /// Numeric mode only.
    Turns {
        #[serde(with = "rational_list")]
        turns: Vec<Rational>,
    },
    /// Eigenvalues as complex numbers `[re, im]`. Numeric mode only.
    Eigenvalues { values: Vec<[f64; 2]> },
}

mod rational_list {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        xs.iter()
            .map(rational::to_string)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Num {
            Int(i64),
            Float(f64),
            Str(String),
        }
        Vec::<Num>::deserialize(d)?
            .into_iter()
            .map(|x| match x {
                Num::Int(i) => Ok(rational::int(i)),
                Num::Str(s) => rational::parse(&s).map_err(serde::de::Error::custom),
                Num::Float(f) => rational::parse(&f.to_string()).map_err(serde::de::Error::custom),
            })
            .collect()
    }
}

impl ClassSpec {
    /// `p_m(Θ)` when it is an exact rational.
    fn exact_power_sum(&self, m: u32, n: i64) -> Result<Option<Rational>> {
        match self {
            ClassSpec::Symbolic => Ok(None),
            ClassSpec::Identity => Ok(Some(int(n))),
            ClassSpec::PowerSums { values } => values
                .get(m as usize - 1)
                .cloned()
                .map(Some)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "power sum p_{m} needed but only {} given",
                        values.len()
                    ))
                }),
            ClassSpec::Turns { .. } | ClassSpec::Eigenvalues { .. } => Err(Error::InvalidArgument(
                "eigenvalue classes are only supported in numeric mode".into(),
            )),
        }
    }

    fn numeric_power_sum(&self, m: u32, n: i64) -> Result<Complex64> {
        match self {
            ClassSpec::Symbolic => Err(Error::InvalidArgument(
                "symbolic classes are only supported in exact mode".into(),
            )),
            ClassSpec::Identity => Ok(Complex64::new(n as f64, 0.0)),
            ClassSpec::PowerSums { values } => values
                .get(m as usize - 1)
                .map(|v| Complex64::new(rational::to_f64(v), 0.0))
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "power sum p_{m} needed but only {} given",
                        values.len()
                    ))
                }),
            ClassSpec::Turns { turns } => Ok(turns
                .iter()
                .map(|r| Complex64::from_polar(1.0, 2.0 * PI * rational::to_f64(r) * m as f64))
                .sum()),
            ClassSpec::Eigenvalues { values } => Ok(values
                .iter()
                .map(|&[re, im]| Complex64::new(re, im).powu(m))
                .sum()),
        }
    }
}

/// `s_λ = Σ_Δ (χ_λ(Δ)/z_Δ) p_Δ`, nonzero terms only.
fn schur_terms(table: &CharacterTable, i: usize) -> Vec<(Partition, Rational)> {
    table
        .partitions()
        .iter()
        .enumerate()
        .filter(|&(j, _)| table.chi_at(i, j) != 0)
        .map(|(j, delta)| {
            (
                delta.clone(),
                rational::ratio(table.chi_at(i, j), delta.z() as i64),
            )
        })
        .collect()
}

/// Key of a [`TruncatedSeries`] coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SeriesKey {
    /// `|λ|`.
    pub d: usize,
    /// Power of the formal coupling.
    pub power: u32,
    /// One partition `Δ` per symbolic class: the monomial `∏ p_Δ(Θ)`.
    pub classes: Vec<Partition>,
}

/// Exact series, complete for `|λ| ≤ d_max` and coupling order `≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub d_max: usize,
    pub order: u32,
    terms: BTreeMap<SeriesKey, Rational>,
}

impl TruncatedSeries {
    pub fn new(d_max: usize, order: u32) -> Self {
        TruncatedSeries {
            d_max,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, key: SeriesKey, c: Rational) {
        if c.is_zero() || key.power > self.order || key.d > self.d_max {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, d: usize, power: u32, classes: &[Partition]) -> Rational {
        self.terms
            .get(&SeriesKey {
                d,
                power,
                classes: classes.to_vec(),
            })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SeriesKey, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum over `d` of the coefficients of `coupling^power`, for series
    /// without symbolic classes.
    pub fn total(&self, power: u32) -> Rational {
        self.terms
            .iter()
            .filter(|(k, _)| k.power == power)
            .map(|(_, v)| v.clone())
            .sum()
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            d: usize,
            power: u32,
            classes: &'a [Partition],
            value: String,
        }
        #[derive(Serialize)]
        struct Series<'a> {
            d_max: usize,
            order: u32,
            truncation: String,
            terms: Vec<Term<'a>>,
        }
        Series {
            d_max: self.d_max,
            order: self.order,
            truncation: format!(
                "complete for |λ| ≤ {}, coupling order ≤ {}",
                self.d_max, self.order
            ),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| Term {
                    d: k.d,
                    power: k.power,
                    classes: &k.classes,
                    value: rational::to_string(v),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// `∏_i s_λ(Θ_i)` as a map from symbolic monomials to coefficients.
fn class_product(
    table: &CharacterTable,
    i: usize,
    classes: &[ClassSpec],
    n: i64,
) -> Result<BTreeMap<Vec<Partition>, Rational>> {
    let terms = schur_terms(table, i);
    let mut acc: BTreeMap<Vec<Partition>, Rational> = BTreeMap::new();
    acc.insert(Vec::new(), Rational::one());
    for class in classes {
        if matches!(class, ClassSpec::Symbolic) {
            let mut next = BTreeMap::new();
            for (key, c) in &acc {
                for (delta, x) in &terms {
                    let mut k = key.clone();
                    k.push(delta.clone());
                    next.insert(k, c * x);
                }
            }
            acc = next;
        } else {
            let mut value = Rational::zero();
            for (delta, x) in &terms {
                let mut p = x.clone();
                for &m in delta.parts() {
                    p *= class
                        .exact_power_sum(m, n)?
                        .expect("non-symbolic classes have exact power sums");
                }
                value += p;
            }
            for c in acc.values_mut() {
                *c *= &value;
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(acc)
}

/// `Σ_{|λ| ≤ d_max, ℓ(λ) ≤ N} prefactor(λ) e^{x·rate(λ)} ∏ s_λ(Θ_i)` with
/// `x` formal.
fn assemble(
    d_max: usize,
    order: u32,
    n: i64,
    classes: &[ClassSpec],
    weight: impl Fn(&Partition, &CharacterTable, usize) -> Result<(Rational, Rational)> + Sync,
) -> Result<TruncatedSeries> {
    let mut out = TruncatedSeries::new(d_max, order);
    for d in 0..=d_max {
        let table = character_table(d)?;
        let parts: Vec<(usize, Vec<(SeriesKey, Rational)>)> = table
            .partitions()
            .par_iter()
            .enumerate()
            .filter(|(_, lam)| lam.len() as i64 <= n)
            .map(|(i, lam)| -> Result<_> {
                let (pre, rate) = weight(lam, &table, i)?;
                let classes = class_product(&table, i, classes, n)?;
                let exp = TSeries::exp_linear(&[rate], order);
                let mut terms = Vec::new();
                for (alpha, e) in exp.terms() {
                    for (key, c) in &classes {
                        terms.push((
                            SeriesKey {
                                d,
                                power: alpha[0],
                                classes: key.clone(),
                            },
                            &pre * e * c,
                        ));
                    }
                }
                Ok((i, terms))
            })
            .collect::<Result<_>>()?;
        for (_, terms) in parts {
            for (k, v) in terms {
                out.add_term(k, v);
            }
        }
    }
    Ok(out)
}

/// `Z_Σ(ρ; Θ₁,…,Θ_k) = Σ_λ e^{−ρ c₂/2} (dim_G λ)^{e−k} ∏ s_λ(Θ_i)` as a
/// series in `ρ`.
pub fn ym_correlator(
    e: i64,
    classes: &[ClassSpec],
    n: i64,
    d_max: usize,
    rho_order: u32,
) -> Result<TruncatedSeries> {
    let k = classes.len() as i64;
    assemble(d_max, rho_order, n, classes, |lam, _, _| {
        let pre = powi(&dim_g(lam, n)?, e - k);
        let rate = rational::ratio(-casimir(lam, n)?, 2);
        Ok((pre, rate))
    })
}

/// `Z_Σ(ρ) = Σ_λ e^{−ρ c₂/2} (dim_G λ)^e` as a series in `ρ`.
pub fn ym_partition(e: i64, n: i64, d_max: usize, rho_order: u32) -> Result<TruncatedSeries> {
    ym_correlator(e, &[], n, d_max, rho_order)
}

/// Numeric partial sums, one per degree.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericSeries {
    pub d_max: usize,
    pub by_degree: Vec<Complex64>,
}

impl NumericSeries {
    pub fn total(&self) -> Complex64 {
        self.by_degree.iter().sum()
    }
}

impl Serialize for NumericSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            d_max: usize,
            truncation: String,
            by_degree: Vec<[f64; 2]>,
            total: [f64; 2],
        }
        let t = self.total();
        Out {
            d_max: self.d_max,
            truncation: format!("partial sum over |λ| ≤ {}", self.d_max),
            by_degree: self.by_degree.iter().map(|z| [z.re, z.im]).collect(),
            total: [t.re, t.im],
        }
        .serialize(s)
    }
}

/// [`ym_correlator`] at a numeric coupling and numeric classes. Degrees are
/// summed in the fixed partition order, so results do not depend on
/// scheduling.
pub fn ym_correlator_numeric(
    e: i64,
    rho: f64,
    classes: &[ClassSpec],
    n: i64,
    d_max: usize,
) -> Result<NumericSeries> {
    let k = classes.len() as i64;
    let mut by_degree = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        let table = character_table(d)?;
        let values: Vec<Complex64> = (0..table.len())
            .into_par_iter()
            .filter(|&i| table.partitions()[i].len() as i64 <= n)
            .map(|i| -> Result<Complex64> {
                let lam = &table.partitions()[i];
                let dim = rational::to_f64(&dim_g(lam, n)?);
                let mut v = Complex64::new(
                    (-rho * casimir(lam, n)? as f64 / 2.0).exp() * dim.powi((e - k) as i32),
                    0.0,
                );
                for class in classes {
                    let mut s = Complex64::zero();
                    for (delta, x) in schur_terms(&table, i) {
                        let mut p = Complex64::new(rational::to_f64(&x), 0.0);
                        for &m in delta.parts() {
                            p *= class.numeric_power_sum(m, n)?;
                        }
                        s += p;
                    }
                    v *= s;
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        by_degree.push(values.into_iter().sum());
    }
    Ok(NumericSeries { d_max, by_degree })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TauKind {
    /// Two sets of times: `s_λ(X₁) s_λ(X₂)`.
    Tl,
    /// One set of times: `s_λ(Y)`.
    Bkp,
}

/// `Σ_λ (N^{|λ|}/(N)_λ)^a e^{(t/2) Σ_{i≤N}(λ_i−i+N+½)²} s_λ(X₁) s_λ(X₂)`
/// (TL) or with the single factor `s_λ(Y)` (BKP), as a series in `t`.
pub fn tau_hypergeometric(
    kind: TauKind,
    args: &[ClassSpec],
    a: i64,
    n: i64,
    d_max: usize,
    t_order: u32,
) -> Result<TruncatedSeries> {
    let expected = match kind {
        TauKind::Tl => 2,
        TauKind::Bkp => 1,
    };
    if args.len() != expected {
        return Err(Error::InvalidArgument(format!(
            "{kind:?} tau takes {expected} matrix arguments, got {}",
            args.len()
        )));
    }
    assemble(d_max, t_order, n, args, |lam, _, _| {
        let ratio = rational::big(num_bigint::BigInt::from(n).pow(lam.weight() as u32))
            / content_product_at(lam, n);
        Ok((powi(&ratio, a), tau_exponent(lam, n)? / int(2)))
    })
}

/// Coefficients of the Jucys–Murphy tau functions, keyed by `[Δ¹, Δ²]` for
/// `p_{Δ¹} ∏(1−q^{Δ²_i})^{−1}` (TL) or by `[Δ]` for `∏(1−q^{Δ_i})^{−1}`
/// (BKP), each a series in `t_1, …, t_times`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauJmSeries {
    pub kind: TauKind,
    pub d_max: usize,
    pub entries: BTreeMap<Vec<Partition>, TSeries>,
}

impl TauJmSeries {
    pub fn get(&self, key: &[Partition]) -> Option<&TSeries> {
        self.entries.get(key)
    }
}

impl Serialize for TauJmSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            key: &'a [Partition],
            series: &'a TSeries,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            kind: TauKind,
            d_max: usize,
            entries: Vec<Entry<'a>>,
        }
        Out {
            kind: self.kind,
            d_max: self.d_max,
            entries: self
                .entries
                .iter()
                .map(|(key, series)| Entry { key, series })
                .collect(),
        }
        .serialize(s)
    }
}

/// Rates `q^{km} e_λ(q^m)/m`, `m = 1..=times`, with `q = s²` and
/// `e_λ(q^m)` the completed-cycle eigenvalue at `s^m`.
fn jm_rates(lambda: &Partition, s: &Rational, k: i64, times: usize) -> Result<Vec<Rational>> {
    (1..=times as i64)
        .map(|m| {
            let sm = powi(s, m);
            Ok(powi(s, 2 * k * m) * completed_cycle_eigen(lambda, &sm)? / int(m))
        })
        .collect()
}

/// `τ_k = Σ_λ exp(Σ_m t_m q^{km} e_λ(q^m)/m) s_λ(p) s_λ(p(0,q))` (TL) or
/// with `s_λ(p(0,q))` alone (BKP), where `p_m(0,q) = 1/(1−q^m)` is kept as
/// the formal factor `∏(1−q^{Δ_i})^{−1}` of `p_Δ(0,q)`.
pub fn tau_jm(
    kind: TauKind,
    k: i64,
    s: &Rational,
    times: usize,
    order: u32,
    d_max: usize,
) -> Result<TauJmSeries> {
    if s.is_zero() {
        return Err(Error::InvalidArgument("s must be nonzero (q = s²)".into()));
    }
    if times == 0 {
        return Err(Error::InvalidArgument(
            "at least one time is required".into(),
        ));
    }
    let mut entries: BTreeMap<Vec<Partition>, TSeries> = BTreeMap::new();
    for d in 0..=d_max {
        let table = character_table(d)?;
        for (i, lam) in table.partitions().iter().enumerate() {
            let exp = TSeries::exp_linear(&jm_rates(lam, s, k, times)?, order);
            let terms = schur_terms(&table, i);
            let keys: Vec<(Vec<Partition>, Rational)> = match kind {
                TauKind::Bkp => terms
                    .iter()
                    .map(|(d, x)| (vec![d.clone()], x.clone()))
                    .collect(),
                TauKind::Tl => terms
                    .iter()
                    .flat_map(|(d1, x1)| {
                        terms
                            .iter()
                            .map(move |(d2, x2)| (vec![d1.clone(), d2.clone()], x1 * x2))
                    })
                    .collect(),
            };
            for (key, c) in keys {
                let add = exp.scale(&c);
                let slot = entries
                    .entry(key)
                    .or_insert_with(|| TSeries::zero(times, order));
                *slot = &*slot + &add;
            }
        }
    }
    entries.retain(|_, v| !v.is_zero());
    Ok(TauJmSeries {
        kind,
        d_max,
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TauJmReport {
    pub kind: TauKind,
    pub d_max: usize,
    pub order: u32,
    pub coefficients_checked: usize,
    pub passed: bool,
    pub mismatch: Option<Vec<Partition>>,
}

/// Compares every `τ_k` coefficient with the deformed Hurwitz number
/// `H_{S²}(Δ¹,Δ²;t,k,q)` (TL) or `H_{RP²}(Δ;t,k,q)` (BKP).
pub fn verify_tau_jm(
    kind: TauKind,
    k: i64,
    s: &Rational,
    times: usize,
    order: u32,
    d_max: usize,
) -> Result<TauJmReport> {
    let tau = tau_jm(kind, k, s, times, order, d_max)?;
    let surface = match kind {
        TauKind::Tl => SurfaceSpec::sphere(),
        TauKind::Bkp => SurfaceSpec::projective_plane(),
    };
    let slots = match kind {
        TauKind::Tl => 2,
        TauKind::Bkp => 1,
    };
    let mut checked = 0;
    for d in 1..=d_max {
        for key in ProfileTally::zeros(d, slots, 0).entries.into_keys() {
            checked += 1;
            let q = HurwitzQuery::new(surface, key.clone())?;
            let want = deformed_hurwitz_jm(&q, s, k, times, order)?;
            let got = tau
                .get(&key)
                .cloned()
                .unwrap_or_else(|| TSeries::zero(times, order));
            if got != want {
                return Ok(TauJmReport {
                    kind,
                    d_max,
                    order,
                    coefficients_checked: checked,
                    passed: false,
                    mismatch: Some(key),
                });
            }
        }
    }
    Ok(TauJmReport {
        kind,
        d_max,
        order,
        coefficients_checked: checked,
        passed: true,
        mismatch: None,
    })
}

/// `H̃ = Σ_λ φ̃_λ(i; e) φ_λ(1)^m ∏ φ_λ(Δᵛ) (dimλ/d!)^e`.
pub fn hurwitz_1_over_n(
    e: i64,
    d: usize,
    profiles: &[Partition],
    i: usize,
    m: u32,
) -> Result<Rational> {
    hurwitz_1_over_n_twisted(e, e, d, profiles, i, m)
}

/// As [`hurwitz_1_over_n`], with `φ̃_λ(i; tilde_e)` in place of `φ̃_λ(i; e)`.
/// A correlator with `k` classes expands `(dim_G λ)^{e−k}`, so its `1/N`
/// coefficients use `tilde_e = e − k`.
pub fn hurwitz_1_over_n_twisted(
    e: i64,
    tilde_e: i64,
    d: usize,
    profiles: &[Partition],
    i: usize,
    m: u32,
) -> Result<Rational> {
    if let Some(bad) = profiles.iter().find(|p| p.weight() != d) {
        return Err(crate::characters::weight_mismatch(&Partition::ones(d), bad));
    }
    let table = character_table(d)?;
    let cols = profiles
        .iter()
        .map(|p| table.index_of(p))
        .collect::<Result<Vec<_>>>()?;
    let mut total = Rational::zero();
    for (idx, lam) in table.partitions().iter().enumerate() {
        let mut w = tilde_phi(lam, i, tilde_e)? * powi(&phi_or_zero(lam, 1)?, m as i64);
        if w.is_zero() {
            continue;
        }
        for &j in &cols {
            w *= table.phi_at(idx, j);
        }
        total += w * powi(&table.dim_ratio_at(idx), e);
    }
    Ok(total)
}

/// Coefficients of `ρ^m N^{p} ∏_v p_{Δᵛ}(Θ_v)` in the degree-`d` part of
/// Coefficients keyed by `(power of ρ, power of N, class monomial)`.
pub type LargeNCoefficients = BTreeMap<(u32, i64, Vec<Partition>), Rational>;

/// `Z_Σ(ρ; Θ₁,…,Θ_k)` divided by `e^{−ρ(c₂(∅)+(2N−1)d)/2} N^{(e−k)d}`,
/// with `N` symbolic, `m ≤ rho_order` and `p ≥ −depth`.
pub fn large_n_correlator(
    e: i64,
    k: usize,
    d: usize,
    rho_order: u32,
    depth: i64,
) -> Result<LargeNCoefficients> {
    let table = character_table(d)?;
    let ek = e - k as i64;
    let shift = -ek * d as i64;
    let floor = -depth;
    let mut out = LargeNCoefficients::new();
    for (idx, lam) in table.partitions().iter().enumerate() {
        // c₂(N) − c₂(∅)(N), from the padded definition: only the first ℓ(λ)
        // rows differ.
        let mut q = Laurent::zero();
        for i in 1..=lam.len() as i64 {
            let row = Laurent::x_plus(lam.part(i as usize - 1) as i64 - i);
            let empty = Laurent::x_plus(-i);
            q = q + (&row * &row - &empty * &empty);
        }
        q = q - Laurent::x_plus(0).scale(&int(2 * d as i64)) + Laurent::constant(int(d as i64));
        let half = q.scale(&rational::ratio(-1, 2));
        let dim = principal_specialization(lam)?
            .powi(ek, floor - shift)
            .shift(shift)
            .with_floor(floor);
        let classes: Vec<Vec<(Partition, Rational)>> = vec![schur_terms(&table, idx); k];
        let mut monomials: Vec<(Vec<Partition>, Rational)> = vec![(Vec::new(), Rational::one())];
        for terms in &classes {
            monomials = monomials
                .into_iter()
                .flat_map(|(key, c)| {
                    terms.iter().map(move |(delta, x)| {
                        let mut kk = key.clone();
                        kk.push(delta.clone());
                        (kk, &c * x)
                    })
                })
                .collect();
        }
        let mut power = Laurent::one();
        for m in 0..=rho_order {
            if m > 0 {
                power = (&power * &half).scale(&rational::ratio(1, m as i64));
            }
            let term = (&power * &dim).with_floor(floor);
            for (p, c) in term.terms() {
                for (key, x) in &monomials {
                    *out.entry((m, *p, key.clone()))
                        .or_insert_with(Rational::zero) += c * x;
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct TildeHReport {
    pub e: i64,
    pub classes: usize,
    pub d_max: usize,
    pub rho_order: u32,
    pub depth: usize,
    pub coefficients_checked: usize,
    pub passed: bool,
    pub mismatch: Option<String>,
}

/// Checks that the `ρ^m N^{−i}` coefficients of [`large_n_correlator`]
/// equal `(−1)^m/m! · H̃` with `φ̃(i; e−k)`, and that no positive powers of
/// `N` survive the normalization.
pub fn verify_tilde_h(
    e: i64,
    k: usize,
    d_max: usize,
    rho_order: u32,
    depth: usize,
) -> Result<TildeHReport> {
    let mut checked = 0;
    let fail = |msg: String, checked| TildeHReport {
        e,
        classes: k,
        d_max,
        rho_order,
        depth,
        coefficients_checked: checked,
        passed: false,
        mismatch: Some(msg),
    };
    for d in 1..=d_max {
        let got = large_n_correlator(e, k, d, rho_order, depth as i64)?;
        if let Some(((m, p, key), v)) = got.iter().find(|((_, p, _), _)| *p > 0) {
            return Ok(fail(
                format!("d={d}: positive power N^{p} at ρ^{m} {key:?} with coefficient {v}"),
                checked,
            ));
        }
        for key in ProfileTally::zeros(d, k, 0).entries.into_keys() {
            for m in 0..=rho_order {
                for i in 0..=depth {
                    checked += 1;
                    let sign = if m % 2 == 0 { 1 } else { -1 };
                    let want = hurwitz_1_over_n_twisted(e, e - k as i64, d, &key, i, m)?
                        * int(sign)
                        / rational::big(factorial(m as usize));
                    let have = got
                        .get(&(m, -(i as i64), key.clone()))
                        .cloned()
                        .unwrap_or_else(Rational::zero);
                    if have != want {
                        return Ok(fail(
                            format!("d={d} ρ^{m} N^-{i} {key:?}: {have} vs {want}"),
                            checked,
                        ));
                    }
                }
            }
        }
    }
    Ok(TildeHReport {
        e,
        classes: k,
        d_max,
        rho_order,
        depth,
        coefficients_checked: checked,
        passed: true,
        mismatch: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CharMapReport {
    pub d_max: usize,
    pub exponents: Vec<i64>,
    pub diagrams_checked: usize,
    pub passed: bool,
    pub counterexample: Option<Partition>,
}

/// `s_λ(𝕀_N) = (dimλ/d!) N^d (1 + Σ_{0<k<d} φ_λ(k) N^{−k})` as polynomials
/// in `N`, with the left side from the power-sum expansion at `p_m = N`;
/// and `s_λ(𝕀_N)^e = (dimλ/d!)^e N^{ed} (1 + Σ_k φ̃_λ(k;e) N^{−k})` for
/// each exponent, through `N^{ed−depth}`.
pub fn verify_char_map(d_max: usize, exponents: &[i64], depth: usize) -> Result<CharMapReport> {
    let mut checked = 0;
    for d in 1..=d_max {
        let table = character_table(d)?;
        for (idx, lam) in table.partitions().iter().enumerate() {
            checked += 1;
            let mut lhs = Laurent::zero();
            for (delta, x) in schur_terms(&table, idx) {
                lhs.add_term(delta.len() as i64, x);
            }
            let r = table.dim_ratio_at(idx);
            let mut rhs = Laurent::monomial(d as i64, r.clone());
            for k in 1..d {
                rhs.add_term(d as i64 - k as i64, &r * phi_coefficient(lam, k)?);
            }
            let mut ok = lhs == rhs && lhs == principal_specialization(lam)?;
            for &e in exponents {
                let top = e * d as i64;
                let floor = top - depth as i64;
                let got = lhs.powi(e, floor);
                let re = powi(&r, e);
                let mut want = Laurent::monomial(top, re.clone()).with_floor(floor);
                for k in 1..=depth {
                    want.add_term(top - k as i64, &re * tilde_phi(lam, k, e)?);
                }
                ok &= got == want;
            }
            if !ok {
                return Ok(CharMapReport {
                    d_max,
                    exponents: exponents.to_vec(),
                    diagrams_checked: checked,
                    passed: false,
                    counterexample: Some(lam.clone()),
                });
            }
        }
    }
    Ok(CharMapReport {
        d_max,
        exponents: exponents.to_vec(),
        diagrams_checked: checked,
        passed: true,
        counterexample: None,
    })
}

/// Wick tallies of one map for every assignment of face profiles.
pub struct MapMoments {
    map: CombinatorialMap,
    d: usize,
    tallies: BTreeMap<Vec<Partition>, ProfileTally>,
}

impl MapMoments {
    pub fn new(map: &CombinatorialMap, d: usize, budget: u128) -> Result<Self> {
        map.validate()?;
        let faces = map.faces.len();
        let mut tallies = BTreeMap::new();
        for key in ProfileTally::zeros(d, faces, 0).entries.into_keys() {
            let t = wick_contract(&map.with_profiles(&key)?, d, budget)?;
            tallies.insert(key, t);
        }
        Ok(MapMoments {
            map: map.clone(),
            d,
            tallies,
        })
    }

    /// `∫ ∏_j s_{λʲ}(M(c_j)) dΩ` as coefficients of `∏_v p_{Δ̃ᵛ}(𝒜_v)`,
    /// at size `N`. Zero when the `λʲ` differ in weight: the Gaussian
    /// pairing then has unequal numbers of `Z` and `Ẑ`.
    pub fn schur_integral(
        &self,
        lambdas: &[Partition],
        n: i64,
    ) -> Result<BTreeMap<Vec<Partition>, Rational>> {
        if lambdas.len() != self.map.faces.len() {
            return Err(Error::InvalidArgument(format!(
                "{} diagrams for {} faces",
                lambdas.len(),
                self.map.faces.len()
            )));
        }
        let mut out: BTreeMap<Vec<Partition>, Rational> = BTreeMap::new();
        if lambdas.iter().any(|l| l.weight() != self.d) {
            return Ok(out);
        }
        let table = character_table(self.d)?;
        let rows = lambdas
            .iter()
            .map(|l| table.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        let scale = powi(&int(n), -((self.map.edges() * self.d) as i64));
        for (profiles, tally) in &self.tallies {
            let mut chi = Rational::one();
            for (&i, p) in rows.iter().zip(profiles) {
                chi *= int(table.chi_at(i, table.index_of(p)?));
            }
            if chi.is_zero() {
                continue;
            }
            // Tally entries carry 1/∏z_Δ; the expansion of s_λ carries the
            // same factor, so the integral of ∏ p_Δ is ∏z_Δ times the tally.
            for (towers, v) in &tally.entries {
                if v.is_zero() {
                    continue;
                }
                *out.entry(towers.clone()).or_insert_with(Rational::zero) += &chi * v * &scale;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

/// Right side of the Schur expectation: for equal diagrams `λ`,
/// `((N)_λ/N^d)ⁿ s_λ(𝕀_N)^{−n} ∏_v s_λ(𝒜_v)`; otherwise zero.
pub fn schur_expectation_rhs(
    lambdas: &[Partition],
    edges: usize,
    towers: usize,
    n: i64,
) -> Result<BTreeMap<Vec<Partition>, Rational>> {
    let mut out = BTreeMap::new();
    let Some(lam) = lambdas.first() else {
        return Ok(out);
    };
    if lambdas.iter().any(|l| l != lam) {
        return Ok(out);
    }
    let d = lam.weight();
    let table = character_table(d)?;
    let idx = table.index_of(lam)?;
    let ne = edges as i64;
    let pre = powi(&(content_product_at(lam, n) / powi(&int(n), d as i64)), ne)
        * powi(&principal_specialization_at(lam, n)?, -ne);
    let mut monomials: Vec<(Vec<Partition>, Rational)> = vec![(Vec::new(), pre)];
    let terms = schur_terms(&table, idx);
    for _ in 0..towers {
        monomials = monomials
            .into_iter()
            .flat_map(|(key, c)| {
                terms.iter().map(move |(delta, x)| {
                    let mut k = key.clone();
                    k.push(delta.clone());
                    (k, &c * x)
                })
            })
            .collect();
    }
    for (k, v) in monomials {
        out.insert(k, v);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurExpectationReport {
    pub lambdas: Vec<Partition>,
    pub n: i64,
    pub terms: usize,
    pub passed: bool,
}

/// Wick route against the closed form, for one assignment of diagrams to
/// faces, evaluated at an integer `N ≥ d`.
pub fn verify_schur_expectation(
    map: &CombinatorialMap,
    lambdas: &[Partition],
    n: i64,
    budget: u128,
) -> Result<SchurExpectationReport> {
    let d = lambdas.first().map(Partition::weight).unwrap_or(0);
    let lhs = if lambdas.iter().all(|l| l.weight() == d) {
        MapMoments::new(map, d, budget)?.schur_integral(lambdas, n)?
    } else {
        BTreeMap::new()
    };
    let rhs = schur_expectation_rhs(lambdas, map.edges(), map.towers(), n)?;
    Ok(SchurExpectationReport {
        lambdas: lambdas.to_vec(),
        n,
        terms: rhs.len().max(lhs.len()),
        passed: lhs == rhs,
    })
}

/// A tau-function factor of the integrand, consuming faces in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TauBlock {
    /// `τ^A(M(c), M(c'), t, a)` on two consecutive faces.
    Handle {
        a: i64,
        #[serde(with = "crate::rational::serde_str")]
        weight: Rational,
    },
    /// `τ^B(M(c), t, a)` on one face.
    Moebius {
        a: i64,
        #[serde(with = "crate::rational::serde_str")]
        weight: Rational,
    },
    /// `τ^A(M(c), Θ, t, a)` on one face with a symbolic class `Θ`.
    Theta {
        a: i64,
        #[serde(with = "crate::rational::serde_str")]
        weight: Rational,
    },
}

impl TauBlock {
    fn faces(&self) -> usize {
        match self {
            TauBlock::Handle { .. } => 2,
            _ => 1,
        }
    }

    fn a(&self) -> i64 {
        match self {
            TauBlock::Handle { a, .. }
            | TauBlock::Moebius { a, .. }
            | TauBlock::Theta { a, .. } => *a,
        }
    }

    fn weight(&self) -> &Rational {
        match self {
            TauBlock::Handle { weight, .. }
            | TauBlock::Moebius { weight, .. }
            | TauBlock::Theta { weight, .. } => weight,
        }
    }
}

/// A tau-integral instance: a map and one block per group of faces.
#[derive(Clone, Debug, Serialize)]
pub struct IntTauCase {
    pub name: String,
    pub map: CombinatorialMap,
    pub blocks: Vec<TauBlock>,
}

impl IntTauCase {
    fn counts(&self) -> (usize, usize, usize) {
        let h = self
            .blocks
            .iter()
            .filter(|b| matches!(b, TauBlock::Handle { .. }))
            .count();
        let m = self
            .blocks
            .iter()
            .filter(|b| matches!(b, TauBlock::Moebius { .. }))
            .count();
        (h, m, self.map.faces.len())
    }

    /// `F − n + V − 2H − M`.
    pub fn euler(&self) -> i64 {
        let (h, m, f) = self.counts();
        f as i64 - self.map.edges() as i64 + self.map.towers() as i64 - 2 * h as i64 - m as i64
    }

    fn thetas(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| matches!(b, TauBlock::Theta { .. }))
            .count()
    }

    fn validate(&self) -> Result<()> {
        let faces: usize = self.blocks.iter().map(TauBlock::faces).sum();
        if faces != self.map.faces.len() {
            return Err(Error::InvalidArgument(format!(
                "blocks cover {faces} faces, map has {}",
                self.map.faces.len()
            )));
        }
        let a: i64 = self.blocks.iter().map(TauBlock::a).sum();
        if a != self.map.edges() as i64 {
            return Err(Error::InvalidArgument(format!(
                "block exponents sum to {a}, expected n = {}",
                self.map.edges()
            )));
        }
        let w: Rational = self.blocks.iter().map(|b| b.weight().clone()).sum();
        if !w.is_one() {
            return Err(Error::InvalidArgument(format!(
                "block couplings sum to {}, expected 1",
                rational::to_string(&w)
            )));
        }
        Ok(())
    }
}

/// The three block layouts `(H, M, F) = (0,0,1), (0,1,1), (1,0,2)` on the
/// two example maps, and a theta-graph sphere with one handle block.
pub fn int_tau_cases() -> Vec<IntTauCase> {
    use crate::oracles::wick::{sphere_theta, sphere_two_faces, torus_one_face};
    let one = Partition::ones(1);
    let w = |a: i64, b: i64| rational::ratio(a, b);
    vec![
        IntTauCase {
            name: "(0,0,1) torus, one theta block".into(),
            map: torus_one_face(one.clone()),
            blocks: vec![TauBlock::Theta {
                a: 2,
                weight: w(1, 1),
            }],
        },
        IntTauCase {
            name: "(0,1,1) torus, one cross-cap block".into(),
            map: torus_one_face(one.clone()),
            blocks: vec![TauBlock::Moebius {
                a: 2,
                weight: w(1, 1),
            }],
        },
        IntTauCase {
            name: "(1,0,2) two one-gons, one handle block".into(),
            map: sphere_two_faces(one.clone(), one.clone()),
            blocks: vec![TauBlock::Handle {
                a: 1,
                weight: w(1, 1),
            }],
        },
        IntTauCase {
            name: "(1,0,3) theta sphere, handle and theta blocks".into(),
            map: sphere_theta([one.clone(), one.clone(), one]),
            blocks: vec![
                TauBlock::Handle {
                    a: 2,
                    weight: w(1, 3),
                },
                TauBlock::Theta {
                    a: 1,
                    weight: w(2, 3),
                },
            ],
        },
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct IntTauReport {
    pub name: String,
    pub euler: i64,
    pub n: i64,
    pub d_max: usize,
    pub rho_order: u32,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub passed: bool,
}

/// Integrates the product of tau blocks term by term with Wick tallies and
/// compares with `Σ_λ e^{(ρ/2)Σ_{i≤N}(λ_i−i+N+½)²} s_λ(𝕀_N)^{−n}
/// ∏ s_λ(Θ) ∏_v s_λ(𝒜_v)`. Symbolic monomials list the `Θ`s in block order,
/// then the towers.
pub fn verify_int_tau(
    case: &IntTauCase,
    n: i64,
    d_max: usize,
    rho_order: u32,
    budget: u128,
) -> Result<IntTauReport> {
    case.validate()?;
    if n < d_max as i64 {
        return Err(Error::InvalidArgument(format!(
            "N = {n} must be at least d_max = {d_max}"
        )));
    }
    let edges = case.map.edges() as i64;
    let towers = case.map.towers();
    let mut lhs = TruncatedSeries::new(d_max, rho_order);
    let mut rhs = TruncatedSeries::new(d_max, rho_order);
    for d in 0..=d_max {
        let table = character_table(d)?;
        let moments = MapMoments::new(&case.map, d, budget)?;
        let diagrams = table.partitions();
        // One diagram per block; every combination of degree d.
        for choice in ProfileTally::zeros(d, case.blocks.len(), 0)
            .entries
            .into_keys()
        {
            let mut faces = Vec::new();
            let mut pre = Rational::one();
            let mut rate = Rational::zero();
            let mut thetas: Vec<Vec<(Partition, Rational)>> = Vec::new();
            for (block, lam) in case.blocks.iter().zip(&choice) {
                faces.extend(std::iter::repeat_n(lam.clone(), block.faces()));
                let ratio = powi(&int(n), d as i64) / content_product_at(lam, n);
                pre *= powi(&ratio, block.a());
                rate += block.weight() * tau_exponent(lam, n)? / int(2);
                if matches!(block, TauBlock::Theta { .. }) {
                    thetas.push(schur_terms(&table, table.index_of(lam)?));
                }
            }
            let integral = moments.schur_integral(&faces, n)?;
            if integral.is_empty() {
                continue;
            }
            let exp = TSeries::exp_linear(&[rate], rho_order);
            let mut theta_monomials: Vec<(Vec<Partition>, Rational)> = vec![(Vec::new(), pre)];
            for terms in &thetas {
                theta_monomials = theta_monomials
                    .into_iter()
                    .flat_map(|(key, c)| {
                        terms.iter().map(move |(delta, x)| {
                            let mut k = key.clone();
                            k.push(delta.clone());
                            (k, &c * x)
                        })
                    })
                    .collect();
            }
            for (alpha, ex) in exp.terms() {
                for (tk, tc) in &theta_monomials {
                    for (ak, ac) in &integral {
                        let mut classes = tk.clone();
                        classes.extend(ak.iter().cloned());
                        lhs.add_term(
                            SeriesKey {
                                d,
                                power: alpha[0],
                                classes,
                            },
                            ex * tc * ac,
                        );
                    }
                }
            }
        }
        for (idx, lam) in diagrams.iter().enumerate() {
            let pre = powi(&principal_specialization_at(lam, n)?, -edges);
            let exp = TSeries::exp_linear(&[tau_exponent(lam, n)? / int(2)], rho_order);
            let terms = schur_terms(&table, idx);
            let mut monomials: Vec<(Vec<Partition>, Rational)> = vec![(Vec::new(), pre)];
            for _ in 0..case.thetas() + towers {
                monomials = monomials
                    .into_iter()
                    .flat_map(|(key, c)| {
                        terms.iter().map(move |(delta, x)| {
                            let mut k = key.clone();
                            k.push(delta.clone());
                            (k, &c * x)
                        })
                    })
                    .collect();
            }
            for (alpha, ex) in exp.terms() {
                for (key, c) in &monomials {
                    rhs.add_term(
                        SeriesKey {
                            d,
                            power: alpha[0],
                            classes: key.clone(),
                        },
                        ex * c,
                    );
                }
            }
        }
    }
    Ok(IntTauReport {
        name: case.name.clone(),
        euler: case.euler(),
        n,
        d_max,
        rho_order,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        passed: lhs == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::tuple::DEFAULT_BUDGET;
    use crate::oracles::wick::{sphere_two_faces, torus_one_face};
    use crate::partitions::enumerate_partitions;
    use crate::rational::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn casimir_values() {
        assert_eq!(casimir(&Partition::empty(), 1).unwrap(), 0);
        assert_eq!(casimir(&p(&[1]), 1).unwrap(), 1);
        assert_eq!(casimir(&p(&[1]), 2).unwrap(), 4);
        assert!(casimir(&p(&[1, 1]), 1).is_err());
        for n in 1..=5 {
            for d in 0..=5 {
                for lam in enumerate_partitions(d)
                    .into_iter()
                    .filter(|l| l.len() as i64 <= n)
                {
                    let cs: i64 = lam.contents().iter().sum();
                    assert_eq!(
                        casimir(&lam, n).unwrap(),
                        casimir_offset(n) + (2 * n - 1) * d as i64 + 2 * cs
                    );
                }
            }
        }
    }

    #[test]
    fn partition_function_basics() {
        let z = ym_partition(2, 3, 0, 2).unwrap();
        // Only ∅: e^{−ρ c₂(∅)/2} with c₂(∅) = 5 at N = 3.
        assert_eq!(z.coeff(0, 0, &[]), int(1));
        assert_eq!(z.coeff(0, 1, &[]), ratio(-5, 2));
        assert_eq!(z.coeff(0, 2, &[]), ratio(25, 8));
        // N = 1: only rows.
        let z = ym_partition(2, 1, 3, 0).unwrap();
        assert_eq!(z.total(0), int(4));
        // e = 2, ρ = 0, N = 2: 1 + 2² + 3² + 1².
        let z = ym_partition(2, 2, 2, 0).unwrap();
        assert_eq!(z.total(0), int(15));
    }

    #[test]
    fn identity_classes_recover_partition_function() {
        for k in 0..=2 {
            let classes = vec![ClassSpec::Identity; k];
            assert_eq!(
                ym_correlator(2, &classes, 3, 3, 2).unwrap(),
                ym_partition(2, 3, 3, 2).unwrap()
            );
        }
    }

    #[test]
    fn migdal_two_point() {
        let classes = [ClassSpec::Symbolic, ClassSpec::Symbolic];
        let z = ym_correlator(2, &classes, 3, 2, 1).unwrap();
        // λ = (1): e^{−ρc₂/2} p₁ p₁, c₂ = 10 at N = 3.
        assert_eq!(z.coeff(1, 0, &[p(&[1]), p(&[1])]), int(1));
        assert_eq!(z.coeff(1, 1, &[p(&[1]), p(&[1])]), int(-5));
        // d = 2, ρ⁰: Σ_λ s_λ s_λ = Σ p_Δ p_Δ / z_Δ.
        assert_eq!(z.coeff(2, 0, &[p(&[2]), p(&[2])]), ratio(1, 2));
        assert_eq!(z.coeff(2, 0, &[p(&[2]), p(&[1, 1])]), int(0));
    }

    #[test]
    fn numeric_matches_exact_at_zero_coupling() {
        let classes = [
            ClassSpec::PowerSums {
                values: vec![ratio(1, 2), ratio(-1, 3), int(2)],
            },
            ClassSpec::Identity,
        ];
        let exact = ym_correlator(0, &classes, 3, 3, 0).unwrap().total(0);
        let num = ym_correlator_numeric(0, 0.0, &classes, 3, 3)
            .unwrap()
            .total();
        assert!((num.re - rational::to_f64(&exact)).abs() < 1e-12);
        // Turns at ½ are eigenvalue −1.
        let t = [ClassSpec::Turns {
            turns: vec![ratio(1, 2), int(0)],
        }];
        let ps = [ClassSpec::PowerSums {
            values: vec![int(0), int(2), int(0)],
        }];
        let a = ym_correlator_numeric(2, 0.1, &t, 2, 3).unwrap().total();
        let b = ym_correlator_numeric(2, 0.1, &ps, 2, 3).unwrap().total();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn hypergeometric_tau() {
        let sym = [ClassSpec::Symbolic, ClassSpec::Symbolic];
        let tau = tau_hypergeometric(TauKind::Tl, &sym, 0, 4, 3, 0).unwrap();
        for d in 1..=3 {
            for a in enumerate_partitions(d) {
                for b in enumerate_partitions(d) {
                    let want = if a == b {
                        ratio(1, a.z() as i64)
                    } else {
                        int(0)
                    };
                    assert_eq!(tau.coeff(d, 0, &[a.clone(), b.clone()]), want);
                }
            }
        }
        let zero = [ClassSpec::PowerSums {
            values: vec![int(0); 3],
        }];
        let tau = tau_hypergeometric(TauKind::Bkp, &zero, 1, 3, 3, 2).unwrap();
        assert!(tau.terms().all(|(k, _)| k.d == 0));
        // One box, N = 2: (2/2)^a e^{(t/2)((3/2+1)² + (1/2)²)}... with λ = (1):
        // rows x = (2, 0) + ½.
        let tau = tau_hypergeometric(TauKind::Bkp, &[ClassSpec::Symbolic], 1, 2, 1, 1).unwrap();
        assert_eq!(tau.coeff(1, 0, &[p(&[1])]), int(1));
        assert_eq!(tau.coeff(1, 1, &[p(&[1])]), ratio(13, 4));
    }

    #[test]
    fn jm_tau_matches_deformed_hurwitz() {
        for kind in [TauKind::Tl, TauKind::Bkp] {
            let r = verify_tau_jm(kind, 1, &ratio(2, 3), 2, 2, 3).unwrap();
            assert!(r.passed, "{r:?}");
        }
        let tau = tau_jm(TauKind::Bkp, 0, &ratio(3, 2), 1, 3, 2).unwrap();
        assert_eq!(tau.get(&[p(&[1, 1])]).unwrap().coeff(&[0]), ratio(1, 1));
        assert!(tau.get(&[p(&[2])]).unwrap().coeff(&[0]).is_zero());
    }

    #[test]
    fn one_over_n_values() {
        assert_eq!(
            hurwitz_1_over_n(2, 2, &[p(&[1, 1])], 0, 0).unwrap(),
            crate::hurwitz::hurwitz_number(2, 2, &[p(&[1, 1])]).unwrap()
        );
        assert_eq!(
            hurwitz_1_over_n(2, 2, &[p(&[1, 1])], 0, 1).unwrap(),
            crate::hurwitz::hurwitz_number(2, 2, &[p(&[1, 1]), p(&[2])]).unwrap()
        );
        // φ̃(1; 1) = φ(1).
        assert_eq!(
            hurwitz_1_over_n(1, 3, &[p(&[3])], 1, 0).unwrap(),
            hurwitz_1_over_n(1, 3, &[p(&[3])], 0, 1).unwrap()
        );
    }

    #[test]
    fn large_n_expansion() {
        for (e, k) in [(2, 0), (2, 1), (0, 2), (1, 1), (-1, 0)] {
            let r = verify_tilde_h(e, k, 3, 2, 3).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn char_map_identity() {
        let r = verify_char_map(4, &[-2, -1, 1, 2, 3], 6).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn schur_expectation() {
        let m = sphere_two_faces(p(&[1]), p(&[1]));
        for d in 1..=2 {
            for a in enumerate_partitions(d) {
                for b in enumerate_partitions(d) {
                    let r =
                        verify_schur_expectation(&m, &[a.clone(), b.clone()], 4, DEFAULT_BUDGET)
                            .unwrap();
                    assert!(r.passed, "{a} {b}");
                }
            }
        }
        let lhs = MapMoments::new(&m, 1, DEFAULT_BUDGET)
            .unwrap()
            .schur_integral(&[p(&[1]), p(&[1])], 5)
            .unwrap();
        assert_eq!(lhs.get(&vec![p(&[1])]), Some(&ratio(1, 5)));
        let r = verify_schur_expectation(&torus_one_face(p(&[1])), &[p(&[2])], 3, DEFAULT_BUDGET)
            .unwrap();
        assert!(r.passed);
        let r = verify_schur_expectation(&m, &[p(&[2]), p(&[1])], 3, DEFAULT_BUDGET).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn int_tau() {
        for case in int_tau_cases() {
            let r = verify_int_tau(&case, 3, 2, 2, DEFAULT_BUDGET).unwrap();
            assert!(r.passed, "{r:?}");
        }
        assert_eq!(int_tau_cases()[0].euler(), 0);
        assert_eq!(int_tau_cases()[1].euler(), -1);
        assert_eq!(int_tau_cases()[2].euler(), 0);
    }
}
