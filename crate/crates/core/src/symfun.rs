//! The ring of polynomials in power sums `p_1, p_2, …`.
//!
//! Covers Schur functions (through characters and through Jacobi–Trudi),
//! the characteristic map, the cut-and-join operator, the eigenvalue
//! families attached to Schur functions, principal specializations, and the
//! `φ`/`φ̃` coefficients of the large-`N` expansion.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::partitions::{check_degree, enumerate_partitions, Partition};
use crate::rational::{self, int, ratio, Rational};
use crate::series::Laurent;

/// A finite linear combination of monomials `p_Δ = p_{Δ_1} p_{Δ_2} ⋯`.
/// The empty partition is the constant monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumPoly {
    coeffs: BTreeMap<Partition, Rational>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rational::one())
    }

    pub fn monomial(delta: Partition, c: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(&delta, c);
        f
    }

    /// The generator `p_k`.
    pub fn p(k: u32) -> Self {
        Self::monomial(Partition::row(k), Rational::one())
    }

    pub fn coeff(&self, delta: &Partition) -> Rational {
        self.coeffs
            .get(delta)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, delta: &Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(delta.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(delta);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (d, v) in &self.coeffs {
            out.add_term(d, v * c);
        }
        out
    }

    /// Terms of weight exactly `d`.
    pub fn slice(&self, d: usize) -> Self {
        PowerSumPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.weight() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// `∂/∂p_k`.
    pub fn derivative(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (delta, c) in &self.coeffs {
            let m = delta.parts().iter().filter(|&&x| x == k).count();
            if m > 0 {
                out.add_term(&delta.remove_part(k).unwrap(), c * int(m as i64));
            }
        }
        out
    }

    /// Multiplication by the monomial `p_Δ`.
    pub fn mul_monomial(&self, delta: &Partition) -> Self {
        PowerSumPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.union(delta), c.clone()))
                .collect(),
        }
    }

    /// Evaluates with `p_k ↦ values(k)`.
    pub fn eval_with(&self, mut values: impl FnMut(u32) -> Rational) -> Rational {
        let mut cache: HashMap<u32, Rational> = HashMap::new();
        let mut total = Rational::zero();
        for (delta, c) in &self.coeffs {
            let mut term = c.clone();
            for &k in delta.parts() {
                let v = cache.entry(k).or_insert_with(|| values(k));
                term *= &*v;
            }
            total += term;
        }
        total
    }

    /// The `z`-weighted pairing `⟨p_Δ, p_μ⟩ = z_Δ δ_{Δμ}`.
    pub fn pairing(&self, other: &Self) -> Rational {
        self.coeffs
            .iter()
            .filter_map(|(d, c)| other.coeffs.get(d).map(|e| c * e * int(d.z() as i64)))
            .sum()
    }

    /// Parts occurring in any monomial.
    fn part_sizes(&self) -> Vec<u32> {
        let mut ks: Vec<u32> = self
            .coeffs
            .keys()
            .flat_map(|p| p.parts().to_vec())
            .collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }
}

impl Add for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn add(self, other: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Neg for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn neg(self) -> PowerSumPoly {
        self.scale(&int(-1))
    }
}

impl Sub for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn sub(self, other: &PowerSumPoly) -> PowerSumPoly {
        self + &(-other)
    }
}

impl Mul for &PowerSumPoly {
    type Output = PowerSumPoly;
    fn mul(self, other: &PowerSumPoly) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(&a.union(b), x * y);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: BTreeMap<String, String>,
}

impl Serialize for PowerSumPoly {
    /// `{"coeffs":{"[2,1]":"1/2",…}}`
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.key(), rational::to_string(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PowerSumPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PolyRepr::deserialize(d)?;
        let mut f = PowerSumPoly::zero();
        for (k, v) in &repr.coeffs {
            let p: Partition = k.parse().map_err(D::Error::custom)?;
            f.add_term(&p, rational::parse(v).map_err(D::Error::custom)?);
        }
        Ok(f)
    }
}

/// Linear combination of Schur functions `Σ c_λ s_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SchurPoly {
    #[serde(serialize_with = "serialize_keyed")]
    pub coeffs: BTreeMap<Partition, Rational>,
}

fn serialize_keyed<S: Serializer>(
    m: &BTreeMap<Partition, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    m.iter()
        .map(|(p, c)| (p.key(), rational::to_string(c)))
        .collect::<BTreeMap<_, _>>()
        .serialize(s)
}

impl SchurPoly {
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Back to the power-sum basis.
    pub fn to_power_sums(&self) -> Result<PowerSumPoly> {
        let mut out = PowerSumPoly::zero();
        for (lam, c) in &self.coeffs {
            out = &out + &schur_in_p(lam)?.scale(c);
        }
        Ok(out)
    }
}

pub(crate) fn schur_from_table(table: &CharacterTable, i: usize) -> PowerSumPoly {
    let mut f = PowerSumPoly::zero();
    for (j, delta) in table.partitions().iter().enumerate() {
        f.add_term(delta, ratio(table.chi_at(i, j), delta.z() as i64));
    }
    f
}

/// `s_λ = Σ_Δ χ_λ(Δ) p_Δ / z_Δ`.
pub fn schur_in_p(lambda: &Partition) -> Result<PowerSumPoly> {
    let table = character_table(lambda.weight())?;
    Ok(schur_from_table(&table, table.index_of(lambda)?))
}

/// Complete homogeneous function `h_m = Σ_{Δ⊢m} p_Δ/z_Δ` (`h_0 = 1`,
/// `h_m = 0` for `m < 0`).
pub fn complete_h(m: i64) -> PowerSumPoly {
    if m < 0 {
        return PowerSumPoly::zero();
    }
    let mut f = PowerSumPoly::zero();
    for delta in enumerate_partitions(m as usize) {
        f.add_term(&delta, ratio(1, delta.z() as i64));
    }
    f
}

/// `s_λ = det[h_{λ_i − i + j}]`, computed independently of the character
/// table by Laplace expansion with memoization over used columns.
pub fn schur_jacobi_trudi(lambda: &Partition) -> Result<PowerSumPoly> {
    check_degree(lambda.weight())?;
    let l = lambda.len();
    let h: HashMap<i64, PowerSumPoly> = (-(l as i64)..=lambda.weight() as i64)
        .map(|m| (m, complete_h(m)))
        .collect();
    let entry = |i: usize, j: usize| -> &PowerSumPoly {
        let m = lambda.part(i) as i64 - i as i64 + j as i64;
        &h[&m.clamp(-(l as i64), lambda.weight() as i64)]
    };
    fn det(
        row: usize,
        used: u32,
        l: usize,
        entry: &dyn Fn(usize, usize) -> PowerSumPoly,
        memo: &mut HashMap<u32, PowerSumPoly>,
    ) -> PowerSumPoly {
        if row == l {
            return PowerSumPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = PowerSumPoly::zero();
        let mut position = 0;
        for j in 0..l {
            if used & (1 << j) != 0 {
                continue;
            }
            let e = entry(row, j);
            if !e.is_zero() {
                let minor = det(row + 1, used | (1 << j), l, entry, memo);
                let term = &e * &minor;
                total = if position % 2 == 0 {
                    &total + &term
                } else {
                    &total - &term
                };
            }
            position += 1;
        }
        memo.insert(used, total.clone());
        total
    }
    let entry_owned = |i: usize, j: usize| entry(i, j).clone();
    Ok(det(0, 0, l, &entry_owned, &mut HashMap::new()))
}

/// `p_Δ = Σ_λ χ_λ(Δ) s_λ`.
pub fn char_map_forward(delta: &Partition) -> Result<SchurPoly> {
    let table = character_table(delta.weight())?;
    let j = table.index_of(delta)?;
    let mut coeffs = BTreeMap::new();
    for (i, lam) in table.partitions().iter().enumerate() {
        let c = table.chi_at(i, j);
        if c != 0 {
            coeffs.insert(lam.clone(), int(c));
        }
    }
    Ok(SchurPoly { coeffs })
}

/// Expands a power-sum polynomial in Schur functions, slice by slice.
pub fn to_schur(f: &PowerSumPoly) -> Result<SchurPoly> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (delta, c) in f.terms() {
        for (lam, v) in char_map_forward(delta)?.coeffs {
            let e = out.entry(lam).or_insert_with(Rational::zero);
            *e += c * v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(SchurPoly { coeffs: out })
}

/// The cut-and-join operator
/// `L° = ½ Σ_{a,b≥1} ((a+b) p_a p_b ∂_{a+b} + ab p_{a+b} ∂_a ∂_b)`.
pub fn cut_and_join_apply(f: &PowerSumPoly) -> PowerSumPoly {
    let ks = f.part_sizes();
    let mut out = PowerSumPoly::zero();
    for &k in &ks {
        let dk = f.derivative(k);
        for a in 1..k {
            let b = k - a;
            let pab = Partition::from_unsorted(vec![a, b]);
            out = &out + &dk.mul_monomial(&pab).scale(&ratio(k as i64, 2));
        }
    }
    for &a in &ks {
        let da = f.derivative(a);
        for &b in &ks {
            let dab = da.derivative(b);
            if dab.is_zero() {
                continue;
            }
            let c = ratio((a * b) as i64, 2);
            out = &out + &dab.mul_monomial(&Partition::row(a + b)).scale(&c);
        }
    }
    out
}

/// Result of [`cutjoin_eigencheck`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    pub lambda: Partition,
    #[serde(with = "crate::rational::serde_str")]
    pub eigenvalue: Rational,
    pub residual: PowerSumPoly,
    pub passed: bool,
}

/// Checks `L° s_λ = (Σ contents λ) s_λ` exactly.
pub fn cutjoin_eigencheck(lambda: &Partition) -> Result<EigenReport> {
    let s = schur_in_p(lambda)?;
    let eigenvalue = int(lambda.contents().iter().sum());
    let residual = &cut_and_join_apply(&s) - &s.scale(&eigenvalue);
    Ok(EigenReport {
        lambda: lambda.clone(),
        eigenvalue,
        passed: residual.is_zero(),
        residual,
    })
}

/// `Σ_i ((½ + λ_i − i)^n − (½ − i)^n)`.
pub fn shifted_power_eigen(lambda: &Partition, n: u32) -> Rational {
    let half = ratio(1, 2);
    (1..=lambda.len() as i64)
        .map(|i| {
            let a = &half + int(lambda.part(i as usize - 1) as i64 - i);
            let b = &half - int(i);
            num_traits::pow(a, n as usize) - num_traits::pow(b, n as usize)
        })
        .sum()
}

/// Content power sum `Σ_{cells} c^n`.
pub fn content_power_sum(lambda: &Partition, n: u32) -> Rational {
    int(lambda.contents().iter().map(|&c| c.pow(n)).sum())
}

/// `e_λ(q) = Σ_i (q^{½+λ_i−i} − q^{½−i})` as a Laurent polynomial in `s`,
/// `q = s²`.
pub fn completed_cycle_eigen_symbolic(lambda: &Partition) -> Laurent {
    let mut out = Laurent::zero();
    for i in 1..=lambda.len() as i64 {
        let li = lambda.part(i as usize - 1) as i64;
        out.add_term(1 + 2 * (li - i), Rational::one());
        out.add_term(1 - 2 * i, int(-1));
    }
    out
}

/// `e_λ(q)` at a rational `s ≠ 0`.
pub fn completed_cycle_eigen(lambda: &Partition, s: &Rational) -> Result<Rational> {
    if s.is_zero() {
        return Err(Error::InvalidArgument("s must be nonzero (q = s²)".into()));
    }
    Ok(completed_cycle_eigen_symbolic(lambda).eval(s))
}

/// Quantum contents `Σ_{cells} q^{j−i}` as a Laurent polynomial in `s`.
pub fn quantum_content_symbolic(lambda: &Partition) -> Laurent {
    let mut out = Laurent::zero();
    for c in lambda.contents() {
        out.add_term(2 * c, Rational::one());
    }
    out
}

/// `(q^{½} − q^{−½}) Σ q^{contents} = e_λ(q)`, symbolically in `s`.
pub fn verify_quantum_content(lambda: &Partition) -> bool {
    let factor = Laurent::monomial(1, Rational::one()) - Laurent::monomial(-1, Rational::one());
    &factor * &quantum_content_symbolic(lambda) == completed_cycle_eigen_symbolic(lambda)
}

/// `(N)_λ = ∏_{cells} (N + j − i)` as a polynomial in `N`.
pub fn content_product(lambda: &Partition) -> Laurent {
    lambda
        .contents()
        .into_iter()
        .fold(Laurent::one(), |acc, c| &acc * &Laurent::x_plus(c))
}

pub fn content_product_at(lambda: &Partition, n: i64) -> Rational {
    lambda
        .contents()
        .into_iter()
        .map(|c| int(n + c))
        .product::<Rational>()
}

/// `s_λ(𝕀_N) = (dimλ/d!) ∏ (N + j − i)` as a polynomial in `N`.
pub fn principal_specialization(lambda: &Partition) -> Result<Laurent> {
    let table = character_table(lambda.weight())?;
    let r = table.dim_ratio_at(table.index_of(lambda)?);
    Ok(content_product(lambda).scale(&r))
}

pub fn principal_specialization_at(lambda: &Partition, n: i64) -> Result<Rational> {
    let table = character_table(lambda.weight())?;
    let r = table.dim_ratio_at(table.index_of(lambda)?);
    Ok(r * content_product_at(lambda, n))
}

/// `φ_λ(k) = Σ_{Δ ⊢ d, ℓ(Δ) = d−k} φ_λ(Δ)`.
pub fn phi_coefficient(lambda: &Partition, k: usize) -> Result<Rational> {
    let d = lambda.weight();
    if k >= d.max(1) {
        return Err(Error::InvalidArgument(format!(
            "φ coefficient index {k} out of range 0..{d}"
        )));
    }
    let table = character_table(d)?;
    let i = table.index_of(lambda)?;
    Ok(table
        .partitions()
        .iter()
        .enumerate()
        .filter(|(_, delta)| delta.len() == d - k)
        .map(|(j, _)| table.phi_at(i, j).clone())
        .sum())
}

/// `φ_λ(k)` extended by zero for `k ≥ d`.
pub(crate) fn phi_or_zero(lambda: &Partition, k: usize) -> Result<Rational> {
    if k >= lambda.weight().max(1) {
        Ok(Rational::zero())
    } else {
        phi_coefficient(lambda, k)
    }
}

/// `φ̃_λ(k; e) = Σ_{l≥1} e(e−1)⋯(e−l+1) Σ_{μ ⊢ k, ℓ(μ)=l} φ_λ(μ)/|aut μ|`,
/// with `φ̃_λ(0; e) = 1`.
pub fn tilde_phi(lambda: &Partition, k: usize, e: i64) -> Result<Rational> {
    if k == 0 {
        return Ok(Rational::one());
    }
    let phis: Vec<Rational> = (0..=k)
        .map(|i| phi_or_zero(lambda, i))
        .collect::<Result<_>>()?;
    let mut total = Rational::zero();
    for mu in enumerate_partitions(k) {
        let l = mu.len() as i64;
        let falling: i64 = (0..l).map(|j| e - j).product();
        if falling == 0 {
            continue;
        }
        let prod: Rational = mu
            .parts()
            .iter()
            .map(|&m| phis[m as usize].clone())
            .product();
        total += int(falling) * prod / int(mu.aut_multiplicity() as i64);
    }
    Ok(total)
}

/// Series in `u` and the power sums, truncated at `u^{m_max}` and weight
/// `d_max`. Coefficients are those of `u^m p_Δ` (no factorials).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    pub d_max: usize,
    pub m_max: u32,
    coeffs: BTreeMap<(u32, Partition), Rational>,
}

impl PolySeries {
    pub fn zero(d_max: usize, m_max: u32) -> Self {
        PolySeries {
            d_max,
            m_max,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(d_max: usize, m_max: u32) -> Self {
        let mut s = Self::zero(d_max, m_max);
        s.add_term(0, &Partition::empty(), Rational::one());
        s
    }

    pub fn add_term(&mut self, m: u32, delta: &Partition, c: Rational) {
        if m > self.m_max || delta.weight() > self.d_max || c.is_zero() {
            return;
        }
        let key = (m, delta.clone());
        let entry = self
            .coeffs
            .entry(key.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, m: u32, delta: &Partition) -> Rational {
        self.coeffs
            .get(&(m, delta.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Partition), &Rational)> {
        self.coeffs.iter()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, &Partition::empty())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.d_max, self.m_max);
        for ((m, d), v) in &self.coeffs {
            out.add_term(*m, d, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.d_max.min(other.d_max), self.m_max.min(other.m_max));
        for ((m, d), v) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(*m, d, v.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.d_max.min(other.d_max), self.m_max.min(other.m_max));
        for ((m1, d1), x) in &self.coeffs {
            for ((m2, d2), y) in &other.coeffs {
                if m1 + m2 <= out.m_max && d1.weight() + d2.weight() <= out.d_max {
                    out.add_term(m1 + m2, &d1.union(d2), x * y);
                }
            }
        }
        out
    }

    /// The `u^m` slice as a power-sum polynomial.
    pub fn u_slice(&self, m: u32) -> PowerSumPoly {
        let mut f = PowerSumPoly::zero();
        for ((k, d), v) in &self.coeffs {
            if *k == m {
                f.add_term(d, v.clone());
            }
        }
        f
    }

    /// `∂/∂u`.
    pub fn d_du(&self) -> Self {
        let mut out = Self::zero(self.d_max, self.m_max.saturating_sub(1));
        for ((m, d), v) in &self.coeffs {
            if *m > 0 {
                out.add_term(m - 1, d, v * int(*m as i64));
            }
        }
        out
    }

    /// Applies a linear operator on power-sum polynomials to every
    /// `u`-slice.
    pub fn map_slices(&self, op: impl Fn(&PowerSumPoly) -> PowerSumPoly) -> Self {
        let mut out = Self::zero(self.d_max, self.m_max);
        for m in 0..=self.m_max {
            for (d, v) in op(&self.u_slice(m)).terms() {
                out.add_term(m, d, v.clone());
            }
        }
        out
    }

    fn max_nilpotency(&self) -> usize {
        self.d_max + self.m_max as usize
    }
}

/// `exp(f)` for `f` without constant term.
pub fn series_exp(f: &PolySeries) -> Result<PolySeries> {
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidArgument(
            "exp requires a series without constant term".into(),
        ));
    }
    let mut total = PolySeries::one(f.d_max, f.m_max);
    let mut power = PolySeries::one(f.d_max, f.m_max);
    for j in 1..=f.max_nilpotency() {
        power = power.mul(f).scale(&ratio(1, j as i64));
        total = total.add(&power);
    }
    Ok(total)
}

/// `ln(f)` for `f` with constant term 1.
pub fn series_log(f: &PolySeries) -> Result<PolySeries> {
    if f.constant_term() != Rational::one() {
        return Err(Error::InvalidArgument(
            "log requires a series with constant term 1".into(),
        ));
    }
    let mut g = f.clone();
    g.add_term(0, &Partition::empty(), int(-1));
    let mut total = PolySeries::zero(f.d_max, f.m_max);
    let mut power = PolySeries::one(f.d_max, f.m_max);
    for j in 1..=f.max_nilpotency() {
        power = power.mul(&g);
        let sign = if j % 2 == 1 { 1 } else { -1 };
        total = total.add(&power.scale(&ratio(sign, j as i64)));
    }
    Ok(total)
}

/// `Σ_{λ ⊢ d} s_λ(x) s_λ(y)` as coefficients of `p_Δ(x) p_μ(y)`.
pub fn cauchy_slice_schur(d: usize) -> Result<BTreeMap<(Partition, Partition), Rational>> {
    let table = character_table(d)?;
    let mut out: BTreeMap<(Partition, Partition), Rational> = BTreeMap::new();
    for i in 0..table.len() {
        let s = schur_from_table(&table, i);
        for (a, x) in s.terms() {
            for (b, y) in s.terms() {
                *out.entry((a.clone(), b.clone()))
                    .or_insert_with(Rational::zero) += x * y;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// `Σ_{Δ ⊢ d} p_Δ(x) p_Δ(y) / z_Δ`.
pub fn cauchy_slice_power(d: usize) -> BTreeMap<(Partition, Partition), Rational> {
    enumerate_partitions(d)
        .into_iter()
        .map(|delta| {
            let z = delta.z() as i64;
            ((delta.clone(), delta), ratio(1, z))
        })
        .collect()
}

/// `Σ_{λ ⊢ d} s_λ` in power sums.
pub fn schur_sum(d: usize) -> Result<PowerSumPoly> {
    let table = character_table(d)?;
    let mut out = PowerSumPoly::zero();
    for i in 0..table.len() {
        out = &out + &schur_from_table(&table, i);
    }
    Ok(out)
}

/// Elementary symmetric function `e_k` of a list of integers.
pub fn elementary_of(values: &[i64], k: usize) -> Rational {
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for &v in values {
        for j in (1..=k).rev() {
            let prev = e[j - 1].clone();
            e[j] += prev * int(v);
        }
    }
    e[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], (i64, i64))]) -> PowerSumPoly {
        let mut f = PowerSumPoly::zero();
        for (d, (n, den)) in terms {
            f.add_term(&p(d), ratio(*n, *den));
        }
        f
    }

    #[test]
    fn small_schur_functions() {
        assert_eq!(schur_in_p(&p(&[1])).unwrap(), PowerSumPoly::p(1));
        assert_eq!(
            schur_in_p(&p(&[2])).unwrap(),
            poly(&[(&[1, 1], (1, 2)), (&[2], (1, 2))])
        );
        assert_eq!(
            schur_in_p(&p(&[1, 1])).unwrap(),
            poly(&[(&[1, 1], (1, 2)), (&[2], (-1, 2))])
        );
    }

    #[test]
    fn jacobi_trudi_agrees_with_characters() {
        for d in 0..=7 {
            for lam in enumerate_partitions(d) {
                assert_eq!(
                    schur_jacobi_trudi(&lam).unwrap(),
                    schur_in_p(&lam).unwrap(),
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn characteristic_map_roundtrip() {
        assert_eq!(char_map_forward(&p(&[1])).unwrap().coeff(&p(&[1])), int(1));
        let p2 = char_map_forward(&p(&[2])).unwrap();
        assert_eq!(p2.coeff(&p(&[2])), int(1));
        assert_eq!(p2.coeff(&p(&[1, 1])), int(-1));
        let p11 = char_map_forward(&p(&[1, 1])).unwrap();
        assert_eq!(p11.coeff(&p(&[2])), int(1));
        assert_eq!(p11.coeff(&p(&[1, 1])), int(1));
        for d in 1..=5 {
            for delta in enumerate_partitions(d) {
                let back = char_map_forward(&delta).unwrap().to_power_sums().unwrap();
                assert_eq!(back, PowerSumPoly::monomial(delta.clone(), int(1)));
            }
        }
    }

    #[test]
    fn cut_and_join_small() {
        assert!(cut_and_join_apply(&PowerSumPoly::p(1)).is_zero());
        assert_eq!(
            cut_and_join_apply(&PowerSumPoly::p(2)),
            PowerSumPoly::monomial(p(&[1, 1]), int(1))
        );
        assert_eq!(
            cut_and_join_apply(&PowerSumPoly::monomial(p(&[1, 1]), int(1))),
            PowerSumPoly::p(2)
        );
    }

    #[test]
    fn cut_and_join_eigenvalues() {
        for (lam, ev) in [(p(&[2]), 1), (p(&[1, 1]), -1), (p(&[2, 1]), 0)] {
            let r = cutjoin_eigencheck(&lam).unwrap();
            assert!(r.passed);
            assert_eq!(r.eigenvalue, int(ev));
        }
        for d in 0..=6 {
            for lam in enumerate_partitions(d) {
                assert!(cutjoin_eigencheck(&lam).unwrap().passed, "{lam}");
            }
        }
    }

    #[test]
    fn cut_and_join_is_self_adjoint() {
        for d in 1..=5 {
            let basis: Vec<PowerSumPoly> = enumerate_partitions(d)
                .into_iter()
                .map(|q| PowerSumPoly::monomial(q, int(1)))
                .collect();
            for f in &basis {
                for g in &basis {
                    assert_eq!(
                        cut_and_join_apply(f).pairing(g),
                        f.pairing(&cut_and_join_apply(g))
                    );
                }
            }
        }
    }

    #[test]
    fn shifted_powers() {
        assert_eq!(shifted_power_eigen(&p(&[1]), 1), int(1));
        assert_eq!(shifted_power_eigen(&p(&[2]), 2), int(2));
        assert_eq!(shifted_power_eigen(&Partition::empty(), 3), int(0));
        for d in 0..=6 {
            for lam in enumerate_partitions(d) {
                assert_eq!(shifted_power_eigen(&lam, 1), int(d as i64));
                assert_eq!(
                    shifted_power_eigen(&lam, 2),
                    content_power_sum(&lam, 1) * int(2)
                );
            }
        }
    }

    #[test]
    fn completed_cycles() {
        let s = ratio(3, 2);
        assert_eq!(completed_cycle_eigen(&p(&[1]), &s).unwrap(), &s - s.recip());
        assert_eq!(
            completed_cycle_eigen(&Partition::empty(), &s).unwrap(),
            int(0)
        );
        assert!(completed_cycle_eigen(&p(&[1]), &int(0)).is_err());
        assert_eq!(completed_cycle_eigen(&p(&[2, 1]), &int(1)).unwrap(), int(0));
        for d in 0..=6 {
            for lam in enumerate_partitions(d) {
                assert!(verify_quantum_content(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn specializations() {
        assert_eq!(principal_specialization_at(&p(&[1]), 5).unwrap(), int(5));
        assert_eq!(principal_specialization_at(&p(&[2]), 3).unwrap(), int(6));
        assert_eq!(principal_specialization_at(&p(&[1, 1]), 3).unwrap(), int(3));
        let cp = content_product(&p(&[2, 1]));
        // Three cells with contents 0, 1, −1: N(N+1)(N−1) = N³ − N.
        assert_eq!(cp.coeff(3), int(1));
        assert_eq!(cp.coeff(2), int(0));
        assert_eq!(cp.coeff(1), int(-1));
        assert_eq!(cp.top(), Some(3));
        assert_eq!(content_product_at(&p(&[2]), 4), int(20));
        // Specializing the power sums at p_k = N gives the same numbers.
        for lam in enumerate_partitions(4) {
            let s = schur_in_p(&lam).unwrap();
            assert_eq!(
                s.eval_with(|_| int(3)),
                principal_specialization_at(&lam, 3).unwrap()
            );
        }
    }

    #[test]
    fn phi_and_tilde_phi() {
        for d in 1..=5 {
            for lam in enumerate_partitions(d) {
                assert_eq!(phi_coefficient(&lam, 0).unwrap(), int(1));
                for k in 0..d {
                    let phi = phi_coefficient(&lam, k).unwrap();
                    assert_eq!(phi, elementary_of(&lam.contents(), k), "{lam} k={k}");
                    if k >= 1 {
                        assert_eq!(tilde_phi(&lam, k, 1).unwrap(), phi);
                    }
                }
                if d >= 2 {
                    let p1 = phi_coefficient(&lam, 1).unwrap();
                    let p2 = phi_or_zero(&lam, 2).unwrap();
                    assert_eq!(tilde_phi(&lam, 1, 5).unwrap(), int(5) * &p1);
                    assert_eq!(
                        tilde_phi(&lam, 2, 5).unwrap(),
                        int(5) * &p2 + int(10) * &p1 * &p1
                    );
                }
            }
        }
        assert_eq!(phi_coefficient(&p(&[2]), 1).unwrap(), int(1));
        assert_eq!(phi_coefficient(&p(&[1, 1]), 1).unwrap(), int(-1));
        assert!(phi_coefficient(&p(&[2]), 2).is_err());
    }

    #[test]
    fn cauchy_identity() {
        for d in 0..=5 {
            assert_eq!(cauchy_slice_schur(d).unwrap(), cauchy_slice_power(d));
        }
    }

    #[test]
    fn exp_log_inverse() {
        let mut f = PolySeries::zero(3, 2);
        f.add_term(0, &p(&[1]), int(1));
        f.add_term(1, &p(&[2]), ratio(1, 2));
        f.add_term(2, &p(&[1, 1]), ratio(-3, 4));
        f.add_term(1, &p(&[2, 1]), int(2));
        let e = series_exp(&f).unwrap();
        assert_eq!(series_log(&e).unwrap(), f);
        assert_eq!(
            series_exp(&PolySeries::zero(3, 2)).unwrap(),
            PolySeries::one(3, 2)
        );
        assert!(series_log(&f).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let f = schur_in_p(&p(&[2])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"coeffs":{"[1,1]":"1/2","[2]":"1/2"}}"#);
        assert_eq!(serde_json::from_str::<PowerSumPoly>(&s).unwrap(), f);
    }
}
