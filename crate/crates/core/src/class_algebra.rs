//! The center `Z(C[S_d])` of the group algebra.
//!
//! Elements are stored in either the class-sum basis `𝔠_Δ` or the basis of
//! central idempotents `𝔉_λ`, related by
//!
//! ```text
//! 𝔠_Δ = Σ_λ φ_λ(Δ) 𝔉_λ,      𝔉_λ = (dimλ/d!)² Σ_Δ z_Δ φ_λ(Δ) 𝔠_Δ.
//! ```
//!
//! Products are computed in the idempotent basis, where they are diagonal.
//! Symmetric functions of the Jucys–Murphy elements act on `𝔉_λ` by
//! evaluation at the contents of `λ` ([`jm_insertion`]).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::characters::{character_table, weight_mismatch, CharacterTable};
use crate::error::{Error, Result};
use crate::oracles::perm::SymmetricGroup;
use crate::partitions::{check_degree, enumerate_partitions, Partition};
use crate::rational::{self, factorial, int, powi, Rational};
use crate::series::TSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Class sums `𝔠_Δ`.
    Class,
    /// Central idempotents `𝔉_λ`.
    Idempotent,
}

/// A central element of `C[S_d]` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    d: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl CentralElement {
    pub fn zero(d: usize, basis: Basis) -> Self {
        CentralElement {
            d,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The class sum `𝔠_Δ`.
    pub fn class_sum(delta: &Partition) -> Self {
        let mut x = Self::zero(delta.weight(), Basis::Class);
        x.coeffs.insert(delta.clone(), Rational::one());
        x
    }

    /// The central idempotent `𝔉_λ`.
    pub fn idempotent(lambda: &Partition) -> Self {
        let mut x = Self::zero(lambda.weight(), Basis::Idempotent);
        x.coeffs.insert(lambda.clone(), Rational::one());
        x
    }

    /// The unit `𝔠_{(1^d)}`.
    pub fn unit(d: usize) -> Self {
        Self::class_sum(&Partition::ones(d))
    }

    /// Builds from explicit coefficients, checking weights.
    pub fn from_coeffs(
        d: usize,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut x = Self::zero(d, basis);
        for (p, c) in coeffs {
            if p.weight() != d {
                return Err(Error::InvalidPartition(format!(
                    "{p} does not have weight {d}"
                )));
            }
            x.add_to(&p, c);
        }
        Ok(x)
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in canonical order.
    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn add_to(&mut self, p: &Partition, c: Rational) {
        let entry = self.coeffs.entry(p.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(p);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.d, self.basis);
        for (p, v) in &self.coeffs {
            out.add_to(p, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree_match(other)?;
        let other = other.in_basis(self.basis)?;
        let mut out = self.clone();
        for (p, v) in &other.coeffs {
            out.add_to(p, v.clone());
        }
        Ok(out)
    }

    fn check_degree_match(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::InvalidArgument(format!(
                "central elements of S_{} and S_{} cannot be combined",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn in_basis(&self, basis: Basis) -> Result<Self> {
        match basis {
            Basis::Class => self.to_class_basis(),
            Basis::Idempotent => self.to_idempotent_basis(),
        }
    }

    /// `𝔠_Δ ↦ Σ_λ φ_λ(Δ) 𝔉_λ`.
    pub fn to_idempotent_basis(&self) -> Result<Self> {
        if self.basis == Basis::Idempotent {
            return Ok(self.clone());
        }
        let table = character_table(self.d)?;
        Ok(self.to_idempotent_with(&table))
    }

    pub(crate) fn to_idempotent_with(&self, table: &CharacterTable) -> Self {
        let mut out = Self::zero(self.d, Basis::Idempotent);
        for (delta, c) in &self.coeffs {
            let j = table.index_of(delta).expect("weight checked");
            for (i, lam) in table.partitions().iter().enumerate() {
                out.add_to(lam, c * table.phi_at(i, j));
            }
        }
        out
    }

    /// `𝔉_λ ↦ (dimλ/d!)² Σ_Δ z_Δ φ_λ(Δ) 𝔠_Δ`.
    pub fn to_class_basis(&self) -> Result<Self> {
        if self.basis == Basis::Class {
            return Ok(self.clone());
        }
        let table = character_table(self.d)?;
        Ok(self.to_class_with(&table))
    }

    pub(crate) fn to_class_with(&self, table: &CharacterTable) -> Self {
        let mut out = Self::zero(self.d, Basis::Class);
        for (lam, c) in &self.coeffs {
            let i = table.index_of(lam).expect("weight checked");
            let r = table.dim_ratio_at(i);
            let w = c * &r * &r;
            for (j, delta) in table.partitions().iter().enumerate() {
                out.add_to(delta, &w * int(delta.z() as i64) * table.phi_at(i, j));
            }
        }
        out
    }

    /// Product in the center; the result keeps the basis of `self`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree_match(other)?;
        let a = self.to_idempotent_basis()?;
        let b = other.to_idempotent_basis()?;
        let mut out = Self::zero(self.d, Basis::Idempotent);
        for (lam, x) in &a.coeffs {
            if let Some(y) = b.coeffs.get(lam) {
                out.add_to(lam, x * y);
            }
        }
        out.in_basis(self.basis)
    }

    /// `Σ_λ x_λ (dimλ/d!)^e` with `x = Σ x_λ 𝔉_λ`: the correlator of `x`
    /// on a closed surface of Euler characteristic `e`.
    pub fn correlator(&self, e: i64) -> Result<Rational> {
        let table = character_table(self.d)?;
        let x = self.to_idempotent_with_table(&table);
        Ok(x.coeffs
            .iter()
            .map(|(lam, c)| {
                let i = table.index_of(lam).expect("weight checked");
                c * powi(&table.dim_ratio_at(i), e)
            })
            .sum())
    }

    fn to_idempotent_with_table(&self, table: &CharacterTable) -> Self {
        match self.basis {
            Basis::Idempotent => self.clone(),
            Basis::Class => self.to_idempotent_with(table),
        }
    }

    /// Sphere correlator as `(coefficient of the identity)/d!`; agrees with
    /// `correlator(2)`.
    pub fn sphere_trace(&self) -> Result<Rational> {
        let x = self.to_class_basis()?;
        Ok(x.coeff(&Partition::ones(self.d)) / Rational::from_integer(factorial(self.d)))
    }
}

#[derive(Serialize, Deserialize)]
struct CentralRepr {
    d: usize,
    basis: Basis,
    coeffs: BTreeMap<String, String>,
}

impl Serialize for CentralElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CentralRepr {
            d: self.d,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| (p.key(), rational::to_string(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CentralElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CentralRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|(k, v)| Ok((k.parse::<Partition>()?, rational::parse(v)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        CentralElement::from_coeffs(repr.d, repr.basis, coeffs).map_err(D::Error::custom)
    }
}

/// `𝔠_{Δ¹} 𝔠_{Δ²} = Σ_λ φ_λ(Δ¹) φ_λ(Δ²) 𝔉_λ`, returned in the class basis.
pub fn class_product(a: &Partition, b: &Partition) -> Result<CentralElement> {
    if a.weight() != b.weight() {
        return Err(weight_mismatch(a, b));
    }
    CentralElement::class_sum(a).mul(&CentralElement::class_sum(b))
}

/// Structure constants of the class algebra counted directly in `S_d`:
/// the coefficient of `𝔠_Δ` in `𝔠_a 𝔠_b` is the number of pairs
/// `(σ, τ) ∈ C_a × C_b` with `στ` equal to a fixed element of `C_Δ`.
pub struct DirectStructure {
    d: usize,
    classes: Vec<Partition>,
    /// `constants[a][b][c]`.
    constants: Vec<Vec<Vec<u64>>>,
}

impl DirectStructure {
    pub fn new(d: usize) -> Result<Self> {
        if d > SymmetricGroup::MAX_TABLE_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: d,
                max: SymmetricGroup::MAX_TABLE_DEGREE,
            });
        }
        let g = SymmetricGroup::new(d);
        let classes = enumerate_partitions(d);
        let members: Vec<Vec<usize>> = classes.iter().map(|c| g.class_members(c)).collect();
        let class_index = |x: usize| classes.iter().position(|c| c == g.class_of(x)).unwrap();
        let n = classes.len();
        let mut constants = vec![vec![vec![0u64; n]; n]; n];
        for (c, mem_c) in members.iter().enumerate() {
            let target = mem_c[0];
            for (a, mem_a) in members.iter().enumerate() {
                for &sigma in mem_a {
                    let tau = g.mul(g.inv(sigma), target);
                    constants[a][class_index(tau)][c] += 1;
                }
            }
        }
        Ok(DirectStructure {
            d,
            classes,
            constants,
        })
    }

    /// Product of two class-basis elements using the counted constants.
    pub fn mul(&self, x: &CentralElement, y: &CentralElement) -> Result<CentralElement> {
        if x.d != self.d || y.d != self.d {
            return Err(Error::InvalidArgument("degree mismatch".into()));
        }
        let x = x.to_class_basis()?;
        let y = y.to_class_basis()?;
        let mut out = CentralElement::zero(self.d, Basis::Class);
        for (pa, ca) in &x.coeffs {
            let a = self.classes.iter().position(|c| c == pa).unwrap();
            for (pb, cb) in &y.coeffs {
                let b = self.classes.iter().position(|c| c == pb).unwrap();
                for (c, pc) in self.classes.iter().enumerate() {
                    let k = self.constants[a][b][c];
                    if k != 0 {
                        out.add_to(pc, ca * cb * int(k as i64));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `𝔠_a 𝔠_b` by direct counting in `S_d` (`d ≤ 6`).
pub fn class_product_direct(a: &Partition, b: &Partition) -> Result<CentralElement> {
    if a.weight() != b.weight() {
        return Err(weight_mismatch(a, b));
    }
    DirectStructure::new(a.weight())?
        .mul(&CentralElement::class_sum(a), &CentralElement::class_sum(b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotencyReport {
    pub d: usize,
    pub passed: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<String>,
}

/// Checks `𝔉_λ² = 𝔉_λ` and `𝔉_λ𝔉_μ = 0` with the idempotents written in
/// the class basis and multiplied with directly counted structure
/// constants, so the check does not rely on the character table being right.
pub fn idempotency_check(d: usize) -> Result<IdempotencyReport> {
    let table = character_table(d)?;
    let idempotents: Vec<CentralElement> = table
        .partitions()
        .iter()
        .map(|lam| CentralElement::idempotent(lam).to_class_with(&table))
        .collect();
    idempotency_check_elements(d, &idempotents)
}

/// As [`idempotency_check`] for caller-supplied candidates (in `Σ_λ`
/// canonical order), which makes perturbed inputs testable.
pub fn idempotency_check_elements(
    d: usize,
    candidates: &[CentralElement],
) -> Result<IdempotencyReport> {
    let direct = DirectStructure::new(d)?;
    let labels = enumerate_partitions(d);
    let mut checked = 0;
    for (i, x) in candidates.iter().enumerate() {
        for (j, y) in candidates.iter().enumerate().skip(i) {
            checked += 1;
            let prod = direct.mul(x, y)?;
            let expected = if i == j {
                x.to_class_basis()?
            } else {
                CentralElement::zero(d, Basis::Class)
            };
            if prod != expected {
                let what = if i == j { "square" } else { "product" };
                return Ok(IdempotencyReport {
                    d,
                    passed: false,
                    pairs_checked: checked,
                    counterexample: Some(format!(
                        "{what} of idempotents {} and {} is wrong",
                        labels.get(i).map(|p| p.key()).unwrap_or_default(),
                        labels.get(j).map(|p| p.key()).unwrap_or_default()
                    )),
                });
            }
        }
    }
    Ok(IdempotencyReport {
        d,
        passed: true,
        pairs_checked: checked,
        counterexample: None,
    })
}

/// A symmetric function `G` to be evaluated on Jucys–Murphy elements.
///
/// Deformation parameters use `s` with `q = s²`, so half-integer powers of
/// `q` stay rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetricInsertion {
    /// `∏_k p_k(x)` for the listed exponents `k`, with `p_k = Σ x_i^k`.
    PowerSumProduct(Vec<u32>),
    /// `Σ c · ∏_k p_k(x)`.
    Polynomial(Vec<(Rational, Vec<u32>)>),
    /// `Σ_i q^{m x_i}`.
    QContentSum { s: Rational, m: u32 },
    /// `exp(t (q^{1/2} − q^{−1/2}) Σ_i q^{x_i})`, truncated in `t`.
    QExponential { s: Rational, order: u32 },
    /// `exp(Σ_{m=1}^{times} t_m q^{km} (q^{m/2} − q^{−m/2})/m · Σ_i q^{m x_i})`.
    QExponentialMulti {
        s: Rational,
        k: i64,
        times: usize,
        order: u32,
    },
}

/// `Σ_i s^{2m c_i}` over the contents of `lambda`.
pub fn quantum_content_power(lambda: &Partition, s: &Rational, m: u32) -> Rational {
    lambda
        .contents()
        .into_iter()
        .map(|c| powi(s, 2 * m as i64 * c))
        .sum()
}

fn power_sum(contents: &[i64], k: u32) -> Rational {
    int(contents.iter().map(|&c| c.pow(k)).sum())
}

impl SymmetricInsertion {
    fn nvars(&self) -> usize {
        match self {
            SymmetricInsertion::QExponential { .. } => 1,
            SymmetricInsertion::QExponentialMulti { times, .. } => *times,
            _ => 0,
        }
    }

    fn order(&self) -> u32 {
        match self {
            SymmetricInsertion::QExponential { order, .. }
            | SymmetricInsertion::QExponentialMulti { order, .. } => *order,
            _ => 0,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            SymmetricInsertion::QContentSum { s, .. }
            | SymmetricInsertion::QExponential { s, .. }
            | SymmetricInsertion::QExponentialMulti { s, .. }
                if s.is_zero() =>
            {
                Err(Error::InvalidArgument("s must be nonzero (q = s²)".into()))
            }
            _ => Ok(()),
        }
    }

    /// `G` evaluated at the contents of `lambda`.
    pub fn evaluate(&self, lambda: &Partition) -> TSeries {
        let contents = lambda.contents();
        let (nvars, order) = (self.nvars(), self.order());
        match self {
            SymmetricInsertion::PowerSumProduct(ks) => TSeries::constant(
                nvars,
                order,
                ks.iter().map(|&k| power_sum(&contents, k)).product(),
            ),
            SymmetricInsertion::Polynomial(terms) => TSeries::constant(
                nvars,
                order,
                terms
                    .iter()
                    .map(|(c, ks)| {
                        c * ks
                            .iter()
                            .map(|&k| power_sum(&contents, k))
                            .product::<Rational>()
                    })
                    .sum(),
            ),
            SymmetricInsertion::QContentSum { s, m } => {
                TSeries::constant(nvars, order, quantum_content_power(lambda, s, *m))
            }
            SymmetricInsertion::QExponential { s, order } => {
                let rate = (s - s.recip()) * quantum_content_power(lambda, s, 1);
                TSeries::exp_linear(&[rate], *order)
            }
            SymmetricInsertion::QExponentialMulti { s, k, times, order } => {
                let rates: Vec<Rational> = (1..=*times as u32)
                    .map(|m| {
                        let sm = powi(s, m as i64);
                        powi(s, 2 * k * m as i64) * (&sm - sm.recip()) / int(m as i64)
                            * quantum_content_power(lambda, s, m)
                    })
                    .collect();
                TSeries::exp_linear(&rates, *order)
            }
        }
    }
}

/// A central element whose idempotent coefficients are truncated series in
/// deformation times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSeries {
    d: usize,
    nvars: usize,
    order: u32,
    coeffs: BTreeMap<Partition, TSeries>,
}

impl CentralSeries {
    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn coeff(&self, lambda: &Partition) -> Option<&TSeries> {
        self.coeffs.get(lambda)
    }

    /// Coefficient of `t^α`, as a central element in the idempotent basis.
    pub fn term(&self, alpha: &[u32]) -> CentralElement {
        let mut x = CentralElement::zero(self.d, Basis::Idempotent);
        for (lam, s) in &self.coeffs {
            x.add_to(lam, s.coeff(alpha));
        }
        x
    }

    /// The `t`-independent part (the whole element for scalar insertions).
    pub fn scalar(&self) -> CentralElement {
        self.term(&vec![0; self.nvars])
    }

    /// `⟨G · x⟩` on a surface of Euler characteristic `e`, as a series.
    pub fn correlator_with(&self, x: &CentralElement, e: i64) -> Result<TSeries> {
        let table = character_table(self.d)?;
        let x = x.to_idempotent_with_table(&table);
        let mut out = TSeries::zero(self.nvars, self.order);
        for (lam, s) in &self.coeffs {
            let c = x.coeff(lam);
            if c.is_zero() {
                continue;
            }
            let i = table.index_of(lam)?;
            out = &out + &s.scale(&(c * powi(&table.dim_ratio_at(i), e)));
        }
        Ok(out)
    }
}

/// `G(𝔍_1, …, 𝔍_d) = Σ_λ G(contents λ) 𝔉_λ`.
pub fn jm_insertion(g: &SymmetricInsertion, d: usize) -> Result<CentralSeries> {
    check_degree(d)?;
    g.validate()?;
    let coeffs = enumerate_partitions(d)
        .into_iter()
        .map(|lam| {
            let v = g.evaluate(&lam);
            (lam, v)
        })
        .collect();
    Ok(CentralSeries {
        d,
        nvars: g.nvars(),
        order: g.order(),
        coeffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn identity_class_is_sum_of_idempotents() {
        for d in 1..=5 {
            let x = CentralElement::unit(d).to_idempotent_basis().unwrap();
            for lam in enumerate_partitions(d) {
                assert_eq!(x.coeff(&lam), int(1));
            }
        }
    }

    #[test]
    fn transposition_class_in_idempotents() {
        let x = CentralElement::class_sum(&p(&[2, 1]))
            .to_idempotent_basis()
            .unwrap();
        assert_eq!(x.coeff(&p(&[3])), int(3));
        assert_eq!(x.coeff(&p(&[2, 1])), int(0));
        assert_eq!(x.coeff(&p(&[1, 1, 1])), int(-3));
    }

    #[test]
    fn idempotent_in_classes() {
        let f = CentralElement::idempotent(&p(&[2]))
            .to_class_basis()
            .unwrap();
        assert_eq!(f.coeff(&p(&[1, 1])), ratio(1, 2));
        assert_eq!(f.coeff(&p(&[2])), ratio(1, 2));
        let f1 = CentralElement::idempotent(&p(&[1]))
            .to_class_basis()
            .unwrap();
        assert_eq!(f1, CentralElement::unit(1));
    }

    #[test]
    fn class_products() {
        assert_eq!(
            class_product(&p(&[2]), &p(&[2])).unwrap(),
            CentralElement::unit(2)
        );
        let x = class_product(&p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(x.coeff(&p(&[1, 1, 1])), int(3));
        assert_eq!(x.coeff(&p(&[3])), int(3));
        assert_eq!(x.coeff(&p(&[2, 1])), int(0));
    }

    #[test]
    fn character_route_matches_direct_counting() {
        for d in 1..=5 {
            for a in enumerate_partitions(d) {
                for b in enumerate_partitions(d) {
                    assert_eq!(
                        class_product(&a, &b).unwrap(),
                        class_product_direct(&a, &b).unwrap(),
                        "{a} x {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn idempotency_and_negative_control() {
        for d in 1..=4 {
            assert!(idempotency_check(d).unwrap().passed);
        }
        let table = character_table(3).unwrap();
        let mut fs: Vec<CentralElement> = table
            .partitions()
            .iter()
            .map(|l| CentralElement::idempotent(l).to_class_basis().unwrap())
            .collect();
        fs[1].add_to(&p(&[3]), ratio(1, 100));
        let r = idempotency_check_elements(3, &fs).unwrap();
        assert!(!r.passed);
        assert!(r.counterexample.unwrap().contains("[2,1]"));
    }

    #[test]
    fn jm_content_sum_is_transposition_class() {
        let g = SymmetricInsertion::PowerSumProduct(vec![1]);
        let x = jm_insertion(&g, 2).unwrap().scalar();
        assert_eq!(x.coeff(&p(&[2])), int(1));
        assert_eq!(x.coeff(&p(&[1, 1])), int(-1));
        for d in 2..=8 {
            let x = jm_insertion(&g, d)
                .unwrap()
                .scalar()
                .to_class_basis()
                .unwrap();
            let t = CentralElement::class_sum(&Partition::transposition(d).unwrap());
            assert_eq!(x, t, "d={d}");
        }
    }

    #[test]
    fn constant_insertion_is_unit() {
        let g = SymmetricInsertion::Polynomial(vec![(int(1), vec![])]);
        for d in 1..=5 {
            let x = jm_insertion(&g, d)
                .unwrap()
                .scalar()
                .to_class_basis()
                .unwrap();
            assert_eq!(x, CentralElement::unit(d));
        }
    }

    #[test]
    fn correlator_matches_identity_coefficient() {
        let x = class_product(&p(&[3]), &p(&[3])).unwrap();
        let y = x.mul(&CentralElement::class_sum(&p(&[3]))).unwrap();
        assert_eq!(y.correlator(2).unwrap(), ratio(1, 3));
        assert_eq!(y.sphere_trace().unwrap(), ratio(1, 3));
    }

    #[test]
    fn json_shape() {
        let x = class_product(&p(&[2, 1]), &p(&[2, 1])).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"d":3,"basis":"class","coeffs":{"[1,1,1]":"3/1","[3]":"3/1"}}"#
        );
        let back: CentralElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn rejects_zero_s() {
        let g = SymmetricInsertion::QExponential {
            s: int(0),
            order: 2,
        };
        assert!(jm_insertion(&g, 2).is_err());
    }
}
