//! Exact truncated series.
//!
//! Two shapes are enough for everything in the crate:
//!
//! * [`TSeries`]: a multivariate power series in deformation times
//!   `t_1, …, t_n`, truncated at a total degree.
//! * [`Laurent`]: a one-variable Laurent polynomial, optionally with a
//!   precision floor below which coefficients are unknown. It models the
//!   square root `s` of `q` (exact, no floor) and expansions in `1/N`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::rational::{self, int, Rational};

/// Truncated multivariate power series `Σ c_α t^α` with `|α| ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    nvars: usize,
    order: u32,
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

impl TSeries {
    pub fn zero(nvars: usize, order: u32) -> Self {
        TSeries {
            nvars,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, order: u32, c: Rational) -> Self {
        let mut s = TSeries::zero(nvars, order);
        s.add_term(vec![0; nvars], c);
        s
    }

    /// The variable `t_i` itself (zero if `order == 0`).
    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        let mut s = TSeries::zero(nvars, order);
        let mut alpha = vec![0; nvars];
        alpha[i] = 1;
        s.add_term(alpha, Rational::one());
        s
    }

    /// `exp(Σ_i c_i t_i)` truncated at `order`.
    pub fn exp_linear(linear: &[Rational], order: u32) -> Self {
        let nvars = linear.len();
        let mut out = TSeries::zero(nvars, order);
        let mut alpha = vec![0u32; nvars];
        fn rec(
            i: usize,
            left: u32,
            alpha: &mut Vec<u32>,
            value: Rational,
            linear: &[Rational],
            out: &mut TSeries,
        ) {
            if i == linear.len() {
                out.add_term(alpha.clone(), value);
                return;
            }
            let mut v = value;
            for k in 0..=left {
                if k > 0 {
                    v = v * &linear[i] / int(k as i64);
                }
                alpha[i] = k;
                rec(i + 1, left - k, alpha, v.clone(), linear, out);
            }
            alpha[i] = 0;
        }
        rec(0, order, &mut alpha, Rational::one(), linear, &mut out);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.coeffs.iter()
    }

    /// Coefficient of `t^α`; zero if absent.
    pub fn coeff(&self, alpha: &[u32]) -> Rational {
        self.coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `t^k` for a single-variable series.
    pub fn coeff1(&self, k: u32) -> Rational {
        self.coeff(&[k])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, alpha: Vec<u32>, c: Rational) {
        assert_eq!(alpha.len(), self.nvars, "exponent arity");
        if alpha.iter().sum::<u32>() > self.order || c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(alpha.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&alpha);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = TSeries::zero(self.nvars, self.order);
        for (a, v) in &self.coeffs {
            out.add_term(a.clone(), v * c);
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "series arity mismatch");
    }
}

impl Add for &TSeries {
    type Output = TSeries;
    fn add(self, other: &TSeries) -> TSeries {
        self.check_compatible(other);
        let mut out = TSeries::zero(self.nvars, self.order.min(other.order));
        for (a, v) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.add_term(a.clone(), v.clone());
        }
        out
    }
}

impl Sub for &TSeries {
    type Output = TSeries;
    fn sub(self, other: &TSeries) -> TSeries {
        self + &(-other)
    }
}

impl Neg for &TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        self.scale(&int(-1))
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &TSeries {
    type Output = TSeries;
    fn mul(self, other: &TSeries) -> TSeries {
        self.check_compatible(other);
        let mut out = TSeries::zero(self.nvars, self.order.min(other.order));
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let alpha: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(alpha, x * y);
            }
        }
        out
    }
}

impl Serialize for TSeries {
    /// `{"order":3,"coeffs":{"[1,0]":"1/2",…}}`
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            order: u32,
            coeffs: Coeffs<'a>,
        }
        struct Coeffs<'a>(&'a BTreeMap<Vec<u32>, Rational>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    let key = format!(
                        "[{}]",
                        k.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    m.serialize_entry(&key, &rational::to_string(v))?;
                }
                m.end()
            }
        }
        Repr {
            order: self.order,
            coeffs: Coeffs(&self.coeffs),
        }
        .serialize(s)
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 + O(t^{})", self.order + 1);
        }
        let mut first = true;
        for (a, v) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", rational::to_string(v))?;
            for (i, &k) in a.iter().enumerate() {
                match (k, self.nvars) {
                    (0, _) => {}
                    (1, 1) => write!(f, "·t")?,
                    (k, 1) => write!(f, "·t^{k}")?,
                    (1, _) => write!(f, "·t{}", i + 1)?,
                    (k, _) => write!(f, "·t{}^{k}", i + 1)?,
                }
            }
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

/// Laurent polynomial `Σ c_k x^k`, exact above an optional floor.
///
/// When `floor` is `Some(f)`, coefficients of `x^k` with `k < f` are not
/// tracked; products propagate the floor conservatively.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, Rational>,
    floor: Option<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: Rational) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn one() -> Self {
        Laurent::constant(Rational::one())
    }

    pub fn monomial(k: i64, c: Rational) -> Self {
        let mut l = Laurent::zero();
        l.add_term(k, c);
        l
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Laurent::monomial(1, Rational::one())
    }

    /// `x + c`.
    pub fn x_plus(c: i64) -> Self {
        &Laurent::x() + &Laurent::constant(int(c))
    }

    pub fn with_floor(mut self, floor: i64) -> Self {
        self.set_floor(Some(floor));
        self
    }

    fn set_floor(&mut self, floor: Option<i64>) {
        let floor = match (self.floor, floor) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.floor = floor;
        if let Some(f) = floor {
            self.terms.retain(|&k, _| k >= f);
        }
    }

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    pub fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() || self.floor.is_some_and(|f| k < f) {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> Rational {
        if let Some(f) = self.floor {
            assert!(
                k >= f,
                "coefficient x^{k} is below the precision floor x^{f}"
            );
        }
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent present.
    pub fn top(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent present.
    pub fn bottom(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Laurent {
            terms: BTreeMap::new(),
            floor: self.floor,
        };
        for (&k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e + k, v.clone()))
                .collect(),
            floor: self.floor.map(|f| f + k),
        }
    }

    /// Substitutes `x → x^m` (`m > 0`).
    pub fn dilate(&self, m: i64) -> Self {
        assert!(m > 0);
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e * m, v.clone()))
                .collect(),
            floor: self.floor.map(|f| f * m),
        }
    }

    /// Exact nonnegative power (no truncation).
    pub fn pow(&self, n: u32) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a nonzero rational. Only meaningful without a floor.
    pub fn eval(&self, x: &Rational) -> Rational {
        assert!(
            self.floor.is_none(),
            "cannot evaluate a truncated expansion"
        );
        self.terms
            .iter()
            .map(|(&k, c)| c * rational::powi(x, k))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Integer power, with negative exponents expanded around the leading
    /// (highest) term and truncated below `floor`.
    ///
    /// Writes `f = c x^D (1 + g)` with `g` in negative powers only and uses
    /// the binomial series `Σ_j binom(e, j) g^j`.
    pub fn powi(&self, e: i64, floor: i64) -> Laurent {
        if e >= 0 && self.floor.is_none() {
            let mut acc = Laurent::one();
            for _ in 0..e {
                acc = &acc * self;
            }
            return acc.with_floor(floor);
        }
        let top = self.top().expect("power of zero series");
        let lead = self.terms[&top].clone();
        let g = self.shift(-top).scale(&lead.recip()) - Laurent::one();
        let lead_pow = Laurent::monomial(top * e, rational::powi(&lead, e));
        let rel_floor = floor - top * e;
        let mut sum = Laurent::one().with_floor(rel_floor);
        let mut gj = Laurent::one().with_floor(rel_floor);
        let mut binom = Rational::one();
        let mut j: i64 = 0;
        loop {
            j += 1;
            gj = (&gj * &g).with_floor(rel_floor);
            if gj.is_zero() {
                break;
            }
            binom = binom * int(e - j + 1) / int(j);
            sum = &sum + &gj.scale(&binom);
        }
        (&sum * &lead_pow).with_floor(floor)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, other: &Laurent) -> Laurent {
        let floor = match (self.floor, other.floor) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let mut out = Laurent {
            terms: BTreeMap::new(),
            floor,
        };
        for (&k, v) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, other: Laurent) -> Laurent {
        &self + &other
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(&int(-1))
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, other: &Laurent) -> Laurent {
        self + &(-other)
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, other: Laurent) -> Laurent {
        &self - &other
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, other: &Laurent) -> Laurent {
        // Unknown coefficients of one factor pollute everything below
        // (its floor + the other's top exponent).
        let floor = [
            self.floor.zip(other.top()).map(|(f, t)| f + t),
            other.floor.zip(self.top()).map(|(f, t)| f + t),
        ]
        .into_iter()
        .flatten()
        .min();
        let floor = match floor {
            Some(f) => Some(f),
            None if self.floor.is_some() || other.floor.is_some() => {
                // One side is identically zero above its floor.
                Some(self.floor.or(other.floor).unwrap())
            }
            None => None,
        };
        let mut out = Laurent {
            terms: BTreeMap::new(),
            floor,
        };
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, other: Laurent) -> Laurent {
        &self * &other
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (k, v)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", rational::to_string(v))?,
                1 => write!(f, "({})x", rational::to_string(v))?,
                k => write!(f, "({})x^{k}", rational::to_string(v))?,
            }
        }
        if let Some(fl) = self.floor {
            write!(f, " + O(x^{})", fl - 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn exp_linear_single_variable() {
        let e = TSeries::exp_linear(&[int(2)], 3);
        assert_eq!(e.coeff1(0), int(1));
        assert_eq!(e.coeff1(1), int(2));
        assert_eq!(e.coeff1(2), int(2));
        assert_eq!(e.coeff1(3), ratio(4, 3));
        assert_eq!(e.coeff1(4), int(0));
    }

    #[test]
    fn exp_is_a_homomorphism() {
        let a = TSeries::exp_linear(&[int(1), ratio(-1, 2)], 4);
        let b = TSeries::exp_linear(&[ratio(3, 2), int(5)], 4);
        let c = TSeries::exp_linear(&[ratio(5, 2), ratio(9, 2)], 4);
        assert_eq!(&a * &b, c);
    }

    #[test]
    fn laurent_arithmetic() {
        // (s - 1/s)(s + 1/s) = s^2 - s^-2
        let a = Laurent::monomial(1, int(1)) - Laurent::monomial(-1, int(1));
        let b = Laurent::monomial(1, int(1)) + Laurent::monomial(-1, int(1));
        let p = &a * &b;
        assert_eq!(
            p,
            Laurent::monomial(2, int(1)) - Laurent::monomial(-2, int(1))
        );
        assert_eq!(a.eval(&int(2)), ratio(3, 2));
    }

    #[test]
    fn negative_power_expansion() {
        // (x + 1)^{-1} = x^{-1} - x^{-2} + x^{-3} - …
        let inv = Laurent::x_plus(1).powi(-1, -5);
        for k in 1..=5 {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(inv.coeff(-k), int(sign));
        }
        let back = (&inv * &Laurent::x_plus(1)).with_floor(-4);
        assert_eq!(back.coeff(0), int(1));
        for k in 1..=4 {
            assert_eq!(back.coeff(-k), int(0));
        }
    }

    #[test]
    fn positive_power_with_floor() {
        let sq = Laurent::x_plus(2).powi(2, -3);
        assert_eq!(sq.coeff(2), int(1));
        assert_eq!(sq.coeff(1), int(4));
        assert_eq!(sq.coeff(0), int(4));
    }

    #[test]
    fn floor_propagates_through_products() {
        let a = Laurent::x_plus(1).powi(-1, -3);
        let b = Laurent::monomial(2, int(1));
        let p = &a * &b;
        assert_eq!(p.floor(), Some(-1));
    }
}
