//! Built-in verification suites, one per acceptance criterion.
//!
//! [`Level::Fast`] shrinks every suite to `d ≤ 3`; [`Level::Full`] runs the
//! complete bounds. Each check reports its wall time against its limit.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::characters::{character_table, verify_orthogonality};
use crate::error::Result;
use crate::hurwitz::{hurwitz_number, verify_cut_suite, verify_cutjoin_evolution, SurfaceSpec};
use crate::oracles::tuple::{tuple_hurwitz, DEFAULT_BUDGET};
use crate::oracles::wick::{
    sphere_theta, sphere_two_faces, torus_one_face, verify_theorem, wick_contract, CombinatorialMap,
};
use crate::partitions::{enumerate_partitions, Partition};
use crate::rational::{self, int, ratio, Rational};
use crate::symfun::{cutjoin_eigencheck, verify_quantum_content};
use crate::yangmills::{verify_char_map, verify_tau_jm, verify_tilde_h, TauKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level {other:?} (expected fast or full)")),
        }
    }
}

impl Level {
    fn cap(self, full: usize) -> usize {
        match self {
            Level::Fast => full.min(3),
            Level::Full => full,
        }
    }
}

/// A named check with a time limit.
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub limit: Duration,
    run: fn(Level) -> Result<Outcome>,
}

/// What a check found: a pass flag and a one-line summary.
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed,
        detail: detail.into(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub within_limit: bool,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
    pub detail: String,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.passed && self.within_limit
    }

    /// `[PASS] 4 H₂(Δ,Δ) = 1/z_Δ … (0.12 s / 5 s): detail`.
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {} ({:.2} s / {} s): {}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms as f64 / 1000.0,
            self.limit_ms / 1000,
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self, level: Level) -> CheckResult {
        let start = Instant::now();
        let result = (self.run)(level);
        let elapsed = start.elapsed();
        let (passed, detail) = match result {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            id: self.id,
            name: self.name.to_string(),
            passed,
            within_limit: elapsed <= self.limit,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: self.limit.as_millis(),
            detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub level: Level,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

pub fn run(level: Level) -> SelftestReport {
    let checks: Vec<CheckResult> = criteria().iter().map(|c| c.run(level)).collect();
    SelftestReport {
        level,
        passed: checks.iter().all(CheckResult::ok),
        checks,
    }
}

pub fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            name: "three (3)-points on the sphere, three routes",
            limit: s(1),
            run: three_point_sphere,
        },
        Criterion {
            id: 2,
            name: "two points on the torus, three routes",
            limit: s(1),
            run: two_point_torus,
        },
        Criterion {
            id: 3,
            name: "degree-1 Wick contractions of the example maps",
            limit: s(1),
            run: degree_one_maps,
        },
        Criterion {
            id: 4,
            name: "H₂(Δ,Δ) = 1/z_Δ",
            limit: s(5),
            run: sphere_two_point,
        },
        Criterion {
            id: 5,
            name: "character orthogonality",
            limit: s(30),
            run: orthogonality,
        },
        Criterion {
            id: 6,
            name: "cut relations",
            limit: s(120),
            run: cuts,
        },
        Criterion {
            id: 7,
            name: "oracle equivalence",
            limit: s(300),
            run: oracles,
        },
        Criterion {
            id: 8,
            name: "cut-and-join eigenvalues and evolution",
            limit: s(60),
            run: cut_and_join,
        },
        Criterion {
            id: 9,
            name: "quantum-content identity",
            limit: s(10),
            run: quantum_content,
        },
        Criterion {
            id: 10,
            name: "Jucys–Murphy tau coefficients",
            limit: s(120),
            run: tau_coefficients,
        },
        Criterion {
            id: 11,
            name: "dimension expansion and 1/N coefficients",
            limit: s(120),
            run: large_n,
        },
    ]
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partitions are valid")
}

/// Engine, tuple count and the Wick tally of `map` agree on `want`, keyed
/// by the single tower profile.
fn three_routes(
    map: &CombinatorialMap,
    d: usize,
    want: &[(Partition, Rational)],
) -> Result<(bool, Vec<String>)> {
    let surface = map.surface()?;
    let wick = wick_contract(map, d, DEFAULT_BUDGET)?;
    let mut ok = true;
    let mut shown = Vec::new();
    for (tower, value) in want {
        let mut profiles = map.profiles();
        profiles.push(tower.clone());
        let engine = hurwitz_number(surface.euler, d, &profiles)?;
        let tuple = tuple_hurwitz(&surface, d, &profiles, DEFAULT_BUDGET)?;
        let w = wick.get(std::slice::from_ref(tower));
        ok &= engine == *value && tuple == *value && w == *value;
        shown.push(format!("{tower}:{}", rational::to_string(&engine)));
    }
    Ok((ok, shown))
}

fn three_point_sphere(_: Level) -> Result<Outcome> {
    let map = sphere_two_faces(p(&[3]), p(&[3]));
    let want = [
        (p(&[3]), ratio(1, 3)),
        (p(&[1, 1, 1]), ratio(1, 3)),
        (p(&[2, 1]), int(0)),
    ];
    let (ok, shown) = three_routes(&map, 3, &want)?;
    outcome(ok, format!("H₂((3),(3),·) = {}", shown.join(" ")))
}

fn two_point_torus(_: Level) -> Result<Outcome> {
    let mut ok = true;
    let mut shown = Vec::new();
    for (face, want) in [
        (p(&[1, 1]), [(p(&[1, 1]), int(2)), (p(&[2]), int(0))]),
        (p(&[2]), [(p(&[2]), int(2)), (p(&[1, 1]), int(0))]),
    ] {
        let (o, s) = three_routes(&torus_one_face(face.clone()), 2, &want)?;
        ok &= o;
        shown.push(format!("{face}→{}", s.join(" ")));
    }
    outcome(ok, format!("H₀: {}", shown.join("; ")))
}

fn degree_one_maps(_: Level) -> Result<Outcome> {
    let one = p(&[1]);
    let mut ok = true;
    let mut shown = Vec::new();
    for (map, exp) in [
        (sphere_two_faces(one.clone(), one.clone()), -1),
        (torus_one_face(one.clone()), -2),
    ] {
        let t = wick_contract(&map, 1, DEFAULT_BUDGET)?;
        let nonzero: Vec<_> = t
            .entries
            .iter()
            .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
            .collect();
        ok &= t.n_exponent == exp && nonzero.len() == 1 && *nonzero[0].1 == int(1);
        shown.push(format!("N^{} × {} entries", t.n_exponent, nonzero.len()));
    }
    outcome(ok, shown.join(", "))
}

fn sphere_two_point(level: Level) -> Result<Outcome> {
    let d_max = level.cap(6);
    let mut checked = 0;
    for d in 1..=d_max {
        for delta in enumerate_partitions(d) {
            checked += 1;
            let h = hurwitz_number(2, d, &[delta.clone(), delta.clone()])?;
            if h != ratio(1, delta.z() as i64) {
                return outcome(false, format!("{delta}: {}", rational::to_string(&h)));
            }
        }
    }
    outcome(true, format!("{checked} profiles, d ≤ {d_max}"))
}

fn orthogonality(level: Level) -> Result<Outcome> {
    let d_max = level.cap(8);
    for d in 0..=d_max {
        let r = verify_orthogonality(&*character_table(d)?);
        if !r.passed {
            return outcome(
                false,
                format!("d={d}: {}", r.counterexample.unwrap_or_default()),
            );
        }
    }
    outcome(true, format!("both relations, d ≤ {d_max}"))
}

fn cuts(level: Level) -> Result<Outcome> {
    let r = verify_cut_suite(level.cap(4), &[2, 1, 0, -1])?;
    let detail = match r.failures.first() {
        Some(f) => format!(
            "{} of {} failed, first: {}",
            r.failures.len(),
            r.checked,
            f.description
        ),
        None => format!(
            "{} identities, d ≤ {}, e ∈ {{2,1,0,−1}}",
            r.checked, r.d_max
        ),
    };
    outcome(r.failures.is_empty(), detail)
}

fn oracles(level: Level) -> Result<Outcome> {
    let d_max = level.cap(4);
    let surfaces = [
        SurfaceSpec::sphere(),
        SurfaceSpec::torus(),
        SurfaceSpec::projective_plane(),
        SurfaceSpec::klein_bottle(),
    ];
    let mut tuples = 0;
    for d in 1..=d_max {
        let parts = enumerate_partitions(d);
        for surface in &surfaces {
            // All one- and two-point data; three points on the sphere.
            let mut data: Vec<Vec<Partition>> = parts.iter().map(|a| vec![a.clone()]).collect();
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i..] {
                    data.push(vec![a.clone(), b.clone()]);
                    if surface.euler == 2 {
                        for c in &parts {
                            data.push(vec![a.clone(), b.clone(), c.clone()]);
                        }
                    }
                }
            }
            for profiles in data {
                tuples += 1;
                let engine = hurwitz_number(surface.euler, d, &profiles)?;
                let tuple = tuple_hurwitz(surface, d, &profiles, DEFAULT_BUDGET)?;
                if engine != tuple {
                    return outcome(
                        false,
                        format!("{surface} {profiles:?}: engine {engine} vs tuples {tuple}"),
                    );
                }
            }
        }
    }
    let mut maps = 0;
    for d in 1..=level.cap(3) {
        for a in enumerate_partitions(d) {
            let candidates = [
                sphere_two_faces(a.clone(), a.clone()),
                sphere_two_faces(a.clone(), Partition::ones(d)),
                torus_one_face(a.clone()),
                sphere_theta([a.clone(), Partition::ones(d), a.clone()]),
            ];
            for map in candidates {
                if map.towers() > 1 && d == 3 && level == Level::Fast {
                    continue;
                }
                maps += 1;
                let r = verify_theorem(&map, d, DEFAULT_BUDGET)?;
                if !r.passed {
                    return outcome(false, format!("map check failed at d={d}, faces {a}"));
                }
            }
        }
    }
    outcome(
        true,
        format!("{tuples} tuple counts d ≤ {d_max}, {maps} map tallies"),
    )
}

fn cut_and_join(level: Level) -> Result<Outcome> {
    let d_max = level.cap(6);
    for d in 0..=d_max {
        for lam in enumerate_partitions(d) {
            if !cutjoin_eigencheck(&lam)?.passed {
                return outcome(false, format!("L°s_{lam} is not a multiple of s_{lam}"));
            }
        }
    }
    let (dd, mm) = match level {
        Level::Fast => (3, 2),
        Level::Full => (4, 3),
    };
    let r = verify_cutjoin_evolution(dd, mm)?;
    outcome(
        r.passed,
        format!(
            "eigenvalues |λ| ≤ {d_max}; evolution {} coefficients, d ≤ {dd}, m ≤ {mm}",
            r.coefficients_checked
        ),
    )
}

fn quantum_content(level: Level) -> Result<Outcome> {
    let d_max = level.cap(6);
    let mut n = 0;
    for d in 0..=d_max {
        for lam in enumerate_partitions(d) {
            n += 1;
            if !verify_quantum_content(&lam) {
                return outcome(false, format!("fails at {lam}"));
            }
        }
    }
    outcome(true, format!("{n} diagrams, |λ| ≤ {d_max}"))
}

fn tau_coefficients(level: Level) -> Result<Outcome> {
    let d_max = level.cap(4);
    let order = match level {
        Level::Fast => 2,
        Level::Full => 3,
    };
    let s = ratio(2, 3);
    let mut checked = 0;
    for kind in [TauKind::Tl, TauKind::Bkp] {
        for k in [0, 1] {
            let r = verify_tau_jm(kind, k, &s, 2, order, d_max)?;
            checked += r.coefficients_checked;
            if !r.passed {
                return outcome(
                    false,
                    format!("{kind:?} k={k}: mismatch at {:?}", r.mismatch),
                );
            }
        }
    }
    outcome(
        true,
        format!("TL and BKP, {checked} coefficients, d ≤ {d_max}, t-order ≤ {order}"),
    )
}

fn large_n(level: Level) -> Result<Outcome> {
    let lam_max = level.cap(5);
    let r = verify_char_map(lam_max, &[-2, -1, 1, 2, 3], 6)?;
    if !r.passed {
        return outcome(false, format!("char map fails at {:?}", r.counterexample));
    }
    let mut checked = 0;
    for (e, k) in [(2, 0), (2, 1), (2, 2), (0, 1), (1, 0), (-1, 1)] {
        let t = verify_tilde_h(e, k, 3, 2, 4)?;
        checked += t.coefficients_checked;
        if !t.passed {
            return outcome(false, t.mismatch.unwrap_or_default());
        }
    }
    outcome(
        true,
        format!("s_λ(𝕀_N) and powers for |λ| ≤ {lam_max}; {checked} 1/N coefficients, d ≤ 3"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_level_passes() {
        let r = run(Level::Fast);
        for c in &r.checks {
            assert!(c.passed, "{}", c.line());
        }
        assert_eq!(r.checks.len(), 11);
    }
}
