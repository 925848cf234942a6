//! Wick contraction of complex Gaussian matrices along a combinatorial map.
//!
//! Each face `j` of the map is a polygon whose sides are edge matrices `Z_e`
//! (or `Ẑ_e` when traversed backwards) and whose corners carry formal source
//! letters `A_{w,slot}` sitting at watchtower `w`. With `M_j` the word read
//! around the face, the face contributes `∏_{r ∈ Δʲ} tr(M_j^r)`.
//!
//! Gaussian pairing only couples `Z_e` with `Ẑ_e`, and every complete
//! pairing glues `d` copies of each face into a `d`-sheeted cover. The index
//! lines of a pairing close up around each watchtower; the number of source
//! letters on a line, divided by the number of corners of the tower, is one
//! cycle of the tower's monodromy. Summing over all `(d!)ⁿ` pairings with
//! weight `1/∏ z_{Δʲ}` gives Hurwitz numbers indexed by the monodromy at the
//! towers, times `N^{−nd}`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::perm::Perm;
use super::tuple::{tuple_tally, ProfileTally};
use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_number, SurfaceSpec};
use crate::partitions::{check_degree, Partition};
use crate::rational::{self, Rational};

/// One side of a face, followed by the corner that comes after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    pub edge: usize,
    #[serde(default)]
    pub rev: bool,
    pub tower: usize,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub profile: Partition,
    pub sides: Vec<Side>,
}

/// Faces glued along oriented edges, with source corners at watchtowers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinatorialMap {
    pub faces: Vec<Face>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    Z { edge: usize, rev: bool },
    A { tower: usize },
}

/// The letters of `∏_j ∏_{r∈Δʲ} tr(M_j^r)`, stored trace by trace.
struct Word {
    letters: Vec<Letter>,
    follower: Vec<usize>,
    /// Positions of `Z_e` and of `Ẑ_e`, `d` of each per edge.
    fwd: Vec<Vec<usize>>,
    rev: Vec<Vec<usize>>,
    towers: usize,
    corners: Vec<usize>,
}

impl CombinatorialMap {
    pub fn from_json(s: &str) -> Result<Self> {
        let map: CombinatorialMap = serde_json::from_str(s)?;
        map.validate()?;
        Ok(map)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("maps serialize")
    }

    pub fn edges(&self) -> usize {
        self.faces
            .iter()
            .flat_map(|f| f.sides.iter().map(|s| s.edge + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn towers(&self) -> usize {
        self.faces
            .iter()
            .flat_map(|f| f.sides.iter().map(|s| s.tower + 1))
            .max()
            .unwrap_or(0)
    }

    /// `F + V − n`.
    pub fn euler(&self) -> i64 {
        self.faces.len() as i64 + self.towers() as i64 - self.edges() as i64
    }

    /// Maps where every edge is used once in each direction are orientable;
    /// those are the only ones accepted.
    pub fn surface(&self) -> Result<SurfaceSpec> {
        SurfaceSpec::new(self.euler(), true)
    }

    pub fn profiles(&self) -> Vec<Partition> {
        self.faces.iter().map(|f| f.profile.clone()).collect()
    }

    /// Same map with new face profiles.
    pub fn with_profiles(&self, profiles: &[Partition]) -> Result<Self> {
        if profiles.len() != self.faces.len() {
            return Err(Error::InvalidArgument(format!(
                "{} profiles given for {} faces",
                profiles.len(),
                self.faces.len()
            )));
        }
        let mut out = self.clone();
        for (f, p) in out.faces.iter_mut().zip(profiles) {
            f.profile = p.clone();
        }
        Ok(out)
    }

    fn corner_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.towers()];
        for s in self.faces.iter().flat_map(|f| &f.sides) {
            counts[s.tower] += 1;
        }
        counts
    }

    /// Checks edge and corner bookkeeping, then that a single sheet closes
    /// into exactly one index loop per tower.
    pub fn validate(&self) -> Result<()> {
        let malformed = |m: String| Err(Error::MalformedMap(m));
        if self.faces.is_empty() {
            return malformed("a map needs at least one face".into());
        }
        if let Some(i) = self.faces.iter().position(|f| f.sides.is_empty()) {
            return malformed(format!("face {i} has no sides"));
        }
        let n = self.edges();
        let mut uses = vec![(0usize, 0usize); n];
        for s in self.faces.iter().flat_map(|f| &f.sides) {
            if s.rev {
                uses[s.edge].1 += 1;
            } else {
                uses[s.edge].0 += 1;
            }
        }
        for (e, &(f, r)) in uses.iter().enumerate() {
            if f + r != 2 {
                return malformed(format!("edge {e} appears {} times, expected twice", f + r));
            }
            if f != 1 {
                return malformed(format!(
                    "edge {e} is traversed twice in the same direction; only orientable gluings are supported"
                ));
            }
        }
        let counts = self.corner_counts();
        let mut slots: Vec<Vec<usize>> = counts.iter().map(|_| Vec::new()).collect();
        for s in self.faces.iter().flat_map(|f| &f.sides) {
            slots[s.tower].push(s.slot);
        }
        for (w, mut ss) in slots.into_iter().enumerate() {
            if ss.is_empty() {
                return malformed(format!("tower {w} has no corners"));
            }
            ss.sort_unstable();
            if ss != (0..ss.len()).collect::<Vec<_>>() {
                return malformed(format!("tower {w} slots must be 0..{}", ss.len()));
            }
        }
        let ones = self.with_profiles(&vec![Partition::ones(1); self.faces.len()])?;
        let word = ones.word(1);
        let pairing: Vec<Perm> = (0..n).map(|_| Perm::identity(1)).collect();
        let loops = word.loops(&pairing)?;
        for (w, lens) in loops.iter().enumerate() {
            if lens.len() != 1 {
                return malformed(format!(
                    "corners of tower {w} do not close into a single vertex ({} loops)",
                    lens.len()
                ));
            }
        }
        Ok(())
    }

    fn word(&self, d: usize) -> Word {
        let n = self.edges();
        let mut letters = Vec::new();
        let mut follower = Vec::new();
        let mut fwd = vec![Vec::new(); n];
        let mut rev = vec![Vec::new(); n];
        for face in &self.faces {
            for &r in face.profile.parts() {
                let start = letters.len();
                for _ in 0..r {
                    for s in &face.sides {
                        let pos = letters.len();
                        if s.rev {
                            rev[s.edge].push(pos);
                        } else {
                            fwd[s.edge].push(pos);
                        }
                        letters.push(Letter::Z {
                            edge: s.edge,
                            rev: s.rev,
                        });
                        letters.push(Letter::A { tower: s.tower });
                    }
                }
                let end = letters.len();
                follower.extend((start + 1..end).chain(std::iter::once(start)));
            }
        }
        debug_assert!(fwd.iter().chain(&rev).all(|v| v.len() == d));
        Word {
            letters,
            follower,
            fwd,
            rev,
            towers: self.towers(),
            corners: self.corner_counts(),
        }
    }
}

impl Word {
    /// Loop lengths (in tower cycles) per tower for one pairing; `pairing[e]`
    /// sends the `k`-th `Z_e` to the `pairing[e](k)`-th `Ẑ_e`.
    fn loops(&self, pairing: &[Perm]) -> Result<Vec<Vec<u32>>> {
        let mut partner = vec![usize::MAX; self.letters.len()];
        for (e, p) in pairing.iter().enumerate() {
            for (k, &pos) in self.fwd[e].iter().enumerate() {
                let other = self.rev[e][p.apply(k)];
                partner[pos] = other;
                partner[other] = pos;
            }
        }
        let mut seen = vec![false; self.letters.len()];
        let mut out = vec![Vec::new(); self.towers];
        for start in 0..self.letters.len() {
            let Letter::A { tower } = self.letters[start] else {
                continue;
            };
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            loop {
                seen[x] = true;
                len += 1;
                x = self.follower[partner[self.follower[x]]];
                match self.letters[x] {
                    Letter::A { tower: w } if w == tower => {}
                    _ => {
                        return Err(Error::MalformedMap(format!(
                            "an index line leaves tower {tower}"
                        )))
                    }
                }
                if x == start {
                    break;
                }
            }
            let k = self.corners[tower];
            if !len.is_multiple_of(k) {
                return Err(Error::MalformedMap(format!(
                    "an index line at tower {tower} visits {len} corners, not a multiple of {k}"
                )));
            }
            out[tower].push((len / k) as u32);
        }
        Ok(out)
    }
}

/// Largest pairing count accepted by default.
pub use super::tuple::DEFAULT_BUDGET;

/// Sums over all Wick pairings of the map's trace monomials, grouping them
/// by the monodromy at each tower.
pub fn wick_contract(map: &CombinatorialMap, d: usize, budget: u128) -> Result<ProfileTally> {
    check_degree(d)?;
    map.validate()?;
    if let Some(f) = map.faces.iter().find(|f| f.profile.weight() != d) {
        return Err(crate::characters::weight_mismatch(
            &Partition::ones(d),
            &f.profile,
        ));
    }
    let n = map.edges();
    let dfact: u128 = (1..=d as u128).product();
    let needed = dfact.saturating_pow(n as u32);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let word = map.word(d);
    let perms = super::perm::all_perms(d);
    let count = |first: &Perm| -> Result<BTreeMap<Vec<Partition>, u64>> {
        let mut acc = BTreeMap::new();
        let mut idx = vec![0usize; n.saturating_sub(1)];
        loop {
            let pairing: Vec<Perm> = std::iter::once(first.clone())
                .chain(idx.iter().map(|&i| perms[i].clone()))
                .collect();
            let key = word
                .loops(&pairing)?
                .into_iter()
                .map(Partition::from_unsorted)
                .collect();
            *acc.entry(key).or_insert(0) += 1;
            let mut k = idx.len();
            loop {
                if k == 0 {
                    return Ok(acc);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < perms.len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    };
    let partial: Vec<BTreeMap<Vec<Partition>, u64>> =
        perms.par_iter().map(count).collect::<Result<_>>()?;
    let weight: Rational = map
        .faces
        .iter()
        .map(|f| rational::big(f.profile.z_big()))
        .product::<Rational>()
        .recip();
    let mut tally = ProfileTally::zeros(d, map.towers(), -((n * d) as i64));
    for part in partial {
        for (key, c) in part {
            *tally.entries.entry(key).or_insert_with(Rational::zero) +=
                rational::int(c as i64) * &weight;
        }
    }
    Ok(tally)
}

/// One tally entry where the routes disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TallyMismatch {
    pub towers: Vec<Partition>,
    #[serde(with = "crate::rational::serde_str")]
    pub wick: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub tuple: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub engine: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub d: usize,
    pub euler: i64,
    pub faces: usize,
    pub edges: usize,
    pub towers: usize,
    pub n_exponent: i64,
    /// `Σ` of all Wick entries against `(d!)ⁿ/∏ z_{Δʲ}`.
    pub total_ok: bool,
    pub wick: ProfileTally,
    pub mismatches: Vec<TallyMismatch>,
    pub passed: bool,
}

/// Wick contraction against tuple counting and the character formula,
/// entry by entry.
pub fn verify_theorem(map: &CombinatorialMap, d: usize, budget: u128) -> Result<TheoremReport> {
    let wick = wick_contract(map, d, budget)?;
    let surface = map.surface()?;
    let profiles = map.profiles();
    let towers = map.towers();
    let tuple = tuple_tally(&surface, d, &profiles, towers, budget)?;
    let n = map.edges();
    let mut mismatches = Vec::new();
    for (key, w) in &wick.entries {
        let t = tuple.get(key);
        let all: Vec<Partition> = profiles.iter().chain(key).cloned().collect();
        let h = hurwitz_number(surface.euler, d, &all)?;
        if *w != t || t != h {
            mismatches.push(TallyMismatch {
                towers: key.clone(),
                wick: w.clone(),
                tuple: t,
                engine: h,
            });
        }
    }
    let dfact = rational::big(crate::rational::factorial(d));
    let expected_total = (0..n).fold(Rational::from_integer(1.into()), |acc, _| acc * &dfact)
        / profiles
            .iter()
            .map(|p| rational::big(p.z_big()))
            .product::<Rational>();
    let total_ok = wick.total() == expected_total;
    let n_exponent = wick.n_exponent;
    Ok(TheoremReport {
        d,
        euler: surface.euler,
        faces: map.faces.len(),
        edges: n,
        towers,
        n_exponent,
        total_ok,
        passed: total_ok && mismatches.is_empty() && n_exponent == -((n * d) as i64),
        wick,
        mismatches,
    })
}

fn side(edge: usize, rev: bool, tower: usize, slot: usize) -> Side {
    Side {
        edge,
        rev,
        tower,
        slot,
    }
}

/// Sphere from two one-gons glued along one edge, with one tower:
/// `tr(ZA₀)^… tr(ẐA₁)^…`.
pub fn sphere_two_faces(p0: Partition, p1: Partition) -> CombinatorialMap {
    CombinatorialMap {
        faces: vec![
            Face {
                profile: p0,
                sides: vec![side(0, false, 0, 0)],
            },
            Face {
                profile: p1,
                sides: vec![side(0, true, 0, 1)],
            },
        ],
    }
}

/// Torus from one square with opposite sides identified and one tower:
/// `tr(Z₀A₀Z₁A₁Ẑ₀A₂Ẑ₁A₃)`.
pub fn torus_one_face(p: Partition) -> CombinatorialMap {
    CombinatorialMap {
        faces: vec![Face {
            profile: p,
            sides: vec![
                side(0, false, 0, 0),
                side(1, false, 0, 1),
                side(0, true, 0, 2),
                side(1, true, 0, 3),
            ],
        }],
    }
}

/// Sphere cut into three two-gons by a theta graph, with two towers.
pub fn sphere_theta(p: [Partition; 3]) -> CombinatorialMap {
    let [p0, p1, p2] = p;
    CombinatorialMap {
        faces: vec![
            Face {
                profile: p0,
                sides: vec![side(0, false, 0, 0), side(1, true, 1, 0)],
            },
            Face {
                profile: p1,
                sides: vec![side(1, false, 0, 1), side(2, true, 1, 2)],
            },
            Face {
                profile: p2,
                sides: vec![side(2, false, 0, 2), side(0, true, 1, 1)],
            },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_sheet_examples() {
        let m = sphere_two_faces(p(&[1]), p(&[1]));
        assert_eq!(m.euler(), 2);
        let t = wick_contract(&m, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.n_exponent, -1);
        assert_eq!(t.get(&[p(&[1])]), int(1));
        let m = torus_one_face(p(&[1]));
        assert_eq!(m.euler(), 0);
        let t = wick_contract(&m, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.n_exponent, -2);
        assert_eq!(t.get(&[p(&[1])]), int(1));
    }

    #[test]
    fn six_gluings_of_two_triangles() {
        let m = sphere_two_faces(p(&[3]), p(&[3]));
        let t = wick_contract(&m, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.get(&[p(&[3])]), ratio(1, 3));
        assert_eq!(t.get(&[p(&[1, 1, 1])]), ratio(1, 3));
        assert_eq!(t.get(&[p(&[2, 1])]), int(0));
        assert_eq!(t.total(), ratio(2, 3));
    }

    #[test]
    fn theorem_on_example_maps() {
        for d in 1..=3 {
            for a in crate::partitions::enumerate_partitions(d) {
                for b in crate::partitions::enumerate_partitions(d) {
                    let r =
                        verify_theorem(&sphere_two_faces(a.clone(), b.clone()), d, DEFAULT_BUDGET)
                            .unwrap();
                    assert!(r.passed, "{:?}", r.mismatches);
                }
            }
        }
        for d in 1..=2 {
            for a in crate::partitions::enumerate_partitions(d) {
                let r = verify_theorem(&torus_one_face(a), d, DEFAULT_BUDGET).unwrap();
                assert!(r.passed, "{:?}", r.mismatches);
            }
        }
        let r = verify_theorem(
            &sphere_theta([p(&[2]), p(&[2]), p(&[1, 1])]),
            2,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(r.passed, "{:?}", r.mismatches);
        assert_eq!(r.towers, 2);
    }

    #[test]
    fn torus_reproduces_two() {
        let t = wick_contract(&torus_one_face(p(&[1, 1])), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.get(&[p(&[1, 1])]), int(2));
        assert_eq!(t.get(&[p(&[2])]), int(0));
    }

    #[test]
    fn malformed_maps() {
        let mut m = sphere_two_faces(p(&[1]), p(&[1]));
        m.faces[1].sides[0].rev = false;
        assert!(matches!(m.validate(), Err(Error::MalformedMap(_))));
        let mut m = sphere_two_faces(p(&[1]), p(&[1]));
        m.faces[1].sides[0].edge = 1;
        assert!(matches!(m.validate(), Err(Error::MalformedMap(_))));
        // Two towers where the gluing only produces one vertex.
        let mut m = sphere_two_faces(p(&[1]), p(&[1]));
        m.faces[1].sides[0].tower = 1;
        m.faces[1].sides[0].slot = 0;
        assert!(matches!(m.validate(), Err(Error::MalformedMap(_))));
    }

    #[test]
    fn json_roundtrip() {
        let m = sphere_two_faces(p(&[3]), p(&[3]));
        let json = r#"{"faces":[{"profile":[3],"sides":[{"edge":0,"rev":false,"tower":0,"slot":0}]},
                        {"profile":[3],"sides":[{"edge":0,"rev":true,"tower":0,"slot":1}]}]}"#;
        assert_eq!(CombinatorialMap::from_json(json).unwrap(), m);
        assert_eq!(CombinatorialMap::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn budget() {
        let err = wick_contract(&torus_one_face(p(&[3])), 3, 35).unwrap_err();
        assert!(err.is_refusal());
    }
}
