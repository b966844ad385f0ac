use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{rational, Monomial, Rational, Ring};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// On-disk form of a fan: rays plus maximal cones, ray indices 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanSpec {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

/// A validated simplicial fan. Cones are stored sorted, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
    /// First maximal cone whose rays do not extend to a lattice basis.
    singular: Option<usize>,
}

/// A maximal cone containing a point, with the point's coordinates in the
/// cone's ray basis (ordered as the cone's sorted ray indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeLocation {
    pub cone: usize,
    pub coefficients: Vec<i64>,
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

impl Fan {
    pub fn new(rank: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Fan> {
        let bad = |msg: String| Err(Error::InvalidFan(msg));
        if rank == 0 {
            return bad("rank must be positive".into());
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != rank {
                return bad(format!("ray {i} has length {}, expected {rank}", r.len()));
            }
            if gcd_all(r) != 1 {
                return bad(format!("ray {i} = {r:?} is not primitive"));
            }
        }
        let distinct: HashSet<&Vec<i64>> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return bad("repeated ray".into());
        }
        let mut canon: Vec<Vec<usize>> = Vec::with_capacity(cones.len());
        for (c, cone) in cones.iter().enumerate() {
            let mut s = cone.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != cone.len() {
                return bad(format!("cone {c} repeats a ray"));
            }
            if let Some(&i) = s.iter().find(|&&i| i >= rays.len()) {
                return bad(format!("cone {c} refers to missing ray {i}"));
            }
            canon.push(s);
        }
        canon.sort();
        canon.dedup();
        if canon.is_empty() {
            return bad("no cones".into());
        }
        for i in 0..rays.len() {
            if !canon.iter().any(|c| c.contains(&i)) {
                return bad(format!("ray {i} lies in no cone"));
            }
        }
        for (a, ca) in canon.iter().enumerate() {
            for (b, cb) in canon.iter().enumerate() {
                if a != b && ca.iter().all(|i| cb.contains(i)) {
                    return bad(format!("cone {ca:?} is a face of cone {cb:?}, list maximal cones only"));
                }
            }
        }
        let mut fan = Fan {
            rank,
            rays,
            cones: canon,
            singular: None,
        };
        for cone in &fan.cones {
            if linalg::rank(&fan.ray_matrix(cone), cone.len()) != cone.len() {
                return bad(format!("rays of cone {cone:?} are linearly dependent"));
            }
        }
        for a in 0..fan.cones.len() {
            for b in a + 1..fan.cones.len() {
                if !fan.meet_in_common_face(a, b) {
                    return bad(format!(
                        "cones {:?} and {:?} do not meet in a common face",
                        fan.cones[a], fan.cones[b]
                    ));
                }
            }
        }
        fan.singular = (0..fan.cones.len()).find(|&c| !fan.cone_is_unimodular(c));
        Ok(fan)
    }

    pub fn from_spec(spec: FanSpec) -> Result<Fan> {
        Fan::new(spec.rank, spec.rays, spec.cones)
    }

    pub fn from_json(text: &str) -> Result<Fan> {
        let spec: FanSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Fan::from_spec(spec)
    }

    pub fn spec(&self) -> FanSpec {
        FanSpec {
            rank: self.rank,
            rays: self.rays.clone(),
            cones: self.cones.clone(),
        }
    }

    /// Canonical single-line JSON: cones sorted, each cone's indices sorted.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.spec()).expect("plain data serializes")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn is_smooth(&self) -> bool {
        self.singular.is_none()
    }

    pub fn require_smooth(&self) -> Result<()> {
        match self.singular {
            Some(c) => Err(Error::NotSmooth(c)),
            None => Ok(()),
        }
    }

    /// Columns are the rays of `cone`.
    fn ray_matrix(&self, cone: &[usize]) -> Matrix {
        (0..self.rank)
            .map(|row| cone.iter().map(|&i| rational(self.rays[i][row])).collect())
            .collect()
    }

    fn cone_is_unimodular(&self, c: usize) -> bool {
        let cone = &self.cones[c];
        let k = cone.len();
        // gcd of the maximal minors is 1 exactly when the rays extend to a basis
        let m = self.ray_matrix(cone);
        let mut g = num_bigint::BigInt::zero();
        for rows in subsets(self.rank, k) {
            let sub: Matrix = rows.iter().map(|&r| m[r].clone()).collect();
            let d = linalg::determinant(&sub);
            g = g.gcd(d.numer());
        }
        g == num_bigint::BigInt::from(1)
    }

    /// Rational coordinates of `v` in the ray basis of cone `c`, if `v` lies in its span.
    fn coordinates(&self, c: usize, v: &[i64]) -> Option<Vec<Rational>> {
        let cone = &self.cones[c];
        let b: Vec<Rational> = v.iter().map(|&x| rational(x)).collect();
        linalg::solve_unique(&self.ray_matrix(cone), &b, cone.len())
    }

    /// Coordinates of `v` in cone `c` when `v` lies in that cone.
    pub(crate) fn cone_coordinates(&self, c: usize, v: &[i64]) -> Option<Vec<Rational>> {
        self.coordinates(c, v).filter(|a| a.iter().all(|x| !x.is_negative()))
    }

    pub fn contains(&self, c: usize, v: &[i64]) -> bool {
        self.cone_coordinates(c, v).is_some()
    }

    fn check_point(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::LengthMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Indices of all maximal cones containing `v`.
    pub fn cones_containing(&self, v: &[i64]) -> Result<Vec<usize>> {
        self.check_point(v)?;
        Ok((0..self.cones.len()).filter(|&c| self.contains(c, v)).collect())
    }

    pub fn in_support(&self, v: &[i64]) -> Result<bool> {
        Ok(!self.cones_containing(v)?.is_empty())
    }

    /// The lowest-indexed maximal cone containing `v`, with integer coordinates.
    pub fn locate_cone(&self, v: &[i64]) -> Result<ConeLocation> {
        self.require_smooth()?;
        self.check_point(v)?;
        for c in 0..self.cones.len() {
            if let Some(a) = self.cone_coordinates(c, v) {
                let coefficients = a
                    .iter()
                    .map(|x| {
                        debug_assert!(x.is_integer());
                        x.to_integer().to_i64().expect("coordinate fits in i64")
                    })
                    .collect();
                return Ok(ConeLocation { cone: c, coefficients });
            }
        }
        Err(Error::OutsideSupport(v.to_vec()))
    }

    /// Polynomial ring with one variable `x{i+1}` per ray.
    pub fn ray_ring(&self) -> Arc<Ring> {
        let names: Vec<String> = (1..=self.rays.len()).map(|i| format!("x{i}")).collect();
        Ring::with_names(&names).expect("distinct names")
    }

    /// Exponent vector of `x^v`, indexed by ray.
    pub fn exponents_of_point(&self, v: &[i64]) -> Result<Vec<u32>> {
        let loc = self.locate_cone(v)?;
        let mut e = vec![0u32; self.rays.len()];
        for (&ray, &a) in self.cones[loc.cone].iter().zip(&loc.coefficients) {
            e[ray] = a as u32;
        }
        Ok(e)
    }

    pub fn monomial_of_point(&self, v: &[i64]) -> Result<Monomial> {
        Ok(Monomial::from_dense(&self.exponents_of_point(v)?))
    }

    /// The value at `v` of the piecewise linear function that is 1 on every ray.
    pub fn pl_value(&self, v: &[i64]) -> Result<i64> {
        Ok(self.locate_cone(v)?.coefficients.iter().sum())
    }

    fn faces(&self) -> HashSet<Vec<usize>> {
        let mut out = HashSet::new();
        for cone in &self.cones {
            for s in subsets(cone.len(), 0..=cone.len()) {
                out.insert(s.iter().map(|&i| cone[i]).collect::<Vec<_>>());
            }
        }
        out
    }

    pub fn is_face(&self, rays: &[usize]) -> bool {
        self.cones.iter().any(|c| rays.iter().all(|i| c.contains(i)))
    }

    /// Minimal sets of rays spanning no cone, each sorted, in sorted order.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        let faces = self.faces();
        let mut out = BTreeSet::new();
        for f in &faces {
            let start = f.last().map_or(0, |&m| m + 1);
            for i in start..self.rays.len() {
                let mut s = f.clone();
                s.push(i);
                if faces.contains(&s) {
                    continue;
                }
                let minimal = (0..s.len()).all(|k| {
                    let mut t = s.clone();
                    t.remove(k);
                    faces.contains(&t)
                });
                if minimal {
                    out.insert(s);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Stanley-Reisner ideal in [`Fan::ray_ring`].
    pub fn sr_ideal(&self) -> Ideal {
        let gens: Vec<Monomial> = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| Monomial::from_pairs(s.into_iter().map(|i| (i, 1))))
            .collect();
        Ideal::from_monomials(&self.ray_ring(), &gens)
    }

    /// Whether the simplicial cones `a` and `b` meet along the cone on their
    /// common rays. A point of `a ∩ b` outside that face would give a linear
    /// relation among the rays with a sign pattern that some circuit of the
    /// relation space already has.
    fn meet_in_common_face(&self, a: usize, b: usize) -> bool {
        let (ca, cb) = (&self.cones[a], &self.cones[b]);
        let only_a: Vec<usize> = ca.iter().copied().filter(|i| !cb.contains(i)).collect();
        let only_b: Vec<usize> = cb.iter().copied().filter(|i| !ca.contains(i)).collect();
        let common: Vec<usize> = ca.iter().copied().filter(|i| cb.contains(i)).collect();
        // columns: only_a, common, -only_b
        let mut cols: Vec<Vec<i64>> = Vec::new();
        cols.extend(only_a.iter().map(|&i| self.rays[i].clone()));
        cols.extend(common.iter().map(|&i| self.rays[i].clone()));
        cols.extend(only_b.iter().map(|&i| self.rays[i].iter().map(|x| -x).collect()));
        let n = cols.len();
        let signed = |k: usize| k < only_a.len() || k >= only_a.len() + common.len();
        for size in 2..=n.min(self.rank + 1) {
            for s in subsets(n, size) {
                let m: Matrix = (0..self.rank)
                    .map(|row| s.iter().map(|&k| rational(cols[k][row])).collect())
                    .collect();
                let ns = linalg::nullspace(&m, size);
                if ns.len() != 1 || ns[0].iter().any(|x| x.is_zero()) {
                    continue;
                }
                let x = &ns[0];
                let constrained: Vec<&Rational> = s.iter().zip(x).filter(|(&k, _)| signed(k)).map(|(_, v)| v).collect();
                if constrained.is_empty() {
                    continue;
                }
                let pos = constrained.iter().all(|v| v.is_positive());
                let neg = constrained.iter().all(|v| v.is_negative());
                if pos || neg {
                    return false;
                }
            }
        }
        true
    }

    /// All lattice points of the support with `pl_value` at most `bound`, sorted.
    pub fn lattice_points(&self, bound: u32) -> Result<Vec<Vec<i64>>> {
        self.require_smooth()?;
        let mut out = BTreeSet::new();
        for cone in &self.cones {
            let mut coeffs = vec![0u32; cone.len()];
            loop {
                let mut p = vec![0i64; self.rank];
                for (&ray, &a) in cone.iter().zip(&coeffs) {
                    for (pi, ri) in p.iter_mut().zip(&self.rays[ray]) {
                        *pi += a as i64 * ri;
                    }
                }
                out.insert(p);
                if !next_composition(&mut coeffs, bound) {
                    break;
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}

/// Steps through non-negative vectors with entry sum at most `bound`.
fn next_composition(c: &mut [u32], bound: u32) -> bool {
    for i in 0..c.len() {
        let total: u32 = c.iter().sum();
        if total < bound {
            c[i] += 1;
            return true;
        }
        c[i] = 0;
    }
    false
}

/// Index subsets of `0..n` with sizes in `sizes`.
fn subsets(n: usize, sizes: impl Into<SizeRange>) -> Vec<Vec<usize>> {
    let SizeRange(lo, hi) = sizes.into();
    (0u64..1 << n)
        .filter(|m| (lo..=hi).contains(&(m.count_ones() as usize)))
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

struct SizeRange(usize, usize);

impl From<usize> for SizeRange {
    fn from(k: usize) -> Self {
        SizeRange(k, k)
    }
}

impl From<std::ops::RangeInclusive<usize>> for SizeRange {
    fn from(r: std::ops::RangeInclusive<usize>) -> Self {
        SizeRange(*r.start(), *r.end())
    }
}

/// Fans used throughout the tests and the command line.
pub mod standard {
    use super::Fan;

    pub fn affine_line() -> Fan {
        Fan::new(1, vec![vec![1]], vec![vec![0]]).unwrap()
    }

    pub fn affine_plane() -> Fan {
        Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1]]).unwrap()
    }

    pub fn projective_line() -> Fan {
        Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).unwrap()
    }

    pub fn projective_plane() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap()
    }

    pub fn p1_times_p1() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap()
    }

    /// Hirzebruch surface F_a.
    pub fn hirzebruch(a: i64) -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap()
    }

    /// The plane blown up at the origin: rays e1, e2, e1+e2.
    pub fn blowup_plane() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 2], vec![1, 2]],
        )
        .unwrap()
    }

    pub fn by_name(name: &str) -> Option<Fan> {
        Some(match name {
            "A1" => affine_line(),
            "A2" => affine_plane(),
            "P1" => projective_line(),
            "P2" => projective_plane(),
            "P1xP1" => p1_times_p1(),
            "F1" => hirzebruch(1),
            "BlA2" => blowup_plane(),
            _ => return None,
        })
    }
}
