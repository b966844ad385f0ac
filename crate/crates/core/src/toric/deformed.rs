use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Fan;
use crate::algebra::Monomial;
use crate::error::{Error, Result};

/// Two lattice points whose products disagree.
pub type PointPair = (Vec<i64>, Vec<i64>);

/// A finite integer combination of basis elements `y^v`, `v` a lattice point
/// of the fan's support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformedRingElement {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl DeformedRingElement {
    pub fn zero(rank: usize) -> Self {
        DeformedRingElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `y^v`, checked against the support of `fan`.
    pub fn basis(fan: &Fan, v: &[i64]) -> Result<Self> {
        if !fan.in_support(v)? {
            return Err(Error::OutsideSupport(v.to_vec()));
        }
        let mut e = Self::zero(fan.rank());
        e.terms.insert(v.to_vec(), BigInt::one());
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, v: &[i64]) -> BigInt {
        self.terms.get(v).cloned().unwrap_or_default()
    }

    fn accumulate(&mut self, v: Vec<i64>, c: BigInt) {
        let slot = self.terms.entry(v.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.accumulate(v.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out
    }
}

impl fmt::Display for DeformedRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (v, c)) in self.terms.iter().enumerate() {
            let point: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            let sign = if c < &BigInt::zero() {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            write!(f, "{sign}")?;
            let mag = if c < &BigInt::zero() { -c.clone() } else { c.clone() };
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "y^({})", point.join(","))?;
        }
        Ok(())
    }
}

impl Fan {
    /// The lowest-indexed maximal cone containing both `u` and `v`.
    pub fn common_cone(&self, u: &[i64], v: &[i64]) -> Result<Option<usize>> {
        let cu = self.cones_containing(u)?;
        if cu.is_empty() {
            return Err(Error::OutsideSupport(u.to_vec()));
        }
        let cv = self.cones_containing(v)?;
        if cv.is_empty() {
            return Err(Error::OutsideSupport(v.to_vec()));
        }
        Ok(cu.into_iter().find(|c| cv.contains(c)))
    }

    /// `y^u * y^v`: `y^(u+v)` when one cone holds both points, zero otherwise.
    pub fn deformed_product(&self, u: &[i64], v: &[i64]) -> Result<DeformedRingElement> {
        let mut out = DeformedRingElement::zero(self.rank());
        if self.common_cone(u, v)?.is_some() {
            let w: Vec<i64> = u.iter().zip(v).map(|(a, b)| a + b).collect();
            out.terms.insert(w, BigInt::one());
        }
        Ok(out)
    }

    /// Bilinear extension of [`Fan::deformed_product`].
    pub fn multiply(&self, a: &DeformedRingElement, b: &DeformedRingElement) -> Result<DeformedRingElement> {
        for x in [a, b] {
            if x.rank != self.rank() {
                return Err(Error::LengthMismatch {
                    expected: self.rank(),
                    got: x.rank,
                });
            }
        }
        let mut out = DeformedRingElement::zero(self.rank());
        for (u, cu) in &a.terms {
            for (v, cv) in &b.terms {
                for (w, c) in self.deformed_product(u, v)?.terms {
                    out.accumulate(w, c * cu * cv);
                }
            }
        }
        Ok(out)
    }

    /// `x^u * x^v` in the Stanley-Reisner ring: `None` when the product lies
    /// in the Stanley-Reisner ideal.
    pub fn sr_product(&self, u: &[i64], v: &[i64]) -> Result<Option<Monomial>> {
        let m = self.monomial_of_point(u)?.mul(&self.monomial_of_point(v)?);
        let killed = self
            .minimal_nonfaces()
            .iter()
            .any(|s| s.iter().all(|&i| m.exponent(i) > 0));
        Ok((!killed).then_some(m))
    }

    /// Compares the deformed product with Stanley-Reisner multiplication on
    /// every pair of lattice points with `pl_value <= bound`. Returns the
    /// number of pairs and those that disagree. A pair agrees when both
    /// products vanish, or `x^u x^v = x^(u+v)` survives and has degree
    /// `pl(u) + pl(v)`.
    pub fn sr_correspondence(&self, bound: u32) -> Result<(usize, Vec<PointPair>)> {
        let pts = self.lattice_points(bound)?;
        let mut bad = Vec::new();
        for u in &pts {
            for v in &pts {
                let y = self.deformed_product(u, v)?;
                let sr = self.sr_product(u, v)?;
                let ok = match (y.terms().iter().next(), sr) {
                    (None, None) => true,
                    (Some((w, c)), Some(m)) => {
                        c.is_one()
                            && y.terms().len() == 1
                            && self.monomial_of_point(w)? == m
                            && i64::from(m.degree()) == self.pl_value(u)? + self.pl_value(v)?
                    }
                    _ => false,
                };
                if !ok {
                    bad.push((u.clone(), v.clone()));
                }
            }
        }
        Ok((pts.len() * pts.len(), bad))
    }

    /// Whether `v` precedes `w`: some maximal cone contains `v`, `w` and
    /// `w - v`. Returns the lowest-indexed such cone.
    pub fn precedes(&self, v: &[i64], w: &[i64]) -> Result<Option<usize>> {
        let cv = self.cones_containing(v)?;
        if cv.is_empty() {
            return Err(Error::OutsideSupport(v.to_vec()));
        }
        let cw = self.cones_containing(w)?;
        if cw.is_empty() {
            return Err(Error::OutsideSupport(w.to_vec()));
        }
        let d: Vec<i64> = w.iter().zip(v).map(|(a, b)| a - b).collect();
        Ok(cv.into_iter().find(|&c| cw.contains(&c) && self.contains(c, &d)))
    }
}
