use std::sync::Arc;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Character-lattice degrees for every variable of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGrading {
    rank: usize,
    degrees: Vec<Vec<i64>>,
}

/// Multidegree of a polynomial: the common degree of its terms, or the
/// marker that the terms disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyDegree {
    Homogeneous(Vec<i64>),
    Heterogeneous,
}

impl MultiGrading {
    pub fn new(rank: usize, degrees: Vec<Vec<i64>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Grading("lattice rank must be positive".into()));
        }
        if let Some(d) = degrees.iter().find(|d| d.len() != rank) {
            return Err(Error::Grading(format!(
                "degree vector {d:?} does not have length {rank}"
            )));
        }
        Ok(MultiGrading { rank, degrees })
    }

    /// Degrees for `ring` taken from its base symbols: variable
    /// `x_i^{(k)}` gets `base_degrees[i]` for every `k`.
    pub fn from_base(ring: &Ring, base_degrees: &[Vec<i64>]) -> Result<Self> {
        let rank = base_degrees.first().map_or(0, |d| d.len());
        let degrees = ring
            .variables()
            .iter()
            .map(|v| {
                base_degrees
                    .get(v.base_index)
                    .cloned()
                    .ok_or_else(|| Error::Grading(format!("no degree given for variable `{}`", v.name)))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiGrading::new(rank, degrees)
    }

    /// Degree `e_i` (unit vector) for the `i`-th base symbol.
    pub fn standard_basis(ring: &Ring, rank: usize, base_to_axis: impl Fn(usize) -> usize) -> Result<Self> {
        let mut base = Vec::new();
        for v in ring.variables() {
            while base.len() <= v.base_index {
                base.push(vec![0; rank]);
            }
            let axis = base_to_axis(v.base_index);
            if axis >= rank {
                return Err(Error::Grading(format!("axis {axis} out of range")));
            }
            base[v.base_index] = (0..rank).map(|j| i64::from(j == axis)).collect();
        }
        Self::from_base(ring, &base)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree_of(&self, var: usize) -> &[i64] {
        &self.degrees[var]
    }

    pub fn check_ring(&self, ring: &Ring) -> Result<()> {
        if ring.nvars() != self.degrees.len() {
            return Err(Error::Grading(format!(
                "grading covers {} variables, ring has {}",
                self.degrees.len(),
                ring.nvars()
            )));
        }
        Ok(())
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Vec<i64> {
        let mut d = vec![0i64; self.rank];
        for (i, e) in m.iter() {
            for (acc, x) in d.iter_mut().zip(&self.degrees[i]) {
                *acc += x * i64::from(e);
            }
        }
        d
    }

    /// Restriction to a sub-list of variables, e.g. after eliminating.
    pub fn select(&self, vars: &[usize]) -> MultiGrading {
        MultiGrading {
            rank: self.rank,
            degrees: vars.iter().map(|&i| self.degrees[i].clone()).collect(),
        }
    }

    /// Transfers degrees to another ring by matching base symbol names.
    pub fn transfer(&self, from: &Ring, to: &Arc<Ring>) -> Result<MultiGrading> {
        let degrees = to
            .variables()
            .iter()
            .map(|v| {
                from.variables()
                    .iter()
                    .position(|w| w.name == v.name)
                    .map(|i| self.degrees[i].clone())
                    .ok_or_else(|| Error::Grading(format!("no degree for `{}`", v.name)))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiGrading::new(self.rank, degrees)
    }
}

/// The multigraded degree of `f`, or `Heterogeneous` when its terms differ.
pub fn multidegree_of_polynomial(f: &Polynomial, g: &MultiGrading) -> Result<PolyDegree> {
    g.check_ring(f.ring())?;
    let mut terms = f.terms().iter();
    let first = match terms.next() {
        Some((m, _)) => g.monomial_degree(m),
        None => return Err(Error::UndefinedDegree),
    };
    for (m, _) in terms {
        if g.monomial_degree(m) != first {
            return Ok(PolyDegree::Heterogeneous);
        }
    }
    Ok(PolyDegree::Homogeneous(first))
}
