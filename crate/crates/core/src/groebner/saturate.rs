use std::sync::Arc;

use super::{buchberger::groebner_basis, Budget, GroebnerBasis, Ideal};
use crate::algebra::{Polynomial, Ring, TermOrder, Variable};
use crate::error::Result;

/// The ring of `ideal` with one extra variable appended, ordered so that
/// the extra variable is eliminated first. Returns the ring and the id of
/// the new variable.
fn with_eliminated_variable(ring: &Arc<Ring>) -> Result<(Arc<Ring>, usize)> {
    let mut k = 0usize;
    let name = loop {
        let candidate = format!("elim{k}");
        if ring.find(&candidate, 0).is_none() {
            break candidate;
        }
        k += 1;
    };
    let base = ring.variables().iter().map(|v| v.base_index + 1).max().unwrap_or(0);
    let mut vars = ring.variables().to_vec();
    let z = vars.len();
    vars.push(Variable::base(name, base));
    Ok((Ring::new(vars, TermOrder::elimination(vec![z]))?, z))
}

/// Intersects `gens` (in the extended ring) with the original ring and
/// returns the reduced basis in the original term order.
fn eliminate(ring: &Arc<Ring>, ext: &Arc<Ring>, z: usize, gens: Vec<Polynomial>, budget: &Budget) -> Result<Ideal> {
    let basis = groebner_basis(ext, &gens, budget)?;
    let back: Vec<Option<usize>> = (0..ext.nvars()).map(|i| (i != z).then_some(i)).collect();
    let kept = basis
        .iter()
        .filter(|p| !p.uses_variable(z))
        .map(|p| p.transport(ring, &back))
        .collect::<Result<Vec<_>>>()?;
    let polys = groebner_basis(ring, &kept, budget)?;
    Ok(GroebnerBasis {
        ring: ring.clone(),
        polys,
    }
    .into_ideal())
}

fn lift(p: &Polynomial, ext: &Arc<Ring>) -> Result<Polynomial> {
    let map: Vec<Option<usize>> = (0..p.ring().nvars()).map(Some).collect();
    p.transport(ext, &map)
}

/// `I : g^infinity`, as `(I + (1 - z g))` intersected with the original ring.
pub fn saturate_by(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    if g.is_zero() {
        return Ok(Ideal::unit(&ring));
    }
    if g.is_constant() {
        return Ok(ideal.groebner_basis(budget)?.clone().into_ideal());
    }
    let (ext, z) = with_eliminated_variable(&ring)?;
    let mut gens = ideal
        .generators()
        .iter()
        .map(|f| lift(f, &ext))
        .collect::<Result<Vec<_>>>()?;
    let zg = Polynomial::var(&ext, z).mul(&lift(g, &ext)?)?;
    gens.push(Polynomial::one(&ext).sub(&zg)?);
    eliminate(&ring, &ext, z, gens, budget)
}

/// `A ∩ B` via `s A + (1 - s) B` with `s` eliminated.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    let ring = a.ring().clone();
    let b = b.to_ring(&ring)?;
    let (ext, s) = with_eliminated_variable(&ring)?;
    let sv = Polynomial::var(&ext, s);
    let one_minus = Polynomial::one(&ext).sub(&sv)?;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(sv.mul(&lift(f, &ext)?)?);
    }
    for f in b.generators() {
        gens.push(one_minus.mul(&lift(f, &ext)?)?);
    }
    eliminate(&ring, &ext, s, gens, budget)
}

/// `I : J^infinity`, the intersection of the saturations by each generator
/// of `J`. The result is given by its reduced basis in the ring's order.
pub fn saturate(ideal: &Ideal, by: &Ideal, budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    let by = by.to_ring(&ring)?;
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let s = saturate_by(ideal, g, budget)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => intersect(&prev, &s, budget)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&ring)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(i: &Ideal) -> Vec<String> {
        i.generators().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn monomial_saturation() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        let j = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(texts(&saturate(&i, &j, &Budget::default()).unwrap()), vec!["y"]);
    }

    #[test]
    fn unit_ideal_saturation_is_identity() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^3-y^2", "x*y"]).unwrap();
        let s = saturate(&i, &Ideal::unit(&r), &Budget::default()).unwrap();
        assert_eq!(
            s.generators(),
            i.groebner_basis(&Budget::default()).unwrap().polynomials()
        );
    }

    #[test]
    fn intersection_of_coordinate_lines() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let a = Ideal::parse(&r, &["x"]).unwrap();
        let b = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(texts(&intersect(&a, &b, &Budget::default()).unwrap()), vec!["x*y"]);
    }

    #[test]
    fn saturation_removes_embedded_point() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = Budget::default();
        let s = saturate(&i, &m, &b).unwrap();
        assert_eq!(texts(&s), vec!["x"]);
        assert_eq!(texts(&saturate(&s, &m, &b).unwrap()), vec!["x"]);
    }
}
