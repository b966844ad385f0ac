use std::sync::Arc;

use super::{homogenizing_weights, ideal_dimension_with, preferred_order, Budget, Ideal};
use crate::algebra::{Polynomial, Ring, TermOrder, Variable};
use crate::error::{Error, Result};

/// Pairs spent on a direct basis before the variety is split.
const DIRECT_PAIRS: usize = 400;
/// Nesting limit for splits; past it the whole budget goes to one basis.
const MAX_SPLITS: usize = 6;

/// Krull dimension of `R / ideal`: the largest set of variables carrying no
/// leading monomial of a Groebner basis.
///
/// When a basis is expensive, `V(I)` is split along a variable `v` into
/// `V(I + (v))` and `V(I) ∩ {v != 0}` and the larger dimension wins. The
/// second piece is the slice `v = 1` plus one when `I` is homogeneous for
/// positive weights, and `V(I + (1 - z v))` in one more variable otherwise.
pub fn ideal_dimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    let eligible = vec![true; ideal.ring().nvars()];
    split_dimension(ideal, budget, &eligible, 0)
}

fn split_dimension(ideal: &Ideal, budget: &Budget, eligible: &[bool], depth: usize) -> Result<usize> {
    let order = preferred_order(ideal);
    let capped = match budget.max_pairs {
        Some(max) if max <= DIRECT_PAIRS => None,
        _ if depth >= MAX_SPLITS => None,
        _ => Some(Budget::pairs(DIRECT_PAIRS)),
    };
    let Some(direct) = capped else {
        return ideal_dimension_with(ideal, &order, budget);
    };
    match ideal_dimension_with(ideal, &order, &direct) {
        Err(Error::ResourceExhausted { .. }) => {}
        other => return other,
    }
    let Some(v) = splitting_variable(ideal, eligible) else {
        return ideal_dimension_with(ideal, &order, budget);
    };
    let mut rest = eligible.to_vec();
    rest[v] = false;

    let ring = ideal.ring().clone();
    let mut on = ideal.generators().to_vec();
    on.push(Polynomial::var(&ring, v));
    let on = Ideal::new(&ring, on)?;
    let zero_branch = optional(split_dimension(&on, budget, &rest, depth + 1))?;

    let unit_branch = if homogenizing_weights(ideal).is_some() {
        // a positive grading scales any point with v != 0 onto v = 1
        let mut off = ideal.generators().to_vec();
        off.push(Polynomial::var(&ring, v).sub(&Polynomial::one(&ring))?);
        let off = Ideal::new(&ring, off)?;
        optional(split_dimension(&off, budget, &rest, depth + 1))?.map(|d| d + 1)
    } else {
        let (ext, z) = with_inverse(&ring)?;
        let map: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
        let mut off = ideal
            .generators()
            .iter()
            .map(|f| f.transport(&ext, &map))
            .collect::<Result<Vec<_>>>()?;
        let zv = Polynomial::var(&ext, z).mul(&Polynomial::var(&ext, v))?;
        off.push(Polynomial::one(&ext).sub(&zv)?);
        let off = Ideal::new(&ext, off)?;
        let mut rest_ext = rest.clone();
        rest_ext.push(false);
        optional(split_dimension(&off, budget, &rest_ext, depth + 1))?
    };

    zero_branch.max(unit_branch).ok_or(Error::EmptyVariety)
}

fn optional(r: Result<usize>) -> Result<Option<usize>> {
    match r {
        Ok(d) => Ok(Some(d)),
        Err(Error::EmptyVariety) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The eligible variable occurring in the most generators, then with the
/// largest total exponent, then the lowest id.
fn splitting_variable(ideal: &Ideal, eligible: &[bool]) -> Option<usize> {
    let n = ideal.ring().nvars();
    let mut count = vec![(0usize, 0u64); n];
    for g in ideal.generators() {
        let mut seen = vec![false; n];
        for (m, _) in g.terms() {
            for (v, e) in m.iter() {
                seen[v] = true;
                count[v].1 += u64::from(e);
            }
        }
        for v in 0..n {
            count[v].0 += usize::from(seen[v]);
        }
    }
    (0..n)
        .filter(|&v| eligible[v] && count[v].0 > 0)
        .max_by(|&a, &b| count[a].cmp(&count[b]).then_with(|| b.cmp(&a)))
}

fn with_inverse(ring: &Arc<Ring>) -> Result<(Arc<Ring>, usize)> {
    let mut k = 0usize;
    let name = loop {
        let candidate = format!("inv{k}");
        if ring.find(&candidate, 0).is_none() {
            break candidate;
        }
        k += 1;
    };
    let base = ring.variables().iter().map(|v| v.base_index + 1).max().unwrap_or(0);
    let mut vars = ring.variables().to_vec();
    let z = vars.len();
    vars.push(Variable::base(name, base));
    Ok((Ring::new(vars, TermOrder::GrevLex)?, z))
}
