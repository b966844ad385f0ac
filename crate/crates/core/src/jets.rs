//! Jet rings, the derivation `D`, jet ideals `J_m V`, multi-contact ideals
//! of chains and the jet-dimension estimate of the log canonical threshold.

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{rational, Monomial, MultiGrading, Polynomial, Rational, Ring, Term, TermOrder};
use crate::error::{Error, Result};
use crate::groebner::{ideal_dimension, Budget, Ideal};

/// The jet ring of order `m` on the base symbols of `ring`, graded reverse
/// lex, variables laid out as in [`Ring::jets`].
pub fn jet_ring(ring: &Ring, m: usize) -> Result<Arc<Ring>> {
    Ring::jets(&ring.base_names(), m, TermOrder::GrevLex)
}

/// Degrees on a jet ring: `x_i^{(k)}` gets the degree of `x_i`.
pub fn jet_grading(ring: &Ring, base_degrees: &[Vec<i64>]) -> Result<MultiGrading> {
    MultiGrading::from_base(ring, base_degrees)
}

/// One application of the derivation `D` with `D(x^{(k)}) = x^{(k+1)}`.
pub fn derive(f: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    let next: Vec<Option<usize>> = ring
        .variables()
        .iter()
        .map(|v| ring.find(&v.name, v.jet_order + 1))
        .collect();
    let mut terms: Vec<Term> = Vec::new();
    for (m, c) in f.terms() {
        for (v, e) in m.iter() {
            let w = next[v].ok_or(Error::RingTooSmall {
                needed: ring.variable(v).jet_order + 1,
                available: ring.max_jet_order(),
            })?;
            let lowered = m.div(&Monomial::var(v)).expect("variable divides");
            terms.push((lowered.mul(&Monomial::var(w)), c * Rational::from_integer(e.into())));
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// `D^k(f)`, the `k`-th prolongation of `f`.
pub fn prolong(f: &Polynomial, k: usize) -> Result<Polynomial> {
    let ring = f.ring();
    let top = f
        .terms()
        .iter()
        .flat_map(|(m, _)| m.support())
        .map(|v| ring.variable(v).jet_order)
        .max();
    if let Some(top) = top {
        if top + k > ring.max_jet_order() {
            return Err(Error::RingTooSmall {
                needed: top + k,
                available: ring.max_jet_order(),
            });
        }
    }
    let mut g = f.clone();
    for _ in 0..k {
        g = derive(&g)?;
    }
    Ok(g)
}

/// The `(m+1) r` equations `f_i^{(k)}`, `0 <= k <= m`, of `J_m V`.
pub fn jet_ideal(ideal: &Ideal, m: usize) -> Result<Ideal> {
    let ring = jet_ring(ideal.ring(), m)?;
    let base = ideal
        .generators()
        .iter()
        .map(|f| f.to_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    let mut gens = Vec::with_capacity(base.len() * (m + 1));
    for k in 0..=m {
        for f in &base {
            gens.push(prolong(f, k)?);
        }
    }
    Ideal::new(&ring, gens)
}

/// Codimension of `V(ideal)` in its ambient ring.
pub fn codimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    Ok(ideal.ring().nvars() - ideal_dimension(ideal, budget)?)
}

/// A chain `V_s ⊆ ... ⊆ V_1` of subvarieties of affine space, stored as
/// ideals `I_1, ..., I_s` (so `I_1 ⊆ ... ⊆ I_s`).
#[derive(Debug, Clone)]
pub struct SubvarietyChain {
    ring: Arc<Ring>,
    ideals: Vec<Ideal>,
    codimensions: Vec<usize>,
}

impl SubvarietyChain {
    /// Verifies each containment by reducing the generators of `I_i`
    /// modulo a basis of `I_{i+1}`.
    pub fn new(ideals: Vec<Ideal>, budget: &Budget) -> Result<Self> {
        let ring = ideals
            .first()
            .map(|i| i.ring().clone())
            .ok_or_else(|| Error::OutOfRange("empty chain".into()))?;
        let ideals = ideals
            .into_iter()
            .map(|i| i.to_ring(&ring))
            .collect::<Result<Vec<_>>>()?;
        for (i, pair) in ideals.windows(2).enumerate() {
            let gb = pair[1].groebner_basis(budget)?;
            for f in pair[0].generators() {
                if !gb.contains(f)? {
                    return Err(Error::NotAChain { index: i + 2 });
                }
            }
        }
        let codimensions = ideals
            .iter()
            .map(|i| codimension(i, budget))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubvarietyChain {
            ring,
            ideals,
            codimensions,
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn codimensions(&self) -> &[usize] {
        &self.codimensions
    }
}

/// Suffix sums `λ_i = m_i + ... + m_s`.
pub fn lambda_of(mtuple: &[usize]) -> Vec<usize> {
    let mut out = vec![0; mtuple.len()];
    let mut acc = 0;
    for i in (0..mtuple.len()).rev() {
        acc += mtuple[i];
        out[i] = acc;
    }
    out
}

/// Equations of the multi-contact locus `{ord V_i >= λ_i for all i}` in the
/// jet ring of order `order`: `f^{(k)}` for generators of `I_s` with
/// `k < λ_s`, and for generators of `I_i` with `λ_{i+1} <= k < λ_i`.
pub fn contact_ideal(chain: &SubvarietyChain, mtuple: &[usize], order: usize) -> Result<Ideal> {
    if mtuple.len() != chain.len() {
        return Err(Error::LengthMismatch {
            expected: chain.len(),
            got: mtuple.len(),
        });
    }
    let lambda = lambda_of(mtuple);
    let top = lambda.first().copied().unwrap_or(0);
    if top > 0 && order + 1 < top {
        return Err(Error::RingTooSmall {
            needed: top - 1,
            available: order,
        });
    }
    let ring = jet_ring(&chain.ring, order)?;
    let mut gens = Vec::new();
    for (i, ideal) in chain.ideals.iter().enumerate() {
        let lo = lambda.get(i + 1).copied().unwrap_or(0);
        for k in lo..lambda[i] {
            for f in ideal.generators() {
                gens.push(prolong(&f.to_ring(&ring)?, k)?);
            }
        }
    }
    Ideal::new(&ring, gens)
}

/// Result of [`lct_estimate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LctEstimate {
    /// `d - max_m dim J_m V / (m + 1)`.
    pub value: Rational,
    /// Smallest `m` attaining the maximum.
    pub argmax: usize,
    /// `dim J_m V` for `m = 0, ..., M`.
    pub dimensions: Vec<usize>,
    /// Set only when the caller vouched that `M` is divisible enough for
    /// the maximum to be attained.
    pub exact: bool,
}

/// Upper bound on the log canonical threshold of `(A^d, V)` from jet
/// dimensions up to order `max_order`. Jet orders run in parallel.
pub fn lct_estimate(
    ideal: &Ideal,
    ambient_dim: usize,
    max_order: usize,
    sufficiently_divisible: bool,
    budget: &Budget,
) -> Result<LctEstimate> {
    let dimensions = (0..=max_order)
        .into_par_iter()
        .map(|m| ideal_dimension(&jet_ideal(ideal, m)?, budget))
        .collect::<Result<Vec<_>>>()?;
    let mut best = Rational::zero();
    let mut argmax = 0;
    for (m, &d) in dimensions.iter().enumerate() {
        let ratio = Rational::new((d as i64).into(), ((m + 1) as i64).into());
        if m == 0 || ratio > best {
            best = ratio;
            argmax = m;
        }
    }
    Ok(LctEstimate {
        value: rational(ambient_dim as i64) - best,
        argmax,
        dimensions,
        exact: sufficiently_divisible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn jets(names: &[&str], m: usize) -> Arc<Ring> {
        Ring::jets(names, m, TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn first_prolongation_of_cusp() {
        let r = jets(&["x", "y"], 2);
        let f = parse_polynomial("x^3-y^2", &r).unwrap();
        assert_eq!(prolong(&f, 0).unwrap(), f);
        let expected = parse_polynomial("3*x^2*x_1-2*y*y_1", &r).unwrap();
        assert_eq!(prolong(&f, 1).unwrap(), expected);
        let second = parse_polynomial("6*x*x_1^2+3*x^2*x_2-2*y_1^2-2*y*y_2", &r).unwrap();
        assert_eq!(prolong(&f, 2).unwrap(), second);
    }

    #[test]
    fn ring_too_small() {
        let r = jets(&["x"], 1);
        let f = parse_polynomial("x_1", &r).unwrap();
        assert_eq!(
            prolong(&f, 1),
            Err(Error::RingTooSmall {
                needed: 2,
                available: 1
            })
        );
    }

    #[test]
    fn jet_ideal_of_cusp() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^3-y^2"]).unwrap();
        let j = jet_ideal(&i, 1).unwrap();
        let texts: Vec<String> = j.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["x^3-y^2", "3*x^2*x_1-2*y*y_1"]);
        let j0 = jet_ideal(&i, 0).unwrap();
        assert_eq!(j0.generators()[0].to_string(), "x^3-y^2");
    }

    #[test]
    fn lambda_is_suffix_sums() {
        assert_eq!(lambda_of(&[1, 1]), vec![2, 1]);
        assert_eq!(lambda_of(&[2, 0, 3]), vec![5, 3, 3]);
    }

    fn det_chain() -> SubvarietyChain {
        let r = Ring::with_names(&["a11", "a12", "a21", "a22"]).unwrap();
        let v1 = Ideal::parse(&r, &["a11*a22-a12*a21"]).unwrap();
        let v2 = Ideal::parse(&r, &["a11", "a21"]).unwrap();
        SubvarietyChain::new(vec![v1, v2], &Budget::default()).unwrap()
    }

    #[test]
    fn contact_ideal_generators() {
        let chain = det_chain();
        assert_eq!(chain.codimensions(), &[1, 2]);
        let c = contact_ideal(&chain, &[1, 1], 1).unwrap();
        let texts: Vec<String> = c.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            texts,
            vec!["a11_1*a22-a12_1*a21-a12*a21_1+a11*a22_1", "a11", "a21"]
                .into_iter()
                .map(|s| parse_polynomial(s, c.ring()).unwrap().to_string())
                .collect::<Vec<_>>()
        );
        assert!(contact_ideal(&chain, &[0, 0], 0).unwrap().is_zero());
        assert!(matches!(
            contact_ideal(&chain, &[1, 1], 0),
            Err(Error::RingTooSmall { .. })
        ));
        assert!(matches!(
            contact_ideal(&chain, &[1], 3),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn single_member_chain_is_a_jet_ideal() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^3-y^2"]).unwrap();
        let chain = SubvarietyChain::new(vec![i.clone()], &Budget::default()).unwrap();
        let c = contact_ideal(&chain, &[3], 2).unwrap();
        assert_eq!(c.generators(), jet_ideal(&i, 2).unwrap().generators());
    }

    #[test]
    fn broken_chain_is_rejected() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let a = Ideal::parse(&r, &["x"]).unwrap();
        let b = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(
            SubvarietyChain::new(vec![a, b], &Budget::default()).unwrap_err(),
            Error::NotAChain { index: 2 }
        );
    }

    #[test]
    fn lct_of_smooth_divisor_and_node() {
        let r = Ring::with_names(&["x", "y"]).unwrap();
        let b = Budget::default();
        let h = lct_estimate(&Ideal::parse(&r, &["x"]).unwrap(), 2, 3, false, &b).unwrap();
        assert_eq!(h.value, rational(1));
        let node = lct_estimate(&Ideal::parse(&r, &["x*y"]).unwrap(), 2, 3, false, &b).unwrap();
        assert_eq!(node.value, rational(1));
        assert_eq!(node.dimensions, vec![1, 2, 3, 4]);
    }
}
