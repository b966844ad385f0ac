//! Groebner bases, normal forms, initial ideals, dimension and saturation.

mod buchberger;
mod cover;
mod dimension;
mod saturate;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use buchberger::reduce;
pub use cover::{minimum_cover_size, minimum_vertex_covers};
pub use dimension::ideal_dimension;
pub use saturate::{intersect, saturate, saturate_by};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{linalg, parse_polynomial, Monomial, Polynomial, Rational, Ring, TermOrder};
use crate::error::{Error, Result};

/// Cap on the number of S-pairs a single basis computation may process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: Option<usize>,
}

impl Budget {
    pub const DEFAULT_PAIRS: usize = 500_000;

    pub fn pairs(n: usize) -> Self {
        Budget { max_pairs: Some(n) }
    }

    pub fn unlimited() -> Self {
        Budget { max_pairs: None }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::pairs(Self::DEFAULT_PAIRS)
    }
}

/// An ideal given by generators, with a lazily computed reduced basis for
/// the ring's own term order.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.generators.iter().map(|g| g.to_string()))
            .finish()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !Ring::same(g.ring(), ring) {
                return Err(Error::IncompatibleRing);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            basis: OnceLock::new(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<Ring>, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| parse_polynomial(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn from_monomials(ring: &Arc<Ring>, monomials: &[Monomial]) -> Self {
        let gens = monomials
            .iter()
            .map(|m| Polynomial::monomial(ring, m.clone(), crate::algebra::rational(1)))
            .collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Moves the generators into a ring with the same variable names.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Reduced basis for the ring's term order, computed once.
    pub fn groebner_basis(&self, budget: &Budget) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.basis.get() {
            return Ok(gb);
        }
        let polys = buchberger::groebner_basis(&self.ring, &self.generators, budget)?;
        let gb = GroebnerBasis {
            ring: self.ring.clone(),
            polys,
        };
        Ok(self.basis.get_or_init(|| gb))
    }

    /// Ideal membership through the cached basis.
    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        self.groebner_basis(budget)?.contains(f)
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        Ok(self.groebner_basis(budget)?.is_unit())
    }
}

/// A reduced Groebner basis: monic, tail-reduced, sorted by decreasing
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        reduce(f, &self.polys)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn into_ideal(self) -> Ideal {
        let ring = self.ring.clone();
        let ideal = Ideal::new(&ring, self.polys.clone()).expect("same ring");
        let _ = ideal.basis.set(self);
        ideal
    }
}

/// Reduced basis of `ideal` for `order`. The result lives in a copy of the
/// ideal's ring carrying `order`.
pub fn buchberger(ideal: &Ideal, order: &TermOrder, budget: &Budget) -> Result<GroebnerBasis> {
    if ideal.ring.order() == order {
        return ideal.groebner_basis(budget).cloned();
    }
    let ring = ideal.ring.with_order(order.clone())?;
    let moved = ideal.to_ring(&ring)?;
    moved.groebner_basis(budget).cloned()
}

/// Minimal generators of the initial ideal of `ideal` for `order`.
pub fn initial_ideal(ideal: &Ideal, order: &TermOrder, budget: &Budget) -> Result<Vec<Monomial>> {
    Ok(buchberger(ideal, order, budget)?.leading_monomials())
}

/// Krull dimension of a quotient by a monomial ideal: the number of
/// variables minus a minimum vertex cover of the generator supports.
pub fn monomial_dimension(nvars: usize, monomials: &[Monomial]) -> Result<usize> {
    let edges: Vec<Vec<usize>> = monomials.iter().map(|m| m.support().collect()).collect();
    let cover = minimum_cover_size(nvars, &edges).ok_or(Error::EmptyVariety)?;
    Ok(nvars - cover)
}

/// Positive integer weights making every generator homogeneous, when a
/// small search over the space of such gradings finds one.
pub fn homogenizing_weights(ideal: &Ideal) -> Option<Vec<u32>> {
    let n = ideal.ring.nvars();
    let mut rows: linalg::Matrix = Vec::new();
    for g in &ideal.generators {
        let dense = |m: &Monomial| (0..n).map(|v| i64::from(m.exponent(v))).collect::<Vec<_>>();
        let mut terms = g.terms().iter();
        let Some((first, _)) = terms.next() else { continue };
        let f = dense(first);
        for (m, _) in terms {
            let d = dense(m);
            rows.push(
                d.iter()
                    .zip(&f)
                    .map(|(a, b)| Rational::from_integer((a - b).into()))
                    .collect(),
            );
        }
    }
    if rows.is_empty() {
        return Some(vec![1; n]);
    }
    let basis = linalg::nullspace(&rows, n);
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let coeffs: Vec<i64> = if k <= 4 { (-2..=3).collect() } else { vec![1] };
    let mut best: Option<Vec<u32>> = None;
    let mut combo = vec![0usize; k];
    loop {
        let mut v = vec![Rational::zero(); n];
        for (b, &c) in basis.iter().zip(&combo) {
            let c = Rational::from_integer(coeffs[c].into());
            for (x, y) in v.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
        if v.iter().all(|x| x.is_positive()) {
            let w = integral_weights(&v);
            if best.as_ref().is_none_or(|b| w.iter().max() < b.iter().max()) {
                best = Some(w);
            }
        }
        let mut i = 0;
        while i < k {
            combo[i] += 1;
            if combo[i] < coeffs.len() {
                break;
            }
            combo[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    best
}

fn integral_weights(v: &[Rational]) -> Vec<u32> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter().map(|x| (x / &g).to_u32().unwrap_or(u32::MAX)).collect()
}

/// The order used for dimension and degeneration computations: a weighted
/// order when the ring is graded reverse lex and the generators are
/// homogeneous for some non-standard positive weights, else the ring's own.
pub fn preferred_order(ideal: &Ideal) -> TermOrder {
    if *ideal.ring.order() == TermOrder::GrevLex {
        if let Some(w) = homogenizing_weights(ideal) {
            if w.iter().any(|&x| x != w[0]) {
                return TermOrder::Weighted { weights: w };
            }
        }
    }
    ideal.ring.order().clone()
}

/// Krull dimension computed with an explicit term order.
pub fn ideal_dimension_with(ideal: &Ideal, order: &TermOrder, budget: &Budget) -> Result<usize> {
    monomial_dimension(ideal.ring.nvars(), &initial_ideal(ideal, order, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str], order: TermOrder) -> Arc<Ring> {
        Ring::with_names_and_order(names, order).unwrap()
    }

    fn texts(gb: &GroebnerBasis) -> Vec<String> {
        gb.polynomials().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn one_division_step() {
        let r = ring(&["x", "y"], TermOrder::GrevLex);
        let f = parse_polynomial("x^2-y", &r).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        assert_eq!(reduce(&f, &[x]).unwrap().to_string(), "-y");
        assert!(reduce(&f, std::slice::from_ref(&f)).unwrap().is_zero());
        let y = parse_polynomial("y", &r).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        assert_eq!(reduce(&y, &[x]).unwrap(), y);
    }

    #[test]
    fn lex_basis_of_small_ideal() {
        let r = ring(&["x", "y"], TermOrder::Lex);
        let i = Ideal::parse(&r, &["x", "x^2-y"]).unwrap();
        let gb = buchberger(&i, &TermOrder::Lex, &Budget::default()).unwrap();
        assert_eq!(texts(&gb), vec!["x", "y"]);
        let init = initial_ideal(&i, &TermOrder::Lex, &Budget::default()).unwrap();
        assert_eq!(init.len(), 2);
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"], TermOrder::GrevLex);
        let i = Ideal::parse(&r, &["x^3-y^2"]).unwrap();
        for order in [TermOrder::Lex, TermOrder::GrevLex] {
            assert_eq!(
                texts(&buchberger(&i, &order, &Budget::default()).unwrap()),
                vec!["x^3-y^2"]
            );
        }
        let lead = |order: TermOrder, names: &[&str]| {
            let r = ring(names, order.clone());
            let i = Ideal::parse(&r, &["x^3-y^2"]).unwrap();
            let m = initial_ideal(&i, &order, &Budget::default()).unwrap();
            crate::algebra::format_monomial(&r, &m[0])
        };
        assert_eq!(lead(TermOrder::Lex, &["x", "y"]), "x^3");
        assert_eq!(lead(TermOrder::Lex, &["y", "x"]), "y^2");
    }

    #[test]
    fn generic_minors_form_a_basis() {
        let r = ring(&["a", "b", "c", "d", "e", "f"], TermOrder::GrevLex);
        // rows (a b c) and (d e f)
        let minors = ["a*e-b*d", "a*f-c*d", "b*f-c*e"];
        let i = Ideal::parse(&r, &minors).unwrap();
        let gb = i.groebner_basis(&Budget::default()).unwrap();
        assert_eq!(gb.len(), 3);
        for m in minors {
            let p = parse_polynomial(m, &r).unwrap();
            let q = gb.polynomials().iter().find(|g| **g == p || **g == p.neg());
            assert!(q.is_some(), "{m} missing from {:?}", texts(gb));
        }
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y"], TermOrder::GrevLex);
        let b = Budget::default();
        assert_eq!(ideal_dimension(&Ideal::parse(&r, &["x"]).unwrap(), &b).unwrap(), 1);
        assert_eq!(
            ideal_dimension(&Ideal::parse(&r, &["x^3-y^2"]).unwrap(), &b).unwrap(),
            1
        );
        assert_eq!(ideal_dimension(&Ideal::zero(&r), &b).unwrap(), 2);
        assert_eq!(
            ideal_dimension(&Ideal::parse(&r, &["x", "1+y"]).unwrap(), &b).unwrap(),
            0
        );
        assert_eq!(
            ideal_dimension(&Ideal::parse(&r, &["x", "x+1"]).unwrap(), &b),
            Err(Error::EmptyVariety)
        );
    }

    #[test]
    fn weights_of_quasi_homogeneous_ideals() {
        let r = ring(&["x", "y"], TermOrder::GrevLex);
        let cusp = Ideal::parse(&r, &["x^3-y^2"]).unwrap();
        assert_eq!(homogenizing_weights(&cusp), Some(vec![2, 3]));
        assert_eq!(preferred_order(&cusp), TermOrder::Weighted { weights: vec![2, 3] });
        let mixed = Ideal::parse(&r, &["x^2-y", "x-y"]).unwrap();
        assert_eq!(homogenizing_weights(&mixed), None);
        assert_eq!(preferred_order(&mixed), TermOrder::GrevLex);
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring(&["x", "y", "z"], TermOrder::GrevLex);
        let i = Ideal::parse(&r, &["x^2-y*z", "y^2-x*z", "z^2-x*y+x"]).unwrap();
        let err = i.groebner_basis(&Budget::pairs(1)).unwrap_err();
        assert!(matches!(err, Error::ResourceExhausted { .. }));
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y", "z"], TermOrder::GrevLex);
        let i = Ideal::parse(&r, &["x*y-z", "y^2-1"]).unwrap();
        let b = Budget::default();
        // x*y^2 - x = x*(y^2-1) and x*y^2 - y*z = y*(x*y-z)
        assert!(i.contains(&parse_polynomial("y*z-x", &r).unwrap(), &b).unwrap());
        assert!(i
            .contains(&parse_polynomial("(x+z)*(x*y-z)+3*(y^2-1)", &r).unwrap(), &b)
            .unwrap());
        assert!(!i.contains(&parse_polynomial("x", &r).unwrap(), &b).unwrap());
    }
}
