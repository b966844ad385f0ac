//! Multidegrees of multigraded ideals, i.e. torus-equivariant classes of
//! invariant subschemes of affine space, valued in `Z[t1, ..., tr]`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{
    minimalize, multidegree_of_polynomial, rational, Monomial, MultiGrading, PolyDegree, Polynomial, Rational, Ring,
    TermOrder,
};
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, minimum_vertex_covers, preferred_order, Budget, Ideal};

/// Largest variable count accepted by [`brute_force_multidegree`].
pub const ORACLE_LIMIT: usize = 20;

/// The ring `Q[t1, ..., tr]` in which classes live.
pub fn class_ring(rank: usize) -> Arc<Ring> {
    let names: Vec<String> = (1..=rank).map(|i| format!("t{i}")).collect();
    Ring::with_names(&names).expect("valid names")
}

/// An equivariant class: a polynomial in `t1, ..., tr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPolynomial {
    poly: Polynomial,
}

impl ClassPolynomial {
    pub fn zero(rank: usize) -> Self {
        ClassPolynomial {
            poly: Polynomial::zero(&class_ring(rank)),
        }
    }

    pub fn one(rank: usize) -> Self {
        ClassPolynomial {
            poly: Polynomial::one(&class_ring(rank)),
        }
    }

    /// The linear form `sum_j d_j t_j`.
    pub fn linear(degree: &[i64]) -> Self {
        let ring = class_ring(degree.len());
        let terms = degree
            .iter()
            .enumerate()
            .map(|(j, &d)| (Monomial::var(j), rational(d)))
            .collect();
        ClassPolynomial {
            poly: Polynomial::from_terms(&ring, terms),
        }
    }

    /// Wraps a polynomial over `t1, ..., tr`; the ring must be the class ring.
    pub fn from_polynomial(poly: Polynomial) -> Result<Self> {
        let rank = poly.ring().nvars();
        let ring = class_ring(rank);
        if !Ring::same(poly.ring(), &ring) {
            return Err(Error::IncompatibleRing);
        }
        Ok(ClassPolynomial { poly })
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let ring = class_ring(rank);
        Ok(ClassPolynomial {
            poly: crate::algebra::parse_polynomial(text, &ring)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.poly.ring().nvars()
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Total degree, when nonzero and homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut ds = self.poly.terms().iter().map(|(m, _)| m.degree());
        let first = ds.next()?;
        ds.all(|d| d == first).then_some(first)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.poly.terms().iter().all(|(_, c)| c.is_integer())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(ClassPolynomial {
            poly: self.poly.add(&other.poly)?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(ClassPolynomial {
            poly: self.poly.mul(&other.poly)?,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        ClassPolynomial { poly: self.poly.pow(e) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ClassPolynomial {
            poly: self.poly.scale(c),
        }
    }
}

impl fmt::Display for ClassPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `e_k` of the class variables with the given 0-based indices.
pub fn elementary_symmetric(rank: usize, vars: &[usize], k: usize) -> ClassPolynomial {
    let ring = class_ring(rank);
    let mut terms = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn walk(vars: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if chosen.len() == k {
            out.push(Monomial::from_pairs(chosen.iter().map(|&v| (v, 1))));
            return;
        }
        for i in start..vars.len() {
            chosen.push(vars[i]);
            walk(vars, k, i + 1, chosen, out);
            chosen.pop();
        }
    }
    let mut monos = Vec::new();
    walk(vars, k, 0, &mut chosen, &mut monos);
    for m in monos {
        terms.push((m, rational(1)));
    }
    ClassPolynomial {
        poly: Polynomial::from_terms(&ring, terms),
    }
}

fn check_monomials(nvars: usize, monomials: &[Monomial], g: &MultiGrading) -> Result<()> {
    if g.nvars() != nvars {
        return Err(Error::Grading(format!(
            "grading covers {} variables, ideal has {nvars}",
            g.nvars()
        )));
    }
    if let Some(m) = monomials.iter().find(|m| m.max_var().is_some_and(|v| v >= nvars)) {
        return Err(Error::OutOfRange(format!(
            "monomial {m} uses a variable beyond {nvars}"
        )));
    }
    Ok(())
}

fn component_class(prime: &[usize], multiplicity: u64, g: &MultiGrading) -> Result<ClassPolynomial> {
    let mut c = ClassPolynomial::one(g.rank());
    for &v in prime {
        c = c.mul(&ClassPolynomial::linear(g.degree_of(v)))?;
    }
    Ok(c.scale(&Rational::from_integer(multiplicity.into())))
}

/// Number of monomials in the variables `prime` outside the ideal obtained
/// by setting every other variable to 1. `prime` must be a minimal prime.
fn local_multiplicity(monomials: &[Monomial], prime: &[usize]) -> u64 {
    let index = |v: usize| prime.binary_search(&v).ok();
    let local = minimalize(
        monomials
            .iter()
            .map(|m| m.restrict(|v| index(v).is_some()).remap(|v| index(v).expect("kept")))
            .collect(),
    );
    let bounds: Vec<u32> = (0..prime.len())
        .map(|i| {
            local
                .iter()
                .filter(|m| m.iter().all(|(v, _)| v == i))
                .map(|m| m.exponent(i))
                .min()
                .expect("localization at a minimal prime is Artinian")
        })
        .collect();
    let mut exps = vec![0u32; prime.len()];
    count_standard(&local, &bounds, &mut exps, 0)
}

fn count_standard(gens: &[Monomial], bounds: &[u32], exps: &mut Vec<u32>, i: usize) -> u64 {
    let m = Monomial::from_dense(exps);
    if gens.iter().any(|g| g.divides(&m)) {
        return 0;
    }
    if i == exps.len() {
        return 1;
    }
    let mut total = 0;
    for e in 0..bounds[i] {
        exps[i] = e;
        let c = count_standard(gens, bounds, exps, i + 1);
        if c == 0 {
            break;
        }
        total += c;
    }
    exps[i] = 0;
    total
}

/// Multidegree of the monomial ideal generated by `monomials` in a ring
/// with `g.nvars()` variables: the sum over top-dimensional minimal primes
/// `P` of `mult_P * prod_{x in P} deg(x)`.
pub fn monomial_ideal_multidegree(monomials: &[Monomial], g: &MultiGrading) -> Result<ClassPolynomial> {
    let n = g.nvars();
    check_monomials(n, monomials, g)?;
    let gens = minimalize(monomials.to_vec());
    let edges: Vec<Vec<usize>> = gens.iter().map(|m| m.support().collect()).collect();
    let primes = minimum_vertex_covers(n, &edges).ok_or(Error::EmptyVariety)?;
    let mut class = ClassPolynomial::zero(g.rank());
    for p in primes {
        let mult = local_multiplicity(&gens, &p);
        class = class.add(&component_class(&p, mult, g)?)?;
    }
    Ok(class)
}

/// Exhaustive version of [`monomial_ideal_multidegree`] for small rings:
/// enumerates every coordinate subspace and counts standard monomials in a
/// bounding box.
pub fn brute_force_multidegree(monomials: &[Monomial], g: &MultiGrading) -> Result<ClassPolynomial> {
    let n = g.nvars();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleScale {
            vars: n,
            limit: ORACLE_LIMIT,
        });
    }
    check_monomials(n, monomials, g)?;
    if monomials.iter().any(|m| m.is_one()) {
        return Err(Error::EmptyVariety);
    }
    let masks: Vec<u32> = monomials
        .iter()
        .map(|m| m.support().fold(0u32, |a, v| a | 1 << v))
        .collect();
    // span of the variables in `s` lies in V(M) iff every generator uses a
    // variable outside `s`
    let inside = |s: u32| masks.iter().all(|&k| k & !s != 0);
    let best = (0u32..1 << n)
        .filter(|&s| inside(s))
        .map(|s| s.count_ones())
        .max()
        .expect("the origin always lies in V(M)");
    let side = monomials
        .iter()
        .flat_map(|m| m.iter().map(|(_, e)| e))
        .max()
        .unwrap_or(0);
    let mut class = ClassPolynomial::zero(g.rank());
    for s in (0u32..1 << n).filter(|&s| s.count_ones() == best && inside(s)) {
        let prime: Vec<usize> = (0..n).filter(|&v| s & (1 << v) == 0).collect();
        let local: Vec<Monomial> = monomials.iter().map(|m| m.restrict(|v| s & (1 << v) == 0)).collect();
        let mut count = 0u64;
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::from_dense(&exps);
            if !local.iter().any(|g| g.divides(&m)) {
                count += 1;
            }
            // odometer over the box [0, side]^prime
            let mut k = 0;
            loop {
                if k == prime.len() {
                    break;
                }
                let v = prime[k];
                if exps[v] < side {
                    exps[v] += 1;
                    break;
                }
                exps[v] = 0;
                k += 1;
            }
            if k == prime.len() {
                break;
            }
        }
        class = class.add(&component_class(&prime, count, g)?)?;
    }
    Ok(class)
}

/// Checks every generator of `ideal` for homogeneity under `g`.
pub fn check_homogeneous(ideal: &Ideal, g: &MultiGrading) -> Result<()> {
    g.check_ring(ideal.ring())?;
    for f in ideal.generators() {
        if multidegree_of_polynomial(f, g)? == PolyDegree::Heterogeneous {
            return Err(Error::Inhomogeneous {
                generator: f.to_string(),
            });
        }
    }
    Ok(())
}

/// Multidegree of a homogeneous ideal via Groebner degeneration.
pub fn ideal_multidegree(ideal: &Ideal, g: &MultiGrading, budget: &Budget) -> Result<ClassPolynomial> {
    ideal_multidegree_with(ideal, g, &preferred_order(ideal), budget)
}

/// Multidegree through the initial ideal for an explicit term order.
pub fn ideal_multidegree_with(
    ideal: &Ideal,
    g: &MultiGrading,
    order: &TermOrder,
    budget: &Budget,
) -> Result<ClassPolynomial> {
    check_homogeneous(ideal, g)?;
    let init = initial_ideal(ideal, order, budget)?;
    monomial_ideal_multidegree(&init, g)
}
