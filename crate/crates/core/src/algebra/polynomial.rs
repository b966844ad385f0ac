use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

pub type Term = (Monomial, Rational);

/// Multivariate polynomial over the rationals, in canonical form: terms
/// sorted strictly decreasing under the ring's term order, no zero
/// coefficients. The empty term list is the zero polynomial.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(), c)])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<Ring>, id: usize) -> Self {
        Self::from_terms(ring, vec![(Monomial::var(id), Rational::one())])
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Canonicalizes arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts that `terms` is already canonical for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map_or_else(Rational::zero, |t| t.1.clone())
    }

    pub fn uses_variable(&self, id: usize) -> bool {
        self.terms.iter().any(|t| t.0.exponent(id) > 0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, |c| -c))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            let part = big.mul_term(m, c);
            acc = acc.merge(&part, |c| c.clone());
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves the order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Sign-normalizes to a primitive integer polynomial with positive
    /// leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        let mut num = num_bigint::BigInt::zero();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut f = Rational::new(den, num);
        if self.terms[0].1.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    fn merge(&self, other: &Polynomial, map_other: impl Fn(&Rational) -> Rational) -> Polynomial {
        let order = self.ring.order();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), map_other(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + map_other(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), map_other(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Moves this polynomial into `target`, sending variable `i` to
    /// `map[i]`. Fails when a used variable has no image.
    pub fn transport(&self, target: &Arc<Ring>, map: &[Option<usize>]) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut pairs = Vec::new();
            for (i, e) in m.iter() {
                match map.get(i).copied().flatten() {
                    Some(j) => pairs.push((j, e)),
                    None => {
                        return Err(Error::UnknownVariable(self.ring.variable(i).to_string()));
                    }
                }
            }
            terms.push((Monomial::from_pairs(pairs), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Moves into `target` matching variables by name and jet order.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if Ring::same(&self.ring, target) {
            return Ok(self.clone());
        }
        let map = variable_map(&self.ring, target);
        self.transport(target, &map)
    }

    /// Substitutes `images[i]` (all in one common ring) for variable `i`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let target = images.first().map(|p| p.ring.clone()).ok_or(Error::LengthMismatch {
            expected: self.ring.nvars(),
            got: 0,
        })?;
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, e) in m.iter() {
                t = t.mul(&images[i].pow(e))?;
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }
}

/// For each variable of `from`, the id of the same-named variable of `to`.
pub fn variable_map(from: &Ring, to: &Ring) -> Vec<Option<usize>> {
    from.variables().iter().map(|v| to.find(&v.name, v.jet_order)).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_polynomial(self))
    }
}
