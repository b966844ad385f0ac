use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::Budget;
use crate::algebra::{Monomial, Polynomial, Rational, Ring, Term, TermOrder};
use crate::error::{Error, Result};

fn mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | 1u64 << (i % 64))
}

/// Reducer set with cached leading-monomial masks.
struct Reducers<'a> {
    polys: Vec<&'a Polynomial>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    fn new(polys: Vec<&'a Polynomial>) -> Self {
        let masks = polys.iter().map(|p| p.leading_monomial().map_or(0, mask)).collect();
        Reducers { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial> {
        let mm = mask(m);
        self.polys
            .iter()
            .zip(&self.masks)
            .find(|(p, &k)| k & !mm == 0 && p.leading_monomial().is_some_and(|l| l.divides(m)))
            .map(|(p, _)| *p)
    }
}

/// `tail - c * q * g.tail`, where `g`'s leading term has been cancelled.
fn cancel(order: &TermOrder, tail: &[Term], c: &Rational, q: &Monomial, g: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(tail.len() + g.len());
    let (mut i, mut j) = (0, 1);
    while i < tail.len() && j < g.len() {
        let gm = g[j].0.mul(q);
        match order.cmp(&tail[i].0, &gm) {
            Ordering::Greater => {
                out.push(tail[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(c * &g[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &tail[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(tail[i..].iter().cloned());
    out.extend(g[j..].iter().map(|(m, d)| (m.mul(q), -(c * d))));
    out
}

fn reduce_with(f: &Polynomial, reducers: &Reducers<'_>) -> Polynomial {
    let ring = f.ring().clone();
    let order = ring.order().clone();
    let mut p: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    let mut rem: Vec<Term> = Vec::new();
    while start < p.len() {
        let (lm, lc) = (&p[start].0, &p[start].1);
        match reducers.find(lm) {
            Some(g) => {
                let (gm, gc) = g.leading_term().expect("nonzero reducer");
                let q = lm.div(gm).expect("divisible");
                let c = if gc.is_one() { lc.clone() } else { lc / gc };
                p = cancel(&order, &p[start + 1..], &c, &q, g.terms());
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(&ring, rem)
}

/// Full multivariate division remainder of `f` by `basis`: no term of the
/// result is divisible by a leading monomial of the basis. Divisors are
/// tried in the given order.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    for g in basis {
        if !Ring::same(g.ring(), f.ring()) {
            return Err(Error::IncompatibleRing);
        }
    }
    let reducers = Reducers::new(basis.iter().filter(|g| !g.is_zero()).collect());
    Ok(reduce_with(f, &reducers))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn active_polys(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Gebauer-Moeller installation of a new, fully reduced, monic element.
    fn update(&mut self, h: Polynomial) {
        let hm = h.leading_monomial().expect("nonzero").clone();
        let k = self.polys.len();
        let olds: Vec<usize> = (0..k).filter(|&g| self.active[g]).collect();

        let mut candidates: Vec<Pair> = olds
            .iter()
            .map(|&g| Pair {
                i: g,
                j: k,
                lcm: self.lms[g].lcm(&hm),
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = self.lms[p.i].is_coprime(&hm);
            let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        let fresh: Vec<Pair> = kept.into_iter().filter(|p| !self.lms[p.i].is_coprime(&hm)).collect();

        let lms = &self.lms;
        self.pairs
            .retain(|p| !hm.divides(&p.lcm) || lms[p.i].lcm(&hm) == p.lcm || lms[p.j].lcm(&hm) == p.lcm);
        self.pairs.extend(fresh);

        for &g in &olds {
            if hm.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.lms.push(hm);
        self.active.push(true);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .degree(&a.lcm)
                    .cmp(&order.degree(&b.lcm))
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let qf = p.lcm.div(&self.lms[p.i]).expect("lcm");
        let qg = p.lcm.div(&self.lms[p.j]).expect("lcm");
        // both monic: S = qf*f - qg*g, leading terms cancel
        let order = self.ring.order();
        let a: Vec<Term> = f.terms()[1..].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        let s = cancel(order, &a, &Rational::one(), &qg, g.terms());
        Polynomial::from_sorted(&self.ring, s)
    }
}

/// Reduced Groebner basis of the polynomials `gens` (all in one ring) with
/// respect to that ring's term order.
pub(crate) fn groebner_basis(ring: &Arc<Ring>, gens: &[Polynomial], budget: &Budget) -> Result<Vec<Polynomial>> {
    let mut st = State {
        ring: ring.clone(),
        polys: Vec::new(),
        lms: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    // deterministic insertion: smallest leading monomial first
    input.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    for g in input {
        let r = {
            let red = Reducers::new(st.active_polys());
            reduce_with(&g, &red)
        };
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        st.update(r.monic());
    }

    let mut processed = 0usize;
    while let Some(pair) = st.select() {
        processed += 1;
        if budget.max_pairs.is_some_and(|max| processed > max) {
            return Err(Error::ResourceExhausted { pairs: processed - 1 });
        }
        let s = st.s_polynomial(&pair);
        let r = {
            let red = Reducers::new(st.active_polys());
            reduce_with(&s, &red)
        };
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        st.update(r.monic());
    }

    Ok(interreduce(st.active_polys().into_iter().cloned().collect()))
}

/// Tail-reduces a minimal basis and sorts it by decreasing leading monomial.
fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<&Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p)
            .collect();
        let red = Reducers::new(others);
        let (lm, lc) = g.leading_term().expect("nonzero").clone();
        let tail = Polynomial::from_sorted(g.ring(), g.terms()[1..].to_vec());
        let tail = reduce_with(&tail, &red);
        let mut terms = vec![(lm, lc)];
        terms.extend(tail.into_terms());
        out.push(Polynomial::from_sorted(g.ring(), terms).monic());
    }
    if let Some(first) = out.first() {
        let order = first.ring().order().clone();
        out.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    }
    out
}
