#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use arcclass::algebra::{Monomial, MultiGrading, Polynomial, Rational, Ring, TruncatedSeries};
use arcclass::gln::TruncatedSeriesMatrix;
use arcclass::multidegree::ClassPolynomial;
use arcclass::toric::{standard, Fan};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Class = BTreeMap<Vec<u32>, Rational>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn class_map(c: &ClassPolynomial) -> Class {
    let rank = c.rank();
    c.polynomial()
        .terms()
        .iter()
        .map(|(m, k)| ((0..rank).map(|v| m.exponent(v)).collect(), k.clone()))
        .collect()
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Multidegree of a monomial ideal from its K-polynomial: the Taylor
/// inclusion-exclusion `sum_S (-1)^|S| T^deg(lcm S)` with `T_j -> 1 - t_j`,
/// keeping the lowest nonvanishing degree. Degrees must be nonnegative.
pub fn k_polynomial_multidegree(gens: &[Monomial], g: &MultiGrading) -> Class {
    let rank = g.rank();
    let n = g.nvars() as u32;
    let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for s in 0u32..1 << gens.len() {
        let lcm = (0..gens.len())
            .filter(|i| s & (1 << i) != 0)
            .fold(Monomial::one(), |l, i| l.lcm(&gens[i]));
        let deg: Vec<u32> = g.monomial_degree(&lcm).iter().map(|&d| d as u32).collect();
        let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
        // prod_j (1 - t_j)^deg_j, truncated at total degree n
        let mut prod: BTreeMap<Vec<u32>, BigInt> = BTreeMap::from([(vec![0; rank], BigInt::from(sign))]);
        for (j, &a) in deg.iter().enumerate() {
            let mut next = BTreeMap::new();
            for (e, c) in &prod {
                let used: u32 = e.iter().sum();
                for k in 0..=a.min(n - used.min(n)) {
                    let mut e2 = e.clone();
                    e2[j] += k;
                    let b = binomial(a, k) * if k % 2 == 0 { 1 } else { -1 };
                    *next.entry(e2).or_insert_with(BigInt::zero) += c * b;
                }
            }
            prod = next;
        }
        for (e, c) in prod {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    let low = acc.keys().map(|e| e.iter().sum::<u32>()).min().unwrap_or(0);
    acc.into_iter()
        .filter(|(e, _)| e.iter().sum::<u32>() == low)
        .map(|(e, c)| (e, Rational::from_integer(c)))
        .collect()
}

pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, nvars: usize) -> Vec<Monomial> {
    let count = rng.gen_range(1..=6);
    (0..count)
        .map(|_| loop {
            let mut pairs = Vec::new();
            for v in 0..nvars {
                if rng.gen_bool(0.5) {
                    pairs.push((v, rng.gen_range(1..=3u32)));
                }
            }
            let m = Monomial::from_pairs(pairs);
            if !m.is_one() {
                break m;
            }
        })
        .collect()
}

pub fn random_grading(rng: &mut ChaCha8Rng, nvars: usize) -> MultiGrading {
    let rank = rng.gen_range(1..=2);
    let degrees = (0..nvars)
        .map(|_| (0..rank).map(|_| rng.gen_range(1..=3)).collect())
        .collect();
    MultiGrading::new(rank, degrees).unwrap()
}

/// A random polynomial in the given variables with small integer
/// coefficients and total degree at most `degree`.
pub fn random_polynomial(
    rng: &mut ChaCha8Rng,
    ring: &Arc<Ring>,
    vars: &[usize],
    degree: u32,
    terms: usize,
) -> Polynomial {
    let terms = (0..terms)
        .map(|_| {
            let mut left = degree;
            let mut pairs = Vec::new();
            for &v in vars {
                let e = rng.gen_range(0..=left);
                left -= e;
                pairs.push((v, e));
            }
            let c = loop {
                let c = rng.gen_range(-4..=4);
                if c != 0 {
                    break c;
                }
            };
            (Monomial::from_pairs(pairs), q(c))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// `k! [t^k] f(sum_j x^{(j)} t^j / j!)`, computed by truncated power series
/// substitution in the base variables of a jet ring.
pub fn prolong_by_substitution(f: &Polynomial, k: usize) -> Polynomial {
    let ring = f.ring();
    let mut factorial = vec![q(1)];
    for j in 1..=k {
        factorial.push(&factorial[j - 1] * q(j as i64));
    }
    let series_of = |v: usize| -> Vec<Polynomial> {
        let name = &ring.variable(v).name;
        (0..=k)
            .map(|j| {
                let id = ring.find(name, j).expect("jet variable");
                Polynomial::var(ring, id).scale(&factorial[j].recip())
            })
            .collect()
    };
    let mul = |a: &[Polynomial], b: &[Polynomial]| -> Vec<Polynomial> {
        (0..=k)
            .map(|d| {
                (0..=d).fold(Polynomial::zero(ring), |s, i| {
                    s.add(&a[i].mul(&b[d - i]).unwrap()).unwrap()
                })
            })
            .collect()
    };
    let mut total = vec![Polynomial::zero(ring); k + 1];
    for (m, c) in f.terms() {
        let mut s = vec![Polynomial::zero(ring); k + 1];
        s[0] = Polynomial::constant(ring, c.clone());
        for (v, e) in m.iter() {
            let x = series_of(v);
            for _ in 0..e {
                s = mul(&s, &x);
            }
        }
        for d in 0..=k {
            total[d] = total[d].add(&s[d]).unwrap();
        }
    }
    total[k].scale(&factorial[k])
}

/// A random normal-form matrix jet: column multiplicities in `0..=2` and
/// above-diagonal entries of degree below the column's diagonal power.
pub fn random_normal_form(rng: &mut ChaCha8Rng, n: usize) -> TruncatedSeriesMatrix {
    let mult: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    let top: usize = mult.iter().sum();
    let m = top + 1 + rng.gen_range(0..=1);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = mult[n - 1 - j];
                    if i == j {
                        TruncatedSeries::monomial(m, a, q(1))
                    } else if i < j {
                        let c: Vec<i64> = (0..a).map(|_| rng.gen_range(-3..=3)).collect();
                        TruncatedSeries::from_ints(m, &c)
                    } else {
                        TruncatedSeries::zero(m)
                    }
                })
                .collect()
        })
        .collect();
    TruncatedSeriesMatrix::new(m, rows).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize, m: usize) -> TruncatedSeriesMatrix {
    loop {
        let rows = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let c: Vec<i64> = (0..=m).map(|_| rng.gen_range(-3..=3)).collect();
                        TruncatedSeries::from_ints(m, &c)
                    })
                    .collect()
            })
            .collect();
        let g = TruncatedSeriesMatrix::new(m, rows).unwrap();
        if g.is_invertible() {
            return g;
        }
    }
}

pub fn test_fans() -> Vec<(&'static str, Fan)> {
    vec![
        ("P2", standard::projective_plane()),
        ("P1xP1", standard::p1_times_p1()),
        ("F1", standard::hirzebruch(1)),
        ("BlA2", standard::blowup_plane()),
    ]
}
