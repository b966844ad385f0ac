//! The determinantal chain `V_n ⊆ ... ⊆ V_1` in `n x n` matrices, contact
//! profiles and normal forms of matrix jets, and the partition combinatorics
//! of partial flags.

mod matrix;
mod partition;

use std::sync::Arc;

pub use matrix::{
    cell_dimension, contact_profile, is_normal_form, normal_form, ContactOrder, ContactProfile, TruncatedSeriesMatrix,
};
pub use partition::{
    e_lambda, flag_chern_class, flag_expected_class, lambda_of_m, lambda_prime, lambda_tilde, FlagType, Partition,
};

use crate::algebra::{MultiGrading, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{ideal_dimension, Budget, Ideal};
use crate::jets::{contact_ideal, jet_grading, SubvarietyChain};
use crate::multidegree::{elementary_symmetric, ideal_multidegree, ClassPolynomial};

/// Largest matrix size whose entries get two-digit names `a{i}{j}`.
pub const MAX_N: usize = 9;

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::OutOfRange(format!("matrix size {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

/// Polynomial ring on the entries `a11, a12, ..., ann`, row by row.
pub fn matrix_ring(n: usize) -> Result<Arc<Ring>> {
    check_n(n)?;
    let names: Vec<String> = (1..=n).flat_map(|i| (1..=n).map(move |j| format!("a{i}{j}"))).collect();
    Ring::with_names(&names)
}

/// Row degrees: `a_{ij}` has degree `e_i`.
pub fn row_degrees(n: usize) -> Vec<Vec<i64>> {
    (0..n * n)
        .map(|v| (0..n).map(|k| i64::from(k == v / n)).collect())
        .collect()
}

pub fn matrix_grading(ring: &Ring, n: usize) -> Result<MultiGrading> {
    jet_grading(ring, &row_degrees(n))
}

fn determinant(entries: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::one(entries[0][0].ring());
    }
    let mut acc = Polynomial::zero(entries[0][0].ring());
    for (k, &r) in rows.iter().enumerate() {
        let others: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = entries[r][cols[0]]
            .mul(&determinant(entries, &others, &cols[1..]))
            .expect("one ring");
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }.expect("one ring");
    }
    acc
}

/// Ideal of `V_r`: the `(n+1-r)`-minors on the first `n+1-r` columns of the
/// generic matrix, row subsets in lexicographic order.
pub fn determinantal_generators(n: usize, r: usize) -> Result<Ideal> {
    let ring = matrix_ring(n)?;
    if r == 0 || r > n {
        return Err(Error::OutOfRange(format!("rank index {r} outside 1..={n}")));
    }
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| Polynomial::var(&ring, i * n + j)).collect())
        .collect();
    let k = n + 1 - r;
    let cols: Vec<usize> = (0..k).collect();
    let mut subsets: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect();
    subsets.sort();
    let gens = subsets.iter().map(|rows| determinant(&entries, rows, &cols)).collect();
    Ideal::new(&ring, gens)
}

/// `V_1 ⊇ ... ⊇ V_n` as the chain of ideals `I_1 ⊆ ... ⊆ I_n`.
pub fn determinantal_chain(n: usize, budget: &Budget) -> Result<SubvarietyChain> {
    let ideals = (1..=n)
        .map(|r| determinantal_generators(n, r))
        .collect::<Result<Vec<_>>>()?;
    SubvarietyChain::new(ideals, budget)
}

/// `Π e_i(t_1, ..., t_n)^{m_i}`.
pub fn chern_monomial(m: &[usize]) -> ClassPolynomial {
    let n = m.len();
    let vars: Vec<usize> = (0..n).collect();
    m.iter().enumerate().fold(ClassPolynomial::one(n), |acc, (i, &mi)| {
        acc.mul(&elementary_symmetric(n, &vars, i + 1).pow(mi as u32))
            .expect("one class ring")
    })
}

/// `c_1^{m_1} ... c_n^{m_n}` written in Chern classes.
pub fn format_chern_monomial(m: &[usize]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("c{}", i + 1)
            } else {
                format!("c{}^{e}", i + 1)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual,
    BudgetExhausted,
}

/// Outcome of [`verify_conjecture_case`]. The computed class is that of the
/// closed contact locus `{ord V_i >= λ_i}`, not of the closure of the
/// locus with exact orders.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub n: usize,
    pub m: Vec<usize>,
    pub lambda: Partition,
    pub expected: ClassPolynomial,
    pub computed: Option<ClassPolynomial>,
    pub expected_codimension: usize,
    pub codimension: Option<usize>,
    pub verdict: Verdict,
}

impl ConjectureReport {
    pub fn classes_agree(&self) -> bool {
        self.computed.as_ref() == Some(&self.expected)
    }

    pub fn codimension_agrees(&self) -> bool {
        self.codimension == Some(self.expected_codimension)
    }
}

/// Computes the multidegree of the contact ideal of the determinantal chain
/// with multiplicities `m` and compares it with `Π c_i^{m_i}`; the codimension
/// is compared with `Σ λ_i`.
pub fn verify_conjecture_case(n: usize, m: &[usize], budget: &Budget) -> Result<ConjectureReport> {
    check_n(n)?;
    if m.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: m.len(),
        });
    }
    let lambda = Partition::from_multiplicities(m);
    let expected = chern_monomial(m);
    let expected_codimension = lambda.size();
    let mut report = ConjectureReport {
        n,
        m: m.to_vec(),
        lambda: lambda.clone(),
        expected,
        computed: None,
        expected_codimension,
        codimension: None,
        verdict: Verdict::BudgetExhausted,
    };
    let exhausted = |e: &Error| matches!(e, Error::ResourceExhausted { .. });
    let chain = match determinantal_chain(n, budget) {
        Ok(c) => c,
        Err(e) if exhausted(&e) => return Ok(report),
        Err(e) => return Err(e),
    };
    let order = lambda.largest().saturating_sub(1);
    let ideal = contact_ideal(&chain, m, order)?;
    let grading = matrix_grading(ideal.ring(), n)?;
    match ideal_multidegree(&ideal, &grading, budget) {
        Ok(c) => report.computed = Some(c),
        Err(e) if exhausted(&e) => return Ok(report),
        Err(e) => return Err(e),
    }
    let nvars = ideal.ring().nvars();
    match ideal_dimension(&ideal, budget) {
        Ok(d) => report.codimension = Some(nvars - d),
        Err(e) if exhausted(&e) => return Ok(report),
        Err(e) => return Err(e),
    }
    report.verdict = if report.classes_agree() && report.codimension_agrees() {
        Verdict::Equal
    } else {
        Verdict::NotEqual
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multidegree::ideal_multidegree;

    #[test]
    fn small_determinantal_ideals() {
        assert_eq!(determinantal_generators(2, 2).unwrap().to_string(), "(a11, a21)");
        let det = determinantal_generators(2, 1).unwrap();
        let expected = crate::algebra::parse_polynomial("a11*a22-a12*a21", det.ring()).unwrap();
        assert_eq!(det.generators(), &[expected]);
        let v2 = determinantal_generators(3, 2).unwrap();
        assert_eq!(v2.generators().len(), 3);
        assert!(determinantal_generators(3, 0).is_err());
        assert!(determinantal_generators(3, 4).is_err());
    }

    #[test]
    fn base_classes_for_n_three() {
        let vars = [0, 1, 2];
        for r in 1..=3 {
            let i = determinantal_generators(3, r).unwrap();
            let g = matrix_grading(i.ring(), 3).unwrap();
            let class = ideal_multidegree(&i, &g, &Budget::default()).unwrap();
            assert_eq!(class, elementary_symmetric(3, &vars, r), "r = {r}");
        }
    }

    #[test]
    fn chern_monomials() {
        assert_eq!(chern_monomial(&[1, 1]).to_string(), "t1^2*t2+t1*t2^2");
        assert_eq!(chern_monomial(&[0, 0, 0]), ClassPolynomial::one(3));
        assert_eq!(format_chern_monomial(&[1, 0, 2]), "c1*c3^2");
        assert_eq!(format_chern_monomial(&[0, 0]), "1");
    }

    #[test]
    fn two_by_two_cases() {
        let r = verify_conjecture_case(2, &[1, 1], &Budget::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);
        assert_eq!(r.codimension, Some(3));
        let r = verify_conjecture_case(3, &[0, 0, 0], &Budget::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);
        assert_eq!(r.computed, Some(ClassPolynomial::one(3)));
        let r = verify_conjecture_case(2, &[2, 1], &Budget::pairs(0)).unwrap();
        assert_eq!(r.verdict, Verdict::BudgetExhausted);
    }
}
