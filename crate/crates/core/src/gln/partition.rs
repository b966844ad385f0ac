use std::fmt;

use crate::error::{Error, Result};
use crate::jets::lambda_of;
use crate::multidegree::{elementary_symmetric, ClassPolynomial};

/// A weakly decreasing sequence of exactly `n` non-negative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// `λ(m)`: suffix sums of `m`.
    pub fn from_multiplicities(m: &[usize]) -> Self {
        Partition(lambda_of(m))
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    /// `m_i = λ_i - λ_{i+1}`.
    pub fn multiplicities(&self) -> Vec<usize> {
        (0..self.0.len())
            .map(|i| self.0[i] - self.0.get(i + 1).copied().unwrap_or(0))
            .collect()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`, and `λ_{n+1} = 0`.
    fn at(&self, i: usize) -> usize {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn lambda_of_m(m: &[usize]) -> Partition {
    Partition::from_multiplicities(m)
}

/// Dimension vector `0 = r_0 < r_1 < ... < r_k < r_{k+1} = n` of a partial
/// flag; only `r_1, ..., r_k` are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagType {
    n: usize,
    r: Vec<usize>,
}

impl FlagType {
    pub fn new(n: usize, r: Vec<usize>) -> Result<Self> {
        let ok = r.windows(2).all(|w| w[0] < w[1]) && r.iter().all(|&x| 0 < x && x < n);
        if !ok {
            return Err(Error::OutOfRange(format!(
                "flag dimensions {r:?} must increase strictly inside (0, {n})"
            )));
        }
        Ok(FlagType { n, r })
    }

    pub fn full(n: usize) -> Self {
        FlagType { n, r: (1..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.r
    }

    /// `r_0, ..., r_{k+1}`.
    fn padded(&self) -> Vec<usize> {
        let mut v = vec![0];
        v.extend(&self.r);
        v.push(self.n);
        v
    }
}

fn check(lambda: &Partition, flag: &FlagType) -> Result<()> {
    if lambda.len() != flag.n {
        return Err(Error::LengthMismatch {
            expected: flag.n,
            got: lambda.len(),
        });
    }
    Ok(())
}

/// The subpartition built from blocks: `λ_{n+1-r_k}` repeated `n - r_k`
/// times, then `λ_{n+1-r_{k-1}}` repeated `r_k - r_{k-1}` times, and so on,
/// ending with `r_1` zeros.
pub fn lambda_prime(lambda: &Partition, flag: &FlagType) -> Result<Partition> {
    check(lambda, flag)?;
    let r = flag.padded();
    let k = flag.r.len();
    let mut parts = Vec::with_capacity(flag.n);
    for i in (1..=k).rev() {
        let value = lambda.at(flag.n + 1 - r[i]);
        parts.extend(std::iter::repeat_n(value, r[i + 1] - r[i]));
    }
    parts.extend(std::iter::repeat_n(0, r[1]));
    let lp = Partition::new(parts)?;
    debug_assert_eq!(lp.len(), flag.n);
    Ok(lp)
}

/// `λ̃ = λ - λ'`. Also checked against the blockwise definition
/// `λ̃_{n+1-r} = λ_{n+1-r} - λ_{n+1-r_{i-1}}` for `r_{i-1} < r <= r_i`.
pub fn lambda_tilde(lambda: &Partition, flag: &FlagType) -> Result<Vec<usize>> {
    let lp = lambda_prime(lambda, flag)?;
    let tilde: Vec<usize> = lambda.0.iter().zip(&lp.0).map(|(a, b)| a - b).collect();
    let r = flag.padded();
    let n = flag.n;
    for i in 1..r.len() {
        for rr in r[i - 1] + 1..=r[i] {
            let blockwise = lambda.at(n + 1 - rr) - lambda.at(n + 1 - r[i - 1]);
            assert_eq!(tilde[n - rr], blockwise, "λ̃ definitions disagree");
        }
    }
    Ok(tilde)
}

/// `e_λ = Σ λ'_i`, asserted equal to `Σ_i (n - r_i)(λ_{n+1-r_i} - λ_{n+1-r_{i-1}})`.
pub fn e_lambda(lambda: &Partition, flag: &FlagType) -> Result<usize> {
    let total = lambda_prime(lambda, flag)?.size();
    let r = flag.padded();
    let n = flag.n;
    let blockwise: usize = (1..=flag.r.len())
        .map(|i| (n - r[i]) * (lambda.at(n + 1 - r[i]) - lambda.at(n + 1 - r[i - 1])))
        .sum();
    assert_eq!(total, blockwise, "e_λ formulas disagree");
    Ok(total)
}

/// `c_{j,r}`: for `r_i < n+1-j <= r_{i+1}`, the elementary symmetric
/// function of degree `r_{i+1} - n + j` in `t_{r_i+1}, ..., t_{r_{i+1}}`.
pub fn flag_chern_class(j: usize, flag: &FlagType) -> Result<ClassPolynomial> {
    let n = flag.n;
    if j == 0 || j > n {
        return Err(Error::OutOfRange(format!("class index {j} outside 1..={n}")));
    }
    let r = flag.padded();
    let p = n + 1 - j;
    let i = (0..r.len() - 1)
        .find(|&i| r[i] < p && p <= r[i + 1])
        .expect("blocks cover 1..=n");
    let vars: Vec<usize> = (r[i]..r[i + 1]).collect();
    Ok(elementary_symmetric(n, &vars, r[i + 1] + j - n))
}

/// The class predicted for the flag-variety contact locus with
/// multiplicities `m`: `(-1)^{Σ λ̃_i} Π c_{j,r}^{m_j}`.
pub fn flag_expected_class(m: &[usize], flag: &FlagType) -> Result<ClassPolynomial> {
    if m.len() != flag.n {
        return Err(Error::LengthMismatch {
            expected: flag.n,
            got: m.len(),
        });
    }
    let tilde = lambda_tilde(&Partition::from_multiplicities(m), flag)?;
    let mut class = ClassPolynomial::one(flag.n);
    for (j, &mj) in m.iter().enumerate() {
        class = class.mul(&flag_chern_class(j + 1, flag)?.pow(mj as u32))?;
    }
    let sign: usize = tilde.iter().sum();
    if sign % 2 == 1 {
        class = class.scale(&crate::algebra::rational(-1));
    }
    Ok(class)
}
