use std::fmt;

use super::partition::Partition;
use crate::algebra::{format_series, parse_series, Rational, TruncatedSeries};
use crate::error::{Error, Result};

/// An `n x n` matrix of power series truncated at `t^{m+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeriesMatrix {
    m: usize,
    rows: Vec<Vec<TruncatedSeries>>,
}

impl TruncatedSeriesMatrix {
    pub fn new(m: usize, rows: Vec<Vec<TruncatedSeries>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for e in row {
                if e.truncation() != m {
                    return Err(Error::TruncationMismatch(m, e.truncation()));
                }
            }
        }
        Ok(TruncatedSeriesMatrix { m, rows })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            TruncatedSeries::one(m)
                        } else {
                            TruncatedSeries::zero(m)
                        }
                    })
                    .collect()
            })
            .collect();
        TruncatedSeriesMatrix { m, rows }
    }

    /// Integer coefficient lists per entry, lowest degree first.
    pub fn from_ints(m: usize, rows: &[Vec<Vec<i64>>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| TruncatedSeries::from_ints(m, c)).collect())
            .collect();
        Self::new(m, rows)
    }

    /// Parses `m=<k>` followed by rows separated by `;`, entries by `,`.
    pub fn parse(text: &str) -> Result<Self> {
        let perr = |message: String| Error::Parse {
            line: 1,
            column: 1,
            message,
        };
        let body = text.trim_start();
        let rest = body
            .strip_prefix("m=")
            .ok_or_else(|| perr("expected header `m=<order>`".into()))?;
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        let m: usize = digits
            .parse()
            .map_err(|_| perr("truncation order must be a non-negative integer".into()))?;
        let rows_text = &rest[digits.len()..];
        let rows = rows_text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| parse_series(e.trim(), m))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn truncation(&self) -> usize {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &TruncatedSeries {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<TruncatedSeries>] {
        &self.rows
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::TruncationMismatch(self.m, other.m));
        }
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        let n = self.n();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(TruncatedSeries::zero(self.m), |acc, k| {
                            acc.add(&self.rows[i][k].mul(&other.rows[k][j]).expect("same order"))
                                .expect("same order")
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(TruncatedSeriesMatrix { m: self.m, rows })
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> TruncatedSeries {
        if rows.is_empty() {
            return TruncatedSeries::one(self.m);
        }
        let mut acc = TruncatedSeries::zero(self.m);
        let rest_cols = &cols[1..];
        for (k, &r) in rows.iter().enumerate() {
            let e = &self.rows[r][cols[0]];
            if e.is_zero() {
                continue;
            }
            let others: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let term = e.mul(&self.minor(&others, rest_cols)).expect("same order");
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }.expect("same order");
        }
        acc
    }

    pub fn determinant(&self) -> TruncatedSeries {
        let all: Vec<usize> = (0..self.n()).collect();
        self.minor(&all, &all)
    }

    /// Invertible over the truncated power series ring.
    pub fn is_invertible(&self) -> bool {
        self.determinant().is_unit()
    }

    fn row_scale(&mut self, i: usize, u: &TruncatedSeries) {
        for e in &mut self.rows[i] {
            *e = e.mul(u).expect("same order");
        }
    }

    /// Row `i` -= `c` * row `p`.
    fn row_subtract(&mut self, i: usize, p: usize, c: &TruncatedSeries) {
        for j in 0..self.n() {
            let d = c.mul(&self.rows[p][j]).expect("same order");
            self.rows[i][j] = self.rows[i][j].sub(&d).expect("same order");
        }
    }
}

impl fmt::Display for TruncatedSeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} ", self.m)?;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(format_series).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

/// Order of vanishing along one member of the chain. Truncation at
/// `t^{m+1}` cannot tell order `m+1` from infinity, so such values are
/// reported as a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContactOrder {
    Exact(usize),
    AtLeast(usize),
}

impl fmt::Display for ContactOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContactOrder::Exact(k) => write!(f, "{k}"),
            ContactOrder::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

/// Contact orders `λ_1, ..., λ_n` of a matrix jet with `V_1, ..., V_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactProfile(pub Vec<ContactOrder>);

impl ContactProfile {
    pub fn is_saturated(&self) -> bool {
        self.0.iter().any(|o| matches!(o, ContactOrder::AtLeast(_)))
    }

    /// The partition, when every order is certified.
    pub fn partition(&self) -> Option<Partition> {
        let parts = self
            .0
            .iter()
            .map(|o| match o {
                ContactOrder::Exact(k) => Some(*k),
                ContactOrder::AtLeast(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Partition::new(parts).ok()
    }
}

impl fmt::Display for ContactProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|o| o.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn row_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// `λ_r` is the least order among the `(n+1-r)`-minors on the first
/// `n+1-r` columns.
pub fn contact_profile(x: &TruncatedSeriesMatrix) -> ContactProfile {
    let n = x.n();
    let orders = (1..=n)
        .map(|r| {
            let k = n + 1 - r;
            let cols: Vec<usize> = (0..k).collect();
            row_subsets(n, k)
                .iter()
                .filter_map(|rows| x.minor(rows, &cols).order())
                .min()
                .map_or(ContactOrder::AtLeast(x.m + 1), ContactOrder::Exact)
        })
        .collect();
    ContactProfile(orders)
}

/// The representative of the orbit of `x` under invertible truncated
/// matrices acting on the left: upper triangular, diagonal `t^{m_{n+1-j}}`
/// in column `j`, entries above it of degree below that exponent.
pub fn normal_form(x: &TruncatedSeriesMatrix) -> Result<TruncatedSeriesMatrix> {
    let profile = contact_profile(x);
    let lambda = profile.partition().ok_or(Error::InsufficientTruncation)?;
    if x.m <= lambda.largest() {
        return Err(Error::InsufficientTruncation);
    }
    let n = x.n();
    let mut y = x.clone();
    for j in 0..n {
        // rows j.. are zero in the columns before j
        let pivot = (j..n)
            .filter_map(|i| y.rows[i][j].order().map(|o| (o, i)))
            .min()
            .map(|(_, i)| i)
            .ok_or(Error::InsufficientTruncation)?;
        y.rows.swap(j, pivot);
        let a = y.rows[j][j].order().expect("pivot is nonzero");
        let unit = y.rows[j][j].shift_down(a);
        y.row_scale(j, &unit.invert()?);
        for i in j + 1..n {
            let c = y.rows[i][j].shift_down(a);
            if !c.is_zero() {
                y.row_subtract(i, j, &c);
            }
        }
        for i in 0..j {
            let c = y.rows[i][j].shift_down(a);
            if !c.is_zero() {
                y.row_subtract(i, j, &c);
            }
        }
    }
    Ok(y)
}

/// Number of free coefficients in the normal-form shape for `λ`:
/// column `j` has `j - 1` entries of degree below `m_{n+1-j}`.
pub fn cell_dimension(lambda: &Partition) -> usize {
    let m = lambda.multiplicities();
    let n = m.len();
    (1..=n).map(|j| (j - 1) * m[n - j]).sum()
}

/// Whether `x` already has the normal-form shape for its profile.
pub fn is_normal_form(x: &TruncatedSeriesMatrix) -> bool {
    let Some(lambda) = contact_profile(x).partition() else {
        return false;
    };
    let m = lambda.multiplicities();
    let n = x.n();
    (0..n).all(|j| {
        let a = m[n - 1 - j];
        (0..n).all(|i| {
            let e = &x.rows[i][j];
            match i.cmp(&j) {
                std::cmp::Ordering::Greater => e.is_zero(),
                std::cmp::Ordering::Equal => {
                    e.order() == Some(a) && e.degree() == Some(a) && e.coeff(a) == &Rational::from_integer(1.into())
                }
                std::cmp::Ordering::Less => e.degree().is_none_or(|d| d < a),
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> TruncatedSeriesMatrix {
        TruncatedSeriesMatrix::parse("m=3\nt+t^2, 1+2*t; t, 1+t^2").unwrap()
    }

    #[test]
    fn parse_and_display() {
        let x = worked_example();
        assert_eq!(x.to_string(), "m=3 t+t^2, 1+2*t; t, 1+t^2");
        assert_eq!(TruncatedSeriesMatrix::parse(&x.to_string()).unwrap(), x);
        assert!(TruncatedSeriesMatrix::parse("t, 1; 0, t").is_err());
        assert!(matches!(
            TruncatedSeriesMatrix::parse("m=2 t, 1; 0"),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn worked_profile_and_normal_form() {
        let x = worked_example();
        let p = contact_profile(&x);
        assert_eq!(p.partition().unwrap().parts(), &[2, 1]);
        // -t^2 + t^3 + t^4, truncated at t^4
        assert_eq!(x.determinant().to_string(), "-t^2+t^3");
        let nf = normal_form(&x).unwrap();
        assert_eq!(nf.to_string(), "m=3 t, 1; 0, t");
        assert_eq!(normal_form(&nf).unwrap(), nf);
        assert!(is_normal_form(&nf));
        assert!(!is_normal_form(&x));
    }

    #[test]
    fn simple_profiles() {
        let id = TruncatedSeriesMatrix::identity(3, 2);
        assert_eq!(contact_profile(&id).partition().unwrap(), Partition::zero(3));
        let d = TruncatedSeriesMatrix::parse("m=3 t,0,0; 0,t,0; 0,0,t").unwrap();
        assert_eq!(contact_profile(&d).partition().unwrap().parts(), &[3, 2, 1]);
    }

    #[test]
    fn saturated_orders_are_flagged() {
        let x = TruncatedSeriesMatrix::parse("m=2 t^2, 0; 0, t").unwrap();
        let p = contact_profile(&x);
        assert_eq!(p.to_string(), "(>=3,2)");
        assert!(p.is_saturated());
        assert_eq!(normal_form(&x), Err(Error::InsufficientTruncation));
        // certified, but m is not above λ_1
        let y = TruncatedSeriesMatrix::parse("m=2 t, 0; 0, t").unwrap();
        assert_eq!(normal_form(&y), Err(Error::InsufficientTruncation));
    }

    #[test]
    fn cell_dimensions() {
        // (2,1): m = (1,1); only the (1,2) entry is free, a constant
        assert_eq!(cell_dimension(&Partition::new(vec![2, 1]).unwrap()), 1);
        assert_eq!(cell_dimension(&Partition::new(vec![3, 2, 1]).unwrap()), 3);
        assert_eq!(cell_dimension(&Partition::zero(4)), 0);
    }
}
