use std::cmp::Ordering;

use super::monomial::Monomial;

/// Monomial orders. Variable id 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum TermOrder {
    Lex,
    /// Graded by total degree, ties broken reverse-lexicographically.
    #[default]
    GrevLex,
    /// Block order: grevlex on the `front` variables first, then grevlex on
    /// the rest. Any monomial touching the front block is larger than any
    /// monomial that does not. `front` holds sorted variable ids.
    Elimination {
        front: Vec<usize>,
    },
    /// Graded by the positive weighted degree, ties broken
    /// reverse-lexicographically. `weights[i]` belongs to variable `i`.
    Weighted {
        weights: Vec<u32>,
    },
}

impl TermOrder {
    pub fn elimination(mut front: Vec<usize>) -> Self {
        front.sort_unstable();
        front.dedup();
        TermOrder::Elimination { front }
    }

    /// The degree the order is graded by: weighted for `Weighted`, total
    /// otherwise.
    pub fn degree(&self, m: &Monomial) -> u64 {
        match self {
            TermOrder::Weighted { weights } => weighted(weights, m.raw()),
            _ => u64::from(m.degree()),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Weighted { weights } => weighted(weights, a.raw())
                .cmp(&weighted(weights, b.raw()))
                .then_with(|| revlex_tail(a.raw(), b.raw())),
            TermOrder::Lex => lex(a.raw(), b.raw()),
            TermOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| revlex_tail(a.raw(), b.raw())),
            TermOrder::Elimination { front } => {
                let is_front = |p: &&(u16, u16)| front.binary_search(&(p.0 as usize)).is_ok();
                let fa: Vec<(u16, u16)> = a.raw().iter().filter(is_front).copied().collect();
                let fb: Vec<(u16, u16)> = b.raw().iter().filter(is_front).copied().collect();
                let da: u32 = fa.iter().map(|p| p.1 as u32).sum();
                let db: u32 = fb.iter().map(|p| p.1 as u32).sum();
                da.cmp(&db)
                    .then_with(|| revlex_tail(&fa, &fb))
                    .then_with(|| (a.degree() - da).cmp(&(b.degree() - db)))
                    .then_with(|| {
                        let ra: Vec<(u16, u16)> = a.raw().iter().filter(|p| !is_front(p)).copied().collect();
                        let rb: Vec<(u16, u16)> = b.raw().iter().filter(|p| !is_front(p)).copied().collect();
                        revlex_tail(&ra, &rb)
                    })
            }
        }
    }
}

fn weighted(weights: &[u32], m: &[(u16, u16)]) -> u64 {
    m.iter()
        .map(|&(v, e)| u64::from(weights[v as usize]) * u64::from(e))
        .sum()
}

fn lex(a: &[(u16, u16)], b: &[(u16, u16)]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x.0 != y.0 {
            // the side carrying the smaller variable id has the larger monomial
            return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
        }
        if x.1 != y.1 {
            return x.1.cmp(&y.1);
        }
    }
    a.len().cmp(&b.len())
}

/// Reverse-lex tie break for monomials of equal degree: at the largest
/// variable id where the exponents differ, the smaller exponent wins.
fn revlex_tail(a: &[(u16, u16)], b: &[(u16, u16)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    while i > 0 && j > 0 {
        let (x, y) = (a[i - 1], b[j - 1]);
        if x.0 != y.0 {
            // the larger id is present only on one side; that side has the
            // bigger exponent there, so it is the smaller monomial
            return if x.0 > y.0 { Ordering::Less } else { Ordering::Greater };
        }
        if x.1 != y.1 {
            return y.1.cmp(&x.1);
        }
        i -= 1;
        j -= 1;
    }
    match (i, j) {
        (0, 0) => Ordering::Equal,
        (0, _) => Ordering::Greater,
        _ => Ordering::Less,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_dense(e)
    }

    #[test]
    fn lex_basics() {
        let o = TermOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[0, 1])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2]), &m(&[2])), Ordering::Equal);
    }

    #[test]
    fn grevlex_basics() {
        let o = TermOrder::GrevLex;
        // x^2 > xy > y^2 > xz > yz > z^2
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{} vs {}", w[0], w[1]);
        }
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1]), &m(&[])), Ordering::Greater);
    }

    #[test]
    fn weighted_degree_comes_first() {
        let o = TermOrder::Weighted { weights: vec![2, 3] };
        // x^3 and y^2 both weigh 6; y^2 carries the larger last exponent, so it is smaller
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[3]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.degree(&m(&[1, 1])), 5);
    }

    #[test]
    fn elimination_ranks_front_block_first() {
        let o = TermOrder::elimination(vec![2]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2]), &m(&[1, 1])), Ordering::Greater);
    }
}
