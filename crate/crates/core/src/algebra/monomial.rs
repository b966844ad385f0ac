use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Sparse monomial: `(variable id, exponent)` pairs with strictly increasing
/// ids and no zero exponents. The empty monomial is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(u16, u16); 6]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(id: usize) -> Self {
        Self::var_pow(id, 1)
    }

    pub fn var_pow(id: usize, e: u32) -> Self {
        let mut m = Monomial::one();
        if e > 0 {
            m.exps.push((id as u16, e as u16));
            m.degree = e;
        }
        m
    }

    /// Builds from arbitrary `(id, exponent)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(usize, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_unstable();
        let mut exps: SmallVec<[(u16, u16); 6]> = SmallVec::new();
        let mut degree = 0;
        for (id, e) in v {
            degree += e;
            match exps.last_mut() {
                Some(last) if last.0 as usize == id => last.1 += e as u16,
                _ => exps.push((id as u16, e as u16)),
            }
        }
        Monomial { exps, degree }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i, e)))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, id: usize) -> u32 {
        self.exps.iter().find(|p| p.0 as usize == id).map_or(0, |p| p.1 as u32)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(i, e)| (i as usize, e as u32))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|p| p.0 as usize)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|p| p.0 as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let b = &other.exps;
        let mut j = 0;
        for &(id, e) in &self.exps {
            while j < b.len() && b[j].0 < id {
                j += 1;
            }
            if j == b.len() || b[j].0 != id || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = SmallVec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(id, e) in &self.exps {
            if j < other.exps.len() && other.exps[j].0 == id {
                let r = e - other.exps[j].1;
                if r > 0 {
                    exps.push((id, r));
                }
                j += 1;
            } else {
                exps.push((id, e));
            }
        }
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        let mut degree = 0u32;
        while i < a.len() || j < b.len() {
            let pick = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            let p = match pick {
                Ordering::Less => {
                    i += 1;
                    a[i - 1]
                }
                Ordering::Greater => {
                    j += 1;
                    b[j - 1]
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (a[i - 1].0, a[i - 1].1.max(b[j - 1].1))
                }
            };
            degree += p.1 as u32;
            exps.push(p);
        }
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Drops every variable for which `keep` is false (sets it to 1).
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Monomial {
        let exps: SmallVec<[(u16, u16); 6]> = self.exps.iter().copied().filter(|p| keep(p.0 as usize)).collect();
        let degree = exps.iter().map(|p| p.1 as u32).sum();
        Monomial { exps, degree }
    }

    /// Renames variables through `map`; the map must be injective on the support.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_pairs(self.iter().map(|(i, e)| (map(i), e)))
    }

    pub(crate) fn raw(&self) -> &[(u16, u16)] {
        &self.exps
    }
}

/// Displays with placeholder names `v0`, `v1`, ...; ring-aware output goes
/// through `Polynomial`'s formatter.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (i, e)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "v{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Keeps only the minimal elements under divisibility; output sorted and
/// deduplicated.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.raw().cmp(b.raw())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_div_lcm() {
        let a = Monomial::from_dense(&[2, 0, 1]);
        let b = Monomial::from_dense(&[1, 3]);
        assert_eq!(a.mul(&b), Monomial::from_dense(&[3, 3, 1]));
        assert_eq!(a.lcm(&b), Monomial::from_dense(&[2, 3, 1]));
        assert_eq!(a.lcm(&b).degree(), 6);
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert!(b.div(&a).is_none());
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(1).is_coprime(&Monomial::var(2)));
    }

    #[test]
    fn from_pairs_merges() {
        let m = Monomial::from_pairs([(3, 1), (1, 2), (3, 2), (0, 0)]);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(1, 2), (3, 3)]);
        assert_eq!(m.degree(), 5);
    }

    #[test]
    fn minimalize_drops_multiples() {
        let g = vec![
            Monomial::from_dense(&[1, 1]),
            Monomial::from_dense(&[2]),
            Monomial::from_dense(&[2, 1]),
            Monomial::from_dense(&[1, 1]),
        ];
        let m = minimalize(g);
        assert_eq!(m, vec![Monomial::from_dense(&[1, 1]), Monomial::from_dense(&[2])]);
    }
}
