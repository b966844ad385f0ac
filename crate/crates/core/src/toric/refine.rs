use num_traits::Zero;

use super::Fan;
use crate::error::{Error, Result};

/// Values of the two piecewise linear functions at a point, and their gap
/// (the order of the relative canonical divisor along the point's orbit).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefinementComparison {
    pub psi: i64,
    pub phi: i64,
    pub e: i64,
}

/// A fine fan checked to subdivide a coarse one with the same support.
#[derive(Debug, Clone)]
pub struct Refinement<'a> {
    fine: &'a Fan,
    coarse: &'a Fan,
}

impl<'a> Refinement<'a> {
    pub fn new(fine: &'a Fan, coarse: &'a Fan) -> Result<Self> {
        let fail = |msg: String| Err(Error::NotARefinement(msg));
        if fine.rank() != coarse.rank() {
            return fail(format!("ranks {} and {} differ", fine.rank(), coarse.rank()));
        }
        fine.require_smooth()?;
        coarse.require_smooth()?;
        for cone in fine.cones() {
            let inside = (0..coarse.cones().len()).any(|c| cone.iter().all(|&r| coarse.contains(c, &fine.rays()[r])));
            if !inside {
                return fail(format!("fine cone {cone:?} lies in no coarse cone"));
            }
        }
        for c in 0..coarse.cones().len() {
            if !covers(fine, coarse, c) {
                return fail(format!(
                    "coarse cone {:?} is not covered by fine cones",
                    coarse.cones()[c]
                ));
            }
        }
        Ok(Refinement { fine, coarse })
    }

    pub fn compare(&self, v: &[i64]) -> Result<RefinementComparison> {
        let psi = self.fine.pl_value(v)?;
        let phi = self.coarse.pl_value(v)?;
        Ok(RefinementComparison { psi, phi, e: phi - psi })
    }
}

/// Whether the fine cones inside coarse cone `c` cover it: they must include
/// cones of full dimension `k`, and every facet of those that is not on the
/// boundary of `c` must be shared by two of them.
fn covers(fine: &Fan, coarse: &Fan, c: usize) -> bool {
    let k = coarse.cones()[c].len();
    let coords = |r: usize| coarse.cone_coordinates(c, &fine.rays()[r]);
    let full: Vec<&Vec<usize>> = fine
        .cones()
        .iter()
        .filter(|cone| cone.len() == k && cone.iter().all(|&r| coords(r).is_some()))
        .collect();
    if full.is_empty() {
        return false;
    }
    for cone in &full {
        for drop in 0..k {
            let facet: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &r)| r)
                .collect();
            let on_boundary = (0..k).any(|j| facet.iter().all(|&r| coords(r).expect("inside")[j].is_zero()));
            if on_boundary {
                continue;
            }
            let sharing = full
                .iter()
                .filter(|other| facet.iter().all(|r| other.contains(r)))
                .count();
            if sharing < 2 {
                return false;
            }
        }
    }
    true
}

pub fn refinement_compare(fine: &Fan, coarse: &Fan, v: &[i64]) -> Result<RefinementComparison> {
    Refinement::new(fine, coarse)?.compare(v)
}

#[cfg(test)]
mod tests {
    use super::super::standard::*;
    use super::*;

    #[test]
    fn blowup_against_the_plane() {
        let (bl, a2) = (blowup_plane(), affine_plane());
        let at = |v: &[i64]| refinement_compare(&bl, &a2, v).unwrap();
        assert_eq!(at(&[1, 1]), RefinementComparison { psi: 1, phi: 2, e: 1 });
        assert_eq!(at(&[2, 3]), RefinementComparison { psi: 3, phi: 5, e: 2 });
        assert_eq!(at(&[1, 0]), RefinementComparison { psi: 1, phi: 1, e: 0 });
        assert_eq!(at(&[0, 1]), RefinementComparison { psi: 1, phi: 1, e: 0 });
    }

    #[test]
    fn non_refinements() {
        let not = |r: Result<Refinement<'_>>| matches!(r, Err(Error::NotARefinement(_)));
        let (bl, a2, p2) = (blowup_plane(), affine_plane(), projective_plane());
        // coarse into fine is not a subdivision
        assert!(not(Refinement::new(&a2, &bl)));
        assert!(not(Refinement::new(&p2, &a2)));
        // same cones in A^2 but only half of it
        let half = Fan::new(2, vec![vec![1, 0], vec![1, 1]], vec![vec![0, 1]]).unwrap();
        assert!(not(Refinement::new(&half, &a2)));
        assert!(not(Refinement::new(&projective_line(), &a2)));
        assert!(Refinement::new(&a2, &a2).is_ok());
        assert!(Refinement::new(&p2, &p2).is_ok());
    }

    #[test]
    fn star_subdivision_of_projective_plane() {
        // blowing up the torus fixed point of cone(e1, e2)
        let fine = Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]],
            vec![vec![0, 3], vec![1, 3], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        let coarse = projective_plane();
        let r = Refinement::new(&fine, &coarse).unwrap();
        for v in fine.lattice_points(4).unwrap() {
            assert!(r.compare(&v).unwrap().e >= 0);
        }
    }
}
