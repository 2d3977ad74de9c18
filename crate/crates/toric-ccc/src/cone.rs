//! Rational polyhedral cones with exact V- and H-representations.
//!
//! A cone is stored by a canonical minimal generator list (lineality shows up
//! as +/- pairs) together with derived facet normals in the dual lattice.
//! Membership is certified by the normals: x lies in the cone iff every
//! normal pairs nonnegatively with x.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Result, ToricError};
use crate::linalg::{self, IMat};
use crate::vector::{LatticeVector, RationalVector, Role};

/// Generators of the dual cone {m : <m, g> >= 0 for all g in gens}.
///
/// Works for any generator list in rank <= 3: the lineality of the dual is
/// returned as +/- pairs and the pointed part by its extreme rays.
pub fn dual_generators(gens: &IMat, rank: usize) -> IMat {
    if gens.iter().all(|g| g.iter().all(|x| x.is_zero())) {
        // Dual of the zero cone is the full space.
        let mut out = Vec::new();
        for i in 0..rank {
            let mut e = vec![BigInt::zero(); rank];
            e[i] = BigInt::one();
            out.push(e.clone());
            e[i] = -BigInt::one();
            out.push(e);
        }
        return canonical_ray_list(out);
    }
    let lineality = linalg::integer_kernel(gens);
    let span_basis = linalg::saturate_rowspace(gens);
    let d = span_basis.len();
    // Constraints on y-coordinates along span_basis: P y >= 0.
    let p: IMat = gens
        .iter()
        .map(|g| span_basis.iter().map(|u| linalg::dot(g, u)).collect())
        .collect();
    let mut rays_y: IMat = Vec::new();
    if d == 1 {
        for cand in [vec![BigInt::one()], vec![-BigInt::one()]] {
            if p.iter().all(|row| !linalg::dot(row, &cand).is_negative()) {
                rays_y.push(cand);
            }
        }
    } else {
        let m = p.len();
        let subsets = choose_indices(m, d - 1);
        for sub in subsets {
            let rows: IMat = sub.iter().map(|&i| p[i].clone()).collect();
            if linalg::integer_rank(&rows) != d - 1 {
                continue;
            }
            let ker = linalg::integer_kernel(&rows);
            if ker.len() != 1 {
                continue;
            }
            for cand in [ker[0].clone(), ker[0].iter().map(|x| -x).collect()] {
                if p.iter().all(|row| !linalg::dot(row, &cand).is_negative()) {
                    rays_y.push(linalg::primitivize(&cand));
                }
            }
        }
    }
    let mut out: IMat = Vec::new();
    for l in &lineality {
        out.push(l.clone());
        out.push(l.iter().map(|x| -x).collect());
    }
    for y in rays_y {
        let mut v = vec![BigInt::zero(); rank];
        for (yj, u) in y.iter().zip(&span_basis) {
            for (vk, uk) in v.iter_mut().zip(u) {
                *vk = &*vk + &(yj * uk);
            }
        }
        out.push(linalg::primitivize(&v));
    }
    canonical_ray_list(out)
}

fn canonical_ray_list(rays: IMat) -> IMat {
    let mut out: IMat = rays
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| linalg::primitivize(&r))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn choose_indices(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A rational polyhedral cone. Not necessarily strongly convex: lineality is
/// represented by +/- generator pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeRep {
    /// Canonical minimal generators (primitive, sorted).
    pub rays: Vec<LatticeVector>,
    /// Facet normals in the dual lattice; membership certificate.
    pub facet_normals: Vec<LatticeVector>,
    pub rank: usize,
    pub role: Role,
}

impl ConeRep {
    pub fn from_rays(rays: &[LatticeVector], rank: usize, role: Role) -> Result<ConeRep> {
        if rank > 3 {
            return Err(ToricError::UnsupportedRank(rank));
        }
        let gen_mat: IMat = rays.iter().map(|r| r.coords.clone()).collect();
        let normals = dual_generators(&gen_mat, rank);
        let canonical = dual_generators(&normals, rank);
        Ok(ConeRep {
            rays: canonical
                .into_iter()
                .map(|c| LatticeVector::new(c, role))
                .collect(),
            facet_normals: normals
                .into_iter()
                .map(|c| LatticeVector::new(c, role.dual()))
                .collect(),
            rank,
            role,
        })
    }

    pub fn from_rays_i64(rays: &[&[i64]], rank: usize, role: Role) -> ConeRep {
        let rs: Vec<LatticeVector> = rays.iter().map(|r| LatticeVector::from_i64(r, role)).collect();
        ConeRep::from_rays(&rs, rank, role).expect("rank <= 3")
    }

    /// Cone {x : <u, x> >= 0 for all u in normals}.
    pub fn from_halfspaces(normals: &[LatticeVector], rank: usize, role: Role) -> Result<ConeRep> {
        if rank > 3 {
            return Err(ToricError::UnsupportedRank(rank));
        }
        let normal_mat: IMat = normals.iter().map(|u| u.coords.clone()).collect();
        let rays = dual_generators(&normal_mat, rank);
        let minimal_normals = dual_generators(&rays, rank);
        Ok(ConeRep {
            rays: rays.into_iter().map(|c| LatticeVector::new(c, role)).collect(),
            facet_normals: minimal_normals
                .into_iter()
                .map(|c| LatticeVector::new(c, role.dual()))
                .collect(),
            rank,
            role,
        })
    }

    pub fn zero(rank: usize, role: Role) -> ConeRep {
        ConeRep::from_rays(&[], rank, role).expect("rank <= 3")
    }

    pub fn full_space(rank: usize, role: Role) -> ConeRep {
        ConeRep::from_halfspaces(&[], rank, role).expect("rank <= 3")
    }

    pub fn dim(&self) -> usize {
        let mat: IMat = self.rays.iter().map(|r| r.coords.clone()).collect();
        linalg::integer_rank(&mat)
    }

    pub fn is_zero_cone(&self) -> bool {
        self.rays.is_empty()
    }

    /// Strongly convex = contains no line.
    pub fn is_strongly_convex(&self) -> bool {
        let mat: IMat = self
            .facet_normals
            .iter()
            .map(|u| u.coords.clone())
            .collect();
        linalg::integer_rank(&mat) == self.rank
    }

    pub fn contains_lattice(&self, x: &LatticeVector) -> bool {
        self.facet_normals
            .iter()
            .all(|u| !linalg::dot(&u.coords, &x.coords).is_negative())
    }

    pub fn contains_rational(&self, x: &RationalVector) -> bool {
        self.facet_normals
            .iter()
            .all(|u| !x.pair_lattice(u).is_negative())
    }

    /// Strict membership in the relative interior.
    pub fn relint_contains(&self, x: &RationalVector) -> bool {
        if !self.contains_rational(x) {
            return false;
        }
        // x must be strict on every normal that is not identically zero on
        // the cone's span.
        for u in &self.facet_normals {
            let vanishes_on_cone = self
                .rays
                .iter()
                .all(|r| linalg::dot(&u.coords, &r.coords).is_zero());
            let v = x.pair_lattice(u);
            if vanishes_on_cone {
                if !v.is_zero() {
                    return false;
                }
            } else if v.is_zero() {
                return false;
            }
        }
        true
    }

    /// A rational point in the relative interior (the ray sum).
    pub fn relint_point(&self) -> RationalVector {
        let mut sum = vec![BigRational::zero(); self.rank];
        for r in &self.rays {
            for (s, c) in sum.iter_mut().zip(&r.coords) {
                *s = &*s + linalg::to_rational(c);
            }
        }
        RationalVector::new(sum)
    }

    /// The dual cone {m : <m, v> >= 0 for all v in self}.
    pub fn dual(&self) -> Result<ConeRep> {
        if self.rank > 3 {
            return Err(ToricError::UnsupportedRank(self.rank));
        }
        let gen_mat: IMat = self.rays.iter().map(|r| r.coords.clone()).collect();
        let dual_rays = dual_generators(&gen_mat, self.rank);
        let dual_normals = dual_generators(&dual_rays, self.rank);
        Ok(ConeRep {
            rays: dual_rays
                .into_iter()
                .map(|c| LatticeVector::new(c, self.role.dual()))
                .collect(),
            facet_normals: dual_normals
                .into_iter()
                .map(|c| LatticeVector::new(c, self.role))
                .collect(),
            rank: self.rank,
            role: self.role.dual(),
        })
    }

    /// Lattice basis of the orthogonal complement (in the dual lattice) of
    /// the cone's span, computed by Hermite normal form.
    pub fn orthogonal_complement(&self) -> Vec<LatticeVector> {
        let mat: IMat = self.rays.iter().map(|r| r.coords.clone()).collect();
        linalg::integer_kernel(&mat)
            .into_iter()
            .map(|v| LatticeVector::new(v, self.role.dual()))
            .collect()
    }

    pub fn intersect(&self, other: &ConeRep) -> Result<ConeRep> {
        debug_assert_eq!(self.role, other.role);
        let mut normals = self.facet_normals.clone();
        normals.extend(other.facet_normals.iter().cloned());
        ConeRep::from_halfspaces(&normals, self.rank, self.role)
    }

    pub fn negated(&self) -> ConeRep {
        let rays: Vec<LatticeVector> = self.rays.iter().map(|r| r.neg()).collect();
        ConeRep::from_rays(&rays, self.rank, self.role).expect("rank preserved")
    }

    /// Subset test via the membership certificate of `other`.
    pub fn is_subset_of(&self, other: &ConeRep) -> bool {
        self.rays.iter().all(|r| other.contains_lattice(r))
    }

    /// Is `self` a face of `other`? A face is cut out by turning a subset of
    /// the facet normals into equalities.
    pub fn is_face_of(&self, other: &ConeRep) -> bool {
        if !self.is_subset_of(other) {
            return false;
        }
        // Normals of `other` vanishing on all of `self`.
        let vanishing: Vec<&LatticeVector> = other
            .facet_normals
            .iter()
            .filter(|u| {
                self.rays
                    .iter()
                    .all(|r| linalg::dot(&u.coords, &r.coords).is_zero())
            })
            .collect();
        // The face they cut out is generated by other's rays lying on all of
        // them; compare with self.
        let face_rays: Vec<LatticeVector> = other
            .rays
            .iter()
            .filter(|r| {
                vanishing
                    .iter()
                    .all(|u| linalg::dot(&u.coords, &r.coords).is_zero())
            })
            .cloned()
            .collect();
        match ConeRep::from_rays(&face_rays, self.rank, self.role) {
            Ok(face) => face == *self,
            Err(_) => false,
        }
    }

    pub fn ray_matrix(&self) -> IMat {
        self.rays.iter().map(|r| r.coords.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrant_is_self_dual() {
        let c = ConeRep::from_rays_i64(&[&[1, 0], &[0, 1]], 2, Role::N);
        let d = c.dual().unwrap();
        assert_eq!(d.ray_matrix(), c.ray_matrix());
    }

    #[test]
    fn ray_dualizes_to_halfplane() {
        let c = ConeRep::from_rays_i64(&[&[1, 0]], 2, Role::N);
        let d = c.dual().unwrap();
        let mut expected: IMat = vec![
            vec![linalg::bigint(1), linalg::bigint(0)],
            vec![linalg::bigint(0), linalg::bigint(1)],
            vec![linalg::bigint(0), linalg::bigint(-1)],
        ];
        expected.sort();
        assert_eq!(d.ray_matrix(), expected);
        // {m1 >= 0} as halfspace description
        assert!(d.contains_rational(&RationalVector::from_i64(&[3, -7])));
        assert!(!d.contains_rational(&RationalVector::from_i64(&[-1, 5])));
    }

    #[test]
    fn f2_cone_dual_matches_double_description() {
        // maximal cone <(0,1),(-1,-2)> of the F2 fan
        let c = ConeRep::from_rays_i64(&[&[0, 1], &[-1, -2]], 2, Role::N);
        let d = c.dual().unwrap();
        let expected = ConeRep::from_rays_i64(&[&[-1, 0], &[-2, 1]], 2, Role::M);
        assert_eq!(d.ray_matrix(), expected.ray_matrix());
    }

    #[test]
    fn dual_is_involution_on_full_dim_cones() {
        for rays in [
            vec![vec![1i64, 0], vec![0, 1]],
            vec![vec![0, 1], vec![-1, -2]],
            vec![vec![1, 0], vec![-1, -1]],
        ] {
            let rs: Vec<&[i64]> = rays.iter().map(|r| r.as_slice()).collect();
            let c = ConeRep::from_rays_i64(&rs, 2, Role::N);
            let dd = c.dual().unwrap().dual().unwrap();
            assert_eq!(dd.ray_matrix(), c.ray_matrix());
        }
    }

    #[test]
    fn orthogonal_complement_examples() {
        let c = ConeRep::from_rays_i64(&[&[1, 0]], 2, Role::N);
        let basis = c.orthogonal_complement();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0].coords, vec![linalg::bigint(0), linalg::bigint(1)]);

        let full = ConeRep::from_rays_i64(&[&[1, 0], &[0, 1]], 2, Role::N);
        assert!(full.orthogonal_complement().is_empty());

        let skew = ConeRep::from_rays_i64(&[&[1, -2]], 2, Role::N);
        let b = skew.orthogonal_complement();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].coords, vec![linalg::bigint(2), linalg::bigint(1)]);
        assert!(b[0].is_primitive());
    }

    #[test]
    fn face_relation() {
        let sigma = ConeRep::from_rays_i64(&[&[1, 0], &[0, 1]], 2, Role::N);
        let tau = ConeRep::from_rays_i64(&[&[1, 0]], 2, Role::N);
        let zero = ConeRep::zero(2, Role::N);
        assert!(tau.is_face_of(&sigma));
        assert!(zero.is_face_of(&sigma));
        assert!(sigma.is_face_of(&sigma));
        let diag = ConeRep::from_rays_i64(&[&[1, 1]], 2, Role::N);
        assert!(!diag.is_face_of(&sigma));
    }

    #[test]
    fn strong_convexity() {
        assert!(ConeRep::from_rays_i64(&[&[1, 0], &[0, 1]], 2, Role::N).is_strongly_convex());
        assert!(!ConeRep::from_rays_i64(&[&[1, 0], &[-1, 0]], 2, Role::N).is_strongly_convex());
        assert!(ConeRep::zero(2, Role::N).is_strongly_convex());
    }

    #[test]
    fn relint_point_membership() {
        let c = ConeRep::from_rays_i64(&[&[0, 1], &[-1, -2]], 2, Role::N);
        let p = c.relint_point();
        assert!(c.relint_contains(&p));
        let boundary = RationalVector::from_i64(&[0, 1]);
        assert!(!c.relint_contains(&boundary));
    }

    #[test]
    fn three_dim_cone_duality() {
        let c = ConeRep::from_rays_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3, Role::N);
        let d = c.dual().unwrap();
        assert_eq!(d.ray_matrix(), c.ray_matrix());
        let dd = d.dual().unwrap();
        assert_eq!(dd.ray_matrix(), c.ray_matrix());
    }

    #[test]
    fn rank_cap() {
        let r = LatticeVector::from_i64(&[1, 0, 0, 0], Role::N);
        assert!(matches!(
            ConeRep::from_rays(&[r], 4, Role::N),
            Err(ToricError::UnsupportedRank(4))
        ));
    }
}
