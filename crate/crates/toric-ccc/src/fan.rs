//! Fans, their predicates, the built-in library of fans, and toric-surface
//! self-intersection numbers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::cone::ConeRep;
use crate::error::{Result, ToricError};
use crate::linalg::{self};
use crate::rng::DetRng;
use crate::vector::{LatticeVector, RationalVector, Role};

/// A fan: primitive ray generators plus maximal cones as ray index sets.
/// `all_cones` is the closure under faces (the zero cone included).
#[derive(Debug, Clone)]
pub struct Fan {
    pub rays: Vec<LatticeVector>,
    pub max_cones: Vec<Vec<usize>>,
    pub all_cones: Vec<ConeRep>,
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FanFlags {
    pub smooth: bool,
    pub complete: bool,
    pub simplicial: bool,
}

/// Validate fan axioms and compute the face closure.
pub fn build_fan(rays: Vec<LatticeVector>, max_cones: Vec<Vec<usize>>, rank: usize) -> Result<Fan> {
    if rank > 3 {
        return Err(ToricError::UnsupportedRank(rank));
    }
    for r in &rays {
        if r.rank() != rank {
            return Err(ToricError::InvalidFan(format!(
                "ray {r} does not have rank {rank}"
            )));
        }
        if r.is_zero() {
            return Err(ToricError::InvalidFan("zero ray".into()));
        }
        if !r.is_primitive() {
            return Err(ToricError::InvalidFan(format!("ray {r} is not primitive")));
        }
    }
    for (i, r) in rays.iter().enumerate() {
        for s in rays.iter().skip(i + 1) {
            if r == s {
                return Err(ToricError::InvalidFan(format!("duplicate ray {r}")));
            }
        }
    }
    let mut used = vec![false; rays.len()];
    let mut cones: Vec<ConeRep> = Vec::new();
    for mc in &max_cones {
        for &i in mc {
            if i >= rays.len() {
                return Err(ToricError::InvalidFan(format!("ray index {i} out of range")));
            }
            used[i] = true;
        }
        let gen: Vec<LatticeVector> = mc.iter().map(|&i| rays[i].clone()).collect();
        let cone = ConeRep::from_rays(&gen, rank, Role::N)?;
        if !cone.is_strongly_convex() {
            return Err(ToricError::InvalidFan(format!(
                "cone on rays {mc:?} is not strongly convex"
            )));
        }
        // The listed rays must all be extreme.
        if cone.rays.len() != mc.len() {
            return Err(ToricError::InvalidFan(format!(
                "cone on rays {mc:?} has redundant generators"
            )));
        }
        cones.push(cone);
    }
    if let Some(i) = used.iter().position(|u| !u) {
        return Err(ToricError::InvalidFan(format!(
            "ray {} is not contained in any maximal cone",
            rays[i]
        )));
    }
    // Pairwise intersections must be common faces.
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let inter = cones[i].intersect(&cones[j])?;
            if !inter.is_face_of(&cones[i]) || !inter.is_face_of(&cones[j]) {
                return Err(ToricError::InvalidFan(format!(
                    "cones {:?} and {:?} do not intersect in a common face",
                    max_cones[i], max_cones[j]
                )));
            }
        }
    }
    // Face closure.
    let mut all_cones: Vec<ConeRep> = Vec::new();
    let push = |c: ConeRep, acc: &mut Vec<ConeRep>| {
        if !acc.iter().any(|d| *d == c) {
            acc.push(c);
        }
    };
    for c in &cones {
        for f in faces_of(c) {
            push(f, &mut all_cones);
        }
    }
    // Sort by (dim, rays) for deterministic ordering.
    all_cones.sort_by(|a, b| (a.dim(), a.ray_matrix()).cmp(&(b.dim(), b.ray_matrix())));
    Ok(Fan {
        rays,
        max_cones,
        all_cones,
        rank,
    })
}

/// All faces of a strongly convex cone, the cone itself and the zero cone
/// included.
pub fn faces_of(cone: &ConeRep) -> Vec<ConeRep> {
    let mut out: Vec<ConeRep> = vec![cone.clone()];
    let mut stack = vec![cone.clone()];
    while let Some(c) = stack.pop() {
        for u in &c.facet_normals {
            let facet_rays: Vec<LatticeVector> = c
                .rays
                .iter()
                .filter(|r| linalg::dot(&u.coords, &r.coords).is_zero())
                .cloned()
                .collect();
            let f = ConeRep::from_rays(&facet_rays, c.rank, c.role).expect("rank <= 3");
            if !out.iter().any(|d| *d == f) {
                out.push(f.clone());
                stack.push(f);
            }
        }
    }
    // Always include the zero cone.
    let zero = ConeRep::zero(cone.rank, cone.role);
    if !out.iter().any(|d| *d == zero) {
        out.push(zero);
    }
    out
}

impl Fan {
    pub fn maximal_cone(&self, idx: usize) -> ConeRep {
        let gen: Vec<LatticeVector> = self.max_cones[idx]
            .iter()
            .map(|&i| self.rays[i].clone())
            .collect();
        ConeRep::from_rays(&gen, self.rank, Role::N).expect("validated at construction")
    }

    pub fn maximal_cones(&self) -> Vec<ConeRep> {
        (0..self.max_cones.len()).map(|i| self.maximal_cone(i)).collect()
    }

    /// Ray indices spanning the given cone (which must consist of fan rays).
    pub fn ray_indices_of(&self, cone: &ConeRep) -> Vec<usize> {
        cone.rays
            .iter()
            .map(|r| {
                self.rays
                    .iter()
                    .position(|s| s == r)
                    .expect("cone ray is a fan ray")
            })
            .collect()
    }

    /// The cone whose relative interior contains x (the smallest cone
    /// containing x).
    pub fn cone_containing(&self, x: &RationalVector) -> Result<ConeRep> {
        for c in &self.all_cones {
            if c.relint_contains(x) {
                return Ok(c.clone());
            }
        }
        Err(ToricError::NotCovered(format!("{x}")))
    }

    pub fn classify(&self) -> FanFlags {
        let simplicial = self
            .maximal_cones()
            .iter()
            .all(|c| c.rays.len() == c.dim());
        let smooth = self.maximal_cones().iter().all(|c| {
            let mat = c.ray_matrix();
            if c.dim() == self.rank && mat.len() == self.rank {
                linalg::determinant(&mat).abs() == BigInt::one()
            } else {
                let diag = linalg::smith_diagonal(&mat);
                diag.len() == c.dim() && diag.iter().all(|d| *d == BigInt::one())
            }
        });
        let complete = self.is_complete();
        FanFlags {
            smooth,
            complete,
            simplicial,
        }
    }

    /// Structural ridge-pairing criterion plus a deterministic sampling
    /// fallback: both must agree for the fan to count as complete.
    fn is_complete(&self) -> bool {
        let n = self.rank;
        let maxes = self.maximal_cones();
        if maxes.is_empty() || maxes.iter().any(|c| c.dim() != n) {
            return false;
        }
        // Every (n-1)-face of a maximal cone lies in exactly two of them,
        // and the adjacency graph over those ridges is connected.
        let mut ridges: Vec<(ConeRep, Vec<usize>)> = Vec::new();
        for (i, c) in maxes.iter().enumerate() {
            for f in faces_of(c) {
                if f.dim() + 1 != n {
                    continue;
                }
                if let Some(entry) = ridges.iter_mut().find(|(r, _)| *r == f) {
                    entry.1.push(i);
                } else {
                    ridges.push((f, vec![i]));
                }
            }
        }
        if ridges.iter().any(|(_, owners)| owners.len() != 2) {
            return false;
        }
        let mut seen = vec![false; maxes.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (_, owners) in &ridges {
                if owners.contains(&i) {
                    for &j in owners {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        // Deterministic sampling: 100 pseudorandom rational vectors must all
        // lie in some maximal cone.
        let mut rng = DetRng::new(0x1CE_CAFE);
        for _ in 0..100 {
            let coords: Vec<BigRational> = (0..n)
                .map(|_| {
                    let num = rng.int_in(-1000, 1000);
                    let den = rng.int_in(1, 40);
                    linalg::ratio(num, den)
                })
                .collect();
            let x = RationalVector::new(coords);
            if !maxes.iter().any(|c| c.contains_rational(&x)) {
                return false;
            }
        }
        true
    }

    /// Ray indices sorted counterclockwise around the origin (rank 2).
    pub fn rays_ccw(&self) -> Vec<usize> {
        assert_eq!(self.rank, 2);
        let half = |v: &LatticeVector| -> u8 {
            let (x, y) = (&v.coords[0], &v.coords[1]);
            if y.is_positive() || (y.is_zero() && x.is_positive()) {
                0
            } else {
                1
            }
        };
        let mut idx: Vec<usize> = (0..self.rays.len()).collect();
        idx.sort_by(|&a, &b| {
            let (va, vb) = (&self.rays[a], &self.rays[b]);
            let (ha, hb) = (half(va), half(vb));
            if ha != hb {
                return ha.cmp(&hb);
            }
            let cross = &va.coords[0] * &vb.coords[1] - &va.coords[1] * &vb.coords[0];
            if cross.is_positive() {
                std::cmp::Ordering::Less
            } else if cross.is_negative() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        idx
    }

    /// Self-intersection numbers D_i . D_i on a smooth complete surface:
    /// with rays in cyclic order, v_{i-1} + v_{i+1} = a_i v_i and
    /// D_i^2 = -a_i.
    pub fn surface_self_intersections(&self) -> Result<Vec<(usize, BigInt)>> {
        if self.rank != 2 {
            return Err(ToricError::UnsupportedFan(format!(
                "rank {} surface requested",
                self.rank
            )));
        }
        let flags = self.classify();
        if !flags.smooth || !flags.complete {
            return Err(ToricError::UnsupportedFan(
                "self-intersections need a smooth complete surface fan".into(),
            ));
        }
        let order = self.rays_ccw();
        let r = order.len();
        let mut out = Vec::new();
        for k in 0..r {
            let prev = &self.rays[order[(k + r - 1) % r]];
            let next = &self.rays[order[(k + 1) % r]];
            let v = &self.rays[order[k]];
            let sum = prev.add(next);
            // sum = a * v for an integer a on a smooth surface.
            let a = solve_scalar(&sum.coords, &v.coords).ok_or_else(|| {
                ToricError::UnsupportedFan(format!(
                    "cyclic relation fails at ray {v}: neighbors do not span a multiple"
                ))
            })?;
            out.push((order[k], -a));
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }
}

fn solve_scalar(sum: &[BigInt], v: &[BigInt]) -> Option<BigInt> {
    // sum = a*v componentwise, a integer.
    let mut a: Option<BigRational> = None;
    for (s, vi) in sum.iter().zip(v) {
        if vi.is_zero() {
            if !s.is_zero() {
                return None;
            }
            continue;
        }
        let q = BigRational::new(s.clone(), vi.clone());
        match &a {
            None => a = Some(q),
            Some(prev) if *prev == q => {}
            _ => return None,
        }
    }
    let a = a?;
    if a.is_integer() {
        Some(a.to_integer())
    } else {
        None
    }
}

/// The built-in fans: P1, P2, P3, Fm (m >= 0), B1, B2, B3.
pub fn library_fan(name: &str) -> Result<Fan> {
    let ray2 = |coords: &[[i64; 2]]| -> Vec<LatticeVector> {
        coords
            .iter()
            .map(|c| LatticeVector::from_i64(&c[..], Role::N))
            .collect()
    };
    match name {
        "P1" => build_fan(
            vec![
                LatticeVector::from_i64(&[1], Role::N),
                LatticeVector::from_i64(&[-1], Role::N),
            ],
            vec![vec![0], vec![1]],
            1,
        ),
        "P2" => build_fan(
            ray2(&[[1, 0], [0, 1], [-1, -1]]),
            vec![vec![0, 1], vec![1, 2], vec![2, 0]],
            2,
        ),
        "P3" => build_fan(
            vec![
                LatticeVector::from_i64(&[1, 0, 0], Role::N),
                LatticeVector::from_i64(&[0, 1, 0], Role::N),
                LatticeVector::from_i64(&[0, 0, 1], Role::N),
                LatticeVector::from_i64(&[-1, -1, -1], Role::N),
            ],
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
            3,
        ),
        "B1" => library_fan("F1"),
        "B2" => build_fan(
            ray2(&[[1, 0], [1, 1], [0, 1], [-1, -1]]),
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
            2,
        ),
        "B3" => build_fan(
            ray2(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]),
            vec![
                vec![0, 1],
                vec![1, 2],
                vec![2, 3],
                vec![3, 4],
                vec![4, 5],
                vec![5, 0],
            ],
            2,
        ),
        _ => {
            if let Some(m) = name.strip_prefix('F').and_then(|s| s.parse::<i64>().ok()) {
                if m < 0 {
                    return Err(ToricError::UnknownFan(name.into()));
                }
                return build_fan(
                    ray2(&[[1, 0], [0, 1], [-1, -m], [0, -1]]),
                    vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
                    2,
                );
            }
            Err(ToricError::UnknownFan(name.into()))
        }
    }
}

/// Every surface fan shipped with the library, with its name.
pub fn surface_library() -> Vec<(&'static str, Fan)> {
    ["P2", "F0", "F1", "F2", "F3", "B2", "B3"]
        .iter()
        .map(|&n| (n, library_fan(n).expect("library fan")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::bigint;

    #[test]
    fn p2_fan_has_seven_cones() {
        let f = library_fan("P2").unwrap();
        assert_eq!(f.all_cones.len(), 7);
        let flags = f.classify();
        assert!(flags.smooth && flags.complete && flags.simplicial);
    }

    #[test]
    fn f1_fan_has_nine_cones() {
        let f = library_fan("F1").unwrap();
        assert_eq!(f.all_cones.len(), 9);
    }

    #[test]
    fn f3_contains_expected_ray() {
        let f = library_fan("F3").unwrap();
        assert!(f
            .rays
            .iter()
            .any(|r| r.coords == vec![bigint(-1), bigint(-3)]));
    }

    #[test]
    fn p1_rays() {
        let f = library_fan("P1").unwrap();
        assert_eq!(f.rays.len(), 2);
        assert_eq!(f.all_cones.len(), 3);
        assert!(f.classify().complete);
    }

    #[test]
    fn b3_is_hexagonal() {
        let f = library_fan("B3").unwrap();
        assert_eq!(f.rays.len(), 6);
        let flags = f.classify();
        assert!(flags.smooth && flags.complete && flags.simplicial);
    }

    #[test]
    fn library_fans_all_smooth_complete_simplicial() {
        for name in ["P1", "P2", "P3", "F0", "F1", "F2", "F3", "B1", "B2", "B3"] {
            let f = library_fan(name).unwrap();
            let flags = f.classify();
            assert!(
                flags.smooth && flags.complete && flags.simplicial,
                "{name} should be smooth, complete, simplicial"
            );
        }
    }

    #[test]
    fn invalid_fan_overlapping_cones() {
        // Two 2-cones overlapping in their interiors: <e1, e2> and
        // <e1 + e2, e2> intersect in <e1+e2, e2>-half which is not a face.
        let rays = vec![
            LatticeVector::from_i64(&[1, 0], Role::N),
            LatticeVector::from_i64(&[0, 1], Role::N),
            LatticeVector::from_i64(&[1, 1], Role::N),
        ];
        let err = build_fan(rays, vec![vec![0, 1], vec![2, 1]], 2);
        assert!(matches!(err, Err(ToricError::InvalidFan(_))));
    }

    #[test]
    fn single_cone_fan_not_complete() {
        let rays = vec![
            LatticeVector::from_i64(&[1, 0], Role::N),
            LatticeVector::from_i64(&[0, 1], Role::N),
        ];
        let f = build_fan(rays, vec![vec![0, 1]], 2).unwrap();
        let flags = f.classify();
        assert!(flags.smooth && flags.simplicial && !flags.complete);
    }

    #[test]
    fn cone_containing_interior_and_boundary() {
        let f = library_fan("P2").unwrap();
        let c = f.cone_containing(&RationalVector::from_i64(&[1, 1])).unwrap();
        assert_eq!(c.dim(), 2);
        let r = f.cone_containing(&RationalVector::from_i64(&[1, 0])).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.rays.len(), 1);
        let o = f.cone_containing(&RationalVector::from_i64(&[0, 0])).unwrap();
        assert!(o.is_zero_cone());
    }

    #[test]
    fn cone_containing_f2_negative_quadrant_point() {
        let f = library_fan("F2").unwrap();
        let c = f
            .cone_containing(&RationalVector::from_i64(&[-1, -1]))
            .unwrap();
        assert_eq!(c.dim(), 2);
        // (-1,-1) = 1*(0,1) + 1*(-1,-2), so the facet tests put it in the
        // cone spanned by (0,1) and (-1,-2).
        let expect = ConeRep::from_rays_i64(&[&[0, 1], &[-1, -2]], 2, Role::N);
        assert_eq!(c.ray_matrix(), expect.ray_matrix());
    }

    #[test]
    fn not_covered_in_incomplete_fan() {
        let rays = vec![
            LatticeVector::from_i64(&[1, 0], Role::N),
            LatticeVector::from_i64(&[0, 1], Role::N),
        ];
        let f = build_fan(rays, vec![vec![0, 1]], 2).unwrap();
        assert!(matches!(
            f.cone_containing(&RationalVector::from_i64(&[-1, -1])),
            Err(ToricError::NotCovered(_))
        ));
    }

    #[test]
    fn hirzebruch_self_intersections() {
        for m in 0..=5i64 {
            let f = library_fan(&format!("F{m}")).unwrap();
            let table = f.surface_self_intersections().unwrap();
            // rays: v1=(1,0), v2=(0,1), v3=(-1,-m), v4=(0,-1)
            assert_eq!(table[0].1, bigint(0), "D1^2 on F{m}");
            assert_eq!(table[1].1, bigint(m), "D2^2 on F{m}");
            assert_eq!(table[2].1, bigint(0), "D3^2 on F{m}");
            assert_eq!(table[3].1, bigint(-m), "D4^2 on F{m}");
        }
    }

    #[test]
    fn p2_self_intersections_all_one() {
        let f = library_fan("P2").unwrap();
        for (_, d2) in f.surface_self_intersections().unwrap() {
            assert_eq!(d2, bigint(1));
        }
    }

    #[test]
    fn cyclic_relation_holds_exactly() {
        for name in ["P2", "F0", "F1", "F2", "F3", "B2", "B3"] {
            let f = library_fan(name).unwrap();
            let order = f.rays_ccw();
            let table = f.surface_self_intersections().unwrap();
            let r = order.len();
            for k in 0..r {
                let i = order[k];
                let a = -table[i].1.clone();
                let prev = &f.rays[order[(k + r - 1) % r]];
                let next = &f.rays[order[(k + 1) % r]];
                let lhs = prev.add(next);
                let rhs: Vec<BigInt> =
                    f.rays[i].coords.iter().map(|c| c * &a).collect();
                assert_eq!(lhs.coords, rhs, "relation at ray {i} of {name}");
            }
        }
    }

    #[test]
    fn unknown_fan_name() {
        assert!(matches!(library_fan("Q7"), Err(ToricError::UnknownFan(_))));
        assert!(matches!(library_fan("F-1"), Err(ToricError::UnknownFan(_))));
    }
}
