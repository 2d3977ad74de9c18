//! T-divisors, support-function positivity, moment polytopes with face maps,
//! and graded sheaf cohomology of equivariant line bundles.
//!
//! Cohomology is computed weight by weight: at a character m the Cech
//! complex over the maximal-cone affine cover is a 0/1 incidence complex (a
//! chart intersection is occupied iff <m, v> >= -c_v for every ray v of the
//! intersection cone), and its cohomology dimensions come out of exact rank
//! computations.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::cone::ConeRep;
use crate::error::{Result, ToricError};
use crate::fan::Fan;
use crate::linalg::{self, QMat};
use crate::parallel::parallel_map;
use crate::polyhedron::PolyhedronRep;
use crate::vector::{LatticeVector, RationalVector, Role};

/// Integer coefficients c_i along the fan's rays: the divisor sum c_i D_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDivisor {
    pub coeffs: Vec<BigInt>,
}

impl TDivisor {
    pub fn new(coeffs: Vec<BigInt>) -> TDivisor {
        TDivisor { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> TDivisor {
        TDivisor {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn zero(len: usize) -> TDivisor {
        TDivisor {
            coeffs: vec![BigInt::zero(); len],
        }
    }

    /// The anticanonical divisor has every coefficient 1.
    pub fn anticanonical(len: usize) -> TDivisor {
        TDivisor {
            coeffs: vec![BigInt::one(); len],
        }
    }

    pub fn sub(&self, other: &TDivisor) -> TDivisor {
        TDivisor {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Per maximal cone, the character u with <u, v_i> = -c_i on the cone's rays.
#[derive(Debug, Clone)]
pub struct CartierData {
    pub per_cone: Vec<LatticeVector>,
}

/// Check the fan supports the bundle machinery: smooth and complete.
fn require_smooth_complete(fan: &Fan) -> Result<()> {
    let flags = fan.classify();
    if !flags.smooth || !flags.complete {
        return Err(ToricError::UnsupportedFan(
            "bundle operations need a smooth complete fan".into(),
        ));
    }
    Ok(())
}

/// The linearization u_sigma of the divisor on each maximal chart.
pub fn cartier_data(fan: &Fan, divisor: &TDivisor) -> Result<CartierData> {
    require_smooth_complete(fan)?;
    let mut per_cone = Vec::new();
    for mc in &fan.max_cones {
        let a: QMat = mc
            .iter()
            .map(|&i| {
                fan.rays[i]
                    .coords
                    .iter()
                    .map(linalg::to_rational)
                    .collect()
            })
            .collect();
        let b: Vec<BigRational> = mc
            .iter()
            .map(|&i| -linalg::to_rational(&divisor.coeffs[i]))
            .collect();
        let u = linalg::solve_rational(&a, &b)
            .expect("smooth maximal cones have unimodular ray matrices");
        let u = RationalVector::new(u)
            .as_lattice(Role::M)
            .expect("integral on a smooth cone");
        per_cone.push(u);
    }
    Ok(CartierData { per_cone })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Positivity {
    pub ample: bool,
    pub nef: bool,
}

/// Nef/ample via the support function: for every maximal cone and every ray
/// outside it, <u_sigma, v_j> >= -c_j (strict for ample).
pub fn positivity(fan: &Fan, divisor: &TDivisor) -> Result<Positivity> {
    let cartier = cartier_data(fan, divisor)?;
    let mut nef = true;
    let mut ample = true;
    for (k, mc) in fan.max_cones.iter().enumerate() {
        for (j, ray) in fan.rays.iter().enumerate() {
            if mc.contains(&j) {
                continue;
            }
            let lhs = cartier.per_cone[k].pair(ray);
            let bound = -&divisor.coeffs[j];
            if lhs < bound {
                nef = false;
                ample = false;
            } else if lhs == bound {
                ample = false;
            }
        }
    }
    Ok(Positivity { ample, nef })
}

/// Moment polytope with its cone-indexed face map.
#[derive(Debug, Clone)]
pub struct MomentPolytope {
    pub polytope: PolyhedronRep,
    /// One entry per cone of the fan, in `fan.all_cones` order.
    pub faces: Vec<(ConeRep, PolyhedronRep)>,
}

pub fn moment_polytope(fan: &Fan, divisor: &TDivisor) -> Result<MomentPolytope> {
    let data: Vec<(LatticeVector, BigInt)> = fan
        .rays
        .iter()
        .zip(&divisor.coeffs)
        .map(|(r, c)| (r.clone(), c.clone()))
        .collect();
    let polytope = PolyhedronRep::from_int_halfspaces(&data, fan.rank)?;
    let mut faces = Vec::new();
    for cone in &fan.all_cones {
        let idx: Vec<usize> = fan
            .rays
            .iter()
            .enumerate()
            .filter(|(_, r)| cone.contains_lattice(r))
            .map(|(i, _)| i)
            .collect();
        let face = polytope.face_by_equalities(&idx);
        faces.push((cone.clone(), face));
    }
    Ok(MomentPolytope { polytope, faces })
}

impl MomentPolytope {
    pub fn face_of(&self, cone: &ConeRep) -> Option<&PolyhedronRep> {
        self.faces
            .iter()
            .find(|(c, _)| c == cone)
            .map(|(_, f)| f)
    }
}

/// Occupancy test: is the weight a section on the chart of this ray set?
fn occupied(weight: &LatticeVector, rays: &[usize], fan: &Fan, divisor: &TDivisor) -> bool {
    rays.iter().all(|&i| {
        weight.pair(&fan.rays[i]) >= -&divisor.coeffs[i]
    })
}

/// Cohomology dimensions per degree 0..=rank of the weight-m part, from the
/// Cech complex over the maximal-cone cover.
pub fn weight_cohomology(
    fan: &Fan,
    divisor: &TDivisor,
    weight: &LatticeVector,
) -> Result<Vec<usize>> {
    require_smooth_complete(fan)?;
    Ok(weight_cohomology_unchecked(fan, divisor, weight))
}

fn weight_cohomology_unchecked(fan: &Fan, divisor: &TDivisor, weight: &LatticeVector) -> Vec<usize> {
    let k = fan.max_cones.len();
    // Ray sets of all chart intersections, by subset bitmask.
    let masks: Vec<u64> = fan
        .max_cones
        .iter()
        .map(|mc| mc.iter().fold(0u64, |acc, &i| acc | (1 << i)))
        .collect();
    // Occupied simplices per dimension p (subsets of size p+1).
    let mut occupied_by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k];
    for subset in 1u64..(1 << k) {
        let members: Vec<usize> = (0..k).filter(|&i| subset & (1 << i) != 0).collect();
        let mut ray_mask = !0u64;
        for &i in &members {
            ray_mask &= masks[i];
        }
        let rays: Vec<usize> = (0..fan.rays.len()).filter(|&i| ray_mask & (1 << i) != 0).collect();
        if occupied(weight, &rays, fan, divisor) {
            occupied_by_dim[members.len() - 1].push(members);
        }
    }
    // Cochain complex C^0 -> C^1 -> ... with alternating-sign restrictions.
    let mut ranks = vec![0usize; k];
    for p in 0..k - 1 {
        let rows = &occupied_by_dim[p + 1];
        let cols = &occupied_by_dim[p];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let mut mat: QMat = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
        for (r, target) in rows.iter().enumerate() {
            for omit in 0..target.len() {
                let mut source = target.clone();
                source.remove(omit);
                if let Some(c) = cols.iter().position(|s| *s == source) {
                    mat[r][c] = if omit % 2 == 0 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                }
            }
        }
        ranks[p] = linalg::rational_rank(&mat);
    }
    let mut dims = Vec::new();
    for p in 0..k {
        let c_p = occupied_by_dim[p].len();
        let incoming = if p == 0 { 0 } else { ranks[p - 1] };
        let outgoing = if p < k - 1 { ranks[p] } else { 0 };
        dims.push(c_p - incoming - outgoing);
    }
    // Degrees above the rank must vanish on a smooth complete fan.
    debug_assert!(dims.iter().skip(fan.rank + 1).all(|&d| d == 0));
    dims.truncate(fan.rank + 1);
    dims.resize(fan.rank + 1, 0);
    dims
}

/// Weight-graded cohomology table of O(D).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCohomology {
    /// Nonzero rows only, sorted by weight.
    pub weights: Vec<(LatticeVector, Vec<usize>)>,
    /// Total dimension per cohomological degree 0..=rank.
    pub total: Vec<usize>,
    pub euler: BigInt,
}

impl GradedCohomology {
    pub fn from_rows(rows: Vec<(LatticeVector, Vec<usize>)>, rank: usize) -> GradedCohomology {
        let mut rows = rows;
        rows.sort_by(|a, b| a.0.coords.cmp(&b.0.coords));
        let mut total = vec![0usize; rank + 1];
        let mut euler = BigInt::zero();
        for (_, dims) in &rows {
            for (k, &d) in dims.iter().enumerate() {
                total[k] += d;
                let signed = BigInt::from(d as i64);
                if k % 2 == 0 {
                    euler += signed;
                } else {
                    euler -= signed;
                }
            }
        }
        GradedCohomology {
            weights: rows,
            total,
            euler,
        }
    }

    pub fn dims_at(&self, weight: &LatticeVector) -> Vec<usize> {
        self.weights
            .iter()
            .find(|(w, _)| w == weight)
            .map(|(_, d)| d.clone())
            .unwrap_or_default()
    }
}

/// Full graded cohomology: iterate weights over the bounding region of the
/// Cartier characters fattened by one, asserting a zero shell.
pub fn cohomology(fan: &Fan, divisor: &TDivisor) -> Result<GradedCohomology> {
    let cartier = cartier_data(fan, divisor)?;
    let mut pad = BigInt::one();
    for attempt in 0..2 {
        let (lo, hi) = character_box(&cartier, fan.rank, &pad);
        let weights = box_lattice_points(&lo, &hi, Role::M);
        let results = parallel_map(&weights, |w| weight_cohomology_unchecked(fan, divisor, w));
        let mut rows = Vec::new();
        let mut shell_dirty = false;
        for (w, dims) in weights.iter().zip(results) {
            let nonzero = dims.iter().any(|&d| d > 0);
            if nonzero {
                let on_shell = (0..fan.rank)
                    .any(|i| w.coords[i] == lo[i] || w.coords[i] == hi[i]);
                if on_shell {
                    shell_dirty = true;
                }
                rows.push((w.clone(), dims));
            }
        }
        if !shell_dirty {
            return Ok(GradedCohomology::from_rows(rows, fan.rank));
        }
        if attempt == 0 {
            pad += BigInt::from(4);
        }
    }
    Err(ToricError::BoundingRegion)
}

fn character_box(cartier: &CartierData, rank: usize, pad: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut lo = cartier.per_cone[0].coords.clone();
    let mut hi = lo.clone();
    for u in &cartier.per_cone {
        for i in 0..rank {
            if u.coords[i] < lo[i] {
                lo[i] = u.coords[i].clone();
            }
            if u.coords[i] > hi[i] {
                hi[i] = u.coords[i].clone();
            }
        }
    }
    for i in 0..rank {
        lo[i] = &lo[i] - pad;
        hi[i] = &hi[i] + pad;
    }
    (lo, hi)
}

pub(crate) fn box_lattice_points(lo: &[BigInt], hi: &[BigInt], role: Role) -> Vec<LatticeVector> {
    let rank = lo.len();
    let mut out = Vec::new();
    let mut cursor = lo.to_vec();
    'outer: loop {
        out.push(LatticeVector::new(cursor.clone(), role));
        for i in 0..rank {
            cursor[i] = &cursor[i] + BigInt::one();
            if cursor[i] <= hi[i] {
                continue 'outer;
            }
            cursor[i] = lo[i].clone();
        }
        break;
    }
    out
}

/// Ext^*(O(Da), O(Db)) as the graded cohomology of O(Db - Da), with the
/// weight table read as hom weights.
pub fn graded_hom(fan: &Fan, da: &TDivisor, db: &TDivisor) -> Result<GradedCohomology> {
    cohomology(fan, &db.sub(da))
}

/// A formal integer combination of ample equivariant line bundles.
#[derive(Debug, Clone)]
pub struct KClass {
    pub terms: Vec<(BigInt, TDivisor)>,
}

impl KClass {
    /// Every listed divisor must be ample on the fan.
    pub fn new(fan: &Fan, terms: Vec<(BigInt, TDivisor)>) -> Result<KClass> {
        for (_, d) in &terms {
            if !positivity(fan, d)?.ample {
                return Err(ToricError::NotAmple(format!("{:?}", d.coeffs)));
            }
        }
        Ok(KClass { terms })
    }

    pub fn empty() -> KClass {
        KClass { terms: vec![] }
    }

    pub fn add(&self, other: &KClass) -> KClass {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        KClass { terms }
    }

    /// Euler characteristic of the class: the coefficient-weighted sum of
    /// the bundle Euler characteristics.
    pub fn euler(&self, fan: &Fan) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (coeff, d) in &self.terms {
            total += coeff * cohomology(fan, d)?.euler;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::library_fan;
    use crate::linalg::bigint;
    use crate::rng::DetRng;

    #[test]
    fn cartier_p1() {
        let f = library_fan("P1").unwrap();
        let d = TDivisor::from_i64(&[0, 1]);
        let c = cartier_data(&f, &d).unwrap();
        // over ray(1): u = 0; over ray(-1): u = 1
        assert_eq!(c.per_cone[0].coords, vec![bigint(0)]);
        assert_eq!(c.per_cone[1].coords, vec![bigint(1)]);
    }

    #[test]
    fn cartier_zero_divisor() {
        let f = library_fan("F2").unwrap();
        let d = TDivisor::zero(4);
        let c = cartier_data(&f, &d).unwrap();
        assert!(c.per_cone.iter().all(|u| u.is_zero()));
    }

    #[test]
    fn moment_polytope_p2_h() {
        let f = library_fan("P2").unwrap();
        let d = TDivisor::from_i64(&[0, 0, 1]);
        let mp = moment_polytope(&f, &d).unwrap();
        let mut vs = mp.polytope.vertices.clone();
        vs.sort();
        assert_eq!(
            vs,
            vec![
                RationalVector::from_i64(&[0, 0]),
                RationalVector::from_i64(&[0, 1]),
                RationalVector::from_i64(&[1, 0]),
            ]
        );
        // Cartier characters are exactly the vertices for an ample divisor.
        let c = cartier_data(&f, &d).unwrap();
        for u in &c.per_cone {
            assert!(mp.polytope.contains_lattice(u));
        }
    }

    #[test]
    fn moment_polytope_hirzebruch_vertex_formula() {
        let mut rng = DetRng::new(99);
        for m in 0..=3i64 {
            let f = library_fan(&format!("F{m}")).unwrap();
            for _ in 0..20 {
                let c: Vec<i64> = (0..4).map(|_| rng.int_in(-4, 4)).collect();
                let d = TDivisor::from_i64(&c);
                if !positivity(&f, &d).unwrap().ample {
                    continue;
                }
                let mp = moment_polytope(&f, &d).unwrap();
                let mut expect = vec![
                    RationalVector::from_i64(&[-c[0], -c[1]]),
                    RationalVector::from_i64(&[c[2] + m * c[1], -c[1]]),
                    RationalVector::from_i64(&[c[2] - m * c[3], c[3]]),
                    RationalVector::from_i64(&[-c[0], c[3]]),
                ];
                expect.sort();
                expect.dedup();
                let mut got = mp.polytope.vertices.clone();
                got.sort();
                assert_eq!(got, expect, "F{m} with c={c:?}");
            }
        }
    }

    #[test]
    fn moment_polytope_p1_interval() {
        let f = library_fan("P1").unwrap();
        let d = TDivisor::from_i64(&[2, 3]);
        let mp = moment_polytope(&f, &d).unwrap();
        let mut vs = mp.polytope.vertices.clone();
        vs.sort();
        assert_eq!(
            vs,
            vec![RationalVector::from_i64(&[-2]), RationalVector::from_i64(&[3])]
        );
    }

    #[test]
    fn ample_face_map_is_bijective_with_complementary_dims() {
        let f = library_fan("F1").unwrap();
        let d = TDivisor::from_i64(&[0, 0, 2, 1]);
        assert!(positivity(&f, &d).unwrap().ample);
        let mp = moment_polytope(&f, &d).unwrap();
        let mut seen: Vec<&PolyhedronRep> = Vec::new();
        for (cone, face) in &mp.faces {
            assert!(!face.is_empty(), "face of ample polytope is nonempty");
            assert_eq!(
                face.dim.unwrap() + cone.dim(),
                f.rank,
                "face dims complement cone dims"
            );
            assert!(
                !seen.iter().any(|g| **g == *face),
                "face map of an ample divisor is injective"
            );
            seen.push(face);
        }
        assert_eq!(mp.faces.len(), f.all_cones.len());
    }

    #[test]
    fn hirzebruch_ampleness_inequality() {
        let mut rng = DetRng::new(7);
        for m in 0..=3i64 {
            let f = library_fan(&format!("F{m}")).unwrap();
            for _ in 0..60 {
                let c: Vec<i64> = (0..4).map(|_| rng.int_in(-5, 5)).collect();
                let d = TDivisor::from_i64(&c);
                let p = positivity(&f, &d).unwrap();
                let expect = c[1] + c[3] > 0 && c[0] + c[2] > m * c[3];
                assert_eq!(p.ample, expect, "F{m}, c={c:?}");
            }
        }
    }

    #[test]
    fn anticanonical_on_f2_is_nef_not_ample() {
        let f = library_fan("F2").unwrap();
        let d = TDivisor::anticanonical(4);
        let p = positivity(&f, &d).unwrap();
        assert!(p.nef && !p.ample);
    }

    #[test]
    fn zero_divisor_nef_not_ample() {
        for name in ["P1", "P2", "F1"] {
            let f = library_fan(name).unwrap();
            let d = TDivisor::zero(f.rays.len());
            let p = positivity(&f, &d).unwrap();
            assert!(p.nef && !p.ample, "{name}");
        }
    }

    #[test]
    fn weight_cohomology_p1_degree_minus_two() {
        let f = library_fan("P1").unwrap();
        let d = TDivisor::from_i64(&[-2, 0]);
        let at = |m: i64| weight_cohomology(&f, &d, &LatticeVector::from_i64(&[m], Role::M)).unwrap();
        assert_eq!(at(1), vec![0, 1]);
        assert_eq!(at(0), vec![0, 0]);
        assert_eq!(at(2), vec![0, 0]);
    }

    #[test]
    fn weight_zero_of_trivial_bundle() {
        for name in ["P1", "P2", "F1", "B3"] {
            let f = library_fan(name).unwrap();
            let d = TDivisor::zero(f.rays.len());
            let w = LatticeVector::zero(f.rank, Role::M);
            let dims = weight_cohomology(&f, &d, &w).unwrap();
            let mut expect = vec![0; f.rank + 1];
            expect[0] = 1;
            assert_eq!(dims, expect, "{name}");
        }
    }

    #[test]
    fn cohomology_p2_hyperplane() {
        let f = library_fan("P2").unwrap();
        let g = cohomology(&f, &TDivisor::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(g.total, vec![3, 0, 0]);
        assert_eq!(g.euler, bigint(3));
    }

    #[test]
    fn cohomology_p1_minus_two() {
        let f = library_fan("P1").unwrap();
        let g = cohomology(&f, &TDivisor::from_i64(&[-2, 0])).unwrap();
        assert_eq!(g.total, vec![0, 1]);
        assert_eq!(g.euler, bigint(-1));
    }

    #[test]
    fn cohomology_f1_fig7_divisor() {
        let f = library_fan("F1").unwrap();
        let d = TDivisor::from_i64(&[0, 0, 2, 1]);
        let g = cohomology(&f, &d).unwrap();
        assert_eq!(g.total, vec![5, 0, 0]);
        assert_eq!(g.euler, bigint(5));
        // h^0 equals the lattice point count of the moment polytope.
        let mp = moment_polytope(&f, &d).unwrap();
        assert_eq!(mp.polytope.lattice_points().unwrap().len(), 5);
    }

    #[test]
    fn serre_symmetry_on_p1() {
        let f = library_fan("P1").unwrap();
        for k in 1..=6i64 {
            let neg = cohomology(&f, &TDivisor::from_i64(&[-k, 0])).unwrap();
            let pos = cohomology(&f, &TDivisor::from_i64(&[k - 2, 0])).unwrap();
            assert_eq!(neg.total[1], pos.total[0], "k={k}");
        }
    }

    #[test]
    fn graded_hom_p1_examples() {
        let f = library_fan("P1").unwrap();
        let o1 = TDivisor::from_i64(&[0, 1]);
        let o3 = TDivisor::from_i64(&[0, 3]);
        let up = graded_hom(&f, &o1, &o3).unwrap();
        assert_eq!(up.total, vec![3, 0]);
        let weights: Vec<i64> = up
            .weights
            .iter()
            .map(|(w, _)| i64::try_from(&w.coords[0]).unwrap())
            .collect();
        assert_eq!(weights, vec![0, 1, 2]);
        let down = graded_hom(&f, &o3, &o1).unwrap();
        assert_eq!(down.total, vec![0, 1]);
        let same = graded_hom(&f, &o1, &o1).unwrap();
        assert_eq!(same.total, vec![1, 0]);
        assert_eq!(same.weights.len(), 1);
        assert!(same.weights[0].0.is_zero());
    }

    #[test]
    fn demazure_vanishing_on_nef_samples() {
        let mut rng = DetRng::new(1234);
        for name in ["P2", "F0", "F1", "F2"] {
            let f = library_fan(name).unwrap();
            let mut tested = 0;
            while tested < 10 {
                let c: Vec<i64> = (0..f.rays.len()).map(|_| rng.int_in(-2, 4)).collect();
                let d = TDivisor::from_i64(&c);
                if !positivity(&f, &d).unwrap().nef {
                    continue;
                }
                tested += 1;
                let g = cohomology(&f, &d).unwrap();
                assert!(g.total[1..].iter().all(|&t| t == 0), "{name} c={c:?}");
                let mp = moment_polytope(&f, &d).unwrap();
                let points = if mp.polytope.is_empty() {
                    0
                } else {
                    mp.polytope.lattice_points().unwrap().len()
                };
                assert_eq!(g.total[0], points, "{name} c={c:?}");
            }
        }
    }

    #[test]
    fn cohomology_independent_of_cone_order() {
        let f = library_fan("F1").unwrap();
        let d = TDivisor::from_i64(&[1, -3, 2, 1]);
        let g1 = cohomology(&f, &d).unwrap();
        // Permute the maximal cones.
        let mut mc = f.max_cones.clone();
        mc.rotate_left(2);
        mc.swap(0, 1);
        let f2 = crate::fan::build_fan(f.rays.clone(), mc, 2).unwrap();
        let g2 = cohomology(&f2, &d).unwrap();
        assert_eq!(g1.total, g2.total);
        assert_eq!(g1.weights, g2.weights);
    }

    #[test]
    fn kclass_rejects_non_ample() {
        let f = library_fan("P2").unwrap();
        let err = KClass::new(
            &f,
            vec![(bigint(1), TDivisor::zero(3))],
        );
        assert!(matches!(err, Err(ToricError::NotAmple(_))));
    }

    #[test]
    fn euler_additive_over_kclass() {
        let f = library_fan("P2").unwrap();
        let da = TDivisor::from_i64(&[0, 0, 1]);
        let db = TDivisor::from_i64(&[0, 0, 2]);
        let ka = KClass::new(&f, vec![(bigint(1), da.clone())]).unwrap();
        let kb = KClass::new(&f, vec![(bigint(1), db.clone())]).unwrap();
        let sum = ka.add(&kb);
        let ea = cohomology(&f, &da).unwrap().euler;
        let eb = cohomology(&f, &db).unwrap().euler;
        assert_eq!(sum.euler(&f).unwrap(), ea + eb);
    }
}
