//! Exact convex polyhedra in rank <= 3.
//!
//! H-representation is primary: a halfspace is `<x, normal> >= -offset` with
//! the normal in N and a rational offset (integral for the toric inputs,
//! rational for internal shrunken/translated models). Vertices and recession
//! rays are derived on construction and cross-checked against the H-rep.
//! Emptiness, relative interior points and implicit equalities come from an
//! exact Fourier-Motzkin elimination that understands strict inequalities.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::cone::{dual_generators, ConeRep};
use crate::error::{Result, ToricError};
use crate::linalg::{self, IMat, QMat};
use crate::vector::{LatticeVector, RationalVector, Role};

/// `<x, normal> >= -offset`; the normal lives in N when x ranges over M_R.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: LatticeVector,
    pub offset: BigRational,
}

impl Halfspace {
    pub fn new_int(normal: LatticeVector, offset: BigInt) -> Self {
        Halfspace {
            normal,
            offset: BigRational::from_integer(offset),
        }
    }

    /// Evaluate <x, normal> + offset; nonnegative means x satisfies the
    /// halfspace.
    pub fn slack(&self, x: &RationalVector) -> BigRational {
        x.pair_lattice(&self.normal) + &self.offset
    }
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin with strict flags
// ---------------------------------------------------------------------------

/// `<coeffs, x> >= rhs`, strictly when `strict`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
    pub strict: bool,
}

impl Constraint {
    pub fn from_halfspace(h: &Halfspace, strict: bool) -> Constraint {
        Constraint {
            coeffs: h
                .normal
                .coords
                .iter()
                .map(linalg::to_rational)
                .collect(),
            rhs: -h.offset.clone(),
            strict,
        }
    }

}

fn eliminate_var(cons: &[Constraint], var: usize) -> Vec<Constraint> {
    let mut lower = Vec::new(); // coeff > 0: x_var >= ...
    let mut upper = Vec::new(); // coeff < 0: x_var <= ...
    let mut keep = Vec::new();
    for c in cons {
        if c.coeffs[var].is_zero() {
            keep.push(c.clone());
        } else if c.coeffs[var].is_positive() {
            lower.push(c.clone());
        } else {
            upper.push(c.clone());
        }
    }
    for lo in &lower {
        for up in &upper {
            // Combine lo (positive coeff a) and up (negative coeff b):
            // -b * lo + a * up eliminates the variable.
            let a = lo.coeffs[var].clone();
            let b = up.coeffs[var].clone();
            let coeffs: Vec<BigRational> = lo
                .coeffs
                .iter()
                .zip(&up.coeffs)
                .map(|(l, u)| l * (-&b) + u * &a)
                .collect();
            let rhs = &lo.rhs * (-&b) + &up.rhs * &a;
            keep.push(Constraint {
                coeffs,
                rhs,
                strict: lo.strict || up.strict,
            });
        }
    }
    keep
}

/// Exact feasibility of a strict/non-strict system over rank variables.
pub fn fm_feasible(cons: &[Constraint], rank: usize) -> bool {
    fm_solve(cons, rank).is_some()
}

/// A feasible point, or None.
pub fn fm_solve(cons: &[Constraint], rank: usize) -> Option<Vec<BigRational>> {
    let mut systems: Vec<Vec<Constraint>> = vec![cons.to_vec()];
    for var in (0..rank).rev() {
        let next = eliminate_var(systems.last().unwrap(), var);
        systems.push(next);
    }
    // systems[rank - var] has vars 0..var active; last has none.
    let terminal = systems.last().unwrap();
    for c in terminal {
        let z = BigRational::zero();
        if c.strict {
            if !(z > c.rhs) {
                return None;
            }
        } else if !(z >= c.rhs) {
            return None;
        }
    }
    // Back-substitute from x_0 up.
    let mut x: Vec<BigRational> = Vec::new();
    for var in 0..rank {
        let sys = &systems[rank - 1 - var]; // vars 0..=var active
        let mut lower: Option<(BigRational, bool)> = None;
        let mut upper: Option<(BigRational, bool)> = None;
        for c in sys {
            if c.coeffs[var].is_zero() {
                continue;
            }
            // Only constraints whose later coefficients vanish are usable at
            // this level; eliminate_var guarantees that.
            let mut partial = BigRational::zero();
            for j in 0..var {
                partial += &c.coeffs[j] * &x[j];
            }
            let bound = (&c.rhs - partial) / &c.coeffs[var];
            if c.coeffs[var].is_positive() {
                if lower.as_ref().map(|(b, _)| bound > *b).unwrap_or(true) {
                    lower = Some((bound.clone(), c.strict));
                } else if lower.as_ref().map(|(b, s)| bound == *b && !s).unwrap_or(false) && c.strict
                {
                    lower = Some((bound, true));
                }
            } else if upper.as_ref().map(|(b, _)| bound < *b).unwrap_or(true) {
                upper = Some((bound.clone(), c.strict));
            } else if upper.as_ref().map(|(b, s)| bound == *b && !s).unwrap_or(false) && c.strict {
                upper = Some((bound, true));
            }
        }
        let value = match (&lower, &upper) {
            (None, None) => BigRational::zero(),
            (Some((l, _)), None) => l + BigRational::one(),
            (None, Some((u, _))) => u - BigRational::one(),
            (Some((l, ls)), Some((u, us))) => {
                if l < u {
                    (l + u) / linalg::ratio(2, 1)
                } else if l == u && !ls && !us {
                    l.clone()
                } else {
                    return None;
                }
            }
        };
        x.push(value);
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// PolyhedronRep
// ---------------------------------------------------------------------------

/// A rational polyhedron {x : <x, normal_i> >= -offset_i} in rank <= 3.
#[derive(Debug, Clone)]
pub struct PolyhedronRep {
    pub halfspaces: Vec<Halfspace>,
    pub rank: usize,
    /// Derived vertex list (may be empty for empty or line-containing sets).
    pub vertices: Vec<RationalVector>,
    /// Generators of the recession cone; lineality appears as +/- pairs.
    pub recession: Vec<LatticeVector>,
    /// None means the polyhedron is empty.
    pub dim: Option<usize>,
    /// Feasible point when the vertex list cannot carry one.
    base_point: Option<RationalVector>,
}

impl PartialEq for PolyhedronRep {
    fn eq(&self, other: &Self) -> bool {
        if self.rank != other.rank {
            return false;
        }
        match (self.dim, other.dim) {
            (None, None) => true,
            (Some(_), Some(_)) => {
                let mut va = self.vertices.clone();
                let mut vb = other.vertices.clone();
                va.sort();
                vb.sort();
                if va != vb {
                    return false;
                }
                let mut ra: Vec<_> = self.recession.iter().map(|r| r.coords.clone()).collect();
                let mut rb: Vec<_> = other.recession.iter().map(|r| r.coords.clone()).collect();
                ra.sort();
                rb.sort();
                if ra != rb {
                    return false;
                }
                // With equal vertex sets and recession cones, bounded or
                // pointed polyhedra agree; line-containing ones compare by
                // mutual base-point containment.
                if va.is_empty() {
                    return self
                        .base_point
                        .as_ref()
                        .map(|p| other.contains(p))
                        .unwrap_or(false)
                        && other
                            .base_point
                            .as_ref()
                            .map(|p| self.contains(p))
                            .unwrap_or(false);
                }
                true
            }
            _ => false,
        }
    }
}

impl Eq for PolyhedronRep {}

impl PolyhedronRep {
    pub fn from_halfspaces(halfspaces: Vec<Halfspace>, rank: usize) -> Result<PolyhedronRep> {
        if rank > 3 {
            return Err(ToricError::UnsupportedRank(rank));
        }
        let mut p = PolyhedronRep {
            halfspaces,
            rank,
            vertices: vec![],
            recession: vec![],
            dim: None,
            base_point: None,
        };
        p.rebuild();
        Ok(p)
    }

    /// The spec-level constructor: integer offsets.
    pub fn from_int_halfspaces(data: &[(LatticeVector, BigInt)], rank: usize) -> Result<PolyhedronRep> {
        let hs = data
            .iter()
            .map(|(normal, off)| Halfspace::new_int(normal.clone(), off.clone()))
            .collect();
        PolyhedronRep::from_halfspaces(hs, rank)
    }

    pub fn empty(rank: usize) -> PolyhedronRep {
        // 0 >= 1, encoded with a zero normal.
        let h = Halfspace {
            normal: LatticeVector::zero(rank, Role::N),
            offset: linalg::ratio(-1, 1),
        };
        PolyhedronRep::from_halfspaces(vec![h], rank).expect("rank checked by caller")
    }

    pub fn full_space(rank: usize) -> PolyhedronRep {
        PolyhedronRep::from_halfspaces(vec![], rank).expect("rank checked by caller")
    }

    fn constraints(&self, strict: bool) -> Vec<Constraint> {
        self.halfspaces
            .iter()
            .map(|h| Constraint::from_halfspace(h, strict))
            .collect()
    }

    fn rebuild(&mut self) {
        let rank = self.rank;
        let cons = self.constraints(false);
        let Some(point) = fm_solve(&cons, rank) else {
            self.vertices.clear();
            self.recession.clear();
            self.dim = None;
            self.base_point = None;
            return;
        };
        // Recession cone from the normals.
        let normal_mat: IMat = self
            .halfspaces
            .iter()
            .filter(|h| !h.normal.is_zero())
            .map(|h| h.normal.coords.clone())
            .collect();
        self.recession = dual_generators(&normal_mat, rank)
            .into_iter()
            .map(|v| LatticeVector::new(v, Role::M))
            .collect();
        // Vertices: intersect rank-subsets of boundary hyperplanes.
        let hs: Vec<&Halfspace> = self.halfspaces.iter().filter(|h| !h.normal.is_zero()).collect();
        let mut verts: Vec<RationalVector> = Vec::new();
        for subset in choose(hs.len(), rank) {
            let a: QMat = subset
                .iter()
                .map(|&i| {
                    hs[i].normal
                        .coords
                        .iter()
                        .map(linalg::to_rational)
                        .collect()
                })
                .collect();
            if linalg::rational_rank(&a) != rank {
                continue;
            }
            let b: Vec<BigRational> = subset.iter().map(|&i| -hs[i].offset.clone()).collect();
            if let Some(x) = linalg::solve_rational(&a, &b) {
                let pt = RationalVector::new(x);
                if self.contains(&pt) && !verts.contains(&pt) {
                    verts.push(pt);
                }
            }
        }
        verts.sort();
        self.vertices = verts;
        // Dimension via implicit equalities.
        let mut eq_normals: IMat = Vec::new();
        for (i, h) in self.halfspaces.iter().enumerate() {
            if h.normal.is_zero() {
                continue;
            }
            let mut sys = cons.clone();
            sys[i].strict = true;
            if !fm_feasible(&sys, rank) {
                eq_normals.push(h.normal.coords.clone());
            }
        }
        self.dim = Some(rank - linalg::integer_rank(&eq_normals));
        self.base_point = if self.vertices.is_empty() {
            Some(RationalVector::new(point))
        } else {
            None
        };
        // Cross-check the derived data against the H-rep.
        debug_assert!(self.vertices.iter().all(|v| self.contains(v)));
        debug_assert!(self.recession.iter().all(|r| {
            self.halfspaces
                .iter()
                .all(|h| !linalg::dot(&h.normal.coords, &r.coords).is_negative())
        }));
    }

    pub fn is_empty(&self) -> bool {
        self.dim.is_none()
    }

    pub fn is_bounded(&self) -> bool {
        self.recession.is_empty()
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.halfspaces.iter().all(|h| !h.slack(x).is_negative())
    }

    pub fn contains_lattice(&self, x: &LatticeVector) -> bool {
        self.contains(&x.to_rational())
    }

    /// Strict interior membership (full-dimensional interior).
    pub fn interior_contains(&self, x: &RationalVector) -> bool {
        self.halfspaces.iter().all(|h| h.slack(x).is_positive())
    }

    /// A point in the relative interior, when nonempty.
    pub fn relative_interior_point(&self) -> Option<RationalVector> {
        if self.is_empty() {
            return None;
        }
        if !self.vertices.is_empty() {
            // Vertex centroid lies in the relative interior of the bounded
            // part; push into the recession cone for unbounded polyhedra.
            let mut sum = RationalVector::zero(self.rank);
            for v in &self.vertices {
                sum = sum.add(v);
            }
            let k = linalg::ratio(self.vertices.len() as i64, 1);
            let mut pt = sum.scale(&k.recip());
            for r in &self.recession {
                pt = pt.add(&r.to_rational());
            }
            return Some(pt);
        }
        fm_solve(&self.relint_constraints(), self.rank).map(RationalVector::new)
    }

    /// Constraint system describing the relative interior: implicit
    /// equalities pinned by non-strict bound pairs, everything else strict.
    pub fn relint_constraints(&self) -> Vec<Constraint> {
        let mut sys = Vec::new();
        for (i, h) in self.halfspaces.iter().enumerate() {
            let mut eq_sys = self.constraints(false);
            eq_sys[i].strict = true;
            let c = Constraint::from_halfspace(h, true);
            if !fm_feasible(&eq_sys, self.rank) {
                let mut lo = c.clone();
                lo.strict = false;
                let hi = Constraint {
                    coeffs: lo.coeffs.iter().map(|x| -x).collect(),
                    rhs: -lo.rhs.clone(),
                    strict: false,
                };
                sys.push(lo);
                sys.push(hi);
            } else {
                sys.push(c);
            }
        }
        sys
    }

    /// All lattice points of a bounded polyhedron.
    pub fn lattice_points(&self) -> Result<Vec<LatticeVector>> {
        if !self.is_bounded() {
            return Err(ToricError::UnboundedPolyhedron);
        }
        let Some((lo, hi)) = self.bounding_box() else {
            return Ok(vec![]);
        };
        let mut out = Vec::new();
        let mut cursor: Vec<BigInt> = lo.clone();
        'outer: loop {
            let lv = LatticeVector::new(cursor.clone(), Role::M);
            if self.contains_lattice(&lv) {
                out.push(lv);
            }
            // Odometer increment.
            for i in 0..self.rank {
                cursor[i] = &cursor[i] + BigInt::one();
                if cursor[i] <= hi[i] {
                    continue 'outer;
                }
                cursor[i] = lo[i].clone();
            }
            break;
        }
        if self.rank == 0 {
            // A rank-0 polyhedron is a single (empty-coordinate) point.
            out.push(LatticeVector::new(vec![], Role::M));
        }
        Ok(out)
    }

    /// Integer bounding box of the vertices (floor, ceil), None when empty.
    pub fn bounding_box(&self) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
        if self.is_empty() || self.vertices.is_empty() {
            return None;
        }
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for i in 0..self.rank {
            let mut min = self.vertices[0].coords[i].clone();
            let mut max = min.clone();
            for v in &self.vertices {
                if v.coords[i] < min {
                    min = v.coords[i].clone();
                }
                if v.coords[i] > max {
                    max = v.coords[i].clone();
                }
            }
            lo.push(min.floor().to_integer());
            hi.push(max.ceil().to_integer());
        }
        Some((lo, hi))
    }

    /// Euclidean volume of a bounded polyhedron (0 for lower-dimensional).
    pub fn volume(&self) -> Result<BigRational> {
        if !self.is_bounded() {
            return Err(ToricError::UnboundedPolyhedron);
        }
        if self.is_empty() || self.dim != Some(self.rank) {
            return Ok(BigRational::zero());
        }
        match self.rank {
            0 => Ok(BigRational::zero()),
            1 => {
                let mut vals: Vec<BigRational> =
                    self.vertices.iter().map(|v| v.coords[0].clone()).collect();
                vals.sort();
                Ok(vals.last().unwrap() - vals.first().unwrap())
            }
            2 => {
                let ordered = sort_ccw(&self.vertices);
                Ok(shoelace(&ordered))
            }
            3 => self.volume3(),
            r => Err(ToricError::UnsupportedRank(r)),
        }
    }

    fn volume3(&self) -> Result<BigRational> {
        // Sum signed tetrahedra over outward-oriented facet triangulations.
        let mut total = BigRational::zero();
        for h in &self.halfspaces {
            if h.normal.is_zero() {
                continue;
            }
            let on_facet: Vec<&RationalVector> = self
                .vertices
                .iter()
                .filter(|v| h.slack(v).is_zero())
                .collect();
            if on_facet.len() < 3 {
                continue;
            }
            // Orthonormal-free in-plane coordinates from two edges.
            let origin = on_facet[0].clone();
            let mut t1 = None;
            let mut t2 = None;
            for v in &on_facet[1..] {
                let d = v.sub(&origin);
                if t1.is_none() {
                    t1 = Some(d);
                    continue;
                }
                let a = t1.as_ref().unwrap();
                let mat: QMat = vec![a.coords.clone(), d.coords.clone()];
                if linalg::rational_rank(&mat) == 2 {
                    t2 = Some(d);
                    break;
                }
            }
            let (Some(t1), Some(t2)) = (t1, t2) else {
                continue;
            };
            // Express facet vertices in (t1, t2) coordinates and sort ccw.
            let frame: QMat = vec![t1.coords.clone(), t2.coords.clone()];
            let mut planar: Vec<(RationalVector, &RationalVector)> = Vec::new();
            for v in &on_facet {
                let d = v.sub(&origin);
                // Solve [t1; t2]^T y = d in the least-structure sense: the
                // system is consistent because d lies in the plane.
                let a: QMat = (0..3)
                    .map(|i| vec![frame[0][i].clone(), frame[1][i].clone()])
                    .collect();
                let y = linalg::solve_rational(&a, &d.coords).expect("coplanar");
                planar.push((RationalVector::new(y), v));
            }
            let pts: Vec<RationalVector> = planar.iter().map(|(y, _)| y.clone()).collect();
            let order = ccw_order(&pts);
            let ordered: Vec<&RationalVector> = order.iter().map(|&i| planar[i].1).collect();
            // Outward normal is minus the inward halfspace normal; orient the
            // fan so its cross product points outward.
            let outward: Vec<BigRational> = h
                .normal
                .coords
                .iter()
                .map(|c| -linalg::to_rational(c))
                .collect();
            let e1 = ordered[1].sub(ordered[0]);
            let e2 = ordered[2].sub(ordered[0]);
            let crossv = cross3(&e1.coords, &e2.coords);
            let orient = linalg::dot_qq(&crossv, &outward);
            let idx: Vec<usize> = if orient.is_negative() {
                (0..ordered.len()).rev().collect()
            } else {
                (0..ordered.len()).collect()
            };
            for k in 1..ordered.len() - 1 {
                let a = &ordered[idx[0]].coords;
                let b = &ordered[idx[k]].coords;
                let c = &ordered[idx[k + 1]].coords;
                total += det3(a, b, c);
            }
        }
        Ok(total / linalg::ratio(6, 1))
    }

    /// Tangent cone of the polyhedron at x: directions d with x + eps*d
    /// inside for small eps > 0. None when x lies outside.
    pub fn tangent_cone(&self, x: &RationalVector) -> Option<ConeRep> {
        if !self.contains(x) {
            return None;
        }
        let active: Vec<LatticeVector> = self
            .halfspaces
            .iter()
            .filter(|h| h.slack(x).is_zero())
            .map(|h| h.normal.clone())
            .collect();
        Some(ConeRep::from_halfspaces(&active, self.rank, Role::M).expect("rank <= 3"))
    }

    /// Face obtained by turning the given halfspaces into equalities.
    pub fn face_by_equalities(&self, indices: &[usize]) -> PolyhedronRep {
        let mut hs = self.halfspaces.clone();
        for &i in indices {
            let h = &self.halfspaces[i];
            hs.push(Halfspace {
                normal: h.normal.neg(),
                offset: -h.offset.clone(),
            });
        }
        PolyhedronRep::from_halfspaces(hs, self.rank).expect("same rank")
    }

    /// All nonempty faces (the polyhedron itself included), for rank <= 2.
    pub fn faces(&self) -> Vec<PolyhedronRep> {
        let mut out: Vec<PolyhedronRep> = Vec::new();
        let push = |f: PolyhedronRep, out: &mut Vec<PolyhedronRep>| {
            if !f.is_empty() && !out.iter().any(|g| *g == f) {
                out.push(f);
            }
        };
        push(self.clone(), &mut out);
        let nh = self.halfspaces.len();
        for i in 0..nh {
            push(self.face_by_equalities(&[i]), &mut out);
            for j in i + 1..nh {
                push(self.face_by_equalities(&[i, j]), &mut out);
            }
        }
        // Vertices are faces too; covered by pairs in rank 2, by single
        // equalities in rank 1.
        out
    }

    pub fn translate(&self, t: &RationalVector) -> PolyhedronRep {
        let hs = self
            .halfspaces
            .iter()
            .map(|h| Halfspace {
                normal: h.normal.clone(),
                offset: &h.offset - t.pair_lattice(&h.normal),
            })
            .collect();
        PolyhedronRep::from_halfspaces(hs, self.rank).expect("same rank")
    }

    /// Image of the polyhedron under x -> g + s*(x - g).
    pub fn shrink_toward(&self, g: &RationalVector, s: &BigRational) -> PolyhedronRep {
        let hs = self
            .halfspaces
            .iter()
            .map(|h| {
                let gval = g.pair_lattice(&h.normal);
                // <y, u> >= s*(-offset) + (1-s)*<g, u>
                let rhs = s * (-&h.offset) + (BigRational::one() - s) * gval;
                Halfspace {
                    normal: h.normal.clone(),
                    offset: -rhs,
                }
            })
            .collect();
        PolyhedronRep::from_halfspaces(hs, self.rank).expect("same rank")
    }

    pub fn intersect(&self, other: &PolyhedronRep) -> PolyhedronRep {
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        PolyhedronRep::from_halfspaces(hs, self.rank).expect("same rank")
    }

    /// Directions spanning the affine hull (differences of vertices plus
    /// recession generators).
    pub fn affine_hull_directions(&self) -> Vec<LatticeVector> {
        let mut dirs: IMat = Vec::new();
        if let Some(v0) = self.vertices.first() {
            for v in &self.vertices[1..] {
                dirs.push(linalg::primitive_direction(&v.sub(v0).coords));
            }
        }
        for r in &self.recession {
            dirs.push(r.coords.clone());
        }
        let basis = if dirs.is_empty() {
            vec![]
        } else {
            linalg::saturate_rowspace(&dirs)
        };
        basis
            .into_iter()
            .map(|v| LatticeVector::new(v, Role::M))
            .collect()
    }
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if n - start < k - cur.len() {
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

/// Sort 2D points counterclockwise around their centroid, exactly.
pub fn sort_ccw(pts: &[RationalVector]) -> Vec<RationalVector> {
    let order = ccw_order(pts);
    order.iter().map(|&i| pts[i].clone()).collect()
}

fn ccw_order(pts: &[RationalVector]) -> Vec<usize> {
    if pts.is_empty() {
        return vec![];
    }
    let n = linalg::ratio(pts.len() as i64, 1);
    let mut cx = BigRational::zero();
    let mut cy = BigRational::zero();
    for p in pts {
        cx += &p.coords[0];
        cy += &p.coords[1];
    }
    cx /= &n;
    cy /= &n;
    let half = |dx: &BigRational, dy: &BigRational| -> u8 {
        // 0 for upper half (dy > 0, or dy == 0 and dx > 0), 1 for lower.
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| {
        let dax = &pts[a].coords[0] - &cx;
        let day = &pts[a].coords[1] - &cy;
        let dbx = &pts[b].coords[0] - &cx;
        let dby = &pts[b].coords[1] - &cy;
        let (ha, hb) = (half(&dax, &day), half(&dbx, &dby));
        if ha != hb {
            return ha.cmp(&hb);
        }
        // Same half-turn: compare by cross product.
        let cross = &dax * &dby - &day * &dbx;
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

fn shoelace(ordered: &[RationalVector]) -> BigRational {
    let n = ordered.len();
    let mut s = BigRational::zero();
    for i in 0..n {
        let a = &ordered[i];
        let b = &ordered[(i + 1) % n];
        s += &a.coords[0] * &b.coords[1] - &a.coords[1] * &b.coords[0];
    }
    (s / linalg::ratio(2, 1)).abs()
}

fn cross3(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn det3(a: &[BigRational], b: &[BigRational], c: &[BigRational]) -> BigRational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{bigint, ratio};

    fn hs(normal: &[i64], offset: i64) -> (LatticeVector, BigInt) {
        (LatticeVector::from_i64(normal, Role::N), bigint(offset))
    }

    fn poly(data: &[(&[i64], i64)], rank: usize) -> PolyhedronRep {
        let v: Vec<(LatticeVector, BigInt)> = data.iter().map(|(n, o)| hs(n, *o)).collect();
        PolyhedronRep::from_int_halfspaces(&v, rank).unwrap()
    }

    #[test]
    fn p2_unit_triangle() {
        let p = poly(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 1)], 2);
        let mut vs = p.vertices.clone();
        vs.sort();
        assert_eq!(
            vs,
            vec![
                RationalVector::from_i64(&[0, 0]),
                RationalVector::from_i64(&[0, 1]),
                RationalVector::from_i64(&[1, 0]),
            ]
        );
        assert_eq!(p.dim, Some(2));
        assert!(p.is_bounded());
        assert_eq!(p.lattice_points().unwrap().len(), 3);
        assert_eq!(p.volume().unwrap(), ratio(1, 2));
    }

    #[test]
    fn f1_fig7_polytope() {
        // F1 rays (1,0),(0,1),(-1,-1),(0,-1) with c = (0,0,2,1)
        let p = poly(
            &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 2), (&[0, -1], 1)],
            2,
        );
        let mut vs = p.vertices.clone();
        vs.sort();
        assert_eq!(
            vs,
            vec![
                RationalVector::from_i64(&[0, 0]),
                RationalVector::from_i64(&[0, 1]),
                RationalVector::from_i64(&[1, 1]),
                RationalVector::from_i64(&[2, 0]),
            ]
        );
        assert_eq!(p.lattice_points().unwrap().len(), 5);
        assert_eq!(p.volume().unwrap(), ratio(3, 2));
    }

    #[test]
    fn contradictory_halfspaces_are_empty() {
        let p = poly(&[(&[1], -1), (&[-1], 0)], 1);
        assert!(p.is_empty());
        assert!(p.lattice_points().unwrap().is_empty());
    }

    #[test]
    fn point_polytope_volume_zero() {
        let p = poly(&[(&[1, 0], 0), (&[-1, 0], 0), (&[0, 1], 0), (&[0, -1], 0)], 2);
        assert_eq!(p.dim, Some(0));
        assert_eq!(p.volume().unwrap(), BigRational::zero());
        assert_eq!(p.vertices.len(), 1);
    }

    #[test]
    fn tangent_cone_at_f1_vertex() {
        let p = poly(
            &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 2), (&[0, -1], 1)],
            2,
        );
        let tc = p.tangent_cone(&RationalVector::from_i64(&[2, 0])).unwrap();
        let expect = ConeRep::from_rays_i64(&[&[-1, 0], &[-1, 1]], 2, Role::M);
        assert_eq!(tc.ray_matrix(), expect.ray_matrix());
        // interior point: full space
        let tc2 = p
            .tangent_cone(&RationalVector::new(vec![ratio(1, 2), ratio(1, 4)]))
            .unwrap();
        assert_eq!(tc2.dim(), 2);
        assert!(!tc2.is_strongly_convex());
        // outside
        assert!(p.tangent_cone(&RationalVector::from_i64(&[5, 5])).is_none());
    }

    #[test]
    fn unbounded_errors() {
        let p = poly(&[(&[1, 0], 0), (&[0, 1], 0)], 2);
        assert!(!p.is_bounded());
        assert!(matches!(
            p.lattice_points(),
            Err(ToricError::UnboundedPolyhedron)
        ));
        assert!(matches!(p.volume(), Err(ToricError::UnboundedPolyhedron)));
    }

    #[test]
    fn volume_translation_and_dilation() {
        let p = poly(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 1)], 2);
        let vol = p.volume().unwrap();
        let t = p.translate(&RationalVector::from_i64(&[7, -3]));
        assert_eq!(t.volume().unwrap(), vol);
        for lambda in [2i64, 3] {
            let scaled = poly(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], lambda)], 2);
            assert_eq!(
                scaled.volume().unwrap(),
                vol.clone() * ratio(lambda * lambda, 1)
            );
        }
    }

    #[test]
    fn unit_cube_and_simplex_volume_3d() {
        let cube = poly(
            &[
                (&[1, 0, 0], 0),
                (&[-1, 0, 0], 1),
                (&[0, 1, 0], 0),
                (&[0, -1, 0], 1),
                (&[0, 0, 1], 0),
                (&[0, 0, -1], 1),
            ],
            3,
        );
        assert_eq!(cube.volume().unwrap(), ratio(1, 1));
        let simplex = poly(
            &[
                (&[1, 0, 0], 0),
                (&[0, 1, 0], 0),
                (&[0, 0, 1], 0),
                (&[-1, -1, -1], 1),
            ],
            3,
        );
        assert_eq!(simplex.volume().unwrap(), ratio(1, 6));
        assert_eq!(simplex.lattice_points().unwrap().len(), 4);
    }

    #[test]
    fn shrink_keeps_combinatorics() {
        let p = poly(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 2)], 2);
        let g = p.relative_interior_point().unwrap();
        let s = ratio(7, 8);
        let q = p.shrink_toward(&g, &s);
        assert_eq!(q.vertices.len(), 3);
        assert!(q.vertices.iter().all(|v| p.interior_contains(v)));
    }

    #[test]
    fn relative_interior_of_segment() {
        let seg = poly(&[(&[0, 1], 0), (&[0, -1], 0), (&[1, 0], 0), (&[-1, 0], 1)], 2);
        assert_eq!(seg.dim, Some(1));
        let p = seg.relative_interior_point().unwrap();
        assert!(seg.contains(&p));
        assert!(p.coords[1].is_zero());
        assert!(p.coords[0].is_positive() && p.coords[0] < ratio(1, 1));
    }
}
