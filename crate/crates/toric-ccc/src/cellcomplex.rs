//! Relative cohomology of polyhedral pairs in rank <= 2.
//!
//! `relative_pair_cohomology(U, V)` computes H^k(U°, U° \ V°) for open
//! convex polyhedron interiors. The computation runs on a compact model:
//! U is shrunk toward an interior basepoint by 1-eps, the complement
//! Z = U_eps \ V° is covered by the closed convex pieces cut out by the
//! complements of V's halfspaces, and the reduced Betti numbers of Z come
//! from the nerve of that cover. Every numeric step is exact; eps enters
//! only through the combinatorics and is double-checked at eps/2.
//!
//! A trapezoidal `PlanarCellComplex` provides an independent cell-count
//! Euler characteristic used to cross-check the Betti output.

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Result, ToricError};
use crate::linalg::{self, QMat};
use crate::polyhedron::{Halfspace, PolyhedronRep};
use crate::vector::RationalVector;

// ---------------------------------------------------------------------------
// Simplicial homology of a nerve
// ---------------------------------------------------------------------------

/// Reduced Betti numbers of the abstract simplicial complex spanned by the
/// given simplices (each a sorted vertex list), in degrees 0..=max_dim.
fn reduced_betti(simplices: &[Vec<usize>], max_dim: usize) -> Vec<usize> {
    let mut by_dim: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); max_dim + 2];
    for s in simplices {
        let d = s.len() - 1;
        if d + 1 < by_dim.len() {
            by_dim[d + 1].push(s);
        }
    }
    // Augmented complex: by_dim[0] is conceptually the empty simplex.
    // ranks[k] = rank of the boundary map C_k -> C_{k-1}.
    let mut ranks: Vec<usize> = vec![0; max_dim + 2];
    for k in 0..=max_dim {
        let rows = &by_dim[k];
        let cols = &by_dim[k + 1];
        if cols.is_empty() {
            continue;
        }
        let mut mat: QMat = vec![vec![BigRational::zero(); cols.len()]; rows.len().max(1)];
        if k == 0 {
            for c in 0..cols.len() {
                mat[0][c] = BigRational::one();
            }
        } else {
            for (c, simplex) in cols.iter().enumerate() {
                for omit in 0..simplex.len() {
                    let mut face: Vec<usize> = (*simplex).clone();
                    face.remove(omit);
                    if let Some(r) = rows.iter().position(|f| **f == face) {
                        mat[r][c] = if omit % 2 == 0 {
                            BigRational::one()
                        } else {
                            -BigRational::one()
                        };
                    }
                }
            }
        }
        ranks[k] = linalg::rational_rank(&mat);
    }
    let mut betti = Vec::new();
    for k in 0..=max_dim {
        let dim_ck = by_dim[k + 1].len();
        let rank_dk = ranks[k];
        let rank_dk1 = if k + 1 <= max_dim { ranks[k + 1] } else { 0 };
        betti.push(dim_ck - rank_dk - rank_dk1);
    }
    betti
}

// ---------------------------------------------------------------------------
// Planar cell complex (trapezoidal decomposition)
// ---------------------------------------------------------------------------

/// A relatively open cell carried by a representative interior point.
#[derive(Debug, Clone)]
pub struct Cell {
    pub dim: usize,
    pub rep: RationalVector,
    /// False exactly for vertices; edges and 2-cells are relatively open.
    pub open: bool,
}

/// Partition of a box in the plane (or line) into vertices, open segments
/// and open trapezoids induced by a line arrangement. Cells are pairwise
/// disjoint and closures are unions of cells; any set carved out of the
/// arrangement's halfplanes is a union of cells, so its compactly supported
/// Euler characteristic is a signed cell count.
#[derive(Debug, Clone)]
pub struct PlanarCellComplex {
    pub rank: usize,
    pub cells: Vec<Cell>,
}

/// A line a.x = c (rank 2) or a point a*x = c (rank 1).
#[derive(Debug, Clone)]
struct Line {
    a: Vec<BigRational>,
    c: BigRational,
}

impl PlanarCellComplex {
    /// Build from the boundary lines of the given halfspaces, restricted to
    /// a box that must strictly contain the set of interest.
    pub fn from_halfspaces(
        halfspaces: &[&Halfspace],
        rank: usize,
        lo: &[BigRational],
        hi: &[BigRational],
    ) -> PlanarCellComplex {
        let mut lines: Vec<Line> = Vec::new();
        for h in halfspaces {
            let a: Vec<BigRational> = h.normal.coords.iter().map(linalg::to_rational).collect();
            if a.iter().all(|x| x.is_zero()) {
                continue;
            }
            lines.push(Line {
                a,
                c: -h.offset.clone(),
            });
        }
        match rank {
            1 => Self::build_1d(&lines, lo, hi),
            2 => Self::build_2d(&lines, lo, hi),
            r => panic!("planar cell complex only supports rank <= 2, got {r}"),
        }
    }

    fn build_1d(lines: &[Line], lo: &[BigRational], hi: &[BigRational]) -> PlanarCellComplex {
        let mut events: Vec<BigRational> = vec![lo[0].clone(), hi[0].clone()];
        for l in lines {
            if !l.a[0].is_zero() {
                events.push(&l.c / &l.a[0]);
            }
        }
        events.retain(|x| *x >= lo[0] && *x <= hi[0]);
        events.sort();
        events.dedup();
        let mut cells = Vec::new();
        for (i, e) in events.iter().enumerate() {
            cells.push(Cell {
                dim: 0,
                rep: RationalVector::new(vec![e.clone()]),
                open: false,
            });
            if i + 1 < events.len() {
                let mid = (e + &events[i + 1]) / linalg::ratio(2, 1);
                cells.push(Cell {
                    dim: 1,
                    rep: RationalVector::new(vec![mid]),
                    open: true,
                });
            }
        }
        PlanarCellComplex { rank: 1, cells }
    }

    fn build_2d(lines: &[Line], lo: &[BigRational], hi: &[BigRational]) -> PlanarCellComplex {
        let mut all = lines.to_vec();
        for (i, bound) in [(0usize, &lo[0]), (0, &hi[0]), (1, &lo[1]), (1, &hi[1])] {
            let mut a = vec![BigRational::zero(), BigRational::zero()];
            a[i] = BigRational::one();
            all.push(Line {
                a,
                c: bound.clone(),
            });
        }
        let mut events: Vec<BigRational> = vec![lo[0].clone(), hi[0].clone()];
        for l in &all {
            if l.a[1].is_zero() && !l.a[0].is_zero() {
                events.push(&l.c / &l.a[0]);
            }
        }
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let det = &all[i].a[0] * &all[j].a[1] - &all[i].a[1] * &all[j].a[0];
                if det.is_zero() {
                    continue;
                }
                let x = (&all[i].c * &all[j].a[1] - &all[j].c * &all[i].a[1]) / &det;
                events.push(x);
            }
        }
        events.retain(|x| *x >= lo[0] && *x <= hi[0]);
        events.sort();
        events.dedup();
        let nonvertical: Vec<&Line> = all.iter().filter(|l| !l.a[1].is_zero()).collect();
        let y_at = |l: &Line, x: &BigRational| -> BigRational { (&l.c - &l.a[0] * x) / &l.a[1] };
        let two = linalg::ratio(2, 1);
        let clip_ys = |mut ys: Vec<BigRational>| -> Vec<BigRational> {
            ys.retain(|y| *y >= lo[1] && *y <= hi[1]);
            ys.sort();
            ys.dedup();
            ys
        };
        let mut cells = Vec::new();
        for (k, x) in events.iter().enumerate() {
            // Cells on the event line x = const.
            let mut ys: Vec<BigRational> = nonvertical.iter().map(|l| y_at(l, x)).collect();
            ys.push(lo[1].clone());
            ys.push(hi[1].clone());
            let ys = clip_ys(ys);
            for (j, y) in ys.iter().enumerate() {
                cells.push(Cell {
                    dim: 0,
                    rep: RationalVector::new(vec![x.clone(), y.clone()]),
                    open: false,
                });
                if j + 1 < ys.len() {
                    let mid = (y + &ys[j + 1]) / &two;
                    cells.push(Cell {
                        dim: 1,
                        rep: RationalVector::new(vec![x.clone(), mid]),
                        open: true,
                    });
                }
            }
            // Cells over the open slab (x_k, x_{k+1}).
            if k + 1 < events.len() {
                let xm = (x + &events[k + 1]) / &two;
                let mut ys: Vec<BigRational> = nonvertical.iter().map(|l| y_at(l, &xm)).collect();
                ys.push(lo[1].clone());
                ys.push(hi[1].clone());
                let ys = clip_ys(ys);
                for (j, y) in ys.iter().enumerate() {
                    cells.push(Cell {
                        dim: 1,
                        rep: RationalVector::new(vec![xm.clone(), y.clone()]),
                        open: true,
                    });
                    if j + 1 < ys.len() {
                        let mid = (y + &ys[j + 1]) / &two;
                        cells.push(Cell {
                            dim: 2,
                            rep: RationalVector::new(vec![xm.clone(), mid]),
                            open: true,
                        });
                    }
                }
            }
        }
        PlanarCellComplex { rank: 2, cells }
    }

    /// Compactly supported Euler characteristic of a union of arrangement
    /// cells, given by a membership test on representative points.
    pub fn euler_characteristic<F: Fn(&RationalVector) -> bool>(&self, member: F) -> i64 {
        let mut chi = 0i64;
        for c in &self.cells {
            if member(&c.rep) {
                chi += if c.dim % 2 == 0 { 1 } else { -1 };
            }
        }
        chi
    }
}

// ---------------------------------------------------------------------------
// Relative pair cohomology
// ---------------------------------------------------------------------------

/// Betti numbers of H^k(U°, U° \ V°), k = 0..=rank, for bounded U.
/// Containment U° ⊆ V° gives [1, 0, ...]; otherwise b_0 = 0 and b_k is the
/// reduced Betti number of the complement in degree k-1.
pub fn relative_pair_cohomology(u: &PolyhedronRep, v: &PolyhedronRep) -> Result<Vec<usize>> {
    let rank = u.rank;
    if rank > 2 {
        return Err(ToricError::UnsupportedRank(rank));
    }
    if !u.is_bounded() {
        return Err(ToricError::UnboundedPolyhedron);
    }
    let zeros = vec![0usize; rank + 1];
    if u.dim != Some(rank) {
        // Empty interior: the pair is (empty, empty).
        return Ok(zeros);
    }
    let basepoint = u
        .relative_interior_point()
        .expect("nonempty full-dimensional polyhedron");
    let mut eps = linalg::ratio(1, 4);
    for _ in 0..3 {
        let half = &eps / linalg::ratio(2, 1);
        let b1 = betti_at(u, v, &basepoint, &eps)?;
        let b2 = betti_at(u, v, &basepoint, &half)?;
        if b1 == b2 {
            return Ok(b1);
        }
        eps = half;
    }
    Err(ToricError::ToleranceInstability)
}

fn betti_at(
    u: &PolyhedronRep,
    v: &PolyhedronRep,
    basepoint: &RationalVector,
    eps: &BigRational,
) -> Result<Vec<usize>> {
    let rank = u.rank;
    let scale = BigRational::one() - eps;
    let u_eps = u.shrink_toward(basepoint, &scale);
    // Closed convex pieces covering Z = U_eps \ V°.
    let mut pieces: Vec<PolyhedronRep> = Vec::new();
    for h in &v.halfspaces {
        let complement = Halfspace {
            normal: h.normal.neg(),
            offset: -h.offset.clone(),
        };
        let piece = u_eps.intersect(&PolyhedronRep::from_halfspaces(vec![complement], rank)?);
        if !piece.is_empty() {
            pieces.push(piece);
        }
    }
    let mut betti = vec![0usize; rank + 1];
    if pieces.is_empty() {
        betti[0] = 1;
        return Ok(betti);
    }
    // Nerve of the cover; supersets of empty intersections stay empty.
    let mut simplices: Vec<Vec<usize>> = (0..pieces.len()).map(|i| vec![i]).collect();
    let mut frontier = simplices.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            let last = *s.last().unwrap();
            for j in last + 1..pieces.len() {
                let mut candidate = s.clone();
                candidate.push(j);
                let mut inter = pieces[candidate[0]].clone();
                for &i in &candidate[1..] {
                    inter = inter.intersect(&pieces[i]);
                }
                if !inter.is_empty() {
                    next.push(candidate);
                }
            }
        }
        simplices.extend(next.iter().cloned());
        frontier = next;
    }
    let reduced = reduced_betti(&simplices, rank + 1);
    for k in 1..=rank {
        betti[k] = reduced[k - 1];
    }
    #[cfg(debug_assertions)]
    {
        debug_assert_eq!(
            reduced.get(rank).copied().unwrap_or(0),
            0,
            "a compact subset of R^rank cannot have reduced homology in top degree"
        );
        // Independent Euler characteristic by signed cell count.
        let chi_pair: i64 = betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        let chi_z = euler_by_cells(&u_eps, v);
        debug_assert_eq!(
            chi_pair,
            1 - chi_z,
            "nerve Betti numbers disagree with the planar cell count"
        );
    }
    Ok(betti)
}

/// chi(U_eps \ V°) by signed cell count on the trapezoidal decomposition.
fn euler_by_cells(u_eps: &PolyhedronRep, v: &PolyhedronRep) -> i64 {
    let rank = u_eps.rank;
    let Some((lo_i, hi_i)) = u_eps.bounding_box() else {
        return 0;
    };
    let pad = BigRational::one();
    let lo: Vec<BigRational> = lo_i.iter().map(|x| linalg::to_rational(x) - &pad).collect();
    let hi: Vec<BigRational> = hi_i.iter().map(|x| linalg::to_rational(x) + &pad).collect();
    let mut halfspaces: Vec<&Halfspace> = u_eps.halfspaces.iter().collect();
    halfspaces.extend(v.halfspaces.iter());
    let complex = PlanarCellComplex::from_halfspaces(&halfspaces, rank, &lo, &hi);
    complex.euler_characteristic(|p| u_eps.contains(p) && !v.interior_contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::bigint;
    use crate::vector::{LatticeVector, Role};

    fn interval(a: i64, b: i64) -> PolyhedronRep {
        PolyhedronRep::from_int_halfspaces(
            &[
                (LatticeVector::from_i64(&[1], Role::N), bigint(-a)),
                (LatticeVector::from_i64(&[-1], Role::N), bigint(b)),
            ],
            1,
        )
        .unwrap()
    }

    fn square(x0: i64, y0: i64, x1: i64, y1: i64) -> PolyhedronRep {
        PolyhedronRep::from_int_halfspaces(
            &[
                (LatticeVector::from_i64(&[1, 0], Role::N), bigint(-x0)),
                (LatticeVector::from_i64(&[-1, 0], Role::N), bigint(x1)),
                (LatticeVector::from_i64(&[0, 1], Role::N), bigint(-y0)),
                (LatticeVector::from_i64(&[0, -1], Role::N), bigint(y1)),
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn containment_gives_point_cohomology() {
        let b = relative_pair_cohomology(&interval(0, 1), &interval(-1, 2)).unwrap();
        assert_eq!(b, vec![1, 0]);
    }

    #[test]
    fn two_component_complement_gives_h1() {
        let b = relative_pair_cohomology(&interval(0, 3), &interval(1, 2)).unwrap();
        assert_eq!(b, vec![0, 1]);
    }

    #[test]
    fn equal_open_squares() {
        let u = square(0, 0, 1, 1);
        let b = relative_pair_cohomology(&u, &u).unwrap();
        assert_eq!(b, vec![1, 0, 0]);
    }

    #[test]
    fn one_sided_overhang_vanishes() {
        let b = relative_pair_cohomology(&interval(0, 3), &interval(0, 1)).unwrap();
        assert_eq!(b, vec![0, 0]);
    }

    #[test]
    fn disjoint_v_means_zero_pair() {
        let b = relative_pair_cohomology(&interval(0, 1), &interval(5, 6)).unwrap();
        assert_eq!(b, vec![0, 0]);
    }

    #[test]
    fn square_with_interior_hole_gives_h2() {
        let u = square(0, 0, 4, 4);
        let v = square(1, 1, 2, 2);
        let b = relative_pair_cohomology(&u, &v).unwrap();
        assert_eq!(b, vec![0, 0, 1]);
    }

    #[test]
    fn square_cut_through_gives_h1() {
        let u = square(0, 0, 4, 4);
        let v = square(1, -1, 2, 5);
        let b = relative_pair_cohomology(&u, &v).unwrap();
        assert_eq!(b, vec![0, 1, 0]);
    }

    #[test]
    fn corner_wedge_cut() {
        let u = square(0, 0, 4, 4);
        let v = PolyhedronRep::from_int_halfspaces(
            &[(LatticeVector::from_i64(&[1, 1], Role::N), bigint(-6))],
            2,
        )
        .unwrap();
        let b = relative_pair_cohomology(&u, &v).unwrap();
        assert_eq!(b, vec![0, 0, 0]);
    }

    #[test]
    fn euler_cell_count_of_closed_square() {
        let u = square(0, 0, 2, 2);
        let empty = PolyhedronRep::empty(2);
        assert_eq!(euler_by_cells(&u, &empty), 1);
    }
}
