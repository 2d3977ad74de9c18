//! The K-theoretic shadow of the correspondence: the map sending an ample
//! bundle class to the indicator function of its moment polytope, Euler
//! integrals over lattice points, germ extraction, and membership
//! certificates for the germ subgroup generated by the dual cones of the
//! fan.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::bundles::{moment_polytope, KClass};
use crate::cone::ConeRep;
use crate::error::{Result, ToricError};
use crate::fan::Fan;
use crate::linalg::{self, IMat};
use crate::polyhedron::PolyhedronRep;
use crate::vector::{LatticeVector, RationalVector, Role};

/// A finite integer combination of indicator functions of closed rational
/// polyhedra.
#[derive(Debug, Clone)]
pub struct ConstructibleFunction {
    pub terms: Vec<(BigInt, PolyhedronRep)>,
    pub rank: usize,
}

impl ConstructibleFunction {
    pub fn zero(rank: usize) -> ConstructibleFunction {
        ConstructibleFunction {
            terms: vec![],
            rank,
        }
    }

    pub fn evaluate(&self, x: &RationalVector) -> BigInt {
        let mut v = BigInt::zero();
        for (coeff, p) in &self.terms {
            if p.contains(x) {
                v += coeff;
            }
        }
        v
    }

    pub fn add(&self, other: &ConstructibleFunction) -> ConstructibleFunction {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ConstructibleFunction {
            terms,
            rank: self.rank,
        }
    }

    pub fn translate(&self, t: &RationalVector) -> ConstructibleFunction {
        ConstructibleFunction {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.translate(t)))
                .collect(),
            rank: self.rank,
        }
    }

    /// Exact lattice-point sum of the function; every support must be
    /// bounded.
    pub fn euler_integral(&self) -> Result<BigInt> {
        let mut lo: Option<Vec<BigInt>> = None;
        let mut hi: Option<Vec<BigInt>> = None;
        for (_, p) in &self.terms {
            if !p.is_bounded() {
                return Err(ToricError::UnboundedSupport);
            }
            let Some((plo, phi)) = p.bounding_box() else {
                continue;
            };
            match (&mut lo, &mut hi) {
                (Some(l), Some(h)) => {
                    for i in 0..self.rank {
                        if plo[i] < l[i] {
                            l[i] = plo[i].clone();
                        }
                        if phi[i] > h[i] {
                            h[i] = phi[i].clone();
                        }
                    }
                }
                _ => {
                    lo = Some(plo);
                    hi = Some(phi);
                }
            }
        }
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return Ok(BigInt::zero());
        };
        let mut total = BigInt::zero();
        for m in crate::bundles::box_lattice_points(&lo, &hi, Role::M) {
            total += self.evaluate(&m.to_rational());
        }
        Ok(total)
    }

    /// Canonical-form equality: both functions evaluate identically on a
    /// representative point of every cell of the common refinement of their
    /// supporting hyperplane arrangements.
    pub fn equals(&self, other: &ConstructibleFunction) -> bool {
        let mut halfspaces = Vec::new();
        for (_, p) in self.terms.iter().chain(&other.terms) {
            for h in &p.halfspaces {
                halfspaces.push(h.clone());
            }
        }
        let cells = affine_cell_decomposition(&halfspaces, self.rank);
        let mut reps: Vec<RationalVector> = cells
            .iter()
            .filter_map(|c| c.relative_interior_point())
            .collect();
        reps.sort();
        reps.dedup();
        reps.iter()
            .all(|p| self.evaluate(p) == other.evaluate(p))
    }
}

/// Split space by every boundary hyperplane: the relative interiors of the
/// returned polyhedra cover space, and each input halfspace is constant on
/// each of them.
fn affine_cell_decomposition(
    halfspaces: &[crate::polyhedron::Halfspace],
    rank: usize,
) -> Vec<PolyhedronRep> {
    let mut cells = vec![PolyhedronRep::full_space(rank)];
    let mut seen: Vec<(Vec<BigInt>, num::BigRational)> = Vec::new();
    for h in halfspaces {
        if h.normal.is_zero() {
            continue;
        }
        let key = (
            linalg::primitivize(&h.normal.coords),
            h.offset.clone() / linalg::to_rational(&linalg::vec_gcd(&h.normal.coords)),
        );
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let mut next = Vec::new();
        for cell in &cells {
            let pos = cell.intersect(
                &PolyhedronRep::from_halfspaces(vec![h.clone()], rank).expect("rank ok"),
            );
            let negh = crate::polyhedron::Halfspace {
                normal: h.normal.neg(),
                offset: -h.offset.clone(),
            };
            let neg = cell.intersect(
                &PolyhedronRep::from_halfspaces(vec![negh.clone()], rank).expect("rank ok"),
            );
            let slice = pos.intersect(
                &PolyhedronRep::from_halfspaces(vec![negh], rank).expect("rank ok"),
            );
            for c in [pos, neg, slice] {
                if !c.is_empty() && !next.iter().any(|d: &PolyhedronRep| *d == c) {
                    next.push(c);
                }
            }
        }
        cells = next;
    }
    cells
}

/// The polytope-indicator homomorphism on ample K-classes.
pub fn i_t(fan: &Fan, class: &KClass) -> Result<ConstructibleFunction> {
    let mut terms = Vec::new();
    for (coeff, d) in &class.terms {
        let mp = moment_polytope(fan, d)?;
        terms.push((coeff.clone(), mp.polytope));
    }
    Ok(ConstructibleFunction {
        terms,
        rank: fan.rank,
    })
}

/// The germ of a constructible function at a lattice point: tangent cones
/// of the supports containing the point.
#[derive(Debug, Clone)]
pub struct Germ {
    pub base_point: LatticeVector,
    /// Direction cones with apex at the base point.
    pub terms: Vec<(BigInt, ConeRep)>,
    pub rank: usize,
}

impl Germ {
    pub fn evaluate_direction(&self, d: &RationalVector) -> BigInt {
        let mut v = BigInt::zero();
        for (coeff, cone) in &self.terms {
            if cone.contains_rational(d) {
                v += coeff;
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn germ_at(g: &ConstructibleFunction, m: &LatticeVector) -> Germ {
    let x = m.to_rational();
    let mut terms = Vec::new();
    for (coeff, p) in &g.terms {
        if let Some(cone) = p.tangent_cone(&x) {
            terms.push((coeff.clone(), cone));
        }
    }
    Germ {
        base_point: m.clone(),
        terms,
        rank: g.rank,
    }
}

/// An expression of a germ as an integer combination of the dual cones of
/// fan cones; re-evaluation on every chamber reproduces the germ.
#[derive(Debug, Clone)]
pub struct GermCertificate {
    pub expression: Vec<(BigInt, ConeRep)>,
}

/// Precomputed chamber data for germ membership over one fan: the common
/// refinement of all dual cones, with the dual-indicator matrix.
#[derive(Debug, Clone)]
pub struct SigmaChambers {
    pub duals: Vec<ConeRep>,
    pub fan_cones: Vec<ConeRep>,
    /// Representative directions, one per refinement cell.
    pub reps: Vec<RationalVector>,
    /// indicator[cell][dual] as integers.
    pub indicator: IMat,
    rank: usize,
}

impl SigmaChambers {
    pub fn new(fan: &Fan) -> SigmaChambers {
        let duals: Vec<ConeRep> = fan
            .all_cones
            .iter()
            .map(|c| c.dual().expect("rank <= 3"))
            .collect();
        // Every dual's facets lie on hyperplanes perpendicular to fan rays,
        // so splitting by the rays' hyperplanes refines all duals at once.
        let cells = central_cell_decomposition(&fan.rays, fan.rank);
        let reps: Vec<RationalVector> = cells.iter().map(|c| c.relint_point()).collect();
        let indicator: IMat = reps
            .iter()
            .map(|p| {
                duals
                    .iter()
                    .map(|d| {
                        if d.contains_rational(p) {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        SigmaChambers {
            duals,
            fan_cones: fan.all_cones.clone(),
            reps,
            indicator,
            rank: fan.rank,
        }
    }

    /// Solve the integer chamber system for a germ; None when the germ lies
    /// outside the subgroup generated by the dual cones.
    pub fn certify(&self, germ: &Germ) -> Option<GermCertificate> {
        // The germ's own cones may introduce new hyperplanes; refine by
        // evaluating on subdivided cells when needed. Tangent cones of
        // moment polytopes only use ray hyperplanes, so the precomputed
        // cells already separate them; general germs get a fresh split.
        let extra: Vec<&ConeRep> = germ.terms.iter().map(|(_, c)| c).collect();
        let needs_refined = extra.iter().any(|c| {
            c.facet_normals.iter().any(|u| {
                !self
                    .fan_cones
                    .iter()
                    .flat_map(|fc| fc.rays.iter())
                    .any(|r| {
                        linalg::primitivize(&u.coords) == r.coords
                            || linalg::primitivize(&u.coords)
                                == r.neg().coords
                    })
            })
        });
        let (reps, indicator): (Vec<RationalVector>, IMat) = if needs_refined {
            let mut normals: Vec<LatticeVector> = self
                .fan_cones
                .iter()
                .flat_map(|c| c.rays.iter().cloned())
                .collect();
            for c in &extra {
                normals.extend(c.facet_normals.iter().map(|u| LatticeVector {
                    coords: u.coords.clone(),
                    role: Role::N,
                }));
            }
            let cells = central_cell_decomposition(&normals, self.rank);
            let reps: Vec<RationalVector> = cells.iter().map(|c| c.relint_point()).collect();
            let indicator = reps
                .iter()
                .map(|p| {
                    self.duals
                        .iter()
                        .map(|d| {
                            if d.contains_rational(p) {
                                BigInt::one()
                            } else {
                                BigInt::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            (reps, indicator)
        } else {
            (self.reps.clone(), self.indicator.clone())
        };
        let rhs: Vec<BigInt> = reps.iter().map(|p| germ.evaluate_direction(p)).collect();
        let solution = linalg::solve_integer(&indicator, &rhs)?;
        // Re-evaluate the certificate on every chamber.
        for (p, want) in reps.iter().zip(&rhs) {
            let mut got = BigInt::zero();
            for (y, d) in solution.iter().zip(&self.duals) {
                if !y.is_zero() && d.contains_rational(p) {
                    got += y;
                }
            }
            if got != *want {
                return None;
            }
        }
        let expression = solution
            .into_iter()
            .zip(&self.fan_cones)
            .filter(|(y, _)| !y.is_zero())
            .map(|(y, c)| (y, c.clone()))
            .collect();
        Some(GermCertificate { expression })
    }
}

/// Membership of a germ in the subgroup generated by the dual cones of the
/// fan; the certificate lists the fan cones with their coefficients.
pub fn germ_in_s_sigma(germ: &Germ, fan: &Fan) -> Option<GermCertificate> {
    SigmaChambers::new(fan).certify(germ)
}

/// Split space by the given hyperplane normals: relative interiors of the
/// returned cones partition space and every indicator of a cone bounded by
/// those hyperplanes is constant on each of them.
pub fn central_cell_decomposition(normals: &[LatticeVector], rank: usize) -> Vec<ConeRep> {
    central_cell_decomposition_from(ConeRep::full_space(rank, Role::M), normals)
}

/// Same splitting, but starting from an arbitrary cone: the relative
/// interiors of the output partition `start`.
pub fn central_cell_decomposition_from(
    start: ConeRep,
    normals: &[LatticeVector],
) -> Vec<ConeRep> {
    let rank = start.rank;
    let role = start.role;
    let mut cells = vec![start];
    let mut seen: Vec<Vec<BigInt>> = Vec::new();
    for u in normals {
        if u.is_zero() {
            continue;
        }
        let mut key = linalg::primitivize(&u.coords);
        if key
            .iter()
            .rev()
            .find(|x| !x.is_zero())
            .map(|x| x.is_negative())
            .unwrap_or(false)
        {
            key = key.iter().map(|x| -x).collect();
        }
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        let upos = LatticeVector::new(u.coords.clone(), Role::N);
        let uneg = upos.neg();
        let mut next: Vec<ConeRep> = Vec::new();
        for cell in &cells {
            let with = |extra: &[&LatticeVector], acc: &mut Vec<ConeRep>| {
                let mut hs: Vec<LatticeVector> = cell
                    .facet_normals
                    .iter()
                    .map(|w| LatticeVector::new(w.coords.clone(), Role::N))
                    .collect();
                for e in extra {
                    hs.push((*e).clone());
                }
                let c = ConeRep::from_halfspaces(&hs, rank, role).expect("rank ok");
                if !acc.iter().any(|d| *d == c) {
                    acc.push(c);
                }
            };
            with(&[&upos], &mut next);
            with(&[&uneg], &mut next);
            with(&[&upos, &uneg], &mut next);
        }
        cells = next;
    }
    cells
}
