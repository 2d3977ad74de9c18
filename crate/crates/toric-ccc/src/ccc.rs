//! The conical Lagrangian attached to a fan, the costandard objects that
//! ample bundles map to, the hom calculus on the chart generators, and the
//! weight-by-weight comparison of the coherent and constructible hom
//! engines.

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::fmt;

use crate::bundles::{graded_hom, moment_polytope, positivity, GradedCohomology, TDivisor};
use crate::cellcomplex::relative_pair_cohomology;
use crate::cone::ConeRep;
use crate::error::{Result, ToricError};
use crate::fan::Fan;
use crate::linalg::{self, IMat, QMat};
use crate::polyhedron::PolyhedronRep;
use crate::vector::{LatticeVector, RationalVector, Role};

// ---------------------------------------------------------------------------
// Conical Lagrangians
// ---------------------------------------------------------------------------

/// One cell of a conical Lagrangian: a base piece in M_R times a fiber cone
/// in N_R, with the conormal condition between them.
#[derive(Debug, Clone)]
pub struct LagrangianCell {
    pub base: PolyhedronRep,
    pub fiber: ConeRep,
}

impl LagrangianCell {
    /// Every affine-hull direction of the base pairs to zero with every
    /// fiber generator.
    pub fn is_conormal(&self) -> bool {
        self.base.affine_hull_directions().iter().all(|d| {
            self.fiber
                .rays
                .iter()
                .all(|r| linalg::dot(&d.coords, &r.coords).is_zero())
        })
    }
}

/// A union of conical cells in T*M_R = M_R x N_R. For the fan Lagrangian the
/// base pieces are lattice-coset representatives and `periodic` is set.
#[derive(Debug, Clone)]
pub struct ConicalLagrangian {
    pub cells: Vec<LagrangianCell>,
    pub periodic: bool,
    pub rank: usize,
}

/// The fan's conical Lagrangian: one periodic cell per cone, with base the
/// orthogonal complement subspace and fiber the negated cone.
pub fn lambda_sigma(fan: &Fan) -> ConicalLagrangian {
    let cells = fan
        .all_cones
        .iter()
        .map(|sigma| {
            // Base: the subspace {x : <x, v> = 0 for rays v of sigma}.
            let mut hs = Vec::new();
            for r in &sigma.rays {
                hs.push((r.clone(), BigInt::zero()));
                hs.push((r.neg(), BigInt::zero()));
            }
            let base = PolyhedronRep::from_int_halfspaces(&hs, fan.rank).expect("rank <= 3");
            LagrangianCell {
                base,
                fiber: sigma.negated(),
            }
        })
        .collect();
    ConicalLagrangian {
        cells,
        periodic: true,
        rank: fan.rank,
    }
}

/// The compact conical Lagrangian of an ample divisor: moment polytope faces
/// times negated cones.
pub fn lambda_ample(fan: &Fan, divisor: &TDivisor) -> Result<ConicalLagrangian> {
    if !positivity(fan, divisor)?.ample {
        return Err(ToricError::NotAmple(format!("{:?}", divisor.coeffs)));
    }
    let mp = moment_polytope(fan, divisor)?;
    let cells = mp
        .faces
        .iter()
        .map(|(sigma, face)| LagrangianCell {
            base: face.clone(),
            fiber: sigma.negated(),
        })
        .collect();
    Ok(ConicalLagrangian {
        cells,
        periodic: false,
        rank: fan.rank,
    })
}

/// Outcome of the containment test of an ample Lagrangian in the fan one.
#[derive(Debug, Clone)]
pub struct ContainmentReport {
    pub contained: bool,
    /// Per cell, the lattice translate putting the base inside the
    /// corresponding coset subspace.
    pub witnesses: Vec<Option<LatticeVector>>,
    pub failing_cell: Option<usize>,
}

/// Check each cell (F, -sigma) of `ample` sits inside the periodic cell
/// (sigma-perp + M) x (-sigma) of `sigma_lagrangian`, producing the lattice
/// translate as a witness.
pub fn lambda_contained(
    ample: &ConicalLagrangian,
    sigma_lagrangian: &ConicalLagrangian,
) -> ContainmentReport {
    let rank = ample.rank;
    let mut witnesses = Vec::new();
    let mut failing = None;
    for (idx, cell) in ample.cells.iter().enumerate() {
        // Locate the periodic cell with the same fiber cone.
        let Some(periodic) = sigma_lagrangian
            .cells
            .iter()
            .find(|c| c.fiber == cell.fiber)
        else {
            witnesses.push(None);
            failing.get_or_insert(idx);
            continue;
        };
        let witness = coset_witness(cell, periodic, rank);
        if witness.is_none() {
            failing.get_or_insert(idx);
        }
        witnesses.push(witness);
    }
    ContainmentReport {
        contained: failing.is_none(),
        witnesses,
        failing_cell: failing,
    }
}

/// Find chi in M with base(cell) inside chi + span(sigma-perp), by solving
/// the integral affine system through a unimodular completion.
fn coset_witness(
    cell: &LagrangianCell,
    periodic: &LagrangianCell,
    rank: usize,
) -> Option<LatticeVector> {
    let subspace_dirs: IMat = periodic
        .base
        .affine_hull_directions()
        .iter()
        .map(|d| d.coords.clone())
        .collect();
    // Base directions must lie inside the subspace.
    let sub_basis = if subspace_dirs.is_empty() {
        vec![]
    } else {
        linalg::saturate_rowspace(&subspace_dirs)
    };
    for d in cell.base.affine_hull_directions() {
        let in_span = if sub_basis.is_empty() {
            d.is_zero()
        } else {
            let mut aug = sub_basis.clone();
            aug.push(d.coords.clone());
            linalg::integer_rank(&aug) == sub_basis.len()
        };
        if !in_span {
            return None;
        }
    }
    // Any point of the base must lie in M + span.
    let p = cell
        .base
        .vertices
        .first()
        .cloned()
        .or_else(|| cell.base.relative_interior_point())?;
    if sub_basis.is_empty() {
        return p.as_lattice(Role::M);
    }
    if sub_basis.len() == rank {
        return Some(LatticeVector::zero(rank, Role::M));
    }
    let full = linalg::complete_to_unimodular(&sub_basis)?;
    // Solve p = sum alpha_i s_i + sum beta_j t_j; chi exists iff the beta
    // coordinates are integers.
    let a: QMat = (0..rank)
        .map(|col| full.iter().map(|row| linalg::to_rational(&row[col])).collect())
        .collect();
    let coeffs = linalg::solve_rational(&a, &p.coords)?;
    let k = sub_basis.len();
    let mut chi = vec![BigInt::zero(); rank];
    for (j, beta) in coeffs.iter().enumerate().skip(k) {
        if !beta.is_integer() {
            return None;
        }
        let b = beta.to_integer();
        for (c, t) in chi.iter_mut().zip(&full[j]) {
            *c = &*c + &(t * &b);
        }
    }
    Some(LatticeVector::new(chi, Role::M))
}

// ---------------------------------------------------------------------------
// Theta calculus
// ---------------------------------------------------------------------------

/// A chart generator: a character together with a cone of the fan.
#[derive(Debug, Clone)]
pub struct ThetaObject {
    pub chi: LatticeVector,
    pub sigma: ConeRep,
}

impl ThetaObject {
    pub fn new(fan: &Fan, chi: LatticeVector, sigma: ConeRep) -> Result<ThetaObject> {
        if !fan.all_cones.iter().any(|c| *c == sigma) {
            return Err(ToricError::InvalidFan(
                "theta object requires a cone of the fan".into(),
            ));
        }
        Ok(ThetaObject { chi, sigma })
    }
}

/// Degree-zero hom dimension between chart generators, with the monomial
/// witness weight when nonzero: 1 iff sigma_b is a face of sigma_a and
/// chi_a - chi_b lies in the dual of sigma_b.
pub fn theta_hom(a: &ThetaObject, b: &ThetaObject) -> (usize, Option<LatticeVector>) {
    if !b.sigma.is_face_of(&a.sigma) {
        return (0, None);
    }
    let diff = a.chi.sub(&b.chi);
    let dual = b.sigma.dual().expect("rank <= 3");
    if dual.contains_lattice(&diff) {
        (1, Some(diff))
    } else {
        (0, None)
    }
}

/// Composition of chart-generator homs: nonzero exactly when both factors
/// are, with the witness weights adding.
pub fn theta_compose(
    a: &ThetaObject,
    b: &ThetaObject,
    c: &ThetaObject,
) -> (usize, Option<LatticeVector>) {
    let (ab, wab) = theta_hom(a, b);
    let (bc, wbc) = theta_hom(b, c);
    if ab == 0 || bc == 0 {
        return (0, None);
    }
    let (ac, wac) = theta_hom(a, c);
    debug_assert_eq!(ac, 1, "composite of nonzero chart homs is nonzero");
    debug_assert_eq!(
        wac.clone().unwrap().coords,
        wab.unwrap().add(&wbc.unwrap()).coords
    );
    (ac, wac)
}

/// Brute-force oracle: dimension of degree-zero graded module maps between
/// the pushed-forward chart modules, truncated to a weight box of the given
/// radius. Values are chased along monoid generators with a union-find; a
/// component is free iff it never meets a source-occupied, target-empty
/// weight.
pub fn theta_hom_oracle(a: &ThetaObject, b: &ThetaObject, radius: i64) -> usize {
    let rank = a.chi.rank();
    let tau = a.sigma.intersect(&b.sigma).expect("rank <= 3");
    let source_cone = tau.dual().expect("rank <= 3");
    let target_cone = b.sigma.dual().expect("rank <= 3");
    let gens = monoid_generators(&target_cone);
    let chi_a: Vec<i64> = a.chi.coords.iter().map(|x| i64::try_from(x).unwrap()).collect();
    let chi_b: Vec<i64> = b.chi.coords.iter().map(|x| i64::try_from(x).unwrap()).collect();
    let in_cone = |cone: &ConeRep, v: &[i64]| -> bool {
        cone.facet_normals.iter().all(|u| {
            u.coords
                .iter()
                .zip(v)
                .map(|(c, x)| i64::try_from(c).unwrap() * x)
                .sum::<i64>()
                >= 0
        })
    };
    // Index the box.
    let side = (2 * radius + 1) as usize;
    let count = side.pow(rank as u32);
    let index = |v: &[i64]| -> Option<usize> {
        let mut idx = 0usize;
        for &x in v {
            if x < -radius || x > radius {
                return None;
            }
            idx = idx * side + (x + radius) as usize;
        }
        Some(idx)
    };
    let mut coords = vec![vec![0i64; rank]; count];
    {
        let mut cursor = vec![-radius; rank];
        for slot in coords.iter_mut() {
            *slot = cursor.clone();
            for i in (0..rank).rev() {
                cursor[i] += 1;
                if cursor[i] <= radius {
                    break;
                }
                cursor[i] = -radius;
            }
        }
    }
    let source_occ: Vec<bool> = coords
        .iter()
        .map(|v| {
            let d: Vec<i64> = v.iter().zip(&chi_a).map(|(x, c)| x - c).collect();
            in_cone(&source_cone, &d)
        })
        .collect();
    let target_occ: Vec<bool> = coords
        .iter()
        .map(|v| {
            let d: Vec<i64> = v.iter().zip(&chi_b).map(|(x, c)| x - c).collect();
            in_cone(&target_cone, &d)
        })
        .collect();
    // Union-find over source-occupied weights.
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, v) in coords.iter().enumerate() {
        if !source_occ[i] {
            continue;
        }
        for g in &gens {
            let w: Vec<i64> = v.iter().zip(g).map(|(x, d)| x + d).collect();
            if let Some(j) = index(&w) {
                if source_occ[j] {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
    }
    // Zero constraints kill their components.
    let mut zero = vec![false; count];
    for i in 0..count {
        if source_occ[i] && !target_occ[i] {
            let r = find(&mut parent, i);
            zero[r] = true;
        }
    }
    let mut free = std::collections::BTreeSet::new();
    for i in 0..count {
        if source_occ[i] {
            let r = find(&mut parent, i);
            if !zero[r] {
                free.insert(r);
            }
        }
    }
    free.len()
}

/// Generators of the monoid of lattice points of a dual cone in rank <= 2
/// (covers full space, halfplane/halfline, and unimodular sector cases that
/// arise from smooth fans).
fn monoid_generators(cone: &ConeRep) -> Vec<Vec<i64>> {
    let rank = cone.rank;
    let to_i64 = |v: &LatticeVector| -> Vec<i64> {
        v.coords.iter().map(|x| i64::try_from(x).unwrap()).collect()
    };
    let mut gens: Vec<Vec<i64>> = cone.rays.iter().map(to_i64).collect();
    if rank == 2 && cone.dim() == 2 && cone.is_strongly_convex() && gens.len() == 2 {
        // For a non-unimodular sector, fill in the Hilbert basis by scanning
        // a fundamental parallelogram.
        let det = gens[0][0] * gens[1][1] - gens[0][1] * gens[1][0];
        if det.abs() > 1 {
            let bound = gens
                .iter()
                .flat_map(|g| g.iter().map(|x| x.abs()))
                .max()
                .unwrap_or(1);
            for x in -bound..=bound {
                for y in -bound..=bound {
                    if (x, y) == (0, 0) {
                        continue;
                    }
                    let v = LatticeVector::from_i64(&[x, y], cone.role);
                    if cone.contains_lattice(&v) && !gens.contains(&vec![x, y]) {
                        gens.push(vec![x, y]);
                    }
                }
            }
        }
    }
    gens
}

// ---------------------------------------------------------------------------
// Costandard objects and the constructible hom engine
// ---------------------------------------------------------------------------

/// The constructible image of an ample line bundle: the open moment
/// polytope's extension-by-zero sheaf, shifted by the rank.
#[derive(Debug, Clone)]
pub struct CostandardObject {
    pub polytope: PolyhedronRep,
    pub shift: usize,
    pub label: TDivisor,
}

pub fn kappa(fan: &Fan, divisor: &TDivisor) -> Result<CostandardObject> {
    if !positivity(fan, divisor)?.ample {
        return Err(ToricError::NotAmple(format!("{:?}", divisor.coeffs)));
    }
    let mp = moment_polytope(fan, divisor)?;
    Ok(CostandardObject {
        polytope: mp.polytope,
        shift: fan.rank,
        label: divisor.clone(),
    })
}

/// Graded homs between costandard objects through relative cohomology of
/// polyhedral pairs. The translate by m contributes at hom weight -m; the
/// shifts cancel so degree k matches Ext^k.
pub fn costandard_hom(
    a: &CostandardObject,
    b: &CostandardObject,
    rank: usize,
) -> Result<GradedCohomology> {
    let mut pad = BigInt::one();
    for attempt in 0..2 {
        let (lo, hi) = translate_box(a, b, rank, &pad);
        let translates = crate::bundles::box_lattice_points(&lo, &hi, Role::M);
        let mut rows = Vec::new();
        let mut shell_dirty = false;
        for m in &translates {
            let shifted = b.polytope.translate(&m.to_rational());
            let dims = relative_pair_cohomology(&a.polytope, &shifted)?;
            if dims.iter().any(|&d| d > 0) {
                let on_shell =
                    (0..rank).any(|i| m.coords[i] == lo[i] || m.coords[i] == hi[i]);
                if on_shell {
                    shell_dirty = true;
                }
                rows.push((m.neg(), dims));
            }
        }
        if !shell_dirty {
            return Ok(GradedCohomology::from_rows(rows, rank));
        }
        if attempt == 0 {
            pad += BigInt::from(4);
        }
    }
    Err(ToricError::BoundingRegion)
}

fn translate_box(
    a: &CostandardObject,
    b: &CostandardObject,
    rank: usize,
    pad: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut lo: Option<Vec<BigInt>> = None;
    let mut hi: Option<Vec<BigInt>> = None;
    for va in &a.polytope.vertices {
        for vb in &b.polytope.vertices {
            let diff = va.sub(vb);
            let floor: Vec<BigInt> = diff.coords.iter().map(|x| x.floor().to_integer()).collect();
            let ceil: Vec<BigInt> = diff.coords.iter().map(|x| x.ceil().to_integer()).collect();
            match (&mut lo, &mut hi) {
                (Some(l), Some(h)) => {
                    for i in 0..rank {
                        if floor[i] < l[i] {
                            l[i] = floor[i].clone();
                        }
                        if ceil[i] > h[i] {
                            h[i] = ceil[i].clone();
                        }
                    }
                }
                _ => {
                    lo = Some(floor);
                    hi = Some(ceil);
                }
            }
        }
    }
    let mut lo = lo.expect("ample polytopes have vertices");
    let mut hi = hi.expect("ample polytopes have vertices");
    for i in 0..rank {
        lo[i] = &lo[i] - pad;
        hi[i] = &hi[i] + pad;
    }
    (lo, hi)
}

// ---------------------------------------------------------------------------
// Verification report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CccRow {
    pub weight: LatticeVector,
    pub coherent: Vec<usize>,
    pub constructible: Vec<usize>,
    pub matches: bool,
}

/// Weight-by-weight comparison of the two hom engines.
#[derive(Debug, Clone)]
pub struct CccReport {
    pub rows: Vec<CccRow>,
    pub pass: bool,
}

pub fn ccc_verify(fan: &Fan, da: &TDivisor, db: &TDivisor) -> Result<CccReport> {
    let coherent = graded_hom(fan, da, db)?;
    let ka = kappa(fan, da)?;
    let kb = kappa(fan, db)?;
    let constructible = costandard_hom(&ka, &kb, fan.rank)?;
    let mut weights: Vec<LatticeVector> = coherent
        .weights
        .iter()
        .chain(constructible.weights.iter())
        .map(|(w, _)| w.clone())
        .collect();
    weights.sort_by(|a, b| a.coords.cmp(&b.coords));
    weights.dedup();
    let zero_dims = vec![0usize; fan.rank + 1];
    let mut rows = Vec::new();
    let mut pass = true;
    for w in weights {
        let ch = {
            let d = coherent.dims_at(&w);
            if d.is_empty() { zero_dims.clone() } else { d }
        };
        let cs = {
            let d = constructible.dims_at(&w);
            if d.is_empty() { zero_dims.clone() } else { d }
        };
        let matches = ch == cs;
        pass &= matches;
        rows.push(CccRow {
            weight: w,
            coherent: ch,
            constructible: cs,
            matches,
        });
    }
    Ok(CccReport { rows, pass })
}

impl fmt::Display for CccReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "weight | coherent | constructible | match")?;
        for row in &self.rows {
            writeln!(
                f,
                "{} | {:?} | {:?} | {}",
                row.weight,
                row.coherent,
                row.constructible,
                if row.matches { "ok" } else { "MISMATCH" }
            )?;
        }
        write!(f, "result: {}", if self.pass { "pass" } else { "FAIL" })
    }
}
