//! Exact integer and rational linear algebra: Hermite/Smith normal forms,
//! kernels, saturations and small dense solves. Everything here is
//! arbitrary-precision; nothing rounds.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<BigRational>>;

pub fn bigint(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// gcd of a slice, zero for the empty/zero slice.
pub fn vec_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Divide out the gcd so the direction is primitive; zero stays zero.
pub fn primitivize(v: &[BigInt]) -> Vec<BigInt> {
    let g = vec_gcd(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clear denominators of a rational direction and primitivize.
pub fn primitive_direction(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitivize(&ints)
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_qi(a: &[BigRational], b: &[BigInt]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * BigRational::from_integer(y.clone()))
        .sum()
}

pub fn dot_qq(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// ---------------------------------------------------------------------------
// Rational Gaussian elimination
// ---------------------------------------------------------------------------

/// Row echelon reduction in place; returns the pivot columns.
fn echelon(mat: &mut QMat) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return vec![];
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let s = &mat[r][j] * &f;
                    mat[i][j] = &mat[i][j] - s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rational_rank(mat: &QMat) -> usize {
    let mut m = mat.clone();
    echelon(&mut m).len()
}

pub fn integer_rank(mat: &IMat) -> usize {
    rational_rank(&to_qmat(mat))
}

pub fn to_qmat(mat: &IMat) -> QMat {
    mat.iter()
        .map(|row| row.iter().map(to_rational).collect())
        .collect()
}

/// Any rational solution of `a x = b`, or None when inconsistent.
pub fn solve_rational(a: &QMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: QMat = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the rational nullspace {x : a x = 0}.
pub fn rational_kernel(a: &QMat) -> QMat {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut m = a.clone();
    let pivots = echelon(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

/// Row-style Hermite normal form: returns (h, u) with u * a = h, u unimodular,
/// h in staircase form with positive pivots and reduced entries above them.
pub fn hnf_rows(a: &IMat) -> (IMat, IMat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut h = a.clone();
    let mut u = identity(rows);
    let mut pivot_row = 0;
    for c in 0..cols {
        if pivot_row >= rows {
            break;
        }
        loop {
            let nz: Vec<usize> = (pivot_row..rows).filter(|&i| !h[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let k = *nz.iter().min_by_key(|&&i| h[i][c].abs()).unwrap();
            h.swap(pivot_row, k);
            u.swap(pivot_row, k);
            if h[pivot_row][c].is_negative() {
                for x in h[pivot_row].iter_mut() {
                    *x = -&*x;
                }
                for x in u[pivot_row].iter_mut() {
                    *x = -&*x;
                }
            }
            let mut done = true;
            for i in pivot_row + 1..rows {
                if !h[i][c].is_zero() {
                    let q = h[i][c].div_floor(&h[pivot_row][c]);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let s = &h[pivot_row][j] * &q;
                            h[i][j] = &h[i][j] - s;
                        }
                        for j in 0..rows {
                            let s = &u[pivot_row][j] * &q;
                            u[i][j] = &u[i][j] - s;
                        }
                    }
                    if !h[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !h[pivot_row][c].is_zero() {
            for i in 0..pivot_row {
                let q = h[i][c].div_floor(&h[pivot_row][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let s = &h[pivot_row][j] * &q;
                        h[i][j] = &h[i][j] - s;
                    }
                    for j in 0..rows {
                        let s = &u[pivot_row][j] * &q;
                        u[i][j] = &u[i][j] - s;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    (h, u)
}

/// Basis of the saturated lattice {x in Z^n : a x = 0}, in HNF-canonical form.
pub fn integer_kernel(a: &IMat) -> IMat {
    let n = if a.is_empty() { 0 } else { a[0].len() };
    if n == 0 {
        return vec![];
    }
    let t: IMat = (0..n)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect();
    let (h, u) = hnf_rows(&t);
    let mut basis: IMat = h
        .iter()
        .enumerate()
        .filter(|(_, row)| row.iter().all(|x| x.is_zero()))
        .map(|(i, _)| u[i].clone())
        .collect();
    if !basis.is_empty() {
        let (hb, _) = hnf_rows(&basis);
        basis = hb
            .into_iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
    }
    basis
}

/// Basis of the saturation span_Q(rows) ∩ Z^n.
pub fn saturate_rowspace(rows: &IMat) -> IMat {
    let n = if rows.is_empty() { 0 } else { rows[0].len() };
    let orth = integer_kernel(rows);
    if orth.is_empty() {
        return identity(n);
    }
    integer_kernel(&orth)
}

/// Integer solution of `a x = b`, or None when none exists.
pub fn solve_integer(a: &IMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if rows == 0 {
        return Some(vec![]);
    }
    let t: IMat = (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect();
    let (h, u) = hnf_rows(&t);
    // Columns of A*U^T are the rows of h; match pivots against b in order.
    let mut y = vec![BigInt::zero(); h.len()];
    let mut rem: Vec<BigInt> = b.to_vec();
    for (j, hrow) in h.iter().enumerate() {
        if let Some(p) = hrow.iter().position(|x| !x.is_zero()) {
            let (q, r) = rem[p].div_rem(&hrow[p]);
            if !r.is_zero() {
                return None;
            }
            y[j] = q.clone();
            for k in 0..rows {
                let s = &hrow[k] * &q;
                rem[k] = &rem[k] - s;
            }
        }
    }
    if rem.iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![BigInt::zero(); cols];
    for (j, yr) in y.iter().enumerate() {
        if !yr.is_zero() {
            for k in 0..cols {
                let s = &u[j][k] * yr;
                x[k] = &x[k] + s;
            }
        }
    }
    Some(x)
}

/// Diagonal of the Smith normal form (nonzero entries only).
pub fn smith_diagonal(a: &IMat) -> Vec<BigInt> {
    let mut m = a.clone();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut top = 0;
    let mut left = 0;
    while top < rows && left < cols {
        let mut best: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in left..cols {
                if !m[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(top, bi);
        for row in m.iter_mut() {
            row.swap(left, bj);
        }
        let mut dirty = false;
        for i in top + 1..rows {
            if !m[i][left].is_zero() {
                let q = m[i][left].div_floor(&m[top][left]);
                for j in left..cols {
                    let s = &m[top][j] * &q;
                    m[i][j] = &m[i][j] - s;
                }
                if !m[i][left].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in left + 1..cols {
            if !m[top][j].is_zero() {
                let q = m[top][j].div_floor(&m[top][left]);
                for i in top..rows {
                    let s = &m[i][left] * &q;
                    m[i][j] = &m[i][j] - s;
                }
                if !m[top][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        diag.push(m[top][left].abs());
        top += 1;
        left += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = if g.is_zero() {
                BigInt::zero()
            } else {
                (&diag[i] * &diag[j]) / &g
            };
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// Given rows forming a basis of a saturated rank-k sublattice of Z^n,
/// return an n x n unimodular matrix whose first k rows are exactly `rows`.
pub fn complete_to_unimodular(rows: &IMat) -> Option<IMat> {
    let k = rows.len();
    if k == 0 {
        return None;
    }
    let n = rows[0].len();
    if k > n {
        return None;
    }
    // Column-reduce `rows` to a unit staircase while accumulating the inverse
    // of the column operations as row operations on qinv.
    let mut b = rows.clone();
    let mut qinv = identity(n);
    let swap_cols = |b: &mut IMat, qinv: &mut IMat, i: usize, j: usize| {
        if i != j {
            for row in b.iter_mut() {
                row.swap(i, j);
            }
            qinv.swap(i, j);
        }
    };
    for r in 0..k {
        let col = r;
        loop {
            let nz: Vec<usize> = (col..n).filter(|&j| !b[r][j].is_zero()).collect();
            if nz.is_empty() {
                return None;
            }
            let p = *nz.iter().min_by_key(|&&j| b[r][j].abs()).unwrap();
            swap_cols(&mut b, &mut qinv, col, p);
            if b[r][col].is_negative() {
                for row in b.iter_mut() {
                    row[col] = -row[col].clone();
                }
                for x in qinv[col].iter_mut() {
                    *x = -&*x;
                }
            }
            let others: Vec<usize> = (col + 1..n).filter(|&j| !b[r][j].is_zero()).collect();
            if others.is_empty() {
                break;
            }
            for j in others {
                let q = b[r][j].div_floor(&b[r][col]);
                if !q.is_zero() {
                    // col_j -= q * col_col; inverse: row_col of qinv += q * row_j.
                    for row in b.iter_mut() {
                        let s = &row[col] * &q;
                        row[j] = &row[j] - s;
                    }
                    let rj = qinv[j].clone();
                    for (x, y) in qinv[col].iter_mut().zip(rj.iter()) {
                        *x = &*x + &(y * &q);
                    }
                }
            }
        }
        if b[r][col] != BigInt::one() {
            return None; // not saturated / not primitive
        }
        for j in 0..col {
            if !b[r][j].is_zero() {
                let q = b[r][j].clone();
                for row in b.iter_mut() {
                    let s = &row[col] * &q;
                    row[j] = &row[j] - s;
                }
                let rj = qinv[j].clone();
                for (x, y) in qinv[col].iter_mut().zip(rj.iter()) {
                    *x = &*x + &(y * &q);
                }
            }
        }
    }
    let mut out = rows.clone();
    for row in qinv.iter().skip(k) {
        out.push(row.clone());
    }
    if determinant(&out).abs() != BigInt::one() {
        return None;
    }
    Some(out)
}

/// Determinant by rational elimination (small matrices only).
pub fn determinant(a: &IMat) -> BigInt {
    let n = a.len();
    let mut m = to_qmat(a);
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det *= m[c][c].clone();
        let inv = m[c][c].clone();
        for j in 0..n {
            m[c][j] = &m[c][j] / &inv;
        }
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let s = &m[c][j] * &f;
                    m[i][j] = &m[i][j] - s;
                }
            }
        }
    }
    debug_assert!(det.is_integer());
    det.to_integer()
}
