//! Exact dense linear algebra over the rationals and the integers.
//!
//! Everything here is deterministic: pivot choices depend only on entry
//! values and positions, never on hashing or timing.

use crate::rat::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Mat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn mat_vec(m: &Mat, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    if n == 0 || b.is_empty() {
        return vec![Vec::new(); n];
    }
    let p = b[0].len();
    let mut out = vec![vec![Q::zero(); p]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += aik * &b[k][j];
            }
        }
    }
    out
}

pub fn transpose(m: &Mat) -> Mat {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Determinant by exact Gaussian elimination.
pub fn det(m: &Mat) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = Q::one();
    let mut result = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(piv, col);
            sign = -sign;
        }
        let p = a[col][col].clone();
        result *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    sign * result
}

/// Solve `A x = b` for square invertible `A`. Returns `None` when singular.
pub fn solve(a: &Mat, b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(piv, col);
        let p = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let cols: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let e: Vec<Q> = (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect();
            solve(a, &e)
        })
        .collect::<Option<_>>()?;
    Some(transpose(&cols))
}

/// Rank by exact elimination.
pub fn rank(m: &Mat) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a = m.to_vec();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(piv, r);
        let p = a[r][c].clone();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &p;
            for j in c..cols {
                let sub = &f * &a[r][j];
                a[i][j] -= sub;
            }
        }
        r += 1;
    }
    r
}

/// All leading principal minors are positive, i.e. symmetric `m` is positive
/// definite.
pub fn is_positive_definite(m: &Mat) -> bool {
    let n = m.len();
    for k in 1..=n {
        let sub: Mat = (0..k).map(|i| m[i][..k].to_vec()).collect();
        if !det(&sub).is_positive() {
            return false;
        }
    }
    true
}

fn clear_row_denominators(row: &[Q]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn reduce_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// Basis of the rational nullspace `{x : M x = 0}` as primitive integer
/// vectors with first nonzero entry positive, one per free column in
/// ascending column order.
///
/// Elimination is integer-preserving: rows are cleared of denominators up
/// front and updated by cross-multiplication followed by a gcd reduction.
pub fn nullspace(m: &Mat) -> Vec<Vec<BigInt>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| clear_row_denominators(r)).collect();
    let rows = a.len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Smallest nonzero pivot keeps intermediate entries small.
        let piv = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].magnitude().clone());
        let Some(piv) = piv else { continue };
        a.swap(piv, r);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let g = a[r][c].gcd(&a[i][c]);
            let fr = &a[i][c] / &g;
            let fi = &a[r][c] / &g;
            for j in c..cols {
                a[i][j] = &a[i][j] * &fi - &a[r][j] * &fr;
            }
            reduce_row(&mut a[i]);
        }
        pivot_col_of_row.push(c);
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let is_pivot = |c: usize| pivot_cols.contains(&c);

    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot(c)) {
        // Back-substitute over Q, then clear to a primitive integer vector.
        let mut x = vec![Q::zero(); cols];
        x[free] = Q::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate().rev() {
            let mut s = Q::zero();
            for c in pc + 1..cols {
                if !a[row][c].is_zero() && !x[c].is_zero() {
                    s += Q::from_integer(a[row][c].clone()) * &x[c];
                }
            }
            x[pc] = -s / Q::from_integer(a[row][pc].clone());
        }
        basis.push(primitive_integer(&x));
    }
    basis
}

/// Scale a rational vector to a primitive integer vector whose first nonzero
/// entry is positive. The zero vector maps to itself.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    let mut ints = clear_row_denominators(v);
    reduce_row(&mut ints);
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    ints
}

/// Z-basis of the integer kernel `{x ∈ Z^n : M x = 0}` for an integer matrix.
///
/// Column-reduces `[M; I]` with unimodular column operations; the kernel
/// basis is read off under the zero columns of the reduced `M`.
pub fn integer_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if m.is_empty() {
        return Vec::new();
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    // u is stored column-major: u[c] is the c-th column of the transform.
    let mut lead = 0usize;
    for r in 0..rows {
        if lead == cols {
            break;
        }
        loop {
            // Find the column with the smallest nonzero entry in row r.
            let piv = (lead..cols)
                .filter(|&c| !a[r][c].is_zero())
                .min_by_key(|&c| a[r][c].magnitude().clone());
            let Some(piv) = piv else { break };
            for row in a.iter_mut() {
                row.swap(piv, lead);
            }
            u.swap(piv, lead);
            let mut done = true;
            for c in lead + 1..cols {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &a[r][lead];
                for row in a.iter_mut() {
                    let sub = &f * &row[lead];
                    row[c] -= sub;
                }
                let (ul, uc) = {
                    let f = f.clone();
                    (u[lead].clone(), f)
                };
                for (x, y) in u[c].iter_mut().zip(ul.iter()) {
                    *x -= &uc * y;
                }
                if !a[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                lead += 1;
                break;
            }
        }
    }
    // Kernel columns: those whose a-column is entirely zero.
    let mut out = Vec::new();
    for c in 0..cols {
        if (0..rows).all(|r| a[r][c].is_zero()) {
            out.push(u[c].clone());
        }
    }
    out
}
