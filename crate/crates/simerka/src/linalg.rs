//! Exact integer lattice kernels: Hermite and Smith normal forms of the
//! relation matrices. All arithmetic is arbitrary precision; a modular rank
//! pre-check keeps obviously deficient systems cheap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;

pub(crate) type Mat = Vec<Vec<BigInt>>;

pub(crate) fn from_rows(rows: &[Vec<i64>]) -> Mat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Row-style Hermite normal form: returns the echelon basis and the pivot
/// column of each basis row. Pivots are positive and entries above each
/// pivot are reduced into `[0, pivot)`.
pub(crate) fn hnf(mut m: Mat) -> (Mat, Vec<usize>) {
    let rows = m.len();
    if rows == 0 {
        return (m, Vec::new());
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // gcd-eliminate column c among rows r..
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !m[i][c].is_zero()
                    && best.map_or(true, |b| m[i][c].magnitude() < m[b][c].magnitude())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut any = false;
            for i in (r + 1)..rows {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let t = &m[i][j] - &q * &m[r][j];
                            m[i][j] = t;
                        }
                    }
                    if !m[i][c].is_zero() {
                        any = true;
                    }
                }
            }
            if !any {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for j in 0..cols {
                m[r][j] = -&m[r][j];
            }
        }
        // reduce the rows above into [0, pivot)
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if !q.is_zero() {
                for j in 0..cols {
                    let t = &m[i][j] - &q * &m[r][j];
                    m[i][j] = t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Lattice index (product of HNF pivots); `None` unless the lattice has
/// full column rank.
pub(crate) fn lattice_determinant(rows: &[Vec<i64>], cols: usize) -> Option<BigInt> {
    if rows.len() < cols {
        return None;
    }
    if rank_mod_p(rows, cols) < cols {
        return None;
    }
    let (h, pivots) = hnf(from_rows(rows));
    if pivots.len() < cols {
        return None;
    }
    let mut det = BigInt::one();
    for (i, &c) in pivots.iter().enumerate() {
        det *= &h[i][c];
    }
    Some(det)
}

/// Rank over a random word-size prime; an upper bound for the rational rank
/// that is almost surely exact, used to skip hopeless HNF runs.
pub(crate) fn rank_mod_p(rows: &[Vec<i64>], cols: usize) -> usize {
    const P: u64 = 0xffff_ffff_ffff_ffc5; // largest 64-bit prime
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| (x as i128).rem_euclid(P as i128) as u64)
                .collect()
        })
        .collect();
    let rows_n = m.len();
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == rows_n {
            break;
        }
        let Some(pivot) = (rank..rows_n).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][c], P);
        for i in (rank + 1)..rows_n {
            if m[i][c] != 0 {
                let factor = arith::mul_mod_u64(m[i][c], inv, P);
                for j in c..cols {
                    let sub = arith::mul_mod_u64(factor, m[rank][j], P);
                    m[i][j] = (m[i][j] + P - sub) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    arith::pow_mod_u64(a, p - 2, p)
}

/// Is `v` in the row lattice described by an HNF basis?
pub(crate) fn in_lattice(h: &Mat, pivots: &[usize], v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for (i, &c) in pivots.iter().enumerate() {
        if v[c].is_zero() {
            continue;
        }
        let (q, r) = v[c].div_rem(&h[i][c]);
        if !r.is_zero() {
            return false;
        }
        for j in 0..v.len() {
            let t = &v[j] - &q * &h[i][j];
            v[j] = t;
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Diagonal of the Smith normal form, restricted to the nontrivial entries
/// (d1 | d2 | ...). The input rows generate the lattice; entries equal to 1
/// are dropped, zeros (rank deficiency) are kept at the end.
pub(crate) fn snf_divisors(m: Mat) -> Vec<BigInt> {
    let mut m = m;
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let n = rows.min(cols);
    let mut diag = Vec::new();
    let mut t = 0usize;
    'outer: while t < n {
        // find a nonzero pivot in the remaining submatrix
        let mut found = false;
        'search: for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() {
                    m.swap(t, i);
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            break 'outer;
        }
        loop {
            // clear column t with row operations
            let mut dirty = false;
            for i in (t + 1)..rows {
                if !m[i][t].is_zero() {
                    if (&m[i][t] % &m[t][t]).is_zero() {
                        let q = &m[i][t] / &m[t][t];
                        for j in t..cols {
                            let x = &m[i][j] - &q * &m[t][j];
                            m[i][j] = x;
                        }
                    } else {
                        // replace pivot by gcd via a Euclidean swap
                        let q = m[i][t].div_floor(&m[t][t]);
                        for j in t..cols {
                            let x = &m[i][j] - &q * &m[t][j];
                            m[i][j] = x;
                        }
                        m.swap(t, i);
                        dirty = true;
                    }
                }
            }
            // clear row t with column operations
            for j in (t + 1)..cols {
                if !m[t][j].is_zero() {
                    if (&m[t][j] % &m[t][t]).is_zero() {
                        let q = &m[t][j] / &m[t][t];
                        for i in t..rows {
                            let x = &m[i][j] - &q * &m[i][t];
                            m[i][j] = x;
                        }
                    } else {
                        let q = m[t][j].div_floor(&m[t][t]);
                        for i in t..rows {
                            let x = &m[i][j] - &q * &m[i][t];
                            m[i][j] = x;
                        }
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
            let col_clear = ((t + 1)..rows).all(|i| m[i][t].is_zero());
            let row_clear = ((t + 1)..cols).all(|j| m[t][j].is_zero());
            if col_clear && row_clear && !dirty {
                break;
            }
        }
        // enforce divisibility of the remaining block by the pivot
        let pivot = m[t][t].clone();
        for i in (t + 1)..rows {
            for j in (t + 1)..cols {
                if !(&m[i][j] % &pivot).is_zero() {
                    // fold row i into row t and redo this pivot
                    for j2 in t..cols {
                        let x = &m[t][j2] + &m[i][j2];
                        m[t][j2] = x;
                    }
                    continue 'outer;
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag.retain(|d| !d.is_one());
    diag
}
