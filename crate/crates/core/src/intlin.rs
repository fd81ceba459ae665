//! Exact linear algebra over the integers and rationals.
//!
//! Small dense matrices only (rank <= 8 throughout the crate), so the
//! implementations favour clarity over asymptotics. Pivoting rules are
//! deterministic: smallest nonzero absolute value wins, ties by row order.

use crate::rat::Rat;
use num_traits::{One, Signed, Zero};

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
/// Returns `None` for singular input.
pub fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let pv = a[col][col];
        for x in a[col].iter_mut() {
            *x /= pv;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col];
                for j in 0..2 * n {
                    let t = a[col][j] * f;
                    a[row][j] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| crate::rat::dot(row, v)).collect()
}

/// Determinant of an integer matrix, by exact rational elimination.
pub fn det_int(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut b: Vec<Vec<Rat>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Rat::from_integer(x as i128)).collect())
        .collect();
    let mut d = Rat::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !b[r][col].is_zero()) {
            Some(p) => p,
            None => return 0,
        };
        if pivot != col {
            b.swap(col, pivot);
            d = -d;
        }
        let pv = b[col][col];
        d *= pv;
        for row in col + 1..n {
            if !b[row][col].is_zero() {
                let f = b[row][col] / pv;
                for j in col..n {
                    let t = b[col][j] * f;
                    b[row][j] -= t;
                }
            }
        }
    }
    debug_assert!(d.denom().is_one());
    *d.numer()
}

/// Smith normal form of an integer matrix: unimodular `u`, `v` with
/// `u * a * v = diag(d)` and each `d[i]` dividing `d[i+1]`.
pub struct Snf {
    pub d: Vec<i128>,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
}

pub fn smith_normal_form(a: &[Vec<i64>]) -> Snf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..rows).map(|j| (i == j) as i128).collect())
        .collect();
    let mut v: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| (i == j) as i128).collect())
        .collect();

    let mut t = 0;
    while t < rows.min(cols) {
        // deterministic pivot: smallest |entry| > 0 in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        m.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut m, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = div_round(m[i][t], m[t][t]);
                    row_axpy(&mut m, i, t, -q);
                    row_axpy(&mut u, i, t, -q);
                    if m[i][t] != 0 {
                        m.swap(t, i);
                        u.swap(t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = div_round(m[t][j], m[t][t]);
                    col_axpy(&mut m, j, t, -q);
                    col_axpy(&mut v, j, t, -q);
                    if m[t][j] != 0 {
                        swap_cols(&mut m, t, j);
                        swap_cols(&mut v, t, j);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        t += 1;
    }

    // Make diagonal positive and enforce divisibility d[i] | d[i+1].
    let r = rows.min(cols);
    for i in 0..r {
        if m[i][i] < 0 {
            for j in 0..cols {
                m[i][j] = -m[i][j];
            }
            for x in u[i].iter_mut() {
                *x = -*x;
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..r.saturating_sub(1) {
            let (a_, b_) = (m[i][i], m[i + 1][i + 1]);
            if a_ != 0 && b_ % a_ != 0 {
                // standard 2x2 fix-up: add col i+1 to col i, re-reduce
                col_axpy(&mut m, i, i + 1, 1);
                col_axpy(&mut v, i, i + 1, 1);
                // clear the off-diagonal it creates
                let q = div_round(m[i + 1][i], m[i][i]);
                let _ = q;
                // full re-elimination of the 2x2 block
                loop {
                    if m[i + 1][i] == 0 {
                        break;
                    }
                    let q = div_round(m[i + 1][i], m[i][i]);
                    row_axpy(&mut m, i + 1, i, -q);
                    row_axpy(&mut u, i + 1, i, -q);
                    if m[i + 1][i] != 0 {
                        m.swap(i, i + 1);
                        u.swap(i, i + 1);
                    }
                }
                loop {
                    if m[i][i + 1] == 0 {
                        break;
                    }
                    let q = div_round(m[i][i + 1], m[i][i]);
                    col_axpy(&mut m, i + 1, i, -q);
                    col_axpy(&mut v, i + 1, i, -q);
                    if m[i][i + 1] != 0 {
                        swap_cols(&mut m, i, i + 1);
                        swap_cols(&mut v, i, i + 1);
                    }
                }
                if m[i][i] < 0 {
                    for j in 0..cols {
                        m[i][j] = -m[i][j];
                    }
                    for x in u[i].iter_mut() {
                        *x = -*x;
                    }
                }
                if m[i + 1][i + 1] < 0 {
                    for j in 0..cols {
                        m[i + 1][j] = -m[i + 1][j];
                    }
                    for x in u[i + 1].iter_mut() {
                        *x = -*x;
                    }
                }
                changed = true;
            }
        }
    }

    let d = (0..r).map(|i| m[i][i]).collect();
    Snf { d, u, v }
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn row_axpy(m: &mut [Vec<i128>], dst: usize, src: usize, f: i128) {
    if f != 0 {
        for j in 0..m[dst].len() {
            m[dst][j] += f * m[src][j];
        }
    }
}

fn col_axpy(m: &mut [Vec<i128>], dst: usize, src: usize, f: i128) {
    if f != 0 {
        for row in m.iter_mut() {
            row[dst] += f * row[src];
        }
    }
}

/// Round-to-nearest division, so remainders shrink fast during elimination.
fn div_round(a: i128, b: i128) -> i128 {
    let q = a.div_euclid(b);
    let r = a.rem_euclid(b);
    if 2 * r.abs() > b.abs() {
        q + b.signum()
    } else {
        q
    }
}

/// Lower-triangular column Hermite basis of the lattice spanned by the
/// columns of `basis` (full rank required). Column `j` has its first
/// nonzero entry on row `j`, positive, with the entries left of each
/// diagonal reduced into `[0, diag)`.
pub fn hermite_lower(basis: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = basis.len();
    let mut cols: Vec<Vec<i128>> = (0..n)
        .map(|j| (0..n).map(|i| basis[i][j] as i128).collect())
        .collect();

    for row in 0..n {
        // gcd-out all columns >= row on this row
        loop {
            let mut nz: Vec<usize> = (row..n).filter(|&c| cols[c][row] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&c| (cols[c][row].abs(), c));
            let best = nz[0];
            for &c in nz.iter().skip(1) {
                let q = div_round(cols[c][row], cols[best][row]);
                for i in 0..n {
                    let t = q * cols[best][i];
                    cols[c][i] -= t;
                }
            }
        }
        let piv = (row..n)
            .find(|&c| cols[c][row] != 0)
            .expect("basis must have full rank");
        cols.swap(row, piv);
        if cols[row][row] < 0 {
            for x in cols[row].iter_mut() {
                *x = -*x;
            }
        }
        // reduce earlier columns on this row into [0, diag)
        let d = cols[row][row];
        for c in 0..row {
            let q = cols[c][row].div_euclid(d);
            if q != 0 {
                for i in 0..n {
                    let t = q * cols[row][i];
                    cols[c][i] -= t;
                }
            }
        }
    }
    // return as row-major matrix whose column j is cols[j]
    let mut h = vec![vec![0i128; n]; n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            h[i][j] = col[i];
        }
    }
    h
}

/// Canonical representative of `x` modulo the lattice with Hermite basis `h`
/// (as produced by [`hermite_lower`]). The result lies in the fundamental
/// box `0 <= r[i] < h[i][i]`.
pub fn reduce_mod(h: &[Vec<i128>], x: &[i64]) -> Vec<i64> {
    let n = h.len();
    let mut r: Vec<i128> = x.iter().map(|&v| v as i128).collect();
    for i in 0..n {
        let q = r[i].div_euclid(h[i][i]);
        if q != 0 {
            for k in 0..n {
                r[k] -= q * h[k][i];
            }
        }
    }
    r.iter().map(|&v| v as i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn invert_small() {
        let m = vec![vec![rat(2), rat(-1)], vec![rat(-2), rat(2)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0], vec![rat(1), ratio_half(1)]);
        assert_eq!(inv[1], vec![rat(1), rat(1)]);
    }

    fn ratio_half(n: i64) -> Rat {
        crate::rat::ratio(n, 2)
    }

    #[test]
    fn snf_d4_cartan() {
        // centre of Spin(8) is Z2 x Z2
        let c = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        let snf = smith_normal_form(&c);
        assert_eq!(snf.d, vec![1, 1, 2, 2]);
        // u * c * v = diag(d)
        let n = 4;
        let mut prod = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0i128;
                for k in 0..n {
                    for l in 0..n {
                        s += snf.u[i][k] * (c[k][l] as i128) * snf.v[l][j];
                    }
                }
                prod[i][j] = s;
            }
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(prod[i][j], if i == j { snf.d[i] } else { 0 });
            }
        }
    }

    #[test]
    fn snf_a3_cartan_is_z4() {
        let c = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        let snf = smith_normal_form(&c);
        assert_eq!(snf.d, vec![1, 1, 4]);
    }

    #[test]
    fn hermite_reduction_round_trip() {
        let basis = vec![vec![2, -1], vec![-2, 2]];
        let h = hermite_lower(&basis);
        // the basis vectors themselves reduce to zero
        assert_eq!(reduce_mod(&h, &[2, -2]), vec![0, 0]);
        assert_eq!(reduce_mod(&h, &[-1, 2]), vec![0, 0]);
        // reduction is idempotent
        let r = reduce_mod(&h, &[5, 3]);
        assert_eq!(reduce_mod(&h, &r), r);
    }

    #[test]
    fn det_matches_snf_product() {
        let c = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        let snf = smith_normal_form(&c);
        let prod: i128 = snf.d.iter().product();
        assert_eq!(det_int(&c).abs(), prod);
    }
}
