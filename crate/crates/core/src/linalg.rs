//! Row reduction over a [`Field`] on plain `Vec<Vec<Elem>>` matrices.

use crate::galois::{Elem, Field};

/// Reduced row echelon form of the row space. Zero rows are dropped, so the
/// result has full row rank; returns the rows and their pivot columns.
pub fn rref(field: &Field, rows: &[Vec<Elem>], ncols: usize) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(m[r][c]);
        if inv != 1 {
            for x in m[r].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if y != 0 {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Vec<Elem>], ncols: usize) -> usize {
    rref(field, rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows.
pub fn nullspace(field: &Field, rows: &[Vec<Elem>], ncols: usize) -> Vec<Vec<Elem>> {
    let (r, pivots) = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = field.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Residue of `v` after clearing pivot columns against an RREF basis.
pub fn reduce(field: &Field, basis: &[Vec<Elem>], pivots: &[usize], v: &[Elem]) -> Vec<Elem> {
    let mut w = v.to_vec();
    for (row, &pc) in basis.iter().zip(pivots) {
        let c = w[pc];
        if c == 0 {
            continue;
        }
        for (x, &y) in w.iter_mut().zip(row) {
            if y != 0 {
                *x = field.sub(*x, field.mul(c, y));
            }
        }
    }
    w
}

pub fn in_span(field: &Field, basis: &[Vec<Elem>], pivots: &[usize], v: &[Elem]) -> bool {
    reduce(field, basis, pivots, v).iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_kernel_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let rows = vec![vec![1, 2], vec![2, 1]];
        let (r, piv) = rref(&f3, &rows, 2);
        assert_eq!(r, vec![vec![1, 2]]);
        assert_eq!(piv, vec![0]);
        let k = nullspace(&f3, &r, 2);
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f5 = Field::prime(5).unwrap();
        let rows = vec![vec![1, 2, 3, 4, 0], vec![0, 1, 1, 1, 1], vec![1, 3, 4, 0, 1]];
        let k = nullspace(&f5, &rows, 5);
        assert_eq!(k.len(), 5 - rank(&f5, &rows, 5));
        for v in &k {
            for row in &rows {
                let dot = row.iter().zip(v).fold(0, |acc, (&a, &b)| f5.add(acc, f5.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }
}
