//! Exact linear algebra over GF(q): reduced row echelon form, rank,
//! kernels and solving.
//!
//! Everything is deterministic: elimination always picks the first
//! non-zero entry as pivot, pivots are normalized to 1, and kernels come
//! back in reduced echelon form, so equal inputs give identical outputs
//! and subspace equality is plain sequence equality.

use crate::gf::{Fe, Field};

/// A dense row-major matrix over GF(q).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixGF {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Fe>,
}

impl MatrixGF {
    pub fn new(rows: usize, cols: usize, data: Vec<Fe>) -> MatrixGF {
        assert_eq!(rows * cols, data.len());
        MatrixGF { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> MatrixGF {
        MatrixGF {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<Fe>]) -> MatrixGF {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        MatrixGF { rows: r, cols: c, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut out = MatrixGF::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    /// Matrix-vector product M v.
    pub fn mul_vec(&self, v: &[Fe], f: &Field) -> Vec<Fe> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Fe::ZERO, |acc, (&m, &x)| f.add(acc, f.mul(m, x)))
            })
            .collect()
    }
}

/// Reduce `m` in place to reduced row echelon form.
/// Returns the rank and the pivot column indices.
pub fn rref(m: &mut MatrixGF, f: &Field) -> (usize, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pivot_row) = (r..m.rows).find(|&i| !m.at(i, col).is_zero()) else {
            continue;
        };
        if pivot_row != r {
            for j in 0..m.cols {
                let tmp = m.at(r, j);
                m.set(r, j, m.at(pivot_row, j));
                m.set(pivot_row, j, tmp);
            }
        }
        let scale = f.inv(m.at(r, col)).expect("pivot is non-zero");
        for j in 0..m.cols {
            m.set(r, j, f.mul(m.at(r, j), scale));
        }
        for i in 0..m.rows {
            if i != r && !m.at(i, col).is_zero() {
                let factor = m.at(i, col);
                for j in 0..m.cols {
                    let v = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
                    m.set(i, j, v);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (r, pivots)
}

/// Row rank by Gaussian elimination with exact field arithmetic.
pub fn rank(m: &MatrixGF, f: &Field) -> usize {
    let mut work = m.clone();
    rref(&mut work, f).0
}

/// A basis of the right kernel {v : M v = 0}, in reduced echelon form.
/// The basis has cols - rank(M) vectors.
pub fn kernel_basis(m: &MatrixGF, f: &Field) -> Vec<Vec<Fe>> {
    let mut work = m.clone();
    let (_, pivots) = rref(&mut work, f);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Fe::ZERO; m.cols];
        v[free] = Fe::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(work.at(r, free));
        }
        basis.push(v);
    }
    if basis.is_empty() {
        return basis;
    }
    let mut bm = MatrixGF::from_rows(&basis);
    let (rank, _) = rref(&mut bm, f);
    debug_assert_eq!(rank, basis.len());
    (0..rank).map(|i| bm.row(i).to_vec()).collect()
}

/// Any solution x of A x = b, or None when the system is inconsistent.
pub fn solve(a: &MatrixGF, b: &[Fe], f: &Field) -> Option<Vec<Fe>> {
    assert_eq!(b.len(), a.rows);
    let mut aug = MatrixGF::zero(a.rows, a.cols + 1);
    for (i, &bi) in b.iter().enumerate() {
        for j in 0..a.cols {
            aug.set(i, j, a.at(i, j));
        }
        aug.set(i, a.cols, bi);
    }
    let (_, pivots) = rref(&mut aug, f);
    if pivots.contains(&a.cols) {
        return None; // a pivot in the augmented column
    }
    let mut x = vec![Fe::ZERO; a.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(r, a.cols);
    }
    debug_assert_eq!(
        a.mul_vec(&x, f)
            .iter()
            .zip(b)
            .filter(|(l, r)| l != r)
            .count(),
        0
    );
    Some(x)
}

/// Echelonize a list of vectors, dropping dependent ones.
/// Returns the reduced echelon basis of their span.
pub fn echelon_basis(vectors: &[Vec<Fe>], f: &Field) -> Vec<Vec<Fe>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = MatrixGF::from_rows(vectors);
    let (rank, _) = rref(&mut m, f);
    (0..rank).map(|i| m.row(i).to_vec()).collect()
}

impl std::fmt::Display for MatrixGF {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(vals: &[u8]) -> Vec<Fe> {
        vals.iter().map(|&v| Fe(v)).collect()
    }

    #[test]
    fn rank_identity_and_zero() {
        let f = Field::new(2, 1).unwrap();
        let id = MatrixGF::from_rows(&[fe(&[1, 0, 0]), fe(&[0, 1, 0]), fe(&[0, 0, 1])]);
        assert_eq!(rank(&id, &f), 3);
        let z = MatrixGF::zero(3, 3);
        assert_eq!(rank(&z, &f), 0);
    }

    // Exhaustive independence oracle: rows are independent over GF(q)
    // iff no non-trivial combination vanishes.
    fn independent_by_enumeration(rows: &[Vec<Fe>], f: &Field) -> bool {
        let q = f.q() as u64;
        let n = rows.len() as u32;
        for combo in 1..q.pow(n) {
            let mut c = combo;
            let mut acc = vec![Fe::ZERO; rows[0].len()];
            for row in rows {
                let coeff = f.elem(c % q);
                c /= q;
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = f.add(*a, f.mul(coeff, r));
                }
            }
            if acc.iter().all(|e| e.is_zero()) {
                return false;
            }
        }
        true
    }

    #[test]
    fn rank_of_dependent_rows_over_gf3() {
        // (1,2) and (2,1) over GF(3): 2*(1,2) = (2,4) = (2,1), so the rows
        // are dependent and the rank is 1. The enumeration oracle agrees.
        let f = Field::new(3, 1).unwrap();
        let rows = vec![fe(&[1, 2]), fe(&[2, 1])];
        assert!(!independent_by_enumeration(&rows, &f));
        let m = MatrixGF::from_rows(&rows);
        assert_eq!(rank(&m, &f), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let f = Field::new(2, 1).unwrap();
        let id = MatrixGF::from_rows(&[fe(&[1, 0]), fe(&[0, 1])]);
        assert!(kernel_basis(&id, &f).is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let f = Field::new(2, 1).unwrap();
        let z = MatrixGF::zero(2, 2);
        let k = kernel_basis(&z, &f);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], fe(&[1, 0]));
        assert_eq!(k[1], fe(&[0, 1]));
    }

    #[test]
    fn kernel_of_parity_row() {
        // kernel of (1,1,0) over GF(2), cross-checked by enumerating all
        // 8 vectors and echelonizing the 4 solutions
        let f = Field::new(2, 1).unwrap();
        let m = MatrixGF::from_rows(&[fe(&[1, 1, 0])]);
        let k = kernel_basis(&m, &f);
        assert_eq!(k, vec![fe(&[1, 1, 0]), fe(&[0, 0, 1])]);

        let mut sols = Vec::new();
        for bits in 0..8u8 {
            let v = fe(&[bits & 1, (bits >> 1) & 1, (bits >> 2) & 1]);
            if m.mul_vec(&v, &f).iter().all(|e| e.is_zero()) && bits != 0 {
                sols.push(v);
            }
        }
        assert_eq!(sols.len(), 3);
        assert_eq!(echelon_basis(&sols, &f), k);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = Field::new(3, 1).unwrap();
        let a = MatrixGF::from_rows(&[fe(&[1, 2]), fe(&[0, 1])]);
        let x = solve(&a, &fe(&[0, 1]), &f).unwrap();
        assert_eq!(a.mul_vec(&x, &f), fe(&[0, 1]));

        // (1,2) and (2,1) are dependent over GF(3); an inconsistent rhs
        let a = MatrixGF::from_rows(&[fe(&[1, 2]), fe(&[2, 1])]);
        assert!(solve(&a, &fe(&[1, 0]), &f).is_none());
    }

    #[test]
    fn kernel_vectors_annihilate_and_dimensions_add_up() {
        // rank + |kernel| = cols on a deterministic sweep of small matrices
        for (p, h) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
            let f = Field::new(p, h).unwrap();
            let q = f.q() as u64;
            for seed in 0..200u64 {
                let rows = 2 + (seed % 3) as usize;
                let cols = 2 + (seed / 3 % 4) as usize;
                let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let mut data = Vec::with_capacity(rows * cols);
                for _ in 0..rows * cols {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    data.push(f.elem(state >> 33));
                }
                let m = MatrixGF::new(rows, cols, data);
                let r = rank(&m, &f);
                let k = kernel_basis(&m, &f);
                assert_eq!(r + k.len(), cols);
                for v in &k {
                    assert!(m.mul_vec(v, &f).iter().all(|e| e.is_zero()));
                }
                // canonical: recomputation yields the identical basis
                assert_eq!(kernel_basis(&m, &f), k);
                let _ = q;
            }
        }
    }
}
