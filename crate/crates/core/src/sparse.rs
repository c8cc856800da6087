//! Compressed sparse row matrices and a preconditioned conjugate gradient
//! solver for symmetric positive definite systems.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    pub rows: usize,
    pub cols: usize,
    pub row_offsets: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub values: Vec<f64>,
}

impl CsrMatrix {
    /// Builds a matrix from `(row, col, value)` triplets. Duplicates are
    /// summed; entries that sum to exactly zero are dropped.
    pub fn from_triplets(rows: usize, cols: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        triplets.sort_by_key(|t| (t.0, t.1));
        let mut merged: Vec<(usize, usize, f64)> = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) out of bounds");
            match merged.last_mut() {
                Some(last) if (last.0, last.1) == (r, c) => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|t| t.2 != 0.0);

        let mut row_offsets = vec![0; rows + 1];
        for &(r, _, _) in &merged {
            row_offsets[r + 1] += 1;
        }
        for i in 0..rows {
            row_offsets[i + 1] += row_offsets[i];
        }
        CsrMatrix {
            rows,
            cols,
            row_offsets,
            col_indices: merged.iter().map(|t| t.1).collect(),
            values: merged.iter().map(|t| t.2).collect(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let span = self.row_offsets[i]..self.row_offsets[i + 1];
        self.col_indices[span.clone()]
            .iter()
            .copied()
            .zip(self.values[span].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.row(i).find(|&(c, _)| c == j).map_or(0.0, |(_, v)| v)
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, i)).collect()
    }

    pub fn mul_vec_into(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.cols);
        assert_eq!(y.len(), self.rows);
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row(i).map(|(c, v)| v * x[c]).sum();
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.rows];
        self.mul_vec_into(x, &mut y);
        y
    }

    /// `x^T A x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        dot(x, &self.mul_vec(x))
    }

    /// Largest `|a_ij - a_ji|` relative to the largest `|a_ij|`.
    pub fn symmetry_defect(&self) -> f64 {
        let scale = self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for (j, v) in self.row(i) {
                worst = worst.max((v - self.get(j, i)).abs());
            }
        }
        if scale > 0.0 {
            worst / scale
        } else {
            0.0
        }
    }

    /// Whether column indices strictly increase within every row.
    pub fn is_sorted(&self) -> bool {
        (0..self.rows).all(|i| {
            self.col_indices[self.row_offsets[i]..self.row_offsets[i + 1]]
                .windows(2)
                .all(|w| w[0] < w[1])
        })
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CgOutcome {
    pub iterations: usize,
    pub relative_residual: f64,
}

/// Solves `A x = b` for symmetric positive definite `A` by conjugate
/// gradients with a Jacobi preconditioner, starting from the contents of `x`.
///
/// Stops once `||b - A x|| <= rel_tol ||b||`. Fails with
/// [`Error::SingularSystem`] on a non-positive curvature direction or when
/// `max_iter` is exhausted.
pub fn conjugate_gradient(
    a: &CsrMatrix,
    b: &[f64],
    x: &mut [f64],
    rel_tol: f64,
    max_iter: usize,
) -> Result<CgOutcome> {
    let n = b.len();
    let b_norm = norm2(b);
    if b_norm == 0.0 {
        x.iter_mut().for_each(|v| *v = 0.0);
        return Ok(CgOutcome {
            iterations: 0,
            relative_residual: 0.0,
        });
    }
    let inv_diag: Vec<f64> = a
        .diagonal()
        .into_iter()
        .map(|d| if d > 0.0 { 1.0 / d } else { 1.0 })
        .collect();

    let mut r = a.mul_vec(x);
    for (ri, bi) in r.iter_mut().zip(b) {
        *ri = bi - *ri;
    }
    let mut z: Vec<f64> = r.iter().zip(&inv_diag).map(|(r, d)| r * d).collect();
    let mut p = z.clone();
    let mut ap = vec![0.0; n];
    let mut rz = dot(&r, &z);
    let target = rel_tol * b_norm;

    for it in 0..=max_iter {
        let res = norm2(&r);
        if res <= target {
            return Ok(CgOutcome {
                iterations: it,
                relative_residual: res / b_norm,
            });
        }
        if it == max_iter {
            break;
        }
        a.mul_vec_into(&p, &mut ap);
        let pap = dot(&p, &ap);
        if pap.is_nan() || pap <= 0.0 {
            return Err(Error::SingularSystem {
                iterations: it,
                residual: res / b_norm,
            });
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        for i in 0..n {
            z[i] = r[i] * inv_diag[i];
        }
        let rz_next = dot(&r, &z);
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(Error::SingularSystem {
        iterations: max_iter,
        residual: norm2(&r) / b_norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn laplacian_1d(n: usize) -> CsrMatrix {
        let mut t = Vec::new();
        for i in 0..n {
            t.push((i, i, 2.0));
            if i > 0 {
                t.push((i, i - 1, -1.0));
            }
            if i + 1 < n {
                t.push((i, i + 1, -1.0));
            }
        }
        CsrMatrix::from_triplets(n, n, t)
    }

    #[test]
    fn triplets_are_summed_and_sorted() {
        let m = CsrMatrix::from_triplets(
            2,
            3,
            vec![
                (1, 2, 1.0),
                (0, 1, 2.0),
                (1, 0, 3.0),
                (0, 1, 0.5),
                (1, 2, -1.0),
            ],
        );
        assert_eq!(m.row_offsets, vec![0, 1, 2]);
        assert_eq!(m.col_indices, vec![1, 0]);
        assert_eq!(m.values, vec![2.5, 3.0]);
        assert!(m.is_sorted());
        assert_eq!(m.get(1, 2), 0.0);
    }

    #[test]
    fn cancelled_entries_mid_row_are_dropped() {
        let m = CsrMatrix::from_triplets(
            2,
            2,
            vec![(0, 0, 1.0), (0, 0, -1.0), (0, 1, 4.0), (1, 1, 1.0)],
        );
        assert_eq!(m.nnz(), 2);
        assert_eq!(m.row_offsets, vec![0, 1, 2]);
        assert_eq!(m.get(0, 1), 4.0);
    }

    #[test]
    fn cg_solves_tridiagonal() {
        let n = 50;
        let a = laplacian_1d(n);
        let exact: Vec<f64> = (0..n).map(|i| (i as f64 * 0.3).sin()).collect();
        let b = a.mul_vec(&exact);
        let mut x = vec![0.0; n];
        let out = conjugate_gradient(&a, &b, &mut x, 1e-13, 1000).unwrap();
        assert!(out.relative_residual <= 1e-13);
        for (u, v) in x.iter().zip(&exact) {
            assert_abs_diff_eq!(u, v, epsilon = 1e-9);
        }
    }

    #[test]
    fn cg_zero_rhs() {
        let a = laplacian_1d(4);
        let mut x = vec![1.0; 4];
        conjugate_gradient(&a, &[0.0; 4], &mut x, 1e-12, 10).unwrap();
        assert_eq!(x, vec![0.0; 4]);
    }

    #[test]
    fn cg_detects_indefinite() {
        let a = CsrMatrix::from_triplets(2, 2, vec![(0, 0, 1.0), (1, 1, -1.0)]);
        let mut x = vec![0.0; 2];
        assert!(matches!(
            conjugate_gradient(&a, &[0.0, 1.0], &mut x, 1e-12, 10),
            Err(Error::SingularSystem { .. })
        ));
    }
}
