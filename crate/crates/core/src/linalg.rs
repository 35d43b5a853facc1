//! Tridiagonal factorisation and solve kernels with factor-once /
//! solve-many semantics, plus a small dense fallback used as a test oracle.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("singular or near-singular tridiagonal line: pivot {pivot:.3e} below floor {floor:.3e} at row {row}")]
    SingularLine { row: usize, pivot: f64, floor: f64 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Tridiagonal coefficient triple for one line.
///
/// `sub[0]` and `sup[n-1]` are ignored (kept zero by convention).
#[derive(Debug, Clone, PartialEq)]
pub struct TriDiag {
    pub sub: Vec<f64>,
    pub diag: Vec<f64>,
    pub sup: Vec<f64>,
}

impl TriDiag {
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>) -> Self {
        assert_eq!(sub.len(), diag.len());
        assert_eq!(sup.len(), diag.len());
        TriDiag { sub, diag, sup }
    }

    /// Identity matrix triple of size `n`.
    pub fn identity(n: usize) -> Self {
        TriDiag {
            sub: vec![0.0; n],
            diag: vec![1.0; n],
            sup: vec![0.0; n],
        }
    }

    /// Constant triple `(sub, diag, sup)` repeated over `n` rows.
    pub fn constant(n: usize, triple: (f64, f64, f64)) -> Self {
        let mut t = TriDiag {
            sub: vec![triple.0; n],
            diag: vec![triple.1; n],
            sup: vec![triple.2; n],
        };
        t.sub[0] = 0.0;
        t.sup[n - 1] = 0.0;
        t
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Largest coefficient magnitude, used for the pivot floor.
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for k in 0..self.len() {
            m = m.max(self.sub[k].abs()).max(self.diag[k].abs()).max(self.sup[k].abs());
        }
        m
    }

    /// Linear combination `alpha * self + beta * other`, entrywise.
    pub fn axpby(&self, alpha: f64, other: &TriDiag, beta: f64) -> TriDiag {
        let n = self.len();
        assert_eq!(n, other.len());
        let mut out = TriDiag::identity(n);
        for k in 0..n {
            out.sub[k] = alpha * self.sub[k] + beta * other.sub[k];
            out.diag[k] = alpha * self.diag[k] + beta * other.diag[k];
            out.sup[k] = alpha * self.sup[k] + beta * other.sup[k];
        }
        out
    }
}

/// Thomas-style LU factorisation of one tridiagonal line.
#[derive(Debug, Clone)]
pub struct TriFactor {
    /// Multipliers `l_k = sub_k / d_{k-1}`.
    low: Vec<f64>,
    /// Eliminated diagonal.
    piv: Vec<f64>,
    /// Original super-diagonal (unchanged by the elimination).
    sup: Vec<f64>,
    pivot_floor: f64,
}

/// Factor a tridiagonal line without pivot search.
///
/// Errors when an eliminated pivot drops below `1e-14` times the largest
/// coefficient magnitude of the line.
pub fn tri_factor(t: &TriDiag) -> Result<TriFactor, LinalgError> {
    let n = t.len();
    let floor = 1e-14 * t.max_abs();
    let mut low = vec![0.0; n];
    let mut piv = vec![0.0; n];
    piv[0] = t.diag[0];
    if piv[0].abs() < floor || piv[0] == 0.0 {
        return Err(LinalgError::SingularLine { row: 0, pivot: piv[0], floor });
    }
    for k in 1..n {
        low[k] = t.sub[k] / piv[k - 1];
        piv[k] = t.diag[k] - low[k] * t.sup[k - 1];
        if piv[k].abs() < floor || piv[k] == 0.0 {
            return Err(LinalgError::SingularLine { row: k, pivot: piv[k], floor });
        }
    }
    Ok(TriFactor { low, piv, sup: t.sup.clone(), pivot_floor: floor })
}

impl TriFactor {
    #[inline]
    pub fn len(&self) -> usize {
        self.piv.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.piv.is_empty()
    }

    pub fn pivot_floor(&self) -> f64 {
        self.pivot_floor
    }

    /// Solve in place: `rhs` is overwritten with the solution.
    pub fn solve_in_place(&self, rhs: &mut [f64]) {
        let n = self.len();
        debug_assert_eq!(rhs.len(), n);
        for k in 1..n {
            rhs[k] -= self.low[k] * rhs[k - 1];
        }
        rhs[n - 1] /= self.piv[n - 1];
        for k in (0..n - 1).rev() {
            rhs[k] = (rhs[k] - self.sup[k] * rhs[k + 1]) / self.piv[k];
        }
    }

    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>, LinalgError> {
        if rhs.len() != self.len() {
            return Err(LinalgError::LengthMismatch { expected: self.len(), got: rhs.len() });
        }
        let mut x = rhs.to_vec();
        self.solve_in_place(&mut x);
        Ok(x)
    }
}

/// Tridiagonal matrix-vector product `out = T x`.
pub fn tri_apply(t: &TriDiag, x: &[f64], out: &mut [f64]) {
    let n = t.len();
    debug_assert_eq!(x.len(), n);
    debug_assert_eq!(out.len(), n);
    if n == 1 {
        out[0] = t.diag[0] * x[0];
        return;
    }
    out[0] = t.diag[0] * x[0] + t.sup[0] * x[1];
    for k in 1..n - 1 {
        out[k] = t.sub[k] * x[k - 1] + t.diag[k] * x[k] + t.sup[k] * x[k + 1];
    }
    out[n - 1] = t.sub[n - 1] * x[n - 2] + t.diag[n - 1] * x[n - 1];
}

/// Small dense solver used as an independent oracle in tests.
///
/// Capped at `n <= 64`; not part of the production solve path.
pub mod dense {
    /// Solve `A x = b` by Gaussian elimination with partial pivoting.
    pub fn solve(a: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
        let n = b.len();
        assert!(n <= 64, "dense oracle capped at n <= 64");
        assert_eq!(a.len(), n);
        let mut m: Vec<Vec<f64>> = a
            .iter()
            .zip(b)
            .map(|(row, &bi)| {
                assert_eq!(row.len(), n);
                let mut r = row.clone();
                r.push(bi);
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .max_by(|&r1, &r2| m[r1][col].abs().total_cmp(&m[r2][col].abs()))
                .unwrap();
            m.swap(col, p);
            assert!(m[col][col] != 0.0, "dense oracle: singular matrix");
            for r in col + 1..n {
                let f = m[r][col] / m[col][col];
                for c in col..=n {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
        let mut x = vec![0.0; n];
        for r in (0..n).rev() {
            let mut s = m[r][n];
            for c in r + 1..n {
                s -= m[r][c] * x[c];
            }
            x[r] = s / m[r][r];
        }
        x
    }

    /// Expand a tridiagonal triple to a dense matrix.
    pub fn from_tridiag(t: &super::TriDiag) -> Vec<Vec<f64>> {
        let n = t.len();
        let mut a = vec![vec![0.0; n]; n];
        for k in 0..n {
            a[k][k] = t.diag[k];
            if k > 0 {
                a[k][k - 1] = t.sub[k];
            }
            if k + 1 < n {
                a[k][k + 1] = t.sup[k];
            }
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_solve_returns_input() {
        let t = TriDiag::identity(5);
        let f = tri_factor(&t).unwrap();
        let rhs = vec![1.0, -2.0, 3.5, 0.0, 7.0];
        assert_eq!(f.solve(&rhs).unwrap(), rhs);
    }

    #[test]
    fn laplacian_small_matches_dense_oracle() {
        let t = TriDiag::constant(3, (1.0, -2.0, 1.0));
        let f = tri_factor(&t).unwrap();
        // rhs (1,0,1): dense oracle gives (-1,-1,-1)
        let x = f.solve(&[1.0, 0.0, 1.0]).unwrap();
        let xd = dense::solve(&dense::from_tridiag(&t), &[1.0, 0.0, 1.0]);
        for (a, b) in x.iter().zip(&xd) {
            assert!((a - b).abs() < 1e-12);
        }
        for a in &x {
            assert!((a + 1.0).abs() < 1e-12);
        }
        // rhs of all ones gives (-1.5, -2, -1.5)
        let x1 = f.solve(&[1.0, 1.0, 1.0]).unwrap();
        for (a, b) in x1.iter().zip(&[-1.5, -2.0, -1.5]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_diagonal_is_singular() {
        let t = TriDiag::constant(4, (1.0, 0.0, 1.0));
        assert!(matches!(tri_factor(&t), Err(LinalgError::SingularLine { .. })));
    }

    #[test]
    fn solve_of_consistent_rhs_recovers_ones() {
        let t = TriDiag::constant(50, (1.0, -4.0, 1.5));
        let ones = vec![1.0; 50];
        let mut rhs = vec![0.0; 50];
        tri_apply(&t, &ones, &mut rhs);
        let f = tri_factor(&t).unwrap();
        let x = f.solve(&rhs).unwrap();
        for v in x {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_rhs_gives_zero() {
        let t = TriDiag::constant(8, (0.3, 2.0, -0.4));
        let f = tri_factor(&t).unwrap();
        let x = f.solve(&vec![0.0; 8]).unwrap();
        assert!(x.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let t = TriDiag::identity(4);
        let f = tri_factor(&t).unwrap();
        assert!(matches!(f.solve(&[1.0; 3]), Err(LinalgError::LengthMismatch { .. })));
    }

    #[test]
    fn tri_apply_laplacian_on_ones() {
        let t = TriDiag::constant(5, (1.0, -2.0, 1.0));
        let mut out = vec![0.0; 5];
        tri_apply(&t, &[1.0; 5], &mut out);
        assert_eq!(out, vec![-1.0, 0.0, 0.0, 0.0, -1.0]);
    }

    proptest! {
        #[test]
        fn random_dominant_lines_match_dense(
            n in 2usize..32,
            seed_sub in proptest::collection::vec(-1.0f64..1.0, 32),
            seed_sup in proptest::collection::vec(-1.0f64..1.0, 32),
            seed_rhs in proptest::collection::vec(-10.0f64..10.0, 32),
        ) {
            let mut t = TriDiag::identity(n);
            for k in 0..n {
                t.sub[k] = if k > 0 { seed_sub[k] } else { 0.0 };
                t.sup[k] = if k + 1 < n { seed_sup[k] } else { 0.0 };
                t.diag[k] = 3.0 + t.sub[k].abs() + t.sup[k].abs();
            }
            let rhs = &seed_rhs[..n];
            let f = tri_factor(&t).unwrap();
            let x = f.solve(rhs).unwrap();
            let xd = dense::solve(&dense::from_tridiag(&t), rhs);
            for (a, b) in x.iter().zip(&xd) {
                prop_assert!((a - b).abs() < 1e-10);
            }
            // residual check
            let mut ax = vec![0.0; n];
            tri_apply(&t, &x, &mut ax);
            let rhs_norm = rhs.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
            for (r, b) in ax.iter().zip(rhs) {
                prop_assert!((r - b).abs() <= 1e-10 * rhs_norm);
            }
        }
    }
}
