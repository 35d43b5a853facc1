//! Dense storage for one time level of the transformed solution.

/// M x N array of transformed option values `u` at one time level.
///
/// Index `i` runs over the x-direction (log-moneyness), `j` over the
/// y-direction (scaled volatility). Storage is x-fastest so that x-lines
/// are contiguous in memory.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    m: usize,
    n: usize,
    data: Vec<f64>,
}

impl Field {
    pub fn zeros(m: usize, n: usize) -> Self {
        Field {
            m,
            n,
            data: vec![0.0; m * n],
        }
    }

    /// Number of nodes in the x-direction.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of nodes in the y-direction.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.m && j < self.n);
        self.data[j * self.m + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.m && j < self.n);
        self.data[j * self.m + i] = v;
    }

    /// The x-line at fixed `j` as a contiguous slice of length `m`.
    #[inline]
    pub fn row(&self, j: usize) -> &[f64] {
        &self.data[j * self.m..(j + 1) * self.m]
    }

    #[inline]
    pub fn row_mut(&mut self, j: usize) -> &mut [f64] {
        &mut self.data[j * self.m..(j + 1) * self.m]
    }

    #[inline]
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// First non-finite entry, if any, as `(i, j)`.
    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|v| !v.is_finite())
            .map(|k| (k % self.m, k / self.m))
    }

    /// Fill every node from a function of the node indices.
    pub fn fill_with(&mut self, mut f: impl FnMut(usize, usize) -> f64) {
        let m = self.m;
        for (k, v) in self.data.iter_mut().enumerate() {
            *v = f(k % m, k / m);
        }
    }

    /// Maximum absolute difference over inner nodes (walls excluded).
    pub fn max_abs_diff_inner(&self, other: &Field) -> f64 {
        assert_eq!((self.m, self.n), (other.m, other.n));
        let mut worst = 0.0f64;
        for j in 1..self.n - 1 {
            for i in 1..self.m - 1 {
                worst = worst.max((self.get(i, j) - other.get(i, j)).abs());
            }
        }
        worst
    }
}
