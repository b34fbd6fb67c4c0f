//! Symmetric tridiagonal eigenpairs by Sturm-sequence bisection and a
//! twisted factorization for the eigenvector.

/// Symmetric tridiagonal matrix; `off[i]` couples rows `i` and `i + 1`.
#[derive(Debug, Clone)]
pub(crate) struct SymTridiag {
    diag: Vec<f64>,
    off: Vec<f64>,
    off_sq: Vec<f64>,
    pivmin: f64,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert!(!diag.is_empty());
        assert_eq!(off.len() + 1, diag.len());
        let off_sq: Vec<f64> = off.iter().map(|e| e * e).collect();
        let max_sq = off_sq.iter().copied().fold(1.0_f64, f64::max);
        SymTridiag {
            diag,
            off,
            off_sq,
            pivmin: f64::MIN_POSITIVE * max_sq,
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues below `x` (Sylvester inertia of `T - xI`). A zero
    /// pivot counts as negative, so an eigenvalue exactly at `x` is included.
    fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut d = self.diag[0] - x;
        if d.abs() < self.pivmin {
            d = -self.pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            d = (self.diag[i] - x) - self.off_sq[i - 1] / d;
            if d.abs() < self.pivmin {
                d = -self.pivmin;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        let pad = f64::EPSILON * lo.abs().max(hi.abs()) * n as f64 + self.pivmin;
        (lo - pad, hi + pad)
    }

    /// The `rank`-th smallest eigenvalue (0-based), bisected to the limit of
    /// floating-point resolution.
    pub fn eigenvalue(&self, rank: usize) -> f64 {
        assert!(rank < self.dim());
        let (mut lo, mut hi) = self.gershgorin();
        let floor = f64::EPSILON * f64::EPSILON;
        // invariant: count_below(lo) <= rank < count_below(hi), so the
        // eigenvalue lies in (lo, hi]
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if hi - lo <= f64::EPSILON * lo.abs().max(hi.abs()) + floor {
                break;
            }
            if self.count_below(mid) > rank {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Unit eigenvector for an accurately computed isolated eigenvalue.
    ///
    /// Builds the top-down and bottom-up LDLᵀ pivots of `T - λI`, twists at
    /// the index where the combined pivot is smallest and solves outward
    /// from there. The sign is whatever falls out; callers normalise it.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.dim();
        if n == 1 {
            return vec![1.0];
        }
        let guard = |d: f64| if d.abs() < self.pivmin { -self.pivmin } else { d };

        let mut down = vec![0.0; n];
        down[0] = guard(self.diag[0] - lambda);
        for i in 1..n {
            down[i] = guard((self.diag[i] - lambda) - self.off_sq[i - 1] / down[i - 1]);
        }
        let mut up = vec![0.0; n];
        up[n - 1] = guard(self.diag[n - 1] - lambda);
        for i in (0..n - 1).rev() {
            up[i] = guard((self.diag[i] - lambda) - self.off_sq[i] / up[i + 1]);
        }

        let twist = (0..n)
            .min_by(|&i, &j| {
                let gi = (down[i] + up[i] - (self.diag[i] - lambda)).abs();
                let gj = (down[j] + up[j] - (self.diag[j] - lambda)).abs();
                gi.total_cmp(&gj)
            })
            .unwrap_or(0);

        let mut z = vec![0.0; n];
        z[twist] = 1.0;
        for i in (0..twist).rev() {
            z[i] = -(self.off[i] / down[i]) * z[i + 1];
        }
        for i in twist..n - 1 {
            z[i + 1] = -(self.off[i] / up[i + 1]) * z[i];
        }

        let norm = z.iter().map(|v| v * v).sum::<f64>().sqrt();
        z.iter_mut().for_each(|v| *v /= norm);
        z
    }

    #[cfg(test)]
    fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * v[i + 1];
                }
                s
            })
            .collect()
    }
}
