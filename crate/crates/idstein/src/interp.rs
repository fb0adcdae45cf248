//! Interpolation helpers: a monotone piecewise-cubic (Fritsch–Carlson) spline
//! used for numeric inverse CDFs, and a uniform-grid local cubic used to
//! tabulate expensive smooth functions.

use crate::error::{Error, Result};

/// Monotone piecewise-cubic Hermite interpolant.
#[derive(Debug, Clone)]
pub struct MonotoneSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    ds: Vec<f64>,
}

impl MonotoneSpline {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err(Error::GridTooCoarse("spline needs ≥ 2 nodes".into()));
        }
        let n = xs.len();
        let mut slopes = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let h = xs[i + 1] - xs[i];
            if h <= 0.0 {
                return Err(Error::GridTooCoarse("spline abscissae must increase".into()));
            }
            slopes.push((ys[i + 1] - ys[i]) / h);
        }
        // Fritsch–Carlson endpoint + interior derivative limiting.
        let mut ds = vec![0.0; n];
        ds[0] = slopes[0];
        ds[n - 1] = slopes[n - 2];
        for i in 1..n - 1 {
            if slopes[i - 1] * slopes[i] <= 0.0 {
                ds[i] = 0.0;
            } else {
                let w1 = 2.0 * (xs[i + 1] - xs[i]) + (xs[i] - xs[i - 1]);
                let w2 = (xs[i + 1] - xs[i]) + 2.0 * (xs[i] - xs[i - 1]);
                ds[i] = (w1 + w2) / (w1 / slopes[i - 1] + w2 / slopes[i]);
            }
        }
        for i in 0..n - 1 {
            if slopes[i] == 0.0 {
                ds[i] = 0.0;
                ds[i + 1] = 0.0;
            } else {
                let a = ds[i] / slopes[i];
                let b = ds[i + 1] / slopes[i];
                let s = (a * a + b * b).sqrt();
                if s > 3.0 {
                    ds[i] = 3.0 * a / s * slopes[i];
                    ds[i + 1] = 3.0 * b / s * slopes[i];
                }
            }
        }
        Ok(MonotoneSpline { xs, ys, ds })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if x <= self.xs[0] {
            return self.ys[0];
        }
        if x >= self.xs[n - 1] {
            return self.ys[n - 1];
        }
        let i = match self
            .xs
            .binary_search_by(|v| v.partial_cmp(&x).unwrap())
        {
            Ok(i) => return self.ys[i],
            Err(i) => i - 1,
        };
        let h = self.xs[i + 1] - self.xs[i];
        let t = (x - self.xs[i]) / h;
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.ys[i] + h10 * h * self.ds[i] + h01 * self.ys[i + 1] + h11 * h * self.ds[i + 1]
    }
}

/// Smooth function tabulated on a uniform grid, evaluated by a centered
/// 4-point cubic; O(h⁴) accurate away from the edges.
#[derive(Debug, Clone)]
pub struct UniformTable {
    pub x0: f64,
    pub h: f64,
    pub values: Vec<f64>,
}

impl UniformTable {
    pub fn build(x0: f64, x1: f64, n: usize, mut f: impl FnMut(f64) -> f64) -> Self {
        assert!(n >= 4 && x1 > x0);
        let h = (x1 - x0) / (n - 1) as f64;
        let values = (0..n).map(|i| f(x0 + h * i as f64)).collect();
        UniformTable { x0, h, values }
    }

    pub fn covers(&self, x: f64) -> bool {
        x >= self.x0 && x <= self.x0 + self.h * (self.values.len() - 1) as f64
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.values.len();
        let t = (x - self.x0) / self.h;
        let i = (t.floor() as isize).clamp(1, n as isize - 3) as usize;
        let s = t - i as f64; // s ∈ [0,1] in the bulk
        let (ym1, y0, y1, y2) = (
            self.values[i - 1],
            self.values[i],
            self.values[i + 1],
            self.values[i + 2],
        );
        // Lagrange cubic through the four surrounding nodes.
        let a = -s * (s - 1.0) * (s - 2.0) / 6.0;
        let b = (s * s - 1.0) * (s - 2.0) / 2.0;
        let c = -s * (s + 1.0) * (s - 2.0) / 2.0;
        let d = s * (s * s - 1.0) / 6.0;
        a * ym1 + b * y0 + c * y1 + d * y2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spline_interpolates_and_stays_monotone() {
        let xs: Vec<f64> = (0..40).map(|i| i as f64 / 39.0 * 3.0).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| 1.0 - (-x).exp()).collect();
        let sp = MonotoneSpline::new(xs.clone(), ys.clone()).unwrap();
        for i in 0..xs.len() {
            assert!((sp.eval(xs[i]) - ys[i]).abs() < 1e-14);
        }
        let mut prev = -1.0;
        for i in 0..=300 {
            let v = sp.eval(i as f64 / 100.0);
            assert!(v >= prev - 1e-12);
            prev = v;
        }
        assert!((sp.eval(1.5) - (1.0 - (-1.5f64).exp())).abs() < 1e-5);
    }

    #[test]
    fn uniform_table_is_fourth_order() {
        let t = UniformTable::build(-2.0, 2.0, 401, |x| (x * 1.3).sin() * (-x * x / 3.0).exp());
        for i in 0..=100 {
            let x = -1.9 + 3.8 * i as f64 / 100.0;
            let exact = (x * 1.3).sin() * (-x * x / 3.0).exp();
            assert!((t.eval(x) - exact).abs() < 1e-7);
        }
    }
}
