//! Reference computations that avoid the crate's eigendecomposition path.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `exp(-i t A)` from a 30-term Taylor series. When `‖tA‖_F > 2` the argument
/// is halved until it is not, and the result squared back up.
pub fn taylor_exp(a: &CMatrix, t: f64) -> CMatrix {
    let dim = a.nrows();
    let mut x = a * C64::new(0.0, -t);
    let mut squarings = 0;
    while x.norm() > 2.0 {
        x *= C64::new(0.5, 0.0);
        squarings += 1;
    }
    let mut term = CMatrix::identity(dim, dim);
    let mut sum = term.clone();
    for k in 1..30 {
        term = &term * &x / C64::new(k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Direct index sum: `(ρ_A)_{ik} = Σ_j ρ_{(i,j),(k,j)}`.
pub fn reduce_first(rho: &CMatrix, d: usize, dp: usize) -> CMatrix {
    let mut out = CMatrix::zeros(d, d);
    for i in 0..d {
        for k in 0..d {
            for j in 0..dp {
                out[(i, k)] += rho[(i * dp + j, k * dp + j)];
            }
        }
    }
    out
}

pub fn reduce_second(rho: &CMatrix, d: usize, dp: usize) -> CMatrix {
    let mut out = CMatrix::zeros(dp, dp);
    for j in 0..dp {
        for l in 0..dp {
            for i in 0..d {
                out[(j, l)] += rho[(i * dp + j, i * dp + l)];
            }
        }
    }
    out
}

/// Explicit Kronecker product by index arithmetic `(i, j) ↦ i·d' + j`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac, br, bc) = (a.nrows(), a.ncols(), b.nrows(), b.ncols());
    CMatrix::from_fn(ar * br, ac * bc, |r, c| a[(r / br, c / bc)] * b[(r % br, c % bc)])
}

pub fn outer(a: &CVector, b: &CVector) -> CMatrix {
    a * b.adjoint()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

pub fn powers_of_two(lo: u32, hi: u32) -> Vec<usize> {
    (lo..=hi).map(|k| 1usize << k).collect()
}
