//! Orthonormal 2D DCT-II baseline transform.

use ndarray::Array2;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn basis_cache() -> &'static Mutex<HashMap<usize, Arc<Array2<f64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Array2<f64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Orthonormal DCT-II basis matrix: `B[k][n] = α_k cos(π(2n+1)k / 2N)`.
fn basis(n: usize) -> Arc<Array2<f64>> {
    let mut cache = basis_cache().lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| {
            let mut b = Array2::<f64>::zeros((n, n));
            let norm0 = (1.0 / n as f64).sqrt();
            let norm = (2.0 / n as f64).sqrt();
            for k in 0..n {
                let a = if k == 0 { norm0 } else { norm };
                for j in 0..n {
                    b[[k, j]] = a * (std::f64::consts::PI * (2 * j + 1) as f64 * k as f64
                        / (2 * n) as f64)
                        .cos();
                }
            }
            Arc::new(b)
        })
        .clone()
}

/// Forward orthonormal 2D DCT-II: `B_h · x · B_wᵀ`.
pub fn dct2(x: &Array2<f64>) -> Array2<f64> {
    let (h, w) = x.dim();
    let bh = basis(h);
    let bw = basis(w);
    bh.dot(x).dot(&bw.t())
}

/// Inverse of [`dct2`]; because the basis is orthonormal this is also
/// its adjoint.
pub fn idct2(y: &Array2<f64>) -> Array2<f64> {
    let (h, w) = y.dim();
    let bh = basis(h);
    let bw = basis(w);
    bh.t().dot(y).dot(&*bw)
}
