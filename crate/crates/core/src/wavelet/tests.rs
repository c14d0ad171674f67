use super::*;
use ndarray::{array, Array2};
use proptest::prelude::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn rand_matrix(h: usize, w: usize, seed: u64) -> Array2<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Array2::from_shape_fn((h, w), |_| rng.gen_range(-1.0..1.0))
}

fn max_abs_diff(a: &Array2<f64>, b: &Array2<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn all_specs() -> Vec<WaveletSpec> {
    let mut specs = Vec::new();
    for name in WaveletName::ALL {
        for padding in [Padding::Symmetric, Padding::Periodic, Padding::Zero] {
            specs.push(WaveletSpec::new(name, padding));
        }
    }
    specs
}

#[test]
fn haar_constant_block_puts_all_energy_in_ll() {
    let spec = WaveletSpec::new(WaveletName::Haar, Padding::Symmetric);
    let x = array![[1.0, 1.0], [1.0, 1.0]];
    let bands = dwt2(&x, &spec).unwrap();
    assert!((bands.ll[[0, 0]] - 2.0).abs() < 1e-12);
    for b in [&bands.hl, &bands.lh, &bands.hh] {
        assert!(b[[0, 0]].abs() < 1e-12);
    }
}

/// Independent scalar 2×2 haar block transform used as an oracle.
fn haar_block(a: f64, b: f64, c: f64, d: f64) -> (f64, f64, f64, f64) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let (al, ah) = ((a + b) * s, (a - b) * s);
    let (bl, bh) = ((c + d) * s, (c - d) * s);
    ((al + bl) * s, (ah + bh) * s, (al - bl) * s, (ah - bh) * s)
}

#[test]
fn haar_checkerboard_matches_block_oracle() {
    let spec = WaveletSpec::new(WaveletName::Haar, Padding::Symmetric);
    let x = Array2::from_shape_fn((4, 4), |(i, j)| ((i + j) % 2 == 0) as u8 as f64);
    let bands = dwt2(&x, &spec).unwrap();
    for bi in 0..2 {
        for bj in 0..2 {
            let (a, b, c, d) = (
                x[[2 * bi, 2 * bj]],
                x[[2 * bi, 2 * bj + 1]],
                x[[2 * bi + 1, 2 * bj]],
                x[[2 * bi + 1, 2 * bj + 1]],
            );
            let (ll, hl, lh, hh) = haar_block(a, b, c, d);
            assert!((bands.ll[[bi, bj]] - ll).abs() < 1e-12);
            assert!((bands.hl[[bi, bj]] - hl).abs() < 1e-12);
            assert!((bands.lh[[bi, bj]] - lh).abs() < 1e-12);
            assert!((bands.hh[[bi, bj]] - hh).abs() < 1e-12);
        }
    }
    // constant approximation, zero hl/lh, unit-magnitude diagonal
    assert!(bands.ll.iter().all(|&v| (v - 1.0).abs() < 1e-12));
    assert!(bands.hl.iter().all(|&v| v.abs() < 1e-12));
    assert!(bands.lh.iter().all(|&v| v.abs() < 1e-12));
    assert!(bands.hh.iter().all(|&v| (v.abs() - 1.0).abs() < 1e-12));
}

#[test]
fn bior44_round_trip_64() {
    let spec = WaveletSpec::bior44();
    let x = rand_matrix(64, 64, 7);
    let bands = dwt2(&x, &spec).unwrap();
    let xr = idwt2(&bands, &spec).unwrap();
    assert!(max_abs_diff(&x, &xr) < 1e-9);
}

#[test]
fn idwt2_of_pure_ll_is_constant() {
    let spec = WaveletSpec::new(WaveletName::Haar, Padding::Symmetric);
    let bands = Subbands2D {
        ll: array![[2.0]],
        hl: array![[0.0]],
        lh: array![[0.0]],
        hh: array![[0.0]],
        level: 1,
    };
    let x = idwt2(&bands, &spec).unwrap();
    assert_eq!(x.dim(), (2, 2));
    for &v in x.iter() {
        assert!((v - 1.0).abs() < 1e-12);
    }
}

#[test]
fn idwt2_zero_subbands_give_zero() {
    for spec in all_specs() {
        let z = Array2::<f64>::zeros((8, 8));
        let bands = Subbands2D {
            ll: z.clone(),
            hl: z.clone(),
            lh: z.clone(),
            hh: z.clone(),
            level: 1,
        };
        let x = idwt2(&bands, &spec).unwrap();
        assert!(x.iter().all(|&v| v == 0.0));
    }
}

#[test]
fn idwt2_impulse_validated_by_round_trip() {
    let spec = WaveletSpec::new(WaveletName::Haar, Padding::Symmetric);
    let mut hl = Array2::<f64>::zeros((1, 1));
    hl[[0, 0]] = 1.0;
    let bands = Subbands2D {
        ll: Array2::zeros((1, 1)),
        hl,
        lh: Array2::zeros((1, 1)),
        hh: Array2::zeros((1, 1)),
        level: 1,
    };
    let x = idwt2(&bands, &spec).unwrap();
    let back = dwt2(&x, &spec).unwrap();
    assert!((back.hl[[0, 0]] - 1.0).abs() < 1e-12);
    for b in [&back.ll, &back.lh, &back.hh] {
        assert!(b[[0, 0]].abs() < 1e-12);
    }
}

#[test]
fn idwt2_rejects_mismatched_subbands() {
    let spec = WaveletSpec::bior44();
    let bands = Subbands2D {
        ll: Array2::zeros((4, 4)),
        hl: Array2::zeros((4, 4)),
        lh: Array2::zeros((4, 2)),
        hh: Array2::zeros((4, 4)),
        level: 1,
    };
    assert!(matches!(idwt2(&bands, &spec), Err(WaveletError::ShapeMismatch(_))));
}

#[test]
fn dwt2_rejects_odd_and_tiny_dims() {
    let spec = WaveletSpec::bior44();
    assert!(matches!(
        dwt2(&Array2::zeros((7, 8)), &spec),
        Err(WaveletError::OddDimension { dim: 7 })
    ));
    // symmetric bior needs the doubled period to cover the 9-tap filter
    assert!(matches!(
        dwt2(&Array2::zeros((4, 4)), &spec),
        Err(WaveletError::TooSmall { dim: 4, .. })
    ));
    let periodic = WaveletSpec::new(WaveletName::Bior44, Padding::Periodic);
    assert!(dwt2(&Array2::zeros((4, 4)), &periodic).is_ok());
}

#[test]
fn wavedec2_block_shapes_16_level2() {
    let spec = WaveletSpec::bior44();
    let x = rand_matrix(16, 16, 3);
    let coeffs = wavedec2(&x, &spec, 2).unwrap();
    assert_eq!(coeffs.approx_shape(), (4, 4));
    assert_eq!(coeffs.detail(2, Detail::Horizontal).dim(), (4, 4));
    assert_eq!(coeffs.detail(2, Detail::Vertical).dim(), (4, 4));
    assert_eq!(coeffs.detail(2, Detail::Diagonal).dim(), (4, 4));
    assert_eq!(coeffs.detail(1, Detail::Horizontal).dim(), (8, 8));
    assert_eq!(coeffs.element_count(), 16 * 16);
}

#[test]
fn wavedec2_level1_equals_dwt2() {
    let spec = WaveletSpec::bior44();
    let x = rand_matrix(16, 16, 4);
    let coeffs = wavedec2(&x, &spec, 1).unwrap();
    let bands = dwt2(&x, &spec).unwrap();
    assert!(max_abs_diff(&coeffs.approx(), &bands.ll) < 1e-12);
    assert!(max_abs_diff(&coeffs.detail(1, Detail::Horizontal), &bands.hl) < 1e-12);
    assert!(max_abs_diff(&coeffs.detail(1, Detail::Vertical), &bands.lh) < 1e-12);
    assert!(max_abs_diff(&coeffs.detail(1, Detail::Diagonal), &bands.hh) < 1e-12);
}

#[test]
fn wavedec2_round_trip_levels_4() {
    for spec in all_specs() {
        let x = rand_matrix(64, 64, 11);
        for levels in 1..=4 {
            let coeffs = wavedec2(&x, &spec, levels).unwrap();
            let xr = waverec2(&coeffs, &spec).unwrap();
            assert!(
                max_abs_diff(&x, &xr) < 1e-9,
                "{:?}/{:?} levels={} failed",
                spec.name,
                spec.padding,
                levels
            );
        }
    }
}

#[test]
fn wavedec2_rejects_too_deep() {
    let spec = WaveletSpec::new(WaveletName::Haar, Padding::Periodic);
    let x = rand_matrix(8, 8, 5);
    assert!(wavedec2(&x, &spec, 3).is_ok());
    assert!(matches!(
        wavedec2(&x, &spec, 4),
        Err(WaveletError::LevelTooDeep { .. })
    ));
}

#[test]
fn orthogonal_synthesis_taps_are_reversed_analysis() {
    for name in [WaveletName::Haar, WaveletName::Db4, WaveletName::Coif1] {
        let spec = WaveletSpec::new(name, Padding::Periodic);
        let rev_lo: Vec<f64> = spec.analysis_lo.iter().rev().copied().collect();
        let rev_hi: Vec<f64> = spec.analysis_hi.iter().rev().copied().collect();
        assert_eq!(spec.synthesis_lo, rev_lo);
        assert_eq!(spec.synthesis_hi, rev_hi);
    }
}

/// Biorthogonality of the shipped tap tables, asserted numerically:
/// synthesis∘analysis is the identity on a full basis.
#[test]
fn tap_tables_satisfy_biorthogonality() {
    for spec in all_specs() {
        let n = 8.max(spec.min_dim());
        for i in 0..n {
            for j in 0..n {
                let mut e = Array2::<f64>::zeros((n, n));
                e[[i, j]] = 1.0;
                let bands = dwt2(&e, &spec).unwrap();
                let back = idwt2(&bands, &spec).unwrap();
                assert!(
                    max_abs_diff(&e, &back) < 1e-10,
                    "{:?}/{:?} basis ({},{})",
                    spec.name,
                    spec.padding,
                    i,
                    j
                );
            }
        }
    }
}

#[test]
fn haar_adjoint_equals_forward_dwt2() {
    let spec = WaveletSpec::new(WaveletName::Haar, Padding::Periodic);
    let g = rand_matrix(16, 16, 21);
    let adj = idwt2_adjoint(&g, &spec).unwrap();
    let fwd = dwt2(&g, &spec).unwrap();
    assert!(max_abs_diff(&adj.ll, &fwd.ll) < 1e-12);
    assert!(max_abs_diff(&adj.hl, &fwd.hl) < 1e-12);
    assert!(max_abs_diff(&adj.lh, &fwd.lh) < 1e-12);
    assert!(max_abs_diff(&adj.hh, &fwd.hh) < 1e-12);
}

#[test]
fn adjoint_zero_gradient_gives_zero_subbands() {
    let spec = WaveletSpec::bior44();
    let adj = idwt2_adjoint(&Array2::zeros((16, 16)), &spec).unwrap();
    assert!(adj.ll.iter().all(|&v| v == 0.0));
    assert!(adj.hh.iter().all(|&v| v == 0.0));
}

fn inner(a: &Array2<f64>, b: &Array2<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

#[test]
fn bior44_adjoint_inner_product_identity() {
    let spec = WaveletSpec::bior44();
    for seed in 0..5 {
        let bands = Subbands2D {
            ll: rand_matrix(16, 16, seed),
            hl: rand_matrix(16, 16, seed + 100),
            lh: rand_matrix(16, 16, seed + 200),
            hh: rand_matrix(16, 16, seed + 300),
            level: 1,
        };
        let g = rand_matrix(32, 32, seed + 400);
        let lhs = inner(&idwt2(&bands, &spec).unwrap(), &g);
        let adj = idwt2_adjoint(&g, &spec).unwrap();
        let rhs = inner(&bands.ll, &adj.ll)
            + inner(&bands.hl, &adj.hl)
            + inner(&bands.lh, &adj.lh)
            + inner(&bands.hh, &adj.hh);
        assert!((lhs - rhs).abs() < 1e-9, "seed {}: {} vs {}", seed, lhs, rhs);
    }
}

/// Dense materialization at 8×8: the adjoint operator matrix must be
/// the exact transpose of the synthesis operator matrix.
#[test]
fn adjoint_is_transpose_of_dense_synthesis_operator() {
    for spec in all_specs() {
        let n = 8.max(spec.min_dim());
        let half = n / 2;
        let dims = n * n;
        // synthesis matrix column by column (input: packed subbands)
        let mut synth = vec![vec![0.0; dims]; dims];
        for col in 0..dims {
            let mut packed = Array2::<f64>::zeros((n, n));
            packed[[col / n, col % n]] = 1.0;
            let bands = Subbands2D::from_packed(&packed, 1);
            let y = idwt2(&bands, &spec).unwrap();
            for (row, &v) in y.iter().enumerate() {
                synth[row][col] = v;
            }
        }
        // adjoint rows must match synthesis columns
        for row in 0..dims {
            let mut g = Array2::<f64>::zeros((n, n));
            g[[row / n, row % n]] = 1.0;
            let adj = idwt2_adjoint(&g, &spec).unwrap().to_packed();
            for (col, &v) in adj.iter().enumerate() {
                assert!(
                    (v - synth[row][col]).abs() < 1e-10,
                    "{:?}/{:?} entry ({},{})",
                    spec.name,
                    spec.padding,
                    row,
                    col
                );
            }
        }
        let _ = half;
    }
}

#[test]
fn dct2_constant_is_pure_dc() {
    let x = Array2::from_elem((8, 8), 3.25);
    let y = dct2(&x);
    assert!((y[[0, 0]] - 3.25 * 8.0).abs() < 1e-10);
    for (idx, &v) in y.indexed_iter() {
        if idx != (0, 0) {
            assert!(v.abs() < 1e-10);
        }
    }
}

#[test]
fn dct2_round_trip_and_parseval() {
    let x = rand_matrix(8, 8, 31);
    let y = dct2(&x);
    let xr = idct2(&y);
    assert!(max_abs_diff(&x, &xr) < 1e-10);
    let nx: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let ny: f64 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    assert!((nx - ny).abs() < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prop_perfect_reconstruction(
        seed in 0u64..1000,
        size_idx in 0usize..6,
        bank_idx in 0usize..5,
        pad_idx in 0usize..3,
        levels in 1usize..=4,
    ) {
        let sizes = [8usize, 12, 16, 32, 48, 64];
        let pads = [Padding::Symmetric, Padding::Periodic, Padding::Zero];
        let spec = WaveletSpec::new(WaveletName::ALL[bank_idx], pads[pad_idx]);
        let n = sizes[size_idx];
        let levels = levels.min(spec.max_levels(n, n));
        prop_assume!(levels >= 1);
        let x = rand_matrix(n, n, seed);
        let coeffs = wavedec2(&x, &spec, levels).unwrap();
        let xr = waverec2(&coeffs, &spec).unwrap();
        prop_assert!(max_abs_diff(&x, &xr) < 1e-9);
    }

    #[test]
    fn prop_linearity(seed in 0u64..1000, bank_idx in 0usize..5) {
        let spec = WaveletSpec::new(WaveletName::ALL[bank_idx], Padding::Symmetric);
        let x = rand_matrix(16, 16, seed);
        let y = rand_matrix(16, 16, seed + 1);
        let (a, b) = (1.7, -0.4);
        let combined = dwt2(&(a * &x + b * &y), &spec).unwrap();
        let bx = dwt2(&x, &spec).unwrap();
        let by = dwt2(&y, &spec).unwrap();
        prop_assert!(max_abs_diff(&combined.ll, &(a * &bx.ll + b * &by.ll)) < 1e-9);
        prop_assert!(max_abs_diff(&combined.hh, &(a * &bx.hh + b * &by.hh)) < 1e-9);
    }

    #[test]
    fn prop_adjoint_identity(seed in 0u64..1000, bank_idx in 0usize..5, pad_idx in 0usize..3) {
        let pads = [Padding::Symmetric, Padding::Periodic, Padding::Zero];
        let spec = WaveletSpec::new(WaveletName::ALL[bank_idx], pads[pad_idx]);
        let bands = Subbands2D {
            ll: rand_matrix(8, 8, seed),
            hl: rand_matrix(8, 8, seed + 1),
            lh: rand_matrix(8, 8, seed + 2),
            hh: rand_matrix(8, 8, seed + 3),
            level: 1,
        };
        let g = rand_matrix(16, 16, seed + 4);
        let lhs = inner(&idwt2(&bands, &spec).unwrap(), &g);
        let adj = idwt2_adjoint(&g, &spec).unwrap();
        let rhs = inner(&bands.to_packed(), &adj.to_packed());
        prop_assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn prop_element_count_conserved(levels in 1usize..=4) {
        let spec = WaveletSpec::bior44();
        let x = rand_matrix(64, 64, 5);
        let coeffs = wavedec2(&x, &spec, levels).unwrap();
        prop_assert_eq!(coeffs.element_count(), 64 * 64);
        // 1 approximation block + 3·levels detail blocks
        let (ah, aw) = coeffs.approx_shape();
        let mut total = ah * aw;
        for level in 1..=levels {
            for which in [Detail::Horizontal, Detail::Vertical, Detail::Diagonal] {
                let d = coeffs.detail(level, which);
                total += d.len();
            }
        }
        prop_assert_eq!(total, 64 * 64);
    }
}
