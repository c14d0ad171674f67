//! Masked wavelet rank-decomposed fields.
//!
//! A library for representing 2D/3D scalar and vector fields as
//! rank-decomposed grids whose plane coefficients live in the wavelet
//! domain, learning sparse binary masks over those coefficients by
//! gradient descent, and losslessly packing the surviving coefficients
//! through a quantize → group → RLE → Huffman pipeline into a compact,
//! bit-exact container.
//!
//! The pieces, bottom up:
//!
//! - [`wavelet`]: critically sampled 1D/2D discrete wavelet transforms
//!   with pluggable filter banks, exact linear adjoints, and an
//!   orthonormal DCT-II baseline.
//! - [`field`]: the vector–matrix tensor field whose plane coefficients
//!   are stored in a transform domain, gated by trainable binary masks.
//! - [`grad`]: a small reverse-mode tape over the fixed operator set,
//!   plus Adam with exponential learning-rate decay and the fitting
//!   drivers.
//! - [`render`]: emission–absorption volumetric rendering for synthetic
//!   scene fitting and evaluation.
//! - [`codec`]: the compression pipeline (8-bit post-quantization,
//!   level-grouped bitmaps, n-bit casting, RLE, canonical Huffman) and
//!   the `.mwrf` container format.
//! - [`sweep`]: rate–distortion sweep harness used by the CLI.

pub mod codec;
pub mod field;
pub mod grad;
pub mod imageio;
pub mod metrics;
pub mod render;
pub mod sweep;
pub mod synth;
pub mod wavelet;
