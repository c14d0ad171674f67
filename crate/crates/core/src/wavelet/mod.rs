//! 1D and 2D discrete wavelet transforms with pluggable filter banks,
//! single- and multi-level, critically sampled, with exact linear
//! adjoints, plus an orthonormal DCT-II pair used as a baseline
//! transform.

mod banks;
mod dct;
mod engine;

pub use banks::{Padding, WaveletName};
pub use dct::{dct2, idct2};

use engine::BankCtx;
use ndarray::{s, Array2};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WaveletError {
    #[error("dimension {dim} is odd; transforms require even extents")]
    OddDimension { dim: usize },
    #[error("dimension {dim} is below the minimum {min} for this bank and padding mode")]
    TooSmall { dim: usize, min: usize },
    #[error("subband shapes disagree: {0}")]
    ShapeMismatch(String),
    #[error("level {level} would shrink a dimension to {dim}, below the filter support")]
    LevelTooDeep { level: usize, dim: usize },
}

/// A filter bank plus boundary policy.
///
/// Tap sequences are exposed for inspection; transforms consume them
/// directly, so the perfect-reconstruction tests exercise the shipped
/// constants.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveletSpec {
    pub name: WaveletName,
    pub analysis_lo: Vec<f64>,
    pub analysis_hi: Vec<f64>,
    pub synthesis_lo: Vec<f64>,
    pub synthesis_hi: Vec<f64>,
    pub padding: Padding,
}

impl WaveletSpec {
    pub fn new(name: WaveletName, padding: Padding) -> Self {
        let ctx = BankCtx::new(name, padding);
        let rev = |v: &[f64]| v.iter().rev().copied().collect::<Vec<_>>();
        WaveletSpec {
            name,
            analysis_lo: ctx.ana_lo.clone(),
            analysis_hi: ctx.ana_hi.clone(),
            synthesis_lo: rev(&ctx.scat_lo),
            synthesis_hi: rev(&ctx.scat_hi),
            padding,
        }
    }

    /// Default bank: biorthogonal 4.4 with symmetric boundaries.
    pub fn bior44() -> Self {
        WaveletSpec::new(WaveletName::Bior44, Padding::Symmetric)
    }

    pub(crate) fn ctx(&self) -> BankCtx {
        BankCtx::new(self.name, self.padding)
    }

    /// Smallest even extent a single level accepts.
    pub fn min_dim(&self) -> usize {
        self.ctx().min_len()
    }

    /// Largest level count `wavedec2` accepts for an `h × w` input.
    pub fn max_levels(&self, h: usize, w: usize) -> usize {
        let min = self.min_dim();
        let mut levels = 0;
        let (mut h, mut w) = (h, w);
        while h % 2 == 0 && w % 2 == 0 && h >= min && w >= min && h >= 2 && w >= 2 {
            levels += 1;
            h /= 2;
            w /= 2;
        }
        levels
    }

    fn check_dims(&self, h: usize, w: usize) -> Result<(), WaveletError> {
        for dim in [h, w] {
            if dim % 2 != 0 {
                return Err(WaveletError::OddDimension { dim });
            }
            let min = self.min_dim();
            if dim < min {
                return Err(WaveletError::TooSmall { dim, min });
            }
        }
        Ok(())
    }
}

/// Four equally shaped subbands of one decomposition level.
///
/// `ll` holds the approximation; `hl`, `lh`, `hh` the horizontal,
/// vertical, and diagonal details.
#[derive(Debug, Clone, PartialEq)]
pub struct Subbands2D {
    pub ll: Array2<f64>,
    pub hl: Array2<f64>,
    pub lh: Array2<f64>,
    pub hh: Array2<f64>,
    pub level: usize,
}

impl Subbands2D {
    pub fn shape(&self) -> (usize, usize) {
        self.ll.dim()
    }

    fn check(&self) -> Result<(), WaveletError> {
        let d = self.ll.dim();
        for (name, b) in [("hl", &self.hl), ("lh", &self.lh), ("hh", &self.hh)] {
            if b.dim() != d {
                return Err(WaveletError::ShapeMismatch(format!(
                    "ll is {:?} but {} is {:?}",
                    d,
                    name,
                    b.dim()
                )));
            }
        }
        Ok(())
    }

    /// Packs the quadrant layout `[[LL, HL], [LH, HH]]`.
    pub fn to_packed(&self) -> Array2<f64> {
        let (h, w) = self.shape();
        let mut out = Array2::<f64>::zeros((2 * h, 2 * w));
        out.slice_mut(s![..h, ..w]).assign(&self.ll);
        out.slice_mut(s![..h, w..]).assign(&self.hl);
        out.slice_mut(s![h.., ..w]).assign(&self.lh);
        out.slice_mut(s![h.., w..]).assign(&self.hh);
        out
    }

    pub fn from_packed(packed: &Array2<f64>, level: usize) -> Self {
        let (h2, w2) = packed.dim();
        let (h, w) = (h2 / 2, w2 / 2);
        Subbands2D {
            ll: packed.slice(s![..h, ..w]).to_owned(),
            hl: packed.slice(s![..h, w..]).to_owned(),
            lh: packed.slice(s![h.., ..w]).to_owned(),
            hh: packed.slice(s![h.., w..]).to_owned(),
            level,
        }
    }
}

/// Which detail subband of a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Detail {
    Horizontal,
    Vertical,
    Diagonal,
}

/// Multi-level coefficients in the nested packed layout: after `levels`
/// splits, the top-left `(h≫levels) × (w≫levels)` block is the
/// approximation and each level's three detail blocks surround the
/// blocks of the next-coarser level.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiLevelCoeffs {
    pub packed: Array2<f64>,
    pub levels: usize,
}

impl MultiLevelCoeffs {
    pub fn shape(&self) -> (usize, usize) {
        self.packed.dim()
    }

    /// Shape of the approximation block.
    pub fn approx_shape(&self) -> (usize, usize) {
        let (h, w) = self.packed.dim();
        (h >> self.levels, w >> self.levels)
    }

    pub fn approx(&self) -> Array2<f64> {
        let (h, w) = self.approx_shape();
        self.packed.slice(s![..h, ..w]).to_owned()
    }

    /// Detail block at `level` (1 = finest, `levels` = coarsest).
    pub fn detail(&self, level: usize, which: Detail) -> Array2<f64> {
        let (h, w) = self.packed.dim();
        let (bh, bw) = (h >> level, w >> level);
        match which {
            Detail::Horizontal => self.packed.slice(s![..bh, bw..2 * bw]).to_owned(),
            Detail::Vertical => self.packed.slice(s![bh..2 * bh, ..bw]).to_owned(),
            Detail::Diagonal => self.packed.slice(s![bh..2 * bh, bw..2 * bw]).to_owned(),
        }
    }

    pub fn element_count(&self) -> usize {
        self.packed.len()
    }
}

/// Single-level 2D analysis.
pub fn dwt2(x: &Array2<f64>, spec: &WaveletSpec) -> Result<Subbands2D, WaveletError> {
    let (h, w) = x.dim();
    spec.check_dims(h, w)?;
    let packed = engine::dwt2_packed(x, &spec.ctx());
    Ok(Subbands2D::from_packed(&packed, 1))
}

/// Single-level 2D synthesis; exact inverse of [`dwt2`].
pub fn idwt2(bands: &Subbands2D, spec: &WaveletSpec) -> Result<Array2<f64>, WaveletError> {
    bands.check()?;
    let packed = bands.to_packed();
    let (h, w) = packed.dim();
    spec.check_dims(h, w)?;
    Ok(engine::idwt2_packed(&packed, &spec.ctx()))
}

/// Adjoint (exact transpose) of [`idwt2`]: maps a gradient with respect
/// to the synthesized matrix to gradients with respect to the subbands.
/// For biorthogonal banks this is not the analysis transform.
pub fn idwt2_adjoint(g: &Array2<f64>, spec: &WaveletSpec) -> Result<Subbands2D, WaveletError> {
    let (h, w) = g.dim();
    spec.check_dims(h, w)?;
    let packed = engine::idwt2_packed_adjoint(g, &spec.ctx());
    Ok(Subbands2D::from_packed(&packed, 1))
}

fn level_dims(h: usize, w: usize, levels: usize, spec: &WaveletSpec) -> Result<(), WaveletError> {
    let min = spec.min_dim();
    let (mut ch, mut cw) = (h, w);
    for level in 1..=levels {
        for dim in [ch, cw] {
            if dim % 2 != 0 || dim < min {
                if level == 1 {
                    return if dim % 2 != 0 {
                        Err(WaveletError::OddDimension { dim })
                    } else {
                        Err(WaveletError::TooSmall { dim, min })
                    };
                }
                return Err(WaveletError::LevelTooDeep { level, dim });
            }
        }
        ch /= 2;
        cw /= 2;
    }
    Ok(())
}

/// Multi-level 2D analysis into the packed layout.
pub fn wavedec2(
    x: &Array2<f64>,
    spec: &WaveletSpec,
    levels: usize,
) -> Result<MultiLevelCoeffs, WaveletError> {
    assert!(levels >= 1, "levels must be at least 1");
    let (h, w) = x.dim();
    level_dims(h, w, levels, spec)?;
    let ctx = spec.ctx();
    let mut packed = x.clone();
    let (mut ch, mut cw) = (h, w);
    for _ in 0..levels {
        let sub = packed.slice(s![..ch, ..cw]).to_owned();
        packed.slice_mut(s![..ch, ..cw]).assign(&engine::dwt2_packed(&sub, &ctx));
        ch /= 2;
        cw /= 2;
    }
    Ok(MultiLevelCoeffs { packed, levels })
}

/// Multi-level 2D synthesis; exact inverse of [`wavedec2`].
pub fn waverec2(coeffs: &MultiLevelCoeffs, spec: &WaveletSpec) -> Result<Array2<f64>, WaveletError> {
    let (h, w) = coeffs.packed.dim();
    level_dims(h, w, coeffs.levels, spec)?;
    Ok(waverec2_packed(&coeffs.packed, spec, coeffs.levels))
}

/// Multi-level synthesis on a bare packed matrix. Dimensions must have
/// been validated (the trainer calls this in its inner loop).
pub fn waverec2_packed(packed: &Array2<f64>, spec: &WaveletSpec, levels: usize) -> Array2<f64> {
    let ctx = spec.ctx();
    let (h, w) = packed.dim();
    let mut out = packed.clone();
    for level in (1..=levels).rev() {
        let (ch, cw) = (h >> (level - 1), w >> (level - 1));
        let sub = out.slice(s![..ch, ..cw]).to_owned();
        out.slice_mut(s![..ch, ..cw]).assign(&engine::idwt2_packed(&sub, &ctx));
    }
    out
}

/// Exact transpose of [`waverec2_packed`].
pub fn waverec2_packed_adjoint(g: &Array2<f64>, spec: &WaveletSpec, levels: usize) -> Array2<f64> {
    let ctx = spec.ctx();
    let (h, w) = g.dim();
    let mut out = g.clone();
    for level in 1..=levels {
        let (ch, cw) = (h >> (level - 1), w >> (level - 1));
        let sub = out.slice(s![..ch, ..cw]).to_owned();
        out.slice_mut(s![..ch, ..cw])
            .assign(&engine::idwt2_packed_adjoint(&sub, &ctx));
    }
    out
}

#[cfg(test)]
mod tests;
