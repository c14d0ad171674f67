//! Filter bank tap tables.
//!
//! Low-pass prototypes are literal constants from standard published
//! filter-bank tables; high-pass taps are the standard quadrature
//! mirror modulations of the opposite low-pass, written out here as
//! literals as well. A unit test asserts the biorthogonality conditions
//! numerically rather than trusting the constants.

use serde::{Deserialize, Serialize};

/// Supported wavelet families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WaveletName {
    Haar,
    Db4,
    Coif1,
    #[serde(rename = "bior4.4")]
    Bior44,
    #[serde(rename = "rbior4.4")]
    Rbior44,
}

/// Boundary handling for the transforms.
///
/// `Symmetric` uses whole-sample symmetric extension, which admits a
/// critically sampled perfect-reconstruction scheme only for
/// linear-phase (symmetric) filter banks; for the orthogonal families
/// the engine substitutes periodized boundaries, as it does for `Zero`
/// with any bank longer than two taps. Perfect reconstruction is
/// preserved in every case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Padding {
    Symmetric,
    Periodic,
    Zero,
}

impl WaveletName {
    pub const ALL: [WaveletName; 5] = [
        WaveletName::Haar,
        WaveletName::Db4,
        WaveletName::Coif1,
        WaveletName::Bior44,
        WaveletName::Rbior44,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            WaveletName::Haar => "haar",
            WaveletName::Db4 => "db4",
            WaveletName::Coif1 => "coif1",
            WaveletName::Bior44 => "bior4.4",
            WaveletName::Rbior44 => "rbior4.4",
        }
    }

    pub fn from_str_name(s: &str) -> Option<WaveletName> {
        match s {
            "haar" => Some(WaveletName::Haar),
            "db4" => Some(WaveletName::Db4),
            "coif1" => Some(WaveletName::Coif1),
            "bior4.4" | "bior44" => Some(WaveletName::Bior44),
            "rbior4.4" | "rbior44" | "rbio4.4" => Some(WaveletName::Rbior44),
            _ => None,
        }
    }

    /// Orthogonal banks have a single prototype; synthesis taps are the
    /// time-reversed analysis taps.
    pub fn is_orthogonal(&self) -> bool {
        matches!(self, WaveletName::Haar | WaveletName::Db4 | WaveletName::Coif1)
    }

    /// Symmetric (linear-phase) banks support whole-sample symmetric
    /// boundaries at critical sampling. Haar counts: its two taps never
    /// straddle a boundary, so every extension behaves identically.
    pub fn is_linear_phase(&self) -> bool {
        matches!(self, WaveletName::Bior44 | WaveletName::Rbior44 | WaveletName::Haar)
    }
}

const HAAR_LO: &[f64] = &[0.7071067811865475, 0.7071067811865475];
const HAAR_HI: &[f64] = &[0.7071067811865475, -0.7071067811865475];

const DB4_LO: &[f64] = &[
    0.23037781330885523,
    0.7148465705525415,
    0.6308807679295904,
    -0.02798376941698385,
    -0.18703481171888114,
    0.030841381835986965,
    0.032883011666982945,
    -0.010597401784997278,
];
const DB4_HI: &[f64] = &[
    -0.010597401784997278,
    -0.032883011666982945,
    0.030841381835986965,
    0.18703481171888114,
    -0.02798376941698385,
    -0.6308807679295904,
    0.7148465705525415,
    -0.23037781330885523,
];

const COIF1_LO: &[f64] = &[
    -0.015655728135464786,
    -0.07273261951252645,
    0.3848648468648578,
    0.8525720202116004,
    0.3378976624574818,
    -0.07273261951252645,
];
const COIF1_HI: &[f64] = &[
    -0.07273261951252645,
    -0.3378976624574818,
    0.8525720202116004,
    -0.3848648468648578,
    -0.07273261951252645,
    0.015655728135464786,
];

// Cohen–Daubechies–Feauveau 9/7 pair, scaled so each analysis stage has
// DC gain sqrt(2), matching the orthogonal banks.
const B44_ANA_LO: &[f64] = &[
    0.03782845550699534,
    -0.02384946501938007,
    -0.11062440441842306,
    0.37740285561265385,
    0.8526986790094031,
    0.37740285561265385,
    -0.11062440441842306,
    -0.02384946501938007,
    0.03782845550699534,
];
const B44_ANA_HI: &[f64] = &[
    -0.06453888262893837,
    0.040689417609558284,
    0.41809227322221215,
    -0.7884856164056642,
    0.41809227322221215,
    0.040689417609558284,
    -0.06453888262893837,
];
const B44_SYN_LO: &[f64] = &[
    -0.06453888262893837,
    -0.040689417609558284,
    0.41809227322221215,
    0.7884856164056642,
    0.41809227322221215,
    -0.040689417609558284,
    -0.06453888262893837,
];
const B44_SYN_HI: &[f64] = &[
    -0.03782845550699534,
    -0.02384946501938007,
    0.11062440441842306,
    0.37740285561265385,
    -0.8526986790094031,
    0.37740285561265385,
    0.11062440441842306,
    -0.02384946501938007,
    -0.03782845550699534,
];

const RB44_ANA_HI: &[f64] = &[
    0.03782845550699534,
    0.02384946501938007,
    -0.11062440441842306,
    -0.37740285561265385,
    0.8526986790094031,
    -0.37740285561265385,
    -0.11062440441842306,
    0.02384946501938007,
    0.03782845550699534,
];
const RB44_SYN_HI: &[f64] = &[
    0.06453888262893837,
    -0.040689417609558284,
    -0.41809227322221215,
    0.7884856164056642,
    -0.41809227322221215,
    -0.040689417609558284,
    0.06453888262893837,
];

/// Phase anchors for the periodized transforms, per bank:
/// `(sa, sb, ta, tb)`. Analysis gathers
/// `a[k] = Σ_j lo[j]·x[(2k + j − sa) mod N]` (and `sb` for the high
/// channel); synthesis scatters
/// `x[(2k + j − ta) mod N] += rev(syn_lo)[j]·a[k]` (and `tb` for the
/// high channel). The values below make each bank perfectly
/// reconstructing, which the test suite asserts for every bank and
/// boundary mode.
pub(crate) fn phase_shifts(name: WaveletName) -> (usize, usize, usize, usize) {
    match name {
        WaveletName::Haar | WaveletName::Db4 | WaveletName::Coif1 => (0, 0, 0, 0),
        WaveletName::Bior44 => (1, 1, 0, 2),
        WaveletName::Rbior44 => (0, 2, 1, 1),
    }
}

/// Subband symmetry anchors for the whole-sample symmetric scheme: the
/// kept half of each subband of the symmetrized (period `2N−2`) signal
/// is the canonical orbit set of the involution `k ↦ (S − k) mod (N−1)`
/// with `S = N − 4` for the low band and `S = N − 3` for the high band.
pub(crate) const WSS_LOW_ANCHOR: i64 = -4;
pub(crate) const WSS_HIGH_ANCHOR: i64 = -3;

pub(crate) struct TapTable {
    pub analysis_lo: &'static [f64],
    pub analysis_hi: &'static [f64],
    pub synthesis_lo: &'static [f64],
    pub synthesis_hi: &'static [f64],
}

pub(crate) fn taps(name: WaveletName) -> TapTable {
    match name {
        WaveletName::Haar => TapTable {
            analysis_lo: HAAR_LO,
            analysis_hi: HAAR_HI,
            // time-reversed analysis taps
            synthesis_lo: HAAR_LO,
            synthesis_hi: &[-0.7071067811865475, 0.7071067811865475],
        },
        WaveletName::Db4 => TapTable {
            analysis_lo: DB4_LO,
            analysis_hi: DB4_HI,
            synthesis_lo: &[
                -0.010597401784997278,
                0.032883011666982945,
                0.030841381835986965,
                -0.18703481171888114,
                -0.02798376941698385,
                0.6308807679295904,
                0.7148465705525415,
                0.23037781330885523,
            ],
            synthesis_hi: &[
                -0.23037781330885523,
                0.7148465705525415,
                -0.6308807679295904,
                -0.02798376941698385,
                0.18703481171888114,
                0.030841381835986965,
                -0.032883011666982945,
                -0.010597401784997278,
            ],
        },
        WaveletName::Coif1 => TapTable {
            analysis_lo: COIF1_LO,
            analysis_hi: COIF1_HI,
            synthesis_lo: &[
                -0.07273261951252645,
                0.3378976624574818,
                0.8525720202116004,
                0.3848648468648578,
                -0.07273261951252645,
                -0.015655728135464786,
            ],
            synthesis_hi: &[
                0.015655728135464786,
                -0.07273261951252645,
                -0.3848648468648578,
                0.8525720202116004,
                -0.3378976624574818,
                -0.07273261951252645,
            ],
        },
        WaveletName::Bior44 => TapTable {
            analysis_lo: B44_ANA_LO,
            analysis_hi: B44_ANA_HI,
            synthesis_lo: B44_SYN_LO,
            synthesis_hi: B44_SYN_HI,
        },
        WaveletName::Rbior44 => TapTable {
            analysis_lo: B44_SYN_LO,
            analysis_hi: RB44_ANA_HI,
            synthesis_lo: B44_ANA_LO,
            synthesis_hi: RB44_SYN_HI,
        },
    }
}
