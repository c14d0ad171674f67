//! Critically sampled 1D transform kernels and the separable 2D driver.
//!
//! Analysis gathers `a[k] = Σ_j lo[j]·x[(2k + j − sa) mod N]`; synthesis
//! scatters `x[(2k + j − ta) mod N] += rev(syn)[j]·a[k]`. Whole-sample
//! symmetric boundaries are implemented by transforming the symmetrized
//! period-`2N−2` signal and keeping one canonical representative per
//! symmetry orbit of each subband, which keeps the transform square and
//! exactly invertible.

use ndarray::Array2;
use rayon::prelude::*;

use super::banks::{phase_shifts, taps, Padding, WaveletName, WSS_HIGH_ANCHOR, WSS_LOW_ANCHOR};

/// Per-call context: taps in the orientation the kernels consume.
pub(crate) struct BankCtx {
    pub ana_lo: Vec<f64>,
    pub ana_hi: Vec<f64>,
    /// reversed synthesis taps (scatter orientation)
    pub scat_lo: Vec<f64>,
    pub scat_hi: Vec<f64>,
    pub sa: usize,
    pub sb: usize,
    pub ta: usize,
    pub tb: usize,
    pub wss: bool,
}

impl BankCtx {
    pub fn new(name: WaveletName, padding: Padding) -> Self {
        let t = taps(name);
        let (sa, sb, ta, tb) = phase_shifts(name);
        let wss = padding == Padding::Symmetric
            && matches!(name, WaveletName::Bior44 | WaveletName::Rbior44);
        BankCtx {
            ana_lo: t.analysis_lo.to_vec(),
            ana_hi: t.analysis_hi.to_vec(),
            scat_lo: t.synthesis_lo.iter().rev().copied().collect(),
            scat_hi: t.synthesis_hi.iter().rev().copied().collect(),
            sa,
            sb,
            ta,
            tb,
            wss,
        }
    }

    pub fn max_tap_len(&self) -> usize {
        self.ana_lo
            .len()
            .max(self.ana_hi.len())
            .max(self.scat_lo.len())
            .max(self.scat_hi.len())
    }

    /// Smallest even signal length the boundary scheme supports.
    pub fn min_len(&self) -> usize {
        if self.wss {
            // symmetrized period 2N−2 must cover the filter support
            let l = self.max_tap_len();
            let mut n = (l + 2).div_ceil(2);
            if n % 2 == 1 {
                n += 1;
            }
            n.max(4)
        } else {
            2
        }
    }
}

#[inline]
fn wrap(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

/// One analysis channel, periodized: `out[k] = Σ_j f[j]·x[(2k+j−s) mod N]`.
fn analyze_channel_per(x: &[f64], f: &[f64], s: usize, out: &mut [f64]) {
    let n = x.len();
    let l = f.len();
    let half = n / 2;
    // interior: 2k − s ≥ 0 and 2k − s + l − 1 ≤ n − 1
    let k_lo = s.div_ceil(2).min(half);
    let k_hi = if n + s >= l { ((n + s - l) / 2 + 1).min(half) } else { 0 };
    let (k_lo, k_hi) = if k_lo <= k_hi { (k_lo, k_hi) } else { (0, 0) };
    for (k, o) in out.iter_mut().enumerate().take(k_hi).skip(k_lo) {
        let base = 2 * k - s;
        let mut acc = 0.0;
        for (j, &c) in f.iter().enumerate() {
            acc += c * x[base + j];
        }
        *o = acc;
    }
    let boundary = (0..k_lo).chain(k_hi..half);
    for k in boundary {
        let mut acc = 0.0;
        for (j, &c) in f.iter().enumerate() {
            acc += c * x[wrap(2 * k as isize + j as isize - s as isize, n)];
        }
        out[k] = acc;
    }
}

/// Periodized synthesis of both channels (scatter form), accumulating
/// into `out`, which must be zeroed by the caller.
fn synthesize_channels_per(a: &[f64], d: &[f64], ctx: &BankCtx, out: &mut [f64]) {
    let n = out.len();
    for (coeffs, f, s) in [(a, &ctx.scat_lo, ctx.ta), (d, &ctx.scat_hi, ctx.tb)] {
        let l = f.len();
        for (k, &v) in coeffs.iter().enumerate() {
            let base = 2 * k as isize - s as isize;
            if base >= 0 && base as usize + l <= n {
                let base = base as usize;
                for (j, &c) in f.iter().enumerate() {
                    out[base + j] += c * v;
                }
            } else {
                for (j, &c) in f.iter().enumerate() {
                    out[wrap(base + j as isize, n)] += c * v;
                }
            }
        }
    }
}

/// Adjoint of `synthesize_channels_per`: gathers with the scatter taps.
fn synthesize_adjoint_per(g: &[f64], ctx: &BankCtx, a_adj: &mut [f64], d_adj: &mut [f64]) {
    analyze_channel_per(g, &ctx.scat_lo, ctx.ta, a_adj);
    analyze_channel_per(g, &ctx.scat_hi, ctx.tb, d_adj);
}

/// Kept-index sets for the whole-sample symmetric scheme at length `n`.
pub(crate) struct WssLayout {
    /// period of the symmetrized signal's subbands
    m: usize,
    /// involution shift for (low, high)
    s_lo: usize,
    s_hi: usize,
    keep_lo: Vec<usize>,
    keep_hi: Vec<usize>,
}

impl WssLayout {
    pub fn new(n: usize) -> Self {
        let m = n - 1;
        let s_lo = (n as i64 + WSS_LOW_ANCHOR).rem_euclid(m as i64) as usize;
        let s_hi = (n as i64 + WSS_HIGH_ANCHOR).rem_euclid(m as i64) as usize;
        let keep = |s: usize| -> Vec<usize> {
            (0..m)
                .filter(|&k| k <= (s + m - k % m) % m)
                .collect()
        };
        let layout = WssLayout {
            m,
            s_lo,
            s_hi,
            keep_lo: keep(s_lo),
            keep_hi: keep(s_hi),
        };
        debug_assert_eq!(layout.keep_lo.len(), n / 2);
        debug_assert_eq!(layout.keep_hi.len(), n / 2);
        layout
    }

    fn partner(&self, s: usize, k: usize) -> usize {
        (s + self.m - k % self.m) % self.m
    }
}

fn wss_extend(x: &[f64], y: &mut Vec<f64>) {
    y.clear();
    y.extend_from_slice(x);
    for i in (1..x.len() - 1).rev() {
        y.push(x[i]);
    }
}

fn analyze_row(x: &[f64], ctx: &BankCtx, layout: Option<&WssLayout>, out_a: &mut [f64], out_d: &mut [f64]) {
    match layout {
        None => {
            analyze_channel_per(x, &ctx.ana_lo, ctx.sa, out_a);
            analyze_channel_per(x, &ctx.ana_hi, ctx.sb, out_d);
        }
        Some(lay) => {
            let mut y = Vec::new();
            wss_extend(x, &mut y);
            let m2 = y.len(); // 2n − 2
            let mut a_full = vec![0.0; m2 / 2];
            let mut d_full = vec![0.0; m2 / 2];
            analyze_channel_per(&y, &ctx.ana_lo, ctx.sa, &mut a_full);
            analyze_channel_per(&y, &ctx.ana_hi, ctx.sb, &mut d_full);
            for (i, &k) in lay.keep_lo.iter().enumerate() {
                out_a[i] = a_full[k];
            }
            for (i, &k) in lay.keep_hi.iter().enumerate() {
                out_d[i] = d_full[k];
            }
        }
    }
}

fn synthesize_row(a: &[f64], d: &[f64], ctx: &BankCtx, layout: Option<&WssLayout>, out: &mut [f64]) {
    match layout {
        None => {
            out.fill(0.0);
            synthesize_channels_per(a, d, ctx, out);
        }
        Some(lay) => {
            let n = out.len();
            let mut a_full = vec![0.0; lay.m];
            let mut d_full = vec![0.0; lay.m];
            for (i, &k) in lay.keep_lo.iter().enumerate() {
                a_full[k] = a[i];
                a_full[lay.partner(lay.s_lo, k)] = a[i];
            }
            for (i, &k) in lay.keep_hi.iter().enumerate() {
                d_full[k] = d[i];
                d_full[lay.partner(lay.s_hi, k)] = d[i];
            }
            let mut y = vec![0.0; 2 * lay.m];
            synthesize_channels_per(&a_full, &d_full, ctx, &mut y);
            out.copy_from_slice(&y[..n]);
        }
    }
}

fn synthesize_row_adjoint(g: &[f64], ctx: &BankCtx, layout: Option<&WssLayout>, a_adj: &mut [f64], d_adj: &mut [f64]) {
    match layout {
        None => synthesize_adjoint_per(g, ctx, a_adj, d_adj),
        Some(lay) => {
            // transpose of crop = zero-extension to the full period
            let mut y = vec![0.0; 2 * lay.m];
            y[..g.len()].copy_from_slice(g);
            let mut a_full = vec![0.0; lay.m];
            let mut d_full = vec![0.0; lay.m];
            synthesize_adjoint_per(&y, ctx, &mut a_full, &mut d_full);
            // transpose of the orbit expansion = sum over the orbit
            for (i, &k) in lay.keep_lo.iter().enumerate() {
                let p = lay.partner(lay.s_lo, k);
                a_adj[i] = a_full[k] + if p != k { a_full[p] } else { 0.0 };
            }
            for (i, &k) in lay.keep_hi.iter().enumerate() {
                let p = lay.partner(lay.s_hi, k);
                d_adj[i] = d_full[k] + if p != k { d_full[p] } else { 0.0 };
            }
        }
    }
}

fn row_layout(ctx: &BankCtx, n: usize) -> Option<WssLayout> {
    if ctx.wss {
        Some(WssLayout::new(n))
    } else {
        None
    }
}

/// Transform every row of `x` into `[low | high]` halves.
pub(crate) fn analyze_rows(x: &Array2<f64>, ctx: &BankCtx) -> Array2<f64> {
    let (h, w) = x.dim();
    let layout = row_layout(ctx, w);
    let xs = x.as_slice().expect("standard layout");
    let mut out = Array2::<f64>::zeros((h, w));
    {
        let os = out.as_slice_mut().unwrap();
        os.par_chunks_mut(w).zip(xs.par_chunks(w)).for_each(|(orow, xrow)| {
            let (a, d) = orow.split_at_mut(w / 2);
            analyze_row(xrow, ctx, layout.as_ref(), a, d);
        });
    }
    out
}

/// Inverse of [`analyze_rows`].
pub(crate) fn synthesize_rows(y: &Array2<f64>, ctx: &BankCtx) -> Array2<f64> {
    let (h, w) = y.dim();
    let layout = row_layout(ctx, w);
    let ys = y.as_slice().expect("standard layout");
    let mut out = Array2::<f64>::zeros((h, w));
    {
        let os = out.as_slice_mut().unwrap();
        os.par_chunks_mut(w).zip(ys.par_chunks(w)).for_each(|(orow, yrow)| {
            let (a, d) = yrow.split_at(w / 2);
            synthesize_row(a, d, ctx, layout.as_ref(), orow);
        });
    }
    out
}

/// Exact transpose of [`synthesize_rows`].
pub(crate) fn synthesize_rows_adjoint(g: &Array2<f64>, ctx: &BankCtx) -> Array2<f64> {
    let (h, w) = g.dim();
    let layout = row_layout(ctx, w);
    let gs = g.as_slice().expect("standard layout");
    let mut out = Array2::<f64>::zeros((h, w));
    {
        let os = out.as_slice_mut().unwrap();
        os.par_chunks_mut(w).zip(gs.par_chunks(w)).for_each(|(orow, grow)| {
            let (a, d) = orow.split_at_mut(w / 2);
            synthesize_row_adjoint(grow, ctx, layout.as_ref(), a, d);
        });
    }
    out
}

pub(crate) fn transpose(x: &Array2<f64>) -> Array2<f64> {
    x.t().as_standard_layout().to_owned()
}

/// Single-level 2D analysis on the packed layout: quadrants
/// `[[LL, HL], [LH, HH]]`.
pub(crate) fn dwt2_packed(x: &Array2<f64>, ctx: &BankCtx) -> Array2<f64> {
    transpose(&analyze_rows(&transpose(&analyze_rows(x, ctx)), ctx))
}

/// Single-level 2D synthesis from the packed layout.
pub(crate) fn idwt2_packed(y: &Array2<f64>, ctx: &BankCtx) -> Array2<f64> {
    synthesize_rows(&transpose(&synthesize_rows(&transpose(y), ctx)), ctx)
}

/// Exact transpose of [`idwt2_packed`].
pub(crate) fn idwt2_packed_adjoint(g: &Array2<f64>, ctx: &BankCtx) -> Array2<f64> {
    transpose(&synthesize_rows_adjoint(&transpose(&synthesize_rows_adjoint(g, ctx)), ctx))
}
