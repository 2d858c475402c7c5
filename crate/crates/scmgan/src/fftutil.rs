//! Shared FFT plumbing on top of rustfft, with a per-thread plan cache.

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

thread_local! {
    static PLANS: RefCell<PlanCache> = RefCell::new(PlanCache::default());
}

#[derive(Default)]
struct PlanCache {
    planner: Option<FftPlanner<f64>>,
    forward: HashMap<usize, Arc<dyn Fft<f64>>>,
    inverse: HashMap<usize, Arc<dyn Fft<f64>>>,
}

fn with_plan(len: usize, inverse: bool, buf: &mut [Complex<f64>]) {
    PLANS.with(|cache| {
        let mut cache = cache.borrow_mut();
        let planner = cache.planner.get_or_insert_with(FftPlanner::new);
        let plan = if inverse {
            planner.plan_fft_inverse(len)
        } else {
            planner.plan_fft_forward(len)
        };
        let map = if inverse {
            &mut cache.inverse
        } else {
            &mut cache.forward
        };
        let plan = map.entry(len).or_insert(plan).clone();
        plan.process(buf);
    });
}

/// In-place forward DFT (no scaling).
pub fn fft_forward(buf: &mut [Complex<f64>]) {
    with_plan(buf.len(), false, buf);
}

/// In-place inverse DFT scaled by 1/N, so `fft_inverse(fft_forward(x)) == x`.
pub fn fft_inverse(buf: &mut [Complex<f64>]) {
    let n = buf.len();
    with_plan(n, true, buf);
    let scale = 1.0 / n as f64;
    for v in buf.iter_mut() {
        *v *= scale;
    }
}

/// Forward DFT of a real signal zero-padded to `n`, returning all `n` bins.
pub fn real_fft(signal: &[f64], n: usize) -> Vec<Complex<f64>> {
    debug_assert!(signal.len() <= n);
    let mut buf = vec![Complex::new(0.0, 0.0); n];
    for (b, &s) in buf.iter_mut().zip(signal.iter()) {
        b.re = s;
    }
    fft_forward(&mut buf);
    buf
}

/// Power spectrum `|X_k|^2` of a real signal zero-padded to `n` (onesided,
/// `n/2 + 1` bins).
pub fn power_spectrum(signal: &[f64], n: usize) -> Vec<f64> {
    let spec = real_fft(signal, n);
    spec[..n / 2 + 1].iter().map(|c| c.norm_sqr()).collect()
}
