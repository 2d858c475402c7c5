//! Sample-rate conversion by windowed-sinc interpolation.

use super::{AudioClip, AudioError};

/// Half-width of the sinc kernel in zero crossings of the cutoff frequency.
const LOBES: f64 = 16.0;

/// Resamples a clip to `target_hz` with a Hann-windowed sinc kernel whose
/// cutoff sits just under the narrower of the two Nyquist limits. Output
/// length is `round(len * target / src)`. Equal rates return the input
/// unchanged.
pub fn resample(clip: &AudioClip, target_hz: u32) -> Result<AudioClip, AudioError> {
    if target_hz == 0 {
        return Err(AudioError::ZeroSampleRate);
    }
    let src_hz = clip.sample_rate();
    if target_hz == src_hz {
        return Ok(clip.clone());
    }

    let x = clip.samples();
    let ratio = target_hz as f64 / src_hz as f64;
    let out_len = (x.len() as f64 * ratio).round() as usize;

    // Cutoff in cycles per source sample; 0.5 would be source Nyquist.
    let fc = 0.5 * 0.92 * ratio.min(1.0);
    let half_width = (LOBES / (2.0 * fc)).ceil();

    let mut out = Vec::with_capacity(out_len);
    for n in 0..out_len {
        let t = n as f64 / ratio;
        let k_lo = ((t - half_width).ceil() as isize).max(0) as usize;
        let k_hi = ((t + half_width).floor() as isize).min(x.len() as isize - 1) as usize;
        let mut acc = 0.0;
        for k in k_lo..=k_hi {
            let d = k as f64 - t;
            acc += x[k] * kernel(d, fc, half_width);
        }
        out.push(acc);
    }
    AudioClip::new(out, target_hz)
}

fn kernel(d: f64, fc: f64, half_width: f64) -> f64 {
    let u = d / half_width;
    // Hann taper over the kernel support.
    let w = 0.5 * (1.0 + (std::f64::consts::PI * u).cos());
    2.0 * fc * sinc(2.0 * fc * d) * w
}

fn sinc(v: f64) -> f64 {
    if v.abs() < 1e-12 {
        1.0
    } else {
        let pv = std::f64::consts::PI * v;
        pv.sin() / pv
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audio::stft;

    fn sine(freq: f64, rate: u32, secs: f64) -> AudioClip {
        let n = (secs * rate as f64) as usize;
        let samples = (0..n)
            .map(|i| 0.8 * (2.0 * std::f64::consts::PI * freq * i as f64 / rate as f64).sin())
            .collect();
        AudioClip::new(samples, rate).unwrap()
    }

    #[test]
    fn identity_when_rates_match() {
        let clip = sine(440.0, 16000, 0.25);
        let out = resample(&clip, 16000).unwrap();
        assert_eq!(out.samples(), clip.samples());
    }

    #[test]
    fn length_arithmetic() {
        let clip = sine(440.0, 44100, 1.0);
        let out = resample(&clip, 16000).unwrap();
        assert!((out.len() as i64 - 16000).abs() <= 1, "len {}", out.len());
    }

    #[test]
    fn downsample_keeps_spectral_peak() {
        let clip = sine(440.0, 48000, 1.0);
        let out = resample(&clip, 16000).unwrap();
        let spec = stft(&out, 1024, 256).unwrap();
        // Mid-signal frame, away from edges.
        let frame = &spec.frames()[spec.num_frames() / 2];
        let peak_bin = frame
            .iter()
            .take(513)
            .enumerate()
            .max_by(|a, b| a.1.norm_sqr().partial_cmp(&b.1.norm_sqr()).unwrap())
            .unwrap()
            .0;
        let expected = (440.0 * 1024.0 / 16000.0).round() as usize;
        assert!(
            (peak_bin as i64 - expected as i64).abs() <= 1,
            "peak bin {peak_bin} expected {expected}"
        );
    }

    #[test]
    fn upsample_preserves_tone_level() {
        let clip = sine(440.0, 16000, 0.5);
        let out = resample(&clip, 48000).unwrap();
        // Energy preserved within a couple percent away from the edges.
        let inner = &out.samples()[2000..out.len() - 2000];
        let r = crate::util::rms(inner);
        let expected = 0.8 / f64::sqrt(2.0);
        assert!((r - expected).abs() / expected < 0.02, "rms {r}");
    }

    #[test]
    fn zero_target_rejected() {
        let clip = sine(440.0, 16000, 0.1);
        assert!(matches!(
            resample(&clip, 0),
            Err(AudioError::ZeroSampleRate)
        ));
    }
}
