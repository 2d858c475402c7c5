//! Waveform ingestion/emission and time-frequency transforms.
//!
//! [`AudioClip`] is the universal currency: a mono sample buffer in
//! `[-1, 1]` with an explicit sample rate. WAV files come in and out
//! through [`load_wav`]/[`store_wav`], rates are changed with
//! [`resample`], and [`stft`]/[`istft`] move between waveforms and
//! [`Spectrogram`]s with perfect reconstruction under COLA windows.

mod resample;
mod stft;
mod wav;

pub use resample::resample;
pub use stft::{istft, stft, Spectrogram, Window};
pub use wav::{load_wav, store_wav, WavWriteReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AudioError {
    #[error("malformed WAV header: {0}")]
    MalformedHeader(String),
    #[error("unsupported WAV encoding: {0}")]
    UnsupportedEncoding(String),
    #[error("WAV file contains no audio frames")]
    EmptyFile,
    #[error("clip is empty")]
    EmptyClip,
    #[error("clip too short: {len} samples, need at least {min}")]
    ClipTooShort { len: usize, min: usize },
    #[error("non-finite sample at index {0}")]
    NonFiniteSample(usize),
    #[error("sample rate must be positive")]
    ZeroSampleRate,
    #[error("invalid STFT config: {0}")]
    BadStftConfig(String),
    #[error("window/hop violates COLA: frame_len {frame_len}, hop {hop}")]
    NonColaConfig { frame_len: usize, hop: usize },
    #[error("I/O failure: {0}")]
    Io(#[from] std::io::Error),
}

/// Mono audio buffer with samples in `[-1, 1]` and a fixed sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioClip {
    samples: Vec<f64>,
    sample_rate: u32,
}

impl AudioClip {
    /// Builds a clip, rejecting non-finite samples and a zero sample rate.
    /// Samples are not clamped here; emission points saturate instead.
    pub fn new(samples: Vec<f64>, sample_rate: u32) -> Result<Self, AudioError> {
        if sample_rate == 0 {
            return Err(AudioError::ZeroSampleRate);
        }
        if let Some(idx) = samples.iter().position(|s| !s.is_finite()) {
            return Err(AudioError::NonFiniteSample(idx));
        }
        Ok(Self {
            samples,
            sample_rate,
        })
    }

    /// All-zero clip of `len` samples.
    pub fn silence(len: usize, sample_rate: u32) -> Self {
        Self {
            samples: vec![0.0; len],
            sample_rate,
        }
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [f64] {
        &mut self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }

    pub fn rms(&self) -> f64 {
        crate::util::rms(&self.samples)
    }
}
