//! WAV RIFF read/write. Reads PCM 8/16/24-bit and 32-bit float, mono or
//! stereo (downmixed by averaging); writes 16-bit PCM little-endian.

use super::{AudioClip, AudioError};
use std::path::Path;

/// Diagnostics from [`store_wav`].
#[derive(Debug, Clone, Copy, Default)]
pub struct WavWriteReport {
    /// Samples outside `[-1, 1]` saturated during quantization.
    pub clipped: usize,
}

fn map_hound(err: hound::Error) -> AudioError {
    match err {
        hound::Error::IoError(e) => AudioError::Io(e),
        hound::Error::FormatError(msg) => AudioError::MalformedHeader(msg.to_string()),
        hound::Error::Unsupported => {
            AudioError::UnsupportedEncoding("wav feature not supported".into())
        }
        other => AudioError::MalformedHeader(other.to_string()),
    }
}

/// Loads a WAV file as a mono clip with samples scaled to `[-1, 1]`.
/// Stereo input is downmixed by averaging the two channels.
pub fn load_wav(path: impl AsRef<Path>) -> Result<AudioClip, AudioError> {
    let mut reader = hound::WavReader::open(path).map_err(map_hound)?;
    let spec = reader.spec();
    if spec.channels == 0 || spec.channels > 2 {
        return Err(AudioError::UnsupportedEncoding(format!(
            "{} channels (only mono and stereo are readable)",
            spec.channels
        )));
    }

    let interleaved: Vec<f64> = match (spec.sample_format, spec.bits_per_sample) {
        (hound::SampleFormat::Float, 32) => reader
            .samples::<f32>()
            .map(|s| s.map(|v| v as f64))
            .collect::<Result<_, _>>()
            .map_err(map_hound)?,
        (hound::SampleFormat::Int, bits @ (8 | 16 | 24)) => {
            let scale = 1.0 / (1u32 << (bits - 1)) as f64;
            reader
                .samples::<i32>()
                .map(|s| s.map(|v| v as f64 * scale))
                .collect::<Result<_, _>>()
                .map_err(map_hound)?
        }
        (fmt, bits) => {
            return Err(AudioError::UnsupportedEncoding(format!(
                "{bits}-bit {fmt:?} PCM"
            )))
        }
    };

    if interleaved.is_empty() {
        return Err(AudioError::EmptyFile);
    }

    let samples = if spec.channels == 2 {
        interleaved
            .chunks_exact(2)
            .map(|lr| 0.5 * (lr[0] + lr[1]))
            .collect()
    } else {
        interleaved
    };

    AudioClip::new(samples, spec.sample_rate)
}

/// Writes a clip as 16-bit PCM little-endian WAV. Samples outside `[-1, 1]`
/// saturate and are counted in the report. Quantization is `round(x * 32768)`
/// clamped to `i16`, the exact inverse of the loader's `s / 32768` scaling,
/// so a load/store round trip is bit-exact.
pub fn store_wav(
    clip: &AudioClip,
    path: impl AsRef<Path>,
) -> Result<WavWriteReport, AudioError> {
    if clip.is_empty() {
        return Err(AudioError::EmptyClip);
    }
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate: clip.sample_rate(),
        bits_per_sample: 16,
        sample_format: hound::SampleFormat::Int,
    };
    let mut writer = hound::WavWriter::create(path, spec).map_err(map_hound)?;
    let mut clipped = 0usize;
    for &s in clip.samples() {
        let mut v = s;
        if v > 1.0 {
            v = 1.0;
            clipped += 1;
        } else if v < -1.0 {
            v = -1.0;
            clipped += 1;
        }
        let q = (v * 32768.0).round().clamp(-32768.0, 32767.0) as i16;
        writer.write_sample(q).map_err(map_hound)?;
    }
    writer.finalize().map_err(map_hound)?;
    Ok(WavWriteReport { clipped })
}
