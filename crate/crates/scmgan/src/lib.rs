//! Song-to-song conversion toolkit.
//!
//! The pipeline splits a song into vocals and accompaniment by masking
//! magnitude spectrograms, converts the vocal's mel-cepstral features with a
//! gated-CNN CycleGAN, re-synthesizes the converted vocal and overlays it on
//! the untouched accompaniment. Training can be jump-started by transferring
//! named weights from a donor checkpoint trained on a related conversion
//! task. Global-variance and modulation-spectrum metrics quantify how close
//! converted features land to the target singer.
//!
//! Module map:
//!
//! * [`audio`] — WAV I/O, resampling, STFT/ISTFT.
//! * [`vocoder`] — F0 / mel-cepstrum / aperiodicity analysis and synthesis.
//! * [`nn`] — reverse-mode autodiff tensors and the gated-conv op set.
//! * [`cyclegan`] — generators, discriminators, losses, training loop.
//! * [`separation`] — spectrogram-mask source separation.
//! * [`checkpoint`] — named-tensor persistence and transfer initialization.
//! * [`pipeline`] — end-to-end split → convert → merge orchestration.
//! * [`metrics`] — GV, MS, RMSE summaries and MOS aggregation.
//! * [`testkit`] — synthetic singers, mixtures and the demo experiment.

pub mod audio;

pub(crate) mod fftutil;
pub(crate) mod util;
