use std::path::PathBuf;

use thiserror::Error;

use crate::color::ColorSpace;

/// Errors produced by the fusion library.
#[derive(Debug, Error)]
pub enum FusionError {
    #[error("dimensions below minimum: {width}x{height} (need at least {min}x{min})")]
    DimensionsBelowMinimum {
        width: usize,
        height: usize,
        min: usize,
    },

    #[error("dimension mismatch: {left_width}x{left_height} vs {right_width}x{right_height}")]
    DimensionMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },

    #[error("data length {len} does not match {width}x{height}")]
    BadDataLength {
        len: usize,
        width: usize,
        height: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("wrong color space: expected {expected}, got {actual}")]
    WrongColorSpace {
        expected: ColorSpace,
        actual: ColorSpace,
    },

    #[error("unsupported image format: {0}")]
    UnsupportedFormat(String),

    #[error("decision maps are not complementary")]
    NotComplementary,

    #[error("no pairs found in {0}")]
    NoPairsFound(PathBuf),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, FusionError>;
