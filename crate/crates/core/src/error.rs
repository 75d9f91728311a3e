use thiserror::Error;

use crate::count::Count;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("start ordinate {start} lies outside the corridor [0..{h}]")]
    StartOutsideCorridor { start: i64, h: u32 },

    #[error("window half-width {0} is below -1")]
    InvalidHalfWidth(i64),

    #[error("path leaves the corridor [0..{h}] after step {position}")]
    PathOutsideCorridor { position: usize, h: u32 },

    #[error("enumeration too large: {predicted} paths exceed the cap of {cap}")]
    EnumerationTooLarge { predicted: Count, cap: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("decode out of corridor [0..{h}] at label {position}")]
    DecodeOutOfCorridor { position: usize, h: u32 },

    #[error("window size became negative at label {position}")]
    NegativeWindow { position: usize },

    #[error("not applicable for this input: {0}")]
    NotApplicable(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("unknown reference sequence {0}")]
    UnknownReference(String),

    #[error("no golden table for h={h}, nmax={n_max}")]
    NoGolden { h: u32, n_max: u32 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
