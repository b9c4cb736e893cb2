use thiserror::Error;

use crate::cartan::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is out of range for type {family} (need n >= {min})")]
    RankOutOfRange {
        family: Family,
        rank: usize,
        min: usize,
    },

    #[error("cannot parse Cartan type {0:?} (expected e.g. \"A4\", \"B3\", \"D5\")")]
    BadDatum(String),

    #[error("letter {letter} is not a node of a rank {rank} diagram")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("coordinate vector has length {got}, word has length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("letter {0} does not occur in the word, so eps/phi/e/f are undefined for it")]
    LetterAbsent(usize),

    #[error("illegal {kind} at position {position}: {reason}")]
    IllegalMove {
        kind: &'static str,
        position: usize,
        reason: String,
    },

    #[error("unsupported: G_2 (6-moves never occur in classical types)")]
    UnsupportedSixMove,

    #[error("script source {script:?} does not match element word {element:?}")]
    SourceMismatch {
        script: Vec<usize>,
        element: Vec<usize>,
    },

    #[error("word {got:?} is not the fixed longest word {expected:?} of this type")]
    NotLongestWord {
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("{helper} is only defined for {range}, got i = {index}")]
    HelperOutOfRange {
        helper: &'static str,
        index: usize,
        range: String,
    },

    #[error("braid procedure failed at {step}: {detail}")]
    Procedure { step: &'static str, detail: String },

    #[error("box of {vertices} vertices exceeds the cap of {cap}")]
    BoxTooLarge { vertices: u128, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}
