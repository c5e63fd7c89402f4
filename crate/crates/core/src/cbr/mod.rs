//! Case-based reasoning players.
//!
//! Source episodes are boards seen from the player to move, labelled with the
//! move played. Retrieval ranks them by product-moment correlation with the
//! current board. Casing plays the best retrieved move and falls back on a
//! perceptron classifier; the hybrid lets retrieval override an alpha-beta
//! choice.

mod library;
mod perceptron;
mod player;
mod similarity;

pub use library::{harvest_episodes, Episode, EpisodeLibrary};
pub use perceptron::{classify, train_perceptron, PerceptronModel, CLASSES, INPUTS};
pub use player::{casing_move, hybrid_move, retrieve, HybridDecision, Retrieved};
pub use similarity::{similarity, Similarity};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CbrError {
    #[error("vectors differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("move label {0} is not a relative pit 0..6")]
    BadLabel(u8),
    #[error("episode library is empty")]
    EmptyLibrary,
    #[error("learning rate must be positive and finite, got {0}")]
    InvalidRate(f64),
    #[error("invalid CBR config: {0}")]
    InvalidConfig(String),
    #[error("library line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("perceptron model: {0}")]
    Model(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for CbrError {
    fn from(e: std::io::Error) -> Self {
        CbrError::Io(e.to_string())
    }
}

/// Retrieval thresholds. An episode is retrieved when its recorded game value
/// is at most `alpha` and its similarity to the target is at least `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CbrConfig {
    pub alpha: f64,
    pub beta: f64,
}

impl Default for CbrConfig {
    fn default() -> Self {
        CbrConfig { alpha: f64::INFINITY, beta: 0.9 }
    }
}

impl CbrConfig {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, CbrError> {
        if alpha.is_nan() {
            return Err(CbrError::InvalidConfig("alpha is NaN".into()));
        }
        if !(-1.0..=1.0).contains(&beta) {
            return Err(CbrError::InvalidConfig(format!("beta {beta} outside [-1, 1]")));
        }
        Ok(CbrConfig { alpha, beta })
    }
}
