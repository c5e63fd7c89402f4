//! Retrograde-analysis endgame database.
//!
//! Every board holding at most `max_seeds` seeds is ranked within its seed
//! count ([`godel_rank`]) and given the best capture differential the player
//! to move can force from there on. Entries are stored for the player to move
//! owning pits 0..6; positions with North to move are probed with the rows
//! swapped.
//!
//! Values are computed level by level from the empty board upward. Capturing
//! moves lead to already solved levels; non-capturing moves stay in the level
//! and may cycle, which is settled by tightening a lower and an upper bound on
//! every entry until neither moves. Entries whose bounds never meet are
//! eternal: they are scored by what each side holds on its own row, clamped
//! to the bounds. Positions without a legal move are scored by the stalemate
//! rule: 0 when the game is cancelled, `-n` when the mover loses.
//!
//! [`ForwardSolver`] recomputes single values by forward search with the same
//! semantics and serves as the oracle for [`verify`].

mod db;
mod forward;
mod godel;
mod packed;
mod raw;
mod solver;
mod verify;

pub use db::{
    best_move_from_db, best_move_with_history, probe, rank_moves, DbEntry, EndgameDatabase, RankedMove, MAX_DB_SEEDS,
};
pub use forward::{ForwardSolver, ForwardValue};
pub use godel::{binomial, count_positions, godel_rank, godel_unrank, GodelIndex};
pub use packed::{PackedLevel, ENTRY_BITS, SENTINEL};
pub use solver::{solve, solve_with, LevelReport, SolveOptions};
pub use verify::{verify, Mismatch, MismatchKind, VerifyMode, VerifyReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DbError {
    #[error("position count for {n_seeds} seeds overflows 64 bits")]
    CountOverflow { n_seeds: u32 },
    #[error("rank {rank} out of range for {n_seeds} seeds ({count} positions)")]
    RankOutOfRange { n_seeds: u32, rank: u64, count: u64 },
    #[error("max_seeds {0} does not fit {ENTRY_BITS}-bit entries (at most {MAX_DB_SEEDS})")]
    MaxSeedsTooLarge(u32),
    #[error("level {level} has too many positions to solve in memory")]
    LevelTooLarge { level: u32 },
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("worker pool: {0}")]
    Pool(String),
    #[error("position holds {seeds} seeds, database covers at most {max_seeds}")]
    SeedsAboveBound { seeds: u32, max_seeds: u32 },
    #[error("entry {rank} of level {level} is not solved")]
    Unsolved { level: u32, rank: u64 },
    #[error("database was built under different rules")]
    DigestMismatch,
    #[error("position has no legal move")]
    NoLegalMove,
    #[error("not a database file (bad magic)")]
    BadMagic,
    #[error("unsupported database version {0}")]
    UnsupportedVersion(u8),
    #[error("unsupported entry width {0} bits")]
    BadEntryBits(u8),
    #[error("database header is truncated")]
    TruncatedHeader,
    #[error("level {level} declares {found} entries, expected {expected}")]
    LevelCountMismatch { level: u32, found: u64, expected: u64 },
    #[error("level {level} is truncated")]
    TruncatedLevel { level: u32 },
    #[error("{0} unexpected bytes after the last level")]
    TrailingBytes(usize),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for DbError {
    fn from(e: std::io::Error) -> Self {
        DbError::Io(e.to_string())
    }
}
