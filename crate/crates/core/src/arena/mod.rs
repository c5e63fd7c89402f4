//! Tournament harness: agents, single games with full records, matches with
//! mean and standard deviation statistics, the four-level ladder of proxy
//! opponents, and table reports.

mod agent;
mod game;
mod report;
mod stats;

pub use agent::{Agent, AgentSpec, Decision};
pub use game::{play_game, play_game_with, GameRecord};
pub use report::{capability_rows, cell, render_capabilities, render_stats, CapabilityRow, ReportFormat, CSV_HEADER};
pub use stats::{
    levels_ladder, play_match, run_match, run_match_with, MatchGame, MatchOptions, MatchStats, Summary, LEVELS,
};

use thiserror::Error;

use crate::endgame::DbError;
use crate::rules::RulesError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ArenaError {
    #[error("invalid agent: {0}")]
    InvalidAgent(String),
    #[error("a match needs at least one game")]
    NoGames,
    #[error(transparent)]
    Rules(#[from] RulesError),
    #[error(transparent)]
    Db(#[from] DbError),
}
