//! Awale (Oware, Ayo) game-search workbench.
//!
//! - [`rules`]: the rules engine and [`notation`] for positions
//! - [`search`]: minimax and alpha-beta with a linear evaluation, plus
//!   solution-tree checks on explicit trees
//! - [`cbr`]: case-based reasoning players (similarity retrieval, perceptron
//!   move classifier, casing and the minimax hybrid)
//! - [`endgame`]: retrograde-analysis endgame database over ranked positions
//! - [`arena`]: agents, matches, level ladders and table reports
//! - [`cli`]: the `ayo` command-line front end
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod arena;
pub mod cbr;
pub mod cli;
pub mod endgame;
mod io;
pub mod notation;
pub mod rules;
pub mod search;

pub use notation::{format_state, parse_state};
pub use rules::{new_game, Board, GameConfig, GameState, GameStatus, Move, Side, StatusKind};
