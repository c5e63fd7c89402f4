//! Solves a reduced game with eight seeds, reads its value from the database
//! and lets the database player meet several opponents.
//!
//! cargo run --release --example perfect_play -- [games]

use std::sync::Arc;

use ayo::arena::{play_match, AgentSpec, MatchOptions};
use ayo::endgame::{probe, rank_moves, solve};
use ayo::rules::{new_game, Board, GameConfig};

fn main() -> anyhow::Result<()> {
    let games: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(100);
    let config = GameConfig::variant(Board::from_rows([0, 1, 1, 1, 1, 0], [0, 1, 1, 1, 1, 0]));
    let db = Arc::new(solve(8, &config)?);
    let start = new_game(&config)?;
    println!("start {} is worth {:+} to South", ayo::notation::format_state(&start), probe(&db, &start)?);
    for m in rank_moves(&db, &start, &config)? {
        println!("  pit {}: {:+}", m.mv.pit, m.score);
    }

    let perfect = AgentSpec::DbPerfect { db: db.clone(), fallback_depth: 4 };
    let options = MatchOptions { swap_sides: true, opening_plies: 2, parallel: true };
    for opponent in [AgentSpec::random(5), AgentSpec::minimax(2), AgentSpec::minimax(5)] {
        let played = play_match(&perfect, &opponent, games, &config, 40, &options)?;
        let (mut won, mut drawn, mut lost) = (0, 0, 0);
        for g in &played {
            match g.record.winner() {
                Some(side) if side == g.a_side => won += 1,
                Some(_) => lost += 1,
                None => drawn += 1,
            }
        }
        println!("{} vs {}: {won}-{drawn}-{lost}", perfect.name(), opponent.name());
    }
    Ok(())
}
