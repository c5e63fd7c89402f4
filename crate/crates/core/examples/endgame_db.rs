//! Builds an endgame database, checks it against forward search, saves and
//! reloads it, and probes a few positions.
//!
//! cargo run --release --example endgame_db -- [max_seeds] [workers]

use std::time::Instant;

use ayo::endgame::{self, probe, rank_moves, verify, EndgameDatabase, SolveOptions, VerifyMode};
use ayo::rules::{Board, GameConfig, GameState, Position, Side};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_seeds: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let workers: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let config = GameConfig::default();

    let started = Instant::now();
    let db = endgame::solve_with(max_seeds, &config, SolveOptions { workers }, |r| {
        println!(
            "level {:>2}: {:>9} entries, {:>3} sweeps, {:>6} eternal, {:.2?}",
            r.level, r.entries, r.sweeps, r.eternal, r.elapsed
        );
    })?;
    println!("solved {} entries in {:.2?}", db.entry_count(), started.elapsed());

    let started = Instant::now();
    let mode = if max_seeds <= 6 { VerifyMode::Exhaustive(max_seeds) } else { VerifyMode::Sampled(1000) };
    let report = verify(&db, &config, mode);
    println!(
        "verify {mode:?}: {} checked, {} eternal, {} mismatches in {:.2?}",
        report.checked,
        report.eternal,
        report.mismatches.len(),
        started.elapsed()
    );

    let path = std::env::temp_dir().join(format!("ayo-example-{max_seeds}.db"));
    db.save(&path)?;
    let loaded = EndgameDatabase::load(&path)?;
    println!(
        "saved {} bytes to {}; reload identical: {}",
        std::fs::metadata(&path)?.len(),
        path.display(),
        loaded == db
    );

    let positions = [
        (Board::from_rows([0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 0, 0]), Side::South),
        (Board::from_rows([1, 0, 0, 0, 2, 0], [2, 1, 0, 0, 0, 0]), Side::South),
        (Board::from_rows([0, 1, 0, 1, 0, 0], [0, 0, 2, 0, 1, 1]), Side::North),
    ];
    for (board, to_move) in positions {
        if board.seeds() > max_seeds {
            continue;
        }
        let state = GameState::from_position(Position { board, captured: [0, 0], to_move });
        let value = probe(&db, &state)?;
        let moves: Vec<String> =
            rank_moves(&db, &state, &config)?.iter().map(|m| format!("pit {} -> {:+}", m.mv.pit, m.score)).collect();
        println!("{} to move on {:?}: value {value:+}; {}", to_move.letter(), board.pits, moves.join(", "));
    }
    Ok(())
}
