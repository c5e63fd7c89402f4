//! Builds an episode library from self-play, trains the perceptron on it,
//! retrieves similar episodes for a new position and lets the case-based
//! player face a random one.
//!
//! cargo run --release --example cbr_casing -- [games]

use std::sync::Arc;

use ayo::arena::{play_match, run_match_with, AgentSpec, MatchOptions};
use ayo::cbr::{harvest_episodes, retrieve, train_perceptron, CbrConfig, Episode, PerceptronModel};
use ayo::rules::{new_game, GameConfig, Move};

fn main() -> anyhow::Result<()> {
    let games: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(40);
    let config = GameConfig::default();
    let teacher = AgentSpec::minimax(3);
    let played = play_match(&teacher, &teacher, games, &config, 1, &MatchOptions::default())?;
    let records: Vec<_> = played.into_iter().map(|g| g.record).collect();
    let library = harvest_episodes(&records, true);
    println!("{games} self-play games gave {} winner episodes", library.len());

    let model = train_perceptron(&library, 0.1, 30)?;
    println!("perceptron: {} training errors of {}", model.training_errors(&library), library.len());
    let restored = PerceptronModel::from_json(&model.to_json())?;
    assert_eq!(restored.training_errors(&library), model.training_errors(&library));

    let state = new_game(&config)?.apply_move(Move::new(2), &config)?.next;
    let cbr = CbrConfig::default();
    let hits = retrieve(&library, &Episode::target(&state), &cbr);
    println!("{} episodes within similarity {} of the position after pit 2", hits.len(), cbr.beta);
    for h in hits.iter().take(3) {
        println!("  #{} similarity {:.3}, move label {}", h.index, h.similarity, h.episode.move_label);
    }

    let casing = AgentSpec::Casing { library: Arc::new(library), model: Arc::new(model), cbr };
    let stats = run_match_with(&casing, &AgentSpec::random(3), 20, &config, 2, &MatchOptions::default())?;
    println!("Casing vs Random: {}-{}-{}", stats.wins_a, stats.draws, stats.wins_b);
    Ok(())
}
