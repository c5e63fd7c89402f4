//! Alpha-beta with retrieval overrides: shows single decisions, then counts
//! overrides per game against a stronger searcher.
//!
//! cargo run --release --example hybrid_overrides

use std::sync::Arc;

use ayo::arena::{play_match, render_stats, run_match_with, AgentSpec, MatchOptions, ReportFormat};
use ayo::cbr::{harvest_episodes, hybrid_move, CbrConfig};
use ayo::rules::GameConfig;
use ayo::search::EvalWeights;

fn main() -> anyhow::Result<()> {
    let config = GameConfig::default();
    let weights = EvalWeights::default();
    let teacher = AgentSpec::minimax(5);
    let played = play_match(&teacher, &AgentSpec::minimax(3), 30, &config, 11, &MatchOptions::default())?;
    let records: Vec<_> = played.into_iter().map(|g| g.record).collect();
    let library = harvest_episodes(&records, true);
    let cbr = CbrConfig::new(f64::INFINITY, 0.95)?;
    println!("library: {} episodes, beta {}", library.len(), cbr.beta);

    for (state, _) in records[0].moves.iter().take(8) {
        if let Some(d) = hybrid_move(state, 3, &weights, &library, &cbr, &config) {
            println!(
                "ply {:>2}: pit {:>2}, overridden {}, similarity {}",
                state.ply(),
                d.mv.pit,
                d.overridden,
                d.similarity_used.map_or("-".into(), |s| format!("{s:.3}"))
            );
        }
    }

    let hybrid = AgentSpec::MinimaxCbr { depth: 3, weights, library: Arc::new(library), cbr };
    let with = run_match_with(&hybrid, &AgentSpec::minimax(5), 20, &config, 12, &MatchOptions::default())?;
    let without =
        run_match_with(&AgentSpec::minimax(3), &AgentSpec::minimax(5), 20, &config, 12, &MatchOptions::default())?;
    print!("{}", render_stats(&[with, without], ReportFormat::Markdown));
    Ok(())
}
