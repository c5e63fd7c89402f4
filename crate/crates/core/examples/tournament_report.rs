//! Runs a small round robin and the four-level ladder, then prints the CSV
//! and Markdown reports and the capability matrix.
//!
//! cargo run --release --example tournament_report -- [games]

use ayo::arena::{
    capability_rows, levels_ladder, render_capabilities, render_stats, run_match_with, AgentSpec, MatchOptions,
    ReportFormat,
};
use ayo::rules::GameConfig;

fn main() -> anyhow::Result<()> {
    let games: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(10);
    let config = GameConfig::default();
    let agents = [
        ("Random".to_string(), AgentSpec::random(1)),
        ("Minimax(2)".to_string(), AgentSpec::minimax(2)),
        ("Minimax(4)".to_string(), AgentSpec::minimax(4)),
    ];

    let mut stats = vec![];
    for (i, (_, a)) in agents.iter().enumerate() {
        for (_, b) in &agents[i + 1..] {
            stats.push(run_match_with(a, b, games, &config, 100, &MatchOptions::default())?);
        }
    }
    print!("{}", render_stats(&stats, ReportFormat::Csv));
    println!();
    print!("{}", render_stats(&stats, ReportFormat::Markdown));

    let ladders =
        agents.iter().map(|(_, spec)| levels_ladder(spec, games, &config, 200)).collect::<Result<Vec<_>, _>>()?;
    println!();
    print!("{}", render_capabilities(&capability_rows(&agents, &ladders), ReportFormat::Markdown));
    Ok(())
}
