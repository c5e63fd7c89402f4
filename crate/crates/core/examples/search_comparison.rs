//! Compares plain minimax with alpha-beta on positions reached by random
//! play: same value and move, far fewer nodes.
//!
//! cargo run --release --example search_comparison -- [max_depth]

use std::time::Instant;

use ayo::rules::{new_game, GameConfig};
use ayo::search::{alphabeta, evaluate, features, minimax, EvalWeights};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let max_depth: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let config = GameConfig::default();
    let weights = EvalWeights::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let mut state = new_game(&config)?;
    for _ in 0..12 {
        let mv = *state.legal_moves().choose(&mut rng).expect("game not over");
        state = state.apply_move(mv, &config)?.next;
    }
    println!("position: {}", ayo::notation::format_state(&state));
    println!("features {:?}, static value {:+.1}", features(&state), evaluate(&state, &weights));
    println!("depth  value     move  minimax nodes  alpha-beta nodes  time");
    for depth in 1..=max_depth {
        let started = Instant::now();
        let full = minimax(&state, depth, &weights, &config);
        let pruned = alphabeta(&state, depth, &weights, &config);
        assert_eq!((full.value, full.best_move), (pruned.value, pruned.best_move));
        println!(
            "{depth:>5}  {:>+7.1}  {:>5}  {:>13}  {:>16}  {:.1?}",
            pruned.value,
            pruned.best_move.map_or(-1, |m| m.pit as i64),
            full.nodes,
            pruned.nodes,
            started.elapsed()
        );
    }
    Ok(())
}
