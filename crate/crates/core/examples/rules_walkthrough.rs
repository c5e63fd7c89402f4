//! Plays a short scripted opening, shows captures and the golden rule, and
//! finishes a reduced game by repetition.
//!
//! cargo run --example rules_walkthrough

use ayo::notation::{format_state, parse_state};
use ayo::rules::{new_game, Board, GameConfig, Move};

fn main() -> anyhow::Result<()> {
    let config = GameConfig::default();
    let mut state = new_game(&config)?;
    println!("start: {}", format_state(&state));
    for pit in [2, 8, 4, 10] {
        let outcome = state.apply_move(Move::new(pit), &config)?;
        println!(
            "{:?} sows pit {pit}, last seed in pit {}, captures {}: {}",
            state.to_move(),
            outcome.landing_pit,
            outcome.captured_now,
            format_state(&outcome.next)
        );
        state = outcome.next;
    }
    println!("legal moves now: {:?}", state.legal_moves().iter().map(|m| m.pit).collect::<Vec<_>>());

    // South's last seed makes two in pit 7, and pit 6 behind it holds three.
    let capture = parse_state("0,0,0,0,0,2/2,1,0,1,0,0 S 20 22", &config)?;
    let outcome = capture.apply_move(Move::new(5), &config)?;
    println!("capture: {} -> captured {}", format_state(&capture), outcome.captured_now);

    // The same sowing would take North's whole row, so nothing is captured.
    let slam = parse_state("0,0,0,0,0,2/2,1,0,0,0,0 S 20 23", &config)?;
    let outcome = slam.apply_move(Move::new(5), &config)?;
    println!("grand slam: {} -> captured {}", format_state(&slam), outcome.captured_now);

    // North's row is empty, so South must play a move that reaches it.
    let golden = parse_state("0,0,0,1,0,3/0,0,0,0,0,0 S 22 22", &config)?;
    for mv in [Move::new(3), Move::new(5)] {
        match golden.board().check_move(golden.to_move(), mv) {
            Ok(()) => println!("golden rule: pit {} is legal", mv.pit),
            Err(reason) => println!("golden rule: pit {} rejected: {reason}", mv.pit),
        }
    }

    // Two lone seeds chase each other until a position repeats.
    let reduced = GameConfig::variant(Board::from_rows([0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 1, 0]));
    let mut state = new_game(&reduced)?;
    while !state.status(&reduced).is_terminal() {
        let mv = state.legal_moves()[0];
        state = state.apply_move(mv, &reduced)?.next;
    }
    let status = state.status(&reduced);
    println!(
        "reduced game over after {} plies: {:?}, final captures {:?}",
        state.ply(),
        status.kind,
        status.final_captures
    );
    Ok(())
}
