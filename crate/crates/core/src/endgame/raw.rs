//! Move generation on bare pit arrays for the solver, with the mover always
//! owning pits 0..6.

use crate::rules::{GameConfig, StalemateRule, PITS, ROW};

/// Result of one legal move: seeds captured and the board handed to the
/// opponent, already turned so the opponent owns pits 0..6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawMove {
    pub pit: usize,
    pub captured: u8,
    pub child: [u8; PITS],
}

pub fn moves(b: &[u8; PITS]) -> impl Iterator<Item = RawMove> + '_ {
    let must_feed = b[ROW..].iter().all(|&p| p == 0);
    (0..ROW).filter_map(move |pit| {
        let seeds = b[pit] as usize;
        if seeds == 0 || (must_feed && pit + seeds < ROW) {
            return None;
        }
        Some(play(b, pit))
    })
}

fn play(b: &[u8; PITS], pit: usize) -> RawMove {
    let mut p = *b;
    let mut left = p[pit];
    p[pit] = 0;
    let mut pos = pit;
    while left > 0 {
        pos = (pos + 1) % PITS;
        if pos != pit {
            p[pos] += 1;
            left -= 1;
        }
    }
    let mut captured = 0u8;
    if pos >= ROW {
        let mut q = pos;
        while q >= ROW && (p[q] == 2 || p[q] == 3) {
            captured += p[q];
            q -= 1;
        }
        if captured > 0 {
            let opp_row: u32 = p[ROW..].iter().map(|&x| u32::from(x)).sum();
            if opp_row == u32::from(captured) {
                // grand slam: the capture is void
                captured = 0;
            } else {
                p[q + 1..=pos].iter_mut().for_each(|x| *x = 0);
            }
        }
    }
    let mut child = [0u8; PITS];
    for (i, c) in child.iter_mut().enumerate() {
        *c = p[(i + ROW) % PITS];
    }
    RawMove { pit, captured, child }
}

/// Value of a position with no legal move for the side to move.
pub fn stalemate_value(config: &GameConfig, seeds: u32) -> i32 {
    match config.stalemate_rule {
        StalemateRule::Cancelled => 0,
        StalemateRule::MoverLoses => -(seeds as i32),
    }
}

/// Own-row seeds minus opponent-row seeds.
pub fn row_split(b: &[u8; PITS]) -> i32 {
    let own: i32 = b[..ROW].iter().map(|&x| i32::from(x)).sum();
    let opp: i32 = b[ROW..].iter().map(|&x| i32::from(x)).sum();
    own - opp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::{Board, GrandSlamRule, Side};

    #[test]
    fn agrees_with_engine_on_samples() {
        let boards = [
            [4u8; 12],
            [0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 2, 3, 1, 2, 1, 0, 0, 0],
            [13, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
            [0, 0, 0, 0, 0, 2, 1, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        ];
        for b in boards {
            let board = Board::new(b);
            let engine: Vec<_> = board
                .legal_moves(Side::South)
                .iter()
                .map(|m| {
                    let s = board.sow(m.index(), GrandSlamRule::CaptureForfeited);
                    (m.index(), s.captured, s.board.rotated().pits)
                })
                .collect();
            let raw: Vec<_> = moves(&b).map(|m| (m.pit, m.captured, m.child)).collect();
            assert_eq!(raw, engine, "{b:?}");
        }
    }
}
