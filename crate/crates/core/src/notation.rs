//! Text notation for positions: `p0,..,p5/p6,..,p11 <S|N> <capS> <capN>`.
//!
//! The South row comes before the slash. Ply count and history are not part
//! of the notation, so a parsed state always starts a fresh history.

use thiserror::Error;

use crate::rules::{Board, GameConfig, GameState, Position, Side, PITS, ROW};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("malformed position: {0}")]
    Malformed(String),
    #[error("seed count {found} does not match the {expected} seeds in play")]
    Conservation { found: u32, expected: u32 },
}

pub fn format_state(state: &GameState) -> String {
    format_position(state.position())
}

pub fn format_position(pos: &Position) -> String {
    format!("{} {} {} {}", pos.board, pos.to_move.letter(), pos.captured[0], pos.captured[1])
}

/// Parses the notation without checking it against any rule set.
pub fn parse_position(text: &str) -> Result<Position, NotationError> {
    let bad = |msg: &str| NotationError::Malformed(format!("{msg} in {text:?}"));
    let fields: Vec<&str> = text.split(' ').collect();
    if fields.len() != 4 {
        return Err(bad("expected 4 space-separated fields"));
    }
    let (south, north) = fields[0].split_once('/').ok_or_else(|| bad("missing '/'"))?;
    let mut pits = [0u8; PITS];
    for (row, offset) in [(south, 0), (north, ROW)] {
        let counts: Vec<&str> = row.split(',').collect();
        if counts.len() != ROW {
            return Err(bad("each row needs 6 pit counts"));
        }
        for (i, c) in counts.iter().enumerate() {
            pits[offset + i] = parse_count(c).ok_or_else(|| bad("bad pit count"))?;
        }
    }
    let to_move = match fields[1] {
        "S" => Side::South,
        "N" => Side::North,
        _ => return Err(bad("side must be S or N")),
    };
    let cap_s = parse_count(fields[2]).ok_or_else(|| bad("bad South store"))?;
    let cap_n = parse_count(fields[3]).ok_or_else(|| bad("bad North store"))?;
    let pos = Position { board: Board::new(pits), captured: [cap_s, cap_n], to_move };
    let total = pos.board.seeds() + u32::from(cap_s) + u32::from(cap_n);
    if total > crate::rules::MAX_TOTAL_SEEDS {
        return Err(bad("too many seeds"));
    }
    Ok(pos)
}

/// Parses and checks seed conservation against `config`.
pub fn parse_state(text: &str, config: &GameConfig) -> Result<GameState, NotationError> {
    let pos = parse_position(text)?;
    let found = pos.board.seeds() + u32::from(pos.captured[0]) + u32::from(pos.captured[1]);
    let expected = config.total_seeds();
    if found != expected {
        return Err(NotationError::Conservation { found, expected });
    }
    Ok(GameState::from_position(pos))
}

fn parse_count(s: &str) -> Option<u8> {
    // decimal digits only: no sign, no whitespace
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::new_game;

    #[test]
    fn initial_position() {
        let cfg = GameConfig::default();
        let s = parse_state("4,4,4,4,4,4/4,4,4,4,4,4 S 0 0", &cfg).unwrap();
        assert_eq!(s.position(), new_game(&cfg).unwrap().position());
        assert_eq!(format_state(&s), "4,4,4,4,4,4/4,4,4,4,4,4 S 0 0");
    }

    #[test]
    fn conservation_is_checked() {
        let cfg = GameConfig::default();
        let err = parse_state("4,4,4,4,4,4/4,4,4,4,4,4 S 1 0", &cfg).unwrap_err();
        assert_eq!(err, NotationError::Conservation { found: 49, expected: 48 });
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            "",
            "4,4,4,4,4,4 S 0 0",
            "4,4,4,4,4/4,4,4,4,4,4,4 S 0 0",
            "4,4,4,4,4,4/4,4,4,4,4,4 X 0 0",
            "4,4,4,4,4,4/4,4,4,4,4,4  S 0 0",
            "4,4,4,4,4,-4/4,4,4,4,4,4 S 0 0",
            "4,4,4,4,4,4/4,4,4,4,4,4 S 0",
            "4,4,4,4,4,4/4,4,4,4,4,999 S 0 0",
        ] {
            assert!(matches!(parse_position(text), Err(NotationError::Malformed(_))), "{text:?}");
        }
    }

    #[test]
    fn north_to_move() {
        let pos = parse_position("0,0,0,0,0,1/1,0,0,0,0,0 N 23 23").unwrap();
        assert_eq!(pos.to_move, Side::North);
        assert_eq!(pos.captured, [23, 23]);
        assert_eq!(format_position(&pos), "0,0,0,0,0,1/1,0,0,0,0,0 N 23 23");
    }
}
