use std::fmt::Write as _;
use std::path::Path;

use super::CbrError;
use crate::arena::GameRecord;
use crate::rules::{GameState, Move, Side, PITS, ROW};

/// A board seen by the player to move (own row first), the move that player
/// made, and the final capture differential of the game it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Episode {
    pub values: [u8; PITS],
    pub move_label: u8,
    pub game_value: i32,
}

impl Episode {
    pub fn new(values: [u8; PITS], move_label: u8, game_value: i32) -> Result<Episode, CbrError> {
        if move_label as usize >= ROW {
            return Err(CbrError::BadLabel(move_label));
        }
        Ok(Episode { values, move_label, game_value })
    }

    /// The current position as a query episode; label and value are unused.
    pub fn target(state: &GameState) -> Episode {
        Episode { values: state.board().relative_to(state.to_move()).pits, move_label: 0, game_value: 0 }
    }

    pub fn from_play(state: &GameState, mv: Move, game_value: i32) -> Episode {
        Episode { values: state.board().relative_to(state.to_move()).pits, move_label: mv.relative() as u8, game_value }
    }

    pub fn features(&self) -> [f64; PITS] {
        self.values.map(f64::from)
    }

    fn to_line(self) -> String {
        let mut line = self.values.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        write!(line, ";{};{}", self.move_label, self.game_value).unwrap();
        line
    }

    fn parse_line(line: &str) -> Result<Episode, String> {
        let parts: Vec<&str> = line.split(';').collect();
        let [values, label, value] = parts[..] else {
            return Err("expected <values>;<label>;<game_value>".into());
        };
        let counts: Vec<&str> = values.split(',').collect();
        if counts.len() != PITS {
            return Err(format!("expected {PITS} pit counts, found {}", counts.len()));
        }
        let mut pits = [0u8; PITS];
        for (p, c) in pits.iter_mut().zip(&counts) {
            *p = c.trim().parse().map_err(|_| format!("bad pit count {c:?}"))?;
        }
        let label: u8 = label.trim().parse().map_err(|_| format!("bad label {label:?}"))?;
        let value: i32 = value.trim().parse().map_err(|_| format!("bad game value {value:?}"))?;
        Episode::new(pits, label, value).map_err(|e| e.to_string())
    }
}

/// Source episodes in insertion order, indexed by move label.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EpisodeLibrary {
    episodes: Vec<Episode>,
    by_label: [Vec<usize>; ROW],
}

impl EpisodeLibrary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, episode: Episode) {
        self.by_label[episode.move_label as usize].push(self.episodes.len());
        self.episodes.push(episode);
    }

    pub fn len(&self) -> usize {
        self.episodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.episodes.is_empty()
    }

    pub fn episodes(&self) -> &[Episode] {
        &self.episodes
    }

    pub fn with_label(&self, label: usize) -> impl Iterator<Item = &Episode> {
        self.by_label[label].iter().map(|&i| &self.episodes[i])
    }

    /// One episode per line: `<v1>,...,<v12>;<label>;<game_value>`.
    pub fn to_text(&self) -> String {
        self.episodes.iter().map(|e| e.to_line() + "\n").collect()
    }

    pub fn parse(text: &str) -> Result<Self, CbrError> {
        let mut lib = EpisodeLibrary::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let ep = Episode::parse_line(line).map_err(|msg| CbrError::Parse { line: n + 1, msg })?;
            lib.push(ep);
        }
        Ok(lib)
    }

    pub fn load(path: &Path) -> Result<Self, CbrError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<(), CbrError> {
        crate::io::write_atomic(path, self.to_text().as_bytes())?;
        Ok(())
    }
}

impl FromIterator<Episode> for EpisodeLibrary {
    fn from_iter<I: IntoIterator<Item = Episode>>(iter: I) -> Self {
        let mut lib = EpisodeLibrary::new();
        iter.into_iter().for_each(|e| lib.push(e));
        lib
    }
}

/// Turns recorded games into source episodes. Each episode's game value is
/// the final capture differential from the recorded mover's side. With
/// `winner_only`, drawn games contribute nothing.
pub fn harvest_episodes(games: &[GameRecord], winner_only: bool) -> EpisodeLibrary {
    let mut lib = EpisodeLibrary::new();
    for game in games {
        let winner = game.winner();
        if winner_only && winner.is_none() {
            continue;
        }
        let (south, north) = game.captures;
        for (state, mv) in &game.moves {
            let mover = state.to_move();
            if winner_only && Some(mover) != winner {
                continue;
            }
            let diff = south as i32 - north as i32;
            let value = if mover == Side::South { diff } else { -diff };
            lib.push(Episode::from_play(state, *mv, value));
        }
    }
    lib
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format() {
        let lib: EpisodeLibrary = [
            Episode::new([4; 12], 2, 5).unwrap(),
            Episode::new([0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11], 5, -3).unwrap(),
        ]
        .into_iter()
        .collect();
        let text = lib.to_text();
        assert_eq!(text, "4,4,4,4,4,4,4,4,4,4,4,4;2;5\n0,1,2,3,4,5,6,7,8,9,10,11;5;-3\n");
        assert_eq!(EpisodeLibrary::parse(&text).unwrap(), lib);
        assert_eq!(lib.with_label(5).count(), 1);
    }

    #[test]
    fn loader_validates() {
        for bad in [
            "1,2,3;0;0",
            "4,4,4,4,4,4,4,4,4,4,4,4;6;0",
            "4,4,4,4,4,4,4,4,4,4,4,-4;0;0",
            "4,4,4,4,4,4,4,4,4,4,4,4;0",
            "4,4,4,4,4,4,4,4,4,4,4,4;0;x",
        ] {
            let err = EpisodeLibrary::parse(&format!("4,4,4,4,4,4,4,4,4,4,4,4;0;0\n{bad}\n")).unwrap_err();
            assert!(matches!(err, CbrError::Parse { line: 2, .. }), "{bad}: {err}");
        }
    }

    #[test]
    fn empty_game_list() {
        assert!(harvest_episodes(&[], true).is_empty());
        assert!(harvest_episodes(&[], false).is_empty());
    }
}
