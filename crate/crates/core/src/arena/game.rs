use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{AgentSpec, ArenaError};
use crate::rules::{new_game, GameConfig, GameState, GameStatus, Move, RulesError, Side};

/// Everything needed to replay and score one game.
#[derive(Debug, Clone)]
pub struct GameRecord {
    pub config: GameConfig,
    /// Each position before a move, with the move played there.
    pub moves: Vec<(GameState, Move)>,
    /// Whether retrieval overrode the search at each ply.
    pub overridden: Vec<bool>,
    /// Number of leading plies chosen at random rather than by the agents.
    pub opening_plies: u32,
    pub result: GameStatus,
    /// Final (South, North) seeds, row seeds included when the game was split.
    pub captures: (u32, u32),
    /// (South, North) override counts.
    pub overrides: (u32, u32),
    pub ply_count: u32,
    /// Side that returned an illegal move or none at all.
    pub forfeit: Option<Side>,
}

impl GameRecord {
    pub fn winner(&self) -> Option<Side> {
        match self.forfeit {
            Some(side) => Some(side.opponent()),
            None => self.result.winner(),
        }
    }

    /// Replays the moves from the opening and returns the final state,
    /// checking every recorded position along the way.
    pub fn replay(&self) -> Result<GameState, RulesError> {
        let mut state = new_game(&self.config)?;
        for (before, mv) in &self.moves {
            assert_eq!(state.position(), before.position(), "recorded position diverges at ply {}", state.ply());
            state = state.apply_move(*mv, &self.config)?.next;
        }
        Ok(state)
    }

    /// Replay reproduces the recorded result, captures and overrides.
    pub fn replays_consistently(&self) -> bool {
        let Ok(end) = self.replay() else { return false };
        let status = end.status(&self.config);
        let overrides =
            self.moves.iter().zip(&self.overridden).fold((0, 0), |(s, n), ((st, _), &o)| match (o, st.to_move()) {
                (true, Side::South) => (s + 1, n),
                (true, Side::North) => (s, n + 1),
                _ => (s, n),
            });
        status == self.result
            && final_captures(&end, &status) == self.captures
            && overrides == self.overrides
            && end.ply() == self.ply_count
    }
}

fn final_captures(state: &GameState, status: &GameStatus) -> (u32, u32) {
    status.final_captures.unwrap_or((state.captured(Side::South), state.captured(Side::North)))
}

/// `south` against `north` from the configured opening.
pub fn play_game(
    south: &AgentSpec,
    north: &AgentSpec,
    config: &GameConfig,
    rng_seed: u64,
) -> Result<GameRecord, ArenaError> {
    play_game_with(south, north, config, rng_seed, 0)
}

/// As [`play_game`], with the first `opening_plies` plies chosen uniformly at
/// random from a stream seeded by `rng_seed`.
pub fn play_game_with(
    south: &AgentSpec,
    north: &AgentSpec,
    config: &GameConfig,
    rng_seed: u64,
    opening_plies: u32,
) -> Result<GameRecord, ArenaError> {
    south.validate(config)?;
    north.validate(config)?;
    let mut state = new_game(config)?;
    let mut agents = [south.instantiate(rng_seed, Side::South), north.instantiate(rng_seed, Side::North)];
    let mut opening_rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut moves = vec![];
    let mut overridden = vec![];
    let mut overrides = [0u32; 2];
    let mut forfeit = None;
    let mut played_opening = 0;

    let mut status = state.status(config);
    while !status.is_terminal() {
        let mover = state.to_move();
        let decision = if played_opening < opening_plies {
            played_opening += 1;
            state.legal_moves().choose(&mut opening_rng).map(|&mv| super::Decision { mv, overridden: false })
        } else {
            agents[mover.index()].choose(&state, config)
        };
        let Some(decision) = decision else {
            forfeit = Some(mover);
            break;
        };
        let Ok(outcome) = state.apply_move(decision.mv, config) else {
            forfeit = Some(mover);
            break;
        };
        moves.push((state, decision.mv));
        overridden.push(decision.overridden);
        overrides[mover.index()] += u32::from(decision.overridden);
        state = outcome.next;
        status = state.status(config);
    }

    Ok(GameRecord {
        config: config.clone(),
        captures: final_captures(&state, &status),
        moves,
        overridden,
        opening_plies: played_opening,
        result: status,
        overrides: (overrides[0], overrides[1]),
        ply_count: state.ply(),
        forfeit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_games_are_reproducible() {
        let cfg = GameConfig::default();
        let a = play_game(&AgentSpec::random(1), &AgentSpec::random(1), &cfg, 7).unwrap();
        let b = play_game(&AgentSpec::random(1), &AgentSpec::random(1), &cfg, 7).unwrap();
        let moves = |r: &GameRecord| r.moves.iter().map(|(_, m)| *m).collect::<Vec<_>>();
        assert_eq!(moves(&a), moves(&b));
        assert_eq!(a.captures, b.captures);
        assert!(a.replays_consistently());
        assert!(a.result.is_terminal());
    }

    #[test]
    fn pure_agents_play_one_game() {
        let cfg = GameConfig::default();
        let a = play_game(&AgentSpec::minimax(2), &AgentSpec::minimax(2), &cfg, 1).unwrap();
        let b = play_game(&AgentSpec::minimax(2), &AgentSpec::minimax(2), &cfg, 99).unwrap();
        assert_eq!(a.moves.len(), b.moves.len());
        assert!(a.moves.iter().zip(&b.moves).all(|(x, y)| x.1 == y.1));
        assert!(a.replays_consistently());
    }

    #[test]
    fn rejects_invalid_agents() {
        let cfg = GameConfig::default();
        assert!(matches!(
            play_game(&AgentSpec::minimax(0), &AgentSpec::random(0), &cfg, 0),
            Err(ArenaError::InvalidAgent(_))
        ));
    }
}
