use rayon::prelude::*;

use super::{play_game_with, AgentSpec, ArenaError, GameRecord};
use crate::rules::{GameConfig, Side};

/// Names of the proxy opponent levels, weakest first.
pub const LEVELS: [&str; 4] = ["INITIATION", "BEGINNER", "AMATEUR", "GRANDMASTER"];

/// Sample mean and standard deviation (n - 1 denominator; 0 for one sample).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
}

impl Summary {
    pub fn of(xs: &[f64]) -> Summary {
        if xs.is_empty() {
            return Summary::default();
        }
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        if xs.len() == 1 {
            return Summary { mean, std: 0.0 };
        }
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        Summary { mean, std: var.sqrt() }
    }
}

/// Aggregate of a match, always from player A's point of view whichever side
/// A played in each game.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchStats {
    pub level: String,
    pub player_a: String,
    pub player_b: String,
    pub games: u32,
    pub wins_a: u32,
    pub draws: u32,
    pub wins_b: u32,
    pub plies: Summary,
    pub caps_a: Summary,
    pub caps_b: Summary,
    pub overrides_a: Summary,
    pub overrides_b: Summary,
    /// Player A can override its search, so its override column is meaningful.
    pub overrides_applicable: bool,
}

impl MatchStats {
    pub fn win_rate_a(&self) -> f64 {
        f64::from(self.wins_a) / f64::from(self.games.max(1))
    }

    /// Wins and draws of player A as a fraction of games.
    pub fn non_loss_rate_a(&self) -> f64 {
        f64::from(self.wins_a + self.draws) / f64::from(self.games.max(1))
    }

    pub fn from_games(a: &AgentSpec, b: &AgentSpec, games: &[MatchGame]) -> MatchStats {
        let mut wins = [0u32; 2];
        let mut draws = 0;
        let (mut plies, mut caps_a, mut caps_b, mut ov_a, mut ov_b) = (vec![], vec![], vec![], vec![], vec![]);
        for g in games {
            let r = &g.record;
            let a_side = g.a_side;
            let pick = |pair: (u32, u32), side: Side| f64::from(if side == Side::South { pair.0 } else { pair.1 });
            match r.winner() {
                Some(s) if s == a_side => wins[0] += 1,
                Some(_) => wins[1] += 1,
                None => draws += 1,
            }
            plies.push(f64::from(r.ply_count));
            caps_a.push(pick(r.captures, a_side));
            caps_b.push(pick(r.captures, a_side.opponent()));
            ov_a.push(pick(r.overrides, a_side));
            ov_b.push(pick(r.overrides, a_side.opponent()));
        }
        MatchStats {
            level: "-".into(),
            player_a: a.name(),
            player_b: b.name(),
            games: games.len() as u32,
            wins_a: wins[0],
            draws,
            wins_b: wins[1],
            plies: Summary::of(&plies),
            caps_a: Summary::of(&caps_a),
            caps_b: Summary::of(&caps_b),
            overrides_a: Summary::of(&ov_a),
            overrides_b: Summary::of(&ov_b),
            overrides_applicable: a.counts_overrides(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchOptions {
    /// Alternate sides every game, A playing South in even-numbered games.
    pub swap_sides: bool,
    /// Random plies at the start of every game.
    pub opening_plies: u32,
    /// Play games on the rayon pool. Results are identical either way.
    pub parallel: bool,
}

impl Default for MatchOptions {
    fn default() -> Self {
        MatchOptions { swap_sides: true, opening_plies: 2, parallel: true }
    }
}

/// One game of a match and the side player A took in it.
#[derive(Debug, Clone)]
pub struct MatchGame {
    pub record: GameRecord,
    pub a_side: Side,
}

/// Plays `games` games; game `i` uses seed `base_seed + i`.
pub fn play_match(
    a: &AgentSpec,
    b: &AgentSpec,
    games: u32,
    config: &GameConfig,
    base_seed: u64,
    options: &MatchOptions,
) -> Result<Vec<MatchGame>, ArenaError> {
    if games == 0 {
        return Err(ArenaError::NoGames);
    }
    a.validate(config)?;
    b.validate(config)?;
    let one = |i: u32| -> Result<MatchGame, ArenaError> {
        let seed = base_seed.wrapping_add(u64::from(i));
        let a_side = if options.swap_sides && i % 2 == 1 { Side::North } else { Side::South };
        let record = match a_side {
            Side::South => play_game_with(a, b, config, seed, options.opening_plies)?,
            Side::North => play_game_with(b, a, config, seed, options.opening_plies)?,
        };
        Ok(MatchGame { record, a_side })
    };
    if options.parallel {
        (0..games).into_par_iter().map(one).collect()
    } else {
        (0..games).map(one).collect()
    }
}

pub fn run_match(
    a: &AgentSpec,
    b: &AgentSpec,
    games: u32,
    config: &GameConfig,
    base_seed: u64,
    swap_sides: bool,
) -> Result<MatchStats, ArenaError> {
    run_match_with(a, b, games, config, base_seed, &MatchOptions { swap_sides, ..MatchOptions::default() })
}

pub fn run_match_with(
    a: &AgentSpec,
    b: &AgentSpec,
    games: u32,
    config: &GameConfig,
    base_seed: u64,
    options: &MatchOptions,
) -> Result<MatchStats, ArenaError> {
    let played = play_match(a, b, games, config, base_seed, options)?;
    Ok(MatchStats::from_games(a, b, &played))
}

/// The agent against each proxy level in turn: Random, then alpha-beta at
/// depths 1, 3 and 5 with default weights.
pub fn levels_ladder(
    agent: &AgentSpec,
    games_per_level: u32,
    config: &GameConfig,
    base_seed: u64,
) -> Result<Vec<MatchStats>, ArenaError> {
    let opponents = [AgentSpec::random(0), AgentSpec::minimax(1), AgentSpec::minimax(3), AgentSpec::minimax(5)];
    LEVELS
        .iter()
        .zip(opponents)
        .map(|(level, opp)| {
            let mut stats = run_match(agent, &opp, games_per_level, config, base_seed, true)?;
            stats.level = (*level).to_string();
            Ok(stats)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_convention() {
        assert_eq!(Summary::of(&[3.0]), Summary { mean: 3.0, std: 0.0 });
        let s = Summary::of(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.mean, 2.5);
        // sum of squared deviations 5, over n - 1 = 3
        assert!((s.std - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn single_game_has_zero_spread() {
        let cfg = GameConfig::default();
        let s = run_match(&AgentSpec::random(1), &AgentSpec::random(2), 1, &cfg, 5, true).unwrap();
        assert_eq!(s.games, 1);
        assert_eq!(s.wins_a + s.draws + s.wins_b, 1);
        for x in [s.plies, s.caps_a, s.caps_b, s.overrides_a, s.overrides_b] {
            assert_eq!(x.std, 0.0);
        }
    }

    #[test]
    fn zero_games_rejected() {
        let cfg = GameConfig::default();
        assert_eq!(run_match(&AgentSpec::random(1), &AgentSpec::random(2), 0, &cfg, 0, true), Err(ArenaError::NoGames));
    }

    #[test]
    fn serial_and_parallel_agree() {
        let cfg = GameConfig::default();
        let (a, b) = (AgentSpec::random(3), AgentSpec::minimax(1));
        let serial = MatchOptions { parallel: false, ..MatchOptions::default() };
        let par = MatchOptions::default();
        assert_eq!(
            run_match_with(&a, &b, 12, &cfg, 40, &serial).unwrap(),
            run_match_with(&a, &b, 12, &cfg, 40, &par).unwrap()
        );
    }
}
