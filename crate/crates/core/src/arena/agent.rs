use std::fmt;
use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ArenaError;
use crate::cbr::{casing_move, hybrid_move, CbrConfig, EpisodeLibrary, PerceptronModel};
use crate::endgame::{best_move_with_history, EndgameDatabase};
use crate::rules::{GameConfig, GameState, Move, Side};
use crate::search::{alphabeta, EvalWeights};

/// A player and its parameters. Shared data (libraries, models, databases)
/// sits behind `Arc` so specs are cheap to clone across games and threads.
#[derive(Clone)]
pub enum AgentSpec {
    Random {
        seed: u64,
    },
    Minimax {
        depth: u32,
        weights: EvalWeights,
    },
    MinimaxCbr {
        depth: u32,
        weights: EvalWeights,
        library: Arc<EpisodeLibrary>,
        cbr: CbrConfig,
    },
    Casing {
        library: Arc<EpisodeLibrary>,
        model: Arc<PerceptronModel>,
        cbr: CbrConfig,
    },
    /// Plays from the database while the board holds few enough seeds, and
    /// by alpha-beta at `fallback_depth` otherwise.
    DbPerfect {
        db: Arc<EndgameDatabase>,
        fallback_depth: u32,
    },
}

impl fmt::Debug for AgentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl AgentSpec {
    pub fn random(seed: u64) -> Self {
        AgentSpec::Random { seed }
    }

    pub fn minimax(depth: u32) -> Self {
        AgentSpec::Minimax { depth, weights: EvalWeights::default() }
    }

    pub fn name(&self) -> String {
        match self {
            AgentSpec::Random { .. } => "Random".into(),
            AgentSpec::Minimax { depth, .. } => format!("Minimax({depth})"),
            AgentSpec::MinimaxCbr { depth, .. } => format!("MinimaxCbr({depth})"),
            AgentSpec::Casing { .. } => "Casing".into(),
            AgentSpec::DbPerfect { db, .. } => format!("DbPerfect({})", db.max_seeds()),
        }
    }

    pub fn uses_minimax(&self) -> bool {
        match self {
            AgentSpec::Minimax { .. } | AgentSpec::MinimaxCbr { .. } => true,
            AgentSpec::DbPerfect { fallback_depth, .. } => *fallback_depth > 0,
            AgentSpec::Random { .. } | AgentSpec::Casing { .. } => false,
        }
    }

    pub fn uses_endgame(&self) -> bool {
        matches!(self, AgentSpec::DbPerfect { .. })
    }

    /// Learns from labelled example moves.
    pub fn supervised(&self) -> bool {
        matches!(self, AgentSpec::MinimaxCbr { .. } | AgentSpec::Casing { .. })
    }

    /// Learns from its own exploration of the game (here, retrograde analysis).
    pub fn unsupervised(&self) -> bool {
        matches!(self, AgentSpec::DbPerfect { .. })
    }

    pub fn counts_overrides(&self) -> bool {
        matches!(self, AgentSpec::MinimaxCbr { .. })
    }

    pub fn validate(&self, config: &GameConfig) -> Result<(), ArenaError> {
        let bad = |msg: String| Err(ArenaError::InvalidAgent(msg));
        match self {
            AgentSpec::Minimax { depth: 0, .. } | AgentSpec::MinimaxCbr { depth: 0, .. } => {
                bad(format!("{}: depth must be at least 1", self.name()))
            }
            AgentSpec::Minimax { weights, .. } | AgentSpec::MinimaxCbr { weights, .. }
                if weights.0.iter().any(|w| !w.is_finite()) =>
            {
                bad(format!("{}: weights must be finite", self.name()))
            }
            AgentSpec::DbPerfect { db, .. } => {
                db.check_rules(config)?;
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// A fresh player for one game. Randomized agents draw from a stream
    /// determined by their own seed, the game seed and their side.
    pub fn instantiate(&self, game_seed: u64, side: Side) -> Agent {
        let seed = match self {
            AgentSpec::Random { seed } => *seed,
            _ => 0,
        };
        let mixed = seed ^ game_seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (side.index() as u64 + 1);
        Agent { spec: self.clone(), rng: ChaCha8Rng::seed_from_u64(mixed) }
    }
}

/// Nodes per move the database player may spend searching through the
/// engine, so that cycles closed by repetition are scored as the engine
/// scores them.
const HISTORY_NODE_BUDGET: u64 = 2_000;

/// A move choice and whether retrieval overrode the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub mv: Move,
    pub overridden: bool,
}

pub struct Agent {
    spec: AgentSpec,
    rng: ChaCha8Rng,
}

impl Agent {
    pub fn spec(&self) -> &AgentSpec {
        &self.spec
    }

    /// The agent's move in a position that is not over. `None` only if the
    /// agent has nothing to offer, which the arena scores as a forfeit.
    pub fn choose(&mut self, state: &GameState, config: &GameConfig) -> Option<Decision> {
        let plain = |mv: Move| Decision { mv, overridden: false };
        match &self.spec {
            AgentSpec::Random { .. } => state.legal_moves().choose(&mut self.rng).copied().map(plain),
            AgentSpec::Minimax { depth, weights } => alphabeta(state, *depth, weights, config).best_move.map(plain),
            AgentSpec::MinimaxCbr { depth, weights, library, cbr } => {
                hybrid_move(state, *depth, weights, library, cbr, config)
                    .map(|d| Decision { mv: d.mv, overridden: d.overridden })
            }
            AgentSpec::Casing { library, model, cbr } => casing_move(state, library, model, cbr).map(plain),
            AgentSpec::DbPerfect { db, fallback_depth } => {
                if state.board().seeds() <= db.max_seeds() {
                    best_move_with_history(db, state, config, HISTORY_NODE_BUDGET).ok().map(plain)
                } else {
                    alphabeta(state, (*fallback_depth).max(1), &EvalWeights::default(), config).best_move.map(plain)
                }
            }
        }
    }
}
