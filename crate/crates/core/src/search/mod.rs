//! Fixed-depth minimax with a linear evaluation polynomial, its alpha-beta
//! pruned counterpart, and solution-tree checks on explicit game trees.
//!
//! Scores are always from the point of view of the side to move (negamax).
//! Both searches visit moves in ascending pit order and only replace the best
//! move on a strictly greater value, so ties go to the lowest pit and the two
//! searches agree on the chosen move as well as on the value.

mod trees;

pub use trees::{solution_tree_check, ExplicitTree, SolutionTreeCheck, MAX_SOLUTION_TREES, MAX_TREE_NODES};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rules::{GameConfig, GameState, GameStatus, Move, Outcome, Side};

pub type Score = f64;

/// Scale of proven results: a decided game is worth its final capture
/// differential times this, so it dominates any heuristic value.
pub const LARGE: Score = 1000.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("evaluation weights must be finite")]
    NonFiniteWeights,
    #[error("tree has {nodes} nodes, above the enumeration limit")]
    TreeTooLarge { nodes: usize },
    #[error("tree has too many solution trees to enumerate")]
    TooManySolutionTrees,
    #[error("internal tree node without children")]
    EmptyInternalNode,
}

/// Coefficients of the evaluation polynomial, in feature order:
/// store differential, row-seed differential, opponent pits holding 2 or 3,
/// mobility differential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalWeights(pub [f64; 4]);

impl Default for EvalWeights {
    fn default() -> Self {
        EvalWeights([10.0, 1.0, 2.0, 1.0])
    }
}

impl EvalWeights {
    pub fn new(w: [f64; 4]) -> Result<Self, SearchError> {
        if w.iter().all(|x| x.is_finite()) {
            Ok(EvalWeights(w))
        } else {
            Err(SearchError::NonFiniteWeights)
        }
    }

    pub fn zero() -> Self {
        EvalWeights([0.0; 4])
    }
}

/// The four evaluation features from the mover's perspective.
pub fn features(state: &GameState) -> [f64; 4] {
    let me = state.to_move();
    let opp = me.opponent();
    let board = state.board();
    let stores = state.captured(me) as f64 - state.captured(opp) as f64;
    let rows = board.row_seeds(me) as f64 - board.row_seeds(opp) as f64;
    let targets = opp.row().filter(|&p| matches!(board.pits[p], 2 | 3)).count() as f64;
    let mobility = board.legal_moves(me).len() as f64 - board.legal_moves(opp).len() as f64;
    [stores, rows, targets, mobility]
}

/// Linear evaluation of a position. Does not look at the game status; the
/// searches score finished games themselves.
pub fn evaluate(state: &GameState, weights: &EvalWeights) -> Score {
    features(state).iter().zip(weights.0.iter()).map(|(f, w)| f * w).sum()
}

/// Score of a finished game for `mover`, before any distance adjustment.
pub fn terminal_score(status: &GameStatus, mover: Side, total_seeds: u32) -> Score {
    let (s, n) = status.final_captures.unwrap_or((0, 0));
    let diff = match mover {
        Side::South => s as f64 - n as f64,
        Side::North => n as f64 - s as f64,
    };
    match status.outcome() {
        None | Some(Outcome::Draw) => 0.0,
        Some(Outcome::Win(w)) => {
            let won = w == mover;
            if won == (diff > 0.0) {
                diff * LARGE
            } else {
                // a stalemate loss can come with a store lead
                let worst = (total_seeds as f64 + 1.0) * LARGE;
                if won {
                    worst
                } else {
                    -worst
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchResult {
    pub value: Score,
    pub best_move: Option<Move>,
    pub nodes: u64,
    pub depth: u32,
}

struct Ctx<'a> {
    config: &'a GameConfig,
    weights: &'a EvalWeights,
    nodes: u64,
}

impl Ctx<'_> {
    /// Value of a node that is not expanded, or `None` if it must be.
    fn leaf(&self, state: &GameState, depth: u32, ply: u32) -> Option<Score> {
        let status = state.status(self.config);
        if status.is_terminal() {
            let v = terminal_score(&status, state.to_move(), state.total_seeds());
            // prefer quick wins and slow losses
            return Some(if v == 0.0 { 0.0 } else { v - v.signum() * ply as f64 });
        }
        if depth == 0 {
            return Some(evaluate(state, self.weights));
        }
        None
    }

    fn child(&self, state: &GameState, mv: Move) -> GameState {
        state.apply_move(mv, self.config).expect("legal move").next
    }

    fn minimax(&mut self, state: &GameState, depth: u32, ply: u32) -> (Score, Option<Move>) {
        self.nodes += 1;
        if let Some(v) = self.leaf(state, depth, ply) {
            return (v, None);
        }
        let mut best = (Score::NEG_INFINITY, None);
        for mv in state.legal_moves() {
            let v = -self.minimax(&self.child(state, mv), depth - 1, ply + 1).0;
            if v > best.0 {
                best = (v, Some(mv));
            }
        }
        best
    }

    fn alphabeta(
        &mut self,
        state: &GameState,
        depth: u32,
        ply: u32,
        alpha: Score,
        beta: Score,
    ) -> (Score, Option<Move>) {
        self.nodes += 1;
        if let Some(v) = self.leaf(state, depth, ply) {
            return (v, None);
        }
        let mut best = (Score::NEG_INFINITY, None);
        for mv in state.legal_moves() {
            let floor = alpha.max(best.0);
            let v = -self.alphabeta(&self.child(state, mv), depth - 1, ply + 1, -beta, -floor).0;
            if v > best.0 {
                best = (v, Some(mv));
                if v >= beta {
                    break;
                }
            }
        }
        best
    }
}

/// Plain minimax over the full tree to `depth` plies.
pub fn minimax(state: &GameState, depth: u32, weights: &EvalWeights, config: &GameConfig) -> SearchResult {
    let mut ctx = Ctx { config, weights, nodes: 0 };
    let (value, best_move) = ctx.minimax(state, depth, 0);
    SearchResult { value, best_move, nodes: ctx.nodes, depth }
}

/// Fail-soft alpha-beta; same value and move as [`minimax`], fewer nodes.
pub fn alphabeta(state: &GameState, depth: u32, weights: &EvalWeights, config: &GameConfig) -> SearchResult {
    let mut ctx = Ctx { config, weights, nodes: 0 };
    let (value, best_move) = ctx.alphabeta(state, depth, 0, Score::NEG_INFINITY, Score::INFINITY);
    SearchResult { value, best_move, nodes: ctx.nodes, depth }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::{new_game, Board, Position};

    fn state(south: [u8; 6], north: [u8; 6], caps: [u8; 2], to_move: Side) -> GameState {
        GameState::from_position(Position { board: Board::from_rows(south, north), captured: caps, to_move })
    }

    #[test]
    fn evaluate_examples() {
        let cfg = GameConfig::default();
        let init = new_game(&cfg).unwrap();
        assert_eq!(evaluate(&init, &EvalWeights([1.0, 0.0, 0.0, 0.0])), 0.0);
        assert_eq!(evaluate(&init, &EvalWeights::zero()), 0.0);
        let s = state([1, 1, 1, 1, 0, 0], [1, 1, 1, 1, 0, 0], [25, 15], Side::South);
        assert_eq!(evaluate(&s, &EvalWeights([1.0, 0.0, 0.0, 0.0])), 10.0);
        let s = state([1, 1, 1, 1, 0, 0], [1, 1, 1, 1, 0, 0], [25, 15], Side::North);
        assert_eq!(evaluate(&s, &EvalWeights([1.0, 0.0, 0.0, 0.0])), -10.0);
    }

    #[test]
    fn feature_values() {
        let s = state([0, 0, 0, 0, 0, 5], [2, 3, 1, 0, 0, 0], [10, 27], Side::South);
        // rows 5 vs 6; opponent pits at 2 or 3: two; mobility 1 vs 3
        assert_eq!(features(&s), [-17.0, -1.0, 2.0, -2.0]);
    }

    #[test]
    fn weights_must_be_finite() {
        assert!(EvalWeights::new([1.0, f64::NAN, 0.0, 0.0]).is_err());
        assert!(EvalWeights::new([1.0, 2.0, 3.0, f64::INFINITY]).is_err());
        assert!(EvalWeights::new([1.0, 2.0, 3.0, 4.0]).is_ok());
    }

    #[test]
    fn depth_zero_is_evaluate() {
        let cfg = GameConfig::default();
        let w = EvalWeights::default();
        let s = new_game(&cfg).unwrap();
        let s = s.apply_move(Move::new(3), &cfg).unwrap().next;
        let r = minimax(&s, 0, &w, &cfg);
        assert_eq!(r.value, evaluate(&s, &w));
        assert_eq!(r.best_move, None);
        assert_eq!(r.nodes, 1);
        assert_eq!(alphabeta(&s, 0, &w, &cfg).value, r.value);
    }

    #[test]
    fn terminal_root_is_not_expanded() {
        let cfg = GameConfig::default();
        let s = state([1, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0], [25, 20], Side::North);
        for r in [alphabeta(&s, 5, &EvalWeights::default(), &cfg), minimax(&s, 5, &EvalWeights::default(), &cfg)] {
            assert_eq!(r.nodes, 1);
            assert_eq!(r.best_move, None);
            assert_eq!(r.value, -5.0 * LARGE);
        }
    }

    #[test]
    fn takes_an_immediate_win() {
        let cfg = GameConfig::default();
        // South captures 5 from pits 6-7 and reaches 25
        let s = state([0, 0, 0, 0, 0, 2], [1, 2, 0, 0, 0, 1], [20, 18], Side::South);
        let r = alphabeta(&s, 3, &EvalWeights::default(), &cfg);
        assert_eq!(r.best_move, Some(Move::new(5)));
        assert!(r.value >= LARGE);
    }

    #[test]
    fn stalemate_scores() {
        let cfg = GameConfig::default();
        let s = state([1, 0, 0, 0, 0, 0], [0; 6], [30, 17], Side::South);
        // already decided by the stores
        assert_eq!(minimax(&s, 2, &EvalWeights::default(), &cfg).value, 13.0 * LARGE);
        let s = state([1, 0, 0, 0, 0, 0], [0; 6], [20, 19], Side::South);
        assert_eq!(minimax(&s, 2, &EvalWeights::default(), &cfg).value, 0.0);
        let loses = GameConfig { stalemate_rule: crate::rules::StalemateRule::MoverLoses, ..cfg };
        let v = minimax(&s, 2, &EvalWeights::default(), &loses).value;
        assert_eq!(v, -41.0 * LARGE);
    }
}
