use super::{classify, similarity, CbrConfig, Episode, EpisodeLibrary, PerceptronModel};
use crate::rules::{GameConfig, GameState, Move};
use crate::search::{alphabeta, EvalWeights};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Retrieved<'a> {
    pub episode: &'a Episode,
    /// Position in the library.
    pub index: usize,
    pub similarity: f64,
}

/// Episodes passing both thresholds, most similar first; equal similarities
/// keep library order.
pub fn retrieve<'a>(library: &'a EpisodeLibrary, target: &Episode, config: &CbrConfig) -> Vec<Retrieved<'a>> {
    let t = target.features();
    let mut hits: Vec<Retrieved<'a>> = library
        .episodes()
        .iter()
        .enumerate()
        .filter(|(_, e)| f64::from(e.game_value) <= config.alpha)
        .filter_map(|(index, episode)| {
            let sim = similarity(&t, &episode.features()).expect("episodes have 12 values").value;
            (sim >= config.beta).then_some(Retrieved { episode, index, similarity: sim })
        })
        .collect();
    hits.sort_by(|a, b| b.similarity.total_cmp(&a.similarity));
    hits
}

/// The best-ranked retrieved episode whose label is legal now.
fn first_legal<'a>(hits: &[Retrieved<'a>], state: &GameState) -> Option<(Move, f64)> {
    let legal = state.legal_moves();
    hits.iter().find_map(|h| {
        let mv = Move::from_relative(state.to_move(), h.episode.move_label as usize);
        legal.contains(&mv).then_some((mv, h.similarity))
    })
}

/// Plays the move of the closest legal retrieved episode, or the
/// perceptron's best legal class when retrieval yields nothing usable.
/// `None` only when the position has no legal move.
pub fn casing_move(
    state: &GameState,
    library: &EpisodeLibrary,
    model: &PerceptronModel,
    config: &CbrConfig,
) -> Option<Move> {
    let target = Episode::target(state);
    if let Some((mv, _)) = first_legal(&retrieve(library, &target, config), state) {
        return Some(mv);
    }
    let legal: Vec<usize> = state.legal_moves().iter().map(|m| m.relative()).collect();
    classify(model, &target, &legal).map(|rel| Move::from_relative(state.to_move(), rel))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridDecision {
    pub mv: Move,
    /// Retrieval replaced the alpha-beta choice.
    pub overridden: bool,
    pub similarity_used: Option<f64>,
}

/// Alpha-beta move, overridden by the closest legal retrieved episode when
/// that episode suggests a different move. `None` for finished positions.
/// Depth 0 searches one ply.
pub fn hybrid_move(
    state: &GameState,
    depth: u32,
    weights: &EvalWeights,
    library: &EpisodeLibrary,
    cbr: &CbrConfig,
    rules: &GameConfig,
) -> Option<HybridDecision> {
    let searched = alphabeta(state, depth.max(1), weights, rules).best_move?;
    let hit =
        if library.is_empty() { None } else { first_legal(&retrieve(library, &Episode::target(state), cbr), state) };
    Some(match hit {
        Some((mv, sim)) => HybridDecision { mv, overridden: mv != searched, similarity_used: Some(sim) },
        None => HybridDecision { mv: searched, overridden: false, similarity_used: None },
    })
}
