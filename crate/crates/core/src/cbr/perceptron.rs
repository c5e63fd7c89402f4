use serde::{Deserialize, Serialize};

use super::{CbrError, Episode, EpisodeLibrary};
use crate::rules::{PITS, ROW};

pub const CLASSES: usize = ROW;
pub const INPUTS: usize = PITS + 1;

/// One-vs-rest single-layer perceptron over mover-relative pit counts, one
/// linear unit (with bias, stored last) per relative pit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerceptronModel {
    pub weights: Vec<[f64; INPUTS]>,
    pub learning_rate: f64,
    pub epochs_trained: u32,
    /// Training errors of the kept weights after each epoch.
    pub error_history: Vec<usize>,
}

impl PerceptronModel {
    pub fn zero(learning_rate: f64) -> Self {
        PerceptronModel {
            weights: vec![[0.0; INPUTS]; CLASSES],
            learning_rate,
            epochs_trained: 0,
            error_history: vec![],
        }
    }

    pub fn activations(&self, episode: &Episode) -> [f64; CLASSES] {
        activations(&self.weights, &inputs(episode))
    }

    pub fn training_errors(&self, library: &EpisodeLibrary) -> usize {
        training_errors(&self.weights, library)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CbrError> {
        let model: PerceptronModel = serde_json::from_str(text).map_err(|e| CbrError::Model(e.to_string()))?;
        if model.weights.len() != CLASSES || model.weights.iter().flatten().any(|w| !w.is_finite()) {
            return Err(CbrError::Model(format!("expected {CLASSES} finite weight vectors")));
        }
        Ok(model)
    }
}

fn inputs(episode: &Episode) -> [f64; INPUTS] {
    let mut x = [1.0; INPUTS];
    x[..PITS].copy_from_slice(&episode.features());
    x
}

fn dot(w: &[f64; INPUTS], x: &[f64; INPUTS]) -> f64 {
    w.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn activations(weights: &[[f64; INPUTS]], x: &[f64; INPUTS]) -> [f64; CLASSES] {
    let mut out = [0.0; CLASSES];
    for (o, w) in out.iter_mut().zip(weights) {
        *o = dot(w, x);
    }
    out
}

/// Highest activation among `allowed` classes, lowest index on ties.
fn argmax(act: &[f64; CLASSES], allowed: impl IntoIterator<Item = usize>) -> Option<usize> {
    let mut best: Option<usize> = None;
    for k in allowed {
        if best.is_none_or(|b| act[k] > act[b] || (act[k] == act[b] && k < b)) {
            best = Some(k);
        }
    }
    best
}

fn training_errors(weights: &[[f64; INPUTS]], library: &EpisodeLibrary) -> usize {
    library
        .episodes()
        .iter()
        .filter(|e| argmax(&activations(weights, &inputs(e)), 0..CLASSES) != Some(e.move_label as usize))
        .count()
}

/// Rosenblatt training, one pass over the library per epoch in insertion
/// order. The weights with the fewest training errors seen so far are kept,
/// so the recorded error never increases; training stops early at zero.
pub fn train_perceptron(library: &EpisodeLibrary, rate: f64, epochs: u32) -> Result<PerceptronModel, CbrError> {
    if library.is_empty() {
        return Err(CbrError::EmptyLibrary);
    }
    if !(rate > 0.0 && rate.is_finite()) {
        return Err(CbrError::InvalidRate(rate));
    }
    let mut model = PerceptronModel::zero(rate);
    let mut weights = model.weights.clone();
    let mut kept_errors = training_errors(&weights, library);
    for _ in 0..epochs {
        if kept_errors == 0 {
            break;
        }
        for ep in library.episodes() {
            let x = inputs(ep);
            for (k, w) in weights.iter_mut().enumerate() {
                let target = if ep.move_label as usize == k { 1.0 } else { 0.0 };
                let output = if dot(w, &x) > 0.0 { 1.0 } else { 0.0 };
                let delta = rate * (target - output);
                if delta != 0.0 {
                    for (wi, xi) in w.iter_mut().zip(&x) {
                        *wi += delta * xi;
                    }
                }
            }
        }
        model.epochs_trained += 1;
        let errors = training_errors(&weights, library);
        if errors < kept_errors {
            kept_errors = errors;
            model.weights = weights.clone();
        }
        model.error_history.push(kept_errors);
    }
    Ok(model)
}

/// The legal relative pit with the highest activation; `None` if `legal` is empty.
pub fn classify(model: &PerceptronModel, target: &Episode, legal: &[usize]) -> Option<usize> {
    argmax(&model.activations(target), legal.iter().copied().filter(|&k| k < CLASSES))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_model_picks_lowest_legal() {
        let m = PerceptronModel::zero(0.1);
        let ep = Episode::new([3; 12], 0, 0).unwrap();
        assert_eq!(classify(&m, &ep, &[0, 1, 2, 3, 4, 5]), Some(0));
        assert_eq!(classify(&m, &ep, &[4, 2]), Some(2));
        assert_eq!(classify(&m, &ep, &[]), None);
    }

    #[test]
    fn single_episode_is_memorized_in_one_epoch() {
        let ep = Episode::new([0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5], 3, 1).unwrap();
        let lib: EpisodeLibrary = [ep].into_iter().collect();
        let m = train_perceptron(&lib, 0.1, 1).unwrap();
        assert_eq!(m.epochs_trained, 1);
        assert_eq!(classify(&m, &ep, &[0, 1, 2, 3, 4, 5]), Some(3));
    }

    #[test]
    fn preconditions() {
        let lib: EpisodeLibrary = [Episode::new([1; 12], 0, 0).unwrap()].into_iter().collect();
        assert_eq!(train_perceptron(&EpisodeLibrary::new(), 0.1, 10), Err(CbrError::EmptyLibrary));
        assert_eq!(train_perceptron(&lib, 0.0, 10), Err(CbrError::InvalidRate(0.0)));
        assert!(train_perceptron(&lib, f64::NAN, 10).is_err());
    }

    #[test]
    fn json_round_trip() {
        let lib: EpisodeLibrary =
            [Episode::new([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2], 1, 0).unwrap()].into_iter().collect();
        let m = train_perceptron(&lib, 0.5, 3).unwrap();
        assert_eq!(PerceptronModel::from_json(&m.to_json()).unwrap(), m);
        assert!(PerceptronModel::from_json(
            "{\"weights\":[],\"learning_rate\":1,\"epochs_trained\":0,\"error_history\":[]}"
        )
        .is_err());
    }
}
