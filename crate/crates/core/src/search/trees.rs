use super::{Score, SearchError};

pub const MAX_TREE_NODES: usize = 100_000;
pub const MAX_SOLUTION_TREES: u64 = 1 << 22;

/// A game tree given explicitly, with Max and Min levels labelled.
#[derive(Debug, Clone, PartialEq)]
pub enum ExplicitTree {
    Leaf(Score),
    Max(Vec<ExplicitTree>),
    Min(Vec<ExplicitTree>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionTreeCheck {
    /// Minimax value of the root.
    pub minimax: Score,
    /// Best lower bound over all min solution trees.
    pub max_over_min_trees: Score,
    /// Best upper bound over all max solution trees.
    pub min_over_max_trees: Score,
    pub min_trees: u64,
    pub max_trees: u64,
}

impl SolutionTreeCheck {
    pub fn holds(&self) -> bool {
        self.minimax == self.max_over_min_trees && self.minimax == self.min_over_max_trees
    }
}

impl ExplicitTree {
    pub fn node_count(&self) -> usize {
        match self {
            ExplicitTree::Leaf(_) => 1,
            ExplicitTree::Max(c) | ExplicitTree::Min(c) => 1 + c.iter().map(Self::node_count).sum::<usize>(),
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        match self {
            ExplicitTree::Leaf(_) => Ok(()),
            ExplicitTree::Max(c) | ExplicitTree::Min(c) => {
                if c.is_empty() {
                    return Err(SearchError::EmptyInternalNode);
                }
                c.iter().try_for_each(Self::validate)
            }
        }
    }

    pub fn minimax_value(&self) -> Score {
        match self {
            ExplicitTree::Leaf(v) => *v,
            ExplicitTree::Max(c) => c.iter().map(Self::minimax_value).fold(Score::NEG_INFINITY, Score::max),
            ExplicitTree::Min(c) => c.iter().map(Self::minimax_value).fold(Score::INFINITY, Score::min),
        }
    }

    /// Number of solution trees of the given kind. `keep_all_at_min` selects
    /// min solution trees (all children of Min nodes, one child of Max nodes);
    /// otherwise max solution trees. Saturates at `u64::MAX`.
    fn solution_tree_count(&self, keep_all_at_min: bool) -> u64 {
        match self {
            ExplicitTree::Leaf(_) => 1,
            ExplicitTree::Max(c) | ExplicitTree::Min(c) => {
                let counts = c.iter().map(|t| t.solution_tree_count(keep_all_at_min));
                let keep_all = matches!(self, ExplicitTree::Min(_)) == keep_all_at_min;
                if keep_all {
                    counts.fold(1u64, u64::saturating_mul)
                } else {
                    counts.fold(0u64, u64::saturating_add)
                }
            }
        }
    }

    /// g of every min solution tree: the smallest leaf it contains.
    fn min_tree_values(&self) -> Vec<Score> {
        match self {
            ExplicitTree::Leaf(v) => vec![*v],
            ExplicitTree::Max(c) => c.iter().flat_map(Self::min_tree_values).collect(),
            ExplicitTree::Min(c) => c.iter().fold(vec![Score::INFINITY], |acc, child| {
                let sub = child.min_tree_values();
                acc.iter().flat_map(|a| sub.iter().map(move |b| a.min(*b))).collect()
            }),
        }
    }

    /// g of every max solution tree: the largest leaf it contains.
    fn max_tree_values(&self) -> Vec<Score> {
        match self {
            ExplicitTree::Leaf(v) => vec![*v],
            ExplicitTree::Min(c) => c.iter().flat_map(Self::max_tree_values).collect(),
            ExplicitTree::Max(c) => c.iter().fold(vec![Score::NEG_INFINITY], |acc, child| {
                let sub = child.max_tree_values();
                acc.iter().flat_map(|a| sub.iter().map(move |b| a.max(*b))).collect()
            }),
        }
    }
}

/// Computes the root value three ways: by minimax, as the best bound over all
/// min solution trees, and as the best bound over all max solution trees.
/// Every solution tree is enumerated explicitly.
pub fn solution_tree_check(tree: &ExplicitTree) -> Result<SolutionTreeCheck, SearchError> {
    tree.validate()?;
    let nodes = tree.node_count();
    if nodes > MAX_TREE_NODES {
        return Err(SearchError::TreeTooLarge { nodes });
    }
    let min_trees = tree.solution_tree_count(true);
    let max_trees = tree.solution_tree_count(false);
    if min_trees > MAX_SOLUTION_TREES || max_trees > MAX_SOLUTION_TREES {
        return Err(SearchError::TooManySolutionTrees);
    }
    let lower = tree.min_tree_values();
    let upper = tree.max_tree_values();
    debug_assert_eq!(lower.len() as u64, min_trees);
    debug_assert_eq!(upper.len() as u64, max_trees);
    Ok(SolutionTreeCheck {
        minimax: tree.minimax_value(),
        max_over_min_trees: lower.into_iter().fold(Score::NEG_INFINITY, Score::max),
        min_over_max_trees: upper.into_iter().fold(Score::INFINITY, Score::min),
        min_trees,
        max_trees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExplicitTree::{Leaf, Max, Min};

    fn two_ply() -> ExplicitTree {
        Max(vec![Min(vec![Leaf(3.0), Leaf(5.0)]), Min(vec![Leaf(2.0), Leaf(9.0)])])
    }

    #[test]
    fn single_leaf() {
        let c = solution_tree_check(&Leaf(7.0)).unwrap();
        assert_eq!((c.minimax, c.max_over_min_trees, c.min_over_max_trees), (7.0, 7.0, 7.0));
    }

    #[test]
    fn two_ply_example() {
        let t = two_ply();
        assert_eq!(t.minimax_value(), 3.0);
        let c = solution_tree_check(&t).unwrap();
        assert_eq!((c.minimax, c.max_over_min_trees, c.min_over_max_trees), (3.0, 3.0, 3.0));
        assert_eq!((c.min_trees, c.max_trees), (2, 4));
        // hand enumeration: min trees {3,5}->3, {2,9}->2; max trees
        // {3,2}->3, {3,9}->9, {5,2}->5, {5,9}->9
        let mut lower = t.min_tree_values();
        lower.sort_by(f64::total_cmp);
        assert_eq!(lower, vec![2.0, 3.0]);
        let mut upper = t.max_tree_values();
        upper.sort_by(f64::total_cmp);
        assert_eq!(upper, vec![3.0, 5.0, 9.0, 9.0]);
    }

    #[test]
    fn rejects_bad_trees() {
        assert_eq!(solution_tree_check(&Max(vec![])), Err(SearchError::EmptyInternalNode));
        let wide = Max((0..MAX_TREE_NODES).map(|i| Leaf(i as f64)).collect());
        assert!(matches!(solution_tree_check(&wide), Err(SearchError::TreeTooLarge { .. })));
        // 2^24 max solution trees
        let deep = Max((0..24).map(|_| Min(vec![Leaf(0.0), Leaf(1.0)])).collect());
        assert_eq!(solution_tree_check(&deep), Err(SearchError::TooManySolutionTrees));
    }
}
