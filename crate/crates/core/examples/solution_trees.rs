//! Checks on explicit trees that the minimax value equals both the best
//! bound over min solution trees and the best bound over max solution trees.
//!
//! cargo run --example solution_trees

use ayo::search::{solution_tree_check, ExplicitTree};

fn leaf(v: f64) -> ExplicitTree {
    ExplicitTree::Leaf(v)
}

fn main() -> anyhow::Result<()> {
    // Max root over two Min nodes: min(3, 5) = 3 and min(2, 9) = 2.
    let small = ExplicitTree::Max(vec![
        ExplicitTree::Min(vec![leaf(3.0), leaf(5.0)]),
        ExplicitTree::Min(vec![leaf(2.0), leaf(9.0)]),
    ]);
    let deeper = ExplicitTree::Max(vec![
        ExplicitTree::Min(vec![
            ExplicitTree::Max(vec![leaf(4.0), leaf(-1.0)]),
            ExplicitTree::Max(vec![leaf(6.0), leaf(2.0), leaf(0.0)]),
        ]),
        ExplicitTree::Min(vec![ExplicitTree::Max(vec![leaf(5.0)]), leaf(7.0)]),
        leaf(1.0),
    ]);
    for (name, tree) in [("small", small), ("deeper", deeper)] {
        let check = solution_tree_check(&tree)?;
        println!(
            "{name}: {} nodes, minimax {}, best over {} min trees {}, best over {} max trees {}, equal: {}",
            tree.node_count(),
            check.minimax,
            check.min_trees,
            check.max_over_min_trees,
            check.max_trees,
            check.min_over_max_trees,
            check.holds()
        );
    }
    Ok(())
}
