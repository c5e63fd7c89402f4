use std::collections::HashMap;

use crate::rules::{Board, GameConfig, Side, StalemateRule};

/// Value of one position found by forward search, with the bounds it was
/// derived from. `lower < upper` marks an eternal position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForwardValue {
    pub value: i32,
    pub lower: i32,
    pub upper: i32,
}

impl ForwardValue {
    pub fn is_eternal(&self) -> bool {
        self.lower < self.upper
    }
}

/// Solves positions on demand by searching forward from them, using the
/// rules engine's move generator.
///
/// Positions reachable without captures are grouped into strongly connected
/// components; each component is solved after everything it leads to, by
/// tightening bounds in place until they stop moving. Captures recurse into
/// the smaller seed counts. Results are memoized, so solving many positions
/// of one level costs little more than solving the level once.
#[derive(Debug, Clone)]
pub struct ForwardSolver {
    config: GameConfig,
    memo: HashMap<Board, ForwardValue>,
}

struct Node {
    board: Board,
    exit: Option<i32>,
    kids: Vec<Board>,
    fixed: Option<i32>,
    index: usize,
    low: usize,
    on_stack: bool,
}

impl ForwardSolver {
    pub fn new(config: &GameConfig) -> Self {
        ForwardSolver { config: config.clone(), memo: HashMap::new() }
    }

    pub fn solved_positions(&self) -> usize {
        self.memo.len()
    }

    /// Value of `board` for the player owning pits 0..6, who is to move.
    pub fn solve(&mut self, board: &Board) -> ForwardValue {
        if let Some(v) = self.memo.get(board) {
            return *v;
        }
        self.run_tarjan(*board);
        self.memo[board]
    }

    fn expand(&mut self, board: Board, index: usize) -> Node {
        let mut node = Node { board, exit: None, kids: vec![], fixed: None, index, low: index, on_stack: true };
        let moves = board.legal_moves(Side::South);
        if moves.is_empty() {
            node.fixed = Some(match self.config.stalemate_rule {
                StalemateRule::Cancelled => 0,
                StalemateRule::MoverLoses => -(board.seeds() as i32),
            });
            return node;
        }
        for mv in moves {
            let sown = board.sow(mv.index(), self.config.grand_slam_rule);
            let child = sown.board.rotated();
            if sown.captured > 0 {
                let v = i32::from(sown.captured) - self.solve(&child).value;
                node.exit = Some(node.exit.map_or(v, |e| e.max(v)));
            } else {
                node.kids.push(child);
            }
        }
        node
    }

    fn run_tarjan(&mut self, root: Board) {
        let mut nodes: Vec<Node> = vec![];
        let mut local: HashMap<Board, usize> = HashMap::new();
        let mut stack: Vec<usize> = vec![];
        // (node, next kid to look at)
        let mut frames: Vec<(usize, usize)> = vec![];
        // working (lower, upper) per node, meaningful inside its component
        let mut bounds: Vec<(i32, i32)> = vec![];

        let first = self.expand(root, 0);
        nodes.push(first);
        bounds.push((0, 0));
        local.insert(root, 0);
        stack.push(0);
        frames.push((0, 0));

        while let Some(&mut (v, ref mut next)) = frames.last_mut() {
            if *next < nodes[v].kids.len() {
                let kid = nodes[v].kids[*next];
                *next += 1;
                if self.memo.contains_key(&kid) {
                    continue;
                }
                match local.get(&kid) {
                    Some(&w) => {
                        if nodes[w].on_stack {
                            nodes[v].low = nodes[v].low.min(nodes[w].index);
                        }
                    }
                    None => {
                        let w = nodes.len();
                        let node = self.expand(kid, w);
                        nodes.push(node);
                        bounds.push((0, 0));
                        local.insert(kid, w);
                        stack.push(w);
                        frames.push((w, 0));
                    }
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                nodes[parent].low = nodes[parent].low.min(nodes[v].low);
            }
            if nodes[v].low == nodes[v].index {
                let split = stack.iter().rposition(|&x| x == v).expect("root on stack");
                let component: Vec<usize> = stack.drain(split..).collect();
                for &c in &component {
                    nodes[c].on_stack = false;
                }
                self.settle(&nodes, &local, &component, &mut bounds);
            }
        }
    }

    /// Tightens bounds over one component whose successors are all settled.
    fn settle(
        &mut self,
        nodes: &[Node],
        local: &HashMap<Board, usize>,
        component: &[usize],
        bounds: &mut [(i32, i32)],
    ) {
        let n = nodes[component[0]].board.seeds() as i32;
        for &c in component {
            bounds[c] = nodes[c].fixed.map_or((-n, n), |v| (v, v));
        }
        loop {
            let mut changed = false;
            for &c in component {
                let node = &nodes[c];
                if node.fixed.is_some() {
                    continue;
                }
                let mut l = node.exit.unwrap_or(i32::MIN);
                let mut h = l;
                for kid in &node.kids {
                    let (kl, kh) = match self.memo.get(kid) {
                        Some(fv) => (fv.lower, fv.upper),
                        None => bounds[local[kid]],
                    };
                    l = l.max(-kh);
                    h = h.max(-kl);
                }
                if (l, h) != bounds[c] {
                    changed = true;
                    bounds[c] = (l, h);
                }
            }
            if !changed {
                break;
            }
        }
        for &c in component {
            let (lower, upper) = bounds[c];
            let value = if lower == upper {
                lower
            } else {
                let b = &nodes[c].board;
                let split = b.row_seeds(Side::South) as i32 - b.row_seeds(Side::North) as i32;
                split.clamp(lower, upper)
            };
            self.memo.insert(nodes[c].board, ForwardValue { value, lower, upper });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_single_seed() {
        let mut f = ForwardSolver::new(&GameConfig::default());
        assert_eq!(f.solve(&Board::default()), ForwardValue { value: 0, lower: 0, upper: 0 });
        let lone = Board::new([0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(f.solve(&lone).value, 0);
    }

    #[test]
    fn immediate_capture() {
        // pit 5 drops its seed on the 1 in pit 6, making 2: capture it; the
        // last seed on north's side keeps the capture from being a grand slam
        let mut f = ForwardSolver::new(&GameConfig::default());
        let b = Board::new([0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(f.solve(&b).value, 2);
    }

    #[test]
    fn mover_loses_stalemate() {
        let cfg = GameConfig { stalemate_rule: StalemateRule::MoverLoses, ..GameConfig::default() };
        let mut f = ForwardSolver::new(&cfg);
        let stuck = Board::new([0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1]);
        assert_eq!(f.solve(&stuck).value, -3);
    }
}
