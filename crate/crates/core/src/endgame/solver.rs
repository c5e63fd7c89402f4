use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::db::{digest_for, EndgameDatabase, MAX_DB_SEEDS};
use super::godel::{count_positions, rank_of, unrank_of};
use super::packed::PackedLevel;
use super::raw::{self, row_split, stalemate_value};
use super::DbError;
use crate::rules::{GameConfig, ROW};

const NO_CHILD: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub workers: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { workers: 1 }
    }
}

/// Progress of one finished level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    pub level: u32,
    pub entries: u64,
    /// Bound-tightening sweeps until nothing changed.
    pub sweeps: u32,
    /// Entries whose bounds never met.
    pub eternal: u64,
    pub elapsed: Duration,
}

/// What one position contributes to its own level's bound iteration.
#[derive(Clone, Copy)]
struct Node {
    /// Best capturing move, already scored from the solved lower level.
    exit: Option<i8>,
    /// Same-level children reached by moves that capture nothing.
    kids: [u32; ROW],
    /// Value of a position without legal moves.
    fixed: Option<i8>,
}

pub fn solve(max_seeds: u32, config: &GameConfig) -> Result<EndgameDatabase, DbError> {
    solve_with(max_seeds, config, SolveOptions::default(), |_| {})
}

/// Solves levels 0..=max_seeds, calling `on_level` after each one. The result
/// does not depend on the number of workers.
pub fn solve_with(
    max_seeds: u32,
    config: &GameConfig,
    options: SolveOptions,
    mut on_level: impl FnMut(&LevelReport),
) -> Result<EndgameDatabase, DbError> {
    if max_seeds > MAX_DB_SEEDS {
        return Err(DbError::MaxSeedsTooLarge(max_seeds));
    }
    if options.workers == 0 {
        return Err(DbError::NoWorkers);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| DbError::Pool(e.to_string()))?;
    let mut values: Vec<Vec<i8>> = Vec::with_capacity(max_seeds as usize + 1);
    for level in 0..=max_seeds {
        let started = Instant::now();
        let count = count_positions(level)?;
        if count >= u64::from(NO_CHILD) {
            return Err(DbError::LevelTooLarge { level });
        }
        let (level_values, sweeps, eternal) = pool.install(|| solve_level(level, count, &values, config));
        values.push(level_values);
        on_level(&LevelReport { level, entries: count, sweeps, eternal, elapsed: started.elapsed() });
    }
    let offset = max_seeds as i32;
    let levels = values
        .iter()
        .map(|vals| {
            let raw: Vec<u8> = vals.iter().map(|&v| (i32::from(v) + offset) as u8).collect();
            PackedLevel::from_entries(&raw)
        })
        .collect();
    Ok(EndgameDatabase::from_parts(max_seeds, digest_for(config), levels))
}

fn solve_level(level: u32, count: u64, lower: &[Vec<i8>], config: &GameConfig) -> (Vec<i8>, u32, u64) {
    let n = level as i8;
    let nodes: Vec<Node> = (0..count)
        .into_par_iter()
        .map(|rank| {
            let board = unrank_of(level, rank);
            let mut node = Node { exit: None, kids: [NO_CHILD; ROW], fixed: None };
            let mut any = false;
            for m in raw::moves(&board) {
                any = true;
                if m.captured > 0 {
                    let below = &lower[(level - u32::from(m.captured)) as usize];
                    let v = m.captured as i8 - below[rank_of(&m.child) as usize];
                    node.exit = Some(node.exit.map_or(v, |e| e.max(v)));
                } else {
                    node.kids[m.pit] = rank_of(&m.child) as u32;
                }
            }
            if !any {
                node.fixed = Some(stalemate_value(config, level) as i8);
            }
            node
        })
        .collect();

    let mut lo: Vec<i8> = nodes.iter().map(|nd| nd.fixed.unwrap_or(-n)).collect();
    let mut hi: Vec<i8> = nodes.iter().map(|nd| nd.fixed.unwrap_or(n)).collect();
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let next: Vec<(i8, i8)> = nodes
            .par_iter()
            .enumerate()
            .map(|(i, nd)| {
                if nd.fixed.is_some() {
                    return (lo[i], hi[i]);
                }
                let mut l = nd.exit.unwrap_or(i8::MIN);
                let mut h = l;
                for &c in nd.kids.iter().filter(|&&c| c != NO_CHILD) {
                    l = l.max(-hi[c as usize]);
                    h = h.max(-lo[c as usize]);
                }
                (l, h)
            })
            .collect();
        let mut changed = false;
        for (i, (l, h)) in next.into_iter().enumerate() {
            changed |= l != lo[i] || h != hi[i];
            lo[i] = l;
            hi[i] = h;
        }
        if !changed {
            break;
        }
    }

    let mut eternal = 0;
    let values = (0..count as usize)
        .map(|i| {
            if lo[i] == hi[i] {
                lo[i]
            } else {
                eternal += 1;
                let split = row_split(&unrank_of(level, i as u64)) as i8;
                split.clamp(lo[i], hi[i])
            }
        })
        .collect();
    (values, sweeps, eternal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_levels() {
        let db = solve(1, &GameConfig::default()).unwrap();
        assert_eq!(db.level(0).count(), 1);
        assert_eq!(db.value(0, 0), Some(0));
        // one seed: no capture is ever possible, so every value is 0
        for r in 0..12 {
            assert_eq!(db.value(1, r), Some(0));
        }
    }

    #[test]
    fn rejects_bad_options() {
        assert_eq!(solve(49, &GameConfig::default()), Err(DbError::MaxSeedsTooLarge(49)));
        assert_eq!(solve_with(2, &GameConfig::default(), SolveOptions { workers: 0 }, |_| {}), Err(DbError::NoWorkers));
    }
}
