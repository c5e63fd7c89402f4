use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::db::{DbEntry, EndgameDatabase};
use super::forward::ForwardSolver;
use super::godel::unrank_of;
use crate::rules::{Board, GameConfig, Side, StalemateRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every entry of levels 0..=L.
    Exhaustive(u32),
    /// `k` entries drawn uniformly over the whole database with a fixed seed.
    Sampled(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MismatchKind {
    /// The stored bits do not decode to a value.
    Undecodable(DbEntry),
    /// The entry disagrees with the best move backed up from the stored
    /// values of its children; `expected` is `None` when a child is unreadable.
    SelfConsistency { stored: i32, expected: Option<i32> },
    /// The entry disagrees with forward search.
    Oracle { stored: i32, oracle: i32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub level: u32,
    pub rank: u64,
    pub kind: MismatchKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checked: u64,
    /// Checked entries whose bounds never met; their self-consistency is not
    /// required, only agreement with forward search.
    pub eternal: u64,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks entries against their children's stored values and against an
/// independent forward search under `config`.
pub fn verify(db: &EndgameDatabase, config: &GameConfig, mode: VerifyMode) -> VerifyReport {
    let mut oracle = ForwardSolver::new(config);
    let mut report = VerifyReport::default();
    match mode {
        VerifyMode::Exhaustive(top) => {
            for level in 0..=top.min(db.max_seeds()) {
                for rank in 0..db.level(level).count() {
                    check(db, config, &mut oracle, level, rank, &mut report);
                }
            }
        }
        VerifyMode::Sampled(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let total = db.entry_count();
            for _ in 0..k {
                let mut i = rng.random_range(0..total);
                let mut level = 0;
                while i >= db.level(level).count() {
                    i -= db.level(level).count();
                    level += 1;
                }
                check(db, config, &mut oracle, level, i, &mut report);
            }
        }
    }
    report
}

fn check(
    db: &EndgameDatabase,
    config: &GameConfig,
    oracle: &mut ForwardSolver,
    level: u32,
    rank: u64,
    report: &mut VerifyReport,
) {
    report.checked += 1;
    let stored = match db.entry(level, rank) {
        DbEntry::Value(v) => v,
        other => {
            report.mismatches.push(Mismatch { level, rank, kind: MismatchKind::Undecodable(other) });
            return;
        }
    };
    let board = Board::new(unrank_of(level, rank));
    let truth = oracle.solve(&board);

    if truth.is_eternal() {
        report.eternal += 1;
    } else {
        let expected = backed_up(db, config, &board);
        if expected != Some(stored) {
            let kind = MismatchKind::SelfConsistency { stored, expected };
            report.mismatches.push(Mismatch { level, rank, kind });
        }
    }
    if truth.value != stored {
        report.mismatches.push(Mismatch { level, rank, kind: MismatchKind::Oracle { stored, oracle: truth.value } });
    }
}

/// One negamax step over the database's own values.
fn backed_up(db: &EndgameDatabase, config: &GameConfig, board: &Board) -> Option<i32> {
    let moves = board.legal_moves(Side::South);
    if moves.is_empty() {
        return Some(match config.stalemate_rule {
            StalemateRule::Cancelled => 0,
            StalemateRule::MoverLoses => -(board.seeds() as i32),
        });
    }
    let mut best = None;
    for mv in moves {
        let sown = board.sow(mv.index(), config.grand_slam_rule);
        let child = db.value_of(&sown.board.rotated().pits).ok()?;
        let v = i32::from(sown.captured) - child;
        best = Some(best.map_or(v, |b: i32| b.max(v)));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endgame::{godel_rank, solve};

    #[test]
    fn fresh_database_is_clean() {
        let cfg = GameConfig::default();
        let db = solve(4, &cfg).unwrap();
        let report = verify(&db, &cfg, VerifyMode::Exhaustive(4));
        assert_eq!(report.checked, 1 + 12 + 78 + 364 + 1365);
        assert!(report.is_clean(), "{:?}", &report.mismatches[..report.mismatches.len().min(5)]);
    }

    #[test]
    fn flipped_bit_is_reported() {
        let cfg = GameConfig::default();
        let mut db = solve(4, &cfg).unwrap();
        // no legal move: the stored 0 is forced by the stalemate rule
        let board = Board::from_rows([0; 6], [1, 1, 0, 0, 0, 0]);
        let rank = godel_rank(&board).unwrap().rank;
        let raw = db.level(2).get(rank);
        db.level_mut(2).set(rank, raw ^ 1);
        let report = verify(&db, &cfg, VerifyMode::Exhaustive(4));
        assert!(report.mismatches.iter().any(|m| matches!(m.kind, MismatchKind::SelfConsistency { .. })));
    }

    #[test]
    fn sampling_is_reproducible() {
        let cfg = GameConfig::default();
        let db = solve(5, &cfg).unwrap();
        let a = verify(&db, &cfg, VerifyMode::Sampled(200));
        assert_eq!(a, verify(&db, &cfg, VerifyMode::Sampled(200)));
        assert_eq!(a.checked, 200);
        assert!(a.is_clean());
    }
}
