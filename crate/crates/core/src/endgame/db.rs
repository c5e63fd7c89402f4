use std::path::Path;

use sha2::{Digest, Sha256};

use super::godel::{count_positions, rank_of};
use super::packed::{PackedLevel, ENTRY_BITS, SENTINEL};
use super::DbError;
use crate::rules::{GameConfig, GameState, GrandSlamRule, Move, Side, StalemateRule};

/// Largest seed bound whose values fit 7-bit entries.
pub const MAX_DB_SEEDS: u32 = 48;

const MAGIC: &[u8; 5] = b"AYODB";
const VERSION: u8 = 1;
const HEADER_LEN: usize = MAGIC.len() + 1 + 2 + 1 + 8;

/// A decoded entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbEntry {
    Value(i32),
    Unsolved,
    /// A stored pattern outside the value range.
    Invalid(u8),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndgameDatabase {
    max_seeds: u32,
    digest: [u8; 8],
    levels: Vec<PackedLevel>,
}

/// Fingerprint of the rules that shape database values.
pub(crate) fn digest_for(config: &GameConfig) -> [u8; 8] {
    let stalemate = match config.stalemate_rule {
        StalemateRule::Cancelled => "cancelled",
        StalemateRule::MoverLoses => "mover-loses",
    };
    let grand_slam = match config.grand_slam_rule {
        GrandSlamRule::CaptureForfeited => "capture-forfeited",
    };
    let text = format!("awale-endgame;stalemate={stalemate};grand-slam={grand_slam}");
    let hash = Sha256::digest(text.as_bytes());
    hash[..8].try_into().expect("sha256 is 32 bytes")
}

impl EndgameDatabase {
    pub(crate) fn from_parts(max_seeds: u32, digest: [u8; 8], levels: Vec<PackedLevel>) -> Self {
        debug_assert_eq!(levels.len(), max_seeds as usize + 1);
        EndgameDatabase { max_seeds, digest, levels }
    }

    /// Assembles a database from packed levels, checking the level count and
    /// the entry count of every level.
    pub fn from_levels(max_seeds: u32, digest: [u8; 8], levels: Vec<PackedLevel>) -> Result<Self, DbError> {
        if max_seeds > MAX_DB_SEEDS {
            return Err(DbError::MaxSeedsTooLarge(max_seeds));
        }
        if levels.len() != max_seeds as usize + 1 {
            return Err(DbError::TruncatedLevel { level: levels.len() as u32 });
        }
        for (level, packed) in levels.iter().enumerate() {
            let expected = count_positions(level as u32)?;
            if packed.count() != expected {
                return Err(DbError::LevelCountMismatch { level: level as u32, found: packed.count(), expected });
            }
        }
        Ok(EndgameDatabase { max_seeds, digest, levels })
    }

    pub fn max_seeds(&self) -> u32 {
        self.max_seeds
    }

    pub fn digest(&self) -> [u8; 8] {
        self.digest
    }

    pub fn level(&self, n_seeds: u32) -> &PackedLevel {
        &self.levels[n_seeds as usize]
    }

    /// Direct access to stored bits, for fault injection and repair tools.
    pub fn level_mut(&mut self, n_seeds: u32) -> &mut PackedLevel {
        &mut self.levels[n_seeds as usize]
    }

    pub fn entry_count(&self) -> u64 {
        self.levels.iter().map(PackedLevel::count).sum()
    }

    pub fn entry(&self, n_seeds: u32, rank: u64) -> DbEntry {
        let raw = self.levels[n_seeds as usize].get(rank);
        if raw == SENTINEL {
            return DbEntry::Unsolved;
        }
        let v = i32::from(raw) - self.max_seeds as i32;
        if v.unsigned_abs() > n_seeds {
            DbEntry::Invalid(raw)
        } else {
            DbEntry::Value(v)
        }
    }

    /// The stored value, if the entry holds one.
    pub fn value(&self, n_seeds: u32, rank: u64) -> Option<i32> {
        match self.entry(n_seeds, rank) {
            DbEntry::Value(v) => Some(v),
            _ => None,
        }
    }

    /// Value of a board with the player to move owning pits 0..6.
    pub(crate) fn value_of(&self, pits: &[u8; 12]) -> Result<i32, DbError> {
        let seeds: u32 = pits.iter().map(|&p| u32::from(p)).sum();
        if seeds > self.max_seeds {
            return Err(DbError::SeedsAboveBound { seeds, max_seeds: self.max_seeds });
        }
        let rank = rank_of(pits);
        self.value(seeds, rank).ok_or(DbError::Unsolved { level: seeds, rank })
    }

    pub fn check_rules(&self, config: &GameConfig) -> Result<(), DbError> {
        if self.digest == digest_for(config) {
            Ok(())
        } else {
            Err(DbError::DigestMismatch)
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.levels.iter().map(|l| 8 + l.bytes().len()).sum::<usize>());
        out.extend_from_slice(MAGIC);
        out.push(VERSION);
        out.extend_from_slice(&(self.max_seeds as u16).to_le_bytes());
        out.push(ENTRY_BITS as u8);
        out.extend_from_slice(&self.digest);
        for level in &self.levels {
            out.extend_from_slice(&level.count().to_le_bytes());
            out.extend_from_slice(level.bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, DbError> {
        if bytes.len() < MAGIC.len() || &bytes[..MAGIC.len()] != MAGIC {
            return Err(DbError::BadMagic);
        }
        if bytes.len() < HEADER_LEN {
            return Err(DbError::TruncatedHeader);
        }
        if bytes[5] != VERSION {
            return Err(DbError::UnsupportedVersion(bytes[5]));
        }
        let max_seeds = u32::from(u16::from_le_bytes([bytes[6], bytes[7]]));
        if bytes[8] != ENTRY_BITS as u8 {
            return Err(DbError::BadEntryBits(bytes[8]));
        }
        if max_seeds > MAX_DB_SEEDS {
            return Err(DbError::MaxSeedsTooLarge(max_seeds));
        }
        let digest: [u8; 8] = bytes[9..HEADER_LEN].try_into().expect("8 bytes");
        let mut rest = &bytes[HEADER_LEN..];
        let mut levels = Vec::with_capacity(max_seeds as usize + 1);
        for level in 0..=max_seeds {
            let expected = count_positions(level)?;
            let Some((count, tail)) = rest.split_first_chunk::<8>() else {
                return Err(DbError::TruncatedLevel { level });
            };
            let found = u64::from_le_bytes(*count);
            if found != expected {
                return Err(DbError::LevelCountMismatch { level, found, expected });
            }
            let len = PackedLevel::byte_len(found);
            if tail.len() < len {
                return Err(DbError::TruncatedLevel { level });
            }
            let packed = PackedLevel::from_bytes(found, tail[..len].to_vec()).expect("length checked");
            levels.push(packed);
            rest = &tail[len..];
        }
        if !rest.is_empty() {
            return Err(DbError::TrailingBytes(rest.len()));
        }
        Ok(EndgameDatabase { max_seeds, digest, levels })
    }

    pub fn save(&self, path: &Path) -> Result<(), DbError> {
        crate::io::write_atomic(path, &self.to_bytes())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, DbError> {
        Self::from_bytes(&std::fs::read(path)?)
    }
}

/// Best capture differential the player to move can force from `state`'s
/// board, ignoring seeds already in the stores.
pub fn probe(db: &EndgameDatabase, state: &GameState) -> Result<i32, DbError> {
    db.value_of(&state.board().relative_to(state.to_move()).pits)
}

/// A legal move scored by the database.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankedMove {
    pub mv: Move,
    /// Seeds captured now minus the opponent's value afterwards.
    pub score: i32,
    pub captured: u8,
}

/// Every legal move with its backed-up score, best first: higher score, then
/// more seeds captured now, then lower pit.
pub fn rank_moves(db: &EndgameDatabase, state: &GameState, config: &GameConfig) -> Result<Vec<RankedMove>, DbError> {
    let mut ranked = Vec::new();
    for mv in state.legal_moves() {
        let outcome = state.apply_move(mv, config).expect("legal move");
        let score = i32::from(outcome.captured_now) - probe(db, &outcome.next)?;
        ranked.push(RankedMove { mv, score, captured: outcome.captured_now });
    }
    ranked.sort_by(|a, b| b.score.cmp(&a.score).then(b.captured.cmp(&a.captured)).then(a.mv.cmp(&b.mv)));
    Ok(ranked)
}

pub fn best_move_from_db(db: &EndgameDatabase, state: &GameState, config: &GameConfig) -> Result<Move, DbError> {
    rank_moves(db, state, config)?.first().map(|r| r.mv).ok_or(DbError::NoLegalMove)
}

/// Like [`best_move_from_db`], but searches ahead through the engine so that
/// games ended by repetition or the ply cap are scored by their actual
/// result. Deepens one ply at a time while the whole iteration fits in
/// `node_budget` nodes; the database values the leaves, and ties keep the
/// database ranking.
pub fn best_move_with_history(
    db: &EndgameDatabase,
    state: &GameState,
    config: &GameConfig,
    node_budget: u64,
) -> Result<Move, DbError> {
    let ranked = rank_moves(db, state, config)?;
    let mut chosen = ranked.first().ok_or(DbError::NoLegalMove)?.mv;
    for depth in 1..=MAX_HISTORY_DEPTH {
        let mut search = LineSearch { db, config, nodes: 0, budget: node_budget, reached_horizon: false };
        match search.root(state, &ranked, depth)? {
            Some(mv) => chosen = mv,
            None => break,
        }
        if !search.reached_horizon {
            // Every line ended before the horizon; deeper search changes nothing.
            break;
        }
    }
    Ok(chosen)
}

const MAX_HISTORY_DEPTH: u32 = 64;

struct LineSearch<'a> {
    db: &'a EndgameDatabase,
    config: &'a GameConfig,
    nodes: u64,
    budget: u64,
    reached_horizon: bool,
}

impl LineSearch<'_> {
    /// Best root move at `depth`, or `None` if the budget ran out.
    fn root(&mut self, state: &GameState, ranked: &[RankedMove], depth: u32) -> Result<Option<Move>, DbError> {
        let mut best: Option<(i32, Move)> = None;
        for r in ranked {
            let child = state.apply_move(r.mv, self.config).expect("legal move").next;
            let alpha = best.map_or(-i32::MAX, |(v, _)| v);
            let Some(v) = self.value(&child, depth - 1, -i32::MAX, -alpha)? else {
                return Ok(None);
            };
            if best.is_none_or(|(b, _)| -v > b) {
                best = Some((-v, r.mv));
            }
        }
        Ok(best.map(|(_, mv)| mv))
    }

    /// Final store difference for the mover, by fail-soft alpha-beta.
    fn value(&mut self, state: &GameState, depth: u32, mut alpha: i32, beta: i32) -> Result<Option<i32>, DbError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Ok(None);
        }
        let me = state.to_move();
        let status = state.status(self.config);
        if status.is_terminal() {
            let (s, n) = status.final_captures.unwrap_or((state.captured(Side::South), state.captured(Side::North)));
            let diff = s as i32 - n as i32;
            return Ok(Some(if me == Side::South { diff } else { -diff }));
        }
        if depth == 0 {
            self.reached_horizon = true;
            let stores = state.captured(me) as i32 - state.captured(me.opponent()) as i32;
            return Ok(Some(stores + probe(self.db, state)?));
        }
        let mut best = -i32::MAX;
        for mv in state.legal_moves() {
            let child = state.apply_move(mv, self.config).expect("legal move").next;
            let Some(v) = self.value(&child, depth - 1, -beta, -alpha)? else {
                return Ok(None);
            };
            best = best.max(-v);
            alpha = alpha.max(-v);
            if alpha >= beta {
                break;
            }
        }
        Ok(Some(best))
    }
}
