//! Awale rules: board layout, sowing, the 2-3 capture chain, the golden rule
//! and the end-of-game conditions.
//!
//! Pits are numbered `0..12` counter-clockwise. Pits `0..6` form South's row
//! and `6..12` North's row. South moves first. Every other module (database
//! ranks in particular) relies on this layout.

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use arrayvec::ArrayVec;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const PITS: usize = 12;
pub const ROW: usize = 6;

/// Pits and stores are `u8`, so a game may hold at most this many seeds.
pub const MAX_TOTAL_SEEDS: u32 = 255;

pub type MoveList = ArrayVec<Move, ROW>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RulesError {
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("illegal move at pit {pit}: {reason}")]
    IllegalMove { pit: usize, reason: IllegalReason },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IllegalReason {
    OutOfRange,
    WrongRow,
    EmptyPit,
    /// The move leaves the opponent without seeds although a feeding move exists.
    GoldenRule,
}

impl fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IllegalReason::OutOfRange => "no such pit",
            IllegalReason::WrongRow => "pit is not on the mover's row",
            IllegalReason::EmptyPit => "pit is empty",
            IllegalReason::GoldenRule => "golden rule: the opponent must be given seeds",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    South,
    North,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::South, Side::North];

    pub fn opponent(self) -> Side {
        match self {
            Side::South => Side::North,
            Side::North => Side::South,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn row(self) -> Range<usize> {
        match self {
            Side::South => 0..ROW,
            Side::North => ROW..PITS,
        }
    }

    pub fn owns(self, pit: usize) -> bool {
        self.row().contains(&pit)
    }

    pub fn owner_of(pit: usize) -> Side {
        if pit < ROW {
            Side::South
        } else {
            Side::North
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::South => 'S',
            Side::North => 'N',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StalemateRule {
    /// The game is abandoned; stores are frozen and the result is a draw.
    Cancelled,
    /// The player who cannot feed the opponent loses regardless of score.
    MoverLoses,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GrandSlamRule {
    /// A capture that would empty the opponent's row is void; the move stands.
    CaptureForfeited,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameConfig {
    pub seeds_per_pit: u8,
    pub stalemate_rule: StalemateRule,
    pub grand_slam_rule: GrandSlamRule,
    /// Number of earlier occurrences of a (board, mover) pair tolerated before
    /// the game is declared endless and split by rows.
    pub repetition_limit: u32,
    pub max_plies: u32,
    /// Custom opening board for reduced variants; `None` is the standard
    /// `seeds_per_pit` in every pit.
    pub start: Option<Board>,
}

impl Default for GameConfig {
    fn default() -> Self {
        GameConfig {
            seeds_per_pit: 4,
            stalemate_rule: StalemateRule::Cancelled,
            grand_slam_rule: GrandSlamRule::CaptureForfeited,
            repetition_limit: 1,
            max_plies: 10_000,
            start: None,
        }
    }
}

impl GameConfig {
    /// A reduced game that opens from `board` instead of the uniform setup.
    pub fn variant(board: Board) -> Self {
        GameConfig { start: Some(board), ..GameConfig::default() }
    }

    pub fn validate(&self) -> Result<(), RulesError> {
        let bad = |msg: &str| Err(RulesError::InvalidConfig(msg.to_string()));
        if self.seeds_per_pit == 0 {
            return bad("seeds_per_pit must be at least 1");
        }
        if self.repetition_limit == 0 {
            return bad("repetition_limit must be at least 1");
        }
        if self.max_plies == 0 {
            return bad("max_plies must be at least 1");
        }
        if self.total_seeds() > MAX_TOTAL_SEEDS {
            return bad("more than 255 seeds in play");
        }
        if let Some(start) = &self.start {
            if start.seeds() == 0 {
                return bad("start board holds no seeds");
            }
        }
        Ok(())
    }

    pub fn total_seeds(&self) -> u32 {
        match &self.start {
            Some(b) => b.seeds(),
            None => PITS as u32 * u32::from(self.seeds_per_pit),
        }
    }

    pub fn starting_board(&self) -> Board {
        self.start.unwrap_or(Board::new([self.seeds_per_pit; PITS]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub pit: u8,
}

impl Move {
    pub fn new(pit: usize) -> Move {
        Move { pit: pit as u8 }
    }

    pub fn index(self) -> usize {
        self.pit as usize
    }

    /// Pit index counted from the start of the owner's row (0..6).
    pub fn relative(self) -> usize {
        self.index() % ROW
    }

    pub fn from_relative(side: Side, rel: usize) -> Move {
        Move::new(side.row().start + rel)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pit)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Board {
    pub pits: [u8; PITS],
}

/// Result of sowing one pit on a bare board.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sowing {
    pub board: Board,
    pub landing: usize,
    pub captured: u8,
}

impl Board {
    pub const fn new(pits: [u8; PITS]) -> Board {
        Board { pits }
    }

    pub fn from_rows(south: [u8; ROW], north: [u8; ROW]) -> Board {
        let mut pits = [0; PITS];
        pits[..ROW].copy_from_slice(&south);
        pits[ROW..].copy_from_slice(&north);
        Board { pits }
    }

    pub fn seeds(&self) -> u32 {
        self.pits.iter().map(|&p| u32::from(p)).sum()
    }

    pub fn row_seeds(&self, side: Side) -> u32 {
        self.pits[side.row()].iter().map(|&p| u32::from(p)).sum()
    }

    pub fn row_is_empty(&self, side: Side) -> bool {
        self.pits[side.row()].iter().all(|&p| p == 0)
    }

    /// The same position seen from the other side of the table: rows swapped,
    /// counter-clockwise order preserved.
    pub fn rotated(&self) -> Board {
        let mut pits = [0; PITS];
        for (i, p) in pits.iter_mut().enumerate() {
            *p = self.pits[(i + ROW) % PITS];
        }
        Board { pits }
    }

    /// The board with `side`'s row first.
    pub fn relative_to(&self, side: Side) -> Board {
        match side {
            Side::South => *self,
            Side::North => self.rotated(),
        }
    }

    /// Moves available to `side`, in ascending pit order, after the golden rule.
    pub fn legal_moves(&self, side: Side) -> MoveList {
        let feeding_required = self.row_is_empty(side.opponent());
        let start = side.row().start;
        side.row()
            .filter(|&pit| {
                let seeds = self.pits[pit] as usize;
                seeds > 0 && (!feeding_required || seeds >= ROW - (pit - start))
            })
            .map(Move::new)
            .collect()
    }

    /// Why `side` may not play `mv` here, if it may not.
    pub fn check_move(&self, side: Side, mv: Move) -> Result<(), IllegalReason> {
        let pit = mv.index();
        if pit >= PITS {
            return Err(IllegalReason::OutOfRange);
        }
        if !side.owns(pit) {
            return Err(IllegalReason::WrongRow);
        }
        if self.pits[pit] == 0 {
            return Err(IllegalReason::EmptyPit);
        }
        if !self.legal_moves(side).contains(&mv) {
            return Err(IllegalReason::GoldenRule);
        }
        Ok(())
    }

    /// Sows `pit` and resolves captures. No legality check beyond a non-empty pit.
    pub fn sow(&self, pit: usize, grand_slam: GrandSlamRule) -> Sowing {
        let mover = Side::owner_of(pit);
        let mut pits = self.pits;
        let seeds = pits[pit];
        debug_assert!(seeds > 0);
        pits[pit] = 0;
        let mut pos = pit;
        for _ in 0..seeds {
            pos = (pos + 1) % PITS;
            if pos == pit {
                pos = (pos + 1) % PITS;
            }
            pits[pos] += 1;
        }
        let landing = pos;

        let opp_row = mover.opponent().row();
        let mut captured = 0u8;
        if opp_row.contains(&landing) && matches!(pits[landing], 2 | 3) {
            let mut taken: ArrayVec<usize, ROW> = ArrayVec::new();
            let mut p = landing;
            loop {
                if !matches!(pits[p], 2 | 3) {
                    break;
                }
                taken.push(p);
                if p == opp_row.start {
                    break;
                }
                p -= 1;
            }
            let remaining: u32 = opp_row.clone().filter(|q| !taken.contains(q)).map(|q| u32::from(pits[q])).sum();
            let grand_slam_void = match grand_slam {
                GrandSlamRule::CaptureForfeited => remaining == 0,
            };
            if !grand_slam_void {
                for &q in &taken {
                    captured += pits[q];
                    pits[q] = 0;
                }
            }
        }
        Sowing { board: Board { pits }, landing, captured }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: Range<usize>| self.pits[r].iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}/{}", join(Side::South.row()), join(Side::North.row()))
    }
}

/// Board, stores and mover: everything the state notation carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Position {
    pub board: Board,
    pub captured: [u8; 2],
    pub to_move: Side,
}

/// Positions seen since the last capture. A capture lowers the seed count on
/// the board, so nothing older can ever recur.
#[derive(Clone, Default)]
struct History {
    head: Option<Arc<HistoryNode>>,
    len: u32,
}

struct HistoryNode {
    board: Board,
    to_move: Side,
    prev: Option<Arc<HistoryNode>>,
}

impl Drop for HistoryNode {
    fn drop(&mut self) {
        // unlink iteratively; long capture-free games would otherwise recurse deeply
        let mut next = self.prev.take();
        while let Some(node) = next {
            match Arc::try_unwrap(node) {
                Ok(mut inner) => next = inner.prev.take(),
                Err(_) => break,
            }
        }
    }
}

impl History {
    fn starting_at(board: Board, to_move: Side) -> History {
        History::default().push(board, to_move)
    }

    fn push(&self, board: Board, to_move: Side) -> History {
        History { head: Some(Arc::new(HistoryNode { board, to_move, prev: self.head.clone() })), len: self.len + 1 }
    }

    fn count(&self, board: &Board, to_move: Side) -> u32 {
        let mut n = 0;
        let mut cur = self.head.as_deref();
        while let Some(node) = cur {
            if node.to_move == to_move && node.board == *board {
                n += 1;
            }
            cur = node.prev.as_deref();
        }
        n
    }
}

impl fmt::Debug for History {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "History({} since last capture)", self.len)
    }
}

#[derive(Debug, Clone)]
pub struct GameState {
    position: Position,
    ply: u32,
    history: History,
}

#[derive(Debug, Clone)]
pub struct MoveOutcome {
    pub next: GameState,
    pub captured_now: u8,
    pub landing_pit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatusKind {
    Ongoing,
    WinSouth,
    WinNorth,
    Draw,
    /// Endless play (repetition or ply cap): each side takes its own row.
    SplitByRows,
    StalemateCancelled,
    StalemateMoverLoses {
        loser: Side,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Win(Side),
    Draw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameStatus {
    pub kind: StatusKind,
    /// Final (South, North) captures, present once the game is over.
    pub final_captures: Option<(u32, u32)>,
}

impl GameStatus {
    pub fn is_terminal(&self) -> bool {
        self.kind != StatusKind::Ongoing
    }

    pub fn outcome(&self) -> Option<Outcome> {
        let (s, n) = self.final_captures?;
        Some(match self.kind {
            StatusKind::Ongoing => return None,
            StatusKind::WinSouth => Outcome::Win(Side::South),
            StatusKind::WinNorth => Outcome::Win(Side::North),
            StatusKind::Draw | StatusKind::StalemateCancelled => Outcome::Draw,
            StatusKind::StalemateMoverLoses { loser } => Outcome::Win(loser.opponent()),
            StatusKind::SplitByRows => match s.cmp(&n) {
                std::cmp::Ordering::Greater => Outcome::Win(Side::South),
                std::cmp::Ordering::Less => Outcome::Win(Side::North),
                std::cmp::Ordering::Equal => Outcome::Draw,
            },
        })
    }

    pub fn winner(&self) -> Option<Side> {
        match self.outcome()? {
            Outcome::Win(side) => Some(side),
            Outcome::Draw => None,
        }
    }
}

pub fn new_game(config: &GameConfig) -> Result<GameState, RulesError> {
    config.validate()?;
    Ok(GameState::from_position(Position { board: config.starting_board(), captured: [0, 0], to_move: Side::South }))
}

impl GameState {
    /// A state with empty history at ply 0.
    pub fn from_position(position: Position) -> GameState {
        GameState { history: History::starting_at(position.board, position.to_move), position, ply: 0 }
    }

    pub fn position(&self) -> &Position {
        &self.position
    }

    pub fn board(&self) -> &Board {
        &self.position.board
    }

    pub fn to_move(&self) -> Side {
        self.position.to_move
    }

    pub fn captured(&self, side: Side) -> u32 {
        u32::from(self.position.captured[side.index()])
    }

    pub fn ply(&self) -> u32 {
        self.ply
    }

    pub fn total_seeds(&self) -> u32 {
        self.position.board.seeds() + self.captured(Side::South) + self.captured(Side::North)
    }

    /// How many times the current (board, mover) pair has occurred, this one included.
    pub fn occurrences(&self) -> u32 {
        self.history.count(&self.position.board, self.position.to_move)
    }

    pub fn legal_moves(&self) -> MoveList {
        self.position.board.legal_moves(self.position.to_move)
    }

    pub fn apply_move(&self, mv: Move, config: &GameConfig) -> Result<MoveOutcome, RulesError> {
        let mover = self.position.to_move;
        self.position
            .board
            .check_move(mover, mv)
            .map_err(|reason| RulesError::IllegalMove { pit: mv.index(), reason })?;
        let sown = self.position.board.sow(mv.index(), config.grand_slam_rule);
        let mut captured = self.position.captured;
        captured[mover.index()] += sown.captured;
        let to_move = mover.opponent();
        let history = if sown.captured > 0 {
            History::starting_at(sown.board, to_move)
        } else {
            self.history.push(sown.board, to_move)
        };
        Ok(MoveOutcome {
            next: GameState { position: Position { board: sown.board, captured, to_move }, ply: self.ply + 1, history },
            captured_now: sown.captured,
            landing_pit: sown.landing,
        })
    }

    pub fn status(&self, config: &GameConfig) -> GameStatus {
        let total = self.total_seeds();
        let south = self.captured(Side::South);
        let north = self.captured(Side::North);
        let stores = Some((south, north));
        let done = |kind| GameStatus { kind, final_captures: stores };

        if 2 * south > total {
            return done(StatusKind::WinSouth);
        }
        if 2 * north > total {
            return done(StatusKind::WinNorth);
        }
        if 2 * south == total && 2 * north == total {
            return done(StatusKind::Draw);
        }
        if self.occurrences() > config.repetition_limit || self.ply >= config.max_plies {
            let b = &self.position.board;
            return GameStatus {
                kind: StatusKind::SplitByRows,
                final_captures: Some((south + b.row_seeds(Side::South), north + b.row_seeds(Side::North))),
            };
        }
        if self.legal_moves().is_empty() {
            return done(match config.stalemate_rule {
                StalemateRule::Cancelled => StatusKind::StalemateCancelled,
                StalemateRule::MoverLoses => StatusKind::StalemateMoverLoses { loser: self.to_move() },
            });
        }
        GameStatus { kind: StatusKind::Ongoing, final_captures: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn south_to_move(south: [u8; 6], north: [u8; 6], caps: [u8; 2]) -> GameState {
        GameState::from_position(Position {
            board: Board::from_rows(south, north),
            captured: caps,
            to_move: Side::South,
        })
    }

    #[test]
    fn new_game_layout() {
        let s = new_game(&GameConfig::default()).unwrap();
        assert_eq!(s.board().pits, [4; 12]);
        assert_eq!((s.captured(Side::South), s.captured(Side::North)), (0, 0));
        assert_eq!(s.to_move(), Side::South);
        assert_eq!(s.ply(), 0);

        let one = GameConfig { seeds_per_pit: 1, ..GameConfig::default() };
        let s = new_game(&one).unwrap();
        assert_eq!(s.board().pits, [1; 12]);
        assert_eq!(s.total_seeds(), 12);

        let zero = GameConfig { seeds_per_pit: 0, ..GameConfig::default() };
        assert!(matches!(new_game(&zero), Err(RulesError::InvalidConfig(_))));
        let reps = GameConfig { repetition_limit: 0, ..GameConfig::default() };
        assert!(new_game(&reps).is_err());
        let plies = GameConfig { max_plies: 0, ..GameConfig::default() };
        assert!(new_game(&plies).is_err());
    }

    #[test]
    fn legal_moves_and_golden_rule() {
        let s = new_game(&GameConfig::default()).unwrap();
        let pits: Vec<usize> = s.legal_moves().iter().map(|m| m.index()).collect();
        assert_eq!(pits, vec![0, 1, 2, 3, 4, 5]);

        let s = south_to_move([0, 0, 0, 0, 0, 3], [0; 6], [0, 0]);
        assert_eq!(s.legal_moves().as_slice(), &[Move::new(5)]);

        let s = south_to_move([1, 0, 0, 0, 0, 0], [0; 6], [0, 0]);
        assert!(s.legal_moves().is_empty());
        let err = s.apply_move(Move::new(0), &GameConfig::default()).unwrap_err();
        assert_eq!(err, RulesError::IllegalMove { pit: 0, reason: IllegalReason::GoldenRule });
    }

    #[test]
    fn illegal_move_reasons() {
        let cfg = GameConfig::default();
        let s = south_to_move([0, 1, 0, 0, 0, 0], [1; 6], [0, 0]);
        let reason = |pit| match s.apply_move(Move::new(pit), &cfg) {
            Err(RulesError::IllegalMove { reason, .. }) => reason,
            other => panic!("expected illegal move, got {other:?}"),
        };
        assert_eq!(reason(0), IllegalReason::EmptyPit);
        assert_eq!(reason(7), IllegalReason::WrongRow);
        assert_eq!(reason(12), IllegalReason::OutOfRange);
    }

    #[test]
    fn plain_sow() {
        let cfg = GameConfig::default();
        let s = new_game(&cfg).unwrap();
        let out = s.apply_move(Move::new(2), &cfg).unwrap();
        assert_eq!(out.next.board().pits, [4, 4, 0, 5, 5, 5, 5, 4, 4, 4, 4, 4]);
        assert_eq!(out.captured_now, 0);
        assert_eq!(out.landing_pit, 6);
        assert_eq!(out.next.to_move(), Side::North);
        assert_eq!(out.next.ply(), 1);
    }

    #[test]
    fn two_three_capture_chain() {
        let cfg = GameConfig::default();
        let s = south_to_move([0, 0, 0, 0, 0, 2], [1, 2, 0, 0, 0, 1], [0, 0]);
        let out = s.apply_move(Move::new(5), &cfg).unwrap();
        assert_eq!(out.captured_now, 5);
        assert_eq!(out.landing_pit, 7);
        assert_eq!(out.next.board().pits, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(out.next.captured(Side::South), 5);
    }

    #[test]
    fn grand_slam_is_forfeited() {
        let cfg = GameConfig::default();
        let s = south_to_move([0, 0, 0, 0, 0, 2], [1, 2, 0, 0, 0, 0], [0, 0]);
        let out = s.apply_move(Move::new(5), &cfg).unwrap();
        assert_eq!(out.captured_now, 0);
        assert_eq!(out.next.board().pits, [0, 0, 0, 0, 0, 0, 2, 3, 0, 0, 0, 0]);
    }

    #[test]
    fn capture_stops_at_row_boundary_and_breaks() {
        let cfg = GameConfig::default();
        // lands on pit 8; pit 7 holds 1 after sowing and breaks the chain
        let s = south_to_move([0, 0, 0, 0, 0, 3], [4, 0, 1, 0, 0, 1], [0, 0]);
        let out = s.apply_move(Move::new(5), &cfg).unwrap();
        assert_eq!(out.landing_pit, 8);
        assert_eq!(out.captured_now, 2);
        assert_eq!(out.next.board().pits[6..], [5, 1, 0, 0, 0, 1]);
        // own row is never captured even when it holds 2 or 3
        let s = south_to_move([0, 0, 0, 0, 2, 13], [1; 6], [0, 0]);
        let out = s.apply_move(Move::new(5), &cfg).unwrap();
        assert!(out.next.board().pits[..6].iter().all(|&p| p <= 4));
    }

    #[test]
    fn fourteen_seed_sow_skips_origin() {
        let cfg = GameConfig::default();
        let s = south_to_move([0, 14, 0, 0, 0, 0], [1; 6], [0, 0]);
        let out = s.apply_move(Move::new(1), &cfg).unwrap();
        let b = out.next.board().pits;
        assert_eq!(b[1], 0);
        // 11 pits receive one seed each, then 3 more land after the skip
        assert_eq!(b, [1, 0, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2]);
        assert_eq!(out.landing_pit, 4);
    }

    #[test]
    fn status_thresholds() {
        let cfg = GameConfig::default();
        let s = south_to_move([4, 4, 0, 0, 0, 0], [5, 5, 5, 0, 0, 0], [25, 0]);
        // 25 + 23 on board = 48
        assert_eq!(s.status(&cfg).kind, StatusKind::WinSouth);
        let s = south_to_move([0; 6], [0; 6], [24, 24]);
        assert_eq!(s.status(&cfg).kind, StatusKind::Draw);
        assert_eq!(s.status(&cfg).outcome(), Some(Outcome::Draw));
        let s = south_to_move([1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1], [18, 18]);
        assert_eq!(s.status(&cfg).kind, StatusKind::Ongoing);
    }

    #[test]
    fn repetition_splits_by_rows() {
        let cfg = GameConfig::default();
        // South 3 on its row, North 1, stores 22/22
        let mut s = south_to_move([0, 0, 0, 0, 2, 1], [1, 0, 0, 0, 0, 0], [22, 22]);
        assert_eq!(s.status(&cfg).kind, StatusKind::Ongoing);
        s.history = s.history.push(s.position.board, s.position.to_move);
        let st = s.status(&cfg);
        assert_eq!(st.kind, StatusKind::SplitByRows);
        assert_eq!(st.final_captures, Some((25, 23)));
        assert_eq!(st.winner(), Some(Side::South));
    }

    #[test]
    fn ply_cap_splits() {
        let cfg = GameConfig { max_plies: 1, ..GameConfig::default() };
        let s = new_game(&cfg).unwrap();
        let next = s.apply_move(Move::new(0), &cfg).unwrap().next;
        assert_eq!(next.status(&cfg).kind, StatusKind::SplitByRows);
    }

    #[test]
    fn stalemate_rules() {
        let s = south_to_move([1, 0, 0, 0, 0, 0], [0; 6], [20, 27]);
        let cancelled = GameConfig { seeds_per_pit: 4, ..GameConfig::default() };
        // 1 + 47 is not 48 seeds but status only reads stores and board
        let st = s.status(&cancelled);
        assert_eq!(st.kind, StatusKind::WinNorth);

        let s = south_to_move([1, 0, 0, 0, 0, 0], [0; 6], [20, 19]);
        let st = s.status(&cancelled);
        assert_eq!(st.kind, StatusKind::StalemateCancelled);
        assert_eq!(st.outcome(), Some(Outcome::Draw));
        assert_eq!(st.final_captures, Some((20, 19)));

        let loses = GameConfig { stalemate_rule: StalemateRule::MoverLoses, ..GameConfig::default() };
        let st = s.status(&loses);
        assert_eq!(st.kind, StatusKind::StalemateMoverLoses { loser: Side::South });
        assert_eq!(st.winner(), Some(Side::North));
    }

    #[test]
    fn rotation_is_an_involution() {
        let b = Board::new([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        assert_eq!(b.rotated().pits, [7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6]);
        assert_eq!(b.rotated().rotated(), b);
        assert_eq!(b.relative_to(Side::South), b);
    }

    #[test]
    fn history_resets_on_capture() {
        let cfg = GameConfig::default();
        let s = south_to_move([0, 0, 0, 0, 0, 2], [1, 2, 0, 0, 0, 1], [0, 0]);
        let next = s.apply_move(Move::new(5), &cfg).unwrap().next;
        assert_eq!(next.history.len, 1);
        assert_eq!(next.occurrences(), 1);
    }
}
