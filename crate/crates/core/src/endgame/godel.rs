//! Ranking of 12-pit boards with a fixed seed count.
//!
//! Boards holding `n` seeds are ordered lexicographically by pit tuple
//! `(p0, .., p11)` and numbered densely from 0. The rank is computed with the
//! combinatorial number system: the boards whose first differing pit is
//! smaller are counted in closed form with binomial coefficients.

use super::DbError;
use crate::rules::{Board, PITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GodelIndex {
    pub n_seeds: u32,
    pub rank: u64,
}

/// C(n, k), or `None` when it does not fit in a `u64`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of 12-pit boards holding exactly `n_seeds` seeds: C(n + 11, 11).
pub fn count_positions(n_seeds: u32) -> Result<u64, DbError> {
    binomial(u64::from(n_seeds) + (PITS as u64 - 1), PITS as u64 - 1).ok_or(DbError::CountOverflow { n_seeds })
}

const TABLE_N: usize = 72;

/// Pascal's triangle up to C(71, 11).
const BINOM: [[u64; PITS]; TABLE_N] = {
    let mut t = [[0u64; PITS]; TABLE_N];
    let mut n = 0;
    while n < TABLE_N {
        t[n][0] = 1;
        let mut k = 1;
        while k < PITS && k <= n {
            t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
            k += 1;
        }
        n += 1;
    }
    t
};

/// Boards of `seeds` seeds spread over `pits` pits.
fn spreads(seeds: u64, pits: u64) -> u64 {
    if pits == 0 {
        return u64::from(seeds == 0);
    }
    let n = seeds + pits - 1;
    if (n as usize) < TABLE_N {
        return BINOM[n as usize][pits as usize - 1];
    }
    binomial(n, pits - 1).expect("position count fits 64 bits")
}

pub fn godel_rank(board: &Board) -> Result<GodelIndex, DbError> {
    let n_seeds = board.seeds();
    count_positions(n_seeds)?;
    Ok(GodelIndex { n_seeds, rank: rank_of(&board.pits) })
}

/// Rank of a board whose level count is known to fit 64 bits.
pub(crate) fn rank_of(pits: &[u8; PITS]) -> u64 {
    let mut rem: u64 = pits.iter().map(|&p| u64::from(p)).sum();
    let mut rank = 0u64;
    for (i, &p) in pits[..PITS - 1].iter().enumerate() {
        let after = (PITS - 1 - i) as u64;
        let p = u64::from(p);
        // boards with a smaller value here: sum over v < p of spreads(rem - v, after)
        rank += spreads(rem, after + 1) - spreads(rem - p, after + 1);
        rem -= p;
    }
    rank
}

pub fn godel_unrank(index: GodelIndex) -> Result<Board, DbError> {
    let count = count_positions(index.n_seeds)?;
    if index.rank >= count {
        return Err(DbError::RankOutOfRange { n_seeds: index.n_seeds, rank: index.rank, count });
    }
    Ok(Board::new(unrank_of(index.n_seeds, index.rank)))
}

/// Inverse of [`rank_of`] for an in-range rank.
pub(crate) fn unrank_of(n_seeds: u32, rank: u64) -> [u8; PITS] {
    let mut pits = [0u8; PITS];
    let mut rem = u64::from(n_seeds);
    let mut r = rank;
    for (i, pit) in pits[..PITS - 1].iter_mut().enumerate() {
        let after = (PITS - 1 - i) as u64;
        let mut v = 0u64;
        loop {
            let block = spreads(rem - v, after);
            if r < block {
                break;
            }
            r -= block;
            v += 1;
        }
        *pit = v as u8;
        rem -= v;
    }
    pits[PITS - 1] = rem as u8;
    pits
}
