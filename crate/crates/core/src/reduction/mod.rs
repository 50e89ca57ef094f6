//! Type I and type II moves as rewrites of Morse words.
//!
//! A type I move cancels the highest minimum of a block against the lowest
//! maximum of the same block; a type II move slides a minimum past an
//! adjacent maximum. Stabilization is the inverse of type I. Block indices
//! are 1-based, letter positions 0-based.

mod explore;
mod reduce;
mod trace;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{BlockForm, Letter, MorseWord};

pub use explore::{explore, node_bound_from_env, ExploreOptions, ExploreOutcome, DEFAULT_NODE_BOUND, NODE_BUDGET_ENV};
pub use reduce::reduce;
pub use trace::{ReductionTrace, TraceStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `mM → Mm`: the minimum moves above the maximum, width drops by 4.
    Up,
    /// `Mm → mM`, width grows by 4.
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    TypeI { block: usize },
    TypeII { position: usize, direction: Direction },
    Stabilize { block: usize },
}

impl Move {
    pub fn apply(&self, word: &MorseWord) -> Result<MorseWord> {
        match *self {
            Move::TypeI { block } => apply_type_i(word, block),
            Move::TypeII { position, direction } => apply_type_ii(word, position, direction),
            Move::Stabilize { block } => stabilize(word, block),
        }
    }

    /// Width change predicted from the levels of `word` alone:
    /// `−(2a_i − 2)` for type I at a block with thick level `a_i`, `∓4` for
    /// type II, and `2(a_i + 2) − 2` for stabilization.
    pub fn predicted_delta(&self, word: &MorseWord) -> Result<i64> {
        let blocks = word.block_form()?;
        match *self {
            Move::TypeI { block } => Ok(-(2 * thick_level(&blocks, block)? - 2)),
            Move::TypeII { direction: Direction::Up, .. } => Ok(-4),
            Move::TypeII { direction: Direction::Down, .. } => Ok(4),
            Move::Stabilize { block } => Ok(2 * (thick_level(&blocks, block)? + 2) - 2),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::TypeI { block } => write!(f, "I({block})"),
            Move::TypeII { position, direction: Direction::Up } => write!(f, "II({position},up)"),
            Move::TypeII { position, direction: Direction::Down } => write!(f, "II({position},down)"),
            Move::Stabilize { block } => write!(f, "S({block})"),
        }
    }
}

impl FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("unrecognised move {s:?}");
        let (kind, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match kind {
            "I" => Ok(Move::TypeI { block: num(args)? }),
            "S" => Ok(Move::Stabilize { block: num(args)? }),
            "II" => {
                let (pos, dir) = args.split_once(',').ok_or_else(bad)?;
                let direction = match dir.trim() {
                    "up" => Direction::Up,
                    "down" => Direction::Down,
                    _ => return Err(bad()),
                };
                Ok(Move::TypeII { position: num(pos)?, direction })
            }
            _ => Err(bad()),
        }
    }
}

fn check_block(blocks: &BlockForm, block: usize) -> Result<()> {
    if block == 0 || block > blocks.len() {
        return Err(Error::BlockOutOfRange { block, blocks: blocks.len() });
    }
    Ok(())
}

fn thick_level(blocks: &BlockForm, block: usize) -> Result<i64> {
    check_block(blocks, block)?;
    Ok(blocks.thick_levels()[block - 1] as i64)
}

/// Index of the last `m` of block `block`.
fn peak_index(blocks: &BlockForm, block: usize) -> usize {
    let below: usize = blocks.alphas()[..block - 1].iter().chain(&blocks.betas()[..block - 1]).sum();
    below + blocks.alphas()[block - 1] - 1
}

/// Cancels the top minimum of block `block` with the bottom maximum of the
/// same block. Emptied runs merge with their neighbours.
pub fn apply_type_i(word: &MorseWord, block: usize) -> Result<MorseWord> {
    let blocks = word.block_form()?;
    check_block(&blocks, block)?;
    if word.len() <= 2 {
        return Err(Error::WouldVanish);
    }
    let peak = peak_index(&blocks, block);
    let mut letters = word.letters().to_vec();
    letters.drain(peak..peak + 2);
    Ok(MorseWord::new(letters))
}

/// Swaps the letters at `position` and `position + 1`.
pub fn apply_type_ii(word: &MorseWord, position: usize, direction: Direction) -> Result<MorseWord> {
    word.block_form()?;
    if position + 1 >= word.len() {
        return Err(Error::PositionOutOfRange { position, len: word.len() });
    }
    let (expected, want) = match direction {
        Direction::Up => ("m,M", (Letter::Min, Letter::Max)),
        Direction::Down => ("M,m", (Letter::Max, Letter::Min)),
    };
    let letters = word.letters();
    if (letters[position], letters[position + 1]) != want {
        return Err(Error::LetterMismatch { position, expected });
    }
    let mut swapped = letters.to_vec();
    swapped.swap(position, position + 1);
    let swapped = MorseWord::new(swapped);
    swapped.validate_zhat().map_err(Error::LeavesZhat)?;
    Ok(swapped)
}

/// Inserts a new `mM` pair at the peak of block `block`.
pub fn stabilize(word: &MorseWord, block: usize) -> Result<MorseWord> {
    let blocks = word.block_form()?;
    check_block(&blocks, block)?;
    let peak = peak_index(&blocks, block);
    let mut letters = word.letters().to_vec();
    letters.splice(peak + 1..peak + 1, [Letter::Min, Letter::Max]);
    Ok(MorseWord::new(letters))
}
