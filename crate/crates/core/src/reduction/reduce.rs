use super::{apply_type_ii, Direction, Move, ReductionTrace};
use crate::error::Result;
use crate::word::MorseWord;

/// Greedy width reduction.
///
/// Applies a type I move at the highest thick level (leftmost on ties)
/// while one exists, otherwise the leftmost type II up-move, and stops when
/// neither applies. Every step strictly lowers the width, so this
/// terminates. Word moves ignore realizability, so every word ends at `mM`.
pub fn reduce(word: &MorseWord) -> Result<(MorseWord, ReductionTrace)> {
    word.block_form()?;
    let mut trace = ReductionTrace::new(word.clone());
    while let Some(mv) = next_move(trace.end())? {
        trace.push(mv)?;
    }
    Ok((trace.end().clone(), trace))
}

fn next_move(word: &MorseWord) -> Result<Option<Move>> {
    let blocks = word.block_form()?;
    if word.len() > 2 {
        let levels = blocks.thick_levels();
        let top = levels.iter().copied().max().expect("member words have a block");
        let block = levels.iter().position(|&a| a == top).expect("max is present") + 1;
        return Ok(Some(Move::TypeI { block }));
    }
    Ok((0..word.len().saturating_sub(1))
        .find(|&j| apply_type_ii(word, j, Direction::Up).is_ok())
        .map(|position| Move::TypeII { position, direction: Direction::Up }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> MorseWord {
        s.parse().unwrap()
    }

    #[test]
    fn figure_five_word_reduces_to_unknot() {
        let (end, trace) = reduce(&w("m^3MmM^3")).unwrap();
        assert_eq!(end, w("mM"));
        assert_eq!(trace.widths().unwrap(), vec![28, 18, 8, 2]);
        assert!(trace.steps.iter().all(|s| s.mv == Move::TypeI { block: 1 }));
        assert_eq!(trace.verify(), Ok(()));
    }

    #[test]
    fn fixed_point() {
        let (end, trace) = reduce(&w("mM")).unwrap();
        assert_eq!(end, w("mM"));
        assert!(trace.is_empty());
    }

    #[test]
    fn single_block_ten() {
        let (end, trace) = reduce(&w("m^10M^10")).unwrap();
        assert_eq!(end, w("mM"));
        assert_eq!(trace.len(), 9);
        let drops: Vec<i64> = trace.steps.iter().map(|s| -s.delta).collect();
        let expected: Vec<i64> = (2..=10).rev().map(|b| 2 * (2 * b) - 2).collect();
        assert_eq!(drops, expected);
    }

    #[test]
    fn highest_thick_level_goes_first() {
        // thick levels (4, 6): block 2 is higher
        let (_, trace) = reduce(&w("mmMmmMMM")).unwrap();
        assert_eq!(trace.steps[0].mv, Move::TypeI { block: 2 });
    }

    #[test]
    fn refuses_non_members() {
        assert!(reduce(&w("mMmM")).is_err());
    }
}
