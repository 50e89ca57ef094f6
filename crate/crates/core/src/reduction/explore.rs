use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{Direction, Move, ReductionTrace};
use crate::error::{Error, Result};
use crate::word::MorseWord;

pub const DEFAULT_NODE_BOUND: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_NODE_BOUND`].
pub const NODE_BUDGET_ENV: &str = "MORSEWIDTH_NODE_BUDGET";

/// Node bound from [`NODE_BUDGET_ENV`], falling back to the default when the
/// variable is unset or unparseable.
pub fn node_bound_from_env() -> usize {
    std::env::var(NODE_BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_NODE_BOUND)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExploreOptions {
    /// Stabilizations allowed along any path.
    pub stabilization_budget: usize,
    /// Words wider than this are never entered.
    pub width_cap: u64,
    /// Maximum number of distinct search states.
    pub node_bound: usize,
}

impl ExploreOptions {
    pub fn new(stabilization_budget: usize, width_cap: u64) -> Self {
        ExploreOptions { stabilization_budget, width_cap, node_bound: DEFAULT_NODE_BOUND }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExploreOutcome {
    pub min_width: u64,
    /// A shortest move sequence from the start word to a word of minimum
    /// width.
    pub witness: ReductionTrace,
    pub states_visited: usize,
}

struct State {
    word: MorseWord,
    width: u64,
    parent: Option<(usize, Move)>,
}

fn moves_from(word: &MorseWord, blocks: usize, stabilize: bool) -> impl Iterator<Item = Move> + '_ {
    let positions = word.len().saturating_sub(1);
    let type_i = (1..=blocks).map(|block| Move::TypeI { block });
    let up = (0..positions).map(|position| Move::TypeII { position, direction: Direction::Up });
    let down = (0..positions).map(|position| Move::TypeII { position, direction: Direction::Down });
    let stab = (1..=blocks).filter(move |_| stabilize).map(|block| Move::Stabilize { block });
    type_i.chain(up).chain(down).chain(stab)
}

/// Breadth-first search of the move graph from `start`.
///
/// A state is a word together with the number of stabilizations spent to
/// reach it. Neighbours are visited in a fixed order (type I by block,
/// type II up then down by position, stabilization by block) so the result
/// and witness are deterministic. The witness ends at the first state of
/// minimum width in breadth-first order, hence uses as few moves as
/// possible.
pub fn explore(start: &MorseWord, options: ExploreOptions) -> Result<ExploreOutcome> {
    let start_width = start.width()?;
    let mut states = vec![State { word: start.clone(), width: start_width, parent: None }];
    let mut seen: HashMap<(MorseWord, usize), usize> = HashMap::from([((start.clone(), 0), 0)]);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    let mut best = 0usize;

    while let Some((index, spent)) = queue.pop_front() {
        let word = states[index].word.clone();
        let blocks = word.block_form()?.len();
        let can_stabilize = spent < options.stabilization_budget;
        for mv in moves_from(&word, blocks, can_stabilize) {
            let Ok(next) = mv.apply(&word) else { continue };
            let width = next.width()?;
            if width > options.width_cap {
                continue;
            }
            let spent_next = spent + usize::from(matches!(mv, Move::Stabilize { .. }));
            let key = (next, spent_next);
            if seen.contains_key(&key) {
                continue;
            }
            if states.len() >= options.node_bound {
                return Err(Error::NodeBudget(options.node_bound));
            }
            let id = states.len();
            states.push(State { word: key.0.clone(), width, parent: Some((index, mv)) });
            seen.insert(key, id);
            if width < states[best].width {
                best = id;
            }
            queue.push_back((id, spent_next));
        }
    }

    let mut path = Vec::new();
    let mut cursor = best;
    while let Some((parent, mv)) = states[cursor].parent {
        path.push(mv);
        cursor = parent;
    }
    let mut witness = ReductionTrace::new(start.clone());
    for mv in path.into_iter().rev() {
        witness.push(mv)?;
    }
    Ok(ExploreOutcome { min_width: states[best].width, witness, states_visited: states.len() })
}
