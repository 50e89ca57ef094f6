use petgraph::unionfind::UnionFind;

use super::{Event, MorseDiagram};
use crate::error::{Error, Result};
use crate::word::{Letter, MorseWord};

impl MorseDiagram {
    /// Number of closed curves in the diagram.
    ///
    /// Each cup starts a new arc occupying two positions. Crossings permute
    /// positions and a cap merges the arcs at its two positions.
    pub fn component_count(&self) -> Result<usize> {
        self.check()?;
        let arcs = self.events().iter().filter(|e| matches!(e, Event::Cup(_))).count();
        let mut merged = UnionFind::<usize>::new(arcs);
        let mut positions: Vec<usize> = Vec::new();
        let mut next_arc = 0;
        let mut components = arcs;
        for &event in self.events() {
            match event {
                Event::Cup(i) => {
                    positions.splice(i..i, [next_arc, next_arc]);
                    next_arc += 1;
                }
                Event::Cap(i) => {
                    let (a, b) = (positions[i], positions[i + 1]);
                    if merged.union(a, b) {
                        components -= 1;
                    }
                    positions.drain(i..i + 2);
                }
                Event::Cross(i, _) => positions.swap(i, i + 1),
            }
        }
        Ok(components)
    }

    /// Fails unless the diagram is valid and has one component.
    pub fn check_knot(&self) -> Result<()> {
        match self.component_count()? {
            1 => Ok(()),
            n => Err(Error::NotAKnot(n)),
        }
    }

    /// `m` for every cup and `M` for every cap, in order.
    pub fn critical_word(&self) -> Result<MorseWord> {
        self.check_knot()?;
        Ok(self.event_word())
    }

    /// The cup/cap letter sequence without any validity or component
    /// checks. Links get a word too, though it need not be in Ẑ.
    pub fn event_word(&self) -> MorseWord {
        self
            .events()
            .iter()
            .filter_map(|e| match e {
                Event::Cup(_) => Some(Letter::Min),
                Event::Cap(_) => Some(Letter::Max),
                Event::Cross(..) => None,
            })
            .collect()
    }

    /// Width of this Morse position, from its critical word.
    pub fn width(&self) -> Result<u64> {
        self.critical_word()?.width()
    }

    /// Number of cups (equivalently caps).
    pub fn bridge(&self) -> Result<usize> {
        self.check_knot()?;
        Ok(self.events().iter().filter(|e| matches!(e, Event::Cup(_))).count())
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> Result<i64> {
        self.check_knot()?;
        Ok(self.signed_crossing_sum())
    }

    pub(crate) fn signed_crossing_sum(&self) -> i64 {
        self.events()
            .iter()
            .filter_map(|e| match e {
                Event::Cross(_, s) => Some(s.value()),
                _ => None,
            })
            .sum()
    }
}
