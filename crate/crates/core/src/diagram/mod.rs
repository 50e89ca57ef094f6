//! Morse link presentations: a link drawn in the plane as a bottom-to-top
//! sequence of cups (minima), caps (maxima) and crossings between adjacent
//! strands.

mod cable;
mod components;
mod text;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use cable::CableParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" => Ok(Sign::Positive),
            "-" => Ok(Sign::Negative),
            other => Err(format!("expected '+' or '-', found {other:?}")),
        }
    }
}

/// One event of a Morse presentation. Positions are zero-based and counted
/// from the left among the strands present just below the event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "at", rename_all = "snake_case")]
pub enum Event {
    /// A minimum creating two new strands at positions `i` and `i + 1`.
    Cup(usize),
    /// A maximum joining the strands at positions `i` and `i + 1`.
    Cap(usize),
    /// The strands at `i` and `i + 1` swap places.
    Cross(usize, Sign),
}

impl Event {
    pub fn position(self) -> usize {
        match self {
            Event::Cup(i) | Event::Cap(i) | Event::Cross(i, _) => i,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiagramViolation {
    /// The diagram has no cup, so it presents nothing.
    NoCup,
    /// A cap needs two strands but fewer are present.
    StrandUnderflow { event: usize, strands: usize },
    /// The event's position does not fit the strands present.
    IndexOutOfRange { event: usize, index: usize, strands: usize },
    /// Strands are still open after the last event.
    OpenStrands { strands: usize },
}

impl DiagramViolation {
    /// Index of the offending event, when there is one.
    pub fn event(&self) -> Option<usize> {
        match *self {
            DiagramViolation::StrandUnderflow { event, .. } | DiagramViolation::IndexOutOfRange { event, .. } => Some(event),
            DiagramViolation::NoCup | DiagramViolation::OpenStrands { .. } => None,
        }
    }
}

impl fmt::Display for DiagramViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramViolation::NoCup => write!(f, "diagram has no cup"),
            DiagramViolation::StrandUnderflow { event, strands } => {
                write!(f, "event {event}: cap with only {strands} strands, count would go negative")
            }
            DiagramViolation::IndexOutOfRange { event, index, strands } => {
                write!(f, "event {event}: position {index} out of range with {strands} strands")
            }
            DiagramViolation::OpenStrands { strands } => write!(f, "{strands} strands left open at the top"),
        }
    }
}

/// A sequence of events read bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct MorseDiagram {
    events: Vec<Event>,
}

impl MorseDiagram {
    pub fn new(events: Vec<Event>) -> Self {
        MorseDiagram { events }
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Checks that every event fits the strands present and the strand
    /// count returns to zero. Reports the first problem found.
    pub fn validate(&self) -> std::result::Result<(), DiagramViolation> {
        let mut strands = 0usize;
        for (k, &event) in self.events.iter().enumerate() {
            match event {
                Event::Cup(i) => {
                    if i > strands {
                        return Err(DiagramViolation::IndexOutOfRange { event: k, index: i, strands });
                    }
                    strands += 2;
                }
                Event::Cap(i) => {
                    if strands < 2 {
                        return Err(DiagramViolation::StrandUnderflow { event: k, strands });
                    }
                    if i + 2 > strands {
                        return Err(DiagramViolation::IndexOutOfRange { event: k, index: i, strands });
                    }
                    strands -= 2;
                }
                Event::Cross(i, _) => {
                    if i + 2 > strands {
                        return Err(DiagramViolation::IndexOutOfRange { event: k, index: i, strands });
                    }
                }
            }
        }
        if strands != 0 {
            return Err(DiagramViolation::OpenStrands { strands });
        }
        if !self.events.iter().any(|e| matches!(e, Event::Cup(_))) {
            return Err(DiagramViolation::NoCup);
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn check(&self) -> Result<()> {
        self.validate().map_err(Error::InvalidDiagram)
    }

    /// Strand count just above each event.
    pub fn strand_counts(&self) -> Vec<usize> {
        let mut strands = 0usize;
        self.events
            .iter()
            .map(|e| {
                match e {
                    Event::Cup(_) => strands += 2,
                    Event::Cap(_) => strands = strands.saturating_sub(2),
                    Event::Cross(..) => {}
                }
                strands
            })
            .collect()
    }

    pub fn max_strands(&self) -> usize {
        self.strand_counts().into_iter().max().unwrap_or(0)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Cross(..))).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Event::*;
    use Sign::Positive as P;

    #[test]
    fn round_unknot_is_valid() {
        assert_eq!(MorseDiagram::new(vec![Cup(0), Cap(0)]).validate(), Ok(()));
    }

    #[test]
    fn twisted_plat_is_valid() {
        let d = MorseDiagram::new(vec![Cup(0), Cup(2), Cross(1, P), Cross(1, P), Cross(1, P), Cap(1), Cap(0)]);
        assert_eq!(d.validate(), Ok(()));
        assert_eq!(d.strand_counts(), vec![2, 4, 4, 4, 4, 2, 0]);
        assert_eq!(d.max_strands(), 4);
    }

    #[test]
    fn lone_cap_underflows() {
        let v = MorseDiagram::new(vec![Cap(0)]).validate().unwrap_err();
        assert_eq!(v, DiagramViolation::StrandUnderflow { event: 0, strands: 0 });
        assert_eq!(v.event(), Some(0));
    }

    #[test]
    fn other_violations() {
        assert_eq!(MorseDiagram::new(vec![]).validate(), Err(DiagramViolation::NoCup));
        assert_eq!(
            MorseDiagram::new(vec![Cross(0, P)]).validate(),
            Err(DiagramViolation::IndexOutOfRange { event: 0, index: 0, strands: 0 })
        );
        assert_eq!(
            MorseDiagram::new(vec![Cup(1)]).validate(),
            Err(DiagramViolation::IndexOutOfRange { event: 0, index: 1, strands: 0 })
        );
        assert_eq!(
            MorseDiagram::new(vec![Cup(0), Cup(0), Cap(3)]).validate(),
            Err(DiagramViolation::IndexOutOfRange { event: 2, index: 3, strands: 4 })
        );
        assert_eq!(MorseDiagram::new(vec![Cup(0)]).validate(), Err(DiagramViolation::OpenStrands { strands: 2 }));
    }
}
