//! Width calculus for knots in Morse position.
//!
//! A knot position is summarised by its [`MorseWord`], the bottom-to-top
//! sequence of minima and maxima. The [`word`] module computes widths three
//! ways (level sums, thick/thin levels, block formula), bridge numbers and
//! the word of the obvious `q`-cabling. [`diagram`] grounds words in planar
//! Morse presentations and cables those, [`reduction`] implements the
//! type I and type II moves, and [`verify`] replays the scaling identities
//! over exhaustive enumerations.

pub mod corpus;
pub mod diagram;
pub mod error;
pub mod reduction;
pub mod report;
pub mod verify;
pub mod word;

pub use diagram::{CableParams, DiagramViolation, Event, MorseDiagram, Sign};
pub use error::{Error, ParseError, Result};
pub use word::{enumerate_zhat, BlockForm, LevelProfile, Letter, MorseWord, ThickThinTuple, Violation};
