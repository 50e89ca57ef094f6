use std::fmt;

use serde::Serialize;

use super::Move;
use crate::error::{Error, ParseError, Result};
use crate::word::MorseWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    #[serde(rename = "move")]
    pub mv: Move,
    pub word: MorseWord,
    /// Width after minus width before.
    pub delta: i64,
}

/// A start word and the moves applied to it, in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub start: MorseWord,
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn new(start: MorseWord) -> Self {
        ReductionTrace { start, steps: Vec::new() }
    }

    pub fn end(&self) -> &MorseWord {
        self.steps.last().map_or(&self.start, |s| &s.word)
    }

    /// Applies `mv` to the current end word and records the measured delta.
    pub fn push(&mut self, mv: Move) -> Result<&TraceStep> {
        let before = self.end();
        let word = mv.apply(before)?;
        let delta = word.width()? as i64 - before.width()? as i64;
        self.steps.push(TraceStep { mv, word, delta });
        Ok(self.steps.last().expect("just pushed"))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Widths along the trace, starting with the start word.
    pub fn widths(&self) -> Result<Vec<u64>> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.word)).map(MorseWord::width).collect()
    }

    /// Replays every step, checking the resulting word, that the recorded
    /// delta equals the width difference, and that it matches the delta
    /// predicted from the levels of the word before the move.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let mut current = self.start.clone();
        for (k, step) in self.steps.iter().enumerate() {
            let fail = |msg: String| format!("step {}: {msg}", k + 1);
            let next = step.mv.apply(&current).map_err(|e| fail(e.to_string()))?;
            if next != step.word {
                return Err(fail(format!("{} gives {next}, trace says {}", step.mv, step.word)));
            }
            let measured = width(&next).map_err(fail)? - width(&current).map_err(fail)?;
            let predicted = step.mv.predicted_delta(&current).map_err(|e| fail(e.to_string()))?;
            if measured != step.delta || predicted != step.delta {
                return Err(fail(format!("delta {} recorded, {measured} measured, {predicted} predicted", step.delta)));
            }
            current = next;
        }
        Ok(())
    }

    /// `<move> <resulting word> <delta>` records, one per line, after a
    /// `# start` comment naming the start word.
    pub fn to_records(&self) -> String {
        self.to_string()
    }

    pub fn parse_records(text: &str) -> Result<Self> {
        let mut start = None;
        let mut steps = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let err = |msg: String| Error::Parse(ParseError::line(line, msg));
            let raw = raw.trim();
            if let Some(comment) = raw.strip_prefix('#') {
                let mut tokens = comment.split_whitespace();
                if tokens.next() == Some("start") {
                    let word = tokens.next().ok_or_else(|| err("start comment without word".into()))?;
                    start = Some(word.parse::<MorseWord>().map_err(|e| err(e.to_string()))?);
                }
                continue;
            }
            if raw.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            let [mv, word, delta] = tokens[..] else {
                return Err(err(format!("expected 3 fields, found {}", tokens.len())));
            };
            steps.push(TraceStep {
                mv: mv.parse().map_err(err)?,
                word: word.parse().map_err(|e: ParseError| err(e.to_string()))?,
                delta: delta.parse().map_err(|_| err(format!("bad delta {delta:?}")))?,
            });
        }
        let start = start.ok_or_else(|| Error::Parse(ParseError::line(1, "missing '# start <word>' line".into())))?;
        Ok(ReductionTrace { start, steps })
    }
}

fn width(word: &MorseWord) -> std::result::Result<i64, String> {
    word.width().map(|w| w as i64).map_err(|e| e.to_string())
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# start {}", self.start)?;
        for step in &self.steps {
            writeln!(f, "{} {} {:+}", step.mv, step.word, step.delta)?;
        }
        Ok(())
    }
}
