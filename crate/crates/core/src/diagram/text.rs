//! Line-oriented text format: one event per line, `#` starts a comment,
//! keywords are case-insensitive.
//!
//! ```text
//! # trefoil, 4-plat
//! cup 0
//! cup 2
//! cross 1 +
//! cap 0
//! ```

use std::fmt;
use std::str::FromStr;

use super::{Event, MorseDiagram};
use crate::error::ParseError;

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Cup(i) => write!(f, "cup {i}"),
            Event::Cap(i) => write!(f, "cap {i}"),
            Event::Cross(i, s) => write!(f, "cross {i} {}", s.as_char()),
        }
    }
}

impl fmt::Display for MorseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.events() {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

impl MorseDiagram {
    /// Canonical text: one lowercase event per line, no comments.
    pub fn emit(&self) -> String {
        self.to_string()
    }

    /// Parses the text format. Only syntax is checked here; use
    /// [`MorseDiagram::validate`] for strand bookkeeping.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        text.parse()
    }
}

fn parse_line(line: usize, content: &str) -> Result<Event, ParseError> {
    let err = |msg: String| ParseError::line(line, msg);
    let tokens: Vec<String> = content.split_whitespace().map(str::to_ascii_lowercase).collect();
    let index = |tok: Option<&String>| -> Result<usize, ParseError> {
        let tok = tok.ok_or_else(|| err("missing strand position".to_string()))?;
        tok.parse().map_err(|_| err(format!("bad strand position {tok:?}")))
    };
    let event = match tokens[0].as_str() {
        "cup" => Event::Cup(index(tokens.get(1))?),
        "cap" => Event::Cap(index(tokens.get(1))?),
        "cross" => {
            let i = index(tokens.get(1))?;
            let sign = tokens.get(2).ok_or_else(|| err("missing crossing sign".to_string()))?;
            Event::Cross(i, sign.parse().map_err(err)?)
        }
        other => return Err(err(format!("unknown event {other:?}"))),
    };
    let arity = if matches!(event, Event::Cross(..)) { 3 } else { 2 };
    if tokens.len() > arity {
        return Err(err(format!("unexpected trailing token {:?}", tokens[arity])));
    }
    Ok(event)
}

impl FromStr for MorseDiagram {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut events = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            events.push(parse_line(n + 1, content)?);
        }
        Ok(MorseDiagram::new(events))
    }
}
