//! Morse words: the bottom-to-top sequence of minima (`m`) and maxima (`M`)
//! of a knot in some Morse position.

mod cable;
mod enumerate;
mod width;
mod zhat;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::ParseError;

pub use enumerate::{enumerate_zhat, ZhatWords};
pub use width::{LevelProfile, ThickThinTuple};
pub use zhat::{BlockForm, Violation};

/// Longest word the text parser will expand. Caret exponents make it easy to
/// ask for more letters than fit in memory.
pub const MAX_WORD_LEN: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// A local minimum, written `m`.
    Min,
    /// A local maximum, written `M`.
    Max,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::Min => 'm',
            Letter::Max => 'M',
        }
    }

    /// Change in the number of strands crossing a level after passing this
    /// critical point.
    pub fn level_step(self) -> i64 {
        match self {
            Letter::Min => 2,
            Letter::Max => -2,
        }
    }
}

/// A word over `{m, M}`, ordered by increasing height.
///
/// Any letter sequence is representable. Membership in Ẑ is computed on
/// demand by [`MorseWord::validate_zhat`]; every width or cabling operation
/// refuses words that are not members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MorseWord {
    letters: Vec<Letter>,
}

impl MorseWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        MorseWord { letters }
    }

    /// `m^{α₁} M^{β₁} … m^{αₙ} M^{βₙ}` from its exponent lists. The result
    /// is not checked for Ẑ membership.
    pub fn from_blocks(alphas: &[usize], betas: &[usize]) -> Self {
        let mut letters = Vec::with_capacity(alphas.iter().sum::<usize>() + betas.iter().sum::<usize>());
        for (i, &a) in alphas.iter().enumerate() {
            letters.extend(std::iter::repeat(Letter::Min).take(a));
            if let Some(&b) = betas.get(i) {
                letters.extend(std::iter::repeat(Letter::Max).take(b));
            }
        }
        for &b in betas.iter().skip(alphas.len()) {
            letters.extend(std::iter::repeat(Letter::Max).take(b));
        }
        MorseWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Compact caret form: `mmmMmMMM` renders as `m^3MmM^3`.
    pub fn to_caret_string(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let letter = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&l| l == letter).count();
            out.push(letter.as_char());
            if run > 1 {
                out.push('^');
                out.push_str(&run.to_string());
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for MorseWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromIterator<Letter> for MorseWord {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        MorseWord { letters: iter.into_iter().collect() }
    }
}

impl FromStr for MorseWord {
    type Err = ParseError;

    /// Accepts the expanded form (`mmmMmMMM`) and caret sugar (`m^3MmM^3`,
    /// `m3M1m1M3`). Whitespace between tokens is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = s.char_indices().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (col, c) = chars[i];
            i += 1;
            let letter = match c {
                'm' => Letter::Min,
                'M' => Letter::Max,
                c if c.is_whitespace() => continue,
                other => {
                    return Err(ParseError::word(col + 1, format!("unexpected character {other:?}")))
                }
            };
            let caret = matches!(chars.get(i), Some((_, '^')));
            if caret {
                i += 1;
            }
            let braced = matches!(chars.get(i), Some((_, '{')));
            if braced {
                i += 1;
            }
            let digits_start = i;
            while matches!(chars.get(i), Some((_, d)) if d.is_ascii_digit()) {
                i += 1;
            }
            let count = if digits_start == i {
                if caret || braced {
                    return Err(ParseError::word(col + 1, "exponent marker without digits".to_string()));
                }
                1
            } else {
                let digits: String = chars[digits_start..i].iter().map(|&(_, d)| d).collect();
                digits
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n <= MAX_WORD_LEN)
                    .ok_or_else(|| ParseError::word(chars[digits_start].0 + 1, format!("exponent {digits} too large")))?
            };
            if braced {
                if !matches!(chars.get(i), Some((_, '}'))) {
                    return Err(ParseError::word(col + 1, "unclosed '{' in exponent".to_string()));
                }
                i += 1;
            }
            if letters.len() + count > MAX_WORD_LEN {
                return Err(ParseError::word(col + 1, format!("word longer than {MAX_WORD_LEN} letters")));
            }
            letters.extend(std::iter::repeat(letter).take(count));
        }
        Ok(MorseWord { letters })
    }
}
