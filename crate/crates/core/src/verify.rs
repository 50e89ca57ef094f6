//! Exhaustive replay of the width identities over enumerated Ẑ words:
//! agreement of the three width formulas, `w = 2b²` exactly for single
//! blocks, and `w ↦ q²w`, `b ↦ qb` under cabling.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{enumerate_zhat, BlockForm, MorseWord};

/// Block width formula under test. [`BlockForm::width`] in production;
/// tests substitute deliberately broken versions.
pub type BlockWidth = fn(&BlockForm) -> Result<u64>;

/// Word checked before the sweep, with its known width.
pub const ANCHOR_WORD: &str = "m^3MmM^3";
pub const ANCHOR_WIDTH: u64 = 28;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_bridge: usize,
    pub max_blocks: usize,
    pub qs: Vec<usize>,
    /// Upper bound on candidate words the sweep may examine.
    pub node_bound: usize,
}

impl VerifyConfig {
    pub fn new(max_bridge: usize, max_blocks: usize, qs: Vec<usize>) -> Self {
        VerifyConfig { max_bridge, max_blocks, qs, node_bound: crate::reduction::DEFAULT_NODE_BOUND }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub word: MorseWord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails for {}", self.check, self.word.to_caret_string())?;
        if let Some(q) = self.q {
            write!(f, " with q={q}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub words_checked: usize,
    pub pairs_checked: usize,
    pub single_block_words: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Number of alternating compositions `(α, β)` the enumeration inspects,
/// `Σ_b Σ_n C(b−1, n−1)²`, saturating.
pub fn candidate_count(max_bridge: usize, max_blocks: usize) -> u128 {
    let mut total: u128 = 0;
    for b in 1..=max_bridge {
        let mut binom: u128 = 1; // C(b-1, n-1) starting at n = 1
        for n in 1..=max_blocks.min(b) {
            if n > 1 {
                binom = binom.saturating_mul((b - n + 1) as u128) / (n - 1) as u128;
            }
            total = total.saturating_add(binom.saturating_mul(binom));
        }
    }
    total
}

pub fn verify(config: &VerifyConfig) -> Result<VerifySummary> {
    verify_with(config, BlockForm::width)
}

pub fn verify_with(config: &VerifyConfig, block_width: BlockWidth) -> Result<VerifySummary> {
    if config.qs.contains(&0) {
        return Err(Error::ZeroMultiplicity);
    }
    if candidate_count(config.max_bridge, config.max_blocks) > config.node_bound as u128 {
        return Err(Error::NodeBudget(config.node_bound));
    }
    let mut summary = VerifySummary { words_checked: 0, pairs_checked: 0, single_block_words: 0, counterexample: None };

    let anchor: MorseWord = ANCHOR_WORD.parse().expect("anchor word parses");
    if let Some(c) = check_word(&anchor, block_width)? {
        summary.counterexample = Some(c);
        return Ok(summary);
    }
    let anchor_width = block_width(&anchor.block_form()?)?;
    if anchor_width != ANCHOR_WIDTH {
        summary.counterexample = Some(Counterexample {
            word: anchor,
            q: None,
            check: "known width",
            detail: format!("expected {ANCHOR_WIDTH}, block formula gives {anchor_width}"),
        });
        return Ok(summary);
    }

    for word in enumerate_zhat(config.max_bridge, config.max_blocks) {
        summary.words_checked += 1;
        if word.is_bridge_word()? {
            summary.single_block_words += 1;
        }
        if let Some(c) = check_word(&word, block_width)? {
            summary.counterexample = Some(c);
            return Ok(summary);
        }
        for &q in &config.qs {
            summary.pairs_checked += 1;
            if let Some(c) = check_cable(&word, q, block_width)? {
                summary.counterexample = Some(c);
                return Ok(summary);
            }
        }
    }
    Ok(summary)
}

fn check_word(word: &MorseWord, block_width: BlockWidth) -> Result<Option<Counterexample>> {
    let fail = |check, detail| Some(Counterexample { word: word.clone(), q: None, check, detail });
    let blocks = word.block_form()?;
    let block = block_width(&blocks)?;
    let profile = word.level_profile()?;
    let levels = profile.width()?;
    let tuple = word.thick_thin()?;
    let thick_thin = tuple.width()?;
    if block != thick_thin || thick_thin != levels {
        return Ok(fail(
            "width agreement",
            format!("block formula {block}, thick/thin {thick_thin}, level sum {levels}"),
        ));
    }
    if profile.thick_thin() != tuple {
        return Ok(fail(
            "thick/thin extraction",
            format!("profile extrema {:?} vs block levels {:?}", profile.thick_thin().entries(), tuple.entries()),
        ));
    }
    let b = blocks.bridge_number() as u64;
    let thin = block == 2 * b * b;
    if thin != (blocks.len() == 1) {
        return Ok(fail("bridge-thin iff single block", format!("w={block}, 2b²={}, blocks={}", 2 * b * b, blocks.len())));
    }
    Ok(None)
}

fn check_cable(word: &MorseWord, q: usize, block_width: BlockWidth) -> Result<Option<Counterexample>> {
    let fail = |check, detail| Some(Counterexample { word: word.clone(), q: Some(q), check, detail });
    let blocks = word.block_form()?;
    let cabled = word.cable(q)?;
    let cabled_blocks = match cabled.validate_zhat() {
        Ok(b) => b,
        Err(v) => return Ok(fail("cable closure", v.to_string())),
    };
    if cabled_blocks.len() != blocks.len() {
        return Ok(fail("cable closure", format!("{} blocks became {}", blocks.len(), cabled_blocks.len())));
    }
    let (w, wc) = (block_width(&blocks)?, block_width(&cabled_blocks)?);
    let q2 = (q * q) as u64;
    if Some(wc) != w.checked_mul(q2) {
        return Ok(fail("width scaling", format!("w(cable)={wc}, q²·w={q2}·{w}")));
    }
    let (b, bc) = (blocks.bridge_number(), cabled_blocks.bridge_number());
    if bc != q * b {
        return Ok(fail("bridge scaling", format!("b(cable)={bc}, q·b={q}·{b}")));
    }
    Ok(None)
}
