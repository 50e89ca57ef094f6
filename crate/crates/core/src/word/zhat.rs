use std::fmt;

use serde::Serialize;

use super::{Letter, MorseWord};
use crate::error::{Error, Result};

/// The first Ẑ condition a word fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The empty word has no blocks at all.
    Empty,
    /// Condition 1: some exponent in `m^{α₁}M^{β₁}…m^{αₙ}M^{βₙ}` is zero,
    /// i.e. the word starts with `M` or ends with `m`.
    ZeroExponent { block: usize, letter: char },
    /// Condition 2: `Σ_{i≤j} α_i > Σ_{i≤j} β_i` fails at block `j < n`.
    PrefixBalance { block: usize, minima: usize, maxima: usize },
    /// Condition 3: the word has unequal numbers of minima and maxima.
    Unbalanced { minima: usize, maxima: usize },
}

impl Violation {
    /// Index (1, 2 or 3) of the violated Ẑ condition.
    pub fn condition(&self) -> u8 {
        match self {
            Violation::Empty | Violation::ZeroExponent { .. } => 1,
            Violation::PrefixBalance { .. } => 2,
            Violation::Unbalanced { .. } => 3,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "condition 1 violated: empty word"),
            Violation::ZeroExponent { block, letter } => {
                let name = if *letter == 'm' { "alpha" } else { "beta" };
                write!(f, "condition 1 violated: {name}_{block} = 0")
            }
            Violation::PrefixBalance { block, minima, maxima } => write!(
                f,
                "condition 2 violated at j={block}: {minima} minima vs {maxima} maxima below the end of block {block}"
            ),
            Violation::Unbalanced { minima, maxima } => {
                write!(f, "condition 3 violated: {minima} minima vs {maxima} maxima")
            }
        }
    }
}

/// Exponent lists `(α₁..αₙ, β₁..βₙ)` of a Ẑ word. Always derived from a
/// [`MorseWord`]; the letter sequence is the source of truth.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BlockForm {
    alphas: Vec<usize>,
    betas: Vec<usize>,
}

impl BlockForm {
    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    pub fn betas(&self) -> &[usize] {
        &self.betas
    }

    /// Number of blocks `n`.
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// `Σ α_i`, the number of minima (and of maxima).
    pub fn bridge_number(&self) -> usize {
        self.alphas.iter().sum()
    }

    /// `w(σ) = 2(Σ α_i)² − 4 Σ_{i>j} α_i β_j`, evaluated with checked
    /// arithmetic.
    pub fn width(&self) -> Result<u64> {
        let total = self.bridge_number() as u64;
        let square = total.checked_mul(total).and_then(|t| t.checked_mul(2)).ok_or(Error::Overflow)?;
        // Σ_{i>j} α_i β_j = Σ_i α_i · (β_1 + … + β_{i−1})
        let mut betas_below = 0u64;
        let mut cross = 0u64;
        for (&a, &b) in self.alphas.iter().zip(&self.betas) {
            cross = (a as u64)
                .checked_mul(betas_below)
                .and_then(|t| t.checked_add(cross))
                .ok_or(Error::Overflow)?;
            betas_below += b as u64;
        }
        let cross = cross.checked_mul(4).ok_or(Error::Overflow)?;
        square.checked_sub(cross).ok_or(Error::Overflow)
    }

    /// Level count at the top of each m-run: `2(Σ_{l≤i} α_l − Σ_{l<i} β_l)`.
    pub fn thick_levels(&self) -> Vec<u64> {
        let mut level = 0i64;
        let mut out = Vec::with_capacity(self.len());
        for (&a, &b) in self.alphas.iter().zip(&self.betas) {
            level += 2 * a as i64;
            out.push(level as u64);
            level -= 2 * b as i64;
        }
        out
    }

    /// Level count at the bottom of each interior M-run.
    pub fn thin_levels(&self) -> Vec<u64> {
        let mut level = 0i64;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for (&a, &b) in self.alphas.iter().zip(&self.betas) {
            level += 2 * (a as i64 - b as i64);
            out.push(level as u64);
        }
        out.pop();
        out
    }

    pub fn to_word(&self) -> MorseWord {
        MorseWord::from_blocks(&self.alphas, &self.betas)
    }
}

impl MorseWord {
    /// Decides membership in Ẑ. On success returns the block decomposition,
    /// otherwise the first violated condition.
    pub fn validate_zhat(&self) -> std::result::Result<BlockForm, Violation> {
        let letters = self.letters();
        if letters.is_empty() {
            return Err(Violation::Empty);
        }
        let mut alphas = Vec::new();
        let mut betas = Vec::new();
        let mut i = 0;
        while i < letters.len() {
            let block = alphas.len() + 1;
            let a = letters[i..].iter().take_while(|&&l| l == Letter::Min).count();
            if a == 0 {
                return Err(Violation::ZeroExponent { block, letter: 'm' });
            }
            i += a;
            let b = letters[i..].iter().take_while(|&&l| l == Letter::Max).count();
            if b == 0 {
                return Err(Violation::ZeroExponent { block, letter: 'M' });
            }
            i += b;
            alphas.push(a);
            betas.push(b);
        }
        let (mut minima, mut maxima) = (0, 0);
        let n = alphas.len();
        for j in 0..n {
            minima += alphas[j];
            maxima += betas[j];
            if j + 1 < n && minima <= maxima {
                return Err(Violation::PrefixBalance { block: j + 1, minima, maxima });
            }
        }
        if minima != maxima {
            return Err(Violation::Unbalanced { minima, maxima });
        }
        Ok(BlockForm { alphas, betas })
    }

    pub fn is_zhat(&self) -> bool {
        self.validate_zhat().is_ok()
    }

    /// Block decomposition of a Ẑ member.
    pub fn block_form(&self) -> Result<BlockForm> {
        self.validate_zhat().map_err(Error::NotMember)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> MorseWord {
        s.parse().unwrap()
    }

    #[test]
    fn members() {
        let one = w("mM").validate_zhat().unwrap();
        assert_eq!(one.len(), 1);
        let fig5 = w("m^3MmM^3").validate_zhat().unwrap();
        assert_eq!(fig5.len(), 2);
        assert_eq!(fig5.alphas(), &[3, 1]);
        assert_eq!(fig5.betas(), &[1, 3]);
    }

    #[test]
    fn condition_two_failure() {
        let v = w("mMmM").validate_zhat().unwrap_err();
        assert_eq!(v, Violation::PrefixBalance { block: 1, minima: 1, maxima: 1 });
        assert_eq!(v.condition(), 2);
    }

    #[test]
    fn condition_one_and_three_failures() {
        assert_eq!(w("").validate_zhat().unwrap_err(), Violation::Empty);
        assert_eq!(w("MmmM").validate_zhat().unwrap_err().condition(), 1);
        assert_eq!(
            w("mMm").validate_zhat().unwrap_err(),
            Violation::ZeroExponent { block: 2, letter: 'M' }
        );
        assert_eq!(w("mmM").validate_zhat().unwrap_err(), Violation::Unbalanced { minima: 2, maxima: 1 });
        // A prefix violation is reported before an imbalance further up.
        assert_eq!(w("mMmmM").validate_zhat().unwrap_err().condition(), 2);
    }

    #[test]
    fn block_form_examples() {
        let b = w("mmMM").block_form().unwrap();
        assert_eq!((b.alphas(), b.betas()), (&[2][..], &[2][..]));
        let b = w("mmMmMM").block_form().unwrap();
        assert_eq!((b.alphas(), b.betas()), (&[2, 1][..], &[1, 2][..]));
        assert_eq!(b.to_word(), w("mmMmMM"));
        assert!(matches!(w("mMmM").block_form(), Err(Error::NotMember(_))));
    }

    #[test]
    fn levels() {
        let b = w("m^3MmM^3").block_form().unwrap();
        assert_eq!(b.thick_levels(), vec![6, 6]);
        assert_eq!(b.thin_levels(), vec![4]);
        assert_eq!(b.width().unwrap(), 28);
    }

    #[test]
    fn width_overflow_is_an_error() {
        let b = BlockForm { alphas: vec![usize::MAX / 2], betas: vec![usize::MAX / 2] };
        assert_eq!(b.width(), Err(Error::Overflow));
    }
}
