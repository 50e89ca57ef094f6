use serde::Serialize;

use super::MorseWord;
use crate::error::{Error, Result};

/// Counts `x₁..x_p` of strands meeting the regular levels between
/// consecutive critical points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LevelProfile {
    counts: Vec<u64>,
}

impl LevelProfile {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidProfile(msg.to_string()));
        match (counts.first(), counts.last()) {
            (Some(2), Some(2)) => {}
            (None, _) => return bad("empty profile"),
            _ => return bad("profile must start and end at 2"),
        }
        if counts.windows(2).any(|w| w[0].abs_diff(w[1]) != 2) {
            return bad("consecutive counts must differ by exactly 2");
        }
        Ok(LevelProfile { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `w = Σ x_i`.
    pub fn width(&self) -> Result<u64> {
        self.counts.iter().try_fold(0u64, |acc, &x| acc.checked_add(x)).ok_or(Error::Overflow)
    }

    /// Turning points of the profile, with the levels just past either end
    /// taken as 0 so the boundary entries count as thick when they peak.
    pub fn thick_thin(&self) -> ThickThinTuple {
        let c = &self.counts;
        let at = |i: isize| if i < 0 || i as usize >= c.len() { 0 } else { c[i as usize] };
        let entries = (0..c.len() as isize)
            .filter(|&i| {
                let (prev, here, next) = (at(i - 1), at(i), at(i + 1));
                (here > prev && here > next) || (here < prev && here < next)
            })
            .map(|i| at(i))
            .collect();
        ThickThinTuple { entries }
    }
}

/// Alternating thick/thin levels `(a₁, b₁, a₂, …, b_{n−1}, aₙ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ThickThinTuple {
    entries: Vec<u64>,
}

impl ThickThinTuple {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidThickThin(msg));
        if entries.len() % 2 == 0 {
            return bad(format!("length {} is even", entries.len()));
        }
        if let Some(x) = entries.iter().find(|&&x| x < 2 || x % 2 != 0) {
            return bad(format!("entry {x} is not an even integer >= 2"));
        }
        for (i, w) in entries.windows(2).enumerate() {
            let thick_first = i % 2 == 0;
            if (thick_first && w[0] <= w[1]) || (!thick_first && w[0] >= w[1]) {
                return bad(format!("thin entry at index {} is not below its neighbours", if thick_first { i + 1 } else { i }));
            }
        }
        Ok(ThickThinTuple { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn thick(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().step_by(2).copied()
    }

    pub fn thin(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().skip(1).step_by(2).copied()
    }

    /// `w = ½(Σ a_i² − Σ b_i²)`.
    pub fn width(&self) -> Result<u64> {
        let thick = sum_of_squares(self.thick())?;
        let thin = sum_of_squares(self.thin())?;
        thick.checked_sub(thin).map(|d| d / 2).ok_or(Error::Overflow)
    }
}

fn sum_of_squares(values: impl Iterator<Item = u64>) -> Result<u64> {
    let mut total = 0u64;
    for x in values {
        total = x.checked_mul(x).and_then(|s| total.checked_add(s)).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

impl MorseWord {
    /// `x_i = 2·(#m − #M)` over the first `i` letters, for `i = 1..p` where
    /// the word has `p + 1` letters.
    pub fn level_profile(&self) -> Result<LevelProfile> {
        self.block_form()?;
        let mut level = 0i64;
        let mut counts = Vec::with_capacity(self.len().saturating_sub(1));
        for l in &self.letters()[..self.len() - 1] {
            level += l.level_step();
            counts.push(level as u64);
        }
        Ok(LevelProfile { counts })
    }

    /// `(2α₁, 2(α₁−β₁), 2(α₁−β₁+α₂), …)` from the block decomposition.
    pub fn thick_thin(&self) -> Result<ThickThinTuple> {
        let blocks = self.block_form()?;
        let thick = blocks.thick_levels();
        let thin = blocks.thin_levels();
        let mut entries = Vec::with_capacity(thick.len() + thin.len());
        for (i, a) in thick.into_iter().enumerate() {
            entries.push(a);
            if let Some(&b) = thin.get(i) {
                entries.push(b);
            }
        }
        Ok(ThickThinTuple { entries })
    }

    /// Width by the block formula `2(Σα)² − 4Σ_{i>j} α_i β_j`.
    pub fn width(&self) -> Result<u64> {
        self.block_form()?.width()
    }

    /// Number of maxima, `Σ α_i`.
    pub fn bridge_number(&self) -> Result<usize> {
        Ok(self.block_form()?.bridge_number())
    }

    /// All maxima above all minima, i.e. a single block.
    pub fn is_bridge_word(&self) -> Result<bool> {
        Ok(self.block_form()?.len() == 1)
    }

    /// `w = 2b²`.
    pub fn is_bridge_thin(&self) -> Result<bool> {
        let blocks = self.block_form()?;
        let b = blocks.bridge_number() as u64;
        Ok(blocks.width()? == 2 * b * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> MorseWord {
        s.parse().unwrap()
    }

    #[test]
    fn profiles() {
        assert_eq!(w("mM").level_profile().unwrap().counts(), &[2]);
        assert_eq!(w("mmMM").level_profile().unwrap().counts(), &[2, 4, 2]);
        assert_eq!(w("m^3MmM^3").level_profile().unwrap().counts(), &[2, 4, 6, 4, 6, 4, 2]);
        assert!(w("mMmM").level_profile().is_err());
    }

    #[test]
    fn profile_widths() {
        let p = |v: Vec<u64>| LevelProfile::new(v).unwrap().width().unwrap();
        assert_eq!(p(vec![2]), 2);
        assert_eq!(p(vec![2, 4, 6, 4, 6, 4, 2]), 28);
        assert_eq!(p(vec![2, 4, 2]), 8);
    }

    #[test]
    fn profile_validation() {
        assert!(LevelProfile::new(vec![]).is_err());
        assert!(LevelProfile::new(vec![2, 4]).is_err());
        assert!(LevelProfile::new(vec![2, 6, 2]).is_err());
        assert!(LevelProfile::new(vec![2, 4, 4, 2]).is_err());
    }

    #[test]
    fn thick_thin_examples() {
        assert_eq!(w("m^3MmM^3").thick_thin().unwrap().entries(), &[6, 4, 6]);
        assert_eq!(w("mmMM").thick_thin().unwrap().entries(), &[4]);
        assert_eq!(w("mmMmMM").thick_thin().unwrap().entries(), &[4, 2, 4]);
    }

    #[test]
    fn thick_thin_widths() {
        let t = |v: Vec<u64>| ThickThinTuple::new(v).unwrap().width().unwrap();
        assert_eq!(t(vec![4]), 8);
        assert_eq!(t(vec![6, 4, 6]), 28);
        assert_eq!(t(vec![4, 2, 4]), 14);
    }

    #[test]
    fn thick_thin_validation() {
        assert!(ThickThinTuple::new(vec![4, 2]).is_err());
        assert!(ThickThinTuple::new(vec![4, 6, 8]).is_err());
        assert!(ThickThinTuple::new(vec![3]).is_err());
        assert!(ThickThinTuple::new(vec![4, 0, 4]).is_err());
    }

    #[test]
    fn word_widths() {
        assert_eq!(w("m^3MmM^3").width().unwrap(), 28);
        assert_eq!(w("mM").width().unwrap(), 2);
        assert_eq!(w("m^10M^10").width().unwrap(), 200);
    }

    #[test]
    fn bridge_numbers_and_predicates() {
        assert_eq!(w("mM").bridge_number().unwrap(), 1);
        assert_eq!(w("m^3MmM^3").bridge_number().unwrap(), 4);
        assert_eq!(w("mmMM").bridge_number().unwrap(), 2);

        assert!(w("mmMM").is_bridge_word().unwrap());
        assert!(w("mmMM").is_bridge_thin().unwrap());
        assert!(!w("m^3MmM^3").is_bridge_word().unwrap());
        assert!(!w("m^3MmM^3").is_bridge_thin().unwrap());
        assert!(w("m^10M^10").is_bridge_word().unwrap());
        assert!(w("m^10M^10").is_bridge_thin().unwrap());
        assert!(w("mMmM").is_bridge_thin().is_err());
    }

    #[test]
    fn extrema_of_profile_match_block_tuple() {
        let word = w("m^3MmM^3");
        let from_profile = word.level_profile().unwrap().thick_thin();
        assert_eq!(from_profile, word.thick_thin().unwrap());
    }
}
