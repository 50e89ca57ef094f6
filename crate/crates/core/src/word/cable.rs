use super::MorseWord;
use crate::error::{Error, Result};

impl MorseWord {
    /// The word of the obvious `q`-cabling: `m^{qα₁}M^{qβ₁}…m^{qαₙ}M^{qβₙ}`.
    /// `q = 1` is the identity.
    pub fn cable(&self, q: usize) -> Result<MorseWord> {
        if q == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        self.block_form()?;
        let len = self.len().checked_mul(q).filter(|&n| n <= super::MAX_WORD_LEN).ok_or(Error::Overflow)?;
        let mut letters = Vec::with_capacity(len);
        for &l in self.letters() {
            letters.extend(std::iter::repeat(l).take(q));
        }
        Ok(MorseWord::new(letters))
    }
}
