use super::MorseWord;

/// Every Ẑ member with `Σα ≤ max_bridge` and at most `max_blocks` blocks,
/// each exactly once.
///
/// Order is lexicographic on `(Σα, n, α-sequence, β-sequence)`: all
/// one-bridge words first, and within a bridge number all single-block
/// words before two-block words, and so on.
pub fn enumerate_zhat(max_bridge: usize, max_blocks: usize) -> ZhatWords {
    ZhatWords { max_bridge, max_blocks, bridge: 1, blocks: 1, alphas: None, betas: None }
}

#[derive(Debug, Clone)]
pub struct ZhatWords {
    max_bridge: usize,
    max_blocks: usize,
    bridge: usize,
    blocks: usize,
    alphas: Option<Vec<usize>>,
    betas: Option<Vec<usize>>,
}

fn first_composition(total: usize, parts: usize) -> Vec<usize> {
    let mut c = vec![1; parts];
    c[parts - 1] = total - parts + 1;
    c
}

/// Advances `c` to the next composition (positive parts, same sum and
/// length) in lexicographic order. Returns false when `c` was the last.
fn next_composition(c: &mut [usize]) -> bool {
    let len = c.len();
    let mut tail = 0;
    for i in (0..len.saturating_sub(1)).rev() {
        tail += c[i + 1];
        let tail_len = len - 1 - i;
        if tail > tail_len {
            c[i] += 1;
            c[i + 1..].fill(1);
            c[len - 1] = tail - 1 - (tail_len - 1);
            return true;
        }
    }
    false
}

fn dominates(alphas: &[usize], betas: &[usize]) -> bool {
    let n = alphas.len();
    let (mut a, mut b) = (0, 0);
    alphas[..n - 1].iter().zip(betas).all(|(&x, &y)| {
        a += x;
        b += y;
        a > b
    })
}

impl Iterator for ZhatWords {
    type Item = MorseWord;

    fn next(&mut self) -> Option<MorseWord> {
        loop {
            if self.bridge > self.max_bridge || self.max_blocks == 0 {
                return None;
            }
            if self.blocks > self.max_blocks.min(self.bridge) {
                self.bridge += 1;
                self.blocks = 1;
                self.alphas = None;
                self.betas = None;
                continue;
            }
            let alphas = self.alphas.get_or_insert_with(|| first_composition(self.bridge, self.blocks));
            match self.betas.as_mut() {
                None => self.betas = Some(first_composition(self.bridge, self.blocks)),
                Some(betas) => {
                    if !next_composition(betas) {
                        self.betas = None;
                        if !next_composition(alphas) {
                            self.alphas = None;
                            self.blocks += 1;
                        }
                        continue;
                    }
                }
            }
            let alphas = self.alphas.as_ref().expect("set above");
            let betas = self.betas.as_ref().expect("set above");
            if dominates(alphas, betas) {
                return Some(MorseWord::from_blocks(alphas, betas));
            }
        }
    }
}
