use serde::Serialize;

use super::{Event, MorseDiagram, Sign};
use crate::error::{Error, Result};

/// Parameters of a blackboard-framed cable: `q` parallel strands per
/// original strand, plus `twists` copies of a `1/q` twist of one bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CableParams {
    pub q: usize,
    pub twists: usize,
    pub twist_sign: Sign,
}

impl CableParams {
    pub fn new(q: usize, twists: usize, twist_sign: Sign) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        Ok(CableParams { q, twists, twist_sign })
    }
}

impl MorseDiagram {
    /// Replaces every strand by `q` parallel copies.
    ///
    /// Cups and caps become `q` nested cups and caps, each crossing becomes
    /// the `q²` crossings that swap two bundles of `q` strands, and right
    /// after the first group of cups the left bundle receives `twists`
    /// cyclic shifts `Cross(iq), …, Cross(iq+q−2)`.
    pub fn cable(&self, params: CableParams) -> Result<MorseDiagram> {
        let q = params.q;
        if q == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        self.check_knot()?;
        let mut out = Vec::with_capacity(
            self.events().len() * q * q + params.twists * (q - 1),
        );
        for (k, &event) in self.events().iter().enumerate() {
            match event {
                Event::Cup(i) => out.extend((0..q).map(|r| Event::Cup(i * q + r))),
                Event::Cap(i) => out.extend((0..q).rev().map(|r| Event::Cap(i * q + r))),
                Event::Cross(i, sign) => {
                    for r in 0..q {
                        out.extend((0..q).map(|c| Event::Cross(i * q + (q - 1) - r + c, sign)));
                    }
                }
            }
            if k == 0 {
                let base = event.position() * q;
                for _ in 0..params.twists {
                    out.extend((0..q - 1).map(|r| Event::Cross(base + r, params.twist_sign)));
                }
            }
        }
        Ok(MorseDiagram::new(out))
    }
}
