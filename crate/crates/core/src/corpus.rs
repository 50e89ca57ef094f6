//! Golden diagrams shipped with the crate. The same files live in
//! `corpus/` next to a `MANIFEST.sha256` checksum list.

use serde::Serialize;

use crate::diagram::MorseDiagram;
use crate::error::Result;
use crate::word::MorseWord;

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub file: &'static str,
    pub text: &'static str,
}

macro_rules! entry {
    ($name:literal, $file:literal) => {
        CorpusEntry { name: $name, file: $file, text: include_str!(concat!("../corpus/", $file)) }
    };
}

pub const ENTRIES: &[CorpusEntry] = &[
    entry!("unknot", "unknot.mdg"),
    entry!("trefoil", "trefoil.mdg"),
    entry!("figure-eight", "figure-eight.mdg"),
    entry!("torus-2-5", "torus-2-5.mdg"),
    entry!("torus-2-7", "torus-2-7.mdg"),
];

pub const MANIFEST: &str = include_str!("../corpus/MANIFEST.sha256");

pub fn get(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

impl CorpusEntry {
    pub fn diagram(&self) -> MorseDiagram {
        self.text.parse().expect("corpus files parse")
    }

    pub fn certify(&self) -> Result<Certificate> {
        Certificate::of(&self.diagram())
    }
}

/// Quantities that pin down a corpus diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub components: usize,
    pub crossings: usize,
    pub bridge: usize,
    pub writhe: i64,
    pub word: MorseWord,
    pub width: u64,
}

impl Certificate {
    pub fn of(diagram: &MorseDiagram) -> Result<Self> {
        Ok(Certificate {
            components: diagram.component_count()?,
            crossings: diagram.crossing_count(),
            bridge: diagram.bridge()?,
            writhe: diagram.writhe()?,
            word: diagram.critical_word()?,
            width: diagram.width()?,
        })
    }
}
