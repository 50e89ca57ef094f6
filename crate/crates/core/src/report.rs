//! Width and cabling reports behind the `width` and `cable` commands.

use std::fmt;

use serde::Serialize;

use crate::diagram::{CableParams, MorseDiagram, Sign};
use crate::error::Result;
use crate::word::MorseWord;

/// What a command operates on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Word(MorseWord),
    Diagram { name: String, diagram: MorseDiagram },
}

impl Input {
    pub fn identifier(&self) -> String {
        match self {
            Input::Word(w) => w.to_string(),
            Input::Diagram { name, .. } => name.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Widths {
    /// `2(Σα)² − 4Σ_{i>j} α_i β_j`
    pub block: u64,
    /// `½(Σa² − Σb²)`
    pub thick_thin: u64,
    /// `Σ x_i`
    pub profile: u64,
}

impl Widths {
    pub fn of(word: &MorseWord) -> Result<Self> {
        Ok(Widths {
            block: word.width()?,
            thick_thin: word.thick_thin()?.width()?,
            profile: word.level_profile()?.width()?,
        })
    }

    pub fn agree(&self) -> bool {
        self.block == self.thick_thin && self.thick_thin == self.profile
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramFacts {
    pub components: usize,
    pub crossings: usize,
    pub writhe: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CableReport {
    pub q: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twists: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    pub word: MorseWord,
    pub width: u64,
    pub bridge: usize,
    /// `w(cable) = q² · w`
    pub width_scales: bool,
    /// `b(cable) = q · b`
    pub bridge_scales: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramFacts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: String,
    pub word: MorseWord,
    pub widths: Widths,
    pub bridge: usize,
    pub bridge_thin: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramFacts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cable: Option<CableReport>,
}

impl Report {
    /// True when the three widths agree and any cable scaling holds.
    pub fn is_consistent(&self) -> bool {
        self.widths.agree() && self.cable.as_ref().map_or(true, |c| c.width_scales && c.bridge_scales)
    }

    pub fn width(&self) -> u64 {
        self.widths.block
    }
}

fn word_report(input: String, word: MorseWord) -> Result<Report> {
    let widths = Widths::of(&word)?;
    Ok(Report {
        input,
        bridge: word.bridge_number()?,
        bridge_thin: word.is_bridge_thin()?,
        widths,
        word,
        diagram: None,
        cable: None,
    })
}

fn diagram_facts(diagram: &MorseDiagram) -> Result<DiagramFacts> {
    Ok(DiagramFacts {
        components: diagram.component_count()?,
        crossings: diagram.crossing_count(),
        writhe: diagram.signed_crossing_sum(),
    })
}

/// All three widths and the bridge number of a word or knot diagram.
pub fn cmd_width(input: &Input) -> Result<Report> {
    match input {
        Input::Word(word) => word_report(input.identifier(), word.clone()),
        Input::Diagram { diagram, .. } => {
            let mut report = word_report(input.identifier(), diagram.critical_word()?)?;
            report.diagram = Some(diagram_facts(diagram)?);
            Ok(report)
        }
    }
}

/// The cabled object: a word for word input, a diagram for diagram input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cabled {
    Word(MorseWord),
    Diagram(MorseDiagram),
}

impl Cabled {
    /// Canonical text: the expanded word plus newline, or the diagram
    /// format.
    pub fn emit(&self) -> String {
        match self {
            Cabled::Word(w) => format!("{w}\n"),
            Cabled::Diagram(d) => d.emit(),
        }
    }
}

/// Cables the input and checks `w ↦ q²w`, `b ↦ qb`. Twists only apply to
/// diagrams. A multi-component diagram cable is reported with a warning.
pub fn cmd_cable(input: &Input, params: CableParams) -> Result<(Report, Cabled)> {
    let mut report = cmd_width(input)?;
    let q = params.q;
    let (cabled, word, diagram, twists, sign) = match input {
        Input::Word(word) => {
            let c = word.cable(q)?;
            (Cabled::Word(c.clone()), c, None, None, None)
        }
        Input::Diagram { diagram, .. } => {
            let c = diagram.cable(params)?;
            let facts = diagram_facts(&c)?;
            let word = c.event_word();
            (Cabled::Diagram(c), word, Some(facts), Some(params.twists), Some(params.twist_sign))
        }
    };
    let width = word.width()?;
    let bridge = word.bridge_number()?;
    let warning = diagram.as_ref().filter(|f| f.components > 1).map(|f| {
        format!(
            "cable has {} components: gcd(twists={}, q={}) = {}; use twists coprime to q for a knot",
            f.components,
            params.twists,
            q,
            gcd(params.twists, q)
        )
    });
    let q64 = q as u64;
    report.cable = Some(CableReport {
        q,
        twists,
        sign,
        width_scales: Some(width) == report.width().checked_mul(q64 * q64),
        bridge_scales: bridge == report.bridge * q,
        word,
        width,
        bridge,
        diagram,
        warning,
    });
    Ok((report, cabled))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "input:        {}", self.input)?;
        writeln!(f, "word:         {} ({})", self.word, self.word.to_caret_string())?;
        let w = &self.widths;
        writeln!(
            f,
            "width:        {} (block {}, thick/thin {}, levels {}){}",
            w.block,
            w.block,
            w.thick_thin,
            w.profile,
            if w.agree() { "" } else { "  MISMATCH" }
        )?;
        writeln!(f, "bridge:       {}", self.bridge)?;
        writeln!(f, "bridge-thin:  {}", yes_no(self.bridge_thin))?;
        if let Some(d) = &self.diagram {
            writeln!(f, "components:   {}  crossings: {}  writhe: {:+}", d.components, d.crossings, d.writhe)?;
        }
        if let Some(c) = &self.cable {
            write!(f, "cable:        q={}", c.q)?;
            if let (Some(t), Some(s)) = (c.twists, c.sign) {
                write!(f, " twists={t} sign={}", s.as_char())?;
            }
            writeln!(f)?;
            writeln!(f, "  word:       {}", c.word.to_caret_string())?;
            writeln!(
                f,
                "  width:      {} = {}·{} {}",
                c.width,
                c.q * c.q,
                self.width(),
                if c.width_scales { "ok" } else { "FAILS" }
            )?;
            writeln!(
                f,
                "  bridge:     {} = {}·{} {}",
                c.bridge,
                c.q,
                self.bridge,
                if c.bridge_scales { "ok" } else { "FAILS" }
            )?;
            if let Some(d) = &c.diagram {
                writeln!(f, "  components: {}  crossings: {}  writhe: {:+}", d.components, d.crossings, d.writhe)?;
            }
        }
        Ok(())
    }
}
