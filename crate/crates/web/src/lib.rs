//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every operation takes text and returns a JSON string. The plain Rust
//! functions do the work; the `#[wasm_bindgen]` wrappers only convert the
//! error type.

mod svg;

use morsewidth::reduction::reduce;
use morsewidth::report::{cmd_cable, cmd_width, Cabled, Input};
use morsewidth::{corpus, CableParams, MorseDiagram, MorseWord, Sign};
use serde_json::json;
use wasm_bindgen::prelude::*;

pub use svg::{diagram as diagram_svg, profile as profile_svg};

/// `corpus:<name>`, diagram text (anything mentioning cup, cap or cross),
/// or a word.
pub fn parse_input(text: &str) -> Result<Input, String> {
    let text = text.trim();
    if let Some(name) = text.strip_prefix("corpus:") {
        let entry = corpus::get(name.trim()).ok_or_else(|| format!("no corpus entry {name:?}"))?;
        return Ok(Input::Diagram { name: text.to_string(), diagram: entry.diagram() });
    }
    let lower = text.to_ascii_lowercase();
    if ["cup", "cap", "cross"].iter().any(|k| lower.contains(k)) {
        let diagram: MorseDiagram = text.parse().map_err(|e| format!("{e}"))?;
        diagram.validate().map_err(|e| e.to_string())?;
        return Ok(Input::Diagram { name: "diagram".into(), diagram });
    }
    let word: MorseWord = text.parse().map_err(|e| format!("{e}"))?;
    Ok(Input::Word(word))
}

fn picture(input: &Input, word: &MorseWord) -> Result<String, String> {
    Ok(match input {
        Input::Diagram { diagram, .. } => svg::diagram(diagram),
        Input::Word(_) => svg::profile(word.level_profile().map_err(|e| e.to_string())?.counts()),
    })
}

/// Level profile, thick/thin tuple, the three widths and the bridge
/// number, plus a picture.
pub fn analyze(text: &str) -> Result<String, String> {
    let input = parse_input(text)?;
    let report = cmd_width(&input).map_err(|e| e.to_string())?;
    let profile = report.word.level_profile().map_err(|e| e.to_string())?;
    let tuple = report.word.thick_thin().map_err(|e| e.to_string())?;
    let out = json!({
        "report": report,
        "profile": profile.counts(),
        "thick": tuple.thick().collect::<Vec<_>>(),
        "thin": tuple.thin().collect::<Vec<_>>(),
        "svg": picture(&input, &report.word)?,
    });
    Ok(out.to_string())
}

/// The q-cable, its scaling checks and its canonical text.
pub fn cable(text: &str, q: usize, twists: usize, sign: &str) -> Result<String, String> {
    let sign: Sign = sign.parse()?;
    let params = CableParams::new(q, twists, sign).map_err(|e| e.to_string())?;
    let input = parse_input(text)?;
    let (report, cabled) = cmd_cable(&input, params).map_err(|e| e.to_string())?;
    let svg = match &cabled {
        Cabled::Diagram(d) => svg::diagram(d),
        Cabled::Word(w) => svg::profile(w.level_profile().map_err(|e| e.to_string())?.counts()),
    };
    Ok(json!({ "report": report, "text": cabled.emit(), "svg": svg }).to_string())
}

/// Greedy reduction with the width after every move.
pub fn reduce_trace(text: &str) -> Result<String, String> {
    let input = parse_input(text)?;
    let word = match &input {
        Input::Word(w) => w.clone(),
        Input::Diagram { diagram, .. } => diagram.critical_word().map_err(|e| e.to_string())?,
    };
    let (end, trace) = reduce(&word).map_err(|e| e.to_string())?;
    let widths = trace.widths().map_err(|e| e.to_string())?;
    Ok(json!({
        "start": word,
        "end": end,
        "steps": trace.steps,
        "widths": widths,
        "records": trace.to_records(),
    })
    .to_string())
}

#[wasm_bindgen(js_name = analyze)]
pub fn analyze_js(text: &str) -> Result<String, JsValue> {
    analyze(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = cable)]
pub fn cable_js(text: &str, q: usize, twists: usize, sign: &str) -> Result<String, JsValue> {
    cable(text, q, twists, sign).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = reduce)]
pub fn reduce_js(text: &str) -> Result<String, JsValue> {
    reduce_trace(text).map_err(|e| JsValue::from_str(&e))
}
