//! Small hand-rolled SVG renderings: the strand diagram of a Morse
//! presentation and the level profile of a word.

use std::fmt::Write;

use morsewidth::{Event, MorseDiagram, Sign};

const DX: f64 = 18.0;
const ROW: f64 = 22.0;
const PAD: f64 = 14.0;

fn x(p: usize) -> f64 {
    PAD + p as f64 * DX
}

fn strand(out: &mut String, x0: f64, y0: f64, x1: f64, y1: f64, class: &str) {
    let ym = (y0 + y1) / 2.0;
    let _ = write!(out, r#"<path class="{class}" d="M{x0} {y0} C{x0} {ym} {x1} {ym} {x1} {y1}"/>"#);
}

/// Draws events bottom to top, one row each. Strands keep left aligned
/// positions. A cup first makes room and then opens in the upper half of
/// its row; a cap closes in the lower half and the strands to its right
/// close the gap above it.
pub fn diagram(d: &MorseDiagram) -> String {
    let rows = d.events().len();
    let width = 2.0 * PAD + d.max_strands().saturating_sub(1) as f64 * DX;
    let height = 2.0 * PAD + rows as f64 * ROW;
    let mut body = String::new();
    let mut strands = 0usize;
    for (k, &event) in d.events().iter().enumerate() {
        let yb = height - PAD - k as f64 * ROW;
        let yt = yb - ROW;
        let ym = yb - ROW / 2.0;
        match event {
            Event::Cup(i) => {
                for p in 0..strands {
                    let q = if p < i { p } else { p + 2 };
                    strand(&mut body, x(p), yb, x(q), ym, "s");
                    strand(&mut body, x(q), ym, x(q), yt, "s");
                }
                let (a, b) = (x(i), x(i + 1));
                let _ = write!(body, r#"<path class="s" d="M{a} {yt} C{a} {ym} {b} {ym} {b} {yt}"/>"#);
                strands += 2;
            }
            Event::Cap(i) => {
                for p in (0..strands).filter(|&p| p != i && p != i + 1) {
                    let q = if p < i { p } else { p - 2 };
                    strand(&mut body, x(p), yb, x(p), ym, "s");
                    strand(&mut body, x(p), ym, x(q), yt, "s");
                }
                let (a, b) = (x(i), x(i + 1));
                let _ = write!(body, r#"<path class="s" d="M{a} {yb} C{a} {ym} {b} {ym} {b} {yb}"/>"#);
                strands -= 2;
            }
            Event::Cross(i, sign) => {
                for p in (0..strands).filter(|&p| p != i && p != i + 1) {
                    strand(&mut body, x(p), yb, x(p), yt, "s");
                }
                let (a, b) = (x(i), x(i + 1));
                // positive: the strand moving right passes over
                let (under, over) = match sign {
                    Sign::Positive => ((b, a), (a, b)),
                    Sign::Negative => ((a, b), (b, a)),
                };
                strand(&mut body, under.0, yb, under.1, yt, "s");
                strand(&mut body, over.0, yb, over.1, yt, "halo");
                strand(&mut body, over.0, yb, over.1, yt, "s");
            }
        }
    }
    wrap(width, height, &body)
}

/// One horizontal bar per regular level, bottom to top; thick levels
/// are marked.
pub fn profile(counts: &[u64]) -> String {
    let top = counts.iter().copied().max().unwrap_or(0) as f64;
    let unit = 8.0;
    let bar = 10.0;
    let width = 2.0 * PAD + top * unit + 30.0;
    let height = 2.0 * PAD + counts.len() as f64 * (bar + 2.0);
    let mut body = String::new();
    for (k, &c) in counts.iter().enumerate() {
        let prev = if k == 0 { 0 } else { counts[k - 1] };
        let next = counts.get(k + 1).copied().unwrap_or(0);
        let class = if c > prev && c > next { "thick" } else { "level" };
        let y = height - PAD - (k + 1) as f64 * (bar + 2.0);
        let w = c as f64 * unit;
        let _ = write!(body, r#"<rect class="{class}" x="{PAD}" y="{y}" width="{w}" height="{bar}"/>"#);
        let _ = write!(body, r#"<text x="{}" y="{}">{c}</text>"#, PAD + w + 4.0, y + bar - 1.0);
    }
    wrap(width, height, &body)
}

fn wrap(width: f64, height: f64, body: &str) -> String {
    format!(
        concat!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#,
            "<style>.s{{fill:none;stroke:#222;stroke-width:1.6}}",
            ".halo{{fill:none;stroke:#fff;stroke-width:6}}",
            ".level{{fill:#9ab}}.thick{{fill:#c53}}text{{font:9px sans-serif}}</style>",
            "{body}</svg>"
        ),
        w = width,
        h = height,
        body = body
    )
}
