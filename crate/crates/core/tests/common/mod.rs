//! Reference implementations used as test oracles. None of these call into
//! the code paths they check.
#![allow(dead_code)]

use morsewidth::{Event, Letter, MorseDiagram, MorseWord};

/// Level-sum width straight from the letters: Σ over all regular levels of
/// the number of strands, counting each letter as ±2.
pub fn level_sum_width(word: &str) -> i64 {
    let mut level = 0i64;
    let mut total = 0i64;
    let chars: Vec<char> = word.chars().collect();
    for c in &chars[..chars.len() - 1] {
        level += if *c == 'm' { 2 } else { -2 };
        total += level;
    }
    total
}

/// Ẑ membership by walking the level: starts with m, ends with M, never
/// reaches zero before the last letter, ends at zero.
pub fn brute_is_zhat(word: &str) -> bool {
    let mut level = 0i64;
    let n = word.len();
    for (i, c) in word.chars().enumerate() {
        level += if c == 'm' { 1 } else { -1 };
        if level <= 0 && i + 1 < n {
            return false;
        }
    }
    n >= 2 && level == 0
}

/// Run lengths `(α, β)` by scanning characters.
pub fn runs(word: &str) -> (Vec<usize>, Vec<usize>) {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    let mut prev = None;
    for c in word.chars() {
        if prev != Some(c) {
            if c == 'm' { a.push(0) } else { b.push(0) }
        }
        *if c == 'm' { a.last_mut() } else { b.last_mut() }.unwrap() += 1;
        prev = Some(c);
    }
    (a, b)
}

/// Every Ẑ word with at most `max_bridge` maxima and `max_blocks` blocks,
/// by filtering all strings over {m, M}, sorted by
/// `(Σα, n, α, β)`.
pub fn brute_zhat(max_bridge: usize, max_blocks: usize) -> Vec<String> {
    let mut out = Vec::new();
    for b in 1..=max_bridge {
        let len = 2 * b;
        for bits in 0u32..(1 << len) {
            let w: String = (0..len).map(|i| if bits >> (len - 1 - i) & 1 == 0 { 'm' } else { 'M' }).collect();
            if brute_is_zhat(&w) && runs(&w).0.len() <= max_blocks {
                out.push(w);
            }
        }
    }
    out.sort_by_key(|w| {
        let (a, b) = runs(w);
        (a.iter().sum::<usize>(), a.len(), a, b)
    });
    out
}

/// Number of closed curves, by flood fill over strand segments. A segment
/// is a (level, position) pair; consecutive levels are joined along
/// strands, cups join their two new segments and caps their two ending
/// segments.
pub fn segment_components(diagram: &MorseDiagram) -> usize {
    let events = diagram.events();
    let mut widths = vec![0usize];
    for e in events {
        let s = *widths.last().unwrap();
        widths.push(match e {
            Event::Cup(_) => s + 2,
            Event::Cap(_) => s - 2,
            Event::Cross(..) => s,
        });
    }
    let mut offset = vec![0usize];
    for w in &widths {
        offset.push(offset.last().unwrap() + w);
    }
    let id = |level: usize, pos: usize| offset[level] + pos;
    let total = *offset.last().unwrap();
    let mut adj = vec![Vec::new(); total];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (k, e) in events.iter().enumerate() {
        let (below, above) = (k, k + 1);
        let s = widths[below];
        // map each position below to its position above (or None if capped)
        for p in 0..s {
            let q = match *e {
                Event::Cup(i) => Some(if p < i { p } else { p + 2 }),
                Event::Cap(i) => {
                    if p == i || p == i + 1 { None } else if p < i { Some(p) } else { Some(p - 2) }
                }
                Event::Cross(i, _) => Some(if p == i { i + 1 } else if p == i + 1 { i } else { p }),
            };
            if let Some(q) = q {
                link(id(below, p), id(above, q), &mut adj);
            }
        }
        match *e {
            Event::Cup(i) => link(id(above, i), id(above, i + 1), &mut adj),
            Event::Cap(i) => link(id(below, i), id(below, i + 1), &mut adj),
            Event::Cross(..) => {}
        }
    }
    let mut seen = vec![false; total];
    let mut count = 0;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

/// Builds a Ẑ word from random bits: start at `m`, each bit picks `M`
/// when the level allows it, then close with enough `M`s.
pub fn word_from_bits(bits: &[bool]) -> MorseWord {
    let mut letters = vec![Letter::Min];
    let mut level = 1;
    for &b in bits {
        if b && level > 1 {
            letters.push(Letter::Max);
            level -= 1;
        } else {
            letters.push(Letter::Min);
            level += 1;
        }
    }
    letters.extend(std::iter::repeat(Letter::Max).take(level));
    MorseWord::new(letters)
}

/// Plat closure of a random braid on `2k` strands: `k` cups side by side,
/// the crossings, then `k` caps at position 0.
pub fn plat(k: usize, crossings: &[(usize, bool)]) -> MorseDiagram {
    use morsewidth::Sign;
    let mut events: Vec<Event> = (0..k).map(|j| Event::Cup(2 * j)).collect();
    for &(i, pos) in crossings {
        events.push(Event::Cross(i % (2 * k - 1), if pos { Sign::Positive } else { Sign::Negative }));
    }
    events.extend((0..k).map(|_| Event::Cap(0)));
    MorseDiagram::new(events)
}
