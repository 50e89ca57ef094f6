//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the lines always show; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use morsewidth::corpus;
use morsewidth::reduction::{apply_type_i, apply_type_ii, reduce, Direction};
use morsewidth::verify::BlockWidth;
use morsewidth::{enumerate_zhat, BlockForm, CableParams, MorseWord, Result, Sign, ThickThinTuple};

use common::{brute_zhat, level_sum_width, segment_components};

type Outcome = std::result::Result<String, String>;

fn w(s: &str) -> MorseWord {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Three widths of one word with the block formula supplied by the caller.
fn three_widths(word: &MorseWord, block_width: BlockWidth) -> std::result::Result<[u64; 3], String> {
    let e = |err: morsewidth::Error| err.to_string();
    let blocks = word.block_form().map_err(e)?;
    Ok([
        block_width(&blocks).map_err(e)?,
        word.thick_thin().map_err(e)?.width().map_err(e)?,
        word.level_profile().map_err(e)?.width().map_err(e)?,
    ])
}

fn criterion_1(block_width: BlockWidth) -> Outcome {
    let start = Instant::now();
    let word = w("m^3MmM^3");
    let widths = three_widths(&word, block_width)?;
    let tuple = word.thick_thin().map_err(|e| e.to_string())?;
    let direct = ThickThinTuple::new(vec![6, 4, 6]).unwrap().width().unwrap();
    let elapsed = start.elapsed();
    ensure(widths == [28, 28, 28], || format!("widths {widths:?}, expected 28 three times"))?;
    ensure(tuple.entries() == [6, 4, 6], || format!("thick/thin {:?}", tuple.entries()))?;
    ensure(direct == 28, || format!("(36-16+36)/2 gave {direct}"))?;
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("w(m^3MmM^3) = 28 by block, thick/thin (6,4,6) and level sum in {elapsed:?}"))
}

fn criterion_2(block_width: BlockWidth) -> Outcome {
    let start = Instant::now();
    let words: Vec<MorseWord> = enumerate_zhat(6, 4).collect();
    let oracle = brute_zhat(6, 4);
    ensure(words.len() == oracle.len(), || format!("{} words vs {} from brute force", words.len(), oracle.len()))?;
    for word in &words {
        let widths = three_widths(word, block_width)?;
        let levels = level_sum_width(&word.to_string()) as u64;
        ensure(widths.iter().all(|&x| x == levels), || format!("{word}: {widths:?} vs level oracle {levels}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} words of enumerate_zhat(6,4) agree on all three widths in {elapsed:?}", words.len()))
}

fn criterion_3() -> Outcome {
    let mut pairs = 0;
    for word in enumerate_zhat(6, 4) {
        let (width, bridge) = (word.width().unwrap(), word.bridge_number().unwrap());
        for q in [1usize, 2, 3, 5] {
            let c = word.cable(q).map_err(|e| e.to_string())?;
            let (cw, cb) = (c.width().map_err(|e| e.to_string())?, c.bridge_number().unwrap());
            ensure(cw == (q * q) as u64 * width, || format!("{word} q={q}: w={cw}, q²w={}", q * q * width as usize))?;
            ensure(cb == q * bridge, || format!("{word} q={q}: b={cb}, qb={}", q * bridge))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} word–q pairs satisfy w ↦ q²w and b ↦ qb"))
}

fn criterion_4() -> Outcome {
    let (mut type_i, mut type_ii) = (0, 0);
    for word in enumerate_zhat(5, 3) {
        let blocks = word.block_form().unwrap();
        let thick = blocks.thick_levels();
        let before = level_sum_width(&word.to_string());
        for block in 1..=blocks.len() {
            if let Ok(out) = apply_type_i(&word, block) {
                ensure(out.is_zhat(), || format!("I({block}) on {word} leaves Ẑ"))?;
                let drop = before - level_sum_width(&out.to_string());
                let a = thick[block - 1] as i64;
                ensure(drop == 2 * a - 2, || format!("I({block}) on {word}: drop {drop}, 2a-2 = {}", 2 * a - 2))?;
                type_i += 1;
            }
        }
        for j in 0..word.len() - 1 {
            if let Ok(out) = apply_type_ii(&word, j, Direction::Up) {
                ensure(out.is_zhat(), || format!("II({j},up) on {word} leaves Ẑ"))?;
                let drop = before - level_sum_width(&out.to_string());
                ensure(drop == 4, || format!("II({j},up) on {word}: drop {drop}"))?;
                type_ii += 1;
            }
        }
    }
    Ok(format!("{type_i} type I moves drop 2a-2, {type_ii} type II moves drop 4, all stay in Ẑ"))
}

fn criterion_5() -> Outcome {
    let mut thin = 0;
    for word in enumerate_zhat(6, 4) {
        let b = word.bridge_number().unwrap() as u64;
        let is_thin = word.width().unwrap() == 2 * b * b;
        let single = w(&format!("m^{b}M^{b}")) == word;
        ensure(is_thin == single, || format!("{word}: w=2b² is {is_thin}, single block is {single}"))?;
        ensure(is_thin == word.is_bridge_thin().unwrap(), || format!("{word}: is_bridge_thin disagrees"))?;
        thin += usize::from(is_thin);
    }
    Ok(format!("w = 2b² exactly on the {thin} single-block words m^bM^b"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut cables = 0;
    for name in ["unknot", "trefoil", "figure-eight", "torus-2-5"] {
        let d = corpus::get(name).ok_or(format!("missing corpus entry {name}"))?.diagram();
        let word = d.critical_word().map_err(|e| e.to_string())?;
        for q in [2usize, 3] {
            for t in 0..=3 {
                let c = d.cable(CableParams::new(q, t, Sign::Positive).unwrap()).map_err(|e| e.to_string())?;
                let tag = format!("{name} q={q} t={t}");
                ensure(c.event_word() == word.cable(q).unwrap(), || format!("{tag}: word does not commute"))?;
                let comps = c.component_count().map_err(|e| e.to_string())?;
                ensure(comps == segment_components(&c), || format!("{tag}: union-find disagrees with oracle"))?;
                if gcd(t, q) == 1 {
                    ensure(comps == 1, || format!("{tag}: {comps} components"))?;
                    ensure(c.critical_word().unwrap() == word.cable(q).unwrap(), || format!("{tag}: critical word"))?;
                }
                let expected = q * q * d.crossing_count() + t * (q - 1);
                ensure(c.crossing_count() == expected, || format!("{tag}: {} crossings, expected {expected}", c.crossing_count()))?;
                cables += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{cables} corpus cables commute with cable_word, crossings q²c + t(q-1), in {elapsed:?}"))
}

fn criterion_7() -> Outcome {
    let (end, trace) = reduce(&w("m^3MmM^3")).map_err(|e| e.to_string())?;
    ensure(end == w("mM"), || format!("ended at {end}"))?;
    let widths = trace.widths().unwrap();
    ensure(widths.windows(2).all(|x| x[1] < x[0]), || format!("widths {widths:?} not strictly decreasing"))?;
    let mut current = trace.start.clone();
    for step in &trace.steps {
        let measured = level_sum_width(&step.word.to_string()) - level_sum_width(&current.to_string());
        let predicted = step.mv.predicted_delta(&current).unwrap();
        ensure(measured == step.delta && predicted == step.delta, || format!("{}: delta {}", step.mv, step.delta))?;
        current = step.word.clone();
    }
    let (again, second) = reduce(&end).unwrap();
    ensure(again == end && second.is_empty(), || "reduce is not idempotent".to_string())?;
    Ok(format!("reduce(m^3MmM^3) = mM via widths {widths:?}, idempotent"))
}

/// Cross term summed over `i > j + 1` instead of `i > j`.
fn off_by_one_cross_term(blocks: &BlockForm) -> Result<u64> {
    let total = blocks.bridge_number() as u64;
    let mut cross = 0u64;
    for (i, &a) in blocks.alphas().iter().enumerate() {
        for &b in blocks.betas().iter().take(i.saturating_sub(1)) {
            cross += (a * b) as u64;
        }
    }
    Ok(2 * total * total - 4 * cross)
}

fn criterion_8() -> Outcome {
    let c1 = criterion_1(off_by_one_cross_term);
    let c2 = criterion_2(off_by_one_cross_term);
    match (&c1, &c2) {
        (Err(e1), Err(e2)) => Ok(format!("mutant rejected: C1 ({e1}); C2 ({e2})")),
        (Err(e1), Ok(_)) => Ok(format!("mutant rejected by C1 ({e1})")),
        (Ok(_), Err(e2)) => Ok(format!("mutant rejected by C2 ({e2})")),
        (Ok(_), Ok(_)) => Err("off-by-one cross term passed criteria 1 and 2".to_string()),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("C1 worked example w = 28", || criterion_1(BlockForm::width)),
        ("C2 triple agreement sweep", || criterion_2(BlockForm::width)),
        ("C3 cable scaling", criterion_3),
        ("C4 move deltas", criterion_4),
        ("C5 bridge-thin iff single block", criterion_5),
        ("C6 diagram commutation", criterion_6),
        ("C7 reducer", criterion_7),
        ("C8 mutation sensitivity", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                println!("FAIL  {name}: {detail}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
