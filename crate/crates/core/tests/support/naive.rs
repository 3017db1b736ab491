//! Independent recount of every per-sentence index straight from a tag list.
//! `None` marks a language-independent token.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaiveIndices {
    pub words: usize,
    pub undefined: usize,
    pub languages: usize,
    pub switches: usize,
    pub lf: f64,
    pub sf: f64,
    pub mf: f64,
    pub cmi: f64,
    pub cf1: f64,
    pub cf2: f64,
    pub cf3: f64,
}

pub fn naive_indices(tags: &[Option<String>], a: f64, b: f64) -> NaiveIndices {
    let words = tags.len();
    let spoken: Vec<&String> = tags.iter().flatten().collect();
    let undefined = words - spoken.len();

    let mut distinct: Vec<&String> = Vec::new();
    for s in &spoken {
        if !distinct.contains(s) {
            distinct.push(s);
        }
    }
    let mut dominant = 0;
    for d in &distinct {
        let n = spoken.iter().filter(|s| *s == d).count();
        if n > dominant {
            dominant = n;
        }
    }
    let mut switches = 0;
    for i in 1..spoken.len() {
        if spoken[i] != spoken[i - 1] {
            switches += 1;
        }
    }

    let w = words as f64;
    let wp = spoken.len() as f64;
    let n = distinct.len() as f64;
    let lf = if distinct.is_empty() { 0.0 } else { w / n };
    let sf = if words > 1 { switches as f64 / (w - 1.0) } else { 0.0 };
    let mf = if spoken.is_empty() { 0.0 } else { (wp - dominant as f64) / wp };
    let cmi = if words > undefined { 100.0 * (1.0 - dominant as f64 / wp) } else { 0.0 };

    let top = a * mf + b * sf;
    let (cf1, cf2, cf3) = if top == 0.0 {
        (0.0, 0.0, 0.0)
    } else {
        let linear = (0.25 / (w - 1.0)) * (lf - 1.0) + 1.0;
        let arctan = lf.atan() / std::f64::consts::PI + 0.75;
        (top / lf, top / linear, top / arctan)
    };
    NaiveIndices { words, undefined, languages: distinct.len(), switches, lf, sf, mf, cmi, cf1, cf2, cf3 }
}

pub fn round10(x: f64) -> f64 {
    (x * 1e10).round() / 1e10
}
