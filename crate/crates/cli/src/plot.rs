//! Words-per-sentence scatter plots as SVG or two-column CSV.

use std::fmt::Write as _;

use codemix::IndexName;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const X_TICKS: usize = 5;
const Y_MAX: f64 = 100.0;

/// Smallest "nice" bound (1, 2 or 5 times a power of ten) at or above `x`.
fn nice_ceiling(x: f64) -> f64 {
    if x <= 1.0 {
        return 1.0;
    }
    let magnitude = 10f64.powf(x.log10().floor());
    [1.0, 2.0, 5.0, 10.0].iter().map(|m| m * magnitude).find(|&v| v >= x).unwrap_or(10.0 * magnitude)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn trim_number(x: f64) -> String {
    let s = format!("{x:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// SVG scatter with one `<circle class="point">` per pair.
pub fn scatter_svg(title: &str, index: IndexName, pairs: &[(usize, f64)]) -> String {
    let x_max = nice_ceiling(pairs.iter().map(|p| p.0).max().unwrap_or(1) as f64);
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + x / x_max * plot_w;
    let sy = |y: f64| TOP + (1.0 - y / Y_MAX) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );

    let _ = writeln!(svg, r#"<g stroke="black" stroke-width="1">"#);
    let _ = writeln!(svg, r#"<line x1="{LEFT}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, TOP + plot_h, LEFT + plot_w, TOP + plot_h);
    let _ = writeln!(svg, r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{:.2}"/>"#, TOP + plot_h);
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g font-family="sans-serif" font-size="11">"#);
    for i in 0..=X_TICKS {
        let value = x_max * i as f64 / X_TICKS as f64;
        let x = sx(value);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            TOP + plot_h + 18.0,
            trim_number(value)
        );
    }
    for i in 0..=5 {
        let value = Y_MAX * i as f64 / 5.0;
        let y = sy(value);
        let _ = writeln!(svg, r#"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT}" y2="{y:.2}" stroke="black"/>"#, LEFT - 5.0);
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            LEFT - 8.0,
            y + 4.0,
            trim_number(value)
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="12">words per sentence</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="12" transform="rotate(-90 18 {:.2})">{}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        index.label()
    );

    let _ = writeln!(svg, r#"<g fill="steelblue" fill-opacity="0.6">"#);
    for &(words, value) in pairs {
        let _ = writeln!(
            svg,
            r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="3"/>"#,
            sx(words as f64),
            sy(value.clamp(0.0, Y_MAX))
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}

/// `words,<index>` header followed by one row per pair.
pub fn scatter_csv(index: IndexName, pairs: &[(usize, f64)]) -> String {
    let mut out = format!("words,{}\n", index.key());
    for &(words, value) in pairs {
        let _ = writeln!(out, "{words},{:.2}", crate::render::round2(value));
    }
    out
}
