//! SVG 1.1 rendering of a triangle on the integer lattice.

use std::fmt::Write;

use crate::dyadic::Dyadic;
use crate::geometry::Triangle;

const WIDTH: f64 = 480.0;
const MAX_GUIDES: f64 = 40.0;

fn to_f64(d: &Dyadic) -> f64 {
    d.num().to_string().parse::<f64>().unwrap_or(f64::NAN) * 2f64.powi(d.exp() as i32)
}

/// Hull outline, lattice guides at integer coordinates (thinned when the
/// extent is large), axes with ticks, and vertex labels `A`, `B`, `C`.
pub fn render(t: &Triangle) -> String {
    let pts: Vec<(f64, f64)> = t
        .vertices()
        .iter()
        .map(|p| (to_f64(&p.x), to_f64(&p.y)))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0f64, 0f64, 0f64, 0f64);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let (w, h) = ((x1 - x0).max(1e-9), (y1 - y0).max(1e-9));
    let (mx, my) = (0.1 * w.max(h), 0.1 * w.max(h));
    let (x0, x1, y0, y1) = (x0 - mx, x1 + mx, y0 - my, y1 + my);
    let scale = WIDTH / (x1 - x0);
    let height = (y1 - y0) * scale;
    let sx = |x: f64| (x - x0) * scale;
    let sy = |y: f64| (y1 - y) * scale;

    let extent = (x1 - x0).max(y1 - y0);
    let step = (extent / MAX_GUIDES).ceil().max(1.0);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.3} {height:.3}">"#
    );
    let _ = writeln!(s, r#"<g stroke="lightgray" stroke-width="0.5">"#);
    let mut gx = (x0 / step).ceil() * step;
    while gx <= x1 {
        let _ = writeln!(
            s,
            r#"<line x1="{0:.3}" y1="0" x2="{0:.3}" y2="{1:.3}"/>"#,
            sx(gx),
            height
        );
        gx += step;
    }
    let mut gy = (y0 / step).ceil() * step;
    while gy <= y1 {
        let _ = writeln!(
            s,
            r#"<line x1="0" y1="{0:.3}" x2="{1:.3}" y2="{0:.3}"/>"#,
            sy(gy),
            WIDTH
        );
        gy += step;
    }
    let _ = writeln!(s, "</g>");

    // axes through the origin when it is in view
    let _ = writeln!(s, r#"<g stroke="black" stroke-width="1">"#);
    if (y0..=y1).contains(&0.0) {
        let _ = writeln!(
            s,
            r#"<line x1="0" y1="{0:.3}" x2="{1:.3}" y2="{0:.3}"/>"#,
            sy(0.0),
            WIDTH
        );
    }
    if (x0..=x1).contains(&0.0) {
        let _ = writeln!(
            s,
            r#"<line x1="{0:.3}" y1="0" x2="{0:.3}" y2="{1:.3}"/>"#,
            sx(0.0),
            height
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g font-family="serif" font-size="12" fill="black">"#);
    for &(x, y) in &pts {
        if x != 0.0 && (y0..=y1).contains(&0.0) {
            let _ = writeln!(
                s,
                r#"<line x1="{0:.3}" y1="{1:.3}" x2="{0:.3}" y2="{2:.3}" stroke="black"/><text x="{0:.3}" y="{3:.3}" text-anchor="middle">{4}</text>"#,
                sx(x),
                sy(0.0) - 3.0,
                sy(0.0) + 3.0,
                sy(0.0) + 15.0,
                fmt_tick(x)
            );
        }
        if y != 0.0 && (x0..=x1).contains(&0.0) {
            let _ = writeln!(
                s,
                r#"<line x1="{0:.3}" y1="{1:.3}" x2="{2:.3}" y2="{1:.3}" stroke="black"/><text x="{3:.3}" y="{4:.3}" text-anchor="end">{5}</text>"#,
                sx(0.0) - 3.0,
                sy(y),
                sx(0.0) + 3.0,
                sx(0.0) - 5.0,
                sy(y) + 4.0,
                fmt_tick(y)
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let poly: Vec<String> = pts
        .iter()
        .map(|&(x, y)| format!("{:.3},{:.3}", sx(x), sy(y)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polygon points="{}" fill="lightsteelblue" fill-opacity="0.5" stroke="black" stroke-width="1.5"/>"#,
        poly.join(" ")
    );
    for (k, &(x, y)) in pts.iter().enumerate() {
        let label = (b'A' + k as u8) as char;
        let _ = writeln!(
            s,
            r#"<circle cx="{0:.3}" cy="{1:.3}" r="3.5"/><text x="{2:.3}" y="{3:.3}" font-family="serif" font-size="16">{label}</text>"#,
            sx(x),
            sy(y),
            sx(x) + 6.0,
            sy(y) - 6.0
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}

fn fmt_tick(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{v:.0}")
    } else {
        format!("{v}")
    }
}
