//! SVG figures: `P` as filled discs (blue and green for bipartite files),
//! `R` as hollow discs, points at infinity as labeled arrows at the border.

use std::fmt::Write;

use num_traits::ToPrimitive;
use pierce_core::geom::join;
use pierce_core::io::{ConfigDocument, PointSets};
use pierce_core::ProjPoint;

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    /// Draw every line determined by `P` (or by blue–green pairs).
    pub lines: bool,
}

#[derive(Clone, Debug)]
pub struct Svg {
    pub text: String,
    /// Discs plus arrows.
    pub glyphs: usize,
    pub arrows: usize,
    pub lines: usize,
}

#[derive(Clone, Copy)]
struct Frame {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Frame {
    fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    fn centre(&self) -> (f64, f64) {
        ((self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0)
    }

    fn shrink(&self, f: f64) -> Frame {
        let (dx, dy) = (self.width() * f, self.height() * f);
        Frame { x0: self.x0 + dx, y0: self.y0 + dy, x1: self.x1 - dx, y1: self.y1 - dy }
    }

    /// The two points where `a x + b y + c = 0` crosses the frame.
    fn clip(&self, a: f64, b: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
        let mut hits: Vec<(f64, f64)> = Vec::new();
        if b != 0.0 {
            for x in [self.x0, self.x1] {
                let y = -(a * x + c) / b;
                if (self.y0..=self.y1).contains(&y) {
                    hits.push((x, y));
                }
            }
        }
        if a != 0.0 {
            for y in [self.y0, self.y1] {
                let x = -(b * y + c) / a;
                if (self.x0..=self.x1).contains(&x) {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
        Some((*hits.first()?, *hits.last()?))
    }
}

fn bounding_frame(points: &[(f64, f64)]) -> Frame {
    if points.is_empty() {
        return Frame { x0: -1.2, y0: -1.2, x1: 1.2, y1: 1.2 };
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let (w, h) = ((x1 - x0).max(span * 0.25), (y1 - y0).max(span * 0.25));
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let (mx, my) = (w * 0.6, h * 0.6);
    Frame { x0: cx - mx, y0: cy - my, x1: cx + mx, y1: cy + my }
}

fn f(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

fn big(v: &num_bigint::BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, Copy)]
enum Role {
    P,
    Blue,
    Green,
    R,
}

impl Role {
    fn class(self) -> &'static str {
        match self {
            Role::P => "p",
            Role::Blue => "b",
            Role::Green => "g",
            Role::R => "r",
        }
    }

    fn fill(self) -> &'static str {
        match self {
            Role::P => "black",
            Role::Blue => "#1f5fbf",
            Role::Green => "#2e9e3e",
            Role::R => "white",
        }
    }
}

pub fn render_svg(doc: &ConfigDocument, opts: &RenderOptions) -> Svg {
    let mut items: Vec<(Role, &ProjPoint)> = Vec::new();
    let (sources, mixed): (Vec<&ProjPoint>, Option<usize>) = match &doc.sets {
        PointSets::Plain(c) => {
            items.extend(c.p().iter().map(|p| (Role::P, p)));
            items.extend(c.r().iter().map(|p| (Role::R, p)));
            (c.p().iter().collect(), None)
        }
        PointSets::Bipartite(bc) => {
            items.extend(bc.b().iter().map(|p| (Role::Blue, p)));
            items.extend(bc.g().iter().map(|p| (Role::Green, p)));
            items.extend(bc.r().iter().map(|p| (Role::R, p)));
            (bc.b().iter().chain(bc.g()).collect(), Some(bc.b().len()))
        }
    };
    let finite: Vec<(f64, f64)> = items.iter().filter_map(|(_, p)| p.to_f64()).collect();
    let frame = bounding_frame(&finite);
    let size = frame.width().max(frame.height());
    let radius = size * 0.012;
    let stroke = radius / 3.0;

    let mut body = String::new();
    let mut lines = 0;
    if opts.lines {
        for i in 0..sources.len() {
            for j in i + 1..sources.len() {
                if mixed.is_some_and(|m| !(i < m && m <= j)) {
                    continue;
                }
                let Ok(l) = join(sources[i], sources[j]) else { continue };
                let [a, b, c] = l.coeffs().clone().map(|v| big(&v));
                if let Some(((xa, ya), (xb, yb))) = frame.clip(a, b, c) {
                    let _ = writeln!(
                        body,
                        r##"  <line class="line" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999999" stroke-width="{}"/>"##,
                        f(xa),
                        f(-ya),
                        f(xb),
                        f(-yb),
                        f(stroke / 2.0)
                    );
                    lines += 1;
                }
            }
        }
    }

    let inner = frame.shrink(0.03);
    let (cx, cy) = frame.centre();
    let mut glyphs = 0;
    let mut arrows = 0;
    for (role, p) in &items {
        glyphs += 1;
        if let Some((x, y)) = p.to_f64() {
            let _ = writeln!(
                body,
                r#"  <circle class="glyph {}" cx="{}" cy="{}" r="{}" fill="{}" stroke="black" stroke-width="{}"/>"#,
                role.class(),
                f(x),
                f(-y),
                f(radius),
                role.fill(),
                f(stroke)
            );
            continue;
        }
        arrows += 1;
        let (dx, dy) = (big(p.x()), big(p.y()));
        let norm = dx.hypot(dy);
        let (ux, uy) = (dx / norm, dy / norm);
        // distance from the centre to the inner frame along (ux, uy)
        let tx = if ux != 0.0 { (inner.width() / 2.0) / ux.abs() } else { f64::INFINITY };
        let ty = if uy != 0.0 { (inner.height() / 2.0) / uy.abs() } else { f64::INFINITY };
        let t = tx.min(ty);
        let (hx, hy) = (cx + t * ux, cy + t * uy);
        let len = size * 0.08;
        let (bx, by) = (hx - len * ux, hy - len * uy);
        let w = radius * 1.2;
        let (lx, ly) = (bx + 0.35 * len * ux - w * uy, by + 0.35 * len * uy + w * ux);
        let (rx, ry) = (bx + 0.35 * len * ux + w * uy, by + 0.35 * len * uy - w * ux);
        let label = format!("({}:{}:0)", p.x(), p.y());
        let _ = writeln!(
            body,
            concat!(
                r#"  <g class="glyph {} arrow">"#,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="{}"/>"#,
                r#"<polygon points="{},{} {},{} {},{}" fill="{}" stroke="black" stroke-width="{}"/>"#,
                r#"<text x="{}" y="{}" font-size="{}" text-anchor="middle">{}</text></g>"#
            ),
            role.class(),
            f(bx),
            f(-by),
            f(hx),
            f(-hy),
            f(stroke),
            f(hx),
            f(-hy),
            f(lx),
            f(-ly),
            f(rx),
            f(-ry),
            role.fill(),
            f(stroke),
            f(bx - 1.5 * w * uy),
            f(-(by + 1.5 * w * ux)),
            f(size * 0.025),
            label
        );
    }

    let mut text = String::new();
    let _ = writeln!(text, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        text,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="{}" viewBox="{} {} {} {}">"#,
        (800.0 * frame.height() / frame.width()).round(),
        f(frame.x0),
        f(-frame.y1),
        f(frame.width()),
        f(frame.height())
    );
    if let Some(p) = &doc.provenance {
        let escaped = p.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let _ = writeln!(text, "  <title>{escaped}</title>");
    }
    text.push_str(&body);
    text.push_str("</svg>\n");
    Svg { text, glyphs, arrows, lines }
}
