//! Static SVG pictures of an instance and its witness.
//!
//! Coordinates are converted to `f64` here, for drawing only.

use std::collections::BTreeSet;
use std::fmt::Write;

use bipartite_core::{Color, Verdict};

use crate::instance::Instance;

const WIDTH: f64 = 800.0;
const PAD: f64 = 20.0;
const HIGHLIGHT: &str = "#f0a000";
const MUTED: &str = "#b0b0b0";

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    fn new(boxes: impl Iterator<Item = (f64, f64, f64, f64)>) -> Frame {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for (a, b, c, d) in boxes {
            x0 = x0.min(a);
            y0 = y0.min(b);
            x1 = x1.max(c);
            y1 = y1.max(d);
        }
        if x0 > x1 {
            (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let scale = (WIDTH - 2.0 * PAD) / span;
        Frame { min_x: x0, max_y: y1, scale, height: (y1 - y0) * scale + 2.0 * PAD }
    }

    fn x(&self, x: f64) -> f64 {
        (x - self.min_x) * self.scale + PAD
    }

    fn y(&self, y: f64) -> f64 {
        (self.max_y - y) * self.scale + PAD
    }
}

/// Stroke and width for object `id`.
fn style(verdict: &Verdict, cycle: &BTreeSet<u64>, id: u64) -> (&'static str, f64) {
    match verdict {
        Verdict::Bipartite { colors } => match colors.get(&id) {
            Some(Color::Red) => ("#d62728", 1.5),
            Some(Color::Blue) => ("#1f77b4", 1.5),
            None => (MUTED, 1.0),
        },
        Verdict::OddCycle { .. } if cycle.contains(&id) => (HIGHLIGHT, 4.0),
        Verdict::OddCycle { .. } => (MUTED, 1.0),
    }
}

pub fn render(instance: &Instance, verdict: &Verdict) -> String {
    let cycle: BTreeSet<u64> = match verdict {
        Verdict::OddCycle { cycle } => cycle.iter().copied().collect(),
        Verdict::Bipartite { .. } => BTreeSet::new(),
    };
    let mut body = String::new();
    let frame = match instance {
        Instance::Segments { items, .. } => {
            let pts: Vec<[f64; 4]> = items
                .iter()
                .map(|s| [s.p().x.to_f64(), s.p().y.to_f64(), s.q().x.to_f64(), s.q().y.to_f64()])
                .collect();
            let frame = Frame::new(pts.iter().map(|p| (p[0].min(p[2]), p[1].min(p[3]), p[0].max(p[2]), p[1].max(p[3]))));
            // Highlighted members last so they sit on top.
            let mut order: Vec<usize> = (0..items.len()).collect();
            order.sort_by_key(|&i| cycle.contains(&items[i].id()));
            for i in order {
                let p = pts[i];
                let (stroke, w) = style(verdict, &cycle, items[i].id());
                let _ = writeln!(
                    body,
                    r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{stroke}" stroke-width="{w}"><title>{}</title></line>"#,
                    frame.x(p[0]),
                    frame.y(p[1]),
                    frame.x(p[2]),
                    frame.y(p[3]),
                    items[i].id()
                );
            }
            frame
        }
        Instance::Disks { items } | Instance::Balls { items, .. } => {
            let circles: Vec<(f64, f64, f64)> = items
                .iter()
                .map(|b| {
                    let c = b.center();
                    let y = c.get(1).map_or(0.0, |v| v.to_f64());
                    (c[0].to_f64(), y, b.radius().to_f64())
                })
                .collect();
            let frame = Frame::new(circles.iter().map(|&(x, y, r)| (x - r, y - r, x + r, y + r)));
            let mut order: Vec<usize> = (0..items.len()).collect();
            order.sort_by_key(|&i| cycle.contains(&items[i].id()));
            for i in order {
                let (x, y, r) = circles[i];
                let (stroke, w) = style(verdict, &cycle, items[i].id());
                let _ = writeln!(
                    body,
                    r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="{stroke}" stroke-width="{w}"><title>{}</title></circle>"#,
                    frame.x(x),
                    frame.y(y),
                    r * frame.scale,
                    items[i].id()
                );
            }
            frame
        }
    };
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{h:.0}\" viewBox=\"0 0 {WIDTH} {h:.3}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n",
        h = frame.height
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn highlights_cycle_members() {
        let inst = Instance::parse(
            r#"{"kind":"segments","items":[
                {"id":0,"p":["0","0"],"q":["6","2"]},
                {"id":1,"p":["0","3"],"q":["6","1"]},
                {"id":2,"p":["2.9","-1"],"q":["3.1","3"]},
                {"id":3,"p":["10","10"],"q":["11","10"]}]}"#,
        )
        .unwrap();
        let svg = render(&inst, &Verdict::OddCycle { cycle: vec![0, 1, 2] });
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches(HIGHLIGHT).count(), 3);
        assert_eq!(svg.matches("<line").count(), 4);
    }

    #[test]
    fn colors_disks() {
        let inst = Instance::parse(r#"{"kind":"disks","items":[{"id":0,"c":["0","0"],"r":"1"},{"id":1,"c":["1.5","0"],"r":"1"}]}"#)
            .unwrap();
        let v = Verdict::Bipartite { colors: [(0, Color::Red), (1, Color::Blue)].into() };
        let svg = render(&inst, &v);
        assert!(svg.contains("#d62728") && svg.contains("#1f77b4"));
    }
}
