//! Deterministic SVG plot of a plaintext's points and the records fitted
//! through them.

use std::fmt::Write as _;

use crate::alphabet::PlainSequence;
use crate::container::CipherStream;
use crate::error::{Error, Result};
use crate::geometry::{intersect_gf, Point, Rational};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 40.0;
const CURVE_SAMPLES: usize = 24;

pub enum PlotInput<'a> {
    Plain(&'a PlainSequence),
    Stream(&'a CipherStream),
}

/// Scene in data coordinates.
#[derive(Default)]
struct Scene {
    points: Vec<(f64, f64)>,
    segments: Vec<((f64, f64), (f64, f64))>,
    curves: Vec<Vec<(f64, f64)>>,
}

fn xy(p: &Point) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

fn index_points(codes: &[u32]) -> Vec<(f64, f64)> {
    codes.iter().enumerate().map(|(k, &c)| ((k + 1) as f64, c as f64)).collect()
}

fn scene(input: &PlotInput<'_>) -> Result<Scene> {
    let stream = match input {
        PlotInput::Plain(seq) => {
            if seq.len() < 2 {
                return Err(Error::format("nothing to plot: fewer than 2 symbols"));
            }
            return Ok(Scene {
                points: index_points(seq.codes()),
                ..Scene::default()
            });
        }
        PlotInput::Stream(stream) => stream,
    };
    let codes = stream.decode(false)?;
    let codes = codes.codes();
    let mut scene = Scene::default();
    match stream {
        CipherStream::IndexLine(c) => {
            scene.points = index_points(codes);
            let n = c.records.len();
            for (k, line) in c.records.iter().enumerate() {
                let x0 = Rational::from(k as u32 + 1);
                let x1 = Rational::from(((k + 1) % n) as u32 + 1);
                let p0 = (x0.to_f64(), line.eval(&x0).to_f64());
                let p1 = (x1.to_f64(), line.eval(&x1).to_f64());
                scene.segments.push((p0, p1));
            }
        }
        CipherStream::IndexElliptic(_) => {
            scene.points = index_points(codes);
        }
        CipherStream::PairLine(c) => {
            // points come from the records so a padded final point keeps its pad ordinate
            let p = c.records.len();
            let points: Vec<Point> = (0..p)
                .map(|i| intersect_gf(&c.records[(i + p - 1) % p], &c.records[i]))
                .collect::<Result<_>>()?;
            scene.points = points.iter().map(xy).collect();
            let p = scene.points.len();
            for i in 0..p {
                scene.segments.push((scene.points[i], scene.points[(i + 1) % p]));
            }
        }
        CipherStream::Lagrange(c) => {
            scene.points = index_points(codes);
            let g = c.block_size;
            for (j, poly) in c.records.iter().enumerate() {
                let start = (j * g + 1) as i64;
                let end = ((j + 1) * g) as i64;
                let curve = (0..=CURVE_SAMPLES)
                    .map(|s| {
                        let x = Rational::integer(start)
                            + Rational::new((end - start) * s as i64, CURVE_SAMPLES as i64);
                        (x.to_f64(), poly.eval(&x).to_f64())
                    })
                    .collect();
                scene.curves.push(curve);
            }
        }
    }
    Ok(scene)
}

struct Frame {
    min_x: f64,
    min_y: f64,
    sx: f64,
    sy: f64,
}

impl Frame {
    fn fit(scene: &Scene) -> Frame {
        let all = scene
            .points
            .iter()
            .chain(scene.segments.iter().flat_map(|(a, b)| [a, b]))
            .chain(scene.curves.iter().flatten());
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in all {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
        Frame {
            min_x,
            min_y,
            sx: (WIDTH - 2.0 * MARGIN) / span(min_x, max_x),
            sy: (HEIGHT - 2.0 * MARGIN) / span(min_y, max_y),
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            MARGIN + (x - self.min_x) * self.sx,
            HEIGHT - MARGIN - (y - self.min_y) * self.sy,
        )
    }
}

pub fn render_svg(input: PlotInput<'_>) -> Result<String> {
    let scene = scene(&input)?;
    if scene.points.len() < 2 {
        return Err(Error::format("nothing to plot: fewer than 2 points"));
    }
    let frame = Frame::fit(&scene);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();

    writeln!(out, r##"<g id="segments" stroke="#3465a4" stroke-width="1" fill="none">"##).unwrap();
    for &(a, b) in &scene.segments {
        let (x1, y1) = frame.map(a);
        let (x2, y2) = frame.map(b);
        writeln!(out, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r##"<g id="curves" stroke="#4e9a06" stroke-width="1" fill="none">"##).unwrap();
    for curve in &scene.curves {
        let pts: Vec<String> = curve
            .iter()
            .map(|&p| {
                let (x, y) = frame.map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" ")).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r##"<g id="points" fill="#cc0000">"##).unwrap();
    for &p in &scene.points {
        let (cx, cy) = frame.map(p);
        writeln!(out, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="3"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
