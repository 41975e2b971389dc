//! Static SVG figures: the pentagon tiling in the disk model and the two
//! strips of a periodic direction on the double pentagon.

use std::f64::consts::PI;
use std::fmt::Write;

use penta_core::surface::{scaled_direction, SurfaceModel};
use penta_core::tracer::{strips_for_direction, Crossing, StripOptions, Tracer};
use penta_core::tree::{child_pentagon, root_pentagon, IdealPentagon};
use penta_core::{ArcVertex, Error, ProjPoint};

const SIZE: f64 = 640.0;
const RADIUS: f64 = 300.0;

/// `sin(pi/5)`: the disk map sends the point at height `h` above 0 to the center.
fn disk_height() -> f64 {
    (PI / 5.0).sin()
}

/// Boundary angle of a direction; the root pentagon lands on a regular pentagon.
pub fn boundary_angle(x: &ProjPoint) -> f64 {
    -2.0 * disk_height().atan2(x.to_f64())
}

fn screen(theta: f64) -> (f64, f64) {
    (SIZE / 2.0 + RADIUS * theta.cos(), SIZE / 2.0 - RADIUS * theta.sin())
}

/// Path data for the geodesic joining two boundary points.
fn geodesic(t1: f64, t2: f64) -> String {
    let (x1, y1) = screen(t1);
    let (x2, y2) = screen(t2);
    let mut delta = (t2 - t1).rem_euclid(2.0 * PI);
    if delta > PI {
        delta = 2.0 * PI - delta;
    }
    if (delta - PI).abs() < 1e-9 {
        return format!("M{x1:.3},{y1:.3}L{x2:.3},{y2:.3}");
    }
    let r = RADIUS * (delta / 2.0).tan();
    // The arc bulges towards the disk center; pick the sweep accordingly.
    let (cx, cy) = (SIZE / 2.0, SIZE / 2.0);
    let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
    let toward = (mx - cx, my - cy);
    let chord = (x2 - x1, y2 - y1);
    let turn = chord.0 * toward.1 - chord.1 * toward.0;
    let sweep = if turn > 0.0 { 0 } else { 1 };
    format!("M{x1:.3},{y1:.3}A{r:.3},{r:.3} 0 0 {sweep} {x2:.3},{y2:.3}")
}

fn side_path(p: &IdealPentagon, k: usize) -> String {
    geodesic(boundary_angle(&p.vertices[k % 5]), boundary_angle(&p.vertices[(k + 1) % 5]))
}

/// The root pentagon and its reflections up to generation `depth`.
pub fn render_tiling(depth: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let c = SIZE / 2.0;
    let _ = writeln!(out, r#"<circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black" stroke-width="1.5"/>"#);

    let root = root_pentagon();
    let _ = writeln!(out, r#"<g id="generation-0" fill="none" stroke="black" stroke-width="2">"#);
    for k in 0..5 {
        let _ = writeln!(out, r#"<path d="{}"/>"#, side_path(&root, k));
    }
    let _ = writeln!(out, "</g>");

    let mut level: Vec<IdealPentagon> = (0..5).map(|k| child_pentagon(&root, k)).collect();
    for g in 1..=depth {
        let width = 1.5 / g as f64;
        let _ = writeln!(out, r##"<g id="generation-{g}" fill="none" stroke="#1f4e9c" stroke-width="{width:.3}">"##);
        for p in &level {
            for k in 0..4 {
                let _ = writeln!(out, r#"<path d="{}"/>"#, side_path(p, k));
            }
        }
        let _ = writeln!(out, "</g>");
        level = level.iter().flat_map(|p| (0..4).map(move |k| child_pentagon(p, k))).collect();
    }

    let _ = writeln!(out, r#"<g font-family="serif" font-size="14" text-anchor="middle">"#);
    let labels = [("-", "α"), ("1", "α1"), ("2", "α2"), ("3", "α3"), ("far", "far")];
    for (path, text) in labels {
        let v: ArcVertex = path.parse().expect("fixed labels parse");
        if v.depth() > depth {
            continue;
        }
        let theta = boundary_angle(&v.direction());
        let (x, y) = (c + (RADIUS + 18.0) * theta.cos(), c - (RADIUS + 18.0) * theta.sin() + 5.0);
        let _ = writeln!(out, r#"<text x="{x:.3}" y="{y:.3}">{text}</text>"#);
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

type P = (f64, f64);

const STRIP_SCALE: f64 = 170.0;
const STRIP_W: f64 = 820.0;
const STRIP_H: f64 = 460.0;

fn pentagon_f64(surface: &SurfaceModel, pid: usize) -> [P; 5] {
    std::array::from_fn(|k| {
        let (x, y) = &surface.pentagons[pid][k];
        (x.to_f64(), y.to_f64())
    })
}

fn place(pid: usize, p: P) -> P {
    let cx = if pid == 0 { STRIP_W * 0.27 } else { STRIP_W * 0.73 };
    (cx + STRIP_SCALE * p.0, STRIP_H / 2.0 + 15.0 - STRIP_SCALE * p.1)
}

fn on_side(poly: &[P; 5], k: usize, t: f64) -> P {
    let (a, b) = (poly[k % 5], poly[(k + 1) % 5]);
    (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1))
}

/// Keeps the part of a convex polygon where `f >= 0`.
fn clip(poly: &[P], f: impl Fn(P) -> f64) -> Vec<P> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        let (fa, fb) = (f(a), f(b));
        if fa >= 0.0 {
            out.push(a);
        }
        if (fa >= 0.0) != (fb >= 0.0) {
            let s = fa / (fa - fb);
            out.push((a.0 + s * (b.0 - a.0), a.1 + s * (b.1 - a.1)));
        }
    }
    out
}

fn polyline(points: &[P]) -> String {
    points.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect::<Vec<_>>().join(" ")
}

fn trajectory_segments(polys: &[[P; 5]; 2], crossings: &[Crossing]) -> Vec<(usize, P, P)> {
    let n = crossings.len();
    (0..n)
        .map(|i| {
            let prev = &crossings[(i + n - 1) % n];
            let cur = &crossings[i];
            let pid = cur.pentagon as usize;
            let entry = on_side(&polys[pid], prev.side as usize, 1.0 - prev.t.to_f64());
            let exit = on_side(&polys[pid], cur.side as usize, cur.t.to_f64());
            (pid, place(pid, entry), place(pid, exit))
        })
        .collect()
}

/// Both strips of the direction `v`, the long one shaded.
pub fn render_strips(surface: &SurfaceModel, v: &ArcVertex) -> Result<String, Error> {
    let x = v.direction();
    let report = strips_for_direction(surface, &x, StripOptions::default())?;
    let tracer = Tracer::new(surface, &x);
    let polys = [pentagon_f64(surface, 0), pentagon_f64(surface, 1)];
    let d = scaled_direction(&x);
    let (dx, dy) = (d.0.to_f64(), d.1.to_f64());
    let s = (2.0 * PI / 5.0).sin();
    let transverse = move |p: P| p.0 * dy - (p.1 / s) * dx;

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{STRIP_W}" height="{STRIP_H}" viewBox="0 0 {STRIP_W} {STRIP_H}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (a, b) = report.periods;
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="28" font-family="sans-serif" font-size="16" text-anchor="middle">direction {v}: short {} ({a}), long {} ({b})</text>"#,
        STRIP_W / 2.0,
        report.orbit_pair.short.representative(),
        report.orbit_pair.long.representative(),
    );

    let strips = [(1usize, "long", "#b8b8b8", "#555555"), (0usize, "short", "none", "#c0392b")];
    for (idx, name, fill, line) in strips {
        let cyl = tracer.cylinder(&report.sample_points[idx], StripOptions::default().max_steps)?;
        let (below, above) = (cyl.below.to_f64(), cyl.above.to_f64());
        let _ = writeln!(out, r#"<g id="{name}-strip" fill="{fill}" stroke="none">"#);
        for c in &cyl.trace.crossings {
            let pid = c.pentagon as usize;
            let w = c.w.to_f64();
            let lo = clip(&polys[pid], |p| transverse(p) - (w - below));
            let band = clip(&lo, |p| (w + above) - transverse(p));
            if band.len() >= 3 && fill != "none" {
                let placed: Vec<P> = band.iter().map(|&p| place(pid, p)).collect();
                let _ = writeln!(out, r#"<polygon points="{}"/>"#, polyline(&placed));
            }
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r#"<g id="{name}-trajectory" stroke="{line}" stroke-width="1.6" fill="none">"#);
        for (_, p, q) in trajectory_segments(&polys, &cyl.trace.crossings) {
            let _ = writeln!(out, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, p.0, p.1, q.0, q.1);
        }
        let _ = writeln!(out, "</g>");
    }

    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2">"#);
    for (pid, poly) in polys.iter().enumerate() {
        let placed: Vec<P> = poly.iter().map(|&p| place(pid, p)).collect();
        let _ = writeln!(out, r#"<polygon points="{}"/>"#, polyline(&placed));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g font-family="sans-serif" font-size="15" text-anchor="middle">"#);
    for (pid, poly) in polys.iter().enumerate() {
        for k in 0..5 {
            let m = on_side(poly, k, 0.5);
            let (px, py) = place(pid, (m.0 * 1.13, m.1 * 1.13));
            let _ = writeln!(out, r#"<text x="{px:.3}" y="{:.3}">{}</text>"#, py + 5.0, surface.labels[k]);
        }
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}
