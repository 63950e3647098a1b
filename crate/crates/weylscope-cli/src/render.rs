//! Deterministic SVG 1.1 pictures of rank-2 prefans.
//!
//! Dual vectors are drawn in the Euclidean plane where the simple roots have
//! Gram matrix (α_i, α_j) = d_i a_ij, short roots of squared length 2.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_traits::ToPrimitive;
use weylscope::polyfan::Cone;
use weylscope::root_data::RootDatum;
use weylscope::type_geometry::TypePrefan;
use weylscope::Q;

const SIZE: f64 = 640.0;
const RADIUS: f64 = 220.0;
const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
    "#ccebc5", "#ffed6f",
];

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Lower Cholesky factor L of the Gram matrix; α_i is row i of L.
struct Realization {
    l: [[f64; 2]; 2],
}

impl Realization {
    fn new(d: &RootDatum) -> Self {
        let a = d.cartan();
        let s = d.symmetrizer();
        let g = |i: usize, j: usize| (s[i] * a[i][j]) as f64;
        let l00 = g(0, 0).sqrt();
        let l10 = g(1, 0) / l00;
        let l11 = (g(1, 1) - l10 * l10).sqrt();
        Realization { l: [[l00, 0.0], [l10, l11]] }
    }

    /// The Euclidean vector x with (x, α_j) = u_j.
    fn point(&self, u: &[f64]) -> (f64, f64) {
        let x0 = u[0] / self.l[0][0];
        let x1 = (u[1] - self.l[1][0] * x0) / self.l[1][1];
        (x0, x1)
    }

    /// Dual coordinates of a Euclidean vector.
    fn dual(&self, x: (f64, f64)) -> [f64; 2] {
        [self.l[0][0] * x.0, self.l[1][0] * x.0 + self.l[1][1] * x.1]
    }
}

fn to_f64(v: &[Q]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64().unwrap_or(0.0)).collect()
}

fn screen(x: (f64, f64)) -> (f64, f64) {
    (SIZE / 2.0 + x.0, SIZE / 2.0 - x.1)
}

fn angle(x: (f64, f64)) -> f64 {
    x.1.atan2(x.0).rem_euclid(2.0 * PI)
}

fn contains_direction(c: &Cone, u: [f64; 2]) -> bool {
    let val = |f: &Vec<i64>| f[0] as f64 * u[0] + f[1] as f64 * u[1];
    c.inequalities().iter().all(|f| val(f) <= 1e-9) && c.equalities().iter().all(|f| val(f).abs() <= 1e-9)
}

/// Angular interval [start, start + width] covered by a two-dimensional cone.
fn sector(r: &Realization, c: &Cone) -> (f64, f64) {
    let mut dirs: Vec<f64> = c.rays().iter().map(|v| angle(r.point(&to_f64(v)))).collect();
    for v in c.lineality() {
        let p = r.point(&to_f64(v));
        dirs.extend([angle(p), angle((-p.0, -p.1))]);
    }
    dirs.sort_by(f64::total_cmp);
    dirs.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    if dirs.is_empty() {
        return (0.0, 2.0 * PI);
    }
    for k in 0..dirs.len() {
        let a = dirs[k];
        let b = if k + 1 < dirs.len() { dirs[k + 1] } else { dirs[0] + 2.0 * PI };
        let mid = (a + b) / 2.0;
        if !contains_direction(c, r.dual((mid.cos(), mid.sin()))) {
            return (b, 2.0 * PI - (b - a));
        }
    }
    (0.0, 2.0 * PI)
}

/// Renders the maximal cones as filled sectors, the rays, the origin and a legend.
pub fn render_svg(d: &RootDatum, f: &TypePrefan) -> String {
    let r = Realization::new(d);
    let height = SIZE + 24.0 * f.prefan.len() as f64;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(SIZE),
        num(height),
        num(SIZE),
        num(height)
    );
    let _ = writeln!(s, r#"<title>{} t={}</title>"#, esc(&d.label()), esc(&f.t.to_string()));
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#, num(SIZE), num(height));
    let maximal = f.prefan.maximal_indices();
    for (k, &i) in maximal.iter().enumerate() {
        let c = f.prefan.cone(i);
        let (start, width) = sector(&r, c);
        let steps = ((width / (PI / 36.0)).ceil() as usize).max(1);
        let mut pts = Vec::new();
        if width < 2.0 * PI - 1e-9 {
            pts.push(screen((0.0, 0.0)));
        }
        for j in 0..=steps {
            let t = start + width * j as f64 / steps as f64;
            pts.push(screen((RADIUS * t.cos(), RADIUS * t.sin())));
        }
        let path: Vec<String> = pts.iter().map(|p| format!("{},{}", num(p.0), num(p.1))).collect();
        let _ = writeln!(
            s,
            r##"<polygon points="{}" fill="{}" stroke="#555555" stroke-width="0.5"><title>stratum {i}</title></polygon>"##,
            path.join(" "),
            PALETTE[k % PALETTE.len()]
        );
        let mid = start + width / 2.0;
        let lp = screen((0.6 * RADIUS * mid.cos(), 0.6 * RADIUS * mid.sin()));
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{i}</text>"#, num(lp.0), num(lp.1));
    }
    for (i, c) in f.prefan.cones().iter().enumerate() {
        if c.dim() != 1 || maximal.contains(&i) {
            continue;
        }
        let dims = c.rays().first().or_else(|| c.lineality().first());
        let Some(v) = dims else { continue };
        let p = r.point(&to_f64(v));
        let norm = (p.0 * p.0 + p.1 * p.1).sqrt();
        let e = (p.0 / norm, p.1 / norm);
        let ends: Vec<(f64, f64)> = if c.rays().is_empty() { vec![(-e.0, -e.1), e] } else { vec![(0.0, 0.0), e] };
        let a = screen((RADIUS * ends[0].0, RADIUS * ends[0].1));
        let b = screen((RADIUS * ends[1].0, RADIUS * ends[1].1));
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2"><title>stratum {i}</title></line>"#,
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1)
        );
        let lp = screen(((RADIUS + 16.0) * e.0, (RADIUS + 16.0) * e.1));
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{i}</text>"#, num(lp.0), num(lp.1));
    }
    let o = screen((0.0, 0.0));
    let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="black"><title>stratum {}</title></circle>"#, num(o.0), num(o.1), f.prefan.lineality_index());
    for (i, l) in f.labels.iter().enumerate() {
        let y = SIZE + 18.0 + 24.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<text x="20" y="{}" font-family="sans-serif" font-size="13">{i}: dim {} {}</text>"#,
            num(y),
            f.prefan.cone(i).dim(),
            esc(&l.describe(d))
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use weylscope::root_data::TypeLabel;
    use weylscope::type_geometry::prefan_of_type;

    fn doc(name: &str, t: &[usize]) -> String {
        let d = RootDatum::named(name).unwrap();
        let f = prefan_of_type(&d, &TypeLabel::from_indices(t.iter().copied()), 100).unwrap();
        render_svg(&d, &f)
    }

    #[test]
    fn sector_counts() {
        assert_eq!(doc("A2", &[0]).matches("<polygon").count(), 3);
        assert_eq!(doc("A2", &[0]).matches("<line").count(), 3);
        assert_eq!(doc("A2", &[]).matches("<polygon").count(), 6);
        assert_eq!(doc("G2", &[]).matches("<polygon").count(), 12);
        assert_eq!(doc("A1xA1", &[1]).matches("<polygon").count(), 2);
    }

    #[test]
    fn deterministic() {
        assert_eq!(doc("B2", &[1]), doc("B2", &[1]));
        assert!(!doc("G2", &[0]).contains("NaN"));
    }

    #[test]
    fn realization_pairs_roots() {
        let d = RootDatum::named("G2").unwrap();
        let r = Realization::new(&d);
        let x = r.point(&[3.0, -2.0]);
        let u = r.dual(x);
        assert!((u[0] - 3.0).abs() < 1e-9 && (u[1] + 2.0).abs() < 1e-9);
    }
}
