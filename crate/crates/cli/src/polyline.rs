//! Sampled polylines of a plane section, for plotting only.

use std::collections::HashMap;

use ars_core::exactmath::{MultiPoly, Vec3};
use ars_core::pipeline::Plane;
use num_traits::ToPrimitive;

struct FloatPoly(Vec<(i32, i32, f64)>);

impl FloatPoly {
    fn new(p: &MultiPoly) -> Self {
        FloatPoly(p.terms().map(|(m, c)| (m.0[0] as i32, m.0[1] as i32, c.to_f64().unwrap_or(0.0))).collect())
    }

    fn eval(&self, s: f64, t: f64) -> f64 {
        self.0.iter().map(|&(i, j, c)| c * s.powi(i) * t.powi(j)).sum()
    }
}

/// Nine decimals are plenty for plotting and keep the files short.
fn round(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 { 0.0 } else { r }
}

fn float3(v: &Vec3) -> [f64; 3] {
    [0, 1, 2].map(|i| v.0[i].to_f64().unwrap_or(0.0))
}

/// Grid edge: `(i, j, vertical)` joins node `(i, j)` to `(i+1, j)`, or to
/// `(i, j+1)` when vertical.
type Edge = (usize, usize, bool);

/// Traces the zero set of `section` (in the plane coordinates of
/// [`Plane::frame`]) over a square window of half-width `extent` around the
/// foot of the plane, by marching squares on a `grid x grid` lattice.
pub fn trace(section: &MultiPoly, plane: &Plane, extent: f64, grid: usize) -> Vec<Vec<[f64; 3]>> {
    let (origin, a, b) = plane.frame();
    let (o, a, b) = (float3(&origin), float3(&a), float3(&b));
    let norm = |v: [f64; 3]| (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let (ha, hb) = (extent / norm(a), extent / norm(b));
    let f = FloatPoly::new(section);
    let coord = |i: usize, h: f64| -h + 2.0 * h * i as f64 / grid as f64;
    let values: Vec<Vec<f64>> = (0..=grid).map(|i| (0..=grid).map(|j| f.eval(coord(i, ha), coord(j, hb))).collect()).collect();

    let crossing = |e: Edge| -> (f64, f64) {
        let (i, j, vertical) = e;
        let (i2, j2) = if vertical { (i, j + 1) } else { (i + 1, j) };
        let (v1, v2) = (values[i][j], values[i2][j2]);
        let r = if v1 == v2 { 0.5 } else { v1 / (v1 - v2) };
        let s = coord(i, ha) + r * (coord(i2, ha) - coord(i, ha));
        let t = coord(j, hb) + r * (coord(j2, hb) - coord(j, hb));
        (s, t)
    };

    let mut segments: Vec<(Edge, Edge)> = Vec::new();
    for i in 0..grid {
        for j in 0..grid {
            // Corners counterclockwise from (i, j); edge k joins corner k to k+1.
            let corners = [values[i][j], values[i + 1][j], values[i + 1][j + 1], values[i][j + 1]];
            let edges: [Edge; 4] = [(i, j, false), (i + 1, j, true), (i, j + 1, false), (i, j, true)];
            let cut: Vec<usize> = (0..4).filter(|&k| (corners[k] >= 0.0) != (corners[(k + 1) % 4] >= 0.0)).collect();
            match cut.len() {
                2 => segments.push((edges[cut[0]], edges[cut[1]])),
                4 => {
                    let mid = corners.iter().sum::<f64>() / 4.0;
                    if (mid >= 0.0) == (corners[0] >= 0.0) {
                        segments.push((edges[0], edges[1]));
                        segments.push((edges[2], edges[3]));
                    } else {
                        segments.push((edges[0], edges[3]));
                        segments.push((edges[1], edges[2]));
                    }
                }
                _ => {}
            }
        }
    }

    let mut at: HashMap<Edge, Vec<usize>> = HashMap::new();
    for (k, (e1, e2)) in segments.iter().enumerate() {
        at.entry(*e1).or_default().push(k);
        at.entry(*e2).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let mut chains: Vec<Vec<Edge>> = Vec::new();
    let extend = |chain: &mut Vec<Edge>, used: &mut Vec<bool>| loop {
        let end = *chain.last().expect("nonempty chain");
        let Some(&k) = at[&end].iter().find(|&&k| !used[k]) else { break };
        used[k] = true;
        let (e1, e2) = segments[k];
        chain.push(if e1 == end { e2 } else { e1 });
    };
    for k in 0..segments.len() {
        if used[k] {
            continue;
        }
        used[k] = true;
        let mut chain = vec![segments[k].0, segments[k].1];
        extend(&mut chain, &mut used);
        chain.reverse();
        extend(&mut chain, &mut used);
        chains.push(chain);
    }

    chains
        .into_iter()
        .map(|chain| {
            chain
                .into_iter()
                .map(|e| {
                    let (s, t) = crossing(e);
                    [0, 1, 2].map(|i| round(o[i] + s * a[i] + t * b[i]))
                })
                .collect()
        })
        .collect()
}
