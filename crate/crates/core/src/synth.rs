//! Seeded synthetic polygons for tests, benchmarks and fixtures.

use rand::Rng;

use crate::geom::{Point2, Polygon, Ring};

fn sorted_angles<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    loop {
        let mut a: Vec<f64> = (0..n)
            .map(|_| rng.gen::<f64>() * std::f64::consts::TAU)
            .collect();
        a.sort_by(f64::total_cmp);
        if a.windows(2).all(|w| w[1] - w[0] > 1e-9) {
            return a;
        }
    }
}

fn ring_from_polar(cx: f64, cy: f64, polar: impl Iterator<Item = (f64, f64)>) -> Ring<f64> {
    let vertices: Vec<_> = polar
        .map(|(theta, r)| Point2::new(cx + r * theta.cos(), cy + r * theta.sin()).expect("finite"))
        .collect();
    Ring::closing(vertices).expect("distinct angles give a valid ring")
}

/// Star-shaped (generally non-convex) simple polygon with `n` vertices
/// around `(cx, cy)`, radii uniform in `[r_min, r_max]`.
pub fn star_polygon<R: Rng>(
    rng: &mut R,
    n: usize,
    cx: f64,
    cy: f64,
    r_min: f64,
    r_max: f64,
) -> Polygon<f64> {
    assert!(n >= 3 && 0.0 < r_min && r_min <= r_max);
    let angles = sorted_angles(rng, n);
    let radii: Vec<f64> = (0..n).map(|_| rng.gen_range(r_min..=r_max)).collect();
    ring_from_polar(cx, cy, angles.into_iter().zip(radii)).into()
}

/// Convex polygon with `n` vertices on the circle of radius `r`.
pub fn convex_polygon<R: Rng>(rng: &mut R, n: usize, cx: f64, cy: f64, r: f64) -> Polygon<f64> {
    assert!(n >= 3 && r > 0.0);
    let angles = sorted_angles(rng, n);
    ring_from_polar(cx, cy, angles.into_iter().map(|a| (a, r))).into()
}

/// x-monotone polygon on the integer lattice: a random top chain
/// `(i, h_i)` for `i = 0..=k` over the base `(0, 0)–(k, 0)`.
/// Vertices on integer rows make vertex-on-ray and horizontal-edge cases
/// common.
pub fn lattice_mountain<R: Rng>(rng: &mut R, k: usize, max_height: i32) -> Polygon<f64> {
    assert!(k >= 1 && max_height >= 1);
    let mut coords = vec![(0.0, 0.0), (k as f64, 0.0)];
    for i in (0..=k).rev() {
        coords.push((i as f64, rng.gen_range(1..=max_height) as f64));
    }
    coords.push((0.0, 0.0));
    Ring::from_coords(&coords)
        .expect("heights >= 1 keep the chain above the base")
        .into()
}

/// Rectilinear histogram polygon: columns of integer height `h_i >= 1`.
pub fn lattice_histogram<R: Rng>(rng: &mut R, k: usize, max_height: i32) -> Polygon<f64> {
    assert!(k >= 1 && max_height >= 1);
    let heights: Vec<f64> = (0..k)
        .map(|_| rng.gen_range(1..=max_height) as f64)
        .collect();
    let mut coords = vec![(0.0, 0.0), (k as f64, 0.0)];
    for i in (0..k).rev() {
        coords.push(((i + 1) as f64, heights[i]));
        coords.push((i as f64, heights[i]));
    }
    coords.push((0.0, 0.0));
    coords.dedup();
    Ring::from_coords(&coords).expect("valid histogram").into()
}
