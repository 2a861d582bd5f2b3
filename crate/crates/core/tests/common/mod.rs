#![allow(dead_code)]

use std::path::PathBuf;

use orbeuler::localsing::LocalSingularity;
use orbeuler::pairspace::{ComponentData, Intersections, PairDescription, SingularPointData, SurfaceData};
use orbeuler::Rational;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures").join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn pair_fixture(name: &str) -> PairDescription {
    PairDescription::from_json(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Plane line arrangement with one coefficient per line. `points` lists the
/// lines through each multiple point; every pair of lines must meet in
/// exactly one listed point.
pub fn line_arrangement_pair(coeffs: &[Rational], points: &[Vec<usize>]) -> PairDescription {
    let components = coeffs
        .iter()
        .enumerate()
        .map(|(i, a)| ComponentData {
            id: format!("L{i}"),
            a: a.clone(),
            genus: 0,
            intersections: Intersections::Degree(1),
        })
        .collect();
    let points = points
        .iter()
        .enumerate()
        .map(|(j, lines)| SingularPointData {
            id: format!("P{j}"),
            local: LocalSingularity::ordinary(lines.iter().map(|&i| coeffs[i].clone()).collect()).unwrap(),
            incident: lines.iter().map(|&i| (format!("L{i}"), 1)).collect(),
            m_p: None,
        })
        .collect();
    let pair = PairDescription { surface: SurfaceData::plane(), components, points, effective: false };
    pair.validate().unwrap();
    pair
}

/// `k` lines in general position: only double points.
pub fn general_lines(coeffs: &[Rational]) -> PairDescription {
    let k = coeffs.len();
    let mut points = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            points.push(vec![i, j]);
        }
    }
    line_arrangement_pair(coeffs, &points)
}

/// `p` concurrent lines plus `g` further lines in general position.
pub fn pencil_plus_general(coeffs: &[Rational], p: usize) -> PairDescription {
    let k = coeffs.len();
    let mut points = vec![(0..p).collect::<Vec<_>>()];
    for i in 0..k {
        for j in i + 1..k {
            if j >= p {
                points.push(vec![i, j]);
            }
        }
    }
    line_arrangement_pair(coeffs, &points)
}

/// The Fermat arrangement `(x^m - y^m)(y^m - z^m)(z^m - x^m)` with
/// a single coefficient on every line.
pub fn fermat_pair(m: usize, a: &Rational) -> PairDescription {
    // lines: x = w y (block 0), y = w z (block 1), z = w x (block 2), w^m = 1
    let line = |block: usize, s: usize| block * m + s;
    let mut points: Vec<Vec<usize>> = Vec::new();
    // the coordinate vertices, where a whole block meets
    for block in 0..3 {
        points.push((0..m).map(|s| line(block, s)).collect());
    }
    // triple points: x = w^s y, y = w^t z, z = w^u x with s + t + u = 0 mod m
    for s in 0..m {
        for t in 0..m {
            let u = (2 * m - s - t) % m;
            points.push(vec![line(0, s), line(1, t), line(2, u)]);
        }
    }
    let coeffs = vec![a.clone(); 3 * m];
    line_arrangement_pair(&coeffs, &points)
}
