#![allow(dead_code)]

use diffeo_core::linalg::{frac, RatMat, Rational};
use diffeo_core::multilinear::binomial;
use diffeo_core::{GermPresentation, Poly, PolyForm, PolyMap};
use proptest::prelude::*;

pub fn rat() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

/// Mostly small integers, with zeros common enough to hit rank drops.
pub fn sparse_rat() -> impl Strategy<Value = Rational> {
    prop_oneof![3 => Just(frac(0, 1)), 4 => (-2i64..=2).prop_map(|n| frac(n, 1)), 1 => rat()]
}

pub fn mat(rows: usize, cols: usize) -> impl Strategy<Value = RatMat> {
    proptest::collection::vec(sparse_rat(), rows * cols).prop_map(move |v| RatMat::from_vec(rows, cols, v))
}

pub fn any_mat(max: usize) -> impl Strategy<Value = RatMat> {
    (0..=max, 0..=max).prop_flat_map(|(r, c)| mat(r, c))
}

fn monomials(n: usize, max_deg: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    for _ in 0..max_deg {
        let mut next = out.clone();
        for m in &out {
            for i in 0..n {
                let mut e = m.clone();
                e[i] += 1;
                if !next.contains(&e) {
                    next.push(e);
                }
            }
        }
        out = next;
    }
    out
}

/// Polynomial of degree at most `max_deg`, optionally without constant term.
pub fn poly(n: usize, max_deg: u32, pointed: bool) -> impl Strategy<Value = Poly> {
    let mons: Vec<Vec<u32>> = monomials(n, max_deg)
        .into_iter()
        .filter(|e| !(pointed && e.iter().all(|&x| x == 0)))
        .collect();
    proptest::collection::vec(sparse_rat(), mons.len())
        .prop_map(move |cs| Poly::from_terms(n, mons.iter().cloned().zip(cs)))
}

pub fn poly_map(n: usize, m: usize, pointed: bool) -> impl Strategy<Value = PolyMap> {
    poly_map_of_degree(n, m, 2, pointed)
}

pub fn poly_map_of_degree(n: usize, m: usize, max_deg: u32, pointed: bool) -> impl Strategy<Value = PolyMap> {
    proptest::collection::vec(poly(n, max_deg, pointed), m).prop_map(move |ps| PolyMap::new(n, ps).unwrap())
}

pub fn poly_form(n: usize, k: usize) -> impl Strategy<Value = PolyForm> {
    proptest::collection::vec(poly(n, 2, false), binomial(n, k))
        .prop_map(move |cs| PolyForm::new(n, k, cs).unwrap())
}

/// A connected presentation with 1 to 4 charts of dimension at most 3 and
/// random pointed quadratic transition germs.
pub fn presentation() -> impl Strategy<Value = GermPresentation> {
    presentation_of_degree(2)
}

/// Like [`presentation`], with transition germs of degree at most `max_deg`.
pub fn presentation_of_degree(max_deg: u32) -> impl Strategy<Value = GermPresentation> {
    proptest::collection::vec(0usize..=3, 1..=4)
        .prop_flat_map(|dims| {
            let c = dims.len();
            let tree = proptest::collection::vec((any::<prop::sample::Index>(), any::<bool>()), c - 1);
            let extra = proptest::collection::vec((0..c, 0..c), 0..=2);
            (Just(dims), tree, extra)
        })
        .prop_flat_map(move |(dims, tree, extra)| {
            let mut ends = Vec::new();
            for (i, (j, flip)) in tree.iter().enumerate() {
                let j = j.index(i + 1);
                let child = i + 1;
                ends.push(if *flip { (child, j) } else { (j, child) });
            }
            ends.extend(extra);
            let maps: Vec<_> = ends
                .iter()
                .map(|&(s, t)| poly_map_of_degree(dims[s], dims[t], max_deg, true))
                .collect();
            (Just(dims), Just(ends), maps)
        })
        .prop_map(|(dims, ends, maps)| {
            let mut p = GermPresentation::new("random");
            for (i, d) in dims.iter().enumerate() {
                p = p.with_chart(format!("c{i}"), *d);
            }
            for (n, ((s, t), m)) in ends.into_iter().zip(maps).enumerate() {
                p = p.with_arrow(format!("a{n}"), &format!("c{s}"), &format!("c{t}"), m).unwrap();
            }
            p
        })
}
