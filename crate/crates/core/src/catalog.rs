//! Built-in presentations of the standard example spaces, each with a table
//! of expected values that the test suites recompute from scratch.
//!
//! `axes_subset` and `wedge_lines(2)` have the same germ diagram: polynomial
//! germs cannot tell the glued axes from the axes inside the plane. What
//! distinguishes them here is the ambient realization carried by
//! `axes_subset`, which is exactly what lets ambient forms such as `dx∧dy`
//! be restricted and evaluated.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{int, RatMat, Rational};
use crate::multilinear::binomial;
use crate::presentation::{filteredness, GermPresentation, PresentedMap, Tri};
use crate::symcalc::{Poly, PolyMap};
use crate::tangent::{bundle_fibre, rho_map, tangent_space, MapSummary};

/// The names accepted by [`build_catalog_space`].
pub const NAMES: [&str; 5] = ["euclidean", "wedge_lines", "axes_subset", "z2_quotient", "spaghetti"];

/// `R^n` at the origin: one chart, no arrows.
pub fn euclidean(n: usize) -> GermPresentation {
    GermPresentation::new(format!("euclidean({n})"))
        .with_chart("u", n)
        .with_ambient(n, vec![PolyMap::identity(n)])
}

fn point_arrows(mut p: GermPresentation, targets: &[String]) -> GermPresentation {
    for t in targets {
        p = p
            .with_arrow(format!("o_{t}"), "o", t, PolyMap::zero(0, 1))
            .expect("charts were just added");
    }
    p
}

/// `m` lines glued at their origins: a point chart `o` and lines
/// `x1..xm`, with the zero germ from `o` into each line.
pub fn wedge_lines(m: usize) -> GermPresentation {
    let ids: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let mut p = GermPresentation::new(format!("wedge_lines({m})")).with_chart("o", 0);
    for id in &ids {
        p = p.with_chart(id.clone(), 1);
    }
    point_arrows(p, &ids).with_wedge(true)
}

/// The wedge re-marked at the point `offset` on branch `branch`
/// (1-based, `offset != 0`). Near such a point only that branch is visible,
/// so the presentation is a single line with its point chart.
pub fn wedge_lines_at(m: usize, branch: usize, offset: &Rational) -> Result<GermPresentation> {
    if branch == 0 || branch > m {
        return Err(Error::BadParameter(format!("branch must be in 1..={m}, got {branch}")));
    }
    if num_traits::Zero::is_zero(offset) {
        return Ok(wedge_lines(m));
    }
    let id = format!("x{branch}");
    let p = GermPresentation::new(format!("wedge_lines({m})@{id}={offset}"))
        .with_chart("o", 0)
        .with_chart(id.clone(), 1);
    Ok(point_arrows(p, &[id]))
}

/// The coordinate axes inside `R^2`. Same diagram as `wedge_lines(2)`,
/// plus the embeddings `x1 ↦ (s1, 0)` and `x2 ↦ (0, s1)`.
pub fn axes_subset() -> GermPresentation {
    let s = Poly::var(1, 0);
    let z = Poly::zero(1);
    let mut p = wedge_lines(2).with_wedge(false);
    p.name = "axes_subset".into();
    p.with_ambient(
        2,
        vec![
            PolyMap::zero(0, 2),
            PolyMap::new(1, vec![s.clone(), z.clone()]).expect("arity"),
            PolyMap::new(1, vec![z, s]).expect("arity"),
        ],
    )
}

/// The inclusion of [`axes_subset`] into the plane.
pub fn axes_inclusion() -> PresentedMap {
    PresentedMap::from_ambient(&axes_subset()).expect("axes_subset carries ambient data")
}

/// `R^2 / ±1` at the image of the origin: one chart with the arrow `-id`.
pub fn z2_quotient() -> GermPresentation {
    GermPresentation::new("z2_quotient")
        .with_chart("u", 2)
        .with_arrow("neg", "u", "u", PolyMap::linear(&-&RatMat::identity(2)))
        .expect("chart u exists")
}

/// The plane seen through `m` lines of slopes `1..m` through the origin,
/// with a point chart and zero germs into each line.
pub fn spaghetti(m: usize) -> GermPresentation {
    let ids: Vec<String> = (1..=m).map(|i| format!("l{i}")).collect();
    let mut p = GermPresentation::new(format!("spaghetti({m})")).with_chart("o", 0);
    for id in &ids {
        p = p.with_chart(id.clone(), 1);
    }
    let s = Poly::var(1, 0);
    let mut embeds = vec![PolyMap::zero(0, 2)];
    for k in 1..=m {
        let k = i64::try_from(k).expect("small slope");
        embeds.push(PolyMap::new(1, vec![s.clone(), s.scale(&int(k))]).expect("arity"));
    }
    point_arrows(p, &ids).with_ambient(2, embeds)
}

/// A quantity recorded in an oracle table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    TangentDim,
    /// Dimension of the `T^k` fibre.
    BundleDim(usize),
    /// Dimension of `⋀^k T`.
    WedgeDim(usize),
    RhoInjective(usize),
    RhoSurjective(usize),
    WeaklyFiltered,
    Filtered,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::TangentDim => write!(f, "dim T"),
            Quantity::BundleDim(k) => write!(f, "dim T^{k}"),
            Quantity::WedgeDim(k) => write!(f, "dim ⋀^{k} T"),
            Quantity::RhoInjective(k) => write!(f, "rho_{k} injective"),
            Quantity::RhoSurjective(k) => write!(f, "rho_{k} surjective"),
            Quantity::WeaklyFiltered => write!(f, "weakly filtered"),
            Quantity::Filtered => write!(f, "filtered"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Dim(usize),
    Flag(bool),
    Verdict(Tri),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Dim(n) => write!(f, "{n}"),
            Value::Flag(b) => write!(f, "{}", if *b { "yes" } else { "no" }),
            Value::Verdict(t) => write!(f, "{t}"),
        }
    }
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Stated in the literature on these spaces.
    Published,
    /// Worked out by hand from the presentation.
    HandComputed,
    /// Immediate from the definitions.
    Immediate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub quantity: Quantity,
    pub expected: Value,
    pub origin: Origin,
    pub note: &'static str,
}

fn oracle(quantity: Quantity, expected: Value, origin: Origin, note: &'static str) -> Oracle {
    Oracle {
        quantity,
        expected,
        origin,
        note,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub presentation: GermPresentation,
    pub wedge_type: bool,
    pub oracles: Vec<Oracle>,
}

/// Closure depth used when the oracle table asks for filteredness.
pub const FILTER_DEPTH: usize = 4;

/// Recomputes a tabulated quantity.
pub fn evaluate(p: &GermPresentation, q: Quantity) -> Result<Value> {
    Ok(match q {
        Quantity::TangentDim => Value::Dim(tangent_space(p)?.dim),
        Quantity::BundleDim(k) => Value::Dim(bundle_fibre(p, k)?.dim),
        Quantity::WedgeDim(k) => Value::Dim(binomial(tangent_space(p)?.dim, k)),
        Quantity::RhoInjective(k) => Value::Flag(MapSummary::of(&rho_map(p, k)?).injective()),
        Quantity::RhoSurjective(k) => Value::Flag(MapSummary::of(&rho_map(p, k)?).surjective()),
        Quantity::WeaklyFiltered => Value::Verdict(filteredness(p, FILTER_DEPTH)?.weakly_filtered),
        Quantity::Filtered => Value::Verdict(filteredness(p, FILTER_DEPTH)?.filtered),
    })
}

fn param(params: &[(String, String)], key: &str) -> Option<String> {
    params.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone())
}

fn count_param(params: &[(String, String)], key: &str, default: usize, min: usize) -> Result<usize> {
    let Some(v) = param(params, key) else { return Ok(default) };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| Error::BadParameter(format!("{key} must be a non-negative integer, got `{v}`")))?;
    if n < min {
        return Err(Error::BadParameter(format!("{key} must be at least {min}, got {n}")));
    }
    Ok(n)
}

fn rational_param(params: &[(String, String)], key: &str) -> Result<Option<Rational>> {
    let Some(v) = param(params, key) else { return Ok(None) };
    let t = v.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => n.trim().parse().ok().zip(d.trim().parse().ok()).and_then(
            |(n, d): (num_bigint::BigInt, num_bigint::BigInt)| {
                (!num_traits::Zero::is_zero(&d)).then(|| Rational::new(n, d))
            },
        ),
        None => t.parse::<num_bigint::BigInt>().ok().map(Rational::from_integer),
    };
    parsed
        .map(Some)
        .ok_or_else(|| Error::BadParameter(format!("{key} must be a rational number, got `{v}`")))
}

fn check_keys(params: &[(String, String)], allowed: &[&str]) -> Result<()> {
    match params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        Some((k, _)) => Err(Error::BadParameter(format!(
            "unknown parameter `{k}` (accepted: {})",
            if allowed.is_empty() { "none".to_string() } else { allowed.join(", ") }
        ))),
        None => Ok(()),
    }
}

/// Builds a catalog space from its name and `key=value` parameters.
///
/// | name          | parameters                                         |
/// |---------------|----------------------------------------------------|
/// | `euclidean`   | `n` (default 2)                                    |
/// | `wedge_lines` | `m` ≥ 1 (default 2), `branch`, `offset` (rational) |
/// | `axes_subset` | none                                               |
/// | `z2_quotient` | none                                               |
/// | `spaghetti`   | `m` ≥ 1 (default 3)                                |
pub fn build_catalog_space(name: &str, params: &[(String, String)]) -> Result<CatalogEntry> {
    use Origin::*;
    use Quantity::*;
    use Value::*;
    let (presentation, oracles) = match name {
        "euclidean" => {
            check_keys(params, &["n"])?;
            let n = count_param(params, "n", 2, 0)?;
            let mut o = vec![
                oracle(TangentDim, Dim(n), Immediate, "single chart"),
                oracle(Filtered, Verdict(Tri::Yes), Immediate, "one object, identity only"),
                oracle(WeaklyFiltered, Verdict(Tri::Yes), Immediate, "one object"),
            ];
            for k in 0..=n + 1 {
                o.push(oracle(BundleDim(k), Dim(binomial(n, k)), Immediate, "no relations"));
                o.push(oracle(RhoInjective(k), Flag(true), Published, "filtered spaces have invertible rho"));
                o.push(oracle(RhoSurjective(k), Flag(true), Published, "filtered spaces have invertible rho"));
            }
            (euclidean(n), o)
        }
        "wedge_lines" => {
            check_keys(params, &["m", "branch", "offset"])?;
            let m = count_param(params, "m", 2, 1)?;
            let branch = count_param(params, "branch", 1, 1)?;
            let offset = rational_param(params, "offset")?;
            match offset {
                Some(c) if !num_traits::Zero::is_zero(&c) => (
                    wedge_lines_at(m, branch, &c)?,
                    vec![
                        oracle(TangentDim, Dim(1), Published, "away from the wedge point the space is a line"),
                        oracle(BundleDim(2), Dim(0), Immediate, "one-dimensional charts"),
                    ],
                ),
                _ => {
                    let mut o = vec![
                        oracle(TangentDim, Dim(m), Published, "one independent direction per branch"),
                        oracle(WedgeDim(2), Dim(binomial(m, 2)), HandComputed, "binomial of the tangent dimension"),
                        oracle(BundleDim(2), Dim(0), Published, "all charts are one-dimensional"),
                        oracle(BundleDim(3), Dim(0), Immediate, "all charts are one-dimensional"),
                        oracle(Filtered, Verdict(if m == 1 { Tri::Yes } else { Tri::No }), HandComputed, "branches share no receiving chart"),
                    ];
                    if m >= 2 {
                        o.push(oracle(WeaklyFiltered, Verdict(Tri::No), Published, "no chart receives germs from two branches"));
                        o.push(oracle(RhoSurjective(2), Flag(false), Published, "T^2 vanishes while ⋀^2 T does not"));
                    }
                    (wedge_lines(m), o)
                }
            }
        }
        "axes_subset" => {
            check_keys(params, &[])?;
            (
                axes_subset(),
                vec![
                    oracle(TangentDim, Dim(2), HandComputed, "cocone of the two axis charts"),
                    oracle(BundleDim(2), Dim(0), Immediate, "one-dimensional charts"),
                    oracle(WedgeDim(2), Dim(1), Published, "the plane's area form is nonzero on the axis vectors"),
                    oracle(RhoSurjective(2), Flag(false), Published, "the dual map is not injective"),
                ],
            )
        }
        "z2_quotient" => {
            check_keys(params, &[])?;
            (
                z2_quotient(),
                vec![
                    oracle(TangentDim, Dim(0), Published, "v = -v forces v = 0"),
                    oracle(WedgeDim(2), Dim(0), Published, "wedge of the zero space"),
                    oracle(BundleDim(2), Dim(1), HandComputed, "coequalizer of id and id on R"),
                    oracle(RhoInjective(2), Flag(false), Published, "T^2 is nonzero, ⋀^2 T is zero"),
                    oracle(WeaklyFiltered, Verdict(Tri::Yes), Published, "single chart"),
                    oracle(Filtered, Verdict(Tri::No), Published, "nothing coequalizes id and -id"),
                ],
            )
        }
        "spaghetti" => {
            check_keys(params, &["m"])?;
            let m = count_param(params, "m", 3, 1)?;
            (
                spaghetti(m),
                vec![
                    oracle(TangentDim, Dim(m), HandComputed, "no arrows between distinct lines"),
                    oracle(BundleDim(2), Dim(0), Immediate, "one-dimensional charts"),
                ],
            )
        }
        _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
    };
    presentation.ensure_valid()?;
    Ok(CatalogEntry {
        name: name.to_string(),
        params: params.to_vec(),
        wedge_type: presentation.wedge,
        presentation,
        oracles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kv(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn every_oracle_matches() {
        let cases = [
            ("euclidean", kv(&[("n", "3")])),
            ("euclidean", kv(&[("n", "0")])),
            ("wedge_lines", kv(&[])),
            ("wedge_lines", kv(&[("m", "4")])),
            ("wedge_lines", kv(&[("m", "1")])),
            ("wedge_lines", kv(&[("offset", "1/2"), ("branch", "2")])),
            ("axes_subset", kv(&[])),
            ("z2_quotient", kv(&[])),
            ("spaghetti", kv(&[("m", "4")])),
        ];
        for (name, params) in cases {
            let e = build_catalog_space(name, &params).unwrap();
            for o in &e.oracles {
                assert_eq!(
                    evaluate(&e.presentation, o.quantity).unwrap(),
                    o.expected,
                    "{} {:?}: {}",
                    name,
                    params,
                    o.quantity
                );
            }
        }
    }

    #[test]
    fn rejects_bad_requests() {
        assert_eq!(
            build_catalog_space("torus", &[]).unwrap_err(),
            Error::UnknownCatalogEntry("torus".into())
        );
        assert!(matches!(build_catalog_space("spaghetti", &kv(&[("m", "0")])), Err(Error::BadParameter(_))));
        assert!(matches!(build_catalog_space("wedge_lines", &kv(&[("q", "1")])), Err(Error::BadParameter(_))));
        assert!(matches!(
            build_catalog_space("wedge_lines", &kv(&[("offset", "1"), ("branch", "3")])),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn shapes() {
        assert_eq!(wedge_lines(3).charts.len(), 4);
        assert!(wedge_lines(2).wedge);
        assert!(!axes_subset().wedge);
        assert_eq!(axes_subset().arrows, wedge_lines(2).arrows);
        assert_eq!(spaghetti(2).ambient.unwrap().embeds[2].components()[1], Poly::var(1, 0).scale(&int(2)));
    }
}
