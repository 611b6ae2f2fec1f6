use diffeo_core::catalog;
use diffeo_core::forms::{PresentedForm, PresentedSection, SectionKind};
use diffeo_core::linalg::{frac, Rational};
use diffeo_core::multilinear::binomial;
use diffeo_core::{GermPresentation, Poly, PolyForm, PolyMap};
use diffeo_kit::{parse_document, parse_presentation, print_document, print_presentation, Document};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    prop_oneof![2 => Just(frac(0, 1)), 2 => (-3i64..=3).prop_map(|n| frac(n, 1)), 2 => (-40i64..=40, 1i64..=12).prop_map(|(n, d)| frac(n, d))]
}

fn poly(n: usize, pointed: bool) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((proptest::collection::vec(0u32..=3, n), rat()), 0..=4).prop_map(move |terms| {
        let terms = terms.into_iter().filter(|(e, _)| !(pointed && e.iter().all(|&x| x == 0)));
        Poly::from_terms(n, terms)
    })
}

fn poly_map(n: usize, m: usize, pointed: bool) -> impl Strategy<Value = PolyMap> {
    proptest::collection::vec(poly(n, pointed), m).prop_map(move |ps| PolyMap::new(n, ps).unwrap())
}

fn poly_form(n: usize, k: usize) -> impl Strategy<Value = PolyForm> {
    proptest::collection::vec(poly(n, false), binomial(n, k)).prop_map(move |cs| PolyForm::new(n, k, cs).unwrap())
}

/// Presentations exercising every directive; not necessarily valid.
fn document() -> impl Strategy<Value = Document> {
    (proptest::collection::vec(0usize..=3, 1..=4), any::<bool>(), 0usize..=3)
        .prop_flat_map(|(dims, wedge, amb)| {
            let c = dims.len();
            let arrows = proptest::collection::vec((0..c, 0..c), 0..=3).prop_flat_map({
                let dims = dims.clone();
                move |ends| {
                    let maps: Vec<_> = ends.iter().map(|&(s, t)| poly_map(dims[s], dims[t], true)).collect();
                    (Just(ends), maps)
                }
            });
            let embeds: Vec<_> = dims.iter().map(|&d| poly_map(d, amb, true)).collect();
            let form_deg = 0usize..=2;
            let forms = form_deg.prop_flat_map({
                let dims = dims.clone();
                move |k| {
                    let comps: Vec<_> = dims.iter().map(|&d| poly_form(d, k)).collect();
                    (Just(k), comps)
                }
            });
            let sections: Vec<_> = dims.iter().map(|&d| poly_map(d, d, false)).collect();
            let point = proptest::option::of(proptest::collection::vec(rat(), 0..=3));
            (Just(dims), Just(wedge), Just(amb), arrows, proptest::option::of(embeds), forms, sections, point)
        })
        .prop_map(|(dims, wedge, amb, (ends, maps), embeds, (k, comps), sections, point)| {
            let mut p = GermPresentation::new("random space").with_wedge(wedge);
            for (i, &d) in dims.iter().enumerate() {
                p = p.with_chart(format!("c{i}"), d);
            }
            for (n, ((s, t), m)) in ends.into_iter().zip(maps).enumerate() {
                p = p.with_arrow(format!("a{n}"), &format!("c{s}"), &format!("c{t}"), m).unwrap();
            }
            if let Some(e) = embeds {
                p = p.with_ambient(amb, e);
            }
            let form = PresentedForm::new("w", k, comps);
            let section = PresentedSection {
                name: "s".into(),
                kind: if point.is_some() { SectionKind::Cotangent } else { SectionKind::Tangent },
                components: sections,
                point,
            };
            Document {
                presentation: p,
                forms: vec![form],
                sections: vec![section],
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(d in document()) {
        let text = print_document(&d);
        let back = parse_document(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(back, d);
    }

    #[test]
    fn printing_is_a_fixed_point(d in document()) {
        let once = print_document(&d);
        let twice = print_document(&parse_document(&once).unwrap());
        prop_assert_eq!(once, twice);
    }
}

#[test]
fn every_catalog_space_round_trips() {
    let cases: &[(&str, &[(&str, &str)])] = &[
        ("euclidean", &[("n", "0")]),
        ("euclidean", &[("n", "3")]),
        ("wedge_lines", &[("m", "1")]),
        ("wedge_lines", &[("m", "4")]),
        ("wedge_lines", &[("m", "2"), ("branch", "2"), ("offset", "-7/3")]),
        ("axes_subset", &[]),
        ("z2_quotient", &[]),
        ("spaghetti", &[("m", "6")]),
    ];
    for (name, params) in cases {
        let params: Vec<(String, String)> = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        let p = catalog::build_catalog_space(name, &params).unwrap().presentation;
        assert_eq!(parse_presentation(&print_presentation(&p)).unwrap(), p, "{name}");
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# glued axes\n\nspace axes # trailing\nwedge\nchart o : R^0\n  chart x : R^1   # indented\narrow i : o -> x = []\n";
    let d = parse_document(text).unwrap();
    let expected = GermPresentation::new("axes")
        .with_wedge(true)
        .with_chart("o", 0)
        .with_chart("x", 1)
        .with_arrow("i", "o", "x", PolyMap::zero(0, 1))
        .unwrap();
    assert_eq!(d.presentation, expected);
}

fn err(text: &str) -> (usize, usize, String) {
    let e = parse_document(text).unwrap_err();
    (e.line, e.column, e.message)
}

#[test]
fn syntax_errors_point_at_the_offending_column() {
    let (l, c, _) = err("chart x : R^");
    assert_eq!((l, c), (1, 13));
    let (l, c, _) = err("chart x R^1");
    assert_eq!((l, c), (1, 9));
    let (l, c, _) = err("chart x : R^1\narrow a : x -> x = [s1 +]");
    assert_eq!((l, c), (2, 25));
    let (l, c, _) = err("chart x : R^1\narrow a : x -> x = [(s1]");
    assert_eq!((l, c), (2, 24));
    let (l, c, m) = err("chart x : R^1\n\nbogus 1");
    assert_eq!((l, c), (3, 1));
    assert!(m.contains("unknown directive"));
}

#[test]
fn semantic_errors_are_named() {
    let (_, _, m) = err("chart x : R^1\narrow a : x -> y = [s1]");
    assert!(m.contains("unknown chart `y`"), "{m}");
    let (_, _, m) = err("chart x : R^1\nchart x : R^2");
    assert!(m.contains("already defined"), "{m}");
    let (_, _, m) = err("chart x : R^2\nchart y : R^1\narrow a : x -> y = [s1, s2]");
    assert!(m.contains("needs 1 components, got 2"), "{m}");
    let (_, _, m) = err("chart x : R^1\nambient 2\nembed x = [s1]");
    assert!(m.contains("needs 2 components"), "{m}");
    let (l, _, m) = err("chart x : R^1\nchart y : R^1\nambient 2\nembed x = [s1, 0]");
    assert_eq!(l, 3);
    assert!(m.contains("`y` has no `embed`"), "{m}");
    let (_, _, m) = err("space a\nchart x : R^2\nform w : degree 1 on a\non x : d[3]");
    assert!(m.contains("out of range"), "{m}");
}

#[test]
fn rational_literals_are_exact() {
    let d = parse_document("chart x : R^1\narrow a : x -> x = [123456789012345678901234567891/7*s1]").unwrap();
    let c = d.presentation.arrows[0].map.components()[0].linear_coeff(0);
    assert_eq!(c.to_string(), "123456789012345678901234567891/7");
}
