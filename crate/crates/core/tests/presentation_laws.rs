mod common;

use common::{presentation, presentation_of_degree};
use diffeo_core::catalog;
use diffeo_core::linalg::RatMat;
use diffeo_core::presentation::{composition_closure, filteredness, validate_presentation, Arrow, Tri};
use diffeo_core::{GermPresentation, PolyMap};
use proptest::prelude::*;

/// One chart of dimension `n` with arrows drawn from the diagonal sign
/// matrices, so the arrow monoid is a finite group.
fn sign_monoid() -> impl Strategy<Value = GermPresentation> {
    (1usize..=3)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), 0..=3)))
        .prop_map(|(n, gens)| {
            let mut p = GermPresentation::new("signs").with_chart("u", n);
            for (i, g) in gens.into_iter().enumerate() {
                let mut m = RatMat::identity(n);
                for (j, neg) in g.into_iter().enumerate() {
                    if neg {
                        m[(j, j)] = -m[(j, j)].clone();
                    }
                }
                p = p.with_arrow(format!("g{i}"), "u", "u", PolyMap::linear(&m)).unwrap();
            }
            p
        })
}

fn saturate(p: &GermPresentation, depth: usize) -> GermPresentation {
    let c = composition_closure(p, depth).unwrap();
    let mut q = p.clone();
    q.arrows = c
        .arrows
        .iter()
        .enumerate()
        .map(|(n, a)| Arrow {
            id: format!("k{n}"),
            src: a.src,
            dst: a.dst,
            map: a.map.clone(),
        })
        .collect();
    q
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_idempotent(p in sign_monoid()) {
        let c = composition_closure(&p, 8).unwrap();
        prop_assert!(c.closed);
        let q = saturate(&p, 8);
        let again = composition_closure(&q, 8).unwrap();
        prop_assert!(again.closed);
        prop_assert_eq!(again.arrows.len(), c.arrows.len());
    }

    #[test]
    fn filtered_implies_weakly_filtered(p in prop_oneof![sign_monoid(), presentation_of_degree(1)]) {
        let f = filteredness(&p, 3).unwrap();
        if f.filtered == Tri::Yes {
            prop_assert_eq!(f.weakly_filtered, Tri::Yes);
        }
        if f.weakly_filtered == Tri::No {
            prop_assert_eq!(f.filtered, Tri::No);
        }
    }

    #[test]
    fn nontrivial_sign_groups_are_not_filtered(p in sign_monoid()) {
        let f = filteredness(&p, 8).unwrap();
        let nontrivial = p.arrows.iter().any(|a| a.map != PolyMap::identity(p.charts[0].dim));
        prop_assert_eq!(f.weakly_filtered, Tri::Yes);
        prop_assert_eq!(f.filtered == Tri::Yes, !nontrivial);
    }

    #[test]
    fn random_presentations_validate(p in presentation()) {
        prop_assert!(validate_presentation(&p).is_valid(), "{}", validate_presentation(&p));
    }
}

#[test]
fn catalog_spaces_validate() {
    for name in catalog::NAMES {
        let e = catalog::build_catalog_space(name, &[]).unwrap();
        assert!(validate_presentation(&e.presentation).is_valid(), "{name}");
    }
}
