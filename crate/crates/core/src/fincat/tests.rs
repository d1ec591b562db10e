use std::collections::BTreeMap;

use super::*;
use crate::error::Error;

fn broken_walking_arrow() -> FinCat {
    // comp(idb, u) deliberately mapped to idb
    FinCat::new(
        vec!["a".into(), "b".into()],
        vec![
            MorInfo { id: "ida".into(), dom: "a".into(), cod: "a".into() },
            MorInfo { id: "idb".into(), dom: "b".into(), cod: "b".into() },
            MorInfo { id: "u".into(), dom: "a".into(), cod: "b".into() },
        ],
        vec![("a".into(), "ida".into()), ("b".into(), "idb".into())],
        vec![
            ("ida".into(), "ida".into(), "ida".into()),
            ("idb".into(), "idb".into(), "idb".into()),
            ("u".into(), "ida".into(), "u".into()),
            ("idb".into(), "u".into(), "idb".into()),
        ],
    )
    .unwrap()
}

#[test]
fn terminal_category_is_valid() {
    assert!(terminal_category().validate().is_empty());
}

#[test]
fn walking_arrow_is_valid() {
    assert!(walking_arrow().validate().is_empty());
}

#[test]
fn broken_identity_law_is_reported_with_witness() {
    let report = broken_walking_arrow().validate();
    assert_eq!(report.len(), 1);
    match &report[0] {
        CategoryViolation::IdentityLaw { identity, morphism, got } => {
            assert_eq!(identity, "idb");
            assert_eq!(morphism, "u");
            assert_eq!(got, "idb");
        }
        other => panic!("expected identity-law violation, got {other:?}"),
    }
}

#[test]
fn compose_identities_and_chain() {
    let t = terminal_category();
    assert_eq!(t.compose("id*", "id*").unwrap(), "id*");
    let w = walking_arrow();
    assert_eq!(w.compose("idb", "u").unwrap(), "u");
    let c3 = chain_category(3);
    assert_eq!(c3.compose("1<=2", "0<=1").unwrap(), "0<=2");
}

#[test]
fn compose_rejects_non_composable() {
    let w = walking_arrow();
    match w.compose("u", "idb") {
        Err(Error::NotComposable { g, f }) => {
            assert_eq!(g, "u");
            assert_eq!(f, "idb");
        }
        other => panic!("expected NotComposable, got {other:?}"),
    }
}

#[test]
fn opposite_is_an_involution() {
    for c in [terminal_category(), walking_arrow(), chain_category(3), discrete_category(2)] {
        assert_eq!(c.opposite().opposite(), c);
    }
}

#[test]
fn opposite_of_chain_revalidates() {
    let op = chain_category(3).opposite();
    assert!(op.validate().is_empty());
    assert_eq!(op.compose("1<=2", "2<=2").unwrap(), "1<=2");
    // reversed: 0<=1 now goes 1 -> 0, so (0<=1) ∘ (1<=2) is defined
    assert_eq!(op.compose("0<=1", "1<=2").unwrap(), "0<=2");
}

#[test]
fn terminal_is_product_unit() {
    let t = terminal_category();
    let p = FinCat::product(&t, &t);
    assert_eq!(p.object_count(), 1);
    assert_eq!(p.morphism_count(), 1);
    assert!(p.validate().is_empty());

    let w = walking_arrow();
    let wt = FinCat::product(&w, &t);
    assert_eq!(wt.object_count(), 2);
    assert_eq!(wt.morphism_count(), 3);
    assert!(wt.validate().is_empty());
}

#[test]
fn arrow_squared_is_commuting_square() {
    let w = walking_arrow();
    let p = FinCat::product(&w, &w);
    assert_eq!(p.object_count(), 4);
    assert_eq!(p.morphism_count(), 9);
    assert!(p.validate().is_empty());
    let (p1, p2) = FinCat::product_projections(&p, &w, &w);
    assert!(p1.validate().is_empty());
    assert!(p2.validate().is_empty());
}

#[test]
fn empty_category_is_valid_and_closed_under_ops() {
    let e = FinCat::new(vec![], vec![], vec![], vec![]).unwrap();
    assert!(e.validate().is_empty());
    assert_eq!(e.opposite(), e);
    let p = FinCat::product(&e, &walking_arrow());
    assert_eq!(p.object_count(), 0);
    assert!(p.validate().is_empty());
}

#[test]
fn identity_inference_from_comp_table() {
    let w = walking_arrow();
    let inferred = FinCat::from_comp_table(
        w.objects().to_vec(),
        w.morphisms().to_vec(),
        vec![
            ("ida".into(), "ida".into(), "ida".into()),
            ("idb".into(), "idb".into(), "idb".into()),
            ("u".into(), "ida".into(), "u".into()),
            ("idb".into(), "u".into(), "u".into()),
        ],
    )
    .unwrap();
    assert_eq!(inferred, w);
}

#[test]
fn identity_inference_fails_without_neutral_candidate() {
    // single object with one non-neutral endomorphism cannot be a category
    let objects = vec!["x".to_string()];
    let morphisms = vec![MorInfo { id: "e".into(), dom: "x".into(), cod: "x".into() }];
    let err = FinCat::from_comp_table(objects, morphisms, vec![]).unwrap_err();
    assert!(matches!(err, Error::InvalidPresentation(_)));
}

#[test]
fn functor_validation_examples() {
    let w = walking_arrow();
    assert!(identity_functor(&w).validate().is_empty());
    let constant = FunctorRep::constant(w.clone(), w.clone(), "b").unwrap();
    assert!(constant.validate().is_empty());

    // map u to ida: boundary breaks
    let mut mor_map = BTreeMap::new();
    mor_map.insert("ida".to_string(), "ida".to_string());
    mor_map.insert("idb".to_string(), "idb".to_string());
    mor_map.insert("u".to_string(), "ida".to_string());
    let obj_map: BTreeMap<_, _> =
        [("a".to_string(), "a".to_string()), ("b".to_string(), "b".to_string())].into();
    let bad = FunctorRep::new(w.clone(), w, obj_map, mor_map).unwrap();
    let report = bad.validate();
    assert!(report
        .iter()
        .any(|v| matches!(v, FunctorViolation::Boundary { morphism, .. } if morphism == "u")));
}

#[test]
fn nat_trans_algebra_examples() {
    let w = walking_arrow();
    let idf = identity_functor(&w);
    let id_nat = NatTransRep::identity(&idf);
    let composed = vertical_compose(&id_nat, &id_nat).unwrap();
    assert_eq!(composed, id_nat);
    assert!(composed.validate().is_empty());

    // whisker along the identity functor leaves components unchanged
    let whiskered = whisker_left(&id_nat, &idf).unwrap();
    assert_eq!(whiskered.component("a"), id_nat.component("a"));
    assert!(whiskered.validate().is_empty());

    // whisker with a constant functor collapses all components to an identity
    let constant = FunctorRep::constant(w.clone(), w.clone(), "b").unwrap();
    let collapsed = whisker_right(&constant, &id_nat).unwrap();
    assert_eq!(collapsed.component("a"), "idb");
    assert_eq!(collapsed.component("b"), "idb");
    assert!(collapsed.validate().is_empty());
}

#[test]
fn nat_trans_shape_errors() {
    let w = walking_arrow();
    let t = terminal_category();
    let idw = identity_functor(&w);
    let idt = identity_functor(&t);
    let err = vertical_compose(&NatTransRep::identity(&idt), &NatTransRep::identity(&idw));
    assert!(matches!(err, Err(Error::ShapeMismatch(_))));
}

fn iso_pair_category() -> FinCat {
    // two objects with a chosen isomorphism pair between them
    FinCat::new(
        vec!["a".into(), "a'".into()],
        vec![
            MorInfo { id: "ida".into(), dom: "a".into(), cod: "a".into() },
            MorInfo { id: "ida'".into(), dom: "a'".into(), cod: "a'".into() },
            MorInfo { id: "s".into(), dom: "a".into(), cod: "a'".into() },
            MorInfo { id: "t".into(), dom: "a'".into(), cod: "a".into() },
        ],
        vec![("a".into(), "ida".into()), ("a'".into(), "ida'".into())],
        vec![
            ("ida".into(), "ida".into(), "ida".into()),
            ("ida'".into(), "ida'".into(), "ida'".into()),
            ("s".into(), "ida".into(), "s".into()),
            ("ida'".into(), "s".into(), "s".into()),
            ("t".into(), "ida'".into(), "t".into()),
            ("ida".into(), "t".into(), "t".into()),
            ("t".into(), "s".into(), "ida".into()),
            ("s".into(), "t".into(), "ida'".into()),
        ],
    )
    .unwrap()
}

#[test]
fn skeleton_of_skeletal_category_is_itself() {
    let c3 = chain_category(3);
    let sk = skeleton(&c3).unwrap();
    assert_eq!(sk.subcategory, c3);
    for o in c3.objects() {
        let comp = sk.counit.component(o);
        assert_eq!(comp, &format!("{o}<={o}"));
    }
}

#[test]
fn skeleton_collapses_isomorphic_pair() {
    let c = iso_pair_category();
    assert!(c.validate().is_empty());
    let sk = skeleton(&c).unwrap();
    assert_eq!(sk.subcategory.object_count(), 1);
    assert_eq!(sk.subcategory.objects()[0], "a");
    // counit component at a' is the chosen iso a -> a'
    assert_eq!(sk.counit.component("a'"), "s");
    assert!(sk.counit.validate().is_empty());
    assert!(sk.inclusion.validate().is_empty());
    assert!(sk.retraction.validate().is_empty());
}

#[test]
fn skeleton_of_discrete_category_is_identity() {
    let d = discrete_category(2);
    let sk = skeleton(&d).unwrap();
    assert_eq!(sk.subcategory, d);
}

#[test]
fn skeleton_counit_components_are_isomorphisms() {
    let c = iso_pair_category();
    let sk = skeleton(&c).unwrap();
    for o in c.objects() {
        let nu = sk.counit.component(o);
        let inv = &sk.counit_inverses[o];
        let oi = c.object_index(o).unwrap();
        let fwd = c.compose(nu, inv).unwrap();
        assert_eq!(fwd, c.morphism(c.identity_of(oi)).id);
        let there = c.morphism_index(nu).unwrap();
        let rep_obj = c.dom_index(there);
        let back = c.compose(inv, nu).unwrap();
        assert_eq!(back, c.morphism(c.identity_of(rep_obj)).id);
    }
}

#[test]
fn finset_category_composes_tables() {
    let fc = finset_category(3);
    assert!(fc.validate().is_empty());
    // f: {0,1} -> {0,1,2} = [1,2]; g: {0,1,2} -> {0} constant
    let f = "f2.3.12";
    let g = "f3.1.000";
    assert_eq!(fc.compose(g, f).unwrap(), "f2.1.00");
    let (d, c, table) = decode_finset_morphism("f2.3.12");
    assert_eq!((d, c), (2, 3));
    assert_eq!(table, vec![1, 2]);
}
