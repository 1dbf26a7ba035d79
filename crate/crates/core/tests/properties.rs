use ncluster::io::{parse_document, Document};
use ncluster::oracle::{cell_walk_predecessor, enumerated_crosses};
use ncluster::{
    check_pair, ext1_case, ext_dim, ext_profile, ext_triangle, hom_dim, predecessor, rotate_arc,
    rotate_arc_inverse, Arc, ArcSet, DividerSet, ExtCase, FountainFamily, ModelParams, Window,
};
use proptest::prelude::*;

fn admissible(n: i64) -> impl Strategy<Value = Arc> {
    (-20i64..20, 1i64..6).prop_map(move |(t, j)| Arc::new(t, t + 1 + n * j).unwrap())
}

fn params_and_pair() -> impl Strategy<Value = (ModelParams, Arc, Arc)> {
    (1i64..=5).prop_flat_map(|n| {
        (
            Just(ModelParams::new(n).unwrap()),
            admissible(n),
            admissible(n),
        )
    })
}

fn family() -> impl Strategy<Value = FountainFamily> {
    prop_oneof![
        (-10i64..10, 1i64..8).prop_map(|(p, d)| FountainFamily::LeftFan { p, s_max: p - d }),
        (-10i64..10, 1i64..8).prop_map(|(p, d)| FountainFamily::RightFan { p, u_min: p + d }),
        (-10i64..10, 1i64..8).prop_map(|(k, d)| FountainFamily::Band {
            k_max: k,
            l_min: k + d
        }),
        (-10i64..10).prop_map(|p| FountainFamily::HalfLeft { p }),
        (-10i64..10).prop_map(|q| FountainFamily::HalfRight { q }),
    ]
}

proptest! {
    #[test]
    fn crossing_is_symmetric_and_detected_by_ext((p, a, b) in params_and_pair()) {
        prop_assert_eq!(a.crosses(&b), b.crosses(&a));
        let any = ext_profile(&a, &b, &p).unwrap().contains(&1);
        prop_assert_eq!(any, a.crosses(&b));
    }

    #[test]
    fn serre_duality((p, x, y) in params_and_pair()) {
        let n = p.n();
        for i in 1..=n {
            prop_assert_eq!(ext_dim(&x, &y, i, &p).unwrap(), ext_dim(&y, &x, n + 1 - i, &p).unwrap());
        }
        prop_assert_eq!(hom_dim(&x, &y, &p).unwrap(), hom_dim(&y, &x.serre(&p), &p).unwrap());
    }

    #[test]
    fn hom_is_shifted_ext((p, x, y) in params_and_pair()) {
        // Hom(x,y) = Ext^1(x, Σ^{-1} y)
        prop_assert_eq!(hom_dim(&x, &y, &p).unwrap(), ext_dim(&x, &y.shift(-1), 1, &p).unwrap());
    }

    #[test]
    fn triangles_have_admissible_middle((p, x, y) in params_and_pair()) {
        if ext1_case(&x, &y, &p).unwrap().kind != ExtCase::Zero {
            let tri = ext_triangle(&x, &y, &p).unwrap();
            prop_assert_eq!(tri.left, y);
            prop_assert_eq!(tri.right, x);
            for m in tri.middle() {
                prop_assert!(m.is_admissible(&p));
            }
        } else {
            prop_assert!(ext_triangle(&x, &y, &p).is_err());
        }
    }

    #[test]
    fn family_crossing_matches_enumeration(f in family(), n in 1i64..=4, a_seed in (-12i64..12, 1i64..5)) {
        let p = ModelParams::new(n).unwrap();
        let a = Arc::new(a_seed.0, a_seed.0 + 1 + n * a_seed.1).unwrap();
        let set = ArcSet::from_parts(p, [], [f]).unwrap();
        // Any crossing is witnessed by a member with both endpoints within
        // a few periods of the anchors.
        let wide = Window::new(-60, 60).unwrap();
        prop_assert_eq!(set.crosses(&a).unwrap(), enumerated_crosses(&a, &set, &wide));
    }

    #[test]
    fn rotation_round_trip(n in 1i64..=4, d_seed in (-6i64..6, 1i64..4), a in (-15i64..15, 1i64..6)) {
        let p = ModelParams::new(n).unwrap();
        let div = Arc::new(d_seed.0, d_seed.0 + 1 + n * d_seed.1).unwrap();
        let arc = Arc::new(a.0, a.0 + 1 + n * a.1).unwrap();
        prop_assume!(arc != div && !arc.crosses(&div));
        let d = DividerSet::new(p, [div]).unwrap();
        let b = rotate_arc(&arc, &d).unwrap();
        prop_assert!(b.is_admissible(&p) && !b.crosses(&div));
        prop_assert_eq!(rotate_arc_inverse(&b, &d).unwrap(), arc);
        prop_assert_eq!(
            Some(predecessor(arc.t(), &arc, &d).unwrap()),
            cell_walk_predecessor(arc.t(), &arc, &[div])
        );
    }

    #[test]
    fn document_round_trip(
        n in 1i64..=4,
        seeds in prop::collection::vec((-10i64..10, 1i64..4), 0..5),
        fams in prop::collection::vec(family(), 0..3),
    ) {
        let p = ModelParams::new(n).unwrap();
        let arcs = seeds.into_iter().map(|(t, j)| Arc::new(t, t + 1 + n * j).unwrap());
        let mut doc = Document::new(p);
        doc.sets.insert("S".into(), ArcSet::from_parts(p, arcs, fams).unwrap());
        let back = parse_document(doc.to_json().as_bytes()).unwrap();
        prop_assert_eq!(back, doc);
    }
}

#[test]
fn pair_check_conditions_swap() {
    let p = ModelParams::new(3).unwrap();
    let w = Window::new(-20, 20).unwrap();
    let x = ArcSet::from_arcs(p, [Arc::new(-4, 3).unwrap()]).unwrap();
    let y = ArcSet::from_arcs(p, [Arc::new(-1, 6).unwrap()]).unwrap();
    let a = check_pair(&x, &y, &w).unwrap();
    let b = check_pair(&y, &x, &w).unwrap();
    assert_eq!(a.x_equals_nc_y, b.y_equals_nc_x);
    assert_eq!(a.y_equals_nc_x, b.x_equals_nc_y);
}
