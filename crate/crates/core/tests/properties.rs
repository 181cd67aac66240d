use proptest::prelude::*;

use vtpoly::candmap::{all_symbols, build_candidate_map, circuit_property, validate_symbol, CandidateMap, OrbitSymbol};
use vtpoly::geometry::{
    axis_pierces_triangle, det3, ratio, triangle_intersection_class, Coordinate3, Rational, Triangle,
};
use vtpoly::geomiso::{tetrahedral_normalizer, transform_map};
use vtpoly::realize::{
    case_formulas, cross_validate_m2, is_axis_point, m2_case_analysis, m2_symbols, verify_realization, Region,
};
use vtpoly::rotgroup::build_tetrahedral_group;

fn syms(lines: &[&[&str]]) -> Vec<OrbitSymbol> {
    lines.iter().map(|l| validate_symbol(l).unwrap()).collect()
}

fn named_maps() -> Vec<Vec<OrbitSymbol>> {
    vec![
        syms(&[&["Y1", "Y4", "I1"], &["Y1i"], &["Y4i"]]),
        syms(&[&["Y1", "Y4", "I1"], &["Y1i", "I3", "Y3i"], &["Y4i"], &["Y3"]]),
        m2_symbols(),
    ]
}

fn build(symbols: &[OrbitSymbol]) -> CandidateMap {
    build_candidate_map(symbols, &build_tetrahedral_group()).unwrap()
}

fn small_int() -> impl Strategy<Value = i64> {
    -9i64..=9
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=15).prop_map(|(n, d)| ratio(n, d))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=15).prop_map(|(n, d)| ratio(n, d))
}

fn int_point() -> impl Strategy<Value = Coordinate3> {
    (small_int(), small_int(), small_int()).prop_map(|(a, b, c)| Coordinate3::from_ints([a, b, c]))
}

fn rational_point() -> impl Strategy<Value = Coordinate3> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| Coordinate3::new(a, b, c))
}

fn generic_base() -> impl Strategy<Value = Coordinate3> {
    rational_point().prop_filter("off the axes", |p| !p.is_zero() && !is_axis_point(p))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (int_point(), int_point(), int_point()).prop_filter_map("degenerate", |(a, b, c)| Triangle::new(a, b, c).ok())
}

fn scaled(t: &Triangle, k: &Rational) -> Triangle {
    let [a, b, c] = t.corners();
    Triangle::new(a.scale(k), b.scale(k), c.scale(k)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn det3_is_alternating_and_cubic(a in rational_point(), b in rational_point(), c in rational_point(), k in positive_rational()) {
        prop_assert_eq!(det3(&b, &a, &c), -det3(&a, &b, &c));
        let k3 = &k * &k * &k;
        prop_assert_eq!(det3(&a.scale(&k), &b.scale(&k), &c.scale(&k)), det3(&a, &b, &c) * k3);
    }

    #[test]
    fn piercing_is_homogeneous(p in int_point(), t in triangle(), k in positive_rational()) {
        prop_assume!(!p.is_zero());
        let verdict = axis_pierces_triangle(&p, &t).unwrap();
        prop_assert_eq!(axis_pierces_triangle(&-&p, &t).unwrap(), verdict);
        prop_assert_eq!(axis_pierces_triangle(&p.scale(&k), &t).unwrap(), verdict);
        prop_assert_eq!(axis_pierces_triangle(&p, &scaled(&t, &k)).unwrap(), verdict);
    }

    #[test]
    fn intersection_class_is_symmetric_and_scale_free(t1 in triangle(), t2 in triangle(), k in positive_rational()) {
        let class = triangle_intersection_class(&t1, &t2);
        prop_assert_eq!(triangle_intersection_class(&t2, &t1), class);
        prop_assert_eq!(triangle_intersection_class(&scaled(&t1, &k), &scaled(&t2, &k)), class);
        prop_assert_eq!(triangle_intersection_class(&t1.reversed(), &t2), class);
    }

    #[test]
    fn first_case_sign_remark(base in rational_point()) {
        // two negative values force the third positive, for the first case;
        // mirrored for the second
        let f = case_formulas(&base);
        let neg = f[0].iter().filter(|x| *x < &Rational::from_integer(0.into())).count();
        if neg >= 2 {
            prop_assert_eq!(neg, 2);
            prop_assert!(f[0].iter().any(|x| x > &Rational::from_integer(0.into())));
        }
        let pos = f[1].iter().filter(|x| *x > &Rational::from_integer(0.into())).count();
        if pos >= 2 {
            prop_assert_eq!(pos, 2);
            prop_assert!(f[1].iter().any(|x| x < &Rational::from_integer(0.into())));
        }
    }

    #[test]
    fn regions_are_exclusive_and_exhaustive(base in generic_base()) {
        let v = m2_case_analysis(&base).unwrap();
        let e = &v.region_expressions;
        let zero = Rational::from_integer(0.into());
        let r1 = e[0] < zero;
        let r2 = e[1] < zero && e[2] < zero;
        let r3 = e[3] < zero && e[4] < zero;
        prop_assert!([r1, r2, r3].iter().filter(|x| **x).count() <= 1);
        match v.region {
            Region::R1 => prop_assert!(r1),
            Region::R2 => prop_assert!(r2 && !r1),
            Region::R3 => prop_assert!(r3 && !r1 && !r2),
            Region::R4 => prop_assert!(!r1 && !r2 && !r3),
            Region::Boundary => prop_assert!(e.contains(&zero)),
        }
        prop_assert!(!v.cases.is_empty());
        for case in &v.cases {
            prop_assert!(v.condition_holds(*case));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn case_analysis_and_verifier_agree(base in generic_base()) {
        prop_assert_eq!(cross_validate_m2(&base), Ok(true));
    }

    #[test]
    fn verdict_is_equivariant_under_rotations(which in 0usize..3, a in 0usize..24, base in int_point()) {
        prop_assume!(!base.is_zero());
        let symbols = &named_maps()[which];
        let g = &tetrahedral_normalizer().orientation_preserving()[a];
        let moved = transform_map(symbols, g).unwrap();
        let before = verify_realization(&build(symbols), &base);
        let after = verify_realization(&build(&moved), &base.act(g));
        prop_assert_eq!(before.verdict, after.verdict);
    }

    #[test]
    fn verdict_is_scale_free(which in 0usize..3, base in int_point(), k in positive_rational()) {
        prop_assume!(!base.is_zero());
        let map = build(&named_maps()[which]);
        prop_assert_eq!(
            verify_realization(&map, &base).verdict,
            verify_realization(&map, &base.scale(&k)).verdict
        );
    }

    #[test]
    fn mirror_image_keeps_the_verdict(which in 0usize..3, base in int_point()) {
        prop_assume!(!base.is_zero());
        let symbols = &named_maps()[which];
        let mirrored: Vec<OrbitSymbol> = symbols.iter().map(|s| s.reversed()).collect();
        prop_assert_eq!(
            verify_realization(&build(symbols), &base).verdict,
            verify_realization(&build(&mirrored), &-&base).verdict
        );
    }

    #[test]
    fn circuit_verdict_ignores_rotation_and_relabeling(
        picks in proptest::collection::btree_set(0usize..42, 1..6),
        shift in 0usize..3,
        relabel in 0usize..24,
    ) {
        let all = all_symbols();
        let chosen: Vec<OrbitSymbol> = picks.iter().map(|&i| all[i]).collect();
        let verdict = circuit_property(&chosen).is_some();
        let rotated: Vec<OrbitSymbol> = chosen
            .iter()
            .map(|s| {
                let names: Vec<String> = s.entries().iter().map(|c| c.name().to_string()).collect();
                let k = shift % names.len();
                let turned: Vec<String> = names[k..].iter().chain(&names[..k]).cloned().collect();
                validate_symbol(&turned).unwrap()
            })
            .collect();
        prop_assert_eq!(circuit_property(&rotated).is_some(), verdict);
        let g = &tetrahedral_normalizer().orientation_preserving()[relabel];
        let conjugated = transform_map(&chosen, g).unwrap();
        prop_assert_eq!(circuit_property(&conjugated).is_some(), verdict);
    }
}
