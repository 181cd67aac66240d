mod common;

use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{run_campaign, sample, PairKind};
use vtpoly::geometry::{triangle_intersection_class, IntersectionClass};

#[test]
fn exact_classifier_agrees_with_float_oracle() {
    let mut rng = StdRng::seed_from_u64(0x7e57);
    let stats = run_campaign(4000, &mut rng);
    assert!(stats.disagreements.is_empty(), "{:?}", stats.disagreements);
    assert_eq!(stats.exact_inconsistencies, 0);
    eprintln!("decided {} band {} total {}", stats.decided, stats.band, stats.total);
    // the band should be a small minority
    assert!(stats.band * 10 < stats.total, "band {} of {}", stats.band, stats.total);
}

#[test]
fn every_kind_produces_both_outcomes() {
    let mut rng = StdRng::seed_from_u64(11);
    for kind in PairKind::ALL {
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..400 {
            let s = sample(kind, &mut rng);
            seen.insert(triangle_intersection_class(&s.t1, &s.t2).to_string());
        }
        let want: &[IntersectionClass] = match kind {
            PairKind::Generic => &[IntersectionClass::Disjoint, IntersectionClass::Nontrivial],
            PairKind::SharedVertex => &[IntersectionClass::SharedVertexOnly, IntersectionClass::Nontrivial],
            PairKind::SharedEdge => &[IntersectionClass::SharedEdgeOnly, IntersectionClass::Nontrivial],
            PairKind::Coplanar => &[
                IntersectionClass::Disjoint,
                IntersectionClass::SharedVertexOnly,
                IntersectionClass::Nontrivial,
            ],
        };
        for w in want {
            assert!(seen.contains(&w.to_string()), "{kind:?} never produced {w}");
        }
    }
}
