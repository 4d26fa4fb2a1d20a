use proptest::prelude::*;

use schnyder::drawing::schnyder_drawing;
use schnyder::geometry::{orient, segments_intersect};
use schnyder::metrics::edge_length_metric_of;
use schnyder::planar_map::generate_stacked;
use schnyder::regions::{compute_region_data, identities_hold};
use schnyder::rng::Rng;
use schnyder::separator::{extract_best_separator, verify_separator};
use schnyder::shelling::{compute_wood, Policy};

fn policy() -> impl Strategy<Value = Policy> {
    prop_oneof![
        Just(Policy::Minimal),
        Just(Policy::Maximal),
        (1usize..8).prop_map(|k| Policy::Balanced { k }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pipeline_invariants(n in 4usize..400, seed: u64, p in policy(), alpha in 0.5f64..0.95) {
        let mut rng = Rng::new(seed);
        let tri = generate_stacked(n, &mut rng).unwrap().choose_root(&mut rng);
        let wood = compute_wood(tri.clone(), p).unwrap();
        prop_assert_eq!(wood.validate(), Ok(()));

        let regions = compute_region_data(&wood);
        let drawing = schnyder_drawing(&wood, &regions);
        for v in 0..n as u32 {
            if !tri.is_outer(v) {
                prop_assert!(identities_hold(&tri, &regions.get(v)));
                let [x, y] = drawing.coords[v as usize];
                prop_assert!(x > 0 && y > 0 && x + y < drawing.grid);
            }
        }
        if let Ok(sep) = extract_best_separator(&wood, &regions, alpha) {
            prop_assert_eq!(sep.n(), n);
            prop_assert_eq!(verify_separator(&tri, &sep), Ok(()));
        }
    }

    #[test]
    fn flips_keep_woods_valid(n in 6usize..200, seed: u64, steps in 1usize..40) {
        let mut rng = Rng::new(seed);
        let tri = generate_stacked(n, &mut rng).unwrap();
        let mut wood = compute_wood(tri, Policy::balanced()).unwrap();
        for _ in 0..steps {
            let faces = wood.oriented_faces();
            if faces.is_empty() {
                break;
            }
            wood.flip_face_in_place(faces[rng.index(faces.len())].face).unwrap();
            prop_assert_eq!(wood.validate(), Ok(()));
        }
        let (post, _) = wood.postprocess_flips();
        prop_assert!(post.balance_stats().delta0 >= wood.balance_stats().delta0);
    }

    #[test]
    fn el_is_scale_invariant(lengths in prop::collection::vec(0.1f64..100.0, 1..50), scale in 0.01f64..100.0) {
        let a = edge_length_metric_of(&lengths).unwrap();
        let scaled: Vec<f64> = lengths.iter().map(|l| l * scale).collect();
        let b = edge_length_metric_of(&scaled).unwrap();
        prop_assert!((a - b).abs() < 1e-9);
        prop_assert!(a <= 1.0 + 1e-12);
    }

    #[test]
    fn intersection_is_symmetric(p in prop::array::uniform8(-20i64..20)) {
        let (a, b, c, d) = ([p[0], p[1]], [p[2], p[3]], [p[4], p[5]], [p[6], p[7]]);
        prop_assert_eq!(segments_intersect(a, b, c, d), segments_intersect(c, d, a, b));
        prop_assert_eq!(segments_intersect(a, b, c, d), segments_intersect(b, a, d, c));
        prop_assert_eq!(orient(a, b, c), -orient(b, a, c));
    }
}
