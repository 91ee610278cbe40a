mod common;

use common::*;
use extremamatch_core::labeled_graph::Symbol;
use extremamatch_core::rational::to_f64;
use extremamatch_core::simulate::{flow, integrate};
use extremamatch_core::switching::{build_domain_graph, build_search_graph, check_regular, fixed_point, Decomposition, EdgeRule};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sampled_parameters_are_regular(seed in any::<u64>()) {
        let (rn, z) = random_model(&mut rng(seed));
        prop_assert!(check_regular(&rn, &z).is_ok());
    }

    #[test]
    fn domain_count_is_product_of_interval_counts(seed in any::<u64>()) {
        let (rn, z) = random_model(&mut rng(seed));
        let dec = Decomposition::new(&rn, &z);
        let expected: usize = (0..rn.size()).map(|n| rn.out_edges(n).len() + 1).product();
        prop_assert_eq!(dec.domain_count(), expected);
        for (ix, d) in dec.domains().enumerate() {
            prop_assert_eq!(dec.index_of(&d), ix);
        }
    }

    #[test]
    fn conjunctive_edges_are_existential_edges(seed in any::<u64>()) {
        let (rn, z) = random_model(&mut rng(seed));
        let ex = build_domain_graph(&rn, &z, EdgeRule::Existential).unwrap();
        let conj = build_domain_graph(&rn, &z, EdgeRule::Conjunctive).unwrap();
        for e in conj.edges() {
            prop_assert!(ex.has_edge(e.from, e.to));
        }
    }

    #[test]
    fn every_wall_is_crossed_existentially(seed in any::<u64>()) {
        let (rn, z) = random_model(&mut rng(seed));
        let g = build_domain_graph(&rn, &z, EdgeRule::Existential).unwrap();
        let dec = g.decomposition();
        for d in dec.domains() {
            for n in 0..rn.size() {
                if dec.upper_edge(&d, n).is_none() {
                    continue;
                }
                let mut up = d.clone();
                up.0[n] += 1;
                let (a, b) = (dec.index_of(&d), dec.index_of(&up));
                prop_assert!(g.has_edge(a, b) || g.has_edge(b, a));
            }
        }
    }

    #[test]
    fn search_labels_follow_fixed_points(seed in any::<u64>(), conjunctive in any::<bool>()) {
        let (rn, z) = random_model(&mut rng(seed));
        let rule = if conjunctive { EdgeRule::Conjunctive } else { EdgeRule::Existential };
        let sg = build_search_graph(&rn, &z, rule).unwrap();
        let dec = sg.domain_graph().decomposition();
        let g = sg.graph();
        for v in 0..g.vertex_count() {
            let d = sg.domain(v);
            let p = sg.fixed_point(v);
            for n in 0..rn.size() {
                let above = dec.upper_edge(&d, n).map(|e| &p[n] > dec.threshold_value(e)).unwrap_or(false);
                let below = dec.lower_edge(&d, n).map(|e| &p[n] < dec.threshold_value(e)).unwrap_or(false);
                let want = if above { Symbol::I } else if below { Symbol::D } else { Symbol::Star };
                prop_assert!(!(above && below));
                prop_assert_eq!(g.vertex(v).label.get(n), want);
            }
        }
        for (edge, de) in g.edges().iter().zip(sg.domain_graph().edges()) {
            let target = rn.edges()[de.threshold_edge].target;
            for (n, &s) in edge.label.symbols().iter().enumerate() {
                if n == target {
                    prop_assert!(s == Symbol::Min || s == Symbol::Max);
                } else {
                    prop_assert_eq!(s, Symbol::Dash);
                }
            }
        }
    }

    #[test]
    fn trajectories_follow_domain_graph_edges(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (rn, z) = random_model(&mut r);
        let g = build_domain_graph(&rn, &z, EdgeRule::Existential).unwrap();
        let x0 = random_interior_point(&mut r, g.decomposition());
        let Ok(rec) = integrate(&rn, &z, &x0, 30) else { return Ok(()) };
        for step in rec.domains.windows(2) {
            prop_assert!(g.has_edge(step[0], step[1]), "{} -> {}", step[0], step[1]);
        }
    }

    #[test]
    fn motion_inside_a_domain_is_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (rn, z) = random_model(&mut r);
        let dec = Decomposition::new(&rn, &z);
        let x0 = random_interior_point(&mut r, &dec);
        let d = dec.locate(&x0).unwrap();
        let p = fixed_point(&rn, &z, &dec, &d);
        for k in 0..rn.size() {
            let (x, pk, g) = (to_f64(&x0[k]), to_f64(&p[k]), to_f64(z.gamma(k)));
            let mut prev = x;
            for i in 1..50 {
                let next = flow(x, pk, g, i as f64 * 0.1);
                prop_assert!((next - prev) * (pk - x) >= 0.0);
                prop_assert!((next - pk).abs() <= (prev - pk).abs());
                prev = next;
            }
        }
    }
}
