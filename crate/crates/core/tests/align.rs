mod common;

use std::collections::BTreeSet;

use common::*;
use extremamatch_core::align::{alignment_graph, cycle_match, match_paths, path_match, tuple_match};
use extremamatch_core::labeled_graph::{Label, Symbol};
use extremamatch_core::rational::{format_rational, parse_rational, ratio};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn alignment_is_the_matching_product(seed in any::<u64>(), dim in 1usize..=14, n in 1usize..=6, m in 1usize..=6) {
        let mut r = rng(seed);
        let p = random_graph(&mut r, n, dim, 0.4);
        let q = random_graph(&mut r, m, dim, 0.4);
        let ag = alignment_graph(&p, &q).unwrap();
        let pairs: BTreeSet<(usize, usize)> = ag.pairs().iter().copied().collect();
        let want: BTreeSet<(usize, usize)> = (0..n)
            .flat_map(|v| (0..m).map(move |w| (v, w)))
            .filter(|&(v, w)| tuple_match(&p.vertex(v).label, &q.vertex(w).label))
            .collect();
        prop_assert_eq!(pairs, want);
        let mut edges = BTreeSet::new();
        for pe in p.edges() {
            for se in q.edges() {
                if let (Some(a), Some(b)) = (ag.index_of(pe.from, se.from), ag.index_of(pe.to, se.to)) {
                    if tuple_match(&pe.label, &se.label) {
                        edges.insert((a, b));
                    }
                }
            }
        }
        let got: BTreeSet<(usize, usize)> = (0..ag.vertex_count()).flat_map(|a| ag.successors(a).iter().map(move |&b| (a, b))).collect();
        prop_assert_eq!(got.len(), ag.edge_count());
        prop_assert_eq!(got, edges);
    }

    #[test]
    fn witnesses_project_to_matching_paths(seed in any::<u64>(), dim in 1usize..=3) {
        let mut r = rng(seed);
        let p = random_graph(&mut r, 5, dim, 0.5);
        let q = random_graph(&mut r, 5, dim, 0.5);
        for s in 0..5 {
            for t in 0..5 {
                if let Some(w) = path_match(&p, &q, s, t).unwrap() {
                    let a = p.path_labeling(&w.pattern_path).unwrap();
                    let b = q.path_labeling(&w.search_path).unwrap();
                    prop_assert_eq!(a.len(), b.len());
                    prop_assert!(a.iter().zip(&b).all(|(x, y)| tuple_match(x, y)));
                    prop_assert_eq!(w.pattern_path.first(), Some(&s));
                    prop_assert_eq!(w.pattern_path.last(), Some(&t));
                }
            }
        }
    }

    #[test]
    fn cycle_implies_path_implies_match(seed in any::<u64>(), dim in 1usize..=2) {
        let mut r = rng(seed);
        let p = random_graph(&mut r, 4, dim, 0.5);
        let q = random_graph(&mut r, 4, dim, 0.5);
        for s in 0..4 {
            for t in 0..4 {
                let path = path_match(&p, &q, s, t).unwrap();
                if let Some(c) = cycle_match(&p, &q, s, t).unwrap() {
                    prop_assert_eq!(c.search_path.first(), c.search_path.last());
                    prop_assert!(path.is_some());
                }
                if let Some(w) = &path {
                    let ends = (*w.search_path.first().unwrap(), *w.search_path.last().unwrap());
                    prop_assert!(match_paths(&p, &q, (s, t), ends).unwrap().is_some());
                }
                let any = (0..4).any(|a| (0..4).any(|b| match_paths(&p, &q, (s, t), (a, b)).unwrap().is_some()));
                prop_assert_eq!(any, path.is_some());
            }
        }
    }

    #[test]
    fn labels_round_trip(symbols in prop::collection::vec(prop::sample::select(Symbol::ALL.to_vec()), 1..12)) {
        let label = Label::new(symbols);
        prop_assert_eq!(label.to_string().parse::<Label>().unwrap(), label);
    }

    #[test]
    fn rationals_round_trip(num in -100_000i64..100_000, den in 1i64..5000) {
        let x = ratio(num, den);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }
}
