mod common;

use common::{all_candidates, from_map, is_graphical as oracle_graphical, maximizers, to_map, Adjacency};
use graph_translations::search::{
    enumerate_candidates, max_domain_translations_with, max_domain_with_pin, perfect_translations,
    PinnedMax, SearchBudget, SearchConfig,
};
use graph_translations::translations::{is_candidate, is_graphical, GraphicalCheck};
use graph_translations::{grid_graph, Graph, GridSpec, VertexId};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn uncapped() -> SearchConfig {
    SearchConfig { witness_cap: usize::MAX, ..SearchConfig::default() }
}

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..0.7f64, any::<u64>()).prop_map(|(n, p, seed)| {
        common::random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

#[test]
fn enumeration_of_small_examples() {
    let one = Graph::from_edges(1, []).unwrap();
    let maps: Vec<_> = enumerate_candidates(&one, &SearchBudget::default()).map(Result::unwrap).collect();
    assert_eq!(maps.iter().map(from_map).collect::<Vec<_>>(), vec![vec![None]]);

    let edge = common::path(2);
    let maps: Vec<_> = enumerate_candidates(&edge, &SearchBudget::default()).map(Result::unwrap).collect();
    assert_eq!(
        maps.iter().map(from_map).collect::<Vec<_>>(),
        vec![vec![None, None], vec![None, Some(0)], vec![Some(1), None], vec![Some(1), Some(0)]]
    );

    // P3 by hand: 0 and 2 can only go to 1, 1 goes to 0 or 2
    let p3 = common::path(3);
    let count = enumerate_candidates(&p3, &SearchBudget::default()).count();
    assert_eq!(count, all_candidates(&Adjacency::of(&p3)).len());
}

#[test]
fn grids_match_the_oracle() {
    for (lengths, cyclic) in [(vec![2, 2], false), (vec![2, 3], false), (vec![2, 4], false), (vec![3, 3], false), (vec![3], true), (vec![4], true), (vec![3, 3], true)] {
        let spec = GridSpec::new(lengths, cyclic).unwrap();
        let g = grid_graph(&spec);
        let adj = Adjacency::of(&g);
        let (best, winners) = maximizers(&adj);
        let out = max_domain_translations_with(&g, &uncapped());
        assert!(out.is_complete(), "{spec}");
        assert_eq!(out.best_c, best, "{spec}");
        assert_eq!(out.witnesses.iter().map(from_map).collect::<Vec<_>>(), winners, "{spec}");
    }
}

#[test]
fn perfect_translations_match_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = vec![common::cycle(5), common::cycle(6), common::path(2), grid_graph(&GridSpec::cyclic(&[3, 4]).unwrap())];
    graphs.extend((0..20).map(|i| common::random_connected(&mut rng, 3 + i % 5, 0.4)));
    for g in graphs {
        let adj = Adjacency::of(&g);
        let expected: Vec<_> = all_candidates(&adj).into_iter().filter(|f| f.iter().all(Option::is_some)).collect();
        let found = perfect_translations(&g, &SearchBudget::default()).unwrap();
        assert_eq!(found.iter().map(from_map).collect::<Vec<_>>(), expected);
    }
}

#[test]
fn qualifying_grid_maxima_are_the_first_axis_shifts() {
    use graph_translations::search::grid_lower_bound;
    use graph_translations::translations::{geometrical, Shift};
    for lengths in [[8, 3], [10, 4]] {
        let spec = GridSpec::noncyclic(&lengths).unwrap();
        assert!(spec.satisfies_noncyclic_hypotheses());
        let g = grid_graph(&spec);
        let budget = SearchBudget { max_vertices: 64, ..SearchBudget::default() };
        let seeded = max_domain_translations_with(
            &g,
            &SearchConfig { budget: budget.clone(), lower_bound: Some(grid_lower_bound(&spec).unwrap()), ..SearchConfig::default() },
        );
        let plain = max_domain_translations_with(&g, &SearchConfig { budget, ..SearchConfig::default() });
        assert!(seeded.is_complete() && plain.is_complete());
        assert_eq!(seeded.best_c, plain.best_c);
        assert_eq!(seeded.witnesses, plain.witnesses);
        let mut shifts = vec![geometrical(&spec, Shift::new(0, true)).unwrap(), geometrical(&spec, Shift::new(0, false)).unwrap()];
        shifts.sort();
        assert_eq!(seeded.witnesses, shifts);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn search_agrees_with_brute_force(g in arbitrary_graph(7)) {
        let adj = Adjacency::of(&g);
        let (best, winners) = maximizers(&adj);
        let out = max_domain_translations_with(&g, &uncapped());
        prop_assert!(out.is_complete());
        prop_assert_eq!(out.best_c, best);
        prop_assert_eq!(out.witnesses.iter().map(from_map).collect::<Vec<_>>(), winners);
        for w in &out.witnesses {
            prop_assert!(is_candidate(&g, w).unwrap());
        }
    }

    #[test]
    fn enumeration_is_exactly_the_candidate_set(g in arbitrary_graph(7)) {
        let expected = all_candidates(&Adjacency::of(&g));
        let found: Vec<_> = enumerate_candidates(&g, &SearchBudget::default())
            .map(|r| from_map(&r.unwrap()))
            .collect();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn parallel_search_is_deterministic(g in arbitrary_graph(7), jobs in 2usize..5) {
        let seq = max_domain_translations_with(&g, &uncapped());
        let par = max_domain_translations_with(&g, &SearchConfig { jobs, ..uncapped() });
        prop_assert_eq!(seq.best_c, par.best_c);
        prop_assert_eq!(seq.witnesses, par.witnesses);
        let capped = SearchConfig { witness_cap: 2, ..uncapped() };
        let a = max_domain_translations_with(&g, &capped);
        let b = max_domain_translations_with(&g, &SearchConfig { jobs, ..capped.clone() });
        prop_assert_eq!(a.witnesses, b.witnesses);
    }

    #[test]
    fn pinned_maxima_agree_with_brute_force(g in arbitrary_graph(6), v in 0usize..6) {
        let n = g.num_vertices();
        let v = v % n;
        let all = all_candidates(&Adjacency::of(&g));
        for w in 0..n {
            let got = max_domain_with_pin(&g, VertexId(v), VertexId(w), &SearchBudget::default());
            let best = all.iter().filter(|f| f[v] == Some(w)).map(|f| common::domain_size(f)).max();
            match best {
                Some(b) => prop_assert_eq!(got, PinnedMax::Max(b)),
                None => prop_assert_eq!(got, PinnedMax::NoCandidate),
            }
        }
    }

    #[test]
    fn graphical_check_agrees_with_brute_force(g in arbitrary_graph(6), pick in any::<prop::sample::Index>()) {
        let all = all_candidates(&Adjacency::of(&g));
        let f = &all[pick.index(all.len())];
        let check = is_graphical(&g, &to_map(f), &SearchBudget::default()).unwrap();
        prop_assert_eq!(check.decision(), Some(oracle_graphical(&all, f)));
        if let GraphicalCheck::NotMaximal { pinned, larger } = check {
            prop_assert_eq!(larger.get(pinned).map(|w| w.0), f[pinned.0]);
            prop_assert!(larger.domain_size() > common::domain_size(f));
            prop_assert!(is_candidate(&g, &larger).unwrap());
        }
    }
}
