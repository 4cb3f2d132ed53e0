mod common;

use proptest::prelude::*;

use extremal::degseq::{
    classify, enumerate_tree_sequences, has_connected_realization, is_graphic, majorization_chain,
    majorizes, sequences_with_sum, Classification, Majorization,
};
use extremal::{DegreeSequence, Graph};

fn seq(s: &str) -> DegreeSequence {
    s.parse().unwrap()
}

fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| random_graph(n, &b))
    })
}

#[test]
fn graphicality_matches_brute_force_up_to_six() {
    for n in 1..=6 {
        let real = common::realizable_sequences(n);
        for sum in n..=n * n {
            for s in sequences_with_sum(n, sum, n) {
                assert_eq!(is_graphic(&s), real.contains(s.entries()), "{s}");
            }
        }
    }
}

#[test]
fn connected_realizations_need_enough_edges() {
    assert!(has_connected_realization(&seq("2,2,2,1,1")));
    assert!(!has_connected_realization(&seq("2,2,1,1,1,1")));
    assert!(!has_connected_realization(&seq("1,1,1,1")));
    assert!(has_connected_realization(&seq("1,1")));
}

#[test]
fn classification_examples() {
    assert_eq!(classify(&seq("3,3,2,1,1")), Classification::Unicyclic);
    assert_eq!(classify(&seq("2,2,2")), Classification::Unicyclic);
    assert_eq!(classify(&seq("3,1,1,1")), Classification::Tree);
    assert_eq!(classify(&seq("3,3,3,3")), Classification::General);
    assert_eq!(classify(&seq("3,3,1,1")), Classification::NotGraphic);
    assert_eq!(classify(&seq("1,1,1,1")), Classification::ForestOnly);
}

#[test]
fn tree_sequences_count_partitions() {
    // Tree sequences of order n correspond to partitions of n - 2.
    let partitions = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for n in 2..=12 {
        let all = enumerate_tree_sequences(n).unwrap();
        assert_eq!(all.len(), partitions[n - 2], "n = {n}");
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert!(all.iter().all(|s| classify(s) == Classification::Tree));
    }
}

#[test]
fn chain_between_path_and_star() {
    let chain = majorization_chain(&seq("2,2,2,1,1"), &seq("4,1,1,1,1")).unwrap();
    assert_eq!(chain.first().unwrap(), &seq("2,2,2,1,1"));
    assert_eq!(chain.last().unwrap(), &seq("4,1,1,1,1"));
    assert!(chain.windows(2).all(|w| majorizes(&w[1], &w[0]) == Majorization::Strict));
}

proptest! {
    #[test]
    fn realized_sequences_are_graphic(g in graph_strategy()) {
        if let Ok(s) = g.degree_sequence() {
            prop_assert!(is_graphic(&s));
            if g.is_connected() {
                prop_assert!(has_connected_realization(&s));
                let class = classify(&s);
                let n = g.order();
                match g.size() as isize - n as isize {
                    -1 => prop_assert_eq!(class, Classification::Tree),
                    0 => prop_assert_eq!(class, Classification::Unicyclic),
                    1 => prop_assert_eq!(class, Classification::Bicyclic),
                    _ => prop_assert_eq!(class, Classification::General),
                }
            }
        }
    }

    #[test]
    fn chains_are_unit_transfers(n in 4usize..=10, i in 0usize..1000, j in 0usize..1000) {
        let all = enumerate_tree_sequences(n).unwrap();
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        if majorizes(b, a) == Majorization::Strict {
            let chain = majorization_chain(a, b).unwrap();
            for w in chain.windows(2) {
                let diff: usize = w[0].entries().iter().zip(w[1].entries()).map(|(x, y)| x.abs_diff(*y)).sum();
                prop_assert_eq!(diff, 2);
                prop_assert!(is_graphic(&w[1]));
                prop_assert_eq!(majorizes(&w[1], &w[0]), Majorization::Strict);
            }
        }
    }

    #[test]
    fn display_round_trips(entries in proptest::collection::vec(1usize..20, 1..12)) {
        let s = DegreeSequence::new(entries).unwrap();
        prop_assert_eq!(s.to_string().parse::<DegreeSequence>().unwrap(), s);
    }
}
