use cubicity::format::{
    parse_arc_model, parse_caterpillar, parse_graph, parse_ordering, parse_orientation,
    parse_representation, write_arc_model, write_caterpillar, write_cubes, write_graph,
    write_ordering, write_orientation, write_representation,
};
use cubicity::generate;
use cubicity_core::{
    build_representation, heuristic_ordering, ordering_width, to_cubes, verify_representation,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_and_ordering_round_trip(n in 0usize..30, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = generate::random_graph(n, p, seed);
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        let ord = heuristic_ordering(&g, seed);
        let w = ordering_width(&g, &ord).unwrap();
        prop_assert_eq!(parse_ordering(&write_ordering(&ord, Some(w))).unwrap(), ord);
    }

    #[test]
    fn representation_round_trip(n in 1usize..25, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = generate::random_graph(n, p, seed);
        let rep = build_representation(&g, &heuristic_ordering(&g, 0)).unwrap();
        let mut text = write_representation(&rep);
        text.push_str(&write_cubes(&to_cubes(&rep).unwrap()));
        let back = parse_representation(&text).unwrap();
        prop_assert_eq!(write_representation(&back), write_representation(&rep));
        prop_assert!(verify_representation(&g, &back).unwrap().passed);
    }

    #[test]
    fn instance_documents_round_trip(n in 1usize..25, seed in any::<u64>()) {
        let model = generate::random_arc_model(n, 0.3, seed);
        prop_assert_eq!(parse_arc_model(&write_arc_model(&model)).unwrap(), model);
        let (_, o) = generate::random_cocomparability(n, 0.3, seed);
        prop_assert_eq!(parse_orientation(&write_orientation(&o)).unwrap(), o);
        let (_, t) = generate::random_caterpillar(n, 0.3, seed);
        prop_assert_eq!(parse_caterpillar(&write_caterpillar(&t)).unwrap(), t);
    }
}

#[test]
fn writers_are_deterministic() {
    let g = generate::random_graph(15, 0.4, 11);
    let a = write_representation(&build_representation(&g, &heuristic_ordering(&g, 3)).unwrap());
    let b = write_representation(&build_representation(&g, &heuristic_ordering(&g, 3)).unwrap());
    assert_eq!(a, b);
}
