use bkcheck::harness::parse_graph6;
use bkcheck::recolor::{
    delete_and_recolor, extend_coloring, replay, spectrum, ExtensionBudget, ExtensionOutcome, Move, Route,
};
use bkcheck::{Coloring, Graph};

fn start(k: usize, colors: &[Option<usize>]) -> Coloring {
    Coloring::from_partial(k, colors).unwrap()
}

#[test]
fn path_needs_a_recolor() {
    // a - u - b with k = 2
    let g = Graph::path(3);
    let c = start(2, &[Some(0), None, Some(1)]);
    let r = extend_coloring(&g, 1, &c, ExtensionBudget::default()).unwrap();
    let out = r.coloring().unwrap();
    assert!(out.is_proper(&g) && out.is_total());
    assert_eq!(r.move_trace.len(), 2);
    assert!(matches!(r.move_trace[0], Move::Recolor { .. }));
    assert!(matches!(r.move_trace[1], Move::Assign { vertex: 1, .. }));
}

#[test]
fn cycle_takes_a_missing_colour() {
    let g = Graph::cycle(5);
    let c = start(3, &[None, Some(0), Some(1), Some(0), Some(1)]);
    let r = extend_coloring(&g, 0, &c, ExtensionBudget::default()).unwrap();
    assert_eq!(r.move_trace, vec![Move::Assign { vertex: 0, color: 2 }]);
}

#[test]
fn isolated_centre_gets_colour_zero() {
    let g = Graph::empty(3);
    let c = start(2, &[None, Some(1), Some(1)]);
    let r = extend_coloring(&g, 0, &c, ExtensionBudget::default()).unwrap();
    assert_eq!(r.move_trace, vec![Move::Assign { vertex: 0, color: 0 }]);
}

/// Found by scanning every graph on at most 7 vertices with k = Δ for the
/// first trace of the form kempe then assign.
#[test]
fn kempe_then_assign_instance() {
    let g = parse_graph6("F?LT?").unwrap();
    let (u, k) = (4, 2);
    assert_eq!(g.max_degree(), k);
    let c = start(k, &[Some(1), Some(0), Some(1), Some(0), None, Some(1), Some(0)]);

    let s = spectrum(&g, &c, u).unwrap();
    assert!(s.missing_colors.is_empty());
    let local_only = ExtensionBudget { max_swaps: 0, certify: false, ..Default::default() };
    assert_eq!(extend_coloring(&g, u, &c, local_only).unwrap().outcome, ExtensionOutcome::Exhausted);

    let r = extend_coloring(&g, u, &c, ExtensionBudget::default()).unwrap();
    assert_eq!(
        serde_json::to_string(&r.move_trace).unwrap(),
        r#"[{"move":"kempe","colors":[1,2],"members":[0,2,6]},{"move":"assign","vertex":4,"color":2}]"#
    );
    let out = r.coloring().unwrap();
    assert!(out.is_proper(&g) && out.is_total());
    assert_eq!(&replay(&g, &c, &r.move_trace).unwrap(), out);
}

#[test]
fn complete_graph_is_certified_impossible() {
    let g = Graph::complete(4);
    let c = start(3, &[None, Some(0), Some(1), Some(2)]);
    let r = extend_coloring(&g, 0, &c, ExtensionBudget::default()).unwrap();
    assert_eq!(r.outcome, ExtensionOutcome::Impossible);
}

#[test]
fn improper_input_is_rejected() {
    let g = Graph::path(3);
    let c = start(2, &[Some(0), Some(0), None]);
    assert!(extend_coloring(&g, 2, &c, ExtensionBudget::default()).is_err());
}

#[test]
fn delete_and_recolor_examples() {
    let b = ExtensionBudget::default();
    assert!(delete_and_recolor(&Graph::complete(10), 3, 9, b).unwrap().is_none());

    let c5k3 = Graph::cycle(5).lexicographic_product(&Graph::complete(3)).unwrap();
    let u = c5k3.max_degree_vertex().unwrap();
    assert!(delete_and_recolor(&c5k3, u, 7, b).unwrap().is_none());

    let k3x10 = Graph::complete_multipartite(&[3; 10]).unwrap();
    let r = delete_and_recolor(&k3x10, 17, 10, b).unwrap().unwrap();
    assert!(r.coloring.is_proper(&k3x10) && r.coloring.is_total());
    assert_eq!(r.route, Route::Extension);
}
