mod common;

use ramsey_witness::enumerate::connected_graphs;
use ramsey_witness::invariants::{
    fractional_matching_number, independence_number, induced_matching_number, is_induced_matching, maximum_matching,
    matching_number, vertex_cover_number,
};
use ramsey_witness::{generate, FamilySpec, Graph, Rational};

#[test]
fn exact_solvers_match_brute_force_up_to_seven_vertices() {
    let graphs = connected_graphs(7);
    assert_eq!(graphs.len(), 1 + 1 + 2 + 6 + 21 + 112 + 853);
    for g in &graphs {
        let (alpha, set) = independence_number(g);
        assert_eq!((alpha, set.into_vec()), common::independence(g), "{g:?}");

        let (nu, m) = maximum_matching(g);
        assert_eq!((nu, m.as_slice().to_vec()), common::matching(g), "{g:?}");
        assert_eq!(matching_number(g), nu);

        let (im, m) = induced_matching_number(g);
        assert_eq!((im, m.as_slice().to_vec()), common::induced_matching(g), "{g:?}");
        assert!(is_induced_matching(g, &m));

        assert_eq!(fractional_matching_number(g), common::fractional_cover(g), "{g:?}");
        assert_eq!(vertex_cover_number(g), g.order() - common::independence(g).0);
    }
}

fn check_induced(spec: FamilySpec, want: usize) {
    let g = generate(&spec).unwrap();
    assert_eq!(induced_matching_number(&g).0, want, "{}", spec.label());
    assert_eq!(common::induced_matching(&g).0, want, "{}", spec.label());
}

fn check_matching(g: &Graph, want: usize, what: &str) {
    assert_eq!(maximum_matching(g).0, want, "{what}");
    assert_eq!(common::matching(g).0, want, "{what}");
}

#[test]
fn family_value_table() {
    for n in 1..=5 {
        check_induced(FamilySpec::hairy_clique(n, 2), n);
        check_induced(FamilySpec::triangle_clique(n), n);
        check_induced(FamilySpec::spider(n, 2), n);
        check_induced(FamilySpec::friendship(n), n);
    }
    for n in 1..=13 {
        check_induced(FamilySpec::path(n), (n - 1).div_ceil(3));
    }
    for n in 1..=6 {
        check_matching(&generate(&FamilySpec::spider(n, 2)).unwrap(), n, "S_n^2");
        check_matching(&generate(&FamilySpec::friendship(n)).unwrap(), n, "F_n");
        check_matching(&Graph::complete(n), n / 2, "K_n");
        check_matching(&generate(&FamilySpec::biclique(n, n)).unwrap(), n, "K_{n,n}");
    }
}

#[test]
fn fractional_values_are_half_integers() {
    for g in connected_graphs(6) {
        let f = fractional_matching_number(&g);
        assert!((f * 2).is_integer());
        assert!(f >= Rational::from_integer(matching_number(&g) as i64));
    }
}
