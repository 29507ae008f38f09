use num_bigint::BigInt;
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use proptest::prelude::*;

use k3lab::constants::Constants;
use k3lab::lattice::{
    direct_sum, graph_to_gram, is_e8_dynkin, standard_lattice, CurveGraph, GramLattice,
    StandardLattice,
};
use k3lab::toric::mirror_curve_graph;

fn e8_reference() -> UnGraph<(), ()> {
    UnGraph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)])
}

fn to_petgraph(g: &CurveGraph) -> UnGraph<(), ()> {
    let n = g.nodes();
    let mut out = UnGraph::new_undirected();
    let idx: Vec<_> = n.iter().map(|_| out.add_node(())).collect();
    for i in 0..n.len() {
        for j in i + 1..n.len() {
            if g.has_edge(&n[i], &n[j]).unwrap() {
                out.add_edge(idx[i], idx[j], ());
            }
        }
    }
    out
}

fn chain(n: usize) -> CurveGraph {
    let nodes: Vec<String> = (0..n).map(|k| format!("c{k}")).collect();
    let edges: Vec<(String, String)> = (1..n)
        .map(|k| (nodes[k - 1].clone(), nodes[k].clone()))
        .collect();
    CurveGraph::new(&nodes, &edges).unwrap()
}

#[test]
fn standard_lattice_oracles() {
    let u = standard_lattice(StandardLattice::U).invariants();
    assert_eq!((u.rank, u.signature, u.is_even), (2, (1, 1), true));
    assert_eq!(u.determinant, BigInt::from(-1));
    let e8 = standard_lattice(StandardLattice::E8).invariants();
    assert_eq!((e8.rank, e8.signature, e8.is_even), (8, (8, 0), true));
    assert_eq!(e8.determinant, BigInt::from(1));
    let r = standard_lattice("rank1(-4)".parse().unwrap()).invariants();
    assert_eq!((r.rank, r.signature), (1, (0, 1)));
    assert!("D4".parse::<StandardLattice>().is_err());
}

#[test]
fn a_n_chain_determinants() {
    // A_n(−1) has determinant (−1)^n (n + 1).
    for n in 1..=8usize {
        let inv = graph_to_gram(&chain(n)).invariants();
        let want = if n % 2 == 0 {
            n as i64 + 1
        } else {
            -(n as i64 + 1)
        };
        assert_eq!(inv.determinant, BigInt::from(want), "A{n}");
        assert_eq!(inv.signature, (0, n));
    }
}

#[test]
fn e8_recognition_agrees_with_graph_isomorphism() {
    let c = Constants::reference();
    let g = mirror_curve_graph(&c).unwrap();
    for side in &c.mirror_e8_sides {
        let sub = g.induced(side).unwrap();
        assert!(is_e8_dynkin(&sub));
        assert!(is_isomorphic(&to_petgraph(&sub), &e8_reference()));
    }
    let chain8 = chain(8);
    assert!(!is_e8_dynkin(&chain8));
    assert!(!is_isomorphic(&to_petgraph(&chain8), &e8_reference()));
}

#[test]
fn mirror_lattice_matches_u_plus_two_e8() {
    let c = Constants::reference();
    let lat = graph_to_gram(&mirror_curve_graph(&c).unwrap());
    let e8 = standard_lattice(StandardLattice::E8Negative);
    let model = direct_sum(&direct_sum(&standard_lattice(StandardLattice::U), &e8), &e8);
    let (a, b) = (lat.invariants(), model.invariants());
    assert_eq!(
        (a.rank, a.signature, a.is_even),
        (b.rank, b.signature, b.is_even)
    );
    assert_eq!(a.determinant, b.determinant);
    assert_eq!(lat.kernel_basis().len(), 1);
}

#[test]
fn rejects_bad_input() {
    assert!(GramLattice::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![2, 0]]).is_err());
    assert!(CurveGraph::new(&["a", "a"], &[]).is_err());
    assert!(CurveGraph::new(&["a", "b"], &[("a", "c")]).is_err());
}

fn random_tree() -> impl Strategy<Value = CurveGraph> {
    (2usize..9).prop_flat_map(|n| {
        prop::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |parents| {
            let nodes: Vec<String> = (0..n).map(|k| format!("v{k}")).collect();
            let edges: Vec<(String, String)> = parents
                .iter()
                .enumerate()
                .map(|(k, p)| (nodes[p.index(k + 1)].clone(), nodes[k + 1].clone()))
                .collect();
            CurveGraph::new(&nodes, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn direct_sums_add_invariants(a in random_tree(), b in random_tree()) {
        let (la, lb) = (graph_to_gram(&a), graph_to_gram(&b));
        let s = direct_sum(&la, &lb).invariants();
        let (ia, ib) = (la.invariants(), lb.invariants());
        prop_assert_eq!(s.rank, ia.rank + ib.rank);
        prop_assert_eq!(s.signature, (ia.signature.0 + ib.signature.0, ia.signature.1 + ib.signature.1));
    }

    #[test]
    fn e8_recognition_matches_isomorphism_on_trees(t in random_tree()) {
        let iso = t.len() == 8 && is_isomorphic(&to_petgraph(&t), &e8_reference());
        prop_assert_eq!(is_e8_dynkin(&t), iso);
    }

    #[test]
    fn pairing_is_symmetric(t in random_tree(), x in prop::collection::vec(-3i64..3, 8), y in prop::collection::vec(-3i64..3, 8)) {
        let l = graph_to_gram(&t);
        let (x, y) = (&x[..l.dim()], &y[..l.dim()]);
        prop_assert_eq!(l.pair(x, y).unwrap(), l.pair(y, x).unwrap());
        prop_assert_eq!(l.pair(x, x).unwrap() % 2, 0);
    }
}
