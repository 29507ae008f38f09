use proptest::prelude::*;

use k3lab::constants::Constants;
use k3lab::toric::{self, LatticePolytope, Singularity};

#[test]
fn projective_space_oracles() {
    // The simplex of P³ and its dual, the degree-4 polytope with 35 points.
    let p3 = LatticePolytope::new(vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).unwrap();
    assert_eq!(p3.lattice_points().len(), 5);
    let dual = p3.dual().unwrap();
    assert_eq!(dual.lattice_points().len(), 35);
    assert_eq!(toric::weighted_monomial_count(&[1, 1, 1, 1], 4), 35);
    assert!(dual.edge_reports().iter().all(|e| e.lattice_length == 4));
    assert!(dual
        .edge_reports()
        .iter()
        .all(|e| e.singularity == Singularity::A(3)));
}

#[test]
fn reference_simplex() {
    let c = Constants::reference();
    let d = toric::delta(&c).unwrap();
    let dd = d.dual().unwrap();
    assert_eq!(dd.lattice_points().len(), 39);
    assert_eq!(toric::weighted_monomial_count(&[1, 1, 4, 6], 12), 39);
    assert_eq!(d.lattice_points().len(), 9);
    let s = toric::support_shift(&c).unwrap();
    let mut shifted: Vec<_> = s.shifted.iter().map(|(_, p)| *p).collect();
    shifted.sort();
    let mut points = d.lattice_points();
    points.sort();
    assert_eq!(shifted, points);
}

#[test]
fn non_reflexive_dual_is_rejected() {
    let p = LatticePolytope::new(vec![[2, 0, 0], [0, 3, 0], [0, 0, 5], [-1, -1, -1]]).unwrap();
    assert!(p.dual().is_err());
}

fn box_polytope() -> impl Strategy<Value = LatticePolytope> {
    (1i64..4, 1i64..4, 1i64..4, 1i64..4, 1i64..4, 1i64..4).prop_map(|(a, b, c, d, e, f)| {
        let mut v = Vec::new();
        for x in [-a, b] {
            for y in [-c, d] {
                for z in [-e, f] {
                    v.push([x, y, z]);
                }
            }
        }
        LatticePolytope::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn boxes_count_points(p in box_polytope()) {
        let (lo, hi): (Vec<i64>, Vec<i64>) = (0..3)
            .map(|k| {
                let xs: Vec<i64> = p.vertices().iter().map(|v| v[k]).collect();
                (*xs.iter().min().unwrap(), *xs.iter().max().unwrap())
            })
            .unzip();
        let want: i64 = (0..3).map(|k| hi[k] - lo[k] + 1).product();
        prop_assert_eq!(p.lattice_points().len() as i64, want);
        prop_assert_eq!(p.edges().len(), 12);
    }

    #[test]
    fn weighted_counts_match_brute_force(w in prop::collection::vec(1i64..5, 4), deg in 0i64..14) {
        let mut n = 0u64;
        for a in 0..=deg {
            for b in 0..=deg {
                for c in 0..=deg {
                    let rest = deg - a * w[0] - b * w[1] - c * w[2];
                    if rest >= 0 && rest % w[3] == 0 {
                        n += 1;
                    }
                }
            }
        }
        prop_assert_eq!(toric::weighted_monomial_count(&w, deg), n);
    }
}
