use std::collections::BTreeSet;

use proptest::prelude::*;

use plabic::flows::{enumerate_flows, flow_weight, path_weight, FlowModel};
use plabic::io::{rec_from_json, rec_to_json};
use plabic::polyhedra::{
    facets, lattice_points, minkowski_sum, vertices, HRep, LatticePointSet, Rel,
};
use plabic::poset::{antichain_to_j, j_to_antichain, GridPoset};
use plabic::rec::{apply_w0, build_rec, dualize};
use plabic::valuation::ValuationContext;
use plabic::Subset;

fn size() -> impl Strategy<Value = (usize, usize)> {
    (4usize..=7).prop_flat_map(|n| (2..=n - 2, Just(n)))
}

fn small_size() -> impl Strategy<Value = (usize, usize)> {
    (4usize..=6).prop_flat_map(|n| (2..=n - 2, Just(n)))
}

fn subset(n: usize) -> impl Strategy<Value = Subset> {
    (0u64..(1 << n)).prop_map(Subset::from_bits)
}

fn point_set(dim: usize, max: usize) -> impl Strategy<Value = LatticePointSet> {
    prop::collection::btree_set(prop::collection::vec(-2i64..=2, dim), 1..=max).prop_map(
        move |pts| {
            let basis = (1..=dim).map(|i| format!("x{i}")).collect();
            LatticePointSet::new(basis, pts.into_iter().collect(), None).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_algebra(a in subset(10), b in subset(10)) {
        prop_assert_eq!(a.union(b).len() + a.intersection(b).len(), a.len() + b.len());
        prop_assert_eq!(a.complement(10).complement(10), a);
        prop_assert_eq!(a.union(b).complement(10), a.complement(10).intersection(b.complement(10)));
        prop_assert!(a.difference(b).is_subset(a));
        prop_assert!(a.difference(b).intersection(b).is_empty());
        prop_assert_eq!(Subset::parse(&a.to_vec().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")), Some(a));
    }

    #[test]
    fn colex_enumeration_is_sorted_and_complete(n in 1usize..=9, size in 0usize..=9) {
        let all = Subset::all_of_size(n, size);
        let expected = if size <= n { (0..size).fold(1usize, |acc, i| acc * (n - i) / (i + 1)) } else { 0 };
        prop_assert_eq!(all.len(), expected);
        prop_assert!(all.windows(2).all(|w| w[0].colex_cmp(&w[1]).is_lt()));
        prop_assert!(all.iter().all(|s| s.len() == size && s.is_subset(Subset::full(n))));
    }

    #[test]
    fn minkowski_sum_is_commutative_and_associative(
        a in point_set(2, 5),
        b in point_set(2, 5),
        c in point_set(2, 5),
    ) {
        let ab = minkowski_sum(&a, &b).unwrap();
        let ba = minkowski_sum(&b, &a).unwrap();
        prop_assert!(ab.same_points(&ba));
        let left = minkowski_sum(&ab, &c).unwrap();
        let right = minkowski_sum(&a, &minkowski_sum(&b, &c).unwrap()).unwrap();
        prop_assert!(left.same_points(&right));
        prop_assert!(ab.len() <= a.len() * b.len());
    }

    #[test]
    fn facets_are_valid_tight_and_vertex_determined(a in point_set(3, 8)) {
        let hull = facets(&a).unwrap();
        for ineq in hull.facets.iter().chain(&hull.equations) {
            prop_assert!(a.points.iter().all(|p| ineq.holds(p)), "{:?}", ineq);
        }
        for ineq in &hull.equations {
            prop_assert_eq!(ineq.rel, Rel::Eq);
        }
        for f in &hull.facets {
            // a facet of a d-dimensional polytope touches at least d affinely independent points
            let tight = a.points.iter().filter(|p| f.is_tight(p)).count();
            prop_assert!(tight >= hull.affine_dim, "{:?} tight on {}", f, tight);
        }
        let from_vertices = facets(&vertices(&a)).unwrap();
        let set = |d: &plabic::polyhedra::FacetDescription| -> BTreeSet<(Vec<i64>, i64)> {
            d.facets.iter().map(|f| (f.coeffs.clone(), f.rhs)).collect()
        };
        prop_assert_eq!(set(&hull), set(&from_vertices));
        prop_assert_eq!(hull.affine_dim, from_vertices.affine_dim);
    }

    #[test]
    fn lattice_points_match_brute_force(
        rows in prop::collection::vec((prop::collection::vec(-2i64..=2, 3), 0i64..=6), 0..4),
        bound in 1i64..=3,
    ) {
        let mut h = HRep::new(vec!["x".into(), "y".into(), "z".into()]);
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 1;
            h.push(e.clone(), Rel::Le, bound);
            h.push(e, Rel::Ge, -bound);
        }
        for (coeffs, rhs) in rows {
            h.push(coeffs, Rel::Le, rhs);
        }
        let mut brute = BTreeSet::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                for z in -bound..=bound {
                    if h.contains(&[x, y, z]) {
                        brute.insert(vec![x, y, z]);
                    }
                }
            }
        }
        let found = lattice_points(&h).unwrap();
        prop_assert_eq!(found.point_set(), brute);
    }

    #[test]
    fn hrep_json_round_trip(k in 1usize..=3, extra in 1usize..=3, r in 0i64..=4) {
        let poset = GridPoset::new(k, k + extra).unwrap();
        for h in [poset.order_polytope_h(r), poset.chain_polytope_h(r)] {
            let back = HRep::from_json(&h.to_json()).unwrap();
            prop_assert_eq!(back.to_json(), h.to_json());
        }
    }

    #[test]
    fn antichain_correspondence(k in 1usize..=3, extra in 1usize..=3) {
        let n = k + extra;
        let poset = GridPoset::new(k, n).unwrap();
        let antichains: BTreeSet<Vec<(usize, usize)>> = poset.antichains().into_iter().collect();
        prop_assert_eq!(antichains.len(), Subset::all_of_size(n, k).len());
        for j in Subset::all_of_size(n, k) {
            let a = j_to_antichain(k, n, j).unwrap();
            prop_assert!(antichains.contains(&a));
            prop_assert_eq!(antichain_to_j(k, n, &a).unwrap(), j);
        }
        // antichain indicators are exactly the level-1 points of the chain polytope
        let chain = lattice_points(&poset.chain_polytope_h(1)).unwrap();
        prop_assert!(chain.same_points(&poset.antichain_points().unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rec_graph_invariants((k, n) in size()) {
        let rec = build_rec(k, n).unwrap();
        let g = rec.graph();
        let m = n - k;
        let faces = g.faces();
        prop_assert_eq!(faces.len(), k * m + 1);

        // the bounded orbits and the outer orbit partition all darts
        let total_darts = 2 * (g.edges().len() + n);
        let mut seen = BTreeSet::new();
        for f in faces {
            for &d in &f.darts {
                prop_assert!(seen.insert(d));
                prop_assert_eq!(g.left_face(d), Some(f.id));
            }
        }
        let outer = (0..total_darts).filter(|&d| g.left_face(d).is_none()).count();
        prop_assert_eq!(seen.len() + outer, total_darts);

        // Euler characteristic of the disk with boundary arcs as edges
        let v = g.vertices().len() as i64;
        let e = (g.edges().len() + n) as i64;
        prop_assert_eq!(v - e + faces.len() as i64 + 1, 2);

        let perm = g.trip_permutation().unwrap();
        let mut sorted = perm.clone();
        sorted.sort();
        prop_assert_eq!(sorted, (1..=n).collect::<Vec<_>>());

        let labels = rec.net.labels();
        prop_assert!(labels.iter().all(|l| l.len() == m));
        prop_assert_eq!(labels.iter().collect::<BTreeSet<_>>().len(), labels.len());
        prop_assert_eq!(rec.net.sources(), Subset::interval(m));
    }

    #[test]
    fn dual_and_w0_relabellings((k, n) in size()) {
        let rec = build_rec(k, n).unwrap();
        let dual = dualize(&rec).unwrap();
        let w0 = apply_w0(&rec).unwrap();
        prop_assert_eq!(dual.net.sources(), Subset::interval(k));
        for ((p, d), w) in rec.net.labels().iter().zip(dual.net.labels()).zip(w0.net.labels()) {
            prop_assert_eq!(*d, p.complement(n));
            prop_assert_eq!(*w, p.map(|i| n + 1 - i));
        }
    }

    #[test]
    fn json_round_trip((k, n) in size(), which in 0usize..3) {
        let rec = build_rec(k, n).unwrap();
        let rec = match which {
            0 => rec,
            1 => dualize(&rec).unwrap(),
            _ => apply_w0(&rec).unwrap(),
        };
        let doc = rec_to_json(&rec);
        let back = rec_from_json(&doc).unwrap();
        prop_assert_eq!(back.role, rec.role);
        prop_assert_eq!(back.net.labels(), rec.net.labels());
        prop_assert_eq!(back.net.sources(), rec.net.sources());
        prop_assert_eq!(back.graph().edges(), rec.graph().edges());
        prop_assert_eq!(rec_to_json(&back), doc);
    }

    #[test]
    fn flow_weight_is_sum_of_path_weights((k, n) in small_size(), dual in any::<bool>(), pick in any::<prop::sample::Index>()) {
        let rec = build_rec(k, n).unwrap();
        let rec = if dual { dualize(&rec).unwrap() } else { rec };
        let net = &rec.net;
        let size = net.sources().len();
        let all = Subset::all_of_size(n, size);
        let j = all[pick.index(all.len())];
        let flows = enumerate_flows(net, j).unwrap();
        let poly = FlowModel::new(net).unwrap().polynomial(j).unwrap();
        prop_assert_eq!(poly.flow_count(), flows.len() as u64);
        prop_assert!(!flows.is_empty());
        for flow in &flows {
            let mut sum = vec![0u32; net.basis().len()];
            for p in &flow.paths {
                for (s, w) in sum.iter_mut().zip(path_weight(net, p).unwrap()) {
                    *s += w;
                }
            }
            prop_assert_eq!(flow_weight(net, flow).unwrap(), sum);
            // paths are pairwise vertex-disjoint
            let mut used = BTreeSet::new();
            for p in &flow.paths {
                for v in p.vertices(net) {
                    prop_assert!(used.insert(v));
                }
            }
        }
    }

    #[test]
    fn valuation_is_additive_on_products((k, n) in small_size(), dual in any::<bool>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let rec = build_rec(k, n).unwrap();
        let rec = if dual { dualize(&rec).unwrap() } else { rec };
        let ctx = ValuationContext::new(&rec.net).unwrap();
        let polys = ctx.polynomials();
        let (p, q) = (&polys[a.index(polys.len())], &polys[b.index(polys.len())]);
        let vp = ctx.valuation(p).unwrap();
        let vq = ctx.valuation(q).unwrap();
        let prod = ctx.valuation_of(&p.to_poly().mul(&q.to_poly())).unwrap();
        let sum: Vec<i64> = vp.coords.iter().zip(&vq.coords).map(|(x, y)| x + y).collect();
        prop_assert_eq!(prod.coords, sum);
        prop_assert!(!prod.order_dependent);
    }
}
