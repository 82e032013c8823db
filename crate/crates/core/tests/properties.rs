use proptest::prelude::*;
use teachdim::con::{build_con_class, maximal_opponents};
use teachdim::concept::{disjoint_union, Label};
use teachdim::dimensions::{check_rtd_certificate, rtd, rtd_subclass_lower_bound, td_min, vcd};
use teachdim::families::{all_graphs, graph_from_mask, pair_list};
use teachdim::star::build_star_class;
use teachdim::tree::{extend_to_spanning_tree, neighborhood_spanning_tree, Tree};
use teachdim::{BitSet, ConceptClass, Graph, Limits, Sample};

fn limits() -> Limits {
    Limits::default()
}

fn arb_class(max_domain: usize, max_len: usize) -> impl Strategy<Value = ConceptClass> {
    (1..=max_domain).prop_flat_map(move |d| {
        prop::collection::vec(0..(1u64 << d), 1..=max_len).prop_map(move |cs| {
            ConceptClass::new(d, cs.into_iter().map(BitSet::from_bits).collect()).unwrap()
        })
    })
}

fn arb_sample(d: usize) -> impl Strategy<Value = Sample> {
    (0..(1u64 << d), 0..(1u64 << d)).prop_map(|(pos, neg)| {
        let pos = BitSet::from_bits(pos);
        Sample::from_parts(pos, BitSet::from_bits(neg) - pos).unwrap()
    })
}

fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = pair_list(n);
        let m = pairs.len();
        any::<u64>().prop_map(move |mask| {
            let mask = if m == 64 {
                mask
            } else {
                mask & ((1u64 << m) - 1)
            };
            graph_from_mask(n, &pairs, mask)
        })
    })
}

/// A graph together with a nonempty connected vertex set grown from a seed
/// vertex.
fn arb_graph_and_set() -> impl Strategy<Value = (Graph, BitSet)> {
    (arb_graph(1, 10), any::<u64>(), any::<u64>()).prop_map(|(g, start, picks)| {
        let v = (start % g.n() as u64) as usize;
        let mut x = BitSet::singleton(v);
        for k in 0..g.n() {
            let frontier = g.open_nbhd(x);
            if frontier.is_empty() || (picks >> k) & 1 == 0 {
                continue;
            }
            let f = frontier.to_vec();
            x.insert(f[(picks >> 16) as usize % f.len()]);
        }
        (g, x)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn version_space_of_union_is_intersection(cc in arb_class(6, 20), a in arb_sample(6), b in arb_sample(6)) {
        let d = BitSet::full(cc.domain_size());
        let clip = |s: Sample| Sample::from_parts(s.positives() & d, s.negatives() & d).unwrap();
        let (a, b) = (clip(a), clip(b));
        let va = cc.version_space(a);
        let vb = cc.version_space(b);
        let both: Vec<usize> = va.iter().copied().filter(|i| vb.contains(i)).collect();
        match a.union(b) {
            Ok(u) => prop_assert_eq!(cc.version_space(u), both),
            Err(_) => prop_assert!(both.is_empty()),
        }
    }

    #[test]
    fn shattering_is_closed_under_subsets(cc in arb_class(6, 40), s in 0u64..64) {
        let s = BitSet::from_bits(s) & BitSet::full(cc.domain_size());
        if cc.is_shattered(s).unwrap() {
            for t in s.subsets() {
                prop_assert!(cc.is_shattered(t).unwrap());
            }
        }
    }

    #[test]
    fn restricting_to_the_domain_is_identity(cc in arb_class(8, 30)) {
        prop_assert_eq!(cc.restrict(cc.domain()).unwrap(), cc);
    }

    #[test]
    fn disjoint_union_sizes(a in arb_class(4, 10), b in arb_class(4, 10)) {
        let u = disjoint_union(&[a.clone(), b.clone()]).unwrap();
        let both_empty = a.contains(BitSet::EMPTY) && b.contains(BitSet::EMPTY);
        prop_assert_eq!(u.len(), a.len() + b.len() - usize::from(both_empty));
    }

    #[test]
    fn disjoint_union_dimensions(a in arb_class(4, 8), b in arb_class(4, 8)) {
        let with_empty = |c: &ConceptClass| {
            let mut cs = c.concepts().to_vec();
            cs.push(BitSet::EMPTY);
            ConceptClass::new(c.domain_size(), cs).unwrap()
        };
        let (a, b) = (with_empty(&a), with_empty(&b));
        let u = disjoint_union(&[a.clone(), b.clone()]).unwrap();
        let vmax = vcd(&a).unwrap().0.max(vcd(&b).unwrap().0);
        prop_assert_eq!(vcd(&u).unwrap().0, vmax);
        let rmax = rtd(&a, &limits()).unwrap().rtd.max(rtd(&b, &limits()).unwrap().rtd);
        let r = rtd(&u, &limits()).unwrap().rtd;
        prop_assert!(rmax <= r && r <= rmax + 1, "{} vs {}", r, rmax);
    }

    #[test]
    fn rtd_dominates_sampled_subclasses(cc in arb_class(6, 24), picks in prop::collection::vec(any::<u32>(), 100)) {
        let cert = rtd(&cc, &limits()).unwrap();
        prop_assert!(check_rtd_certificate(&cc, &cert, &limits()).unwrap());
        prop_assert!(cert.rtd >= td_min(&cc, &limits()).unwrap());
        for p in picks {
            let idx: Vec<usize> = (0..cc.len()).filter(|&i| (p >> (i % 32)) & 1 == 1).collect();
            if idx.is_empty() {
                continue;
            }
            prop_assert!(rtd_subclass_lower_bound(&cc, &idx, &limits()).unwrap() <= cert.rtd);
        }
    }

    #[test]
    fn neighbourhood_tree_covers_open_neighbourhood((g, x) in arb_graph_and_set()) {
        let t = neighborhood_spanning_tree(&g, x).unwrap();
        let nx = g.open_nbhd(x);
        prop_assert!(t.is_subgraph_of(&g));
        prop_assert_eq!(t.vertices(), x | nx);
        for y in nx.iter() {
            prop_assert_eq!(t.degree(y), 1);
        }
        let ext = extend_to_spanning_tree(&g, &t).unwrap();
        prop_assert!(ext.leaves().len() >= t.leaves().len() || t.vertices().len() == 1);
        prop_assert!(t.vertices().is_subset(ext.vertices()));
        prop_assert_eq!(ext.vertices(), g.reach(x.first().unwrap(), g.vertices()));
    }

    #[test]
    fn opponents_stay_inside_the_neighbourhood((g, x) in arb_graph_and_set()) {
        let nx = g.open_nbhd(x);
        let comps = g.components();
        let comp = |s: BitSet| comps.iter().position(|c| s.is_subset(*c));
        for y in maximal_opponents(&g, x).unwrap() {
            prop_assert!(g.is_connected_set(y));
            prop_assert!(!y.intersects(g.closed_nbhd(x)));
            let ny = g.open_nbhd(y);
            prop_assert!(ny.is_subset(nx));
            if comp(x) != comp(y) {
                prop_assert!(ny.is_empty());
            }
        }
    }

    #[test]
    fn star_classes_shatter_open_neighbourhoods(g in arb_graph(1, 8)) {
        let cc = build_star_class(&g, &limits()).unwrap();
        for x in g.vertices().iter() {
            prop_assert!(cc.is_shattered(g.neighbors(x)).unwrap());
        }
        let (_, w) = vcd(&cc).unwrap();
        prop_assert!(g.vertices().iter().any(|x| w.is_subset(g.closed_nbhd(BitSet::singleton(x)))));
    }

    #[test]
    fn connected_set_classes_are_version_space_consistent(g in arb_graph(1, 7)) {
        let cc = build_con_class(&g, true, &limits()).unwrap();
        for (i, &c) in cc.concepts().iter().enumerate() {
            prop_assert!(c.is_empty() || g.is_connected_set(c));
            let full = Sample::of_concept(c, g.vertices());
            prop_assert_eq!(cc.version_space(full), vec![i]);
        }
    }
}

#[test]
fn open_never_equals_closed_neighbourhood() {
    for n in 1..=5 {
        for (_, g) in all_graphs(n).unwrap() {
            for x in 0..n {
                for y in 0..n {
                    assert_ne!(g.neighbors(x), g.closed_nbhd(BitSet::singleton(y)));
                }
            }
        }
    }
}

#[test]
fn single_vertex_sample_labels() {
    let s = Sample::new([(3, Label::Pos)]).unwrap();
    assert!(s.is_consistent(BitSet::from_bits(0b1000)));
    assert!(!s.is_consistent(BitSet::EMPTY));
}

#[test]
fn union_without_empty_concepts_can_gain_dimension() {
    let a = ConceptClass::new(1, vec![BitSet::singleton(0)]).unwrap();
    let u = disjoint_union(&[a.clone(), a.clone()]).unwrap();
    assert_eq!(vcd(&a).unwrap().0, 0);
    assert_eq!(vcd(&u).unwrap().0, 1);
}

#[test]
fn trees_are_validated() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert!(Tree::from_graph(&g).is_err());
}
