use flowsg::decompose::is_two_vertex_connected;
use flowsg::fixtures;
use flowsg::oracle::{
    collapsing_membership, defect_group_oracle, elementary_collapsing, semigroup_closure, FlowSemigroup,
    MembershipRule, DEFAULT_ORACLE_CAP,
};
use flowsg::perm::Permutation;
use flowsg::witness::{cycle_generator_word, defect1_cycle_group, transposition_witness, TranspositionConfig};
use flowsg::{identify_concrete, sharply_3_transitive, Digraph, Graph, Transformation};
use itertools::Itertools;
use proptest::prelude::*;

fn closure_of(g: &Graph) -> FlowSemigroup {
    FlowSemigroup::enumerate(g, DEFAULT_ORACLE_CAP).unwrap()
}

#[test]
fn every_collapsing_is_idempotent() {
    for (_, g) in fixtures::graph_corpus().into_iter().filter(|(_, g)| g.len() <= 9) {
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                let e = elementary_collapsing(&g, a, b).unwrap();
                assert_eq!(e.then(&e), e);
            }
        }
    }
}

#[test]
fn closure_is_independent_of_generator_order() {
    let g = fixtures::bowtie();
    let n = g.len();
    let mut gens: Vec<Transformation> = g
        .edges()
        .flat_map(|(u, v)| [Transformation::collapsing(n, u, v), Transformation::collapsing(n, v, u)])
        .collect();
    let forward = semigroup_closure(&gens, DEFAULT_ORACLE_CAP).unwrap();
    gens.reverse();
    gens.rotate_left(3);
    assert_eq!(semigroup_closure(&gens, DEFAULT_ORACLE_CAP).unwrap(), forward);
    assert!(semigroup_closure(&[], 10).unwrap().is_empty());
}

#[test]
fn closure_is_closed_and_within_defect_bounds() {
    let s = closure_of(&fixtures::complete(4));
    for a in s.elements() {
        assert!(a.defect() >= 1);
        for b in s.elements().iter().step_by(7) {
            assert!(s.contains(&a.then(b)));
        }
    }
}

#[test]
fn oracle_examples() {
    for set in (0..5).combinations(2) {
        let g = defect_group_oracle(&fixtures::cycle(5), &set, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.degree(), 3);
    }
    let p3 = fixtures::path(3);
    let g = defect_group_oracle(&p3, &[1], DEFAULT_ORACLE_CAP).unwrap();
    assert_eq!(g.order(), 1);
    assert_eq!(g.labels, vec!["p0", "p2"]);
}

#[test]
fn exceptional_defect_one_group() {
    let g = fixtures::exceptional();
    let v = g.index_of("v").unwrap();
    let group = defect_group_oracle(&g, &[v], DEFAULT_ORACLE_CAP).unwrap();
    assert_eq!(group.order(), 120);
    assert!(sharply_3_transitive(&group));
    let from_cycles = defect1_cycle_group(&g, v).unwrap();
    assert_eq!(from_cycles.elements, group.elements);
}

#[test]
fn cycle_generators_match_oracle_on_two_connected_graphs() {
    for n in 3..=5 {
        for g in fixtures::enumerate_connected_graphs(n).into_iter().filter(is_two_vertex_connected) {
            let s = closure_of(&g);
            for v in 0..n {
                let oracle = s.defect_group(&[v]).unwrap();
                assert_eq!(defect1_cycle_group(&g, v).unwrap().elements, oracle.elements, "{g}");
            }
        }
    }
}

fn restriction(t: &Transformation, points: &[usize]) -> Option<Permutation> {
    let map: Option<Vec<usize>> = points.iter().map(|&p| points.iter().position(|&q| q == t.apply(p))).collect();
    Permutation::from_map(&map?)
}

#[test]
fn cycle_words_for_every_arc() {
    for n in 3..=8 {
        let g = fixtures::cycle(n);
        for k in 1..n {
            for start in 0..n {
                let defect: Vec<usize> = (0..k).map(|i| (start + i) % n).collect();
                let w = cycle_generator_word(&g, &defect).unwrap();
                assert!(w.letters.iter().all(|&(a, b)| g.has_edge(a, b)));
                let t = w.evaluate(n);
                assert_eq!(t.defect(), k);
                let points: Vec<usize> = (0..n).filter(|v| !defect.contains(v)).collect();
                let r = restriction(&t, &points).expect("permutes the complement");
                if n - k > 1 {
                    assert_eq!(r.cycles().len(), 1);
                    assert_eq!(r.cycles()[0].len(), n - k);
                }
            }
        }
    }
}

fn config(g: &Graph, y: &str, x: &[&str], v: &str, u: &[&str], i: usize, extra: &[&str]) -> TranspositionConfig {
    let id = |s: &str| g.index_of(s).unwrap();
    let mut defect: Vec<usize> = std::iter::once(id(y)).chain(x.iter().map(|s| id(s))).collect();
    defect.extend(extra.iter().map(|s| id(s)));
    TranspositionConfig {
        y: id(y),
        x: x.iter().map(|s| id(s)).collect(),
        v: id(v),
        u: u.iter().map(|s| id(s)).collect(),
        i,
        defect_set: defect,
    }
}

fn assert_transposition(g: &Graph, c: &TranspositionConfig) {
    let n = g.len();
    let t = transposition_witness(g, c).unwrap().evaluate(n);
    let points: Vec<usize> = (0..n).filter(|v| !c.defect_set.contains(v)).collect();
    let r = restriction(&t, &points).expect("permutes the complement");
    let ui = c.u[c.i - 1];
    let a = points.iter().position(|&p| p == ui).unwrap();
    let b = points.iter().position(|&p| p == c.v).unwrap();
    assert_eq!(r, Permutation::transposition(points.len(), a, b));
    assert!(r.then(&r).is_identity());
    let oracle = defect_group_oracle(g, &c.defect_set, DEFAULT_ORACLE_CAP).unwrap();
    assert!(oracle.contains(&r));
}

#[test]
fn transposition_witnesses() {
    let g = Graph::from_label_edges(&[("y", "x1"), ("x1", "v"), ("x1", "u1")]).unwrap();
    assert_transposition(&g, &config(&g, "y", &["x1"], "v", &["u1"], 1, &[]));

    let g = Graph::from_label_edges(&[("y", "x1"), ("x1", "x2"), ("x2", "v"), ("x1", "u1"), ("u1", "u2")]).unwrap();
    for i in 1..=2 {
        assert_transposition(&g, &config(&g, "y", &["x1", "x2"], "v", &["u1", "u2"], i, &[]));
    }

    let g = Graph::from_label_edges(&[
        ("y", "x1"),
        ("x1", "x2"),
        ("x2", "x3"),
        ("x3", "v"),
        ("x1", "u1"),
        ("u1", "u2"),
    ])
    .unwrap();
    for i in 1..=2 {
        assert_transposition(&g, &config(&g, "y", &["x1", "x2", "x3"], "v", &["u1", "u2"], i, &[]));
    }

    // A pendant z on y enlarges the defect set beyond the configuration.
    let g = Graph::from_label_edges(&[("z", "y"), ("y", "x1"), ("x1", "v"), ("x1", "u1"), ("v", "w")]).unwrap();
    assert_transposition(&g, &config(&g, "y", &["x1"], "v", &["u1"], 1, &["z"]));
}

#[test]
fn membership_on_every_digraph_with_three_vertices() {
    let pairs: Vec<(usize, usize)> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        let d = Digraph::from_index_edges(["a", "b", "c"], &edges).unwrap();
        check_membership(&d);
    }
}

fn check_membership(d: &Digraph) {
    let n = d.len();
    let s = FlowSemigroup::enumerate(d, DEFAULT_ORACLE_CAP).unwrap();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let m = collapsing_membership(d, a, b).unwrap();
            let e = Transformation::collapsing(n, a, b);
            assert_eq!(m.member, s.contains(&e), "{d} e({a},{b})");
            if let Some(w) = &m.witness {
                assert_eq!(w.evaluate(n), e);
                assert!(w.letters.iter().all(|&(u, v)| d.has_edge(u, v)));
            }
            assert_eq!(m.rule == MembershipRule::NotMember, !m.member);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn membership_on_random_four_vertex_digraphs(bits in proptest::collection::vec(any::<bool>(), 12)) {
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
        let edges: Vec<(usize, usize)> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
        let d = Digraph::from_index_edges(["a", "b", "c", "d"], &edges).unwrap();
        check_membership(&d);
    }

    #[test]
    fn extending_by_a_collapsing_keeps_defect_only_off_the_image(seed in any::<u64>()) {
        // Keeping the defect after e_uv means u or v is outside the image.
        let gs = [fixtures::bowtie(), fixtures::complete(4), fixtures::star(3), fixtures::cycle(5)];
        let g = &gs[(seed % 4) as usize];
        let s = closure_of(g);
        let x = s.elements()[(seed as usize / 4) % s.len()];
        let edges: Vec<(usize, usize)> = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
        let (u, v) = edges[(seed as usize / 7) % edges.len()];
        let y = x.then(&Transformation::collapsing(g.len(), u, v));
        if y.defect() == x.defect() {
            let image = x.image_mask();
            prop_assert!(image >> u & 1 == 0 || image >> v & 1 == 0);
        }
    }

    #[test]
    fn defect_is_monotone_in_closures(i in any::<usize>(), j in any::<usize>()) {
        let s = closure_of(&fixtures::bowtie());
        let a = s.elements()[i % s.len()];
        let b = s.elements()[j % s.len()];
        prop_assert!(a.then(&b).defect() >= a.defect().max(b.defect()));
    }
}

#[test]
fn defect_sets_give_equivalent_groups() {
    let mut graphs: Vec<Graph> = fixtures::graph_corpus().into_iter().map(|(_, g)| g).filter(|g| g.len() <= 6).collect();
    graphs.extend(fixtures::enumerate_connected_graphs(4));
    for g in graphs {
        let s = closure_of(&g);
        for k in 1..g.len() {
            let shapes: Vec<(usize, Vec<usize>)> = (0..g.len())
                .combinations(k)
                .map(|set| {
                    let a = identify_concrete(&s.defect_group(&set).unwrap());
                    (a.order as usize, a.orbit_sizes())
                })
                .collect();
            assert!(shapes.iter().all_equal(), "{g} k={k}: {shapes:?}");
        }
    }
}
