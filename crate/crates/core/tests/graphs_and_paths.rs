mod common;

use common::{digraph, picker, small_graphs, Picker};
use proptest::prelude::*;
use quiver_hh_core::digraph::{all_digraphs, cyclic, exit_path, Digraph, VertexId};
use quiver_hh_core::quiver::{
    classify_quiver_mor, components, compose_quiver_mor, enumerate_paths, hom_is_finite, Count,
    Path, QuiverMor,
};

fn adjacency(d: &Digraph) -> Vec<Vec<u64>> {
    let n = d.vertex_count();
    let mut a = vec![vec![0u64; n]; n];
    for e in d.edges() {
        a[e.src.0][e.tgt.0] += 1;
    }
    a
}

fn multiply(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut c = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

#[test]
fn path_counts_match_adjacency_powers() {
    for d in all_digraphs(3, 4) {
        let n = d.vertex_count();
        let a = adjacency(&d);
        let mut power: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        let mut sums = power.clone();
        for cap in 0..=5 {
            if cap > 0 {
                power = multiply(&power, &a);
                for i in 0..n {
                    for j in 0..n {
                        sums[i][j] += power[i][j];
                    }
                }
            }
            for u in d.vertex_ids() {
                for v in d.vertex_ids() {
                    let paths = enumerate_paths(&d, u, v, cap).unwrap();
                    assert_eq!(paths.len() as u64, sums[u.0][v.0]);
                }
            }
        }
    }
}

#[test]
fn cycles_are_cyclically_directed() {
    for n in 1..=12 {
        let d = cyclic(n).unwrap();
        assert!(d.classify().cyclically_directed);
        assert_eq!(
            hom_is_finite(&d, VertexId(0), VertexId(0)).unwrap(),
            Count::Infinite
        );
    }
}

fn random_quiver_mor(src: &Digraph, tgt: &Digraph, pick: &mut Picker) -> Option<QuiverMor> {
    let vm: Vec<VertexId> = src
        .vertex_ids()
        .map(|_| VertexId(pick.index(tgt.vertex_count())))
        .collect();
    let mut paths = Vec::new();
    for e in src.edges() {
        let options = enumerate_paths(tgt, vm[e.src.0], vm[e.tgt.0], 2).unwrap();
        if options.is_empty() {
            return None;
        }
        paths.push(pick.pick(&options).edges.clone());
    }
    QuiverMor::from_edge_lists(src.clone(), tgt.clone(), vm, paths).ok()
}

proptest! {
    #[test]
    fn cyclically_directed_graphs_have_bijective_endpoints(d in digraph(4, 5)) {
        if d.classify().cyclically_directed {
            let mut srcs: Vec<_> = d.edges().iter().map(|e| e.src).collect();
            let mut tgts: Vec<_> = d.edges().iter().map(|e| e.tgt).collect();
            srcs.sort();
            tgts.sort();
            let all: Vec<_> = d.vertex_ids().collect();
            prop_assert_eq!(&srcs, &all);
            prop_assert_eq!(&tgts, &all);
        }
    }

    #[test]
    fn exit_path_sizes(d in digraph(4, 5)) {
        let x = exit_path(&d);
        prop_assert_eq!(x.category.object_count(), d.vertex_count() + d.edge_count());
        let non_identity = x.category.morphism_count() - x.category.object_count();
        prop_assert_eq!(non_identity, 2 * d.edge_count());
    }

    #[test]
    fn components_partition_the_graph(d in digraph(5, 6)) {
        let parts = components(&d);
        let vs: usize = parts.iter().map(|(p, _)| p.vertex_count()).sum();
        let es: usize = parts.iter().map(|(p, _)| p.edge_count()).sum();
        prop_assert_eq!(vs, d.vertex_count());
        prop_assert_eq!(es, d.edge_count());
        let mut seen = vec![false; d.vertex_count()];
        for (p, inc) in &parts {
            prop_assert!(p.classify().connected);
            prop_assert!(inc.is_injective());
            for v in &inc.vertex_map {
                prop_assert!(!seen[v.0]);
                seen[v.0] = true;
            }
        }
    }

    #[test]
    fn quiver_composition_is_associative_and_unital(
        i in 0..7usize, j in 0..7usize, k in 0..7usize, l in 0..7usize, mut pick in picker()
    ) {
        let graphs = small_graphs();
        let (a, b, c, d) = (&graphs[i], &graphs[j], &graphs[k], &graphs[l]);
        let f = random_quiver_mor(a, b, &mut pick);
        let g = random_quiver_mor(b, c, &mut pick);
        let h = random_quiver_mor(c, d, &mut pick);
        if let (Some(f), Some(g), Some(h)) = (f, g, h) {
            let left = compose_quiver_mor(&h, &compose_quiver_mor(&g, &f).unwrap()).unwrap();
            let right = compose_quiver_mor(&compose_quiver_mor(&h, &g).unwrap(), &f).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(f.then(&QuiverMor::identity(b)).unwrap(), f.clone());
            prop_assert_eq!(QuiverMor::identity(a).then(&f).unwrap(), f);
        }
    }

    #[test]
    fn flag_subcategories_are_closed(
        i in 0..7usize, j in 0..7usize, k in 0..7usize, mut pick in picker()
    ) {
        let graphs = small_graphs();
        let f = random_quiver_mor(&graphs[i], &graphs[j], &mut pick);
        let g = random_quiver_mor(&graphs[j], &graphs[k], &mut pick);
        if let (Some(f), Some(g)) = (f, g) {
            let (a, b) = (classify_quiver_mor(&f), classify_quiver_mor(&g));
            let c = classify_quiver_mor(&f.then(&g).unwrap());
            prop_assert!(!(a.idle && b.idle) || c.idle);
            prop_assert!(!(a.closed && b.closed) || c.closed);
            prop_assert!(!(a.active && b.active) || c.active);
            prop_assert!(!(a.refinement && b.refinement) || c.refinement);
        }
    }

    #[test]
    fn path_maps_respect_concatenation(mut pick in picker(), i in 0..7usize, j in 0..7usize) {
        let graphs = small_graphs();
        if let Some(f) = random_quiver_mor(&graphs[i], &graphs[j], &mut pick) {
            let d = &f.source;
            let u = VertexId(pick.index(d.vertex_count()));
            let v = VertexId(pick.index(d.vertex_count()));
            let w = VertexId(pick.index(d.vertex_count()));
            let ps = enumerate_paths(d, u, v, 2).unwrap();
            let qs = enumerate_paths(d, v, w, 2).unwrap();
            if !ps.is_empty() && !qs.is_empty() {
                let (p, q): (&Path, &Path) = (pick.pick(&ps), pick.pick(&qs));
                prop_assert_eq!(
                    f.map_path(&p.concat(q)),
                    f.map_path(p).concat(&f.map_path(q))
                );
            }
        }
    }
}
