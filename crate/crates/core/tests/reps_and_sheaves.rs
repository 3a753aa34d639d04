mod common;

use common::{digraph, picker, small_categories, small_graphs, Picker};
use proptest::prelude::*;
use quiver_hh_core::digraph::{all_closed_covers, all_digraphs, linear, Digraph, VertexId};
use quiver_hh_core::fincat::{
    check_closed_sheaf, count_reps, enumerate_reps, pullback_rep, rep_via_exit_limit,
    symmetric_group, FinCat,
};
use quiver_hh_core::quiver::{enumerate_paths, QuiverMor};

#[test]
fn rep_enumeration_matches_exit_path_limits() {
    let graphs = all_digraphs(3, 4);
    for (name, c) in small_categories() {
        for g in &graphs {
            let direct = enumerate_reps(&c, g);
            assert_eq!(direct, rep_via_exit_limit(&c, g), "{name} on {g:?}");
            assert_eq!(direct.len() as u64, count_reps(&c, g));
        }
    }
}

#[test]
fn closed_covers_are_sheaf_squares() {
    let graphs: Vec<Digraph> = all_digraphs(3, 2);
    for (name, c) in small_categories() {
        for g in &graphs {
            for cover in all_closed_covers(g) {
                let v = check_closed_sheaf(&c, &cover);
                assert!(v.bijective, "{name}: {v:?}");
            }
        }
    }
}

/// Counts composable chains `x0 → x1 → ⋯ → xp` straight from the hom-sets.
fn chains(c: &FinCat, p: usize) -> u64 {
    fn go(c: &FinCat, at: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        c.morphisms()
            .iter()
            .filter(|m| m.src.0 == at)
            .map(|m| go(c, m.tgt.0, left - 1))
            .sum()
    }
    (0..c.object_count()).map(|x| go(c, x, p)).sum()
}

#[test]
fn segal_chains() {
    for (_, c) in small_categories() {
        for p in 0..=4 {
            assert_eq!(count_reps(&c, &linear(p)), chains(&c, p));
        }
    }
    assert_eq!(count_reps(&symmetric_group(3), &linear(3)), 216);
}

fn random_quiver_mor(src: &Digraph, tgt: &Digraph, pick: &mut Picker) -> Option<QuiverMor> {
    let vm: Vec<VertexId> = src
        .vertex_ids()
        .map(|_| VertexId(pick.index(tgt.vertex_count())))
        .collect();
    let mut paths = Vec::new();
    for e in src.edges() {
        let options = enumerate_paths(tgt, vm[e.src.0], vm[e.tgt.0], 3).unwrap();
        if options.is_empty() {
            return None;
        }
        paths.push(pick.pick(&options).edges.clone());
    }
    QuiverMor::from_edge_lists(src.clone(), tgt.clone(), vm, paths).ok()
}

proptest! {
    #[test]
    fn pullback_is_functorial(
        ci in 0..9usize, i in 0..7usize, j in 0..7usize, k in 0..7usize, mut pick in picker()
    ) {
        let cats = small_categories();
        let c = &cats[ci].1;
        let graphs = small_graphs();
        let f = random_quiver_mor(&graphs[i], &graphs[j], &mut pick);
        let g = random_quiver_mor(&graphs[j], &graphs[k], &mut pick);
        if let (Some(f), Some(g)) = (f, g) {
            let gf = f.then(&g).unwrap();
            for r in enumerate_reps(c, &graphs[k]) {
                let once = pullback_rep(c, &gf, &r).unwrap();
                let twice = pullback_rep(c, &f, &pullback_rep(c, &g, &r).unwrap()).unwrap();
                prop_assert_eq!(once, twice);
            }
        }
    }

    #[test]
    fn reps_are_valid_and_sorted(ci in 0..9usize, d in digraph(3, 4)) {
        let cats = small_categories();
        let c = &cats[ci].1;
        let reps = enumerate_reps(c, &d);
        prop_assert!(reps.windows(2).all(|w| w[0] < w[1]));
        for r in &reps {
            prop_assert!(r.check(c, &d).is_ok());
        }
    }
}
