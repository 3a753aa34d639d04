mod common;

use std::sync::OnceLock;

use common::{picker, small_categories};
use proptest::prelude::*;
use quiver_hh_core::digraph::{all_digraphs, bouquet, cyclic, linear, point, EdgeId};
use quiver_hh_core::emm::{
    compose_m, enumerate_directed_cycles, fact_homology, fact_map, hom_m, verify_excision, Caps,
    CircleComponent, ExcisionSite, HomSet, MObject,
};
use quiver_hh_core::fincat::{cyclic_group, symmetric_group, walking_arrow};
use quiver_hh_core::hochschild::{compute_hh, trace_obj};
use quiver_hh_core::quiver::{hom_quiver_count, Count};

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn necklaces(k: u64, n: u64) -> u64 {
    let s: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
        .sum();
    (s / n as i64) as u64
}

#[test]
fn bouquet_cycles_are_necklaces() {
    for k in 1..=3u64 {
        let d = bouquet(k as usize);
        let mut before = d.vertex_count();
        for n in 1..=6u64 {
            let now = enumerate_directed_cycles(&d, n as usize).len();
            assert_eq!((now - before) as u64, necklaces(k, n), "k={k} n={n}");
            before = now;
        }
    }
    assert_eq!(necklaces(2, 6), 9);
}

#[test]
fn circle_homs() {
    let caps = Caps {
        max_len: 3,
        max_weight: 3,
        path_cap: 2,
    };
    for d in all_digraphs(3, 2) {
        let q = MObject::quiver(&d);
        assert!(hom_m(&MObject::circle(), &q, caps).morphisms.is_empty());
    }
    assert_eq!(
        hom_m(&MObject::quiver(&point()), &MObject::circle(), caps)
            .morphisms
            .len(),
        1
    );
    assert_eq!(
        hom_m(&MObject::circle(), &MObject::circle(), caps)
            .morphisms
            .len(),
        3
    );
}

#[test]
fn quiver_homs_are_products_of_coproducts() {
    let caps = Caps {
        max_len: 2,
        max_weight: 2,
        path_cap: 2,
    };
    let graphs = all_digraphs(3, 2);
    for a in &graphs {
        for b in &graphs {
            let h = hom_m(
                &MObject::from_digraph(0, a),
                &MObject::from_digraph(0, b),
                caps,
            );
            assert_eq!(
                Count::Finite(h.morphisms.len() as u64),
                hom_quiver_count(b, a, Some(caps.path_cap)),
            );
        }
    }
}

const CAPS: Caps = Caps {
    max_len: 2,
    max_weight: 2,
    path_cap: 1,
};

fn pool() -> Vec<MObject> {
    vec![
        MObject::circle(),
        MObject::quiver(&point()),
        MObject::quiver(&cyclic(1).unwrap()),
        MObject::quiver(&cyclic(2).unwrap()),
        MObject::quiver(&bouquet(2)),
        MObject::quiver(&linear(1)),
        MObject::new(1, vec![cyclic(1).unwrap()]).unwrap(),
        MObject::new(2, vec![point()]).unwrap(),
    ]
}

fn homs() -> &'static Vec<Vec<HomSet>> {
    static HOMS: OnceLock<Vec<Vec<HomSet>>> = OnceLock::new();
    HOMS.get_or_init(|| {
        let p = pool();
        p.iter()
            .map(|a| p.iter().map(|b| hom_m(a, b, CAPS)).collect())
            .collect()
    })
}

proptest! {
    #[test]
    fn composition_is_associative(
        a in 0..8usize, b in 0..8usize, c in 0..8usize, d in 0..8usize, mut pick in picker()
    ) {
        let h = homs();
        let (ab, bc, cd) = (&h[a][b].morphisms, &h[b][c].morphisms, &h[c][d].morphisms);
        if !ab.is_empty() && !bc.is_empty() && !cd.is_empty() {
            let (f, g, k) = (pick.pick(ab), pick.pick(bc), pick.pick(cd));
            let left = compose_m(k, &compose_m(g, f).unwrap()).unwrap();
            let right = compose_m(&compose_m(k, g).unwrap(), f).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn fact_map_is_functorial(
        ci in 0..3usize, a in 0..8usize, b in 0..8usize, c in 0..8usize, mut pick in picker()
    ) {
        let cats = [walking_arrow(), cyclic_group(3), symmetric_group(3)];
        let cat = &cats[ci];
        let t = compute_hh(cat);
        let h = homs();
        let (ab, bc) = (&h[a][b].morphisms, &h[b][c].morphisms);
        if !ab.is_empty() && !bc.is_empty() {
            let (f, g) = (pick.pick(ab), pick.pick(bc));
            let gf = compose_m(g, f).unwrap();
            let (mf, mg, mgf) = (fact_map(cat, &t, f), fact_map(cat, &t, g), fact_map(cat, &t, &gf));
            for x in fact_homology(cat, &t, &pool()[a]) {
                prop_assert_eq!(mgf.apply(&x), mg.apply(&mf.apply(&x)));
            }
        }
    }
}

#[test]
fn vertex_to_circle_is_the_trace_of_the_label() {
    for (_, c) in common::small_categories() {
        let t = compute_hh(&c);
        let m = MObject::quiver(&linear(2));
        for f in hom_m(&m, &MObject::circle(), CAPS).morphisms {
            let CircleComponent::VertexToCircle { vertex, .. } = f.circles[0] else {
                unreachable!("linear graphs have no cycles")
            };
            let map = fact_map(&c, &t, &f);
            for x in fact_homology(&c, &t, &m) {
                let label = x.reps[0].vertex_labels[vertex.0];
                assert_eq!(map.apply(&x).hh[0], trace_obj(&c, &t, label).unwrap());
            }
        }
    }
}

#[test]
fn excision_on_small_sites() {
    let graphs = all_digraphs(3, 2);
    for (name, c) in small_categories() {
        for g in &graphs {
            let e = g.edge_count();
            for i in 0..e {
                for j in i..e {
                    let cut: Vec<EdgeId> = if i == j {
                        vec![EdgeId(i)]
                    } else {
                        vec![EdgeId(i), EdgeId(j)]
                    };
                    let site = ExcisionSite::cut_edges(g, &cut).unwrap();
                    let v = verify_excision(&c, &site);
                    assert!(v.bijective, "{name} {g:?} {cut:?}: {v:?}");
                }
            }
        }
        for k in 1..=2 {
            let names: Vec<String> = (0..k).map(|i| format!("s{i}")).collect();
            let v = verify_excision(&c, &ExcisionSite::circle(&names).unwrap());
            assert!(v.bijective);
            assert_eq!(v.coequalizer, compute_hh(&c).len());
        }
    }
}
