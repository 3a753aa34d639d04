mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{picker, small_categories};
use proptest::prelude::*;
use quiver_hh_core::fincat::{cyclic_group, permutations, symmetric_group, FinCat, MorId};
use quiver_hh_core::hochschild::{
    canonical_rotation, class_of_word, compute_hh, least_rotation, psi, trace_obj, CyclicWord,
};

/// Conjugacy classes of a one-object category that is a group, by orbits
/// of `g ↦ h g h⁻¹`.
fn conjugacy_classes(c: &FinCat) -> usize {
    let ms: Vec<MorId> = c.morphism_ids().collect();
    let e = c.identities()[0];
    let inverse = |h: MorId| {
        *ms.iter()
            .find(|&&k| c.compose(k, h) == Some(e))
            .expect("groups have inverses")
    };
    let mut seen = BTreeSet::new();
    let mut classes = 0;
    for &g in &ms {
        if seen.contains(&g) {
            continue;
        }
        classes += 1;
        for &h in &ms {
            let hg = c.compose(h, g).unwrap();
            seen.insert(c.compose(hg, inverse(h)).unwrap());
        }
    }
    classes
}

/// Number of cycle types of permutations of `n` letters.
fn cycle_types(n: usize) -> usize {
    let mut types = BTreeSet::new();
    for p in permutations(n) {
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
                len += 1;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort();
        types.insert(lens);
    }
    types.len()
}

#[test]
fn hh_counts_conjugacy_classes() {
    for (c, expected) in [
        (cyclic_group(2), 2),
        (cyclic_group(3), 3),
        (cyclic_group(4), 4),
        (symmetric_group(3), 3),
        (symmetric_group(4), 5),
    ] {
        assert_eq!(conjugacy_classes(&c), expected);
        assert_eq!(compute_hh(&c).len(), expected);
    }
    assert_eq!(cycle_types(3), 3);
    assert_eq!(cycle_types(4), 5);
}

/// All cyclic words of length `1..=max_len`, each in least rotation.
fn cyclic_words(c: &FinCat, max_len: usize) -> BTreeSet<Vec<MorId>> {
    fn extend(c: &FinCat, word: &mut Vec<MorId>, max_len: usize, out: &mut BTreeSet<Vec<MorId>>) {
        let last = *word.last().unwrap();
        if c.tgt(last) == c.src(word[0]) {
            out.insert(canonical_rotation(word));
        }
        if word.len() == max_len {
            return;
        }
        for m in c.morphism_ids() {
            if c.src(m) == c.tgt(last) {
                word.push(m);
                extend(c, word, max_len, out);
                word.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for m in c.morphism_ids() {
        extend(c, &mut vec![m], max_len, &mut out);
    }
    out
}

/// Classes of cyclic words under rotation and contraction of two
/// neighbouring letters into their composite.
fn word_quotient(c: &FinCat, max_len: usize) -> usize {
    let words: Vec<Vec<MorId>> = cyclic_words(c, max_len).into_iter().collect();
    let index: BTreeMap<&Vec<MorId>, usize> =
        words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, w) in words.iter().enumerate() {
        let n = w.len();
        if n < 2 {
            continue;
        }
        for k in 0..n {
            // Contract letters k and k+1 (cyclically).
            let (a, b) = (w[k], w[(k + 1) % n]);
            let ba = c.compose(b, a).unwrap();
            let mut v = Vec::with_capacity(n - 1);
            for j in 0..n {
                if j == k {
                    v.push(ba);
                } else if j != (k + 1) % n {
                    v.push(w[j]);
                }
            }
            let v = canonical_rotation(&v);
            let (x, y) = (root(&mut parent, i), root(&mut parent, index[&v]));
            parent[x] = y;
        }
    }
    (0..words.len())
        .filter(|&i| root(&mut parent, i) == i)
        .count()
}

#[test]
fn hh_matches_the_word_quotient() {
    for (name, c) in small_categories() {
        assert_eq!(word_quotient(&c, 3), compute_hh(&c).len(), "{name}");
    }
}

#[test]
fn classes_are_rotation_invariant() {
    for (_, c) in small_categories() {
        let t = compute_hh(&c);
        for w in cyclic_words(&c, 4) {
            let w = CyclicWord::new(&c, w).unwrap();
            let cls = class_of_word(&c, &t, &w);
            for k in 0..w.len() {
                assert_eq!(class_of_word(&c, &t, &w.rotate(k)), cls);
            }
        }
    }
}

#[test]
fn power_operations() {
    for (_, c) in small_categories() {
        let t = compute_hh(&c);
        for cls in t.classes() {
            for r in 1..=4 {
                for s in 1..=4 {
                    assert_eq!(psi(&c, &t, r, psi(&c, &t, s, cls)), psi(&c, &t, r * s, cls));
                }
            }
        }
        for x in c.object_ids() {
            let tr = trace_obj(&c, &t, x).unwrap();
            for r in 1..=6 {
                assert_eq!(psi(&c, &t, r, tr), tr);
            }
        }
    }
}

proptest! {
    #[test]
    fn trace_moves_preserve_the_class(ci in 0..9usize, mut pick in picker(), moves in 0..12usize) {
        let cats = small_categories();
        let c = &cats[ci].1;
        let t = compute_hh(c);
        let words: Vec<Vec<MorId>> = cyclic_words(c, 3).into_iter().collect();
        let mut w = pick.pick(&words).clone();
        let start = class_of_word(c, &t, &CyclicWord::new(c, w.clone()).unwrap());
        for _ in 0..moves {
            // Replace some letter g∘f by f∘g, splitting at a factorization.
            let k = pick.index(w.len());
            let target = w[k];
            let splits: Vec<(MorId, MorId)> = c
                .morphism_ids()
                .flat_map(|f| c.morphism_ids().map(move |g| (f, g)))
                .filter(|&(f, g)| c.src(g) == c.tgt(f) && c.compose(g, f) == Some(target))
                .collect();
            let (f, g) = *pick.pick(&splits);
            w.splice(k..=k, [f, g]);
            let rot = pick.index(w.len());
            w.rotate_left(rot);
            let cls = class_of_word(c, &t, &CyclicWord::new(c, w.clone()).unwrap());
            prop_assert_eq!(cls, start);
            if w.len() > 4 {
                let n = w.len();
                let merged = c.compose(w[n - 1], w[n - 2]).unwrap();
                w.truncate(n - 2);
                w.push(merged);
            }
        }
    }

    #[test]
    fn booth_agrees_with_brute_force(s in proptest::collection::vec(0u8..3, 1..12)) {
        let best = (0..s.len())
            .map(|k| { let mut r = s.clone(); r.rotate_left(k); r })
            .min()
            .unwrap();
        let k = least_rotation(&s);
        let mut r = s.clone();
        r.rotate_left(k);
        prop_assert_eq!(r, best);
    }
}
