//! Seeded verification suites: the ten acceptance checks plus the module
//! invariants, each reported as one named pass/fail line.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiver_hh_core::cyccat::{
    cartesian_factor, compose_epi, compose_para, degree, delta_to_para, dualize_para,
    enumerate_epi, enumerate_para, para_lift, para_phi, project_para_to_epi, undualize_para,
    unit_conjugate, EpiMor, ParaMor,
};
use quiver_hh_core::digraph::{
    all_closed_covers, all_digraphs, bouquet, cyclic, exit_path, linear, point, Digraph, EdgeId,
};
use quiver_hh_core::emm::{
    compose_m, enumerate_directed_cycles, fact_homology, fact_map, hom_m, verify_excision, Caps,
    CircleComponent, ExcisionSite, HomSet, MMor, MObject,
};
use quiver_hh_core::fincat::{
    chain_poset, check_closed_sheaf, count_reps, cyclic_group, enumerate_reps, from_monoid,
    idempotent_monoid, parallel_pair, rep_via_exit_limit, symmetric_group, walking_arrow,
    walking_iso, FinCat, MorId,
};
use quiver_hh_core::hochschild::{
    canonical_rotation, class_of_word, compute_hh, psi, trace_obj, CyclicWord,
};
use quiver_hh_core::quiver::{
    classify_quiver_mor, delta_mor_to_quiver, enumerate_paths, hom_quiver_count, Count,
};
use quiver_hh_core::simplex::{all_monotone_maps, MonotoneMap};

pub const DEFAULT_SEED: u64 = 0x5EED_2024;

#[derive(Debug, Clone)]
pub struct Check {
    /// Acceptance criterion number, if the check is one.
    pub criterion: Option<u8>,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Check {
    pub fn line(&self) -> String {
        let tag = match self.criterion {
            Some(n) => format!("[{n:>2}] "),
            None => "     ".to_string(),
        };
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag}{}: {verdict} ({})", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub seed: u64,
    /// Random samples per randomized check.
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            samples: 1000,
        }
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: usize, detail: String) -> Outcome {
    Outcome {
        passed: failures == 0,
        detail: if failures == 0 {
            detail
        } else {
            format!("{failures} violations; {detail}")
        },
    }
}

fn timed(criterion: Option<u8>, name: &'static str, f: impl FnOnce() -> Outcome) -> Check {
    let start = Instant::now();
    let o = f();
    Check {
        criterion,
        name,
        passed: o.passed,
        detail: o.detail,
        elapsed: start.elapsed(),
    }
}

/// The Klein four-group.
pub fn klein_four() -> FinCat {
    let mul: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    from_monoid(
        ["e", "a", "b", "ab"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        0,
        &mul,
    )
    .expect("a group")
}

/// The fixture categories, all with at most eight morphisms.
pub fn fixture_categories() -> Vec<(&'static str, FinCat)> {
    vec![
        ("walking arrow", walking_arrow()),
        ("walking iso", walking_iso()),
        ("parallel pair", parallel_pair()),
        ("idempotent", idempotent_monoid()),
        ("B(Z/2)", cyclic_group(2)),
        ("B(Z/3)", cyclic_group(3)),
        ("B(Z/4)", cyclic_group(4)),
        ("B(Z/2xZ/2)", klein_four()),
        ("B(S3)", symmetric_group(3)),
        ("chain(3)", chain_poset(3)),
        ("B(Z/8)", cyclic_group(8)),
    ]
}

pub fn criterion(n: u8, cfg: Config) -> Check {
    let c = Some(n);
    match n {
        1 => timed(
            c,
            "free-category path counts vs adjacency powers",
            path_oracle,
        ),
        2 => timed(c, "representations vs exit-path limits", rep_oracle),
        3 => timed(c, "closed covers give sheaf squares", sheaf_law),
        4 => timed(c, "epicyclic degree is multiplicative", || degree_law(cfg)),
        5 => timed(
            c,
            "paracyclic-to-cyclic projection is a functor onto degree one",
            projection_law,
        ),
        6 => timed(c, "pi0 HH of groups counts conjugacy classes", hh_counts),
        7 => timed(c, "power operations and trace invariance", cyclotomic_laws),
        8 => timed(c, "hom-sets of M against necklace counts", hom_calculus),
        9 => timed(c, "excision coequalizers match glued values", excision_grid),
        10 => timed(c, "M composition associative, fact_map functorial", || {
            m_laws(cfg)
        }),
        _ => panic!("no criterion {n}"),
    }
}

pub fn acceptance(cfg: Config) -> Vec<Check> {
    (1..=10).map(|n| criterion(n, cfg)).collect()
}

/// Invariants beyond the acceptance criteria.
pub fn invariants(cfg: Config) -> Vec<Check> {
    vec![
        timed(
            None,
            "cycle graphs are cyclically directed; exit-path sizes",
            graph_invariants,
        ),
        timed(
            None,
            "active-closed factorization unique; idle iff steps at most 1",
            delta_invariants,
        ),
        timed(
            None,
            "M hom-sets between quivers are products of coproducts",
            quiver_hom_products,
        ),
        timed(None, "Segal chains", segal_chains),
        timed(
            None,
            "Delta embeds in the paracyclic category",
            delta_para_functor,
        ),
        timed(
            None,
            "power maps compose; double dual is unit conjugation",
            para_power_and_duality,
        ),
        timed(None, "cartesian factorization recomposes", || {
            cartesian_law(cfg)
        }),
        timed(
            None,
            "pi0 HH equals the cyclic-word quotient at length 3",
            word_quotient_oracle,
        ),
        timed(
            None,
            "word classes are rotation invariant up to length 4",
            rotation_invariance,
        ),
        timed(
            None,
            "vertex-to-circle maps are traces of labels",
            trace_factorization,
        ),
        timed(None, "worked examples", worked_examples),
    ]
}

pub fn run_all(cfg: Config) -> Vec<Check> {
    let mut out = acceptance(cfg);
    out.extend(invariants(cfg));
    out
}

fn adjacency_sums(d: &Digraph, max_len: usize) -> Vec<Vec<Vec<u64>>> {
    let n = d.vertex_count();
    let mut a = vec![vec![0u64; n]; n];
    for e in d.edges() {
        a[e.src.0][e.tgt.0] += 1;
    }
    let mut power: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut powers = vec![power.clone()];
    for _ in 0..max_len {
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for k in 0..n {
                if power[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += power[i][k] * a[k][j];
                }
            }
        }
        power = next;
        powers.push(power.clone());
    }
    powers
}

fn path_oracle() -> Outcome {
    const CAP: usize = 6;
    let graphs = all_digraphs(5, 6);
    let mut failures = 0;
    let mut paths = 0u64;
    for d in &graphs {
        let powers = adjacency_sums(d, CAP);
        for u in d.vertex_ids() {
            for v in d.vertex_ids() {
                let found = enumerate_paths(d, u, v, CAP).expect("vertices exist");
                paths += found.len() as u64;
                let mut by_len = [0u64; CAP + 1];
                for p in &found {
                    by_len[p.len()] += 1;
                }
                let mut total = 0;
                for (cap, power) in powers.iter().enumerate() {
                    total += power[u.0][v.0];
                    let got: u64 = by_len[..=cap].iter().sum();
                    failures += usize::from(got != total);
                }
            }
        }
    }
    outcome(
        failures,
        format!(
            "{} graphs up to isomorphism, caps 0..=6, {paths} paths",
            graphs.len()
        ),
    )
}

fn rep_oracle() -> Outcome {
    let graphs = all_digraphs(4, 5);
    let cats = fixture_categories();
    let mut failures = 0;
    let mut reps = 0u64;
    for (_, c) in &cats {
        for g in &graphs {
            let direct = enumerate_reps(c, g);
            reps += direct.len() as u64;
            failures += usize::from(direct != rep_via_exit_limit(c, g));
        }
    }
    outcome(
        failures,
        format!(
            "{} categories x {} graphs (<= 4 vertices, <= 5 edges), {reps} representations",
            cats.len(),
            graphs.len()
        ),
    )
}

fn sheaf_law() -> Outcome {
    let cats = [
        walking_arrow(),
        cyclic_group(2),
        cyclic_group(3),
        symmetric_group(3),
        chain_poset(3),
    ];
    let graphs = all_digraphs(3, 3);
    let mut failures = 0;
    let mut covers = 0;
    for c in &cats {
        for g in &graphs {
            for cover in all_closed_covers(g) {
                covers += 1;
                failures += usize::from(!check_closed_sheaf(c, &cover).bijective);
            }
        }
    }
    outcome(
        failures,
        format!("{covers} (category, cover) pairs over graphs with <= 3 vertices, <= 3 edges"),
    )
}

pub fn random_epi<R: Rng>(rng: &mut R, m: usize, n: usize) -> EpiMor {
    loop {
        let lengths: Vec<u64> = (0..m).map(|_| rng.gen_range(0..=8)).collect();
        let total: u64 = lengths.iter().sum();
        if total == 0 || total % n as u64 != 0 {
            continue;
        }
        let mut at = rng.gen_range(0..n);
        let mut vm = Vec::with_capacity(m);
        for &l in &lengths {
            vm.push(at);
            at = (at + l as usize) % n;
        }
        return EpiMor::new(m, n, vm, lengths).expect("valid by construction");
    }
}

/// A uniformly placed epicyclic morphism of the given degree: `degree · n`
/// steps dropped one at a time onto random vertices.
pub fn random_epi_of_degree<R: Rng>(rng: &mut R, m: usize, n: usize, deg: u64) -> EpiMor {
    let mut lengths = vec![0u64; m];
    for _ in 0..deg * n as u64 {
        lengths[rng.gen_range(0..m)] += 1;
    }
    let mut at = rng.gen_range(0..n);
    let mut vm = Vec::with_capacity(m);
    for &l in &lengths {
        vm.push(at);
        at = (at + l as usize) % n;
    }
    EpiMor::new(m, n, vm, lengths).expect("valid by construction")
}

fn degree_law(cfg: Config) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut failures = 0;
    for _ in 0..cfg.samples {
        let (m, n, k) = (
            rng.gen_range(1..=6),
            rng.gen_range(1..=6),
            rng.gen_range(1..=6),
        );
        let f = random_epi(&mut rng, m, n);
        let g = random_epi(&mut rng, n, k);
        let gf = compose_epi(&g, &f).expect("composable");
        failures += usize::from(degree(&gf) != degree(&f) * degree(&g));

        let f = random_epi_of_degree(&mut rng, m, n, 1);
        let g = random_epi_of_degree(&mut rng, n, k, 1);
        let gf = compose_epi(&g, &f).expect("composable");
        let lifted = match (para_lift(&f), para_lift(&g), para_lift(&gf)) {
            (Some(pf), Some(pg), Some(_)) => {
                compose_para(&pg, &pf).ok().map(|p| project_para_to_epi(&p))
            }
            _ => None,
        };
        failures += usize::from(degree(&gf) != 1 || lifted != Some(gf));
    }
    outcome(
        failures,
        format!(
            "{n} random pairs, and {n} pairs of degree one closed in the cyclic category",
            n = cfg.samples
        ),
    )
}

fn projection_law() -> Outcome {
    let mut failures = 0;
    let mut pairs = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            let fs = enumerate_para(m, n);
            for e in enumerate_epi(m, n, 1) {
                failures +=
                    usize::from(para_lift(&e).map(|p| project_para_to_epi(&p)) != Some(e.clone()));
            }
            for k in 1..=4 {
                let gs = enumerate_para(n, k);
                for f in &fs {
                    for g in &gs {
                        pairs += 1;
                        let lhs = project_para_to_epi(&compose_para(g, f).expect("composable"));
                        let rhs = compose_epi(&project_para_to_epi(g), &project_para_to_epi(f))
                            .expect("composable");
                        failures += usize::from(lhs != rhs);
                    }
                }
            }
        }
    }
    outcome(failures, format!("{pairs} composable pairs, m, n, k <= 4"))
}

/// Conjugacy classes of a group given as a one-object category, as orbits
/// of `g ↦ h g h⁻¹`.
pub fn conjugacy_classes(c: &FinCat) -> usize {
    let ms: Vec<MorId> = c.morphism_ids().collect();
    let e = c.identities()[0];
    let inverse: BTreeMap<MorId, MorId> = ms
        .iter()
        .map(|&h| {
            let inv = *ms
                .iter()
                .find(|&&k| c.compose(k, h) == Some(e))
                .expect("groups have inverses");
            (h, inv)
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut classes = 0;
    for &g in &ms {
        if seen.contains(&g) {
            continue;
        }
        classes += 1;
        for &h in &ms {
            let hg = c.compose(h, g).expect("one object");
            seen.insert(c.compose(hg, inverse[&h]).expect("one object"));
        }
    }
    classes
}

fn hh_counts() -> Outcome {
    let cases = [
        ("Z/2", cyclic_group(2), 2),
        ("Z/3", cyclic_group(3), 3),
        ("Z/4", cyclic_group(4), 4),
        ("S3", symmetric_group(3), 3),
        ("S4", symmetric_group(4), 5),
    ];
    let mut failures = 0;
    let mut found = Vec::new();
    for (name, c, expected) in &cases {
        let hh = compute_hh(c).len();
        failures += usize::from(hh != conjugacy_classes(c) || hh != *expected);
        found.push(format!("{name}: {hh}"));
    }
    outcome(failures, found.join(", "))
}

fn cyclotomic_laws() -> Outcome {
    let mut failures = 0;
    let mut checks = 0;
    for (_, c) in fixture_categories() {
        let t = compute_hh(&c);
        for cls in t.classes() {
            for r in 1..=4 {
                for s in 1..=4 {
                    checks += 1;
                    failures +=
                        usize::from(psi(&c, &t, r, psi(&c, &t, s, cls)) != psi(&c, &t, r * s, cls));
                }
            }
        }
        for x in c.object_ids() {
            let tr = trace_obj(&c, &t, x).expect("object exists");
            for r in 1..=6 {
                checks += 1;
                failures += usize::from(psi(&c, &t, r, tr) != tr);
            }
        }
    }
    outcome(
        failures,
        format!("{checks} identities over all fixture categories"),
    )
}

fn mobius(mut n: u64) -> i64 {
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

/// Primitive necklaces of length `n` over `k` letters.
pub fn necklaces(k: u64, n: u64) -> u64 {
    let s: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
        .sum();
    (s / n as i64) as u64
}

fn hom_calculus() -> Outcome {
    let mut failures = 0;
    for k in 1..=3u64 {
        let m = MObject::quiver(&bouquet(k as usize));
        for n in 1..=6u64 {
            let caps = Caps {
                max_len: n as usize,
                max_weight: 1,
                path_cap: 0,
            };
            let got = hom_m(&m, &MObject::circle(), caps).morphisms.len() as u64;
            let expected = 1 + (1..=n).map(|j| necklaces(k, j)).sum::<u64>();
            failures += usize::from(got != expected);
        }
    }
    let caps = Caps {
        max_len: 3,
        max_weight: 3,
        path_cap: 2,
    };
    let graphs = all_digraphs(3, 3);
    for g in &graphs {
        for circles in 1..=2 {
            let h = hom_m(
                &MObject::new(circles, vec![]).unwrap(),
                &MObject::from_digraph(0, g),
                caps,
            );
            failures += usize::from(!h.morphisms.is_empty() || h.truncated);
        }
    }
    let h = hom_m(&MObject::quiver(&point()), &MObject::circle(), caps);
    failures += usize::from(h.morphisms.len() != 1 || h.truncated);
    outcome(
        failures,
        format!(
            "bouquet(k) -> circle for k <= 3, lengths <= 6; circle -> each of {} graphs; point -> circle",
            graphs.len()
        ),
    )
}

/// Excision sites on all graphs up to isomorphism with at most four
/// vertices and two edges, every non-empty cut set, plus circles with one
/// and two cuts.
pub fn excision_sites() -> Vec<(String, ExcisionSite)> {
    let mut out = Vec::new();
    for g in all_digraphs(4, 2) {
        let e = g.edge_count();
        let mut cuts: Vec<Vec<EdgeId>> = (0..e).map(|i| vec![EdgeId(i)]).collect();
        for i in 0..e {
            for j in i + 1..e {
                cuts.push(vec![EdgeId(i), EdgeId(j)]);
            }
        }
        for cut in cuts {
            let site = ExcisionSite::cut_edges(&g, &cut).expect("valid cut");
            out.push((format!("{g:?} cut {cut:?}"), site));
        }
    }
    for k in 1..=2 {
        let names: Vec<String> = (0..k).map(|i| format!("s{i}")).collect();
        out.push((
            format!("circle cut {k}"),
            ExcisionSite::circle(&names).unwrap(),
        ));
    }
    out
}

fn excision_grid() -> Outcome {
    let mut failures = 0;
    let sites = excision_sites();
    let cats = fixture_categories();
    for (_, c) in &cats {
        for (_, site) in &sites {
            failures += usize::from(!verify_excision(c, site).bijective);
        }
    }
    let single = ExcisionSite::cut_edges(&linear(1), &[EdgeId(0)]).unwrap();
    let circle = ExcisionSite::circle(&["s"]).unwrap();
    let worked = [
        verify_excision(&walking_arrow(), &single),
        verify_excision(&walking_arrow(), &circle),
        verify_excision(&cyclic_group(3), &circle),
    ];
    let sizes: Vec<usize> = worked.iter().map(|v| v.coequalizer).collect();
    failures += usize::from(sizes != [3, 2, 3] || worked.iter().any(|v| !v.bijective));
    failures += usize::from((worked[0].level1, worked[0].level0) != (5, 4));
    outcome(
        failures,
        format!(
            "{} categories x {} sites (<= 4 vertices, <= 2 edges, 1-2 cuts); worked coequalizers {:?}",
            cats.len(),
            sites.len(),
            sizes
        ),
    )
}

const M_CAPS: Caps = Caps {
    max_len: 2,
    max_weight: 2,
    path_cap: 1,
};

pub fn m_pool() -> Vec<MObject> {
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

fn kinds(f: &MMor, seen: &mut [bool; 4]) {
    for c in &f.circles {
        match c {
            CircleComponent::CircleEndo { .. } => seen[0] = true,
            CircleComponent::VertexToCircle { .. } => seen[1] = true,
            CircleComponent::CycleToCircle { .. } => seen[2] = true,
        }
    }
    if !f.quivers.is_empty() {
        seen[3] = true;
    }
}

fn m_laws(cfg: Config) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xA550C);
    let pool = m_pool();
    let homs: Vec<Vec<HomSet>> = pool
        .iter()
        .map(|a| pool.iter().map(|b| hom_m(a, b, M_CAPS)).collect())
        .collect();
    let idx: Vec<usize> = (0..pool.len()).collect();
    let mut failures = 0;
    let mut seen = [false; 4];
    let mut triples = 0;
    while triples < cfg.samples {
        let (a, b, c, d) = (
            *idx.choose(&mut rng).unwrap(),
            *idx.choose(&mut rng).unwrap(),
            *idx.choose(&mut rng).unwrap(),
            *idx.choose(&mut rng).unwrap(),
        );
        let (Some(f), Some(g), Some(h)) = (
            homs[a][b].morphisms.choose(&mut rng),
            homs[b][c].morphisms.choose(&mut rng),
            homs[c][d].morphisms.choose(&mut rng),
        ) else {
            continue;
        };
        triples += 1;
        for x in [f, g, h] {
            kinds(x, &mut seen);
        }
        let left = compose_m(h, &compose_m(g, f).expect("composable")).expect("composable");
        let right = compose_m(&compose_m(h, g).expect("composable"), f).expect("composable");
        failures += usize::from(left != right);
    }
    let cats = [walking_arrow(), cyclic_group(3), symmetric_group(3)];
    let tables: Vec<_> = cats.iter().map(compute_hh).collect();
    let mut pairs = 0;
    let mut values = 0;
    while pairs < cfg.samples {
        let (a, b, c) = (
            *idx.choose(&mut rng).unwrap(),
            *idx.choose(&mut rng).unwrap(),
            *idx.choose(&mut rng).unwrap(),
        );
        let (Some(f), Some(g)) = (
            homs[a][b].morphisms.choose(&mut rng),
            homs[b][c].morphisms.choose(&mut rng),
        ) else {
            continue;
        };
        pairs += 1;
        let ci = rng.gen_range(0..cats.len());
        let (cat, t) = (&cats[ci], &tables[ci]);
        let gf = compose_m(g, f).expect("composable");
        let (mf, mg, mgf) = (
            fact_map(cat, t, f),
            fact_map(cat, t, g),
            fact_map(cat, t, &gf),
        );
        for x in fact_homology(cat, t, &pool[a]) {
            values += 1;
            failures += usize::from(mgf.apply(&x) != mg.apply(&mf.apply(&x)));
        }
    }
    failures += usize::from(seen.iter().any(|s| !s));
    outcome(
        failures,
        format!(
            "{triples} triples, {pairs} pairs over {values} values; component kinds seen {seen:?}"
        ),
    )
}

fn graph_invariants() -> Outcome {
    let mut failures = 0;
    for n in 1..=12 {
        failures += usize::from(!cyclic(n).unwrap().classify().cyclically_directed);
    }
    for g in all_digraphs(3, 3) {
        let x = exit_path(&g);
        failures += usize::from(x.category.object_count() != g.vertex_count() + g.edge_count());
        failures += usize::from(
            x.category.morphism_count() - x.category.object_count() != 2 * g.edge_count(),
        );
    }
    outcome(
        failures,
        "cyclic(1..=12); exit paths of graphs <= 3 vertices, <= 3 edges".into(),
    )
}

fn delta_invariants() -> Outcome {
    let mut failures = 0;
    let mut maps = 0;
    for p in 0..=4 {
        for q in 0..=4 {
            for s in all_monotone_maps(p, q) {
                maps += 1;
                let (a, c) = s.factor_active_closed();
                failures += usize::from(a.then(&c).ok() != Some(s.clone()));
                failures += usize::from(!a.is_active() || !c.is_closed());
                let mut factorizations = 0;
                for k in 0..=4 {
                    for a2 in all_monotone_maps(p, k)
                        .into_iter()
                        .filter(MonotoneMap::is_active)
                    {
                        for c2 in all_monotone_maps(k, q)
                            .into_iter()
                            .filter(MonotoneMap::is_closed)
                        {
                            factorizations += usize::from(a2.then(&c2).ok() == Some(s.clone()));
                        }
                    }
                }
                failures += usize::from(factorizations != 1);
                failures +=
                    usize::from(classify_quiver_mor(&delta_mor_to_quiver(&s)).idle != s.is_idle());
            }
        }
    }
    outcome(
        failures,
        format!("{maps} monotone maps [p] -> [q], p, q <= 4"),
    )
}

fn quiver_hom_products() -> Outcome {
    let caps = Caps {
        max_len: 2,
        max_weight: 2,
        path_cap: 2,
    };
    let graphs = all_digraphs(3, 2);
    let mut failures = 0;
    for a in &graphs {
        for b in &graphs {
            let h = hom_m(
                &MObject::from_digraph(0, a),
                &MObject::from_digraph(0, b),
                caps,
            );
            failures += usize::from(
                Count::Finite(h.morphisms.len() as u64)
                    != hom_quiver_count(b, a, Some(caps.path_cap)),
            );
        }
    }
    outcome(
        failures,
        format!(
            "{} pairs of graphs <= 3 vertices, <= 2 edges",
            graphs.len().pow(2)
        ),
    )
}

/// Composable chains of length `p`, counted from the hom-sets.
fn chains(c: &FinCat, p: usize) -> u64 {
    let mut at: Vec<u64> = vec![1; c.object_count()];
    for _ in 0..p {
        let mut next = vec![0u64; c.object_count()];
        for m in c.morphisms() {
            next[m.tgt.0] += at[m.src.0];
        }
        at = next;
    }
    at.iter().sum()
}

fn segal_chains() -> Outcome {
    let mut failures = 0;
    for (_, c) in fixture_categories() {
        for p in 0..=4 {
            failures += usize::from(count_reps(&c, &linear(p)) != chains(&c, p));
        }
    }
    outcome(failures, "linear(0..=4) over all fixture categories".into())
}

fn delta_para_functor() -> Outcome {
    let mut failures = 0;
    for p in 0..=3 {
        failures +=
            usize::from(delta_to_para(&MonotoneMap::identity(p)) != ParaMor::identity(p + 1));
        for q in 0..=3 {
            for r in 0..=3 {
                for s in all_monotone_maps(p, q) {
                    for t in all_monotone_maps(q, r) {
                        let lhs = delta_to_para(&s.then(&t).expect("composable"));
                        let rhs = compose_para(&delta_to_para(&t), &delta_to_para(&s))
                            .expect("composable");
                        failures += usize::from(lhs != rhs);
                    }
                }
            }
        }
    }
    outcome(failures, "p, q, r <= 3".into())
}

fn para_power_and_duality() -> Outcome {
    let mut failures = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            for f in enumerate_para(m, n) {
                for r in 1..=4 {
                    for s in 1..=4 {
                        failures +=
                            usize::from(para_phi(r, &para_phi(s, &f)) != para_phi(r * s, &f));
                    }
                }
                failures += usize::from(undualize_para(&dualize_para(&f)) != f);
                failures += usize::from(dualize_para(&dualize_para(&f)) != unit_conjugate(&f));
            }
        }
    }
    outcome(failures, "r, s <= 4; m, n <= 3".into())
}

fn cartesian_law(cfg: Config) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xCA27);
    let mut failures = 0;
    for _ in 0..cfg.samples {
        let (m, n) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let f = random_epi(&mut rng, m, n);
        let (cyc, cover) = cartesian_factor(&f);
        failures += usize::from(compose_epi(&cover, &cyc).ok() != Some(f.clone()));
        failures += usize::from(degree(&cyc) != 1 || degree(&cover) != degree(&f));
    }
    outcome(failures, format!("{} random morphisms", cfg.samples))
}

/// Cyclic words of length `1..=max_len`, each in least rotation.
fn cyclic_words(c: &FinCat, max_len: usize) -> BTreeSet<Vec<MorId>> {
    fn extend(c: &FinCat, word: &mut Vec<MorId>, max_len: usize, out: &mut BTreeSet<Vec<MorId>>) {
        let last = *word.last().expect("non-empty");
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

fn word_quotient(c: &FinCat, max_len: usize) -> usize {
    let words: Vec<Vec<MorId>> = cyclic_words(c, max_len).into_iter().collect();
    let index: BTreeMap<&Vec<MorId>, usize> =
        words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = quiver_hh_core::partition::UnionFind::new(words.len());
    for (i, w) in words.iter().enumerate() {
        let n = w.len();
        if n < 2 {
            continue;
        }
        for k in 0..n {
            let next = (k + 1) % n;
            let merged = c
                .compose(w[next], w[k])
                .expect("consecutive letters compose");
            let v: Vec<MorId> = (0..n)
                .filter(|&j| j != next)
                .map(|j| if j == k { merged } else { w[j] })
                .collect();
            uf.union(i, index[&canonical_rotation(&v)]);
        }
    }
    uf.classes().1
}

fn word_quotient_oracle() -> Outcome {
    let mut failures = 0;
    for (_, c) in fixture_categories() {
        failures += usize::from(word_quotient(&c, 3) != compute_hh(&c).len());
    }
    outcome(failures, "all fixture categories".into())
}

fn rotation_invariance() -> Outcome {
    let mut failures = 0;
    let mut words = 0;
    for (_, c) in fixture_categories() {
        let t = compute_hh(&c);
        for w in cyclic_words(&c, 4) {
            words += 1;
            let w = CyclicWord::new(&c, w).expect("cyclic word");
            let cls = class_of_word(&c, &t, &w);
            failures += (0..w.len())
                .filter(|&k| class_of_word(&c, &t, &w.rotate(k)) != cls)
                .count();
        }
    }
    outcome(failures, format!("{words} words in least rotation"))
}

fn trace_factorization() -> Outcome {
    let mut failures = 0;
    let objects = [
        MObject::quiver(&linear(2)),
        MObject::quiver(&cyclic(2).unwrap()),
    ];
    for (_, c) in fixture_categories() {
        let t = compute_hh(&c);
        for m in &objects {
            for f in hom_m(m, &MObject::circle(), M_CAPS).morphisms {
                let CircleComponent::VertexToCircle { vertex, .. } = f.circles[0] else {
                    continue;
                };
                let map = fact_map(&c, &t, &f);
                for x in fact_homology(&c, &t, m) {
                    let label = x.reps[0].vertex_labels[vertex.0];
                    failures += usize::from(
                        map.apply(&x).hh[0] != trace_obj(&c, &t, label).expect("object"),
                    );
                }
            }
        }
    }
    outcome(failures, "vertices of linear(2) and cyclic(2)".into())
}

fn worked_examples() -> Outcome {
    let mut failures = 0;
    let arrow = walking_arrow();
    failures += usize::from(count_reps(&arrow, &linear(1)) != 3);
    failures += usize::from(count_reps(&cyclic_group(2), &cyclic(1).unwrap()) != 2);
    failures += usize::from(compute_hh(&symmetric_group(3)).len() != 3);
    let h = hom_m(
        &MObject::quiver(&cyclic(1).unwrap()),
        &MObject::circle(),
        Caps {
            max_len: 2,
            max_weight: 2,
            path_cap: 2,
        },
    );
    failures += usize::from(h.morphisms.len() != 3);
    let cycles = enumerate_directed_cycles(&cyclic(1).unwrap(), 3);
    failures += usize::from(cycles.len() != 2);
    let t = compute_hh(&arrow);
    let m = MObject::new(1, vec![linear(1)]).unwrap();
    failures += usize::from(fact_homology(&arrow, &t, &m).len() != 6);
    outcome(failures, "fixture counts".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_values() {
        assert_eq!(necklaces(2, 1), 2);
        assert_eq!(necklaces(2, 4), 3);
        assert_eq!(necklaces(3, 6), 116);
    }

    #[test]
    fn klein_four_has_four_classes() {
        let k = klein_four();
        assert_eq!(conjugacy_classes(&k), 4);
        assert_eq!(compute_hh(&k).len(), 4);
    }

    #[test]
    fn fixtures_fit_the_grid() {
        assert!(fixture_categories()
            .iter()
            .all(|(_, c)| c.morphism_count() <= 8));
    }
}
