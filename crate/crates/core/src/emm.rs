//! The category `M` on connected components: objects are disjoint unions
//! of circles and connected quivers, morphisms are assembled one target
//! component at a time.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::digraph::{Digraph, EdgeId, VertexId};
use crate::error::{Error, Result};
use crate::fincat::{enumerate_reps, pullback_rep_unchecked, FinCat, Representation};
use crate::hochschild::{
    canonical_rotation, class_of_word, compute_hh, is_primitive, psi, smallest_period, trace_obj,
    CyclicWord, HHClass, HHTable,
};
use crate::partition::UnionFind;
use crate::quiver::{enumerate_quiver_mors, Path, QuiverMor};
use crate::simplex::MonotoneMap;

/// A digraph split into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Digraph>,
    /// Component and local id of every vertex.
    pub vertex_home: Vec<(usize, VertexId)>,
    /// Component and local id of every edge.
    pub edge_home: Vec<(usize, EdgeId)>,
}

impl Decomposition {
    pub fn new(d: &Digraph) -> Self {
        let (labels, count) = d.component_labels();
        let mut vertices = vec![Vec::new(); count];
        let mut edges = vec![Vec::new(); count];
        let mut vertex_home = Vec::with_capacity(d.vertex_count());
        for v in d.vertex_ids() {
            let c = labels[v.0];
            vertex_home.push((c, VertexId(vertices[c].len())));
            vertices[c].push(d.vertex_name(v).to_string());
        }
        let mut edge_home = Vec::with_capacity(d.edge_count());
        for e in d.edge_ids() {
            let c = labels[d.src(e).0];
            edge_home.push((c, EdgeId(edges[c].len())));
            edges[c].push((
                d.edge_name(e).to_string(),
                d.vertex_name(d.src(e)).to_string(),
                d.vertex_name(d.tgt(e)).to_string(),
            ));
        }
        let parts = vertices
            .into_iter()
            .zip(edges)
            .map(|(vs, es)| Digraph::new(vs, es).expect("components of a graph are graphs"))
            .collect();
        Decomposition {
            parts,
            vertex_home,
            edge_home,
        }
    }

    /// Splits a representation of the whole graph into its components.
    pub fn split_rep(&self, r: &Representation) -> Vec<Representation> {
        let mut out: Vec<Representation> = self
            .parts
            .iter()
            .map(|p| Representation {
                vertex_labels: Vec::with_capacity(p.vertex_count()),
                edge_labels: Vec::with_capacity(p.edge_count()),
            })
            .collect();
        for (v, &(c, _)) in self.vertex_home.iter().enumerate() {
            out[c].vertex_labels.push(r.vertex_labels[v]);
        }
        for (e, &(c, _)) in self.edge_home.iter().enumerate() {
            out[c].edge_labels.push(r.edge_labels[e]);
        }
        out
    }

    /// Restricts a morphism out of the whole graph to component `c`, with
    /// paths moved into the target component that receives it.
    fn localize_path(&self, p: &Path) -> (usize, Path) {
        let (c, start) = self.vertex_home[p.start.0];
        let (_, end) = self.vertex_home[p.end.0];
        let edges = p.edges.iter().map(|e| self.edge_home[e.0].1).collect();
        (c, Path { start, end, edges })
    }
}

/// Component-wise pieces of `f: Γ → Ξ`: for each component of `Γ`, the
/// component of `Ξ` it lands in and the restricted morphism.
pub fn split_quiver_mor(f: &QuiverMor) -> Vec<(usize, QuiverMor)> {
    let src = Decomposition::new(&f.source);
    let tgt = Decomposition::new(&f.target);
    let mut landing = vec![usize::MAX; src.parts.len()];
    let mut vmaps = vec![Vec::new(); src.parts.len()];
    let mut paths = vec![Vec::new(); src.parts.len()];
    for (v, &(c, _)) in src.vertex_home.iter().enumerate() {
        let (tc, local) = tgt.vertex_home[f.vertex_map[v].0];
        landing[c] = tc;
        vmaps[c].push(local);
    }
    for (e, &(c, _)) in src.edge_home.iter().enumerate() {
        paths[c].push(tgt.localize_path(&f.edge_paths[e]).1);
    }
    src.parts
        .into_iter()
        .enumerate()
        .map(|(c, part)| {
            (
                landing[c],
                QuiverMor {
                    source: part,
                    target: tgt.parts[landing[c]].clone(),
                    vertex_map: core::mem::take(&mut vmaps[c]),
                    edge_paths: core::mem::take(&mut paths[c]),
                },
            )
        })
        .collect()
}

/// An object of `M`: some circles and a list of connected quivers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MObject {
    pub circles: usize,
    pub quivers: Vec<Digraph>,
}

impl MObject {
    pub fn new(circles: usize, quivers: Vec<Digraph>) -> Result<Self> {
        for q in &quivers {
            if !q.classify().connected {
                return Err(Error::Incompatible(
                    "quiver components must be connected".into(),
                ));
            }
        }
        Ok(MObject { circles, quivers })
    }

    /// Circles plus the components of a digraph.
    pub fn from_digraph(circles: usize, d: &Digraph) -> Self {
        MObject {
            circles,
            quivers: Decomposition::new(d).parts,
        }
    }

    pub fn circle() -> Self {
        MObject {
            circles: 1,
            quivers: Vec::new(),
        }
    }

    pub fn quiver(d: &Digraph) -> Self {
        MObject::from_digraph(0, d)
    }

    pub fn empty() -> Self {
        MObject {
            circles: 0,
            quivers: Vec::new(),
        }
    }

    pub fn component_count(&self) -> usize {
        self.circles + self.quivers.len()
    }
}

/// A vertex, or a primitive closed walk stored in least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DirectedCycle {
    ConstantAt(VertexId),
    Walk(Vec<EdgeId>),
}

impl Ord for DirectedCycle {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DirectedCycle::ConstantAt(a), DirectedCycle::ConstantAt(b)) => a.cmp(b),
            (DirectedCycle::ConstantAt(_), DirectedCycle::Walk(_)) => Ordering::Less,
            (DirectedCycle::Walk(_), DirectedCycle::ConstantAt(_)) => Ordering::Greater,
            (DirectedCycle::Walk(a), DirectedCycle::Walk(b)) => (a.len(), a).cmp(&(b.len(), b)),
        }
    }
}

impl PartialOrd for DirectedCycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn is_closed_walk(d: &Digraph, walk: &[EdgeId]) -> bool {
    !walk.is_empty()
        && walk.iter().all(|e| e.0 < d.edge_count())
        && (0..walk.len()).all(|i| d.tgt(walk[i]) == d.src(walk[(i + 1) % walk.len()]))
}

/// Writes a closed walk as `root^k` with `root` primitive and in least
/// rotation.
pub fn primitive_root(walk: &[EdgeId]) -> (Vec<EdgeId>, usize) {
    let canon = canonical_rotation(walk);
    let p = smallest_period(&canon);
    (canon[..p].to_vec(), walk.len() / p)
}

/// All vertices, then all primitive closed walks of length at most
/// `max_len` up to rotation, ordered by length and then lexicographically.
pub fn enumerate_directed_cycles(d: &Digraph, max_len: usize) -> Vec<DirectedCycle> {
    let mut out: Vec<DirectedCycle> = d.vertex_ids().map(DirectedCycle::ConstantAt).collect();
    for len in 1..=max_len {
        let mut found = Vec::new();
        for first in d.edge_ids() {
            let mut walk = vec![first];
            extend_walks(d, first, len, &mut walk, &mut found);
        }
        out.extend(found.into_iter().map(DirectedCycle::Walk));
    }
    out
}

fn extend_walks(
    d: &Digraph,
    first: EdgeId,
    len: usize,
    walk: &mut Vec<EdgeId>,
    found: &mut Vec<Vec<EdgeId>>,
) {
    let at = d.tgt(*walk.last().expect("non-empty"));
    if walk.len() == len {
        if at == d.src(first) && is_primitive(walk) && canonical_rotation(walk) == *walk {
            found.push(walk.clone());
        }
        return;
    }
    // The least rotation starts with its least letter.
    for e in d.out_edges(at).filter(|&e| e >= first) {
        walk.push(e);
        extend_walks(d, first, len, walk, found);
        walk.pop();
    }
}

fn has_directed_cycle(d: &Digraph) -> bool {
    // Every closed walk contains a simple cycle.
    enumerate_directed_cycles(d, d.vertex_count())
        .iter()
        .any(|c| matches!(c, DirectedCycle::Walk(_)))
}

/// What a target circle receives.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CircleComponent {
    /// A source circle, wrapped `weight` times.
    CircleEndo { circle: usize, weight: u64 },
    /// A vertex of a source quiver.
    VertexToCircle { quiver: usize, vertex: VertexId },
    /// A primitive cycle of a source quiver, wrapped `weight` times.
    CycleToCircle {
        quiver: usize,
        cycle: Vec<EdgeId>,
        weight: u64,
    },
}

/// What a target quiver receives: a quiver morphism from it into a source
/// quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuivComponent {
    pub quiver: usize,
    pub map: QuiverMor,
}

/// A morphism of `M` on connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MMor {
    pub source: MObject,
    pub target: MObject,
    pub circles: Vec<CircleComponent>,
    pub quivers: Vec<QuivComponent>,
}

impl MMor {
    pub fn new(
        source: MObject,
        target: MObject,
        circles: Vec<CircleComponent>,
        quivers: Vec<QuivComponent>,
    ) -> Result<Self> {
        if circles.len() != target.circles || quivers.len() != target.quivers.len() {
            return Err(Error::InvalidMorphism(
                "one component per target component".into(),
            ));
        }
        let bad = |why: &str| Err(Error::InvalidMorphism(why.to_string()));
        for c in &circles {
            match c {
                CircleComponent::CircleEndo { circle, weight } => {
                    if *circle >= source.circles || *weight == 0 {
                        return bad("circle endomorphism out of range");
                    }
                }
                CircleComponent::VertexToCircle { quiver, vertex } => {
                    if *quiver >= source.quivers.len()
                        || vertex.0 >= source.quivers[*quiver].vertex_count()
                    {
                        return bad("vertex out of range");
                    }
                }
                CircleComponent::CycleToCircle {
                    quiver,
                    cycle,
                    weight,
                } => {
                    if *quiver >= source.quivers.len()
                        || *weight == 0
                        || !is_closed_walk(&source.quivers[*quiver], cycle)
                        || !is_primitive(cycle)
                        || canonical_rotation(cycle) != *cycle
                    {
                        return bad("cycle is not a primitive closed walk in least rotation");
                    }
                }
            }
        }
        for (j, q) in quivers.iter().enumerate() {
            if q.quiver >= source.quivers.len()
                || q.map.source != target.quivers[j]
                || q.map.target != source.quivers[q.quiver]
            {
                return bad("quiver component does not match the objects");
            }
        }
        Ok(MMor {
            source,
            target,
            circles,
            quivers,
        })
    }

    pub fn identity(m: &MObject) -> Self {
        MMor {
            source: m.clone(),
            target: m.clone(),
            circles: (0..m.circles)
                .map(|c| CircleComponent::CircleEndo {
                    circle: c,
                    weight: 1,
                })
                .collect(),
            quivers: m
                .quivers
                .iter()
                .enumerate()
                .map(|(i, q)| QuivComponent {
                    quiver: i,
                    map: QuiverMor::identity(q),
                })
                .collect(),
        }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &MMor) -> Result<MMor> {
        compose_m(g, self)
    }
}

/// Caps on the potentially infinite parts of a hom-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_len: usize,
    pub max_weight: u64,
    pub path_cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSet {
    pub morphisms: Vec<MMor>,
    /// Some morphism was left out because a cap bound.
    pub truncated: bool,
}

fn circle_options(m: &MObject, caps: Caps) -> (Vec<CircleComponent>, bool) {
    let mut out = Vec::new();
    for circle in 0..m.circles {
        for weight in 1..=caps.max_weight {
            out.push(CircleComponent::CircleEndo { circle, weight });
        }
    }
    let mut truncated = m.circles > 0;
    for (qi, q) in m.quivers.iter().enumerate() {
        let cycles = enumerate_directed_cycles(q, caps.max_len);
        for z in cycles {
            match z {
                DirectedCycle::ConstantAt(v) => out.push(CircleComponent::VertexToCircle {
                    quiver: qi,
                    vertex: v,
                }),
                DirectedCycle::Walk(cycle) => {
                    for weight in 1..=caps.max_weight {
                        out.push(CircleComponent::CycleToCircle {
                            quiver: qi,
                            cycle: cycle.clone(),
                            weight,
                        });
                    }
                }
            }
        }
        // Any cycle has unboundedly many weights, so the weight cap binds.
        truncated |= has_directed_cycle(q);
    }
    (out, truncated)
}

/// `π₀ Hom_M(M, N)` within the caps.
pub fn hom_m(m: &MObject, n: &MObject, caps: Caps) -> HomSet {
    let mut slots: Vec<Vec<Slot>> = Vec::new();
    let mut flags: Vec<bool> = Vec::new();
    if n.circles > 0 {
        let (opts, t) = circle_options(m, caps);
        for _ in 0..n.circles {
            slots.push(opts.iter().cloned().map(Slot::Circle).collect());
            flags.push(t);
        }
    }
    for target in &n.quivers {
        let mut opts = Vec::new();
        let mut t = false;
        for (qi, source) in m.quivers.iter().enumerate() {
            let (mors, tr) = enumerate_quiver_mors(target, source, caps.path_cap);
            t |= tr;
            opts.extend(
                mors.into_iter()
                    .map(|map| Slot::Quiv(QuivComponent { quiver: qi, map })),
            );
        }
        slots.push(opts);
        flags.push(t);
    }
    let exactly_empty = slots.iter().zip(&flags).any(|(s, &t)| s.is_empty() && !t);
    let truncated = !exactly_empty && flags.iter().any(|&t| t);
    let mut morphisms = Vec::new();
    if slots.iter().all(|s| !s.is_empty()) {
        let mut idx = vec![0usize; slots.len()];
        loop {
            let mut circles = Vec::with_capacity(n.circles);
            let mut quivers = Vec::with_capacity(n.quivers.len());
            for (i, s) in idx.iter().zip(&slots) {
                match &s[*i] {
                    Slot::Circle(c) => circles.push(c.clone()),
                    Slot::Quiv(q) => quivers.push(q.clone()),
                }
            }
            morphisms.push(MMor {
                source: m.clone(),
                target: n.clone(),
                circles,
                quivers,
            });
            let mut k = idx.len();
            let mut advanced = false;
            while k > 0 {
                k -= 1;
                idx[k] += 1;
                if idx[k] < slots[k].len() {
                    advanced = true;
                    break;
                }
                idx[k] = 0;
            }
            if !advanced {
                break;
            }
        }
    }
    HomSet {
        morphisms,
        truncated,
    }
}

#[derive(Clone)]
enum Slot {
    Circle(CircleComponent),
    Quiv(QuivComponent),
}

/// `g ∘ f`.
pub fn compose_m(g: &MMor, f: &MMor) -> Result<MMor> {
    if f.target != g.source {
        return Err(Error::Incomposable);
    }
    let circles = g
        .circles
        .iter()
        .map(|c| match c {
            CircleComponent::CircleEndo { circle, weight: s } => match &f.circles[*circle] {
                CircleComponent::CircleEndo { circle, weight: r } => CircleComponent::CircleEndo {
                    circle: *circle,
                    weight: r * s,
                },
                v @ CircleComponent::VertexToCircle { .. } => v.clone(),
                CircleComponent::CycleToCircle {
                    quiver,
                    cycle,
                    weight: r,
                } => CircleComponent::CycleToCircle {
                    quiver: *quiver,
                    cycle: cycle.clone(),
                    weight: r * s,
                },
            },
            CircleComponent::VertexToCircle { quiver, vertex } => {
                let q = &f.quivers[*quiver];
                CircleComponent::VertexToCircle {
                    quiver: q.quiver,
                    vertex: q.map.vertex_map[vertex.0],
                }
            }
            CircleComponent::CycleToCircle {
                quiver,
                cycle,
                weight,
            } => {
                let q = &f.quivers[*quiver];
                let mut image = Vec::new();
                for e in cycle {
                    image.extend_from_slice(&q.map.edge_paths[e.0].edges);
                }
                if image.is_empty() {
                    let start = g.source.quivers[*quiver].src(cycle[0]);
                    CircleComponent::VertexToCircle {
                        quiver: q.quiver,
                        vertex: q.map.vertex_map[start.0],
                    }
                } else {
                    let (root, k) = primitive_root(&image);
                    CircleComponent::CycleToCircle {
                        quiver: q.quiver,
                        cycle: root,
                        weight: weight * k as u64,
                    }
                }
            }
        })
        .collect();
    let quivers = g
        .quivers
        .iter()
        .map(|q| {
            let inner = &f.quivers[q.quiver];
            QuivComponent {
                quiver: inner.quiver,
                map: q.map.then(&inner.map).expect("components match"),
            }
        })
        .collect();
    Ok(MMor {
        source: f.source.clone(),
        target: g.target.clone(),
        circles,
        quivers,
    })
}

/// A point of `∫_M C`: a trace class per circle and a representation per
/// quiver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactValue {
    pub hh: Vec<HHClass>,
    pub reps: Vec<Representation>,
}

/// The product `HH(C)^circles × Π Rep_C(Γ_α)`, in lexicographic order.
pub fn fact_homology(c: &FinCat, table: &HHTable, m: &MObject) -> Vec<FactValue> {
    let factors: Vec<Vec<Representation>> =
        m.quivers.iter().map(|q| enumerate_reps(c, q)).collect();
    let mut out = Vec::new();
    let total: usize =
        table.len().pow(m.circles as u32) * factors.iter().map(Vec::len).product::<usize>();
    if total == 0 {
        return out;
    }
    let mut hh = vec![0usize; m.circles];
    let mut idx = vec![0usize; factors.len()];
    loop {
        out.push(FactValue {
            hh: hh.iter().map(|&h| HHClass(h)).collect(),
            reps: idx
                .iter()
                .zip(&factors)
                .map(|(&i, f)| f[i].clone())
                .collect(),
        });
        // Odometer over (hh, reps), last coordinate fastest.
        let mut advanced = false;
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < factors[k].len() {
                advanced = true;
                break;
            }
            idx[k] = 0;
        }
        if !advanced {
            for k in (0..hh.len()).rev() {
                hh[k] += 1;
                if hh[k] < table.len() {
                    advanced = true;
                    break;
                }
                hh[k] = 0;
            }
        }
        if !advanced {
            return out;
        }
    }
}

pub fn fact_homology_size(c: &FinCat, table: &HHTable, m: &MObject) -> u64 {
    (table.len() as u64).pow(m.circles as u32)
        * m.quivers
            .iter()
            .map(|q| crate::fincat::count_reps(c, q))
            .product::<u64>()
}

/// The map `∫_M C → ∫_N C` induced by a morphism `M → N`.
pub struct FactMap<'a> {
    pub cat: &'a FinCat,
    pub table: &'a HHTable,
    pub mor: &'a MMor,
}

pub fn fact_map<'a>(c: &'a FinCat, table: &'a HHTable, f: &'a MMor) -> FactMap<'a> {
    FactMap {
        cat: c,
        table,
        mor: f,
    }
}

impl FactMap<'_> {
    pub fn apply(&self, x: &FactValue) -> FactValue {
        let (c, t) = (self.cat, self.table);
        let hh = self
            .mor
            .circles
            .iter()
            .map(|comp| match comp {
                CircleComponent::CircleEndo { circle, weight } => {
                    psi(c, t, *weight as usize, x.hh[*circle])
                }
                CircleComponent::VertexToCircle { quiver, vertex } => {
                    trace_obj(c, t, x.reps[*quiver].vertex_labels[vertex.0])
                        .expect("labels are objects")
                }
                CircleComponent::CycleToCircle {
                    quiver,
                    cycle,
                    weight,
                } => {
                    let w = CyclicWord::along_walk(&x.reps[*quiver], cycle);
                    class_of_word(c, t, &w.repeat(*weight as usize))
                }
            })
            .collect();
        let reps = self
            .mor
            .quivers
            .iter()
            .map(|q| pullback_rep_unchecked(c, &q.map, &x.reps[q.quiver]))
            .collect();
        FactValue { hh, reps }
    }
}

/// A piece of a glued edge: an edge of the cut graph or the segment
/// inserted at a cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    Tilde(EdgeId),
    Segment(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub name: String,
    /// Has a single incident edge, incoming.
    pub minus: VertexId,
    /// Has a single incident edge, outgoing.
    pub plus: VertexId,
}

/// A cut graph `Γ̃` with marked endpoint pairs; gluing a copy of `[p]`
/// into every pair gives the levels `Γ_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcisionSite {
    pub tilde: Digraph,
    pub cuts: Vec<Cut>,
    /// Glued edges between uncut vertices, in cut-graph edge order.
    chains: Vec<(String, VertexId, VertexId, Vec<Link>)>,
    /// Closed chains made of cut pieces only; each glues to a circle.
    loops: Vec<Vec<Link>>,
    glued_graph: Digraph,
}

enum CutEnd {
    Minus(usize),
    Plus,
}

impl ExcisionSite {
    pub fn new(tilde: Digraph, cuts: Vec<Cut>) -> Result<Self> {
        if cuts.is_empty() {
            return Err(Error::InvalidSite("no cuts".into()));
        }
        let mut role: Vec<Option<CutEnd>> = (0..tilde.vertex_count()).map(|_| None).collect();
        for (i, cut) in cuts.iter().enumerate() {
            tilde.check_vertex(cut.minus)?;
            tilde.check_vertex(cut.plus)?;
            for (v, r) in [(cut.minus, CutEnd::Minus(i)), (cut.plus, CutEnd::Plus)] {
                if role[v.0].is_some() {
                    return Err(Error::InvalidSite(format!(
                        "vertex `{}` marked twice",
                        tilde.vertex_name(v)
                    )));
                }
                role[v.0] = Some(r);
            }
            if tilde.valence(cut.minus) != (0, 1) || tilde.valence(cut.plus) != (1, 0) {
                return Err(Error::InvalidSite(format!(
                    "cut `{}` needs one incoming edge at its start and one outgoing at its end",
                    cut.name
                )));
            }
        }
        let out_of = |v: VertexId| tilde.out_edges(v).next().expect("valence checked");
        let mut used = vec![false; cuts.len()];
        let mut chains = Vec::new();
        for e in tilde.edge_ids() {
            let s = tilde.src(e);
            if role[s.0].is_some() {
                continue;
            }
            let mut links = vec![Link::Tilde(e)];
            let mut names = Vec::new();
            let mut at = tilde.tgt(e);
            while let Some(CutEnd::Minus(i)) = role[at.0] {
                used[i] = true;
                names.push(cuts[i].name.clone());
                links.push(Link::Segment(i));
                let next = out_of(cuts[i].plus);
                links.push(Link::Tilde(next));
                at = tilde.tgt(next);
            }
            let name = if names.is_empty() {
                tilde.edge_name(e).to_string()
            } else {
                names.join("+")
            };
            chains.push((name, s, at, links));
        }
        let mut loops = Vec::new();
        for start in 0..cuts.len() {
            if used[start] {
                continue;
            }
            let mut links = Vec::new();
            let mut i = start;
            loop {
                used[i] = true;
                links.push(Link::Segment(i));
                let next = out_of(cuts[i].plus);
                links.push(Link::Tilde(next));
                match role[tilde.tgt(next).0] {
                    Some(CutEnd::Minus(j)) if j == start => break,
                    Some(CutEnd::Minus(j)) => i = j,
                    _ => unreachable!("every chain from an uncut vertex was consumed"),
                }
            }
            loops.push(links);
        }
        let uncut: Vec<VertexId> = tilde.vertex_ids().filter(|v| role[v.0].is_none()).collect();
        let glued_graph = Digraph::new(
            uncut.iter().map(|&v| tilde.vertex_name(v).to_string()),
            chains.iter().map(|(name, s, t, _)| {
                (
                    name.clone(),
                    tilde.vertex_name(*s).to_string(),
                    tilde.vertex_name(*t).to_string(),
                )
            }),
        )?;
        Ok(ExcisionSite {
            tilde,
            cuts,
            chains,
            loops,
            glued_graph,
        })
    }

    /// Cuts the listed edges of `d`: `s: a → b` becomes `s.in: a → s-` and
    /// `s.out: s+ → b`.
    pub fn cut_edges(d: &Digraph, cut: &[EdgeId]) -> Result<Self> {
        if cut.is_empty() {
            return Err(Error::InvalidSite("no cuts".into()));
        }
        for (i, e) in cut.iter().enumerate() {
            if e.0 >= d.edge_count() {
                return Err(Error::EdgeNotFound(format!("#{}", e.0)));
            }
            if cut[..i].contains(e) {
                return Err(Error::DuplicateId(d.edge_name(*e).to_string()));
            }
        }
        let mut vertices: Vec<String> = d.vertex_names().to_vec();
        for &e in cut {
            vertices.push(format!("{}-", d.edge_name(e)));
            vertices.push(format!("{}+", d.edge_name(e)));
        }
        let mut edges = Vec::new();
        for e in d.edge_ids() {
            let (name, s, t) = (
                d.edge_name(e).to_string(),
                d.vertex_name(d.src(e)).to_string(),
                d.vertex_name(d.tgt(e)).to_string(),
            );
            if cut.contains(&e) {
                edges.push((format!("{name}.in"), s, format!("{name}-")));
                edges.push((format!("{name}.out"), format!("{name}+"), t));
            } else {
                edges.push((name, s, t));
            }
        }
        let tilde = Digraph::new(vertices, edges)?;
        let cuts = cut
            .iter()
            .enumerate()
            .map(|(i, &e)| Cut {
                name: d.edge_name(e).to_string(),
                minus: VertexId(d.vertex_count() + 2 * i),
                plus: VertexId(d.vertex_count() + 2 * i + 1),
            })
            .collect();
        ExcisionSite::new(tilde, cuts)
    }

    /// Like [`ExcisionSite::cut_edges`], by edge identifier.
    pub fn cut_edges_by_name<S: AsRef<str>>(d: &Digraph, names: &[S]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| {
                d.edge_id(n.as_ref())
                    .map_err(|_| Error::EdgeNotFound(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        ExcisionSite::cut_edges(d, &ids)
    }

    /// The circle cut at the named points: one edge `s_i+ → s_{i+1}-` per
    /// cut.
    pub fn circle<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let k = names.len();
        if k == 0 {
            return Err(Error::InvalidSite("no cuts".into()));
        }
        let mut vertices = Vec::new();
        for n in names {
            vertices.push(format!("{}-", n.as_ref()));
            vertices.push(format!("{}+", n.as_ref()));
        }
        let edges = (0..k).map(|i| {
            let (a, b) = (names[i].as_ref(), names[(i + 1) % k].as_ref());
            (format!("{a}~{b}"), format!("{a}+"), format!("{b}-"))
        });
        let tilde = Digraph::new(vertices, edges)?;
        let cuts = names
            .iter()
            .enumerate()
            .map(|(i, n)| Cut {
                name: n.as_ref().to_string(),
                minus: VertexId(2 * i),
                plus: VertexId(2 * i + 1),
            })
            .collect();
        ExcisionSite::new(tilde, cuts)
    }

    /// The object the levels glue to.
    pub fn glued(&self) -> MObject {
        MObject::from_digraph(self.loops.len(), &self.glued_graph)
    }

    pub fn glued_graph(&self) -> &Digraph {
        &self.glued_graph
    }

    fn uncut_count(&self) -> usize {
        self.tilde.vertex_count() - 2 * self.cuts.len()
    }

    /// Index of `v` in `Γ_p`, where the `k`-th point of segment `s` is
    /// `s@k`; uncut vertices come first, in cut-graph order.
    fn level_vertex(&self, p: usize, v: VertexId) -> VertexId {
        for (i, c) in self.cuts.iter().enumerate() {
            if v == c.minus {
                return self.segment_vertex(p, i, 0);
            }
            if v == c.plus {
                return self.segment_vertex(p, i, p);
            }
        }
        let before = self.cuts.iter().filter(|c| c.minus < v).count()
            + self.cuts.iter().filter(|c| c.plus < v).count();
        VertexId(v.0 - before)
    }

    fn segment_vertex(&self, p: usize, cut: usize, k: usize) -> VertexId {
        VertexId(self.uncut_count() + cut * (p + 1) + k)
    }

    /// Edge `s#k`, from `s@(k-1)` to `s@k`, of `Γ_p`.
    fn segment_edge(&self, p: usize, cut: usize, k: usize) -> EdgeId {
        debug_assert!(k >= 1 && k <= p);
        EdgeId(self.tilde.edge_count() + cut * p + k - 1)
    }

    /// The graph `Γ_p`.
    pub fn level(&self, p: usize) -> Digraph {
        let t = &self.tilde;
        let mut names = vec![String::new(); self.uncut_count() + self.cuts.len() * (p + 1)];
        for v in t.vertex_ids() {
            let lv = self.level_vertex(p, v);
            if lv.0 < self.uncut_count() {
                names[lv.0] = t.vertex_name(v).to_string();
            }
        }
        for (i, c) in self.cuts.iter().enumerate() {
            for k in 0..=p {
                names[self.segment_vertex(p, i, k).0] = format!("{}@{k}", c.name);
            }
        }
        let mut edges: Vec<(String, String, String)> = t
            .edge_ids()
            .map(|e| {
                (
                    t.edge_name(e).to_string(),
                    names[self.level_vertex(p, t.src(e)).0].clone(),
                    names[self.level_vertex(p, t.tgt(e)).0].clone(),
                )
            })
            .collect();
        for (i, c) in self.cuts.iter().enumerate() {
            for k in 1..=p {
                edges.push((
                    format!("{}#{k}", c.name),
                    names[self.segment_vertex(p, i, k - 1).0].clone(),
                    names[self.segment_vertex(p, i, k).0].clone(),
                ));
            }
        }
        Digraph::new(names, edges).expect("levels are graphs")
    }

    fn segment_path(&self, p: usize, cut: usize, from: usize, to: usize) -> Vec<EdgeId> {
        (from + 1..=to)
            .map(|k| self.segment_edge(p, cut, k))
            .collect()
    }

    /// The quiver morphism `Γ_p → Γ_q` induced by `σ: [p] → [q]`; the edge
    /// into a cut start absorbs the segment up to `σ(0)` and the edge out of
    /// a cut end absorbs the segment from `σ(p)`.
    pub fn level_map(&self, sigma: &MonotoneMap) -> QuiverMor {
        let (p, q) = (sigma.p(), sigma.q());
        let source = self.level(p);
        let target = self.level(q);
        let t = &self.tilde;
        let mut vertex_map = vec![VertexId(0); source.vertex_count()];
        for v in t.vertex_ids() {
            if self.cuts.iter().all(|c| c.minus != v && c.plus != v) {
                let lv = self.level_vertex(p, v);
                vertex_map[lv.0] = self.level_vertex(q, v);
            }
        }
        for i in 0..self.cuts.len() {
            for k in 0..=p {
                vertex_map[self.segment_vertex(p, i, k).0] =
                    self.segment_vertex(q, i, sigma.apply(k));
            }
        }
        let mut edge_paths = Vec::with_capacity(source.edge_count());
        for e in t.edge_ids() {
            let mut edges = Vec::new();
            if let Some(i) = self.cuts.iter().position(|c| c.plus == t.src(e)) {
                edges.extend(self.segment_path(q, i, sigma.apply(p), q));
            }
            edges.push(e);
            if let Some(i) = self.cuts.iter().position(|c| c.minus == t.tgt(e)) {
                edges.extend(self.segment_path(q, i, 0, sigma.apply(0)));
            }
            let start = vertex_map[source.src(e).0];
            let end = vertex_map[source.tgt(e).0];
            edge_paths.push(Path { start, end, edges });
        }
        for i in 0..self.cuts.len() {
            for k in 1..=p {
                let (a, b) = (sigma.apply(k - 1), sigma.apply(k));
                edge_paths.push(Path {
                    start: self.segment_vertex(q, i, a),
                    end: self.segment_vertex(q, i, b),
                    edges: self.segment_path(q, i, a, b),
                });
            }
        }
        QuiverMor {
            source,
            target,
            vertex_map,
            edge_paths,
        }
    }

    /// The two face maps `Γ_0 → Γ_1`, from the cofaces `[0] ⇉ [1]`.
    pub fn face_maps(&self) -> (QuiverMor, QuiverMor) {
        (
            self.level_map(&MonotoneMap::coface(1, 0)),
            self.level_map(&MonotoneMap::coface(1, 1)),
        )
    }

    fn link_path(&self, p: usize, links: &[Link]) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for l in links {
            match *l {
                Link::Tilde(e) => out.push(e),
                Link::Segment(i) => out.extend(self.segment_path(p, i, 0, p)),
            }
        }
        out
    }

    /// The canonical morphism `M_p → M` of the site.
    pub fn refinement(&self, p: usize) -> MMor {
        let level = self.level(p);
        let decomp = Decomposition::new(&level);
        let source = MObject {
            circles: 0,
            quivers: decomp.parts.clone(),
        };
        let target = self.glued();
        let whole = QuiverMor {
            source: self.glued_graph.clone(),
            target: level.clone(),
            vertex_map: (0..self.glued_graph.vertex_count()).map(VertexId).collect(),
            edge_paths: self
                .chains
                .iter()
                .map(|(_, s, t, links)| Path {
                    start: self.level_vertex(p, *s),
                    end: self.level_vertex(p, *t),
                    edges: self.link_path(p, links),
                })
                .collect(),
        };
        let quivers = split_quiver_mor(&whole)
            .into_iter()
            .map(|(quiver, map)| QuivComponent { quiver, map })
            .collect();
        let circles = self
            .loops
            .iter()
            .map(|links| {
                let walk = self.link_path(p, links);
                let (quiver, _) = decomp.edge_home[walk[0].0];
                let local: Vec<EdgeId> = walk.iter().map(|e| decomp.edge_home[e.0].1).collect();
                let (cycle, k) = primitive_root(&local);
                debug_assert_eq!(k, 1);
                CircleComponent::CycleToCircle {
                    quiver,
                    cycle,
                    weight: 1,
                }
            })
            .collect();
        MMor {
            source,
            target,
            circles,
            quivers,
        }
    }
}

/// Outcome of an excision check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcisionVerdict {
    pub level1: usize,
    pub level0: usize,
    pub coequalizer: usize,
    pub glued: usize,
    /// Class sizes of the coequalizer, in order of their least member.
    pub class_sizes: Vec<usize>,
    pub bijective: bool,
    pub witness: Option<String>,
}

/// Computes `coeq(Rep(Γ_1) ⇉ Rep(Γ_0))` and compares it with `∫_M C` of the
/// glued object along the canonical map from level zero.
pub fn verify_excision(c: &FinCat, site: &ExcisionSite) -> ExcisionVerdict {
    let table = compute_hh(c);
    let g0 = site.level(0);
    let g1 = site.level(1);
    let level0 = enumerate_reps(c, &g0);
    let (d0, d1) = site.face_maps();
    let mut uf = UnionFind::new(level0.len());
    let index = |r: &Representation| level0.binary_search(r).expect("faces land in level zero");
    let mut level1 = 0usize;
    for r in crate::fincat::RepIter::new(c, &g1) {
        level1 += 1;
        let a = index(&pullback_rep_unchecked(c, &d0, &r));
        let b = index(&pullback_rep_unchecked(c, &d1, &r));
        uf.union(a, b);
    }
    let (labels, count) = uf.classes();
    let mut class_sizes = vec![0usize; count];
    for &l in &labels {
        class_sizes[l] += 1;
    }

    let rho = site.refinement(0);
    let decomp = Decomposition::new(&g0);
    let map = fact_map(c, &table, &rho);
    let glued_values = fact_homology(c, &table, &site.glued());
    let mut image: Vec<Option<FactValue>> = vec![None; count];
    let mut witness = None;
    for (r, &l) in level0.iter().zip(&labels) {
        let value = map.apply(&FactValue {
            hh: Vec::new(),
            reps: decomp.split_rep(r),
        });
        match &image[l] {
            None => image[l] = Some(value),
            Some(prev) if *prev != value => {
                witness.get_or_insert_with(|| format!("class {l} maps to two values"));
            }
            Some(_) => {}
        }
    }
    let mut hit: BTreeMap<FactValue, usize> = BTreeMap::new();
    for (l, v) in image.iter().enumerate() {
        let v = v.clone().expect("every class has a member");
        if let Some(prev) = hit.insert(v, l) {
            witness.get_or_insert_with(|| format!("classes {prev} and {l} have the same image"));
        }
    }
    if witness.is_none() {
        if let Some(v) = glued_values.iter().find(|v| !hit.contains_key(v)) {
            witness = Some(format!("value {v:?} is not hit"));
        }
    }
    ExcisionVerdict {
        level1,
        level0: level0.len(),
        coequalizer: count,
        glued: glued_values.len(),
        class_sizes,
        bijective: witness.is_none() && count == glued_values.len(),
        witness,
    }
}
