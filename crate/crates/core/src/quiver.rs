//! Free categories on digraphs and the morphisms between them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};

use crate::digraph::{linear, Digraph, DigraphMor, EdgeId, EdgeImage, Subgraph, VertexId};
use crate::error::{Error, Result};
use crate::simplex::MonotoneMap;

/// A directed path, i.e. a morphism of the free category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: VertexId,
    pub end: VertexId,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn empty(v: VertexId) -> Self {
        Path {
            start: v,
            end: v,
            edges: Vec::new(),
        }
    }

    pub fn edge(d: &Digraph, e: EdgeId) -> Self {
        Path {
            start: d.src(e),
            end: d.tgt(e),
            edges: vec![e],
        }
    }

    /// Validates a head-to-tail edge sequence starting at `start`.
    pub fn new(d: &Digraph, start: VertexId, edges: Vec<EdgeId>) -> Result<Self> {
        d.check_vertex(start)?;
        let mut at = start;
        for &e in &edges {
            if e.0 >= d.edge_count() {
                return Err(Error::UnknownEdge(format!("#{}", e.0)));
            }
            if d.src(e) != at {
                return Err(Error::InvalidMorphism(format!(
                    "edge `{}` does not continue the path",
                    d.edge_name(e)
                )));
            }
            at = d.tgt(e);
        }
        Ok(Path {
            start,
            end: at,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self` followed by `next`.
    pub fn concat(&self, next: &Path) -> Path {
        debug_assert_eq!(self.end, next.start);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&next.edges);
        Path {
            start: self.start,
            end: next.end,
            edges,
        }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.edges.len(), &self.edges, self.start, self.end).cmp(&(
            other.edges.len(),
            &other.edges,
            other.start,
            other.end,
        ))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All paths `u → v` of length at most `max_len`, ordered by length and
/// then lexicographically by edge index.
pub fn enumerate_paths(d: &Digraph, u: VertexId, v: VertexId, max_len: usize) -> Result<Vec<Path>> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    let mut out = Vec::new();
    let mut level = vec![Path::empty(u)];
    for k in 0..=max_len {
        out.extend(level.iter().filter(|p| p.end == v).cloned());
        if k == max_len {
            break;
        }
        let mut next = Vec::new();
        for p in &level {
            for e in d.out_edges(p.end) {
                let mut q = p.clone();
                q.edges.push(e);
                q.end = d.tgt(e);
                next.push(q);
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(out)
}

/// A cardinality that may be infinite. `0 · ∞ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Count::Finite(n) => Some(n),
            Count::Infinite => None,
        }
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        match (self, rhs) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a + b),
            _ => Count::Infinite,
        }
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        match (self, rhs) {
            (Count::Finite(0), _) | (_, Count::Finite(0)) => Count::Finite(0),
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a * b),
            _ => Count::Infinite,
        }
    }
}

impl core::iter::Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::Finite(0), Add::add)
    }
}

impl core::iter::Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::Finite(1), Mul::mul)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "∞"),
        }
    }
}

fn reachable(d: &Digraph, from: VertexId, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; d.vertex_count()];
    let mut stack = vec![from];
    seen[from.0] = true;
    while let Some(x) = stack.pop() {
        for edge in d.edges() {
            let (a, b) = if forward {
                (edge.src, edge.tgt)
            } else {
                (edge.tgt, edge.src)
            };
            if a == x && !seen[b.0] {
                seen[b.0] = true;
                stack.push(b);
            }
        }
    }
    seen
}

/// Size of `Hom(u, v)` in the free category. Infinite exactly when a
/// directed cycle lies on some `u → v` route.
pub fn hom_is_finite(d: &Digraph, u: VertexId, v: VertexId) -> Result<Count> {
    d.check_vertex(u)?;
    d.check_vertex(v)?;
    let fwd = reachable(d, u, true);
    let bwd = reachable(d, v, false);
    let live: Vec<bool> = fwd.iter().zip(&bwd).map(|(a, b)| *a && *b).collect();
    let edges: Vec<_> = d
        .edges()
        .iter()
        .filter(|e| live[e.src.0] && live[e.tgt.0])
        .collect();
    // Kahn's algorithm on the live part; leftovers mean a cycle.
    let mut indeg = vec![0usize; d.vertex_count()];
    for e in &edges {
        indeg[e.tgt.0] += 1;
    }
    let mut queue: Vec<usize> = (0..d.vertex_count())
        .filter(|&x| live[x] && indeg[x] == 0)
        .collect();
    let mut order = Vec::new();
    while let Some(x) = queue.pop() {
        order.push(x);
        for e in &edges {
            if e.src.0 == x {
                indeg[e.tgt.0] -= 1;
                if indeg[e.tgt.0] == 0 {
                    queue.push(e.tgt.0);
                }
            }
        }
    }
    if order.len() < live.iter().filter(|&&b| b).count() {
        return Ok(Count::Infinite);
    }
    let mut ways = vec![0u64; d.vertex_count()];
    if live[u.0] {
        ways[u.0] = 1;
    }
    for &x in &order {
        for e in &edges {
            if e.src.0 == x {
                ways[e.tgt.0] += ways[x];
            }
        }
    }
    Ok(Count::Finite(if live[v.0] { ways[v.0] } else { 0 }))
}

/// A functor of free categories: a vertex map and a path for every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverMor {
    pub source: Digraph,
    pub target: Digraph,
    pub vertex_map: Vec<VertexId>,
    pub edge_paths: Vec<Path>,
}

impl QuiverMor {
    pub fn new(
        source: Digraph,
        target: Digraph,
        vertex_map: Vec<VertexId>,
        edge_paths: Vec<Path>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertex_count() || edge_paths.len() != source.edge_count() {
            return Err(Error::InvalidMorphism(
                "map sizes do not match the source".into(),
            ));
        }
        for &v in &vertex_map {
            target.check_vertex(v)?;
        }
        for (e, p) in source.edge_ids().zip(&edge_paths) {
            let checked = Path::new(&target, p.start, p.edges.clone())?;
            if checked.end != p.end
                || p.start != vertex_map[source.src(e).0]
                || p.end != vertex_map[source.tgt(e).0]
            {
                return Err(Error::InvalidMorphism(format!(
                    "path for `{}` has the wrong endpoints",
                    source.edge_name(e)
                )));
            }
        }
        Ok(QuiverMor {
            source,
            target,
            vertex_map,
            edge_paths,
        })
    }

    /// Builds the paths from bare edge lists; empty lists become the empty
    /// path at the image of the source vertex.
    pub fn from_edge_lists(
        source: Digraph,
        target: Digraph,
        vertex_map: Vec<VertexId>,
        edge_lists: Vec<Vec<EdgeId>>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertex_count() || edge_lists.len() != source.edge_count() {
            return Err(Error::InvalidMorphism(
                "map sizes do not match the source".into(),
            ));
        }
        for &v in &vertex_map {
            target.check_vertex(v)?;
        }
        let edge_paths = source
            .edge_ids()
            .zip(edge_lists)
            .map(|(e, list)| Path::new(&target, vertex_map[source.src(e).0], list))
            .collect::<Result<Vec<_>>>()?;
        QuiverMor::new(source, target, vertex_map, edge_paths)
    }

    pub fn identity(d: &Digraph) -> Self {
        QuiverMor {
            source: d.clone(),
            target: d.clone(),
            vertex_map: d.vertex_ids().collect(),
            edge_paths: d.edge_ids().map(|e| Path::edge(d, e)).collect(),
        }
    }

    /// The image of a digraph morphism under the free-category functor.
    pub fn from_digraph_mor(f: &DigraphMor) -> Self {
        QuiverMor {
            source: f.source.clone(),
            target: f.target.clone(),
            vertex_map: f.vertex_map.clone(),
            edge_paths: f
                .edge_map
                .iter()
                .map(|i| match *i {
                    EdgeImage::Edge(e) => Path::edge(&f.target, e),
                    EdgeImage::Vertex(v) => Path::empty(v),
                })
                .collect(),
        }
    }

    /// Image of a path of the source.
    pub fn map_path(&self, p: &Path) -> Path {
        let mut out = Path::empty(self.vertex_map[p.start.0]);
        for e in &p.edges {
            out.edges.extend_from_slice(&self.edge_paths[e.0].edges);
        }
        out.end = self.vertex_map[p.end.0];
        out
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &QuiverMor) -> Result<QuiverMor> {
        compose_quiver_mor(g, self)
    }

    fn image_edge_uses(&self) -> Vec<usize> {
        let mut uses = vec![0usize; self.target.edge_count()];
        for p in &self.edge_paths {
            for e in &p.edges {
                uses[e.0] += 1;
            }
        }
        uses
    }
}

/// `g ∘ f` by substituting `g`'s paths into `f`'s.
pub fn compose_quiver_mor(g: &QuiverMor, f: &QuiverMor) -> Result<QuiverMor> {
    if f.target != g.source {
        return Err(Error::Incomposable);
    }
    Ok(QuiverMor {
        source: f.source.clone(),
        target: g.target.clone(),
        vertex_map: f.vertex_map.iter().map(|v| g.vertex_map[v.0]).collect(),
        edge_paths: f.edge_paths.iter().map(|p| g.map_path(p)).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuiverMorFlags {
    pub idle: bool,
    pub closed: bool,
    pub creation: bool,
    pub active: bool,
    pub refinement: bool,
}

pub fn classify_quiver_mor(f: &QuiverMor) -> QuiverMorFlags {
    let idle = f.edge_paths.iter().all(|p| p.len() <= 1);
    let vertex_image: BTreeSet<VertexId> = f.vertex_map.iter().copied().collect();
    let vertex_injective = vertex_image.len() == f.vertex_map.len();
    let vertex_surjective = vertex_image.len() == f.target.vertex_count();
    let uses = f.image_edge_uses();
    let all_length_one = f.edge_paths.iter().all(|p| p.len() == 1);
    let closed = idle && vertex_injective && all_length_one && uses.iter().all(|&u| u <= 1);
    let creation = idle && vertex_surjective && uses.iter().all(|&u| u >= 1);
    let active = uses.iter().all(|&u| u >= 1);
    let refinement = vertex_injective
        && f.edge_paths.iter().all(|p| !p.is_empty())
        && uses.iter().all(|&u| u == 1)
        && f.target
            .vertex_ids()
            .filter(|v| !vertex_image.contains(v))
            .all(|v| f.target.valence(v) == (1, 1))
        && f.edge_paths.iter().all(|p| {
            p.edges[..p.len() - 1]
                .iter()
                .all(|&e| !vertex_image.contains(&f.target.tgt(e)))
        });
    QuiverMorFlags {
        idle,
        closed,
        creation,
        active,
        refinement,
    }
}

/// The active-closed factorization of a monotone map.
pub fn factor_active_closed(sigma: &MonotoneMap) -> (MonotoneMap, MonotoneMap) {
    sigma.factor_active_closed()
}

/// The quiver morphism `A_p → A_q` induced by `σ: [p] → [q]`.
pub fn delta_mor_to_quiver(sigma: &MonotoneMap) -> QuiverMor {
    let (p, q) = (sigma.p(), sigma.q());
    let source = linear(p);
    let target = linear(q);
    let vertex_map = sigma.values().iter().map(|&v| VertexId(v)).collect();
    let edge_paths = (1..=p)
        .map(|i| {
            let (a, b) = (sigma.apply(i - 1), sigma.apply(i));
            Path {
                start: VertexId(a),
                end: VertexId(b),
                edges: (a..b).map(EdgeId).collect(),
            }
        })
        .collect();
    QuiverMor {
        source,
        target,
        vertex_map,
        edge_paths,
    }
}

/// Connected components in order of their first vertex, each with its
/// inclusion.
pub fn components(d: &Digraph) -> Vec<(Digraph, DigraphMor)> {
    let (labels, count) = d.component_labels();
    (0..count)
        .map(|c| {
            let part = Subgraph {
                vertices: d.vertex_ids().filter(|v| labels[v.0] == c).collect(),
                edges: d.edge_ids().filter(|&e| labels[d.src(e).0] == c).collect(),
            };
            let inc = DigraphMor::inclusion(d, &part);
            (inc.source.clone(), inc)
        })
        .collect()
}

fn vertex_maps(nsrc: usize, ntgt: usize) -> impl Iterator<Item = Vec<VertexId>> {
    let total = if nsrc == 0 {
        1
    } else if ntgt == 0 {
        0
    } else {
        ntgt.pow(nsrc as u32)
    };
    (0..total).map(move |mut k| {
        let mut out = vec![VertexId(0); nsrc];
        for slot in out.iter_mut().rev() {
            *slot = VertexId(k % ntgt);
            k /= ntgt;
        }
        out
    })
}

/// Every quiver morphism `Γ → Ξ` whose edge paths have length at most
/// `path_cap`, in lexicographic order of (vertex map, edge paths). The flag
/// is set when some omitted morphism exists.
pub fn enumerate_quiver_mors(
    gamma: &Digraph,
    xi: &Digraph,
    path_cap: usize,
) -> (Vec<QuiverMor>, bool) {
    let mut out = Vec::new();
    let mut truncated = false;
    for vm in vertex_maps(gamma.vertex_count(), xi.vertex_count()) {
        let mut choices = Vec::with_capacity(gamma.edge_count());
        let mut capped = false;
        let mut empty = false;
        for e in gamma.edge_ids() {
            let (a, b) = (vm[gamma.src(e).0], vm[gamma.tgt(e).0]);
            let exact = hom_is_finite(xi, a, b).expect("vertices exist");
            if exact == Count::Finite(0) {
                empty = true;
                break;
            }
            let paths = enumerate_paths(xi, a, b, path_cap).expect("vertices exist");
            capped |= exact != Count::Finite(paths.len() as u64);
            choices.push(paths);
        }
        if empty {
            continue;
        }
        truncated |= capped;
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; choices.len()];
        loop {
            out.push(QuiverMor {
                source: gamma.clone(),
                target: xi.clone(),
                vertex_map: vm.clone(),
                edge_paths: idx
                    .iter()
                    .zip(&choices)
                    .map(|(&i, c)| c[i].clone())
                    .collect(),
            });
            let mut i = idx.len();
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
            }
            if idx.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    (out, truncated)
}

fn hom_count(gamma: &Digraph, xi: &Digraph, cap: Option<usize>) -> Count {
    vertex_maps(gamma.vertex_count(), xi.vertex_count())
        .map(|vm| {
            gamma
                .edges()
                .iter()
                .map(|e| {
                    let (a, b) = (vm[e.src.0], vm[e.tgt.0]);
                    match cap {
                        None => hom_is_finite(xi, a, b).expect("vertices exist"),
                        Some(l) => Count::Finite(
                            enumerate_paths(xi, a, b, l).expect("vertices exist").len() as u64,
                        ),
                    }
                })
                .product::<Count>()
        })
        .sum()
}

/// `|Hom(Γ, Ξ)|` by direct enumeration of vertex maps; with a cap, only
/// edge paths of length at most the cap are counted.
pub fn hom_quiver_count_direct(gamma: &Digraph, xi: &Digraph, cap: Option<usize>) -> Count {
    hom_count(gamma, xi, cap)
}

/// `|Hom(Γ, Ξ)|` as a product over components of `Γ` of sums over
/// components of `Ξ`.
pub fn hom_quiver_count(gamma: &Digraph, xi: &Digraph, cap: Option<usize>) -> Count {
    let targets = components(xi);
    components(gamma)
        .iter()
        .map(|(ga, _)| {
            targets
                .iter()
                .map(|(xb, _)| hom_count(ga, xb, cap))
                .sum::<Count>()
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{bouquet, cyclic, point};
    use crate::simplex::all_monotone_maps;

    fn loop_power(k: usize) -> QuiverMor {
        let c = cyclic(1).unwrap();
        QuiverMor::from_edge_lists(c.clone(), c, vec![VertexId(0)], vec![vec![EdgeId(0); k]])
            .unwrap()
    }

    #[test]
    fn path_examples() {
        let c1 = cyclic(1).unwrap();
        let ps = enumerate_paths(&c1, VertexId(0), VertexId(0), 3).unwrap();
        assert_eq!(ps.iter().map(Path::len).collect::<Vec<_>>(), [0, 1, 2, 3]);
        let l2 = linear(2);
        assert_eq!(
            enumerate_paths(&l2, VertexId(0), VertexId(2), 5)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_paths(&bouquet(2), VertexId(0), VertexId(0), 2)
                .unwrap()
                .len(),
            7
        );
        assert!(enumerate_paths(&l2, VertexId(0), VertexId(9), 1).is_err());
    }

    #[test]
    fn finiteness_examples() {
        let l2 = linear(2);
        assert_eq!(
            hom_is_finite(&l2, VertexId(0), VertexId(2)),
            Ok(Count::Finite(1))
        );
        let c1 = cyclic(1).unwrap();
        assert_eq!(
            hom_is_finite(&c1, VertexId(0), VertexId(0)),
            Ok(Count::Infinite)
        );
        let d = Digraph::from_strs(&["0", "1", "2"], &[("e", "0", "1"), ("l", "2", "2")]).unwrap();
        assert_eq!(
            hom_is_finite(&d, VertexId(0), VertexId(1)),
            Ok(Count::Finite(1))
        );
        assert_eq!(
            hom_is_finite(&d, VertexId(1), VertexId(0)),
            Ok(Count::Finite(0))
        );
    }

    #[test]
    fn composition_examples() {
        let f = loop_power(2);
        let g = loop_power(3);
        assert_eq!(compose_quiver_mor(&g, &f).unwrap(), loop_power(6));
        let id = QuiverMor::identity(&f.source);
        assert_eq!(compose_quiver_mor(&id, &f).unwrap(), f);
        assert_eq!(compose_quiver_mor(&f, &id).unwrap(), f);

        let sub = QuiverMor::from_edge_lists(
            linear(1),
            linear(2),
            vec![VertexId(0), VertexId(2)],
            vec![vec![EdgeId(0), EdgeId(1)]],
        )
        .unwrap();
        let wrap = QuiverMor::from_edge_lists(
            linear(2),
            cyclic(1).unwrap(),
            vec![VertexId(0); 3],
            vec![vec![EdgeId(0)], vec![EdgeId(0)]],
        )
        .unwrap();
        let h = compose_quiver_mor(&wrap, &sub).unwrap();
        assert_eq!(h.edge_paths[0].edges, [EdgeId(0), EdgeId(0)]);
        assert_eq!(compose_quiver_mor(&sub, &wrap), Err(Error::Incomposable));
    }

    #[test]
    fn classification_examples() {
        let all = QuiverMorFlags {
            idle: true,
            closed: true,
            creation: true,
            active: true,
            refinement: true,
        };
        assert_eq!(
            classify_quiver_mor(&QuiverMor::identity(&cyclic(3).unwrap())),
            all
        );

        let sub = QuiverMor::from_edge_lists(
            linear(1),
            linear(2),
            vec![VertexId(0), VertexId(2)],
            vec![vec![EdgeId(0), EdgeId(1)]],
        )
        .unwrap();
        let flags = classify_quiver_mor(&sub);
        assert!(flags.refinement && flags.active && !flags.idle);

        let fold = QuiverMor::from_edge_lists(
            cyclic(2).unwrap(),
            cyclic(1).unwrap(),
            vec![VertexId(0); 2],
            vec![vec![EdgeId(0)], vec![EdgeId(0)]],
        )
        .unwrap();
        let flags = classify_quiver_mor(&fold);
        assert!(flags.idle && flags.creation && flags.active);
        assert!(!flags.closed && !flags.refinement);
    }

    #[test]
    fn refinement_rejects_interior_image_vertices() {
        let src = Digraph::from_strs(&["0", "1", "2"], &[("e", "0", "2")]).unwrap();
        let f = QuiverMor::from_edge_lists(
            src,
            linear(2),
            vec![VertexId(0), VertexId(1), VertexId(2)],
            vec![vec![EdgeId(0), EdgeId(1)]],
        )
        .unwrap();
        assert!(!classify_quiver_mor(&f).refinement);
    }

    #[test]
    fn delta_examples() {
        let id = delta_mor_to_quiver(&MonotoneMap::identity(2));
        assert_eq!(id, QuiverMor::identity(&linear(2)));
        let skip = delta_mor_to_quiver(&MonotoneMap::new(2, vec![0, 2]).unwrap());
        assert_eq!(skip.edge_paths[0].len(), 2);
        assert!(!classify_quiver_mor(&skip).idle);
        let collapse = delta_mor_to_quiver(&MonotoneMap::new(1, vec![0, 0, 1]).unwrap());
        assert!(classify_quiver_mor(&collapse).idle);
    }

    #[test]
    fn delta_idle_iff_small_steps() {
        for p in 0..=4 {
            for q in 0..=4 {
                for s in all_monotone_maps(p, q) {
                    let f = delta_mor_to_quiver(&s);
                    assert_eq!(classify_quiver_mor(&f).idle, s.is_idle());
                    assert_eq!(classify_quiver_mor(&f).active, s.is_active());
                }
            }
        }
    }

    #[test]
    fn delta_embedding_is_functorial() {
        for p in 0..=3 {
            for q in 0..=3 {
                for r in 0..=3 {
                    for s in all_monotone_maps(p, q) {
                        for t in all_monotone_maps(q, r) {
                            let lhs = delta_mor_to_quiver(&s.then(&t).unwrap());
                            let rhs = delta_mor_to_quiver(&s)
                                .then(&delta_mor_to_quiver(&t))
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn component_examples() {
        let d = cyclic(1)
            .unwrap()
            .prefixed("c.")
            .disjoint_union(&linear(1).prefixed("l."))
            .unwrap();
        assert_eq!(components(&d).len(), 2);
        let l = linear(3);
        let cs = components(&l);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].1, DigraphMor::identity(&l));
    }

    #[test]
    fn hom_count_decomposes() {
        let two_points = Digraph::from_strs(&["x", "y"], &[]).unwrap();
        assert_eq!(
            hom_quiver_count(&two_points, &point(), None),
            Count::Finite(1)
        );
        assert_eq!(
            hom_quiver_count(&point(), &two_points, None),
            Count::Finite(2)
        );
        let c1 = cyclic(1).unwrap();
        assert_eq!(hom_quiver_count(&c1, &c1, None), Count::Infinite);
        assert_eq!(hom_quiver_count(&c1, &linear(2), None), Count::Finite(3));
        let d = c1
            .prefixed("a.")
            .disjoint_union(&linear(1).prefixed("b."))
            .unwrap();
        for cap in [None, Some(0), Some(2)] {
            assert_eq!(
                hom_quiver_count(&d, &d, cap),
                hom_quiver_count_direct(&d, &d, cap)
            );
        }
    }

    #[test]
    fn enumeration_matches_counts() {
        let d = bouquet(2);
        let (mors, truncated) = enumerate_quiver_mors(&linear(1), &d, 2);
        assert!(truncated);
        assert_eq!(mors.len(), 7);
        let (mors, truncated) = enumerate_quiver_mors(&linear(2), &cyclic(3).unwrap(), 6);
        assert!(truncated);
        assert_eq!(
            Count::Finite(mors.len() as u64),
            hom_quiver_count_direct(&linear(2), &cyclic(3).unwrap(), Some(6))
        );
        let (mors, truncated) = enumerate_quiver_mors(&linear(1), &linear(2), 0);
        assert!(truncated);
        assert_eq!(mors.len(), 3);
        let (_, truncated) = enumerate_quiver_mors(&linear(1), &linear(2), 2);
        assert!(!truncated);
    }
}
