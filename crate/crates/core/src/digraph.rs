//! Finite directed graphs.
//!
//! A [`Digraph`] stores its vertices and its non-degenerate edges in
//! declaration order. Degenerate edges (one per vertex) are never stored; a
//! [`DigraphMor`] that collapses an edge sends it to [`EdgeImage::Vertex`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, MorId, ObjId};
use crate::partition::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: VertexId,
    pub tgt: VertexId,
}

#[derive(Debug, Clone)]
pub struct Digraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: BTreeMap<String, VertexId>,
    edge_index: BTreeMap<String, EdgeId>,
}

// Lookup tables are derived data.
impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// Builds a graph from vertex identifiers and `(id, src, tgt)` edge triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let mut graph = Digraph {
            vertices: Vec::new(),
            edges: Vec::new(),
            vertex_index: BTreeMap::new(),
            edge_index: BTreeMap::new(),
        };
        for v in vertices {
            let v = v.into();
            if graph.vertex_index.contains_key(&v) {
                return Err(Error::DuplicateId(v));
            }
            graph
                .vertex_index
                .insert(v.clone(), VertexId(graph.vertices.len()));
            graph.vertices.push(v);
        }
        for (id, src, tgt) in edges {
            if graph.edge_index.contains_key(&id) {
                return Err(Error::DuplicateId(id));
            }
            let lookup = |name: &String| {
                graph
                    .vertex_index
                    .get(name)
                    .copied()
                    .ok_or_else(|| Error::DanglingEdge {
                        edge: id.clone(),
                        vertex: name.clone(),
                    })
            };
            let (s, t) = (lookup(&src)?, lookup(&tgt)?);
            graph
                .edge_index
                .insert(id.clone(), EdgeId(graph.edges.len()));
            graph.edges.push(Edge { id, src: s, tgt: t });
        }
        Ok(graph)
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        Digraph::new(
            vertices.iter().map(|v| v.to_string()),
            edges
                .iter()
                .map(|(e, s, t)| (e.to_string(), s.to_string(), t.to_string())),
        )
    }

    pub fn empty() -> Self {
        Digraph::from_strs(&[], &[]).expect("empty graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].id
    }

    pub fn src(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].src
    }

    pub fn tgt(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].tgt
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{}", v.0)))
        }
    }

    /// Edges leaving `v`, in declaration order.
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_ids().filter(move |&e| self.src(e) == v)
    }

    /// Edges entering `v`, in declaration order.
    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_ids().filter(move |&e| self.tgt(e) == v)
    }

    /// Directed valence `(exiting, entering)` of a vertex.
    pub fn valence(&self, v: VertexId) -> (usize, usize) {
        (self.out_edges(v).count(), self.in_edges(v).count())
    }

    /// Copy of the graph with every identifier prefixed.
    pub fn prefixed(&self, prefix: &str) -> Digraph {
        Digraph::new(
            self.vertices.iter().map(|v| format!("{prefix}{v}")),
            self.edges.iter().map(|e| {
                (
                    format!("{prefix}{}", e.id),
                    format!("{prefix}{}", self.vertices[e.src.0]),
                    format!("{prefix}{}", self.vertices[e.tgt.0]),
                )
            }),
        )
        .expect("prefixing preserves validity")
    }

    /// Disjoint union; identifiers of the two graphs must not collide.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let names = |g: &Digraph| -> Vec<(String, String, String)> {
            g.edges
                .iter()
                .map(|e| {
                    (
                        e.id.clone(),
                        g.vertices[e.src.0].clone(),
                        g.vertices[e.tgt.0].clone(),
                    )
                })
                .collect()
        };
        Digraph::new(
            self.vertices.iter().chain(other.vertices.iter()).cloned(),
            names(self).into_iter().chain(names(other)),
        )
    }

    /// Connected-component label of every vertex, components numbered in
    /// order of their first vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.src.0, e.tgt.0);
        }
        uf.classes()
    }

    pub fn classify(&self) -> Classification {
        classify_digraph(self)
    }

    /// The sub-digraph spanned by the given parts, keeping declaration order.
    pub fn subgraph(&self, part: &Subgraph) -> Digraph {
        Digraph::new(
            part.vertices.iter().map(|v| self.vertices[v.0].clone()),
            part.edges.iter().map(|e| {
                let edge = &self.edges[e.0];
                (
                    edge.id.clone(),
                    self.vertices[edge.src.0].clone(),
                    self.vertices[edge.tgt.0].clone(),
                )
            }),
        )
        .expect("a validated subgraph is a graph")
    }
}

/// Connectivity flags and the per-vertex directed-valence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub connected: bool,
    pub cyclically_directed: bool,
    pub linearly_directed: bool,
    /// `(exiting, entering)` per vertex, in declaration order.
    pub valence: Vec<(usize, usize)>,
}

pub fn classify_digraph(d: &Digraph) -> Classification {
    let valence: Vec<_> = d.vertex_ids().map(|v| d.valence(v)).collect();
    let connected = d.component_labels().1 == 1;
    let cyclically_directed = connected && valence.iter().all(|&v| v == (1, 1));
    let linearly_directed = connected
        && valence.iter().all(|&(o, i)| o <= 1 && i <= 1)
        && valence.iter().any(|&(o, _)| o == 0);
    Classification {
        connected,
        cyclically_directed,
        linearly_directed,
        valence,
    }
}

/// The standard families of graphs used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    /// `0 → 1 → ⋯ → p`
    Linear(usize),
    /// `n` vertices on a directed cycle, edge `e{i}: i → i+1 mod n`.
    Cyclic(usize),
    /// One vertex with `k` loops named `a, b, c, …`.
    Bouquet(usize),
    Point,
    Interval,
}

pub fn standard_digraph(kind: StandardKind) -> Result<Digraph> {
    match kind {
        StandardKind::Linear(p) => Ok(linear(p)),
        StandardKind::Cyclic(n) => cyclic(n),
        StandardKind::Bouquet(k) => Ok(bouquet(k)),
        StandardKind::Point => Ok(linear(0)),
        StandardKind::Interval => Ok(linear(1)),
    }
}

pub fn linear(p: usize) -> Digraph {
    Digraph::new(
        (0..=p).map(|i| i.to_string()),
        (0..p).map(|i| (format!("e{i}"), i.to_string(), (i + 1).to_string())),
    )
    .expect("linear graph is valid")
}

pub fn cyclic(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::EmptyCycle);
    }
    Ok(Digraph::new(
        (0..n).map(|i| i.to_string()),
        (0..n).map(|i| (format!("e{i}"), i.to_string(), ((i + 1) % n).to_string())),
    )
    .expect("cyclic graph is valid"))
}

/// Name of the `i`-th bouquet loop: `a`…`z`, then `a26`, `a27`, ….
pub fn loop_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("a{i}")
    }
}

pub fn bouquet(k: usize) -> Digraph {
    Digraph::new(
        ["v"],
        (0..k).map(|i| (loop_name(i), "v".to_string(), "v".to_string())),
    )
    .expect("bouquet is valid")
}

pub fn point() -> Digraph {
    linear(0)
}

pub fn interval() -> Digraph {
    linear(1)
}

/// One representative of every isomorphism class of digraphs with
/// `1..=max_vertices` vertices and at most `max_edges` edges, loops and
/// parallel edges allowed. Vertices are `0`, `1`, …; edges `e0`, `e1`, … in
/// sorted (source, target) order.
pub fn all_digraphs(max_vertices: usize, max_edges: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let perms = permutations_of(n);
        for m in 0..=max_edges {
            let mut edges = alloc::vec![0usize; m];
            loop {
                if is_canonical(n, &edges, &perms) {
                    out.push(
                        Digraph::new(
                            (0..n).map(|i| i.to_string()),
                            edges.iter().enumerate().map(|(i, &x)| {
                                (format!("e{i}"), (x / n).to_string(), (x % n).to_string())
                            }),
                        )
                        .expect("generated graph is valid"),
                    );
                }
                // Next non-decreasing sequence over 0..n².
                let mut k = m;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    if edges[k] + 1 < n * n {
                        edges[k] += 1;
                        let v = edges[k];
                        for x in &mut edges[k + 1..] {
                            *x = v;
                        }
                        break;
                    }
                    if k == 0 {
                        k = usize::MAX;
                        break;
                    }
                }
                if m == 0 || k == usize::MAX {
                    break;
                }
            }
        }
    }
    out
}

fn is_canonical(n: usize, edges: &[usize], perms: &[Vec<usize>]) -> bool {
    let mut image = Vec::with_capacity(edges.len());
    perms.iter().all(|p| {
        image.clear();
        image.extend(edges.iter().map(|&x| p[x / n] * n + p[x % n]));
        image.sort_unstable();
        image.as_slice() >= edges
    })
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations_of(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Image of an edge under a digraph morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeImage {
    Edge(EdgeId),
    /// The edge is collapsed onto the degenerate edge at this vertex.
    Vertex(VertexId),
}

/// A morphism of digraphs, allowed to collapse edges onto vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphMor {
    pub source: Digraph,
    pub target: Digraph,
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeImage>,
}

impl DigraphMor {
    pub fn new(
        source: Digraph,
        target: Digraph,
        vertex_map: Vec<VertexId>,
        edge_map: Vec<EdgeImage>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertex_count() || edge_map.len() != source.edge_count() {
            return Err(Error::InvalidMorphism(
                "map sizes do not match the source".into(),
            ));
        }
        for &v in &vertex_map {
            target.check_vertex(v)?;
        }
        for (e, image) in source.edge_ids().zip(&edge_map) {
            let (a, b) = (vertex_map[source.src(e).0], vertex_map[source.tgt(e).0]);
            let ok = match *image {
                EdgeImage::Edge(f) => {
                    f.0 < target.edge_count() && target.src(f) == a && target.tgt(f) == b
                }
                EdgeImage::Vertex(v) => a == v && b == v,
            };
            if !ok {
                return Err(Error::InvalidMorphism(format!(
                    "edge `{}` violates endpoint compatibility",
                    source.edge_name(e)
                )));
            }
        }
        Ok(DigraphMor {
            source,
            target,
            vertex_map,
            edge_map,
        })
    }

    pub fn identity(d: &Digraph) -> Self {
        DigraphMor {
            source: d.clone(),
            target: d.clone(),
            vertex_map: d.vertex_ids().collect(),
            edge_map: d.edge_ids().map(EdgeImage::Edge).collect(),
        }
    }

    /// Inclusion of a sub-digraph.
    pub fn inclusion(ambient: &Digraph, part: &Subgraph) -> Self {
        DigraphMor {
            source: ambient.subgraph(part),
            target: ambient.clone(),
            vertex_map: part.vertices.iter().copied().collect(),
            edge_map: part.edges.iter().map(|&e| EdgeImage::Edge(e)).collect(),
        }
    }

    /// Carries edges to edges.
    pub fn is_non_degenerate(&self) -> bool {
        self.edge_map
            .iter()
            .all(|i| matches!(i, EdgeImage::Edge(_)))
    }

    pub fn is_injective(&self) -> bool {
        let vs: BTreeSet<_> = self.vertex_map.iter().collect();
        let es: BTreeSet<_> = self.edge_map.iter().collect();
        self.is_non_degenerate()
            && vs.len() == self.vertex_map.len()
            && es.len() == self.edge_map.len()
    }

    /// Surjective on vertices and on non-degenerate edges.
    pub fn is_surjective(&self) -> bool {
        let vs: BTreeSet<_> = self.vertex_map.iter().collect();
        let es: BTreeSet<_> = self
            .edge_map
            .iter()
            .filter_map(|i| match i {
                EdgeImage::Edge(e) => Some(*e),
                EdgeImage::Vertex(_) => None,
            })
            .collect();
        vs.len() == self.target.vertex_count() && es.len() == self.target.edge_count()
    }

    /// `g ∘ f` with `f = self`.
    pub fn then(&self, g: &DigraphMor) -> Result<DigraphMor> {
        if self.target != g.source {
            return Err(Error::Incomposable);
        }
        Ok(DigraphMor {
            source: self.source.clone(),
            target: g.target.clone(),
            vertex_map: self.vertex_map.iter().map(|v| g.vertex_map[v.0]).collect(),
            edge_map: self
                .edge_map
                .iter()
                .map(|i| match *i {
                    EdgeImage::Edge(e) => g.edge_map[e.0],
                    EdgeImage::Vertex(v) => EdgeImage::Vertex(g.vertex_map[v.0]),
                })
                .collect(),
        })
    }
}

/// A sub-digraph given by vertex and edge index sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Subgraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl Subgraph {
    pub fn new(
        d: &Digraph,
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Result<Self> {
        let part = Subgraph {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        };
        for &v in &part.vertices {
            d.check_vertex(v)?;
        }
        for &e in &part.edges {
            if e.0 >= d.edge_count() {
                return Err(Error::UnknownEdge(format!("#{}", e.0)));
            }
            if !part.vertices.contains(&d.src(e)) || !part.vertices.contains(&d.tgt(e)) {
                return Err(Error::NotASubgraph {
                    edge: d.edge_name(e).to_string(),
                });
            }
        }
        Ok(part)
    }

    /// Resolves identifiers (vertex names first, then edge names). Edges
    /// do not pull in their endpoints.
    pub fn from_names<S: AsRef<str>>(d: &Digraph, names: &[S]) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for name in names {
            let name = name.as_ref();
            if let Ok(v) = d.vertex(name) {
                vertices.push(v);
            } else {
                edges.push(d.edge_id(name)?);
            }
        }
        Subgraph::new(d, vertices, edges)
    }

    pub fn whole(d: &Digraph) -> Self {
        Subgraph {
            vertices: d.vertex_ids().collect(),
            edges: d.edge_ids().collect(),
        }
    }

    pub fn intersection(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self
                .vertices
                .intersection(&other.vertices)
                .copied()
                .collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
        }
    }
}

/// Two sub-digraphs whose union is the ambient graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedCover {
    pub ambient: Digraph,
    pub left: Subgraph,
    pub right: Subgraph,
    pub intersection: Subgraph,
}

impl ClosedCover {
    pub fn left_inclusion(&self) -> DigraphMor {
        DigraphMor::inclusion(&self.ambient, &self.left)
    }

    pub fn right_inclusion(&self) -> DigraphMor {
        DigraphMor::inclusion(&self.ambient, &self.right)
    }

    pub fn intersection_inclusion(&self) -> DigraphMor {
        DigraphMor::inclusion(&self.ambient, &self.intersection)
    }
}

pub fn make_closed_cover(d: &Digraph, left: Subgraph, right: Subgraph) -> Result<ClosedCover> {
    let left = Subgraph::new(d, left.vertices, left.edges)?;
    let right = Subgraph::new(d, right.vertices, right.edges)?;
    for v in d.vertex_ids() {
        if !left.vertices.contains(&v) && !right.vertices.contains(&v) {
            return Err(Error::NotACover {
                missing: d.vertex_name(v).to_string(),
            });
        }
    }
    for e in d.edge_ids() {
        if !left.edges.contains(&e) && !right.edges.contains(&e) {
            return Err(Error::NotACover {
                missing: d.edge_name(e).to_string(),
            });
        }
    }
    let intersection = left.intersection(&right);
    Ok(ClosedCover {
        ambient: d.clone(),
        left,
        right,
        intersection,
    })
}

/// Every closed cover of `d` by two sub-digraphs, in a canonical order.
///
/// Each edge goes to the left part, the right part, or both; each vertex not
/// forced by an edge likewise. The count grows as `3^(|V|+|E|)`.
pub fn all_closed_covers(d: &Digraph) -> Vec<ClosedCover> {
    let nv = d.vertex_count();
    let ne = d.edge_count();
    let mut out = Vec::new();
    let mut choice = alloc::vec![0u8; nv + ne];
    loop {
        let mut left = Subgraph::default();
        let mut right = Subgraph::default();
        for (i, &c) in choice.iter().enumerate() {
            let (in_left, in_right) = (c != 1, c != 0);
            if i < nv {
                if in_left {
                    left.vertices.insert(VertexId(i));
                }
                if in_right {
                    right.vertices.insert(VertexId(i));
                }
            } else {
                let e = EdgeId(i - nv);
                if in_left {
                    left.edges.insert(e);
                }
                if in_right {
                    right.edges.insert(e);
                }
            }
        }
        if let Ok(cover) = make_closed_cover(d, left, right) {
            out.push(cover);
        }
        // Odometer over {0: left, 1: right, 2: both}.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < 3 {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// How an object of the exit-path category sits in the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// Which endpoint a non-identity exit-path morphism witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Incidence {
    Identity,
    Source,
    Target,
}

/// The exit-path category of a graph together with the cell each object
/// stands for and the incidence each morphism stands for.
#[derive(Debug, Clone)]
pub struct ExitPath {
    pub category: FinCat,
    pub cells: Vec<Cell>,
    pub incidences: Vec<Incidence>,
}

/// Objects are vertices then edges; the non-identity morphisms are one
/// `vertex → edge` arrow per endpoint incidence, so a self-loop gets two.
pub fn exit_path(d: &Digraph) -> ExitPath {
    let mut objects: Vec<String> = d.vertex_names().iter().map(|v| format!("v:{v}")).collect();
    objects.extend(d.edges().iter().map(|e| format!("e:{}", e.id)));
    let mut cells: Vec<Cell> = d.vertex_ids().map(Cell::Vertex).collect();
    cells.extend(d.edge_ids().map(Cell::Edge));
    let nv = d.vertex_count();

    let mut morphisms = Vec::new();
    let mut incidences = Vec::new();
    let mut identities = Vec::new();
    for (i, name) in objects.iter().enumerate() {
        identities.push(MorId(morphisms.len()));
        morphisms.push((format!("id[{name}]"), ObjId(i), ObjId(i)));
        incidences.push(Incidence::Identity);
    }
    for e in d.edge_ids() {
        let edge = d.edge(e);
        for (incidence, v, tag) in [
            (Incidence::Source, edge.src, "s"),
            (Incidence::Target, edge.tgt, "t"),
        ] {
            morphisms.push((format!("{tag}[{}]", edge.id), ObjId(v.0), ObjId(nv + e.0)));
            incidences.push(incidence);
        }
    }
    // Only identities compose non-trivially.
    let mut table = Vec::new();
    for (m, &(_, s, t)) in morphisms.iter().enumerate() {
        table.push((identities[t.0], MorId(m), MorId(m)));
        if identities[s.0].0 != m {
            table.push((MorId(m), identities[s.0], MorId(m)));
        }
    }
    let category = FinCat::from_indices(objects, morphisms, identities, table)
        .expect("exit-path categories are valid");
    ExitPath {
        category,
        cells,
        incidences,
    }
}
