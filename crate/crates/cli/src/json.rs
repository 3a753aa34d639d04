//! JSON forms of graphs, categories, quiver morphisms, objects of `M` and
//! excision sites.
//!
//! Output is two-space pretty JSON with a trailing newline; loading and
//! re-serializing a file written here reproduces it byte for byte.

use std::fs;
use std::path::Path as FsPath;

use anyhow::{bail, Context, Result};
use indexmap::IndexMap;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use quiver_hh_core::digraph::{Digraph, VertexId};
use quiver_hh_core::emm::{ExcisionSite, MObject};
use quiver_hh_core::fincat::FinCat;
use quiver_hh_core::quiver::QuiverMor;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinCatJson {
    pub objects: Vec<String>,
    pub morphisms: Vec<EdgeJson>,
    pub ids: IndexMap<String, String>,
    /// Composites `[g, f, g∘f]`; those with an identity factor may be left
    /// out.
    pub compose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverMorJson {
    pub vmap: IndexMap<String, String>,
    pub epaths: IndexMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MObjectJson {
    pub circles: usize,
    pub quivers: Vec<DigraphJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SiteGraph {
    /// Only `"circle"` is accepted.
    Named(String),
    Graph(DigraphJson),
}

/// For a graph, `cut_edges` lists edge ids; for `"circle"` it names the
/// cut points in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteJson {
    pub graph: SiteGraph,
    pub cut_edges: Vec<String>,
}

impl From<&Digraph> for DigraphJson {
    fn from(d: &Digraph) -> Self {
        DigraphJson {
            vertices: d.vertex_names().to_vec(),
            edges: d
                .edge_ids()
                .map(|e| EdgeJson {
                    id: d.edge_name(e).to_string(),
                    src: d.vertex_name(d.src(e)).to_string(),
                    tgt: d.vertex_name(d.tgt(e)).to_string(),
                })
                .collect(),
        }
    }
}

impl DigraphJson {
    pub fn build(&self) -> Result<Digraph> {
        Ok(Digraph::new(
            self.vertices.iter().cloned(),
            self.edges
                .iter()
                .map(|e| (e.id.clone(), e.src.clone(), e.tgt.clone())),
        )?)
    }
}

impl From<&FinCat> for FinCatJson {
    fn from(c: &FinCat) -> Self {
        FinCatJson {
            objects: c.object_names().to_vec(),
            morphisms: c
                .morphisms()
                .iter()
                .map(|m| EdgeJson {
                    id: m.id.clone(),
                    src: c.object_name(m.src).to_string(),
                    tgt: c.object_name(m.tgt).to_string(),
                })
                .collect(),
            ids: c
                .object_ids()
                .map(|x| {
                    (
                        c.object_name(x).to_string(),
                        c.morphism_name(c.identity(x)).to_string(),
                    )
                })
                .collect(),
            compose: c
                .non_identity_table()
                .into_iter()
                .map(|(g, f, h)| [g, f, h].map(|m| c.morphism_name(m).to_string()))
                .collect(),
        }
    }
}

impl FinCatJson {
    pub fn build(&self) -> Result<FinCat> {
        Ok(FinCat::from_names(
            self.objects.clone(),
            self.morphisms
                .iter()
                .map(|m| (m.id.clone(), m.src.clone(), m.tgt.clone()))
                .collect(),
            self.ids
                .iter()
                .map(|(o, m)| (o.clone(), m.clone()))
                .collect(),
            self.compose
                .iter()
                .map(|[g, f, h]| (g.clone(), f.clone(), h.clone()))
                .collect(),
        )?)
    }
}

impl From<&QuiverMor> for QuiverMorJson {
    fn from(f: &QuiverMor) -> Self {
        let (s, t) = (&f.source, &f.target);
        QuiverMorJson {
            vmap: s
                .vertex_ids()
                .map(|v| {
                    (
                        s.vertex_name(v).to_string(),
                        t.vertex_name(f.vertex_map[v.0]).to_string(),
                    )
                })
                .collect(),
            epaths: s
                .edge_ids()
                .map(|e| {
                    (
                        s.edge_name(e).to_string(),
                        f.edge_paths[e.0]
                            .edges
                            .iter()
                            .map(|&x| t.edge_name(x).to_string())
                            .collect(),
                    )
                })
                .collect(),
        }
    }
}

impl QuiverMorJson {
    /// Builds the morphism between graphs supplied by the caller.
    pub fn build(&self, source: &Digraph, target: &Digraph) -> Result<QuiverMor> {
        let mut vertex_map = vec![None; source.vertex_count()];
        for (a, b) in &self.vmap {
            vertex_map[source.vertex(a)?.0] = Some(target.vertex(b)?);
        }
        let vertex_map = vertex_map
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.with_context(|| {
                    format!("vertex `{}` is not mapped", source.vertex_name(VertexId(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut paths = vec![None; source.edge_count()];
        for (e, p) in &self.epaths {
            let edges = p
                .iter()
                .map(|x| target.edge_id(x))
                .collect::<quiver_hh_core::Result<Vec<_>>>()?;
            paths[source.edge_id(e)?.0] = Some(edges);
        }
        let paths = paths
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.with_context(|| {
                    format!(
                        "edge `{}` is not mapped",
                        source.edge_name(quiver_hh_core::digraph::EdgeId(i))
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuiverMor::from_edge_lists(
            source.clone(),
            target.clone(),
            vertex_map,
            paths,
        )?)
    }
}

impl From<&MObject> for MObjectJson {
    fn from(m: &MObject) -> Self {
        MObjectJson {
            circles: m.circles,
            quivers: m.quivers.iter().map(DigraphJson::from).collect(),
        }
    }
}

impl MObjectJson {
    pub fn build(&self) -> Result<MObject> {
        let quivers = self
            .quivers
            .iter()
            .map(DigraphJson::build)
            .collect::<Result<Vec<_>>>()?;
        Ok(MObject::new(self.circles, quivers)?)
    }
}

impl SiteJson {
    pub fn build(&self) -> Result<ExcisionSite> {
        match &self.graph {
            SiteGraph::Named(name) if name == "circle" => {
                Ok(ExcisionSite::circle(&self.cut_edges)?)
            }
            SiteGraph::Named(other) => bail!("unknown site graph `{other}`; expected \"circle\""),
            SiteGraph::Graph(g) => Ok(ExcisionSite::cut_edges_by_name(
                &g.build()?,
                &self.cut_edges,
            )?),
        }
    }
}

/// Canonical text of a JSON value.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn read<T: DeserializeOwned>(path: &FsPath) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn load_digraph(path: &FsPath) -> Result<Digraph> {
    read::<DigraphJson>(path)?
        .build()
        .with_context(|| format!("invalid graph in {}", path.display()))
}

pub fn load_fincat(path: &FsPath) -> Result<FinCat> {
    read::<FinCatJson>(path)?
        .build()
        .with_context(|| format!("invalid category in {}", path.display()))
}

pub fn load_mobject(path: &FsPath) -> Result<MObject> {
    read::<MObjectJson>(path)?
        .build()
        .with_context(|| format!("invalid object in {}", path.display()))
}

pub fn load_site(path: &FsPath) -> Result<ExcisionSite> {
    read::<SiteJson>(path)?
        .build()
        .with_context(|| format!("invalid site in {}", path.display()))
}
