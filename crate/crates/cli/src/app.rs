//! Command-line verbs. Each returns the text for stdout and whether its
//! verdict held; input problems come back as errors.

use std::fmt::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use quiver_hh_core::cyccat::{
    compose_epi, compose_para, degree, dualize_para, enumerate_epi, enumerate_para, para_phi,
    project_para_to_epi, EpiMor, ParaMor,
};
use quiver_hh_core::digraph::{all_closed_covers, make_closed_cover, Digraph, Subgraph};
use quiver_hh_core::emm::{
    enumerate_directed_cycles, fact_homology, hom_m, verify_excision, Caps, CircleComponent,
    DirectedCycle, FactValue, MMor, MObject,
};
use quiver_hh_core::fincat::{check_closed_sheaf, enumerate_reps, FinCat, Representation};
use quiver_hh_core::hochschild::{
    class_of_word, compute_hh, psi, psi_word, trace_obj, CyclicWord, HHTable,
};
use quiver_hh_core::quiver::{enumerate_paths, hom_is_finite, Path};

use crate::{dot, json, suite};

#[derive(Debug, Parser)]
#[command(
    name = "quiver-hh",
    version,
    about = "Representations of quivers in finite categories, cyclic categories and Hochschild classes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connectivity and directedness of a graph.
    Classify(GraphArg),
    /// Paths between two vertices of the free category.
    Paths {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Functors from the free category of a graph into a finite category.
    Reps {
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        graph: GraphArg,
        /// Print every representation.
        #[arg(long)]
        list: bool,
    },
    /// Sheaf condition for one closed cover, or for all of them.
    Sheaf {
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertex and edge names of the left part.
        #[arg(long, value_delimiter = ',', requires = "right")]
        left: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',', requires = "left")]
        right: Option<Vec<String>>,
    },
    /// Classes of endomorphisms up to `fg ~ gf`, or the class of one word.
    Hh {
        #[command(flatten)]
        cat: CatArg,
        #[command(flatten)]
        word: WordArg,
    },
    /// The power operation on Hochschild classes, or on one word.
    Psi {
        #[command(flatten)]
        cat: CatArg,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        word: WordArg,
    },
    /// Classes of the identities.
    Trace(CatArg),
    /// Epicyclic morphisms: list by degree, or compose `left ∘ right`.
    Epi {
        #[arg(long, requires_all = ["n", "degree"])]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long, requires = "right")]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
    },
    /// Paracyclic morphisms: list, compose, apply `φ_r`, dualize or project.
    Para {
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, requires = "right")]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        /// A morphism in `m n : values` form for `--r`, `--dual` or `--project`.
        #[arg(long)]
        f: Option<String>,
        #[arg(long, requires = "f")]
        r: Option<usize>,
        #[arg(long, requires = "f")]
        dual: bool,
        #[arg(long, requires = "f")]
        project: bool,
    },
    /// Primitive directed cycles up to rotation, constants first.
    Cycles {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Morphisms between two objects of M.
    HomM {
        /// Source object.
        #[arg(long)]
        m: PathBuf,
        /// Target object.
        #[arg(long)]
        target: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Values of factorization homology on an object of M.
    Fact {
        #[command(flatten)]
        cat: CatArg,
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        list: bool,
    },
    /// Compare the excision coequalizer with the glued value.
    Excise {
        #[command(flatten)]
        cat: CatArg,
        #[arg(long)]
        site: PathBuf,
    },
    /// Graphviz text for a graph.
    Dot(GraphArg),
    /// Run the seeded verification suite.
    Verify {
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Only the ten acceptance checks.
        #[arg(long)]
        acceptance: bool,
    },
}

#[derive(Debug, Args)]
pub struct GraphArg {
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct CatArg {
    #[arg(long)]
    pub cat: PathBuf,
}

#[derive(Debug, Args)]
pub struct WordArg {
    /// A cyclic word as comma-separated morphism ids, `f_0,f_1,…`.
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    #[arg(long, default_value_t = 3)]
    pub max_len: usize,
    #[arg(long, default_value_t = 2)]
    pub max_weight: u64,
    #[arg(long, default_value_t = 2)]
    pub path_cap: usize,
}

pub struct Report {
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

pub fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Classify(g) => classify(&json::load_digraph(&g.graph)?).map(Report::ok),
        Command::Paths {
            graph,
            from,
            to,
            max_len,
        } => paths(&json::load_digraph(&graph.graph)?, from, to, *max_len).map(Report::ok),
        Command::Reps { cat, graph, list } => Ok(Report::ok(reps(
            &json::load_fincat(&cat.cat)?,
            &json::load_digraph(&graph.graph)?,
            *list,
        ))),
        Command::Sheaf {
            cat,
            graph,
            left,
            right,
        } => sheaf(
            &json::load_fincat(&cat.cat)?,
            &json::load_digraph(&graph.graph)?,
            left.as_deref().zip(right.as_deref()),
        ),
        Command::Hh { cat, word } => {
            let c = json::load_fincat(&cat.cat)?;
            let t = compute_hh(&c);
            Ok(Report::ok(match &word.word {
                Some(w) => format!("class {}\n", class_of_word(&c, &t, &parse_word(&c, w)?).0),
                None => hh(&c, &t),
            }))
        }
        Command::Psi { cat, r, word } => {
            if *r == 0 {
                bail!("--r must be at least 1");
            }
            let c = json::load_fincat(&cat.cat)?;
            let t = compute_hh(&c);
            if let Some(w) = &word.word {
                let w = parse_word(&c, w)?;
                return Ok(Report::ok(format!(
                    "class {}\n",
                    psi_word(&c, &t, *r, &w).0
                )));
            }
            let mut out = String::new();
            for cls in t.classes() {
                writeln!(out, "class {} -> class {}", cls.0, psi(&c, &t, *r, cls).0)?;
            }
            Ok(Report::ok(out))
        }
        Command::Trace(cat) => {
            let c = json::load_fincat(&cat.cat)?;
            let t = compute_hh(&c);
            let mut out = String::new();
            for x in c.object_ids() {
                writeln!(
                    out,
                    "{} -> class {}",
                    c.object_name(x),
                    trace_obj(&c, &t, x)?.0
                )?;
            }
            Ok(Report::ok(out))
        }
        Command::Epi {
            m,
            n,
            degree: deg,
            left,
            right,
        } => epi(*m, *n, *deg, left.as_deref(), right.as_deref()).map(Report::ok),
        Command::Para {
            m,
            n,
            left,
            right,
            f,
            r,
            dual,
            project,
        } => para(ParaRequest {
            m: *m,
            n: *n,
            left: left.as_deref(),
            right: right.as_deref(),
            f: f.as_deref(),
            r: *r,
            dual: *dual,
            project: *project,
        })
        .map(Report::ok),
        Command::Cycles { graph, max_len } => {
            let d = json::load_digraph(&graph.graph)?;
            let cycles = enumerate_directed_cycles(&d, *max_len);
            let mut out = format!("{} cycles\n", cycles.len());
            for c in &cycles {
                match c {
                    DirectedCycle::ConstantAt(v) => writeln!(out, "vertex {}", d.vertex_name(*v))?,
                    DirectedCycle::Walk(w) => writeln!(out, "walk {}", edge_names(&d, w))?,
                }
            }
            Ok(Report::ok(out))
        }
        Command::HomM { m, target, caps } => {
            let source = json::load_mobject(m)?;
            let target = json::load_mobject(target)?;
            let caps = Caps {
                max_len: caps.max_len,
                max_weight: caps.max_weight,
                path_cap: caps.path_cap,
            };
            let h = hom_m(&source, &target, caps);
            let mut out = format!("{} morphisms", h.morphisms.len());
            out.push_str(if h.truncated {
                " (truncated by caps)\n"
            } else {
                "\n"
            });
            for (i, f) in h.morphisms.iter().enumerate() {
                writeln!(out, "morphism {i}:")?;
                out.push_str(&describe_mmor(f));
            }
            Ok(Report::ok(out))
        }
        Command::Fact { cat, m, list } => {
            let c = json::load_fincat(&cat.cat)?;
            let t = compute_hh(&c);
            let m = json::load_mobject(m)?;
            let values = fact_homology(&c, &t, &m);
            let mut out = format!("{} values\n", values.len());
            if *list {
                for v in &values {
                    writeln!(out, "{}", fact_value(&c, &m, v))?;
                }
            }
            Ok(Report::ok(out))
        }
        Command::Excise { cat, site } => {
            let c = json::load_fincat(&cat.cat)?;
            let site = json::load_site(site)?;
            let v = verify_excision(&c, &site);
            let mut out = String::new();
            writeln!(out, "level 1: {} representations", v.level1)?;
            writeln!(out, "level 0: {} representations", v.level0)?;
            writeln!(
                out,
                "coequalizer: {} classes {:?}",
                v.coequalizer, v.class_sizes
            )?;
            writeln!(out, "glued: {} values", v.glued)?;
            match &v.witness {
                None => writeln!(out, "excision holds")?,
                Some(w) => writeln!(out, "excision fails: {w}")?,
            }
            Ok(Report {
                text: out,
                ok: v.bijective,
            })
        }
        Command::Dot(g) => {
            let name = g
                .graph
                .file_stem()
                .map_or("G".into(), |s| s.to_string_lossy().into_owned());
            Ok(Report::ok(dot::to_dot(
                &json::load_digraph(&g.graph)?,
                &name,
            )))
        }
        Command::Verify {
            seed,
            samples,
            acceptance,
        } => {
            let cfg = suite::Config {
                seed: *seed,
                samples: *samples,
            };
            let start = Instant::now();
            let checks = if *acceptance {
                suite::acceptance(cfg)
            } else {
                suite::run_all(cfg)
            };
            let mut out = String::new();
            for c in &checks {
                writeln!(out, "{}", c.line())?;
                eprintln!("{:>8.2}s  {}", c.elapsed.as_secs_f64(), c.name);
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed}/{} checks passed", checks.len())?;
            eprintln!("total {:.2}s", start.elapsed().as_secs_f64());
            Ok(Report {
                text: out,
                ok: passed == checks.len(),
            })
        }
    }
}

fn parse_word(c: &FinCat, names: &[String]) -> Result<CyclicWord> {
    let ids = names
        .iter()
        .map(|n| c.morphism(n.trim()))
        .collect::<quiver_hh_core::Result<Vec<_>>>()?;
    Ok(CyclicWord::new(c, ids)?)
}

fn classify(d: &Digraph) -> Result<String> {
    let c = d.classify();
    let mut out = String::new();
    writeln!(
        out,
        "vertices: {}, edges: {}",
        d.vertex_count(),
        d.edge_count()
    )?;
    writeln!(out, "connected: {}", c.connected)?;
    writeln!(out, "cyclically directed: {}", c.cyclically_directed)?;
    writeln!(out, "linearly directed: {}", c.linearly_directed)?;
    for (v, (exiting, entering)) in d.vertex_names().iter().zip(&c.valence) {
        writeln!(out, "{v}: out {exiting}, in {entering}")?;
    }
    Ok(out)
}

fn edge_names(d: &Digraph, edges: &[quiver_hh_core::digraph::EdgeId]) -> String {
    edges
        .iter()
        .map(|&e| d.edge_name(e))
        .collect::<Vec<_>>()
        .join(" ")
}

fn path_text(d: &Digraph, p: &Path) -> String {
    if p.is_empty() {
        format!("id({})", d.vertex_name(p.start))
    } else {
        edge_names(d, &p.edges)
    }
}

fn paths(d: &Digraph, from: &str, to: &str, max_len: usize) -> Result<String> {
    let (u, v) = (d.vertex(from)?, d.vertex(to)?);
    let mut out = format!("hom({from}, {to}) = {}\n", hom_is_finite(d, u, v)?);
    let found = enumerate_paths(d, u, v, max_len)?;
    writeln!(out, "{} paths of length at most {max_len}", found.len())?;
    for p in &found {
        writeln!(out, "{}", path_text(d, p))?;
    }
    Ok(out)
}

fn rep_text(c: &FinCat, g: &Digraph, r: &Representation) -> String {
    let vs: Vec<String> = g
        .vertex_ids()
        .map(|v| {
            format!(
                "{}={}",
                g.vertex_name(v),
                c.object_name(r.vertex_labels[v.0])
            )
        })
        .collect();
    let es: Vec<String> = g
        .edge_ids()
        .map(|e| format!("{}={}", g.edge_name(e), c.morphism_name(r.edge_labels[e.0])))
        .collect();
    if es.is_empty() {
        vs.join(" ")
    } else {
        format!("{} | {}", vs.join(" "), es.join(" "))
    }
}

fn reps(c: &FinCat, g: &Digraph, list: bool) -> String {
    let all = enumerate_reps(c, g);
    let mut out = format!("{} representations\n", all.len());
    if list {
        for r in &all {
            out.push_str(&rep_text(c, g, r));
            out.push('\n');
        }
    }
    out
}

fn sheaf(c: &FinCat, g: &Digraph, parts: Option<(&[String], &[String])>) -> Result<Report> {
    let covers = match parts {
        Some((l, r)) => vec![make_closed_cover(
            g,
            Subgraph::from_names(g, l).context("left part")?,
            Subgraph::from_names(g, r).context("right part")?,
        )?],
        None => all_closed_covers(g),
    };
    let mut out = String::new();
    let mut ok = true;
    for cover in &covers {
        let v = check_closed_sheaf(c, cover);
        ok &= v.bijective;
        writeln!(
            out,
            "{} | {}: {} -> {} x_{} {} = {} {}",
            cell_names(g, &cover.left),
            cell_names(g, &cover.right),
            v.total,
            v.left,
            v.intersection,
            v.right,
            v.fiber_product,
            if v.bijective {
                "bijective"
            } else {
                "not bijective"
            }
        )?;
    }
    writeln!(out, "{} covers checked", covers.len())?;
    Ok(Report { text: out, ok })
}

fn cell_names(g: &Digraph, s: &Subgraph) -> String {
    let mut names: Vec<&str> = s.vertices.iter().map(|&v| g.vertex_name(v)).collect();
    names.extend(s.edges.iter().map(|&e| g.edge_name(e)));
    format!("{{{}}}", names.join(","))
}

fn hh(c: &FinCat, t: &HHTable) -> String {
    let mut out = format!("{} classes\n", t.len());
    for cls in t.classes() {
        let names: Vec<&str> = t.members(cls).iter().map(|&m| c.morphism_name(m)).collect();
        out.push_str(&format!("class {}: {{{}}}\n", cls.0, names.join(", ")));
    }
    out
}

fn epi(
    m: Option<usize>,
    n: Option<usize>,
    deg: Option<u64>,
    left: Option<&str>,
    right: Option<&str>,
) -> Result<String> {
    if let (Some(g), Some(f)) = (left, right) {
        let (g, f): (EpiMor, EpiMor) = (g.parse()?, f.parse()?);
        let gf = compose_epi(&g, &f)?;
        return Ok(format!("{gf}\ndegree {}\n", degree(&gf)));
    }
    let (Some(m), Some(n), Some(deg)) = (m, n, deg) else {
        bail!("give --m, --n and --degree, or --left and --right");
    };
    let all = enumerate_epi(m, n, deg);
    let mut out = format!("{} morphisms\n", all.len());
    for f in &all {
        writeln!(out, "{f}")?;
    }
    Ok(out)
}

struct ParaRequest<'a> {
    m: Option<usize>,
    n: Option<usize>,
    left: Option<&'a str>,
    right: Option<&'a str>,
    f: Option<&'a str>,
    r: Option<usize>,
    dual: bool,
    project: bool,
}

fn para(req: ParaRequest<'_>) -> Result<String> {
    if let (Some(g), Some(f)) = (req.left, req.right) {
        let (g, f): (ParaMor, ParaMor) = (g.parse()?, f.parse()?);
        return Ok(format!("{}\n", compose_para(&g, &f)?));
    }
    if let Some(f) = req.f {
        let f: ParaMor = f.parse()?;
        let mut out = String::new();
        if let Some(r) = req.r {
            if r == 0 {
                bail!("--r must be at least 1");
            }
            writeln!(out, "phi_{r}: {}", para_phi(r, &f))?;
        }
        if req.dual {
            writeln!(out, "dual: {}", dualize_para(&f))?;
        }
        if req.project {
            writeln!(out, "projection: {}", project_para_to_epi(&f))?;
        }
        if out.is_empty() {
            writeln!(out, "{f}")?;
        }
        return Ok(out);
    }
    let (Some(m), Some(n)) = (req.m, req.n) else {
        bail!("give --m and --n, --left and --right, or --f");
    };
    let all = enumerate_para(m, n);
    let mut out = format!("{} morphisms\n", all.len());
    for f in &all {
        writeln!(out, "{f}")?;
    }
    Ok(out)
}

fn describe_mmor(f: &MMor) -> String {
    let mut out = String::new();
    for (i, c) in f.circles.iter().enumerate() {
        let line = match c {
            CircleComponent::CircleEndo { circle, weight } => {
                format!("circle {circle}, weight {weight}")
            }
            CircleComponent::VertexToCircle { quiver, vertex } => format!(
                "vertex {} of quiver {quiver}",
                f.source.quivers[*quiver].vertex_name(*vertex)
            ),
            CircleComponent::CycleToCircle {
                quiver,
                cycle,
                weight,
            } => format!(
                "cycle [{}] of quiver {quiver}, weight {weight}",
                edge_names(&f.source.quivers[*quiver], cycle)
            ),
        };
        writeln!(out, "  circle {i} <- {line}").unwrap();
    }
    for (j, q) in f.quivers.iter().enumerate() {
        let s = &q.map.source;
        let t = &q.map.target;
        let mut parts: Vec<String> = s
            .vertex_ids()
            .map(|v| {
                format!(
                    "{}->{}",
                    s.vertex_name(v),
                    t.vertex_name(q.map.vertex_map[v.0])
                )
            })
            .collect();
        parts.extend(s.edge_ids().map(|e| {
            format!(
                "{}->[{}]",
                s.edge_name(e),
                path_text(t, &q.map.edge_paths[e.0])
            )
        }));
        writeln!(
            out,
            "  quiver {j} -> quiver {}: {}",
            q.quiver,
            parts.join(" ")
        )
        .unwrap();
    }
    out
}

fn fact_value(c: &FinCat, m: &MObject, v: &FactValue) -> String {
    let mut parts: Vec<String> = v.hh.iter().map(|h| format!("class {}", h.0)).collect();
    parts.extend(
        m.quivers
            .iter()
            .zip(&v.reps)
            .map(|(q, r)| format!("[{}]", rep_text(c, q, r))),
    );
    parts.join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiver_hh_core::digraph::linear;
    use quiver_hh_core::fincat::{symmetric_group, walking_arrow};

    #[test]
    fn hh_text() {
        let c = symmetric_group(3);
        let text = hh(&c, &compute_hh(&c));
        assert!(text.starts_with("3 classes\nclass 0: {"));
    }

    #[test]
    fn reps_listing() {
        let text = reps(&walking_arrow(), &linear(1), true);
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains("0=0 1=1 | e0="));
    }

    #[test]
    fn epi_round_trip() {
        let text = epi(None, None, None, Some("1 1 : 0 | 2"), Some("1 1 : 0 | 3")).unwrap();
        assert_eq!(text, "1 1 : 0 | 6\ndegree 6\n");
        assert!(epi(Some(1), None, None, None, None).is_err());
    }

    #[test]
    fn para_requests() {
        let req = ParaRequest {
            m: None,
            n: None,
            left: None,
            right: None,
            f: Some("1 1 : 1"),
            r: Some(2),
            dual: true,
            project: true,
        };
        let text = para(req).unwrap();
        assert!(text.contains("phi_2: 2 2 : 1 2"));
        assert!(text.contains("projection: 1 1 : 0 | 1"));
    }
}
