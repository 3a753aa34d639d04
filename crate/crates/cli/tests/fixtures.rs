//! The files under `fixtures/` are generated from the library constructors.
//! Run with `UPDATE_FIXTURES=1` to rewrite them.

use std::fs;
use std::path::PathBuf;

use quiver_hh::json::{to_pretty, DigraphJson, FinCatJson, MObjectJson, SiteGraph, SiteJson};
use quiver_hh_core::digraph::{bouquet, cyclic, interval, linear, point};
use quiver_hh_core::emm::MObject;
use quiver_hh_core::fincat::{cyclic_group, symmetric_group, walking_arrow, walking_iso};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn expected() -> Vec<(&'static str, String)> {
    vec![
        ("arrow.json", to_pretty(&FinCatJson::from(&walking_arrow()))),
        ("iso.json", to_pretty(&FinCatJson::from(&walking_iso()))),
        ("z2.json", to_pretty(&FinCatJson::from(&cyclic_group(2)))),
        ("z3.json", to_pretty(&FinCatJson::from(&cyclic_group(3)))),
        ("s3.json", to_pretty(&FinCatJson::from(&symmetric_group(3)))),
        ("point.json", to_pretty(&DigraphJson::from(&point()))),
        ("interval.json", to_pretty(&DigraphJson::from(&interval()))),
        ("linear2.json", to_pretty(&DigraphJson::from(&linear(2)))),
        (
            "cyclic3.json",
            to_pretty(&DigraphJson::from(&cyclic(3).unwrap())),
        ),
        ("bouquet2.json", to_pretty(&DigraphJson::from(&bouquet(2)))),
        (
            "m_circle.json",
            to_pretty(&MObjectJson::from(&MObject::circle())),
        ),
        (
            "m_loop.json",
            to_pretty(&MObjectJson::from(&MObject::quiver(&cyclic(1).unwrap()))),
        ),
        (
            "m_circle_interval.json",
            to_pretty(&MObjectJson::from(
                &MObject::new(1, vec![interval()]).unwrap(),
            )),
        ),
        (
            "edge_site.json",
            to_pretty(&SiteJson {
                graph: SiteGraph::Graph(DigraphJson::from(&interval())),
                cut_edges: vec!["e0".into()],
            }),
        ),
        (
            "circle_site.json",
            to_pretty(&SiteJson {
                graph: SiteGraph::Named("circle".into()),
                cut_edges: vec!["s".into()],
            }),
        ),
    ]
}

#[test]
fn fixtures_are_current() {
    let update = std::env::var_os("UPDATE_FIXTURES").is_some();
    for (name, text) in expected() {
        let path = dir().join(name);
        if update {
            fs::write(&path, &text).unwrap();
        }
        let on_disk = fs::read_to_string(&path).unwrap_or_default();
        assert_eq!(
            on_disk, text,
            "{name} is stale; rerun with UPDATE_FIXTURES=1"
        );
    }
}

#[test]
fn fixtures_round_trip() {
    for (name, text) in expected() {
        let path = dir().join(name);
        let again = if name.ends_with("site.json") {
            let j: SiteJson = quiver_hh::json::read(&path).unwrap();
            j.build().unwrap();
            to_pretty(&j)
        } else if name.starts_with("m_") {
            to_pretty(&MObjectJson::from(
                &quiver_hh::json::load_mobject(&path).unwrap(),
            ))
        } else if text.contains("\"objects\"") {
            to_pretty(&FinCatJson::from(
                &quiver_hh::json::load_fincat(&path).unwrap(),
            ))
        } else {
            to_pretty(&DigraphJson::from(
                &quiver_hh::json::load_digraph(&path).unwrap(),
            ))
        };
        assert_eq!(again, text, "{name}");
    }
}
