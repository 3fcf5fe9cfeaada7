//! Coxeter diagram export: the labeled two-dimensional complex of a system.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::{Generator, TwoDimCoxeterSystem};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramFormat {
    Dot,
    Json,
}

impl FromStr for DiagramFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(DiagramFormat::Dot),
            "json" => Ok(DiagramFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct Edge<'a> {
    a: &'a Generator,
    b: &'a Generator,
    f: u32,
}

#[derive(Serialize)]
struct Facet<'a> {
    a: &'a Generator,
    b: &'a Generator,
    c: &'a Generator,
    g: u32,
}

#[derive(Serialize)]
struct DiagramJson<'a> {
    vertices: &'a [Generator],
    edges: Vec<Edge<'a>>,
    facets: Vec<Facet<'a>>,
}

/// Renders the diagram. Vertices, edges and facets follow generator order.
///
/// DOT edges: dotted for label 2, solid for 3, doubled for 4, solid with a
/// numeric label otherwise. Every facet with a nonzero label becomes an
/// auxiliary triangle node joined to its three corners.
pub fn export_diagram(system: &TwoDimCoxeterSystem, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Json => to_json(system),
        DiagramFormat::Dot => to_dot(system),
    }
}

fn to_json(system: &TwoDimCoxeterSystem) -> String {
    let gens = system.generators();
    let doc = DiagramJson {
        vertices: gens,
        edges: system
            .pairs()
            .map(|(i, j, f)| Edge {
                a: &gens[i],
                b: &gens[j],
                f,
            })
            .collect(),
        facets: system
            .triples()
            .map(|([i, j, k], g)| Facet {
                a: &gens[i],
                b: &gens[j],
                c: &gens[k],
                g,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("diagram serializes")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn to_dot(system: &TwoDimCoxeterSystem) -> String {
    let gens = system.generators();
    let mut out = String::from("graph coxeter {\n  node [shape=circle];\n");
    for g in gens {
        let _ = writeln!(out, "  {};", quote(&g.to_string()));
    }
    for (i, j, f) in system.pairs() {
        let attrs = match f {
            2 => "style=dotted".to_string(),
            3 => "style=solid".to_string(),
            4 => "color=\"black:black\"".to_string(),
            k => format!("style=solid, label=\"{k}\""),
        };
        let _ = writeln!(
            out,
            "  {} -- {} [{attrs}];",
            quote(&gens[i].to_string()),
            quote(&gens[j].to_string())
        );
    }
    for ([i, j, k], g) in system.triples() {
        let id = quote(&format!("facet_{}_{}_{}", gens[i], gens[j], gens[k]));
        let _ = writeln!(out, "  {id} [shape=triangle, label=\"{g}\"];");
        for v in [i, j, k] {
            let _ = writeln!(
                out,
                "  {id} -- {} [style=dashed, color=gray];",
                quote(&gens[v].to_string())
            );
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::a2n;

    fn json(n: usize) -> serde_json::Value {
        serde_json::from_str(&export_diagram(&a2n(n).unwrap(), DiagramFormat::Json)).unwrap()
    }

    #[test]
    fn json_a21() {
        let v = json(1);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
        assert_eq!(v["edges"].as_array().unwrap().len(), 1);
        assert_eq!(v["edges"][0]["f"], 3);
        assert!(v["facets"].as_array().unwrap().is_empty());
    }

    #[test]
    fn json_a22() {
        let v = json(2);
        assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(v["edges"].as_array().unwrap().len(), 6);
        let facets = v["facets"].as_array().unwrap();
        assert_eq!(facets.len(), 4);
        assert!(facets.iter().all(|f| f["g"] == 3));
    }

    #[test]
    fn json_a23_facets() {
        let v = json(3);
        let facets = v["facets"].as_array().unwrap();
        assert_eq!(facets.len(), 10);
        assert_eq!(facets.iter().filter(|f| f["g"] == 3).count(), 8);
        assert_eq!(facets.iter().filter(|f| f["g"] == 4).count(), 2);
        assert_eq!(facets[0]["a"], "x1");
    }

    #[test]
    fn dot_a22_shape() {
        let dot = export_diagram(&a2n(2).unwrap(), DiagramFormat::Dot);
        assert!(dot.starts_with("graph coxeter {"));
        assert!(dot.trim_end().ends_with('}'));
        assert!(dot.contains("\"x1\" -- \"y1\" [style=solid];"));
        assert!(dot.contains("\"x1\" -- \"x2\" [color=\"black:black\"];"));
        assert!(dot.contains("\"x1\" -- \"y2\" [style=dotted];"));
        assert_eq!(dot.matches("shape=triangle").count(), 4);
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
    }

    #[test]
    fn dot_is_stable() {
        let s = a2n(3).unwrap();
        assert_eq!(
            export_diagram(&s, DiagramFormat::Dot),
            export_diagram(&s, DiagramFormat::Dot)
        );
    }

    #[test]
    fn format_tokens() {
        assert_eq!("dot".parse::<DiagramFormat>().unwrap(), DiagramFormat::Dot);
        assert_eq!(
            "png".parse::<DiagramFormat>(),
            Err(Error::UnsupportedFormat("png".into()))
        );
    }
}
