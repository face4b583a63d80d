//! Graph files (JSON) and drawings (DOT, SVG, TikZ).

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::planar::{Color, PlabicGraph, Point, Rational, Vertex};
use crate::rec::{Network, PerfectOrientation, RecGraph, Role};
use crate::subset::Subset;

fn rational_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => {
            Rational::from_str(s.trim()).map_err(|_| Error::Format(format!("bad rational {s:?}")))
        }
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| {
                Error::Format(format!("non-integer coordinate {n}; use a \"p/q\" string"))
            }),
        other => Err(Error::Format(format!("bad coordinate {other}"))),
    }
}

/// `{"n", "vertices": [{"id", "color", "pos": ["p/q", "p/q"]}], "edges", "orientation"?}`.
pub fn graph_to_json(graph: &PlabicGraph, orientation: Option<&PerfectOrientation>) -> Value {
    let verts = graph.vertices();
    let vertices: Vec<Value> = verts
        .iter()
        .map(|v| json!({ "id": v.id, "color": v.color, "pos": [rational_text(&v.pos.x), rational_text(&v.pos.y)] }))
        .collect();
    let edges: Vec<Value> = graph
        .edges()
        .iter()
        .map(|&(a, b)| json!([verts[a].id, verts[b].id]))
        .collect();
    let mut doc = json!({ "n": graph.n(), "vertices": vertices, "edges": edges });
    if let Some(o) = orientation {
        let pairs: Vec<Value> = o
            .pairs(graph)
            .iter()
            .map(|&(t, h)| json!([verts[t].id, verts[h].id]))
            .collect();
        doc["orientation"] = Value::Array(pairs);
    }
    doc
}

/// Graph JSON plus `"k"`, `"n"`, `"role"` and `"source_set"`.
pub fn rec_to_json(rec: &RecGraph) -> Value {
    let mut doc = graph_to_json(rec.graph(), Some(&rec.net.orientation));
    doc["k"] = json!(rec.k);
    doc["role"] = json!(rec.role);
    doc["source_set"] = json!(rec.net.sources().to_vec());
    doc
}

/// A parsed graph file.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: PlabicGraph,
    pub orientation: Option<PerfectOrientation>,
}

fn id_pair(v: &Value) -> Result<(String, String)> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Format(format!("expected an id pair, got {v}")))?;
    let s = |x: &Value| {
        x.as_str()
            .map(str::to_string)
            .ok_or_else(|| Error::Format(format!("vertex id {x} is not a string")))
    };
    Ok((s(&arr[0])?, s(&arr[1])?))
}

pub fn graph_from_json(doc: &Value) -> Result<GraphDocument> {
    let n = doc
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Format("missing \"n\"".into()))? as usize;
    let mut vertices = Vec::new();
    for v in doc
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("missing \"vertices\"".into()))?
    {
        let id = v
            .get("id")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Format("vertex without id".into()))?;
        let color: Color = serde_json::from_value(v.get("color").cloned().unwrap_or(Value::Null))
            .map_err(|_| {
            Error::Format(format!(
                "vertex {id}: color must be black, white or boundary"
            ))
        })?;
        let pos = v
            .get("pos")
            .and_then(Value::as_array)
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Format(format!("vertex {id}: pos must be a pair")))?;
        vertices.push(Vertex {
            id: id.into(),
            color,
            pos: Point::new(parse_rational(&pos[0])?, parse_rational(&pos[1])?),
        });
    }
    let edges: Vec<(String, String)> = doc
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("missing \"edges\"".into()))?
        .iter()
        .map(id_pair)
        .collect::<Result<_>>()?;
    let graph = PlabicGraph::from_id_edges(n, vertices, &edges)?;
    let orientation = match doc.get("orientation") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => {
            let index = |id: &str| {
                graph
                    .vertices()
                    .iter()
                    .position(|v| v.id == id)
                    .ok_or_else(|| {
                        Error::Format(format!("orientation names unknown vertex {id:?}"))
                    })
            };
            let pairs = items
                .iter()
                .map(|p| {
                    let (a, b) = id_pair(p)?;
                    Ok((index(&a)?, index(&b)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Some(PerfectOrientation::from_pairs(&graph, &pairs)?)
        }
        Some(other) => {
            return Err(Error::Format(format!(
                "orientation must be a list, got {other}"
            )))
        }
    };
    Ok(GraphDocument { graph, orientation })
}

/// Rebuild a rec graph; labels are recomputed from trips (and `w0`-relabelled for that role).
pub fn rec_from_json(doc: &Value) -> Result<RecGraph> {
    let parsed = graph_from_json(doc)?;
    let k = doc
        .get("k")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Format("missing \"k\"".into()))? as usize;
    let role: Role = serde_json::from_value(doc.get("role").cloned().unwrap_or(Value::Null))
        .map_err(|_| Error::Format("role must be primal, dual or w0".into()))?;
    let orientation = parsed
        .orientation
        .ok_or_else(|| Error::Format("rec graph without orientation".into()))?;
    let n = parsed.graph.n();
    let mut net = Network::new(parsed.graph, orientation)?;
    if role == Role::W0 {
        let labels = net.labels().iter().map(|l| l.map(|i| n + 1 - i)).collect();
        net = Network::with_labels(net.graph, net.orientation, labels)?;
    }
    if let Some(declared) = doc.get("source_set") {
        let declared: Vec<usize> = serde_json::from_value(declared.clone())?;
        if declared.iter().copied().collect::<Subset>() != net.sources() {
            return Err(Error::Format(format!(
                "source_set {declared:?} disagrees with the orientation"
            )));
        }
    }
    Ok(RecGraph { k, n, role, net })
}

/// Face labels placed at centroids.
fn label_positions(graph: &PlabicGraph, labels: Option<&[Subset]>) -> Vec<((f64, f64), String)> {
    match labels {
        None => Vec::new(),
        Some(labels) => (0..graph.faces().len())
            .map(|f| (graph.face_centroid(f).to_f64(), labels[f].to_string()))
            .collect(),
    }
}

pub fn to_dot(
    graph: &PlabicGraph,
    orientation: Option<&PerfectOrientation>,
    labels: Option<&[Subset]>,
) -> String {
    let verts = graph.vertices();
    let mut out = String::new();
    let (kind, arrow) = if orientation.is_some() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    writeln!(out, "{kind} plabic {{").unwrap();
    writeln!(
        out,
        "  node [shape=circle, width=0.25, fixedsize=true, label=\"\"];"
    )
    .unwrap();
    for v in verts {
        let (x, y) = v.pos.to_f64();
        let style = match v.color {
            Color::Black => "style=filled, fillcolor=black".to_string(),
            Color::White => "style=filled, fillcolor=white".to_string(),
            Color::Boundary => format!("shape=plaintext, label=\"{}\"", v.id),
        };
        writeln!(out, "  \"{}\" [pos=\"{x},{y}!\", {style}];", v.id).unwrap();
    }
    let pairs = match orientation {
        Some(o) => o.pairs(graph),
        None => graph.edges().to_vec(),
    };
    for (a, b) in pairs {
        writeln!(out, "  \"{}\" {arrow} \"{}\";", verts[a].id, verts[b].id).unwrap();
    }
    for (f, ((x, y), text)) in label_positions(graph, labels).into_iter().enumerate() {
        writeln!(
            out,
            "  \"face{f}\" [shape=plaintext, label=\"{text}\", pos=\"{x},{y}!\"];"
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

const SCALE: f64 = 30.0;
const MARGIN: f64 = 30.0;

fn fmt_num(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    if r == r.trunc() {
        format!("{}", r as i64)
    } else {
        format!("{r}")
    }
}

pub fn to_svg(
    graph: &PlabicGraph,
    orientation: Option<&PerfectOrientation>,
    labels: Option<&[Subset]>,
) -> String {
    let verts = graph.vertices();
    let pts: Vec<(f64, f64)> = verts.iter().map(|v| v.pos.to_f64()).collect();
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let sx = |x: f64| fmt_num((x - min_x) * SCALE + MARGIN);
    let sy = |y: f64| fmt_num((max_y - y) * SCALE + MARGIN);
    let width = fmt_num((max_x - min_x) * SCALE + 2.0 * MARGIN);
    let height = fmt_num((max_y - min_y) * SCALE + 2.0 * MARGIN);

    let mut out = String::new();
    writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">").unwrap();
    if orientation.is_some() {
        out.push_str("  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n");
    }
    let boundary: Vec<String> = (1..=graph.n())
        .map(|i| pts[graph.boundary_vertex(i)])
        .map(|(x, y)| format!("{},{}", sx(x), sy(y)))
        .collect();
    writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>",
        boundary.join(" ")
    )
    .unwrap();
    let pairs = match orientation {
        Some(o) => o.pairs(graph),
        None => graph.edges().to_vec(),
    };
    let marker = if orientation.is_some() {
        " marker-mid=\"url(#arrow)\""
    } else {
        ""
    };
    for (a, b) in pairs {
        let (ax, ay) = pts[a];
        let (bx, by) = pts[b];
        let (mx, my) = ((ax + bx) / 2.0, (ay + by) / 2.0);
        writeln!(
            out,
            "  <polyline points=\"{},{} {},{} {},{}\" fill=\"none\" stroke=\"black\"{marker}/>",
            sx(ax),
            sy(ay),
            sx(mx),
            sy(my),
            sx(bx),
            sy(by)
        )
        .unwrap();
    }
    for (v, &(x, y)) in verts.iter().zip(&pts) {
        match v.color {
            Color::Boundary => writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" fill=\"blue\">{}</text>",
                sx(x),
                sy(y),
                v.id
            )
            .unwrap(),
            c => writeln!(
                out,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" stroke=\"black\" fill=\"{}\"/>",
                sx(x),
                sy(y),
                if c == Color::Black { "black" } else { "white" }
            )
            .unwrap(),
        }
    }
    for ((x, y), text) in label_positions(graph, labels) {
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\" fill=\"darkred\">{text}</text>",
            sx(x),
            sy(y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

pub fn to_tikz(
    graph: &PlabicGraph,
    orientation: Option<&PerfectOrientation>,
    labels: Option<&[Subset]>,
) -> String {
    let verts = graph.vertices();
    let pts: Vec<(f64, f64)> = verts.iter().map(|v| v.pos.to_f64()).collect();
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[scale=0.6]\n");
    let boundary: Vec<String> = (1..=graph.n())
        .map(|i| pts[graph.boundary_vertex(i)])
        .map(|(x, y)| format!("({},{})", fmt_num(x), fmt_num(y)))
        .collect();
    writeln!(
        out,
        "  \\draw[gray, dashed] {} -- cycle;",
        boundary.join(" -- ")
    )
    .unwrap();
    let pairs = match orientation {
        Some(o) => o.pairs(graph),
        None => graph.edges().to_vec(),
    };
    let style = if orientation.is_some() { "[->]" } else { "" };
    for (a, b) in pairs {
        let (ax, ay) = pts[a];
        let (bx, by) = pts[b];
        writeln!(
            out,
            "  \\draw{style} ({},{}) -- ({},{});",
            fmt_num(ax),
            fmt_num(ay),
            fmt_num(bx),
            fmt_num(by)
        )
        .unwrap();
    }
    for (v, &(x, y)) in verts.iter().zip(&pts) {
        let (x, y) = (fmt_num(x), fmt_num(y));
        match v.color {
            Color::Boundary => writeln!(out, "  \\node[blue] at ({x},{y}) {{{}}};", v.id).unwrap(),
            Color::Black => writeln!(out, "  \\fill ({x},{y}) circle (4pt);").unwrap(),
            Color::White => {
                writeln!(out, "  \\filldraw[fill=white] ({x},{y}) circle (4pt);").unwrap()
            }
        }
    }
    for ((x, y), text) in label_positions(graph, labels) {
        writeln!(
            out,
            "  \\node[red] at ({},{}) {{\\small {text}}};",
            fmt_num(x),
            fmt_num(y)
        )
        .unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rec::{apply_w0, build_rec, dualize};

    #[test]
    fn rec_json_round_trip() {
        let primal = build_rec(4, 7).unwrap();
        for rec in [
            primal.clone(),
            dualize(&primal).unwrap(),
            apply_w0(&primal).unwrap(),
        ] {
            let doc = rec_to_json(&rec);
            let text = serde_json::to_string(&doc).unwrap();
            let back = rec_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back.role, rec.role);
            assert_eq!(back.net.labels(), rec.net.labels());
            assert_eq!(back.net.orientation, rec.net.orientation);
            assert_eq!(rec_to_json(&back), doc);
        }
    }

    #[test]
    fn positions_are_rational_strings() {
        let doc = rec_to_json(&build_rec(2, 4).unwrap());
        assert_eq!(doc["vertices"][0]["pos"][0], "6/1");
        assert_eq!(doc["source_set"], json!([1, 2]));
    }

    #[test]
    fn reader_rejects_bad_input() {
        let mut doc = graph_to_json(build_rec(2, 4).unwrap().graph(), None);
        assert!(graph_from_json(&doc).unwrap().orientation.is_none());
        doc["vertices"][0]["pos"][0] = json!("x");
        assert!(matches!(graph_from_json(&doc), Err(Error::Format(_))));
        assert!(graph_from_json(&json!({"n": 3})).is_err());
    }

    #[test]
    fn drawings_mention_labels() {
        let rec = build_rec(4, 7).unwrap();
        let labels = Some(rec.net.labels());
        let svg = to_svg(rec.graph(), Some(&rec.net.orientation), labels);
        assert!(svg.starts_with("<svg") && svg.contains(">167<"));
        let tikz = to_tikz(rec.graph(), None, labels);
        assert!(tikz.contains("{\\small 567}"));
        let dot = to_dot(rec.graph(), Some(&rec.net.orientation), labels);
        assert!(dot.starts_with("digraph") && dot.contains("label=\"123\""));
        assert_eq!(dot, to_dot(rec.graph(), Some(&rec.net.orientation), labels));
    }
}
