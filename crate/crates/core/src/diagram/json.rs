use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Deserialize;

use super::code::{check_slots, Node, NodeKind, PlanarCode, Port};
use super::link::LinkDiagram;
use super::spatial::{validate, Edge, SpatialGraphDiagram};
use super::DiagramError;

/// A loaded diagram file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagram {
    Spatial(SpatialGraphDiagram),
    Link(LinkDiagram),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    nodes: Vec<RawNode>,
    arcs: Vec<[(String, usize); 2]>,
    #[serde(default)]
    edges: Option<BTreeMap<String, RawEdge>>,
    #[serde(default)]
    free_loops: usize,
    #[serde(default)]
    oriented: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    id: String,
    kind: RawKind,
    slots: usize,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawKind {
    Vertex,
    Crossing,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    tail: String,
    head: String,
    arcs: Vec<usize>,
}

pub fn load_diagram(path: &std::path::Path) -> Result<Diagram, DiagramError> {
    let text = std::fs::read_to_string(path).map_err(|e| DiagramError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_diagram(&text)
}

/// Parse and validate a diagram. Every problem found is reported with the
/// line of the file it refers to.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let raw: RawDiagram =
        serde_json::from_str(text).map_err(|e| DiagramError::Load(vec![format!("line {}: {}", e.line(), e)]))?;
    let locate = Locator::new(text);
    let fail = |msgs: Vec<String>| DiagramError::Load(msgs.into_iter().map(|m| locate.annotate(&m)).collect());

    let nodes: Vec<Node> = raw
        .nodes
        .iter()
        .map(|n| Node {
            id: n.id.clone(),
            kind: match n.kind {
                RawKind::Vertex => NodeKind::Vertex,
                RawKind::Crossing => NodeKind::Crossing,
            },
            slots: n.slots,
        })
        .collect();
    let index: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (n.id.as_str(), i)).collect();
    let mut problems = Vec::new();
    let mut arcs = Vec::new();
    for (i, [a, b]) in raw.arcs.iter().enumerate() {
        let mut end = |(id, slot): &(String, usize)| match index.get(id.as_str()) {
            Some(&n) => Some(Port::new(n, *slot)),
            None => {
                problems.push(format!("arc {i}: unknown node {id:?}"));
                None
            }
        };
        if let (Some(p), Some(q)) = (end(a), end(b)) {
            arcs.push([p, q]);
        }
    }
    if !problems.is_empty() {
        return Err(fail(problems));
    }
    match raw.edges {
        Some(raw_edges) => {
            let mut edges = Vec::new();
            for (id, e) in &raw_edges {
                let mut vertex = |name: &str, role: &str| match index.get(name) {
                    Some(&n) => Some(n),
                    None => {
                        problems.push(format!("edge {id:?}: unknown {role} node {name:?}"));
                        None
                    }
                };
                let (tail, head) = (vertex(&e.tail, "tail"), vertex(&e.head, "head"));
                if let (Some(tail), Some(head)) = (tail, head) {
                    edges.push(Edge {
                        id: id.clone(),
                        tail,
                        head,
                        arcs: e.arcs.clone(),
                    });
                }
            }
            if raw.oriented {
                problems.push("\"oriented\" applies to link diagrams only".into());
            }
            problems.extend(validate(&nodes, &arcs, &edges, raw.free_loops));
            if !problems.is_empty() {
                return Err(fail(problems));
            }
            let code = PlanarCode::new(nodes, arcs, raw.free_loops).map_err(|e| fail(violations(e)))?;
            SpatialGraphDiagram::new(code, edges)
                .map(Diagram::Spatial)
                .map_err(|e| fail(violations(e)))
        }
        None => {
            let v = check_slots(&nodes, &arcs);
            if !v.is_empty() {
                return Err(fail(v));
            }
            let code = PlanarCode::new(nodes, arcs, raw.free_loops).map_err(|e| fail(violations(e)))?;
            let orientation = raw.oriented.then(|| vec![true; code.arcs().len()]);
            LinkDiagram::new(code, orientation)
                .map(Diagram::Link)
                .map_err(|e| fail(violations(e)))
        }
    }
}

fn violations(e: DiagramError) -> Vec<String> {
    match e {
        DiagramError::Invalid(v) | DiagramError::Load(v) => v,
        other => vec![other.to_string()],
    }
}

/// Finds the source line of nodes, arcs and edges named in a message.
struct Locator {
    arc_lines: Vec<usize>,
    text: String,
}

impl Locator {
    fn new(text: &str) -> Self {
        Self {
            arc_lines: arc_lines(text),
            text: text.to_string(),
        }
    }

    fn line_of(&self, needle: &str) -> Option<usize> {
        self.text.lines().position(|l| l.contains(needle)).map(|i| i + 1)
    }

    fn annotate(&self, msg: &str) -> String {
        let line = if let Some(rest) = msg.strip_prefix("arc ") {
            rest.split(':')
                .next()
                .and_then(|n| n.parse::<usize>().ok())
                .and_then(|i| self.arc_lines.get(i).copied())
        } else if let Some(rest) = msg.strip_prefix("node ") {
            quoted(rest).and_then(|id| {
                self.line_of(&format!("\"id\": \"{id}\""))
                    .or_else(|| self.line_of(&format!("\"{id}\"")))
            })
        } else if let Some(rest) = msg.strip_prefix("edge ") {
            quoted(rest).and_then(|id| {
                self.line_of(&format!("\"{id}\":"))
                    .or_else(|| self.line_of(&format!("\"{id}\"")))
            })
        } else {
            None
        };
        match line {
            Some(l) => format!("line {l}: {msg}"),
            None => msg.to_string(),
        }
    }
}

fn quoted(s: &str) -> Option<String> {
    let s = s.strip_prefix('"')?;
    let end = s.find('"')?;
    Some(s[..end].to_string())
}

/// Line numbers where the elements of the top-level "arcs" array start.
fn arc_lines(text: &str) -> Vec<usize> {
    let Some(start) = text.find("\"arcs\"") else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut line = text[..start].matches('\n').count() + 1;
    let mut in_string = false;
    for ch in text[start + 6..].chars() {
        if ch == '\n' {
            line += 1;
        }
        if in_string {
            if ch == '"' {
                in_string = false;
            }
            continue;
        }
        match ch {
            '"' => in_string = true,
            '[' => {
                depth += 1;
                if depth == 2 {
                    out.push(line);
                }
            }
            ']' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            _ => {}
        }
    }
    out
}

fn write_nodes(out: &mut String, code: &PlanarCode) {
    out.push_str("  \"nodes\": [\n");
    let n = code.nodes().len();
    for (i, node) in code.nodes().iter().enumerate() {
        let kind = match node.kind {
            NodeKind::Vertex => "vertex",
            NodeKind::Crossing => "crossing",
        };
        let _ = writeln!(
            out,
            "    {{\"id\": {}, \"kind\": \"{kind}\", \"slots\": {}}}{}",
            serde_json::Value::from(node.id.as_str()),
            node.slots,
            if i + 1 < n { "," } else { "" }
        );
    }
    out.push_str("  ],\n");
}

fn write_arcs(out: &mut String, code: &PlanarCode, flip: impl Fn(usize) -> bool) {
    out.push_str("  \"arcs\": [\n");
    let n = code.arcs().len();
    let name = |p: Port| serde_json::Value::from(code.node(p.node).id.as_str());
    for (i, a) in code.arcs().iter().enumerate() {
        let [p, q] = if flip(i) { [a[1], a[0]] } else { *a };
        let _ = writeln!(
            out,
            "    [[{}, {}], [{}, {}]]{}",
            name(p),
            p.slot,
            name(q),
            q.slot,
            if i + 1 < n { "," } else { "" }
        );
    }
    out.push_str("  ],\n");
}

/// Serialize a spatial graph diagram in the loader's format.
pub fn diagram_to_json(d: &SpatialGraphDiagram) -> String {
    let code = d.code();
    let mut out = String::from("{\n");
    write_nodes(&mut out, code);
    write_arcs(&mut out, code, |_| false);
    out.push_str("  \"edges\": {\n");
    let n = d.edges().len();
    for (i, e) in d.edges().iter().enumerate() {
        let arcs: Vec<String> = e.arcs.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "    {}: {{\"tail\": {}, \"head\": {}, \"arcs\": [{}]}}{}",
            serde_json::Value::from(e.id.as_str()),
            serde_json::Value::from(code.node(e.tail).id.as_str()),
            serde_json::Value::from(code.node(e.head).id.as_str()),
            arcs.join(", "),
            if i + 1 < n { "," } else { "" }
        );
    }
    out.push_str("  },\n");
    let _ = writeln!(out, "  \"free_loops\": {}", code.free_loops());
    out.push_str("}\n");
    out
}

/// Serialize a link diagram; oriented links list every arc in its direction.
pub fn link_to_json(l: &LinkDiagram) -> String {
    let code = l.code();
    let mut out = String::from("{\n");
    write_nodes(&mut out, code);
    let o = l.orientation();
    write_arcs(&mut out, code, |i| o.is_some_and(|o| !o[i]));
    if o.is_some() {
        out.push_str("  \"oriented\": true,\n");
    }
    let _ = writeln!(out, "  \"free_loops\": {}", code.free_loops());
    out.push_str("}\n");
    out
}
