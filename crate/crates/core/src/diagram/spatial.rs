use std::collections::{BTreeMap, HashMap};

use super::code::{check_slots, Node, NodeKind, PlanarCode, Port};
use super::DiagramError;

/// An oriented abstract edge: a path of arcs from `tail` to `head` through crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub arcs: Vec<usize>,
}

/// Which abstract graph a diagram draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// One 2-valent vertex with a loop edge.
    Knot,
    /// Two trivalent vertices joined by three edges.
    Theta,
    /// The complete graph on four vertices.
    K4,
    Other,
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GraphKind::Knot => "knot",
            GraphKind::Theta => "theta",
            GraphKind::K4 => "K4",
            GraphKind::Other => "other",
        };
        f.write_str(s)
    }
}

/// Edge labels of K4 with their (tail, head) vertex roles. The roles are the
/// centre vertex `C` and the outer vertices `B`, `L`, `R`.
pub const K4_LABELS: [(&str, char, char); 6] = [
    ("a1", 'C', 'L'),
    ("a2", 'C', 'R'),
    ("a3", 'C', 'B'),
    ("a4", 'R', 'B'),
    ("a5", 'B', 'L'),
    ("a6", 'L', 'R'),
];

/// The seven cycles of K4 as 1-based edge numbers.
pub fn k4_cycles() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 6],
        vec![1, 3, 5],
        vec![2, 3, 4],
        vec![4, 5, 6],
        vec![1, 2, 4, 5],
        vec![1, 3, 4, 6],
        vec![2, 3, 5, 6],
    ]
}

/// The six theta subgraphs of K4: complements of single edges, as 1-based edge numbers.
pub fn k4_thetas() -> Vec<Vec<usize>> {
    (1..=6).map(|i| (1..=6).filter(|&j| j != i).collect()).collect()
}

/// A diagram of a spatial graph: rigid vertices, crossings and oriented edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialGraphDiagram {
    code: PlanarCode,
    edges: Vec<Edge>,
    /// For each edge, each of its arcs as (from, to) along the edge direction.
    steps: Vec<Vec<(Port, Port)>>,
    kind: GraphKind,
}

impl SpatialGraphDiagram {
    pub fn new(code: PlanarCode, edges: Vec<Edge>) -> Result<Self, DiagramError> {
        let (steps, mut violations) = trace_edges(&code, &edges);
        let kind = classify(&code, &edges);
        if violations.is_empty() {
            violations.extend(label_violations(&code, &edges, kind, false));
        }
        if !violations.is_empty() {
            return Err(DiagramError::Invalid(violations));
        }
        Ok(Self {
            code,
            edges,
            steps,
            kind,
        })
    }

    /// Build from raw parts, checking slot usage first.
    pub fn from_parts(
        nodes: Vec<Node>,
        arcs: Vec<[Port; 2]>,
        edges: Vec<Edge>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let code = PlanarCode::new(nodes, arcs, free_loops)?;
        Self::new(code, edges)
    }

    pub fn code(&self) -> &PlanarCode {
        &self.code
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Arcs of edge `e` as (from, to) ports in the edge direction.
    pub fn edge_steps(&self, e: usize) -> &[(Port, Port)] {
        &self.steps[e]
    }

    pub fn crossing_count(&self) -> usize {
        self.code.crossing_count()
    }

    /// For every crossing, the edges of its understrand and overstrand.
    pub fn crossing_edges(&self) -> HashMap<usize, (usize, usize)> {
        let mut under = HashMap::new();
        let mut over = HashMap::new();
        for (e, steps) in self.steps.iter().enumerate() {
            for (_, to) in steps {
                if self.code.node(to.node).kind == NodeKind::Crossing {
                    if to.slot % 2 == 0 {
                        under.insert(to.node, e);
                    } else {
                        over.insert(to.node, e);
                    }
                }
            }
        }
        under.into_iter().map(|(c, u)| (c, (u, over[&c]))).collect()
    }

    /// Sign of crossing `c` under the edge orientations: +1 or -1.
    pub fn crossing_sign(&self, c: usize) -> i32 {
        let mut under = 0;
        let mut over = 0;
        for steps in &self.steps {
            for (_, to) in steps {
                if to.node == c {
                    match to.slot {
                        0 => under = 1,
                        2 => under = -1,
                        1 => over = 1,
                        _ => over = -1,
                    }
                }
            }
        }
        -under * over
    }

    /// Sum of all crossing signs.
    pub fn writhe(&self) -> i64 {
        self.code.crossings().map(|c| self.crossing_sign(c) as i64).sum()
    }

    /// Edge id -> number of crossing passages along it.
    pub fn passages(&self) -> BTreeMap<String, usize> {
        self.edges.iter().map(|e| (e.id.clone(), e.arcs.len() - 1)).collect()
    }

    /// Over/under swapped everywhere.
    pub fn mirror(&self) -> SpatialGraphDiagram {
        let code = self.code.mirror();
        Self::new(code, self.edges.clone()).expect("mirroring keeps a diagram valid")
    }

    /// All edges reversed.
    pub fn reversed(&self) -> SpatialGraphDiagram {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: e.id.clone(),
                tail: e.head,
                head: e.tail,
                arcs: e.arcs.iter().rev().copied().collect(),
            })
            .collect();
        Self::new(self.code.clone(), edges).expect("reversal keeps a diagram valid")
    }

    /// Keep only the listed edges. Crossings losing a strand disappear, vertices of
    /// valence 0 are removed and vertices of valence 2 are dissolved into their
    /// edges, except that a closed curve keeps one vertex.
    pub fn delete_edges(&self, keep: &[&str]) -> Result<SpatialGraphDiagram, DiagramError> {
        for k in keep {
            if self.edge_index(k).is_none() {
                return Err(DiagramError::UnknownEdge(k.to_string()));
            }
        }
        let kept: Vec<usize> = (0..self.edges.len())
            .filter(|&e| keep.contains(&self.edges[e].id.as_str()))
            .collect();
        let cross_edges = self.crossing_edges();
        let crossing_alive = |c: usize| {
            let (u, o) = cross_edges[&c];
            kept.contains(&u) && kept.contains(&o)
        };
        // port paths of kept edges
        let mut paths: Vec<(String, Vec<Port>)> = Vec::new();
        for &e in &kept {
            let steps = &self.steps[e];
            let mut path = vec![steps[0].0];
            for (i, (_, to)) in steps.iter().enumerate() {
                if i + 1 == steps.len() {
                    path.push(*to);
                } else if crossing_alive(to.node) {
                    path.push(*to);
                    path.push(steps[i + 1].0);
                }
            }
            paths.push((self.edges[e].id.clone(), path));
        }
        // vertex slot renumbering over kept edge ends
        let mut vertex_ends: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (_, p) in &paths {
            for q in [p[0], *p.last().unwrap()] {
                vertex_ends.entry(q.node).or_default().push(q.slot);
            }
        }
        for v in vertex_ends.values_mut() {
            v.sort_unstable();
        }
        let mut slot_map: HashMap<Port, Port> = HashMap::new();
        for (&v, slots) in &vertex_ends {
            for (i, &s) in slots.iter().enumerate() {
                slot_map.insert(Port::new(v, s), Port::new(v, i));
            }
        }
        let mut paths: Vec<(String, Vec<Port>)> = paths
            .into_iter()
            .map(|(id, p)| {
                let n = p.len();
                let mut p = p;
                p[0] = slot_map[&p[0]];
                p[n - 1] = slot_map[&p[n - 1]];
                (id, p)
            })
            .collect();
        // dissolve 2-valent vertices
        let mut dissolved = Vec::new();
        for (&v, slots) in &vertex_ends {
            if slots.len() != 2 {
                continue;
            }
            let touching: Vec<usize> = (0..paths.len())
                .filter(|&i| {
                    let p = &paths[i].1;
                    p[0].node == v || p.last().unwrap().node == v
                })
                .collect();
            if touching.len() == 1 {
                continue; // closed curve: keep the vertex
            }
            let (i, j) = (touching[0], touching[1]);
            let (ida, pa) = paths[i].clone();
            let (idb, pb) = paths[j].clone();
            let merged = if pa.last().unwrap().node == v {
                let pb = if pb[0].node == v {
                    pb
                } else {
                    pb.into_iter().rev().collect()
                };
                let mut m = pa[..pa.len() - 1].to_vec();
                m.extend_from_slice(&pb[1..]);
                (format!("{ida}+{idb}"), m)
            } else {
                let pb = if pb.last().unwrap().node == v {
                    pb
                } else {
                    pb.into_iter().rev().collect()
                };
                let mut m = pb[..pb.len() - 1].to_vec();
                m.extend_from_slice(&pa[1..]);
                (format!("{idb}+{ida}"), m)
            };
            paths[i] = merged;
            paths.remove(j);
            dissolved.push(v);
        }
        // new node list
        let mut keep_node = vec![false; self.code.nodes().len()];
        for &v in vertex_ends.keys() {
            keep_node[v] = !dissolved.contains(&v);
        }
        for c in self.code.crossings() {
            keep_node[c] = crossing_alive(c);
        }
        let mut new_index = vec![usize::MAX; keep_node.len()];
        let mut nodes = Vec::new();
        for (i, n) in self.code.nodes().iter().enumerate() {
            if keep_node[i] {
                new_index[i] = nodes.len();
                let mut n = n.clone();
                if n.kind == NodeKind::Vertex {
                    n.slots = vertex_ends[&i].len();
                }
                nodes.push(n);
            }
        }
        let re = |p: Port| Port::new(new_index[p.node], p.slot);
        let mut arcs = Vec::new();
        let mut edges = Vec::new();
        for (id, p) in paths {
            let mut ids = Vec::new();
            for pair in p.chunks(2) {
                ids.push(arcs.len());
                arcs.push([re(pair[0]), re(pair[1])]);
            }
            edges.push(Edge {
                id,
                tail: new_index[p[0].node],
                head: new_index[p.last().unwrap().node],
                arcs: ids,
            });
        }
        Self::from_parts(nodes, arcs, edges, self.code.free_loops())
    }

    /// Keep the edges with the given 1-based K4 numbers (`a1`..`a6`).
    pub fn k4_subgraph(&self, numbers: &[usize]) -> Result<SpatialGraphDiagram, DiagramError> {
        let ids: Vec<String> = numbers.iter().map(|n| format!("a{n}")).collect();
        let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
        self.delete_edges(&refs)
    }

    /// A theta diagram with every edge running from one vertex to the other and
    /// edges renamed `e1`, `e2`, `e3` in their current order.
    pub fn theta_normalized(&self) -> Result<SpatialGraphDiagram, DiagramError> {
        let verts: Vec<usize> = self.code.vertices().collect();
        if verts.len() != 2 || self.edges.len() != 3 {
            return Err(DiagramError::WrongKind {
                expected: GraphKind::Theta,
                found: self.kind,
            });
        }
        let source = self.edges[0].tail;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let (tail, head, arcs) = if e.tail == source {
                    (e.tail, e.head, e.arcs.clone())
                } else {
                    (e.head, e.tail, e.arcs.iter().rev().copied().collect())
                };
                Edge {
                    id: format!("e{}", i + 1),
                    tail,
                    head,
                    arcs,
                }
            })
            .collect();
        Self::new(self.code.clone(), edges)
    }
}

fn trace_edges(code: &PlanarCode, edges: &[Edge]) -> (Vec<Vec<(Port, Port)>>, Vec<String>) {
    let mut out = Vec::new();
    let mut violations = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; code.arcs().len()];
    let mut ids = std::collections::HashSet::new();
    for (ei, e) in edges.iter().enumerate() {
        let mut steps = Vec::new();
        if !ids.insert(e.id.as_str()) {
            violations.push(format!("edge {:?}: duplicate id", e.id));
        }
        let bad_node = |n: usize| n >= code.nodes().len() || code.node(n).kind != NodeKind::Vertex;
        if bad_node(e.tail) || bad_node(e.head) {
            violations.push(format!("edge {:?}: tail and head must be graph vertices", e.id));
            out.push(steps);
            continue;
        }
        if e.arcs.is_empty() {
            violations.push(format!("edge {:?}: no arcs", e.id));
            out.push(steps);
            continue;
        }
        let mut expect = None::<Port>;
        let mut ok = true;
        for (k, &a) in e.arcs.iter().enumerate() {
            if a >= code.arcs().len() {
                violations.push(format!("edge {:?}: unknown arc {a}", e.id));
                ok = false;
                break;
            }
            if let Some(prev) = owner[a] {
                violations.push(format!(
                    "edge {:?}: arc {a} already belongs to edge {:?}",
                    e.id, edges[prev].id
                ));
            }
            owner[a] = Some(ei);
            let [p, q] = code.arcs()[a];
            let from = match expect {
                None => {
                    if p.node == e.tail {
                        p
                    } else if q.node == e.tail {
                        q
                    } else {
                        violations.push(format!(
                            "edge {:?}: first arc {a} does not start at tail {:?}",
                            e.id,
                            code.node(e.tail).id
                        ));
                        ok = false;
                        break;
                    }
                }
                Some(x) => {
                    if p == x {
                        p
                    } else if q == x {
                        q
                    } else {
                        violations.push(format!(
                            "edge {:?}: arc {a} does not continue through slot {} of crossing {:?} (a strand leaves a crossing opposite where it enters)",
                            e.id,
                            x.slot,
                            code.node(x.node).id
                        ));
                        ok = false;
                        break;
                    }
                }
            };
            let to = if from == p { q } else { p };
            steps.push((from, to));
            let last = k + 1 == e.arcs.len();
            if last {
                if to.node != e.head {
                    violations.push(format!(
                        "edge {:?}: last arc {a} does not end at head {:?}",
                        e.id,
                        code.node(e.head).id
                    ));
                    ok = false;
                }
            } else if code.node(to.node).kind != NodeKind::Crossing {
                violations.push(format!(
                    "edge {:?}: arc {a} reaches vertex {:?} before the end of the edge",
                    e.id,
                    code.node(to.node).id
                ));
                ok = false;
                break;
            } else {
                expect = Some(Port::new(to.node, (to.slot + 2) % 4));
            }
        }
        if !ok {
            steps.clear();
        }
        out.push(steps);
    }
    for (a, o) in owner.iter().enumerate() {
        if o.is_none() {
            violations.push(format!("arc {a}: not part of any edge"));
        }
    }
    (out, violations)
}

fn classify(code: &PlanarCode, edges: &[Edge]) -> GraphKind {
    let verts: Vec<usize> = code.vertices().collect();
    let degrees: Vec<usize> = verts.iter().map(|&v| code.node(v).slots).collect();
    if code.free_loops() > 0 {
        return GraphKind::Other;
    }
    match (verts.len(), edges.len()) {
        (1, 1) if degrees[0] == 2 && edges[0].tail == edges[0].head => GraphKind::Knot,
        (2, 3) if degrees.iter().all(|&d| d == 3) && edges.iter().all(|e| e.tail != e.head) => GraphKind::Theta,
        (4, 6) if degrees.iter().all(|&d| d == 3) => {
            let mut pairs: Vec<(usize, usize)> =
                edges.iter().map(|e| (e.tail.min(e.head), e.tail.max(e.head))).collect();
            pairs.sort_unstable();
            pairs.dedup();
            if pairs.len() == 6 && pairs.iter().all(|(a, b)| a != b) {
                GraphKind::K4
            } else {
                GraphKind::Other
            }
        }
        _ => GraphKind::Other,
    }
}

/// Edge naming and orientation rules. Theta diagrams read from files must have
/// all edges leaving the same vertex; derived ones are normalized on demand.
fn label_violations(code: &PlanarCode, edges: &[Edge], kind: GraphKind, strict_theta: bool) -> Vec<String> {
    let mut out = Vec::new();
    match kind {
        GraphKind::K4 => {
            let mut role: HashMap<char, usize> = HashMap::new();
            for (label, t, h) in K4_LABELS {
                let Some(e) = edges.iter().find(|e| e.id == label) else {
                    out.push(format!("K4 diagram is missing edge {label:?} (edges must be a1..a6)"));
                    continue;
                };
                for (r, v) in [(t, e.tail), (h, e.head)] {
                    match role.get(&r) {
                        Some(&w) if w != v => out.push(format!(
                            "edge {label:?}: vertex {:?} conflicts with the orientation convention (a1 C->L, a2 C->R, a3 C->B, a4 R->B, a5 B->L, a6 L->R)",
                            code.node(v).id
                        )),
                        _ => {
                            role.insert(r, v);
                        }
                    }
                }
            }
        }
        GraphKind::Theta if strict_theta => {
            let t = edges[0].tail;
            if edges.iter().any(|e| e.tail != t) {
                out.push("theta diagram: all three edges must run from the same vertex to the other".into());
            }
        }
        _ => {}
    }
    out
}

/// Slot-level and edge-level problems of a candidate diagram, without building it.
pub fn validate(nodes: &[Node], arcs: &[[Port; 2]], edges: &[Edge], free_loops: usize) -> Vec<String> {
    let mut v = check_slots(nodes, arcs);
    if !v.is_empty() {
        return v;
    }
    let code = PlanarCode::new(nodes.to_vec(), arcs.to_vec(), free_loops).expect("slots checked");
    let (_, more) = trace_edges(&code, edges);
    v.extend(more);
    if v.is_empty() {
        v.extend(label_violations(&code, edges, classify(&code, edges), true));
    }
    v
}
