use std::collections::HashMap;

use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Vertex,
    Crossing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub kind: NodeKind,
    /// Number of slots, counterclockwise. Crossings always have 4, with the
    /// understrand on slots 0 and 2 and the overstrand on slots 1 and 3.
    pub slots: usize,
}

/// A slot of a node, addressed by node index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub node: usize,
    pub slot: usize,
}

impl Port {
    pub fn new(node: usize, slot: usize) -> Self {
        Self { node, slot }
    }
}

/// How a crossing is resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// Joins slots {0,1} and {2,3}; weight `A` in the bracket.
    A,
    /// Joins slots {1,2} and {3,0}; weight `A^-1` in the bracket.
    B,
    /// The crossing becomes a 4-valent vertex.
    Vertex,
}

impl Smoothing {
    /// Slot joined to `slot` by this smoothing (not meaningful for `Vertex`).
    pub fn partner_slot(self, slot: usize) -> usize {
        match self {
            Smoothing::A => slot ^ 1,
            Smoothing::B => match slot {
                0 => 3,
                1 => 2,
                2 => 1,
                _ => 0,
            },
            Smoothing::Vertex => slot,
        }
    }
}

/// Nodes, arcs and crossingless circles of a planar diagram.
///
/// Every slot is the end of exactly one arc. This is the common shape of
/// spatial graph diagrams and link diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarCode {
    nodes: Vec<Node>,
    arcs: Vec<[Port; 2]>,
    free_loops: usize,
    offsets: Vec<usize>,
    /// flat port index -> (arc, end)
    port_arc: Vec<(usize, usize)>,
}

impl PlanarCode {
    pub fn new(nodes: Vec<Node>, arcs: Vec<[Port; 2]>, free_loops: usize) -> Result<Self, DiagramError> {
        let violations = check_slots(&nodes, &arcs);
        if !violations.is_empty() {
            return Err(DiagramError::Invalid(violations));
        }
        Ok(Self::build(nodes, arcs, free_loops))
    }

    fn build(nodes: Vec<Node>, arcs: Vec<[Port; 2]>, free_loops: usize) -> Self {
        let mut offsets = Vec::with_capacity(nodes.len() + 1);
        let mut total = 0;
        for n in &nodes {
            offsets.push(total);
            total += n.slots;
        }
        offsets.push(total);
        let mut port_arc = vec![(usize::MAX, 0); total];
        for (i, a) in arcs.iter().enumerate() {
            for (end, p) in a.iter().enumerate() {
                port_arc[offsets[p.node] + p.slot] = (i, end);
            }
        }
        Self {
            nodes,
            arcs,
            free_loops,
            offsets,
            port_arc,
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn arcs(&self) -> &[[Port; 2]] {
        &self.arcs
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn crossings(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].kind == NodeKind::Crossing)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].kind == NodeKind::Vertex)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings().count()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().count()
    }

    pub fn port_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Flat index of a port, in `0..port_count()`.
    pub fn flat(&self, p: Port) -> usize {
        self.offsets[p.node] + p.slot
    }

    pub fn unflat(&self, idx: usize) -> Port {
        let node = self.offsets.partition_point(|&o| o <= idx) - 1;
        Port::new(node, idx - self.offsets[node])
    }

    /// The arc ending at `p` and which end of it `p` is.
    pub fn arc_at(&self, p: Port) -> (usize, usize) {
        self.port_arc[self.flat(p)]
    }

    /// The port at the other end of the arc ending at `p`.
    pub fn partner(&self, p: Port) -> Port {
        let (a, end) = self.arc_at(p);
        self.arcs[a][1 - end]
    }

    /// Flat partner table: `partners()[flat(p)] == flat(partner(p))`.
    pub fn partners(&self) -> Vec<usize> {
        let mut out = vec![0; self.port_count()];
        for a in &self.arcs {
            let (x, y) = (self.flat(a[0]), self.flat(a[1]));
            out[x] = y;
            out[y] = x;
        }
        out
    }

    /// Resolve one crossing. Arcs through it are merged; closed strands become free loops.
    pub fn smooth(&self, crossing: usize, how: Smoothing) -> PlanarCode {
        assert_eq!(
            self.nodes[crossing].kind,
            NodeKind::Crossing,
            "smooth expects a crossing"
        );
        if how == Smoothing::Vertex {
            let mut nodes = self.nodes.clone();
            nodes[crossing].kind = NodeKind::Vertex;
            return Self::build(nodes, self.arcs.clone(), self.free_loops);
        }
        let mut partner: HashMap<Port, Port> = HashMap::new();
        for a in &self.arcs {
            partner.insert(a[0], a[1]);
            partner.insert(a[1], a[0]);
        }
        let mut loops = self.free_loops;
        for first in [0usize, 2] {
            let x = Port::new(crossing, first);
            let y = Port::new(crossing, how.partner_slot(first));
            let px = partner[&x];
            let py = partner[&y];
            if px == y {
                loops += 1;
            } else {
                partner.insert(px, py);
                partner.insert(py, px);
            }
            partner.remove(&x);
            partner.remove(&y);
        }
        let remap = |i: usize| if i > crossing { i - 1 } else { i };
        let mut nodes = self.nodes.clone();
        nodes.remove(crossing);
        let mut seen = std::collections::HashSet::new();
        let mut arcs = Vec::new();
        // keep the original arc order as far as possible
        let mut order: Vec<Port> = Vec::new();
        for a in &self.arcs {
            order.push(a[0]);
            order.push(a[1]);
        }
        for p in order {
            if p.node == crossing || seen.contains(&p) {
                continue;
            }
            let q = partner[&p];
            seen.insert(p);
            seen.insert(q);
            arcs.push([Port::new(remap(p.node), p.slot), Port::new(remap(q.node), q.slot)]);
        }
        Self::build(nodes, arcs, loops)
    }

    /// Swap over and under at every crossing by rotating its slot labels.
    pub fn mirror(&self) -> PlanarCode {
        let rot = |p: Port| {
            if self.nodes[p.node].kind == NodeKind::Crossing {
                Port::new(p.node, (p.slot + 3) % 4)
            } else {
                p
            }
        };
        let arcs = self.arcs.iter().map(|a| [rot(a[0]), rot(a[1])]).collect();
        Self::build(self.nodes.clone(), arcs, self.free_loops)
    }

    /// Place two codes side by side; node ids of `other` get `suffix` appended when they clash.
    pub fn disjoint_union(&self, other: &PlanarCode, suffix: &str) -> PlanarCode {
        let mut nodes = self.nodes.clone();
        let base = nodes.len();
        for n in &other.nodes {
            let mut n = n.clone();
            while nodes.iter().any(|m| m.id == n.id) {
                n.id.push_str(suffix);
            }
            nodes.push(n);
        }
        let mut arcs = self.arcs.clone();
        for a in &other.arcs {
            arcs.push([
                Port::new(a[0].node + base, a[0].slot),
                Port::new(a[1].node + base, a[1].slot),
            ]);
        }
        Self::build(nodes, arcs, self.free_loops + other.free_loops)
    }

    /// Faces of the embedding given by the slot orders, free loops excluded.
    pub fn face_count(&self) -> usize {
        let mut used = vec![false; self.port_count()];
        let mut faces = 0;
        for start in 0..self.port_count() {
            if used[start] {
                continue;
            }
            faces += 1;
            let mut p = self.unflat(start);
            while !used[self.flat(p)] {
                used[self.flat(p)] = true;
                let q = self.partner(p);
                p = Port::new(q.node, (q.slot + 1) % self.nodes[q.node].slots);
            }
        }
        faces
    }

    /// Connected pieces of the node-and-arc graph, free loops excluded.
    pub fn piece_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut pieces = self.nodes.len();
        for a in &self.arcs {
            let (x, y) = (find(&mut parent, a[0].node), find(&mut parent, a[1].node));
            if x != y {
                parent[x] = y;
                pieces -= 1;
            }
        }
        pieces
    }

    /// True when the slot orders describe a diagram drawn in the plane (every piece has genus 0).
    pub fn is_planar(&self) -> bool {
        let v = self.nodes.len() as i64;
        let e = self.arcs.len() as i64;
        let f = self.face_count() as i64;
        v - e + f == 2 * self.piece_count() as i64
    }

    pub fn with_free_loops(&self, free_loops: usize) -> PlanarCode {
        Self::build(self.nodes.clone(), self.arcs.clone(), free_loops)
    }

    /// Strands through crossings: closed traversals that never meet a vertex,
    /// each given as a list of (arc, end entered from). Free loops are not included.
    pub fn closed_strands(&self) -> Vec<Vec<(usize, usize)>> {
        let mut used = vec![false; self.arcs.len()];
        let mut out = Vec::new();
        // strands touching vertices are not closed; mark them first
        for v in self.vertices() {
            for s in 0..self.nodes[v].slots {
                let (a, end) = self.arc_at(Port::new(v, s));
                self.walk(a, end, &mut used);
            }
        }
        for start in 0..self.arcs.len() {
            if used[start] {
                continue;
            }
            out.push(self.walk(start, 0, &mut used));
        }
        out
    }

    /// Follow a strand starting on `arc`, leaving from end `from`. Stops at a vertex or on return.
    pub(crate) fn walk(&self, arc: usize, from: usize, used: &mut [bool]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let (mut a, mut e) = (arc, from);
        loop {
            if used[a] {
                break;
            }
            used[a] = true;
            out.push((a, e));
            let end = self.arcs[a][1 - e];
            if self.nodes[end.node].kind == NodeKind::Vertex {
                break;
            }
            let next = Port::new(end.node, (end.slot + 2) % 4);
            let (na, ne) = self.arc_at(next);
            a = na;
            e = ne;
        }
        out
    }
}

pub(crate) fn check_slots(nodes: &[Node], arcs: &[[Port; 2]]) -> Vec<String> {
    let mut out = Vec::new();
    let mut ids = std::collections::HashSet::new();
    for n in nodes {
        if !ids.insert(n.id.as_str()) {
            out.push(format!("node {:?}: duplicate id", n.id));
        }
        if n.kind == NodeKind::Crossing && n.slots != 4 {
            out.push(format!(
                "node {:?}: a crossing has exactly 4 slots, found {}",
                n.id, n.slots
            ));
        }
    }
    let mut used: HashMap<Port, usize> = HashMap::new();
    for (i, a) in arcs.iter().enumerate() {
        for p in a {
            if p.node >= nodes.len() {
                out.push(format!("arc {i}: unknown node index {}", p.node));
                continue;
            }
            if p.slot >= nodes[p.node].slots {
                out.push(format!("arc {i}: node {:?} has no slot {}", nodes[p.node].id, p.slot));
                continue;
            }
            if let Some(prev) = used.insert(*p, i) {
                out.push(format!(
                    "arc {i}: slot reuse, slot {} of node {:?} already ends arc {prev}",
                    p.slot, nodes[p.node].id
                ));
            }
        }
    }
    for (ni, n) in nodes.iter().enumerate() {
        for s in 0..n.slots {
            if !used.contains_key(&Port::new(ni, s)) {
                out.push(format!("node {:?}: slot {s} is not the end of any arc", n.id));
            }
        }
    }
    out
}
