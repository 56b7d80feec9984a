use std::collections::{BTreeMap, VecDeque};

use super::code::{Node, NodeKind, PlanarCode, Port};
use super::link::LinkDiagram;
use super::spatial::SpatialGraphDiagram;
use super::DiagramError;

/// The blackboard band surface of a spatial graph diagram, with optional half
/// twists and cuts per band, drawn as the link diagram of its boundary.
///
/// Twists and cuts sit at the start of each band, just after its tail vertex.
/// A cut band has its two strands joined by turnbacks on both sides of the cut;
/// twists on a cut band are ignored.
#[derive(Clone, Debug)]
pub struct BandedLink {
    source: SpatialGraphDiagram,
    twists: Vec<i64>,
    cuts: Vec<bool>,
}

/// Result of drawing a [`BandedLink`].
#[derive(Clone, Debug)]
pub struct BandBoundary {
    /// Oriented with the two strands of every band running in opposite
    /// directions when that is possible; unoriented otherwise.
    pub link: LinkDiagram,
    pub antiparallel: bool,
}

const LL: usize = 0;
const RL: usize = 1;
const LR: usize = 2;
const RR: usize = 3;

/// For a crossing slot and side (0 = counterclockwise, 1 = clockwise), the
/// doubled crossing and its slot that the parallel strand enters.
const CROSSING_PORTS: [[(usize, usize); 2]; 4] = [
    [(LR, 0), (LL, 0)],
    [(RR, 1), (LR, 1)],
    [(RL, 2), (RR, 2)],
    [(LL, 3), (RL, 3)],
];

/// Arcs inside a doubled crossing.
const CROSSING_INNER: [((usize, usize), (usize, usize)); 4] = [
    ((LL, 2), (RL, 0)),
    ((LR, 2), (RR, 0)),
    ((LR, 3), (LL, 1)),
    ((RR, 3), (RL, 1)),
];

const SUFFIX: [&str; 4] = ["LL", "RL", "LR", "RR"];

impl BandedLink {
    pub fn new(source: &SpatialGraphDiagram) -> Self {
        let n = source.edges().len();
        Self {
            source: source.clone(),
            twists: vec![0; n],
            cuts: vec![false; n],
        }
    }

    pub fn source(&self) -> &SpatialGraphDiagram {
        &self.source
    }

    fn band(&self, band: &str) -> Result<usize, DiagramError> {
        self.source
            .edge_index(band)
            .ok_or_else(|| DiagramError::UnknownEdge(band.to_string()))
    }

    /// Add `n` half twists to a band. Positive twists are the ones whose
    /// crossings smooth as `b_1 = A b_0 + A^-1 b_inf`.
    pub fn insert_half_twists(mut self, band: &str, n: i64) -> Result<Self, DiagramError> {
        let e = self.band(band)?;
        self.twists[e] += n;
        Ok(self)
    }

    pub fn set_cut(mut self, band: &str, cut: bool) -> Result<Self, DiagramError> {
        let e = self.band(band)?;
        self.cuts[e] = cut;
        Ok(self)
    }

    /// Cut the bands whose bit is set in `mask` (bit i is edge i); other bands are uncut.
    pub fn with_cut_mask(mut self, mask: u64) -> Self {
        for (i, c) in self.cuts.iter_mut().enumerate() {
            *c = mask >> i & 1 == 1;
        }
        self
    }

    pub fn twists(&self) -> BTreeMap<String, i64> {
        self.source
            .edges()
            .iter()
            .zip(&self.twists)
            .map(|(e, &t)| (e.id.clone(), t))
            .collect()
    }

    pub fn total_twist(&self) -> i64 {
        self.twists
            .iter()
            .zip(&self.cuts)
            .filter(|(_, &c)| !c)
            .map(|(t, _)| t)
            .sum()
    }

    pub fn link(&self) -> LinkDiagram {
        self.draw().link
    }

    pub fn draw(&self) -> BandBoundary {
        Wiring::build(self).finish()
    }
}

/// The band boundary of `d` with no twists or cuts.
pub fn double(d: &SpatialGraphDiagram) -> LinkDiagram {
    BandedLink::new(d).link()
}

/// A doubled diagram decorated with bars across its bands.
#[derive(Clone, Debug)]
pub struct BarDiagram {
    pub base: LinkDiagram,
    /// Edge id -> number of bars after merging (0 or 1).
    pub bars: BTreeMap<String, u8>,
}

/// Bars of a spatial graph diagram. Each arc carries a bar; bars on one band
/// slide together and two bars merge into one, so every edge ends with exactly one.
pub fn bar_diagram(d: &SpatialGraphDiagram) -> BarDiagram {
    let bars = d
        .edges()
        .iter()
        .map(|e| (e.id.clone(), u8::from(!e.arcs.is_empty())))
        .collect();
    BarDiagram { base: double(d), bars }
}

struct Connection {
    a: usize,
    b: usize,
    /// Parallel segment of a band; the two strands of a segment must be antiparallel.
    segment: Option<usize>,
}

struct Wiring {
    nodes: Vec<Node>,
    terminals: usize,
    points: usize,
    conns: Vec<Connection>,
    extra_loops: usize,
}

impl Wiring {
    fn build(b: &BandedLink) -> Wiring {
        let d = &b.source;
        let code = d.code();
        let mut nodes = Vec::new();
        let mut crossing_base: BTreeMap<usize, usize> = BTreeMap::new();
        for c in code.crossings() {
            crossing_base.insert(c, nodes.len());
            for s in SUFFIX {
                nodes.push(Node {
                    id: format!("{}.{s}", code.node(c).id),
                    kind: NodeKind::Crossing,
                    slots: 4,
                });
            }
        }
        let mut twist_base: Vec<usize> = vec![0; d.edges().len()];
        for (e, edge) in d.edges().iter().enumerate() {
            twist_base[e] = nodes.len();
            if b.cuts[e] {
                continue;
            }
            for j in 0..b.twists[e].unsigned_abs() {
                nodes.push(Node {
                    id: format!("{}.t{}", edge.id, j + 1),
                    kind: NodeKind::Crossing,
                    slots: 4,
                });
            }
        }
        let terminals = nodes.len() * 4;
        let mut vertex_base: BTreeMap<usize, usize> = BTreeMap::new();
        let mut points = terminals;
        for v in code.vertices() {
            vertex_base.insert(v, points);
            points += 2 * code.node(v).slots;
        }
        let term = |node: usize, slot: usize| node * 4 + slot;
        let port_point = |p: Port, side: usize| -> usize {
            match code.node(p.node).kind {
                NodeKind::Vertex => vertex_base[&p.node] + 2 * p.slot + side,
                NodeKind::Crossing => {
                    let (x, s) = CROSSING_PORTS[p.slot][side];
                    term(crossing_base[&p.node] + x, s)
                }
            }
        };
        let mut conns = Vec::new();
        let mut extra_loops = 2 * code.free_loops();
        for v in code.vertices() {
            let k = code.node(v).slots;
            if k == 0 {
                extra_loops += 1;
            }
            for i in 0..k {
                conns.push(Connection {
                    a: port_point(Port::new(v, i), 0),
                    b: port_point(Port::new(v, (i + 1) % k), 1),
                    segment: None,
                });
            }
        }
        for &base in crossing_base.values() {
            for ((x1, s1), (x2, s2)) in CROSSING_INNER {
                conns.push(Connection {
                    a: term(base + x1, s1),
                    b: term(base + x2, s2),
                    segment: None,
                });
            }
        }
        let mut segment = 0;
        for (e, _) in d.edges().iter().enumerate() {
            for (k, &(p, q)) in d.edge_steps(e).iter().enumerate() {
                if k == 0 && b.cuts[e] {
                    conns.push(Connection {
                        a: port_point(p, 0),
                        b: port_point(p, 1),
                        segment: None,
                    });
                    conns.push(Connection {
                        a: port_point(q, 1),
                        b: port_point(q, 0),
                        segment: None,
                    });
                    continue;
                }
                let mut left = port_point(p, 0);
                let mut right = port_point(p, 1);
                if k == 0 {
                    let n = b.twists[e];
                    // slots of (NW, SW, NE, SE) corners of a twist crossing
                    let corners: [usize; 4] = if n > 0 { [1, 2, 0, 3] } else { [0, 1, 3, 2] };
                    for j in 0..n.unsigned_abs() as usize {
                        let t = twist_base[e] + j;
                        conns.push(Connection {
                            a: left,
                            b: term(t, corners[0]),
                            segment: Some(segment),
                        });
                        conns.push(Connection {
                            a: right,
                            b: term(t, corners[1]),
                            segment: Some(segment),
                        });
                        segment += 1;
                        left = term(t, corners[2]);
                        right = term(t, corners[3]);
                    }
                }
                conns.push(Connection {
                    a: left,
                    b: port_point(q, 1),
                    segment: Some(segment),
                });
                conns.push(Connection {
                    a: right,
                    b: port_point(q, 0),
                    segment: Some(segment),
                });
                segment += 1;
            }
        }
        Wiring {
            nodes,
            terminals,
            points,
            conns,
            extra_loops,
        }
    }

    fn finish(self) -> BandBoundary {
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); self.points];
        for (i, c) in self.conns.iter().enumerate() {
            at[c.a].push(i);
            at[c.b].push(i);
        }
        let unport = |t: usize| Port::new(t / 4, t % 4);
        // per connection: where it ended up and whether it was walked a -> b
        let mut place: Vec<Option<(Strand, bool)>> = vec![None; self.conns.len()];
        let walk = |start: usize, first: usize, id: Strand, place: &mut Vec<Option<(Strand, bool)>>| -> usize {
            let (mut cur, mut c) = (start, first);
            loop {
                let conn = &self.conns[c];
                let forward = conn.a == cur;
                place[c] = Some((id, forward));
                let next = if forward { conn.b } else { conn.a };
                if next < self.terminals {
                    return next;
                }
                let other = if at[next][0] == c { at[next][1] } else { at[next][0] };
                if place[other].is_some() {
                    return next;
                }
                cur = next;
                c = other;
            }
        };
        let mut arcs: Vec<[Port; 2]> = Vec::new();
        for t in 0..self.terminals {
            let c = at[t][0];
            if place[c].is_some() {
                continue;
            }
            let end = walk(t, c, Strand::Arc(arcs.len()), &mut place);
            arcs.push([unport(t), unport(end)]);
        }
        let mut loops = 0usize;
        for c in 0..self.conns.len() {
            if place[c].is_none() {
                walk(self.conns[c].a, c, Strand::Loop(loops), &mut place);
                loops += 1;
            }
        }
        let code =
            PlanarCode::new(self.nodes, arcs, loops + self.extra_loops).expect("doubled wiring uses every slot once");

        let strands = code.closed_strands();
        let mut comp_of_arc = vec![0usize; code.arcs().len()];
        let mut ref_dir = vec![true; code.arcs().len()];
        for (ci, s) in strands.iter().enumerate() {
            for &(a, from) in s {
                comp_of_arc[a] = ci;
                ref_dir[a] = from == 0;
            }
        }
        // component of a connection and its direction relative to the component reference
        let comp_and_sign = |c: usize| -> (usize, i8) {
            let (id, forward) = place[c].expect("every connection is walked");
            let f = if forward { 1 } else { -1 };
            match id {
                Strand::Arc(a) => (comp_of_arc[a], if ref_dir[a] { f } else { -f }),
                Strand::Loop(l) => (strands.len() + l, f),
            }
        };
        let mut by_segment: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.conns.iter().enumerate() {
            if let Some(s) = c.segment {
                by_segment.entry(s).or_default().push(i);
            }
        }
        let ncomp = strands.len() + loops;
        // x[u] * x[v] == rel along every constraint
        let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); ncomp];
        for pair in by_segment.values() {
            let (ca, sa) = comp_and_sign(pair[0]);
            let (cb, sb) = comp_and_sign(pair[1]);
            let rel = -sa * sb;
            adj[ca].push((cb, rel));
            adj[cb].push((ca, rel));
        }
        let mut x: Vec<i8> = vec![0; ncomp];
        let mut consistent = true;
        for s in 0..ncomp {
            if x[s] != 0 {
                continue;
            }
            x[s] = 1;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &(v, rel) in &adj[u] {
                    let want = x[u] * rel;
                    if x[v] == 0 {
                        x[v] = want;
                        q.push_back(v);
                    } else if x[v] != want {
                        consistent = false;
                    }
                }
            }
        }
        if !consistent {
            let link = LinkDiagram::new(code, None).expect("doubling produces crossings only");
            return BandBoundary {
                link,
                antiparallel: false,
            };
        }
        let orientation: Vec<bool> = (0..code.arcs().len())
            .map(|a| (x[comp_of_arc[a]] == 1) == ref_dir[a])
            .collect();
        let link = LinkDiagram::new(code, Some(orientation)).expect("component orientation is consistent");
        BandBoundary {
            link,
            antiparallel: true,
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Strand {
    Arc(usize),
    Loop(usize),
}
