use super::code::{NodeKind, PlanarCode, Port, Smoothing};

/// The abstract graph left after resolving every crossing of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedGraph {
    /// Graph vertices: diagram vertices first, then crossings turned into vertices.
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    /// Closed curves meeting no vertex.
    pub free_circles: usize,
    /// Number of A and B smoothings.
    pub m1: usize,
    pub m2: usize,
}

impl ResolvedGraph {
    /// Connected components, free circles included.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.vertex_count;
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps + self.free_circles
    }

    /// First Betti number: independent cycles, one per free circle.
    pub fn beta(&self) -> usize {
        self.edges.len() + self.components() - self.vertex_count
    }

    /// The graph with every free circle drawn as a vertex carrying a loop.
    pub fn with_circles_as_loops(&self) -> (usize, Vec<(usize, usize)>) {
        let mut edges = self.edges.clone();
        for i in 0..self.free_circles {
            edges.push((self.vertex_count + i, self.vertex_count + i));
        }
        (self.vertex_count + self.free_circles, edges)
    }
}

/// Resolve the crossings of `code`, listed in node order, by `state`.
pub fn resolve_state(code: &PlanarCode, state: &[Smoothing]) -> ResolvedGraph {
    let crossings: Vec<usize> = code.crossings().collect();
    assert_eq!(crossings.len(), state.len(), "one smoothing per crossing");
    let mut how: Vec<Option<Smoothing>> = vec![None; code.nodes().len()];
    for (&c, &s) in crossings.iter().zip(state) {
        how[c] = Some(s);
    }
    let mut vertex_id = vec![usize::MAX; code.nodes().len()];
    let mut n = 0;
    for (i, node) in code.nodes().iter().enumerate() {
        let is_vertex = match node.kind {
            NodeKind::Vertex => true,
            NodeKind::Crossing => how[i] == Some(Smoothing::Vertex),
        };
        if is_vertex {
            vertex_id[i] = n;
            n += 1;
        }
    }
    // vertices are listed with diagram vertices first
    let mut order: Vec<usize> = code.vertices().collect();
    order.extend(crossings.iter().copied().filter(|&c| how[c] == Some(Smoothing::Vertex)));
    for (k, &i) in order.iter().enumerate() {
        vertex_id[i] = k;
    }
    let mut used = vec![false; code.port_count()];
    let mut edges = Vec::new();
    // from a vertex port, follow until the next vertex port
    let follow = |start: Port, used: &mut Vec<bool>| -> Port {
        let mut p = start;
        loop {
            used[code.flat(p)] = true;
            let q = code.partner(p);
            used[code.flat(q)] = true;
            match how[q.node] {
                Some(s) if s != Smoothing::Vertex => p = Port::new(q.node, s.partner_slot(q.slot)),
                _ => return q,
            }
        }
    };
    for &v in &order {
        for s in 0..code.node(v).slots {
            let p = Port::new(v, s);
            if used[code.flat(p)] {
                continue;
            }
            let q = follow(p, &mut used);
            edges.push((vertex_id[v], vertex_id[q.node]));
        }
    }
    let mut free_circles = code.free_loops();
    for i in 0..code.port_count() {
        if used[i] {
            continue;
        }
        let start = code.unflat(i);
        let mut p = start;
        loop {
            used[code.flat(p)] = true;
            let q = code.partner(p);
            used[code.flat(q)] = true;
            let s = how[q.node].expect("only smoothed crossings remain");
            p = Port::new(q.node, s.partner_slot(q.slot));
            if p == start {
                break;
            }
        }
        free_circles += 1;
    }
    let m1 = state.iter().filter(|&&s| s == Smoothing::A).count();
    let m2 = state.iter().filter(|&&s| s == Smoothing::B).count();
    ResolvedGraph {
        vertex_count: n,
        edges,
        free_circles,
        m1,
        m2,
    }
}
