#![allow(dead_code)]

use spatial_core::algebra::LaurentPoly;
use spatial_core::diagram::{LinkDiagram, Node, NodeKind, PlanarCode, Port};

/// Closure of a braid on `strands` strands. Generator `+i` is a positive
/// crossing of positions `i` and `i + 1` (1-based), `-i` a negative one.
/// Strands run upward and every arc is listed along that direction.
pub fn braid_closure(strands: usize, word: &[i32]) -> LinkDiagram {
    let mut nodes = Vec::new();
    let mut arcs = Vec::new();
    let mut start: Vec<Option<Port>> = vec![None; strands];
    let mut open: Vec<Option<Port>> = vec![None; strands];
    let mut link = |from: Option<Port>, to: Port, pos: usize, start: &mut Vec<Option<Port>>| match from {
        Some(p) => arcs.push([p, to]),
        None => start[pos] = Some(to),
    };
    for (k, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize - 1;
        let c = nodes.len();
        nodes.push(Node {
            id: format!("x{k}"),
            kind: NodeKind::Crossing,
            slots: 4,
        });
        // slots counterclockwise from the bottom: bottom-left, bottom-right, top-right, top-left
        let (bl, br, tr, tl) = if g > 0 { (3, 0, 1, 2) } else { (0, 1, 2, 3) };
        link(open[i], Port::new(c, bl), i, &mut start);
        link(open[i + 1], Port::new(c, br), i + 1, &mut start);
        // the strand from bottom-left ends top-right
        open[i + 1] = Some(Port::new(c, tr));
        open[i] = Some(Port::new(c, tl));
    }
    let mut free = 0;
    for pos in 0..strands {
        match (open[pos], start[pos]) {
            (Some(top), Some(bottom)) => arcs.push([top, bottom]),
            _ => free += 1,
        }
    }
    let code = PlanarCode::new(nodes, arcs, free).expect("braid closure is a valid code");
    let n = code.arcs().len();
    LinkDiagram::new(code, Some(vec![true; n])).expect("braid closure is consistently oriented")
}

/// Bracket by brute force over all states, tracing circles port by port.
pub fn naive_bracket(code: &PlanarCode) -> LaurentPoly {
    let n = code.nodes().len();
    let d = LaurentPoly::loop_value();
    let mut total = LaurentPoly::zero();
    for state in 0u64..(1 << n) {
        let smooth = |p: Port| -> Port {
            let b = state >> p.node & 1 == 1;
            let s = if b {
                match p.slot {
                    0 => 3,
                    1 => 2,
                    2 => 1,
                    _ => 0,
                }
            } else {
                p.slot ^ 1
            };
            Port::new(p.node, s)
        };
        let mut seen = std::collections::HashSet::new();
        let mut circles = code.free_loops();
        for c in 0..n {
            for s in 0..4 {
                let p0 = Port::new(c, s);
                if seen.contains(&p0) {
                    continue;
                }
                circles += 1;
                let mut p = p0;
                loop {
                    seen.insert(p);
                    let q = smooth(p);
                    seen.insert(q);
                    p = code.partner(q);
                    if p == p0 {
                        break;
                    }
                }
            }
        }
        let b = state.count_ones() as i64;
        let a = n as i64 - b;
        total += &d.pow(circles as u32 - 1) * &LaurentPoly::monomial(1, a - b);
    }
    if n == 0 && code.free_loops() == 0 {
        return LaurentPoly::one();
    }
    total
}

pub fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).unwrap()
}
