use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{InvariantError, StateSumConfig};
use crate::algebra::LaurentPoly;
use crate::diagram::{LinkDiagram, Port};

const CHUNK: u64 = 1 << 12;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Kauffman bracket as the sum over all 2^n smoothings.
///
/// Each state is weighted `A^(a-b) d^(loops-1)` with `d = -A^2-A^-2`. A
/// diagram with nothing in it has bracket 1. Crossings are added one at a
/// time and partial states that connect the open ends the same way are
/// merged, see [`bracket_by_frontier`]; [`bracket_by_states`] lists every
/// state instead.
pub fn kauffman_bracket(l: &LinkDiagram, cfg: &StateSumConfig) -> Result<LaurentPoly, InvariantError> {
    let code = l.code();
    let n = code.crossing_count();
    if n > cfg.max_bracket_crossings {
        return Err(InvariantError::CapExceeded {
            what: "bracket",
            crossings: n,
            cap: cfg.max_bracket_crossings,
        });
    }
    if n == 0 {
        return Ok(loop_power(code.free_loops().saturating_sub(1)));
    }
    Ok(cfg.run(|| bracket_by_frontier(l)))
}

/// Every state listed, loops counted by union-find over arcs.
pub fn bracket_by_states(l: &LinkDiagram, cfg: &StateSumConfig) -> LaurentPoly {
    let code = l.code();
    let n = code.crossing_count();
    if n == 0 {
        return loop_power(code.free_loops().saturating_sub(1));
    }
    // arcs at the four slots of every crossing
    let slot_arcs: Vec<[usize; 4]> = (0..n)
        .map(|c| std::array::from_fn(|s| code.arc_at(Port::new(c, s)).0))
        .collect();
    let arcs = code.arcs().len();
    let free = code.free_loops();
    let total: u64 = 1 << n;
    let chunks = total.div_ceil(CHUNK);
    let histogram = cfg.run(|| {
        (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut hist: HashMap<(i64, usize), u64> = HashMap::new();
                let mut parent = vec![0usize; arcs];
                let lo = chunk * CHUNK;
                let hi = (lo + CHUNK).min(total);
                for state in lo..hi {
                    for (i, p) in parent.iter_mut().enumerate() {
                        *p = i;
                    }
                    let mut loops = arcs;
                    for (c, s) in slot_arcs.iter().enumerate() {
                        let pairs = if state >> c & 1 == 0 {
                            [(s[0], s[1]), (s[2], s[3])]
                        } else {
                            [(s[1], s[2]), (s[3], s[0])]
                        };
                        for (x, y) in pairs {
                            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                            if rx != ry {
                                parent[rx] = ry;
                                loops -= 1;
                            }
                        }
                    }
                    let b = state.count_ones() as i64;
                    *hist.entry((n as i64 - 2 * b, loops + free)).or_insert(0) += 1;
                }
                hist
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    });
    let mut by_loops: HashMap<usize, LaurentPoly> = HashMap::new();
    for ((exp, loops), count) in histogram {
        by_loops
            .entry(loops)
            .or_insert_with(LaurentPoly::zero)
            .add_term(exp, BigInt::from(count));
    }
    let mut keys: Vec<usize> = by_loops.keys().copied().collect();
    keys.sort_unstable();
    let mut out = LaurentPoly::zero();
    for k in keys {
        out += &by_loops[&k] * &loop_power(k - 1);
    }
    out
}

/// Follow a set of links where every node has one or two links. Returns the
/// pairs of end nodes (nodes `>= shift` reduced by `shift`) and the number of cycles.
fn trace_links(links: &[(usize, usize)], shift: usize) -> (Vec<(u32, u32)>, usize) {
    let mut at: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &(a, b)) in links.iter().enumerate() {
        at.entry(a).or_default().push(i);
        at.entry(b).or_default().push(i);
    }
    let mut used = vec![false; links.len()];
    let mut ends: Vec<usize> = at.iter().filter(|(_, v)| v.len() == 1).map(|(&k, _)| k).collect();
    ends.sort_unstable();
    let walk = |start: usize, used: &mut Vec<bool>| -> usize {
        let mut cur = start;
        loop {
            let Some(&e) = at[&cur].iter().find(|&&e| !used[e]) else {
                return cur;
            };
            used[e] = true;
            let (a, b) = links[e];
            cur = if a == cur { b } else { a };
        }
    };
    let key = |v: usize| (if v >= shift { v - shift } else { v }) as u32;
    let mut pairs = Vec::new();
    for x in ends {
        if at[&x].iter().all(|&e| used[e]) {
            continue;
        }
        let y = walk(x, &mut used);
        let (a, b) = (key(x), key(y));
        pairs.push((a.min(b), a.max(b)));
    }
    let mut loops = 0;
    for i in 0..links.len() {
        if !used[i] {
            walk(links[i].0, &mut used);
            loops += 1;
        }
    }
    (pairs, loops)
}

/// Dense polynomial with exponents `-offset..`.
#[derive(Clone)]
struct Dense {
    c: Vec<i128>,
}

/// The bracket summed crossing by crossing. A partial state is the way the
/// smoothed crossings connect the open ends, keyed by the flat ports on the
/// unprocessed side; partial states with the same key are added up.
pub fn bracket_by_frontier(l: &LinkDiagram) -> LaurentPoly {
    let code = l.code();
    let n = code.crossing_count();
    if n == 0 {
        return loop_power(code.free_loops().saturating_sub(1));
    }
    let flat = |p: Port| 4 * p.node + p.slot;
    let partner: Vec<usize> = (0..4 * n)
        .map(|i| flat(code.partner(Port::new(i / 4, i % 4))))
        .collect();
    // greedy order keeping the frontier small
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let touching = (0..4).filter(|&s| done[partner[4 * c + s] / 4]).count();
                (touching, std::cmp::Reverse(c))
            })
            .expect("crossings remain");
        done[next] = true;
        order.push(next);
    }
    let offset = 3 * n as i64 + 4;
    let width = (2 * offset + 1) as usize;
    let mut states: HashMap<Vec<u32>, Dense> = HashMap::new();
    let mut one = vec![0i128; width];
    one[offset as usize] = 1;
    states.insert(Vec::new(), Dense { c: one });
    let d_mul = |p: &Dense| -> Dense {
        // multiply by -A^2 - A^-2
        let mut c = vec![0i128; width];
        for (i, &x) in p.c.iter().enumerate() {
            if x != 0 {
                c[i + 2] -= x;
                c[i - 2] -= x;
            }
        }
        Dense { c }
    };
    for &c in &order {
        let mut next: HashMap<Vec<u32>, Dense> = HashMap::new();
        for (key, poly) in &states {
            let mut pairing: HashMap<usize, usize> = HashMap::new();
            for pair in key.chunks(2) {
                pairing.insert(pair[0] as usize, pair[1] as usize);
                pairing.insert(pair[1] as usize, pair[0] as usize);
            }
            for (joins, shift) in [([(0usize, 1usize), (2, 3)], 1i64), ([(1, 2), (3, 0)], -1)] {
                let mut links: Vec<(usize, usize)> = Vec::new();
                for (&a, &b) in &pairing {
                    if a < b {
                        links.push((a, b));
                    }
                }
                for (s, t) in joins {
                    links.push((4 * c + s, 4 * c + t));
                }
                for s in 0..4 {
                    let p = 4 * c + s;
                    let q = partner[p];
                    if pairing.contains_key(&p) {
                        continue; // already an open end of the processed region
                    }
                    if q / 4 == c {
                        if p < q {
                            links.push((p, q));
                        }
                    } else {
                        // a new open end at the unprocessed port q
                        links.push((p, q + 4 * n));
                    }
                }
                let (mut new_key, loops) = trace_links(&links, 4 * n);
                new_key.sort_unstable();
                let key: Vec<u32> = new_key.iter().flat_map(|&(a, b)| [a, b]).collect();
                let mut p = Dense { c: vec![0i128; width] };
                for (i, &x) in poly.c.iter().enumerate() {
                    if x != 0 {
                        p.c[(i as i64 + shift) as usize] += x;
                    }
                }
                for _ in 0..loops {
                    p = d_mul(&p);
                }
                match next.get_mut(&key) {
                    Some(acc) => {
                        for (a, b) in acc.c.iter_mut().zip(&p.c) {
                            *a += b;
                        }
                    }
                    None => {
                        next.insert(key, p);
                    }
                }
            }
        }
        states = next;
    }
    let total = states.remove(&Vec::new()).expect("all ends closed");
    let mut out = LaurentPoly::zero();
    for (i, &x) in total.c.iter().enumerate() {
        if x != 0 {
            out.add_term(i as i64 - offset, BigInt::from(x));
        }
    }
    let full = &out * &loop_power(code.free_loops());
    full.div_exact(&LaurentPoly::loop_value())
        .expect("every state has at least one loop")
}

fn loop_power(k: usize) -> LaurentPoly {
    LaurentPoly::loop_value().pow(k as u32)
}

/// Kauffman bracket by recursive smoothing of the first crossing,
/// `<D> = A <D_A> + A^-1 <D_B>`. Independent of [`kauffman_bracket`].
pub fn kauffman_bracket_skein(l: &LinkDiagram, cfg: &StateSumConfig) -> Result<LaurentPoly, InvariantError> {
    let code = l.code();
    let n = code.crossing_count();
    if n > cfg.max_bracket_crossings {
        return Err(InvariantError::CapExceeded {
            what: "bracket",
            crossings: n,
            cap: cfg.max_bracket_crossings,
        });
    }
    if n == 0 && code.free_loops() == 0 {
        return Ok(LaurentPoly::one());
    }
    // partner[4c+s] = flat port at the other end of the arc
    let partner: Vec<usize> = (0..4 * n)
        .map(|i| {
            let q = code.partner(Port::new(i / 4, i % 4));
            4 * q.node + q.slot
        })
        .collect();
    let mut memo = cfg.memo.then(HashMap::new);
    let sum = skein(partner, 0, &mut memo);
    // sum counts every loop with d; the bracket counts one loop fewer
    let full = &sum * &loop_power(code.free_loops());
    Ok(full
        .div_exact(&LaurentPoly::loop_value())
        .expect("every state has at least one loop"))
}

/// Sum over smoothings of crossings `k..` of `A^(a-b) d^(closed loops)`.
fn skein(partner: Vec<usize>, k: usize, memo: &mut Option<HashMap<(usize, Vec<usize>), LaurentPoly>>) -> LaurentPoly {
    if 4 * k == partner.len() {
        return LaurentPoly::one();
    }
    if let Some(m) = memo.as_ref() {
        if let Some(v) = m.get(&(k, partner[4 * k..].to_vec())) {
            return v.clone();
        }
    }
    let mut out = LaurentPoly::zero();
    for (joins, exp) in [([(0, 1), (2, 3)], 1), ([(1, 2), (3, 0)], -1)] {
        let mut p = partner.clone();
        let mut loops = 0u32;
        for (s, t) in joins {
            let (x, y) = (4 * k + s, 4 * k + t);
            let (px, py) = (p[x], p[y]);
            if px == y {
                loops += 1;
            } else {
                p[px] = py;
                p[py] = px;
            }
        }
        let sub = skein(p, k + 1, memo);
        out += (&sub * &loop_power(loops as usize)).scale_monomial(1, exp);
    }
    if let Some(m) = memo.as_mut() {
        m.insert((k, partner[4 * k..].to_vec()), out.clone());
    }
    out
}

/// Jones polynomial in the variable `A`: `(-A^3)^(-w) <L>`.
pub fn jones(l: &LinkDiagram, cfg: &StateSumConfig) -> Result<LaurentPoly, InvariantError> {
    let w = l.writhe()?;
    let b = kauffman_bracket(l, cfg)?;
    Ok(&LaurentPoly::neg_a3_pow(-w) * &b)
}
