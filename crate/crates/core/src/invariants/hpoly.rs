use std::collections::HashMap;

use crate::algebra::LaurentPoly;
use crate::diagram::ResolvedGraph;

/// Dense integer polynomial in `y`; entry `i` is the coefficient of `y^i`.
pub type YPoly = Vec<i128>;

fn add_into(acc: &mut YPoly, p: &[i128]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

fn mul(p: &[i128], q: &[i128]) -> YPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn trim(mut p: YPoly) -> YPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// `y = -A - 2 - A^-1`.
pub fn y_value() -> LaurentPoly {
    LaurentPoly::from_terms([(1, (-1).into()), (0, (-2).into()), (-1, (-1).into())])
}

/// Substitute `y = -A-2-A^-1`.
pub fn y_to_a(p: &[i128]) -> LaurentPoly {
    let y = y_value();
    let mut out = LaurentPoly::zero();
    for c in p.iter().rev() {
        out = &out * &y;
        out += LaurentPoly::constant(*c);
    }
    out
}

/// `h(G; -1, y)` of a multigraph by deletion and contraction.
///
/// `edges` may contain loops and parallel edges; vertices are `0..n`.
pub fn h_poly(n: usize, edges: &[(usize, usize)]) -> YPoly {
    let mut memo = HashMap::new();
    h_rec(n, edges.to_vec(), &mut memo)
}

/// `h(G; -1, -A-2-A^-1)` of a resolved state, free circles counted as vertices with a loop.
pub fn h_eval(g: &ResolvedGraph) -> LaurentPoly {
    let (n, edges) = g.with_circles_as_loops();
    y_to_a(&h_poly(n, &edges))
}

/// The same value as [`h_eval`] summed over all edge subsets directly.
pub fn h_eval_subsets(n: usize, edges: &[(usize, usize)]) -> LaurentPoly {
    assert!(edges.len() < 32, "subset sum over too many edges");
    let mut acc: YPoly = Vec::new();
    for mask in 0u32..1 << edges.len() {
        let mut parent: Vec<usize> = (0..n).collect();
        let mut comps = n;
        let mut kept = 0usize;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                continue; // edge in F is removed
            }
            kept += 1;
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        let beta = kept + comps - n;
        if acc.len() <= beta {
            acc.resize(beta + 1, 0);
        }
        acc[beta] += if comps % 2 == 1 { -1 } else { 1 };
    }
    y_to_a(&acc)
}

fn root(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

type Memo = HashMap<(usize, Vec<(usize, usize)>), YPoly>;

/// Memo shared between evaluations of many small graphs.
#[derive(Default)]
pub(crate) struct HCache(Memo);

impl HCache {
    pub(crate) fn h(&mut self, n: usize, edges: Vec<(usize, usize)>) -> YPoly {
        h_rec(n, edges, &mut self.0)
    }
}

fn h_rec(n: usize, mut edges: Vec<(usize, usize)>, memo: &mut Memo) -> YPoly {
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    let key = (n, edges.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let out = trim(h_simplify(n, edges, memo));
    memo.insert(key, out.clone());
    out
}

fn h_simplify(n: usize, edges: Vec<(usize, usize)>, memo: &mut Memo) -> YPoly {
    // loops contribute (1 + y) each
    let loops = edges.iter().filter(|e| e.0 == e.1).count();
    let edges: Vec<(usize, usize)> = edges.into_iter().filter(|e| e.0 != e.1).collect();
    let mut factor: YPoly = vec![1];
    for _ in 0..loops {
        factor = mul(&factor, &[1, 1]);
    }
    if n == 0 {
        return factor;
    }
    // split into components
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in &edges {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| root(&mut parent, v)).collect();
    let mut comp_ids: Vec<usize> = roots.clone();
    comp_ids.sort_unstable();
    comp_ids.dedup();
    if comp_ids.len() > 1 {
        for r in comp_ids {
            let verts: Vec<usize> = (0..n).filter(|&v| roots[v] == r).collect();
            let mut idx = vec![usize::MAX; n];
            for (i, &v) in verts.iter().enumerate() {
                idx[v] = i;
            }
            let sub: Vec<(usize, usize)> = edges
                .iter()
                .filter(|e| roots[e.0] == r)
                .map(|&(u, v)| (idx[u], idx[v]))
                .collect();
            factor = mul(&factor, &h_rec(verts.len(), sub, memo));
            if factor.iter().all(|&c| c == 0) {
                return Vec::new();
            }
        }
        return factor;
    }
    // connected, loopless
    if edges.is_empty() {
        return mul(&factor, &[-1]);
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    if degree.contains(&1) {
        return Vec::new(); // a pendant edge is a bridge
    }
    // parallel classes
    let mut classes: HashMap<(usize, usize), usize> = HashMap::new();
    for &e in &edges {
        *classes.entry(e).or_insert(0) += 1;
    }
    // a 2-valent vertex with two different neighbours: deleting either edge
    // leaves a bridge, so contract
    let pick = (0..n)
        .find(|&v| degree[v] == 2 && !classes.iter().any(|(&(a, b), &k)| k == 2 && (a == v || b == v)))
        .and_then(|v| edges.iter().copied().find(|e| e.0 == v || e.1 == v))
        .map(|e| (e, 1usize))
        .unwrap_or_else(|| {
            let (&e, &k) = classes
                .iter()
                .max_by_key(|(&e, &k)| (k, std::cmp::Reverse(e)))
                .expect("edges present");
            (e, k)
        });
    let ((u, v), k) = pick;
    let contracted_only = k == 1 && (degree[u] == 2 || degree[v] == 2) && classes[&(u, v)] == 1;
    let rest: Vec<(usize, usize)> = edges.iter().copied().filter(|&e| e != (u, v)).collect();
    let removed = edges.len() - rest.len();
    // contract the whole class; the other class edges would become loops
    let merge = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let mut contracted_rest: Vec<(usize, usize)> = rest.iter().map(|&(a, b)| (merge(a), merge(b))).collect();
    let mut result: YPoly;
    if contracted_only {
        result = h_rec(n - 1, std::mem::take(&mut contracted_rest), memo);
    } else {
        let deleted = h_rec(n, rest.clone(), memo);
        let contracted = h_rec(n - 1, contracted_rest, memo);
        // h = h(G - P) + sum_{j<k} (1+y)^j h(G / P)
        let mut coeff: YPoly = Vec::new();
        let mut pw: YPoly = vec![1];
        for _ in 0..removed {
            add_into(&mut coeff, &pw);
            pw = mul(&pw, &[1, 1]);
        }
        result = deleted;
        add_into(&mut result, &mul(&coeff, &contracted));
    }
    mul(&factor, &result)
}
