use std::collections::HashMap;

use rayon::prelude::*;

use super::hpoly::{y_to_a, HCache, YPoly};
use super::{InvariantError, StateSumConfig};
use crate::algebra::LaurentPoly;
use crate::diagram::{resolve_state, PlanarCode, Smoothing, SpatialGraphDiagram};

const CHUNK: u64 = 1 << 10;

/// Yamada polynomial: the sum over all 3^n states of `A^(m1-m2) h(D_S; -1, -A-2-A^-1)`.
pub fn yamada(d: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<LaurentPoly, InvariantError> {
    yamada_of_code(d.code(), cfg)
}

/// The same state sum on a bare planar code, which need not trace out named
/// edges. Smoothing a crossing of a spatial graph diagram gives such codes.
pub fn yamada_of_code(code: &PlanarCode, cfg: &StateSumConfig) -> Result<LaurentPoly, InvariantError> {
    let n = code.crossing_count();
    if n > cfg.max_yamada_crossings {
        return Err(InvariantError::CapExceeded {
            what: "Yamada state sum",
            crossings: n,
            cap: cfg.max_yamada_crossings,
        });
    }
    let total = 3u64.pow(n as u32);
    let chunks = total.div_ceil(CHUNK);
    let by_exp: HashMap<i64, YPoly> = cfg.run(|| {
        (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut cache = HCache::default();
                let mut acc: HashMap<i64, YPoly> = HashMap::new();
                let mut state = vec![Smoothing::A; n];
                for s in chunk * CHUNK..((chunk + 1) * CHUNK).min(total) {
                    let mut x = s;
                    for slot in state.iter_mut() {
                        *slot = match x % 3 {
                            0 => Smoothing::A,
                            1 => Smoothing::B,
                            _ => Smoothing::Vertex,
                        };
                        x /= 3;
                    }
                    let g = resolve_state(code, &state);
                    let (verts, edges) = g.with_circles_as_loops();
                    let h = cache.h(verts, edges);
                    let e = g.m1 as i64 - g.m2 as i64;
                    let slot = acc.entry(e).or_default();
                    if slot.len() < h.len() {
                        slot.resize(h.len(), 0);
                    }
                    for (a, b) in slot.iter_mut().zip(&h) {
                        *a += b;
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (e, p) in b {
                    let slot = a.entry(e).or_default();
                    if slot.len() < p.len() {
                        slot.resize(p.len(), 0);
                    }
                    for (x, y) in slot.iter_mut().zip(&p) {
                        *x += y;
                    }
                }
                a
            })
    });
    let mut exps: Vec<i64> = by_exp.keys().copied().collect();
    exps.sort_unstable();
    let mut out = LaurentPoly::zero();
    for e in exps {
        out += y_to_a(&by_exp[&e]).scale_monomial(1, e);
    }
    Ok(out)
}
