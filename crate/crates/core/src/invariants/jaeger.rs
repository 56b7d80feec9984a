use super::bracket::kauffman_bracket;
use super::yamada::yamada;
use super::{InvariantError, StateSumConfig};
use crate::algebra::{LaurentPoly, PhiFraction};
use crate::diagram::{BandedLink, SpatialGraphDiagram};

/// Jaeger polynomial at `(-A^3, A)`, normalized so that `Y(D; A^4) = -phi^(|E|-|V|+1) J(D)`.
///
/// Every band carries one bar. A bar is either erased or replaced by a cut
/// (two turnbacks) with weight `1/phi`, so the value is the sum over edge
/// subsets `F` of `phi^-|F| <double(D) with the bands of F cut>`.
pub fn jaeger(d: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<PhiFraction, InvariantError> {
    let e = d.edges().len();
    assert!(e < 64, "too many edges for the bar expansion");
    let base = BandedLink::new(d);
    let mut out = PhiFraction::zero();
    for mask in 0u64..1 << e {
        let link = base.clone().with_cut_mask(mask).link();
        let b = kauffman_bracket(&link, cfg)?;
        out = &out + &PhiFraction::new(b, mask.count_ones());
    }
    Ok(out)
}

/// `-Y(D; A^4) / phi^(|E|-|V|+1)`, an independent route to [`jaeger`] for connected diagrams.
pub fn jaeger_via_yamada(d: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<PhiFraction, InvariantError> {
    let y = yamada(d, cfg)?;
    let y4 = y.substitute_power(4).expect("nonzero power");
    let k = d.edges().len() as i64 - d.code().vertex_count() as i64 + 1;
    let num = -y4;
    Ok(if k >= 0 {
        PhiFraction::new(num, k as u32)
    } else {
        PhiFraction::from(&num * &LaurentPoly::phi().pow((-k) as u32))
    })
}
