//! Band surfaces with zero Seifert form: crossing sums, twist parameters,
//! associated links and the normalized polynomials built from them.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{LaurentPoly, PhiFraction};
use crate::diagram::{BandedLink, DiagramError, GraphKind, LinkDiagram, SpatialGraphDiagram, K4_LABELS};
use crate::invariants::{jaeger, kauffman_bracket, yamada, InvariantError, StateSumConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("twist parameters are defined for knots, theta curves and K4 graphs, not {0}")]
    Unsupported(GraphKind),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("associated link has writhe {actual}, expected {expected}")]
    Writhe { actual: i64, expected: i64 },
}

impl From<SurfaceError> for InvariantError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::Invariant(e) => e,
            SurfaceError::Diagram(e) => InvariantError::Diagram(e),
            other => InvariantError::Diagram(DiagramError::Invalid(vec![other.to_string()])),
        }
    }
}

/// Signed crossing sums between edges and the half twists they determine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistData {
    /// `w[i][j]`: sum of the signs of crossings between edges `i` and `j`.
    pub w: Vec<Vec<i64>>,
    /// Half twists per edge: `n1..n6` for K4, `m1..m3` for theta, one entry for a knot.
    pub params: Vec<i64>,
    /// Edge ids in parameter order.
    pub edges: Vec<String>,
    #[serde(serialize_with = "kind_name")]
    pub kind: GraphKind,
}

fn kind_name<S: serde::Serializer>(k: &GraphKind, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&k.to_string())
}

impl TwistData {
    pub fn total(&self) -> i64 {
        self.params.iter().sum()
    }
}

/// Edge order used for matrices: `a1..a6` for K4, file order otherwise.
fn edge_order(d: &SpatialGraphDiagram) -> Vec<usize> {
    if d.kind() == GraphKind::K4 {
        K4_LABELS
            .iter()
            .map(|(l, _, _)| d.edge_index(l).expect("K4 diagrams carry a1..a6"))
            .collect()
    } else {
        (0..d.edges().len()).collect()
    }
}

/// Symmetric matrix of signed crossing sums, indexed in [`edge_order`].
pub fn crossing_matrix(d: &SpatialGraphDiagram) -> Vec<Vec<i64>> {
    let order = edge_order(d);
    let mut pos = vec![0; d.edges().len()];
    for (i, &e) in order.iter().enumerate() {
        pos[e] = i;
    }
    let n = order.len();
    let mut w = vec![vec![0i64; n]; n];
    for (c, (u, o)) in d.crossing_edges() {
        let s = d.crossing_sign(c) as i64;
        let (i, j) = (pos[u], pos[o]);
        w[i][j] += s;
        if i != j {
            w[j][i] += s;
        }
    }
    w
}

/// Twist parameters of a knot, theta or K4 diagram. Theta diagrams are first
/// reoriented so that every edge leaves the same vertex.
pub fn twist_parameters(d: &SpatialGraphDiagram) -> Result<TwistData, SurfaceError> {
    let d = match d.kind() {
        GraphKind::Theta => d.theta_normalized()?,
        GraphKind::Knot | GraphKind::K4 => d.clone(),
        other => return Err(SurfaceError::Unsupported(other)),
    };
    let w = crossing_matrix(&d);
    let edges = edge_order(&d).iter().map(|&e| d.edges()[e].id.clone()).collect();
    let params = params_from_matrix(d.kind(), &w);
    Ok(TwistData {
        w,
        params,
        edges,
        kind: d.kind(),
    })
}

/// The closed formulas for the half twists in terms of the crossing sums.
pub fn params_from_matrix(kind: GraphKind, w: &[Vec<i64>]) -> Vec<i64> {
    // 1-based access
    let v = |i: usize, j: usize| w[i - 1][j - 1];
    match kind {
        GraphKind::Knot => vec![-2 * v(1, 1)],
        GraphKind::Theta => vec![
            -2 * v(1, 1) + v(1, 2) + v(1, 3) - v(2, 3),
            -2 * v(2, 2) + v(1, 2) + v(2, 3) - v(1, 3),
            -2 * v(3, 3) + v(1, 3) + v(2, 3) - v(1, 2),
        ],
        GraphKind::K4 => vec![
            -2 * v(1, 1) - v(2, 3) - v(2, 5) + v(2, 1) + v(1, 3) + v(1, 5) + v(3, 6) - v(1, 6) + v(5, 6),
            -2 * v(2, 2) - v(2, 4) + v(1, 4) + v(4, 6) + v(2, 3) - v(1, 3) - v(3, 6) + v(1, 2) + v(2, 6),
            -2 * v(3, 3) + v(3, 4) - v(1, 4) + v(4, 5) + v(2, 3) + v(2, 5) - v(1, 2) + v(1, 3) - v(3, 5),
            -2 * v(4, 4) - v(2, 4) + v(3, 4) - v(4, 6) + v(3, 6) - v(2, 6) - v(4, 5) - v(2, 5) + v(3, 5),
            -2 * v(5, 5) - v(3, 5) + v(1, 5) - v(3, 6) + v(1, 6) - v(5, 6) - v(3, 4) + v(1, 4) - v(4, 5),
            -2 * v(6, 6) - v(1, 6) + v(2, 6) + v(2, 5) - v(1, 5) - v(5, 6) + v(2, 4) - v(1, 4) - v(4, 6),
        ],
        GraphKind::Other => Vec::new(),
    }
}

/// The boundary of the zero-Seifert-form band surface.
#[derive(Clone, Debug)]
pub struct AssociatedLink {
    pub link: LinkDiagram,
    pub twist: TwistData,
    /// False when the twisted band surface is not orientable; the link is then unoriented.
    pub antiparallel: bool,
}

impl AssociatedLink {
    /// Writhe of the oriented link; `-sum(params)` when no antiparallel orientation exists.
    pub fn writhe(&self) -> i64 {
        if self.antiparallel {
            self.link.writhe().expect("antiparallel links are oriented")
        } else {
            -self.twist.total()
        }
    }

    /// Jones polynomial `(-A^3)^(-w) <L>`.
    pub fn jones(&self, cfg: &StateSumConfig) -> Result<LaurentPoly, InvariantError> {
        let b = kauffman_bracket(&self.link, cfg)?;
        Ok(&LaurentPoly::neg_a3_pow(-self.writhe()) * &b)
    }
}

/// Double of `d` with `params[i]` half twists on band `i`.
pub fn twisted_double(d: &SpatialGraphDiagram, twist: &TwistData) -> Result<AssociatedLink, SurfaceError> {
    let mut b = BandedLink::new(d);
    for (id, &n) in twist.edges.iter().zip(&twist.params) {
        b = b.insert_half_twists(id, n)?;
    }
    let drawn = b.draw();
    let out = AssociatedLink {
        link: drawn.link,
        twist: twist.clone(),
        antiparallel: drawn.antiparallel,
    };
    if out.antiparallel {
        let actual = out.writhe();
        let expected = -twist.total();
        if actual != expected {
            return Err(SurfaceError::Writhe { actual, expected });
        }
    }
    Ok(out)
}

/// The associated link: the double with the twist parameters inserted.
pub fn associated_link(d: &SpatialGraphDiagram) -> Result<AssociatedLink, SurfaceError> {
    let t = twist_parameters(d)?;
    let d = if d.kind() == GraphKind::Theta {
        d.theta_normalized()?
    } else {
        d.clone()
    };
    twisted_double(&d, &t)
}

/// `f_n = A^(n-2) (1 - (-A^-4)^n) / (1 + A^-4)`, always a Laurent polynomial.
pub fn f_coefficient(n: i64) -> LaurentPoly {
    let num = &LaurentPoly::one() - &LaurentPoly::neg_a4_pow(-n);
    let den = LaurentPoly::from_terms([(0, 1.into()), (-4, 1.into())]);
    num.div_exact(&den)
        .expect("1 + A^-4 divides 1 - (-A^-4)^n")
        .scale_monomial(1, n - 2)
}

/// `(-A^4)^(sum params) J(D)`; for knots the sum is `-2w`, giving `A^(-8w) J(D)`.
pub fn normalized_jaeger(d: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<PhiFraction, SurfaceError> {
    let t = twist_parameters(d)?;
    Ok(jaeger(d, cfg)?.mul_neg_a4_pow(t.total()))
}

/// `(-A)^(sum params) Y(D)`.
pub fn normalized_yamada(d: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<LaurentPoly, SurfaceError> {
    let t = twist_parameters(d)?;
    Ok(&LaurentPoly::neg_a_pow(t.total()) * &yamada(d, cfg)?)
}

/// `A^(-8w) J(K)` of a knot diagram.
pub fn normalized_jaeger_knot(k: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<PhiFraction, SurfaceError> {
    if k.kind() != GraphKind::Knot {
        return Err(DiagramError::WrongKind {
            expected: GraphKind::Knot,
            found: k.kind(),
        }
        .into());
    }
    let w = k.writhe();
    Ok(jaeger(k, cfg)?.scale_monomial(1, -8 * w))
}

/// One constituent cycle of a K4 diagram with its writhe and the twist parameters along it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWrithe {
    /// Edge numbers `1..=6` of the cycle.
    pub cycle: Vec<usize>,
    pub writhe: i64,
    pub twist_sum: i64,
}

impl CycleWrithe {
    /// `2 w(l) = -(sum of n_i over the cycle)`, with the same sign on every cycle.
    pub fn holds(&self) -> bool {
        2 * self.writhe == -self.twist_sum
    }
}

/// Writhe of each of the seven constituent knots against its twist parameters.
pub fn cycle_writhes(d: &SpatialGraphDiagram) -> Result<Vec<CycleWrithe>, SurfaceError> {
    if d.kind() != GraphKind::K4 {
        return Err(SurfaceError::Unsupported(d.kind()));
    }
    let t = twist_parameters(d)?;
    crate::diagram::k4_cycles()
        .into_iter()
        .map(|c| {
            let writhe = d.k4_subgraph(&c)?.writhe();
            let twist_sum = c.iter().map(|&i| t.params[i - 1]).sum();
            Ok(CycleWrithe {
                cycle: c,
                writhe,
                twist_sum,
            })
        })
        .collect()
}
