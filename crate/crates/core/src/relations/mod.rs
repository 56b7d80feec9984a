//! Verifiers for the identities tying the Jaeger, Yamada and Jones
//! polynomials together. Each side is computed from the raw diagram.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{LaurentPoly, PhiFraction};
use crate::diagram::{double, k4_cycles, k4_thetas, DiagramError, GraphKind, SpatialGraphDiagram};
use crate::invariants::{jaeger, kauffman_bracket, InvariantError, StateSumConfig};
use crate::surfaces::{
    associated_link, normalized_jaeger, normalized_jaeger_knot, normalized_yamada, twist_parameters, twisted_double,
    SurfaceError, TwistData,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("{identity} needs a {expected} diagram, got {found}")]
    WrongKind {
        identity: &'static str,
        expected: GraphKind,
        found: GraphKind,
    },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

impl RelationError {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            RelationError::Invariant(InvariantError::CapExceeded { .. })
                | RelationError::Surface(SurfaceError::Invariant(InvariantError::CapExceeded { .. }))
        )
    }
}

/// Both sides of an identity and the named pieces they were built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub lhs: PhiFraction,
    pub rhs: PhiFraction,
    pub equal: bool,
    pub terms: BTreeMap<String, PhiFraction>,
}

impl VerificationReport {
    fn new(identity: &str, lhs: PhiFraction, rhs: PhiFraction, terms: BTreeMap<String, PhiFraction>) -> Self {
        let equal = lhs == rhs;
        Self {
            identity: identity.to_string(),
            lhs,
            rhs,
            equal,
            terms,
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Map<String, Value> = self.terms.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        json!({
            "identity": self.identity,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
            "terms": terms,
        })
    }

    /// Readable rendering: both sides, the terms, and the difference when unequal.
    pub fn render(&self) -> String {
        let mut out = format!(
            "{}: {}\n  lhs = {}\n  rhs = {}\n",
            self.identity,
            if self.equal { "equal" } else { "NOT EQUAL" },
            self.lhs,
            self.rhs
        );
        for (k, v) in &self.terms {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        if !self.equal {
            out.push_str(&format!("  lhs - rhs = {}\n", &self.lhs - &self.rhs));
        }
        out
    }
}

fn expect_kind(identity: &'static str, d: &SpatialGraphDiagram, kind: GraphKind) -> Result<(), RelationError> {
    if d.kind() == kind {
        Ok(())
    } else {
        Err(RelationError::WrongKind {
            identity,
            expected: kind,
            found: d.kind(),
        })
    }
}

fn frac(p: LaurentPoly) -> PhiFraction {
    PhiFraction::from(p)
}

fn over_phi(k: u32) -> PhiFraction {
    PhiFraction::inv_phi_pow(k)
}

/// `(-A^-4)^k`.
fn q(k: i64) -> LaurentPoly {
    LaurentPoly::neg_a4_pow(-k)
}

fn cycle_name(c: &[usize]) -> String {
    c.iter().map(ToString::to_string).collect()
}

fn bracket_of_double(d: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<LaurentPoly, RelationError> {
    Ok(kauffman_bracket(&double(d), cfg)?)
}

/// The six theta subgraphs, reoriented so every edge leaves one vertex.
fn thetas(d: &SpatialGraphDiagram) -> Result<Vec<SpatialGraphDiagram>, RelationError> {
    k4_thetas()
        .iter()
        .map(|t| Ok(d.k4_subgraph(t)?.theta_normalized()?))
        .collect()
}

fn cycles(d: &SpatialGraphDiagram) -> Result<Vec<(Vec<usize>, SpatialGraphDiagram)>, RelationError> {
    k4_cycles()
        .into_iter()
        .map(|c| {
            let k = d.k4_subgraph(&c)?;
            Ok((c, k))
        })
        .collect()
}

/// Constituent knots of a theta diagram: `K_i` drops edge `i`.
fn theta_knots(d: &SpatialGraphDiagram) -> Result<Vec<SpatialGraphDiagram>, RelationError> {
    let ids: Vec<String> = d.edges().iter().map(|e| e.id.clone()).collect();
    (0..3)
        .map(|i| {
            let keep: Vec<&str> = ids
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, s)| s.as_str())
                .collect();
            Ok(d.delete_edges(&keep)?)
        })
        .collect()
}

/// `J~(Theta) - V(L_Theta) = (1/phi) sum J~(K_i) - 1/phi^2`.
pub fn verify_theta_theorem(
    d: &SpatialGraphDiagram,
    cfg: &StateSumConfig,
) -> Result<VerificationReport, RelationError> {
    const NAME: &str = "theta-theorem";
    expect_kind(NAME, d, GraphKind::Theta)?;
    let d = d.theta_normalized()?;
    let mut terms = BTreeMap::new();
    let jt = normalized_jaeger(&d, cfg)?;
    let v = associated_link(&d)?.jones(cfg)?;
    terms.insert("J~(Theta)".into(), jt.clone());
    terms.insert("V(L_Theta)".into(), frac(v.clone()));
    let mut sum = PhiFraction::zero();
    for (i, k) in theta_knots(&d)?.iter().enumerate() {
        let jk = normalized_jaeger_knot(k, cfg)?;
        terms.insert(format!("J~(K{})", i + 1), jk.clone());
        sum = &sum + &jk;
    }
    let lhs = &jt - &frac(v);
    let rhs = &(&sum * &over_phi(1)) - &over_phi(2);
    Ok(VerificationReport::new(NAME, lhs, rhs, terms))
}

/// Jones polynomial of `L(m1, m2, m3)` against its bracket expansion. With
/// `params` the twist parameters are replaced by the given values.
pub fn verify_theta_jones_formula(
    d: &SpatialGraphDiagram,
    params: Option<[i64; 3]>,
    cfg: &StateSumConfig,
) -> Result<VerificationReport, RelationError> {
    const NAME: &str = "theta-jones";
    expect_kind(NAME, d, GraphKind::Theta)?;
    let d = d.theta_normalized()?;
    let mut t = twist_parameters(&d)?;
    if let Some(m) = params {
        t.params = m.to_vec();
    }
    let link = twisted_double(&d, &t)?;
    let lhs = frac(link.jones(cfg)?);
    let mut terms = BTreeMap::new();
    terms.insert("V(L(m))".into(), lhs.clone());
    let l = bracket_of_double(&d, cfg)?;
    terms.insert("<L>".into(), frac(l.clone()));
    let mut inner = frac(l);
    let knots = theta_knots(&d)?;
    let mut qsum = LaurentPoly::zero();
    for (i, k) in knots.iter().enumerate() {
        let b = bracket_of_double(k, cfg)?;
        terms.insert(format!("<l{}^(2)>", i + 1), frac(b.clone()));
        let coeff = &LaurentPoly::one() - &q(t.params[i]);
        inner = &inner + &(&frac(&coeff * &b) * &over_phi(1));
        qsum += q(t.params[i]);
    }
    let total: i64 = t.params.iter().sum();
    let tail = &(&LaurentPoly::constant(2) - &qsum) + &q(total);
    inner = &inner + &(&frac(tail) * &over_phi(2));
    let rhs = inner.mul_neg_a4_pow(total);
    Ok(VerificationReport::new(NAME, lhs, rhs, terms))
}

struct K4Pieces {
    twist: TwistData,
}

fn k4_pieces(name: &'static str, d: &SpatialGraphDiagram) -> Result<K4Pieces, RelationError> {
    expect_kind(name, d, GraphKind::K4)?;
    Ok(K4Pieces {
        twist: twist_parameters(d)?,
    })
}

/// `J~(Omega) = V(L) + (1/phi) sum J~(Theta_i) - (1/phi^2) sum J~(l_j) + 1/phi^3`.
pub fn verify_main_theorem(d: &SpatialGraphDiagram, cfg: &StateSumConfig) -> Result<VerificationReport, RelationError> {
    const NAME: &str = "main";
    k4_pieces(NAME, d)?;
    let mut terms = BTreeMap::new();
    let lhs = normalized_jaeger(d, cfg)?;
    terms.insert("J~(Omega)".into(), lhs.clone());
    let v = associated_link(d)?.jones(cfg)?;
    terms.insert("V(L)".into(), frac(v.clone()));
    let mut theta_sum = PhiFraction::zero();
    for (i, t) in thetas(d)?.iter().enumerate() {
        let j = normalized_jaeger(t, cfg)?;
        terms.insert(format!("J~(Theta{})", i + 1), j.clone());
        theta_sum = &theta_sum + &j;
    }
    let mut knot_sum = PhiFraction::zero();
    for (c, k) in cycles(d)? {
        let j = normalized_jaeger_knot(&k, cfg)?;
        terms.insert(format!("J~(l{})", cycle_name(&c)), j.clone());
        knot_sum = &knot_sum + &j;
    }
    terms.insert("sum J~(Theta_i)".into(), theta_sum.clone());
    terms.insert("sum J~(l_j)".into(), knot_sum.clone());
    let rhs = &(&(&frac(v) + &(&theta_sum * &over_phi(1))) - &(&knot_sum * &over_phi(2))) + &over_phi(3);
    Ok(VerificationReport::new(NAME, lhs, rhs, terms))
}

/// `Y~(Omega; A^4) + phi^3 V(L) = sum Y~(Theta_i; A^4) - sum Y~(l_j; A^4) - 1`.
pub fn verify_yamada_corollary(
    d: &SpatialGraphDiagram,
    cfg: &StateSumConfig,
) -> Result<VerificationReport, RelationError> {
    const NAME: &str = "yamada";
    k4_pieces(NAME, d)?;
    let a4 = |p: LaurentPoly| p.substitute_power(4).expect("power 4");
    let mut terms = BTreeMap::new();
    let y = a4(normalized_yamada(d, cfg)?);
    terms.insert("Y~(Omega;A^4)".into(), frac(y.clone()));
    let v = associated_link(d)?.jones(cfg)?;
    terms.insert("V(L)".into(), frac(v.clone()));
    let lhs = &frac(y) + &frac(&LaurentPoly::phi().pow(3) * &v);
    let mut rhs = frac(LaurentPoly::constant(-1));
    for (i, t) in thetas(d)?.iter().enumerate() {
        let yt = a4(normalized_yamada(t, cfg)?);
        terms.insert(format!("Y~(Theta{};A^4)", i + 1), frac(yt.clone()));
        rhs = &rhs + &frac(yt);
    }
    for (c, k) in cycles(d)? {
        let yk = a4(normalized_yamada(&k, cfg)?);
        terms.insert(format!("Y~(l{};A^4)", cycle_name(&c)), frac(yk.clone()));
        rhs = &rhs - &frac(yk);
    }
    Ok(VerificationReport::new(NAME, lhs, rhs, terms))
}

/// `J~(Omega) = V(L) + (1/phi) sum V(L_i) + (1/phi^2)(2 sum V(L_triangle) + sum V(L_square)) + 6/phi^3`.
///
/// `L_i` is the associated link of the theta subgraph `Theta_i`; a cycle's
/// link is its 2-parallel with the sum of the cycle's `n_i` half twists.
pub fn verify_links_corollary(
    d: &SpatialGraphDiagram,
    cfg: &StateSumConfig,
) -> Result<VerificationReport, RelationError> {
    const NAME: &str = "links";
    let pieces = k4_pieces(NAME, d)?;
    let mut terms = BTreeMap::new();
    let lhs = normalized_jaeger(d, cfg)?;
    terms.insert("J~(Omega)".into(), lhs.clone());
    let v = associated_link(d)?.jones(cfg)?;
    terms.insert("V(L)".into(), frac(v.clone()));
    let mut theta_sum = PhiFraction::zero();
    for (i, t) in thetas(d)?.iter().enumerate() {
        let vi = frac(associated_link(t)?.jones(cfg)?);
        terms.insert(format!("V(L{})", i + 1), vi.clone());
        theta_sum = &theta_sum + &vi;
    }
    let mut cycle_sum = PhiFraction::zero();
    for (c, k) in cycles(d)? {
        let n: i64 = c.iter().map(|&i| pieces.twist.params[i - 1]).sum();
        let twist = TwistData {
            w: vec![vec![k.writhe()]],
            params: vec![n],
            edges: vec![k.edges()[0].id.clone()],
            kind: GraphKind::Knot,
        };
        let vc = frac(twisted_double(&k, &twist)?.jones(cfg)?);
        terms.insert(format!("V(L{})", cycle_name(&c)), vc.clone());
        let weight = if c.len() == 3 { 2 } else { 1 };
        cycle_sum = &cycle_sum + &vc.scale_monomial(weight, 0);
    }
    let rhs = &(&(&frac(v) + &(&theta_sum * &over_phi(1))) + &(&cycle_sum * &over_phi(2)))
        + &over_phi(3).scale_monomial(6, 0);
    Ok(VerificationReport::new(NAME, lhs, rhs, terms))
}

/// `J~(D) = (-A^4)^(sum n) [<L> + (1/phi) sum <Theta_i^(2)> + (1/phi^2)(2 sum <t^(2)> + sum <q^(2)>) + 6/phi^3]`.
pub fn verify_bar_expansion(
    d: &SpatialGraphDiagram,
    cfg: &StateSumConfig,
) -> Result<VerificationReport, RelationError> {
    const NAME: &str = "bar";
    let pieces = k4_pieces(NAME, d)?;
    let mut terms = BTreeMap::new();
    let lhs = jaeger(d, cfg)?.mul_neg_a4_pow(pieces.twist.total());
    terms.insert("J~(Omega)".into(), lhs.clone());
    let l = bracket_of_double(d, cfg)?;
    terms.insert("<L>".into(), frac(l.clone()));
    let mut theta_sum = LaurentPoly::zero();
    for (i, t) in thetas(d)?.iter().enumerate() {
        let b = bracket_of_double(t, cfg)?;
        terms.insert(format!("<Theta{}^(2)>", i + 1), frac(b.clone()));
        theta_sum += b;
    }
    let mut cycle_sum = LaurentPoly::zero();
    for (c, k) in cycles(d)? {
        let b = bracket_of_double(&k, cfg)?;
        terms.insert(format!("<l{}^(2)>", cycle_name(&c)), frac(b.clone()));
        let weight = if c.len() == 3 { 2 } else { 1 };
        cycle_sum += b.scale_monomial(weight, 0);
    }
    let inner = &(&(&frac(l) + &(&frac(theta_sum) * &over_phi(1))) + &(&frac(cycle_sum) * &over_phi(2)))
        + &over_phi(3).scale_monomial(6, 0);
    let rhs = inner.mul_neg_a4_pow(pieces.twist.total());
    Ok(VerificationReport::new(NAME, lhs, rhs, terms))
}

/// Jones polynomial of `L(n1, ..., n6)` against the closed-form expansion in
/// brackets of the double, its six theta doubles and seven cycle doubles.
pub fn verify_k4_jones_formula(
    d: &SpatialGraphDiagram,
    cfg: &StateSumConfig,
) -> Result<VerificationReport, RelationError> {
    const NAME: &str = "jones-k4";
    let pieces = k4_pieces(NAME, d)?;
    let n = &pieces.twist.params;
    let mut terms = BTreeMap::new();
    let lhs = frac(associated_link(d)?.jones(cfg)?);
    terms.insert("V(L)".into(), lhs.clone());
    let qs = |set: &[usize]| q(set.iter().map(|&i| n[i - 1]).sum());
    let one = LaurentPoly::one();
    let l = bracket_of_double(d, cfg)?;
    terms.insert("<L>".into(), frac(l.clone()));
    let mut inner = frac(l);
    for (i, t) in thetas(d)?.iter().enumerate() {
        let b = bracket_of_double(t, cfg)?;
        terms.insert(format!("<Theta{}^(2)>", i + 1), frac(b.clone()));
        let coeff = &one - &qs(&[i + 1]);
        inner = &inner + &(&frac(&coeff * &b) * &over_phi(1));
    }
    for (c, k) in cycles(d)? {
        let b = bracket_of_double(&k, cfg)?;
        terms.insert(format!("<l{}^(2)>", cycle_name(&c)), frac(b.clone()));
        // the edges off the cycle
        let off: Vec<usize> = (1..=6).filter(|i| !c.contains(i)).collect();
        let base = if c.len() == 3 { 2 } else { 1 };
        let mut coeff = LaurentPoly::constant(base);
        for &i in &off {
            coeff -= qs(&[i]);
        }
        coeff += qs(&off);
        inner = &inner + &(&frac(&coeff * &b) * &over_phi(2));
    }
    let mut tail = LaurentPoly::constant(6);
    for i in 1..=6 {
        tail -= qs(&[i]).scale_monomial(2, 0);
    }
    for i in 1..=3 {
        tail += qs(&[i, i + 3]);
    }
    for tri in [[3, 4, 5], [2, 4, 6], [1, 5, 6], [1, 2, 3]] {
        tail += qs(&tri);
    }
    tail -= qs(&[1, 2, 3, 4, 5, 6]);
    inner = &inner + &(&frac(tail) * &over_phi(3));
    let rhs = inner.mul_neg_a4_pow(pieces.twist.total());
    Ok(VerificationReport::new(NAME, lhs, rhs, terms))
}

/// `J(K) = <K^(2)> + 1/phi` and `J~(K) - V(L_K) = 1/phi`, reported as two equations side by side.
pub fn verify_knot_normalization(
    k: &SpatialGraphDiagram,
    cfg: &StateSumConfig,
) -> Result<Vec<VerificationReport>, RelationError> {
    expect_kind("knot", k, GraphKind::Knot)?;
    let mut terms = BTreeMap::new();
    let j = jaeger(k, cfg)?;
    let b = bracket_of_double(k, cfg)?;
    terms.insert("J(K)".into(), j.clone());
    terms.insert("<K^(2)>".into(), frac(b.clone()));
    let first = VerificationReport::new("knot-double", j, &frac(b) + &over_phi(1), terms);
    let mut terms = BTreeMap::new();
    let jt = normalized_jaeger_knot(k, cfg)?;
    let v = associated_link(k)?.jones(cfg)?;
    terms.insert("J~(K)".into(), jt.clone());
    terms.insert("V(L_K)".into(), frac(v.clone()));
    let second = VerificationReport::new("knot-normalization", &jt - &frac(v), over_phi(1), terms);
    Ok(vec![first, second])
}

/// Names accepted by [`verify`] for K4 diagrams.
pub const K4_IDENTITIES: [&str; 5] = ["main", "yamada", "links", "bar", "jones-k4"];

/// Run one named identity, or every identity for the diagram's kind with `all`.
pub fn verify(
    d: &SpatialGraphDiagram,
    identity: &str,
    cfg: &StateSumConfig,
) -> Result<Vec<VerificationReport>, RelationError> {
    let one = |r: Result<VerificationReport, RelationError>| r.map(|r| vec![r]);
    match identity {
        "main" => one(verify_main_theorem(d, cfg)),
        "yamada" => one(verify_yamada_corollary(d, cfg)),
        "links" => one(verify_links_corollary(d, cfg)),
        "bar" => one(verify_bar_expansion(d, cfg)),
        "jones-k4" => one(verify_k4_jones_formula(d, cfg)),
        "theta" => {
            let mut v = vec![verify_theta_theorem(d, cfg)?];
            v.push(verify_theta_jones_formula(d, None, cfg)?);
            Ok(v)
        }
        "knot" => verify_knot_normalization(d, cfg),
        _ => match d.kind() {
            GraphKind::K4 => {
                let mut out = Vec::new();
                for name in K4_IDENTITIES {
                    out.extend(verify(d, name, cfg)?);
                }
                Ok(out)
            }
            GraphKind::Theta => verify(d, "theta", cfg),
            GraphKind::Knot => verify(d, "knot", cfg),
            found => Err(RelationError::WrongKind {
                identity: "all",
                expected: GraphKind::K4,
                found,
            }),
        },
    }
}
