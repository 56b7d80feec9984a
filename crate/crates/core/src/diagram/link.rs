use super::code::{NodeKind, PlanarCode, Port};
use super::DiagramError;

/// A link diagram: crossings only, plus crossingless circles.
///
/// When oriented, `orientation[i]` is true if arc `i` runs from its first
/// listed end to its second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    code: PlanarCode,
    orientation: Option<Vec<bool>>,
}

impl LinkDiagram {
    pub fn new(code: PlanarCode, orientation: Option<Vec<bool>>) -> Result<Self, DiagramError> {
        let mut violations = Vec::new();
        for n in code.nodes() {
            if n.kind == NodeKind::Vertex {
                violations.push(format!("node {:?}: a link diagram has no graph vertices", n.id));
            }
        }
        if let Some(o) = &orientation {
            if o.len() != code.arcs().len() {
                violations.push(format!(
                    "orientation covers {} arcs, diagram has {}",
                    o.len(),
                    code.arcs().len()
                ));
            } else {
                violations.extend(orientation_violations(&code, o));
            }
        }
        if !violations.is_empty() {
            return Err(DiagramError::Invalid(violations));
        }
        Ok(Self { code, orientation })
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> Self {
        let code = PlanarCode::new(Vec::new(), Vec::new(), k).expect("empty code is valid");
        Self {
            code,
            orientation: Some(Vec::new()),
        }
    }

    pub fn code(&self) -> &PlanarCode {
        &self.code
    }

    pub fn orientation(&self) -> Option<&[bool]> {
        self.orientation.as_deref()
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    pub fn crossing_count(&self) -> usize {
        self.code.nodes().len()
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.code.closed_strands().len() + self.code.free_loops()
    }

    /// Orient every component along its traversal from the first listed end of its first arc.
    pub fn with_default_orientation(&self) -> LinkDiagram {
        let mut o = vec![true; self.code.arcs().len()];
        for strand in self.code.closed_strands() {
            for (a, from) in strand {
                o[a] = from == 0;
            }
        }
        Self {
            code: self.code.clone(),
            orientation: Some(o),
        }
    }

    pub fn without_orientation(&self) -> LinkDiagram {
        Self {
            code: self.code.clone(),
            orientation: None,
        }
    }

    /// Is the port an incoming end under the orientation?
    fn incoming(&self, o: &[bool], p: Port) -> bool {
        let (a, end) = self.code.arc_at(p);
        // arc runs end0 -> end1 when o[a]
        (end == 1) == o[a]
    }

    /// Sign of crossing `c` (node index): +1 or -1.
    pub fn crossing_sign(&self, c: usize) -> Result<i32, DiagramError> {
        let o = self.orientation.as_ref().ok_or(DiagramError::Unoriented)?;
        let under = if self.incoming(o, Port::new(c, 0)) { 1 } else { -1 };
        let over = if self.incoming(o, Port::new(c, 1)) { 1 } else { -1 };
        Ok(-under * over)
    }

    pub fn writhe(&self) -> Result<i64, DiagramError> {
        let mut w = 0i64;
        for c in 0..self.code.nodes().len() {
            w += self.crossing_sign(c)? as i64;
        }
        Ok(w)
    }

    /// Over/under swapped at every crossing; the orientation is kept.
    pub fn mirror(&self) -> LinkDiagram {
        Self {
            code: self.code.mirror(),
            orientation: self.orientation.clone(),
        }
    }

    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let code = self.code.disjoint_union(&other.code, "'");
        let orientation = match (&self.orientation, &other.orientation) {
            (Some(a), Some(b)) => Some(a.iter().chain(b.iter()).copied().collect()),
            _ => None,
        };
        Self { code, orientation }
    }
}

fn orientation_violations(code: &PlanarCode, o: &[bool]) -> Vec<String> {
    let mut out = Vec::new();
    let incoming = |p: Port| {
        let (a, end) = code.arc_at(p);
        (end == 1) == o[a]
    };
    for c in 0..code.nodes().len() {
        for s in 0..2 {
            let a = incoming(Port::new(c, s));
            let b = incoming(Port::new(c, s + 2));
            if a == b {
                out.push(format!(
                    "crossing {:?}: slots {} and {} are both {}",
                    code.node(c).id,
                    s,
                    s + 2,
                    if a { "incoming" } else { "outgoing" }
                ));
            }
        }
    }
    out
}
