//! Curated diagrams shipped with the library and the file loader.

use std::path::Path;

use thiserror::Error;

use crate::algebra::LaurentPoly;
use crate::diagram::{
    diagram_to_json, link_to_json, parse_diagram, Diagram, DiagramError, GraphKind, LinkDiagram, SpatialGraphDiagram,
};

struct Source {
    name: &'static str,
    note: &'static str,
    json: &'static str,
    yamada: Option<&'static str>,
}

macro_rules! source {
    ($name:literal, $note:literal, $yamada:expr) => {
        Source {
            name: $name,
            note: $note,
            json: include_str!(concat!("../../data/", $name, ".json")),
            yamada: $yamada,
        }
    };
}

const SOURCES: &[Source] = &[
    source!("omega1", "planar K4, no crossings", Some("A^3+2A+2A^-1+A^-3")),
    source!(
        "omega2",
        "K4, three crossings; knotted cycle a2 a3 a5 a6",
        Some("A^8+A^6+A^5-A^4+A^3-2A^2+A-1+A^-1+A^-2+A^-3+A^-4+A^-5")
    ),
    source!(
        "omega3",
        "K4, three crossings; knotted cycle a4 a5 a6",
        Some("2A^6+A^4+A^3-2A^2-4-A^-1-3A^-2-A^-3+A^-7")
    ),
    source!(
        "omega4",
        "K4, three crossings; knotted cycles a4 a5 a6 and a1 a3 a4 a6",
        Some("A^8-A^7+A^6-A^4+A^3-2A^2+A-2-A^-2-A^-3-A^-4-A^-6")
    ),
    source!(
        "omega5",
        "K4, three crossings; four knotted cycles",
        Some("A^8-A^7+A^6-A^5-A^4-2A^2+A-1+2A^-1+A^-2+2A^-3+A^-4+2A^-5+A^-7")
    ),
    source!(
        "omega6",
        "K4, four crossings; knotted cycles a1 a3 a4 a6 and a2 a3 a5 a6",
        Some("A^7-A^6+A^4+A^2+3A+3A^-1-A^-2+A^-3-A^-4-2A^-5+A^-6-A^-7+A^-9")
    ),
    source!(
        "omega7",
        "K4, four crossings; the cycle a2 a3 a5 a6 is a figure-eight knot",
        Some("-A^8-A^5+A^4+A^3+3A+3A^-1+A^-3+A^-4-A^-5-A^-8")
    ),
    source!(
        "omega8",
        "K4, four crossings; knotted cycle a1 a3 a5",
        Some("A^9-A^8+2A^6-A^5+A^4+2A^3-A^2+2A-2+A^-1-A^-2-A^-3+2A^-4+2A^-7")
    ),
    source!(
        "omega9",
        "K4, four crossings; knotted cycles a1 a3 a5 and a1 a2 a4 a5",
        Some("-A^8+A^7-A^5+2A^4+2A-1+2A^-1-A^-2+A^-3+A^-4-A^-5+A^-6+A^-7-A^-8+A^-9")
    ),
    source!(
        "omega10",
        "K4, four crossings; four knotted cycles",
        Some("A^9-A^8+A^7-A^5+A^4+2A+2A^-1+A^-4-A^-5+A^-7-A^-8+A^-9")
    ),
    source!("theta-planar", "planar theta curve", Some("-A^2-A-2-A^-1-A^-2")),
    source!(
        "theta-tilde",
        "theta curve, four crossings, all constituent knots trivial",
        Some("A^7-A^5-A^3-A^2-1-A^-2-A^-5-A^-8")
    ),
    source!("unknot", "round unknot as a graph with one 2-valent vertex", None),
    source!("unknot-kink", "unknot with one positive curl", None),
    source!("trefoil", "three-crossing trefoil", None),
    source!("figure-eight", "four-crossing figure-eight knot", None),
    source!("hopf", "oriented Hopf link, both crossings negative", None),
    source!("omega1-kink", "omega1 with a positive curl on a1", None),
];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("no catalog entry or file named {0:?}")]
    NotFound(String),
    #[error("{name}: {source}")]
    Diagram {
        name: String,
        #[source]
        source: DiagramError,
    },
    #[error("cannot write {path}: {reason}")]
    Write { path: String, reason: String },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub diagram: Diagram,
    pub note: String,
    /// Reference Yamada polynomial, when one is known.
    pub expected_yamada: Option<LaurentPoly>,
}

impl CatalogEntry {
    pub fn spatial(&self) -> Option<&SpatialGraphDiagram> {
        match &self.diagram {
            Diagram::Spatial(d) => Some(d),
            Diagram::Link(_) => None,
        }
    }

    pub fn link(&self) -> Option<&LinkDiagram> {
        match &self.diagram {
            Diagram::Link(l) => Some(l),
            Diagram::Spatial(_) => None,
        }
    }

    pub fn kind_label(&self) -> String {
        match &self.diagram {
            Diagram::Spatial(d) => d.kind().to_string(),
            Diagram::Link(l) => format!("{}-component link", l.component_count()),
        }
    }

    pub fn crossing_count(&self) -> usize {
        match &self.diagram {
            Diagram::Spatial(d) => d.crossing_count(),
            Diagram::Link(l) => l.crossing_count(),
        }
    }
}

/// Names of the embedded diagrams in catalog order.
pub fn list() -> Vec<&'static str> {
    SOURCES.iter().map(|s| s.name).collect()
}

/// Embedded entry by name.
pub fn entry(name: &str) -> Result<CatalogEntry, CatalogError> {
    let s = SOURCES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| CatalogError::NotFound(name.to_string()))?;
    let diagram = parse_diagram(s.json).map_err(|source| CatalogError::Diagram {
        name: name.to_string(),
        source,
    })?;
    Ok(CatalogEntry {
        name: s.name.to_string(),
        diagram,
        note: s.note.to_string(),
        expected_yamada: s
            .yamada
            .map(|y| LaurentPoly::parse(y).expect("catalog polynomial parses")),
    })
}

/// Embedded spatial graph diagram by name; panics on link entries.
pub fn spatial(name: &str) -> SpatialGraphDiagram {
    entry(name)
        .ok()
        .and_then(|e| e.spatial().cloned())
        .unwrap_or_else(|| panic!("{name} is not a spatial graph in the catalog"))
}

/// A catalog name, or else a path to a diagram file.
pub fn load(name_or_path: &str) -> Result<CatalogEntry, CatalogError> {
    if SOURCES.iter().any(|s| s.name == name_or_path) {
        return entry(name_or_path);
    }
    let path = Path::new(name_or_path);
    if !path.exists() {
        return Err(CatalogError::NotFound(name_or_path.to_string()));
    }
    let diagram = crate::diagram::load_diagram(path).map_err(|source| CatalogError::Diagram {
        name: name_or_path.to_string(),
        source,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| name_or_path.to_string());
    Ok(CatalogEntry {
        name,
        diagram,
        note: String::new(),
        expected_yamada: None,
    })
}

pub fn to_json(entry: &CatalogEntry) -> String {
    match &entry.diagram {
        Diagram::Spatial(d) => diagram_to_json(d),
        Diagram::Link(l) => link_to_json(l),
    }
}

pub fn save(entry: &CatalogEntry, path: &Path) -> Result<(), CatalogError> {
    std::fs::write(path, to_json(entry)).map_err(|e| CatalogError::Write {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

/// The ten K4 rows with their reference Yamada polynomials.
pub fn table1() -> Vec<(String, SpatialGraphDiagram, LaurentPoly)> {
    (1..=10)
        .map(|k| {
            let e = entry(&format!("omega{k}")).expect("embedded K4 diagram");
            let d = e.spatial().cloned().expect("K4 entry is a spatial graph");
            debug_assert_eq!(d.kind(), GraphKind::K4);
            (e.name, d, e.expected_yamada.expect("table row"))
        })
        .collect()
}
