mod common;

use common::braid_closure;
use proptest::prelude::*;
use spatial_core::catalog;
use spatial_core::diagram::{
    bar_diagram, diagram_to_json, double, link_to_json, parse_diagram, resolve_state, BandedLink, Diagram,
    DiagramError, GraphKind, Smoothing,
};
use spatial_core::surfaces::associated_link;

fn braid_word() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..5).prop_flat_map(|s| {
        let gen = (1..s as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        (Just(s), prop::collection::vec(gen, 0..9))
    })
}

#[test]
fn catalog_diagrams_are_planar() {
    for name in catalog::list() {
        let e = catalog::entry(name).unwrap();
        let code = match &e.diagram {
            Diagram::Spatial(d) => d.code().clone(),
            Diagram::Link(l) => l.code().clone(),
        };
        assert!(code.is_planar(), "{name}");
    }
}

#[test]
fn catalog_kinds() {
    for k in 1..=10 {
        assert_eq!(catalog::spatial(&format!("omega{k}")).kind(), GraphKind::K4);
    }
    assert_eq!(catalog::spatial("theta-planar").kind(), GraphKind::Theta);
    assert_eq!(catalog::spatial("theta-tilde").kind(), GraphKind::Theta);
    for k in ["unknot", "unknot-kink", "trefoil", "figure-eight"] {
        assert_eq!(catalog::spatial(k).kind(), GraphKind::Knot);
    }
}

#[test]
fn json_round_trip_for_every_entry() {
    for name in catalog::list() {
        let e = catalog::entry(name).unwrap();
        let text = catalog::to_json(&e);
        let back = parse_diagram(&text).unwrap();
        assert_eq!(back, e.diagram, "{name}");
        assert_eq!(
            catalog::to_json(&catalog::CatalogEntry {
                diagram: back,
                ..e.clone()
            }),
            text
        );
    }
}

#[test]
fn doubled_diagrams_round_trip() {
    let l = double(&catalog::spatial("omega7"));
    let text = link_to_json(&l);
    let Diagram::Link(back) = parse_diagram(&text).unwrap() else {
        panic!("not a link")
    };
    assert_eq!(link_to_json(&back), text);
    assert_eq!(back.writhe().unwrap(), l.writhe().unwrap());
    assert_eq!(back.crossing_count(), 16);
}

#[test]
fn loader_reports_line_of_syntax_error() {
    let text = "{\n  \"nodes\": [\n    {\"id\": \"v\", \"kind\": \"vertex\", \"slots\": 2},\n    oops\n  ],\n  \"arcs\": []\n}\n";
    match parse_diagram(text) {
        Err(DiagramError::Load(msgs)) => assert!(msgs.iter().any(|m| m.starts_with("line 4")), "{msgs:?}"),
        other => panic!("expected a load error, got {other:?}"),
    }
}

#[test]
fn loader_reports_line_of_bad_slot() {
    let text = r#"{
  "nodes": [
    {"id": "v", "kind": "vertex", "slots": 2}
  ],
  "arcs": [
    [["v", 0], ["v", 1]],
    [["v", 1], ["w", 0]]
  ],
  "edges": {"e": {"tail": "v", "head": "v", "arcs": [0]}}
}"#;
    match parse_diagram(text) {
        Err(DiagramError::Load(msgs)) | Err(DiagramError::Invalid(msgs)) => {
            assert!(msgs.iter().any(|m| m.contains("line 7")), "{msgs:?}")
        }
        other => panic!("expected an error, got {other:?}"),
    }
}

#[test]
fn crossing_with_three_slots_is_rejected() {
    let text = r#"{"nodes": [{"id": "c", "kind": "crossing", "slots": 3}], "arcs": [[["c", 0], ["c", 1]]]}"#;
    assert!(parse_diagram(text).is_err());
}

#[test]
fn unknown_field_is_rejected() {
    let text = r#"{"nodes": [], "arcs": [], "colour": 1}"#;
    assert!(parse_diagram(text).is_err());
}

#[test]
fn double_counts() {
    for name in catalog::list() {
        let Some(d) = catalog::entry(name).unwrap().spatial().cloned() else {
            continue;
        };
        let l = double(&d);
        assert_eq!(l.crossing_count(), 4 * d.crossing_count(), "{name}");
        let l = associated_link(&d).unwrap().link;
        let expected = match d.kind() {
            GraphKind::Knot => 2,
            GraphKind::Theta => 3,
            GraphKind::K4 => 4,
            GraphKind::Other => unreachable!(),
        };
        assert_eq!(l.component_count(), expected, "{name}");
    }
}

#[test]
fn untwisted_double_has_writhe_zero() {
    // the four crossings over each original crossing cancel in pairs
    for name in ["trefoil", "figure-eight", "theta-tilde", "omega7"] {
        let b = BandedLink::new(&catalog::spatial(name)).draw();
        assert!(b.antiparallel, "{name}");
        assert_eq!(b.link.writhe().unwrap(), 0, "{name}");
    }
}

#[test]
fn twists_add_crossings() {
    let d = catalog::spatial("theta-planar");
    let id = d.edges()[0].id.clone();
    for n in -3i64..=3 {
        let l = BandedLink::new(&d).insert_half_twists(&id, n).unwrap().link();
        assert_eq!(l.crossing_count() as i64, n.abs());
    }
    assert!(BandedLink::new(&d).insert_half_twists("nope", 1).is_err());
}

#[test]
fn bar_diagram_has_one_bar_per_edge() {
    let d = catalog::spatial("omega7");
    let b = bar_diagram(&d);
    assert_eq!(b.bars.len(), 6);
    assert!(b.bars.values().all(|&k| k == 1));
}

#[test]
fn delete_edges_keeps_crossings_between_kept_edges() {
    let d = catalog::spatial("omega7");
    let all: Vec<&str> = d.edges().iter().map(|e| e.id.as_str()).collect();
    let same = d.delete_edges(&all).unwrap();
    assert_eq!(same.crossing_count(), d.crossing_count());
    assert_eq!(same.writhe(), d.writhe());
    // the figure-eight cycle a2 a3 a5 a6 carries every crossing of omega7
    let k = d.k4_subgraph(&[2, 3, 5, 6]).unwrap();
    assert_eq!(k.kind(), GraphKind::Knot);
    assert_eq!(k.crossing_count(), 4);
    assert_eq!(k.writhe(), 0);
}

#[test]
fn theta_subgraphs_of_omega7() {
    let d = catalog::spatial("omega7");
    for i in 1..=6 {
        let keep: Vec<usize> = (1..=6).filter(|&j| j != i).collect();
        let t = d.k4_subgraph(&keep).unwrap().theta_normalized().unwrap();
        assert_eq!(t.kind(), GraphKind::Theta);
        let ids: Vec<&str> = t.edges().iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids, ["e1", "e2", "e3"]);
        let tail = t.edges()[0].tail;
        assert!(t.edges().iter().all(|e| e.tail == tail));
    }
}

#[test]
fn mirror_negates_writhe() {
    for name in catalog::list() {
        let Some(d) = catalog::entry(name).unwrap().spatial().cloned() else {
            continue;
        };
        assert_eq!(d.mirror().writhe(), -d.writhe(), "{name}");
        assert_eq!(d.mirror().mirror().writhe(), d.writhe(), "{name}");
        // slot labels rotate by one quarter per mirror
        assert_eq!(d.mirror().mirror().mirror().mirror(), d, "{name}");
    }
}

#[test]
fn serialized_diagram_is_stable() {
    let d = catalog::spatial("omega4");
    assert_eq!(diagram_to_json(&d), diagram_to_json(&d.clone()));
}

#[test]
fn braid_closures_of_known_links() {
    assert_eq!(braid_closure(2, &[1, 1]).component_count(), 2);
    assert_eq!(braid_closure(2, &[1, 1, 1]).component_count(), 1);
    assert_eq!(braid_closure(3, &[]).component_count(), 3);
    assert_eq!(braid_closure(2, &[1, 1, 1]).writhe().unwrap(), 3);
    assert_eq!(braid_closure(3, &[1, -2, 1, -2]).writhe().unwrap(), 0);
}

proptest! {
    #[test]
    fn braid_writhe_is_exponent_sum((s, word) in braid_word()) {
        let l = braid_closure(s, &word);
        let sum: i64 = word.iter().map(|g| g.signum() as i64).sum();
        prop_assert_eq!(l.writhe().unwrap(), sum);
        prop_assert_eq!(l.mirror().writhe().unwrap(), -sum);
        prop_assert!(l.code().is_planar());
    }

    #[test]
    fn state_graph_betti_number_is_nonnegative((s, word) in braid_word(), seed in any::<u64>()) {
        let l = braid_closure(s, &word);
        let n = l.crossing_count();
        let state: Vec<Smoothing> = (0..n)
            .map(|i| match (seed >> (2 * (i % 32))) % 3 {
                0 => Smoothing::A,
                1 => Smoothing::B,
                _ => Smoothing::Vertex,
            })
            .collect();
        let g = resolve_state(l.code(), &state);
        prop_assert!(g.edges.len() + g.components() >= g.vertex_count);
        let _ = g.beta();
    }

    #[test]
    fn all_a_state_circles_match_traversal((s, word) in braid_word()) {
        let l = braid_closure(s, &word);
        let n = l.crossing_count();
        let mut code = l.code().clone();
        for _ in 0..n {
            code = code.smooth(0, Smoothing::A);
        }
        let g = resolve_state(l.code(), &vec![Smoothing::A; n]);
        prop_assert!(g.edges.is_empty());
        prop_assert_eq!(g.free_circles, code.free_loops());
    }

    #[test]
    fn component_count_matches_braid_permutation((s, word) in braid_word()) {
        let mut perm: Vec<usize> = (0..s).collect();
        for g in &word {
            let i = g.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; s];
        let mut cycles = 0;
        for i in 0..s {
            if !seen[i] {
                cycles += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        prop_assert_eq!(braid_closure(s, &word).component_count(), cycles);
    }
}
