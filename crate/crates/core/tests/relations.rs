mod common;

use common::poly;
use spatial_core::algebra::{LaurentPoly, PhiFraction};
use spatial_core::catalog;
use spatial_core::diagram::GraphKind;
use spatial_core::invariants::StateSumConfig;
use spatial_core::relations::{
    verify, verify_bar_expansion, verify_k4_jones_formula, verify_knot_normalization, verify_links_corollary,
    verify_main_theorem, verify_theta_jones_formula, verify_theta_theorem, verify_yamada_corollary, RelationError,
    VerificationReport,
};

fn cfg() -> StateSumConfig {
    StateSumConfig::default()
}

fn term<'a>(r: &'a VerificationReport, key: &str) -> &'a PhiFraction {
    r.terms
        .get(key)
        .unwrap_or_else(|| panic!("{}: no term {key}", r.identity))
}

fn omegas() -> Vec<String> {
    (1..=10).map(|k| format!("omega{k}")).collect()
}

#[test]
fn every_k4_identity_holds_on_every_omega() {
    for name in omegas().iter().map(String::as_str).chain(["omega1-kink"]) {
        let d = catalog::spatial(name);
        for r in verify(&d, "all", &cfg()).unwrap() {
            assert!(r.equal, "{name}\n{}", r.render());
        }
    }
}

#[test]
fn theta_identities_hold() {
    for name in ["theta-planar", "theta-tilde"] {
        let d = catalog::spatial(name);
        assert!(verify_theta_theorem(&d, &cfg()).unwrap().equal, "{name}");
        assert!(verify_theta_jones_formula(&d, None, &cfg()).unwrap().equal, "{name}");
    }
}

#[test]
fn theta_jones_formula_holds_for_any_parity() {
    for name in ["theta-planar", "theta-tilde"] {
        let d = catalog::spatial(name);
        for m in [[1, 0, 0], [1, 1, 0], [0, -1, 3], [2, -3, 1]] {
            let r = verify_theta_jones_formula(&d, Some(m), &cfg()).unwrap();
            assert!(r.equal, "{name} {m:?}\n{}", r.render());
        }
    }
}

#[test]
fn theta_identities_on_omega7_subgraphs() {
    let d = catalog::spatial("omega7");
    for i in 1..=6 {
        let keep: Vec<usize> = (1..=6).filter(|&j| j != i).collect();
        let t = d.k4_subgraph(&keep).unwrap();
        assert!(verify_theta_theorem(&t, &cfg()).unwrap().equal, "theta {i}");
        assert!(verify_theta_jones_formula(&t, None, &cfg()).unwrap().equal, "theta {i}");
    }
}

#[test]
fn knot_normalization_holds() {
    for name in ["unknot", "unknot-kink", "trefoil", "figure-eight"] {
        let reports = verify_knot_normalization(&catalog::spatial(name), &cfg()).unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports.iter().all(|r| r.equal), "{name}");
    }
}

#[test]
fn omega1_main_theorem_values() {
    let r = verify_main_theorem(&catalog::spatial("omega1"), &cfg()).unwrap();
    assert!(r.equal);
    assert_eq!(r.lhs, PhiFraction::new(poly("-A^12-2A^4-2A^-4-A^-12"), 3));
    let v = term(&r, "V(L)");
    assert_eq!(v, &PhiFraction::from(poly("-A^6-3A^2-3A^-2-A^-6")));
    assert_eq!(&r.lhs - v, PhiFraction::new(poly("6A^8+13A^4+20+13A^-4+6A^-8"), 3));
    let theta = PhiFraction::new(poly("A^8+A^4+2+A^-4+A^-8"), 2);
    let knot = &PhiFraction::from(poly("-A^2-A^-2")) + &PhiFraction::inv_phi_pow(1);
    for i in 1..=6 {
        assert_eq!(term(&r, &format!("J~(Theta{i})")), &theta);
    }
    for c in ["126", "135", "234", "456", "1245", "1346", "2356"] {
        assert_eq!(term(&r, &format!("J~(l{c})")), &knot);
    }
}

#[test]
fn omega7_main_theorem_values() {
    let r = verify_main_theorem(&catalog::spatial("omega7"), &cfg()).unwrap();
    assert!(r.equal);
    // -Y(A^4)/phi^3 from the reference Yamada polynomial
    let y = poly("-A^8-A^5+A^4+A^3+3A+3A^-1+A^-3+A^-4-A^-5-A^-8");
    assert_eq!(
        r.lhs,
        PhiFraction::new(y.substitute_power(4).unwrap().scale_monomial(-1, 0), 3)
    );
    assert_eq!(
        term(&r, "sum J~(Theta_i)"),
        &PhiFraction::new(
            poly("-A^36+A^28+A^24+A^20+A^16+A^12+5A^8+4A^4+10+4A^-4+5A^-8+A^-12+A^-16+A^-20+A^-24+A^-28-A^-36"),
            2
        )
    );
    assert_eq!(
        term(&r, "sum J~(l_j)"),
        &PhiFraction::new(poly("-A^28+A^20-7A^4-7-7A^-4+A^-20-A^-28"), 1)
    );
    assert_eq!(
        term(&r, "J~(Theta1)"),
        &PhiFraction::new(poly("-A^36+A^28+A^20+A^16+A^8+1+A^-12+A^-24"), 2)
    );
    assert_eq!(
        term(&r, "J~(Theta4)"),
        &PhiFraction::new(poly("A^24+A^12+1+A^-8+A^-16+A^-20+A^-28-A^-36"), 2)
    );
    assert_eq!(
        term(&r, "J~(l2356)"),
        &(&PhiFraction::from(poly("-A^26+A^22-A^2-A^-2+A^-22-A^-26")) + &PhiFraction::inv_phi_pow(1))
    );
}

#[test]
fn yamada_corollary_is_the_main_theorem_rescaled() {
    let phi3 = PhiFraction::from(LaurentPoly::phi().pow(3));
    for name in omegas() {
        let d = catalog::spatial(&name);
        let main = verify_main_theorem(&d, &cfg()).unwrap();
        let yam = verify_yamada_corollary(&d, &cfg()).unwrap();
        let v = term(&main, "V(L)");
        // Y~(A^4) = -phi^3 J~, so the corollary's left side is -phi^3 (J~ - V)
        assert_eq!(yam.lhs, &phi3 * &(v - &main.lhs), "{name}");
        assert_eq!(
            term(&yam, "Y~(Omega;A^4)"),
            &(&phi3 * &main.lhs).scale_monomial(-1, 0),
            "{name}"
        );
    }
}

#[test]
fn links_corollary_degenerates_on_omega1() {
    let r = verify_links_corollary(&catalog::spatial("omega1"), &cfg()).unwrap();
    assert!(r.equal);
    let unlink3 = PhiFraction::from(poly("A^4+2+A^-4"));
    for i in 1..=6 {
        assert_eq!(term(&r, &format!("V(L{i})")), &unlink3);
    }
}

#[test]
fn bar_expansion_on_one_crossing_k4() {
    let r = verify_bar_expansion(&catalog::spatial("omega1-kink"), &cfg()).unwrap();
    assert!(r.equal, "{}", r.render());
    assert_eq!(r.terms.len(), 15);
}

#[test]
fn k4_jones_formula_on_omega7_has_the_printed_left_side() {
    let r = verify_k4_jones_formula(&catalog::spatial("omega7"), &cfg()).unwrap();
    assert!(r.equal);
    assert_eq!(
        r.lhs,
        PhiFraction::from(poly(
            "A^30-2A^26+A^22+A^18-3A^14+3A^10-3A^6-2A^2-2A^-2-3A^-6+3A^-10-3A^-14+A^-18+A^-22-2A^-26+A^-30"
        ))
    );
}

#[test]
fn wrong_kind_is_reported() {
    let theta = catalog::spatial("theta-planar");
    let k4 = catalog::spatial("omega1");
    let knot = catalog::spatial("trefoil");
    assert!(matches!(
        verify_main_theorem(&theta, &cfg()),
        Err(RelationError::WrongKind {
            expected: GraphKind::K4,
            found: GraphKind::Theta,
            ..
        })
    ));
    assert!(matches!(
        verify_theta_theorem(&k4, &cfg()),
        Err(RelationError::WrongKind { .. })
    ));
    assert!(matches!(
        verify_knot_normalization(&k4, &cfg()),
        Err(RelationError::WrongKind { .. })
    ));
    assert!(matches!(
        verify_bar_expansion(&knot, &cfg()),
        Err(RelationError::WrongKind { .. })
    ));
    assert!(matches!(
        verify(&theta, "yamada", &cfg()),
        Err(RelationError::WrongKind { .. })
    ));
}

#[test]
fn cap_errors_are_recognised() {
    let err = verify_main_theorem(&catalog::spatial("omega7"), &cfg().with_max_crossings(8)).unwrap_err();
    assert!(err.is_cap_exceeded(), "{err}");
}

#[test]
fn reports_are_deterministic_json() {
    let d = catalog::spatial("omega4");
    let a = verify_links_corollary(&d, &cfg()).unwrap().to_json();
    let b = verify_links_corollary(&d, &cfg()).unwrap().to_json();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let keys: Vec<&String> = a.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["equal", "identity", "lhs", "rhs", "terms"]);
    assert_eq!(a["identity"], "links");
    assert_eq!(a["equal"], true);
    let lhs = PhiFraction::from_json(&a["lhs"]).unwrap();
    assert_eq!(lhs, PhiFraction::from_json(&a["rhs"]).unwrap());
}

#[test]
fn mirrored_diagrams_satisfy_the_identities() {
    for name in ["omega3", "omega7"] {
        let d = catalog::spatial(name).mirror();
        for r in verify(&d, "all", &cfg()).unwrap() {
            assert!(r.equal, "mirror of {name}: {}", r.identity);
        }
    }
}
