mod common;

use common::poly;
use spatial_core::algebra::{LaurentPoly, PhiFraction};
use spatial_core::catalog;
use spatial_core::diagram::{double, BandedLink, GraphKind, SpatialGraphDiagram};
use spatial_core::invariants::{jaeger, kauffman_bracket, yamada, StateSumConfig};
use spatial_core::surfaces::{
    associated_link, crossing_matrix, cycle_writhes, f_coefficient, normalized_jaeger, normalized_jaeger_knot,
    normalized_yamada, params_from_matrix, twist_parameters, SurfaceError,
};

fn cfg() -> StateSumConfig {
    StateSumConfig::default()
}

fn spatial_entries() -> Vec<(&'static str, SpatialGraphDiagram)> {
    catalog::list()
        .into_iter()
        .filter_map(|n| catalog::entry(n).unwrap().spatial().cloned().map(|d| (n, d)))
        .collect()
}

#[test]
fn omega7_crossing_matrix_and_parameters() {
    let d = catalog::spatial("omega7");
    let w = crossing_matrix(&d);
    let mut expected = vec![vec![0i64; 6]; 6];
    for (i, j, v) in [(2, 3, 1), (3, 5, 1), (2, 6, -1), (5, 6, -1)] {
        expected[i - 1][j - 1] = v;
        expected[j - 1][i - 1] = v;
    }
    assert_eq!(w, expected);
    let t = twist_parameters(&d).unwrap();
    assert_eq!(t.params, [-2, 0, 0, 2, 0, 0]);
    assert_eq!(t.edges, ["a1", "a2", "a3", "a4", "a5", "a6"]);
}

#[test]
fn parameters_of_small_diagrams() {
    let p = |n: &str| twist_parameters(&catalog::spatial(n)).unwrap().params;
    assert_eq!(p("omega1"), [0; 6]);
    assert_eq!(p("theta-planar"), [0, 0, 0]);
    assert_eq!(p("unknot"), [0]);
    assert_eq!(p("unknot-kink"), [-2]);
    assert_eq!(p("trefoil"), [-6]);
    assert_eq!(p("figure-eight"), [0]);
}

#[test]
fn k4_formulas_are_linear_in_the_matrix() {
    let mut w = vec![vec![0i64; 6]; 6];
    w[0][0] = 1;
    let single = params_from_matrix(GraphKind::K4, &w);
    let mut w2 = w.clone();
    w2[0][0] = 2;
    let double = params_from_matrix(GraphKind::K4, &w2);
    let twice: Vec<i64> = single.iter().map(|x| 2 * x).collect();
    assert_eq!(double, twice);
    assert_eq!(params_from_matrix(GraphKind::Knot, &[vec![3]]), [-6]);
}

#[test]
fn parameters_are_odd_under_mirroring() {
    for (name, d) in spatial_entries() {
        let t = twist_parameters(&d).unwrap();
        let m = twist_parameters(&d.mirror()).unwrap();
        let neg: Vec<i64> = t.params.iter().map(|x| -x).collect();
        assert_eq!(m.params, neg, "{name}");
    }
}

#[test]
fn associated_link_writhe_is_minus_parameter_sum() {
    for (name, d) in spatial_entries() {
        let a = associated_link(&d).unwrap();
        assert!(a.antiparallel, "{name}");
        assert_eq!(a.writhe(), -a.twist.total(), "{name}");
        assert_eq!(a.link.writhe().unwrap(), -a.twist.total(), "{name}");
    }
}

#[test]
fn cycle_writhes_match_parameters_on_every_omega() {
    for k in 1..=10 {
        let d = catalog::spatial(&format!("omega{k}"));
        for c in cycle_writhes(&d).unwrap() {
            assert!(
                c.holds(),
                "omega{k} cycle {:?}: 2w = {}, sum = {}",
                c.cycle,
                2 * c.writhe,
                c.twist_sum
            );
        }
    }
    let d = catalog::spatial("omega7");
    let c = &cycle_writhes(&d).unwrap()[0];
    assert_eq!(c.cycle, [1, 2, 6]);
    assert_eq!(2 * c.writhe, 2);
    assert!(matches!(
        cycle_writhes(&catalog::spatial("theta-tilde")),
        Err(SurfaceError::Unsupported(GraphKind::Theta))
    ));
}

#[test]
fn f_coefficients() {
    assert_eq!(f_coefficient(0), LaurentPoly::zero());
    assert_eq!(f_coefficient(1), poly("A^-1"));
    assert_eq!(f_coefficient(2), poly("1-A^-4"));
    for n in -8..=8 {
        // f_n (1 + A^-4) = A^(n-2) (1 - (-A^-4)^n)
        let lhs = &f_coefficient(n) * &poly("1+A^-4");
        let rhs = (&LaurentPoly::one() - &LaurentPoly::neg_a4_pow(-n)).scale_monomial(1, n - 2);
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

/// `<b_n> = A^n <b_0> + f_n <b_inf>` for the band `band` of `d`.
fn check_twist_identity(d: &SpatialGraphDiagram, band: &str) {
    let base = BandedLink::new(d);
    let b0 = kauffman_bracket(&base.link(), &cfg()).unwrap();
    let binf = kauffman_bracket(&base.clone().set_cut(band, true).unwrap().link(), &cfg()).unwrap();
    for n in -3..=3 {
        let bn = kauffman_bracket(&base.clone().insert_half_twists(band, n).unwrap().link(), &cfg()).unwrap();
        let rhs = &b0.scale_monomial(1, n) + &(&f_coefficient(n) * &binf);
        assert_eq!(bn, rhs, "band {band}, n = {n}");
    }
}

#[test]
fn twist_identity_on_doubled_unknot() {
    let d = catalog::spatial("unknot");
    let band = d.edges()[0].id.clone();
    check_twist_identity(&d, &band);
}

#[test]
fn twist_identity_on_omega7_bands() {
    let d = catalog::spatial("omega7");
    for band in ["a1", "a4", "a6"] {
        check_twist_identity(&d, band);
    }
}

#[test]
fn twist_identity_on_theta_tilde() {
    let d = catalog::spatial("theta-tilde");
    let band = d.edges()[2].id.clone();
    check_twist_identity(&d, &band);
}

#[test]
fn normalized_values_of_small_diagrams() {
    let phi1 = PhiFraction::inv_phi_pow(1);
    assert_eq!(
        normalized_jaeger(&catalog::spatial("omega1"), &cfg()).unwrap(),
        PhiFraction::new(poly("-A^12-2A^4-2A^-4-A^-12"), 3)
    );
    assert_eq!(
        normalized_jaeger_knot(&catalog::spatial("unknot"), &cfg()).unwrap(),
        &PhiFraction::from(poly("-A^2-A^-2")) + &phi1
    );
    assert_eq!(
        normalized_jaeger_knot(&catalog::spatial("figure-eight"), &cfg()).unwrap(),
        &PhiFraction::from(poly("-A^26+A^22-A^2-A^-2+A^-22-A^-26")) + &phi1
    );
    // a knot's normalized Jaeger polynomial equals the general normalization
    for name in ["unknot", "unknot-kink", "trefoil", "figure-eight"] {
        let k = catalog::spatial(name);
        assert_eq!(
            normalized_jaeger(&k, &cfg()).unwrap(),
            normalized_jaeger_knot(&k, &cfg()).unwrap(),
            "{name}"
        );
    }
    assert!(normalized_jaeger_knot(&catalog::spatial("omega1"), &cfg()).is_err());
}

#[test]
fn normalized_knot_invariants_ignore_kinks() {
    let u = normalized_jaeger_knot(&catalog::spatial("unknot"), &cfg()).unwrap();
    let k = normalized_jaeger_knot(&catalog::spatial("unknot-kink"), &cfg()).unwrap();
    assert_eq!(u, k);
}

#[test]
fn figure_eight_double_bracket() {
    let f = catalog::spatial("figure-eight");
    assert_eq!(
        kauffman_bracket(&double(&f), &cfg()).unwrap(),
        poly("-A^26+A^22-A^2-A^-2+A^-22-A^-26")
    );
    let d = catalog::spatial("omega7").k4_subgraph(&[2, 3, 5, 6]).unwrap();
    assert_eq!(
        kauffman_bracket(&double(&d), &cfg()).unwrap(),
        poly("-A^26+A^22-A^2-A^-2+A^-22-A^-26")
    );
}

#[test]
fn associated_link_jones_values() {
    let v1 = associated_link(&catalog::spatial("omega1"))
        .unwrap()
        .jones(&cfg())
        .unwrap();
    assert_eq!(v1, poly("-A^6-3A^2-3A^-2-A^-6"));
    let a7 = associated_link(&catalog::spatial("omega7")).unwrap();
    assert_eq!(a7.link.crossing_count(), 20);
    assert_eq!(a7.writhe(), 0);
    assert_eq!(
        a7.jones(&cfg()).unwrap(),
        poly("A^30-2A^26+A^22+A^18-3A^14+3A^10-3A^6-2A^2-2A^-2-3A^-6+3A^-10-3A^-14+A^-18+A^-22-2A^-26+A^-30")
    );
}

#[test]
fn unit_invariance_under_a_kink() {
    let plain = catalog::spatial("omega1");
    let kinked = catalog::spatial("omega1-kink");
    assert_eq!(kinked.crossing_count(), 1);
    let y0 = yamada(&plain, &cfg()).unwrap();
    let y1 = yamada(&kinked, &cfg()).unwrap();
    assert!(y0.unit_equivalent(&y1).is_some());
    let j0 = jaeger(&plain, &cfg()).unwrap();
    let j1 = jaeger(&kinked, &cfg()).unwrap();
    assert!((-8..=8).any(|k| j1.clone().mul_neg_a4_pow(k) == j0));
    assert_eq!(
        normalized_yamada(&plain, &cfg()).unwrap(),
        normalized_yamada(&kinked, &cfg()).unwrap()
    );
    assert_eq!(
        normalized_jaeger(&plain, &cfg()).unwrap(),
        normalized_jaeger(&kinked, &cfg()).unwrap()
    );
}
