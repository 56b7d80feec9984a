//! Acceptance checks, one line per criterion. Exit status is non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use spatial_core::algebra::{LaurentPoly, PhiFraction};
use spatial_core::catalog;
use spatial_core::diagram::{double, BandedLink, Diagram, LinkDiagram, Smoothing, SpatialGraphDiagram};
use spatial_core::invariants::{
    bracket_by_states, jaeger, kauffman_bracket, kauffman_bracket_skein, yamada, yamada_of_code, StateSumConfig,
};
use spatial_core::relations::{
    verify_bar_expansion, verify_k4_jones_formula, verify_knot_normalization, verify_links_corollary,
    verify_main_theorem, verify_theta_jones_formula, verify_theta_theorem, verify_yamada_corollary, VerificationReport,
};
use spatial_core::surfaces::{
    associated_link, crossing_matrix, f_coefficient, normalized_jaeger, normalized_yamada, twist_parameters,
};

type Check = Result<(), String>;

fn cfg() -> StateSumConfig {
    StateSumConfig::default()
}

fn poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).expect("reference polynomial parses")
}

fn expect<T: PartialEq + std::fmt::Display>(what: &str, got: &T, want: &T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn holds(r: &VerificationReport) -> Check {
    if r.equal {
        Ok(())
    } else {
        Err(format!("{} fails: lhs {} rhs {}", r.identity, r.lhs, r.rhs))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn spatial_entries() -> Vec<(&'static str, SpatialGraphDiagram)> {
    catalog::list()
        .into_iter()
        .filter_map(|n| catalog::entry(n).ok()?.spatial().cloned().map(|d| (n, d)))
        .collect()
}

fn reference_table() -> Check {
    for (name, d, expected) in catalog::table1() {
        let y = yamada(&d, &cfg()).map_err(err)?;
        match y.unit_equivalent(&expected) {
            None => return Err(format!("{name}: {y} is not a unit multiple of {expected}")),
            Some(k) if k != 0 && (name == "omega1" || name == "omega7") => {
                return Err(format!("{name}: off by (-A)^{k}"))
            }
            Some(_) => {}
        }
    }
    Ok(())
}

fn planar_k4_values() -> Check {
    let r = verify_main_theorem(&catalog::spatial("omega1"), &cfg()).map_err(err)?;
    expect("J~", &r.lhs, &PhiFraction::new(poly("-A^12-2A^4-2A^-4-A^-12"), 3))?;
    let v = r.terms["V(L)"].clone();
    expect("V(L)", &v, &PhiFraction::from(poly("-A^6-3A^2-3A^-2-A^-6")))?;
    expect(
        "J~ - V(L)",
        &(&r.lhs - &v),
        &PhiFraction::new(poly("6A^8+13A^4+20+13A^-4+6A^-8"), 3),
    )?;
    holds(&r)
}

fn figure_eight_k4_values() -> Check {
    let d = catalog::spatial("omega7");
    let w = crossing_matrix(&d);
    let pairs = [(2, 3, 1), (3, 5, 1), (2, 6, -1), (5, 6, -1)];
    for i in 0..6 {
        for j in 0..6 {
            let want = pairs
                .iter()
                .find(|&&(a, b, _)| (a, b) == (i + 1, j + 1) || (b, a) == (i + 1, j + 1))
                .map_or(0, |p| p.2);
            if w[i][j] != want {
                return Err(format!("w{}{} = {}, expected {want}", i + 1, j + 1, w[i][j]));
            }
        }
    }
    let t = twist_parameters(&d).map_err(err)?;
    if t.params != [-2, 0, 0, 2, 0, 0] {
        return Err(format!("twist parameters {:?}", t.params));
    }
    let cycle = d.k4_subgraph(&[2, 3, 5, 6]).map_err(err)?;
    expect(
        "<figure-eight 2-parallel>",
        &kauffman_bracket(&double(&cycle), &cfg()).map_err(err)?,
        &poly("-A^26+A^22-A^2-A^-2+A^-22-A^-26"),
    )?;
    let r = verify_main_theorem(&d, &cfg()).map_err(err)?;
    expect(
        "V(L)",
        &r.terms["V(L)"],
        &PhiFraction::from(poly(
            "A^30-2A^26+A^22+A^18-3A^14+3A^10-3A^6-2A^2-2A^-2-3A^-6+3A^-10-3A^-14+A^-18+A^-22-2A^-26+A^-30",
        )),
    )?;
    expect(
        "sum J~(Theta_i)",
        &r.terms["sum J~(Theta_i)"],
        &PhiFraction::new(
            poly("-A^36+A^28+A^24+A^20+A^16+A^12+5A^8+4A^4+10+4A^-4+5A^-8+A^-12+A^-16+A^-20+A^-24+A^-28-A^-36"),
            2,
        ),
    )?;
    expect(
        "sum J~(l_j)",
        &r.terms["sum J~(l_j)"],
        &PhiFraction::new(poly("-A^28+A^20-7A^4-7-7A^-4+A^-20-A^-28"), 1),
    )?;
    holds(&r)
}

fn bridge() -> Check {
    for (name, d) in spatial_entries() {
        let beta = (d.edges().len() + 1 - d.code().vertex_count()) as u32;
        let lhs = jaeger(&d, &cfg()).map_err(err)?.mul_phi_pow(beta);
        let y = yamada(&d, &cfg()).map_err(err)?.substitute_power(4).map_err(err)?;
        let rhs = PhiFraction::from(y.scale_monomial(-1, 0));
        if lhs != rhs {
            return Err(format!("{name}: phi^{beta} J = {lhs}, -Y(A^4) = {rhs}"));
        }
    }
    Ok(())
}

fn bracket_oracles() -> Check {
    let mut links: Vec<(String, LinkDiagram)> = Vec::new();
    for name in catalog::list() {
        match catalog::entry(name).map_err(err)?.diagram {
            Diagram::Link(l) => links.push((name.to_string(), l)),
            Diagram::Spatial(d) => {
                links.push((format!("{name} doubled"), double(&d)));
                if let Ok(a) = associated_link(&d) {
                    links.push((format!("{name} associated"), a.link));
                }
            }
        }
    }
    let mut checked = 0;
    for (name, l) in links.iter().filter(|(_, l)| l.crossing_count() <= 20) {
        let states = bracket_by_states(l, &cfg());
        let skein = kauffman_bracket_skein(l, &cfg()).map_err(err)?;
        if states != skein {
            return Err(format!("{name}: states {states}, skein {skein}"));
        }
        checked += 1;
    }
    if checked < 30 {
        return Err(format!("only {checked} link diagrams checked"));
    }
    Ok(())
}

fn yamada_skein() -> Check {
    for (name, d) in spatial_entries() {
        if d.crossing_count() > 4 {
            continue;
        }
        let y = yamada(&d, &cfg()).map_err(err)?;
        for c in d.code().crossings() {
            let part = |s| yamada_of_code(&d.code().smooth(c, s), &cfg());
            let rhs = &(&(&LaurentPoly::a() * &part(Smoothing::A).map_err(err)?)
                + &(&LaurentPoly::monomial(1, -1) * &part(Smoothing::B).map_err(err)?))
                + &part(Smoothing::Vertex).map_err(err)?;
            if rhs != y {
                return Err(format!("{name}, crossing {}: {y} vs {rhs}", d.code().node(c).id));
            }
        }
    }
    Ok(())
}

fn twist_identity() -> Check {
    let unknot = catalog::spatial("unknot");
    let omega7 = catalog::spatial("omega7");
    let cases = [(&unknot, unknot.edges()[0].id.clone()), (&omega7, "a1".to_string())];
    for (d, band) in cases {
        let base = BandedLink::new(d);
        let b0 = kauffman_bracket(&base.link(), &cfg()).map_err(err)?;
        let binf = kauffman_bracket(&base.clone().set_cut(&band, true).map_err(err)?.link(), &cfg()).map_err(err)?;
        for n in -3..=3 {
            let twisted = base.clone().insert_half_twists(&band, n).map_err(err)?;
            let bn = kauffman_bracket(&twisted.link(), &cfg()).map_err(err)?;
            let rhs = &b0.scale_monomial(1, n) + &(&f_coefficient(n) * &binf);
            if bn != rhs {
                return Err(format!("band {band}, n = {n}: {bn} vs {rhs}"));
            }
        }
    }
    Ok(())
}

fn knot_normalization() -> Check {
    for name in ["unknot", "trefoil", "figure-eight"] {
        for r in verify_knot_normalization(&catalog::spatial(name), &cfg()).map_err(err)? {
            holds(&r).map_err(|e| format!("{name}: {e}"))?;
        }
    }
    Ok(())
}

fn theta_identities() -> Check {
    for name in ["theta-planar", "theta-tilde"] {
        let d = catalog::spatial(name);
        holds(&verify_theta_theorem(&d, &cfg()).map_err(err)?)?;
        holds(&verify_theta_jones_formula(&d, None, &cfg()).map_err(err)?)?;
        holds(&verify_theta_jones_formula(&d, Some([1, 0, 0]), &cfg()).map_err(err)?)
            .map_err(|e| format!("{name} with m = (1,0,0): {e}"))?;
    }
    Ok(())
}

fn k4_identities() -> Check {
    for k in 1..=10 {
        let name = format!("omega{k}");
        let d = catalog::spatial(&name);
        let ctx = |e: String| format!("{name}: {e}");
        holds(&verify_main_theorem(&d, &cfg()).map_err(err)?).map_err(ctx)?;
        holds(&verify_yamada_corollary(&d, &cfg()).map_err(err)?).map_err(ctx)?;
        holds(&verify_links_corollary(&d, &cfg()).map_err(err)?).map_err(ctx)?;
        holds(&verify_bar_expansion(&d, &cfg()).map_err(err)?).map_err(ctx)?;
        holds(&verify_k4_jones_formula(&d, &cfg()).map_err(err)?).map_err(ctx)?;
        let a = associated_link(&d).map_err(err)?;
        let w = a.link.writhe().map_err(err)?;
        if w != -a.twist.total() {
            return Err(format!("{name}: writhe {w}, twist sum {}", a.twist.total()));
        }
    }
    Ok(())
}

fn unit_invariance() -> Check {
    let plain = catalog::spatial("omega1");
    let kinked = catalog::spatial("omega1-kink");
    let (y0, y1) = (
        yamada(&plain, &cfg()).map_err(err)?,
        yamada(&kinked, &cfg()).map_err(err)?,
    );
    if y0.unit_equivalent(&y1).is_none() {
        return Err(format!("Y: {y0} vs {y1}"));
    }
    let (j0, j1) = (
        jaeger(&plain, &cfg()).map_err(err)?,
        jaeger(&kinked, &cfg()).map_err(err)?,
    );
    if !(-16..=16).any(|k| j0.clone().mul_neg_a4_pow(k) == j1) {
        return Err(format!("J: {j0} vs {j1}"));
    }
    expect(
        "Y~",
        &normalized_yamada(&plain, &cfg()).map_err(err)?,
        &normalized_yamada(&kinked, &cfg()).map_err(err)?,
    )?;
    expect(
        "J~",
        &normalized_jaeger(&plain, &cfg()).map_err(err)?,
        &normalized_jaeger(&kinked, &cfg()).map_err(err)?,
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("Yamada table of the ten K4 diagrams", reference_table),
        ("planar K4: J~, V(L) and the main theorem", planar_k4_values),
        (
            "K4 with a figure-eight cycle: twists, brackets, sums, main theorem",
            figure_eight_k4_values,
        ),
        ("Jaeger-Yamada bridge on every catalog spatial graph", bridge),
        (
            "state-sum bracket equals skein bracket up to 20 crossings",
            bracket_oracles,
        ),
        ("Yamada skein relation at every crossing", yamada_skein),
        ("twist identity for n in -3..3", twist_identity),
        ("knot normalization", knot_normalization),
        ("theta theorem and theta Jones formula", theta_identities),
        ("all K4 identities and associated link writhes", k4_identities),
        ("unit invariance under a kink", unit_invariance),
    ];
    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {:>2} {label} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {label} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
