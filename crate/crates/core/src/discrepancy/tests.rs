use super::*;
use crate::fixtures::fixture;
use crate::groebner::GroebnerEngine;
use crate::ideal::Ideal;
use crate::poly::PolyRing;
use crate::rational::{int, rat};
use crate::rideal::RIdeal;
use crate::sampling::SamplingConfig;
use crate::session::{parse_ideal, parse_poly, Session};

fn load(name: &str) -> (Session, Variety) {
    let f = fixture(name).unwrap();
    (f.session().unwrap(), f.variety().unwrap())
}

fn engine() -> GroebnerEngine {
    GroebnerEngine::default()
}

#[test]
fn validate_cone_chart() {
    let (s, x) = load("quadric-cone");
    let v = validate_chart(
        s.chart("E1").unwrap(),
        x.ideal(),
        &SamplingConfig::default(),
    )
    .unwrap();
    assert!(v.on_variety && v.immersive);
    assert_eq!(v.assumption, CHART_FORMS_ASSUMPTION);
}

#[test]
fn validate_rejects_rank_deficient_chart() {
    let (s, x) = load("quadric-cone");
    let chart =
        DivisorChart::new("D", s.ring(), parse_maps(2, &["y1", "y1", "y1"]), 0, true).unwrap();
    let err = validate_chart(&chart, x.ideal(), &SamplingConfig::default()).unwrap_err();
    assert!(matches!(err, Error::ChartNotImmersive(_)));
}

#[test]
fn validate_rejects_chart_off_variety() {
    let (s, x) = load("quadric-cone");
    let chart =
        DivisorChart::new("D", s.ring(), parse_maps(2, &["y1", "y2", "y1"]), 0, true).unwrap();
    let err = validate_chart(&chart, x.ideal(), &SamplingConfig::default()).unwrap_err();
    assert!(matches!(err, Error::ChartNotOnVariety(_)));
}

#[test]
fn validate_identity_chart_on_zero_ideal() {
    let (s, x) = load("plane");
    assert!(validate_chart(
        s.chart("Lx").unwrap(),
        x.ideal(),
        &SamplingConfig::default()
    )
    .is_ok());
}

fn parse_maps(dim: usize, texts: &[&str]) -> Vec<Poly> {
    let ring = PolyRing::chart_ring(dim).unwrap();
    texts
        .iter()
        .map(|t| parse_poly(&ring, t).unwrap())
        .collect()
}

#[test]
fn ideal_orders() {
    let (s, x) = load("quadric-cone");
    let e1 = s.chart("E1").unwrap();
    assert_eq!(ideal_order_along_chart(x.jacobian(), e1).unwrap(), Some(1));
    assert_eq!(
        ideal_order_along_chart(&Ideal::unit(s.ring()), e1).unwrap(),
        Some(0)
    );
    assert_eq!(ideal_order_along_chart(x.ideal(), e1).unwrap(), None);

    let (p, _) = load("plane");
    let b = p.chart("B").unwrap();
    assert_eq!(
        ideal_order_along_chart(p.ideal("M").unwrap(), b).unwrap(),
        Some(1)
    );
    assert_eq!(
        ideal_order_along_chart(p.ideal("C").unwrap(), p.chart("W32").unwrap()).unwrap(),
        Some(6)
    );
    let redundant = parse_ideal(p.ring(), "x, y, x*y + 3*x^2").unwrap();
    assert_eq!(ideal_order_along_chart(&redundant, b).unwrap(), Some(1));
}

#[test]
fn mather_discrepancies() {
    let (p, _) = load("plane");
    assert_eq!(mather_discrepancy(p.chart("B").unwrap(), 2).unwrap(), 1);
    assert_eq!(mather_discrepancy(p.chart("W32").unwrap(), 2).unwrap(), 4);
    let (s, _) = load("space");
    assert_eq!(mather_discrepancy(s.chart("B").unwrap(), 3).unwrap(), 2);
    let (c, _) = load("quadric-cone");
    assert_eq!(mather_discrepancy(c.chart("E1").unwrap(), 2).unwrap(), 1);
    let mono = DivisorChart::monomial("w", s.ring(), &[2, 3, 1]).unwrap();
    assert_eq!(mather_discrepancy(&mono, 3).unwrap(), 5);
    assert!(matches!(
        mather_discrepancy(&mono, 2),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn degenerate_chart() {
    let (p, _) = load("plane");
    let chart = DivisorChart::new("D", p.ring(), parse_maps(2, &["y1", "y1"]), 0, true).unwrap();
    assert_eq!(mather_discrepancy(&chart, 2), Err(Error::DegenerateChart));
}

#[test]
fn jacobian_discrepancies() {
    let (c, x) = load("quadric-cone");
    let r = jacobian_discrepancy(c.chart("E1").unwrap(), &x).unwrap();
    assert_eq!((r.km, r.ord_jx, r.kj), (1, 1, 0));
    let (s, x) = load("space");
    let r = jacobian_discrepancy(s.chart("B").unwrap(), &x).unwrap();
    assert_eq!((r.km, r.kj), (2, 2));
    let (k, x) = load("cusp");
    let r = jacobian_discrepancy(k.chart("N").unwrap(), &x).unwrap();
    assert_eq!((r.km, r.ord_jx, r.kj), (1, 3, -2));
}

#[test]
fn chart_inside_singular_locus() {
    let (u, x) = load("whitney-umbrella");
    // y = x = 0 is the singular line.
    let chart = DivisorChart::new(
        "L",
        u.ring(),
        parse_maps(2, &["0", "0", "y1 + y2"]),
        0,
        false,
    )
    .unwrap();
    assert!(matches!(
        jacobian_discrepancy(&chart, &x),
        Err(Error::MapsIntoSingularLocus(_)) | Err(Error::DegenerateChart)
    ));
}

#[test]
fn log_discrepancies() {
    let (p, x) = load("plane");
    let b = p.chart("B").unwrap();
    assert_eq!(
        log_j_discrepancy(b, &x, &p.rideal("Mc").unwrap())
            .unwrap()
            .aj,
        int(1)
    );
    let r = log_j_discrepancy(b, &x, &p.rideal("Cc").unwrap()).unwrap();
    assert_eq!(r.aj, rat(1, 3));
    assert_eq!(r.am, rat(1, 3));
    assert_eq!(r.factor_orders, vec![2]);
    let (c, x) = load("quadric-cone");
    assert_eq!(
        log_j_discrepancy(c.chart("E1").unwrap(), &x, &c.rideal("O").unwrap())
            .unwrap()
            .aj,
        int(1)
    );
}

#[test]
fn rideal_vanishing_along_chart() {
    let (c, x) = load("quadric-cone");
    let a = RIdeal::single(x.ideal().clone(), int(1)).unwrap();
    assert!(matches!(
        log_j_discrepancy(c.chart("E1").unwrap(), &x, &a),
        Err(Error::RIdealVanishes { factor: 0, .. })
    ));
}

#[test]
fn centers() {
    let e = engine();
    let (p, _) = load("plane");
    assert_eq!(
        center_ideal(p.chart("B").unwrap(), &e).unwrap().to_string(),
        "(y, x)"
    );
    assert_eq!(
        center_ideal(p.chart("Lx").unwrap(), &e)
            .unwrap()
            .to_string(),
        "(x)"
    );
    let (c, _) = load("quadric-cone");
    assert_eq!(
        center_ideal(c.chart("E1").unwrap(), &e)
            .unwrap()
            .to_string(),
        "(z, y, x)"
    );
    let (u, _) = load("whitney-umbrella");
    assert_eq!(
        center_ideal(u.chart("N").unwrap(), &e).unwrap().to_string(),
        "(y, x)"
    );
}

#[test]
fn jmld_values() {
    let e = engine();
    let (p, x) = load("plane");
    let (charts, _) = p.chartset("S").unwrap();
    let t = p.ideal("T").unwrap();
    let r = jmld_over_charts(&charts, &x, &p.rideal("O").unwrap(), t, true, &e).unwrap();
    assert_eq!(r.value, Extended::Finite(int(2)));
    assert_eq!(r.witnesses, vec!["B".to_string()]);
    assert!(r.exact);

    let (c, x) = load("quadric-cone");
    let (charts, attest) = c.chartset("S").unwrap();
    let r = jmld_over_charts(
        &charts,
        &x,
        &c.rideal("O").unwrap(),
        c.ideal("T").unwrap(),
        attest.is_some(),
        &e,
    )
    .unwrap();
    assert_eq!(r.value, Extended::Finite(int(1)));

    let heavy = RIdeal::single(p.ideal("M").unwrap().clone(), rat(5, 2)).unwrap();
    let (charts, _) = p.chartset("S").unwrap();
    let x = fixture("plane").unwrap().variety().unwrap();
    let r = jmld_over_charts(&charts, &x, &heavy, t, true, &e).unwrap();
    assert_eq!(r.raw_minimum, rat(-1, 2));
    assert_eq!(r.value, Extended::NegInfinity);
    assert!(r.clamped);
    let r = jmld_over_charts(&charts, &x, &heavy, t, false, &e).unwrap();
    assert_eq!(r.value, Extended::Finite(rat(-1, 2)));
    assert!(r.warning.is_some());
}

#[test]
fn jmld_dimension_one_is_not_clamped() {
    let e = engine();
    let (k, x) = load("cusp");
    let (charts, _) = k.chartset("S").unwrap();
    let r = jmld_over_charts(
        &charts,
        &x,
        &RIdeal::trivial(k.ring()),
        k.ideal("T").unwrap(),
        true,
        &e,
    )
    .unwrap();
    assert_eq!(r.value, Extended::Finite(int(-1)));
    assert!(!r.clamped);
    assert!(r.warning.is_some());
}

#[test]
fn jmld_without_witnesses() {
    let e = engine();
    let (p, x) = load("plane");
    let lx = p.chart("Lx").unwrap().clone();
    let r = jmld_over_charts(
        &[lx],
        &x,
        &p.rideal("O").unwrap(),
        p.ideal("T").unwrap(),
        true,
        &e,
    );
    assert_eq!(r.unwrap_err(), Error::NoWitnesses);
}

#[test]
fn jlct_values() {
    let (p, x) = load("plane");
    let (s, _) = p.chartset("S").unwrap();
    let r = jlct_from_charts(&s, &x, &p.rideal("Mc").unwrap(), true).unwrap();
    assert_eq!(r.value, Extended::Finite(int(2)));
    let (res, _) = p.chartset("R").unwrap();
    let c = RIdeal::single(p.ideal("C").unwrap().clone(), int(1)).unwrap();
    let r = jlct_from_charts(&res, &x, &c, true).unwrap();
    assert_eq!(r.value, Extended::Finite(rat(5, 6)));
    assert_eq!(r.witness.as_deref(), Some("W32"));
    let r = jlct_from_charts(&res, &x, &RIdeal::trivial(p.ring()), true).unwrap();
    assert_eq!(r.value, Extended::PosInfinity);

    let (c, x) = load("quadric-cone");
    let (s, _) = c.chartset("S").unwrap();
    let r = jlct_from_charts(&s, &x, &c.rideal("M").unwrap(), true).unwrap();
    assert_eq!(r.value, Extended::Finite(int(1)));
}

#[test]
fn jlct_of_non_log_canonical_ambient() {
    let (k, x) = load("cusp");
    let (s, _) = k.chartset("S").unwrap();
    let a = RIdeal::single(k.ideal("T").unwrap().clone(), int(1)).unwrap();
    let r = jlct_from_charts(&s, &x, &a, true).unwrap();
    assert_eq!(r.value, Extended::Finite(int(0)));
    assert_eq!(
        r.reason.as_deref(),
        Some("ambient pair not log J-canonical")
    );
}

#[test]
fn theorem_b_examples() {
    let cfg = SamplingConfig::default();
    let (c, x) = load("quadric-cone");
    let r = theorem_b_check(c.chart("E1").unwrap(), &x, 2, &cfg, true).unwrap();
    assert_eq!((r.fiber, r.closure, r.rhs, r.lhs), (7, 4, 1, 1));
    assert!(r.all_pass());
    assert_eq!(r.dependency, THEOREM_B_DEPENDENCY);

    let (p, x) = load("plane");
    let r = theorem_b_check(p.chart("B").unwrap(), &x, 0, &cfg, true).unwrap();
    assert_eq!((r.fiber, r.closure, r.rhs), (2, 0, 2));
    assert!(r.all_pass());

    let (s, x) = load("space");
    let r = theorem_b_check(s.chart("B").unwrap(), &x, 0, &cfg, false).unwrap();
    assert_eq!((r.fiber, r.closure, r.rhs), (3, 0, 3));
    assert!(r.pass);

    let (k, x) = load("cusp");
    let r = theorem_b_check(k.chart("N").unwrap(), &x, 6, &cfg, true).unwrap();
    assert_eq!((r.fiber, r.closure, r.rhs, r.lhs), (10, 5, -1, -1));
    assert!(r.all_pass());
}

#[test]
fn theorem_b_requires_large_m() {
    let (k, x) = load("cusp");
    let err = theorem_b_check(
        k.chart("N").unwrap(),
        &x,
        5,
        &SamplingConfig::default(),
        false,
    )
    .unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
}

#[test]
fn monomial_log_discrepancies() {
    let (p, _) = load("plane");
    let w11 = MonomialValuation::new(vec![1, 1]).unwrap();
    assert_eq!(
        monomial_log_discrepancy(&w11, &p.rideal("Mc").unwrap()).unwrap(),
        int(1)
    );
    let w32 = MonomialValuation::new(vec![3, 2]).unwrap();
    assert_eq!(
        monomial_log_discrepancy(&w32, &p.rideal("Cc").unwrap()).unwrap(),
        int(0)
    );
    let (s, _) = load("space");
    let ones = MonomialValuation::new(vec![1, 1, 1]).unwrap();
    assert_eq!(
        monomial_log_discrepancy(&ones, &s.rideal("O").unwrap()).unwrap(),
        int(3)
    );
    assert!(MonomialValuation::new(vec![1, 0]).is_err());
}

#[test]
fn inversion_of_adjunction() {
    let e = engine();
    let (c, x) = load("quadric-cone");
    let (charts, attest) = c.chartset("S").unwrap();
    let r = inv_adjunction_check(
        &x,
        &charts,
        &c.weights("W").unwrap(),
        &c.rideal("O").unwrap(),
        c.ideal("T").unwrap(),
        attest.is_some(),
        &e,
    )
    .unwrap();
    assert_eq!(
        (r.e, r.jmld.value.clone(), r.mld.clone()),
        (1, Extended::Finite(int(1)), Extended::Finite(int(1)))
    );
    assert!(r.consistent);

    let (p, x) = load("plane");
    let (charts, _) = p.chartset("S").unwrap();
    let r = inv_adjunction_check(
        &x,
        &charts,
        &p.weights("Wt").unwrap(),
        &p.rideal("O").unwrap(),
        p.ideal("T").unwrap(),
        true,
        &e,
    )
    .unwrap();
    assert_eq!(r.mld, Extended::Finite(int(2)));
    assert!(r.consistent);

    let (t, x) = load("twisted-cubic-cone");
    let (charts, _) = t.chartset("S").unwrap();
    let r = inv_adjunction_check(
        &x,
        &charts,
        &t.weights("W").unwrap(),
        &t.rideal("O").unwrap(),
        t.ideal("T").unwrap(),
        true,
        &e,
    )
    .unwrap();
    assert_eq!((r.e, r.mld_raw.clone()), (2, int(0)));
    assert!(r.consistent);
}

#[test]
fn inversion_of_adjunction_refuses_curves() {
    let (k, x) = load("cusp");
    let (charts, _) = k.chartset("S").unwrap();
    let w = vec![MonomialValuation::new(vec![3, 2]).unwrap()];
    let err = inv_adjunction_check(
        &x,
        &charts,
        &w,
        &RIdeal::trivial(k.ring()),
        k.ideal("T").unwrap(),
        true,
        &engine(),
    )
    .unwrap_err();
    assert_eq!(err, Error::DimensionOne);
}

#[test]
fn classify_fixtures() {
    let e = engine();
    let cfg = SamplingConfig::default();
    let (c, x) = load("quadric-cone");
    let (charts, attest) = c.chartset("S").unwrap();
    let v = classify_singularity(&x, &charts, attest.is_some(), &[], &cfg, &e).unwrap();
    assert!(v.j_canonical && !v.j_terminal && v.log_j_canonical);
    assert!(v
        .implications
        .iter()
        .any(|s| s.contains("rational singularities")));
    assert!(v.jet_criterion_c && v.jet_criterion_c_prime);
    assert_eq!(v.sufficiency(), "exact");

    let (p, x) = load("plane");
    let b = vec![p.chart("B").unwrap().clone()];
    let v = classify_singularity(&x, &b, true, &[], &cfg, &e).unwrap();
    assert!(v.j_terminal);

    let (k, x) = load("cusp");
    let (charts, _) = k.chartset("S").unwrap();
    let v = classify_singularity(&x, &charts, false, &[], &cfg, &e).unwrap();
    assert!(!v.log_j_canonical);
    assert_eq!(v.min_all, Some(-1));
    assert_eq!(v.sufficiency(), "necessary conditions only");
}

#[test]
fn classify_with_lci_defect() {
    let e = engine();
    let (t, x) = load("twisted-cubic-cone");
    let (charts, _) = t.chartset("S").unwrap();
    let v = classify_singularity(
        &x,
        &charts,
        true,
        &[t.ideal("V").unwrap().clone()],
        &SamplingConfig::default(),
        &e,
    )
    .unwrap();
    assert_eq!(v.min_exceptional, Some(0));
    assert!(!v.j_canonical && v.log_j_canonical);
    // d_X contains x1, whose pullback has order 1.
    assert_eq!(v.lcid_orders, vec![1]);
    assert!(v.pair_j_canonical);
}

#[test]
fn jmld_semicontinuity_spot_check() {
    let e = engine();
    let (c, x) = load("quadric-cone");
    let trivial = c.rideal("O").unwrap();
    let (charts, _) = c.chartset("S").unwrap();
    let special = jmld_over_charts(&charts, &x, &trivial, c.ideal("T").unwrap(), true, &e).unwrap();
    // Blow-up of the smooth point (1, 0, 0), through the double cover (s^2, t^2, st).
    let maps = parse_maps(2, &["(1 + y1)^2", "y1^2*y2^2", "(1 + y1)*y1*y2"]);
    let chart = DivisorChart::new("P", c.ring(), maps, 0, true).unwrap();
    let point = parse_ideal(c.ring(), "x - 1, y, z").unwrap();
    let nearby = jmld_over_charts(&[chart], &x, &trivial, &point, true, &e).unwrap();
    assert_eq!(nearby.value, Extended::Finite(int(2)));
    assert!(special.value <= nearby.value);
}
