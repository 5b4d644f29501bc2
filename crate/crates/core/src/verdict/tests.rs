use super::*;
use crate::cache::Cache;
use crate::rational::rat;
use crate::selfcheck::spectrum_selfcheck;

fn vars(n: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
}

fn run(s: &str, n: usize) -> LctReport {
    analyze_text(s, &vars(n), &Options::default()).unwrap()
}

// decision table, checked from the flags alone
fn consistent(r: &LctReport) -> bool {
    use ConditionStatus::*;
    let c = r.conditions;
    match r.quasihomogeneous {
        None => r.verdict == Verdict::Smooth,
        Some(true) => {
            [c.a, c.b, c.c, c.d].iter().all(|s| *s == NotApplicable)
                && match &r.holland_mond {
                    Some(hm) => r.verdict == if hm.holds { Verdict::LctHolds } else { Verdict::LctFails },
                    None => r.verdict == Verdict::QhCoordinateLimit,
                }
        }
        Some(false) => {
            let fired = !c.fired().is_empty();
            let a1 = r.alpha1.clone().unwrap();
            let zero = Rational::zero();
            (c.a == Fired) == !r.monodromy_eigenvalue_one.unwrap()
                && (c.b == Fired) == (a1 > zero)
                && (c.c == NotApplicable) == (a1 >= zero)
                && (c.d == NotApplicable) == !(a1 < zero && r.alpha2 == Some(zero))
                && r.verdict == if fired { Verdict::LctFails } else { Verdict::Unknown }
        }
    }
}

#[test]
fn quintic_example_fails_via_a() {
    let r = run("x^5+x^2*y^2+y^5+z^5", 3);
    assert_eq!(r.mu, 44);
    assert_eq!(r.quasihomogeneous, Some(false));
    assert_eq!(r.monodromy_eigenvalue_one, Some(false));
    assert_eq!(r.conditions.a, ConditionStatus::Fired);
    assert_eq!(r.verdict, Verdict::LctFails);
    assert_eq!(r.alpha1, Some(rat(-3, 10)));
    assert!(consistent(&r));
}

#[test]
fn holland_mond_examples() {
    let r = run("x^2+y^2+z^2", 3);
    assert_eq!(r.verdict, Verdict::LctHolds);
    assert!(r.holland_mond.as_ref().unwrap().witnesses().next().is_none());
    let r = run("x^3+y^3+z^3", 3);
    assert_eq!(r.verdict, Verdict::LctFails);
    let w: Vec<_> = r.holland_mond.as_ref().unwrap().witnesses().cloned().collect();
    assert_eq!(w.len(), 1);
    assert_eq!((w[0].i, w[0].degree, w[0].dim), (1, 0, 1));
    assert!(consistent(&r));
}

#[test]
fn smooth_and_errors() {
    let r = run("x+y^2", 2);
    assert_eq!(r.verdict, Verdict::Smooth);
    assert!(consistent(&r));
    let v = vars(2);
    assert_eq!(analyze_text("1+x^2+y^2", &v, &Options::default()), Err(Error::NotThroughOrigin));
    assert_eq!(analyze_text("x^2", &v, &Options::default()), Err(Error::NonIsolated));
    assert!(matches!(analyze_text("q", &vars(1), &Options::default()), Err(Error::UnknownVariable { .. })));
}

#[test]
fn one_variable_holds() {
    let r = run("x^4", 1);
    assert_eq!(r.verdict, Verdict::LctHolds);
    assert_eq!(r.spectrum, crate::gauss_manin::bp_spectrum_oracle(&[4]));
}

#[test]
fn t_family_alpha_zero_is_unknown() {
    let r = run("x^3+y^3+z^4+x*y*z", 3);
    assert_eq!(r.quasihomogeneous, Some(false));
    assert_eq!(r.alpha1, Some(Rational::zero()));
    assert_eq!(r.verdict, Verdict::Unknown);
    assert!(r.justification.iter().any(|j| j.contains("alpha_1 = 0")));
    assert!(consistent(&r));
}

#[test]
fn small_corpus_is_consistent() {
    for (s, n) in [
        ("x^5+x^2*y^2+y^5", 2),
        ("x^3+x*y^3", 2),
        ("x^4+y^5+x^2*y^2", 2),
        ("x^2*y+y^4+z^2", 3),
        ("x^3+y^7+x*y^5", 2),
    ] {
        let r = run(s, n);
        assert!(consistent(&r), "{s}: {r:?}");
    }
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let opts = Options { logder: true, selfcheck: true, ..Options::default() };
    let v = vars(2);
    let a = analyze_text("x^5+x^2*y^2+y^5", &v, &opts).unwrap();
    let b = analyze_text("x^5+x^2*y^2+y^5", &v, &opts).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let back: LctReport = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(back, a);
    assert!(a.selfcheck.as_ref().unwrap().iter().all(|c| c.passed));
    let l = a.logder.as_ref().unwrap();
    assert!(l.traces.iter().all(|t| t.as_deref() == Some("0")));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let v = vars(2);
    let f = parse_polynomial("y^3+x^2", &v).unwrap();
    let g = parse_polynomial("x^2+y^3", &v).unwrap();
    let opts = Options::default();
    let key = Cache::key(&f, &v, &opts);
    assert_eq!(key, Cache::key(&g, &v, &opts));
    assert_ne!(key, Cache::key(&f, &v, &Options { logder: true, ..opts.clone() }));
    assert_eq!(cache.get(&key), None);
    let json = analyze(&f, "y^3+x^2", &v, &opts).unwrap().to_json();
    cache.put(&key, &json).unwrap();
    assert_eq!(cache.get(&key).as_deref(), Some(json.as_str()));
}

#[test]
fn selfcheck_examples() {
    let v = vars(3);
    for s in ["x^3+y^3", "x^5+x^2*y^2+y^5+z^5", "x^2+y^2+z^2"] {
        let n = if s.contains('z') { 3 } else { 2 };
        let f = parse_polynomial(s, &v[..n]).unwrap();
        let checks = spectrum_selfcheck(&f);
        assert!(checks.iter().all(|c| c.passed), "{s}: {checks:?}");
        assert!(checks.len() >= 4);
    }
    let f = parse_polynomial("x^5+x^2*y^2+y^5+z^5", &v).unwrap();
    assert!(spectrum_selfcheck(&f).iter().any(|c| c.name == "sebastiani-thom"));
}
