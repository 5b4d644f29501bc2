use super::*;
use crate::local::milnor_data;
use crate::poly::parse_polynomial;
use crate::rational::{int, rat};

fn p(s: &str, n: usize) -> Polynomial {
    let names: Vec<String> = ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect();
    parse_polynomial(s, &names).unwrap()
}

fn diag(entries: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(entries.len(), entries.len());
    for (i, e) in entries.iter().enumerate() {
        m[(i, i)] = e.clone();
    }
    m
}

#[test]
fn t_matrix_examples() {
    let f = p("x^2", 1);
    let md = milnor_data(&f).unwrap();
    let bm = t_matrix(&md, &f, 2, 4).unwrap();
    assert!(bm.t_matrix.coeffs[0].is_zero());
    assert_eq!(bm.t_matrix.coeffs[1], diag(&[rat(1, 2)]));
    assert!(bm.t_matrix.coeffs[2].is_zero());

    let f = p("x^2+y^2+z^2", 3);
    let md = milnor_data(&f).unwrap();
    let bm = t_matrix(&md, &f, 2, 4).unwrap();
    assert_eq!(bm.t_matrix.coeffs[1], diag(&[rat(3, 2)]));

    let f = p("x^3+y^3", 2);
    let md = milnor_data(&f).unwrap();
    let bm = t_matrix(&md, &f, 3, 6).unwrap();
    let order: Vec<Rational> = md
        .basis
        .iter()
        .map(|m| rat(2, 3) + Rational::new((m.degree()).into(), 3.into()))
        .collect();
    assert!(bm.t_matrix.coeffs[0].is_zero());
    assert_eq!(bm.t_matrix.coeffs[1], diag(&order));
    assert!(bm.t_matrix.coeffs[2].is_zero());
}

#[test]
fn saturation_of_quasihomogeneous_is_trivial() {
    let f = p("x^3+y^3", 2);
    let md = milnor_data(&f).unwrap();
    let sm = saturate(&t_matrix(&md, &f, 4, 8).unwrap()).unwrap();
    assert_eq!(sm.steps, 0);
    assert_eq!(sm.exponents, vec![(rat(2, 3), 1), (int(1), 2), (rat(4, 3), 1)]);
}

#[test]
fn small_spectra() {
    for (s, n, expect) in [
        ("x^3+y^3", 2, bp_spectrum_oracle(&[3, 3])),
        ("x^2+y^2+z^2", 3, Spectrum::from_values([rat(1, 2)])),
        ("x^2", 1, Spectrum::from_values([rat(-1, 2)])),
    ] {
        let f = p(s, n);
        let md = milnor_data(&f).unwrap();
        assert_eq!(analyze(&f, &md, None).unwrap().spectrum, expect, "{s}");
    }
}

#[test]
fn oracle_examples() {
    assert_eq!(bp_spectrum_oracle(&[2, 2, 2]), Spectrum::from_values([rat(1, 2)]));
    assert_eq!(bp_spectrum_oracle(&[3, 3]), Spectrum::from_values([rat(-1, 3), int(0), int(0), rat(1, 3)]));
    assert_eq!(
        bp_spectrum_oracle(&[5]),
        Spectrum::from_values([rat(-4, 5), rat(-3, 5), rat(-2, 5), rat(-1, 5)])
    );
}

#[test]
fn monodromy_examples() {
    let sp = Spectrum::from_values([rat(-1, 3), int(0), int(0), rat(1, 3)]);
    let info = monodromy_info(&sp);
    assert!(info.has_eigenvalue_one);
    assert_eq!(info.alpha1, rat(-1, 3));
    assert_eq!(info.alpha2, int(0));
    let info = monodromy_info(&Spectrum::from_values([rat(-1, 2)]));
    assert_eq!(info.eigenvalues, vec![(rat(1, 2), 1)]);
    assert!(!info.has_eigenvalue_one);
}

#[test]
fn c0_examples() {
    let f = p("x^2+y^2+z^2", 3);
    let md = milnor_data(&f).unwrap();
    let gm = analyze(&f, &md, None).unwrap();
    assert_eq!(gm.c0.dim, 0);
    assert!(gm.c0.d0.is_empty());

    let f = p("x^3+y^3", 2);
    let md = milnor_data(&f).unwrap();
    let gm = analyze(&f, &md, None).unwrap();
    assert_eq!(gm.c0.dim, 2);
    assert!(gm.c0.n_image.is_empty());
    assert!(gm.c0.d0.iter().all(Zero::is_zero));
}

#[test]
fn obstruction_membership_synthetic() {
    let e = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
    let c0 = C0Structure::trivial(rat(-1, 2), int(0));
    assert!(obstruction_membership(&c0, ObstructionVariant::C).unwrap());
    assert!(obstruction_membership(&c0, ObstructionVariant::D).unwrap());
    let c0 = C0Structure::new(2, vec![], vec![], vec![e(&[0, 1])], e(&[1, 0]), rat(-1, 2), int(0));
    assert!(!obstruction_membership(&c0, ObstructionVariant::C).unwrap());
    let c0 = C0Structure::new(2, vec![e(&[1, 1])], vec![], vec![], e(&[0, 0]), rat(-1, 2), int(0));
    assert!(obstruction_membership(&c0, ObstructionVariant::D).unwrap());
    let c0 = C0Structure::trivial(rat(1, 2), int(1));
    assert!(obstruction_membership(&c0, ObstructionVariant::C).is_err());
}
