//! On-demand consistency checks of a computed spectrum against its
//! structural properties and closed-form oracles.

use crate::gauss_manin::{self, bp_spectrum_oracle, qh_spectrum_oracle, Spectrum};
use crate::local::{milnor_data, MilnorData};
use crate::poly::{Monomial, Polynomial};
use crate::quasihom::detect_weights;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

/// Computes the spectrum and runs every applicable check.
pub fn spectrum_selfcheck(f: &Polynomial) -> Vec<Check> {
    let md = match milnor_data(f) {
        Ok(md) => md,
        Err(e) => return vec![check("milnor", false, e.to_string())],
    };
    match gauss_manin::analyze(f, &md, None) {
        Ok(gm) => checks_for(f, &md, &gm.spectrum),
        Err(e) => vec![check("spectrum", false, e.to_string())],
    }
}

/// Checks for an already computed spectrum.
pub fn checks_for(f: &Polynomial, md: &MilnorData, sp: &Spectrum) -> Vec<Check> {
    let nvars = f.nvars();
    let mut out = vec![
        check("count", sp.mu() == md.mu, format!("sum of multiplicities {} vs mu {}", sp.mu(), md.mu)),
        check("window", sp.in_window(nvars), format!("all spectral numbers in (-1, {})", nvars - 1)),
        check("symmetry", sp.is_symmetric(nvars), format!("alpha -> {} - alpha", nvars as i64 - 2)),
    ];
    if let Some(a) = bp_exponents(f) {
        out.push(check("brieskorn-pham oracle", bp_spectrum_oracle(&a) == *sp, format!("exponents {a:?}")));
    }
    if let Some(ws) = detect_weights(f) {
        let ok = qh_spectrum_oracle(f, md, &ws).is_ok_and(|o| o == *sp);
        out.push(check("weighted homogeneous oracle", ok, format!("weights {:?} degree {}", ws.weights, ws.degree)));
    }
    if let Some((k, a, g)) = split_pure_power(f) {
        let other = milnor_data(&g).and_then(|mg| gauss_manin::analyze(&g, &mg, None));
        match other {
            Ok(gm) => {
                let joined = gm.spectrum.join(&bp_spectrum_oracle(&[a]));
                out.push(check(
                    "sebastiani-thom",
                    joined == *sp,
                    format!("f = g + c x_{k}^{a} with g in the other variables"),
                ));
            }
            Err(e) => out.push(check("sebastiani-thom", false, e.to_string())),
        }
    }
    out
}

/// `a_i` when `f = sum c_i x_i^(a_i)` with every variable appearing once.
pub fn bp_exponents(f: &Polynomial) -> Option<Vec<u32>> {
    let n = f.nvars();
    let mut a = vec![0u32; n];
    for (m, _) in f.terms() {
        let i = m.pure_power_var()?;
        if a[i] != 0 || m.degree() < 2 {
            return None;
        }
        a[i] = m.degree();
    }
    a.iter().all(|&e| e >= 2).then_some(a)
}

/// A variable `x_k` occurring only in a single term `c x_k^a`, `a >= 2`,
/// with the rest `g` singular at 0; returns `(k, a, g)` with `g` in the
/// remaining variables.
pub fn split_pure_power(f: &Polynomial) -> Option<(usize, u32, Polynomial)> {
    let n = f.nvars();
    if n < 2 {
        return None;
    }
    (0..n).rev().find_map(|k| {
        let hits: Vec<&Monomial> = f.terms().map(|(m, _)| m).filter(|m| m.exponents()[k] > 0).collect();
        if hits.len() != 1 || hits[0].pure_power_var() != Some(k) || hits[0].degree() < 2 {
            return None;
        }
        let a = hits[0].degree();
        let g = Polynomial::from_terms(
            n - 1,
            f.terms().filter(|(m, _)| m.exponents()[k] == 0).map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.remove(k);
                (Monomial::from_exponents(&e), c.clone())
            }),
        );
        (g.m_adic_order()? >= 2).then_some((k, a, g))
    })
}
