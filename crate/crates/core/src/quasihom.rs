//! Weighted homogeneity in the given coordinates and the Holland–Mond
//! criterion for quasihomogeneous germs.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::local::MilnorData;
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Positive integer weights with `<w, a> = degree` on every exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSystem {
    pub weights: Vec<u64>,
    pub degree: u64,
}

impl WeightSystem {
    pub fn weighted_degree(&self, m: &Monomial) -> u64 {
        m.exponents().iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        self.weights.len() == f.nvars()
            && self.degree > 0
            && f.terms().all(|(m, _)| self.weighted_degree(m) == self.degree)
    }

    pub fn scaled(&self, c: u64) -> WeightSystem {
        WeightSystem { weights: self.weights.iter().map(|w| w * c).collect(), degree: self.degree * c }
    }
}

/// Largest weighted degree tried when the positive solution cone has
/// dimension above one.
const MAX_SEARCH_DEGREE: u64 = 256;

/// Weights making `f` weighted homogeneous in the given coordinates.
pub fn detect_weights(f: &Polynomial) -> Option<WeightSystem> {
    let n = f.nvars();
    if f.is_zero() || n == 0 {
        return None;
    }
    // unknowns w_0..w_{n-1}, r; rows <w, a> - r = 0
    let rows: Vec<Vec<Rational>> = f
        .terms()
        .map(|(m, _)| {
            let mut row: Vec<Rational> = m.exponents().iter().map(|&e| Rational::from_integer(e.into())).collect();
            row.push(-Rational::one());
            row
        })
        .collect();
    let system = Matrix::from_rows(rows);
    let kernel = system.kernel();
    match kernel.len() {
        0 => None,
        1 => normalize_positive(&kernel[0]),
        _ => search_cone(&system, n),
    }
}

fn normalize_positive(v: &[Rational]) -> Option<WeightSystem> {
    let sign = if v.iter().all(Rational::is_positive) {
        Rational::one()
    } else if v.iter().all(Rational::is_negative) {
        -Rational::one()
    } else {
        return None;
    };
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> =
        v.iter().map(|x| (x * &sign * Rational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    let vals: Option<Vec<u64>> = ints.iter().map(|x| (x / &g).to_u64()).collect();
    let vals = vals?;
    let (degree, weights) = vals.split_last()?;
    Some(WeightSystem { weights: weights.to_vec(), degree: *degree })
}

/// Smallest degree, then lexicographically smallest weights, among the
/// positive integer points of the solution cone.
fn search_cone(system: &Matrix, n: usize) -> Option<WeightSystem> {
    // fix r and solve <w, a> = r
    let a = system.submatrix(&(0..system.rows()).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
    let pivots = a.rref().1;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let ones = vec![Rational::one(); system.rows()];
    let particular = a.solve(&ones)?;
    let kernel = a.kernel();
    for r in 1..=MAX_SEARCH_DEGREE {
        let rr = Rational::from_integer(r.into());
        let mut best: Option<Vec<u64>> = None;
        let mut choice = vec![1u64; free.len()];
        loop {
            // w = r * particular + sum (choice_k - r * particular_free_k) * kernel_k
            let mut w: Vec<Rational> = particular.iter().map(|p| p * &rr).collect();
            for (k, &fc) in free.iter().enumerate() {
                let delta = Rational::from_integer(choice[k].into()) - &w[fc];
                for (wi, ki) in w.iter_mut().zip(&kernel[k]) {
                    *wi += &delta * ki;
                }
            }
            if w.iter().all(|x| x.is_integer() && x.is_positive()) {
                let ints: Vec<u64> = w.iter().map(|x| x.to_integer().to_u64().unwrap()).collect();
                if best.as_ref().is_none_or(|b| ints < *b) {
                    best = Some(ints);
                }
            }
            // odometer over free coordinates in 1..=r
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] <= r {
                    break;
                }
                choice[k] = 1;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        if let Some(weights) = best {
            return Some(WeightSystem { weights, degree: r });
        }
    }
    None
}

/// Dimensions of the graded pieces of the Milnor algebra.
pub fn graded_dims(f: &Polynomial, md: &MilnorData, ws: &WeightSystem) -> Result<BTreeMap<u64, usize>> {
    if !ws.is_homogeneous(f) {
        return Err(Error::WeightCheck);
    }
    let mut dims = BTreeMap::new();
    for m in &md.basis {
        *dims.entry(ws.weighted_degree(m)).or_insert(0) += 1;
    }
    Ok(dims)
}

/// One degree checked by the Holland–Mond criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub i: u64,
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HollandMond {
    pub holds: bool,
    pub checks: Vec<DegreeCheck>,
}

impl HollandMond {
    pub fn witnesses(&self) -> impl Iterator<Item = &DegreeCheck> {
        self.checks.iter().filter(|c| c.dim > 0)
    }
}

/// The comparison theorem holds iff the Milnor algebra vanishes in the
/// degrees `i r - sum w` for `1 <= i <= n - 1`, where `n + 1` is the number
/// of variables and the sum runs over all weights.
pub fn holland_mond_verdict(f: &Polynomial, md: &MilnorData, ws: &WeightSystem) -> Result<HollandMond> {
    let nvars = f.nvars();
    if nvars < 2 {
        return Err(Error::Precondition("the Holland–Mond criterion needs at least two variables".into()));
    }
    let dims = graded_dims(f, md, ws)?;
    let n = nvars as u64 - 1;
    let wsum: u64 = ws.weights.iter().sum();
    let checks: Vec<DegreeCheck> = (1..n)
        .map(|i| {
            let degree = (i * ws.degree) as i64 - wsum as i64;
            let dim = if degree < 0 { 0 } else { dims.get(&(degree as u64)).copied().unwrap_or(0) };
            DegreeCheck { i, degree, dim }
        })
        .collect();
    Ok(HollandMond { holds: checks.iter().all(|c| c.dim == 0), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::milnor_data;
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        let names: Vec<String> = ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect();
        parse_polynomial(s, &names).unwrap()
    }

    fn ws(w: &[u64], r: u64) -> WeightSystem {
        WeightSystem { weights: w.to_vec(), degree: r }
    }

    #[test]
    fn weights_examples() {
        assert_eq!(detect_weights(&p("x^3+y^3+z^3", 3)), Some(ws(&[1, 1, 1], 3)));
        assert_eq!(detect_weights(&p("x^5+x^2*y^2+y^5+z^5", 3)), None);
        assert_eq!(detect_weights(&p("x^2*y+y^3", 2)), Some(ws(&[1, 1], 3)));
        assert_eq!(detect_weights(&p("x^4+y^2+z^2", 3)), Some(ws(&[1, 2, 2], 4)));
        assert_eq!(detect_weights(&p("x^2*y^3", 2)), Some(ws(&[1, 1], 5)));
        assert_eq!(detect_weights(&p("x*y+z^2", 3)), Some(ws(&[1, 1, 1], 2)));
        assert_eq!(detect_weights(&p("x^2+x^3", 1)), None);
    }

    #[test]
    fn graded_dims_examples() {
        let f = p("x^2+y^2+z^2", 3);
        let md = milnor_data(&f).unwrap();
        assert_eq!(graded_dims(&f, &md, &ws(&[1, 1, 1], 2)).unwrap(), BTreeMap::from([(0, 1)]));
        let f = p("x^3+y^3+z^3", 3);
        let md = milnor_data(&f).unwrap();
        let d = graded_dims(&f, &md, &ws(&[1, 1, 1], 3)).unwrap();
        assert_eq!(d, BTreeMap::from([(0, 1), (1, 3), (2, 3), (3, 1)]));
        let f = p("x^3+y^3", 2);
        let md = milnor_data(&f).unwrap();
        assert_eq!(graded_dims(&f, &md, &ws(&[1, 1], 3)).unwrap(), BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert!(matches!(graded_dims(&f, &md, &ws(&[1, 2], 3)), Err(Error::WeightCheck)));
    }

    fn verdict(s: &str, n: usize) -> HollandMond {
        let f = p(s, n);
        let md = milnor_data(&f).unwrap();
        holland_mond_verdict(&f, &md, &detect_weights(&f).unwrap()).unwrap()
    }

    #[test]
    fn holland_mond_examples() {
        assert!(verdict("x^2+y^2+z^2", 3).holds);
        let v = verdict("x^3+y^3+z^3", 3);
        assert!(!v.holds);
        assert_eq!(v.witnesses().cloned().collect::<Vec<_>>(), vec![DegreeCheck { i: 1, degree: 0, dim: 1 }]);
        let v = verdict("x^3+y^3", 2);
        assert!(v.holds && v.checks.is_empty());
    }

    #[test]
    fn a_k_surfaces_hold() {
        for k in 1..=6 {
            assert!(verdict(&format!("x^{}+y^2+z^2", k + 1), 3).holds, "A_{k}");
        }
    }

    proptest! {
        #[test]
        fn detected_weights_fit(a in 2u32..7, b in 2u32..7, c in 2u32..7, mixed in any::<bool>()) {
            let s = if mixed { format!("x^{a}+y^{b}+z^{c}+x*y*z") } else { format!("x^{a}+y^{b}+z^{c}") };
            let f = p(&s, 3);
            if let Some(w) = detect_weights(&f) {
                prop_assert!(w.is_homogeneous(&f));
                let md = milnor_data(&f).unwrap();
                let dims = graded_dims(&f, &md, &w).unwrap();
                prop_assert_eq!(dims.values().sum::<usize>(), md.mu);
                let scaled = w.scaled(3);
                prop_assert_eq!(
                    holland_mond_verdict(&f, &md, &w).unwrap().holds,
                    holland_mond_verdict(&f, &md, &scaled).unwrap().holds
                );
            } else {
                prop_assert!(mixed);
            }
        }
    }
}
