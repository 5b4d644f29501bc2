//! Closed-form spectra used to validate the engine.

use super::Spectrum;
use crate::error::Result;
use crate::local::MilnorData;
use crate::poly::Polynomial;
use crate::quasihom::WeightSystem;
use crate::rational::Rational;
use num_traits::One;

/// Spectrum of `sum x_i^(a_i)`: `{ sum k_i / a_i - 1 : 1 <= k_i < a_i }`.
pub fn bp_spectrum_oracle(exponents: &[u32]) -> Spectrum {
    let mut values = vec![-Rational::one()];
    for &a in exponents {
        assert!(a >= 2, "exponent must be at least 2");
        values = values
            .iter()
            .flat_map(|v| (1..a).map(move |k| v + Rational::new(k.into(), a.into())))
            .collect();
    }
    Spectrum::from_values(values)
}

/// Spectrum of a weighted homogeneous `f`:
/// `alpha(m) = (<w, m> + sum w) / r - 1` over the monomial basis.
pub fn qh_spectrum_oracle(f: &Polynomial, md: &MilnorData, ws: &WeightSystem) -> Result<Spectrum> {
    if !ws.is_homogeneous(f) {
        return Err(crate::Error::WeightCheck);
    }
    let r = Rational::from_integer(ws.degree.into());
    let wsum: u64 = ws.weights.iter().sum();
    Ok(Spectrum::from_values(md.basis.iter().map(|m| {
        Rational::from_integer((ws.weighted_degree(m) + wsum).into()) / &r - Rational::one()
    })))
}
