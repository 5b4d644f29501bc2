//! Gauss–Manin data of an isolated singularity: the action of `t` on the
//! Brieskorn lattice `H''` over `Q[[s]]` (`s` inverts `d_t`), its saturation
//! under `theta = d_t t`, the spectrum and the eigenvalue-one structure.

mod model;
pub mod oracle;
mod saturate;
mod tmatrix;

pub use oracle::{bp_spectrum_oracle, qh_spectrum_oracle};
pub use saturate::{rational_exponents, saturate};
pub use tmatrix::t_matrix;

use crate::error::{Error, Result};
use crate::linalg::{in_span, intersect, Matrix, SerMatrix};
use crate::local::MilnorData;
use crate::poly::Polynomial;
use crate::rational::{deserialize_text, frac, is_integer, serialize_text, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// `A(s) = sum_k A_k s^k`, known up to `s^K` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    pub coeffs: Vec<Matrix>,
}

impl SeriesMatrix {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn size(&self) -> usize {
        self.coeffs[0].rows()
    }
}

/// Matrix of `t` on `H''` in the basis `[m_i dx]`.
#[derive(Clone, Debug)]
pub struct BrieskornModel {
    pub milnor: MilnorData,
    pub t_matrix: SeriesMatrix,
    pub x_degree_bound: u32,
}

/// The saturated lattice `L = s^-shift span(basis)` (coordinates in the
/// `H''` basis), the matrix `operator` of `theta` on `L`, and `embedding`,
/// the `H''` basis expressed in the basis of `L`.
#[derive(Clone, Debug)]
pub struct SaturatedModel {
    pub basis: SerMatrix,
    pub shift: i32,
    /// least `j` with `s^j L` inside `H''`
    pub hpp_shift: i32,
    pub operator: SerMatrix,
    pub embedding: SerMatrix,
    pub residue: Matrix,
    /// eigenvalues of the residue with multiplicities, ascending
    pub exponents: Vec<(Rational, usize)>,
    pub steps: usize,
}

impl SaturatedModel {
    pub fn min_exponent(&self) -> Rational {
        self.exponents[0].0.clone()
    }

    /// Least `k` such that `s^k C^0` lies in `L`.
    pub fn c0_shift(&self) -> usize {
        self.exponents
            .iter()
            .filter(|e| is_integer(&e.0))
            .map(|e| e.0.to_integer())
            .max()
            .map_or(0, |top| (top - 1u8).try_into().unwrap_or(0usize))
    }

    /// Order `m` of the finite model `L / s^m L` used downstream.
    pub fn model_order(&self, nvars: usize) -> usize {
        let rho = self.min_exponent();
        let above = |top: usize| -> usize {
            let d = Rational::from_integer(top.into()) - &rho;
            (d.floor().to_integer().try_into().unwrap_or(0i64).max(0) + 1) as usize
        };
        (self.hpp_shift as usize + 1).max(above(nvars)).max(above(self.c0_shift() + 1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectrumEntry {
    #[serde(serialize_with = "serialize_text", deserialize_with = "deserialize_text")]
    pub alpha: Rational,
    pub mult: usize,
}

/// Spectral numbers with multiplicities, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    pub fn from_values(values: impl IntoIterator<Item = Rational>) -> Self {
        let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        Spectrum { entries: counts.into_iter().map(|(alpha, mult)| SpectrumEntry { alpha, mult }).collect() }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn mu(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// All spectral numbers with repetition, ascending.
    pub fn alphas(&self) -> Vec<Rational> {
        self.entries.iter().flat_map(|e| std::iter::repeat_n(e.alpha.clone(), e.mult)).collect()
    }

    pub fn multiplicity(&self, alpha: &Rational) -> usize {
        self.entries.iter().find(|e| &e.alpha == alpha).map_or(0, |e| e.mult)
    }

    /// Invariance under `alpha -> (nvars - 2) - alpha`.
    pub fn is_symmetric(&self, nvars: usize) -> bool {
        let c = Rational::from_integer(nvars.into()) - Rational::from_integer(2.into());
        self.entries.iter().all(|e| self.multiplicity(&(&c - &e.alpha)) == e.mult)
    }

    /// Every spectral number lies in `(-1, nvars - 1)`.
    pub fn in_window(&self, nvars: usize) -> bool {
        let top = Rational::from_integer(nvars.into()) - Rational::one();
        self.entries.iter().all(|e| e.alpha > -Rational::one() && e.alpha < top)
    }

    /// Spectrum of `f(x) + g(y)` from those of `f` and `g`.
    pub fn join(&self, other: &Spectrum) -> Spectrum {
        let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
        for a in &self.entries {
            for b in &other.entries {
                *counts.entry(&a.alpha + &b.alpha + Rational::one()).or_insert(0) += a.mult * b.mult;
            }
        }
        Spectrum { entries: counts.into_iter().map(|(alpha, mult)| SpectrumEntry { alpha, mult }).collect() }
    }
}

/// Monodromy data read off the spectrum: the eigenvalue attached to `alpha`
/// is `exp(-2 pi i alpha)`, stored as `alpha mod 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyInfo {
    pub eigenvalues: Vec<(Rational, usize)>,
    pub has_eigenvalue_one: bool,
    pub alpha1: Rational,
    pub alpha2: Rational,
}

pub fn monodromy_info(sp: &Spectrum) -> MonodromyInfo {
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    for e in sp.entries() {
        *counts.entry(frac(&e.alpha)).or_insert(0) += e.mult;
    }
    let alphas = sp.alphas();
    let alpha1 = alphas.first().cloned().unwrap_or_else(Rational::zero);
    let alpha2 = alphas.get(1).cloned().unwrap_or_else(|| alpha1.clone());
    MonodromyInfo {
        has_eigenvalue_one: counts.contains_key(&Rational::zero()),
        eigenvalues: counts.into_iter().collect(),
        alpha1,
        alpha2,
    }
}

/// The pieces of `C^0` (generalized eigenvalue zero of `t d_t` on
/// `V^0 / V^{>0}`) used by the logarithmic comparison criteria, in
/// coordinates of a basis of `C^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C0Structure {
    pub dim: usize,
    /// image of `H'' ∩ V^0`
    pub h0: Vec<Vec<Rational>>,
    /// image of the nilpotent part of `t d_t`
    pub n_image: Vec<Vec<Rational>>,
    /// projections of `[m_i dx]` for `m_i != 1`
    pub s_span: Vec<Vec<Rational>>,
    /// projection of `[dx]`
    pub d0: Vec<Rational>,
    /// `h0 ∩ n_image = 0`
    pub direct: bool,
    pub alpha1: Rational,
    pub alpha2: Rational,
}

impl C0Structure {
    pub fn new(
        dim: usize,
        h0: Vec<Vec<Rational>>,
        n_image: Vec<Vec<Rational>>,
        s_span: Vec<Vec<Rational>>,
        d0: Vec<Rational>,
        alpha1: Rational,
        alpha2: Rational,
    ) -> Self {
        let direct = intersect(dim, &h0, &n_image).is_empty();
        C0Structure { dim, h0, n_image, s_span, d0, direct, alpha1, alpha2 }
    }

    pub fn trivial(alpha1: Rational, alpha2: Rational) -> Self {
        Self::new(0, vec![], vec![], vec![], vec![], alpha1, alpha2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionVariant {
    /// `[u dx]_0 in H_0 + N(C^0)` for some unit `u`; needs `alpha_1 < 0`
    C,
    /// `[dx]_0 in H_0 + N(C^0)`; needs `alpha_1 < 0 = alpha_2`
    D,
}

/// Membership test behind conditions (c) and (d). For (c), the unit is
/// eliminated: `[u dx]_0 = u(0) d0 + (projection of [(u - u(0)) dx])`, and
/// the latter ranges over the span of the projections of `[m_i dx]`,
/// `m_i != 1`.
pub fn obstruction_membership(c0: &C0Structure, variant: ObstructionVariant) -> Result<bool> {
    let zero = Rational::zero();
    match variant {
        ObstructionVariant::C if c0.alpha1 >= zero => {
            return Err(Error::Precondition("condition (c) needs alpha_1 < 0".into()))
        }
        ObstructionVariant::D if !(c0.alpha1 < zero && c0.alpha2 == zero) => {
            return Err(Error::Precondition("condition (d) needs alpha_1 < 0 = alpha_2".into()))
        }
        _ => {}
    }
    if c0.dim == 0 {
        return Ok(true);
    }
    let mut gens = c0.h0.clone();
    gens.extend(c0.n_image.iter().cloned());
    if variant == ObstructionVariant::C {
        gens.extend(c0.s_span.iter().cloned());
    }
    Ok(in_span(c0.dim, &gens, &c0.d0))
}

/// Truncation parameters: `K` bounds the power of `s`, `Dx` the x-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "Dx")]
    pub dx: u32,
}

/// Everything computed at one truncation.
#[derive(Clone, Debug)]
pub struct GaussManin {
    pub brieskorn: BrieskornModel,
    pub saturated: SaturatedModel,
    pub spectrum: Spectrum,
    pub c0: C0Structure,
    pub params: Truncation,
}

/// Runs the pipeline at a fixed truncation and checks the spectrum.
pub fn analyze_at(f: &Polynomial, md: &MilnorData, params: Truncation) -> Result<GaussManin> {
    let bm = t_matrix(md, f, params.k, params.dx)?;
    let sm = saturate(&bm)?;
    let nvars = f.nvars();
    let m = sm.model_order(nvars);
    let short = |what: &str| Error::TruncationInsufficient {
        k: params.k,
        dx: bm.x_degree_bound,
        reason: format!("{what} known to s^{} but the model needs s^{m}", match what {
            "operator" => sm.operator.min_prec(),
            _ => sm.embedding.min_prec(),
        }),
    };
    if sm.operator.min_prec() < m as i32 {
        return Err(short("operator"));
    }
    if sm.embedding.min_prec() < m as i32 {
        return Err(short("embedding"));
    }
    let fm = model::FiniteModel::new(&sm, m)?;
    let (spectrum, w_echelon) = model::spectrum(&fm, &sm)?;
    if spectrum.mu() != md.mu {
        return Err(Error::ConsistencyFailure(format!(
            "spectral multiplicities sum to {} instead of {}",
            spectrum.mu(),
            md.mu
        )));
    }
    if !spectrum.in_window(nvars) || !spectrum.is_symmetric(nvars) {
        return Err(Error::ConsistencyFailure("spectrum is not symmetric in (-1, n)".into()));
    }
    let unit = md.basis.iter().position(|b| b.is_one()).unwrap_or(0);
    let c0 = model::c0_structure(&fm, &sm, &w_echelon, unit, &spectrum)?;
    Ok(GaussManin { params: Truncation { k: params.k, dx: bm.x_degree_bound }, brieskorn: bm, saturated: sm, spectrum, c0 })
}

/// Default truncation: `K = n + 2` with `n + 1` variables, `Dx = (K + 2) deg f`.
pub fn default_truncation(f: &Polynomial) -> Truncation {
    let k = f.nvars() + 1;
    Truncation { k, dx: dx_for(f, k) }
}

/// Default x-degree bound for a given `K`.
pub fn dx_for(f: &Polynomial, k: usize) -> u32 {
    (k as u32 + 2) * f.total_degree().unwrap_or(1)
}

/// Largest `K` tried by [`analyze`].
pub const MAX_TRUNCATION: usize = 64;

/// Runs [`analyze_at`] at `K` and `K + 1`, doubling `K` until both succeed
/// with the same spectrum.
pub fn analyze(f: &Polynomial, md: &MilnorData, start: Option<Truncation>) -> Result<GaussManin> {
    let mut params = start.unwrap_or_else(|| default_truncation(f));
    let mut last = None;
    while params.k <= MAX_TRUNCATION {
        let next = Truncation { k: params.k + 1, dx: params.dx.max(dx_for(f, params.k + 1)) };
        match (analyze_at(f, md, params), analyze_at(f, md, next)) {
            (Ok(a), Ok(b)) if a.spectrum == b.spectrum && a.c0 == b.c0 => return Ok(a),
            (Ok(_), Ok(_)) => last = Some("spectrum changed between K and K + 1".to_string()),
            (Err(e @ (Error::IrrationalExponent | Error::TruncationInsufficient { .. } | Error::ConsistencyFailure(_))), _)
            | (_, Err(e @ (Error::IrrationalExponent | Error::TruncationInsufficient { .. } | Error::ConsistencyFailure(_)))) => {
                last = Some(e.to_string())
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
        params = Truncation { k: params.k * 2, dx: params.dx.max(dx_for(f, params.k * 2)) };
    }
    Err(Error::TruncationInsufficient {
        k: params.k,
        dx: params.dx,
        reason: last.unwrap_or_else(|| "no stable truncation found".into()),
    })
}

#[cfg(test)]
mod tests;
