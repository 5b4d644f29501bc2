//! Logarithmic vector fields along `D = {f = 0}` and their linear parts.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, UPoly};
use crate::local::{local_membership, standard_basis, syzygies};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::rational::Rational;
use num_traits::Zero;

/// `delta = sum g_i d_i` with `delta(f) = h f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub coeffs: Vec<Polynomial>,
    pub cofactor: Polynomial,
}

impl Derivation {
    /// Checks `sum g_i d_i f = h f` exactly.
    pub fn new(coeffs: Vec<Polynomial>, cofactor: Polynomial, f: &Polynomial) -> Option<Self> {
        (apply(&coeffs, f) == &cofactor * f).then_some(Derivation { coeffs, cofactor })
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        apply(&self.coeffs, p)
    }

    /// `sum_i d_i g_i`
    pub fn divergence(&self) -> Polynomial {
        let n = self.coeffs.len();
        let mut acc = Polynomial::zero(self.cofactor.nvars());
        for (i, g) in self.coeffs.iter().enumerate().take(n) {
            acc = &acc + &g.diff(i);
        }
        acc
    }
}

fn apply(coeffs: &[Polynomial], p: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(p.nvars());
    for (i, g) in coeffs.iter().enumerate() {
        if !g.is_zero() {
            acc = &acc + &(g * &p.diff(i));
        }
    }
    acc
}

/// Default degree bound for the syzygy computation: `2 deg f + n + 1`.
pub fn default_degree_bound(f: &Polynomial) -> u32 {
    2 * f.total_degree().unwrap_or(1) + f.nvars() as u32
}

/// Generators of `Der(-log D)` from the syzygies of
/// `(d_0 f, ..., d_n f, -f)`; the last entry of each syzygy is the
/// cofactor. The flag is false if pairs beyond the degree bound were
/// skipped.
pub fn derlog_generators(f: &Polynomial, degree_bound: u32) -> (Vec<Derivation>, bool) {
    let n = f.nvars();
    let mut gens: Vec<Polynomial> = (0..n).map(|i| f.diff(i)).collect();
    gens.push(-f);
    let syz = syzygies(&gens, degree_bound);
    let out = syz
        .generators
        .into_iter()
        .filter_map(|mut v| {
            let h = v.pop().unwrap();
            Derivation::new(v, h, f)
        })
        .collect();
    (out, syz.complete)
}

/// Whether `delta(f)` lies in `f O` at the origin. On success returns
/// `(u, h)` with `u delta(f) = h f` and `u(0) != 0`.
pub fn is_logarithmic(coeffs: &[Polynomial], f: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    let image = apply(coeffs, f);
    let sb = standard_basis(std::slice::from_ref(f), MonomialOrder::NegDegRevLex);
    let (inside, cert) = local_membership(&image, &sb);
    if !inside {
        return None;
    }
    // the standard basis holds f up to a nonzero scalar
    let (m, c) = f.terms().next()?;
    let scale = sb.generators()[0].coeff(m) / c;
    Some((cert.unit, cert.quotients[0].scale(&scale)))
}

/// Linear part of a derivation vanishing at 0: entry `(i, j)` is the
/// coefficient of `x_i` in `g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPart {
    pub matrix: Matrix,
    pub trace: Rational,
    pub nilpotent: bool,
}

pub fn linear_part(delta: &Derivation) -> Result<LinearPart> {
    let n = delta.coeffs.len();
    if delta.coeffs.iter().any(|g| !g.constant_term().is_zero()) {
        return Err(Error::NotInMDelta);
    }
    let mut m = Matrix::zeros(n, n);
    for (j, g) in delta.coeffs.iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = g.coeff(&Monomial::var(n, i));
        }
    }
    let trace = (0..n).map(|i| m[(i, i)].clone()).sum();
    let nilpotent = m.pow(n as u32).is_zero();
    Ok(LinearPart { matrix: m, trace, nilpotent })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanChevalley {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// Additive Jordan–Chevalley decomposition over the rationals by Newton
/// iteration `S <- S - p(S) p'(S)^-1` on the squarefree part `p` of the
/// characteristic polynomial.
pub fn jordan_chevalley(m: &Matrix) -> JordanChevalley {
    let p = UPoly::new(m.charpoly()).squarefree_part();
    let dp = p.derivative();
    let mut s = m.clone();
    loop {
        let ps = eval_matrix(&p, &s);
        if ps.is_zero() {
            break;
        }
        let inv = eval_matrix(&dp, &s).inverse().expect("p'(S) is invertible");
        s = &s - &(&ps * &inv);
    }
    JordanChevalley { nilpotent: m - &s, semisimple: s }
}

fn eval_matrix(p: &UPoly, m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * m) + &Matrix::scalar(n, c);
    }
    acc
}

/// `tr(delta_0) - h(0)`, the constant term of `sum d_i g_i - h`.
pub fn log_residue(delta: &Derivation) -> Rational {
    (&delta.divergence() - &delta.cofactor).constant_term()
}

/// `[d1, d2]_i = d1(d2_i) - d2(d1_i)`, logarithmic with cofactor
/// `d1(h2) - d2(h1)`.
pub fn lie_bracket(d1: &Derivation, d2: &Derivation, f: &Polynomial) -> Option<Derivation> {
    let coeffs = d1
        .coeffs
        .iter()
        .zip(&d2.coeffs)
        .map(|(a, b)| &d1.apply(b) - &d2.apply(a))
        .collect();
    let h = &d1.apply(&d2.cofactor) - &d2.apply(&d1.cofactor);
    Derivation::new(coeffs, h, f)
}

#[cfg(test)]
mod tests;
