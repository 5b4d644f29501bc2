//! The finite-dimensional model `L / s^m L` with the action of `theta`.

use super::{C0Structure, SaturatedModel, Spectrum};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Ser};
use crate::rational::{is_integer, Rational};
use num_traits::{One, Zero};

pub(crate) struct FiniteModel {
    mu: usize,
    m: usize,
    theta: Matrix,
    /// eigenvalue, first column in `eigvecs`, dimension; ascending
    blocks: Vec<(Rational, usize, usize)>,
    eigvecs: Matrix,
    coords: Matrix,
}

impl FiniteModel {
    pub fn new(sm: &SaturatedModel, m: usize) -> Result<Self> {
        let mu = sm.residue.rows();
        let dim = mu * m;
        let mut theta = Matrix::zeros(dim, dim);
        for k in 0..m {
            for kk in 0..m - k {
                let tk = sm.operator.coeff_matrix(kk as i32);
                for j in 0..mu {
                    for i in 0..mu {
                        let v = &tk[(i, j)];
                        if !v.is_zero() {
                            theta[((k + kk) * mu + i, k * mu + j)] += v;
                        }
                    }
                }
            }
            for j in 0..mu {
                theta[(k * mu + j, k * mu + j)] += Rational::from_integer(k.into());
            }
        }
        let mut lambdas: Vec<Rational> = Vec::new();
        for (rho, _) in &sm.exponents {
            for k in 0..m {
                let l = rho + Rational::from_integer(k.into());
                if !lambdas.contains(&l) {
                    lambdas.push(l);
                }
            }
        }
        lambdas.sort();
        let mut blocks = Vec::new();
        let mut cols: Vec<Vec<Rational>> = Vec::new();
        for l in lambdas {
            let expected: usize = sm
                .exponents
                .iter()
                .filter(|(rho, _)| {
                    let d = &l - rho;
                    is_integer(&d) && d >= Rational::zero() && d < Rational::from_integer(m.into())
                })
                .map(|e| e.1)
                .sum();
            let space = generalized_eigenspace(&theta, &l, expected)?;
            blocks.push((l, cols.len(), space.len()));
            cols.extend(space);
        }
        if cols.len() != dim {
            return Err(Error::ConsistencyFailure("eigenspaces do not span the model".into()));
        }
        let eigvecs = Matrix::from_columns(dim, &cols);
        let coords = eigvecs
            .inverse()
            .ok_or_else(|| Error::ConsistencyFailure("eigenbasis is singular".into()))?;
        Ok(FiniteModel { mu, m, theta, blocks, eigvecs, coords })
    }

    pub fn dim(&self) -> usize {
        self.mu * self.m
    }

    /// Image of `s^k` times a series vector.
    pub fn embed(&self, v: &[Ser], k: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (j, x) in v.iter().enumerate() {
            for e in 0..self.m.saturating_sub(k) {
                out[(e + k) * self.mu + j] = x.coeff(e as i32);
            }
        }
        out
    }

    pub fn shift(&self, v: &[Rational], k: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        let n = self.dim().saturating_sub(k * self.mu);
        out[k * self.mu..].clone_from_slice(&v[..n]);
        out
    }

    pub fn eigen_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.coords.mul_vec(v)
    }

    fn from_eigen(&self, c: &[Rational]) -> Vec<Rational> {
        self.eigvecs.mul_vec(c)
    }

    fn block_of_column(&self, col: usize) -> usize {
        self.blocks.iter().position(|(_, start, d)| col >= *start && col < start + d).unwrap()
    }

    fn block(&self, l: &Rational) -> Option<(usize, usize)> {
        self.blocks.iter().find(|b| &b.0 == l).map(|b| (b.1, b.2))
    }

    /// Rows of the reduced echelon form of the span in eigen-coordinates,
    /// so that each row's pivot is its lowest eigenvalue component.
    fn adapted_echelon(&self, vecs: &[Vec<Rational>]) -> Vec<(usize, Vec<Rational>)> {
        if vecs.is_empty() {
            return Vec::new();
        }
        let rows: Vec<Vec<Rational>> = vecs.iter().map(|v| self.eigen_coords(v)).collect();
        let (r, pivots) = Matrix::from_rows(rows).rref();
        pivots.iter().enumerate().map(|(i, &p)| (self.block_of_column(p), r.row(i).to_vec())).collect()
    }
}

fn generalized_eigenspace(theta: &Matrix, l: &Rational, expected: usize) -> Result<Vec<Vec<Rational>>> {
    let dim = theta.rows();
    let m = theta - &Matrix::scalar(dim, l);
    let mut basis = m.kernel();
    loop {
        if basis.len() == expected {
            return Ok(basis);
        }
        // { v : M v in span(basis) }
        let mut cols = m.columns();
        cols.extend(basis.iter().map(|b| b.iter().map(|x| -x).collect::<Vec<_>>()));
        let stacked = Matrix::from_columns(dim, &cols);
        let pre: Vec<Vec<Rational>> = stacked.kernel().into_iter().map(|v| v[..dim].to_vec()).collect();
        let next = crate::linalg::span_basis(&pre);
        if next.len() <= basis.len() {
            return Err(Error::ConsistencyFailure(format!(
                "generalized eigenspace for {l} has dimension {} instead of {expected}",
                basis.len()
            )));
        }
        basis = next;
    }
}

/// Spectrum of `H'' / s H''` with respect to the filtration by eigenvalues
/// of `theta` (spectral number `alpha` sits at eigenvalue `alpha + 1`).
pub(crate) fn spectrum(model: &FiniteModel, sm: &SaturatedModel) -> Result<(Spectrum, Vec<(usize, Vec<Rational>)>)> {
    let mu = model.mu;
    let mut w = Vec::new();
    let mut sw = Vec::new();
    for k in 0..model.m {
        for i in 0..mu {
            let v = model.embed(&sm.embedding.cols[i], k);
            if k > 0 {
                sw.push(v.clone());
            }
            w.push(v);
        }
    }
    let we = model.adapted_echelon(&w);
    let se = model.adapted_echelon(&sw);
    let mut counts = vec![0i64; model.blocks.len()];
    for (b, _) in &we {
        counts[*b] += 1;
    }
    for (b, _) in &se {
        counts[*b] -= 1;
    }
    let mut values = Vec::new();
    for (b, c) in counts.iter().enumerate() {
        if *c < 0 {
            return Err(Error::ConsistencyFailure("negative spectral multiplicity".into()));
        }
        let alpha = &model.blocks[b].0 - Rational::one();
        values.extend(std::iter::repeat_n(alpha, *c as usize));
    }
    Ok((Spectrum::from_values(values), we))
}

/// Model of `C^0` as the eigenvalue `1 + k` part of `L / s^m L`, where `k`
/// is large enough that `s^k C^0` lies in `L`.
pub(crate) fn c0_structure(
    model: &FiniteModel,
    sm: &SaturatedModel,
    w_echelon: &[(usize, Vec<Rational>)],
    unit_index: usize,
    spectrum: &Spectrum,
) -> Result<C0Structure> {
    let alphas = spectrum.alphas();
    let alpha1 = alphas[0].clone();
    let alpha2 = alphas.get(1).cloned().unwrap_or_else(|| alpha1.clone());
    let kstar = sm.c0_shift();
    let lambda = Rational::from_integer((1 + kstar).into());
    let integer_total: usize = sm.exponents.iter().filter(|e| is_integer(&e.0)).map(|e| e.1).sum();
    let Some((start, dim)) = model.block(&lambda) else {
        if integer_total > 0 {
            return Err(Error::ConsistencyFailure("missing eigenvalue-one block".into()));
        }
        return Ok(C0Structure::trivial(alpha1, alpha2));
    };
    if dim != integer_total {
        return Err(Error::ConsistencyFailure("eigenvalue-one block has the wrong dimension".into()));
    }
    let project = |v: &[Rational]| -> Vec<Rational> { model.eigen_coords(v)[start..start + dim].to_vec() };
    // nilpotent part on the block, in block coordinates
    let mut n_image = Vec::new();
    for j in 0..dim {
        let e = model.eigvecs.column(start + j);
        let mut te = model.theta.mul_vec(&e);
        for (x, y) in te.iter_mut().zip(&e) {
            *x -= &lambda * y;
        }
        n_image.push(project(&te));
    }
    let mut h0 = Vec::new();
    for (b, row) in w_echelon {
        if model.blocks[*b].0 >= Rational::one() {
            let v = model.from_eigen(row);
            h0.push(project(&model.shift(&v, kstar)));
        }
    }
    let images: Vec<Vec<Rational>> =
        (0..model.mu).map(|i| project(&model.embed(&sm.embedding.cols[i], kstar))).collect();
    for i in 0..model.mu {
        let higher = project(&model.embed(&sm.embedding.cols[i], kstar + 1));
        if higher.iter().any(|x| !x.is_zero()) {
            return Err(Error::ConsistencyFailure("s H'' meets the eigenvalue-one block".into()));
        }
    }
    let d0 = images[unit_index].clone();
    let s_span: Vec<Vec<Rational>> =
        images.into_iter().enumerate().filter(|(i, _)| *i != unit_index).map(|e| e.1).collect();
    Ok(C0Structure::new(dim, crate::linalg::span_basis(&h0), crate::linalg::span_basis(&n_image), crate::linalg::span_basis(&s_span), d0, alpha1, alpha2))
}
