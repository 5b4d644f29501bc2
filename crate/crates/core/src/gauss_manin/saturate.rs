use super::{BrieskornModel, SaturatedModel};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Ser, SerMatrix, UPoly};
use crate::rational::Rational;

/// Column echelon form over `Q[[s]]` choosing pivots of least valuation.
/// Returns the pivot columns (one per row, all rows used) and for each the
/// pivot row and valuation. Precision is preserved because every column
/// lies in `s^v` times a lattice when `v` is the current least valuation.
fn echelon(mut cols: Vec<Vec<Ser>>, rows: usize) -> Option<(Vec<Vec<Ser>>, Vec<usize>, Vec<i32>)> {
    let mut used_row = vec![false; rows];
    let mut remaining: Vec<usize> = (0..cols.len()).collect();
    let mut out = Vec::with_capacity(rows);
    let mut prow = Vec::with_capacity(rows);
    let mut vals = Vec::with_capacity(rows);
    for _ in 0..rows {
        let mut best: Option<(i32, usize, usize)> = None;
        for (pos, &j) in remaining.iter().enumerate() {
            for i in (0..rows).filter(|&i| !used_row[i]) {
                let e = &cols[j][i];
                if e.is_zero() {
                    continue;
                }
                if best.is_none_or(|(v, _, _)| e.val() < v) {
                    best = Some((e.val(), pos, i));
                }
            }
        }
        let (v, pos, i) = best?;
        let j = remaining.swap_remove(pos);
        remaining.sort_unstable();
        let pivot_inv = cols[j][i].inv()?;
        let pivot_col = cols[j].clone();
        for &jj in &remaining {
            if cols[jj][i].is_zero() {
                continue;
            }
            let q = cols[jj][i].mul(&pivot_inv);
            let col = &mut cols[jj];
            for (r, x) in col.iter_mut().enumerate() {
                if !pivot_col[r].is_zero() {
                    *x = x.sub_mul(&q, &pivot_col[r]);
                }
            }
            // exact cancellation in the pivot row
            col[i] = Ser::zero(col[i].prec());
        }
        used_row[i] = true;
        out.push(pivot_col);
        prow.push(i);
        vals.push(v);
    }
    Some((out, prow, vals))
}

/// Solves `B X = Y` for `B` in the echelon shape produced above.
fn solve_echelon(b: &[Vec<Ser>], prow: &[usize], y: &[Vec<Ser>]) -> Option<Vec<Vec<Ser>>> {
    let n = prow.len();
    let invs: Vec<Ser> = (0..n).map(|r| b[r][prow[r]].inv()).collect::<Option<_>>()?;
    Some(
        y.iter()
            .map(|ycol| {
                let mut x: Vec<Ser> = Vec::with_capacity(n);
                for r in 0..n {
                    let mut acc = ycol[prow[r]].clone();
                    for (rp, xr) in x.iter().enumerate() {
                        let c = &b[rp][prow[r]];
                        if !c.is_zero() && !xr.is_zero() {
                            acc = acc.sub_mul(c, xr);
                        }
                    }
                    x.push(acc.mul(&invs[r]));
                }
                x
            })
            .collect(),
    )
}

/// `A B + s^2 B' - s J B`, the generators of `s^(J+1) theta L` for
/// `L = s^-J span(B)`.
fn theta_images(a: &SerMatrix, b: &[Vec<Ser>], shift: i32) -> Vec<Vec<Ser>> {
    let bm = SerMatrix { rows: a.rows, cols: b.to_vec() };
    let ab = a.mul(&bm);
    let j = Rational::from_integer(shift.into());
    ab.cols
        .iter()
        .zip(b)
        .map(|(abc, bc)| {
            abc.iter()
                .zip(bc)
                .map(|(x, y)| x.add(&y.euler().shift(1)).sub(&y.shift(1).scale(&j)))
                .collect()
        })
        .collect()
}

fn truncation(bm: &BrieskornModel, reason: &str) -> Error {
    Error::TruncationInsufficient { k: bm.t_matrix.order(), dx: bm.x_degree_bound, reason: reason.into() }
}

/// Saturation `L = sum_j theta^j H''` of the Brieskorn lattice under
/// `theta = d_t t`, with the matrix of `theta` on `L`.
pub fn saturate(bm: &BrieskornModel) -> Result<SaturatedModel> {
    let mu = bm.milnor.mu;
    let order = bm.t_matrix.order() as i32;
    let prec = order + 1;
    let a = SerMatrix {
        rows: mu,
        cols: (0..mu)
            .map(|j| {
                (0..mu)
                    .map(|i| {
                        let c: Vec<Rational> = bm.t_matrix.coeffs.iter().map(|m| m[(i, j)].clone()).collect();
                        Ser::from_coeffs(0, c, prec)
                    })
                    .collect()
            })
            .collect(),
    };
    let mut basis: Vec<Vec<Ser>> = SerMatrix::identity(mu, prec).cols;
    let mut prow: Vec<usize> = (0..mu).collect();
    let mut shift = 0i32;
    let mut index = 0i32;
    let mut steps = 0;
    loop {
        if steps > mu + 1 {
            return Err(truncation(bm, "saturation did not stabilize"));
        }
        let mut gens: Vec<Vec<Ser>> = basis.iter().map(|c| c.iter().map(|x| x.shift(1)).collect()).collect();
        gens.extend(theta_images(&a, &basis, shift));
        let (nb, np, vals) = echelon(gens, mu).ok_or_else(|| truncation(bm, "lattice lost rank"))?;
        let lowest = *vals.iter().min().unwrap();
        let new_shift = shift + 1 - lowest;
        let new_index: i32 = vals.iter().map(|v| v - lowest).sum::<i32>() - mu as i32 * new_shift;
        if new_index == index {
            break;
        }
        if new_index > index {
            return Err(truncation(bm, "saturation shrank the lattice"));
        }
        basis = nb.into_iter().map(|c| c.into_iter().map(|x| x.shift(-lowest)).collect()).collect();
        prow = np;
        shift = new_shift;
        index = new_index;
        steps += 1;
    }
    finish(bm, &a, basis, prow, shift, steps)
}

fn finish(
    bm: &BrieskornModel,
    a: &SerMatrix,
    basis: Vec<Vec<Ser>>,
    prow: Vec<usize>,
    shift: i32,
    steps: usize,
) -> Result<SaturatedModel> {
    let mu = bm.milnor.mu;
    let y = theta_images(a, &basis, shift);
    let t: Vec<Vec<Ser>> = solve_echelon(&basis, &prow, &y)
        .ok_or_else(|| truncation(bm, "singular lattice basis"))?
        .into_iter()
        .map(|c| c.into_iter().map(|x| x.shift(-1)).collect())
        .collect();
    let t = SerMatrix { rows: mu, cols: t };
    if t.min_val() < 0 {
        return Err(truncation(bm, "operator has a pole on the saturated lattice"));
    }
    let rhs = SerMatrix::identity(mu, i32::MAX / 4).shift(shift).cols;
    let phi = SerMatrix {
        rows: mu,
        cols: solve_echelon(&basis, &prow, &rhs).ok_or_else(|| truncation(bm, "singular lattice basis"))?,
    };
    if phi.min_val() < 0 {
        return Err(truncation(bm, "Brieskorn lattice not contained in its saturation"));
    }
    let b = SerMatrix { rows: mu, cols: basis };
    let hpp_shift = (shift - b.min_val()).max(0);
    let residue = t.coeff_matrix(0);
    let exponents = rational_exponents(&residue)?;
    Ok(SaturatedModel {
        operator: t,
        embedding: phi,
        basis: b,
        shift,
        hpp_shift,
        residue,
        exponents,
        steps,
    })
}

/// Eigenvalues of the residue with algebraic multiplicities.
pub fn rational_exponents(r: &Matrix) -> Result<Vec<(Rational, usize)>> {
    let cp = UPoly::new(r.charpoly());
    let (roots, rest) = cp.rational_roots();
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::IrrationalExponent);
    }
    Ok(roots
        .into_iter()
        .map(|x| {
            let m = cp.root_multiplicity(&x);
            (x, m)
        })
        .collect())
}
