use super::{BrieskornModel, SeriesMatrix};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::local::{MilnorData, TruncatedReducer};
use crate::poly::Polynomial;

/// Matrix of `t` on the Brieskorn lattice in the basis `[m_i dx]`, exact up
/// to `s^K`. `t[g dx] = [f g dx]` is reduced as
/// `f g = sum c_j m_j + sum_l a_l d_l f`, which contributes `c` at the current
/// level and leaves `[(sum_l d_l a_l) dx]` for the next power of `s`.
///
/// `x_degree` is a lower bound for the truncation `m^Dx`; it is raised to the
/// degree needed for exactness.
pub fn t_matrix(md: &MilnorData, f: &Polynomial, k: usize, x_degree: u32) -> Result<BrieskornModel> {
    if k < 1 {
        return Err(Error::Precondition("truncation order must be at least 1".into()));
    }
    let total = f.total_degree().unwrap_or(0);
    let floor = md.max_basis_degree() + 2;
    let mut bound = x_degree.max(total).max(floor);
    let mut reducer = TruncatedReducer::new(f, md, bound)?;
    let needed = k as u32 * reducer.precision_loss() + floor;
    if needed > bound {
        bound = needed;
        reducer = TruncatedReducer::new(f, md, bound)?;
    }
    let loss = reducer.precision_loss();
    let mu = md.mu;
    let mut coeffs = vec![Matrix::zeros(mu, mu); k + 1];
    for (i, m) in md.basis.iter().enumerate() {
        let g = f.mul_monomial(m, &crate::rational::int(1));
        let mut dense = reducer.to_dense(&g);
        let mut level_bound = bound;
        for a in coeffs.iter_mut() {
            let red = reducer.reduce(&mut dense, level_bound);
            a.set_column(i, &red.coeffs);
            dense = red.divergence;
            level_bound = level_bound.saturating_sub(loss);
        }
    }
    Ok(BrieskornModel { milnor: md.clone(), t_matrix: SeriesMatrix { coeffs }, x_degree_bound: bound })
}
