use super::mora::{local_membership, standard_basis, StandardBasis};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use num_traits::Zero;
use std::collections::{BTreeSet, VecDeque};

/// Milnor algebra data of an isolated singularity: a local standard basis
/// of the Jacobian ideal and the standard monomials, with `1` first.
#[derive(Clone, Debug)]
pub struct MilnorData {
    pub jacobian_sb: StandardBasis,
    pub mu: usize,
    pub basis: Vec<Monomial>,
}

impl MilnorData {
    pub fn nvars(&self) -> usize {
        self.jacobian_sb.nvars()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }

    pub fn max_basis_degree(&self) -> u32 {
        self.basis.iter().map(Monomial::degree).max().unwrap_or(0)
    }
}

pub fn jacobian(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.nvars()).map(|i| f.diff(i)).collect()
}

/// Monomials outside the leading ideal, sorted by the local order (largest
/// first). `None` if the leading ideal misses a pure power of some variable.
pub fn standard_monomials(sb: &StandardBasis) -> Option<Vec<Monomial>> {
    let n = sb.nvars();
    let mut has_pure = vec![false; n];
    for l in sb.leading_monomials() {
        if l.is_one() {
            return Some(Vec::new());
        }
        if let Some(i) = l.pure_power_var() {
            has_pure[i] = true;
        }
    }
    if has_pure.iter().any(|&b| !b) {
        return None;
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let one = Monomial::one(n);
    if !sb.reduces(&one) {
        queue.push_back(one.clone());
        seen.insert(one);
    }
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let mut next = m.clone();
            next.0[i] += 1;
            if !seen.contains(&next) && !sb.reduces(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    let order = sb.order();
    out.sort_by(|a, b| order.cmp(b, a));
    Some(out)
}

/// Standard basis of `J_f`, Milnor number and monomial basis of `O/J_f`.
pub fn milnor_data(f: &Polynomial) -> Result<MilnorData> {
    if !f.constant_term().is_zero() {
        return Err(Error::NotThroughOrigin);
    }
    match f.m_adic_order() {
        None => return Err(Error::NonIsolated),
        Some(1) => return Err(Error::Smooth),
        _ => {}
    }
    let sb = standard_basis(&jacobian(f), MonomialOrder::NegDegRevLex);
    if sb.generators().is_empty() {
        return Err(Error::NonIsolated);
    }
    let basis = standard_monomials(&sb).ok_or(Error::NonIsolated)?;
    Ok(MilnorData { mu: basis.len(), basis, jacobian_sb: sb })
}

/// Saito's criterion: `f` is quasihomogeneous in suitable coordinates iff
/// `f` lies in its Jacobian ideal in the local ring.
pub fn is_quasihomogeneous(f: &Polynomial) -> Result<bool> {
    let md = milnor_data(f)?;
    Ok(is_quasihomogeneous_with(f, &md))
}

pub fn is_quasihomogeneous_with(f: &Polynomial, md: &MilnorData) -> bool {
    md.jacobian_sb.contains(f)
}

/// `dim O / (J_f + m^N)`, counted from a standard basis of the sum.
pub fn colength_with_power(f: &Polynomial, n: u32) -> usize {
    let nv = f.nvars();
    let mut gens = jacobian(f);
    for m in monomials_of_degree(nv, n) {
        gens.push(Polynomial::monomial(m, crate::rational::int(1)));
    }
    let sb = standard_basis(&gens, MonomialOrder::NegDegRevLex);
    standard_monomials(&sb).map(|b| b.len()).unwrap_or(usize::MAX)
}

pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// All monomials of total degree `< bound`, by degree then lexicographically.
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    (0..bound).flat_map(|d| monomials_of_degree(nvars, d)).collect()
}
