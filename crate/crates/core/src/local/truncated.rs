//! Division modulo the Jacobian ideal inside `Q[x]/m^D`.
//!
//! Once `m^N` lies in the Jacobian ideal, every local computation can be
//! carried out in the finite-dimensional algebra `Q[x]/m^D` for `D > N`.
//! There the local order is a well-order on finitely many monomials, so
//! Buchberger's algorithm and plain top-reduction terminate without units.
//! Each standard-basis element carries cofactors with respect to the
//! partial derivatives of `f`, which is what the Brieskorn lattice needs.

use super::milnor::{monomials_below, MilnorData};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::HashMap;

type Sparse = Vec<(u32, Rational)>;

#[derive(Clone, Debug)]
struct Elem {
    terms: Sparse,
    cof: Vec<Sparse>,
    div: Sparse,
}

/// Reducer for `g = sum c_j m_j + sum_l a_l d_l f  (mod m^D)` returning the
/// constants `c_j` and the divergence `sum_l d_l a_l`.
#[derive(Clone, Debug)]
pub struct TruncatedReducer {
    nvars: usize,
    bound: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    /// `count_below[d]` = number of monomials of degree `< d`.
    count_below: Vec<usize>,
    elems: Vec<Elem>,
    rule: Vec<Rule>,
    mu: usize,
    loss: u32,
}

#[derive(Clone, Debug)]
enum Rule {
    Basis(usize),
    Reduce { elem: usize, shift: Monomial },
}

/// Result of one reduction step.
pub struct Reduction {
    pub coeffs: Vec<Rational>,
    pub divergence: Vec<Rational>,
}

impl TruncatedReducer {
    pub fn new(f: &Polynomial, md: &MilnorData, bound: u32) -> Result<Self> {
        let nvars = f.nvars();
        if bound <= md.max_basis_degree() + 1 {
            return Err(Error::Precondition(format!(
                "x-degree bound {bound} must exceed {}",
                md.max_basis_degree() + 1
            )));
        }
        let order = MonomialOrder::NegDegRevLex;
        let mut monos = monomials_below(nvars, bound);
        monos.sort_by(|a, b| order.cmp(b, a));
        let degs: Vec<u32> = monos.iter().map(Monomial::degree).collect();
        let index: HashMap<Monomial, u32> =
            monos.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        let mut count_below = vec![0usize; bound as usize + 1];
        for d in 0..=bound as usize {
            count_below[d] = degs.iter().filter(|&&e| (e as usize) < d).count();
        }
        let mut r = TruncatedReducer {
            nvars,
            bound,
            monos,
            index,
            count_below,
            elems: Vec::new(),
            rule: Vec::new(),
            mu: md.mu,
            loss: 0,
        };
        r.build_basis(f);
        r.build_rules(md)?;
        Ok(r)
    }

    /// Degrees of exactness lost by one reduction: a remainder known modulo
    /// `m^b` yields a divergence known modulo `m^(b - loss)`.
    pub fn precision_loss(&self) -> u32 {
        self.loss
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monos[i]
    }

    pub fn count_below(&self, d: u32) -> usize {
        self.count_below[(d.min(self.bound)) as usize]
    }

    fn idx(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }

    pub fn to_sparse(&self, p: &Polynomial) -> Vec<(u32, Rational)> {
        let mut v: Sparse = p
            .terms()
            .filter_map(|(m, c)| self.idx(m).map(|i| (i, c.clone())))
            .collect();
        v.sort_by_key(|t| t.0);
        v
    }

    pub fn to_dense(&self, p: &Polynomial) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.monos.len()];
        for (i, c) in self.to_sparse(p) {
            v[i as usize] = c;
        }
        v
    }

    pub fn from_dense(&self, v: &[Rational]) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.monos[i].clone(), c.clone())),
        )
    }

    /// `a - c * m * b`, truncated; both inputs sorted by index.
    fn sub_mul(&self, a: &Sparse, c: &Rational, m: &Monomial, b: &Sparse) -> Sparse {
        let shifted: Sparse = b
            .iter()
            .filter_map(|(i, k)| {
                let t = self.monos[*i as usize].mul(m);
                self.idx(&t).map(|j| (j, k * c))
            })
            .collect();
        merge_sub(a, &shifted)
    }

    fn build_basis(&mut self, f: &Polynomial) {
        let n = self.nvars;
        let mut elems: Vec<Elem> = Vec::new();
        for l in 0..n {
            let d = f.diff(l);
            let terms = self.to_sparse(&d);
            if terms.is_empty() {
                continue;
            }
            let mut cof = vec![Vec::new(); n];
            cof[l] = vec![(0u32, Rational::one())];
            elems.push(Elem { terms, cof, div: Vec::new() });
        }
        for e in &mut elems {
            normalize(e);
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 1..elems.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        while !pairs.is_empty() {
            let pos = pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, (i, j))| {
                    let a = &self.monos[elems[*i].terms[0].0 as usize];
                    let b = &self.monos[elems[*j].terms[0].0 as usize];
                    (a.lcm(b).degree(), *j, *i)
                })
                .map(|(p, _)| p)
                .unwrap();
            let (i, j) = pairs.swap_remove(pos);
            let ma = self.monos[elems[i].terms[0].0 as usize].clone();
            let mb = self.monos[elems[j].terms[0].0 as usize].clone();
            if ma.coprime(&mb) {
                continue;
            }
            let l = ma.lcm(&mb);
            if l.degree() >= self.bound {
                continue;
            }
            let sa = ma.quotient_of(&l).unwrap();
            let sb = mb.quotient_of(&l).unwrap();
            // leading coefficients are normalized to one
            let mut h = Elem { terms: Vec::new(), cof: vec![Vec::new(); n], div: Vec::new() };
            let minus_one = -Rational::one();
            h = self.elem_sub_mul(&h, &minus_one, &sa, &elems[i]);
            h = self.elem_sub_mul(&h, &Rational::one(), &sb, &elems[j]);
            let h = self.top_reduce(h, &elems);
            if !h.terms.is_empty() {
                let mut h = h;
                normalize(&mut h);
                let new = elems.len();
                elems.push(h);
                for i in 0..new {
                    pairs.push((i, new));
                }
            }
        }
        // minimal leading monomials
        let leads: Vec<Monomial> =
            elems.iter().map(|e| self.monos[e.terms[0].0 as usize].clone()).collect();
        let mut keep = Vec::new();
        for (i, e) in elems.iter().enumerate() {
            let redundant = leads.iter().enumerate().any(|(j, l)| {
                j != i && l.divides(&leads[i]) && (l != &leads[i] || j < i)
            });
            if !redundant {
                keep.push(e.clone());
            }
        }
        let mut loss = 1;
        for e in &mut keep {
            e.div = self.divergence_of(&e.cof);
            let lead = self.monos[e.terms[0].0 as usize].degree();
            let ord = e
                .cof
                .iter()
                .filter_map(|a| a.iter().map(|t| self.monos[t.0 as usize].degree()).min())
                .min()
                .unwrap_or(lead);
            loss = loss.max(lead + 1 - ord.min(lead));
        }
        self.loss = loss;
        self.elems = keep;
    }

    fn elem_sub_mul(&self, a: &Elem, c: &Rational, m: &Monomial, b: &Elem) -> Elem {
        Elem {
            terms: self.sub_mul(&a.terms, c, m, &b.terms),
            cof: a
                .cof
                .iter()
                .zip(&b.cof)
                .map(|(x, y)| if y.is_empty() { x.clone() } else { self.sub_mul(x, c, m, y) })
                .collect(),
            div: Vec::new(),
        }
    }

    fn top_reduce(&self, mut h: Elem, elems: &[Elem]) -> Elem {
        while let Some((li, lc)) = h.terms.first().cloned() {
            let lm = &self.monos[li as usize];
            let found = elems
                .iter()
                .filter(|e| self.monos[e.terms[0].0 as usize].divides(lm))
                .min_by_key(|e| e.terms.len());
            match found {
                None => break,
                Some(e) => {
                    let shift = self.monos[e.terms[0].0 as usize].quotient_of(lm).unwrap();
                    h = self.elem_sub_mul(&h, &lc, &shift, e);
                }
            }
        }
        h
    }

    fn divergence_of(&self, cof: &[Sparse]) -> Sparse {
        let mut acc: HashMap<u32, Rational> = HashMap::new();
        for (l, a) in cof.iter().enumerate() {
            for (i, c) in a {
                let m = &self.monos[*i as usize];
                if m.0[l] == 0 {
                    continue;
                }
                let mut d = m.clone();
                d.0[l] -= 1;
                let j = self.idx(&d).unwrap();
                *acc.entry(j).or_insert_with(Rational::zero) +=
                    c * Rational::from_integer(m.0[l].into());
            }
        }
        let mut v: Sparse = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|t| t.0);
        v
    }

    fn build_rules(&mut self, md: &MilnorData) -> Result<()> {
        let leads: Vec<Monomial> =
            self.elems.iter().map(|e| self.monos[e.terms[0].0 as usize].clone()).collect();
        let mut rule = Vec::with_capacity(self.monos.len());
        let mut seen_basis = 0;
        for m in &self.monos {
            let choice = leads
                .iter()
                .enumerate()
                .filter(|(_, l)| l.divides(m))
                .min_by_key(|(e, _)| self.elems[*e].terms.len());
            match choice {
                Some((e, l)) => rule.push(Rule::Reduce { elem: e, shift: l.quotient_of(m).unwrap() }),
                None => {
                    let pos = md.position(m).ok_or_else(|| {
                        Error::ConsistencyFailure(format!(
                            "truncated standard basis disagrees with the Milnor basis at {m:?}"
                        ))
                    })?;
                    seen_basis += 1;
                    rule.push(Rule::Basis(pos));
                }
            }
        }
        if seen_basis != md.mu {
            return Err(Error::ConsistencyFailure(
                "truncated standard basis has the wrong colength".into(),
            ));
        }
        self.rule = rule;
        Ok(())
    }

    /// Reduces `g` (dense, only degrees `< bound` are read) and returns the
    /// Milnor-basis coefficients and the divergence of the cofactors,
    /// truncated to degree `< bound - loss`.
    pub fn reduce(&self, g: &mut [Rational], bound: u32) -> Reduction {
        let bound = bound.min(self.bound);
        let limit = self.count_below(bound);
        let mut coeffs = vec![Rational::zero(); self.mu];
        let mut quot: Vec<HashMap<u32, Rational>> = vec![HashMap::new(); self.elems.len()];
        for i in 0..limit {
            if g[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut g[i], Rational::zero());
            match &self.rule[i] {
                Rule::Basis(pos) => coeffs[*pos] = c,
                Rule::Reduce { elem, shift } => {
                    let e = &self.elems[*elem];
                    for (t, k) in &e.terms[1..] {
                        let m = self.monos[*t as usize].mul(shift);
                        if m.degree() >= bound {
                            continue;
                        }
                        let j = self.index[&m] as usize;
                        g[j] -= &c * k;
                    }
                    let si = self.index[shift];
                    *quot[*elem].entry(si).or_insert_with(Rational::zero) += c;
                }
            }
        }
        // divergence of sum_e q_e * cof_e = sum_e q_e div(cof_e) + sum_l d_l(q_e) cof_{e,l}
        let dbound = bound.saturating_sub(self.loss);
        let mut d = vec![Rational::zero(); self.count_below(dbound)];
        for (e, q) in self.elems.iter().zip(&quot) {
            for (qi, qc) in q {
                if qc.is_zero() {
                    continue;
                }
                let qm = &self.monos[*qi as usize];
                for (t, k) in &e.div {
                    let m = qm.mul(&self.monos[*t as usize]);
                    if m.degree() < dbound {
                        d[self.index[&m] as usize] += qc * k;
                    }
                }
                for (l, cof) in e.cof.iter().enumerate() {
                    let el = qm.0[l];
                    if el == 0 || cof.is_empty() {
                        continue;
                    }
                    let mut dq = qm.clone();
                    dq.0[l] -= 1;
                    let scale = qc * Rational::from_integer(el.into());
                    for (t, k) in cof {
                        let m = dq.mul(&self.monos[*t as usize]);
                        if m.degree() < dbound {
                            d[self.index[&m] as usize] += &scale * k;
                        }
                    }
                }
            }
        }
        Reduction { coeffs, divergence: d }
    }
}

fn normalize(e: &mut Elem) {
    let c = e.terms[0].1.clone();
    if c.is_one() {
        return;
    }
    let inv = Rational::one() / c;
    for t in &mut e.terms {
        t.1 = &t.1 * &inv;
    }
    for a in &mut e.cof {
        for t in a.iter_mut() {
            t.1 = &t.1 * &inv;
        }
    }
}

fn merge_sub(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -b[j].1.clone()));
            j += 1;
        } else {
            let v = &a[i].1 - &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
