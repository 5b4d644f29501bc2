//! Syzygies of a polynomial tuple, via a module Gröbner basis with a
//! position-over-term order in the polynomial ring. Localization is flat,
//! so the result also generates the syzygies over the local ring.

use super::sorted::SortedPoly;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::rational::Rational;
use num_traits::One;

#[derive(Clone, Debug)]
pub struct SyzygyBasis {
    pub generators: Vec<Vec<Polynomial>>,
    /// False if s-pairs above the degree bound were skipped.
    pub complete: bool,
}

#[derive(Clone, Debug)]
struct ModElem {
    comps: Vec<SortedPoly>,
}

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

impl ModElem {
    fn lead(&self) -> Option<(usize, &Monomial, &Rational)> {
        self.comps
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, &c.lead().0, &c.lead().1))
    }

    fn sub_mul(&self, c: &Rational, m: &Monomial, other: &ModElem) -> ModElem {
        ModElem {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| if b.is_zero() { a.clone() } else { a.sub_mul(c, m, b, ORDER) })
                .collect(),
        }
    }

    fn scale_monomial(&self, c: &Rational, m: &Monomial) -> ModElem {
        let zero = SortedPoly { terms: vec![] };
        ModElem { comps: zero_like(self.comps.len(), &zero) }.sub_mul(&-c.clone(), m, self)
    }
}

fn zero_like(n: usize, z: &SortedPoly) -> Vec<SortedPoly> {
    vec![z.clone(); n]
}

fn top_reduce(mut h: ModElem, basis: &[ModElem]) -> ModElem {
    loop {
        let Some((pos, lm, lc)) = h.lead() else { return h };
        let lm = lm.clone();
        let lc = lc.clone();
        let found = basis.iter().find(|b| {
            let (bp, bm, _) = b.lead().unwrap();
            bp == pos && bm.divides(&lm)
        });
        match found {
            None => return h,
            Some(b) => {
                let (_, bm, bc) = b.lead().unwrap();
                let shift = bm.quotient_of(&lm).unwrap();
                h = h.sub_mul(&(&lc / bc), &shift, b);
            }
        }
    }
}

/// Generators of `{v : sum v_i gens_i = 0}`. Each returned tuple annihilates
/// `gens` exactly.
pub fn syzygies(gens: &[Polynomial], degree_bound: u32) -> SyzygyBasis {
    assert!(!gens.is_empty());
    let nv = gens[0].nvars();
    let k = gens.len();
    let mut basis: Vec<ModElem> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut comps = vec![SortedPoly { terms: vec![] }; k + 1];
            comps[0] = SortedPoly::new(g, ORDER);
            comps[i + 1] = SortedPoly::new(&Polynomial::one(nv), ORDER);
            ModElem { comps }
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut complete = true;
    while !pairs.is_empty() {
        let pos = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (i, j))| {
                let a = basis[*i].lead().unwrap().1;
                let b = basis[*j].lead().unwrap().1;
                (a.lcm(b).degree(), *j, *i)
            })
            .map(|(p, _)| p)
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let (pa, ma, ca) = basis[i].lead().unwrap();
        let (pb, mb, cb) = basis[j].lead().unwrap();
        if pa != pb {
            continue;
        }
        let l = ma.lcm(mb);
        if l.degree() > degree_bound {
            complete = false;
            continue;
        }
        let sa = ma.quotient_of(&l).unwrap();
        let sb = mb.quotient_of(&l).unwrap();
        let left = basis[i].scale_monomial(&(Rational::one() / ca), &sa);
        let s = left.sub_mul(&(Rational::one() / cb), &sb, &basis[j]);
        let h = top_reduce(s, &basis);
        if h.lead().is_some() {
            let new = basis.len();
            basis.push(h);
            for i in 0..new {
                pairs.push((i, new));
            }
        }
    }
    let generators = basis
        .iter()
        .filter(|b| b.comps[0].is_zero() && b.lead().is_some())
        .map(|b| b.comps[1..].iter().map(|c| c.to_poly(nv)).collect())
        .collect();
    SyzygyBasis { generators, complete }
}

/// `sum v_i gens_i`.
pub fn apply_syzygy(v: &[Polynomial], gens: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(gens[0].nvars());
    for (a, g) in v.iter().zip(gens) {
        acc = &acc + &(a * g);
    }
    acc
}
