//! Mora normal forms and standard bases in the localization of `Q[x]` at
//! the origin.

use super::sorted::SortedPoly;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::rational::Rational;
use num_traits::{One, Zero};

/// A standard basis of an ideal of the local ring, for a local order.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    generators: Vec<Polynomial>,
    leading: Vec<Monomial>,
    order: MonomialOrder,
    nvars: usize,
    corner: Option<u32>,
}

/// Result of a Mora division: `unit * g = sum quotients_i * gen_i + normal_form`.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult {
    pub normal_form: Polynomial,
    pub quotients: Vec<Polynomial>,
    pub unit: Polynomial,
}

impl StandardBasis {
    /// Wraps generators that are already known to form a standard basis.
    pub fn from_generators_unchecked(generators: Vec<Polynomial>, order: MonomialOrder) -> Self {
        assert!(!generators.is_empty());
        let nvars = generators[0].nvars();
        let leading: Vec<Monomial> = generators
            .iter()
            .map(|g| g.leading_term(order).expect("nonzero generator").0.clone())
            .collect();
        let corner = staircase_top(&leading, nvars).filter(|_| order.is_local());
        StandardBasis { generators, leading, order, nvars, corner }
    }

    /// Largest degree of a monomial outside the leading ideal, when that
    /// ideal has finite colength and the order is local. Every element of
    /// `m^(corner + 1)` then lies in the ideal.
    pub fn corner(&self) -> Option<u32> {
        self.corner
    }

    /// Membership without a certificate; cuts tails at the corner.
    pub fn contains(&self, g: &Polynomial) -> bool {
        let basis: Vec<SortedPoly> = self.generators.iter().map(|p| SortedPoly::new(p, self.order)).collect();
        mora_nf(SortedPoly::new(g, self.order), &basis, self.order, self.corner).is_zero()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True if some leading monomial divides `m`.
    pub fn reduces(&self, m: &Monomial) -> bool {
        self.leading.iter().any(|l| l.divides(m))
    }
}

struct Tracked {
    poly: SortedPoly,
    unit: Polynomial,
    coeffs: Vec<Polynomial>,
}

/// Mora's normal form with ecart-based selection. Terminates for local
/// degree orders and returns the explicit unit.
pub fn mora_division(g: &Polynomial, sb: &StandardBasis) -> DivisionResult {
    let order = sb.order;
    let n = sb.nvars;
    let k = sb.generators.len();
    let mut pool: Vec<Tracked> = sb
        .generators
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut coeffs = vec![Polynomial::zero(n); k];
            coeffs[i] = Polynomial::one(n);
            Tracked { poly: SortedPoly::new(p, order), unit: Polynomial::zero(n), coeffs }
        })
        .collect();
    let mut h = Tracked {
        poly: SortedPoly::new(g, order),
        unit: Polynomial::one(n),
        coeffs: vec![Polynomial::zero(n); k],
    };
    while !h.poly.is_zero() {
        let lm = h.poly.lm().clone();
        let best = pool
            .iter()
            .enumerate()
            .filter(|(_, t)| t.poly.lm().divides(&lm))
            .min_by_key(|(_, t)| t.poly.ecart())
            .map(|(i, _)| i);
        let Some(bi) = best else { break };
        if pool[bi].poly.ecart() > h.poly.ecart() {
            pool.push(Tracked { poly: h.poly.clone(), unit: h.unit.clone(), coeffs: h.coeffs.clone() });
        }
        let f = &pool[bi];
        let shift = f.poly.lm().quotient_of(&lm).unwrap();
        let c = &h.poly.lead().1 / &f.poly.lead().1;
        h.poly = h.poly.sub_mul(&c, &shift, &f.poly, order);
        let neg = -c.clone();
        h.unit = &h.unit + &f.unit.mul_monomial(&shift, &neg);
        for (hc, fc) in h.coeffs.iter_mut().zip(&f.coeffs) {
            if !fc.is_zero() {
                *hc = &*hc + &fc.mul_monomial(&shift, &neg);
            }
        }
    }
    DivisionResult {
        normal_form: h.poly.to_poly(n),
        quotients: h.coeffs.iter().map(|q| -q).collect(),
        unit: h.unit,
    }
}

/// Weak normal form without bookkeeping; used inside the standard-basis
/// loop. With a corner, terms above it are dropped as they go.
fn mora_nf(g: SortedPoly, basis: &[SortedPoly], order: MonomialOrder, corner: Option<u32>) -> SortedPoly {
    let mut pool: Vec<SortedPoly> = basis.to_vec();
    let mut h = g;
    loop {
        if let Some(c) = corner {
            h.truncate(c);
        }
        if h.is_zero() {
            break;
        }
        let lm = h.lm().clone();
        let best = pool
            .iter()
            .enumerate()
            .filter(|(_, t)| t.lm().divides(&lm))
            .min_by_key(|(_, t)| t.ecart())
            .map(|(i, _)| i);
        let Some(bi) = best else { break };
        if pool[bi].ecart() > h.ecart() {
            pool.push(h.clone());
        }
        let f = &pool[bi];
        let shift = f.lm().quotient_of(&lm).unwrap();
        let c = &h.lead().1 / &f.lead().1;
        h = h.sub_mul(&c, &shift, f, order);
    }
    h
}

fn spoly(a: &SortedPoly, b: &SortedPoly, order: MonomialOrder) -> SortedPoly {
    let l = a.lm().lcm(b.lm());
    let ma = a.lm().quotient_of(&l).unwrap();
    let mb = b.lm().quotient_of(&l).unwrap();
    let left = SortedPoly { terms: Vec::new() }.sub_mul(&-(Rational::one() / &a.lead().1), &ma, a, order);
    left.sub_mul(&(Rational::one() / &b.lead().1), &mb, b, order)
}

/// Standard basis of the ideal generated by `gens` in the local ring
/// (Mora's tangent-cone algorithm with the product criterion), reduced to a
/// minimal set of leading monomials.
pub fn standard_basis(gens: &[Polynomial], order: MonomialOrder) -> StandardBasis {
    assert!(!gens.is_empty(), "standard_basis needs at least one generator");
    let nvars = gens[0].nvars();
    let mut basis: Vec<SortedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut s = SortedPoly::new(g, order);
            s.normalize();
            s
        })
        .collect();
    if basis.is_empty() {
        return StandardBasis { generators: vec![], leading: vec![], order, nvars, corner: None };
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    // once the leading monomials have finite colength, everything above the
    // staircase lies in the ideal (Nakayama), so tails can be cut there
    let mut corner = None;
    let update_corner = |basis: &mut Vec<SortedPoly>, corner: &mut Option<u32>| {
        if !order.is_local() {
            return;
        }
        let lms: Vec<Monomial> = basis.iter().map(|b| b.lm().clone()).collect();
        if let Some(c) = staircase_top(&lms, nvars) {
            *corner = Some(c);
            for b in basis.iter_mut() {
                if b.lm().degree() <= c {
                    b.truncate(c);
                }
            }
        }
    };
    update_corner(&mut basis, &mut corner);
    while let Some(pos) = pick_pair(&pairs, &basis) {
        let (i, j) = pairs.swap_remove(pos);
        if basis[i].lm().coprime(basis[j].lm()) {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        let mut h = mora_nf(s, &basis, order, corner);
        if !h.is_zero() {
            h.normalize();
            let new = basis.len();
            basis.push(h);
            for i in 0..new {
                pairs.push((i, new));
            }
            update_corner(&mut basis, &mut corner);
        }
    }
    // minimalize: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<SortedPoly> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, c)| {
            j != i && c.lm().divides(b.lm()) && (c.lm() != b.lm() || j < i)
        });
        if !redundant {
            keep.push(b.clone());
        }
    }
    keep.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    let generators: Vec<Polynomial> = keep.iter().map(|s| s.to_poly(nvars)).collect();
    let leading: Vec<Monomial> = keep.iter().map(|s| s.lm().clone()).collect();
    let corner = corner.and(staircase_top(&leading, nvars));
    StandardBasis { generators, leading, order, nvars, corner }
}

/// Largest degree of a monomial divisible by none of `lms`, if there are
/// finitely many such monomials.
fn staircase_top(lms: &[Monomial], nvars: usize) -> Option<u32> {
    if lms.iter().any(Monomial::is_one) {
        return Some(0);
    }
    let mut pure = vec![None; nvars];
    for l in lms {
        if let Some(i) = l.pure_power_var() {
            let d = l.degree();
            pure[i] = Some(pure[i].map_or(d, |p: u32| p.min(d)));
        }
    }
    let bounds: Vec<u32> = pure.into_iter().collect::<Option<_>>()?;
    // walk the box below the pure powers
    let mut top = 0;
    let mut e = vec![0u32; nvars];
    loop {
        let m = Monomial::from_exponents(&e);
        if !lms.iter().any(|l| l.divides(&m)) {
            top = top.max(m.degree());
        }
        let mut i = 0;
        while i < nvars && e[i] + 1 == bounds[i] {
            e[i] = 0;
            i += 1;
        }
        if i == nvars {
            break;
        }
        e[i] += 1;
    }
    Some(top)
}

fn pick_pair(pairs: &[(usize, usize)], basis: &[SortedPoly]) -> Option<usize> {
    // smallest lcm degree first (normal strategy by degree)
    pairs
        .iter()
        .enumerate()
        .min_by_key(|(_, (i, j))| (basis[*i].lm().lcm(basis[*j].lm()).degree(), *j, *i))
        .map(|(k, _)| k)
}

/// Ideal membership in the local ring, with the division certificate.
pub fn local_membership(g: &Polynomial, sb: &StandardBasis) -> (bool, DivisionResult) {
    let d = mora_division(g, sb);
    (d.normal_form.is_zero(), d)
}

/// Checks the exact identity `unit * g = sum q_i gen_i + nf`.
pub fn verify_division(g: &Polynomial, gens: &[Polynomial], d: &DivisionResult) -> bool {
    let mut rhs = d.normal_form.clone();
    for (q, gen) in d.quotients.iter().zip(gens) {
        rhs = &rhs + &(q * gen);
    }
    &d.unit * g == rhs && !d.unit.constant_term().is_zero()
}
