//! Polynomials as term vectors sorted decreasingly by a monomial order.
//! This is the working representation inside the division algorithms.

use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::rational::Rational;
use num_traits::Zero;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    pub fn new(p: &Polynomial, order: MonomialOrder) -> Self {
        SortedPoly { terms: p.sorted_terms(order) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &(Monomial, Rational) {
        &self.terms[0]
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn ecart(&self) -> u32 {
        self.max_degree() - self.lm().degree()
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    /// `self - c * m * other`, merging in order.
    pub fn sub_mul(&self, c: &Rational, m: &Monomial, other: &SortedPoly, order: MonomialOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b: Vec<(Monomial, Rational)> = other.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect();
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                order.cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), -b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].1 - &b[j].1;
                    if !v.is_zero() {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SortedPoly { terms: out }
    }

    /// Drops terms of degree above `bound`.
    pub fn truncate(&mut self, bound: u32) {
        self.terms.retain(|(m, _)| m.degree() <= bound);
    }

    pub fn normalize(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            let c = c.clone();
            for t in &mut self.terms {
                t.1 = &t.1 / &c;
            }
        }
    }
}
