//! Univariate polynomials over the rationals.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Rational::one()])
    }

    /// `x - r`
    pub fn linear(r: &Rational) -> Self {
        UPoly(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> UPoly {
        match self.lead() {
            None => UPoly::zero(),
            Some(l) => {
                let inv = Rational::one() / l;
                UPoly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let z = Rational::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        let inv = Rational::one() / d.lead().unwrap();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        let mut p = self.clone();
        let lin = UPoly::linear(r);
        let mut m = 0;
        while !p.is_zero() {
            let (q, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    /// Distinct rational roots in increasing order, and the part of the
    /// squarefree kernel left after removing them.
    pub fn rational_roots(&self) -> (Vec<Rational>, UPoly) {
        let mut p = self.squarefree_part();
        let mut roots = Vec::new();
        if p.is_zero() {
            return (roots, p);
        }
        if p.0[0].is_zero() {
            roots.push(Rational::zero());
            p = p.div_rem(&UPoly::linear(&Rational::zero())).0;
        }
        // small denominators first; roots found shrink the leading coefficient
        let mut q: i64 = 1;
        while p.degree().unwrap_or(0) > 0 {
            let ints = p.primitive_integer();
            let lead = ints.last().unwrap().abs();
            if BigInt::from(q) > lead {
                break;
            }
            let amax = (fujiwara_bound(&p) * Rational::from_integer(q.into())).ceil().to_integer();
            if q > SMALL_DENOMINATORS || amax > BigInt::from(MAX_NUMERATORS) {
                p = by_divisors(p, &mut roots);
                break;
            }
            if !(&lead % q).is_zero() {
                q += 1;
                continue;
            }
            let amax: i64 = amax.try_into().unwrap();
            let residues = ModP::new(&ints);
            let hit = (-amax..=amax).filter(|a| a.gcd(&q) == 1).find_map(|a| {
                let c = Rational::new(a.into(), q.into());
                (residues.may_vanish(a, q) && p.eval(&c).is_zero()).then_some(c)
            });
            match hit {
                Some(c) => {
                    p = p.div_rem(&UPoly::linear(&c)).0;
                    roots.push(c);
                }
                None => q += 1,
            }
        }
        roots.sort();
        (roots, p.monic())
    }

    fn primitive_integer(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.0 {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        ints.into_iter().map(|c| c / &g).collect()
    }
}

const SMALL_DENOMINATORS: i64 = 10_000;
const MAX_NUMERATORS: i64 = 10_000_000;

/// Rational root test over all divisor pairs of the remaining polynomial.
fn by_divisors(mut p: UPoly, roots: &mut Vec<Rational>) -> UPoly {
    let ints = p.primitive_integer();
    let dens = divisors(ints.last().unwrap());
    let nums = divisors(&ints[0]);
    let bound = fujiwara_bound(&p);
    for q in &dens {
        for a in &nums {
            if p.degree().unwrap_or(0) == 0 {
                return p;
            }
            let cand = Rational::new(a.clone(), q.clone());
            if cand > bound {
                continue;
            }
            for c in [cand.clone(), -cand] {
                if !roots.contains(&c) && p.eval(&c).is_zero() {
                    p = p.div_rem(&UPoly::linear(&c)).0;
                    roots.push(c);
                }
            }
        }
    }
    p
}

/// Integer coefficients reduced modulo a 61-bit prime, for a cheap
/// necessary test before exact evaluation.
struct ModP(Vec<u64>);

const PRIME: u64 = (1 << 61) - 1;

impl ModP {
    fn new(ints: &[BigInt]) -> Self {
        let m = BigInt::from(PRIME);
        ModP(ints.iter().map(|c| c.mod_floor(&m).try_into().unwrap()).collect())
    }

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % PRIME as u128) as u64
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = Self::mul(r, b);
            }
            b = Self::mul(b, b);
            e >>= 1;
        }
        r
    }

    /// false only if `a/q` is certainly not a root
    fn may_vanish(&self, a: i64, q: i64) -> bool {
        let x = Self::mul(a.rem_euclid(PRIME as i64) as u64, Self::pow(q as u64, PRIME - 2));
        self.0.iter().rev().fold(0, |acc, &c| (Self::mul(acc, x) + c) % PRIME) == 0
    }
}

/// `2 max |c_{d-i}/c_d|^{1/i}` bounds every root's absolute value.
fn fujiwara_bound(p: &UPoly) -> Rational {
    let d = p.degree().unwrap();
    let lead = p.lead().unwrap();
    let mut best = Rational::zero();
    for i in 1..=d {
        let r = (&p.0[d - i] / lead).abs();
        // smallest integer k with k^i >= r
        let mut k = BigInt::zero();
        while Rational::from_integer(num_traits::pow(k.clone(), i)) < r {
            k += 1;
        }
        let k = Rational::from_integer(k);
        if k > best {
            best = k;
        }
    }
    best * Rational::from_integer(2.into())
}

/// Positive divisors by trial division; large prime cofactors are kept as
/// a single factor.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= n && p < limit {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}
