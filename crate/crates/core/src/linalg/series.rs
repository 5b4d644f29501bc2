//! Truncated Laurent series in one variable `s` over the rationals.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// `sum coeffs[i] s^(start+i) + O(s^prec)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ser {
    start: i32,
    coeffs: Vec<Rational>,
    prec: i32,
}

impl Ser {
    pub fn zero(prec: i32) -> Self {
        Ser { start: prec, coeffs: Vec::new(), prec }
    }

    pub fn constant(c: Rational, prec: i32) -> Self {
        Self::from_coeffs(0, vec![c], prec)
    }

    pub fn from_coeffs(start: i32, coeffs: Vec<Rational>, prec: i32) -> Self {
        let mut s = Ser { start, coeffs, prec };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let keep = (self.prec - self.start).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.start = self.prec;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.start += lead as i32;
        }
    }

    pub fn prec(&self) -> i32 {
        self.prec
    }

    /// Valuation; equals `prec` when nothing nonzero is known.
    pub fn val(&self) -> i32 {
        self.start
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> Rational {
        if e < self.start {
            return Rational::zero();
        }
        self.coeffs.get((e - self.start) as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, prec: i32) -> Ser {
        Ser::from_coeffs(self.start, self.coeffs.clone(), prec.min(self.prec))
    }

    pub fn shift(&self, k: i32) -> Ser {
        Ser { start: self.start + k, coeffs: self.coeffs.clone(), prec: self.prec + k }
    }

    pub fn scale(&self, c: &Rational) -> Ser {
        if c.is_zero() {
            return Ser::zero(self.prec);
        }
        Ser { start: self.start, coeffs: self.coeffs.iter().map(|x| x * c).collect(), prec: self.prec }
    }

    /// `s d/ds`
    pub fn euler(&self) -> Ser {
        Ser::from_coeffs(
            self.start,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer((self.start + i as i32).into()))
                .collect(),
            self.prec,
        )
    }

    pub fn add(&self, o: &Ser) -> Ser {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Ser) -> Ser {
        self.combine(o, true)
    }

    fn combine(&self, o: &Ser, negate: bool) -> Ser {
        let prec = self.prec.min(o.prec);
        let start = self.start.min(o.start).min(prec);
        let len = (prec - start).max(0) as usize;
        let mut c = vec![Rational::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate() {
            let e = (self.start - start) as usize + i;
            if e < len {
                c[e] += x;
            }
        }
        for (i, x) in o.coeffs.iter().enumerate() {
            let e = (o.start - start) as usize + i;
            if e < len {
                if negate {
                    c[e] -= x;
                } else {
                    c[e] += x;
                }
            }
        }
        Ser::from_coeffs(start, c, prec)
    }

    pub fn mul(&self, o: &Ser) -> Ser {
        let prec = (self.start + o.prec).min(o.start + self.prec);
        let start = self.start + o.start;
        if start >= prec {
            return Ser::zero(prec);
        }
        let len = (prec - start) as usize;
        let mut c = vec![Rational::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.coeffs.iter().enumerate().take(len - i) {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        Ser::from_coeffs(start, c, prec)
    }

    /// `self - c * o`, for use in elimination.
    pub fn sub_mul(&self, c: &Ser, o: &Ser) -> Ser {
        self.sub(&c.mul(o))
    }

    /// Inverse; `None` if no nonzero coefficient is known.
    pub fn inv(&self) -> Option<Ser> {
        if self.is_zero() {
            return None;
        }
        let v = self.start;
        let rel = self.prec - v;
        let u0 = Rational::one() / &self.coeffs[0];
        let n = rel as usize;
        let mut out = vec![Rational::zero(); n];
        for k in 0..n {
            let mut acc = if k == 0 { Rational::one() } else { Rational::zero() };
            for j in 1..=k.min(self.coeffs.len() - 1) {
                if !self.coeffs[j].is_zero() {
                    acc -= &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = acc * &u0;
        }
        Some(Ser::from_coeffs(-v, out, -v + rel))
    }

    pub fn div(&self, o: &Ser) -> Option<Ser> {
        Some(self.mul(&o.inv()?))
    }
}

/// Matrix of truncated series, stored by columns.
#[derive(Clone, Debug)]
pub struct SerMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<Ser>>,
}

impl SerMatrix {
    pub fn identity(n: usize, prec: i32) -> Self {
        let cols = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { Ser::constant(Rational::one(), prec) } else { Ser::zero(prec) })
                    .collect()
            })
            .collect();
        SerMatrix { rows: n, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Ser {
        &self.cols[j][i]
    }

    /// Minimum known valuation over all entries.
    pub fn min_val(&self) -> i32 {
        self.cols.iter().flatten().map(Ser::val).min().unwrap_or(i32::MAX)
    }

    pub fn min_prec(&self) -> i32 {
        self.cols.iter().flatten().map(Ser::prec).min().unwrap_or(i32::MAX)
    }

    pub fn shift(&self, k: i32) -> SerMatrix {
        SerMatrix { rows: self.rows, cols: self.cols.iter().map(|c| c.iter().map(|x| x.shift(k)).collect()).collect() }
    }

    pub fn mul(&self, o: &SerMatrix) -> SerMatrix {
        assert_eq!(self.ncols(), o.rows);
        let cols = o
            .cols
            .iter()
            .map(|oc| {
                (0..self.rows)
                    .map(|i| {
                        let mut acc: Option<Ser> = None;
                        for (k, b) in oc.iter().enumerate() {
                            let a = &self.cols[k][i];
                            let p = a.mul(b);
                            acc = Some(match acc {
                                None => p,
                                Some(x) => x.add(&p),
                            });
                        }
                        acc.unwrap_or_else(|| Ser::zero(i32::MAX / 4))
                    })
                    .collect()
            })
            .collect();
        SerMatrix { rows: self.rows, cols }
    }

    /// Coefficient matrix of `s^e` as a dense rational matrix.
    pub fn coeff_matrix(&self, e: i32) -> super::Matrix {
        let mut m = super::Matrix::zeros(self.rows, self.ncols());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.coeff(e);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn inverse_of_geometric() {
        // 1/(1 - s) = 1 + s + s^2 + ...
        let a = Ser::from_coeffs(0, vec![int(1), int(-1)], 6);
        let b = a.inv().unwrap();
        assert_eq!(b, Ser::from_coeffs(0, vec![int(1); 6], 6));
        assert_eq!(a.mul(&b), Ser::constant(int(1), 6));
    }

    #[test]
    fn laurent_inverse_and_precision() {
        let a = Ser::from_coeffs(2, vec![int(2), int(1)], 5);
        let b = a.inv().unwrap();
        assert_eq!(b.val(), -2);
        assert_eq!(b.prec(), 1);
        assert_eq!(b.coeff(-2), rat(1, 2));
        assert_eq!(b.coeff(-1), rat(-1, 4));
        let one = a.mul(&b);
        assert_eq!(one.coeff(0), int(1));
        assert_eq!(one.prec(), 3);
    }

    #[test]
    fn euler_operator() {
        let a = Ser::from_coeffs(-1, vec![int(1), int(5), int(1)], 4);
        let e = a.euler();
        assert_eq!(e.coeff(-1), int(-1));
        assert_eq!(e.coeff(0), int(0));
        assert_eq!(e.coeff(1), int(1));
    }
}
