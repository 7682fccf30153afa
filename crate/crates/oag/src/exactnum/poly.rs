//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored low degree first. The zero polynomial is the
//! empty vector. These are the workhorse for resultants, Sturm sequences and
//! factorization; performance targets desk-scale degrees (≤ ~40).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::new(vec![BigInt::one()])
    }

    /// x - r for rational r, cleared to integer coefficients: q*x - p.
    pub fn linear_from_root(r: &Rat) -> Self {
        IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        if self.coeffs.is_empty() {
            0
        } else {
            self.coeffs.len() - 1
        }
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval evaluation: image bounds of the polynomial over [lo, hi].
    /// Coarse (per-monomial) but sound.
    pub fn eval_interval(&self, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
        let mut sum_lo = Rat::zero();
        let mut sum_hi = Rat::zero();
        let mut pw_lo = Rat::one();
        let mut pw_hi = Rat::one();
        for c in &self.coeffs {
            let c = Rat::from_integer(c.clone());
            let (t_lo, t_hi) = if c.is_negative() {
                (&c * &pw_hi, &c * &pw_lo)
            } else {
                (&c * &pw_lo, &c * &pw_hi)
            };
            sum_lo += t_lo;
            sum_hi += t_hi;
            // next power interval
            let cands = [&pw_lo * lo, &pw_lo * hi, &pw_hi * lo, &pw_hi * hi];
            pw_lo = cands.iter().min().unwrap().clone();
            pw_hi = cands.iter().max().unwrap().clone();
        }
        (sum_lo, sum_hi)
    }

    /// Content: gcd of coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder with the exact classical scaling:
    /// lc(d)^(deg self - deg d + 1) * self = q*d + r.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dd = d.degree();
        let lc_d = d.lc();
        if r.is_zero() || r.degree() < dd {
            return r;
        }
        let mut remaining = (self.degree() - dd + 1) as i64;
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let lc_r = r.lc();
            // r = lc_d * r - lc_r * x^shift * d
            let mut new = r.scale(&lc_d);
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(d.coeffs.iter().map(|c| c * &lc_r));
            new = new.sub(&IntPoly::new(sub));
            debug_assert!(new.is_zero() || new.degree() < r.degree());
            r = new;
            remaining -= 1;
        }
        // Pad to the full lc^(da-db+1) multiplier so callers can rely on it.
        for _ in 0..remaining {
            r = r.scale(&lc_d);
        }
        r
    }

    /// Exact division; panics if not divisible (use only when divisibility is
    /// guaranteed or pre-checked via `try_div_exact`).
    pub fn div_exact(&self, d: &Self) -> Self {
        self.try_div_exact(d)
            .expect("polynomial division was not exact")
    }

    /// Exact division over ℤ, returning None if it fails.
    pub fn try_div_exact(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if d.is_zero() || self.degree() < d.degree() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let n = self.degree();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let num = r[k + dd].clone();
            if num.is_zero() {
                continue;
            }
            let (c, rem) = num.div_rem(&d.lc());
            if !rem.is_zero() {
                return None;
            }
            q[k] = c.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    /// GCD over ℚ, returned as a primitive integer polynomial (subresultant-free
    /// primitive PRS; fine at these degrees).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Squarefree part: self / gcd(self, self'), primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        self.primitive().div_exact(&g.primitive()).primitive()
    }

    /// Resultant of two integer polynomials (primitive PRS based).
    pub fn resultant(&self, other: &Self) -> BigInt {
        resultant_prs(self, other)
    }

    /// Composition p(q(x)).
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&IntPoly::new(vec![c.clone()]));
        }
        acc
    }

    /// Cauchy root bound: all real roots lie in (-B, B).
    pub fn root_bound(&self) -> Rat {
        assert!(!self.is_zero());
        let lc = self.lc().abs();
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = Rat::new(c.abs(), lc.clone());
            if q > max {
                max = q;
            }
        }
        max + Rat::one()
    }
}

/// Resultant via primitive polynomial remainder sequence with the standard
/// correction factors.
fn resultant_prs(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut sign = BigInt::one();
    // res(a,b) accumulated scaling: keep track of a rational factor num/den.
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign = -sign;
        }
    }
    loop {
        if b.is_zero() {
            return BigInt::zero();
        }
        if b.degree() == 0 {
            // res(a, c) = c^deg(a)
            let c = b.lc();
            let mut r = BigInt::one();
            for _ in 0..a.degree() {
                r *= &c;
            }
            let total = sign * num * r;
            let (q, rem) = total.div_rem(&den);
            debug_assert!(rem.is_zero(), "resultant scaling must divide exactly");
            return q;
        }
        // pseudo remainder: lc(b)^(da-db+1) a = q b + r
        let da = a.degree();
        let db = b.degree();
        let r = a.pseudo_rem(&b);
        // res(a,b) = lc(b)^(da - dr) * res(b, r") relations:
        // From lc(b)^(da-db+1) a ≡ r (mod b):
        //   res(b, lc^k a) = lc^{k*db} res(b,a) and res(b,r) accordingly.
        let k = (da - db + 1) as u32;
        // res(a,b) = (-1)^{da*db} res(b,a)
        if (da * db) % 2 == 1 {
            sign = -sign;
        }
        // res(b, a) = res(b, r) / lc(b)^{k*db - (da - dr)*?}
        // Use: res(b, lc(b)^k * a) = lc(b)^{k*db} res(b, a)
        //      res(b, lc(b)^k * a) = res(b, r) * lc(b)^{?}  -- since
        //      lc^k a = q b + r, res(b, lc^k a) = lc(b)^{deg(lc^k a) - deg r} ...
        // Simpler standard identity: res(b, r) = res(b, lc^k a) = lc(b)^{k db} res(b, a)
        // but deg r < db <= deg(lc^k a): res(b, x) for x ≡ y (mod b) satisfies
        // res(b, x) = lc(b)^{deg x - deg y} res(b, y).
        // Here x = lc^k a (deg da), y = r (deg dr):
        //   lc(b)^{k db} res(b,a) = lc(b)^{da - dr} res(b, r)  ... careful:
        // res(b, x) = lc(b)^{deg x} prod x(roots of b)/lc... use product formula:
        // res(b, x) = lc(b)^{deg x} ∏_{b(β)=0} x(β).
        // x(β) = r(β) since b(β)=0. So res(b,x) = lc(b)^{deg x - deg r} res(b, r).
        // And res(b, x) = res(b, lc^k a) = lc^{k db} res(b, a)... no:
        // res(b, c·a) = c^{deg b} res(b, a) for constant c. c = lc(b)^k:
        //   res(b, lc^k a) = lc(b)^{k db} res(b, a).
        // But deg(lc^k a) = da, so: lc^{k db} res(b,a) = lc^{da - dr} res(b, r)
        // => res(b, a) = lc^{da - dr - k db} res(b, r).
        let dr = if r.is_zero() { 0 } else { r.degree() };
        let lcb = b.lc();
        let exp_num = (da as i64) - (dr as i64) - (k as i64) * (db as i64);
        if exp_num >= 0 {
            for _ in 0..exp_num {
                num *= &lcb;
            }
        } else {
            for _ in 0..(-exp_num) {
                den *= &lcb;
            }
        }
        a = b;
        b = r;
    }
}

/// Lagrange interpolation: rational coefficients of the unique polynomial of
/// degree < points.len() through the given (x, y) points.
pub fn interpolate(points: &[(Rat, Rat)]) -> Vec<Rat> {
    let n = points.len();
    let mut coeffs = vec![Rat::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![Rat::one()];
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let w = yi / &denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &w;
        }
    }
    coeffs
}

/// Clears denominators of a rational coefficient vector into an IntPoly.
pub fn clear_denominators(coeffs: &[Rat]) -> IntPoly {
    let mut den = BigInt::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    IntPoly::new(
        coeffs
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from_integer(den.clone());
                debug_assert!(scaled.denom().is_one());
                scaled.numer().clone()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat_int;

    #[test]
    fn arithmetic() {
        let p = IntPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        let q = IntPoly::from_i64(&[1, 1]);
        assert_eq!(p.div_exact(&q), q);
        assert_eq!(q.mul(&q), p);
        assert_eq!(p.derivative(), IntPoly::from_i64(&[2, 2]));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x^2-2)^2 * (x-1)
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        let b = IntPoly::from_i64(&[-1, 1]);
        let p = a.mul(&a).mul(&b);
        let sf = p.squarefree_part();
        assert_eq!(sf, a.mul(&b));
        assert_eq!(p.gcd(&a), a);
    }

    #[test]
    fn resultants() {
        // res(x^2-2, x^2-3) = (2-3)^2 = 1
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        let b = IntPoly::from_i64(&[-3, 0, 1]);
        assert_eq!(a.resultant(&b), BigInt::from(1));
        // res(x^2-2, x^2-2) = 0
        assert_eq!(a.resultant(&a), BigInt::from(0));
        // res(x-2, x-3) = -1  (product formula: (2-3) = -1)
        let a = IntPoly::from_i64(&[-2, 1]);
        let b = IntPoly::from_i64(&[-3, 1]);
        assert_eq!(a.resultant(&b).abs(), BigInt::from(1));
        // res(2x-1, 3x-1): 2*3 * (1/2 - 1/3) = 1
        let a = IntPoly::from_i64(&[-1, 2]);
        let b = IntPoly::from_i64(&[-1, 3]);
        assert_eq!(a.resultant(&b).abs(), BigInt::from(1));
        // bigger sanity: res(x^2-2, x^3-5) via direct product formula:
        // prod over roots a of x^2-2 of (a^3-5) = (2√2-5)(-2√2-5) = 25-8 = 17
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        let b = IntPoly::from_i64(&[-5, 0, 0, 1]);
        assert_eq!(a.resultant(&b).abs(), BigInt::from(17));
    }

    #[test]
    fn interpolation() {
        // y = x^2 + 1 through 3 points
        let pts = vec![
            (rat_int(0), rat_int(1)),
            (rat_int(1), rat_int(2)),
            (rat_int(2), rat_int(5)),
        ];
        let c = interpolate(&pts);
        assert_eq!(clear_denominators(&c), IntPoly::from_i64(&[1, 0, 1]));
    }
}
