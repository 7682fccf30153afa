//! Real algebraic numbers: squarefree defining polynomial plus an open
//! isolating interval with rational endpoints.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::factor::factor_squarefree;
use super::poly::{clear_denominators, interpolate, IntPoly};
use super::rat::{format_rat, parse_rat, Rat};
use super::sturm::Sturm;
use crate::error::{Error, Result};

/// An exact real algebraic number.
///
/// Invariants: `poly` is primitive, squarefree, degree ≥ 1, with exactly one
/// real root in the open interval `(lo, hi)`, and neither endpoint is a root.
/// Rational numbers are represented by a degree-1 polynomial with the interval
/// straddling the value.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RealAlgebraicRepr", into = "RealAlgebraicRepr")]
pub struct RealAlgebraic {
    poly: IntPoly,
    lo: Rat,
    hi: Rat,
}

/// Wire form: `{"minpoly":[c0,c1,...],"interval":["p/q","r/s"]}`.
#[derive(Serialize, Deserialize)]
struct RealAlgebraicRepr {
    minpoly: Vec<String>,
    interval: (String, String),
}

impl From<RealAlgebraic> for RealAlgebraicRepr {
    fn from(x: RealAlgebraic) -> Self {
        RealAlgebraicRepr {
            minpoly: x.poly.coeffs.iter().map(|c| c.to_string()).collect(),
            interval: (format_rat(&x.lo), format_rat(&x.hi)),
        }
    }
}

impl TryFrom<RealAlgebraicRepr> for RealAlgebraic {
    type Error = Error;

    fn try_from(r: RealAlgebraicRepr) -> Result<Self> {
        let coeffs: std::result::Result<Vec<BigInt>, _> =
            r.minpoly.iter().map(|s| s.trim().parse::<BigInt>()).collect();
        let coeffs = coeffs.map_err(|_| Error::input("malformed integer coefficient in minpoly"))?;
        let lo = parse_rat(&r.interval.0)?;
        let hi = parse_rat(&r.interval.1)?;
        RealAlgebraic::new(IntPoly::new(coeffs), lo, hi)
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl RealAlgebraic {
    /// Validating constructor. The polynomial need not be squarefree or
    /// primitive (it is reduced), but the reduced polynomial must have exactly
    /// one root in `(lo, hi)` and no root at either endpoint.
    pub fn new(poly: IntPoly, lo: Rat, hi: Rat) -> Result<Self> {
        if poly.is_zero() || poly.degree() < 1 {
            return Err(Error::input("defining polynomial must have degree >= 1"));
        }
        if lo >= hi {
            return Err(Error::input("isolating interval must be nonempty"));
        }
        let sf = poly.squarefree_part();
        if sf.eval_rat(&lo).is_zero() || sf.eval_rat(&hi).is_zero() {
            return Err(Error::input("isolating interval endpoint is a root"));
        }
        let sturm = Sturm::new(&sf);
        match sturm.count_roots_open(&lo, &hi) {
            1 => Ok(RealAlgebraic { poly: sf, lo, hi }),
            0 => Err(Error::input("isolating interval contains no root")),
            _ => Err(Error::input(
                "isolating interval contains more than one root",
            )),
        }
    }

    pub fn from_rat(r: &Rat) -> Self {
        RealAlgebraic {
            poly: IntPoly::linear_from_root(r),
            lo: r - Rat::one(),
            hi: r + Rat::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(BigInt::from(n)))
    }

    /// Positive square root of a non-negative rational.
    pub fn sqrt_rat(r: &Rat) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::input("sqrt of negative rational"));
        }
        if r.is_zero() {
            return Ok(Self::from_int(0));
        }
        // q x^2 - p, root in (0, max(1, p/q) + 1)
        let poly = IntPoly::new(vec![-r.numer().clone(), BigInt::zero(), r.denom().clone()]);
        let hi = if r >= &Rat::one() {
            r + Rat::one()
        } else {
            Rat::one()
        };
        // Interval (0, hi): contains the positive root; if r is a perfect
        // square the squarefree machinery still applies (x^2 - p/q squarefree
        // unless it has a rational double root, impossible).
        let lo = Rat::zero();
        if poly.eval_rat(&lo).is_zero() {
            return Err(Error::internal("unexpected zero endpoint"));
        }
        RealAlgebraic::new(poly, lo, hi)
    }

    pub fn sqrt_int(n: i64) -> Result<Self> {
        Self::sqrt_rat(&Rat::from_integer(BigInt::from(n)))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    /// Exact rational value if this number is rational.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.poly.degree() == 1 {
            let a = self.poly.coeff(1);
            let b = self.poly.coeff(0);
            return Some(Rat::new(-b, a));
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    /// Exact sign: -1, 0, +1.
    pub fn sign(&self) -> i8 {
        if self.poly.coeff(0).is_zero() && self.lo.is_negative() && self.hi.is_positive() {
            // 0 is the root in the interval.
            return 0;
        }
        let mut me = self.clone();
        loop {
            if !me.lo.is_negative() {
                return 1;
            }
            if !me.hi.is_positive() {
                return -1;
            }
            me.refine_step();
        }
    }

    /// Halves the isolating interval once. A simple root flips the sign of
    /// the polynomial across it, so bisection by sign works.
    fn refine_step(&mut self) {
        let two = Rat::from_integer(BigInt::from(2));
        let mid = (&self.lo + &self.hi) / &two;
        let vm = self.poly.eval_rat(&mid);
        if vm.is_zero() {
            // mid is the root itself: shrink symmetrically around it.
            let lo = (&self.lo + &mid) / &two;
            let hi = (&mid + &self.hi) / &two;
            self.lo = lo;
            self.hi = hi;
            return;
        }
        let vl = self.poly.eval_rat(&self.lo);
        debug_assert!(!vl.is_zero());
        if vl.is_positive() == vm.is_positive() {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Returns a copy whose interval has width ≤ eps.
    pub fn refined(&self, eps: &Rat) -> Self {
        let mut me = self.clone();
        while &(&me.hi - &me.lo) > eps {
            me.refine_step();
        }
        me
    }

    /// Reduce the defining polynomial to the minimal polynomial (irreducible
    /// factor vanishing at this number).
    pub fn minimized(&self) -> Self {
        if self.poly.degree() <= 1 {
            return self.clone();
        }
        let factors = factor_squarefree(&self.poly);
        if factors.len() == 1 {
            return RealAlgebraic {
                poly: factors.into_iter().next().unwrap(),
                lo: self.lo.clone(),
                hi: self.hi.clone(),
            };
        }
        // Refine until exactly one factor has a root in the interval.
        let mut me = self.clone();
        loop {
            let mut hits = Vec::new();
            for f in &factors {
                if f.eval_rat(&me.lo).is_zero() || f.eval_rat(&me.hi).is_zero() {
                    hits.clear();
                    break; // refine away from factor roots at endpoints
                }
                let sturm = Sturm::new(f);
                if sturm.count_roots(&me.lo, &me.hi) > 0 {
                    hits.push(f.clone());
                }
            }
            if hits.len() == 1 {
                return RealAlgebraic {
                    poly: hits.into_iter().next().unwrap(),
                    lo: me.lo,
                    hi: me.hi,
                };
            }
            me.refine_step();
        }
    }

    /// Degree of the (minimized) defining polynomial.
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn neg(&self) -> Self {
        let coeffs: Vec<BigInt> = self
            .poly
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        RealAlgebraic {
            poly: IntPoly::new(coeffs).primitive(),
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// Sum via resultant: Res_t(p(t), q(z - t)) vanishes at all root sums.
    pub fn add(&self, other: &Self) -> Self {
        if let Some(r) = self.as_rat() {
            return other.add_rat(&r);
        }
        if let Some(r) = other.as_rat() {
            return self.add_rat(&r);
        }
        let rp = resultant_compose(&self.poly, &other.poly, ComposeOp::Add);
        locate_result(rp, || {
            let a = self.clone();
            let b = other.clone();
            Box::new(move |eps| {
                let ar = a.refined(eps);
                let br = b.refined(eps);
                (&ar.lo + &br.lo, &ar.hi + &br.hi)
            })
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        // Shifted polynomial p(x - r), reconstructed by interpolation and
        // cleared to integer coefficients.
        let d = self.poly.degree();
        let mut pts = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let x = Rat::from_integer(BigInt::from(k as i64));
            let y = self.poly.eval_rat(&(&x - r));
            pts.push((x, y));
        }
        let coeffs = interpolate(&pts);
        let shifted = clear_denominators(&coeffs);
        RealAlgebraic {
            poly: shifted.primitive(),
            lo: &self.lo + r,
            hi: &self.hi + r,
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::from_int(0);
        }
        // roots scale by r: substitute x/r and clear denominators.
        let d = self.poly.degree();
        let mut pts = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let x = Rat::from_integer(BigInt::from(k as i64));
            let y = self.poly.eval_rat(&(&x / r));
            pts.push((x, y));
        }
        let coeffs = interpolate(&pts);
        let scaled = clear_denominators(&coeffs);
        let (lo, hi) = if r.is_positive() {
            (&self.lo * r, &self.hi * r)
        } else {
            (&self.hi * r, &self.lo * r)
        };
        RealAlgebraic {
            poly: scaled.primitive(),
            lo,
            hi,
        }
    }

    /// Product via resultant: Res_t(p(t), t^deg(q) q(z/t)).
    pub fn mul(&self, other: &Self) -> Self {
        if let Some(r) = self.as_rat() {
            return other.mul_rat(&r);
        }
        if let Some(r) = other.as_rat() {
            return self.mul_rat(&r);
        }
        let rp = resultant_compose(&self.poly, &other.poly, ComposeOp::Mul);
        locate_result(rp, || {
            let a = self.clone();
            let b = other.clone();
            Box::new(move |eps| {
                let ar = a.refined(eps);
                let br = b.refined(eps);
                let c = [
                    &ar.lo * &br.lo,
                    &ar.lo * &br.hi,
                    &ar.hi * &br.lo,
                    &ar.hi * &br.hi,
                ];
                (
                    c.iter().min().unwrap().clone(),
                    c.iter().max().unwrap().clone(),
                )
            })
        })
    }

    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        // Disjoint intervals decide immediately (endpoints are never roots,
        // so even a shared endpoint keeps the order strict).
        if self.hi <= other.lo {
            return Ordering::Less;
        }
        if other.hi <= self.lo {
            return Ordering::Greater;
        }
        match self.sub(other).sign() {
            0 => Ordering::Equal,
            s if s > 0 => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Decimal approximation for display.
    pub fn approx_f64(&self) -> f64 {
        let r = self.refined(&Rat::new(BigInt::one(), BigInt::from(1_000_000i64)));
        let mid = (&r.lo + &r.hi) / Rat::from_integer(BigInt::from(2));
        let n = mid.numer();
        let d = mid.denom();
        let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
        let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
        nf / df
    }
}

impl std::fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.as_rat() {
            write!(f, "{}", format_rat(&r))
        } else {
            write!(f, "alg(deg {}, ≈{:.6})", self.poly.degree(), self.approx_f64())
        }
    }
}

enum ComposeOp {
    Add,
    Mul,
}

/// Computes the resultant polynomial whose roots include the sum/product of
/// the roots of p and q, by interpolation over scalar resultants.
fn resultant_compose(p: &IntPoly, q: &IntPoly, op: ComposeOp) -> IntPoly {
    let dp = p.degree();
    let dq = q.degree();
    let dz = dp * dq;
    // R(z) = Res_t(p(t), S_z(t)) where S depends on op; evaluate at dz+1
    // integer points and interpolate.
    let mut pts: Vec<(Rat, Rat)> = Vec::with_capacity(dz + 1);
    let mut z = 0i64;
    while pts.len() < dz + 1 {
        let zq = Rat::from_integer(BigInt::from(z));
        let s = match op {
            // q(z - t) as a poly in t
            ComposeOp::Add => {
                let mut coeffs = vec![BigInt::zero(); dq + 1];
                // expand q(z - t) = sum_j q_j (z - t)^j with z integer
                let zb = BigInt::from(z);
                let mut binom_row = vec![BigInt::one()];
                let _ = &mut binom_row;
                for (j, qj) in q.coeffs.iter().enumerate() {
                    if qj.is_zero() {
                        continue;
                    }
                    // (z - t)^j = sum_k C(j,k) z^(j-k) (-t)^k
                    let mut zpow = BigInt::one();
                    let mut terms = vec![BigInt::zero(); j + 1];
                    for k in (0..=j).rev() {
                        // coefficient of t^k: C(j,k) * z^(j-k) * (-1)^k
                        let c = binomial(j, k) * &zpow;
                        terms[k] = if k % 2 == 1 { -c } else { c };
                        zpow *= &zb;
                    }
                    for (k, t) in terms.iter().enumerate() {
                        coeffs[k] += qj * t;
                    }
                }
                IntPoly::new(coeffs)
            }
            // t^dq * q(z/t) as a poly in t: sum_j q_j z^j t^(dq-j)
            ComposeOp::Mul => {
                let zb = BigInt::from(z);
                let mut coeffs = vec![BigInt::zero(); dq + 1];
                let mut zpow = BigInt::one();
                for (j, qj) in q.coeffs.iter().enumerate() {
                    coeffs[dq - j] = qj * &zpow;
                    zpow *= &zb;
                }
                IntPoly::new(coeffs)
            }
        };
        if s.is_zero() {
            z += 1;
            continue;
        }
        let r = p.resultant(&s);
        pts.push((zq, Rat::from_integer(r)));
        z += 1;
    }
    let coeffs = interpolate(&pts);
    clear_denominators(&coeffs)
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    r
}

/// Wraps a resultant-composed polynomial and an interval oracle into a valid
/// RealAlgebraic: squarefree-reduce, then shrink the oracle interval until it
/// isolates exactly one root.
fn locate_result(
    rp: IntPoly,
    make_oracle: impl FnOnce() -> Box<dyn Fn(&Rat) -> (Rat, Rat)>,
) -> RealAlgebraic {
    let sf = rp.squarefree_part();
    debug_assert!(sf.degree() >= 1);
    let oracle = make_oracle();
    let sturm = Sturm::new(&sf);
    let mut eps = Rat::one();
    let two = Rat::from_integer(BigInt::from(2));
    loop {
        let (lo, hi) = oracle(&eps);
        // Endpoints must avoid roots; if they hit, shrink and retry.
        if !sf.eval_rat(&lo).is_zero() && !sf.eval_rat(&hi).is_zero() {
            let n = sturm.count_roots(&lo, &hi);
            match n {
                1 => {
                    let out = RealAlgebraic { poly: sf, lo, hi };
                    return out.minimized();
                }
                0 => panic!("interval oracle lost the root"),
                _ => {}
            }
        }
        eps = eps / &two;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{rat, rat_int};

    fn sqrt2() -> RealAlgebraic {
        RealAlgebraic::sqrt_int(2).unwrap()
    }

    fn sqrt3() -> RealAlgebraic {
        RealAlgebraic::sqrt_int(3).unwrap()
    }

    #[test]
    fn construction_validates() {
        // interval with two roots rejected
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert!(RealAlgebraic::new(p.clone(), rat_int(-3), rat_int(3)).is_err());
        assert!(RealAlgebraic::new(p.clone(), rat_int(1), rat_int(2)).is_ok());
        // endpoint root rejected
        let q = IntPoly::from_i64(&[-1, 1]);
        assert!(RealAlgebraic::new(q, rat_int(1), rat_int(2)).is_err());
    }

    #[test]
    fn signs_and_order() {
        let s2 = sqrt2();
        assert_eq!(s2.sign(), 1);
        assert_eq!(s2.neg().sign(), -1);
        assert!(s2 < sqrt3());
        assert_eq!(s2.sub(&s2).sign(), 0);
        let one = RealAlgebraic::from_int(1);
        assert!(one < s2);
        // sqrt2 - 1 > 0
        assert_eq!(s2.sub(&one).sign(), 1);
    }

    #[test]
    fn arithmetic_identities() {
        let s2 = sqrt2();
        let s3 = sqrt3();
        let s6 = RealAlgebraic::sqrt_int(6).unwrap();
        // sqrt2 * sqrt3 = sqrt6
        assert_eq!(s2.mul(&s3), s6);
        // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6
        let sum = s2.add(&s3);
        let sq = sum.mul(&sum);
        let expect = s6.mul_rat(&rat_int(2)).add_rat(&rat_int(5));
        assert_eq!(sq, expect);
        // sqrt8 = 2 sqrt2
        let s8 = RealAlgebraic::sqrt_int(8).unwrap();
        assert_eq!(s8, s2.mul_rat(&rat_int(2)));
    }

    #[test]
    fn minimization() {
        let s2 = sqrt2();
        let s8 = RealAlgebraic::sqrt_int(8).unwrap();
        // s8 - 2*s2 = 0 exactly
        assert!(s8.sub(&s2.mul_rat(&rat_int(2))).is_zero());
        // degree of sqrt2+sqrt3 is 4
        let sum = s2.add(&sqrt3()).minimized();
        assert_eq!(sum.degree(), 4);
    }

    #[test]
    fn rational_fast_paths() {
        let h = RealAlgebraic::from_rat(&rat(1, 2));
        assert_eq!(h.as_rat(), Some(rat(1, 2)));
        let s2 = sqrt2();
        let x = s2.add(&h).sub(&h);
        assert_eq!(x, s2);
    }

    #[test]
    fn serde_round_trip() {
        let s2 = sqrt2();
        let js = serde_json::to_string(&s2).unwrap();
        let back: RealAlgebraic = serde_json::from_str(&js).unwrap();
        assert_eq!(s2, back);
        // malformed: interval without a root
        let bad = r#"{"minpoly":["-2","0","1"],"interval":["5","6"]}"#;
        assert!(serde_json::from_str::<RealAlgebraic>(bad).is_err());
    }
}
