//! Real number fields ℚ(θ) with a designated real root θ.
//!
//! A `NumberField` carries an irreducible monic modulus and the isolating
//! data for θ; elements are rational coordinate vectors over the power basis
//! 1, θ, …, θ^(d−1). `FieldBuilder` adjoins real algebraic numbers one at a
//! time, rebuilding the primitive element via resultants, so that any finite
//! set of real algebraic inputs ends up with exact coordinates in a common
//! field. This is what reduces ℚ-linear-independence questions and sign
//! determinations to rational linear algebra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{clear_denominators, IntPoly};
use super::rat::Rat;
use super::real::RealAlgebraic;
use crate::error::{Error, Result};

/// Element of a `NumberField`: rational coordinates over the power basis.
pub type FieldElem = Vec<Rat>;

#[derive(Clone, Debug)]
pub struct NumberField {
    /// Irreducible monic modulus as rational coefficients, length dim+1.
    modulus: Vec<Rat>,
    /// The designated real root.
    theta: RealAlgebraic,
    dim: usize,
}

impl NumberField {
    /// The rational field ℚ (modulus z, θ = 0).
    pub fn rationals() -> Self {
        NumberField {
            modulus: vec![Rat::zero(), Rat::one()],
            theta: RealAlgebraic::from_int(0),
            dim: 1,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn theta(&self) -> &RealAlgebraic {
        &self.theta
    }

    pub fn zero(&self) -> FieldElem {
        vec![Rat::zero(); self.dim]
    }

    pub fn one(&self) -> FieldElem {
        let mut v = self.zero();
        v[0] = Rat::one();
        v
    }

    pub fn from_rat(&self, r: &Rat) -> FieldElem {
        let mut v = self.zero();
        v[0] = r.clone();
        v
    }

    pub fn is_zero_elem(&self, a: &FieldElem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &FieldElem, k: &Rat) -> FieldElem {
        a.iter().map(|x| x * k).collect()
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut prod = vec![Rat::zero(); 2 * self.dim - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        self.reduce(prod)
    }

    /// Reduces a coefficient vector of any length mod the modulus.
    fn reduce(&self, mut v: Vec<Rat>) -> FieldElem {
        let d = self.dim;
        for k in (d..v.len()).rev() {
            let c = std::mem::replace(&mut v[k], Rat::zero());
            if c.is_zero() {
                continue;
            }
            // z^k = z^(k-d) * z^d = -z^(k-d) * (m_0 + ... + m_{d-1} z^{d-1})
            for i in 0..d {
                let t = &c * &self.modulus[i];
                v[k - d + i] -= t;
            }
        }
        v.truncate(d);
        v.resize(d, Rat::zero());
        v
    }

    /// Multiplicative inverse (the modulus is irreducible, so every nonzero
    /// element is invertible).
    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if self.is_zero_elem(a) {
            return Err(Error::input("division by zero field element"));
        }
        // Extended Euclid over ℚ[z]: s*a + t*m = gcd = const.
        let (g, s, _) = qpoly_ext_gcd(&trim(a.clone()), &self.modulus);
        if g.len() != 1 {
            return Err(Error::internal(
                "modulus not irreducible: non-constant gcd in field inversion",
            ));
        }
        let ginv = g[0].recip();
        let mut out = s.iter().map(|c| c * &ginv).collect::<Vec<_>>();
        out.resize(self.dim.max(out.len()), Rat::zero());
        Ok(self.reduce(out))
    }

    /// Exact sign of a(θ).
    pub fn sign(&self, a: &FieldElem) -> i8 {
        if self.is_zero_elem(a) {
            return 0;
        }
        let poly = clear_denominators(a);
        debug_assert!(!poly.is_zero());
        let mut theta = self.theta.clone();
        loop {
            let (lo, hi) = theta.interval();
            let (vlo, vhi) = poly.eval_interval(lo, hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            theta = theta.refined(&interval_width_half(&theta));
        }
    }

    pub fn cmp_elems(&self, a: &FieldElem, b: &FieldElem) -> std::cmp::Ordering {
        match self.sign(&self.sub(a, b)) {
            0 => std::cmp::Ordering::Equal,
            s if s > 0 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Less,
        }
    }

    /// Evaluates the element back to a standalone `RealAlgebraic`.
    pub fn to_real(&self, a: &FieldElem) -> RealAlgebraic {
        let mut acc = RealAlgebraic::from_int(0);
        let mut pow = RealAlgebraic::from_int(1);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&pow.mul_rat(c));
            }
            if i + 1 < a.len() {
                pow = pow.mul(&self.theta);
            }
        }
        acc
    }

    /// Rational value if the element is rational.
    pub fn as_rat(&self, a: &FieldElem) -> Option<Rat> {
        if a[1..].iter().all(|c| c.is_zero()) {
            Some(a[0].clone())
        } else {
            None
        }
    }
}

fn interval_width_half(x: &RealAlgebraic) -> Rat {
    let (lo, hi) = x.interval();
    (hi - lo) / Rat::from_integer(BigInt::from(2))
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Extended gcd over ℚ[z]: returns (g, s, t) with s*a + t*b = g.
fn qpoly_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0 = vec![Rat::one()];
    let mut s1: Vec<Rat> = vec![];
    let mut t0: Vec<Rat> = vec![];
    let mut t1 = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r) = qpoly_div_rem(&r0, &r1);
        let ns = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
        let nt = qpoly_sub(&t0, &qpoly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    (r0, s0, t0)
}

fn qpoly_div_rem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - db];
    let lead = b[db].clone();
    for k in (0..q.len()).rev() {
        if r.len() < k + db + 1 {
            continue;
        }
        let c = &r[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        q[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[k + i] -= t;
        }
        r = trim(r);
    }
    (trim(q), trim(r))
}

fn qpoly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rat::zero);
        *o = x - y;
    }
    trim(out)
}

/// Incrementally builds a common number field for a set of real algebraic
/// numbers, tracking exact coordinates of every adjoined number.
pub struct FieldBuilder {
    field: NumberField,
    elems: Vec<FieldElem>,
}

impl Default for FieldBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl FieldBuilder {
    pub fn new() -> Self {
        FieldBuilder {
            field: NumberField::rationals(),
            elems: vec![],
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn elems(&self) -> &[FieldElem] {
        &self.elems
    }

    pub fn into_parts(self) -> (NumberField, Vec<FieldElem>) {
        (self.field, self.elems)
    }

    /// Adjoins a number, enlarging the field if needed; returns its index in
    /// `elems`. All previously adjoined coordinates are rewritten in place.
    pub fn adjoin(&mut self, x: &RealAlgebraic) -> Result<usize> {
        let x = x.minimized();
        if let Some(r) = x.as_rat() {
            self.elems.push(self.field.from_rat(&r));
            return Ok(self.elems.len() - 1);
        }
        if self.field.dim == 1 {
            // First irrational: the field becomes ℚ(x) directly.
            let poly = x.poly().clone();
            let d = poly.degree();
            let modulus = monic_rational(&poly);
            let new_field = NumberField {
                modulus,
                theta: x.clone(),
                dim: d,
            };
            for e in self.elems.iter_mut() {
                let mut v = new_field.zero();
                v[0] = e[0].clone();
                *e = v;
            }
            self.field = new_field;
            let mut coords = self.field.zero();
            coords[1] = Rat::one();
            self.elems.push(coords);
            return Ok(self.elems.len() - 1);
        }
        // General adjoin by primitive element θ' = θ + c·x.
        for attempt in 1..=60i64 {
            let c = if attempt % 2 == 1 {
                Rat::from_integer(BigInt::from((attempt + 1) / 2))
            } else {
                -Rat::from_integer(BigInt::from(attempt / 2))
            };
            let theta2 = self.field.theta.add(&x.mul_rat(&c)).minimized();
            let m2 = theta2.poly().clone();
            let d2 = m2.degree();
            if d2 % self.field.dim != 0 {
                continue;
            }
            let candidate = NumberField {
                modulus: monic_rational(&m2),
                theta: theta2,
                dim: d2,
            };
            // gcd over the candidate field of m(t) and p(θ' − c·t); linear for
            // good c, and its root is θ.
            if let Some(theta_expr) = express_old_theta(&candidate, &self.field, x.poly(), &c) {
                // x = (θ' − θ_expr)/c
                let mut tv = candidate.zero();
                if candidate.dim > 1 {
                    tv[1] = Rat::one();
                } else {
                    unreachable!("irrational x cannot yield dim-1 field");
                }
                let x_coords = candidate.scale(&candidate.sub(&tv, &theta_expr), &c.recip());
                // Rewrite previous elements via powers of θ_expr.
                let mut powers = Vec::with_capacity(self.field.dim);
                let mut p = candidate.one();
                for _ in 0..self.field.dim {
                    powers.push(p.clone());
                    p = candidate.mul(&p, &theta_expr);
                }
                for e in self.elems.iter_mut() {
                    let mut v = candidate.zero();
                    for (i, coeff) in e.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        v = candidate.add(&v, &candidate.scale(&powers[i], coeff));
                    }
                    *e = v;
                }
                self.field = candidate;
                self.elems.push(x_coords);
                return Ok(self.elems.len() - 1);
            }
        }
        Err(Error::internal(
            "failed to find a primitive element after 60 attempts",
        ))
    }
}

fn monic_rational(p: &IntPoly) -> Vec<Rat> {
    let lc = Rat::from_integer(p.lc());
    p.coeffs
        .iter()
        .map(|c| Rat::from_integer(c.clone()) / &lc)
        .collect()
}

/// Over `new` = ℚ(θ'), computes gcd(m_old(t), p_x(θ' − c t)); if linear,
/// returns its root (the coordinates of old θ in the new field).
fn express_old_theta(
    new: &NumberField,
    old: &NumberField,
    x_poly: &IntPoly,
    c: &Rat,
) -> Option<FieldElem> {
    // Polynomials in t with coefficients in the new field.
    type FPoly = Vec<FieldElem>;
    let f_trim = |mut v: FPoly| -> FPoly {
        while v.last().map_or(false, |e| new.is_zero_elem(e)) {
            v.pop();
        }
        v
    };
    // m_old(t): rational coefficients lifted into the field.
    let m_old: FPoly = old.modulus.iter().map(|r| new.from_rat(r)).collect();
    // p_x(θ' − c·t): expand by Horner in (θ' − c·t).
    let theta2 = {
        let mut v = new.zero();
        v[1] = Rat::one();
        v
    };
    let neg_c = new.from_rat(&-c.clone());
    // linear poly in t: θ' + (−c)·t
    let lin: FPoly = vec![theta2, neg_c];
    let mut px: FPoly = vec![];
    for coeff in x_poly.coeffs.iter().rev() {
        // px = px * lin + coeff
        let mut next: FPoly = vec![new.zero(); px.len() + lin.len()];
        for (i, a) in px.iter().enumerate() {
            for (j, b) in lin.iter().enumerate() {
                let t = new.mul(a, b);
                next[i + j] = new.add(&next[i + j], &t);
            }
        }
        if next.is_empty() {
            next.push(new.zero());
        }
        next[0] = new.add(&next[0], &new.from_rat(&Rat::from_integer(coeff.clone())));
        px = f_trim(next);
    }
    // Euclidean gcd over the field.
    let mut r0 = f_trim(m_old);
    let mut r1 = f_trim(px);
    while !r1.is_empty() {
        // r0 mod r1
        let lead = r1.last().unwrap().clone();
        let lead_inv = new.inv(&lead).ok()?;
        let db = r1.len() - 1;
        let mut r = r0.clone();
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c0 = new.mul(r.last().unwrap(), &lead_inv);
            if !new.is_zero_elem(&c0) {
                for (i, bc) in r1.iter().enumerate() {
                    let t = new.mul(&c0, bc);
                    r[k + i] = new.sub(&r[k + i], &t);
                }
            }
            r = f_trim(r);
            if r.len() <= db {
                break;
            }
            // ensure progress: top coefficient is now zero
            if r.len() == k + db + 1 {
                // top wasn't cleared; force pop (numerically impossible, but
                // guard against infinite loops)
                r.pop();
                r = f_trim(r);
            }
        }
        r0 = r1;
        r1 = f_trim(r);
    }
    if r0.len() != 2 {
        return None;
    }
    // monic: root = -r0[0]/r0[1]
    let inv = new.inv(&r0[1]).ok()?;
    Some(new.neg(&new.mul(&r0[0], &inv)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{rat, rat_int};

    #[test]
    fn build_sqrt2_sqrt3() {
        let s2 = RealAlgebraic::sqrt_int(2).unwrap();
        let s3 = RealAlgebraic::sqrt_int(3).unwrap();
        let mut b = FieldBuilder::new();
        b.adjoin(&s2).unwrap();
        b.adjoin(&s3).unwrap();
        let (f, elems) = b.into_parts();
        assert_eq!(f.dim(), 4);
        // coordinates evaluate back to the right numbers
        assert_eq!(f.to_real(&elems[0]), s2);
        assert_eq!(f.to_real(&elems[1]), s3);
        // product of the coords = sqrt6
        let s6 = RealAlgebraic::sqrt_int(6).unwrap();
        assert_eq!(f.to_real(&f.mul(&elems[0], &elems[1])), s6);
    }

    #[test]
    fn dependent_numbers_share_coordinates() {
        let s2 = RealAlgebraic::sqrt_int(2).unwrap();
        let s8 = RealAlgebraic::sqrt_int(8).unwrap();
        let mut b = FieldBuilder::new();
        b.adjoin(&s2).unwrap();
        b.adjoin(&s8).unwrap();
        let (f, elems) = b.into_parts();
        assert_eq!(f.dim(), 2);
        // s8 = 2 s2: coords proportional
        let twice = f.scale(&elems[0], &rat_int(2));
        assert_eq!(elems[1], twice);
    }

    #[test]
    fn signs() {
        let s2 = RealAlgebraic::sqrt_int(2).unwrap();
        let mut b = FieldBuilder::new();
        b.adjoin(&s2).unwrap();
        let (f, elems) = b.into_parts();
        // sqrt2 - 1 > 0, sqrt2 - 3/2 < 0
        let one = f.one();
        let d1 = f.sub(&elems[0], &one);
        assert_eq!(f.sign(&d1), 1);
        let d2 = f.sub(&elems[0], &f.from_rat(&rat(3, 2)));
        assert_eq!(f.sign(&d2), -1);
        assert_eq!(f.sign(&f.zero()), 0);
    }

    #[test]
    fn inverse() {
        let s2 = RealAlgebraic::sqrt_int(2).unwrap();
        let mut b = FieldBuilder::new();
        b.adjoin(&s2).unwrap();
        let (f, elems) = b.into_parts();
        let inv = f.inv(&elems[0]).unwrap();
        let prod = f.mul(&elems[0], &inv);
        assert_eq!(prod, f.one());
    }

    #[test]
    fn three_quadratics() {
        // sqrt2, sqrt3, sqrt6 live in a degree-4 field; sqrt6 = sqrt2*sqrt3
        let s2 = RealAlgebraic::sqrt_int(2).unwrap();
        let s3 = RealAlgebraic::sqrt_int(3).unwrap();
        let s6 = RealAlgebraic::sqrt_int(6).unwrap();
        let mut b = FieldBuilder::new();
        b.adjoin(&s2).unwrap();
        b.adjoin(&s3).unwrap();
        b.adjoin(&s6).unwrap();
        let (f, elems) = b.into_parts();
        assert_eq!(f.dim(), 4);
        let prod = f.mul(&elems[0], &elems[1]);
        assert_eq!(prod, elems[2]);
    }
}
