//! Factorization of integer polynomials into irreducible factors
//! (squarefree input; Berlekamp mod p, Hensel lifting, subset recombination).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{berlekamp, PolyP};
use super::poly::IntPoly;

const PRIME_POOL: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
];

/// Factors a squarefree primitive integer polynomial into primitive
/// irreducible factors with positive leading coefficient (up to the sign of
/// the product). Degree 0 inputs return empty.
pub fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive();
    if f.degree() == 0 {
        return vec![];
    }
    if f.degree() == 1 {
        return vec![f];
    }
    // Strip rational roots first; cheap and shrinks the hard part.
    let mut rest = f.clone();
    let mut out: Vec<IntPoly> = Vec::new();
    loop {
        match rational_root(&rest) {
            Some(lin) => {
                rest = rest.div_exact(&lin).primitive();
                out.push(lin.primitive());
                if rest.degree() <= 1 {
                    if rest.degree() == 1 {
                        out.push(rest.primitive());
                    }
                    return out;
                }
            }
            None => break,
        }
    }
    out.extend(zassenhaus(&rest));
    out
}

/// Finds one linear factor q*x - p from a rational root p/q, if any.
fn rational_root(f: &IntPoly) -> Option<IntPoly> {
    let a0 = f.coeff(0);
    let an = f.lc();
    if a0.is_zero() {
        return Some(IntPoly::new(vec![BigInt::zero(), BigInt::one()]));
    }
    let ps = small_divisors(&a0.abs());
    let qs = small_divisors(&an.abs());
    for p in &ps {
        for q in &qs {
            if p.gcd(q) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let num = p * BigInt::from(sign);
                let r = num_rational::BigRational::new(num, q.clone());
                if f.eval_rat(&r).is_zero() {
                    return Some(IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]));
                }
            }
        }
    }
    None
}

/// All positive divisors if the number is small enough to enumerate; else the
/// trivial pair. (A missed rational root is harmless: Zassenhaus catches it.)
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    if let Ok(v) = u64::try_from(n.clone()) {
        if v <= 1_000_000 {
            let mut out = Vec::new();
            let mut d = 1u64;
            while d * d <= v {
                if v % d == 0 {
                    out.push(BigInt::from(d));
                    if d != v / d {
                        out.push(BigInt::from(v / d));
                    }
                }
                d += 1;
            }
            out.sort();
            return out;
        }
    }
    vec![BigInt::one(), n.clone()]
}

fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.degree();
    debug_assert!(n >= 2);
    // Pick a prime where f stays squarefree and lc does not vanish.
    let (p, modular) = PRIME_POOL
        .iter()
        .find_map(|&p| {
            if (f.lc().mod_floor(&BigInt::from(p))).is_zero() {
                return None;
            }
            let fp = PolyP::from_int_poly(f, p);
            if fp.is_squarefree() {
                Some((p, fp))
            } else {
                None
            }
        })
        .expect("some small prime keeps a squarefree poly squarefree");

    let mut factors_p = berlekamp(&modular.monic());
    factors_p.sort_by_key(|g| (g.degree(), g.coeffs.clone()));
    if factors_p.len() == 1 {
        return vec![f.clone()];
    }

    // Landau-Mignotte bound on factor coefficients: |b_i| <= 2^n * norm2(f) * |lc|.
    let norm2_sq: BigInt = f.coeffs.iter().map(|c| c * c).sum();
    let s = norm2_sq.sqrt() + BigInt::one();
    let mut bound = BigInt::one();
    for _ in 0..(n + 1) {
        bound *= BigInt::from(2);
    }
    bound *= &s * f.lc().abs();

    // Lift factorization mod p to mod p^k with p^k > 2*bound.
    let mut pk = BigInt::from(p);
    let two_bound = BigInt::from(2) * &bound;
    let mut lifts = 0;
    while pk <= two_bound {
        pk *= BigInt::from(p);
        lifts += 1;
    }
    let _ = lifts;
    let lifted = hensel_lift_multi(f, &factors_p, p, &pk);

    // Subset recombination.
    recombine(f, lifted, &pk)
}

/// Mod-m polynomial with BigInt coefficients in [0, m).
#[derive(Clone, Debug)]
struct PolyM {
    coeffs: Vec<BigInt>,
}

impl PolyM {
    fn normalize(mut c: Vec<BigInt>, m: &BigInt) -> Self {
        for x in c.iter_mut() {
            *x = x.mod_floor(m);
        }
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        PolyM { coeffs: c }
    }

    fn from_int(f: &IntPoly, m: &BigInt) -> Self {
        PolyM::normalize(f.coeffs.clone(), m)
    }

    fn from_polyp(f: &PolyP, m: &BigInt) -> Self {
        PolyM::normalize(f.coeffs.iter().map(|&c| BigInt::from(c)).collect(), m)
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn mul(&self, o: &Self, m: &BigInt) -> Self {
        if self.is_zero() || o.is_zero() {
            return PolyM { coeffs: vec![] };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyM::normalize(out, m)
    }

    fn sub(&self, o: &Self, m: &BigInt) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, o_out) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = o.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            *o_out = a - b;
        }
        PolyM::normalize(out, m)
    }

    /// Division assuming the divisor's lc is invertible mod m.
    fn div_rem(&self, d: &Self, m: &BigInt) -> (Self, Self) {
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (PolyM { coeffs: vec![] }, self.clone());
        }
        let inv = modinv(&d.coeffs[dd], m).expect("divisor lc invertible");
        let mut r = self.coeffs.clone();
        let n = self.degree();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..q.len()).rev() {
            let c = (&r[k + dd] * &inv).mod_floor(m);
            q[k] = c.clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = (&r[k + i] - &c * dc).mod_floor(m);
            }
        }
        (PolyM::normalize(q, m), PolyM::normalize(r, m))
    }
}

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Lifts the factorization f ≡ lc * ∏ fi (mod p) to mod pk (multifactor
/// Hensel via iterated two-factor lifting on a factor tree kept simple:
/// linear chain). Returned factors are monic mod pk.
fn hensel_lift_multi(f: &IntPoly, factors_p: &[PolyP], p: u64, pk: &BigInt) -> Vec<PolyM> {
    // Work with monic target: g = f / lc mod m (lc invertible mod p^k).
    let mut result: Vec<PolyM> = Vec::new();
    let mut current = {
        let lcinv = modinv(&f.lc(), pk).expect("lc invertible mod p^k");
        let scaled: Vec<BigInt> = f.coeffs.iter().map(|c| (c * &lcinv).mod_floor(pk)).collect();
        PolyM::normalize(scaled, pk)
    };
    let bp = BigInt::from(p);
    for (idx, fp) in factors_p.iter().enumerate() {
        if idx == factors_p.len() - 1 {
            result.push(current.clone());
            break;
        }
        // Split current ≡ fp * rest (mod p); lift to mod pk.
        let a0 = PolyM::from_polyp(&fp.monic(), pk);
        let restp = {
            let cur_p = polym_to_polyp(&current, p);
            let (q, r) = cur_p.div_rem(&fp.monic());
            debug_assert!(r.is_zero(), "modular factor must divide");
            q.monic()
        };
        let b0 = PolyM::from_polyp(&restp, pk);
        let (a, b) = hensel_lift_pair(&current, &a0, &b0, &bp, pk);
        result.push(a.clone());
        current = b;
    }
    result
}

fn polym_to_polyp(f: &PolyM, p: u64) -> PolyP {
    let bp = BigInt::from(p);
    PolyP::new(
        p,
        f.coeffs
            .iter()
            .map(|c| u64::try_from(c.mod_floor(&bp)).unwrap())
            .collect(),
    )
}

/// Lifts f ≡ g0*h0 (mod p), gcd(g0,h0) = 1 mod p, h0 monic, to
/// f ≡ g*h (mod pk) with g ≡ g0, h ≡ h0 (mod p). Quadratic Hensel steps,
/// lifting the Bezout pair along (the classical algorithm).
fn hensel_lift_pair(
    f: &PolyM,
    g0: &PolyM,
    h0: &PolyM,
    p: &BigInt,
    pk: &BigInt,
) -> (PolyM, PolyM) {
    let pu = u64::try_from(p.clone()).unwrap();
    let gp = polym_to_polyp(g0, pu);
    let hp = polym_to_polyp(h0, pu);
    let (s0, t0) = bezout_polyp(&gp, &hp);
    let mut s = PolyM::from_polyp(&s0, p);
    let mut t = PolyM::from_polyp(&t0, p);
    let mut g = g0.clone();
    let mut h = h0.clone();
    let mut m = p.clone();
    let add = |a: &PolyM, b: &PolyM, md: &BigInt| -> PolyM {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, x) in c.iter_mut().enumerate() {
            let av = a.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let bv = b.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            *x = av + bv;
        }
        PolyM::normalize(c, md)
    };
    while &m < pk {
        let next = (&m * &m).min(pk.clone());
        let fm = PolyM::from_int(&IntPoly::new(f.coeffs.clone()), &next);
        // e = f - g*h
        let e = fm.sub(&g.mul(&h, &next), &next);
        // (q, r) = quotrem(s*e, h); h monic
        let se = s.mul(&e, &next);
        let (q, r) = se.div_rem(&h, &next);
        // g* = g + t*e + q*g ; h* = h + r
        let te = t.mul(&e, &next);
        let qg = q.mul(&g, &next);
        let g1 = add(&add(&g, &te, &next), &qg, &next);
        let h1 = add(&h, &r, &next);
        // b = s*g1 + t*h1 - 1
        let one = PolyM::normalize(vec![BigInt::one()], &next);
        let b = add(&s.mul(&g1, &next), &t.mul(&h1, &next), &next).sub(&one, &next);
        // (c, d) = quotrem(s*b, h1)
        let sb = s.mul(&b, &next);
        let (c, d) = sb.div_rem(&h1, &next);
        // s* = s - d ; t* = t - t*b - c*g1
        let s1 = s.sub(&d, &next);
        let tb = t.mul(&b, &next);
        let cg = c.mul(&g1, &next);
        let t1 = t.sub(&tb, &next).sub(&cg, &next);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = next;
    }
    (g, h)
}

/// Extended Euclid over F_p: returns (s, t) with s*a + t*b = 1. Requires
/// gcd(a, b) = 1.
fn bezout_polyp(a: &PolyP, b: &PolyP) -> (PolyP, PolyP) {
    let p = a.p;
    let zero = PolyP::new(p, vec![]);
    let one = PolyP::new(p, vec![1]);
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero, one);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let ns = s0.sub(&q.mul(&s1));
        let nt = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    // r0 = gcd (constant); scale to 1.
    assert_eq!(r0.degree(), 0, "inputs must be coprime");
    let c = r0.lc();
    let cinv = {
        // invmod
        let mut r = 1u64;
        let mut base = c % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = ((r as u128 * base as u128) % p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % p as u128) as u64;
            e >>= 1;
        }
        r
    };
    let scale = PolyP::new(p, vec![cinv]);
    (s0.mul(&scale), t0.mul(&scale))
}

/// Recombines lifted monic modular factors into true integer factors.
fn recombine(f: &IntPoly, lifted: Vec<PolyM>, pk: &BigInt) -> Vec<IntPoly> {
    let mut remaining: Vec<PolyM> = lifted;
    let mut current = f.clone();
    let mut out = Vec::new();
    let mut subset_size = 1usize;
    'outer: while 2 * subset_size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for subset in subsets_of_size(&idxs, subset_size) {
            if let Some(g) = try_subset(&current, &remaining, &subset, pk) {
                out.push(g.clone());
                current = current.div_exact(&g).primitive();
                let keep: Vec<PolyM> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        subset_size += 1;
    }
    if current.degree() > 0 {
        out.push(current.primitive());
    }
    out
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Tests whether the product of the chosen modular factors, scaled by lc and
/// balanced to symmetric residues, divides f over ℤ.
fn try_subset(f: &IntPoly, lifted: &[PolyM], subset: &[usize], pk: &BigInt) -> Option<IntPoly> {
    let mut prod = PolyM {
        coeffs: vec![f.lc().mod_floor(pk)],
    };
    for &i in subset {
        prod = prod.mul(&lifted[i], pk);
    }
    // Symmetric lift.
    let half = pk / BigInt::from(2);
    let g = IntPoly::new(
        prod.coeffs
            .iter()
            .map(|c| {
                if c > &half {
                    c - pk
                } else {
                    c.clone()
                }
            })
            .collect(),
    )
    .primitive();
    if g.degree() == 0 {
        return None;
    }
    f.try_div_exact(&g).map(|_| g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<IntPoly>) -> Vec<IntPoly> {
        v.sort_by_key(|f| (f.degree(), f.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
        v
    }

    #[test]
    fn factors_products_of_quadratics() {
        // (x^2-2)(x^2-3)
        let f = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-3, 0, 1]));
        let fs = sorted(factor_squarefree(&f));
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&IntPoly::from_i64(&[-2, 0, 1])));
        assert!(fs.contains(&IntPoly::from_i64(&[-3, 0, 1])));
    }

    #[test]
    fn keeps_irreducible() {
        // x^4 - 10x^2 + 1: minimal for sqrt2+sqrt3, irreducible
        let f = IntPoly::from_i64(&[1, 0, -10, 0, 1]);
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0], f);
    }

    #[test]
    fn rational_roots_extracted() {
        // (2x - 1)(x^2 - 2)(x + 3)
        let f = IntPoly::from_i64(&[-1, 2])
            .mul(&IntPoly::from_i64(&[-2, 0, 1]))
            .mul(&IntPoly::from_i64(&[3, 1]));
        let fs = sorted(factor_squarefree(&f));
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn degree8_split() {
        // (z^2-18)(z^2-2) scaled example from a resultant
        let f = IntPoly::from_i64(&[-18, 0, 1]).mul(&IntPoly::from_i64(&[-2, 0, 1]));
        let fs = sorted(factor_squarefree(&f));
        assert_eq!(fs.len(), 2);
        // (x^2-2)(x^2-3)(x^2-6): all quadratics
        let f = IntPoly::from_i64(&[-2, 0, 1])
            .mul(&IntPoly::from_i64(&[-3, 0, 1]))
            .mul(&IntPoly::from_i64(&[-6, 0, 1]));
        let fs = sorted(factor_squarefree(&f));
        assert_eq!(fs.len(), 3);
    }
}
