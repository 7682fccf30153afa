//! Polynomial arithmetic over 𝔽_p for small odd primes, plus Berlekamp
//! factorization. Used only as a subroutine of integer factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::IntPoly;

/// Dense poly over 𝔽_p, low degree first, normalized (no leading zeros).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyP {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl PolyP {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last().map_or(false, |&c| c == 0) {
            coeffs.pop();
        }
        PolyP { p, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let bp = BigInt::from(p);
        PolyP::new(
            p,
            f.coeffs
                .iter()
                .map(|c| {
                    let m = c.mod_floor(&bp);
                    m.to_u64().expect("reduced residue fits u64")
                })
                .collect(),
        )
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

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lc(), self.p);
        PolyP::new(
            self.p,
            self.coeffs.iter().map(|&c| mulmod(c, inv, self.p)).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = (a + b) % self.p;
        }
        PolyP::new(self.p, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = (a + self.p - b) % self.p;
        }
        PolyP::new(self.p, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PolyP::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        PolyP::new(self.p, out)
    }

    /// (quotient, remainder)
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let p = self.p;
        if self.is_zero() || self.degree() < d.degree() {
            return (PolyP::new(p, vec![]), self.clone());
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let inv = invmod(d.lc(), p);
        let mut q = vec![0u64; self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let c = mulmod(r[k + dd], inv, p);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &dc) in d.coeffs.iter().enumerate() {
                r[k + i] = (r[k + i] + p - mulmod(c, dc, p)) % p;
            }
        }
        (PolyP::new(p, q), PolyP::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PolyP::new(self.p, vec![]);
        }
        PolyP::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, (i as u64) % self.p, self.p))
                .collect(),
        )
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = PolyP::new(self.p, vec![1]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == 0
    }
}

/// Berlekamp: factors a squarefree monic polynomial over 𝔽_p into monic
/// irreducible factors.
pub fn berlekamp(f: &PolyP) -> Vec<PolyP> {
    let p = f.p;
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    // Build Q matrix: rows are x^(p*i) mod f for i in 0..n.
    let x = PolyP::new(p, vec![0, 1]);
    let xp = x.pow_mod(p, f);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = PolyP::new(p, vec![1]);
    for _ in 0..n {
        let mut row = vec![0u64; n];
        for (j, &c) in cur.coeffs.iter().enumerate() {
            row[j] = c;
        }
        rows.push(row);
        cur = cur.mul(&xp).rem(f);
    }
    // Q - I, kernel over F_p.
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = rows[i][j];
                    if i == j {
                        (v + p - 1) % p
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    // Transpose not needed if we solve v * (Q - I) = 0 via column reduction;
    // easier: kernel of (Q - I)^T x = 0 where rows above are images.
    // rows[i] = coeffs of x^{p i} mod f; we need v with sum_i v_i rows[i] = v
    // i.e. v (Q - I) = 0 treating rows as matrix rows. Gaussian-eliminate mᵀ.
    let mut mt = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            mt[j][i] = m[i][j];
        }
    }
    m = mt;
    // Kernel basis of m * v = 0.
    let kernel = nullspace_mod_p(&m, p);
    if kernel.len() == 1 {
        return vec![f.monic()];
    }
    // Split using kernel vectors.
    let mut factors = vec![f.monic()];
    for v in &kernel {
        if factors.len() == kernel.len() {
            break;
        }
        let vp = PolyP::new(p, v.clone());
        if vp.degree() == 0 {
            continue;
        }
        let mut next: Vec<PolyP> = Vec::new();
        for fac in factors {
            if fac.degree() <= 1 {
                next.push(fac);
                continue;
            }
            let mut pieces = vec![fac.clone()];
            let mut split: Vec<PolyP> = Vec::new();
            for s in 0..p {
                if pieces.is_empty() {
                    break;
                }
                let shifted = vp.sub(&PolyP::new(p, vec![s]));
                let mut still = Vec::new();
                for piece in pieces {
                    let g = piece.gcd(&shifted);
                    if g.degree() > 0 && g.degree() < piece.degree() {
                        let (q, r) = piece.div_rem(&g);
                        debug_assert!(r.is_zero());
                        split.push(g);
                        still.push(q.monic());
                    } else {
                        still.push(piece);
                    }
                }
                pieces = still;
            }
            split.extend(pieces);
            next.extend(split);
        }
        factors = next;
    }
    factors
}

/// Kernel basis of m·v = 0 over 𝔽_p (m is square n×n).
fn nullspace_mod_p(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let pr = (row..n).find(|&r| a[r][col] != 0);
        if let Some(pr) = pr {
            a.swap(row, pr);
            let inv = invmod(a[row][col], p);
            for j in 0..n {
                a[row][j] = mulmod(a[row][j], inv, p);
            }
            for r in 0..n {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    for j in 0..n {
                        a[r][j] = (a[r][j] + p - mulmod(f, a[row][j], p)) % p;
                    }
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
        }
    }
    let pivots: Vec<usize> = pivot_col_of_row;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u64; n];
        v[fc] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot var = -sum(free contributions)
            v[pc] = (p - a[r][fc] % p) % p;
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits() {
        // x^2 - 1 = (x-1)(x+1) mod 5
        let f = PolyP::new(5, vec![4, 0, 1]);
        let mut fs = berlekamp(&f);
        fs.sort_by_key(|f| f.coeffs.clone());
        assert_eq!(fs.len(), 2);
        // x^2 + 1 irreducible mod 7 (since -1 is not a QR mod 7)
        let f = PolyP::new(7, vec![1, 0, 1]);
        let fs = berlekamp(&f);
        assert_eq!(fs.len(), 1);
        // x^4 - 10x^2 + 1 (minpoly of sqrt2+sqrt3) splits mod any prime
        let f = PolyP::new(7, vec![1, 0, 7 - 3, 0, 1]);
        let _ = berlekamp(&f); // just exercising; count depends on p
    }

    #[test]
    fn poly_p_ops() {
        let p = 13;
        let a = PolyP::new(p, vec![1, 2, 3]);
        let b = PolyP::new(p, vec![5, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }
}
