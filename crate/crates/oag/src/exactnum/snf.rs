//! Smith normal form of integer matrices with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl IntMat {
    pub fn new(data: Vec<Vec<BigInt>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMat { rows, cols, data }
    }

    pub fn from_i64(data: &[&[i64]]) -> Self {
        IntMat::new(
            data.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in data.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        IntMat {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self.data[i][k] * &other.data[k][j];
                    out.data[i][j] += t;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }

    /// Determinant via Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
                match swap {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = t;
                }
            }
            for row in a.iter_mut().take(n).skip(k + 1) {
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }
}

/// Smith normal form: unimodular U (rows x rows), V (cols x cols) with
/// U·m·V = D diagonal, d_i | d_{i+1}, d_i ≥ 0.
pub struct SnfResult {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SnfResult {
    pub fn diag(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d.data[i][i].clone()).collect()
    }

    /// Nonzero invariant factors.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diag().into_iter().filter(|d| !d.is_zero()).collect()
    }
}

pub fn snf(m: &IntMat) -> SnfResult {
    let rows = m.rows;
    let cols = m.cols;
    let mut d = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);

    let mut t = 0usize;
    while t < rows.min(cols) {
        // Find a pivot (smallest nonzero abs value in the submatrix).
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d.data[i][j].is_zero() {
                    continue;
                }
                match &pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if d.data[i][j].abs() < d.data[*pi][*pj].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let (pi, pj) = match pivot {
            None => break,
            Some(p) => p,
        };
        // Move pivot to (t, t).
        if pi != t {
            d.data.swap(pi, t);
            u.data.swap(pi, t);
        }
        if pj != t {
            for row in d.data.iter_mut() {
                row.swap(pj, t);
            }
            for row in v.data.iter_mut() {
                row.swap(pj, t);
            }
        }
        // Reduce column t and row t.
        let mut clean = true;
        for i in t + 1..rows {
            if d.data[i][t].is_zero() {
                continue;
            }
            let q = div_round(&d.data[i][t], &d.data[t][t]);
            if !q.is_zero() {
                row_sub(&mut d, i, t, &q);
                row_sub(&mut u, i, t, &q);
            }
            if !d.data[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if d.data[t][j].is_zero() {
                continue;
            }
            let q = div_round(&d.data[t][j], &d.data[t][t]);
            if !q.is_zero() {
                col_sub(&mut d, j, t, &q);
                col_sub(&mut v, j, t, &q);
            }
            if !d.data[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue; // repeat with a smaller pivot
        }
        t += 1;
    }

    // Positive diagonal.
    for i in 0..rows.min(cols) {
        if d.data[i][i].is_negative() {
            for j in 0..cols {
                d.data[i][j] = -d.data[i][j].clone();
            }
            // negate row i of the product by negating U's row i
            for j in 0..rows {
                u.data[i][j] = -u.data[i][j].clone();
            }
        }
    }

    // Enforce divisibility chain: d_i | d_{i+1}.
    let n = rows.min(cols);
    loop {
        let mut fixed = true;
        for i in 0..n.saturating_sub(1) {
            let a = d.data[i][i].clone();
            let b = d.data[i + 1][i + 1].clone();
            if a.is_zero() || b.is_zero() || (&b % &a).is_zero() {
                continue;
            }
            fixed = false;
            // Standard trick: add column i+1 to column i, then re-reduce the
            // 2x2 block with row/col operations until diagonal again.
            col_add(&mut d, i, i + 1);
            col_add(&mut v, i, i + 1);
            // Now the block is [[a, 0], [b, b]]; clear with gcd steps.
            reduce_two_by_two(&mut d, &mut u, &mut v, i);
        }
        if fixed {
            break;
        }
    }

    debug_assert!({
        let prod = u.mul(m).mul(&v);
        prod == d
    });
    SnfResult { u, d, v }
}

/// Rounded division minimizing |a - q*b|.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn row_sub(m: &mut IntMat, i: usize, k: usize, q: &BigInt) {
    for j in 0..m.cols {
        let t = q * &m.data[k][j];
        m.data[i][j] -= t;
    }
}

fn col_sub(m: &mut IntMat, j: usize, k: usize, q: &BigInt) {
    for i in 0..m.rows {
        let t = q * &m.data[i][k];
        m.data[i][j] -= t;
    }
}

fn col_add(m: &mut IntMat, dst: usize, src: usize) {
    for i in 0..m.rows {
        let t = m.data[i][src].clone();
        m.data[i][dst] += t;
    }
}

/// Re-diagonalizes rows/cols i, i+1 after a column merge, via Euclidean steps.
fn reduce_two_by_two(d: &mut IntMat, u: &mut IntMat, v: &mut IntMat, i: usize) {
    loop {
        // Clear column i below the diagonal.
        if !d.data[i + 1][i].is_zero() {
            if d.data[i][i].is_zero() || d.data[i + 1][i].abs() < d.data[i][i].abs() {
                d.data.swap(i, i + 1);
                u.data.swap(i, i + 1);
                continue;
            }
            let q = div_round(&d.data[i + 1][i].clone(), &d.data[i][i].clone());
            row_sub(d, i + 1, i, &q);
            row_sub(u, i + 1, i, &q);
            if !d.data[i + 1][i].is_zero() {
                continue;
            }
        }
        if !d.data[i][i + 1].is_zero() {
            let q = div_round(&d.data[i][i + 1].clone(), &d.data[i][i].clone());
            col_sub(d, i + 1, i, &q);
            col_sub(v, i + 1, i, &q);
            if !d.data[i][i + 1].is_zero() {
                // swap columns
                for row in d.data.iter_mut() {
                    row.swap(i, i + 1);
                }
                for row in v.data.iter_mut() {
                    row.swap(i, i + 1);
                }
                continue;
            }
        }
        if d.data[i + 1][i].is_zero() && d.data[i][i + 1].is_zero() {
            break;
        }
    }
    // Positive signs again.
    for k in [i, i + 1] {
        if d.data[k][k].is_negative() {
            for j in 0..d.cols {
                d.data[k][j] = -d.data[k][j].clone();
            }
            for j in 0..u.cols {
                u.data[k][j] = -u.data[k][j].clone();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMat) {
        let r = snf(m);
        // U m V = D exactly
        assert_eq!(r.u.mul(m).mul(&r.v), r.d);
        // unimodular
        assert_eq!(r.u.det().abs(), BigInt::one());
        assert_eq!(r.v.det().abs(), BigInt::one());
        // divisibility chain
        let diag = r.diag();
        for w in diag.windows(2) {
            if !w[0].is_zero() && !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "chain broken: {:?}", diag);
            }
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn identity_and_zero() {
        let m = IntMat::identity(3);
        let r = snf(&m);
        assert_eq!(r.d, IntMat::identity(3));
        check(&m);
        let z = IntMat::zero(2, 3);
        let r = snf(&z);
        assert!(r.diag().iter().all(|d| d.is_zero()));
    }

    #[test]
    fn frozen_example() {
        // [[2,4],[6,8]]: |det| = 8, d1 = gcd of entries = 2 => D = diag(2, 4)
        let m = IntMat::from_i64(&[&[2, 4], &[6, 8]]);
        let r = snf(&m);
        assert_eq!(r.diag(), vec![BigInt::from(2), BigInt::from(4)]);
        check(&m);
    }

    #[test]
    fn random_small() {
        // a few deterministic pseudo-random matrices
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 21) as i64 - 10
        };
        for rows in 1..4usize {
            for cols in 1..4usize {
                for _ in 0..20 {
                    let data: Vec<Vec<BigInt>> = (0..rows)
                        .map(|_| (0..cols).map(|_| BigInt::from(next())).collect())
                        .collect();
                    check(&IntMat::new(data));
                }
            }
        }
    }
}
