//! Integer lattices in canonical (Hermite) form: membership, sum,
//! intersection, and saturation (relative divisible closure).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::snf::{snf, IntMat};
use crate::error::{Error, Result};

/// Sublattice of ℤ^dim presented by a row-style Hermite normal form basis:
/// pivots positive, entries above each pivot reduced into [0, pivot), rows
/// ordered by pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntLattice {
    /// Canonicalizes arbitrary generators (dependent/zero rows allowed).
    pub fn from_generators(dim: usize, gens: Vec<Vec<BigInt>>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), dim, "generator dimension mismatch");
        }
        let basis = hnf_rows(dim, gens);
        IntLattice { dim, basis }
    }

    pub fn from_generators_i64(dim: usize, gens: &[&[i64]]) -> Self {
        Self::from_generators(
            dim,
            gens.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// The full lattice ℤ^dim.
    pub fn standard(dim: usize) -> Self {
        let mut gens = Vec::new();
        for i in 0..dim {
            let mut v = vec![BigInt::zero(); dim];
            v[i] = BigInt::one();
            gens.push(v);
        }
        IntLattice::from_generators(dim, gens)
    }

    pub fn zero(dim: usize) -> Self {
        IntLattice { dim, basis: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for row in &self.basis {
            let p = pivot_col(row).unwrap();
            if v[p].is_zero() {
                continue;
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn is_sublattice_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut gens = self.basis.clone();
        gens.extend(other.basis.clone());
        IntLattice::from_generators(self.dim, gens)
    }

    /// Scales every basis vector by k.
    pub fn scaled(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return IntLattice::zero(self.dim);
        }
        IntLattice::from_generators(
            self.dim,
            self.basis
                .iter()
                .map(|r| r.iter().map(|x| x * k).collect())
                .collect(),
        )
    }

    /// Lattice intersection via the kernel construction.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        if self.basis.is_empty() || other.basis.is_empty() {
            return IntLattice::zero(self.dim);
        }
        // x in both iff x = a·A = b·B. Solve [A; -B] kernel over ℤ: rows of
        // kernel give coefficient pairs; the intersection is generated by the
        // corresponding combinations of A-rows.
        let ra = self.basis.len();
        let rb = other.basis.len();
        let mut stacked = Vec::with_capacity(ra + rb);
        stacked.extend(self.basis.clone());
        for r in &other.basis {
            stacked.push(r.iter().map(|x| -x).collect());
        }
        let m = IntMat::new(stacked);
        let kernel = integer_kernel(&m);
        let mut gens = Vec::new();
        for k in kernel {
            // combination of A-rows with the first ra coefficients
            let mut v = vec![BigInt::zero(); self.dim];
            for (i, coeff) in k.iter().take(ra).enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(&self.basis[i]) {
                    *x += coeff * y;
                }
            }
            gens.push(v);
        }
        IntLattice::from_generators(self.dim, gens)
    }

    /// Index [other : self] when self ⊆ other with equal rank (product of the
    /// invariant factors quotient); None when ranks differ.
    pub fn index_in(&self, other: &Self) -> Option<BigInt> {
        if !self.is_sublattice_of(other) || self.rank() != other.rank() {
            return None;
        }
        // Express self's basis over other's basis and take |det|.
        let coeffs: Vec<Vec<BigInt>> = self
            .basis
            .iter()
            .map(|r| other.coords_of(r).expect("membership checked"))
            .collect();
        let m = IntMat::new(coeffs);
        Some(m.det().abs())
    }

    /// Integer coordinates of a member vector over the HNF basis.
    pub fn coords_of(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = pivot_col(row).unwrap();
            if v[p].is_zero() {
                coords.push(BigInt::zero());
                continue;
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
            coords.push(q);
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

fn pivot_col(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Row-style HNF with positive pivots and entries above pivots reduced.
fn hnf_rows(dim: usize, mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..dim {
        loop {
            // rows with pivot at col
            let mut idxs: Vec<usize> = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| pivot_col(r) == Some(col))
                .map(|(i, _)| i)
                .collect();
            if idxs.is_empty() {
                break;
            }
            if idxs.len() == 1 {
                let r = rows.remove(idxs[0]);
                let r = if r[col].is_negative() {
                    r.iter().map(|x| -x).collect()
                } else {
                    r
                };
                basis.push(r);
                break;
            }
            // Euclid on the two smallest pivots.
            idxs.sort_by_key(|&i| rows[i][col].abs());
            let (small, big) = (idxs[0], idxs[1]);
            let q = {
                let a = rows[big][col].clone();
                let b = rows[small][col].clone();
                // round toward zero is fine for Euclid
                a / b
            };
            for j in 0..dim {
                let t = &q * &rows[small][j];
                rows[big][j] -= t;
            }
            if rows[big].iter().all(|x| x.is_zero()) {
                rows.remove(big);
            }
        }
    }
    basis.sort_by_key(|r| pivot_col(r).unwrap());
    // Reduce entries above pivots. For a fixed row k, reducing against rows
    // below in increasing pivot order keeps earlier reductions intact (each
    // step only touches columns at or past its own pivot).
    for k in 0..basis.len() {
        for i in k + 1..basis.len() {
            let p = pivot_col(&basis[i]).unwrap();
            let pv = basis[i][p].clone();
            if basis[k][p].is_zero() {
                continue;
            }
            let q = basis[k][p].div_floor(&pv);
            if q.is_zero() {
                continue;
            }
            for j in 0..dim {
                let t = &q * &basis[i][j];
                basis[k][j] -= t;
            }
        }
    }
    basis
}

/// Basis of the integer kernel {x : x·m = 0} (row-vector convention).
pub fn integer_kernel(m: &IntMat) -> Vec<Vec<BigInt>> {
    // x·m = 0  <=>  mᵀ·xᵀ = 0. Use SNF of m: U m V = D => x·m = x U⁻¹ D V⁻¹.
    // With y = x·U⁻¹: y D = 0 <=> y_i d_i = 0. Kernel rows: e_i U for i with
    // d_i = 0 or i ≥ rank.
    let r = snf(m);
    let rank = r.invariant_factors().len();
    let mut out = Vec::new();
    for i in rank..m.rows {
        out.push(r.u.data[i].clone());
    }
    out
}

/// Relative divisible closure: {x ∈ ambient : n·x ∈ l for some n > 0},
/// in canonical HNF. Errors unless l ⊆ ambient.
pub fn saturate(l: &IntLattice, ambient: &IntLattice) -> Result<IntLattice> {
    if l.dim() != ambient.dim() {
        return Err(Error::input("lattice dimension mismatch"));
    }
    if !l.is_sublattice_of(ambient) {
        return Err(Error::input("saturate: first lattice not contained in ambient"));
    }
    if l.rank() == 0 {
        return Ok(IntLattice::zero(l.dim()));
    }
    // Work in ambient coordinates.
    let coeffs: Vec<Vec<BigInt>> = l
        .basis()
        .iter()
        .map(|r| ambient.coords_of(r).expect("containment checked"))
        .collect();
    let k = ambient.rank();
    let m = IntMat::new(coeffs);
    // Saturation of rowspace(m) in ℤ^k: rows i < rank of V⁻¹... equivalently,
    // solve: saturation = kernel of the kernel. ker := {x : x·mᵀ-kernel...}
    // Direct route: x is in the saturation iff x is orthogonal to the rational
    // kernel of m's columns... Simplest correct construction: U m V = D. The
    // rowspace over ℚ is spanned by the first r rows of V⁻¹-inverse images.
    // x ∈ sat <=> x·V has zeros past position r. So sat = {y·P : y ∈ ℤ^r}
    // where P = first r rows of V⁻¹.
    let r = snf(&m);
    let rank = r.invariant_factors().len();
    let vinv = invert_unimodular(&r.v);
    let mut gens = Vec::new();
    for i in 0..rank {
        gens.push(vinv.data[i].clone());
    }
    // gens are in ambient coordinates; map back to ℤ^dim.
    let amb = ambient.basis();
    let mut out = Vec::new();
    for g in gens {
        let mut v = vec![BigInt::zero(); l.dim()];
        for (c, row) in g.iter().zip(amb.iter().take(k)) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x += c * y;
            }
        }
        out.push(v);
    }
    Ok(IntLattice::from_generators(l.dim(), out))
}

/// Inverse of a unimodular integer matrix (via adjugate/Bareiss solves).
pub fn invert_unimodular(m: &IntMat) -> IntMat {
    let n = m.rows;
    assert_eq!(m.rows, m.cols);
    let det = m.det();
    assert!(det.abs().is_one(), "matrix not unimodular");
    // Solve m·X = I column by column with Cramer (n small).
    let mut inv = IntMat::zero(n, n);
    for col in 0..n {
        for row in 0..n {
            // cofactor expansion: inv[row][col] = det(M with col `row`
            // replaced... use adjugate: adj = det * m⁻¹; inv = adj / det.
            let minor = minor_det(m, col, row);
            let sign = if (row + col) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            inv.data[row][col] = sign * minor / &det;
        }
    }
    debug_assert_eq!(m.mul(&inv), IntMat::identity(n));
    inv
}

fn minor_det(m: &IntMat, skip_row: usize, skip_col: usize) -> BigInt {
    let n = m.rows;
    let data: Vec<Vec<BigInt>> = (0..n)
        .filter(|&i| i != skip_row)
        .map(|i| {
            (0..n)
                .filter(|&j| j != skip_col)
                .map(|j| m.data[i][j].clone())
                .collect()
        })
        .collect();
    IntMat::new(data).det()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_membership() {
        let l = IntLattice::from_generators_i64(2, &[&[2, 0], &[0, 2]]);
        assert!(l.contains(&[BigInt::from(4), BigInt::from(-2)]));
        assert!(!l.contains(&[BigInt::from(1), BigInt::from(0)]));
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn saturate_examples() {
        let z2 = IntLattice::standard(2);
        // index-4 sublattice saturates to the full lattice
        let l = IntLattice::from_generators_i64(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(saturate(&l, &z2).unwrap(), z2);
        // already pure
        let l = IntLattice::from_generators_i64(2, &[&[1, 1]]);
        assert_eq!(saturate(&l, &z2).unwrap(), l);
        // <(2,4)> saturates to <(1,2)>
        let l = IntLattice::from_generators_i64(2, &[&[2, 4]]);
        let expect = IntLattice::from_generators_i64(2, &[&[1, 2]]);
        assert_eq!(saturate(&l, &z2).unwrap(), expect);
        // divisor-enumeration oracle for the same example: all x in a box
        // with n*x in L for some n <= 4
        let sat = saturate(&l, &z2).unwrap();
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let v = vec![BigInt::from(a), BigInt::from(b)];
                let divides = (1..=4).any(|n| {
                    let w: Vec<BigInt> = v.iter().map(|x| x * BigInt::from(n)).collect();
                    l.contains(&w)
                });
                assert_eq!(divides, sat.contains(&v), "({a},{b})");
            }
        }
    }

    #[test]
    fn saturate_requires_containment() {
        let l = IntLattice::from_generators_i64(2, &[&[1, 0]]);
        let amb = IntLattice::from_generators_i64(2, &[&[0, 1]]);
        assert!(saturate(&l, &amb).is_err());
    }

    #[test]
    fn saturate_idempotent_monotone() {
        let z3 = IntLattice::standard(3);
        let l = IntLattice::from_generators_i64(3, &[&[2, 4, 6], &[0, 10, 5]]);
        let s = saturate(&l, &z3).unwrap();
        assert_eq!(saturate(&s, &z3).unwrap(), s);
        assert!(l.is_sublattice_of(&s));
        // finite index: equal rank
        assert_eq!(l.rank(), s.rank());
    }

    #[test]
    fn intersection() {
        let a = IntLattice::from_generators_i64(2, &[&[2, 0], &[0, 1]]);
        let b = IntLattice::from_generators_i64(2, &[&[3, 0], &[0, 1]]);
        let c = a.intersect(&b);
        assert!(c.contains(&[BigInt::from(6), BigInt::zero()]));
        assert!(!c.contains(&[BigInt::from(2), BigInt::zero()]));
        assert!(!c.contains(&[BigInt::from(3), BigInt::zero()]));
        assert!(c.contains(&[BigInt::zero(), BigInt::one()]));
    }
}
