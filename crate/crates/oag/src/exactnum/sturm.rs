//! Sturm sequences: exact real-root counting and isolation for squarefree
//! integer polynomials.

use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use super::rat::Rat;

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(f: &IntPoly) -> Self {
        let mut seq = vec![f.primitive()];
        if f.degree() >= 1 {
            seq.push(f.derivative().primitive());
            loop {
                let n = seq.len();
                let r = seq[n - 2].pseudo_rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                // pseudo_rem multiplies by lc^k which can flip sign when lc < 0
                // and k odd; renormalize sign so the chain stays a Sturm chain.
                let k = seq[n - 2].degree() - seq[n - 1].degree() + 1;
                let lc = seq[n - 1].lc();
                let flip = lc.is_negative() && k % 2 == 1;
                let mut r = r.neg(); // Sturm: next = -rem
                if flip {
                    r = r.neg();
                }
                // strip content but keep sign
                let c = r.content();
                let r = IntPoly::new(r.coeffs.iter().map(|x| x / &c).collect());
                seq.push(r);
            }
        }
        Sturm { seq }
    }

    fn sign_changes_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.seq {
            let v = p.eval_rat(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of real roots in the half-open interval (lo, hi].
    pub fn count_roots(&self, lo: &Rat, hi: &Rat) -> usize {
        assert!(lo <= hi);
        self.sign_changes_at(lo) - self.sign_changes_at(hi)
    }

    /// Number of roots in the open interval (lo, hi); endpoints must not be
    /// roots of the polynomial.
    pub fn count_roots_open(&self, lo: &Rat, hi: &Rat) -> usize {
        debug_assert!(!self.seq[0].eval_rat(lo).is_zero());
        debug_assert!(!self.seq[0].eval_rat(hi).is_zero());
        self.count_roots(lo, hi)
    }
}

/// Isolates all real roots of a squarefree polynomial: disjoint open rational
/// intervals, one root each, endpoints not roots, sorted ascending.
pub fn isolate_real_roots(f: &IntPoly) -> Vec<(Rat, Rat)> {
    let f = f.squarefree_part();
    if f.degree() == 0 {
        return vec![];
    }
    let sturm = Sturm::new(&f);
    let bound = f.root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    // Nudge endpoints off roots (Cauchy bound is strict, so they are safe).
    let mut stack = vec![(lo.clone(), hi.clone())];
    // ensure not roots
    debug_assert!(!f.eval_rat(&lo).is_zero() && !f.eval_rat(&hi).is_zero());
    let mut out = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_roots(&a, &b);
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mut mid = (&a + &b) / Rat::from_integer(2.into());
                // avoid a root at the midpoint
                while f.eval_rat(&mid).is_zero() {
                    mid = (&a + &mid) / Rat::from_integer(2.into());
                }
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    let _ = (&mut lo, &mut hi);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{rat, rat_int};

    #[test]
    fn count_sqrt2() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let s = Sturm::new(&f);
        assert_eq!(s.count_roots(&rat_int(-3), &rat_int(3)), 2);
        assert_eq!(s.count_roots(&rat_int(0), &rat_int(3)), 1);
        assert_eq!(s.count_roots(&rat_int(1), &rat(3, 2)), 1);
        assert_eq!(s.count_roots(&rat(3, 2), &rat_int(3)), 0);
    }

    #[test]
    fn isolate_quartic() {
        // (x^2-2)(x^2-3): roots ±√2, ±√3
        let f = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-3, 0, 1]));
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 4);
        for (lo, hi) in &roots {
            assert!(lo < hi);
        }
    }

    #[test]
    fn no_real_roots() {
        let f = IntPoly::from_i64(&[1, 0, 1]); // x^2+1
        assert!(isolate_real_roots(&f).is_empty());
    }
}
