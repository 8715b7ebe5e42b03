//! Exact arithmetic in `Z[omega]`, `omega` a primitive `p`-th root of unity.
//!
//! An element is a coefficient vector of length `p` over the powers
//! `omega^0, ..., omega^{p-1}`. The relation `1 + omega + ... + omega^{p-1} = 0`
//! is quotiented out by fixing the canonical representative with last
//! coefficient zero, so equality is a plain vector comparison.

use crate::error::Result;
use crate::group::{dual_pairing, GroupElement, Prime};
use crate::set::ElemSet;
use serde::Serialize;

/// Cyclotomic integer in canonical form (`coeffs[p-1] == 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CycInt {
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn zero(p: Prime) -> CycInt {
        CycInt {
            coeffs: vec![0; p.get() as usize],
        }
    }

    pub fn from_integer(p: Prime, n: i64) -> CycInt {
        let mut c = Self::zero(p);
        c.coeffs[0] = n;
        c
    }

    /// `omega^e` (exponent taken mod p).
    pub fn root_power(p: Prime, e: i64) -> CycInt {
        let mut c = Self::zero(p);
        let e = e.rem_euclid(p.get() as i64) as usize;
        c.coeffs[e] = 1;
        c.canonicalize();
        c
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> CycInt {
        let mut c = CycInt { coeffs };
        c.canonicalize();
        c
    }

    fn canonicalize(&mut self) {
        let last = *self.coeffs.last().expect("p >= 2");
        if last != 0 {
            for c in &mut self.coeffs {
                *c = c.checked_sub(last).expect("cyclotomic coefficient overflow");
            }
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).expect("cyclotomic coefficient overflow"))
            .collect();
        // sum of canonical forms is canonical
        CycInt { coeffs }
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        let p = self.coeffs.len();
        assert_eq!(p, other.coeffs.len());
        let mut coeffs = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = (i + j) % p;
                coeffs[k] = coeffs[k]
                    .checked_add(a.checked_mul(b).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
        let mut c = CycInt { coeffs };
        c.canonicalize();
        c
    }

    /// Galois action `omega -> omega^e`; `e` must be coprime to `p`.
    pub fn galois(&self, p: Prime, e: i64) -> CycInt {
        let q = p.get() as usize;
        let e = e.rem_euclid(q as i64) as usize;
        assert!(e != 0, "galois exponent must be a unit mod p");
        let mut coeffs = vec![0i64; q];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[i * e % q] += a;
        }
        let mut c = CycInt { coeffs };
        c.canonicalize();
        c
    }
}

/// Character sum `sum_{g in K} omega^{<chi, g>}`.
pub fn char_sum(p: Prime, part: &ElemSet, chi: GroupElement) -> Result<CycInt> {
    let q = p.get() as usize;
    let mut coeffs = vec![0i64; q];
    for i in part.iter() {
        let g = GroupElement::from_index(p, i);
        coeffs[dual_pairing(p, chi, g) as usize] += 1;
    }
    let mut c = CycInt { coeffs };
    c.canonicalize();
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn exponent_wrap() {
        let p5 = p(5);
        let w = CycInt::root_power(p5, 1);
        let w4 = CycInt::root_power(p5, 4);
        assert_eq!(w.mul(&w4), CycInt::from_integer(p5, 1));
    }

    #[test]
    fn full_root_sum_vanishes() {
        for q in [2u64, 3, 5, 7, 11] {
            let pp = p(q);
            let mut s = CycInt::zero(pp);
            for e in 0..q as i64 {
                s = s.add(&CycInt::root_power(pp, e));
            }
            assert!(s.is_zero());
        }
    }

    #[test]
    fn hand_expanded_product() {
        // p = 5: (w + w^4)(w^2 + w^3) = w^3 + w^4 + w + w^2 = -1
        let p5 = p(5);
        let a = CycInt::root_power(p5, 1).add(&CycInt::root_power(p5, 4));
        let b = CycInt::root_power(p5, 2).add(&CycInt::root_power(p5, 3));
        assert_eq!(a.mul(&b), CycInt::from_integer(p5, -1));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let c = CycInt::from_coeffs(vec![2, 3, 3, 3, 3]);
        assert_eq!(c, CycInt::from_coeffs(vec![-1, 0, 0, 0, 0]));
        assert_eq!(c.coeffs(), &[-1, 0, 0, 0, 0]);
        let again = CycInt::from_coeffs(c.coeffs().to_vec());
        assert_eq!(c, again);
    }

    #[test]
    fn char_sums() {
        let p5 = p(5);
        let n = p5.order();
        // principal character: |K| * w^0
        let part = ElemSet::from_indices(n, [3, 7, 11]);
        let s = char_sum(p5, &part, GroupElement::identity()).unwrap();
        assert_eq!(s, CycInt::from_integer(p5, 3));
        // K = G, chi nonprincipal: 0 by column orthogonality
        let g_all = ElemSet::full(n);
        let s = char_sum(p5, &g_all, GroupElement { a: 1, b: 2 }).unwrap();
        assert!(s.is_zero());
        // K = {y, y^2, y^3, y^4}, chi = (0,1) -> -1
        let part = ElemSet::from_indices(
            n,
            (1..5).map(|b| GroupElement { a: 0, b }.index(p5)),
        );
        let s = char_sum(p5, &part, GroupElement { a: 0, b: 1 }).unwrap();
        assert_eq!(s, CycInt::from_integer(p5, -1));
    }

    #[test]
    fn char_sum_additive_on_disjoint_parts() {
        let p7 = p(7);
        let n = p7.order();
        let k1 = ElemSet::from_indices(n, [1, 5, 9]);
        let k2 = ElemSet::from_indices(n, [2, 10, 30]);
        let chi = GroupElement { a: 2, b: 3 };
        let lhs = char_sum(p7, &k1.union(&k2), chi).unwrap();
        let rhs = char_sum(p7, &k1, chi)
            .unwrap()
            .add(&char_sum(p7, &k2, chi).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn galois_action_consistency() {
        // applying omega -> omega^e to char_sum(K, chi) gives char_sum(K, chi^e)
        let p7 = p(7);
        let n = p7.order();
        let part = ElemSet::from_indices(n, [3, 8, 15, 40]);
        let chi = GroupElement { a: 1, b: 4 };
        for e in 1..7i64 {
            let lhs = char_sum(p7, &part, chi).unwrap().galois(p7, e);
            let chi_e = crate::group::pow(p7, chi, e);
            let rhs = char_sum(p7, &part, chi_e).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
