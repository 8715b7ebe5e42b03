//! Index-level group operations for the two carriers the engine works on:
//! `C_p x C_p` on `p^2` slots and a cyclic group of order `p` on `p` slots
//! (used for the restriction and quotient theories on lines).

use crate::group::{GroupElement, Prime};

pub trait Carrier {
    fn size(&self) -> usize;
    fn mul_idx(&self, a: usize, b: usize) -> usize;
    fn inv_idx(&self, a: usize) -> usize;
}

/// `G = C_p x C_p`, slot `a*p + b` for the element `x^a y^b`.
#[derive(Debug, Clone, Copy)]
pub struct Gp2(pub Prime);

impl Carrier for Gp2 {
    fn size(&self) -> usize {
        self.0.order()
    }

    #[inline]
    fn mul_idx(&self, a: usize, b: usize) -> usize {
        let p = self.0;
        crate::group::mul(
            p,
            GroupElement::from_index(p, a),
            GroupElement::from_index(p, b),
        )
        .index(p)
    }

    #[inline]
    fn inv_idx(&self, a: usize) -> usize {
        let p = self.0;
        crate::group::inv(p, GroupElement::from_index(p, a)).index(p)
    }
}

/// `Z/p` written multiplicatively, slot `i` for the `i`-th power of the
/// fixed generator.
#[derive(Debug, Clone, Copy)]
pub struct Cyclic(pub Prime);

impl Carrier for Cyclic {
    fn size(&self) -> usize {
        self.0.get() as usize
    }

    #[inline]
    fn mul_idx(&self, a: usize, b: usize) -> usize {
        (a + b) % self.0.get() as usize
    }

    #[inline]
    fn inv_idx(&self, a: usize) -> usize {
        let p = self.0.get() as usize;
        (p - a) % p
    }
}
