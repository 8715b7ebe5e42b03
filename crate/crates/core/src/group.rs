//! Arithmetic of `G = C_p x C_p`, its subgroup structure, power classes
//! and the pairing with the dual group.
//!
//! Elements are written multiplicatively as `x^a * y^b` in all I/O but
//! stored as exponent pairs `(a, b)` in `(Z/p)^2`. The element with
//! exponents `(a, b)` occupies index slot `a*p + b`; this fixed indexing
//! makes every bit-vector set and every serialized output deterministic.

use crate::error::{Error, Result};
use crate::set::ElemSet;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest prime the engine accepts anywhere.
pub const MAX_PRIME: u64 = 47;

/// A verified prime `p <= 47`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p < 2 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeOutOfRange(p, MAX_PRIME));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of element slots of `C_p x C_p`.
    #[inline]
    pub fn order(self) -> usize {
        (self.0 * self.0) as usize
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Point of `(Z/p)^2`, the group element `x^a * y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub a: u32,
    pub b: u32,
}

impl GroupElement {
    pub fn new(p: Prime, a: i64, b: i64) -> GroupElement {
        let p = p.get() as i64;
        GroupElement {
            a: a.rem_euclid(p) as u32,
            b: b.rem_euclid(p) as u32,
        }
    }

    pub const fn identity() -> GroupElement {
        GroupElement { a: 0, b: 0 }
    }

    pub fn is_identity(self) -> bool {
        self.a == 0 && self.b == 0
    }

    #[inline]
    pub fn index(self, p: Prime) -> usize {
        (self.a * p.get() + self.b) as usize
    }

    #[inline]
    pub fn from_index(p: Prime, i: usize) -> GroupElement {
        let q = p.get() as usize;
        GroupElement {
            a: (i / q) as u32,
            b: (i % q) as u32,
        }
    }

    pub fn text(self) -> String {
        format!("x^{}*y^{}", self.a, self.b)
    }
}

pub fn mul(p: Prime, g: GroupElement, h: GroupElement) -> GroupElement {
    let q = p.get();
    GroupElement {
        a: (g.a + h.a) % q,
        b: (g.b + h.b) % q,
    }
}

pub fn inv(p: Prime, g: GroupElement) -> GroupElement {
    let q = p.get();
    GroupElement {
        a: (q - g.a) % q,
        b: (q - g.b) % q,
    }
}

pub fn pow(p: Prime, g: GroupElement, e: i64) -> GroupElement {
    let q = p.get() as i64;
    let e = e.rem_euclid(q) as u32;
    let q = p.get();
    GroupElement {
        a: g.a * e % q,
        b: g.b * e % q,
    }
}

/// Order of `m` modulo `p`, often written `||m||_p`.
pub fn order_mod(m: i64, p: Prime) -> Result<u32> {
    let q = p.get() as i64;
    let m = m.rem_euclid(q) as u64;
    if m == 0 {
        return Err(Error::InvalidArgument(format!(
            "order_mod: {} is divisible by {}",
            m,
            p.get()
        )));
    }
    let q = p.get() as u64;
    let mut acc = m;
    let mut d = 1;
    while acc != 1 {
        acc = acc * m % q;
        d += 1;
    }
    Ok(d)
}

/// Smallest positive primitive root modulo `p`.
///
/// For `p = 2` the unit group is trivial; 1 is returned and callers that
/// need a genuine generator must gate on [`Prime::is_odd`].
pub fn primitive_root(p: Prime) -> u32 {
    if p.get() == 2 {
        return 1;
    }
    let target = p.get() - 1;
    (2..p.get())
        .find(|&r| order_mod(r as i64, p).unwrap() == target)
        .expect("every odd prime has a primitive root")
}

/// The power-class `[g]_m = {g, g^m, g^{m^2}, ...}`.
pub fn power_class(p: Prime, g: GroupElement, m: i64) -> Result<ElemSet> {
    let q = p.get() as i64;
    if m.rem_euclid(q) == 0 {
        return Err(Error::InvalidArgument(
            "power_class: m must be coprime to p".into(),
        ));
    }
    let mut set = ElemSet::empty(p.order());
    let mut h = g;
    loop {
        set.insert(h.index(p));
        h = pow(p, h, m);
        if h == g {
            break;
        }
    }
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgroupKind {
    Trivial,
    Line,
    Full,
}

/// A subgroup of `C_p x C_p`: trivial, one of the `p+1` lines, or all of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub kind: SubgroupKind,
    pub elements: ElemSet,
    /// Canonical generator; `None` for the trivial subgroup.
    pub generator: Option<GroupElement>,
}

impl Subgroup {
    pub fn trivial(p: Prime) -> Subgroup {
        Subgroup {
            kind: SubgroupKind::Trivial,
            elements: ElemSet::singleton(p.order(), 0),
            generator: None,
        }
    }

    pub fn full(p: Prime) -> Subgroup {
        Subgroup {
            kind: SubgroupKind::Full,
            elements: ElemSet::full(p.order()),
            generator: Some(GroupElement { a: 1, b: 0 }),
        }
    }

    pub fn line(p: Prime, gen: GroupElement) -> Result<Subgroup> {
        if gen.is_identity() {
            return Err(Error::InvalidArgument(
                "a line needs a nonidentity generator".into(),
            ));
        }
        let mut elements = ElemSet::empty(p.order());
        for e in 0..p.get() as i64 {
            elements.insert(pow(p, gen, e).index(p));
        }
        // canonical generator: (1, b) when the line meets a = 1, else (0, 1)
        let canonical = if gen.a == 0 {
            GroupElement { a: 0, b: 1 }
        } else {
            let e = mod_inverse(gen.a, p);
            pow(p, gen, e as i64)
        };
        Ok(Subgroup {
            kind: SubgroupKind::Line,
            elements,
            generator: Some(canonical),
        })
    }

    pub fn order(&self, p: Prime) -> usize {
        match self.kind {
            SubgroupKind::Trivial => 1,
            SubgroupKind::Line => p.get() as usize,
            SubgroupKind::Full => p.order(),
        }
    }

    pub fn contains(&self, p: Prime, g: GroupElement) -> bool {
        self.elements.contains(g.index(p))
    }
}

fn mod_inverse(a: u32, p: Prime) -> u32 {
    let q = p.get() as u64;
    let mut acc = 1u64;
    // a^(p-2) mod p
    let mut base = a as u64 % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc as u32
}

/// The `p+1` lines in the fixed order `<x>, <y>, <xy>, <xy^2>, ..., <xy^{p-1}>`.
pub fn proper_subgroups(p: Prime) -> Vec<Subgroup> {
    let mut out = Vec::with_capacity(p.get() as usize + 1);
    out.push(Subgroup::line(p, GroupElement { a: 1, b: 0 }).unwrap());
    out.push(Subgroup::line(p, GroupElement { a: 0, b: 1 }).unwrap());
    for b in 1..p.get() {
        out.push(Subgroup::line(p, GroupElement { a: 1, b }).unwrap());
    }
    out
}

/// Smallest subgroup of `G` containing `s`.
pub fn subgroup_generated(p: Prime, s: &ElemSet) -> Subgroup {
    let nonid: Vec<GroupElement> = s
        .iter()
        .map(|i| GroupElement::from_index(p, i))
        .filter(|g| !g.is_identity())
        .collect();
    let Some(&first) = nonid.first() else {
        return Subgroup::trivial(p);
    };
    let line = Subgroup::line(p, first).unwrap();
    if nonid.iter().all(|&g| line.contains(p, g)) {
        line
    } else {
        Subgroup::full(p)
    }
}

/// Exponent of the pairing `chi(g) = omega^{<chi, g>}` between `G` and its
/// dual, with both sides written in `(a, b)` coordinates.
#[inline]
pub fn dual_pairing(p: Prime, chi: GroupElement, g: GroupElement) -> u32 {
    (chi.a * g.a + chi.b * g.b) % p.get()
}

/// The subgroup of `(Z/p)^*` generated by `m`, as a sorted list of residues.
pub fn unit_subgroup(p: Prime, m: u32) -> Vec<u32> {
    let q = p.get() as u64;
    let m = m as u64 % q;
    assert!(m != 0);
    let mut members = vec![1u64];
    let mut acc = m;
    while acc != 1 {
        members.push(acc);
        acc = acc * m % q;
    }
    members.sort_unstable();
    members.into_iter().map(|v| v as u32).collect()
}

/// Canonical power-map parameters, one per subgroup of `(Z/p)^*`:
/// the smallest positive generator of each subgroup. There are
/// `tau(p-1)` of them and `1` is always first.
pub fn canonical_power_params(p: Prime) -> Vec<u32> {
    let mut by_subgroup: Vec<(Vec<u32>, u32)> = Vec::new();
    for m in 1..p.get() {
        let sub = unit_subgroup(p, m);
        match by_subgroup.iter_mut().find(|(s, _)| *s == sub) {
            Some((_, min_gen)) => *min_gen = (*min_gen).min(m),
            None => by_subgroup.push((sub, m)),
        }
    }
    let mut params: Vec<u32> = by_subgroup.into_iter().map(|(_, m)| m).collect();
    params.sort_unstable();
    params
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(53).is_err());
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(47).is_ok());
    }

    #[test]
    fn mul_and_pow() {
        let p5 = p(5);
        let x = GroupElement { a: 1, b: 0 };
        let y = GroupElement { a: 0, b: 1 };
        assert_eq!(mul(p5, x, y), GroupElement { a: 1, b: 1 });
        assert_eq!(pow(p5, GroupElement { a: 1, b: 1 }, 5), GroupElement::identity());
        // [x]_2 = {x, x^2, x^4} at p = 7
        let p7 = p(7);
        let cls = power_class(p7, GroupElement { a: 1, b: 0 }, 2).unwrap();
        let expect: Vec<usize> = [1, 2, 4]
            .iter()
            .map(|&a| GroupElement { a, b: 0 }.index(p7))
            .collect();
        assert_eq!(cls.iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn element_orders() {
        for q in [2u64, 3, 5, 7] {
            let pp = p(q);
            for i in 1..pp.order() {
                let g = GroupElement::from_index(pp, i);
                assert_eq!(pow(pp, g, q as i64), GroupElement::identity());
                for k in 1..q as i64 {
                    assert_ne!(pow(pp, g, k), GroupElement::identity());
                }
            }
        }
    }

    #[test]
    fn order_mod_values() {
        assert_eq!(order_mod(1, p(7)).unwrap(), 1);
        assert_eq!(order_mod(2, p(7)).unwrap(), 3);
        assert_eq!(order_mod(3, p(11)).unwrap(), 5);
        assert!(order_mod(0, p(5)).is_err());
        assert!(order_mod(14, p(7)).is_err());
    }

    #[test]
    fn primitive_roots_match_exhaustive_oracle() {
        for q in [3u64, 5, 7, 11, 13, 23, 47] {
            let pp = p(q);
            let r = primitive_root(pp);
            // oracle: smallest residue whose order is p-1, by direct check
            let oracle = (1..q as u32)
                .find(|&m| {
                    let mut seen = std::collections::HashSet::new();
                    let mut acc = 1u64;
                    for _ in 0..q - 1 {
                        acc = acc * m as u64 % q;
                        seen.insert(acc);
                    }
                    seen.len() == (q - 1) as usize
                })
                .unwrap();
            assert_eq!(r, oracle);
        }
        assert_eq!(primitive_root(p(3)), 2);
        assert_eq!(primitive_root(p(5)), 2);
        assert_eq!(primitive_root(p(7)), 3);
        assert_eq!(primitive_root(p(2)), 1);
    }

    #[test]
    fn power_classes() {
        let p5 = p(5);
        let x = GroupElement { a: 1, b: 0 };
        let cls = power_class(p5, x, 4).unwrap();
        assert_eq!(cls.len(), 2);
        assert!(cls.contains(GroupElement { a: 4, b: 0 }.index(p5)));
        // p = 11: iterate cubing
        let p11 = p(11);
        let cls = power_class(p11, x, 3).unwrap();
        let expect: std::collections::HashSet<usize> = [1u32, 3, 9, 5, 4]
            .iter()
            .map(|&a| GroupElement { a, b: 0 }.index(p11))
            .collect();
        assert_eq!(cls.iter().collect::<std::collections::HashSet<_>>(), expect);
        // identity orbit
        let cls = power_class(p5, GroupElement::identity(), 3).unwrap();
        assert_eq!(cls.len(), 1);
    }

    #[test]
    fn lines_cover_g_and_intersect_trivially() {
        for q in [2u64, 3, 5, 7] {
            let pp = p(q);
            let subs = proper_subgroups(pp);
            assert_eq!(subs.len(), q as usize + 1);
            let mut union = ElemSet::empty(pp.order());
            for (i, s) in subs.iter().enumerate() {
                assert_eq!(s.elements.len(), q as usize);
                union.union_with(&s.elements);
                for t in &subs[i + 1..] {
                    let meet = s.elements.intersection(&t.elements);
                    assert_eq!(meet.iter().collect::<Vec<_>>(), vec![0]);
                }
            }
            assert_eq!(union.len(), pp.order());
        }
    }

    #[test]
    fn line_membership_example() {
        // p = 7: <xy^3> contains x^2 y^6
        let p7 = p(7);
        let line = Subgroup::line(p7, GroupElement { a: 1, b: 3 }).unwrap();
        assert!(line.contains(p7, GroupElement { a: 2, b: 6 }));
    }

    #[test]
    fn generated_subgroups() {
        let p5 = p(5);
        let empty = ElemSet::empty(p5.order());
        assert_eq!(subgroup_generated(p5, &empty).kind, SubgroupKind::Trivial);

        let same_line = ElemSet::from_indices(
            p5.order(),
            [
                GroupElement { a: 1, b: 0 }.index(p5),
                GroupElement { a: 3, b: 0 }.index(p5),
            ],
        );
        let sub = subgroup_generated(p5, &same_line);
        assert_eq!(sub.kind, SubgroupKind::Line);
        assert_eq!(sub.generator, Some(GroupElement { a: 1, b: 0 }));

        let two_lines = ElemSet::from_indices(
            p5.order(),
            [
                GroupElement { a: 1, b: 0 }.index(p5),
                GroupElement { a: 0, b: 1 }.index(p5),
            ],
        );
        assert_eq!(subgroup_generated(p5, &two_lines).kind, SubgroupKind::Full);

        // any two elements on distinct lines generate G
        for i in 1..p5.order() {
            for j in 1..p5.order() {
                let g = GroupElement::from_index(p5, i);
                let h = GroupElement::from_index(p5, j);
                let gline = Subgroup::line(p5, g).unwrap();
                if !gline.contains(p5, h) {
                    let s = ElemSet::from_indices(p5.order(), [i, j]);
                    assert_eq!(subgroup_generated(p5, &s).kind, SubgroupKind::Full);
                }
            }
        }
    }

    #[test]
    fn pairing_is_nondegenerate() {
        for q in [2u64, 3, 5, 7] {
            let pp = p(q);
            let principal = GroupElement::identity();
            for i in 0..pp.order() {
                let g = GroupElement::from_index(pp, i);
                assert_eq!(dual_pairing(pp, principal, g), 0);
            }
            for i in 1..pp.order() {
                let chi = GroupElement::from_index(pp, i);
                assert!((0..pp.order())
                    .any(|j| dual_pairing(pp, chi, GroupElement::from_index(pp, j)) != 0));
            }
        }
        assert_eq!(
            dual_pairing(p(5), GroupElement { a: 1, b: 0 }, GroupElement { a: 1, b: 0 }),
            1
        );
    }

    #[test]
    fn power_params_are_one_per_unit_subgroup() {
        let p7 = p(7);
        let params = canonical_power_params(p7);
        assert_eq!(params.len(), 4); // tau(6)
        assert_eq!(params[0], 1);
        // m, m' equivalent iff <m> = <m'>
        assert_eq!(unit_subgroup(p7, 2), unit_subgroup(p7, 4));
        assert_ne!(unit_subgroup(p7, 2), unit_subgroup(p7, 6));
        let p11 = p(11);
        assert_eq!(unit_subgroup(p11, 3), unit_subgroup(p11, 4));
    }
}
