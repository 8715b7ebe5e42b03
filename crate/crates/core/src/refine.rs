//! The structure-count refinement operator and its fixed point.
//!
//! For parts `K, L` of a partial partition and an element `g`, the
//! structure count `(K, L)_g` is the number of factorizations `g = kl`
//! with `k` in `K` and `l` in `L`. Elements with identical count vectors
//! over all ordered pairs of parts are grouped; intersecting those
//! groups with the input parts (plus the uncovered remainder) gives one
//! refinement step. Iterating reaches a fixed point, which is always a
//! valid superclass partition, and any superclass partition refining the
//! input refines the fixed point.

use crate::carrier::Carrier;
use crate::partition::{PartialPartition, SetPartition};
use crate::set::ElemSet;

/// `(K, L)_g`: number of pairs `(k, l)` in `K x L` with `kl = g`.
pub fn structure_count<C: Carrier>(carrier: &C, k: &ElemSet, l: &ElemSet, g: usize) -> usize {
    let mut count = 0;
    for ki in k.iter() {
        // l must equal k^{-1} g
        if l.contains(carrier.mul_idx(carrier.inv_idx(ki), g)) {
            count += 1;
        }
    }
    count
}

/// Count vector `g -> (K, L)_g` over the whole carrier, in one pass over
/// `K x L`.
fn count_vector<C: Carrier>(carrier: &C, k: &ElemSet, l: &ElemSet) -> Vec<u32> {
    let mut counts = vec![0u32; carrier.size()];
    for ki in k.iter() {
        for li in l.iter() {
            counts[carrier.mul_idx(ki, li)] += 1;
        }
    }
    counts
}

/// Split every block of `parts` by the values of `counts`.
fn split_by_counts(parts: Vec<ElemSet>, counts: &[u32]) -> Vec<ElemSet> {
    let n = counts.len();
    let mut out = Vec::with_capacity(parts.len());
    let mut buckets: std::collections::HashMap<u32, ElemSet> = Default::default();
    for part in parts {
        let constant = {
            let mut it = part.iter();
            let first = counts[it.next().unwrap()];
            it.all(|i| counts[i] == first)
        };
        if constant {
            out.push(part);
            continue;
        }
        buckets.clear();
        for i in part.iter() {
            buckets
                .entry(counts[i])
                .or_insert_with(|| ElemSet::empty(n))
                .insert(i);
        }
        out.extend(buckets.drain().map(|(_, s)| s));
    }
    out
}

/// One refinement step: group elements by their structure-count vectors
/// against the parts of `c`, intersected with `c`'s own parts and the
/// uncovered remainder.
pub fn refine_step<C: Carrier>(carrier: &C, c: &PartialPartition) -> SetPartition {
    let mut blocks: Vec<ElemSet> = c.complete().parts().to_vec();
    for k in c.parts() {
        for l in c.parts() {
            let counts = count_vector(carrier, k, l);
            blocks = split_by_counts(blocks, &counts);
        }
    }
    SetPartition::new(carrier.size(), blocks).expect("splitting a partition yields a partition")
}

/// Fixed point of [`refine_step`]; terminates because each step refines
/// the previous partition and the refinement order on a finite set has
/// no infinite descending chains.
pub fn k_infty<C: Carrier>(carrier: &C, c: &PartialPartition) -> SetPartition {
    let mut current = refine_step(carrier, c);
    loop {
        let next = refine_step(carrier, &current.clone().into());
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Hendrickson's good-set test: `P` (not containing the identity slot)
/// survives as a single part of the closure of `{{1}, P}`.
pub fn is_good_set<C: Carrier>(carrier: &C, p_set: &ElemSet) -> bool {
    debug_assert!(!p_set.contains(0));
    let n = carrier.size();
    let c = PartialPartition::new(n, vec![ElemSet::singleton(n, 0), p_set.clone()])
        .expect("disjoint by precondition");
    k_infty(carrier, &c).has_part(p_set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Gp2;
    use crate::group::{power_class, GroupElement, Prime};

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn elem(pp: Prime, a: u32, b: u32) -> usize {
        GroupElement { a, b }.index(pp)
    }

    #[test]
    fn counts_against_definition() {
        let pp = p(5);
        let g = Gp2(pp);
        let x = GroupElement { a: 1, b: 0 };
        let y = GroupElement { a: 0, b: 1 };
        let kx = power_class(pp, x, 4).unwrap();
        let ky = power_class(pp, y, 4).unwrap();
        // ([x]_4, [y]_4)_{xy} = 1, ([x]_4, [y]_4)_{xy^2} = 0
        assert_eq!(structure_count(&g, &kx, &ky, elem(pp, 1, 1)), 1);
        assert_eq!(structure_count(&g, &kx, &ky, elem(pp, 1, 2)), 0);
        // (K, {1})_g = [g in K]
        let id = ElemSet::singleton(pp.order(), 0);
        assert_eq!(structure_count(&g, &kx, &id, elem(pp, 1, 0)), 1);
        assert_eq!(structure_count(&g, &kx, &id, elem(pp, 1, 1)), 0);
        // p = 7: ([x]_2, [y]_2)_{xy} = 1
        let p7 = p(7);
        let g7 = Gp2(p7);
        let kx = power_class(p7, x, 2).unwrap();
        let ky = power_class(p7, y, 2).unwrap();
        assert_eq!(structure_count(&g7, &kx, &ky, elem(p7, 1, 1)), 1);
    }

    #[test]
    fn count_totals_and_symmetry() {
        let pp = p(5);
        let g = Gp2(pp);
        let k = ElemSet::from_indices(pp.order(), [1, 6, 7, 13]);
        let l = ElemSet::from_indices(pp.order(), [2, 5, 20]);
        let total: usize = (0..pp.order()).map(|i| structure_count(&g, &k, &l, i)).sum();
        assert_eq!(total, k.len() * l.len());
        for i in 0..pp.order() {
            assert_eq!(
                structure_count(&g, &k, &l, i),
                structure_count(&g, &l, &k, i)
            );
        }
    }

    #[test]
    fn coarsest_partition_is_fixed() {
        // {{1}, G\1} is already stable: (G\1, G\1)_g = p^2 - 2 off the identity
        let pp = p(5);
        let g = Gp2(pp);
        let c: PartialPartition = SetPartition::identity_and_rest(pp.order()).into();
        let out = refine_step(&g, &c);
        assert_eq!(out, SetPartition::identity_and_rest(pp.order()));
    }

    #[test]
    fn good_sets() {
        let pp = p(5);
        let g = Gp2(pp);
        // H \ 1 for a line H is good
        for sub in crate::group::proper_subgroups(pp) {
            let mut s = sub.elements.clone();
            s.remove(0);
            assert!(is_good_set(&g, &s));
        }
        // {y, y^2, y^3, y^4} is a class of a valid theory, hence good
        let ys = ElemSet::from_indices(pp.order(), (1..5).map(|b| elem(pp, 0, b)));
        assert!(is_good_set(&g, &ys));
        // {x, y} is good: it is an orbit of the coordinate swap, and any
        // class of a valid theory survives its own closure
        let xy = ElemSet::from_indices(pp.order(), [elem(pp, 1, 0), elem(pp, 0, 1)]);
        assert!(is_good_set(&g, &xy));
        // {x, x^2} is not: no theory has it as a class (classes inside a
        // line are power orbits, and the closure splits it)
        let xx2 = ElemSet::from_indices(pp.order(), [elem(pp, 1, 0), elem(pp, 2, 0)]);
        assert!(!is_good_set(&g, &xx2));
    }

    #[test]
    fn refine_step_refines_input() {
        let pp = p(5);
        let g = Gp2(pp);
        let n = pp.order();
        let c = PartialPartition::new(
            n,
            vec![
                ElemSet::singleton(n, 0),
                ElemSet::from_indices(n, [elem(pp, 1, 0), elem(pp, 4, 0)]),
                ElemSet::from_indices(n, [elem(pp, 0, 1), elem(pp, 0, 2), elem(pp, 0, 3)]),
            ],
        )
        .unwrap();
        let out = refine_step(&g, &c);
        assert!(out.refines(&c.complete()).unwrap());
        let fixed = k_infty(&g, &c);
        assert!(fixed.refines(&out).unwrap());
        let again = refine_step(&g, &fixed.clone().into());
        assert_eq!(again, fixed);
    }
}
