//! Named constructions of supercharacter theories: the two trivial
//! theories, power-map theories, star and direct products over lines,
//! automorphic theories from matrix groups, partition theories over the
//! line set, lattice join and meet, and the explicit automorphism-group
//! witnesses for the product theories.

use crate::carrier::Gp2;
use crate::error::{Error, Result};
use crate::group::{self, GroupElement, Prime, Subgroup, SubgroupKind};
use crate::partition::{PartialPartition, SetPartition};
use crate::refine;
use crate::sct::{coset_labels, CyclicSct, Sct};
use crate::set::ElemSet;

/// `m(G)`: the finest theory, all classes singletons.
pub fn finest(p: Prime) -> Sct {
    Sct::from_classes(p, SetPartition::singletons(p.order())).unwrap()
}

/// `M(G)`: the coarsest theory, classes `{1}` and the rest.
pub fn coarsest(p: Prime) -> Sct {
    Sct::from_classes(p, SetPartition::identity_and_rest(p.order())).unwrap()
}

/// Orbits of `g -> g^m` over all of `G`.
pub fn power_map_theory(p: Prime, m: i64) -> Result<Sct> {
    if m.rem_euclid(p.get() as i64) == 0 {
        return Err(Error::InvalidArgument(
            "power map exponent must be coprime to p".into(),
        ));
    }
    let n = p.order();
    let mut assigned = vec![false; n];
    let mut parts = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let part = group::power_class(p, GroupElement::from_index(p, i), m)?;
        for j in part.iter() {
            assigned[j] = true;
        }
        parts.push(part);
    }
    Sct::from_classes(p, SetPartition::new(n, parts)?)
}

/// Glue a theory on the line `n` to a theory on `G/n`: classes inside `n`
/// come from `inner`, classes outside are full preimages of the nonzero
/// classes of `outer` under the canonical coset labelling.
pub fn star_product(
    p: Prime,
    n: &Subgroup,
    inner: &CyclicSct,
    outer: &CyclicSct,
) -> Result<Sct> {
    if n.kind != SubgroupKind::Line {
        return Err(Error::InvalidArgument(
            "star product carrier must be a line".into(),
        ));
    }
    if inner.prime() != p || outer.prime() != p {
        return Err(Error::GroundSetMismatch(
            inner.prime().order(),
            p.order(),
        ));
    }
    let size = p.order();
    let gen = n.generator.expect("lines have generators");
    let mut parts = Vec::new();
    for slot_part in inner.parts().parts() {
        parts.push(ElemSet::from_indices(
            size,
            slot_part.iter().map(|i| group::pow(p, gen, i as i64).index(p)),
        ));
    }
    let label = coset_labels(p, n);
    for q_part in outer.parts().parts() {
        if q_part.contains(0) {
            continue;
        }
        parts.push(ElemSet::from_indices(
            size,
            (0..size).filter(|&i| q_part.contains(label[i])),
        ));
    }
    Sct::from_classes(p, SetPartition::new(size, parts)?)
}

/// `E x F` on `G = H x N`: classes are all products of an `E`-class by an
/// `F`-class.
pub fn direct_product(
    p: Prime,
    h: &Subgroup,
    n: &Subgroup,
    e: &CyclicSct,
    f: &CyclicSct,
) -> Result<Sct> {
    if h.kind != SubgroupKind::Line || n.kind != SubgroupKind::Line || h.elements == n.elements
    {
        return Err(Error::InvalidArgument(
            "direct product needs two distinct lines".into(),
        ));
    }
    if e.prime() != p || f.prime() != p {
        return Err(Error::GroundSetMismatch(e.prime().order(), p.order()));
    }
    let size = p.order();
    let gh = h.generator.unwrap();
    let gn = n.generator.unwrap();
    let mut parts = Vec::new();
    for ip in e.parts().parts() {
        for jp in f.parts().parts() {
            let mut part = ElemSet::empty(size);
            for i in ip.iter() {
                let a = group::pow(p, gh, i as i64);
                for j in jp.iter() {
                    part.insert(group::mul(p, a, group::pow(p, gn, j as i64)).index(p));
                }
            }
            parts.push(part);
        }
    }
    Sct::from_classes(p, SetPartition::new(size, parts)?)
}

/// Invertible 2x2 matrix over `Z/p` acting on exponent vectors; the
/// automorphism `x^a y^b -> x^{m00 a + m01 b} y^{m10 a + m11 b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutMatrix {
    pub m: [[u32; 2]; 2],
}

impl AutMatrix {
    pub fn new(p: Prime, m: [[i64; 2]; 2]) -> Result<AutMatrix> {
        let q = p.get() as i64;
        let r = AutMatrix {
            m: [
                [m[0][0].rem_euclid(q) as u32, m[0][1].rem_euclid(q) as u32],
                [m[1][0].rem_euclid(q) as u32, m[1][1].rem_euclid(q) as u32],
            ],
        };
        if r.det(p) == 0 {
            return Err(Error::InvalidArgument("singular matrix".into()));
        }
        Ok(r)
    }

    pub fn identity() -> AutMatrix {
        AutMatrix {
            m: [[1, 0], [0, 1]],
        }
    }

    fn det(&self, p: Prime) -> u32 {
        let q = p.get() as i64;
        let m = &self.m;
        (m[0][0] as i64 * m[1][1] as i64 - m[0][1] as i64 * m[1][0] as i64).rem_euclid(q)
            as u32
    }

    pub fn apply(&self, p: Prime, g: GroupElement) -> GroupElement {
        let q = p.get();
        GroupElement {
            a: (self.m[0][0] * g.a + self.m[0][1] * g.b) % q,
            b: (self.m[1][0] * g.a + self.m[1][1] * g.b) % q,
        }
    }

    pub fn mul(&self, p: Prime, other: &AutMatrix) -> AutMatrix {
        let q = p.get() as u64;
        let a = &self.m;
        let b = &other.m;
        let mut m = [[0u32; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = ((a[i][0] as u64 * b[0][j] as u64 + a[i][1] as u64 * b[1][j] as u64)
                    % q) as u32;
            }
        }
        AutMatrix { m }
    }

    pub fn inverse(&self, p: Prime) -> AutMatrix {
        let q = p.get() as i64;
        let d = self.det(p) as i64;
        let d_inv = mod_pow(d, q - 2, q);
        let m = &self.m;
        let e = |v: i64| (v * d_inv).rem_euclid(q) as u32;
        AutMatrix {
            m: [
                [e(m[1][1] as i64), e(-(m[0][1] as i64))],
                [e(-(m[1][0] as i64)), e(m[0][0] as i64)],
            ],
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([
            [self.m[0][0], self.m[0][1]],
            [self.m[1][0], self.m[1][1]]
        ])
    }
}

fn mod_pow(mut base: i64, mut e: i64, q: i64) -> i64 {
    base = base.rem_euclid(q);
    let mut acc = 1i64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

/// A subgroup of `GL(2, p)`, stored as its full (closed) element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupOfAut {
    pub generators: Vec<AutMatrix>,
    pub elements: Vec<AutMatrix>,
}

impl SubgroupOfAut {
    /// Close a generator list under products; inverses come for free in a
    /// finite group.
    pub fn generate(p: Prime, generators: &[AutMatrix]) -> SubgroupOfAut {
        let mut elements: std::collections::BTreeSet<AutMatrix> =
            std::iter::once(AutMatrix::identity()).collect();
        let mut frontier: Vec<AutMatrix> = elements.iter().copied().collect();
        while let Some(m) = frontier.pop() {
            for g in generators {
                let next = m.mul(p, g);
                if elements.insert(next) {
                    frontier.push(next);
                }
            }
        }
        SubgroupOfAut {
            generators: generators.to_vec(),
            elements: elements.into_iter().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Orbit partition of `G` under the group generated by `generators`.
/// Orbits of the generated group are the connected components under the
/// generators alone, so no group closure is needed.
pub fn orbit_partition(p: Prime, generators: &[AutMatrix]) -> SetPartition {
    let n = p.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        let g = GroupElement::from_index(p, i);
        for m in generators {
            let j = m.apply(p, g).index(p);
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let mut buckets: std::collections::BTreeMap<usize, ElemSet> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        buckets.entry(r).or_insert_with(|| ElemSet::empty(n)).insert(i);
    }
    SetPartition::new(n, buckets.into_values().collect()).unwrap()
}

/// Theory whose classes are the orbits of the matrix group generated by
/// `generators`; always valid.
pub fn automorphic(p: Prime, generators: &[AutMatrix]) -> Result<Sct> {
    Sct::from_classes(p, orbit_partition(p, generators))
}

/// Theory `S_P` for a set partition `P` of the `p+1` lines (in the fixed
/// line order): nonidentity classes are the unions of `H_i \ 1` over each
/// block.
pub fn partition_theory(p: Prime, blocks: &SetPartition) -> Result<Sct> {
    let lines = group::proper_subgroups(p);
    if blocks.ground_size() != lines.len() {
        return Err(Error::GroundSetMismatch(blocks.ground_size(), lines.len()));
    }
    let n = p.order();
    let mut parts = vec![ElemSet::singleton(n, 0)];
    for block in blocks.parts() {
        let mut part = ElemSet::empty(n);
        for i in block.iter() {
            part.union_with(&lines[i].elements);
        }
        part.remove(0);
        parts.push(part);
    }
    Sct::from_classes(p, SetPartition::new(n, parts)?)
}

/// Base change carrying the standard coordinate lines `<x>`, `<y>` onto
/// two given distinct lines.
fn line_basis(p: Prime, first: &Subgroup, second: &Subgroup) -> Result<AutMatrix> {
    if first.kind != SubgroupKind::Line
        || second.kind != SubgroupKind::Line
        || first.elements == second.elements
    {
        return Err(Error::InvalidArgument(
            "witness group needs two distinct lines".into(),
        ));
    }
    let a = first.generator.unwrap();
    let b = second.generator.unwrap();
    AutMatrix::new(
        p,
        [[a.a as i64, b.a as i64], [a.b as i64, b.b as i64]],
    )
}

fn check_unit(p: Prime, m: u32) -> Result<()> {
    if m % p.get() == 0 {
        return Err(Error::InvalidArgument("parameter must be a unit mod p".into()));
    }
    Ok(())
}

/// The automorphism group `A` whose orbits realize the star product
/// `[n]_{m1} * [G/n]_{m2}` (with `m_line` the transversal line carrying
/// the quotient identification): generated by `x -> x^{m1}` and the
/// shear-and-power maps `x^i y^j -> x^{i + jk} y^{j m2}`, conjugated onto
/// the given pair of lines.
pub fn star_witness_group(
    p: Prime,
    n: &Subgroup,
    m1: u32,
    m_line: &Subgroup,
    m2: u32,
) -> Result<SubgroupOfAut> {
    check_unit(p, m1)?;
    check_unit(p, m2)?;
    let c = line_basis(p, n, m_line)?;
    let c_inv = c.inverse(p);
    let mut gens = vec![AutMatrix::new(p, [[m1 as i64, 0], [0, 1]])?];
    for k in 1..p.get() as i64 {
        gens.push(AutMatrix::new(p, [[1, k], [0, m2 as i64]])?);
    }
    let gens: Vec<AutMatrix> = gens
        .into_iter()
        .map(|g| c.mul(p, &g).mul(p, &c_inv))
        .collect();
    Ok(SubgroupOfAut::generate(p, &gens))
}

/// The automorphism group `B` whose orbits realize the direct product
/// `[h]_{m1} x [n]_{m2}`: independent power maps on the two lines.
pub fn direct_witness_group(
    p: Prime,
    h: &Subgroup,
    m1: u32,
    n: &Subgroup,
    m2: u32,
) -> Result<SubgroupOfAut> {
    check_unit(p, m1)?;
    check_unit(p, m2)?;
    let c = line_basis(p, h, n)?;
    let c_inv = c.inverse(p);
    let gens: Vec<AutMatrix> = [
        AutMatrix::new(p, [[m1 as i64, 0], [0, 1]])?,
        AutMatrix::new(p, [[1, 0], [0, m2 as i64]])?,
    ]
    .into_iter()
    .map(|g| c.mul(p, &g).mul(p, &c_inv))
    .collect();
    Ok(SubgroupOfAut::generate(p, &gens))
}

/// Lattice join: mutual coarsening of the class partitions; always valid.
pub fn sct_join(s: &Sct, t: &Sct) -> Result<Sct> {
    if s.prime() != t.prime() {
        return Err(Error::GroundSetMismatch(
            s.prime().order(),
            t.prime().order(),
        ));
    }
    Sct::from_classes(s.prime(), s.classes().join(t.classes())?)
}

/// Lattice meet: the coarsest theory finer than both. The common
/// refinement of two class partitions need not be a theory, so the
/// result is its coherent closure ([`refine::k_infty`]): the closure is
/// itself a superclass partition and every theory refining the common
/// refinement refines it, which pins it down as the meet.
pub fn sct_meet(s: &Sct, t: &Sct) -> Result<Sct> {
    if s.prime() != t.prime() {
        return Err(Error::GroundSetMismatch(
            s.prime().order(),
            t.prime().order(),
        ));
    }
    let common = s.classes().common_refinement(t.classes())?;
    let closed = refine::k_infty(&Gp2(s.prime()), &PartialPartition::from(common));
    Sct::from_classes(s.prime(), closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn lines(pp: Prime) -> Vec<Subgroup> {
        group::proper_subgroups(pp)
    }

    #[test]
    fn trivial_theories() {
        for q in [2u64, 3, 5, 7] {
            let pp = p(q);
            assert_eq!(finest(pp).classes().len(), pp.order());
            assert_eq!(coarsest(pp).classes().len(), 2);
            assert_eq!(finest(pp).type_n(), q as usize + 1);
            assert_eq!(coarsest(pp).type_n(), 0);
        }
    }

    #[test]
    fn power_map_theories() {
        let pp = p(5);
        assert_eq!(power_map_theory(pp, 1).unwrap(), finest(pp));
        // m = 4: classes {g, g^-1}; (25-1)/2 + 1 = 13 classes
        assert_eq!(power_map_theory(pp, 4).unwrap().classes().len(), 13);
        // m primitive: classes <g> \ 1, i.e. the all-singleton-blocks
        // partition theory
        let r = group::primitive_root(pp) as i64;
        let s = power_map_theory(pp, r).unwrap();
        let singletons = SetPartition::singletons(pp.get() as usize + 1);
        assert_eq!(s, partition_theory(pp, &singletons).unwrap());
        assert!(power_map_theory(pp, 10).is_err());
    }

    #[test]
    fn star_products() {
        let pp = p(5);
        let n = &lines(pp)[1]; // <y>
        // M(N) * M(G/N): classes {1}, N\1, G\N
        let s = star_product(pp, n, &CyclicSct::coarsest(pp), &CyclicSct::coarsest(pp))
            .unwrap();
        assert_eq!(s.classes().len(), 3);
        assert!(s.is_star_product_over(n).unwrap());
        // m(N) * M(G/N): p + 1 classes, center N
        let s = star_product(pp, n, &CyclicSct::finest(pp), &CyclicSct::coarsest(pp))
            .unwrap();
        assert_eq!(s.classes().len(), pp.get() as usize + 1);
        assert_eq!(s.center().elements, n.elements);
        // class-count identity |Cl| = |Cl(U)| + |Cl(V)| - 1
        for m1 in group::canonical_power_params(pp) {
            for m2 in group::canonical_power_params(pp) {
                let u = CyclicSct::power_theory(pp, m1).unwrap();
                let v = CyclicSct::power_theory(pp, m2).unwrap();
                let s = star_product(pp, n, &u, &v).unwrap();
                assert_eq!(
                    s.classes().len(),
                    u.parts().len() + v.parts().len() - 1
                );
                assert!(s.is_star_product_over(n).unwrap());
            }
        }
    }

    #[test]
    fn direct_products() {
        let pp = p(5);
        let ls = lines(pp);
        let (h, n) = (&ls[0], &ls[1]);
        // m x m = m(G)
        let s = direct_product(pp, h, n, &CyclicSct::finest(pp), &CyclicSct::finest(pp))
            .unwrap();
        assert_eq!(s, finest(pp));
        // M(H) x M(N): 4 classes, type 2
        let s = direct_product(pp, h, n, &CyclicSct::coarsest(pp), &CyclicSct::coarsest(pp))
            .unwrap();
        assert_eq!(s.classes().len(), 4);
        assert_eq!(s.type_n(), 2);
        assert!(s.is_direct_product(h, n).unwrap());
        assert!(direct_product(pp, h, h, &CyclicSct::finest(pp), &CyclicSct::finest(pp))
            .is_err());
    }

    #[test]
    fn direct_product_as_meet_of_stars() {
        // Cl(E x F) = common refinement of the two star products gluing
        // E and F in either order
        for q in [3u64, 5] {
            let pp = p(q);
            let ls = lines(pp);
            let (h, n) = (&ls[0], &ls[1]);
            for m1 in group::canonical_power_params(pp) {
                for m2 in group::canonical_power_params(pp) {
                    let e = CyclicSct::power_theory(pp, m1).unwrap();
                    let f = CyclicSct::power_theory(pp, m2).unwrap();
                    let d = direct_product(pp, h, n, &e, &f).unwrap();
                    let u = star_product(pp, h, &e, &f).unwrap();
                    let v = star_product(pp, n, &f, &e).unwrap();
                    let common = u.classes().common_refinement(v.classes()).unwrap();
                    assert_eq!(&common, d.classes());
                    // and the SCT meet agrees
                    assert_eq!(sct_meet(&u, &v).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn automorphic_theories() {
        let pp = p(5);
        assert_eq!(automorphic(pp, &[]).unwrap(), finest(pp));
        assert_eq!(
            automorphic(pp, &[AutMatrix::identity()]).unwrap(),
            finest(pp)
        );
        // x^i y^j -> x^{-i} y^{2j}: 8 classes, type 2, not a direct product
        let sigma = AutMatrix::new(pp, [[-1, 0], [0, 2]]).unwrap();
        let s = automorphic(pp, &[sigma]).unwrap();
        assert_eq!(s.classes().len(), 8);
        assert_eq!(s.type_n(), 2);
        let ls = lines(pp);
        let (h, n) = (&ls[0], &ls[1]);
        assert!(!s.is_direct_product(h, n).unwrap());
        assert_eq!(s.restrict(h).unwrap().parts().len(), 3);
        assert_eq!(s.restrict(n).unwrap().parts().len(), 2);
        assert_eq!(s.center().kind, SubgroupKind::Trivial);
        // full GL(2,p) is transitive on nonidentity elements
        let r = group::primitive_root(pp) as i64;
        let gens = [
            AutMatrix::new(pp, [[r, 0], [0, 1]]).unwrap(),
            AutMatrix::new(pp, [[1, 1], [0, 1]]).unwrap(),
            AutMatrix::new(pp, [[0, 1], [1, 0]]).unwrap(),
        ];
        assert_eq!(automorphic(pp, &gens).unwrap(), coarsest(pp));
    }

    #[test]
    fn matrix_arithmetic() {
        let pp = p(7);
        assert!(AutMatrix::new(pp, [[1, 2], [2, 4]]).is_err()); // det 0
        let m = AutMatrix::new(pp, [[2, 3], [1, 4]]).unwrap();
        let mi = m.inverse(pp);
        assert_eq!(m.mul(pp, &mi), AutMatrix::identity());
        assert_eq!(mi.mul(pp, &m), AutMatrix::identity());
        let g = GroupElement { a: 3, b: 4 };
        assert_eq!(mi.apply(pp, m.apply(pp, g)), g);
    }

    #[test]
    fn matrix_group_closure() {
        let pp = p(5);
        let r = group::primitive_root(pp) as i64;
        let diag = SubgroupOfAut::generate(
            pp,
            &[
                AutMatrix::new(pp, [[r, 0], [0, 1]]).unwrap(),
                AutMatrix::new(pp, [[1, 0], [0, r]]).unwrap(),
            ],
        );
        assert_eq!(diag.order(), 16); // (p-1)^2
        let trivial = SubgroupOfAut::generate(pp, &[]);
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn partition_theories() {
        let pp = p(5);
        let k = pp.get() as usize + 1;
        // one block -> M(G)
        let one_block = SetPartition::new(k, vec![ElemSet::full(k)]).unwrap();
        assert_eq!(partition_theory(pp, &one_block).unwrap(), coarsest(pp));
        // type = number of singleton blocks
        let blocks = SetPartition::new(
            k,
            vec![
                ElemSet::singleton(k, 0),
                ElemSet::singleton(k, 1),
                ElemSet::from_indices(k, [2, 3, 4, 5]),
            ],
        )
        .unwrap();
        let s = partition_theory(pp, &blocks).unwrap();
        assert_eq!(s.type_n(), 2);
        assert_eq!(s.classes().len(), 4);
        // p=2: the Bell(3) = 5 partition theories are distinct and are
        // every theory of C_2 x C_2
        let p2 = p(2);
        let mut keys = std::collections::BTreeSet::new();
        for blocks in crate::enumerate::set_partitions_of(3) {
            let parts: Vec<ElemSet> = blocks
                .iter()
                .map(|b| ElemSet::from_indices(3, b.iter().copied()))
                .collect();
            let s =
                partition_theory(p2, &SetPartition::new(3, parts).unwrap()).unwrap();
            keys.insert(s.canonical_key());
        }
        assert_eq!(keys.len(), 5);
    }

    #[test]
    fn witness_group_orbits_match_products() {
        let pp = p(5);
        let ls = lines(pp);
        let (n, m_line) = (&ls[1], &ls[0]);
        // star: [N]_2 * [G/N]_4
        let a = star_witness_group(pp, n, 2, m_line, 4).unwrap();
        let s = automorphic(pp, &a.generators).unwrap();
        let expect = star_product(
            pp,
            n,
            &CyclicSct::power_theory(pp, 2).unwrap(),
            &CyclicSct::power_theory(pp, 4).unwrap(),
        )
        .unwrap();
        assert_eq!(s, expect);
        // direct: [H]_4 x [N]_2 on a non-coordinate pair of lines
        let (h, n2) = (&ls[2], &ls[3]);
        let b = direct_witness_group(pp, h, 4, n2, 2).unwrap();
        let s = automorphic(pp, &b.generators).unwrap();
        let expect = direct_product(
            pp,
            h,
            n2,
            &CyclicSct::power_theory(pp, 4).unwrap(),
            &CyclicSct::power_theory(pp, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(s, expect);
        // trivial parameters give m(G) from the trivial group
        let b = direct_witness_group(pp, h, 1, n2, 1).unwrap();
        assert_eq!(b.order(), 1);
        assert_eq!(automorphic(pp, &b.generators).unwrap(), finest(pp));
    }

    #[test]
    fn join_and_meet_laws() {
        let pp = p(5);
        let m = finest(pp);
        let big = coarsest(pp);
        let sigma = AutMatrix::new(pp, [[-1, 0], [0, 2]]).unwrap();
        let s = automorphic(pp, &[sigma]).unwrap();
        assert_eq!(sct_join(&s, &m).unwrap(), s);
        assert_eq!(sct_join(&s, &s).unwrap(), s);
        assert_eq!(sct_join(&s, &big).unwrap(), big);
        assert_eq!(sct_meet(&s, &big).unwrap(), s);
        assert_eq!(sct_meet(&s, &s).unwrap(), s);
        assert_eq!(sct_meet(&s, &m).unwrap(), m);
    }

    #[test]
    fn meet_of_coordinate_products_is_a_partition_theory() {
        // M(H1)xM(H2) meet M(H2)xM(H3): exactly three S-normal lines,
        // and it is the partition theory with singleton blocks for
        // H1, H2, H3
        let pp = p(5);
        let ls = lines(pp);
        let big = CyclicSct::coarsest(pp);
        let s1 = direct_product(pp, &ls[0], &ls[1], &big, &big).unwrap();
        let s2 = direct_product(pp, &ls[1], &ls[2], &big, &big).unwrap();
        let meet = sct_meet(&s1, &s2).unwrap();
        assert_eq!(meet.type_n(), 3);
        for i in [0usize, 1, 2] {
            assert!(meet.is_s_normal(&ls[i]));
        }
        let k = pp.get() as usize + 1;
        let blocks = SetPartition::new(
            k,
            vec![
                ElemSet::singleton(k, 0),
                ElemSet::singleton(k, 1),
                ElemSet::singleton(k, 2),
                ElemSet::from_indices(k, 3..k),
            ],
        )
        .unwrap();
        assert_eq!(meet, partition_theory(pp, &blocks).unwrap());
    }

    #[test]
    fn join_of_singleton_partition_theories() {
        // join of two partition theories with all-singleton blocks merged
        // differently = partition theory of the joined index partition
        let pp = p(5);
        let k = pp.get() as usize + 1;
        let b1 = SetPartition::new(
            k,
            vec![
                ElemSet::from_indices(k, [0, 1]),
                ElemSet::from_indices(k, [2, 3]),
                ElemSet::singleton(k, 4),
                ElemSet::singleton(k, 5),
            ],
        )
        .unwrap();
        let b2 = SetPartition::new(
            k,
            vec![
                ElemSet::from_indices(k, [1, 2]),
                ElemSet::singleton(k, 0),
                ElemSet::singleton(k, 3),
                ElemSet::from_indices(k, [4, 5]),
            ],
        )
        .unwrap();
        let joined = partition_theory(pp, &b1.join(&b2).unwrap()).unwrap();
        let s = sct_join(
            &partition_theory(pp, &b1).unwrap(),
            &partition_theory(pp, &b2).unwrap(),
        )
        .unwrap();
        assert_eq!(s, joined);
    }
}
