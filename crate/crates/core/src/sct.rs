//! Validated supercharacter theories of `C_p x C_p`: the superclass
//! partition, the matching partition of the dual group, the supercharacter
//! table, structural subgroups (`Z(S)`, `[G,S]`, the S-normal lattice),
//! restriction and quotient to lines, duality and type classification.

use crate::carrier::{Carrier, Cyclic, Gp2};
use crate::cyclotomic::{char_sum, CycInt};
use crate::error::{Error, Result};
use crate::group::{
    self, unit_subgroup, GroupElement, Prime, Subgroup, SubgroupKind,
};
use crate::partition::SetPartition;
use crate::set::ElemSet;
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::collections::BTreeSet;

/// How a theory was produced; a theory found several ways carries
/// several tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Star,
    Direct,
    Automorphic,
    Partition,
    Other,
}

/// Structure-count (Schur ring) axioms for a candidate superclass
/// partition: `{1}` is a part, parts are inverse-closed, and for every
/// ordered pair of parts the count vector `g -> (K, L)_g` is constant on
/// parts.
pub fn verify_sring<C: Carrier>(carrier: &C, partition: &SetPartition) -> bool {
    let n = carrier.size();
    if partition.ground_size() != n {
        return false;
    }
    if partition.part_of(0).len() != 1 {
        return false;
    }
    let idx = partition.part_index();
    for part in partition.parts() {
        let inv = ElemSet::from_indices(n, part.iter().map(|i| carrier.inv_idx(i)));
        if !partition.has_part(&inv) {
            return false;
        }
    }
    for k in partition.parts() {
        for l in partition.parts() {
            let mut counts = vec![0u32; n];
            for ki in k.iter() {
                for li in l.iter() {
                    counts[carrier.mul_idx(ki, li)] += 1;
                }
            }
            for part in partition.parts() {
                let mut it = part.iter();
                let first = counts[it.next().unwrap()];
                if !it.all(|i| counts[i] == first) {
                    return false;
                }
            }
            let _ = &idx;
        }
    }
    true
}

/// Partition of the dual group: characters with identical sums over every
/// part of `classes` are grouped.
pub fn character_partition(p: Prime, classes: &SetPartition) -> SetPartition {
    let n = p.order();
    let mut groups: std::collections::HashMap<Vec<CycInt>, ElemSet> = Default::default();
    for i in 0..n {
        let chi = GroupElement::from_index(p, i);
        let sums: Vec<CycInt> = classes
            .parts()
            .iter()
            .map(|k| char_sum(p, k, chi).unwrap())
            .collect();
        groups
            .entry(sums)
            .or_insert_with(|| ElemSet::empty(n))
            .insert(i);
    }
    SetPartition::new(n, groups.into_values().collect()).expect("grouping partitions the dual")
}

/// Full supercharacter-theory test: the structure-count axioms plus the
/// cardinality match between the two partitions.
pub fn is_sct(p: Prime, classes: &SetPartition) -> bool {
    verify_sring(&Gp2(p), classes) && character_partition(p, classes).len() == classes.len()
}

/// A validated supercharacter theory of `C_p x C_p`.
#[derive(Debug, Clone)]
pub struct Sct {
    p: Prime,
    classes: SetPartition,
    char_partition: OnceCell<SetPartition>,
    s_normals: Vec<Subgroup>,
    center: Subgroup,
    commutator: Subgroup,
    provenance: BTreeSet<Tag>,
}

impl PartialEq for Sct {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.classes == other.classes
    }
}
impl Eq for Sct {}

impl Sct {
    pub fn from_classes(p: Prime, classes: SetPartition) -> Result<Sct> {
        if classes.ground_size() != p.order() {
            return Err(Error::GroundSetMismatch(classes.ground_size(), p.order()));
        }
        if !verify_sring(&Gp2(p), &classes) {
            return Err(Error::InvalidTheory(
                "partition fails the superclass axioms".into(),
            ));
        }
        let s_normals = compute_s_normals(p, &classes);
        let center = compute_center(p, &classes)?;
        let commutator = compute_commutator(p, &classes);
        // [G,S] is itself S-normal
        debug_assert!(s_normals.iter().any(|s| s.elements == commutator.elements));
        Ok(Sct {
            p,
            classes,
            char_partition: OnceCell::new(),
            s_normals,
            center,
            commutator,
            provenance: BTreeSet::new(),
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn classes(&self) -> &SetPartition {
        &self.classes
    }

    pub fn class_of(&self, g: GroupElement) -> &ElemSet {
        self.classes.part_of(g.index(self.p))
    }

    pub fn canonical_key(&self) -> Vec<u8> {
        self.classes.canonical_key()
    }

    pub fn tags(&self) -> &BTreeSet<Tag> {
        &self.provenance
    }

    pub fn add_tag(&mut self, tag: Tag) {
        self.provenance.insert(tag);
    }

    /// Matching partition of the dual group (computed once, cached).
    pub fn char_partition(&self) -> &SetPartition {
        self.char_partition
            .get_or_init(|| character_partition(self.p, &self.classes))
    }

    /// All subgroups of `G` that are unions of classes; always contains
    /// the trivial subgroup and `G`.
    pub fn s_normal_subgroups(&self) -> &[Subgroup] {
        &self.s_normals
    }

    pub fn is_s_normal(&self, sub: &Subgroup) -> bool {
        self.s_normals.iter().any(|s| s.elements == sub.elements)
    }

    /// `Z(S)`: union of the size-one classes.
    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    /// `[G,S]`: generated by all `g^{-1} k` with `k` in the class of `g`.
    pub fn commutator(&self) -> &Subgroup {
        &self.commutator
    }

    /// Number of nontrivial proper S-normal subgroups; the `n` of `T_n`.
    pub fn type_n(&self) -> usize {
        self.s_normals
            .iter()
            .filter(|s| s.kind == SubgroupKind::Line)
            .count()
    }

    /// Supercharacter table: one row per basic character, one column per
    /// class, exact cyclotomic entries.
    pub fn super_table(&self) -> SuperTable {
        let reps: Vec<GroupElement> = self
            .classes
            .parts()
            .iter()
            .map(|k| GroupElement::from_index(self.p, k.min_elem().unwrap()))
            .collect();
        let rows = self
            .char_partition()
            .parts()
            .iter()
            .map(|x| {
                reps.iter()
                    // pairing is symmetric, so summing over X at g is a
                    // character sum with the roles swapped
                    .map(|&g| char_sum(self.p, x, g).unwrap())
                    .collect()
            })
            .collect();
        SuperTable {
            p: self.p,
            class_sizes: self.classes.parts().iter().map(|k| k.len()).collect(),
            rows,
        }
    }

    /// Restriction `S_N` to an S-normal line, on the `p`-slot carrier of
    /// powers of the line's canonical generator.
    pub fn restrict(&self, sub: &Subgroup) -> Result<CyclicSct> {
        self.require_s_normal_line(sub)?;
        let p = self.p;
        let gen = sub.generator.expect("lines have generators");
        // slot of each element of N in generator-power coordinates
        let mut slot = vec![usize::MAX; p.order()];
        for i in 0..p.get() as i64 {
            slot[group::pow(p, gen, i).index(p)] = i as usize;
        }
        let mut parts = Vec::new();
        for k in self.classes.parts() {
            if k.is_subset(&sub.elements) {
                parts.push(ElemSet::from_indices(
                    p.get() as usize,
                    k.iter().map(|i| slot[i]),
                ));
            } else if !k.is_disjoint(&sub.elements) {
                return Err(Error::InvalidTheory(
                    "class neither inside nor disjoint from an S-normal subgroup".into(),
                ));
            }
        }
        CyclicSct::from_parts(p, SetPartition::new(p.get() as usize, parts)?)
    }

    /// Quotient theory `S_{G/N}` on the canonical coset labelling of
    /// `G/N` (the canonical transversal line's generator maps to slot 1).
    pub fn quotient(&self, sub: &Subgroup) -> Result<CyclicSct> {
        self.require_s_normal_line(sub)?;
        let p = self.p;
        let label = coset_labels(p, sub);
        let mut images: Vec<ElemSet> = Vec::new();
        for k in self.classes.parts() {
            let img = ElemSet::from_indices(p.get() as usize, k.iter().map(|i| label[i]));
            if !images.contains(&img) {
                images.push(img);
            }
        }
        CyclicSct::from_parts(p, SetPartition::new(p.get() as usize, images)?)
    }

    fn require_s_normal_line(&self, sub: &Subgroup) -> Result<()> {
        if sub.kind != SubgroupKind::Line {
            return Err(Error::InvalidArgument(
                "restriction/quotient carrier must be a line".into(),
            ));
        }
        if !self.is_s_normal(sub) {
            return Err(Error::InvalidArgument("subgroup is not S-normal".into()));
        }
        Ok(())
    }

    /// Hendrickson duality: the theory on the dual group whose classes
    /// are the parts of the character partition.
    pub fn dual(&self) -> Result<Sct> {
        Sct::from_classes(self.p, self.char_partition().clone())
    }

    /// `S = S_N * S_{G/N}`: every class outside `N` is a union of
    /// `N`-cosets. Degenerate carriers `1` and `G` pass trivially.
    pub fn is_star_product_over(&self, sub: &Subgroup) -> Result<bool> {
        if !self.is_s_normal(sub) {
            return Err(Error::InvalidArgument("subgroup is not S-normal".into()));
        }
        let p = self.p;
        for k in self.classes.parts() {
            if k.is_disjoint(&sub.elements) {
                for i in k.iter() {
                    let g = GroupElement::from_index(p, i);
                    for j in sub.elements.iter() {
                        let n = GroupElement::from_index(p, j);
                        if !k.contains(group::mul(p, g, n).index(p)) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Cardinality criterion for `S = S_H x S_N` over two distinct
    /// S-normal lines.
    pub fn is_direct_product(&self, h: &Subgroup, n: &Subgroup) -> Result<bool> {
        if h.elements == n.elements {
            return Err(Error::InvalidArgument(
                "direct product needs two distinct lines".into(),
            ));
        }
        let sh = self.restrict(h)?;
        let sn = self.restrict(n)?;
        Ok(self.classes.len() == sh.parts().len() * sn.parts().len())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let p = self.p;
        let elem = |i: usize| {
            let g = GroupElement::from_index(p, i);
            serde_json::json!([g.a, g.b])
        };
        let sub_json = |s: &Subgroup| {
            serde_json::json!({
                "kind": s.kind,
                "generator": s.generator.map(|g| serde_json::json!([g.a, g.b])),
            })
        };
        serde_json::json!({
            "p": p.get(),
            "classes": self
                .classes
                .parts()
                .iter()
                .map(|k| k.iter().map(elem).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "type": self.type_n(),
            "s_normals": self.s_normals.iter().map(sub_json).collect::<Vec<_>>(),
            "center": sub_json(&self.center),
            "commutator": sub_json(&self.commutator),
            "provenance": self.provenance.iter().collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Sct> {
        let bad = |m: &str| Error::InvalidArgument(format!("theory JSON: {m}"));
        let p = Prime::new(
            value
                .get("p")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| bad("missing p"))?,
        )?;
        let classes = value
            .get("classes")
            .and_then(|v| v.as_array())
            .ok_or_else(|| bad("missing classes"))?;
        let mut parts = Vec::new();
        for class in classes {
            let class = class.as_array().ok_or_else(|| bad("class not an array"))?;
            let mut set = ElemSet::empty(p.order());
            for pair in class {
                let pair = pair.as_array().ok_or_else(|| bad("element not [a,b]"))?;
                if pair.len() != 2 {
                    return Err(bad("element not [a,b]"));
                }
                let a = pair[0].as_i64().ok_or_else(|| bad("bad exponent"))?;
                let b = pair[1].as_i64().ok_or_else(|| bad("bad exponent"))?;
                set.insert(GroupElement::new(p, a, b).index(p));
            }
            parts.push(set);
        }
        Sct::from_classes(p, SetPartition::new(p.order(), parts)?)
    }
}

fn compute_s_normals(p: Prime, classes: &SetPartition) -> Vec<Subgroup> {
    let mut all = vec![Subgroup::trivial(p)];
    all.extend(group::proper_subgroups(p));
    all.push(Subgroup::full(p));
    all.retain(|sub| {
        classes
            .parts()
            .iter()
            .all(|k| k.is_subset(&sub.elements) || k.is_disjoint(&sub.elements))
    });
    all
}

fn compute_center(p: Prime, classes: &SetPartition) -> Result<Subgroup> {
    let mut z = ElemSet::empty(p.order());
    for k in classes.parts() {
        if k.len() == 1 {
            z.union_with(k);
        }
    }
    let sub = group::subgroup_generated(p, &z);
    if sub.elements != z {
        return Err(Error::InvalidTheory(
            "singleton classes do not form a subgroup".into(),
        ));
    }
    Ok(sub)
}

fn compute_commutator(p: Prime, classes: &SetPartition) -> Subgroup {
    let mut diffs = ElemSet::empty(p.order());
    for k in classes.parts() {
        for i in k.iter() {
            let g_inv = group::inv(p, GroupElement::from_index(p, i));
            for j in k.iter() {
                let h = GroupElement::from_index(p, j);
                diffs.insert(group::mul(p, g_inv, h).index(p));
            }
        }
    }
    group::subgroup_generated(p, &diffs)
}

/// Coset label of every element of `G` for the quotient by a line:
/// a linear form with kernel `sub`, scaled so the canonical transversal
/// line's generator gets label 1.
pub fn coset_labels(p: Prime, sub: &Subgroup) -> Vec<usize> {
    let gen = sub.generator.expect("lines have generators");
    let q = p.get() as i64;
    // lambda(x^c y^d) = gen.b * c - gen.a * d has kernel <gen>
    let lam = |g: GroupElement| -> i64 {
        (gen.b as i64 * g.a as i64 - gen.a as i64 * g.b as i64).rem_euclid(q)
    };
    let transversal = group::proper_subgroups(p)
        .into_iter()
        .find(|m| m.elements != sub.elements)
        .expect("p + 1 >= 2 lines");
    let t = transversal.generator.unwrap();
    let scale = mod_inv(lam(t).rem_euclid(q) as u64, p.get() as u64) as i64;
    (0..p.order())
        .map(|i| (lam(GroupElement::from_index(p, i)) * scale).rem_euclid(q) as usize)
        .collect()
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Supercharacter theory of a cyclic group of prime order, on the slot
/// carrier of generator powers. Every such theory is the orbit partition
/// of a power map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSct {
    p: Prime,
    parts: SetPartition,
}

impl CyclicSct {
    pub fn from_parts(p: Prime, parts: SetPartition) -> Result<CyclicSct> {
        if parts.ground_size() != p.get() as usize {
            return Err(Error::GroundSetMismatch(
                parts.ground_size(),
                p.get() as usize,
            ));
        }
        if !verify_sring(&Cyclic(p), &parts) {
            return Err(Error::InvalidTheory(
                "partition fails the superclass axioms on the cyclic carrier".into(),
            ));
        }
        Ok(CyclicSct { p, parts })
    }

    /// Orbits of the power map `i -> m*i` (exponent coordinates); the
    /// theory written `[H]_m`.
    pub fn power_theory(p: Prime, m: u32) -> Result<CyclicSct> {
        if m % p.get() == 0 {
            return Err(Error::InvalidArgument("m must be coprime to p".into()));
        }
        let q = p.get() as usize;
        let sub = unit_subgroup(p, m);
        let mut assigned = vec![false; q];
        let mut parts = vec![ElemSet::singleton(q, 0)];
        assigned[0] = true;
        for i in 1..q {
            if assigned[i] {
                continue;
            }
            let mut part = ElemSet::empty(q);
            for &u in &sub {
                let j = i * u as usize % q;
                part.insert(j);
                assigned[j] = true;
            }
            parts.push(part);
        }
        Ok(CyclicSct {
            p,
            parts: SetPartition::new(q, parts).unwrap(),
        })
    }

    pub fn finest(p: Prime) -> CyclicSct {
        Self::power_theory(p, 1).unwrap()
    }

    pub fn coarsest(p: Prime) -> CyclicSct {
        CyclicSct {
            p,
            parts: SetPartition::identity_and_rest(p.get() as usize),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn parts(&self) -> &SetPartition {
        &self.parts
    }

    /// Canonical power-map parameter: the smallest positive generator of
    /// the unit subgroup whose orbits are the classes.
    pub fn restriction_param(&self) -> u32 {
        for m in group::canonical_power_params(self.p) {
            if Self::power_theory(self.p, m).unwrap() == *self {
                return m;
            }
        }
        unreachable!("every theory of C_p is a power-map theory")
    }
}

/// Exact supercharacter table.
#[derive(Debug, Clone)]
pub struct SuperTable {
    p: Prime,
    class_sizes: Vec<usize>,
    rows: Vec<Vec<CycInt>>,
}

impl SuperTable {
    pub fn rows(&self) -> &[Vec<CycInt>] {
        &self.rows
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Class-size-weighted inner product of two rows (conjugating the
    /// second); basic characters of distinct parts are orthogonal.
    pub fn row_inner(&self, i: usize, j: usize) -> CycInt {
        let mut acc = CycInt::zero(self.p);
        for (k, &size) in self.class_sizes.iter().enumerate() {
            let conj = self.rows[j][k].galois(self.p, -1);
            let term = self.rows[i][k].mul(&conj);
            let weighted = term.mul(&CycInt::from_integer(self.p, size as i64));
            acc = acc.add(&weighted);
        }
        acc
    }
}
