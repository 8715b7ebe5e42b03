//! Partitions and partial partitions of a fixed ground set, with the
//! refinement order, join, common refinement and canonical byte keys.
//!
//! The ground set is all of `G` (size `p^2`) for superclass partitions;
//! the same machinery runs on a `p`-element ground set for the cyclic
//! carriers `N` and `G/N`.

use crate::error::{Error, Result};
use crate::set::ElemSet;

/// Partition of `{0, ..., n-1}` into disjoint nonempty parts covering
/// everything. Parts are stored sorted by minimum element, so two equal
/// partitions are structurally identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    parts: Vec<ElemSet>,
}

impl SetPartition {
    pub fn new(n: usize, mut parts: Vec<ElemSet>) -> Result<SetPartition> {
        let mut seen = ElemSet::empty(n);
        for part in &parts {
            if part.ground_size() != n {
                return Err(Error::GroundSetMismatch(part.ground_size(), n));
            }
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            if !seen.is_disjoint(part) {
                return Err(Error::InvalidPartition("overlapping parts".into()));
            }
            seen.union_with(part);
        }
        if seen.len() != n {
            return Err(Error::InvalidPartition(format!(
                "parts cover {} of {} elements",
                seen.len(),
                n
            )));
        }
        parts.sort_by_key(|part| part.min_elem());
        Ok(SetPartition { n, parts })
    }

    pub fn singletons(n: usize) -> SetPartition {
        SetPartition {
            n,
            parts: (0..n).map(|i| ElemSet::singleton(n, i)).collect(),
        }
    }

    /// `{{0}, rest}` — the coarsest partition that keeps slot 0 alone.
    pub fn identity_and_rest(n: usize) -> SetPartition {
        let mut rest = ElemSet::full(n);
        rest.remove(0);
        SetPartition {
            n,
            parts: vec![ElemSet::singleton(n, 0), rest],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[ElemSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index into `parts()` for each ground element.
    pub fn part_index(&self) -> Vec<u32> {
        let mut idx = vec![0u32; self.n];
        for (k, part) in self.parts.iter().enumerate() {
            for i in part.iter() {
                idx[i] = k as u32;
            }
        }
        idx
    }

    pub fn part_of(&self, i: usize) -> &ElemSet {
        self.parts
            .iter()
            .find(|part| part.contains(i))
            .expect("partition covers the ground set")
    }

    pub fn has_part(&self, part: &ElemSet) -> bool {
        self.parts.iter().any(|q| q == part)
    }

    /// `self` refines `other`: every part of `self` sits inside a part
    /// of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch(self.n, other.n));
        }
        let idx = other.part_index();
        Ok(self.parts.iter().all(|part| {
            let mut it = part.iter();
            let first = idx[it.next().unwrap()];
            it.all(|i| idx[i] == first)
        }))
    }

    /// Finest partition coarser than both: connected components of the
    /// part-overlap graph, via union-find.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch(self.n, other.n));
        }
        let mut uf = UnionFind::new(self.n);
        for part in self.parts.iter().chain(&other.parts) {
            let mut it = part.iter();
            let first = it.next().unwrap();
            for i in it {
                uf.union(first, i);
            }
        }
        let mut groups: std::collections::HashMap<usize, ElemSet> = Default::default();
        for i in 0..self.n {
            groups
                .entry(uf.find(i))
                .or_insert_with(|| ElemSet::empty(self.n))
                .insert(i);
        }
        SetPartition::new(self.n, groups.into_values().collect())
    }

    /// Partition meet: all nonempty pairwise intersections.
    pub fn common_refinement(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch(self.n, other.n));
        }
        let mut parts = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                let c = a.intersection(b);
                if !c.is_empty() {
                    parts.push(c);
                }
            }
        }
        SetPartition::new(self.n, parts)
    }

    /// Deduplication key: equal partitions get equal byte strings.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(self.parts.len() * self.n.div_ceil(8));
        for part in &self.parts {
            for w in part.words() {
                key.extend_from_slice(&w.to_le_bytes());
            }
            key.push(0xff);
        }
        key
    }
}

/// Pairwise-disjoint nonempty parts that need not cover the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialPartition {
    n: usize,
    parts: Vec<ElemSet>,
}

impl PartialPartition {
    pub fn new(n: usize, mut parts: Vec<ElemSet>) -> Result<PartialPartition> {
        let mut seen = ElemSet::empty(n);
        for part in &parts {
            if part.ground_size() != n {
                return Err(Error::GroundSetMismatch(part.ground_size(), n));
            }
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            if !seen.is_disjoint(part) {
                return Err(Error::InvalidPartition("overlapping parts".into()));
            }
            seen.union_with(part);
        }
        parts.sort_by_key(|part| part.min_elem());
        Ok(PartialPartition { n, parts })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[ElemSet] {
        &self.parts
    }

    /// Elements not in any part.
    pub fn uncovered(&self) -> ElemSet {
        let mut rest = ElemSet::full(self.n);
        for part in &self.parts {
            rest.remove_all(part);
        }
        rest
    }

    /// Completion to a full partition: the parts plus the uncovered
    /// remainder as one block (when nonempty).
    pub fn complete(&self) -> SetPartition {
        let mut parts = self.parts.clone();
        let rest = self.uncovered();
        if !rest.is_empty() {
            parts.push(rest);
        }
        SetPartition::new(self.n, parts).expect("disjoint parts plus remainder cover")
    }
}

impl From<SetPartition> for PartialPartition {
    fn from(p: SetPartition) -> Self {
        PartialPartition {
            n: p.n,
            parts: p.parts,
        }
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        let mut i = i;
        while self.parent[i] as usize != i {
            self.parent[i] = self.parent[self.parent[i] as usize];
            i = self.parent[i] as usize;
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb) as u32;
        }
    }
}
