//! Enumeration: complete search for all theories at small primes,
//! automorphic theories from subgroups of `GL(2,p)`, partition theories,
//! product theories, and catalog assembly with provenance tags.

use crate::carrier::Gp2;
use crate::construct;
use crate::error::{Error, Result};
use crate::group::{self, GroupElement, Prime};
use crate::partition::{PartialPartition, SetPartition};
use crate::refine;
use crate::sct::{is_sct, CyclicSct, Sct, Tag};
use crate::set::ElemSet;
use std::collections::BTreeMap;

/// Visit every set partition of `{0..n-1}` as a restricted-growth string
/// (`rgs[i]` = block index of element `i`, `rgs[0] = 0`,
/// `rgs[i] <= max(rgs[..i]) + 1`).
pub fn for_each_set_partition(n: usize, f: &mut impl FnMut(&[usize])) {
    let mut rgs = vec![0usize; n];
    fn rec(rgs: &mut Vec<usize>, i: usize, max: usize, f: &mut impl FnMut(&[usize])) {
        if i == rgs.len() {
            f(rgs);
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(rgs, i + 1, max.max(b), f);
        }
    }
    if n == 0 {
        f(&rgs);
        return;
    }
    rec(&mut rgs, 1, 0, f);
}

/// All set partitions of `{0..n-1}` as block lists; materializes
/// `Bell(n)` partitions, so keep `n` small.
pub fn set_partitions_of(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_set_partition(n, &mut |rgs| {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut partition = vec![Vec::new(); blocks];
        for (i, &b) in rgs.iter().enumerate() {
            partition[b].push(i);
        }
        out.push(partition);
    });
    out
}

/// A deduplicated batch of theories for one prime.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub p: Prime,
    pub theories: Vec<Sct>,
    /// True when the batch is known to contain every theory (`p <= 5`).
    pub complete: bool,
}

/// One row of the per-type classification of a catalog.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TypeRow {
    pub type_n: usize,
    pub product: u64,
    pub automorphic: u64,
    pub partition: u64,
    pub total: Option<u64>,
}

impl Catalog {
    /// Merge theory batches, unioning provenance tags of duplicates;
    /// output sorted by canonical key.
    pub fn from_batches(p: Prime, batches: Vec<Vec<Sct>>, complete: bool) -> Catalog {
        let mut by_key: BTreeMap<Vec<u8>, Sct> = BTreeMap::new();
        for batch in batches {
            for sct in batch {
                match by_key.entry(sct.canonical_key()) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(sct);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        for &t in sct.tags() {
                            e.get_mut().add_tag(t);
                        }
                    }
                }
            }
        }
        let mut theories: Vec<Sct> = by_key.into_values().collect();
        if complete {
            for s in &mut theories {
                if s.tags().is_empty() {
                    s.add_tag(Tag::Other);
                }
            }
        }
        Catalog {
            p,
            theories,
            complete,
        }
    }

    /// Everything the engine can produce for `p`: products, automorphic
    /// and partition theories, plus the complete search when `p <= 5`.
    pub fn assemble(p: Prime) -> Result<Catalog> {
        let mut batches = vec![
            enumerate_products(p)?,
            enumerate_automorphic(p)?,
            enumerate_partition_theories(p)?,
        ];
        let complete = p.get() <= 5;
        if complete {
            batches.push(enumerate_all(p)?);
        }
        Ok(Catalog::from_batches(p, batches, complete))
    }

    /// Per-type counts of the product, automorphic and partition columns;
    /// totals only for complete catalogs.
    pub fn classify(&self) -> Vec<TypeRow> {
        let mut rows: BTreeMap<usize, TypeRow> = BTreeMap::new();
        for s in &self.theories {
            let row = rows.entry(s.type_n()).or_insert_with(|| TypeRow {
                type_n: s.type_n(),
                product: 0,
                automorphic: 0,
                partition: 0,
                total: self.complete.then_some(0),
            });
            if s.tags().contains(&Tag::Star) || s.tags().contains(&Tag::Direct) {
                row.product += 1;
            }
            if s.tags().contains(&Tag::Automorphic) {
                row.automorphic += 1;
            }
            if s.tags().contains(&Tag::Partition) {
                row.partition += 1;
            }
            if let Some(t) = &mut row.total {
                *t += 1;
            }
        }
        rows.into_values().collect()
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.theories {
            out.push_str(&s.to_json().to_string());
            out.push('\n');
        }
        out
    }
}

/// Complete enumeration of every theory of `C_p x C_p`, `p <= 5`.
///
/// Depth-first search on the class of the least unassigned element. The
/// candidate class is a union of orbits of a subgroup `D` of the units
/// (its exact power-map stabilizer), at most one `D`-orbit per full unit
/// orbit, confined to one part of the coherent closure of the classes
/// chosen so far; choosing it forces its power images as classes too.
/// Nodes where the closure splits a chosen class are pruned, and complete
/// assignments pass a final full validation.
pub fn enumerate_all(p: Prime) -> Result<Vec<Sct>> {
    if p.get() > 5 {
        return Err(Error::Infeasible(format!(
            "complete enumeration supports p <= 5, got {}",
            p.get()
        )));
    }
    let n = p.order();
    let q = p.get() as usize;
    // pow_table[e][i]: slot of g^e for slot i
    let pow_table: Vec<Vec<usize>> = (0..q)
        .map(|e| {
            (0..n)
                .map(|i| group::pow(p, GroupElement::from_index(p, i), e as i64).index(p))
                .collect()
        })
        .collect();
    let stabilizers: Vec<Vec<usize>> = group::canonical_power_params(p)
        .iter()
        .map(|&m| {
            group::unit_subgroup(p, m)
                .into_iter()
                .map(|e| e as usize)
                .collect()
        })
        .collect();
    let units: Vec<usize> = (1..q).collect();
    let gp2 = Gp2(p);
    let mut found: BTreeMap<Vec<u8>, Sct> = BTreeMap::new();

    let orbit = |i: usize, exps: &[usize]| -> ElemSet {
        ElemSet::from_indices(n, exps.iter().map(|&e| pow_table[e][i]))
    };
    let image = |part: &ElemSet, e: usize| -> ElemSet {
        ElemSet::from_indices(n, part.iter().map(|i| pow_table[e][i]))
    };

    struct Ctx<'a> {
        p: Prime,
        n: usize,
        gp2: Gp2,
        units: &'a [usize],
        stabilizers: &'a [Vec<usize>],
        found: &'a mut BTreeMap<Vec<u8>, Sct>,
    }

    fn dfs(
        ctx: &mut Ctx,
        chosen: &[ElemSet],
        orbit: &dyn Fn(usize, &[usize]) -> ElemSet,
        image: &dyn Fn(&ElemSet, usize) -> ElemSet,
    ) {
        let partial = PartialPartition::new(ctx.n, chosen.to_vec()).expect("disjoint by construction");
        let closure = refine::k_infty(&ctx.gp2, &partial);
        if !chosen.iter().all(|c| closure.has_part(c)) {
            return; // a chosen class can no longer be a single class
        }
        let mut covered = ElemSet::empty(ctx.n);
        for c in chosen {
            covered.union_with(c);
        }
        let Some(g) = (0..ctx.n).find(|&i| !covered.contains(i)) else {
            let full = SetPartition::new(ctx.n, chosen.to_vec()).unwrap();
            if is_sct(ctx.p, &full) {
                let sct = Sct::from_classes(ctx.p, full).unwrap();
                ctx.found.insert(sct.canonical_key(), sct);
            }
            return;
        };
        let region = closure.part_of(g).clone();
        // the full unit orbits inside the region, minus g's own
        let mut rest_orbits: Vec<ElemSet> = Vec::new();
        let mut seen = orbit(g, ctx.units);
        for i in region.iter() {
            if !seen.contains(i) {
                let o = orbit(i, ctx.units);
                seen.union_with(&o);
                rest_orbits.push(o);
            }
        }
        for d in ctx.stabilizers {
            let base = orbit(g, d);
            if !base.is_subset(&region) {
                continue;
            }
            // options per remaining full orbit: skip, or one D-orbit of it
            let mut options: Vec<Vec<Option<ElemSet>>> = Vec::new();
            for o in &rest_orbits {
                let mut opts: Vec<Option<ElemSet>> = vec![None];
                let mut used = ElemSet::empty(ctx.n);
                for i in o.iter() {
                    if !used.contains(i) {
                        let sub = orbit(i, d);
                        used.union_with(&sub);
                        opts.push(Some(sub));
                    }
                }
                options.push(opts);
            }
            let mut pick = vec![0usize; options.len()];
            loop {
                let mut candidate = base.clone();
                for (oi, &k) in pick.iter().enumerate() {
                    if let Some(sub) = &options[oi][k] {
                        candidate.union_with(sub);
                    }
                }
                // require the stabilizer to be exactly D, so each class
                // shape is generated under a unique D
                let exact = ctx
                    .units
                    .iter()
                    .filter(|e| !d.contains(e))
                    .all(|&e| image(&candidate, e) != candidate);
                if exact {
                    let mut forced: Vec<ElemSet> = vec![candidate.clone()];
                    for &e in ctx.units {
                        let img = image(&candidate, e);
                        if !forced.contains(&img) {
                            forced.push(img);
                        }
                    }
                    let mut next = chosen.to_vec();
                    next.extend(forced);
                    dfs(ctx, &next, orbit, image);
                }
                // advance the mixed-radix picker
                let mut oi = 0;
                loop {
                    if oi == pick.len() {
                        break;
                    }
                    pick[oi] += 1;
                    if pick[oi] < options[oi].len() {
                        break;
                    }
                    pick[oi] = 0;
                    oi += 1;
                }
                if oi == pick.len() {
                    break;
                }
            }
        }
    }

    let mut ctx = Ctx {
        p,
        n,
        gp2,
        units: &units,
        stabilizers: &stabilizers,
        found: &mut found,
    };
    let start = vec![ElemSet::singleton(n, 0)];
    dfs(&mut ctx, &start, &orbit, &image);
    Ok(found.into_values().collect())
}

/// Brute-force oracle: test every partition of `G \ 1` against the full
/// theory axioms. `Bell(p^2 - 1)` candidates, so only `p <= 3`.
pub fn enumerate_all_brute_force(p: Prime) -> Result<Vec<Sct>> {
    if p.get() > 3 {
        return Err(Error::Infeasible(
            "brute-force enumeration supports p <= 3".into(),
        ));
    }
    let n = p.order();
    let mut found: BTreeMap<Vec<u8>, Sct> = BTreeMap::new();
    for_each_set_partition(n - 1, &mut |rgs| {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut parts = vec![ElemSet::singleton(n, 0)];
        parts.extend((0..blocks).map(|_| ElemSet::empty(n)));
        for (i, &b) in rgs.iter().enumerate() {
            parts[b + 1].insert(i + 1);
        }
        let partition = SetPartition::new(n, parts).unwrap();
        if is_sct(p, &partition) {
            let sct = Sct::from_classes(p, partition).unwrap();
            found.insert(sct.canonical_key(), sct);
        }
    });
    Ok(found.into_values().collect())
}

/// All distinct orbit partitions of subgroups of `GL(2, p)`.
///
/// A subgroup's orbit partition is the join of the orbit partitions of
/// its cyclic subgroups (orbits of a generated group are the connected
/// components under the generators), so the set of automorphic class
/// partitions is the join closure of the single-matrix orbit partitions.
/// This avoids enumerating the subgroup lattice of `GL(2, p)` itself.
pub fn enumerate_automorphic(p: Prime) -> Result<Vec<Sct>> {
    if p.get() > 11 {
        return Err(Error::Infeasible(format!(
            "automorphic enumeration supports p <= 11, got {}",
            p.get()
        )));
    }
    let q = p.get() as i64;
    let mut base: BTreeMap<Vec<u8>, SetPartition> = BTreeMap::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let Ok(m) = construct::AutMatrix::new(p, [[a, b], [c, d]]) else {
                        continue;
                    };
                    let orbits = construct::orbit_partition(p, &[m]);
                    base.insert(orbits.canonical_key(), orbits);
                }
            }
        }
    }
    let base: Vec<SetPartition> = base.into_values().collect();
    let mut closed: BTreeMap<Vec<u8>, SetPartition> = BTreeMap::new();
    let mut frontier: Vec<SetPartition> = Vec::new();
    for part in &base {
        if closed.insert(part.canonical_key(), part.clone()).is_none() {
            frontier.push(part.clone());
        }
    }
    while let Some(current) = frontier.pop() {
        for b in &base {
            let joined = current.join(b).unwrap();
            let key = joined.canonical_key();
            if !closed.contains_key(&key) {
                closed.insert(key, joined.clone());
                frontier.push(joined);
            }
        }
    }
    let mut out = Vec::with_capacity(closed.len());
    for partition in closed.into_values() {
        let mut sct = Sct::from_classes(p, partition)?;
        sct.add_tag(Tag::Automorphic);
        out.push(sct);
    }
    Ok(out)
}

/// All `Bell(p+1)` partition theories, one per set partition of the
/// lines. Materialized only for `p <= 7`; for `p = 11` use
/// [`partition_type_tally`], which counts without building theories.
pub fn enumerate_partition_theories(p: Prime) -> Result<Vec<Sct>> {
    if p.get() > 7 {
        return Err(Error::Infeasible(
            "materialized partition theories support p <= 7; use the type tally".into(),
        ));
    }
    let k = p.get() as usize + 1;
    let mut out = Vec::new();
    for_each_set_partition(k, &mut |rgs| {
        let blocks = rgs.iter().copied().max().unwrap() + 1;
        let mut parts = vec![ElemSet::empty(k); blocks];
        for (i, &b) in rgs.iter().enumerate() {
            parts[b].insert(i);
        }
        let index_partition = SetPartition::new(k, parts).unwrap();
        let mut sct = construct::partition_theory(p, &index_partition).unwrap();
        sct.add_tag(Tag::Partition);
        out.push(sct);
    });
    // distinct line partitions give distinct theories, so no dedup needed
    Ok(out)
}

/// Per-type counts of partition theories by direct iteration over all
/// set partitions of the lines (type = number of singleton blocks),
/// feasible through `p = 11`.
pub fn partition_type_tally(p: Prime) -> Result<BTreeMap<usize, u64>> {
    if p.get() > 11 {
        return Err(Error::Infeasible(
            "partition tally supports p <= 11".into(),
        ));
    }
    let k = p.get() as usize + 1;
    let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
    for_each_set_partition(k, &mut |rgs| {
        let mut sizes = vec![0u32; k];
        for &b in rgs {
            sizes[b] += 1;
        }
        let singletons = sizes.iter().filter(|&&s| s == 1).count();
        *tally.entry(singletons).or_default() += 1;
    });
    Ok(tally)
}

/// All distinct star products and direct products over canonical
/// power-map parameters, tagged by kind.
pub fn enumerate_products(p: Prime) -> Result<Vec<Sct>> {
    if p.get() > 11 {
        return Err(Error::Infeasible(
            "product enumeration supports p <= 11".into(),
        ));
    }
    let lines = group::proper_subgroups(p);
    let params = group::canonical_power_params(p);
    let cyclic: Vec<CyclicSct> = params
        .iter()
        .map(|&m| CyclicSct::power_theory(p, m).unwrap())
        .collect();
    let mut by_key: BTreeMap<Vec<u8>, Sct> = BTreeMap::new();
    let mut add = |mut sct: Sct, tag: Tag| {
        sct.add_tag(tag);
        match by_key.entry(sct.canonical_key()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(sct);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_tag(tag);
            }
        }
    };
    for n in &lines {
        for u in &cyclic {
            for v in &cyclic {
                add(construct::star_product(p, n, u, v)?, Tag::Star);
            }
        }
    }
    for (i, h) in lines.iter().enumerate() {
        for n in &lines[i + 1..] {
            for e in &cyclic {
                for f in &cyclic {
                    add(construct::direct_product(p, h, n, e, f)?, Tag::Direct);
                }
            }
        }
    }
    Ok(by_key.into_values().collect())
}
