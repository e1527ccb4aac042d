//! Fully enumerated permutation groups.
//!
//! Groups are built by Dimino-style coset extension and keep their complete,
//! sorted element list. Every algorithm here (normal closure, core,
//! simplicity, normal-subgroup enumeration) works directly on elements, which
//! is fine at the sizes this crate deals with; the closure cap turns anything
//! larger into an explicit [`Error::CapExceeded`].

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    /// Sorted ascending; `elements[0]` is the identity.
    elements: Vec<Perm>,
}

/// Groups are equal when their element sets are; generators are ignored.
impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

/// Working set for incremental closure.
struct Closure {
    set: HashSet<Perm>,
    list: Vec<Perm>,
}

impl Closure {
    fn trivial(degree: usize) -> Self {
        let id = Perm::identity(degree);
        Closure {
            set: HashSet::from([id.clone()]),
            list: vec![id],
        }
    }

    fn from_group(g: &PermGroup) -> Self {
        Closure {
            set: g.elements.iter().cloned().collect(),
            list: g.elements.clone(),
        }
    }

    /// Extends the current group (closed, generated by a prefix of `gens`)
    /// to the group generated by all of `gens`. Each new element is checked
    /// against `allowed` when given.
    fn extend(&mut self, gens: &[Perm], cap: usize, allowed: Option<&HashSet<Perm>>) -> Result<()> {
        if gens.iter().all(|g| self.set.contains(g)) {
            return Ok(());
        }
        let base: Vec<Perm> = self.list.clone();
        let mut reps = vec![Perm::identity(gens[0].degree())];
        let mut r = 0;
        while r < reps.len() {
            for s in gens {
                let candidate = reps[r].then(s);
                if self.set.contains(&candidate) {
                    continue;
                }
                if self.list.len() + base.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
                for h in &base {
                    let e = h.then(&candidate);
                    if let Some(allowed) = allowed {
                        if !allowed.contains(&e) {
                            return Err(Error::NotSubgroup);
                        }
                    }
                    self.set.insert(e.clone());
                    self.list.push(e);
                }
                reps.push(candidate);
            }
            r += 1;
        }
        Ok(())
    }

    fn into_sorted(self) -> Vec<Perm> {
        let mut list = self.list;
        list.sort_unstable();
        list
    }
}

fn check_degrees(gens: &[Perm]) -> Result<usize> {
    let degree = gens[0].degree();
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    Ok(degree)
}

/// The group generated by `gens`, enumerated up to `cap` elements.
pub fn closure(gens: &[Perm], cap: usize) -> Result<PermGroup> {
    if gens.is_empty() {
        return Err(Error::Invalid("closure needs at least one generator".into()));
    }
    let degree = check_degrees(gens)?;
    let mut c = Closure::trivial(degree);
    for k in 0..gens.len() {
        c.extend(&gens[..=k], cap, None)?;
    }
    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        elements: c.into_sorted(),
    })
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Perm::identity(degree)],
        }
    }

    /// Wraps a set of elements that should form a group. A small generating
    /// set is picked greedily in ascending element order; fails with
    /// [`Error::NotSubgroup`] if the set is not closed.
    pub fn from_elements(degree: usize, elements: impl IntoIterator<Item = Perm>) -> Result<Self> {
        let target: HashSet<Perm> = elements.into_iter().collect();
        let id = Perm::identity(degree);
        if !target.contains(&id) {
            return Err(Error::NotSubgroup);
        }
        let mut sorted: Vec<&Perm> = target.iter().collect();
        sorted.sort_unstable();
        let mut c = Closure::trivial(degree);
        let mut generators = Vec::new();
        for e in sorted {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: e.degree(),
                });
            }
            if !c.set.contains(e) {
                generators.push(e.clone());
                c.extend(&generators, usize::MAX, Some(&target))?;
            }
        }
        debug_assert_eq!(c.list.len(), target.len());
        Ok(PermGroup {
            degree,
            generators,
            elements: c.into_sorted(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Position of `p` in the sorted element list.
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// The orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.elements.iter().map(|g| g.apply(point)).collect();
        set.into_iter().collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Extends the group by more generators, staying within `cap`.
    pub fn extended(&self, extra: &[Perm], cap: usize) -> Result<PermGroup> {
        let mut generators = self.generators.clone();
        generators.extend(extra.iter().filter(|p| !self.contains(p)).cloned());
        if generators.len() == self.generators.len() {
            return Ok(self.clone());
        }
        let mut c = Closure::from_group(self);
        c.extend(&generators, cap, None)?;
        Ok(PermGroup {
            degree: self.degree,
            generators,
            elements: c.into_sorted(),
        })
    }

    fn require_subgroup(&self, h: &PermGroup) -> Result<()> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(Error::NotSubgroup)
        }
    }
}

pub fn stabilizer(g: &PermGroup, point: usize) -> PermGroup {
    PermGroup::from_elements(
        g.degree,
        g.elements.iter().filter(|p| p.apply(point) == point).cloned(),
    )
    .expect("point stabilizers are subgroups")
}

pub fn intersection(a: &PermGroup, b: &PermGroup) -> PermGroup {
    PermGroup::from_elements(a.degree, a.elements.iter().filter(|p| b.contains(p)).cloned())
        .expect("intersections of subgroups are subgroups")
}

/// Normality of `h` in `g`, tested on generators.
pub fn is_normal(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    g.require_subgroup(h)?;
    Ok(g.generators
        .iter()
        .all(|x| h.generators.iter().all(|y| h.contains(&y.conjugate_by(x)))))
}

/// Smallest normal subgroup of `g` containing `seed`.
pub fn normal_closure(g: &PermGroup, seed: &[Perm]) -> Result<PermGroup> {
    if let Some(p) = seed.iter().find(|p| !g.contains(p)) {
        return Err(if p.degree() != g.degree {
            Error::DegreeMismatch {
                left: g.degree,
                right: p.degree(),
            }
        } else {
            Error::NotSubgroup
        });
    }
    let mut n = PermGroup::trivial(g.degree).extended(seed, usize::MAX)?;
    loop {
        let fresh: Vec<Perm> = n
            .generators
            .iter()
            .flat_map(|y| g.generators.iter().map(move |x| y.conjugate_by(x)))
            .filter(|c| !n.contains(c))
            .collect();
        if fresh.is_empty() {
            return Ok(n);
        }
        // Adding one conjugate at a time keeps the generating set small.
        n = n.extended(&fresh[..1], usize::MAX)?;
    }
}

/// Largest normal subgroup of `g` contained in `h`.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    g.require_subgroup(h)?;
    let mut kept: HashSet<Perm> = h.elements.iter().cloned().collect();
    loop {
        let dropped: Vec<Perm> = kept
            .iter()
            .filter(|k| g.generators.iter().any(|x| !kept.contains(&k.conjugate_by(x))))
            .cloned()
            .collect();
        if dropped.is_empty() {
            break;
        }
        for k in dropped {
            kept.remove(&k);
        }
    }
    PermGroup::from_elements(g.degree, kept)
}

/// Conjugacy classes, each sorted, ordered by their minimal element.
pub fn conjugacy_classes(g: &PermGroup) -> Vec<Vec<Perm>> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut classes = Vec::new();
    for e in &g.elements {
        if seen.contains(e) {
            continue;
        }
        seen.insert(e.clone());
        let mut class = vec![e.clone()];
        let mut k = 0;
        while k < class.len() {
            for x in &g.generators {
                let c = class[k].conjugate_by(x);
                if seen.insert(c.clone()) {
                    class.push(c);
                }
            }
            k += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

pub fn is_simple_group(g: &PermGroup) -> bool {
    if g.is_trivial() {
        return false;
    }
    conjugacy_classes(g)
        .iter()
        .skip(1)
        .all(|class| normal_closure(g, &class[..1]).expect("class members lie in g").order() == g.order())
}

/// All normal subgroups of `g`, sorted by order then by elements.
///
/// Every normal subgroup is a join of normal closures of conjugacy classes,
/// so the list is the join-closure of those closures.
pub fn normal_subgroups(g: &PermGroup) -> Vec<PermGroup> {
    let mut found: Vec<PermGroup> = vec![PermGroup::trivial(g.degree)];
    let mut keys: HashSet<Vec<Perm>> = HashSet::from([found[0].elements.clone()]);
    for class in conjugacy_classes(g).iter().skip(1) {
        let n = normal_closure(g, &class[..1]).expect("class members lie in g");
        if keys.insert(n.elements.clone()) {
            found.push(n);
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let join = found[i]
                .extended(&found[j].generators, usize::MAX)
                .expect("joins stay inside g");
            if keys.insert(join.elements.clone()) {
                found.push(join);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    found
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    /// Minimal element of the coset.
    pub rep: Perm,
    pub elements: Vec<Perm>,
}

/// Right cosets `Hg` of `h` in `g`, ordered by representative.
pub fn right_cosets(g: &PermGroup, h: &PermGroup) -> Result<Vec<Coset>> {
    g.require_subgroup(h)?;
    let mut assigned: HashSet<Perm> = HashSet::new();
    let mut cosets = Vec::new();
    for x in &g.elements {
        if assigned.contains(x) {
            continue;
        }
        let mut elements: Vec<Perm> = h.elements.iter().map(|y| y.then(x)).collect();
        elements.sort_unstable();
        assigned.extend(elements.iter().cloned());
        cosets.push(Coset {
            rep: x.clone(),
            elements,
        });
    }
    Ok(cosets)
}

/// Right regular representation of a group given by its Cayley table:
/// element `a` becomes the permutation `x -> x*a`.
pub fn regular_representation(table: &crate::table::Magma) -> Vec<Perm> {
    (0..table.order())
        .map(|a| Perm::from_images_unchecked(table.column(a)))
        .collect()
}
