//! Fully enumerated permutation groups.

use std::collections::VecDeque;
use std::sync::OnceLock;

use rustc_hash::FxHashSet;

use crate::error::{GroupError, Result};
use crate::perm::Permutation;
use crate::Order;

/// Default enumeration cap for [`closure`].
pub const DEFAULT_CAP: usize = 200_000;

/// Breadth-first closure of `generators` under multiplication.
///
/// Returns the generated group sorted in canonical (lexicographic) order.
/// Fails with [`GroupError::CapExceeded`] as soon as more than `cap` elements
/// have been produced.
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let id = Permutation::identity(degree);
    let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
    let mut seen: FxHashSet<Permutation> = FxHashSet::default();
    seen.insert(id.clone());
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in &gens {
            let next = current.mul(g);
            if !seen.contains(&next) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded(cap));
                }
                seen.insert(next.clone());
                elements.push(next);
            }
        }
    }
    elements.sort_unstable();
    Ok(elements)
}

/// Grows the closed set `listed` (the group generated by all but the last
/// of `generators`) to the group generated by all of them, one right coset
/// of the old group at a time.
fn extend_closure(
    listed: &mut Vec<Permutation>,
    seen: &mut FxHashSet<Permutation>,
    generators: &[Permutation],
    cap: usize,
) -> Result<()> {
    let base = listed.clone();
    let mut reps = vec![Permutation::identity(listed[0].degree())];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i].clone();
        i += 1;
        for s in generators {
            let t = r.mul(s);
            if seen.contains(&t) {
                continue;
            }
            if listed.len() + base.len() > cap {
                return Err(GroupError::CapExceeded(cap));
            }
            for k in &base {
                let e = k.mul(&t);
                seen.insert(e.clone());
                listed.push(e);
            }
            reps.push(t);
        }
    }
    Ok(())
}

/// A conjugacy class, stored as sorted indices into the owning group's
/// element list. The representative is the least element of the class.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A permutation group together with its full, canonically sorted element
/// list. Subgroups are represented by the same type.
///
/// Immutable after construction; the conjugacy class cache is filled at most
/// once and is safe to share across threads.
#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    classes: OnceLock<Vec<ConjugacyClass>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            classes: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Enumerates `⟨generators⟩`.
    pub fn generate(name: impl Into<String>, degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let elements = closure(degree, &generators, cap)?;
        Ok(Self {
            name: name.into(),
            degree,
            generators,
            elements,
            classes: OnceLock::new(),
        })
    }

    /// Builds a group from an element set that is claimed to be closed.
    ///
    /// A small generating set is chosen greedily in canonical order and the
    /// closure is compared against the input; a mismatch is reported as
    /// [`GroupError::NotASubgroup`].
    pub fn from_elements(name: impl Into<String>, degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        let name = name.into();
        elements.sort_unstable();
        elements.dedup();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut current: FxHashSet<Permutation> = FxHashSet::default();
        let mut listed = vec![Permutation::identity(degree)];
        current.insert(listed[0].clone());
        for e in &elements {
            if e.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: e.degree(),
                });
            }
            if !current.contains(e) {
                generators.push(e.clone());
                extend_closure(&mut listed, &mut current, &generators, elements.len())
                    .map_err(|_| GroupError::NotASubgroup(name.clone()))?;
            }
        }
        if current.len() != elements.len() {
            return Err(GroupError::NotASubgroup(name));
        }
        Ok(Self {
            name,
            degree,
            generators,
            elements,
            classes: OnceLock::new(),
        })
    }

    /// Trusted constructor for element lists already known to be a sorted,
    /// closed group generated by `generators`.
    pub(crate) fn from_parts(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self {
            name: name.into(),
            degree,
            generators,
            elements,
            classes: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            name: "1".to_string(),
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
            classes: OnceLock::new(),
        }
    }

    /// The subgroup generated by `generators`, which must lie in `self`.
    pub fn subgroup(&self, name: impl Into<String>, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if !self.contains(g) {
                return Err(GroupError::NotInGroup(g.to_string()));
            }
        }
        Self::generate(name, self.degree, generators, self.order() as usize)
    }

    /// The subgroup `{g ∈ self : keep(g)}`; `keep` must select a subgroup.
    pub fn filter_subgroup(&self, name: impl Into<String>, keep: impl Fn(&Permutation) -> bool) -> Result<Self> {
        let elements: Vec<Permutation> = self.elements.iter().filter(|g| keep(g)).cloned().collect();
        Self::from_elements(name, self.degree, elements)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> Order {
        self.elements.len() as Order
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Position of `x` in the canonical element list.
    pub fn position(&self, x: &Permutation) -> Option<usize> {
        if x.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.position(x).is_some()
    }

    /// Whether `other` is contained in `self` (both assumed to be groups).
    pub fn contains_group(&self, other: &FiniteGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Representatives of the right cosets `Hg` of a subgroup `h`, each the
    /// least element of its coset, in canonical order.
    pub fn right_transversal(&self, h: &FiniteGroup) -> Vec<Permutation> {
        let mut marked = vec![false; self.elements.len()];
        let mut reps = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if marked[i] {
                continue;
            }
            for x in &h.elements {
                let k = self.position(&x.mul(g)).expect("subgroup of self");
                marked[k] = true;
            }
            reps.push(g.clone());
        }
        reps
    }

    /// The conjugacy class of `x ∈ self`, as sorted element indices.
    pub fn class_of(&self, x: &Permutation) -> Result<Vec<usize>> {
        let start = self.position(x).ok_or_else(|| GroupError::NotInGroup(x.to_string()))?;
        let mut seen = FxHashSet::default();
        seen.insert(start);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            for g in &self.generators {
                let z = y.conjugate_by(g);
                let k = self.position(&z).expect("group closed under conjugation");
                if seen.insert(k) {
                    queue.push_back(z);
                }
            }
        }
        let mut members: Vec<usize> = seen.into_iter().collect();
        members.sort_unstable();
        Ok(members)
    }

    /// Conjugacy classes ordered by representative (the least member).
    /// Computed once and cached.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| {
            let mut assigned = vec![false; self.elements.len()];
            let mut classes = Vec::new();
            for (i, x) in self.elements.iter().enumerate() {
                if assigned[i] {
                    continue;
                }
                let members = self.class_of(x).expect("element of the group");
                for &k in &members {
                    assigned[k] = true;
                }
                classes.push(ConjugacyClass {
                    representative: x.clone(),
                    members,
                });
            }
            classes
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    /// Conjugacy classes by direct conjugation over every group element.
    fn brute_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let mut seen = FxHashSet::default();
        let mut sizes = Vec::new();
        for x in g.elements() {
            if seen.contains(x) {
                continue;
            }
            let class: FxHashSet<Permutation> = g.elements().iter().map(|h| x.conjugate_by(h)).collect();
            sizes.push(class.len());
            seen.extend(class);
        }
        sizes.sort_unstable();
        sizes
    }

    #[test]
    fn closure_examples() {
        let s3 = closure(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)], 100).unwrap();
        assert_eq!(s3.len(), 6);
        assert!(s3.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(closure(4, &[], 10).unwrap(), vec![Permutation::identity(4)]);
        let d8 = [perm("(1 2 3 4)", 4), perm("(1 3)", 4)];
        assert_eq!(closure(4, &d8, 100).unwrap().len(), 8);
        assert!(matches!(closure(4, &d8, 7), Err(GroupError::CapExceeded(7))));
    }

    #[test]
    fn closure_degree_mismatch() {
        assert!(matches!(
            closure(4, &[perm("(1 2)", 3)], 10),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn class_sizes_match_brute_force() {
        let s3 = FiniteGroup::generate("S3", 3, vec![perm("(1 2)", 3), perm("(1 2 3)", 3)], 100).unwrap();
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(sizes, brute_class_sizes(&s3));

        let a4 = FiniteGroup::generate("A4", 4, vec![perm("(1 2 3)", 4), perm("(2 3 4)", 4)], 100).unwrap();
        let mut sizes: Vec<usize> = a4.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
        assert_eq!(sizes, brute_class_sizes(&a4));

        let c6 = FiniteGroup::generate("C6", 6, vec![perm("(1 2 3 4 5 6)", 6)], 100).unwrap();
        assert!(c6.conjugacy_classes().iter().all(|c| c.size() == 1));
        assert!(c6.is_abelian());
    }

    #[test]
    fn from_elements_rejects_non_subgroup() {
        let bad = vec![Permutation::identity(3), perm("(1 2)", 3), perm("(1 3)", 3)];
        assert!(matches!(
            FiniteGroup::from_elements("bad", 3, bad),
            Err(GroupError::NotASubgroup(_))
        ));
    }

    #[test]
    fn closure_is_deterministic() {
        let gens = vec![perm("(1 2 3 4 5)", 5), perm("(1 2)", 5)];
        let a = closure(5, &gens, 1000).unwrap();
        let b = closure(5, &gens.iter().rev().cloned().collect::<Vec<_>>(), 1000).unwrap();
        assert_eq!(a, b);
    }
}
