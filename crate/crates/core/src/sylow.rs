//! Sylow subgroups and the counting statistics built on them.
//!
//! For a p-subgroup `H` and a fixed Sylow p-subgroup `P`:
//! - `λ_G(H)` counts the Sylow p-subgroups containing `H`;
//! - `α_G(H)` counts the `G`-conjugates of `H` inside `P`;
//! - `α_G(x)` counts the `G`-conjugates of the element `x` inside `P`.

use crate::algebra::{normalizer, normalizes};
use crate::error::{GroupError, Result};
use crate::exact::{is_p_power, is_prime, p_part};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::Order;

/// Default work budget (`n_p · |P|`) under which every Sylow subgroup is
/// listed explicitly.
pub const DEFAULT_LISTING_BUDGET: u64 = 4_000_000;

pub fn is_p_element(x: &Permutation, p: u64) -> bool {
    is_p_power(x.order(), p)
}

/// A Sylow p-subgroup, grown from the trivial group: while `|Q|` is short of
/// the p-part, adjoin the first p-element of `N_G(Q) \ Q` in canonical order.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let target = p_part(g.order(), p);
    if target == 1 {
        return Err(GroupError::PrimeDoesNotDivide { p, order: g.order() });
    }
    let mut q = FiniteGroup::trivial(g.degree());
    while q.order() < target {
        let y = g
            .elements()
            .iter()
            .find(|y| !q.contains(y) && is_p_element(y, p) && normalizes(&q, y))
            .ok_or_else(|| GroupError::IdentityViolation(format!("no p-element normalizes {}", q.name())))?;
        let mut gens = q.generators().to_vec();
        gens.push(y.clone());
        q = g.subgroup("P", gens)?;
    }
    Ok(q.with_name(format!("Syl_{}({})", p, g.name())))
}

/// `P^g`, with its elements re-sorted.
pub fn conjugate_subgroup(h: &FiniteGroup, g: &Permutation) -> FiniteGroup {
    let gens = h.generators().iter().map(|x| x.conjugate_by(g)).collect();
    let mut elements: Vec<Permutation> = h.elements().iter().map(|x| x.conjugate_by(g)).collect();
    elements.sort_unstable();
    FiniteGroup::from_parts(h.name(), h.degree(), gens, elements)
}

/// All Sylow p-subgroups as the conjugates of `p_sylow` over a right
/// transversal of its normalizer. The first entry is `p_sylow` itself.
pub fn all_sylows(g: &FiniteGroup, p_sylow: &FiniteGroup) -> Result<Vec<FiniteGroup>> {
    let n = normalizer(g, p_sylow)?;
    Ok(g.right_transversal(&n)
        .iter()
        .map(|t| conjugate_subgroup(p_sylow, t))
        .collect())
}

/// `𝔘_p(G)` by an order scan, as sorted element indices.
pub fn p_elements(g: &FiniteGroup, p: u64) -> Vec<usize> {
    g.elements()
        .iter()
        .enumerate()
        .filter(|(_, x)| is_p_element(x, p))
        .map(|(i, _)| i)
        .collect()
}

/// Per-element statistics of a p-element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PElementStats {
    pub x: Permutation,
    pub lambda: Order,
    pub alpha: Order,
    pub alpha_cyclic: Order,
}

/// A Sylow p-subgroup of `group` together with its normalizer, `n_p`, and
/// (within the listing budget) every Sylow p-subgroup.
#[derive(Debug)]
pub struct SylowData<'a> {
    group: &'a FiniteGroup,
    p: u64,
    sylow: FiniteGroup,
    normalizer: FiniteGroup,
    count: Order,
    all: Option<Vec<FiniteGroup>>,
}

impl<'a> SylowData<'a> {
    pub fn new(group: &'a FiniteGroup, p: u64) -> Result<Self> {
        Self::with_budget(group, p, DEFAULT_LISTING_BUDGET)
    }

    pub fn with_budget(group: &'a FiniteGroup, p: u64, listing_budget: u64) -> Result<Self> {
        let sylow = sylow_subgroup(group, p)?;
        let normalizer = normalizer(group, &sylow)?;
        let count = group.order() / normalizer.order();
        let all = if count.saturating_mul(sylow.order()) <= listing_budget {
            let list = all_sylows(group, &sylow)?;
            debug_assert_eq!(list.len() as u64, count);
            Some(list)
        } else {
            None
        };
        Ok(Self {
            group,
            p,
            sylow,
            normalizer,
            count,
            all,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The representative Sylow subgroup `P`.
    pub fn sylow(&self) -> &FiniteGroup {
        &self.sylow
    }

    pub fn normalizer(&self) -> &FiniteGroup {
        &self.normalizer
    }

    /// `n_p(G)`.
    pub fn count(&self) -> Order {
        self.count
    }

    /// Every Sylow p-subgroup, when listed.
    pub fn all(&self) -> Option<&[FiniteGroup]> {
        self.all.as_deref()
    }

    fn require_p_subgroup(&self, h: &FiniteGroup) -> Result<()> {
        if !self.group.contains_group(h) {
            return Err(GroupError::NotASubgroup(h.name().to_string()));
        }
        if !is_p_power(h.order(), self.p) {
            return Err(GroupError::NotPElement {
                element: h.name().to_string(),
                p: self.p,
            });
        }
        Ok(())
    }

    fn require_p_element(&self, x: &Permutation) -> Result<()> {
        if !self.group.contains(x) {
            return Err(GroupError::NotInGroup(x.to_string()));
        }
        if !is_p_element(x, self.p) {
            return Err(GroupError::NotPElement {
                element: x.to_string(),
                p: self.p,
            });
        }
        Ok(())
    }

    /// `λ_G(x)`.
    pub fn lambda(&self, x: &Permutation) -> Result<Order> {
        self.require_p_element(x)?;
        Ok(self.lambda_of_generators(std::slice::from_ref(x)))
    }

    /// `λ_G(H)`.
    pub fn lambda_subgroup(&self, h: &FiniteGroup) -> Result<Order> {
        self.require_p_subgroup(h)?;
        Ok(self.lambda_of_generators(h.generators()))
    }

    fn lambda_of_generators(&self, gens: &[Permutation]) -> Order {
        match &self.all {
            Some(list) => list.iter().filter(|q| gens.iter().all(|x| q.contains(x))).count() as Order,
            None => self.lambda_by_conjugation(gens),
        }
    }

    /// `λ` counted as `|{g ∈ G : H^{g⁻¹} ≤ P}| / |N_G(P)|`, which avoids
    /// listing the Sylow subgroups.
    fn lambda_by_conjugation(&self, gens: &[Permutation]) -> Order {
        let hits = self
            .group
            .elements()
            .iter()
            .filter(|g| {
                let g_inv = g.inverse();
                gens.iter().all(|x| self.sylow.contains(&x.conjugate_by(&g_inv)))
            })
            .count() as Order;
        debug_assert_eq!(hits % self.normalizer.order(), 0);
        hits / self.normalizer.order()
    }

    /// `α_G(x) = |x^G ∩ P|` for the representative `P`.
    pub fn alpha(&self, x: &Permutation) -> Result<Order> {
        self.alpha_against(x, &self.sylow)
    }

    /// `|x^G ∩ Q|` for an arbitrary Sylow subgroup `Q`.
    pub fn alpha_against(&self, x: &Permutation, q: &FiniteGroup) -> Result<Order> {
        self.require_p_element(x)?;
        let class = self.group.class_of(x)?;
        Ok(class.iter().filter(|&&k| q.contains(&self.group.elements()[k])).count() as Order)
    }

    /// `α_G(H)`: conjugates of `H` over a transversal of `N_G(H)` that lie in `P`.
    pub fn alpha_subgroup(&self, h: &FiniteGroup) -> Result<Order> {
        self.alpha_subgroup_against(h, &self.sylow)
    }

    pub fn alpha_subgroup_against(&self, h: &FiniteGroup, q: &FiniteGroup) -> Result<Order> {
        self.require_p_subgroup(h)?;
        let n = normalizer(self.group, h)?;
        Ok(self
            .group
            .right_transversal(&n)
            .iter()
            .filter(|t| h.generators().iter().all(|x| q.contains(&x.conjugate_by(t))))
            .count() as Order)
    }

    /// `α_G(⟨x⟩)`.
    pub fn alpha_cyclic(&self, x: &Permutation) -> Result<Order> {
        self.require_p_element(x)?;
        let h = self.group.subgroup(format!("<{x}>"), vec![x.clone()])?;
        self.alpha_subgroup(&h)
    }

    pub fn stats(&self, x: &Permutation) -> Result<PElementStats> {
        Ok(PElementStats {
            x: x.clone(),
            lambda: self.lambda(x)?,
            alpha: self.alpha(x)?,
            alpha_cyclic: self.alpha_cyclic(x)?,
        })
    }

    /// `𝔘_p(G)` as the union of the listed Sylow subgroups.
    pub fn p_elements_from_union(&self) -> Option<Vec<usize>> {
        let list = self.all.as_ref()?;
        let mut hit = vec![false; self.group.elements().len()];
        for q in list {
            for x in q.elements() {
                hit[self.group.position(x).expect("subgroup")] = true;
            }
        }
        Some(hit.iter().enumerate().filter(|(_, &h)| h).map(|(i, _)| i).collect())
    }
}
