//! Subgroup-level operations: centralizers, normalizers, normal closures,
//! quotients, the p- and p′-cores and the upper p-series.

use rustc_hash::FxHashSet;

use crate::error::{GroupError, Result};
use crate::exact::{is_prime, p_part};
use crate::group::{closure, FiniteGroup};
use crate::perm::Permutation;
use crate::sylow::sylow_subgroup;
use crate::Order;

pub fn centralizer(g: &FiniteGroup, x: &Permutation) -> Result<FiniteGroup> {
    if !g.contains(x) {
        return Err(GroupError::NotInGroup(x.to_string()));
    }
    g.filter_subgroup(format!("C_{}({})", g.name(), x), |y| y.commutes_with(x))
}

/// Whether `g⁻¹ H g = H`. Only the generators of `h` are conjugated.
pub fn normalizes(h: &FiniteGroup, g: &Permutation) -> bool {
    h.generators().iter().all(|x| h.contains(&x.conjugate_by(g)))
}

pub fn normalizer(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    if !g.contains_group(h) {
        return Err(GroupError::NotASubgroup(h.name().to_string()));
    }
    g.filter_subgroup(format!("N_{}({})", g.name(), h.name()), |y| normalizes(h, y))
}

/// Whether `h` is normalized by every generator of `k`.
pub fn is_normal(k: &FiniteGroup, h: &FiniteGroup) -> bool {
    k.contains_group(h) && k.generators().iter().all(|g| normalizes(h, g))
}

/// Smallest normal subgroup of `k` containing `h`.
pub fn normal_closure(k: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    if !k.contains_group(h) {
        return Err(GroupError::NotASubgroup(h.name().to_string()));
    }
    let (gens, elements) = normal_closure_elements(k.degree(), k.generators(), h.generators(), k.order() as usize)?;
    Ok(FiniteGroup::from_parts(
        format!("ncl_{}({})", k.name(), h.name()),
        k.degree(),
        gens,
        elements,
    ))
}

/// Generators and sorted element set of the normal closure of `⟨seeds⟩`
/// under conjugation by `⟨conjugators⟩`.
pub(crate) fn normal_closure_elements(
    degree: usize,
    conjugators: &[Permutation],
    seeds: &[Permutation],
    cap: usize,
) -> Result<(Vec<Permutation>, Vec<Permutation>)> {
    let mut gens: Vec<Permutation> = seeds.to_vec();
    let mut elements = closure(degree, &gens, cap)?;
    let mut set: FxHashSet<Permutation> = elements.iter().cloned().collect();
    let mut i = 0;
    while i < gens.len() {
        let c = gens[i].clone();
        for k in conjugators {
            let conj = c.conjugate_by(k);
            if !set.contains(&conj) {
                gens.push(conj);
                elements = closure(degree, &gens, cap)?;
                set = elements.iter().cloned().collect();
            }
        }
        i += 1;
    }
    Ok((gens, elements))
}

/// The subgroup generated by the union of `parts`.
pub fn join(g: &FiniteGroup, name: impl Into<String>, parts: &[&FiniteGroup]) -> Result<FiniteGroup> {
    let gens: Vec<Permutation> = parts.iter().flat_map(|h| h.generators().iter().cloned()).collect();
    g.subgroup(name, gens)
}

/// `G/N` realized as the permutation action of `G` on the right cosets of `N`.
#[derive(Debug)]
pub struct QuotientGroup<'a> {
    parent: &'a FiniteGroup,
    kernel: FiniteGroup,
    representatives: Vec<Permutation>,
    coset_of: Vec<usize>,
    group: FiniteGroup,
}

impl<'a> QuotientGroup<'a> {
    pub fn parent(&self) -> &FiniteGroup {
        self.parent
    }

    pub fn kernel(&self) -> &FiniteGroup {
        &self.kernel
    }

    /// Coset representatives, each the least element of its coset.
    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    /// The quotient as a permutation group of degree `[G:N]`.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Index of the coset `Nx`.
    pub fn coset_index(&self, x: &Permutation) -> Result<usize> {
        self.parent
            .position(x)
            .map(|i| self.coset_of[i])
            .ok_or_else(|| GroupError::NotInGroup(x.to_string()))
    }

    /// Image of `x` in the quotient: the permutation `Nr ↦ Nrx` on cosets.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        if !self.parent.contains(x) {
            return Err(GroupError::NotInGroup(x.to_string()));
        }
        let images: Vec<usize> = self
            .representatives
            .iter()
            .map(|r| {
                let k = self.parent.position(&r.mul(x)).expect("group closed");
                self.coset_of[k]
            })
            .collect();
        Permutation::from_images(&images)
    }
}

/// Builds `G/N`. Fails with [`GroupError::NotNormal`] naming a generator of
/// `G` that moves `N`.
pub fn quotient<'a>(g: &'a FiniteGroup, n: &FiniteGroup) -> Result<QuotientGroup<'a>> {
    if !g.contains_group(n) {
        return Err(GroupError::NotASubgroup(n.name().to_string()));
    }
    if let Some(bad) = g.generators().iter().find(|x| !normalizes(n, x)) {
        return Err(GroupError::NotNormal {
            conjugator: bad.to_string(),
        });
    }
    const UNSET: usize = usize::MAX;
    let mut coset_of = vec![UNSET; g.elements().len()];
    let mut representatives = Vec::new();
    for (i, x) in g.elements().iter().enumerate() {
        if coset_of[i] != UNSET {
            continue;
        }
        let c = representatives.len();
        for m in n.elements() {
            let k = g.position(&m.mul(x)).expect("group closed");
            coset_of[k] = c;
        }
        representatives.push(x.clone());
    }
    let mut q = QuotientGroup {
        parent: g,
        kernel: n.clone(),
        representatives,
        coset_of,
        group: FiniteGroup::trivial(1),
    };
    let degree = q.representatives.len();
    let gens = g
        .generators()
        .iter()
        .map(|x| q.project(x))
        .collect::<Result<Vec<_>>>()?;
    let image = FiniteGroup::generate(format!("{}/{}", g.name(), n.name()), degree, gens, degree)?;
    if image.order() as usize != degree {
        return Err(GroupError::IdentityViolation(format!(
            "coset action of {} has order {}, expected index {}",
            g.name(),
            image.order(),
            degree
        )));
    }
    q.group = image;
    Ok(q)
}

/// `O_p(G)`: the elements of a Sylow p-subgroup whose whole conjugacy class
/// stays inside it, i.e. the intersection of all Sylow p-subgroups.
pub fn p_core(g: &FiniteGroup, p: u64) -> Result<FiniteGroup> {
    relative_p_core(g, &FiniteGroup::trivial(g.degree()), p).map(|h| h.with_name(format!("O_{}({})", p, g.name())))
}

/// `O_{p′}(G)`: the largest normal subgroup of order coprime to `p`.
pub fn p_prime_core(g: &FiniteGroup, p: u64) -> Result<FiniteGroup> {
    relative_p_prime_core(g, &FiniteGroup::trivial(g.degree()), p)
        .map(|h| h.with_name(format!("O_{}'({})", p, g.name())))
}

/// Preimage in `G` of `O_p(G/V)` for `V ⊴ G`, computed without building the
/// quotient: it is the core in `G` of `PV`.
pub fn relative_p_core(g: &FiniteGroup, v: &FiniteGroup, p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p_part(g.order() / v.order(), p) == 1 {
        return Ok(v.clone());
    }
    let sylow = sylow_subgroup(g, p)?;
    let pv = join(g, "PV", &[&sylow, v])?;
    let mut keep = Vec::new();
    for class in g.conjugacy_classes() {
        if class.members.iter().all(|&k| pv.contains(&g.elements()[k])) {
            keep.extend(class.members.iter().map(|&k| g.elements()[k].clone()));
        }
    }
    FiniteGroup::from_elements(format!("O_{}rel", p), g.degree(), keep)
}

/// Preimage in `G` of `O_{p′}(G/V)` for `V ⊴ G`: the join of the normal
/// closures `ncl_G(⟨x, V⟩)` over class representatives `x` whose image has
/// p′-order and whose closure is a p′-group modulo `V`.
pub fn relative_p_prime_core(g: &FiniteGroup, v: &FiniteGroup, p: u64) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let mut core = v.clone();
    for class in g.conjugacy_classes() {
        let x = &class.representative;
        if core.contains(x) {
            continue;
        }
        if order_modulo(x, v) % p == 0 {
            continue;
        }
        let mut seeds = v.generators().to_vec();
        seeds.push(x.clone());
        let (_, ncl) = normal_closure_elements(g.degree(), g.generators(), &seeds, g.order() as usize)?;
        let index = ncl.len() as Order / v.order();
        if index % p != 0 {
            let mut gens = core.generators().to_vec();
            gens.push(x.clone());
            let (gens, grown) = normal_closure_elements(g.degree(), g.generators(), &gens, g.order() as usize)?;
            core = FiniteGroup::from_parts("O_p'rel", g.degree(), gens, grown);
        }
    }
    debug_assert!((core.order() / v.order()) % p != 0);
    Ok(core)
}

/// Least `k ≥ 1` with `x^k ∈ V`.
fn order_modulo(x: &Permutation, v: &FiniteGroup) -> u64 {
    let mut y = x.clone();
    let mut k = 1;
    while !v.contains(&y) {
        y = y.mul(x);
        k += 1;
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    PPrime,
    P,
}

/// The upper p-series `1 = V_0 < V_1 < … ` with factors alternating
/// between p′-groups and p-groups. Trivial steps are omitted.
#[derive(Clone, Debug)]
pub struct PSeries {
    pub p: u64,
    pub terms: Vec<FiniteGroup>,
    /// `kinds[i]` describes `terms[i + 1] / terms[i]`.
    pub kinds: Vec<FactorKind>,
    /// Whether the series reaches the whole group.
    pub p_solvable: bool,
}

impl PSeries {
    /// The p′-factors `U/V` as `(U, V)` pairs.
    pub fn p_prime_factors(&self) -> impl Iterator<Item = (&FiniteGroup, &FiniteGroup)> {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == FactorKind::PPrime)
            .map(move |(i, _)| (&self.terms[i + 1], &self.terms[i]))
    }

    pub fn factor_orders(&self) -> Vec<Order> {
        self.terms.windows(2).map(|w| w[1].order() / w[0].order()).collect()
    }
}

pub fn upper_p_series(g: &FiniteGroup, p: u64) -> Result<PSeries> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let mut terms = vec![FiniteGroup::trivial(g.degree())];
    let mut kinds = Vec::new();
    let mut phase = FactorKind::PPrime;
    let mut stalled = 0;
    while terms.last().unwrap().order() < g.order() && stalled < 2 {
        let v = terms.last().unwrap();
        let u = match phase {
            FactorKind::PPrime => relative_p_prime_core(g, v, p)?,
            FactorKind::P => relative_p_core(g, v, p)?,
        };
        if u.order() > v.order() {
            terms.push(u);
            kinds.push(phase);
            stalled = 0;
        } else {
            stalled += 1;
        }
        phase = match phase {
            FactorKind::PPrime => FactorKind::P,
            FactorKind::P => FactorKind::PPrime,
        };
    }
    let p_solvable = terms.last().unwrap().order() == g.order();
    Ok(PSeries {
        p,
        terms,
        kinds,
        p_solvable,
    })
}

/// A section `U/V` with `V ⊴ U`, held as a right transversal of `V` in `U`.
#[derive(Clone, Debug)]
pub struct Section<'a> {
    lower: &'a FiniteGroup,
    reps: Vec<Permutation>,
}

impl<'a> Section<'a> {
    pub fn new(upper: &'a FiniteGroup, lower: &'a FiniteGroup) -> Self {
        Self {
            lower,
            reps: upper.right_transversal(lower),
        }
    }

    pub fn order(&self) -> Order {
        self.reps.len() as Order
    }

    /// `|C_{U/V}(⟨acting⟩V/V)|`: cosets `uV` fixed under conjugation by
    /// every element of `acting`, which must normalize `U` and `V`. Whether
    /// `u⁻¹u^a ∈ V` depends only on the coset, so one representative each
    /// suffices.
    pub fn fixed_points(&self, acting: &[Permutation]) -> Order {
        self.reps
            .iter()
            .filter(|u| {
                let u_inv = u.inverse();
                acting
                    .iter()
                    .all(|a| self.lower.contains(&u_inv.mul(&u.conjugate_by(a))))
            })
            .count() as Order
    }
}

/// `|C_{U/V}(⟨acting⟩V/V)|` for a single use; see [`Section::fixed_points`].
pub fn factor_fixed_points(upper: &FiniteGroup, lower: &FiniteGroup, acting: &[Permutation]) -> Order {
    Section::new(upper, lower).fixed_points(acting)
}
