//! Wielandt subnormalizers `S_G(H) = {g ∈ G : H ⊴⊴ ⟨H, g⟩}`.
//!
//! The brute-force path evaluates the definition for every `g`. The two
//! formula paths give the size alone:
//! - (a) `|S_G(H)| = λ_G(H)·|N_G(P)| = α_G(H)·|N_G(H)|`;
//! - (b) for p-solvable `G`, `|S_G(H)| = |P| · Π |C_{U/V}(HV/V)|` over the
//!   p′-factors `U/V` of a normal `{p, p′}`-series.

use std::sync::Mutex;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::algebra::{factor_fixed_points, normal_closure_elements, normalizer, PSeries};
use crate::error::{GroupError, Result};
use crate::exact::{is_p_power, p_part};
use crate::group::{closure, FiniteGroup};
use crate::perm::Permutation;
use crate::sylow::SylowData;
use crate::Order;

/// Largest group orders for which the brute-force subnormalizer runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteBudget {
    /// Non-cyclic `H`.
    pub subgroup: Order,
    /// Cyclic `H`.
    pub cyclic: Order,
}

impl Default for BruteBudget {
    fn default() -> Self {
        Self {
            subgroup: 5_000,
            cyclic: 20_000,
        }
    }
}

impl BruteBudget {
    pub fn uniform(limit: Order) -> Self {
        Self {
            subgroup: limit,
            cyclic: limit,
        }
    }

    pub fn allows(&self, g: &FiniteGroup, h: &FiniteGroup) -> bool {
        let limit = if is_cyclic(h) { self.cyclic } else { self.subgroup };
        g.order() <= limit
    }
}

pub fn is_cyclic(h: &FiniteGroup) -> bool {
    let n = h.order();
    h.elements().iter().any(|x| x.order() == n)
}

/// Whether `H ⊴⊴ K`, decided by the descent `K_{i+1} = ncl_{K_i}(H)`.
pub fn is_subnormal(h: &FiniteGroup, k: &FiniteGroup) -> Result<bool> {
    if !k.contains_group(h) {
        return Err(GroupError::NotASubgroup(h.name().to_string()));
    }
    descend(h, k.generators().to_vec(), k.order())
}

fn descend(h: &FiniteGroup, mut gens: Vec<Permutation>, mut order: Order) -> Result<bool> {
    loop {
        if order == h.order() {
            return Ok(true);
        }
        let (next_gens, next) = normal_closure_elements(h.degree(), &gens, h.generators(), order as usize)?;
        if next.len() as Order == order {
            return Ok(false);
        }
        gens = next_gens;
        order = next.len() as Order;
    }
}

/// `S_G(H)` by definition, as sorted indices into `g.elements()`.
///
/// Elements of one double coset `HgH` generate the same `⟨H, g⟩`, so the
/// test runs once per double coset; outcomes are also cached by the
/// generated subgroup. The result is a set and is not closed up.
pub fn subnormalizer_brute(g: &FiniteGroup, h: &FiniteGroup, budget: BruteBudget) -> Result<Vec<usize>> {
    if !g.contains_group(h) {
        return Err(GroupError::NotASubgroup(h.name().to_string()));
    }
    if !budget.allows(g, h) {
        let limit = if is_cyclic(h) { budget.cyclic } else { budget.subgroup };
        return Err(GroupError::BudgetExceeded {
            order: g.order(),
            budget: limit,
        });
    }

    let mut marked = vec![false; g.elements().len()];
    let mut double_cosets: Vec<Vec<usize>> = Vec::new();
    for (i, x) in g.elements().iter().enumerate() {
        if marked[i] {
            continue;
        }
        let mut members = Vec::new();
        for a in h.elements() {
            let ax = a.mul(x);
            for b in h.elements() {
                let k = g.position(&ax.mul(b)).expect("group closed");
                if !marked[k] {
                    marked[k] = true;
                    members.push(k);
                }
            }
        }
        double_cosets.push(members);
    }

    let cache: Mutex<FxHashMap<Vec<Permutation>, bool>> = Mutex::new(FxHashMap::default());
    let verdicts = double_cosets
        .par_iter()
        .map(|members| {
            let rep = &g.elements()[members[0]];
            let mut gens = h.generators().to_vec();
            gens.push(rep.clone());
            let k = closure(g.degree(), &gens, g.order() as usize)?;
            if let Some(&v) = cache.lock().unwrap().get(&k) {
                return Ok(v);
            }
            let verdict = descend(h, gens, k.len() as Order)?;
            cache.lock().unwrap().insert(k, verdict);
            Ok(verdict)
        })
        .collect::<Result<Vec<bool>>>()?;

    let mut out: Vec<usize> = double_cosets
        .iter()
        .zip(verdicts)
        .filter(|(_, v)| *v)
        .flat_map(|(m, _)| m.iter().copied())
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Formula (a): returns `λ_G(H)·|N_G(P)|` after checking it against
/// `α_G(H)·|N_G(H)|`. A mismatch is an [`GroupError::IdentityViolation`].
pub fn subnormalizer_size_a(sd: &SylowData<'_>, h: &FiniteGroup) -> Result<Order> {
    let by_lambda = sd.lambda_subgroup(h)? * sd.normalizer().order();
    let by_alpha = sd.alpha_subgroup(h)? * normalizer(sd.group(), h)?.order();
    if by_lambda != by_alpha {
        return Err(GroupError::IdentityViolation(format!(
            "|S_G(H)| routes disagree for H = {} in {}: λ·|N_G(P)| = {by_lambda}, α·|N_G(H)| = {by_alpha}",
            h.name(),
            sd.group().name()
        )));
    }
    Ok(by_lambda)
}

/// Formula (b) for p-solvable groups.
pub fn subnormalizer_size_b(g: &FiniteGroup, series: &PSeries, h: &FiniteGroup) -> Result<Order> {
    if !series.p_solvable {
        return Err(GroupError::NotPSolvable(series.p));
    }
    if !g.contains_group(h) {
        return Err(GroupError::NotASubgroup(h.name().to_string()));
    }
    if !is_p_power(h.order(), series.p) {
        return Err(GroupError::NotPElement {
            element: h.name().to_string(),
            p: series.p,
        });
    }
    let fixed: Order = series
        .p_prime_factors()
        .map(|(u, v)| factor_fixed_points(u, v, h.generators()))
        .product();
    Ok(p_part(g.order(), series.p) * fixed)
}

/// Subnormalizer sizes along every available route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubnormalizerResult {
    pub brute: Option<Order>,
    pub formula_a: Order,
    pub formula_b: Option<Order>,
}

impl SubnormalizerResult {
    pub fn agrees(&self) -> bool {
        self.brute.map_or(true, |b| b == self.formula_a) && self.formula_b.map_or(true, |b| b == self.formula_a)
    }
}

pub fn subnormalizer_sizes(
    sd: &SylowData<'_>,
    series: Option<&PSeries>,
    h: &FiniteGroup,
    budget: Option<BruteBudget>,
) -> Result<SubnormalizerResult> {
    let g = sd.group();
    let brute = match budget {
        Some(b) if b.allows(g, h) => Some(subnormalizer_brute(g, h, b)?.len() as Order),
        _ => None,
    };
    let formula_a = subnormalizer_size_a(sd, h)?;
    let formula_b = match series {
        Some(s) if s.p_solvable => Some(subnormalizer_size_b(g, s, h)?),
        _ => None,
    };
    Ok(SubnormalizerResult {
        brute,
        formula_a,
        formula_b,
    })
}
