//! Checks that run on a single `(G, p)` pair.

use std::collections::HashMap;

use crate::algebra::{centralizer, normalizer, p_core, quotient};
use crate::exact::{amgm_link, exact_quotient, frobenius_bound, lambda_bound, p_part};
use crate::group::FiniteGroup;
use crate::perm::{lcm, Permutation};
use crate::subnormal::{is_cyclic, subnormalizer_brute, subnormalizer_size_a, subnormalizer_size_b, BruteBudget};
use crate::sylow::{is_p_element, SylowData};
use crate::{BigNat, Order};

use super::{Analysis, CheckReport, Status};

/// `|P|` divides `|𝔘_p(G)|`.
pub fn check_frobenius(a: &Analysis<'_>) -> CheckReport {
    let (u, s) = (a.p_element_count(), a.sylow_order());
    let detail = match a.ratio() {
        Some(r) => format!("ratio = {r}"),
        None => format!("{u} is not divisible by {s}"),
    };
    CheckReport::new("frobenius", a.name(), a.p, Status::proven(u % s == 0), u, s, detail)
}

/// The ratio is 1 exactly when `n_p = 1`, and at least `p` otherwise.
pub fn check_miller_gap(a: &Analysis<'_>) -> CheckReport {
    let Some(ratio) = a.ratio() else {
        return CheckReport::errored("miller-gap", a.name(), a.p, "Frobenius ratio is not an integer");
    };
    let n_p = a.n_p();
    let (bound, holds) = if n_p == 1 { (1, ratio == 1) } else { (a.p, ratio >= a.p) };
    CheckReport::new(
        "miller-gap",
        a.name(),
        a.p,
        Status::proven(holds),
        ratio,
        bound,
        format!("n_p = {n_p}; ratio = {ratio}"),
    )
}

/// `n_p ≡ 1 (mod p)`.
pub fn check_sylow_congruence(a: &Analysis<'_>) -> CheckReport {
    let n_p = a.n_p();
    CheckReport::new(
        "sylow-congruence",
        a.name(),
        a.p,
        Status::proven(n_p % a.p == 1 % a.p),
        n_p,
        a.p,
        format!("n_p mod p = {}", n_p % a.p),
    )
}

/// `𝔘_p(G)` by order scan equals the union of the Sylow p-subgroups.
pub fn check_p_elements_union(a: &Analysis<'_>) -> CheckReport {
    match a.sylow.p_elements_from_union() {
        Some(union) => CheckReport::new(
            "p-elements-union",
            a.name(),
            a.p,
            Status::proven(union == a.p_elements()),
            a.p_element_count(),
            union.len() as u64,
            "order scan vs union of Sylow subgroups",
        ),
        None => CheckReport::skipped("p-elements-union", a.name(), a.p, "Sylow subgroups not listed (budget)"),
    }
}

/// For groups of Lie type in defining characteristic the ratio equals `|P|`.
pub fn check_steinberg(a: &Analysis<'_>) -> CheckReport {
    let ratio = a.ratio().unwrap_or(0);
    CheckReport::new(
        "steinberg",
        a.name(),
        a.p,
        Status::proven(ratio == a.sylow_order()),
        ratio,
        a.sylow_order(),
        "Frobenius ratio vs |P| in defining characteristic",
    )
}

/// `|𝔘_p(G)| = Σ_{x ∈ P} |G| / |S_G(x)|` with formula-(a) subnormalizer sizes.
pub fn check_omega_sum(a: &Analysis<'_>) -> CheckReport {
    const ID: &str = "omega-sum";
    let g = a.group;
    let sizes = a.per_class_over_sylow(|x| {
        g.subgroup(format!("<{x}>"), vec![x.clone()])
            .and_then(|h| subnormalizer_size_a(&a.sylow, &h))
            .map_err(|e| e.to_string())
    });
    let sizes = match sizes.into_iter().collect::<Result<Vec<Order>, String>>() {
        Ok(s) => s,
        Err(e) => return CheckReport::errored(ID, a.name(), a.p, e),
    };
    // Summands |G|/|S_G(x)| need not be integers (S_G(x) is not a
    // subgroup), so the sum is taken over the common denominator L.
    let l = sizes.iter().fold(1, |acc, &s| lcm(acc, s));
    let numerator: BigNat = sizes
        .iter()
        .map(|&s| BigNat::from(g.order()) * BigNat::from(l / s))
        .sum();
    let non_integral = sizes.iter().filter(|&&s| g.order() % s != 0).count();
    let u = a.p_element_count();
    let detail = format!("|U_p| vs sum over x in P of |G|/|S_G(x)|; {non_integral} non-integral summands");
    match exact_quotient(&numerator, &BigNat::from(l)) {
        Some(total) => CheckReport::new(
            ID,
            a.name(),
            a.p,
            Status::proven(total == BigNat::from(u)),
            u,
            total,
            detail,
        ),
        None => CheckReport::new(
            ID,
            a.name(),
            a.p,
            Status::Fail,
            BigNat::from(u) * BigNat::from(l),
            numerator,
            format!("{detail}; sum is not an integer (denominator {l})"),
        ),
    }
}

/// Distinct subgroups to test for the subnormalizer identity: every cyclic
/// `⟨x⟩ ≤ P`, then up to `limit` subgroups of order `p²`, then `P`.
pub(crate) fn casolo_subgroups(g: &FiniteGroup, sd: &SylowData<'_>, limit: usize) -> Vec<FiniteGroup> {
    let p = sd.p();
    let sylow = sd.sylow();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for x in sylow.elements() {
        let h = g.subgroup(format!("<{x}>"), vec![x.clone()]).expect("x in G");
        if seen.insert(h.elements().to_vec()) {
            out.push(h);
        }
    }
    if sylow.order() >= p * p {
        let mut sampled = 0;
        'outer: for (i, a) in sylow.elements().iter().enumerate() {
            for b in &sylow.elements()[i..] {
                if sampled >= limit {
                    break 'outer;
                }
                let h = g
                    .subgroup(format!("<{a}, {b}>"), vec![a.clone(), b.clone()])
                    .expect("in G");
                if h.order() == p * p && seen.insert(h.elements().to_vec()) {
                    out.push(h);
                    sampled += 1;
                }
            }
        }
    }
    if seen.insert(sylow.elements().to_vec()) {
        out.push(sylow.clone());
    }
    out
}

/// Brute-force `|S_G(H)|` against `λ_G(H)|N_G(P)|` and `α_G(H)|N_G(H)|`.
/// For `H = P` the brute-force set must equal `N_G(P)` exactly.
pub fn check_casolo_a(a: &Analysis<'_>, budget: BruteBudget) -> CheckReport {
    const ID: &str = "casolo-a";
    let g = a.group;
    if g.order() > budget.cyclic.max(budget.subgroup) {
        return CheckReport::skipped(
            ID,
            a.name(),
            a.p,
            format!("|G| = {} exceeds brute-force budget", g.order()),
        );
    }
    let subgroups = casolo_subgroups(g, &a.sylow, 50);
    // |S_G(H)| is constant on G-classes of subgroups; cyclic H are keyed by
    // the least class index among their generators.
    let mut brute_by_class: HashMap<usize, Order> = HashMap::new();
    let mut brute_runs = 0;
    let mut held = 0;
    let mut tested = 0;
    let mut first_failure = None;
    for h in &subgroups {
        if !budget.allows(g, h) {
            continue;
        }
        tested += 1;
        let outcome = (|| -> crate::Result<Option<String>> {
            let by_lambda = a.sylow.lambda_subgroup(h)? * a.sylow.normalizer().order();
            let by_alpha = a.sylow.alpha_subgroup(h)? * normalizer(g, h)?.order();
            let class_key = is_cyclic(h)
                .then(|| {
                    h.elements()
                        .iter()
                        .filter(|y| y.order() == h.order())
                        .filter_map(|y| a.class_id(y))
                        .min()
                })
                .flatten();
            let cached = class_key.and_then(|k| brute_by_class.get(&k).copied());
            let (b, brute) = match cached {
                Some(b) => (b, None),
                None => {
                    brute_runs += 1;
                    let brute = subnormalizer_brute(g, h, budget)?;
                    let b = brute.len() as Order;
                    if let Some(k) = class_key {
                        brute_by_class.insert(k, b);
                    }
                    (b, Some(brute))
                }
            };
            if b != by_lambda || by_lambda != by_alpha {
                return Ok(Some(format!(
                    "H = {}: brute {b}, λ·|N(P)| {by_lambda}, α·|N(H)| {by_alpha}",
                    h.name()
                )));
            }
            if let (true, Some(brute)) = (h.order() == a.sylow_order(), &brute) {
                let set: Vec<&Permutation> = brute.iter().map(|&i| &g.elements()[i]).collect();
                let norm: Vec<&Permutation> = a.sylow.normalizer().elements().iter().collect();
                if set != norm {
                    return Ok(Some("S_G(P) differs from N_G(P) as a set".to_string()));
                }
            }
            Ok(None)
        })();
        match outcome {
            Ok(None) => held += 1,
            Ok(Some(f)) => {
                first_failure.get_or_insert(f);
            }
            Err(e) => {
                first_failure.get_or_insert(format!("H = {}: {e}", h.name()));
            }
        }
    }
    CheckReport::tally(
        ID,
        a.name(),
        a.p,
        held,
        tested,
        first_failure,
        format!("{tested} p-subgroups (cyclic, order p^2 sample, P); {brute_runs} brute-force runs"),
    )
}

/// Formula (b) against formula (a) on a representative of every conjugacy
/// class of p-elements.
pub fn check_casolo_b(a: &Analysis<'_>) -> CheckReport {
    const ID: &str = "casolo-b";
    let series = match a.series() {
        Ok(s) => s,
        Err(e) => return CheckReport::errored(ID, a.name(), a.p, e),
    };
    if !series.p_solvable {
        return CheckReport::skipped(ID, a.name(), a.p, "not p-solvable");
    }
    let g = a.group;
    let mut held = 0;
    let mut tested = 0;
    let mut covered: Order = 0;
    let mut first_failure = None;
    for class in g.conjugacy_classes() {
        let x = &class.representative;
        if !is_p_element(x, a.p) {
            continue;
        }
        tested += 1;
        covered += class.size() as Order;
        let outcome = (|| -> crate::Result<(Order, Order)> {
            let h = g.subgroup(format!("<{x}>"), vec![x.clone()])?;
            Ok((
                subnormalizer_size_a(&a.sylow, &h)?,
                subnormalizer_size_b(g, series, &h)?,
            ))
        })();
        match outcome {
            Ok((sa, sb)) if sa == sb => held += 1,
            Ok((sa, sb)) => {
                first_failure.get_or_insert(format!("x = {x}: formula a {sa}, formula b {sb}"));
            }
            Err(e) => {
                first_failure.get_or_insert(format!("x = {x}: {e}"));
            }
        }
    }
    let factors: Vec<String> = series
        .p_prime_factors()
        .map(|(u, v)| (u.order() / v.order()).to_string())
        .collect();
    CheckReport::tally(
        ID,
        a.name(),
        a.p,
        held,
        tested,
        first_failure,
        format!(
            "{tested} classes covering {covered} p-elements; p'-factor orders [{}]",
            factors.join(", ")
        ),
    )
}

/// `α_G(x) = α_G(⟨x⟩)·|N_G(⟨x⟩)| / |C_G(x)|` for every `x ∈ P`, with the
/// division checked to be exact.
pub fn check_alpha_formula(a: &Analysis<'_>) -> CheckReport {
    const ID: &str = "alpha-formula";
    let g = a.group;
    let outcomes = a.per_class_over_sylow(|x| {
        (|| -> crate::Result<Option<String>> {
            let alpha = a.sylow.alpha(x)?;
            let h = g.subgroup(format!("<{x}>"), vec![x.clone()])?;
            let alpha_cyclic = a.sylow.alpha_subgroup(&h)?;
            let n = normalizer(g, &h)?.order();
            let c = centralizer(g, x)?.order();
            Ok(match exact_quotient(&(alpha_cyclic * n), &c) {
                Some(q) if q == alpha => None,
                Some(q) => Some(format!("x = {x}: α = {alpha}, α(<x>)|N|/|C| = {q}")),
                None => Some(format!("x = {x}: |C_G(x)| = {c} does not divide {}", alpha_cyclic * n)),
            })
        })()
        .map_err(|e| e.to_string())
    });
    tally_outcomes(ID, a, outcomes, "x in P, evaluated once per class of G")
}

fn tally_outcomes(
    id: &str,
    a: &Analysis<'_>,
    outcomes: Vec<Result<Option<String>, String>>,
    detail: &str,
) -> CheckReport {
    let tested = outcomes.len();
    let mut held = 0;
    let mut first_failure = None;
    for o in outcomes {
        match o {
            Ok(None) => held += 1,
            Ok(Some(f)) | Err(f) => {
                first_failure.get_or_insert(f);
            }
        }
    }
    CheckReport::tally(id, a.name(), a.p, held, tested, first_failure, detail)
}

/// `α_G(x)` and `α_G(⟨x⟩)` do not depend on the chosen Sylow subgroup:
/// recomputed against the last listed Sylow subgroup.
pub fn check_alpha_independence(a: &Analysis<'_>) -> CheckReport {
    const ID: &str = "alpha-independence";
    let Some(list) = a.sylow.all() else {
        return CheckReport::skipped(ID, a.name(), a.p, "Sylow subgroups not listed (budget)");
    };
    if list.len() < 2 {
        return CheckReport::skipped(ID, a.name(), a.p, "unique Sylow subgroup");
    }
    let other = list.last().expect("non-empty");
    let g = a.group;
    let p_rep = a.sylow.sylow();
    let outcomes = a.per_class_over_sylow(|x| {
        (|| -> crate::Result<Option<String>> {
            let h = g.subgroup(format!("<{x}>"), vec![x.clone()])?;
            let (a1, a2) = (a.sylow.alpha_against(x, p_rep)?, a.sylow.alpha_against(x, other)?);
            let (c1, c2) = (
                a.sylow.alpha_subgroup_against(&h, p_rep)?,
                a.sylow.alpha_subgroup_against(&h, other)?,
            );
            Ok((a1 != a2 || c1 != c2).then(|| format!("x = {x}: α {a1} vs {a2}, α(<x>) {c1} vs {c2}")))
        })()
        .map_err(|e| e.to_string())
    });
    tally_outcomes(ID, a, outcomes, "against two Sylow subgroups, once per class of G")
}

/// `(|𝔘_p|/|P|)^p ≥ n_p^{p-1}`. Proven for p-solvable `G`; report-only
/// otherwise.
pub fn check_conjecture_ratio(a: &Analysis<'_>) -> CheckReport {
    const ID: &str = "conjecture-ratio";
    let Some(ratio) = a.ratio() else {
        return CheckReport::errored(ID, a.name(), a.p, "Frobenius ratio is not an integer");
    };
    let sides = frobenius_bound(&BigNat::from(ratio), &BigNat::from(a.n_p()), a.p);
    let status = Status::conjectural(sides.holds_ge(), a.is_p_solvable());
    CheckReport::new(
        ID,
        a.name(),
        a.p,
        status,
        sides.lhs,
        sides.rhs,
        format!("ratio^p >= n_p^(p-1); ratio = {ratio}, n_p = {}", a.n_p()),
    )
}

/// `(Π_{x∈P} λ_G(x))^p ≤ n_p^{|P|}`. Proven for p-solvable `G`;
/// report-only otherwise.
pub fn check_conjecture_lambda(a: &Analysis<'_>) -> CheckReport {
    const ID: &str = "conjecture-lambda";
    let lambdas: Vec<BigNat> = a.lambdas().iter().map(|&l| BigNat::from(l)).collect();
    let sides = lambda_bound(&lambdas, &BigNat::from(a.n_p()), a.p);
    let status = Status::conjectural(sides.holds_le(), a.is_p_solvable());
    let equality = if sides.holds_eq() { " (equality)" } else { "" };
    CheckReport::new(
        ID,
        a.name(),
        a.p,
        status,
        sides.lhs,
        sides.rhs,
        format!("(prod lambda)^p <= n_p^|P|{equality}"),
    )
}

/// `ratio^{|P|} · Π λ_G(x) ≥ n_p^{|P|}`: the arithmetic–geometric mean step,
/// valid for every finite group.
pub fn check_amgm_chain(a: &Analysis<'_>) -> CheckReport {
    const ID: &str = "amgm-chain";
    let Some(ratio) = a.ratio() else {
        return CheckReport::errored(ID, a.name(), a.p, "Frobenius ratio is not an integer");
    };
    let lambdas: Vec<BigNat> = a.lambdas().iter().map(|&l| BigNat::from(l)).collect();
    let sides = amgm_link(&BigNat::from(ratio), &lambdas, &BigNat::from(a.n_p()));
    CheckReport::new(
        ID,
        a.name(),
        a.p,
        Status::proven(sides.holds_ge()),
        sides.lhs,
        sides.rhs,
        "ratio^|P| * prod lambda >= n_p^|P|",
    )
}

/// `λ_G(x) = λ_{G/N}(xN)` for `N = O_p(G)` and every p-element `x`.
pub fn check_op_quotient_invariance(a: &Analysis<'_>, max_index: Order) -> CheckReport {
    const ID: &str = "op-invariance";
    let g = a.group;
    let core = match p_core(g, a.p) {
        Ok(c) => c,
        Err(e) => return CheckReport::errored(ID, a.name(), a.p, e),
    };
    if core.is_trivial() {
        return CheckReport::skipped(ID, a.name(), a.p, format!("O_{}(G) is trivial", a.p));
    }
    let index = g.order() / core.order();
    if index > max_index {
        return CheckReport::skipped(
            ID,
            a.name(),
            a.p,
            format!("index {index} of O_p(G) exceeds {max_index}"),
        );
    }
    let q = match quotient(g, &core) {
        Ok(q) => q,
        Err(e) => return CheckReport::errored(ID, a.name(), a.p, e),
    };
    let q_sylow = if p_part(q.group().order(), a.p) > 1 {
        match SylowData::new(q.group(), a.p) {
            Ok(sd) => Some(sd),
            Err(e) => return CheckReport::errored(ID, a.name(), a.p, e),
        }
    } else {
        None
    };
    let mut held = 0;
    let mut first_failure = None;
    for &i in a.p_elements() {
        let x = &g.elements()[i];
        let outcome = (|| -> crate::Result<(Order, Order)> {
            let lg = a.sylow.lambda(x)?;
            let lq = match &q_sylow {
                Some(sd) => sd.lambda(&q.project(x)?)?,
                None => 1,
            };
            Ok((lg, lq))
        })();
        match outcome {
            Ok((lg, lq)) if lg == lq => held += 1,
            Ok((lg, lq)) => {
                first_failure.get_or_insert(format!("x = {x}: λ_G = {lg}, λ_(G/N) = {lq}"));
            }
            Err(e) => {
                first_failure.get_or_insert(e.to_string());
            }
        }
    }
    CheckReport::tally(
        ID,
        a.name(),
        a.p,
        held,
        a.p_elements().len(),
        first_failure,
        format!("|O_p(G)| = {}, quotient order {}", core.order(), q.group().order()),
    )
}
