//! Checks of the lemmas that relate statistics of `G` to those of a
//! subgroup, a quotient or a coprime action.

use std::collections::BTreeMap;

use crate::algebra::{is_normal, join, normalizes, quotient, Section};
use crate::constructions::DirectPower;
use crate::exact::{fixed_point_product, p_part, power};
use crate::group::FiniteGroup;
use crate::perm::{gcd, Permutation};
use crate::subnormal::{subnormalizer_brute, BruteBudget};
use crate::sylow::{is_p_element, p_elements, SylowData};
use crate::{BigNat, Order};

use super::{CheckReport, Status};

/// Records the outcome of one instance of a "for every x" check.
#[derive(Default)]
struct Tally {
    held: usize,
    tested: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, outcome: crate::Result<Option<String>>) {
        self.tested += 1;
        match outcome {
            Ok(None) => self.held += 1,
            Ok(Some(f)) => {
                self.first_failure.get_or_insert(f);
            }
            Err(e) => {
                self.first_failure.get_or_insert(e.to_string());
            }
        }
    }

    fn report(self, id: &str, group: &str, p: u64, detail: impl Into<String>) -> CheckReport {
        CheckReport::tally(id, group, p, self.held, self.tested, self.first_failure, detail)
    }
}

/// `λ_G(x)·n_p(H) ≤ λ_H(x)·n_p(G)` for every p-element `x ∈ H`, with
/// equality when `H ⊴ G`.
pub fn check_lambda_monotone(g: &FiniteGroup, h: &FiniteGroup, p: u64) -> CheckReport {
    const ID: &str = "lambda-monotone";
    let setup = || -> crate::Result<(SylowData<'_>, SylowData<'_>)> {
        if !g.contains_group(h) {
            return Err(crate::GroupError::NotASubgroup(h.name().to_string()));
        }
        Ok((SylowData::new(g, p)?, SylowData::new(h, p)?))
    };
    let (sg, sh) = match setup() {
        Ok(s) => s,
        Err(e) => return CheckReport::errored(ID, g.name(), p, e),
    };
    let normal = is_normal(g, h);
    let mut tally = Tally::default();
    for i in p_elements(h, p) {
        let x = &h.elements()[i];
        tally.record((|| {
            let lhs = sg.lambda(x)? * sh.count();
            let rhs = sh.lambda(x)? * sg.count();
            let holds = if normal { lhs == rhs } else { lhs <= rhs };
            Ok((!holds).then(|| format!("x = {x}: λ_G·n_p(H) = {lhs}, λ_H·n_p(G) = {rhs}")))
        })());
    }
    let relation = if normal { "equality, H normal" } else { "inequality" };
    tally.report(
        ID,
        g.name(),
        p,
        format!("H = {} of order {}; {relation}", h.name(), h.order()),
    )
}

/// `|S_G(x)| = |{g ∈ N : ⟨x⟩ ⊴⊴ ⟨x, g⟩}|·[G:N]` for every `x ∈ P`, where
/// `G = NP` and `N ⊴ G`.
pub fn check_snx(g: &FiniteGroup, n: &FiniteGroup, p: u64, budget: BruteBudget) -> CheckReport {
    const ID: &str = "snx";
    if !is_normal(g, n) {
        return CheckReport::errored(ID, g.name(), p, format!("{} is not normal", n.name()));
    }
    if g.order() > budget.cyclic {
        return CheckReport::skipped(
            ID,
            g.name(),
            p,
            format!("|G| = {} exceeds brute-force budget", g.order()),
        );
    }
    let sd = match SylowData::new(g, p) {
        Ok(sd) => sd,
        Err(e) => return CheckReport::errored(ID, g.name(), p, e),
    };
    let sylow = sd.sylow();
    let meet = sylow.elements().iter().filter(|x| n.contains(x)).count() as Order;
    if n.order() * sylow.order() / meet != g.order() {
        return CheckReport::errored(ID, g.name(), p, format!("G != NP for N = {}", n.name()));
    }
    let index = g.order() / n.order();
    let mut tally = Tally::default();
    for x in sylow.elements() {
        tally.record((|| {
            let h = g.subgroup(format!("<{x}>"), vec![x.clone()])?;
            let set = subnormalizer_brute(g, &h, budget)?;
            let in_n = set.iter().filter(|&&i| n.contains(&g.elements()[i])).count() as Order;
            let whole = set.len() as Order;
            Ok(
                (whole != in_n * index)
                    .then(|| format!("x = {x}: |S_G(x)| = {whole}, |S_N(x)|·[G:N] = {in_n}·{index}")),
            )
        })());
    }
    tally.report(
        ID,
        g.name(),
        p,
        format!("N = {} of order {}, [G:N] = {index}", n.name(), n.order()),
    )
}

/// `λ_G(x) = λ_{G/N}(xN)·λ_{NP}(x)` for every `x ∈ P`, with `N ⊴ G`.
pub fn check_lambda_multiplicative(g: &FiniteGroup, n: &FiniteGroup, p: u64) -> CheckReport {
    const ID: &str = "lambda-mult";
    let setup = || -> crate::Result<_> {
        let sg = SylowData::new(g, p)?;
        let q = quotient(g, n)?;
        let np = join(g, "NP", &[n, sg.sylow()])?;
        Ok((sg, q, np))
    };
    let (sg, q, np) = match setup() {
        Ok(s) => s,
        Err(e) => return CheckReport::errored(ID, g.name(), p, e),
    };
    let more = || -> crate::Result<_> {
        let s_np = SylowData::new(&np, p)?;
        let s_q = if p_part(q.group().order(), p) > 1 {
            Some(SylowData::new(q.group(), p)?)
        } else {
            None
        };
        Ok((s_np, s_q))
    };
    let (s_np, s_q) = match more() {
        Ok(s) => s,
        Err(e) => return CheckReport::errored(ID, g.name(), p, e),
    };
    let mut tally = Tally::default();
    for x in sg.sylow().elements() {
        tally.record((|| {
            let lg = sg.lambda(x)?;
            let lq = match &s_q {
                Some(sd) => sd.lambda(&q.project(x)?)?,
                None => 1,
            };
            let lnp = s_np.lambda(x)?;
            Ok((lg != lq * lnp).then(|| format!("x = {x}: λ_G = {lg}, λ_(G/N)·λ_NP = {lq}·{lnp}")))
        })());
    }
    tally.report(
        ID,
        g.name(),
        p,
        format!(
            "N = {} of order {}, |G/N| = {}, |NP| = {}",
            n.name(),
            n.order(),
            q.group().order(),
            np.order()
        ),
    )
}

/// The centralizer product formula for a p-group `P` acting by conjugation
/// on the p′-section `U/V`:
/// `|C(P)|^{(p-1)|P|} · Π_{x∈P} |C(x^p)| = Π_{x∈P} |C(x)|^p`.
pub fn check_navarro_rizo(
    group_name: &str,
    p: u64,
    acting: &FiniteGroup,
    upper: &FiniteGroup,
    lower: &FiniteGroup,
) -> CheckReport {
    const ID: &str = "navarro-rizo";
    let section = upper.order() / lower.order();
    if gcd(section, p) != 1 {
        return CheckReport::errored(ID, group_name, p, crate::GroupError::NotCoprime { target: section, p });
    }
    if !acting.elements().iter().all(|x| is_p_element(x, p)) {
        return CheckReport::errored(ID, group_name, p, format!("{} is not a {p}-group", acting.name()));
    }
    if !upper.contains_group(lower)
        || !acting
            .generators()
            .iter()
            .all(|a| normalizes(upper, a) && normalizes(lower, a))
        || !upper.generators().iter().all(|u| normalizes(lower, u))
    {
        return CheckReport::errored(ID, group_name, p, "action on the section is not well defined");
    }
    let sec = Section::new(upper, lower);
    let mut fixed: BTreeMap<&Permutation, Order> = BTreeMap::new();
    for x in acting.elements() {
        fixed.insert(x, sec.fixed_points(std::slice::from_ref(x)));
    }
    let per_element: Vec<(BigNat, BigNat)> = acting
        .elements()
        .iter()
        .map(|x| {
            let xp = x.pow(p);
            (BigNat::from(fixed[x]), BigNat::from(fixed[&xp]))
        })
        .collect();
    let by_group = sec.fixed_points(acting.generators());
    let sides = fixed_point_product(&BigNat::from(by_group), &per_element, p);
    CheckReport::new(
        ID,
        group_name,
        p,
        Status::proven(sides.holds_eq()),
        sides.lhs,
        sides.rhs,
        format!(
            "|P| = {} on a section of order {section}; |C(P)| = {by_group}",
            acting.order()
        ),
    )
}

/// For every `x` of the wreath-like group, the number of Sylow p-subgroups
/// of `M = L^k` normalized by `x` is at most `n_p(L)^s`, where `s` is the
/// number of `⟨x⟩`-orbits on the factors.
pub fn check_num_orb(power_group: &DirectPower, p: u64) -> CheckReport {
    const ID: &str = "num-orb";
    let name = power_group.group.name();
    let setup = || -> crate::Result<_> {
        Ok((
            SylowData::new(&power_group.base, p)?,
            SylowData::new(&power_group.factor, p)?,
        ))
    };
    let (sm, sl) = match setup() {
        Ok(s) => s,
        Err(e) => return CheckReport::errored(ID, name, p, e),
    };
    let Some(list) = sm.all() else {
        return CheckReport::skipped(ID, name, p, "Sylow subgroups of M not listed (budget)");
    };
    let n_l = BigNat::from(sl.count());
    let mut tally = Tally::default();
    let mut tight = 0usize;
    for x in power_group.group.elements() {
        tally.record((|| {
            let s = power_group.factor_orbits(x)?;
            let invariant = list
                .iter()
                .filter(|q| q.generators().iter().all(|y| q.contains(&y.conjugate_by(x))))
                .count() as u64;
            let bound = power(&n_l, s as u64);
            if BigNat::from(invariant) == bound {
                tight += 1;
            }
            Ok((BigNat::from(invariant) > bound)
                .then(|| format!("x = {x}: {invariant} invariant Sylows > n_p(L)^{s} = {bound}")))
        })());
    }
    tally.report(
        ID,
        name,
        p,
        format!(
            "M = {}, n_p(M) = {}, n_p(L) = {}; bound attained by {tight} elements",
            power_group.base.name(),
            sm.count(),
            sl.count()
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::checks::fixtures::SubgroupSpec;
    use crate::constructions::direct_power_with_swap;
    use crate::group::DEFAULT_CAP;

    fn group(name: &str) -> FiniteGroup {
        catalog::get(name).unwrap()
    }

    #[test]
    fn navarro_rizo_hand_value() {
        let s3 = group("S3");
        let p = SubgroupSpec::Generators(&["(1 2)"]).resolve(&s3).unwrap();
        let a3 = SubgroupSpec::Even.resolve(&s3).unwrap();
        let r = check_navarro_rizo("S3", 2, &p, &a3, &FiniteGroup::trivial(3));
        assert_eq!(r.status, Status::Pass);
        assert_eq!((r.lhs, r.rhs), (BigNat::from(9u64), BigNat::from(9u64)));
        // Not coprime: C2 on itself.
        let r = check_navarro_rizo("S3", 2, &p, &p, &FiniteGroup::trivial(3));
        assert!(r.detail.contains("error"));
    }

    #[test]
    fn navarro_rizo_trivial_action() {
        // C2 centralizing C3 inside C6: both sides are 3^{p|P|} = 3^4.
        let c6 = group("C6");
        let x = c6.generators()[0].clone();
        let two = c6.subgroup("C2", vec![x.pow(3)]).unwrap();
        let three = c6.subgroup("C3", vec![x.pow(2)]).unwrap();
        let r = check_navarro_rizo("C6", 2, &two, &three, &FiniteGroup::trivial(6));
        assert_eq!((r.status, r.lhs.clone()), (Status::Pass, BigNat::from(81u64)));
    }

    #[test]
    fn num_orb_swap_example() {
        let w = direct_power_with_swap(&group("S3"), 2, 2, DEFAULT_CAP).unwrap();
        let r = check_num_orb(&w, 3);
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
        assert_eq!(r.rhs, BigNat::from(72u64));
        let swap = w.group.generators().last().unwrap();
        let list = SylowData::new(&w.base, 3).unwrap();
        let invariant = list
            .all()
            .unwrap()
            .iter()
            .filter(|q| q.generators().iter().all(|y| q.contains(&y.conjugate_by(swap))))
            .count();
        // The Sylow 3-subgroup of S3 x S3 is unique.
        assert_eq!(invariant, 1);
        let r = check_num_orb(&w, 2);
        assert_eq!(r.status, Status::Pass);
        // At p = 2 the swap normalizes exactly the three diagonal products Q x Q.
        let list = SylowData::new(&w.base, 2).unwrap();
        let invariant = list
            .all()
            .unwrap()
            .iter()
            .filter(|q| q.generators().iter().all(|y| q.contains(&y.conjugate_by(swap))))
            .count();
        assert_eq!((list.count(), invariant), (9, 3));
    }

    #[test]
    fn monotone_examples() {
        let s4 = group("S4");
        let a4 = SubgroupSpec::Even.resolve(&s4).unwrap();
        let r = check_lambda_monotone(&s4, &a4, 2);
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
        assert!(r.detail.contains("equality"));
        let a5 = group("A5");
        let stab = SubgroupSpec::PointStabilizer(5).resolve(&a5).unwrap();
        let r = check_lambda_monotone(&a5, &stab, 2);
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
        assert!(r.detail.contains("inequality"));
    }

    #[test]
    fn snx_and_lambda_mult_examples() {
        let s3 = group("S3");
        let a3 = SubgroupSpec::Even.resolve(&s3).unwrap();
        let r = check_snx(&s3, &a3, 2, BruteBudget::uniform(5000));
        assert_eq!((r.status, r.rhs.clone()), (Status::Pass, BigNat::from(2u64)));
        let s4 = group("S4");
        let v4 = SubgroupSpec::PCore(2).resolve(&s4).unwrap();
        let r = check_lambda_multiplicative(&s4, &v4, 2);
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
        // G != NP: V4 with the Sylow 3-subgroup of S4.
        let r = check_snx(&s4, &v4, 3, BruteBudget::uniform(5000));
        assert_eq!(r.status, Status::Fail);
    }
}
