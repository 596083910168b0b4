//! Suite registry and the parallel runner.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::catalog;
use crate::constructions::{direct_power_with_swap, GnParams};
use crate::error::{GroupError, Result};
use crate::exact::prime_divisors;
use crate::group::{FiniteGroup, DEFAULT_CAP};
use crate::subnormal::BruteBudget;
use crate::Order;

use super::fixtures::{
    lambda_mult_fixtures, monotone_fixtures, navarro_rizo_fixtures, num_orb_fixtures, snx_fixtures, steinberg_fixtures,
};
use super::gn::{check_gn_closed_forms, DEFAULT_GN_PARAMS};
use super::lemmas::{check_lambda_monotone, check_lambda_multiplicative, check_navarro_rizo, check_num_orb, check_snx};
use super::per_group::*;
use super::{Analysis, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    All,
    Frobenius,
    OmegaSum,
    CasoloA,
    CasoloB,
    NavarroRizo,
    Alpha,
    Monotone,
    Snx,
    LambdaMult,
    NumOrb,
    Conjectures,
    GnForms,
    OpInvariance,
}

impl Suite {
    /// Every concrete suite, in run order.
    pub const EACH: [Suite; 13] = [
        Suite::Frobenius,
        Suite::OmegaSum,
        Suite::CasoloA,
        Suite::CasoloB,
        Suite::NavarroRizo,
        Suite::Alpha,
        Suite::Monotone,
        Suite::Snx,
        Suite::LambdaMult,
        Suite::NumOrb,
        Suite::Conjectures,
        Suite::GnForms,
        Suite::OpInvariance,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Frobenius => "frobenius",
            Suite::OmegaSum => "omega-sum",
            Suite::CasoloA => "casolo-a",
            Suite::CasoloB => "casolo-b",
            Suite::NavarroRizo => "navarro-rizo",
            Suite::Alpha => "alpha",
            Suite::Monotone => "monotone",
            Suite::Snx => "snx",
            Suite::LambdaMult => "lambda-mult",
            Suite::NumOrb => "num-orb",
            Suite::Conjectures => "conjectures",
            Suite::GnForms => "gn-forms",
            Suite::OpInvariance => "op-invariance",
        }
    }

    fn rank(&self) -> usize {
        Suite::EACH.iter().position(|s| s == self).unwrap_or(0)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| GroupError::InvalidParams(format!("unknown suite {s:?}")))
    }
}

/// Which groups a run covers.
#[derive(Clone, Debug)]
pub enum GroupSelection {
    /// Every catalog group within the order limit.
    Catalog,
    Groups(Vec<FiniteGroup>),
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub groups: GroupSelection,
    /// Restrict to one prime; otherwise every prime dividing `|G|`.
    pub prime: Option<u64>,
    pub max_order: Option<Order>,
    pub cap: usize,
    pub budget: BruteBudget,
    pub gn_params: Vec<GnParams>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            groups: GroupSelection::Catalog,
            prime: None,
            max_order: None,
            cap: DEFAULT_CAP,
            budget: BruteBudget::default(),
            gn_params: DEFAULT_GN_PARAMS
                .iter()
                .map(|&(p, n, q)| GnParams::new(p, n, q).expect("valid defaults"))
                .collect(),
        }
    }
}

/// Sort key: suite, then fixture reports before per-group ones, then job
/// and position within the job.
type Key = (usize, usize, usize, usize);

enum Job<'g> {
    PerGroup(&'g FiniteGroup, u64),
    Steinberg(&'g FiniteGroup, u64),
    Monotone(&'g FiniteGroup, usize),
    Snx(&'g FiniteGroup, usize),
    LambdaMult(&'g FiniteGroup, usize),
    NavarroRizo(&'g FiniteGroup, usize),
    NumOrb(usize),
    GnForms(GnParams),
}

/// Runs the selected suites and returns the reports in a deterministic
/// order: by suite, then by job.
pub fn run_suites(suites: &[Suite], config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut selected: Vec<Suite> = if suites.contains(&Suite::All) {
        Suite::EACH.to_vec()
    } else {
        suites.to_vec()
    };
    selected.sort();
    selected.dedup();
    let wants = |s: Suite| selected.contains(&s);

    let groups: Vec<FiniteGroup> = match &config.groups {
        GroupSelection::Catalog => catalog::build_catalog(config.max_order, config.cap)?,
        GroupSelection::Groups(list) => list
            .iter()
            .filter(|g| config.max_order.map_or(true, |m| g.order() <= m))
            .cloned()
            .collect(),
    };
    let by_name = |name: &str| groups.iter().find(|g| g.name() == name);
    let prime_ok = |p: u64| config.prime.map_or(true, |q| q == p);

    let mut jobs: Vec<(Key, Job<'_>)> = Vec::new();
    fn push<'g>(jobs: &mut Vec<(Key, Job<'g>)>, suite: Suite, section: usize, job: Job<'g>) {
        let idx = jobs.len();
        jobs.push(((suite.rank(), section, idx, 0), job));
    }
    let per_group = selected.iter().any(|s| PER_GROUP.contains(s));
    for g in groups.iter().filter(|_| per_group) {
        for p in prime_divisors(g.order()) {
            if prime_ok(p) {
                push(&mut jobs, Suite::Frobenius, 1, Job::PerGroup(g, p));
            }
        }
    }
    if wants(Suite::Frobenius) {
        for &(name, p) in steinberg_fixtures() {
            if let Some(g) = by_name(name).filter(|_| prime_ok(p)) {
                push(&mut jobs, Suite::Frobenius, 0, Job::Steinberg(g, p));
            }
        }
    }
    let fixture_suites = [
        (Suite::Monotone, monotone_fixtures()),
        (Suite::Snx, snx_fixtures()),
        (Suite::LambdaMult, lambda_mult_fixtures()),
    ];
    for (suite, fixtures) in fixture_suites {
        if !wants(suite) {
            continue;
        }
        for (i, f) in fixtures.iter().enumerate() {
            if let Some(g) = by_name(f.group).filter(|_| prime_ok(f.p)) {
                let job = match suite {
                    Suite::Monotone => Job::Monotone(g, i),
                    Suite::Snx => Job::Snx(g, i),
                    _ => Job::LambdaMult(g, i),
                };
                push(&mut jobs, suite, 0, job);
            }
        }
    }
    if wants(Suite::NavarroRizo) {
        for (i, f) in navarro_rizo_fixtures().iter().enumerate() {
            if let Some(g) = by_name(f.group).filter(|_| prime_ok(f.p)) {
                push(&mut jobs, Suite::NavarroRizo, 0, Job::NavarroRizo(g, i));
            }
        }
    }
    if wants(Suite::NumOrb) {
        for (i, f) in num_orb_fixtures().iter().enumerate() {
            let selected_factor = match &config.groups {
                GroupSelection::Catalog => catalog::known_order(f.factor).map_or(false, |o| {
                    let total = (o as u128).pow(f.copies as u32) * f.cycle_length as u128;
                    config.max_order.map_or(true, |m| total <= m as u128)
                }),
                GroupSelection::Groups(_) => by_name(f.factor).is_some(),
            };
            if selected_factor && prime_ok(f.p) {
                push(&mut jobs, Suite::NumOrb, 0, Job::NumOrb(i));
            }
        }
    }
    if wants(Suite::GnForms) {
        for &params in &config.gn_params {
            let included = match &config.groups {
                GroupSelection::Catalog => true,
                GroupSelection::Groups(_) => by_name(&params.name()).is_some(),
            };
            if included && prime_ok(params.p) {
                push(&mut jobs, Suite::GnForms, 0, Job::GnForms(params));
            }
        }
    }

    let mut tagged: Vec<(Key, CheckReport)> = jobs
        .par_iter()
        .flat_map_iter(|(key, job)| run_job(*key, job, &selected, config))
        .collect();
    tagged.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(tagged.into_iter().map(|(_, r)| r).collect())
}

fn run_job(key: Key, job: &Job<'_>, selected: &[Suite], config: &SuiteConfig) -> Vec<(Key, CheckReport)> {
    let (_, section, idx, _) = key;
    let tag = |suite: Suite, reports: Vec<CheckReport>| -> Vec<(Key, CheckReport)> {
        reports
            .into_iter()
            .enumerate()
            .map(|(j, r)| ((suite.rank(), section, idx, j), r))
            .collect()
    };
    match *job {
        Job::PerGroup(g, p) => {
            let a = match Analysis::new(g, p) {
                Ok(a) => a,
                Err(e) => {
                    return selected
                        .iter()
                        .filter(|s| PER_GROUP.contains(s))
                        .flat_map(|&s| tag(s, vec![CheckReport::errored(s.name(), g.name(), p, &e)]))
                        .collect()
                }
            };
            selected
                .iter()
                .filter(|s| PER_GROUP.contains(s))
                .flat_map(|&s| tag(s, per_group_reports(s, &a, config)))
                .collect()
        }
        Job::Steinberg(g, p) => tag(
            Suite::Frobenius,
            vec![match Analysis::new(g, p) {
                Ok(a) => check_steinberg(&a),
                Err(e) => CheckReport::errored("steinberg", g.name(), p, e),
            }],
        ),
        Job::Monotone(g, i) => {
            let f = &monotone_fixtures()[i];
            tag(
                Suite::Monotone,
                vec![with_subgroup(g, f.subgroup, f.p, "lambda-monotone", |h| {
                    check_lambda_monotone(g, h, f.p)
                })],
            )
        }
        Job::Snx(g, i) => {
            let f = &snx_fixtures()[i];
            tag(
                Suite::Snx,
                vec![with_subgroup(g, f.subgroup, f.p, "snx", |n| {
                    check_snx(g, n, f.p, config.budget)
                })],
            )
        }
        Job::LambdaMult(g, i) => {
            let f = &lambda_mult_fixtures()[i];
            tag(
                Suite::LambdaMult,
                vec![with_subgroup(g, f.subgroup, f.p, "lambda-mult", |n| {
                    check_lambda_multiplicative(g, n, f.p)
                })],
            )
        }
        Job::NavarroRizo(g, i) => {
            let f = &navarro_rizo_fixtures()[i];
            let resolved = (|| Ok::<_, GroupError>((f.acting.resolve(g)?, f.upper.resolve(g)?, f.lower.resolve(g)?)))();
            let report = match resolved {
                Ok((acting, upper, lower)) => check_navarro_rizo(g.name(), f.p, &acting, &upper, &lower),
                Err(e) => CheckReport::errored("navarro-rizo", g.name(), f.p, e),
            };
            tag(Suite::NavarroRizo, vec![report])
        }
        Job::NumOrb(i) => {
            let f = &num_orb_fixtures()[i];
            let built = catalog::get_with_cap(f.factor, config.cap)
                .and_then(|l| direct_power_with_swap(&l, f.copies, f.cycle_length, config.cap));
            let report = match built {
                Ok(w) => check_num_orb(&w, f.p),
                Err(e) => CheckReport::errored("num-orb", f.factor, f.p, e),
            };
            tag(Suite::NumOrb, vec![report])
        }
        Job::GnForms(params) => tag(Suite::GnForms, check_gn_closed_forms(params, config.cap)),
    }
}

const PER_GROUP: [Suite; 8] = [
    Suite::Frobenius,
    Suite::OmegaSum,
    Suite::CasoloA,
    Suite::CasoloB,
    Suite::NavarroRizo,
    Suite::Alpha,
    Suite::Conjectures,
    Suite::OpInvariance,
];

fn with_subgroup(
    g: &FiniteGroup,
    spec: super::SubgroupSpec,
    p: u64,
    id: &str,
    check: impl FnOnce(&FiniteGroup) -> CheckReport,
) -> CheckReport {
    match spec.resolve(g) {
        Ok(h) => check(&h),
        Err(e) => CheckReport::errored(id, g.name(), p, e),
    }
}

fn per_group_reports(suite: Suite, a: &Analysis<'_>, config: &SuiteConfig) -> Vec<CheckReport> {
    match suite {
        Suite::Frobenius => vec![
            check_frobenius(a),
            check_miller_gap(a),
            check_sylow_congruence(a),
            check_p_elements_union(a),
        ],
        Suite::OmegaSum => vec![check_omega_sum(a)],
        Suite::CasoloA => vec![check_casolo_a(a, config.budget)],
        Suite::CasoloB => vec![check_casolo_b(a)],
        Suite::NavarroRizo => match a.series() {
            Ok(series) if series.p_solvable => series
                .p_prime_factors()
                .map(|(u, v)| check_navarro_rizo(a.name(), a.p, a.sylow.sylow(), u, v))
                .collect(),
            Ok(_) => vec![],
            Err(e) => vec![CheckReport::errored("navarro-rizo", a.name(), a.p, e)],
        },
        Suite::Alpha => vec![check_alpha_formula(a), check_alpha_independence(a)],
        Suite::Conjectures => vec![
            check_conjecture_ratio(a),
            check_conjecture_lambda(a),
            check_amgm_chain(a),
        ],
        Suite::OpInvariance => vec![check_op_quotient_invariance(a, config.budget.subgroup)],
        _ => vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Status;

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::EACH) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_catalog_run_has_no_failures() {
        let config = SuiteConfig {
            max_order: Some(60),
            ..SuiteConfig::default()
        };
        let reports = run_suites(&[Suite::All], &config).unwrap();
        for r in &reports {
            assert_ne!(
                r.status,
                Status::Fail,
                "{} {} p={}: {}",
                r.check_id,
                r.group_name,
                r.prime,
                r.detail
            );
            assert_ne!(r.status, Status::ReportOnlyViolated);
        }
        let again = run_suites(&[Suite::All], &config).unwrap();
        assert_eq!(reports, again);
    }

    #[test]
    fn single_group_selection() {
        let a5 = catalog::get("A5").unwrap();
        let config = SuiteConfig {
            groups: GroupSelection::Groups(vec![a5]),
            ..SuiteConfig::default()
        };
        let reports = run_suites(&[Suite::Conjectures], &config).unwrap();
        assert_eq!(reports.len(), 9);
        assert!(reports
            .iter()
            .filter(|r| r.check_id != "amgm-chain")
            .all(|r| r.status == Status::ReportOnlyHolds));
    }
}
