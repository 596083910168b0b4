//! Exact checks of the identities and inequalities relating p-element
//! counts, Sylow statistics and subnormalizers. Each check produces a
//! [`CheckReport`] carrying exact integer witnesses.

mod fixtures;
pub mod gn;
mod lemmas;
mod per_group;
mod suite;

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::algebra::{upper_p_series, PSeries};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::sylow::{p_elements, SylowData};
use crate::{BigNat, Order};

pub use fixtures::{
    lambda_mult_fixtures, monotone_fixtures, navarro_rizo_fixtures, num_orb_fixtures, snx_fixtures, steinberg_fixtures,
    ActionFixture, PowerFixture, SubgroupFixture, SubgroupSpec,
};
pub use gn::{check_gn_closed_forms, gn_asymptotics, GnAsymptoticRow, DEFAULT_GN_PARAMS};
pub use lemmas::{check_lambda_monotone, check_lambda_multiplicative, check_navarro_rizo, check_num_orb, check_snx};
pub use per_group::{
    check_alpha_formula, check_alpha_independence, check_amgm_chain, check_casolo_a, check_casolo_b,
    check_conjecture_lambda, check_conjecture_ratio, check_frobenius, check_miller_gap, check_omega_sum,
    check_op_quotient_invariance, check_p_elements_union, check_steinberg, check_sylow_congruence,
};
pub use suite::{run_suites, GroupSelection, Suite, SuiteConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "REPORT_ONLY_HOLDS")]
    ReportOnlyHolds,
    #[serde(rename = "REPORT_ONLY_VIOLATED")]
    ReportOnlyViolated,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl Status {
    /// PASS/FAIL for a proven statement.
    pub fn proven(holds: bool) -> Self {
        if holds {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// PASS/FAIL when the statement is proven for this input, report-only
    /// otherwise.
    pub fn conjectural(holds: bool, proven_here: bool) -> Self {
        match (proven_here, holds) {
            (true, h) => Status::proven(h),
            (false, true) => Status::ReportOnlyHolds,
            (false, false) => Status::ReportOnlyViolated,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ReportOnlyHolds => "REPORT_ONLY_HOLDS",
            Status::ReportOnlyViolated => "REPORT_ONLY_VIOLATED",
            Status::Skipped => "SKIPPED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn decimal<S: Serializer, T: fmt::Display>(value: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

/// Outcome of one check. For "for every element" checks `lhs` counts the
/// instances that hold and `rhs` the instances tested; otherwise they are
/// the two exact sides of the checked relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub group_name: String,
    #[serde(serialize_with = "decimal")]
    pub prime: u64,
    pub status: Status,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigNat,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigNat,
    pub detail: String,
}

impl CheckReport {
    pub fn new(
        check_id: &str,
        group_name: &str,
        prime: u64,
        status: Status,
        lhs: impl Into<BigNat>,
        rhs: impl Into<BigNat>,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            check_id: check_id.to_string(),
            group_name: group_name.to_string(),
            prime,
            status,
            lhs: lhs.into(),
            rhs: rhs.into(),
            detail: detail.into(),
        }
    }

    pub fn skipped(check_id: &str, group_name: &str, prime: u64, reason: impl Into<String>) -> Self {
        Self::new(check_id, group_name, prime, Status::Skipped, 0u64, 0u64, reason)
    }

    /// A check that could not be evaluated because a computation failed.
    pub fn errored(check_id: &str, group_name: &str, prime: u64, err: impl fmt::Display) -> Self {
        Self::new(
            check_id,
            group_name,
            prime,
            Status::Fail,
            0u64,
            0u64,
            format!("error: {err}"),
        )
    }

    /// Tallies per-instance outcomes; `first_failure` describes the first
    /// instance that did not hold.
    pub fn tally(
        check_id: &str,
        group_name: &str,
        prime: u64,
        held: usize,
        tested: usize,
        first_failure: Option<String>,
        detail: impl Into<String>,
    ) -> Self {
        let status = Status::proven(held == tested);
        let detail = match first_failure {
            Some(f) => format!("{}; first failure: {f}", detail.into()),
            None => detail.into(),
        };
        Self::new(check_id, group_name, prime, status, held as u64, tested as u64, detail)
    }
}

/// Shared per-`(G, p)` data for the checks, with lazily computed pieces.
pub struct Analysis<'a> {
    pub group: &'a FiniteGroup,
    pub p: u64,
    pub sylow: SylowData<'a>,
    p_elements: OnceLock<Vec<usize>>,
    series: OnceLock<Result<PSeries, String>>,
    lambdas: OnceLock<Vec<Order>>,
    class_ids: OnceLock<Vec<usize>>,
}

impl<'a> Analysis<'a> {
    pub fn new(group: &'a FiniteGroup, p: u64) -> Result<Self> {
        Ok(Self {
            group,
            p,
            sylow: SylowData::new(group, p)?,
            p_elements: OnceLock::new(),
            series: OnceLock::new(),
            lambdas: OnceLock::new(),
            class_ids: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    pub fn sylow_order(&self) -> Order {
        self.sylow.sylow().order()
    }

    pub fn n_p(&self) -> Order {
        self.sylow.count()
    }

    /// `𝔘_p(G)` from the order scan, as element indices.
    pub fn p_elements(&self) -> &[usize] {
        self.p_elements.get_or_init(|| p_elements(self.group, self.p))
    }

    pub fn p_element_count(&self) -> Order {
        self.p_elements().len() as Order
    }

    /// `|𝔘_p| / |P|`, which is an integer whenever Frobenius' theorem holds.
    pub fn ratio(&self) -> Option<Order> {
        let (u, s) = (self.p_element_count(), self.sylow_order());
        (u % s == 0).then_some(u / s)
    }

    pub fn series(&self) -> std::result::Result<&PSeries, String> {
        self.series
            .get_or_init(|| upper_p_series(self.group, self.p).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn is_p_solvable(&self) -> bool {
        self.series().map_or(false, |s| s.p_solvable)
    }

    /// `λ_G(x)` for every `x ∈ P`, aligned with `P`'s element list.
    pub fn lambdas(&self) -> &[Order] {
        self.lambdas.get_or_init(|| {
            self.sylow
                .sylow()
                .elements()
                .iter()
                .map(|x| self.sylow.lambda(x).expect("elements of P are p-elements"))
                .collect()
        })
    }

    /// Index of the conjugacy class of `x ∈ G`.
    pub fn class_id(&self, x: &crate::Permutation) -> Option<usize> {
        let ids = self.class_ids.get_or_init(|| {
            let mut ids = vec![0; self.group.elements().len()];
            for (c, class) in self.group.conjugacy_classes().iter().enumerate() {
                for &k in &class.members {
                    ids[k] = c;
                }
            }
            ids
        });
        self.group.position(x).map(|i| ids[i])
    }

    /// `f(x)` for every `x ∈ P`, evaluating `f` once per conjugacy class of
    /// `G`; only valid for class functions.
    pub fn per_class_over_sylow<T: Clone>(&self, mut f: impl FnMut(&crate::Permutation) -> T) -> Vec<T> {
        let mut memo: std::collections::HashMap<usize, T> = std::collections::HashMap::new();
        self.sylow
            .sylow()
            .elements()
            .iter()
            .map(|x| {
                let id = self.class_id(x).expect("P is a subgroup of G");
                memo.entry(id).or_insert_with(|| f(x)).clone()
            })
            .collect()
    }

    /// Multiset of `λ_G(x)` over `x ∈ P` as sorted `(λ, multiplicity)` pairs.
    pub fn lambda_profile(&self) -> Vec<(Order, usize)> {
        let mut sorted = self.lambdas().to_vec();
        sorted.sort_unstable();
        let mut out: Vec<(Order, usize)> = Vec::new();
        for l in sorted {
            match out.last_mut() {
                Some((v, c)) if *v == l => *c += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}
