//! Closed forms for the extremal family `G_n = N ⋊ P`.

use serde::Serialize;

use crate::algebra::p_prime_core;
use crate::constructions::{build_gn, Gn, GnParams};
use crate::exact::{decimal_quotient, exact_quotient, lambda_bound, power};
use crate::BigNat;

use super::{Analysis, CheckReport, Status};

/// `(p, n, q)` triples checked by default.
pub const DEFAULT_GN_PARAMS: &[(u64, u32, u64)] = &[(2, 1, 3), (2, 2, 3), (3, 1, 7), (2, 3, 3), (2, 1, 5), (3, 2, 7)];

fn big(n: u64) -> BigNat {
    BigNat::from(n)
}

/// `n_p(G_n) = q^{(p^n-1)/(p-1)}`.
pub fn predicted_np(params: &GnParams) -> BigNat {
    power(&big(params.q), params.maximal_subgroups())
}

/// `λ(x) = q^{(p^{n-1}-1)/(p-1)}` for `1 ≠ x ∈ P`.
pub fn predicted_lambda(params: &GnParams) -> BigNat {
    power(&big(params.q), (params.p.pow(params.n - 1) - 1) / (params.p - 1))
}

/// The Frobenius ratio `(1 + (p^n - 1)·q^{p^{n-1}}) / p^n`, which is an
/// integer.
pub fn predicted_ratio(params: &GnParams) -> BigNat {
    let pn = params.p.pow(params.n);
    let numerator = big(1) + big(pn - 1) * power(&big(params.q), params.p.pow(params.n - 1));
    exact_quotient(&numerator, &big(pn)).expect("Frobenius ratio is an integer")
}

/// The five closed-form checks for one parameter triple. A group that does
/// not fit in `cap` yields SKIPPED reports.
pub fn check_gn_closed_forms(params: GnParams, cap: usize) -> Vec<CheckReport> {
    const IDS: [&str; 5] = ["gn-np", "gn-lambda", "gn-ratio", "gn-lambda-equality", "gn-structure"];
    let name = params.name();
    let gn = match build_gn(params, cap) {
        Ok(gn) => gn,
        Err(crate::GroupError::CapExceeded(c)) => {
            let order = params.order().map_or("overflow".to_string(), |o| o.to_string());
            return IDS
                .iter()
                .map(|id| CheckReport::skipped(id, &name, params.p, format!("order {order} exceeds cap {c}")))
                .collect();
        }
        Err(e) => {
            return IDS
                .iter()
                .map(|id| CheckReport::errored(id, &name, params.p, &e))
                .collect()
        }
    };
    let a = match Analysis::new(&gn.group, params.p) {
        Ok(a) => a,
        Err(e) => {
            return IDS
                .iter()
                .map(|id| CheckReport::errored(id, &name, params.p, &e))
                .collect()
        }
    };
    vec![
        gn_np(&a, &params),
        gn_lambda(&a, &params),
        gn_ratio(&a, &params),
        gn_lambda_equality(&a),
        gn_structure(&a, &gn),
    ]
}

fn gn_np(a: &Analysis<'_>, params: &GnParams) -> CheckReport {
    let predicted = predicted_np(params);
    let computed = big(a.n_p());
    CheckReport::new(
        "gn-np",
        a.name(),
        a.p,
        Status::proven(computed == predicted),
        computed,
        predicted,
        format!("n_p vs q^{}", params.maximal_subgroups()),
    )
}

fn gn_lambda(a: &Analysis<'_>, params: &GnParams) -> CheckReport {
    let predicted = predicted_lambda(params);
    let identity = a.group.identity();
    let mut held = 0;
    let mut tested = 0;
    let mut first_failure = None;
    for (x, &l) in a.sylow.sylow().elements().iter().zip(a.lambdas()) {
        if *x == identity {
            continue;
        }
        tested += 1;
        if big(l) == predicted {
            held += 1;
        } else {
            first_failure.get_or_insert(format!("x = {x}: λ = {l}"));
        }
    }
    CheckReport::tally(
        "gn-lambda",
        a.name(),
        a.p,
        held,
        tested,
        first_failure,
        format!("every nontrivial λ equals {predicted}"),
    )
}

fn gn_ratio(a: &Analysis<'_>, params: &GnParams) -> CheckReport {
    let pn = params.p.pow(params.n);
    let lhs = big(a.p_element_count()) * big(pn);
    let rhs = big(a.sylow_order()) * (big(1) + big(pn - 1) * power(&big(params.q), params.p.pow(params.n - 1)));
    let ratio = a.ratio().map_or("non-integral".to_string(), |r| r.to_string());
    CheckReport::new(
        "gn-ratio",
        a.name(),
        a.p,
        Status::proven(lhs == rhs),
        lhs,
        rhs,
        format!("|U_p| = {}, ratio = {ratio}", a.p_element_count()),
    )
}

fn gn_lambda_equality(a: &Analysis<'_>) -> CheckReport {
    let lambdas: Vec<BigNat> = a.lambdas().iter().map(|&l| big(l)).collect();
    let sides = lambda_bound(&lambdas, &big(a.n_p()), a.p);
    CheckReport::new(
        "gn-lambda-equality",
        a.name(),
        a.p,
        Status::proven(sides.holds_eq()),
        sides.lhs,
        sides.rhs,
        "(prod lambda)^p = n_p^|P|",
    )
}

fn gn_structure(a: &Analysis<'_>, gn: &Gn) -> CheckReport {
    const ID: &str = "gn-structure";
    let mut problems = Vec::new();
    if a.sylow.normalizer().order() != a.sylow_order() {
        problems.push(format!("|N_G(P)| = {}", a.sylow.normalizer().order()));
    }
    let core = match p_prime_core(a.group, a.p) {
        Ok(c) => c,
        Err(e) => return CheckReport::errored(ID, a.name(), a.p, e),
    };
    let expected = predicted_np(&gn.params);
    if big(core.order()) != expected || core != gn.kernel {
        problems.push(format!("|O_p'(G)| = {}", core.order()));
    }
    match a.series() {
        Ok(s) => {
            let factors = s.p_prime_factors().count();
            if !s.p_solvable || factors != 1 {
                problems.push(format!("series p-solvable {} with {factors} p'-factors", s.p_solvable));
            }
        }
        Err(e) => problems.push(e),
    }
    let detail = if problems.is_empty() {
        "N_G(P) = P, O_p'(G) = N, one p'-factor".to_string()
    } else {
        problems.join("; ")
    };
    CheckReport::new(
        ID,
        a.name(),
        a.p,
        Status::proven(problems.is_empty()),
        core.order(),
        expected,
        detail,
    )
}

/// One row of the convergence table `ratio^p / (n_p^{p-1}·q) → 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GnAsymptoticRow {
    pub n: u32,
    #[serde(serialize_with = "super::decimal")]
    pub n_p: BigNat,
    #[serde(serialize_with = "super::decimal")]
    pub ratio: BigNat,
    /// `ratio^p`.
    #[serde(serialize_with = "super::decimal")]
    pub lhs: BigNat,
    /// `n_p^{p-1}·q`.
    #[serde(serialize_with = "super::decimal")]
    pub rhs: BigNat,
    /// `ratio^p / n_p^{p-1}`, truncated; tends to `q`.
    pub quotient: String,
}

/// Closed-form rows for `n = 1..=max_n`.
pub fn gn_asymptotics(p: u64, q: u64, max_n: u32, digits: u32) -> crate::Result<Vec<GnAsymptoticRow>> {
    (1..=max_n)
        .map(|n| {
            let params = GnParams::new(p, n, q)?;
            let n_p = predicted_np(&params);
            let ratio = predicted_ratio(&params);
            let lhs = power(&ratio, p);
            let base = power(&n_p, p - 1);
            Ok(GnAsymptoticRow {
                n,
                quotient: decimal_quotient(&lhs, &base, digits),
                rhs: base * big(q),
                n_p,
                ratio,
                lhs,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn params(p: u64, n: u32, q: u64) -> GnParams {
        GnParams::new(p, n, q).unwrap()
    }

    #[test]
    fn predictions_match_known_values() {
        let g = params(2, 2, 3);
        assert_eq!(predicted_np(&g), big(27));
        assert_eq!(predicted_lambda(&g), big(3));
        assert_eq!(predicted_ratio(&g), big(7));
        assert_eq!(predicted_ratio(&params(2, 1, 3)), big(2));
        assert_eq!(predicted_ratio(&params(3, 1, 7)), big(5));
        assert_eq!(predicted_lambda(&params(3, 1, 7)), big(1));
    }

    #[test]
    fn small_members_pass() {
        for &(p, n, q) in &[(2, 1, 3), (2, 2, 3), (3, 1, 7), (2, 1, 5)] {
            for r in check_gn_closed_forms(params(p, n, q), DEFAULT_CAP) {
                assert_eq!(r.status, Status::Pass, "{} {}: {}", r.group_name, r.check_id, r.detail);
            }
        }
    }

    #[test]
    fn cap_gives_skips() {
        let reports = check_gn_closed_forms(params(2, 3, 3), 1000);
        assert_eq!(reports.len(), 5);
        assert!(reports
            .iter()
            .all(|r| r.status == Status::Skipped && r.detail.contains("17496")));
    }

    #[test]
    fn asymptotic_quotient_tends_to_q() {
        let rows = gn_asymptotics(2, 3, 6, 6).unwrap();
        assert_eq!(rows[0].ratio, big(2));
        assert_eq!(rows[0].quotient, "1.333333");
        assert_eq!(rows[1].quotient, "1.814814");
        // Monotone approach from below: ratio^p < n_p^{p-1}·q for all n.
        for row in &rows {
            assert!(row.lhs < row.rhs);
        }
        let last: f64 = rows.last().unwrap().quotient.parse().unwrap();
        assert!(last > 2.9 && last < 3.0);
    }
}
