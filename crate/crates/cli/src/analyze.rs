use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use sylowlab_core::checks::Analysis;
use sylowlab_core::exact::{frobenius_bound, lambda_bound, prime_divisors, Sides};
use sylowlab_core::{BigNat, FiniteGroup};

use crate::load_group;

#[derive(Serialize)]
struct Margin {
    lhs: String,
    rhs: String,
    relation: &'static str,
    holds: bool,
}

impl Margin {
    fn new(sides: Sides<BigNat>, relation: &'static str) -> Self {
        let holds = match relation {
            ">=" => sides.holds_ge(),
            _ => sides.holds_le(),
        };
        Self {
            lhs: sides.lhs.to_string(),
            rhs: sides.rhs.to_string(),
            relation,
            holds,
        }
    }
}

#[derive(Serialize)]
struct LambdaCount {
    lambda: String,
    count: String,
}

/// Statistics for one `(G, p)`; integers are decimal strings.
#[derive(Serialize)]
struct Record {
    group: String,
    order: String,
    prime: String,
    sylow_order: String,
    n_p: String,
    p_elements: String,
    ratio: String,
    p_solvable: bool,
    lambda_profile: Vec<LambdaCount>,
    /// `ratio^p` vs `n_p^(p-1)`.
    ratio_margin: Margin,
    /// `(prod lambda)^p` vs `n_p^|P|`.
    lambda_margin: Margin,
}

fn record(g: &FiniteGroup, p: u64) -> Result<Record> {
    let a = Analysis::new(g, p).with_context(|| format!("analyze: Sylow data for p = {p}"))?;
    let Some(ratio) = a.ratio() else {
        bail!("analyze: |P| does not divide the p-element count for p = {p}");
    };
    let n_p = BigNat::from(a.n_p());
    let lambdas: Vec<BigNat> = a.lambdas().iter().map(|&l| BigNat::from(l)).collect();
    Ok(Record {
        group: g.name().to_string(),
        order: g.order().to_string(),
        prime: p.to_string(),
        sylow_order: a.sylow_order().to_string(),
        n_p: a.n_p().to_string(),
        p_elements: a.p_element_count().to_string(),
        ratio: ratio.to_string(),
        p_solvable: a.is_p_solvable(),
        lambda_profile: a
            .lambda_profile()
            .into_iter()
            .map(|(l, c)| LambdaCount {
                lambda: l.to_string(),
                count: c.to_string(),
            })
            .collect(),
        ratio_margin: Margin::new(frobenius_bound(&BigNat::from(ratio), &n_p, p), ">="),
        lambda_margin: Margin::new(lambda_bound(&lambdas, &n_p, p), "<="),
    })
}

fn render(r: &Record) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} (|G| = {}), p = {}", r.group, r.order, r.prime);
    let _ = writeln!(out, "  |P|            {}", r.sylow_order);
    let _ = writeln!(out, "  n_p            {}", r.n_p);
    let _ = writeln!(out, "  |U_p|          {}", r.p_elements);
    let _ = writeln!(out, "  ratio          {}", r.ratio);
    let _ = writeln!(out, "  p-solvable     {}", if r.p_solvable { "yes" } else { "no" });
    let profile: Vec<String> = r
        .lambda_profile
        .iter()
        .map(|l| format!("{}x{}", l.lambda, l.count))
        .collect();
    let _ = writeln!(out, "  lambda profile {} (value x multiplicity)", profile.join(" "));
    for (label, m) in [
        ("ratio^p vs n_p^(p-1)", &r.ratio_margin),
        ("(prod lambda)^p vs n_p^|P|", &r.lambda_margin),
    ] {
        let verdict = if m.holds { "holds" } else { "VIOLATED" };
        let _ = writeln!(out, "  {label}: {} {} {} ({verdict})", m.lhs, m.relation, m.rhs);
    }
    out
}

pub fn run(source: &str, prime: Option<u64>, json: Option<&Path>, cap: usize) -> Result<u8> {
    let g = load_group(source, cap)?;
    let primes = match prime {
        Some(p) if g.order() % p != 0 || !sylowlab_core::exact::is_prime(p) => {
            bail!("analyze: {p} is not a prime dividing |G| = {}", g.order())
        }
        Some(p) => vec![p],
        None => prime_divisors(g.order()),
    };
    let records = primes.iter().map(|&p| record(&g, p)).collect::<Result<Vec<_>>>()?;
    if let Some(path) = json {
        let mut text = serde_json::to_string_pretty(&records)?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let text: Vec<String> = records.iter().map(render).collect();
    print!("{}", text.join("\n"));
    Ok(0)
}
