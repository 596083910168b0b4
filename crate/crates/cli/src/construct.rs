use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use sylowlab_core::checks::gn::{predicted_lambda, predicted_np, predicted_ratio};
use sylowlab_core::checks::{gn_asymptotics, Analysis};
use sylowlab_core::constructions::{build_gn, GnParams};
use sylowlab_core::groupfile::GroupFile;

use crate::render::{aligned, short};

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    q: u64,
    /// Output group file; default `gn_<p>_<n>_<q>.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also enumerate the group and print computed values.
    #[arg(long)]
    compute: bool,
    /// Print the convergence table of ratio^p / n_p^(p-1) toward q.
    #[arg(long)]
    asymptotics: bool,
    /// Largest n in the convergence table.
    #[arg(long, default_value_t = 8)]
    max_n: u32,
}

pub fn run(args: &ConstructArgs, cap: usize) -> Result<u8> {
    let params = GnParams::new(args.p, args.n, args.q).context("construct-gn: parameters")?;
    let gn = build_gn(params, cap).context("construct-gn: building the group")?;
    let path = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("gn_{}_{}_{}.json", args.p, args.n, args.q)));
    GroupFile::from_group(&gn.group)
        .write(&path)
        .with_context(|| format!("construct-gn: writing {}", path.display()))?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: order {}, degree {}",
        params.name(),
        gn.group.order(),
        gn.group.degree()
    );
    let _ = writeln!(out, "wrote {}", path.display());
    let mut rows = vec![
        ("n_p", predicted_np(&params).to_string(), None),
        ("lambda(x), x != 1", predicted_lambda(&params).to_string(), None),
        ("ratio", predicted_ratio(&params).to_string(), None),
    ];
    if args.compute {
        let a = Analysis::new(&gn.group, params.p).context("construct-gn: Sylow data")?;
        let identity = gn.group.identity();
        let mut nontrivial: Vec<u64> = a
            .sylow
            .sylow()
            .elements()
            .iter()
            .zip(a.lambdas())
            .filter(|(x, _)| **x != identity)
            .map(|(_, &l)| l)
            .collect();
        nontrivial.sort_unstable();
        nontrivial.dedup();
        let lambdas: Vec<String> = nontrivial.iter().map(u64::to_string).collect();
        rows[0].2 = Some(a.n_p().to_string());
        rows[1].2 = Some(lambdas.join(","));
        rows[2].2 = Some(a.ratio().map_or("non-integral".into(), |r| r.to_string()));
    }
    let _ = writeln!(
        out,
        "{:<20} {:>16} {:>16}",
        "",
        "closed form",
        if args.compute { "computed" } else { "" }
    );
    for (label, predicted, computed) in &rows {
        let _ = writeln!(
            out,
            "{label:<20} {predicted:>16} {:>16}",
            computed.as_deref().unwrap_or("")
        );
    }
    if args.asymptotics {
        let rows = gn_asymptotics(params.p, params.q, args.max_n.max(1), 6).context("construct-gn: asymptotics")?;
        let _ = writeln!(
            out,
            "\nratio^p vs n_p^(p-1)*q for p = {}, q = {} (closed forms)",
            params.p, params.q
        );
        let mut table = vec![["n", "ratio^p", "n_p^(p-1)*q", "ratio^p / n_p^(p-1)"]
            .map(String::from)
            .to_vec()];
        for r in rows {
            table.push(vec![r.n.to_string(), short(&r.lhs), short(&r.rhs), r.quotient]);
        }
        out.push_str(&aligned(&table));
        let _ = writeln!(out, "the quotient tends to q = {}", params.q);
    }
    print!("{out}");
    Ok(0)
}
