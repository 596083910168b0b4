//! Named groups used as the verification corpus. Names are stable
//! identifiers (the CLI refers to them as `catalog:<name>`).

use crate::constructions::{build_gn, direct_power_with_swap, semidirect_by_blocks, BlockAction, GnParams};
use crate::error::{GroupError, Result};
use crate::group::{FiniteGroup, DEFAULT_CAP};
use crate::perm::Permutation;
use crate::Order;

/// Catalog names with their known orders, in catalog order.
pub const ENTRIES: &[(&str, Order)] = &[
    ("C2", 2),
    ("C3", 3),
    ("C4", 4),
    ("C6", 6),
    ("C8", 8),
    ("C2^2", 4),
    ("C2^3", 8),
    ("C3^2", 9),
    ("D8", 8),
    ("D10", 10),
    ("D12", 12),
    ("S3", 6),
    ("S4", 24),
    ("S5", 120),
    ("S6", 720),
    ("A4", 12),
    ("A5", 60),
    ("A6", 360),
    ("SL(2,3)", 24),
    ("PSL(2,7)", 168),
    ("S3wrC2", 72),
    ("C7:C3", 21),
    ("C5:C4", 20),
    ("C11:C5", 55),
    ("C13:C3", 39),
    ("Gn(2,1,3)", 6),
    ("Gn(2,1,5)", 10),
    ("Gn(2,2,3)", 108),
    ("Gn(3,1,7)", 21),
    ("Gn(2,3,3)", 17_496),
    ("Gn(3,2,7)", 21_609),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(n, _)| *n)
}

/// Known order of a catalog entry.
pub fn known_order(name: &str) -> Option<Order> {
    ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, o)| *o)
}

pub fn get(name: &str) -> Result<FiniteGroup> {
    get_with_cap(name, DEFAULT_CAP)
}

/// Builds a catalog group and checks its order. Any `Gn(p,n,q)` with valid
/// parameters is accepted, not only the listed ones.
pub fn get_with_cap(name: &str, cap: usize) -> Result<FiniteGroup> {
    let g = build(name, cap)?;
    if let Some(expected) = known_order(name) {
        if g.order() != expected {
            return Err(GroupError::IdentityViolation(format!(
                "{name} has order {}, expected {expected}",
                g.order()
            )));
        }
    }
    Ok(g)
}

/// Every catalog group of order at most `max_order`, in catalog order.
pub fn build_catalog(max_order: Option<Order>, cap: usize) -> Result<Vec<FiniteGroup>> {
    ENTRIES
        .iter()
        .filter(|(_, o)| max_order.map_or(true, |m| *o <= m) && *o <= cap as Order)
        .map(|(n, _)| get_with_cap(n, cap))
        .collect()
}

pub fn parse_gn_name(name: &str) -> Option<(u64, u32, u64)> {
    let inner = name.strip_prefix("Gn(")?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return None;
    }
    Some((parts[0].parse().ok()?, parts[1].parse().ok()?, parts[2].parse().ok()?))
}

fn from_cycles(name: &str, degree: usize, cycles: &[&str], cap: usize) -> Result<FiniteGroup> {
    let gens = cycles
        .iter()
        .map(|c| Permutation::parse(c, degree))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::generate(name, degree, gens, cap)
}

fn cyclic(name: &str, m: usize, cap: usize) -> Result<FiniteGroup> {
    let images: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    FiniteGroup::generate(name, m, vec![Permutation::from_images(&images)?], cap)
}

fn dihedral(name: &str, m: usize, cap: usize) -> Result<FiniteGroup> {
    let rotation: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    FiniteGroup::generate(
        name,
        m,
        vec![
            Permutation::from_images(&rotation)?,
            Permutation::from_images(&reflection)?,
        ],
        cap,
    )
}

fn symmetric(name: &str, n: usize, cap: usize) -> Result<FiniteGroup> {
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    FiniteGroup::generate(
        name,
        n,
        vec![Permutation::from_images(&cycle)?, Permutation::from_images(&swap)?],
        cap,
    )
}

fn alternating(name: &str, n: usize, cap: usize) -> Result<FiniteGroup> {
    let gens = (2..n)
        .map(|k| {
            let mut images: Vec<usize> = (0..n).collect();
            images[0] = 1;
            images[1] = k;
            images[k] = 0;
            Permutation::from_images(&images)
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::generate(name, n, gens, cap)
}

/// `SL(2,3)` acting on the eight nonzero row vectors of `F_3^2`.
fn sl23(cap: usize) -> Result<FiniteGroup> {
    let vectors: Vec<(u64, u64)> = (0..9u64).map(|c| (c / 3, c % 3)).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[u64; 2]; 2]| -> Result<Permutation> {
        let images: Vec<usize> = vectors
            .iter()
            .map(|&(a, b)| {
                let w = ((a * m[0][0] + b * m[1][0]) % 3, (a * m[0][1] + b * m[1][1]) % 3);
                vectors.iter().position(|&v| v == w).expect("nonzero image")
            })
            .collect();
        Permutation::from_images(&images)
    };
    FiniteGroup::generate("SL(2,3)", 8, vec![act([[1, 1], [0, 1]])?, act([[1, 0], [1, 1]])?], cap)
}

fn frobenius(name: &str, q: u64, p: u64, multiplier: u64, cap: usize) -> Result<FiniteGroup> {
    semidirect_by_blocks(
        name,
        &[q],
        &[BlockAction {
            order: p,
            multipliers: vec![multiplier],
        }],
        cap,
    )
}

fn build(name: &str, cap: usize) -> Result<FiniteGroup> {
    match name {
        "C2" => cyclic(name, 2, cap),
        "C3" => cyclic(name, 3, cap),
        "C4" => cyclic(name, 4, cap),
        "C6" => cyclic(name, 6, cap),
        "C8" => cyclic(name, 8, cap),
        "C2^2" => from_cycles(name, 4, &["(1 2)", "(3 4)"], cap),
        "C2^3" => from_cycles(name, 6, &["(1 2)", "(3 4)", "(5 6)"], cap),
        "C3^2" => from_cycles(name, 6, &["(1 2 3)", "(4 5 6)"], cap),
        "D8" => dihedral(name, 4, cap),
        "D10" => dihedral(name, 5, cap),
        "D12" => dihedral(name, 6, cap),
        "S3" => symmetric(name, 3, cap),
        "S4" => symmetric(name, 4, cap),
        "S5" => symmetric(name, 5, cap),
        "S6" => symmetric(name, 6, cap),
        "A4" => alternating(name, 4, cap),
        "A5" => alternating(name, 5, cap),
        "A6" => alternating(name, 6, cap),
        "SL(2,3)" => sl23(cap),
        // Projective line over F_7: points 1..7 are 0..6, point 8 is ∞;
        // generators z ↦ z + 1 and z ↦ -1/z.
        "PSL(2,7)" => from_cycles(name, 8, &["(1 2 3 4 5 6 7)", "(1 8)(2 7)(3 4)(5 6)"], cap),
        "S3wrC2" => Ok(direct_power_with_swap(&symmetric("S3", 3, cap)?, 2, 2, cap)?
            .group
            .with_name(name)),
        "C7:C3" => frobenius(name, 7, 3, 2, cap),
        "C5:C4" => frobenius(name, 5, 4, 2, cap),
        "C11:C5" => frobenius(name, 11, 5, 3, cap),
        "C13:C3" => frobenius(name, 13, 3, 3, cap),
        _ => match parse_gn_name(name) {
            Some((p, n, q)) => Ok(build_gn(GnParams::new(p, n, q)?, cap)?.group),
            None => Err(GroupError::UnknownGroup(name.to_string())),
        },
    }
}
