//! Named inputs for the lemma checks. Subgroups are described relative to
//! their catalog group so fixtures stay plain data.

use crate::algebra::{p_core, p_prime_core};
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::sylow::sylow_subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    Trivial,
    Whole,
    /// Generated by the listed cycle-notation elements.
    Generators(&'static [&'static str]),
    /// The even permutations.
    Even,
    /// Stabilizer of a point (1-based).
    PointStabilizer(usize),
    /// Elements mapping every block `{kb, …, kb + b - 1}` of the given size
    /// into itself.
    BlockStabilizer(usize),
    Sylow(u64),
    PCore(u64),
    PPrimeCore(u64),
}

impl SubgroupSpec {
    pub fn resolve(&self, g: &FiniteGroup) -> Result<FiniteGroup> {
        let d = g.degree();
        match *self {
            SubgroupSpec::Trivial => Ok(FiniteGroup::trivial(d)),
            SubgroupSpec::Whole => Ok(g.clone()),
            SubgroupSpec::Generators(cycles) => {
                let gens = cycles
                    .iter()
                    .map(|c| Permutation::parse(c, d))
                    .collect::<Result<Vec<_>>>()?;
                g.subgroup(cycles.join(", "), gens)
            }
            SubgroupSpec::Even => g.filter_subgroup("even", |x| is_even(x)),
            SubgroupSpec::PointStabilizer(point) => {
                if point == 0 || point > d {
                    return Err(GroupError::PointOutOfRange { point, degree: d });
                }
                g.filter_subgroup(format!("Stab({point})"), |x| x.apply(point - 1) == point - 1)
            }
            SubgroupSpec::BlockStabilizer(size) => {
                if size == 0 || d % size != 0 {
                    return Err(GroupError::InvalidParams(format!(
                        "block size {size} does not divide degree {d}"
                    )));
                }
                g.filter_subgroup("block stabilizer", |x| (0..d).all(|i| x.apply(i) / size == i / size))
            }
            SubgroupSpec::Sylow(p) => sylow_subgroup(g, p),
            SubgroupSpec::PCore(p) => p_core(g, p),
            SubgroupSpec::PPrimeCore(p) => p_prime_core(g, p),
        }
    }
}

fn is_even(x: &Permutation) -> bool {
    x.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 0
}

/// A subgroup `H` of a catalog group `G` and a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgroupFixture {
    pub group: &'static str,
    pub subgroup: SubgroupSpec,
    pub p: u64,
}

/// A p-group acting by conjugation on the section `upper / lower` of a
/// catalog group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionFixture {
    pub group: &'static str,
    pub acting: SubgroupSpec,
    pub upper: SubgroupSpec,
    pub lower: SubgroupSpec,
    pub p: u64,
}

/// `L^copies ⋊ C_{cycle_length}` with the prime at which Sylow subgroups are
/// counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerFixture {
    pub factor: &'static str,
    pub copies: usize,
    pub cycle_length: usize,
    pub p: u64,
}

const fn fixture(group: &'static str, subgroup: SubgroupSpec, p: u64) -> SubgroupFixture {
    SubgroupFixture { group, subgroup, p }
}

/// Groups of Lie type in defining characteristic, where the Frobenius
/// ratio equals `|P|`.
pub fn steinberg_fixtures() -> &'static [(&'static str, u64)] {
    &[
        ("SL(2,3)", 3),
        ("PSL(2,7)", 7),
        ("A5", 5),
        ("A5", 2),
        ("A4", 3),
        ("S3", 2),
        ("A6", 3),
    ]
}

pub fn monotone_fixtures() -> &'static [SubgroupFixture] {
    use SubgroupSpec::*;
    const FIXTURES: &[SubgroupFixture] = &[
        fixture("S4", Even, 2),
        fixture("S4", Even, 3),
        fixture("S4", Sylow(2), 2),
        fixture("A5", PointStabilizer(5), 2),
        fixture("S5", Even, 2),
        fixture("S5", PointStabilizer(5), 2),
        fixture("S5", PointStabilizer(5), 3),
        fixture("A6", PointStabilizer(6), 2),
    ];
    FIXTURES
}

/// Each entry has `G = NP` with `N ⊴ G`.
pub fn snx_fixtures() -> &'static [SubgroupFixture] {
    use SubgroupSpec::*;
    const FIXTURES: &[SubgroupFixture] = &[
        fixture("S3", Even, 2),
        fixture("Gn(2,1,3)", PPrimeCore(2), 2),
        fixture("S4", Even, 2),
        fixture("A4", PCore(2), 3),
        fixture("Gn(2,2,3)", PPrimeCore(2), 2),
        fixture("Gn(3,1,7)", PPrimeCore(3), 3),
        fixture("C7:C3", PPrimeCore(3), 3),
        fixture("S3wrC2", BlockStabilizer(3), 2),
        fixture("S5", Even, 2),
    ];
    FIXTURES
}

pub fn lambda_mult_fixtures() -> &'static [SubgroupFixture] {
    use SubgroupSpec::*;
    const FIXTURES: &[SubgroupFixture] = &[
        fixture("S4", PCore(2), 2),
        fixture("S4", Even, 2),
        fixture("S4", PCore(2), 3),
        fixture("S3", Even, 2),
        fixture("A4", PCore(2), 3),
        fixture("S5", Even, 2),
        fixture("Gn(2,2,3)", PPrimeCore(2), 2),
        fixture("S3wrC2", BlockStabilizer(3), 2),
        fixture("SL(2,3)", PCore(2), 3),
        fixture("D12", PPrimeCore(2), 2),
        fixture("Gn(3,1,7)", PPrimeCore(3), 3),
    ];
    FIXTURES
}

pub fn navarro_rizo_fixtures() -> &'static [ActionFixture] {
    use SubgroupSpec::*;
    const fn action(
        group: &'static str,
        acting: SubgroupSpec,
        upper: SubgroupSpec,
        lower: SubgroupSpec,
        p: u64,
    ) -> ActionFixture {
        ActionFixture {
            group,
            acting,
            upper,
            lower,
            p,
        }
    }
    const FIXTURES: &[ActionFixture] = &[
        action("S3", Generators(&["(1 2)"]), Even, Trivial, 2),
        action("S4", Sylow(2), Even, PCore(2), 2),
        action("Gn(2,1,3)", Sylow(2), PPrimeCore(2), Trivial, 2),
        action("Gn(2,1,5)", Sylow(2), PPrimeCore(2), Trivial, 2),
        action("Gn(2,2,3)", Sylow(2), PPrimeCore(2), Trivial, 2),
        action("Gn(3,1,7)", Sylow(3), PPrimeCore(3), Trivial, 3),
        action("Gn(2,3,3)", Sylow(2), PPrimeCore(2), Trivial, 2),
        action("Gn(3,2,7)", Sylow(3), PPrimeCore(3), Trivial, 3),
    ];
    FIXTURES
}

pub fn num_orb_fixtures() -> &'static [PowerFixture] {
    const fn power(factor: &'static str, copies: usize, cycle_length: usize, p: u64) -> PowerFixture {
        PowerFixture {
            factor,
            copies,
            cycle_length,
            p,
        }
    }
    const FIXTURES: &[PowerFixture] = &[
        power("S3", 2, 2, 3),
        power("S3", 2, 2, 2),
        power("S3", 3, 3, 2),
        power("S3", 3, 3, 3),
        power("A4", 2, 2, 3),
        power("S3", 2, 1, 3),
    ];
    FIXTURES
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_normal;
    use crate::catalog;

    #[test]
    fn specs_resolve_to_expected_orders() {
        let s4 = catalog::get("S4").unwrap();
        assert_eq!(SubgroupSpec::Even.resolve(&s4).unwrap().order(), 12);
        assert_eq!(SubgroupSpec::PointStabilizer(4).resolve(&s4).unwrap().order(), 6);
        assert_eq!(SubgroupSpec::PCore(2).resolve(&s4).unwrap().order(), 4);
        assert_eq!(
            SubgroupSpec::Generators(&["(1 2 3 4)"]).resolve(&s4).unwrap().order(),
            4
        );
        let w = catalog::get("S3wrC2").unwrap();
        assert_eq!(SubgroupSpec::BlockStabilizer(3).resolve(&w).unwrap().order(), 36);
        assert!(SubgroupSpec::BlockStabilizer(5).resolve(&w).is_err());
    }

    #[test]
    fn snx_and_lambda_mult_subgroups_are_normal() {
        for f in snx_fixtures().iter().chain(lambda_mult_fixtures()) {
            let g = catalog::get(f.group).unwrap();
            let n = f.subgroup.resolve(&g).unwrap();
            assert!(is_normal(&g, &n), "{} in {}", n.name(), f.group);
        }
    }
}
