//! Group builders: affine block products, direct powers with a permuting
//! top group, and the extremal family `G_n = N ⋊ P`.

use crate::error::{GroupError, Result};
use crate::exact::{is_prime, power};
use crate::group::FiniteGroup;
use crate::perm::{gcd, Permutation};
use crate::Order;

/// One acting generator: a unit multiplier for every block and the order the
/// generator is declared to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAction {
    pub order: u64,
    pub multipliers: Vec<u64>,
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

fn offsets(block_orders: &[u64]) -> Vec<usize> {
    let mut acc = 0usize;
    block_orders
        .iter()
        .map(|&q| {
            let o = acc;
            acc += q as usize;
            o
        })
        .collect()
}

/// Translations on each block `Z/q_b` extended by multiplier maps
/// `i ↦ m·i`, acting on the disjoint union of the blocks.
///
/// The result is `(Π Z/q_b) ⋊ M` where `M` is the group of multiplier
/// vectors generated by the actors; its order is checked against
/// `Π q_b · |M|`.
pub fn semidirect_by_blocks(
    name: impl Into<String>,
    block_orders: &[u64],
    actors: &[BlockAction],
    cap: usize,
) -> Result<FiniteGroup> {
    if block_orders.iter().any(|&q| q < 2) {
        return Err(GroupError::InvalidParams("block orders must be at least 2".into()));
    }
    for (j, a) in actors.iter().enumerate() {
        if a.multipliers.len() != block_orders.len() {
            return Err(GroupError::InvalidAction(format!(
                "actor {j} has {} multipliers for {} blocks",
                a.multipliers.len(),
                block_orders.len()
            )));
        }
        for (&m, &q) in a.multipliers.iter().zip(block_orders) {
            if gcd(m % q, q) != 1 {
                return Err(GroupError::InvalidAction(format!("{m} is not a unit modulo {q}")));
            }
            if pow_mod(m, a.order, q) != 1 {
                return Err(GroupError::InvalidAction(format!(
                    "actor {j} declared of order {} but {m}^{} ≢ 1 mod {q}",
                    a.order, a.order
                )));
            }
        }
    }
    let starts = offsets(block_orders);
    let degree: usize = block_orders.iter().sum::<u64>() as usize;
    let mut gens = Vec::new();
    for (b, &q) in block_orders.iter().enumerate() {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in 0..q as usize {
            images[starts[b] + i] = starts[b] + (i + 1) % q as usize;
        }
        gens.push(Permutation::from_images(&images)?);
    }
    for a in actors {
        gens.push(multiplier_permutation(block_orders, &starts, degree, &a.multipliers)?);
    }

    let translations: Order = block_orders.iter().product();
    let multiplier_group = multiplier_group_order(block_orders, actors);
    let expected = translations * multiplier_group;
    if expected > cap as u64 {
        return Err(GroupError::CapExceeded(cap));
    }
    let g = FiniteGroup::generate(name, degree, gens, cap)?;
    if g.order() != expected {
        return Err(GroupError::IdentityViolation(format!(
            "block product has order {}, expected {expected}",
            g.order()
        )));
    }
    Ok(g)
}

fn multiplier_permutation(
    block_orders: &[u64],
    starts: &[usize],
    degree: usize,
    multipliers: &[u64],
) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..degree).collect();
    for (b, (&q, &m)) in block_orders.iter().zip(multipliers).enumerate() {
        for i in 0..q {
            images[starts[b] + i as usize] = starts[b] + ((m * i) % q) as usize;
        }
    }
    Permutation::from_images(&images)
}

fn multiplier_group_order(block_orders: &[u64], actors: &[BlockAction]) -> Order {
    let one: Vec<u64> = vec![1; block_orders.len()];
    let mut seen = std::collections::BTreeSet::from([one.clone()]);
    let mut queue = vec![one];
    while let Some(v) = queue.pop() {
        for a in actors {
            let w: Vec<u64> = v
                .iter()
                .zip(&a.multipliers)
                .zip(block_orders)
                .map(|((&x, &m), &q)| x * m % q)
                .collect();
            if seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    seen.len() as Order
}

/// `L^k` extended by a cyclic group permuting the factor blocks.
#[derive(Clone, Debug)]
pub struct DirectPower {
    pub group: FiniteGroup,
    /// `M = L_1 × … × L_k`.
    pub base: FiniteGroup,
    pub factor: FiniteGroup,
    pub copies: usize,
    pub block_degree: usize,
}

impl DirectPower {
    /// The permutation induced by `x` on the factor labels, or an error if
    /// `x` does not map factor blocks onto factor blocks.
    pub fn factor_permutation(&self, x: &Permutation) -> Result<Vec<usize>> {
        let d = self.block_degree;
        let mut out = Vec::with_capacity(self.copies);
        for b in 0..self.copies {
            let target = x.apply(b * d) / d;
            if (0..d).any(|i| x.apply(b * d + i) / d != target) {
                return Err(GroupError::InvalidAction(format!("{x} does not permute the factors")));
            }
            out.push(target);
        }
        Ok(out)
    }

    /// Number of orbits of `⟨x⟩` on the factors.
    pub fn factor_orbits(&self, x: &Permutation) -> Result<usize> {
        let sigma = self.factor_permutation(x)?;
        let mut seen = vec![false; sigma.len()];
        let mut orbits = 0;
        for start in 0..sigma.len() {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = sigma[j];
            }
        }
        Ok(orbits)
    }
}

/// `L^k ⋊ ⟨σ⟩` on `k·deg(L)` points, with `σ` cycling the first
/// `cycle_length` factor blocks.
pub fn direct_power_with_swap(l: &FiniteGroup, copies: usize, cycle_length: usize, cap: usize) -> Result<DirectPower> {
    if copies == 0 || cycle_length == 0 || cycle_length > copies {
        return Err(GroupError::InvalidParams(format!(
            "need 1 ≤ cycle length ({cycle_length}) ≤ copies ({copies})"
        )));
    }
    let d = l.degree();
    let degree = d * copies;
    let expected = power(&(l.order() as u128), copies as u64) * cycle_length as u128;
    if expected > cap as u128 {
        return Err(GroupError::CapExceeded(cap));
    }
    let mut base_gens = Vec::new();
    for b in 0..copies {
        for g in l.generators() {
            let mut images: Vec<usize> = (0..degree).collect();
            for i in 0..d {
                images[b * d + i] = b * d + g.apply(i);
            }
            base_gens.push(Permutation::from_images(&images)?);
        }
    }
    let mut gens = base_gens.clone();
    if cycle_length > 1 {
        let mut images: Vec<usize> = (0..degree).collect();
        for b in 0..cycle_length {
            let next = (b + 1) % cycle_length;
            for i in 0..d {
                images[b * d + i] = next * d + i;
            }
        }
        gens.push(Permutation::from_images(&images)?);
    }
    let name = if cycle_length == 1 {
        format!("{}^{}", l.name(), copies)
    } else {
        format!("{}^{}:C{}", l.name(), copies, cycle_length)
    };
    let group = FiniteGroup::generate(name, degree, gens, cap)?;
    if group.order() as u128 != expected {
        return Err(GroupError::IdentityViolation(format!(
            "direct power has order {}, expected {expected}",
            group.order()
        )));
    }
    let base = group.subgroup(format!("{}^{}", l.name(), copies), base_gens)?;
    Ok(DirectPower {
        group,
        base,
        factor: l.clone(),
        copies,
        block_degree: d,
    })
}

/// Parameters of the extremal family: `P ≅ (Z/p)^n`, and one cyclic factor
/// of prime order `q ≡ 1 (mod p)` per maximal subgroup of `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GnParams {
    pub p: u64,
    pub n: u32,
    pub q: u64,
}

impl GnParams {
    pub fn new(p: u64, n: u32, q: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if !is_prime(q) {
            return Err(GroupError::NotPrime(q));
        }
        if n == 0 {
            return Err(GroupError::InvalidParams("n must be positive".into()));
        }
        if (q - 1) % p != 0 {
            return Err(GroupError::InvalidParams(format!("{p} does not divide {q} - 1")));
        }
        Ok(Self { p, n, q })
    }

    /// `|𝓜| = (p^n − 1)/(p − 1)`.
    pub fn maximal_subgroups(&self) -> u64 {
        (self.p.pow(self.n) - 1) / (self.p - 1)
    }

    /// `|G_n| = q^{|𝓜|} · p^n`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let kernel = (self.q as u128).checked_pow(self.maximal_subgroups() as u32)?;
        kernel.checked_mul(self.p.pow(self.n) as u128)
    }

    pub fn name(&self) -> String {
        format!("Gn({},{},{})", self.p, self.n, self.q)
    }

    /// The least unit of multiplicative order `p` modulo `q`.
    pub fn unit_of_order_p(&self) -> u64 {
        (2..self.q)
            .find(|&s| pow_mod(s, self.p, self.q) == 1)
            .expect("p divides q - 1")
    }

    /// Nonzero functionals `(Z/p)^n → Z/p` up to scalars, normalized with
    /// leading nonzero coordinate 1, in lexicographic order. Their kernels
    /// are the maximal subgroups of `P`.
    pub fn functionals(&self) -> Vec<Vec<u64>> {
        let n = self.n as usize;
        let mut out = Vec::new();
        let total = self.p.pow(self.n);
        for code in 0..total {
            let mut v = vec![0u64; n];
            let mut c = code;
            for k in (0..n).rev() {
                v[k] = c % self.p;
                c /= self.p;
            }
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                out.push(v);
            }
        }
        out
    }
}

/// A built `G_n` with its normal p-complement `N` and Sylow p-subgroup `P`.
#[derive(Clone, Debug)]
pub struct Gn {
    pub params: GnParams,
    pub group: FiniteGroup,
    pub kernel: FiniteGroup,
    pub complement: FiniteGroup,
}

/// `G_n` on `q·|𝓜|` points: on block `M` (kernel of functional `f`), the
/// factor `⟨a_M⟩` translates mod `q` and the basis vector `e_j` of `P`
/// multiplies by `s^{f(e_j)}`.
pub fn build_gn(params: GnParams, cap: usize) -> Result<Gn> {
    let order = params.order().ok_or(GroupError::CapExceeded(cap))?;
    if order > cap as u128 {
        return Err(GroupError::CapExceeded(cap));
    }
    let functionals = params.functionals();
    let s = params.unit_of_order_p();
    let block_orders = vec![params.q; functionals.len()];
    let actors: Vec<BlockAction> = (0..params.n as usize)
        .map(|j| BlockAction {
            order: params.p,
            multipliers: functionals.iter().map(|f| pow_mod(s, f[j], params.q)).collect(),
        })
        .collect();
    let group = semidirect_by_blocks(params.name(), &block_orders, &actors, cap)?;
    let blocks = functionals.len();
    let kernel_gens = group.generators()[..blocks].to_vec();
    let complement_gens = group.generators()[blocks..].to_vec();
    let kernel = group.subgroup("N", kernel_gens)?;
    let complement = group.subgroup("P", complement_gens)?;
    Ok(Gn {
        params,
        group,
        kernel,
        complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn block_products() {
        let frob = semidirect_by_blocks(
            "C7:C3",
            &[7],
            &[BlockAction {
                order: 3,
                multipliers: vec![2],
            }],
            1000,
        )
        .unwrap();
        assert_eq!(frob.order(), 21);
        let direct = semidirect_by_blocks(
            "C3xC5",
            &[3, 5],
            &[BlockAction {
                order: 1,
                multipliers: vec![1, 1],
            }],
            1000,
        )
        .unwrap();
        assert_eq!(direct.order(), 15);
        let s3 = semidirect_by_blocks(
            "S3",
            &[3],
            &[BlockAction {
                order: 2,
                multipliers: vec![2],
            }],
            1000,
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
    }

    #[test]
    fn block_product_errors() {
        let non_unit = BlockAction {
            order: 2,
            multipliers: vec![3],
        };
        assert!(matches!(
            semidirect_by_blocks("x", &[9], &[non_unit], 1000),
            Err(GroupError::InvalidAction(_))
        ));
        let wrong_order = BlockAction {
            order: 2,
            multipliers: vec![2],
        };
        assert!(matches!(
            semidirect_by_blocks("x", &[7], &[wrong_order], 1000),
            Err(GroupError::InvalidAction(_))
        ));
    }

    #[test]
    fn direct_powers() {
        let s3 = catalog::get("S3").unwrap();
        assert_eq!(
            direct_power_with_swap(&s3, 2, 2, DEFAULT_CAP).unwrap().group.order(),
            72
        );
        assert_eq!(
            direct_power_with_swap(&s3, 2, 1, DEFAULT_CAP).unwrap().group.order(),
            36
        );
        let c3 = catalog::get("C3").unwrap();
        let dp = direct_power_with_swap(&c3, 2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(dp.group.order(), 18);
        assert_eq!(dp.base.order(), 9);
        let swap = dp.group.generators().last().unwrap();
        assert_eq!(dp.factor_permutation(swap).unwrap(), vec![1, 0]);
        assert_eq!(dp.factor_orbits(swap).unwrap(), 1);
        assert!(matches!(
            direct_power_with_swap(&s3, 2, 2, 50),
            Err(GroupError::CapExceeded(50))
        ));
    }

    #[test]
    fn gn_params() {
        assert!(GnParams::new(2, 1, 3).is_ok());
        assert!(matches!(GnParams::new(3, 1, 5), Err(GroupError::InvalidParams(_))));
        assert!(matches!(GnParams::new(4, 1, 5), Err(GroupError::NotPrime(4))));
        let p = GnParams::new(2, 2, 3).unwrap();
        assert_eq!(p.maximal_subgroups(), 3);
        assert_eq!(p.functionals(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(p.unit_of_order_p(), 2);
        assert_eq!(GnParams::new(3, 1, 7).unwrap().unit_of_order_p(), 2);
        assert_eq!(GnParams::new(3, 2, 7).unwrap().maximal_subgroups(), 4);
    }

    #[test]
    fn gn_builds() {
        for (p, n, q, order, degree) in [(2, 1, 3, 6, 3), (2, 2, 3, 108, 9), (3, 1, 7, 21, 7), (2, 1, 5, 10, 5)] {
            let gn = build_gn(GnParams::new(p, n, q).unwrap(), DEFAULT_CAP).unwrap();
            assert_eq!(gn.group.order(), order);
            assert_eq!(gn.group.degree(), degree);
            assert_eq!(gn.complement.order(), p.pow(n));
            assert_eq!(gn.kernel.order() * gn.complement.order(), order);
        }
        assert!(matches!(
            build_gn(GnParams::new(2, 2, 3).unwrap(), 100),
            Err(GroupError::CapExceeded(100))
        ));
    }
}
