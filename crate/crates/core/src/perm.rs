//! Permutations stored as image arrays.
//!
//! Products are read left to right: `a.mul(&b)` first applies `a`, then `b`,
//! so `i^(ab) = (i^a)^b`. Conjugation follows the same right-action
//! convention, `x^g = g⁻¹ x g`.

use std::fmt;

use crate::error::{GroupError, Result};

/// A bijection on `{0, .., degree - 1}`.
///
/// The derived ordering is lexicographic on the image sequence, which is the
/// canonical element order used everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree > u16::MAX as usize {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        let mut seen = vec![false; degree];
        for &i in images {
            if i >= degree || seen[i] {
                return Err(GroupError::NotABijection(degree));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.iter().map(|&i| i as u16).collect(),
        })
    }

    /// Parses disjoint-cycle notation over the 1-based points `1..=degree`.
    ///
    /// Points inside a cycle may be separated by spaces or commas. `()` and
    /// the empty string denote the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree > u16::MAX as usize {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = vec![false; degree];
        let malformed = || GroupError::Malformed(text.to_string());
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(malformed)?;
            let close = body.find(')').ok_or_else(malformed)?;
            let (inner, tail) = body.split_at(close);
            rest = tail[1..].trim_start();
            if inner.contains('(') {
                return Err(malformed());
            }
            let mut cycle = Vec::new();
            for token in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                if token.is_empty() {
                    continue;
                }
                let point: usize = token.parse().map_err(|_| malformed())?;
                if point == 0 || point > degree {
                    return Err(GroupError::PointOutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(GroupError::RepeatedPoint(point));
                }
                used[point - 1] = true;
                cycle.push(point - 1);
            }
            for (k, &a) in cycle.iter().enumerate() {
                images[a] = cycle[(k + 1) % cycle.len()] as u16;
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `self` followed by `rhs`.
    #[inline]
    pub fn mul(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Self {
            images: self.images.iter().map(|&i| rhs.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ x g) maps i^g to (i^x)^g.
        let mut out = vec![0u16; self.degree()];
        for (i, &xi) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[xi as usize];
        }
        Self {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, exp: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// 1-based disjoint-cycle notation; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            s.push_str(&pts.join(" "));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self.to_cycle_string())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images(p: &Permutation) -> Vec<usize> {
        p.images().iter().map(|&i| i as usize).collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(images(&Permutation::parse("(1 2 3)", 4).unwrap()), [1, 2, 0, 3]);
        assert_eq!(images(&Permutation::parse("()", 3).unwrap()), [0, 1, 2]);
        assert_eq!(images(&Permutation::parse("(1 2)(3 4)", 4).unwrap()), [1, 0, 3, 2]);
        assert_eq!(images(&Permutation::parse("(1,3)", 3).unwrap()), [2, 1, 0]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Permutation::parse("(1 2", 3), Err(GroupError::Malformed(_))));
        assert!(matches!(Permutation::parse("(1 x)", 3), Err(GroupError::Malformed(_))));
        assert!(matches!(
            Permutation::parse("(1 2)(2 3)", 3),
            Err(GroupError::RepeatedPoint(2))
        ));
        assert!(matches!(
            Permutation::parse("(1 5)", 4),
            Err(GroupError::PointOutOfRange { point: 5, degree: 4 })
        ));
        assert!(matches!(
            Permutation::parse("(0 1)", 4),
            Err(GroupError::PointOutOfRange { point: 0, .. })
        ));
    }

    #[test]
    fn element_orders() {
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(Permutation::parse("(1 2)(3 4 5)", 5).unwrap().order(), 6);
        assert_eq!(Permutation::parse("(1 2 3 4 5 6 7)", 7).unwrap().order(), 7);
    }

    #[test]
    fn product_is_left_to_right() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3, 3 -a-> 3 -b-> 2, 2 -a-> 1 -b-> 1
        assert_eq!(a.mul(&b), Permutation::parse("(1 3 2)", 3).unwrap());
    }

    #[test]
    fn conjugation_matches_product() {
        let x = Permutation::parse("(1 2 3)(4 5)", 5).unwrap();
        let g = Permutation::parse("(1 4)(2 5 3)", 5).unwrap();
        assert_eq!(x.conjugate_by(&g), g.inverse().mul(&x).mul(&g));
    }

    #[test]
    fn cycle_string_round_trip() {
        let x = Permutation::parse("(2 5 3)(4 6)", 7).unwrap();
        assert_eq!(x.to_cycle_string(), "(2 5 3)(4 6)");
        assert_eq!(Permutation::parse(&x.to_cycle_string(), 7).unwrap(), x);
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&[0, 3, 1]).is_err());
        assert!(Permutation::from_images(&[2, 0, 1]).is_ok());
    }
}
